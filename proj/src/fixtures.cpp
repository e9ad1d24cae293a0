#include "hpl/fixtures.hpp"

#include "hpl/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

namespace hpl {

std::vector<double> chi(int n, const std::vector<int>& members, double w)
{
    std::vector<double> v(n, 0.0);
    for (int e : members)
        v.at(e) += w;
    return v;
}

double max_imag(const std::vector<cplx>& roots)
{
    double m = 0.0;
    for (const auto& z : roots)
        m = std::max(m, std::abs(z.imag()));
    return m;
}

json ray_detail(const std::vector<cplx>& coeffs, const RootSet& roots)
{
    json c = json::array(), r = json::array();
    for (const auto& z : coeffs)
        c.push_back(z.real());
    auto sorted = roots.roots;
    std::sort(sorted.begin(), sorted.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (const auto& z : sorted)
        r.push_back(json::array({z.real(), z.imag()}));
    return json{{"coeffs", c}, {"roots", r}, {"converged", roots.converged}};
}

std::pair<std::vector<double>, std::vector<double>> f7_family_ray(double eps, double a)
{
    auto x = chi(7, {0, 1, 4});
    auto y = chi(7, {2, 5, 6});
    x[3] += eps;
    y[3] += a * eps;
    return {x, y};
}

MaPoly mu_family(int n, double mu)
{
    MaPoly p(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            p.add(bit(i) | bit(j), (i == 0 && j == 1) ? mu : 1.0);
    return p;
}

namespace {

std::vector<cplx> trimmed(std::vector<cplx> c)
{
    while (!c.empty() && c.back() == cplx(0.0))
        c.pop_back();
    return c;
}

bool coeffs_match(const std::vector<cplx>& got, const std::vector<double>& want)
{
    auto g = trimmed(got);
    std::vector<double> w = want;
    while (!w.empty() && w.back() == 0.0)
        w.pop_back();
    if (g.size() != w.size())
        return false;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (std::abs(g[k] - w[k]) > 1e-9 * (1.0 + std::abs(w[k])))
            return false;
    return true;
}

// Greedy nearest matching of expected roots against computed ones.
bool roots_match(const std::vector<cplx>& got, const std::vector<cplx>& want, double tol, double* worst = nullptr)
{
    if (got.size() != want.size())
        return false;
    std::vector<bool> used(got.size(), false);
    double w = 0.0;
    for (const auto& z : want) {
        int best = -1;
        for (std::size_t k = 0; k < got.size(); ++k)
            if (!used[k] && (best < 0 || std::abs(got[k] - z) < std::abs(got[best] - z)))
                best = int(k);
        used[best] = true;
        w = std::max(w, std::abs(got[best] - z));
    }
    if (worst)
        *worst = w;
    return w <= tol;
}

struct RayCheck {
    std::optional<std::vector<double>> coeffs;
    std::optional<std::vector<cplx>> roots;
    double root_tol = 1e-8;
    // Expected leading imaginary part (positive) with relative tolerance.
    std::optional<double> imag;
    double imag_rel = 0.2;
    // true: some root nonreal; false: all roots real.
    std::optional<bool> nonreal;
    // Number of roots expected within root_tol of a point.
    std::optional<std::pair<cplx, int>> cluster;
};

CaseResult ray_case(const std::string& fixture, const std::string& label, const MaPoly& p,
                    const std::vector<double>& a, const std::vector<double>& b, const RayCheck& chk,
                    const ToleranceConfig& cfg)
{
    CaseResult res{fixture, label, true, {}};
    auto coeffs = ray_polynomial(p, a, b);
    RootSet rs = univariate_roots(coeffs, cfg);
    res.detail = ray_detail(coeffs, rs);
    std::vector<std::string> failures;
    if (chk.coeffs && !coeffs_match(coeffs, *chk.coeffs))
        failures.push_back("coefficients");
    if (chk.roots) {
        double worst = 0.0;
        if (!roots_match(rs.roots, *chk.roots, chk.root_tol, &worst))
            failures.push_back("roots");
        res.detail["root_error"] = worst;
    }
    const double im = max_imag(rs.roots);
    bool is_nonreal = false;
    for (const auto& z : rs.roots)
        if (std::abs(z.imag()) > cfg.root_im_tol * (1.0 + std::abs(z)))
            is_nonreal = true;
    res.detail["nonreal"] = is_nonreal;
    res.detail["max_imag"] = im;
    if (chk.nonreal && *chk.nonreal != is_nonreal)
        failures.push_back(*chk.nonreal ? "expected nonreal roots" : "expected real roots");
    if (chk.imag) {
        res.detail["expected_imag"] = *chk.imag;
        if (std::abs(im - *chk.imag) > chk.imag_rel * *chk.imag)
            failures.push_back("imaginary part");
    }
    if (chk.cluster) {
        int count = 0;
        for (const auto& z : rs.roots)
            if (std::abs(z - chk.cluster->first) <= chk.root_tol)
                ++count;
        if (count < chk.cluster->second)
            failures.push_back("root cluster");
    }
    if (!rs.converged)
        failures.push_back("root iteration did not converge");
    res.pass = failures.empty();
    if (!res.pass)
        res.detail["failed"] = failures;
    return res;
}

MaPoly basis(const std::string& name) { return basis_polynomial(catalog(name)); }

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> eps_grid(const FixtureParams& p, std::vector<double> dflt)
{
    return p.eps ? std::vector<double>{*p.eps} : dflt;
}

// ---------------------------------------------------------------- fixtures

std::vector<CaseResult> ex11_1(const FixtureParams& p)
{
    const double s = std::sqrt(3.0) / 2;
    RayCheck chk;
    chk.coeffs = {0, 12, 12, 4};
    chk.roots = {{0, 0}, {-1.5, s}, {-1.5, -s}};
    chk.nonreal = true;
    return {ray_case("ex11.1", "F7", basis("F7"), chi(7, {0, 1, 3, 4}), chi(7, {2, 5, 6}), chk, p.cfg)};
}

std::vector<CaseResult> ex11_2(const FixtureParams& p)
{
    const double s = std::sqrt(23.0) / 8;
    RayCheck chk;
    chk.coeffs = {0, 12, 13, 4};
    chk.roots = {{0, 0}, {-13.0 / 8, s}, {-13.0 / 8, -s}};
    chk.nonreal = true;
    std::vector<CaseResult> out;
    out.push_back(ray_case("ex11.2", "F7m", basis("F7m"), chi(7, {0, 1, 3, 4}), chi(7, {2, 5, 6}), chk, p.cfg));
    // Same polynomial via relaxation of the line {1,3,5}.
    CaseResult rel{"ex11.2", "relax F7 {1,3,5}", relax(catalog("F7"), mask_of({1, 3, 5})) == catalog("F7m"), {}};
    out.push_back(rel);
    return out;
}

std::vector<CaseResult> ex11_3(const FixtureParams& p)
{
    RayCheck chk;
    chk.coeffs = {4, 13, 12, 1};
    chk.roots = {{-10.834170, 0}, {-0.582915, 0.171501}, {-0.582915, -0.171501}};
    chk.root_tol = 1e-5;
    chk.nonreal = true;
    std::vector<CaseResult> out;
    out.push_back(ray_case("ex11.3", "F7mm", basis("F7mm"), chi(7, {0, 3, 6}), chi(7, {1, 2, 4, 5}), chk, p.cfg));
    CaseResult rel{"ex11.3", "relax F7m {0,3,6}", relax(catalog("F7m"), mask_of({0, 3, 6})) == catalog("F7mm"), {}};
    out.push_back(rel);
    return out;
}

std::vector<CaseResult> ex11_4(const FixtureParams& p)
{
    std::vector<CaseResult> out;
    const MaPoly k4 = basis_polynomial(graphic_matroid(Graph::complete(4)));
    {
        // edges 01 02 03 12 13 23
        RayCheck chk;
        chk.coeffs = {0, 9, 6, 1};
        chk.cluster = {{-3.0, 0.0}, 2};
        chk.root_tol = 1e-6;
        out.push_back(ray_case("ex11.4", "M(K4) star vs triangle", k4, chi(6, {0, 1, 2}), chi(6, {3, 4, 5}), chk, p.cfg));
        RayCheck alt;
        alt.coeffs = {4, 8, 4};
        alt.cluster = {{-1.0, 0.0}, 2};
        alt.root_tol = 1e-6;
        out.push_back(ray_case("ex11.4", "M(K4) matching vs 4-cycle", k4, chi(6, {0, 5}), chi(6, {1, 2, 3, 4}), alt, p.cfg));
    }
    struct Member {
        const char* name;
        double shift;
        double factor;
    };
    const Member members[] = {{"F7", 6, 2.0}, {"F7m", 7, std::sqrt(3.0)}, {"F7mm", 8, std::sqrt(2.0)}, {"MK4pe", 9, 1.0}};
    std::vector<double> as = p.a ? std::vector<double>{*p.a} : std::vector<double>{0, 1, 2};
    for (double eps : eps_grid(p, {1e-3}))
        for (const auto& m : members)
            for (double a : as) {
                auto [x, y] = f7_family_ray(eps, a);
                RayCheck chk;
                const double k = m.shift;
                chk.coeffs = {3 * a * eps, 9 + (3 + k * a) * eps, 6 + (k + 3 * a) * eps, 1 + 3 * eps};
                if (eps == 0.0) {
                    chk.cluster = {{-3.0, 0.0}, 2};
                    chk.root_tol = 1e-6;
                } else if (a < 3) {
                    chk.nonreal = true;
                    chk.imag = m.factor * std::sqrt(3 - a) * std::sqrt(eps);
                }
                out.push_back(ray_case("ex11.4", std::string(m.name) + " eps=" + fmt(eps) + " a=" + fmt(a),
                                       basis(m.name), x, y, chk, p.cfg));
            }
    return out;
}

MaPoly f7_plus(double mu, double nu, double rho)
{
    MaPoly q = basis("F7");
    q.add(mask_of({1, 3, 5}), mu);
    q.add(mask_of({0, 3, 6}), nu);
    q.add(mask_of({2, 3, 4}), rho);
    return q;
}

ComplexMatrix f7_matrix(cplx a, cplx b)
{
    return ComplexMatrix{{1, 1, 0, a, 0, 1, 1}, {0, 1, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 1, b, b}};
}

bool close_polys(const MaPoly& p, const MaPoly& q, double tol)
{
    if (p.n() != q.n())
        return false;
    MaPoly d = p - q;
    for (const auto& [s, c] : d.terms())
        if (std::abs(c) > tol)
            return false;
    return true;
}

std::vector<CaseResult> perturbed_sum(const std::string& fixture, const std::string& label, const MaPoly& poly,
                                      double sum, double eps, double a, const ToleranceConfig& cfg)
{
    auto [x, y] = f7_family_ray(eps, a);
    RayCheck chk;
    chk.coeffs = {3 * a * eps, 9 + (3 + 6 * a + sum * a) * eps, 6 + (6 + sum + 3 * a) * eps, 1 + 3 * eps};
    const double disc = (4 - sum) * (3 - a);
    if (eps > 0) {
        chk.nonreal = disc > 0;
        if (disc > 0)
            chk.imag = std::sqrt(disc) * std::sqrt(eps);
    }
    return {ray_case(fixture, label + " eps=" + fmt(eps) + " a=" + fmt(a), poly, x, y, chk, cfg)};
}

std::vector<CaseResult> ex11_5(const FixtureParams& p)
{
    std::vector<CaseResult> out;
    {
        ComplexMatrix a{{1, 1, 0, 0, 0, 1, 1}, {0, 1, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1, 1}};
        const MaPoly q = det_construction(a);
        CaseResult r{"ex11.5", "det construction equals F7 + 4 x1x3x5", q == f7_plus(4, 0, 0), {}};
        r.detail = poly_to_json(q);
        out.push_back(r);
    }
    for (double eps : eps_grid(p, {1e-3})) {
        const double a = p.a.value_or(0.0);
        for (double mu : {0.0, 1.0, 2.0, 3.0, 4.0}) {
            auto part = perturbed_sum("ex11.5", "mu=" + fmt(mu), f7_plus(mu, 0, 0), mu, eps, a, p.cfg);
            out.insert(out.end(), part.begin(), part.end());
        }
        auto part = perturbed_sum("ex11.5", "mu=5", f7_plus(5, 0, 0), 5, eps, p.a.value_or(4.0), p.cfg);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<CaseResult> ex11_6(const FixtureParams& p)
{
    using std::numbers::pi;
    std::vector<CaseResult> out;
    for (double theta : {pi / 3, pi / 2, 2 * pi / 3}) {
        const MaPoly q = det_construction(f7_matrix(0.0, std::polar(1.0, theta)));
        const MaPoly want = f7_plus(2 + 2 * std::cos(theta), 2 - 2 * std::cos(theta), 0);
        out.push_back({"ex11.6", "a=0 b=exp(i*" + fmt(theta) + ")", close_polys(q, want, 1e-12), poly_to_json(q)});
    }
    const cplx w = std::polar(1.0, pi / 3);
    out.push_back({"ex11.6", "a=exp(i*pi/3) b=1", close_polys(det_construction(f7_matrix(w, 1.0)), f7_plus(3, 0, 1), 1e-12),
                   {}});
    out.push_back({"ex11.6", "a=exp(i*pi/3) b=exp(-2i*pi/3)",
                   close_polys(det_construction(f7_matrix(w, std::polar(1.0, -2 * pi / 3))), f7_plus(0, 3, 1), 1e-12),
                   {}});
    // Principal extension of F7\3 (index 3 removed) by a fresh element moved back to index 3.
    const MaPoly base = delete_element(basis("F7"), 3);
    for (auto [mu, nu, rho] : {std::tuple{2.0, 1.0, 1.0}, {2.0, 2.0, 0.0}, {4.0 / 3, 4.0 / 3, 4.0 / 3}}) {
        Weighting lam{1 - nu / 2, 1 - mu / 2, 1 - rho / 2, 1 - rho / 2, 1 - mu / 2, 1 - nu / 2};
        const MaPoly ext = principal_extension(base, lam);
        MaPoly moved(7);
        for (const auto& [s, c] : ext.terms())
            moved.add(insert_index(s & full_mask(6), 3) | (has(s, 6) ? bit(3) : 0), c);
        out.push_back({"ex11.6",
                       "extension weights mu,nu,rho=" + fmt(mu) + "," + fmt(nu) + "," + fmt(rho),
                       close_polys(moved, f7_plus(mu, nu, rho), 1e-12),
                       {}});
    }
    for (double eps : eps_grid(p, {1e-3})) {
        const double a = p.a.value_or(0.0);
        for (auto [mu, nu, rho] : {std::tuple{1.0, 1.0, 1.0}, {2.0, 1.0, 1.0}, {3.0, 0.0, 1.0}, {1.0, 1.0, 0.0}}) {
            auto part = perturbed_sum("ex11.6", "mu,nu,rho=" + fmt(mu) + "," + fmt(nu) + "," + fmt(rho),
                                      f7_plus(mu, nu, rho), mu + nu + rho, eps, a, p.cfg);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    return out;
}

double cubic_disc(double a, double b, double c, double d)
{
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

std::vector<CaseResult> ex11_7(const FixtureParams& p)
{
    constexpr double lo = 0.090685, hi = 0.494485;
    std::vector<CaseResult> out;
    const MaPoly f = basis("F7m3");
    auto disc = [](double e) { return cubic_disc(1 + 3 * e, 6 + 8 * e, 9 + 3 * e, 1); };
    auto bisect = [&](double l, double r) {
        for (int i = 0; i < 200; ++i) {
            double m = (l + r) / 2;
            ((disc(l) < 0) == (disc(m) < 0) ? l : r) = m;
        }
        return (l + r) / 2;
    };
    const double b_lo = bisect(0.01, 0.3), b_hi = bisect(0.3, 1.0);
    out.push_back({"ex11.7", "nonreal window endpoints",
                   std::abs(b_lo - lo) < 1e-5 && std::abs(b_hi - hi) < 1e-5,
                   json{{"lower", b_lo}, {"upper", b_hi}}});
    for (double eps : eps_grid(p, {0.05, 0.1, 0.3, 0.45, 0.6})) {
        auto x = chi(7, {0, 3, 4});
        x[1] += eps;
        RayCheck chk;
        chk.coeffs = {1, 9 + 3 * eps, 6 + 8 * eps, 1 + 3 * eps};
        if (std::abs(eps - lo) > 1e-4 && std::abs(eps - hi) > 1e-4)
            chk.nonreal = eps > lo && eps < hi;
        out.push_back(ray_case("ex11.7", "F7m3 eps=" + fmt(eps), f, x, chi(7, {2, 5, 6}), chk, p.cfg));
    }
    return out;
}

std::vector<CaseResult> ex11_8(const FixtureParams& p)
{
    const auto a = chi(8, {0, 3, 4, 7}), b = chi(8, {1, 2, 5, 6});
    const double s = std::sqrt(15.0) / 8;
    std::vector<CaseResult> out;
    RayCheck p8;
    p8.coeffs = {0, 16, 28, 16};
    p8.roots = {{0, 0}, {-7.0 / 8, s}, {-7.0 / 8, -s}};
    p8.root_tol = 1e-5;
    p8.nonreal = true;
    out.push_back(ray_case("ex11.8", "P8", basis("P8"), a, b, p8, p.cfg));
    RayCheck p8p;
    p8p.coeffs = {0, 16, 28, 16, 1};
    p8p.roots = {{0, 0}, {-14.093869, 0}, {-0.953065, 0.476353}, {-0.953065, -0.476353}};
    p8p.root_tol = 1e-5;
    p8p.nonreal = true;
    out.push_back(ray_case("ex11.8", "P8p", basis("P8p"), a, b, p8p, p.cfg));
    RayCheck p8pp;
    p8pp.coeffs = {1, 16, 28, 16, 1};
    p8pp.roots = {{-14.093459, 0}, {-0.070955, 0}, {-0.917793, 0.397059}, {-0.917793, -0.397059}};
    p8pp.root_tol = 1e-5;
    p8pp.nonreal = true;
    out.push_back(ray_case("ex11.8", "P8pp", basis("P8pp"), a, b, p8pp, p.cfg));
    return out;
}

std::pair<std::vector<double>, std::vector<double>> pappus_ray()
{
    auto x = chi(9, {2, 3, 5, 6});
    x[0] = 2;
    return {x, chi(9, {1, 4, 7})};
}

std::vector<CaseResult> ex11_9(const FixtureParams& p)
{
    std::vector<CaseResult> out;
    for (double eps : eps_grid(p, {1e-2})) {
        auto [x, y] = pappus_ray();
        x[8] += eps;
        RayCheck pap;
        pap.coeffs = {1, 18 + 3 * eps, 33 + 15 * eps, 16 + 14 * eps};
        RayCheck non;
        non.coeffs = {1, 18 + 3 * eps, 33 + 16 * eps, 16 + 14 * eps};
        if (eps > 0) {
            pap.nonreal = non.nonreal = true;
            pap.imag = std::sqrt(2.0 / 15) * std::sqrt(eps);
            non.imag = std::sqrt(eps / 15);
        }
        out.push_back(ray_case("ex11.9", "Pappus eps=" + fmt(eps), basis("Pappus"), x, y, pap, p.cfg));
        out.push_back(ray_case("ex11.9", "NonPappus eps=" + fmt(eps), basis("NonPappus"), x, y, non, p.cfg));
    }
    return out;
}

std::vector<CaseResult> ex11_10(const FixtureParams& p)
{
    std::vector<CaseResult> out;
    const MaPoly f = basis("NonPappus_del9_pe");
    for (double eps : eps_grid(p, {1e-2})) {
        auto [x, y] = pappus_ray();
        y[8] += eps;
        RayCheck chk;
        chk.coeffs = {1 + 3 * eps, 18 + 18 * eps, 33 + 14 * eps, 16};
        if (eps > 0) {
            chk.nonreal = true;
            chk.imag = std::sqrt(eps / 15);
        } else {
            chk.cluster = {{-1.0, 0.0}, 2};
            chk.root_tol = 1e-6;
        }
        out.push_back(ray_case("ex11.10", "NonPappus_del9_pe eps=" + fmt(eps), f, x, y, chk, p.cfg));
    }
    // Bases are those of the non-Pappus matroid plus {1,5,8} and {2,4,8}.
    const Matroid m = catalog("NonPappus_del9_pe");
    std::vector<Mask> want = catalog("NonPappus").bases();
    want.push_back(mask_of({1, 5, 8}));
    want.push_back(mask_of({2, 4, 8}));
    std::sort(want.begin(), want.end());
    out.push_back({"ex11.10", "basis set", m.bases() == want, {}});
    return out;
}

std::vector<CaseResult> ex13_1(const FixtureParams& p)
{
    std::vector<CaseResult> out;
    for (auto [n, thr] : {std::pair{4, 4.0}, {5, 3.0}, {6, 8.0 / 3}}) {
        const Rank2Result below = rank2_exact(mu_family(n, thr - 1e-6), p.cfg);
        const Rank2Result above = rank2_exact(mu_family(n, thr + 1e-6), p.cfg);
        const Rank2Result at = rank2_exact(mu_family(n, thr), p.cfg);
        out.push_back({"ex13.1", "n=" + std::to_string(n) + " threshold " + fmt(thr),
                       below.hpp && !above.hpp && at.hpp && below.lambda2 < 0 && above.lambda2 > 0,
                       json{{"lambda2_below", below.lambda2}, {"lambda2_at", at.lambda2}, {"lambda2_above", above.lambda2}}});
        // Closed-form spectrum: -1 (n-3 times), -mu, and a quadratic pair.
        bool spectrum = true;
        for (double mu : {0.5, thr, 5.0}) {
            std::vector<double> want(n - 3, -1.0);
            want.push_back(-mu);
            const double d = std::sqrt(mu * mu - 2 * (n - 3) * mu + (n * n + 2 * n - 7));
            want.push_back((mu + n - 3 + d) / 2);
            want.push_back((mu + n - 3 - d) / 2);
            std::sort(want.begin(), want.end(), std::greater<>());
            auto got = rank2_exact(mu_family(n, mu), p.cfg).eigenvalues;
            for (int i = 0; i < n; ++i)
                spectrum = spectrum && std::abs(got[i] - want[i]) < 1e-9;
        }
        out.push_back({"ex13.1", "n=" + std::to_string(n) + " spectrum", spectrum, {}});
    }
    return out;
}

std::vector<CaseResult> table1(const FixtureParams& p)
{
    std::vector<CaseResult> out;
    RunOptions opt;
    opt.seed = p.seed;
    opt.stop_at_first = false;
    opt.trials = p.trials ? p.trials : 100000;
    {
        auto rep = hpp_random_rays(basis("F7"), opt, p.cfg);
        const double rate = double(rep.counterexamples) / double(rep.trials);
        out.push_back({"table1", "F7 rays", rate >= 0.02 && rate <= 0.30, report_to_json(rep)});
    }
    for (const char* name : {"U_{3,6}", "V8", "W3plus"}) {
        auto rep = hpp_random_rays(basis(name), opt, p.cfg);
        out.push_back({"table1", std::string(name) + " rays", rep.counterexamples == 0, report_to_json(rep)});
    }
    {
        RunOptions el = opt;
        el.trials = p.trials ? 10 * p.trials : 1000000;
        auto rep = hpp_random_elementary(basis("F7"), el, p.cfg);
        const bool ok = p.trials ? rep.counterexamples > 0 : rep.counterexamples >= 5 && rep.counterexamples <= 200;
        out.push_back({"table1", "F7 elementary", ok, report_to_json(rep)});
    }
    return out;
}

using Runner = std::function<std::vector<CaseResult>(const FixtureParams&)>;

const std::map<std::string, Runner>& registry()
{
    static const std::map<std::string, Runner> r{
        {"ex11.1", ex11_1}, {"ex11.2", ex11_2}, {"ex11.3", ex11_3},   {"ex11.4", ex11_4},
        {"ex11.5", ex11_5}, {"ex11.6", ex11_6}, {"ex11.7", ex11_7},   {"ex11.8", ex11_8},
        {"ex11.9", ex11_9}, {"ex11.10", ex11_10}, {"ex13.1", ex13_1}, {"table1", table1},
    };
    return r;
}

}  // namespace

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names;
    for (const auto& [k, v] : registry())
        names.push_back(k);
    // natural order: ex11.2 before ex11.10
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        auto key = [](const std::string& s) {
            auto dot = s.find('.');
            if (dot == std::string::npos)
                return std::pair{s, 0};
            return std::pair{s.substr(0, dot), std::stoi(s.substr(dot + 1))};
        };
        return key(a) < key(b);
    });
    return names;
}

std::vector<CaseResult> run_fixture(const std::string& name, const FixtureParams& p)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown fixture: " + name);
    return it->second(p);
}

}  // namespace hpl
