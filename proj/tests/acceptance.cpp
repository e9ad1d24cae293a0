// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include "hpl/catalog.hpp"
#include "hpl/fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace hpl;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            note << " [" << what << "]";
        }
    }
};

bool fixture_ok(const std::string& name, Line& l, const std::function<bool(const CaseResult&)>& pick,
                const FixtureParams& p = {})
{
    bool ok = true;
    int seen = 0;
    for (const auto& c : run_fixture(name, p)) {
        if (!pick(c))
            continue;
        ++seen;
        if (!c.pass) {
            ok = false;
            l.note << " [" << name << ": " << c.label << "]";
        }
    }
    return ok && seen > 0;
}

bool all_cases(const CaseResult&) { return true; }

bool roots_near(const std::vector<cplx>& got, std::vector<cplx> want, double tol)
{
    if (got.size() != want.size())
        return false;
    for (auto z : got) {
        auto it = std::min_element(want.begin(), want.end(),
                                   [&](cplx a, cplx b) { return std::abs(a - z) < std::abs(b - z); });
        if (std::abs(*it - z) > tol)
            return false;
        want.erase(it);
    }
    return true;
}

// Trailing zero coefficients are ignored (the ray polynomial can drop degree).
bool coeffs_equal(std::vector<cplx> got, const std::vector<double>& want)
{
    while (got.size() > want.size() && got.back() == cplx(0.0))
        got.pop_back();
    if (got.size() != want.size())
        return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - want[i]) > 1e-9 * (1 + std::abs(want[i])))
            return false;
    return true;
}

void c1(Line& l)
{
    const MaPoly f7 = basis_polynomial(catalog("F7"));
    const auto a = chi(7, {0, 1, 3, 4}), b = chi(7, {2, 5, 6});
    const auto t0 = Clock::now();
    const RayOutcome o = ray_test_homogeneous(f7, a, b);
    const double us = std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
    const double s = std::sqrt(3.0) / 2;
    l.require(coeffs_equal(o.coeffs, {0, 12, 12, 4}), "coefficients");
    l.require(roots_near(o.roots.roots, {0.0, {-1.5, s}, {-1.5, -s}}, 1e-8), "roots");
    l.require(us < 1000, "runtime");
    l.note << " ray test " << us << " us";
}

void c2(Line& l)
{
    const auto o = ray_test_homogeneous(basis_polynomial(catalog("F7m")), chi(7, {0, 1, 3, 4}), chi(7, {2, 5, 6}));
    const double s = std::sqrt(23.0) / 8;
    l.require(coeffs_equal(o.coeffs, {0, 12, 13, 4}), "coefficients");
    l.require(roots_near(o.roots.roots, {0.0, {-13.0 / 8, s}, {-13.0 / 8, -s}}, 1e-8), "roots");
}

void c3(Line& l)
{
    const auto o = ray_test_homogeneous(basis_polynomial(catalog("F7mm")), chi(7, {0, 3, 6}), chi(7, {1, 2, 4, 5}));
    l.require(coeffs_equal(o.coeffs, {4, 13, 12, 1}), "coefficients");
    l.require(roots_near(o.roots.roots, {-10.834170, {-0.582915, 0.171501}, {-0.582915, -0.171501}}, 1e-5), "roots");
}

void c4(Line& l)
{
    const auto a = chi(8, {0, 3, 4, 7}), b = chi(8, {1, 2, 5, 6});
    const double s = std::sqrt(15.0) / 8;
    auto p8 = ray_test_homogeneous(basis_polynomial(catalog("P8")), a, b);
    l.require(coeffs_equal(p8.coeffs, {0, 16, 28, 16}), "P8 coefficients");
    l.require(roots_near(p8.roots.roots, {0.0, {-7.0 / 8, s}, {-7.0 / 8, -s}}, 1e-5), "P8 roots");
    auto p8pp = ray_test_homogeneous(basis_polynomial(catalog("P8pp")), a, b);
    l.require(coeffs_equal(p8pp.coeffs, {1, 16, 28, 16, 1}), "P8pp coefficients");
    l.require(roots_near(p8pp.roots.roots, {-14.093459, -0.070955, {-0.917793, 0.397059}, {-0.917793, -0.397059}}, 1e-5),
              "P8pp roots");
    l.require(fixture_ok("ex11.8", l, all_cases), "fixture ex11.8");
}

void c5(Line& l)
{
    const MaPoly k4 = basis_polynomial(graphic_matroid(Graph::complete(4)));
    const auto o = ray_test_homogeneous(k4, chi(6, {0, 1, 2}), chi(6, {3, 4, 5}));
    l.require(coeffs_equal(o.coeffs, {0, 9, 6, 1}), "K4 coefficients");
    int near = 0;
    for (auto z : o.roots.roots)
        near += std::abs(z + 3.0) <= 1e-6;
    l.require(near == 2, "double root at -3");
    FixtureParams p;
    p.eps = 1e-3;
    l.require(fixture_ok("ex11.4", l, [](const CaseResult& c) { return c.label.find("eps=") != std::string::npos; }, p),
              "perturbed family");
}

void c6(Line& l)
{
    const auto t0 = Clock::now();
    const auto res = run_fixture("table1");
    const double sec = std::chrono::duration<double>(Clock::now() - t0).count();
    for (const auto& c : res) {
        l.require(c.pass, c.label);
        l.note << " " << c.label << ": " << c.detail.value("counterexamples", 0) << "/" << c.detail.value("trials", 0);
    }
    l.require(res.size() == 5, "case count");
    l.require(sec < 600, "runtime");
    l.note << "; " << sec << " s";
}

void c7(Line& l)
{
    // All 64 edge subsets of K4; brute force: the edge set is a rank-2 basis system.
    const auto k4 = Graph::complete(4);
    int agree = 0;
    for (Mask sub = 0; sub < 64; ++sub) {
        MaPoly p(4);
        std::vector<Mask> cand;
        for (int k = 0; k < 6; ++k)
            if (has(sub, k)) {
                const Mask e = bit(k4.edges[k].first) | bit(k4.edges[k].second);
                p.add(e, 1.0);
                cand.push_back(e);
            }
        const bool brute = cand.empty() || verify_basis_axioms(4, cand).ok;
        agree += rank2_exact(p).hpp == brute;
    }
    l.require(agree == 64, "K4 subsets " + std::to_string(agree) + "/64");
    l.require(fixture_ok("ex13.1", l, all_cases), "thresholds");
}

void c8(Line& l)
{
    const auto mk4 = nice_principal_solve(catalog("MK4"), mask_of({0, 1, 2}));
    l.require(mk4.status == NicenessSolution::Status::nice && mk4.weights == std::vector<Rational>(3, Rational(1, 2)),
              "MK4");
    const auto q = nice_principal_solve(catalog("Q7del7"), full_mask(6));
    l.require(q.status == NicenessSolution::Status::infeasible_nonneg && q.unique && q.weights[0] == Rational(-1, 6),
              "Q7");
    const auto f = nice_principal_solve(catalog("F7m4"), full_mask(7));
    bool fw = f.status == NicenessSolution::Status::nice && f.weights[0] == 0;
    for (int i = 1; i < 7 && fw; ++i)
        fw = f.weights[i] == Rational(1, 4);
    l.require(fw, "F7m4");
    bool uni = true;
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto t = nice_principal_solve(Matroid::uniform(r, n), full_mask(n));
            uni = uni && int(t.weights.size()) == n;
            for (const auto& w : t.weights)
                uni = uni && t.status == NicenessSolution::Status::nice && w == Rational(1, n - r + 1);
            // Cotruncation of U_{r-1,n}.
            const auto c = nice_cotruncation_solve(Matroid::uniform(r - 1, n), full_mask(n));
            uni = uni && int(c.weights.size()) == n;
            for (const auto& w : c.weights)
                uni = uni && c.status == NicenessSolution::Status::nice && w == Rational(1, r);
        }
    l.require(uni, "uniform weights");
}

void c9(Line& l)
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> u(-3, 3);
    std::uniform_real_distribution<double> re(0.05, 1.0), im(-1.0, 1.0);
    int cb = 0, full = 0, matroidal = 0;
    for (int t = 0; t < 100; ++t) {
        const int r = 1 + t % 4, n = r + 1 + t % 5;
        ComplexMatrix a(r, n);
        for (auto& v : a.data)
            v = cplx(u(rng), u(rng));
        const MaPoly p = det_construction(a);
        std::vector<cplx> x(n);
        for (auto& z : x)
            z = cplx(re(rng), im(rng));
        const cplx rhs = cauchy_binet_value(a, x);
        cb += std::abs(p.eval(x) - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs));
        if (!p.is_zero()) {
            ++full;
            matroidal += support_matroid(p).matroid.has_value();
        }
    }
    l.require(cb == 100, "Cauchy-Binet " + std::to_string(cb) + "/100");
    l.require(matroidal == full, "support matroids");
    ComplexMatrix ex{{1, 1, 0, 0, 0, 1, 1}, {0, 1, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1, 1}};
    MaPoly want = basis_polynomial(catalog("F7"));
    want.add(mask_of({1, 3, 5}), 4.0);
    l.require(det_construction(ex) == want, "F7 + 4 x1x3x5");
    bool per_ok = true;
    for (int r = 1; r <= 4; ++r)
        for (int n = r; n <= 8; ++n) {
            NonnegMatrix ones(r, n);
            std::fill(ones.data.begin(), ones.data.end(), 1.0);
            double fact = 1;
            for (int k = 2; k <= r; ++k)
                fact *= k;
            per_ok = per_ok && per_construction(ones) == MaPoly::elementary(r, n) * cplx(fact);
        }
    l.require(per_ok, "per(all-ones) = r! E_{r,n}");
}

void c10(Line& l)
{
    bool annulus = true, lower_half = true, literal = true;
    double worst = 1e300;
    for (int n = 1; n <= 12; ++n)
        for (int r = 0; r < n; ++r) {
            const auto bc = brown_colbourn_uniform(r, n);
            const double lo = 1.0 / (n - r), hi = n > 1 ? double(r) / (n - 1) : 0.0;
            for (auto z : bc.h_roots)
                annulus = annulus && std::abs(z) >= lo - 1e-9 && std::abs(z) <= hi + 1e-9;
            for (auto z : bc.i_roots) {
                lower_half = lower_half && z.real() >= -0.5 - 1e-9;
                literal = literal && z.real() <= -0.5 + 1e-9;
                worst = std::min(worst, z.real());
            }
        }
    l.require(annulus, "H annulus");
    l.require(lower_half, "I roots Re >= -1/2");
    l.note << " min Re over I roots " << worst << "; literal 'Re <= -1/2' reading "
           << (literal ? "holds" : "fails (e.g. I_{2,4} has a root with Re = -1/3), checked as Re >= -1/2");
}

void c11(Line& l)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-3, 3);
    auto rnd = [&](int n) {
        MaPoly p(n);
        for (Mask s = 0; s <= full_mask(n); ++s)
            if (rng() % 2)
                p.add(s, cplx(c(rng), c(rng)));
        return p;
    };
    bool dual_inv = true, minors_swap = true, sp = true, cotr = true;
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + t % 5;
        const MaPoly p = rnd(n), q = rnd(n);
        const int e = t % n;
        dual_inv = dual_inv && dual(dual(p)) == p;
        minors_swap = minors_swap && dual(delete_element(p, e)) == contract_element(dual(p), e) &&
                dual(contract_element(p, e)) == delete_element(dual(p), e);
        sp = sp && dual(series_connection(p, q, e, (e + 1) % n).poly) ==
                       parallel_connection(dual(p), dual(q), e, (e + 1) % n).poly;
        Weighting w(n);
        for (int k = 0; k < n; ++k)
            w[k] = double((k + t) % 3);
        cotr = cotr && dual(principal_cotruncation(p, w)) == principal_truncation(dual(p), w);
    }
    l.require(dual_inv, "duality involution");
    l.require(minors_swap, "deletion/contraction duality");
    l.require(sp, "series/parallel duality");
    l.require(cotr, "cotruncation duality");
    MaPoly one_plus(1), one_minus(1);
    one_plus.add(0, 1.0);
    one_plus.add(1, 1.0);
    one_minus.add(0, 1.0);
    one_minus.add(1, -1.0);
    l.require(convolution(one_plus, one_minus).is_zero(), "(1+x)*(1-x)");
    auto lin = [](std::vector<int> on) {
        GenPoly g(4);
        for (int e : on)
            g += GenPoly::variable(4, e);
        return g;
    };
    GenPoly flat = multiaffine_part(lin({0, 1, 2}) * lin({0, 1, 3}), full_mask(4));
    MaPoly want(4);
    want.add(mask_of({0, 1}), 2.0);
    for (auto s : {std::vector<int>{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
        want.add(mask_of(s), 1.0);
    l.require(flat == GenPoly::from(want), "(PQ) multiaffine part");
    const double al = 0.7, be = -1.3;
    GenPoly xa = GenPoly::variable(1, 0) + GenPoly::constant(1, al);
    GenPoly xb = GenPoly::variable(1, 0) + GenPoly::constant(1, be);
    GenPoly fold_want = GenPoly::constant(1, 1 + al * be) + GenPoly::variable(1, 0) * cplx(al + be);
    l.require(fold_mod2(xa * xb, 1) == fold_want, "fold mod 2");
    const std::vector<Matroid> pool{catalog("F7"), catalog("F7m"), catalog("P8"), catalog("U_{2,4}"),
                                    catalog("MK4"), catalog("W3"), catalog("Q6")};
    int coherent = 0;
    for (int t = 0; t < 20; ++t) {
        const Matroid& a = pool[rng() % pool.size()];
        const Matroid& b = pool[rng() % pool.size()];
        const int ea = int(rng() % a.n()), eb = int(rng() % b.n());
        coherent += basis_polynomial(two_sum_m(a, b, ea, eb).matroid) ==
                    two_sum(basis_polynomial(a), basis_polynomial(b), ea, eb).poly;
    }
    l.require(coherent == 20, "2-sum coherence " + std::to_string(coherent) + "/20");
}

void c12(Line& l)
{
    int graphs = 0, agree = 0;
    for (int v = 1; v <= 5; ++v) {
        const auto kv = Graph::complete(v);
        const int m = int(kv.edges.size());
        for (Mask sub = 0; sub < bit(m); ++sub) {
            Graph g{v, {}};
            for (int k = 0; k < m; ++k)
                if (has(sub, k))
                    g.edges.push_back(kv.edges[k]);
            // connectivity by union-find
            std::vector<int> comp(v);
            for (int i = 0; i < v; ++i)
                comp[i] = i;
            std::function<int(int)> find = [&](int i) { return comp[i] == i ? i : comp[i] = find(comp[i]); };
            for (auto [a, b] : g.edges)
                comp[find(a)] = find(b);
            bool conn = true;
            for (int i = 0; i < v; ++i)
                conn = conn && find(i) == find(0);
            if (!conn)
                continue;
            ++graphs;
            GenPoly prod = GenPoly::constant(v, 1.0);
            for (auto [a, b] : g.edges)
                prod = prod * (GenPoly::constant(v, 1.0) + GenPoly::variable(v, a) * GenPoly::variable(v, b));
            const std::vector<double> lam(g.edges.size(), 1.0);
            agree += GenPoly::from(matching_polynomial(g, lam)) == multiaffine_part(prod, full_mask(v));
        }
    }
    l.require(agree == graphs, "recursion vs product " + std::to_string(agree) + "/" + std::to_string(graphs));
    MaPoly k2(2);
    k2.add(0, 1.0);
    k2.add(3, 1.0);
    l.require(complementary_matching_polynomial(Graph{2, {{0, 1}}}, {1.0}) == k2, "K2 complement");
    l.note << " " << graphs << " connected graphs";
}

void c13(Line& l)
{
    FixtureParams p;
    p.eps = 1e-2;
    auto perturbed = [](const CaseResult& c) { return c.label.find("eps=") != std::string::npos; };
    l.require(fixture_ok("ex11.9", l, perturbed, p), "Pappus / non-Pappus");
    l.require(fixture_ok("ex11.10", l, perturbed, p), "non-Pappus minus 9 plus e");
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, void (*)(Line&)>> criteria{
        {"F7 ray polynomial and roots", c1},
        {"F7- ray polynomial and roots", c2},
        {"F7-- ray polynomial and roots", c3},
        {"P8 family ray polynomials", c4},
        {"K4 double root and perturbed F7 family", c5},
        {"random-method rates at reduced scale", c6},
        {"rank-2 exact test", c7},
        {"niceness solver", c8},
        {"determinant / permanent constructions", c9},
        {"uniform matroid root locations", c10},
        {"construction identities", c11},
        {"matching polynomial", c12},
        {"Pappus family perturbations", c13},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Line l;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(l);
        } catch (const std::exception& e) {
            l.pass = false;
            l.note << " [exception: " << e.what() << "]";
        }
        const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        std::printf("%s %2zu %s (%.1f ms)%s\n", l.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, ms,
                    l.note.str().c_str());
        failed += !l.pass;
    }
    std::fflush(stdout);
    return failed ? 1 : 0;
}
