#include "hpl/hpptest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace hpl {

void ToleranceConfig::validate() const
{
    for (double t : {root_im_tol, root_re_tol, eval_tol, eigen_tol})
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::invalid_argument("tolerances must be positive and finite");
    if (max_iter <= 0)
        throw std::invalid_argument("iteration cap must be positive");
}

RootSet univariate_roots(const std::vector<cplx>& coeffs, const ToleranceConfig& cfg)
{
    cfg.validate();
    return find_roots(coeffs, cfg.max_iter);
}

std::string kind_name(Counterexample::Kind k)
{
    switch (k) {
    case Counterexample::Kind::ray:
        return "ray";
    case Counterexample::Kind::elementary:
        return "elementary";
    case Counterexample::Kind::shifted:
        return "shifted";
    }
    return "?";
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 finalizer over the pair.
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(seed) ^ index);
}

// ---------------------------------------------------------------- univariate reductions

namespace {

// Multiply an ascending coefficient vector by (u z + v).
void mul_linear(std::vector<cplx>& poly, cplx u, cplx v)
{
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k)
        poly[k] = poly[k] * v + poly[k - 1] * u;
    poly[0] *= v;
}

bool all_zero(const std::vector<cplx>& c)
{
    return std::all_of(c.begin(), c.end(), [](cplx z) { return z == cplx(0.0); });
}

}  // namespace

std::vector<cplx> ray_polynomial(const MaPoly& p, const std::vector<double>& a, const std::vector<double>& b)
{
    if (int(a.size()) != p.n() || int(b.size()) != p.n())
        throw std::invalid_argument("ray: direction vectors must match the ground set");
    std::vector<cplx> out(std::max(p.degree(), 0) + 1, 0.0);
    std::vector<cplx> term;
    for (const auto& [s, c] : p.terms()) {
        term.assign(1, c);
        for (Mask t = s; t; t &= t - 1) {
            int e = __builtin_ctzll(t);
            mul_linear(term, a[e], b[e]);
        }
        for (std::size_t k = 0; k < term.size(); ++k)
            out[k] += term[k];
    }
    return out;
}

static std::vector<cplx> ray_polynomial_general(const GenPoly& p, const std::vector<double>& a,
                                                const std::vector<double>& b)
{
    if (int(a.size()) != p.n() || int(b.size()) != p.n())
        throw std::invalid_argument("ray: direction vectors must match the ground set");
    std::vector<cplx> out(std::max(p.degree(), 0) + 1, 0.0);
    for (const auto& [m, c] : p.terms()) {
        std::vector<cplx> term{c};
        for (int e = 0; e < p.n(); ++e)
            for (int k = 0; k < m[e]; ++k)
                mul_linear(term, a[e], b[e]);
        for (std::size_t k = 0; k < term.size(); ++k)
            out[k] += term[k];
    }
    return out;
}

std::vector<cplx> shifted_polynomial(const GenPoly& p, const std::vector<double>& x, const std::vector<double>& y)
{
    if (int(x.size()) != p.n() || int(y.size()) != p.n())
        throw std::invalid_argument("shifted: vectors must match the ground set");
    const int k = std::max(p.degree(), 0);
    std::vector<cplx> out(2 * k + 1, 0.0);
    for (const auto& [m, c] : p.terms()) {
        // z^(k-|m|) * prod (x_e z^2 + y_e)^(m_e)
        std::vector<cplx> term{c};
        for (int e = 0; e < p.n(); ++e)
            for (int j = 0; j < m[e]; ++j) {
                std::vector<cplx> next(term.size() + 2, 0.0);
                for (std::size_t i = 0; i < term.size(); ++i) {
                    next[i] += term[i] * y[e];
                    next[i + 2] += term[i] * x[e];
                }
                term.swap(next);
            }
        const int shift = k - m.total();
        for (std::size_t i = 0; i < term.size(); ++i)
            out[i + shift] += term[i];
    }
    return out;
}

// ---------------------------------------------------------------- ray test

bool root_is_bad_ray(cplx z, const ToleranceConfig& cfg)
{
    return std::abs(z.imag()) > cfg.root_im_tol * (1.0 + std::abs(z)) || z.real() > cfg.root_re_tol;
}

RayOutcome ray_test_homogeneous(const MaPoly& p, const std::vector<double>& a, const std::vector<double>& b,
                                const ToleranceConfig& cfg)
{
    if (p.is_zero())
        throw std::invalid_argument("ray test: zero polynomial");
    if (!p.homogeneous())
        throw std::invalid_argument("ray test: polynomial is not homogeneous");
    RayOutcome out;
    out.coeffs = ray_polynomial(p, a, b);
    if (all_zero(out.coeffs)) {
        out.degenerate = true;
        return out;
    }
    out.roots = univariate_roots(out.coeffs, cfg);
    const cplx* worst = nullptr;
    for (const auto& z : out.roots.roots)
        if (root_is_bad_ray(z, cfg) && (!worst || std::abs(z.imag()) > std::abs(worst->imag())))
            worst = &z;
    if (worst) {
        out.pass = false;
        Counterexample ce;
        ce.kind = Counterexample::Kind::ray;
        ce.a = a;
        ce.b = b;
        ce.root = *worst;
        out.certificate = ce;
    }
    return out;
}

// ---------------------------------------------------------------- trial runner

namespace {

enum class Status : unsigned char { ok, counterexample, degenerate, root_failure };

struct Trial {
    Status status = Status::ok;
    std::optional<Counterexample> cert;
};

template <class Fn>
HppReport run_trials(const std::string& method, const RunOptions& opt, Fn&& fn)
{
    HppReport rep;
    rep.method = method;
    rep.seed = opt.seed;
    unsigned workers = opt.workers > 0 ? unsigned(opt.workers) : std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t block = 4096;
    std::vector<Trial> results;
    for (std::uint64_t start = 0; start < opt.trials; start += block) {
        const std::uint64_t len = std::min(block, opt.trials - start);
        results.assign(len, Trial{});
        auto work = [&](unsigned w) {
            for (std::uint64_t i = w; i < len; i += workers)
                results[i] = fn(start + i);
        };
        if (workers == 1 || len < 2 * workers) {
            work(0);
            for (unsigned w = 1; w < workers && len < 2 * workers; ++w)
                work(w);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work, w);
            for (auto& t : pool)
                t.join();
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            ++rep.trials;
            Trial& t = results[i];
            switch (t.status) {
            case Status::ok:
                break;
            case Status::degenerate:
                ++rep.degenerate;
                break;
            case Status::root_failure:
                ++rep.root_failures;
                break;
            case Status::counterexample:
                ++rep.counterexamples;
                if (!rep.certificate)
                    rep.certificate = std::move(t.cert);
                break;
            }
            if (opt.stop_at_first && rep.certificate)
                break;
        }
        if (opt.stop_at_first && rep.certificate)
            break;
    }
    rep.verdict = rep.certificate ? HppReport::Verdict::counterexample : HppReport::Verdict::no_counterexample;
    return rep;
}

}  // namespace

HppReport hpp_random_rays(const MaPoly& p, const RunOptions& opt, const ToleranceConfig& cfg)
{
    cfg.validate();
    if (p.is_zero())
        throw std::invalid_argument("rays: zero polynomial");
    if (!p.homogeneous())
        throw std::invalid_argument("rays: polynomial is not homogeneous");
    const int n = p.n();
    return run_trials("rays", opt, [&](std::uint64_t idx) {
        std::mt19937_64 rng(trial_seed(opt.seed, idx));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<double> a(n), b(n);
        for (int e = 0; e < n; ++e)
            a[e] = unit(rng);
        for (int e = 0; e < n; ++e)
            b[e] = unit(rng);
        RayOutcome o = ray_test_homogeneous(p, a, b, cfg);
        Trial t;
        if (o.degenerate)
            t.status = Status::degenerate;
        else if (!o.roots.converged)
            t.status = Status::root_failure;
        else if (!o.pass) {
            t.status = Status::counterexample;
            t.cert = std::move(o.certificate);
        }
        return t;
    });
}

int elementary_pivot(const MaPoly& p)
{
    for (int e = p.n() - 1; e >= 0; --e)
        if (!slice_with(p, e).is_zero() && !slice_without(p, e).is_zero())
            return e;
    throw std::invalid_argument("elementary: every element is a loop or coloop");
}

HppReport hpp_random_elementary(const MaPoly& p, const RunOptions& opt, const ToleranceConfig& cfg, int pivot)
{
    cfg.validate();
    if (p.is_zero())
        throw std::invalid_argument("elementary: zero polynomial");
    const int n = p.n();
    const int e = pivot >= 0 ? pivot : elementary_pivot(p);
    if (e >= n)
        throw std::out_of_range("elementary: pivot outside ground set");
    const MaPoly pd = slice_without(p, e), pc = slice_with(p, e);
    if (pd.is_zero() && pc.is_zero())
        throw std::invalid_argument("elementary: degenerate pivot");
    HppReport rep = run_trials("elementary", opt, [&](std::uint64_t idx) {
        std::mt19937_64 rng(trial_seed(opt.seed, idx));
        std::uniform_real_distribution<double> re(0.0, 1.0), im(-1.0, 1.0);
        std::vector<cplx> x(n, 0.0);
        for (int f = 0; f < n; ++f) {
            if (f == e)
                continue;
            double u = re(rng);
            while (u == 0.0)
                u = re(rng);
            x[f] = cplx(u, im(rng));
        }
        Trial t;
        const cplx den = pc.eval(x);
        if (den == cplx(0.0)) {
            t.status = Status::degenerate;
            return t;
        }
        x[e] = -pd.eval(x) / den;
        if (x[e].real() > cfg.eval_tol) {
            t.status = Status::counterexample;
            Counterexample ce;
            ce.kind = Counterexample::Kind::elementary;
            ce.pivot = e;
            ce.x = x;
            ce.residual = std::abs(p.eval(x));
            t.cert = std::move(ce);
        }
        return t;
    });
    return rep;
}

HppReport shifted_hpp_random(const GenPoly& p, const RunOptions& opt, const ToleranceConfig& cfg)
{
    cfg.validate();
    if (p.is_zero())
        throw std::invalid_argument("shifted: zero polynomial");
    const int n = p.n();
    return run_trials("shifted", opt, [&](std::uint64_t idx) {
        std::mt19937_64 rng(trial_seed(opt.seed, idx));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<double> x(n), y(n);
        for (int e = 0; e < n; ++e)
            x[e] = unit(rng);
        for (int e = 0; e < n; ++e)
            y[e] = unit(rng);
        Trial t;
        auto c = shifted_polynomial(p, x, y);
        if (all_zero(c)) {
            t.status = Status::degenerate;
            return t;
        }
        RootSet rs = univariate_roots(c, cfg);
        if (!rs.converged) {
            t.status = Status::root_failure;
            return t;
        }
        for (const auto& z : rs.roots)
            if (z.real() > cfg.root_re_tol) {
                t.status = Status::counterexample;
                Counterexample ce;
                ce.kind = Counterexample::Kind::shifted;
                ce.a = x;
                ce.b = y;
                ce.root = z;
                t.cert = std::move(ce);
                break;
            }
        return t;
    });
}

// ---------------------------------------------------------------- rank 2

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double* off_norm)
{
    if (int(a.size()) != n * n)
        throw std::invalid_argument("jacobi: matrix size mismatch");
    auto at = [&](int i, int j) -> double& { return a[std::size_t(i) * n + j]; };
    double total = 0.0;
    for (double v : a)
        total += v * v;
    const double target = 1e-14 * std::sqrt(total);
    auto off = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off() > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double app = at(p, p), aqq = at(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
            }
    }
    if (off_norm)
        *off_norm = off();
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i)
        eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

Rank2Result rank2_exact(const GenPoly& p, const ToleranceConfig& cfg)
{
    cfg.validate();
    const int n = p.n();
    Rank2Result res;
    if (!p.is_zero() && (!p.homogeneous() || p.degree() != 2))
        throw std::invalid_argument("rank2: polynomial must be homogeneous of degree 2");
    PhaseResult ph = same_phase(p, 1e-9);
    if (!ph.ok)
        throw std::invalid_argument("rank2: coefficients do not share a common phase");
    const cplx unrotate = std::polar(1.0, -ph.theta);
    std::vector<double> a(std::size_t(n) * n, 0.0);
    for (const auto& [m, c] : p.terms()) {
        cplx v = c * unrotate;
        if (std::abs(v.imag()) > 1e-9 * std::abs(v) || v.real() < 0.0)
            throw std::invalid_argument("rank2: coefficient not nonnegative after phase normalization");
        std::vector<int> idx;
        for (int e = 0; e < n; ++e)
            for (int k = 0; k < m[e]; ++k)
                idx.push_back(e);
        if (idx[0] == idx[1])
            a[std::size_t(idx[0]) * n + idx[0]] += 2.0 * v.real();
        else {
            a[std::size_t(idx[0]) * n + idx[1]] += v.real();
            a[std::size_t(idx[1]) * n + idx[0]] += v.real();
        }
    }
    res.eigenvalues = jacobi_eigenvalues(a, n);
    res.lambda2 = n >= 2 ? res.eigenvalues[1] : 0.0;
    res.hpp = res.lambda2 <= cfg.eigen_tol;
    return res;
}

Rank2Result rank2_exact(const MaPoly& p, const ToleranceConfig& cfg) { return rank2_exact(GenPoly::from(p), cfg); }

// ---------------------------------------------------------------- local probes

LocalProbe local_hpp_probe(const MaPoly& p, int e, const RunOptions& opt, const ToleranceConfig& cfg)
{
    cfg.validate();
    const int n = p.n();
    if (e < 0 || e >= n)
        throw std::out_of_range("local probe: element outside ground set");
    const MaPoly pd = slice_without(p, e), pc = slice_with(p, e);
    if (pd.is_zero() || pc.is_zero())
        throw std::invalid_argument("local probe: element is a loop or coloop");
    LocalProbe out;
    for (std::uint64_t idx = 0; idx < opt.trials; ++idx) {
        std::mt19937_64 rng(trial_seed(opt.seed, idx));
        std::uniform_real_distribution<double> re(0.0, 1.0), im(-1.0, 1.0);
        std::vector<cplx> x(n, 0.0);
        for (int f = 0; f < n; ++f) {
            if (f == e)
                continue;
            double u = re(rng);
            while (u == 0.0)
                u = re(rng);
            x[f] = cplx(u, im(rng));
        }
        ++out.trials;
        const cplx den = pc.eval(x);
        if (den == cplx(0.0))
            continue;
        const cplx ratio = pd.eval(x) / den;
        if (ratio.real() < -cfg.eval_tol) {
            out.pass = false;
            out.witness = x;
            out.ratio = ratio;
            return out;
        }
    }
    return out;
}

GapCheck fettweis_gap_check(const GenPoly& p, int e)
{
    auto slices = coefficient_slices(p, e);
    GapCheck out;
    int last = -1;
    for (int k = 0; k < int(slices.size()); ++k) {
        if (slices[k].is_zero())
            continue;
        if (last >= 0 && k - last - 1 >= 2) {
            out.pass = false;
            out.r = last;
            out.gap = k - last - 1;
            return out;
        }
        last = k;
    }
    return out;
}

// ---------------------------------------------------------------- Brown-Colbourn

BrownColbourn brown_colbourn_uniform(int r, int n, double tol)
{
    if (n < 1 || r < 0 || r > n - 1)
        throw std::invalid_argument("brown_colbourn: need 0 <= r <= n-1");
    auto binom = [](int a, int b) {
        double v = 1.0;
        for (int i = 1; i <= b; ++i)
            v = v * (a - b + i) / i;
        return std::round(v);
    };
    BrownColbourn bc;
    for (int l = 0; l <= r; ++l)
        bc.h_coeffs.push_back(binom(n - r - 1 + l, l));
    for (int k = 0; k <= r; ++k)
        bc.i_coeffs.push_back(binom(n, k));
    if (r == 0)
        return bc;
    std::vector<cplx> hc(bc.h_coeffs.begin(), bc.h_coeffs.end());
    bc.h_roots = find_roots(hc).roots;
    const double lo = 1.0 / (n - r), hi = double(r) / (n - 1);
    bc.min_abs = INFINITY;
    bc.max_abs = 0.0;
    for (const auto& q : bc.h_roots) {
        bc.min_abs = std::min(bc.min_abs, std::abs(q));
        bc.max_abs = std::max(bc.max_abs, std::abs(q));
    }
    bc.annulus_ok = bc.min_abs >= lo - tol && bc.max_abs <= hi + tol;
    std::vector<cplx> ic(bc.i_coeffs.begin(), bc.i_coeffs.end());
    bc.i_roots = find_roots(ic).roots;
    bc.i_min_re = INFINITY;
    for (const auto& z : bc.i_roots)
        bc.i_min_re = std::min(bc.i_min_re, z.real());
    bc.i_ok = bc.i_min_re >= -0.5 - tol;
    return bc;
}

// ---------------------------------------------------------------- verification

namespace {

double coeff_mass(const GenPoly& p)
{
    double s = 0.0;
    for (const auto& [m, c] : p.terms())
        s += std::abs(c);
    return s;
}

bool nonneg_direction(const std::vector<double>& a, const std::vector<double>& b, int n)
{
    if (int(a.size()) != n || int(b.size()) != n)
        return false;
    bool positive = false;
    for (int e = 0; e < n; ++e) {
        if (!(a[e] >= 0.0) || !(b[e] >= 0.0))
            return false;
        positive = positive || a[e] + b[e] > 0.0;
    }
    return positive;
}

}  // namespace

bool counterexample_verify(const GenPoly& p, const Counterexample& cert, const ToleranceConfig& cfg)
{
    cfg.validate();
    const int n = p.n();
    switch (cert.kind) {
    case Counterexample::Kind::ray: {
        if (!nonneg_direction(cert.a, cert.b, n))
            return false;
        auto c = ray_polynomial_general(p, cert.a, cert.b);
        if (all_zero(c))
            return false;
        RootSet rs = univariate_roots(c, cfg);
        return std::any_of(rs.roots.begin(), rs.roots.end(), [&](cplx z) { return root_is_bad_ray(z, cfg); });
    }
    case Counterexample::Kind::shifted: {
        if (!nonneg_direction(cert.a, cert.b, n))
            return false;
        auto c = shifted_polynomial(p, cert.a, cert.b);
        if (all_zero(c))
            return false;
        RootSet rs = univariate_roots(c, cfg);
        return std::any_of(rs.roots.begin(), rs.roots.end(), [&](cplx z) { return z.real() > cfg.root_re_tol; });
    }
    case Counterexample::Kind::elementary: {
        if (int(cert.x.size()) != n)
            return false;
        for (const auto& z : cert.x)
            if (!(z.real() > cfg.eval_tol) || !std::isfinite(z.imag()))
                return false;
        const double bound = cfg.eval_tol * (1.0 + coeff_mass(p));
        const double resid = std::abs(p.eval(cert.x));
        return resid <= bound && std::abs(resid - cert.residual) <= bound;
    }
    }
    return false;
}

bool counterexample_verify(const MaPoly& p, const Counterexample& cert, const ToleranceConfig& cfg)
{
    return counterexample_verify(GenPoly::from(p), cert, cfg);
}

}  // namespace hpl
