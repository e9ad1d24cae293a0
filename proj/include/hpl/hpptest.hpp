#pragma once

#include "hpl/polycore.hpp"
#include "hpl/roots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hpl {

struct ToleranceConfig {
    double root_im_tol = 1e-7;
    double root_re_tol = 1e-9;
    double eval_tol = 1e-9;
    double eigen_tol = 1e-9;
    int max_iter = 2000;
    void validate() const;
};

RootSet univariate_roots(const std::vector<cplx>& coeffs, const ToleranceConfig& cfg = {});

struct Counterexample {
    enum class Kind { ray, elementary, shifted };
    Kind kind = Kind::ray;
    // ray / shifted
    std::vector<double> a, b;
    cplx root{0.0, 0.0};
    // elementary
    std::vector<cplx> x;
    int pivot = -1;
    double residual = 0.0;
};

std::string kind_name(Counterexample::Kind k);

struct HppReport {
    enum class Verdict { no_counterexample, counterexample };
    Verdict verdict = Verdict::no_counterexample;
    std::string method;
    std::uint64_t trials = 0;           // trials actually run
    std::uint64_t counterexamples = 0;  // among those trials
    std::uint64_t degenerate = 0;       // trials skipped (zero ray polynomial, zero pivot slice)
    std::uint64_t root_failures = 0;    // root iteration hit its cap
    std::uint64_t seed = 0;
    std::optional<Counterexample> certificate;  // lowest-index counterexample
};

struct RunOptions {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    bool stop_at_first = true;
    int workers = 0;  // 0 = hardware concurrency
};

// p(z) = P(z a + b), ascending coefficients.
std::vector<cplx> ray_polynomial(const MaPoly& p, const std::vector<double>& a, const std::vector<double>& b);
// z^k P(z x + y / z) with k = deg P, ascending coefficients.
std::vector<cplx> shifted_polynomial(const GenPoly& p, const std::vector<double>& x, const std::vector<double>& y);

struct RayOutcome {
    bool pass = true;
    bool degenerate = false;  // p_{a,b} identically zero
    RootSet roots;
    std::vector<cplx> coeffs;
    std::optional<Counterexample> certificate;
};

bool root_is_bad_ray(cplx z, const ToleranceConfig& cfg);
RayOutcome ray_test_homogeneous(const MaPoly& p, const std::vector<double>& a, const std::vector<double>& b,
                                const ToleranceConfig& cfg = {});

HppReport hpp_random_rays(const MaPoly& p, const RunOptions& opt, const ToleranceConfig& cfg = {});
HppReport hpp_random_elementary(const MaPoly& p, const RunOptions& opt, const ToleranceConfig& cfg = {},
                                int pivot = -1);
HppReport shifted_hpp_random(const GenPoly& p, const RunOptions& opt, const ToleranceConfig& cfg = {});

// Element used by the elementary method: the last one unless it is a loop
// or coloop of the support, in which case the highest usable index.
int elementary_pivot(const MaPoly& p);

struct Rank2Result {
    bool hpp = false;
    double lambda2 = 0.0;
    std::vector<double> eigenvalues;  // descending
};
Rank2Result rank2_exact(const MaPoly& p, const ToleranceConfig& cfg = {});
Rank2Result rank2_exact(const GenPoly& p, const ToleranceConfig& cfg = {});

// Cyclic Jacobi on a dense symmetric matrix (row-major). Returns eigenvalues
// in descending order; off_norm receives the final off-diagonal norm.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double* off_norm = nullptr);

struct LocalProbe {
    bool pass = true;
    std::uint64_t trials = 0;
    std::vector<cplx> witness;  // x on E with the pivot coordinate unused
    cplx ratio{0.0, 0.0};
};
LocalProbe local_hpp_probe(const MaPoly& p, int e, const RunOptions& opt, const ToleranceConfig& cfg = {});

struct GapCheck {
    bool pass = true;
    int r = -1;    // last nonzero slice before the gap
    int gap = 0;   // number of vanishing slices
};
GapCheck fettweis_gap_check(const GenPoly& p, int e);

struct BrownColbourn {
    std::vector<double> h_coeffs;  // ascending
    std::vector<cplx> h_roots;
    bool annulus_ok = true;
    double min_abs = 0.0, max_abs = 0.0;
    std::vector<double> i_coeffs;  // I_{r,n}(z) = sum C(n,k) z^k
    std::vector<cplx> i_roots;
    double i_min_re = 0.0;
    bool i_ok = true;  // every root has Re >= -1/2 - tol
};
BrownColbourn brown_colbourn_uniform(int r, int n, double tol = 1e-9);

bool counterexample_verify(const MaPoly& p, const Counterexample& cert, const ToleranceConfig& cfg = {});
bool counterexample_verify(const GenPoly& p, const Counterexample& cert, const ToleranceConfig& cfg = {});

// Per-trial seed derived from (seed, trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hpl
