#pragma once

#include "hpl/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hpl {

struct FixtureParams {
    std::optional<double> eps;  // perturbation size; each fixture has its own default grid
    std::optional<double> a;    // second perturbation parameter where applicable
    std::uint64_t seed = 1;
    std::uint64_t trials = 0;  // 0 = fixture default (sampling fixtures only)
    ToleranceConfig cfg;
};

struct CaseResult {
    std::string fixture;
    std::string label;
    bool pass = false;
    json detail;
};

std::vector<std::string> fixture_names();
// Throws std::invalid_argument for unknown names.
std::vector<CaseResult> run_fixture(const std::string& name, const FixtureParams& p = {});

// Characteristic vector of the listed elements, scaled by w.
std::vector<double> chi(int n, const std::vector<int>& members, double w = 1.0);

// Ray polynomial summary: coefficients and roots.
json ray_detail(const std::vector<cplx>& coeffs, const RootSet& roots);

// Largest |Im| among the roots.
double max_imag(const std::vector<cplx>& roots);

// Perturbed ray on elements of the F7 family (0-indexed): x = chi{0,1,4} + eps chi{3},
// y = chi{2,5,6} + a eps chi{3}.
std::pair<std::vector<double>, std::vector<double>> f7_family_ray(double eps, double a);

// Rank-2 polynomial with coefficient mu on x0 x1 and 1 on every other pair.
MaPoly mu_family(int n, double mu);

}  // namespace hpl
