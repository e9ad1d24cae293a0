#pragma once

#include <complex>
#include <vector>

namespace hpl {

// Roots of c[0] + c[1] z + ... + c[d] z^d.
struct RootSet {
    std::vector<std::complex<double>> roots;
    double residual = 0.0;  // max |p(root)|
    int iterations = 0;
    bool converged = true;
};

// Aberth-Ehrlich simultaneous iteration. Trailing zero coefficients are
// trimmed and zero roots deflated exactly. Throws std::invalid_argument if
// every coefficient is zero.
RootSet find_roots(std::vector<std::complex<double>> coeffs, int max_iter = 2000);

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z);

}  // namespace hpl
