#pragma once

#include "hpl/catalog.hpp"
#include "hpl/fixtures.hpp"

#include <doctest.h>

#include <initializer_list>
#include <random>

namespace th {

using namespace hpl;

struct Term {
    std::vector<int> s;
    cplx c = 1.0;
};

inline MaPoly P(int n, std::initializer_list<Term> terms)
{
    MaPoly p(n);
    for (const auto& t : terms)
        p.add(mask_of(t.s), t.c);
    return p;
}

struct GTerm {
    std::vector<int> e;
    cplx c = 1.0;
};

inline GenPoly G(std::initializer_list<GTerm> terms)
{
    int n = terms.size() ? int(terms.begin()->e.size()) : 0;
    GenPoly p(n);
    for (const auto& t : terms)
        p.add(MultiIndex(t.e), t.c);
    return p;
}

inline MaPoly random_ma(std::mt19937_64& rng, int n, double density = 0.5, bool complex_coeffs = true)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0), coin(0.0, 1.0);
    MaPoly p(n);
    for (Mask s = 0; s <= full_mask(n); ++s)
        if (coin(rng) < density)
            p.add(s, cplx(std::round(4 * u(rng)), complex_coeffs ? std::round(4 * u(rng)) : 0.0));
    return p;
}

inline std::vector<cplx> random_point(std::mt19937_64& rng, int n)
{
    std::uniform_real_distribution<double> re(0.05, 1.0), im(-1.0, 1.0);
    std::vector<cplx> x(n);
    for (auto& z : x)
        z = cplx(re(rng), im(rng));
    return x;
}

inline bool same_terms(const MaPoly& a, const MaPoly& b) { return a == b; }

}  // namespace th
