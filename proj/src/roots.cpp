#include "hpl/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hpl {

using cplx = std::complex<double>;

cplx horner(const std::vector<cplx>& c, cplx z)
{
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

namespace {

// p(z), p'(z) and a running bound on the rounding error of p(z).
struct Eval {
    cplx p, dp;
    double err;
};

Eval eval_with_bound(const std::vector<cplx>& c, const std::vector<double>& absc, cplx z)
{
    cplx p = 0.0, dp = 0.0;
    double bound = 0.0;
    double az = std::abs(z);
    for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
        bound = bound * az + absc[k];
    }
    return {p, dp, bound};
}

}  // namespace

RootSet find_roots(std::vector<cplx> c, int max_iter)
{
    while (!c.empty() && c.back() == cplx(0.0))
        c.pop_back();
    if (c.empty())
        throw std::invalid_argument("find_roots: zero polynomial");

    RootSet out;
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == cplx(0.0))
        ++zeros;
    out.roots.assign(zeros, cplx(0.0));
    std::vector<cplx> q(c.begin() + long(zeros), c.end());
    const int deg = int(q.size()) - 1;
    if (deg <= 0)
        return out;

    const cplx lead = q.back();
    for (auto& v : q)
        v /= lead;
    std::vector<double> absq(q.size());
    for (std::size_t k = 0; k < q.size(); ++k)
        absq[k] = std::abs(q[k]);

    double radius = 0.0;
    for (int k = 0; k < deg; ++k)
        radius = std::max(radius, absq[k]);
    radius += 1.0;

    // The start rotation keeps the initial circle off any symmetry axis.
    const double twist = std::numbers::sqrt2 - 1.0;
    std::vector<cplx> z(deg);
    for (int k = 0; k < deg; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / deg + twist);

    const double eps = std::numeric_limits<double>::epsilon();
    const double gamma = 4.0 * (deg + 1) * eps;
    std::vector<char> done(deg, 0);
    int live = deg;
    int it = 0;
    for (; it < max_iter && live > 0; ++it) {
        for (int i = 0; i < deg; ++i) {
            if (done[i])
                continue;
            Eval ev = eval_with_bound(q, absq, z[i]);
            if (std::abs(ev.p) <= gamma * ev.err) {
                done[i] = 1;
                --live;
                continue;
            }
            if (ev.dp == cplx(0.0)) {
                z[i] += std::polar(radius * 1e-3, twist * (i + 1));
                continue;
            }
            cplx ratio = ev.p / ev.dp;
            cplx s = 0.0;
            for (int j = 0; j < deg; ++j)
                if (j != i)
                    s += 1.0 / (z[i] - z[j]);
            cplx w = ratio / (1.0 - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                w = ratio;
            z[i] -= w;
            if (std::abs(w) <= eps * std::abs(z[i])) {
                done[i] = 1;
                --live;
            }
        }
    }
    out.iterations = it;
    out.converged = live == 0;
    out.roots.insert(out.roots.end(), z.begin(), z.end());

    for (const auto& r : out.roots)
        out.residual = std::max(out.residual, std::abs(horner(c, r)));
    return out;
}

}  // namespace hpl
