#include "hpl/representations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace hpl {

namespace {

template <class Fn>
void for_each_ksubset(int n, int k, Fn&& fn)
{
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        fn(Mask(0));
        return;
    }
    Mask s = full_mask(k);
    const Mask limit = n >= 64 ? 0 : bit(n);
    while (true) {
        fn(s);
        // Gosper's hack
        Mask c = s & (~s + 1);
        Mask r = s + c;
        if (r == 0)
            break;
        Mask next = (((r ^ s) >> 2) / c) | r;
        if (limit && next >= limit)
            break;
        s = next;
    }
}

// Fraction-free elimination with row pivoting; exact for small integer
// entries.
cplx bareiss(std::vector<cplx> m, int k)
{
    if (k == 0)
        return 1.0;
    cplx prev = 1.0;
    double sign = 1.0;
    auto at = [&](int i, int j) -> cplx& { return m[std::size_t(i) * k + j]; };
    for (int i = 0; i < k; ++i) {
        int p = i;
        for (int r = i + 1; r < k; ++r)
            if (std::abs(at(r, i)) > std::abs(at(p, i)))
                p = r;
        if (at(p, i) == cplx(0.0))
            return 0.0;
        if (p != i) {
            for (int j = 0; j < k; ++j)
                std::swap(at(p, j), at(i, j));
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r) {
            for (int j = i + 1; j < k; ++j)
                at(r, j) = (at(r, j) * at(i, i) - at(r, i) * at(i, j)) / prev;
            at(r, i) = 0.0;
        }
        prev = at(i, i);
    }
    return sign * at(k - 1, k - 1);
}

void check_finite(const ComplexMatrix& a)
{
    for (const auto& z : a.data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("matrix entries must be finite");
}

void check_shape(int rows, int cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix: negative size");
    if (rows > cols)
        throw std::invalid_argument("matrix: more rows than columns");
    check_ground(cols);
}

}  // namespace

void check_nonneg(const NonnegMatrix& m)
{
    for (double v : m.data)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("matrix entries must be finite and nonnegative");
}

cplx minor_det(const ComplexMatrix& a, Mask s)
{
    if (popcount(s) != a.rows || (a.cols < 64 && (s >> a.cols)))
        throw std::invalid_argument("minor_det: column set does not match the row count");
    auto cols = members_of(s);
    const int k = a.rows;
    std::vector<cplx> m(std::size_t(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m[std::size_t(i) * k + j] = a(i, cols[j]);
    return bareiss(std::move(m), k);
}

double permanent(const NonnegMatrix& l)
{
    if (l.rows != l.cols)
        throw std::invalid_argument("permanent: matrix must be square");
    const int k = l.rows;
    if (k > 20)
        throw std::invalid_argument("permanent: size above 20");
    if (k == 0)
        return 1.0;
    // Ryser, columns toggled in Gray-code order.
    std::vector<double> rowsum(k, 0.0);
    double total = 0.0;
    Mask gray = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k); ++i) {
        int j = __builtin_ctzll(i);
        gray ^= bit(j);
        const double sgn = has(gray, j) ? 1.0 : -1.0;
        for (int r = 0; r < k; ++r)
            rowsum[r] += sgn * l(r, j);
        double prod = 1.0;
        for (int r = 0; r < k && prod != 0.0; ++r)
            prod *= rowsum[r];
        total += ((k - popcount(gray)) % 2 ? -1.0 : 1.0) * prod;
    }
    return total;
}

double minor_per(const NonnegMatrix& l, Mask s)
{
    if (popcount(s) != l.rows || (l.cols < 64 && (s >> l.cols)))
        throw std::invalid_argument("minor_per: column set does not match the row count");
    auto cols = members_of(s);
    NonnegMatrix sub(l.rows, l.rows);
    for (int i = 0; i < l.rows; ++i)
        for (int j = 0; j < l.rows; ++j)
            sub(i, j) = l(i, cols[j]);
    return permanent(sub);
}

cplx cauchy_binet_value(const ComplexMatrix& a, const std::vector<cplx>& x)
{
    if (int(x.size()) != a.cols)
        throw std::invalid_argument("cauchy_binet_value: point size mismatch");
    const int r = a.rows;
    std::vector<cplx> g(std::size_t(r) * r, 0.0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < a.cols; ++k)
                s += a(i, k) * x[k] * std::conj(a(j, k));
            g[std::size_t(i) * r + j] = s;
        }
    return bareiss(std::move(g), r);
}

MaPoly det_construction(const ComplexMatrix& a)
{
    check_shape(a.rows, a.cols);
    check_finite(a);
    MaPoly out(a.cols);
    for_each_ksubset(a.cols, a.rows, [&](Mask s) {
        const double v = std::norm(minor_det(a, s));
        if (v != 0.0)
            out.add(s, v);
    });
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> re(0.1, 1.0), im(-1.0, 1.0);
    std::vector<cplx> x(a.cols);
    for (auto& z : x)
        z = cplx(re(rng), im(rng));
    double scale = 0.0;
    for (const auto& [s, c] : out.terms()) {
        double t = std::abs(c);
        for (int e : members_of(s))
            t *= std::abs(x[e]);
        scale += t;
    }
    const cplx direct = cauchy_binet_value(a, x);
    if (std::abs(direct - out.eval(x)) > 1e-8 * std::max(scale, std::abs(direct)))
        throw std::logic_error("det_construction: Cauchy-Binet cross-check failed");
    return out;
}

MaPoly per_construction(const NonnegMatrix& l)
{
    check_shape(l.rows, l.cols);
    check_nonneg(l);
    MaPoly out(l.cols);
    for_each_ksubset(l.cols, l.rows, [&](Mask s) {
        const double v = minor_per(l, s);
        if (v != 0.0)
            out.add(s, v);
    });
    return out;
}

bool unimodular_minor_check(const ComplexMatrix& a, double tol)
{
    check_shape(a.rows, a.cols);
    check_finite(a);
    bool ok = true;
    for_each_ksubset(a.cols, a.rows, [&](Mask s) {
        if (!ok)
            return;
        const double v = std::abs(minor_det(a, s));
        if (v > tol && std::abs(v - 1.0) > tol)
            ok = false;
    });
    return ok;
}

// ---------------------------------------------------------------- niceness

std::string status_name(NicenessSolution::Status s)
{
    switch (s) {
    case NicenessSolution::Status::nice:
        return "nice";
    case NicenessSolution::Status::infeasible_nonneg:
        return "infeasible-nonneg";
    case NicenessSolution::Status::inconsistent:
        return "inconsistent";
    }
    return "?";
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns among the first
// `cols` columns.
std::vector<int> rref(RMatrix& m, int cols)
{
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < cols && row < int(m.size()); ++c) {
        int p = -1;
        for (int r = row; r < int(m.size()); ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][c];
        for (auto& v : m[row])
            v *= inv;
        for (int r = 0; r < int(m.size()); ++r) {
            if (r == row || m[r][c] == 0)
                continue;
            const Rational f = m[r][c];
            for (std::size_t j = c; j < m[r].size(); ++j)
                m[r][j] -= f * m[row][j];
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

// Solve the leading rank rows of a reduced system restricted to columns
// `cols`; other unknowns are zero. Empty result if singular.
std::optional<std::vector<Rational>> basic_solution(const RMatrix& red, int rank, int k, const std::vector<int>& cols)
{
    RMatrix sub(rank, std::vector<Rational>(rank + 1));
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j)
            sub[i][j] = red[i][cols[j]];
        sub[i][rank] = red[i][k];
    }
    auto piv = rref(sub, rank);
    if (int(piv.size()) != rank)
        return std::nullopt;
    std::vector<Rational> x(k, 0);
    for (int i = 0; i < rank; ++i)
        x[cols[i]] = sub[i][rank];
    return x;
}

double binom(int n, int k)
{
    double v = 1.0;
    for (int i = 1; i <= k; ++i)
        v = v * (n - k + i) / i;
    return v;
}

// Projected gradient for min ||A x - 1|| subject to x >= 0.
std::vector<double> nnls_probe(const std::vector<std::vector<int>>& rows, int k, double* resid)
{
    std::vector<double> x(k, 0.0), g(k);
    double lip = 0.0;
    for (const auto& r : rows) {
        double s = 0.0;
        for (int v : r)
            s += v;
        lip += s * s;
    }
    const double step = lip > 0.0 ? 1.0 / lip : 1.0;
    auto residual = [&] {
        double s = 0.0;
        for (const auto& r : rows) {
            double t = -1.0;
            for (int j = 0; j < k; ++j)
                t += r[j] * x[j];
            s += t * t;
        }
        return std::sqrt(s);
    };
    for (int it = 0; it < 200000; ++it) {
        std::fill(g.begin(), g.end(), 0.0);
        for (const auto& r : rows) {
            double t = -1.0;
            for (int j = 0; j < k; ++j)
                t += r[j] * x[j];
            for (int j = 0; j < k; ++j)
                g[j] += r[j] * t;
        }
        for (int j = 0; j < k; ++j)
            x[j] = std::max(0.0, x[j] - step * g[j]);
        if (it % 1000 == 0 && residual() < 1e-12)
            break;
    }
    *resid = residual();
    return x;
}

}  // namespace

NicenessSolution solve_unit_system(const std::vector<std::vector<int>>& rows, int k)
{
    NicenessSolution sol;
    sol.equations = int(rows.size());
    RMatrix m;
    for (const auto& r : rows) {
        if (int(r.size()) != k)
            throw std::invalid_argument("solve_unit_system: row length mismatch");
        std::vector<Rational> row(k + 1);
        for (int j = 0; j < k; ++j)
            row[j] = r[j];
        row[k] = 1;
        m.push_back(std::move(row));
    }
    auto piv = rref(m, k);
    const int rank = int(piv.size());
    for (int r = rank; r < int(m.size()); ++r)
        if (m[r][k] != 0) {
            sol.status = NicenessSolution::Status::inconsistent;
            sol.kernel_dim = k - rank;
            return sol;
        }
    sol.kernel_dim = k - rank;
    sol.unique = sol.kernel_dim == 0;
    auto particular = *basic_solution(m, rank, k, piv);
    auto nonneg = [](const std::vector<Rational>& x) {
        return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; });
    };
    if (sol.unique) {
        sol.weights = particular;
        sol.status = nonneg(particular) ? NicenessSolution::Status::nice : NicenessSolution::Status::infeasible_nonneg;
        return sol;
    }
    if (sol.kernel_dim <= 6 && binom(k, rank) <= 2e5) {
        // Enumerate basic solutions; the nonneg ones are the vertices of the
        // feasible polytope.
        std::set<std::vector<Rational>> vertices;
        for_each_ksubset(k, rank, [&](Mask s) {
            auto cols = members_of(s);
            auto x = basic_solution(m, rank, k, cols);
            if (x && nonneg(*x))
                vertices.insert(std::move(*x));
        });
        if (vertices.empty()) {
            sol.weights = particular;
            sol.status = NicenessSolution::Status::infeasible_nonneg;
            return sol;
        }
        std::vector<Rational> mean(k, 0);
        for (const auto& v : vertices)
            for (int j = 0; j < k; ++j)
                mean[j] += v[j];
        for (auto& v : mean)
            v /= Rational(vertices.size());
        sol.weights = mean;
        sol.status = NicenessSolution::Status::nice;
        return sol;
    }
    sol.heuristic = true;
    double resid = 0.0;
    auto x = nnls_probe(rows, k, &resid);
    if (resid < 1e-9) {
        for (double v : x)
            sol.weights.emplace_back(v);
        sol.status = NicenessSolution::Status::nice;
    } else {
        sol.weights = particular;
        sol.status = NicenessSolution::Status::infeasible_nonneg;
    }
    return sol;
}

NicenessSolution nice_principal_solve(const Matroid& m, Mask f)
{
    f &= full_mask(m.n());
    if (!f)
        throw std::invalid_argument("nice_principal_solve: F is empty");
    auto unknowns = members_of(f);
    std::set<Mask> truncated;
    for (Mask b : m.bases())
        for (int e : unknowns)
            if (has(b, e))
                truncated.insert(b & ~bit(e));
    std::vector<std::vector<int>> rows;
    for (Mask bp : truncated) {
        std::vector<int> row(unknowns.size(), 0);
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if (!has(bp, unknowns[j]) && m.is_basis(bp | bit(unknowns[j])))
                row[j] = 1;
        rows.push_back(std::move(row));
    }
    auto sol = solve_unit_system(rows, int(unknowns.size()));
    sol.unknowns = unknowns;
    return sol;
}

NicenessSolution nice_cotruncation_solve(const Matroid& m, Mask d)
{
    d &= full_mask(m.n());
    if (!d)
        throw std::invalid_argument("nice_cotruncation_solve: D is empty");
    auto unknowns = members_of(d);
    std::set<Mask> cotruncated;
    for (Mask b : m.bases())
        for (int e : unknowns)
            if (!has(b, e))
                cotruncated.insert(b | bit(e));
    std::vector<std::vector<int>> rows;
    for (Mask bp : cotruncated) {
        std::vector<int> row(unknowns.size(), 0);
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if (has(bp, unknowns[j]) && m.is_basis(bp & ~bit(unknowns[j])))
                row[j] = 1;
        rows.push_back(std::move(row));
    }
    auto sol = solve_unit_system(rows, int(unknowns.size()));
    sol.unknowns = unknowns;
    return sol;
}

// ---------------------------------------------------------------- transversal weights

NonnegMatrix unit_weights(const Presentation& pres)
{
    NonnegMatrix w(int(pres.sets.size()), pres.n);
    for (int j = 0; j < w.rows; ++j)
        for (int i : members_of(pres.sets[j]))
            w(j, i) = 1.0;
    return w;
}

NonnegMatrix m_family_weights(int n1, int n2)
{
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("m_family_weights: need n1, n2 >= 1");
    const int n = n1 + n2 + 2;
    NonnegMatrix w(3, n);
    w(0, 0) = 1.0;
    for (int i = 1; i <= n1 + n2; ++i)
        w(0, i) = 0.5;
    for (int i = 1; i <= n1; ++i)
        w(1, i) = 1.0;
    w(1, n - 1) = 1.0;
    for (int i = n1 + 1; i <= n1 + n2 + 1; ++i)
        w(2, i) = 1.0;
    return w;
}

TransversalCheck transversal_weight_verify(const Presentation& pres, const NonnegMatrix& weights)
{
    check_ground(pres.n);
    if (weights.rows != int(pres.sets.size()) || weights.cols != pres.n)
        throw std::invalid_argument("transversal_weight_verify: weight matrix shape mismatch");
    check_nonneg(weights);
    for (int j = 0; j < weights.rows; ++j)
        for (int i = 0; i < pres.n; ++i)
            if (weights(j, i) != 0.0 && !has(pres.sets[j], i))
                throw std::invalid_argument("transversal_weight_verify: weight on a non-edge");
    const Matroid m = transversal_matroid(pres);
    const int r = m.rank();
    TransversalCheck out;
    out.extra_rows = weights.rows > r;
    for (Mask s : m.bases()) {
        auto cols = members_of(s);
        double c = 0.0;
        // Sum over the row subsets that S can be matched into.
        for_each_ksubset(weights.rows, r, [&](Mask rs) {
            auto rws = members_of(rs);
            NonnegMatrix sub(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    sub(i, j) = weights(rws[i], cols[j]);
            c += permanent(sub);
        });
        out.values.emplace_back(s, c);
    }
    out.uniform = !out.values.empty();
    const double ref = out.values.empty() ? 0.0 : out.values.front().second;
    for (const auto& [s, c] : out.values)
        if (c == 0.0 || std::abs(c - ref) > 1e-9 * std::abs(ref))
            out.uniform = false;
    return out;
}

// ---------------------------------------------------------------- matching polynomial

MaPoly matching_polynomial(const Graph& g, const std::vector<double>& lambda)
{
    const int nv = g.vertices;
    if (nv < 0 || nv > 20)
        throw std::invalid_argument("matching_polynomial: at most 20 vertices");
    if (lambda.size() != g.edges.size())
        throw std::invalid_argument("matching_polynomial: one weight per edge");
    for (double l : lambda)
        if (!(l >= 0.0) || !std::isfinite(l))
            throw std::invalid_argument("matching_polynomial: weights must be nonnegative");
    for (const auto& [u, v] : g.edges) {
        if (u == v)
            throw std::invalid_argument("matching_polynomial: loop present");
        if (u < 0 || v < 0 || u >= nv || v >= nv)
            throw std::out_of_range("matching_polynomial: edge endpoint outside vertex set");
    }
    const int ne = int(g.edges.size());
    // M(k, alive): matchings using edges k.. inside the alive vertices.
    std::map<std::pair<int, Mask>, MaPoly> memo;
    auto rec = [&](auto&& self, int k, Mask alive) -> MaPoly {
        if (k == ne)
            return MaPoly::constant(nv, 1.0);
        auto key = std::make_pair(k, alive);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        MaPoly res = self(self, k + 1, alive);
        const auto [u, v] = g.edges[k];
        if (has(alive, u) && has(alive, v) && lambda[k] != 0.0) {
            const Mask uv = bit(u) | bit(v);
            MaPoly rest = self(self, k + 1, alive & ~uv);
            for (const auto& [s, c] : rest.terms())
                res.add(s | uv, c * lambda[k]);
        }
        memo.emplace(key, res);
        return res;
    };
    return rec(rec, 0, full_mask(nv));
}

MaPoly complementary_matching_polynomial(const Graph& g, const std::vector<double>& lambda)
{
    return dual(matching_polynomial(g, lambda));
}

}  // namespace hpl
