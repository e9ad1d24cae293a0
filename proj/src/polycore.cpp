#include "hpl/polycore.hpp"

#include "hpl/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hpl {

Mask mask_of(const std::vector<int>& members)
{
    Mask s = 0;
    for (int e : members) {
        if (e < 0 || e >= kMaxGround)
            throw std::out_of_range("element " + std::to_string(e) + " outside ground-set capacity");
        s |= bit(e);
    }
    return s;
}

std::vector<int> members_of(Mask s)
{
    std::vector<int> out;
    while (s) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

Mask drop_index(Mask s, int e)
{
    Mask low = s & (bit(e) - 1);
    Mask high = (s >> (e + 1)) << e;
    return low | high;
}

Mask insert_index(Mask s, int e)
{
    Mask low = s & (bit(e) - 1);
    Mask high = (s >> e) << (e + 1);
    return low | high;
}

void check_ground(int n)
{
    if (n < 0 || n > kMaxGround)
        throw std::length_error("ground set size " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxGround));
}

static void check_element(int e, int n, const char* what)
{
    if (e < 0 || e >= n)
        throw std::out_of_range(std::string(what) + ": element " + std::to_string(e) +
                                " not in ground set of size " + std::to_string(n));
}

// ---------------------------------------------------------------- MultiIndex

MultiIndex MultiIndex::from_mask(Mask s, int n)
{
    MultiIndex m = zero(n);
    for (int e : members_of(s))
        m.exps[e] = 1;
    return m;
}

int MultiIndex::total() const
{
    int t = 0;
    for (int v : exps)
        t += v;
    return t;
}

bool MultiIndex::is_01() const
{
    return std::all_of(exps.begin(), exps.end(), [](int v) { return v == 0 || v == 1; });
}

Mask MultiIndex::to_mask() const
{
    Mask s = 0;
    for (int e = 0; e < size(); ++e)
        if (exps[e])
            s |= bit(e);
    return s;
}

// ---------------------------------------------------------------- MaPoly

MaPoly::MaPoly(int n) : n_(n) { check_ground(n); }

MaPoly MaPoly::constant(int n, cplx c)
{
    MaPoly p(n);
    p.add(0, c);
    return p;
}

MaPoly MaPoly::monomial(int n, Mask s, cplx c)
{
    MaPoly p(n);
    p.add(s, c);
    return p;
}

MaPoly MaPoly::elementary(int r, int n)
{
    MaPoly p(n);
    if (r < 0 || r > n)
        return p;
    if (r == 0) {
        p.add(0, 1.0);
        return p;
    }
    // Gosper's hack over r-subsets.
    Mask s = (Mask(1) << r) - 1;
    const Mask limit = Mask(1) << n;
    while (s < limit) {
        p.add(s, 1.0);
        Mask c = s & -s;
        Mask rr = s + c;
        s = (((rr ^ s) >> 2) / c) | rr;
    }
    return p;
}

cplx MaPoly::coeff(Mask s) const
{
    auto it = terms_.find(s);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

void MaPoly::add(Mask s, cplx c)
{
    if (s & ~full_mask(n_))
        throw std::out_of_range("subset outside ground set of size " + std::to_string(n_));
    if (c == cplx(0.0))
        return;
    auto [it, fresh] = terms_.try_emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second == cplx(0.0))
            terms_.erase(it);
    }
}

void MaPoly::set(Mask s, cplx c)
{
    if (s & ~full_mask(n_))
        throw std::out_of_range("subset outside ground set of size " + std::to_string(n_));
    if (c == cplx(0.0))
        terms_.erase(s);
    else
        terms_[s] = c;
}

int MaPoly::degree() const
{
    int d = -1;
    for (const auto& [s, c] : terms_)
        d = std::max(d, popcount(s));
    return d;
}

bool MaPoly::homogeneous() const
{
    int d = -1;
    for (const auto& [s, c] : terms_) {
        if (d < 0)
            d = popcount(s);
        else if (popcount(s) != d)
            return false;
    }
    return true;
}

std::vector<Mask> MaPoly::support() const
{
    std::vector<Mask> out;
    out.reserve(terms_.size());
    for (const auto& [s, c] : terms_)
        out.push_back(s);
    return out;
}

cplx MaPoly::eval(const std::vector<cplx>& x) const
{
    if (int(x.size()) != n_)
        throw std::invalid_argument("evaluate: point has " + std::to_string(x.size()) +
                                    " coordinates, ground set has " + std::to_string(n_));
    cplx sum = 0.0;
    for (const auto& [s, c] : terms_) {
        cplx m = c;
        for (Mask t = s; t; t &= t - 1)
            m *= x[__builtin_ctzll(t)];
        sum += m;
    }
    return sum;
}

MaPoly& MaPoly::operator+=(const MaPoly& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("ground-set mismatch");
    for (const auto& [s, c] : o.terms_)
        add(s, c);
    return *this;
}

MaPoly& MaPoly::operator-=(const MaPoly& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("ground-set mismatch");
    for (const auto& [s, c] : o.terms_)
        add(s, -c);
    return *this;
}

MaPoly& MaPoly::operator*=(cplx c)
{
    if (c == cplx(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second == cplx(0.0))
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

MaPoly MaPoly::widen(int n) const
{
    if (n < n_)
        throw std::invalid_argument("widen: cannot shrink ground set");
    MaPoly p(n);
    p.terms_ = terms_;
    return p;
}

MaPoly operator+(MaPoly a, const MaPoly& b) { return a += b; }
MaPoly operator-(MaPoly a, const MaPoly& b) { return a -= b; }
MaPoly operator*(MaPoly a, cplx c) { return a *= c; }

MaPoly operator*(const MaPoly& a, const MaPoly& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("ground-set mismatch");
    MaPoly out(a.n());
    for (const auto& [s, c] : a.terms())
        for (const auto& [t, d] : b.terms()) {
            if (s & t)
                throw std::domain_error("product is not multiaffine");
            out.add(s | t, c * d);
        }
    return out;
}

// ---------------------------------------------------------------- GenPoly

GenPoly::GenPoly(int n) : n_(n) { check_ground(n); }

GenPoly GenPoly::constant(int n, cplx c)
{
    GenPoly p(n);
    p.add(MultiIndex::zero(n), c);
    return p;
}

GenPoly GenPoly::monomial(const MultiIndex& m, cplx c)
{
    GenPoly p(m.size());
    p.add(m, c);
    return p;
}

GenPoly GenPoly::variable(int n, int e)
{
    check_element(e, n, "variable");
    MultiIndex m = MultiIndex::zero(n);
    m[e] = 1;
    return monomial(m);
}

GenPoly GenPoly::from(const MaPoly& p)
{
    GenPoly g(p.n());
    for (const auto& [s, c] : p.terms())
        g.add(MultiIndex::from_mask(s, p.n()), c);
    return g;
}

cplx GenPoly::coeff(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

void GenPoly::add(const MultiIndex& m, cplx c)
{
    if (m.size() != n_)
        throw std::invalid_argument("multi-index length " + std::to_string(m.size()) +
                                    " differs from ground set size " + std::to_string(n_));
    for (int v : m.exps)
        if (v < 0)
            throw std::invalid_argument("negative exponent");
    if (c == cplx(0.0))
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == cplx(0.0))
            terms_.erase(it);
    }
}

int GenPoly::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.total());
    return d;
}

int GenPoly::degree_in(int e) const
{
    check_element(e, n_, "degree_in");
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m[e]);
    return d;
}

bool GenPoly::homogeneous() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d < 0)
            d = m.total();
        else if (m.total() != d)
            return false;
    }
    return true;
}

bool GenPoly::multiaffine() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_01(); });
}

cplx GenPoly::eval(const std::vector<cplx>& x) const
{
    if (int(x.size()) != n_)
        throw std::invalid_argument("evaluate: point has " + std::to_string(x.size()) +
                                    " coordinates, ground set has " + std::to_string(n_));
    cplx sum = 0.0;
    for (const auto& [m, c] : terms_) {
        cplx v = c;
        for (int e = 0; e < n_; ++e)
            for (int k = 0; k < m[e]; ++k)
                v *= x[e];
        sum += v;
    }
    return sum;
}

GenPoly& GenPoly::operator+=(const GenPoly& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("ground-set mismatch");
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("ground-set mismatch");
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

GenPoly& GenPoly::operator*=(cplx c)
{
    if (c == cplx(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second == cplx(0.0))
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

MaPoly GenPoly::to_multiaffine() const
{
    MaPoly p(n_);
    for (const auto& [m, c] : terms_) {
        if (!m.is_01())
            throw std::domain_error("polynomial is not multiaffine");
        p.add(m.to_mask(), c);
    }
    return p;
}

GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
GenPoly operator*(GenPoly a, cplx c) { return a *= c; }

GenPoly operator*(const GenPoly& a, const GenPoly& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("ground-set mismatch");
    GenPoly out(a.n());
    for (const auto& [m, c] : a.terms())
        for (const auto& [k, d] : b.terms()) {
            MultiIndex s = m;
            for (int e = 0; e < a.n(); ++e)
                s[e] += k[e];
            out.add(s, c * d);
        }
    return out;
}

GenPoly pow(const GenPoly& p, int k)
{
    if (k < 0)
        throw std::invalid_argument("negative power");
    GenPoly out = GenPoly::constant(p.n(), 1.0);
    for (int i = 0; i < k; ++i)
        out = out * p;
    return out;
}

void check_weighting(const Weighting& w, int n)
{
    if (int(w.size()) != n)
        throw std::invalid_argument("weighting has " + std::to_string(w.size()) +
                                    " entries, ground set has " + std::to_string(n));
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!std::isfinite(w[i]) || w[i] < 0.0)
            throw std::invalid_argument("weight " + std::to_string(i) + " is negative or not finite");
}

// ---------------------------------------------------------------- operations

GenPoly leading_part(const GenPoly& p)
{
    GenPoly out(p.n());
    const int d = p.degree();
    for (const auto& [m, c] : p.terms())
        if (m.total() == d)
            out.add(m, c);
    return out;
}

MaPoly slice_without(const MaPoly& p, int e)
{
    check_element(e, p.n(), "slice");
    MaPoly out(p.n());
    for (const auto& [s, c] : p.terms())
        if (!has(s, e))
            out.add(s, c);
    return out;
}

MaPoly slice_with(const MaPoly& p, int e)
{
    check_element(e, p.n(), "slice");
    MaPoly out(p.n());
    for (const auto& [s, c] : p.terms())
        if (has(s, e))
            out.add(s & ~bit(e), c);
    return out;
}

MaPoly delete_element(const MaPoly& p, int e)
{
    check_element(e, p.n(), "delete");
    MaPoly out(p.n() - 1);
    for (const auto& [s, c] : p.terms())
        if (!has(s, e))
            out.add(drop_index(s, e), c);
    return out;
}

MaPoly contract_element(const MaPoly& p, int e)
{
    check_element(e, p.n(), "contract");
    MaPoly out(p.n() - 1);
    for (const auto& [s, c] : p.terms())
        if (has(s, e))
            out.add(drop_index(s & ~bit(e), e), c);
    return out;
}

MaPoly dual(const MaPoly& p)
{
    MaPoly out(p.n());
    const Mask all = full_mask(p.n());
    for (const auto& [s, c] : p.terms())
        out.add(all & ~s, c);
    return out;
}

namespace {

struct Joined {
    MaPoly p, q;
    int e;
    std::vector<int> p_map, q_map;
};

// Puts P and Q on a common ground set that shares only e.
Joined join(const MaPoly& p, const MaPoly& q, int ep, int eq)
{
    check_element(ep, p.n(), "connection (P side)");
    check_element(eq, q.n(), "connection (Q side)");
    const int total = p.n() + q.n() - 1;
    check_ground(total);
    Joined j{MaPoly(total), MaPoly(total), ep, {}, {}};
    j.p_map.resize(p.n());
    for (int i = 0; i < p.n(); ++i)
        j.p_map[i] = i;
    j.q_map.resize(q.n());
    int next = p.n();
    for (int i = 0; i < q.n(); ++i)
        j.q_map[i] = (i == eq) ? ep : next++;
    j.p = p.widen(total);
    for (const auto& [s, c] : q.terms()) {
        Mask t = 0;
        for (int i : members_of(s))
            t |= bit(j.q_map[i]);
        j.q.add(t, c);
    }
    return j;
}

MaPoly times_var(const MaPoly& p, int e)
{
    MaPoly out(p.n());
    for (const auto& [s, c] : p.terms()) {
        if (has(s, e))
            throw std::domain_error("product is not multiaffine");
        out.add(s | bit(e), c);
    }
    return out;
}

}  // namespace

Connection parallel_connection(const MaPoly& p, const MaPoly& q, int ep, int eq)
{
    Joined j = join(p, q, ep, eq);
    MaPoly pd = slice_without(j.p, j.e), pc = slice_with(j.p, j.e);
    MaPoly qd = slice_without(j.q, j.e), qc = slice_with(j.q, j.e);
    MaPoly r = pd * qc + pc * qd + times_var(pc * qc, j.e);
    return {std::move(r), std::move(j.p_map), std::move(j.q_map)};
}

Connection series_connection(const MaPoly& p, const MaPoly& q, int ep, int eq)
{
    Joined j = join(p, q, ep, eq);
    MaPoly pd = slice_without(j.p, j.e), pc = slice_with(j.p, j.e);
    MaPoly qd = slice_without(j.q, j.e), qc = slice_with(j.q, j.e);
    MaPoly r = pd * qd + times_var(pd * qc + pc * qd, j.e);
    return {std::move(r), std::move(j.p_map), std::move(j.q_map)};
}

Connection two_sum(const MaPoly& p, const MaPoly& q, int ep, int eq)
{
    Connection par = parallel_connection(p, q, ep, eq);
    Connection out{delete_element(par.poly, ep), par.p_map, par.q_map};
    for (auto* map : {&out.p_map, &out.q_map})
        for (int& v : *map)
            v = (v == ep) ? -1 : (v > ep ? v - 1 : v);
    return out;
}

MaPoly principal_truncation(const MaPoly& p, const Weighting& lambda)
{
    check_weighting(lambda, p.n());
    MaPoly out(p.n());
    for (int e = 0; e < p.n(); ++e)
        if (lambda[e] != 0.0)
            out += slice_with(p, e) * lambda[e];
    return out;
}

MaPoly principal_extension(const MaPoly& p, const Weighting& lambda)
{
    check_ground(p.n() + 1);
    MaPoly tr = principal_truncation(p, lambda).widen(p.n() + 1);
    return p.widen(p.n() + 1) + times_var(tr, p.n());
}

MaPoly principal_cotruncation(const MaPoly& p, const Weighting& lambda)
{
    check_weighting(lambda, p.n());
    MaPoly out(p.n());
    for (int e = 0; e < p.n(); ++e)
        if (lambda[e] != 0.0)
            out += times_var(slice_without(p, e), e) * lambda[e];
    return out;
}

MaPoly principal_coextension(const MaPoly& p, const Weighting& lambda)
{
    check_ground(p.n() + 1);
    MaPoly cotr = principal_cotruncation(p, lambda).widen(p.n() + 1);
    return cotr + times_var(p.widen(p.n() + 1), p.n());
}

GenPoly multiaffine_part(const GenPoly& p, Mask a)
{
    if (a & ~full_mask(p.n()))
        throw std::out_of_range("multiaffine_part: subset outside ground set");
    GenPoly out(p.n());
    for (const auto& [m, c] : p.terms()) {
        bool keep = true;
        for (int e : members_of(a))
            if (m[e] > 1)
                keep = false;
        if (keep)
            out.add(m, c);
    }
    return out;
}

GenPoly fold_mod2(const GenPoly& p, Mask a)
{
    if (a & ~full_mask(p.n()))
        throw std::out_of_range("fold_mod2: subset outside ground set");
    GenPoly out(p.n());
    for (const auto& [m, c] : p.terms()) {
        MultiIndex k = m;
        for (int e : members_of(a))
            k[e] %= 2;
        out.add(k, c);
    }
    return out;
}

MaPoly convolution(const MaPoly& p, const MaPoly& q)
{
    if (p.n() != q.n())
        throw std::invalid_argument("convolution: ground-set mismatch");
    MaPoly out(p.n());
    for (const auto& [s, c] : p.terms())
        for (const auto& [t, d] : q.terms())
            out.add(s ^ t, c * d);
    return out;
}

namespace {

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// All k-subsets of the block [off, off+len).
std::vector<Mask> block_subsets(int off, int len, int k)
{
    std::vector<Mask> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    Mask s = (Mask(1) << k) - 1;
    const Mask limit = Mask(1) << len;
    while (s < limit) {
        out.push_back(s << off);
        Mask c = s & -s;
        Mask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

}  // namespace

Polarization polarize(const GenPoly& q, const std::vector<int>& degrees)
{
    const int n = q.n();
    if (int(degrees.size()) != n)
        throw std::invalid_argument("polarize: need one target degree per element");
    Polarization out;
    out.degrees = degrees;
    out.offset.resize(n);
    int total = 0;
    for (int e = 0; e < n; ++e) {
        if (degrees[e] < q.degree_in(e))
            throw std::invalid_argument("polarize: target degree " + std::to_string(degrees[e]) +
                                        " below degree " + std::to_string(q.degree_in(e)) +
                                        " of element " + std::to_string(e));
        out.offset[e] = total;
        total += degrees[e];
    }
    check_ground(total);
    out.poly = MaPoly(total);
    for (const auto& [m, c] : q.terms()) {
        cplx coef = c;
        std::vector<std::vector<Mask>> choices(n);
        for (int e = 0; e < n; ++e) {
            coef /= binomial(degrees[e], m[e]);
            choices[e] = block_subsets(out.offset[e], degrees[e], m[e]);
        }
        // Cartesian product over the blocks.
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            Mask s = 0;
            for (int e = 0; e < n; ++e)
                s |= choices[e][idx[e]];
            out.poly.add(s, coef);
            int e = n - 1;
            while (e >= 0 && ++idx[e] == choices[e].size()) {
                idx[e] = 0;
                --e;
            }
            if (e < 0)
                break;
        }
    }
    return out;
}

double Region::excess(cplx z) const
{
    if (kind == Kind::disc)
        return std::abs(z - center) - radius;
    return -(std::conj(normal) * (z - center)).real() / std::abs(normal);
}

cplx gws_witness(const MaPoly& p, const std::vector<cplx>& point, const Region& region)
{
    const int n = p.n();
    if (int(point.size()) != n)
        throw std::invalid_argument("gws_witness: point dimension mismatch");
    double scale = 1.0;
    for (const auto& z : point) {
        if (region.excess(z) > 1e-12 * (1.0 + std::abs(z)))
            throw std::invalid_argument("gws_witness: point outside region");
        scale = std::max(scale, std::abs(z));
    }
    std::vector<cplx> diag(n + 1, 0.0);
    for (const auto& [s, c] : p.terms())
        diag[popcount(s)] += c;
    diag[0] -= p.eval(point);
    while (!diag.empty() && diag.back() == cplx(0.0))
        diag.pop_back();
    if (diag.empty())
        return point.empty() ? cplx(0.0) : point[0];
    RootSet rs = find_roots(diag);
    if (rs.roots.empty())
        throw std::runtime_error("gws_witness: diagonal polynomial has no roots");
    auto best = std::min_element(rs.roots.begin(), rs.roots.end(), [&](cplx a, cplx b) {
        return region.excess(a) < region.excess(b);
    });
    if (region.excess(*best) > 1e-7 * scale)
        throw std::runtime_error("gws_witness: no root of the diagonal polynomial lies in the region");
    return *best;
}

GenPoly apply_diff_operator(const std::vector<std::pair<GenPoly, GenPoly>>& pairs)
{
    if (pairs.empty())
        throw std::invalid_argument("apply_diff_operator: no operator pairs");
    const int n = pairs.front().first.n();
    GenPoly out(n);
    for (const auto& [op, f] : pairs) {
        if (op.n() != n || f.n() != n)
            throw std::invalid_argument("apply_diff_operator: ground-set mismatch");
        for (const auto& [m, a] : op.terms())
            for (const auto& [k, b] : f.terms()) {
                cplx c = a * b;
                MultiIndex r = k;
                bool alive = true;
                for (int e = 0; e < n && alive; ++e) {
                    if (k[e] < m[e]) {
                        alive = false;
                        break;
                    }
                    for (int t = 0; t < m[e]; ++t)
                        c *= double(k[e] - t);
                    r[e] = k[e] - m[e];
                }
                if (alive)
                    out.add(r, c);
            }
    }
    return out;
}

std::vector<GenPoly> coefficient_slices(const GenPoly& p, int e)
{
    check_element(e, p.n(), "coefficient_slices");
    const int deg = p.degree_in(e);
    std::vector<GenPoly> out(deg + 1, GenPoly(p.n() - 1));
    for (const auto& [m, c] : p.terms()) {
        MultiIndex r = m;
        r.exps.erase(r.exps.begin() + e);
        out[m[e]].add(r, c);
    }
    return out;
}

GenPoly fettweis_transform(const GenPoly& p, int e, int r, int s)
{
    check_element(e, p.n(), "fettweis_transform");
    const int top = p.degree_in(e);
    if (r < 0 || r > s || s > top)
        throw std::out_of_range("fettweis_transform: need 0 <= r <= s <= deg_e P = " + std::to_string(top));
    auto fact = [](int k) { return std::tgamma(double(k) + 1.0); };
    GenPoly out(p.n());
    for (const auto& [m, c] : p.terms()) {
        const int k = m[e];
        if (k < r || k > s)
            continue;
        double w = fact(k) / fact(k - r) * fact(top - k) / fact(s - k);
        out.add(m, c * std::round(w));
    }
    return out;
}

PhaseResult same_phase(const GenPoly& p, double tol)
{
    PhaseResult res;
    if (p.is_zero()) {
        res.ok = true;
        return res;
    }
    const auto& first = *p.terms().begin();
    const cplx ref = first.second / std::abs(first.second);
    for (const auto& [m, c] : p.terms()) {
        double d = std::arg(c * std::conj(ref));
        if (std::abs(d) > tol) {
            res.witness = std::make_pair(first.first, m);
            return res;
        }
    }
    res.ok = true;
    res.theta = std::arg(ref);
    if (res.theta <= -std::numbers::pi)
        res.theta = std::numbers::pi;
    return res;
}

}  // namespace hpl
