#include "hpl/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hpl {

namespace {

std::string fmt_set(Mask s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : members_of(s)) {
        os << (first ? "" : ",") << e;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<Mask> normalized(std::vector<Mask> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Drops every bit of `removed` and closes the gaps.
Mask compress(Mask s, Mask removed)
{
    Mask out = 0;
    int j = 0;
    for (int e = 0; e < 64 && (s >> e); ++e) {
        if (has(removed, e))
            continue;
        if (has(s, e))
            out |= bit(j);
        ++j;
    }
    return out;
}

void check_elem(const Matroid& m, int e, const char* what)
{
    if (e < 0 || e >= m.n())
        throw std::out_of_range(std::string(what) + ": element " + std::to_string(e) + " not in ground set");
}

template <class F>
void for_each_ksubset(int n, int k, F&& f)
{
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        f(Mask(0));
        return;
    }
    Mask s = (Mask(1) << k) - 1;
    const Mask limit = n >= 64 ? 0 : (Mask(1) << n);
    while (s < limit) {
        f(s);
        Mask c = s & -s;
        Mask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

}  // namespace

std::string AxiomReport::message() const
{
    if (ok)
        return "ok";
    if (rule == "B1")
        return "B1 violated: no bases";
    return "B2 violated: B1=" + fmt_set(b1) + " B2=" + fmt_set(b2) + " x=" + std::to_string(x) +
           " has no exchange partner";
}

AxiomReport verify_basis_axioms(int n, const std::vector<Mask>& candidates)
{
    check_ground(n);
    for (Mask s : candidates)
        if (s & ~full_mask(n))
            throw std::out_of_range("candidate basis " + fmt_set(s) + " outside ground set");
    AxiomReport rep;
    std::vector<Mask> bs = normalized(candidates);
    if (bs.empty()) {
        rep.ok = false;
        rep.rule = "B1";
        return rep;
    }
    std::unordered_set<Mask> lookup(bs.begin(), bs.end());
    for (Mask b1 : bs)
        for (Mask b2 : bs) {
            Mask only1 = b1 & ~b2, only2 = b2 & ~b1;
            for (int x : members_of(only1)) {
                bool found = false;
                for (int y : members_of(only2))
                    if (lookup.count((b1 & ~bit(x)) | bit(y))) {
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.ok = false;
                    rep.rule = "B2";
                    rep.b1 = b1;
                    rep.b2 = b2;
                    rep.x = x;
                    return rep;
                }
            }
        }
    return rep;
}

// ---------------------------------------------------------------- Matroid

Matroid::Matroid(int n, std::vector<Mask> bases)
{
    AxiomReport rep = verify_basis_axioms(n, bases);
    if (!rep.ok)
        throw std::invalid_argument("not a matroid: " + rep.message());
    *this = unchecked(n, std::move(bases));
}

Matroid Matroid::unchecked(int n, std::vector<Mask> bases)
{
    check_ground(n);
    Matroid m;
    m.n_ = n;
    m.bases_ = normalized(std::move(bases));
    m.rank_ = m.bases_.empty() ? 0 : popcount(m.bases_.front());
    return m;
}

Matroid Matroid::uniform(int r, int n)
{
    if (r < 0 || r > n)
        throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
    std::vector<Mask> bs;
    for_each_ksubset(n, r, [&](Mask s) { bs.push_back(s); });
    return unchecked(n, std::move(bs));
}

bool Matroid::is_basis(Mask s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

bool Matroid::is_independent(Mask s) const
{
    return std::any_of(bases_.begin(), bases_.end(), [s](Mask b) { return (b & s) == s; });
}

int Matroid::rank_of(Mask s) const
{
    int r = 0;
    for (Mask b : bases_)
        r = std::max(r, popcount(b & s));
    return r;
}

bool Matroid::is_loop(int e) const
{
    return std::none_of(bases_.begin(), bases_.end(), [e](Mask b) { return has(b, e); });
}

bool Matroid::is_coloop(int e) const
{
    return std::all_of(bases_.begin(), bases_.end(), [e](Mask b) { return has(b, e); });
}

// ---------------------------------------------------------------- minors

Matroid matroid_dual(const Matroid& m)
{
    std::vector<Mask> bs;
    bs.reserve(m.bases().size());
    for (Mask b : m.bases())
        bs.push_back(full_mask(m.n()) & ~b);
    return Matroid::unchecked(m.n(), std::move(bs));
}

namespace {

// Minor steps on the original index space; removed elements vanish from every
// basis and are compressed away by the caller.
std::vector<Mask> contract_in_place(const std::vector<Mask>& bs, int e)
{
    std::vector<Mask> out;
    bool loop = std::none_of(bs.begin(), bs.end(), [e](Mask b) { return has(b, e); });
    for (Mask b : bs)
        if (loop || has(b, e))
            out.push_back(b & ~bit(e));
    return normalized(std::move(out));
}

std::vector<Mask> delete_in_place(const std::vector<Mask>& bs, int e)
{
    std::vector<Mask> out;
    bool coloop = std::all_of(bs.begin(), bs.end(), [e](Mask b) { return has(b, e); });
    for (Mask b : bs)
        if (coloop || !has(b, e))
            out.push_back(b & ~bit(e));
    return normalized(std::move(out));
}

}  // namespace

Matroid minor(const Matroid& m, Mask del, Mask con)
{
    if (del & con)
        throw std::invalid_argument("minor: delete and contract sets overlap");
    if ((del | con) & ~full_mask(m.n()))
        throw std::out_of_range("minor: subset outside ground set");
    std::vector<Mask> bs = m.bases();
    for (int e : members_of(con))
        bs = contract_in_place(bs, e);
    for (int e : members_of(del))
        bs = delete_in_place(bs, e);
    const Mask removed = del | con;
    for (Mask& b : bs)
        b = compress(b, removed);
    return Matroid::unchecked(m.n() - popcount(removed), std::move(bs));
}

Matroid delete_element(const Matroid& m, int e)
{
    check_elem(m, e, "delete");
    return minor(m, bit(e), 0);
}

Matroid contract_element(const Matroid& m, int e)
{
    check_elem(m, e, "contract");
    return minor(m, 0, bit(e));
}

Matroid restriction(const Matroid& m, Mask keep)
{
    return minor(m, full_mask(m.n()) & ~keep, 0);
}

Matroid direct_sum(const Matroid& a, const Matroid& b)
{
    check_ground(a.n() + b.n());
    std::vector<Mask> bs;
    for (Mask x : a.bases())
        for (Mask y : b.bases())
            bs.push_back(x | (y << a.n()));
    return Matroid::unchecked(a.n() + b.n(), std::move(bs));
}

// ---------------------------------------------------------------- connections

namespace {

struct JoinedM {
    std::vector<Mask> p, q;
    int n;
    std::vector<int> p_map, q_map;
};

JoinedM join_m(const Matroid& m, const Matroid& nn, int em, int en)
{
    check_elem(m, em, "connection (M side)");
    check_elem(nn, en, "connection (N side)");
    JoinedM j;
    j.n = m.n() + nn.n() - 1;
    check_ground(j.n);
    j.p_map.resize(m.n());
    std::iota(j.p_map.begin(), j.p_map.end(), 0);
    j.q_map.resize(nn.n());
    int next = m.n();
    for (int i = 0; i < nn.n(); ++i)
        j.q_map[i] = (i == en) ? em : next++;
    j.p = m.bases();
    for (Mask b : nn.bases()) {
        Mask t = 0;
        for (int i : members_of(b))
            t |= bit(j.q_map[i]);
        j.q.push_back(t);
    }
    return j;
}

}  // namespace

MatroidConnection parallel_connection_m(const Matroid& m, const Matroid& nn, int em, int en)
{
    check_elem(m, em, "parallel connection");
    check_elem(nn, en, "parallel connection");
    if (m.is_loop(em) && nn.is_loop(en))
        throw std::invalid_argument("parallel connection: shared element is a loop on both sides");
    JoinedM j = join_m(m, nn, em, en);
    const Mask e = bit(em);
    std::vector<Mask> bs;
    for (Mask b1 : j.p)
        for (Mask b2 : j.q) {
            bool in1 = b1 & e, in2 = b2 & e;
            if (in1 && in2)
                bs.push_back(b1 | b2);
            else if (in1 != in2)
                bs.push_back((b1 | b2) & ~e);
        }
    return {Matroid::unchecked(j.n, std::move(bs)), j.p_map, j.q_map};
}

MatroidConnection series_connection_m(const Matroid& m, const Matroid& nn, int em, int en)
{
    check_elem(m, em, "series connection");
    check_elem(nn, en, "series connection");
    if (m.is_coloop(em) && nn.is_coloop(en))
        throw std::invalid_argument("series connection: shared element is a coloop on both sides");
    MatroidConnection par = parallel_connection_m(matroid_dual(m), matroid_dual(nn), em, en);
    par.matroid = matroid_dual(par.matroid);
    return par;
}

MatroidConnection two_sum_m(const Matroid& m, const Matroid& nn, int em, int en)
{
    check_elem(m, em, "2-sum");
    check_elem(nn, en, "2-sum");
    if (m.is_loop(em) || m.is_coloop(em) || nn.is_loop(en) || nn.is_coloop(en))
        throw std::invalid_argument("2-sum: shared element must be neither a loop nor a coloop on either side");
    MatroidConnection par = parallel_connection_m(m, nn, em, en);
    par.matroid = delete_element(par.matroid, em);
    for (auto* map : {&par.p_map, &par.q_map})
        for (int& v : *map)
            v = (v == em) ? -1 : (v > em ? v - 1 : v);
    return par;
}

Matroid relax(const Matroid& m, Mask h)
{
    if (h & ~full_mask(m.n()))
        throw std::out_of_range("relax: subset outside ground set");
    if (popcount(h) != m.rank())
        throw std::invalid_argument("relax: set size differs from the rank");
    if (m.is_basis(h))
        throw std::invalid_argument("relax: " + fmt_set(h) + " is already a basis");
    std::vector<Mask> bs = m.bases();
    bs.push_back(h);
    AxiomReport rep = verify_basis_axioms(m.n(), bs);
    if (!rep.ok)
        throw std::invalid_argument("relax: result is not a matroid (" + rep.message() + ")");
    return Matroid::unchecked(m.n(), std::move(bs));
}

UnionResult matroid_union_fullrank(const Matroid& m, const Matroid& nn)
{
    if (m.n() != nn.n())
        throw std::invalid_argument("matroid union: ground-set mismatch");
    UnionResult res;
    std::vector<Mask> bs;
    for (Mask a : m.bases())
        for (Mask b : nn.bases()) {
            res.max_disjoint = std::max(res.max_disjoint, popcount(a | b));
            if (!(a & b))
                bs.push_back(a | b);
        }
    if (!bs.empty())
        res.matroid = Matroid::unchecked(m.n(), std::move(bs));
    return res;
}

// ---------------------------------------------------------------- polynomials

MaPoly basis_polynomial(const Matroid& m)
{
    MaPoly p(m.n());
    for (Mask b : m.bases())
        p.set(b, 1.0);
    return p;
}

MaPoly independent_set_polynomial(const Matroid& m)
{
    std::unordered_set<Mask> indep;
    for (Mask b : m.bases()) {
        // Walk all submasks of b.
        Mask s = b;
        while (true) {
            indep.insert(s);
            if (s == 0)
                break;
            s = (s - 1) & b;
        }
    }
    MaPoly p(m.n());
    for (Mask s : indep)
        p.set(s, 1.0);
    return p;
}

SupportResult support_matroid(const MaPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("support_matroid: zero polynomial");
    if (!p.homogeneous())
        throw std::invalid_argument("support_matroid: polynomial is not homogeneous");
    SupportResult res;
    std::vector<Mask> supp = p.support();
    res.report = verify_basis_axioms(p.n(), supp);
    if (res.report.ok)
        res.matroid = Matroid::unchecked(p.n(), std::move(supp));
    return res;
}

// ---------------------------------------------------------------- jump systems

bool exchangeable(const IndexSet& s, const MultiIndex& m, const MultiIndex& mp)
{
    if (!s.count(m) || !s.count(mp))
        throw std::invalid_argument("exchangeable: multi-index not in the set");
    const int n = m.size();
    for (int e = 0; e < n; ++e) {
        if (m[e] <= mp[e])
            continue;
        bool found = false;
        for (int f = 0; f < n && !found; ++f) {
            if (m[f] >= mp[f])
                continue;
            MultiIndex k = m;
            --k[e];
            ++k[f];
            found = s.count(k) > 0;
        }
        if (!found)
            return false;
    }
    return true;
}

bool constant_sum_jump_check(const IndexSet& s, MultiIndex cap)
{
    if (s.empty())
        return false;
    const int n = s.begin()->size();
    const int sum = s.begin()->total();
    for (const auto& m : s) {
        if (m.size() != n)
            throw std::invalid_argument("jump check: multi-indices of different lengths");
        if (m.total() != sum)
            throw std::invalid_argument("jump check: set does not have constant sum");
    }
    if (cap.size() == 0) {
        cap = MultiIndex::zero(n);
        for (const auto& m : s)
            for (int e = 0; e < n; ++e)
                cap[e] = std::max(cap[e], m[e]);
    }
    if (cap.size() != n)
        throw std::invalid_argument("jump check: cap length mismatch");
    IndexSet reflected;
    for (const auto& m : s) {
        MultiIndex r = cap;
        for (int e = 0; e < n; ++e) {
            r[e] -= m[e];
            if (r[e] < 0)
                throw std::invalid_argument("jump check: cap below a member");
        }
        reflected.insert(r);
    }
    auto reflect = [&](const MultiIndex& m) {
        MultiIndex r = cap;
        for (int e = 0; e < n; ++e)
            r[e] -= m[e];
        return r;
    };
    for (const auto& a : s)
        for (const auto& b : s) {
            if (!exchangeable(s, a, b))
                return false;
            if (!exchangeable(reflected, reflect(a), reflect(b)))
                return false;
        }
    return true;
}

// ---------------------------------------------------------------- connectivity

bool connected(const Matroid& m)
{
    const int n = m.n();
    if (n <= 1)
        return true;
    if (m.bases().empty())
        return false;
    for (int e = 0; e < n; ++e)
        if (m.is_loop(e))
            return false;
    const Mask b = m.bases().front();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        if (has(b, i))
            continue;
        for (int j : members_of(b))
            if (m.is_basis((b & ~bit(j)) | bit(i))) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    }
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == n;
}

// ---------------------------------------------------------------- transversal

namespace {

bool augment(int v, const std::vector<std::vector<int>>& adj, std::vector<int>& owner, std::vector<char>& used)
{
    for (int j : adj[v]) {
        if (used[j])
            continue;
        used[j] = 1;
        if (owner[j] < 0 || augment(owner[j], adj, owner, used)) {
            owner[j] = v;
            return true;
        }
    }
    return false;
}

}  // namespace

int max_matching(const Presentation& p, Mask ground)
{
    const int sets = int(p.sets.size());
    std::vector<std::vector<int>> adj(p.n);
    for (int e : members_of(ground))
        for (int j = 0; j < sets; ++j)
            if (has(p.sets[j], e))
                adj[e].push_back(j);
    std::vector<int> owner(sets, -1);
    int size = 0;
    for (int e : members_of(ground)) {
        std::vector<char> used(sets, 0);
        if (augment(e, adj, owner, used))
            ++size;
    }
    return size;
}

Matroid transversal_matroid(const Presentation& p)
{
    check_ground(p.n);
    for (Mask s : p.sets)
        if (s & ~full_mask(p.n))
            throw std::out_of_range("presentation set outside ground set");
    const int r = max_matching(p, full_mask(p.n));
    std::vector<Mask> nbr(p.n, 0);
    for (int e = 0; e < p.n; ++e)
        for (std::size_t j = 0; j < p.sets.size(); ++j)
            if (has(p.sets[j], e))
                nbr[e] |= bit(int(j));
    std::vector<Mask> bs;
    for_each_ksubset(p.n, r, [&](Mask s) {
        // Hall filter on the whole candidate before the matching search.
        Mask hood = 0;
        for (int e : members_of(s)) {
            if (!nbr[e])
                return;
            hood |= nbr[e];
        }
        if (popcount(hood) < r)
            return;
        if (max_matching(p, s) == r)
            bs.push_back(s);
    });
    return Matroid::unchecked(p.n, std::move(bs));
}

Presentation restrict_presentation(const Presentation& p, Mask keep)
{
    Presentation out;
    out.n = popcount(keep & full_mask(p.n));
    const Mask removed = full_mask(p.n) & ~keep;
    for (Mask s : p.sets)
        out.sets.push_back(compress(s & keep, removed));
    return out;
}

// ---------------------------------------------------------------- graphic

Graph Graph::complete(int k)
{
    Graph g;
    g.vertices = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.edges.emplace_back(i, j);
    return g;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v)
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

Matroid graphic_matroid(const Graph& g)
{
    const int m = int(g.edges.size());
    check_ground(m);
    for (auto [u, v] : g.edges)
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
            throw std::out_of_range("graph edge endpoint out of range");
    DisjointSets all(g.vertices);
    int rank = 0;
    for (auto [u, v] : g.edges)
        if (all.unite(u, v))
            ++rank;
    std::vector<Mask> bs;
    for_each_ksubset(m, rank, [&](Mask s) {
        DisjointSets ds(g.vertices);
        for (int e : members_of(s))
            if (!ds.unite(g.edges[e].first, g.edges[e].second))
                return;
        bs.push_back(s);
    });
    return Matroid::unchecked(m, std::move(bs));
}

}  // namespace hpl
