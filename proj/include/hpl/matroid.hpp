#pragma once

#include "hpl/polycore.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hpl {

// Outcome of a basis-axiom check. On failure `rule` is "B1", "B2", "size" or
// "range"; for B2 the instance (b1, b2, x) admits no exchange partner y.
struct AxiomReport {
    bool ok = true;
    std::string rule;
    Mask b1 = 0, b2 = 0;
    int x = -1;
    std::string message() const;
};

AxiomReport verify_basis_axioms(int n, const std::vector<Mask>& candidates);

class Matroid {
public:
    Matroid() = default;
    // Validates the basis axioms; throws std::invalid_argument on failure.
    Matroid(int n, std::vector<Mask> bases);
    static Matroid unchecked(int n, std::vector<Mask> bases);
    static Matroid uniform(int r, int n);

    int n() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask s) const;
    bool is_independent(Mask s) const;
    int rank_of(Mask s) const;
    bool is_loop(int e) const;
    bool is_coloop(int e) const;
    bool operator==(const Matroid& o) const { return n_ == o.n_ && bases_ == o.bases_; }

private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<Mask> bases_;  // sorted, unique
};

Matroid matroid_dual(const Matroid& m);
Matroid delete_element(const Matroid& m, int e);
Matroid contract_element(const Matroid& m, int e);
// Contractions are applied first (dependent parts become deletions), then
// deletions; survivors keep their relative order.
Matroid minor(const Matroid& m, Mask del, Mask con);
Matroid direct_sum(const Matroid& a, const Matroid& b);

// Same relabeling convention as the polynomial connections.
struct MatroidConnection {
    Matroid matroid;
    std::vector<int> p_map;
    std::vector<int> q_map;
};
MatroidConnection parallel_connection_m(const Matroid& m, const Matroid& nn, int em, int en);
MatroidConnection series_connection_m(const Matroid& m, const Matroid& nn, int em, int en);
MatroidConnection two_sum_m(const Matroid& m, const Matroid& nn, int em, int en);

Matroid relax(const Matroid& m, Mask h);

struct UnionResult {
    std::optional<Matroid> matroid;
    int max_disjoint = 0;  // largest |B1 u B2| over pairs, on deficiency
};
UnionResult matroid_union_fullrank(const Matroid& m, const Matroid& nn);

MaPoly basis_polynomial(const Matroid& m);
MaPoly independent_set_polynomial(const Matroid& m);

struct SupportResult {
    std::optional<Matroid> matroid;
    AxiomReport report;
};
// Throws std::invalid_argument unless p is nonzero and homogeneous.
SupportResult support_matroid(const MaPoly& p);

using IndexSet = std::set<MultiIndex>;
bool exchangeable(const IndexSet& s, const MultiIndex& m, const MultiIndex& mp);
// cap defaults to the componentwise maximum over s when empty.
bool constant_sum_jump_check(const IndexSet& s, MultiIndex cap = {});

bool connected(const Matroid& m);

struct Presentation {
    int n = 0;
    std::vector<Mask> sets;
};
int max_matching(const Presentation& p, Mask ground);
Matroid transversal_matroid(const Presentation& p);
Presentation restrict_presentation(const Presentation& p, Mask keep);
Matroid restriction(const Matroid& m, Mask keep);

struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    static Graph complete(int k);
};
Matroid graphic_matroid(const Graph& g);

}  // namespace hpl
