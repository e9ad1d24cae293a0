#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpl {

using cplx = std::complex<double>;
using Mask = std::uint64_t;

constexpr int kMaxGround = 63;

// Subset helpers. Elements are 0..n-1, stored as bits of a 64-bit word.
inline Mask bit(int e) { return Mask(1) << e; }
inline bool has(Mask s, int e) { return (s >> e) & 1u; }
inline int popcount(Mask s) { return __builtin_popcountll(s); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1; }

Mask mask_of(const std::vector<int>& members);
std::vector<int> members_of(Mask s);

// Remove element e from the index space: bits above e shift down by one.
Mask drop_index(Mask s, int e);
// Inverse of drop_index: open a hole at position e.
Mask insert_index(Mask s, int e);

void check_ground(int n);

class MultiIndex {
public:
    std::vector<int> exps;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> v) : exps(std::move(v)) {}
    static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
    static MultiIndex from_mask(Mask s, int n);

    int size() const { return int(exps.size()); }
    int total() const;
    bool is_01() const;
    Mask to_mask() const;
    int operator[](int e) const { return exps[e]; }
    int& operator[](int e) { return exps[e]; }
    auto operator<=>(const MultiIndex&) const = default;
};

// Multiaffine polynomial: sum of a_S x^S with S a subset of {0..n-1}.
class MaPoly {
public:
    MaPoly() = default;
    explicit MaPoly(int n);

    static MaPoly constant(int n, cplx c);
    static MaPoly monomial(int n, Mask s, cplx c = 1.0);
    static MaPoly elementary(int r, int n);

    int n() const { return n_; }
    const std::map<Mask, cplx>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    cplx coeff(Mask s) const;
    // Adds c to the coefficient of x^S; an exact zero result is erased.
    void add(Mask s, cplx c);
    void set(Mask s, cplx c);

    int degree() const;  // -1 for the zero polynomial
    bool homogeneous() const;
    std::vector<Mask> support() const;

    cplx eval(const std::vector<cplx>& x) const;

    MaPoly& operator+=(const MaPoly& o);
    MaPoly& operator-=(const MaPoly& o);
    MaPoly& operator*=(cplx c);
    bool operator==(const MaPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // Same polynomial viewed on a larger ground set.
    MaPoly widen(int n) const;

private:
    int n_ = 0;
    std::map<Mask, cplx> terms_;
};

MaPoly operator+(MaPoly a, const MaPoly& b);
MaPoly operator-(MaPoly a, const MaPoly& b);
MaPoly operator*(MaPoly a, cplx c);
// Product of two multiaffine polynomials on a common ground set. Throws
// std::domain_error if the product is not multiaffine.
MaPoly operator*(const MaPoly& a, const MaPoly& b);

// General polynomial keyed by multi-index.
class GenPoly {
public:
    GenPoly() = default;
    explicit GenPoly(int n);

    static GenPoly constant(int n, cplx c);
    static GenPoly monomial(const MultiIndex& m, cplx c = 1.0);
    static GenPoly variable(int n, int e);
    static GenPoly from(const MaPoly& p);

    int n() const { return n_; }
    const std::map<MultiIndex, cplx>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    cplx coeff(const MultiIndex& m) const;
    void add(const MultiIndex& m, cplx c);

    int degree() const;  // -1 for zero
    int degree_in(int e) const;
    bool homogeneous() const;
    bool multiaffine() const;

    cplx eval(const std::vector<cplx>& x) const;

    GenPoly& operator+=(const GenPoly& o);
    GenPoly& operator-=(const GenPoly& o);
    GenPoly& operator*=(cplx c);
    bool operator==(const GenPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    // Throws std::domain_error when some exponent exceeds 1.
    MaPoly to_multiaffine() const;

private:
    int n_ = 0;
    std::map<MultiIndex, cplx> terms_;
};

GenPoly operator+(GenPoly a, const GenPoly& b);
GenPoly operator-(GenPoly a, const GenPoly& b);
GenPoly operator*(GenPoly a, cplx c);
GenPoly operator*(const GenPoly& a, const GenPoly& b);
GenPoly pow(const GenPoly& p, int k);

using Weighting = std::vector<double>;
void check_weighting(const Weighting& w, int n);

// Index bookkeeping for connections: element j of P (resp. Q) sits at
// p_map[j] (resp. q_map[j]) in the result, or -1 if it was removed.
struct Connection {
    MaPoly poly;
    std::vector<int> p_map;
    std::vector<int> q_map;
};

GenPoly leading_part(const GenPoly& p);

MaPoly delete_element(const MaPoly& p, int e);
MaPoly contract_element(const MaPoly& p, int e);
// Slices at e without re-indexing: the results live on the same ground set
// and never contain e.
MaPoly slice_without(const MaPoly& p, int e);
MaPoly slice_with(const MaPoly& p, int e);

MaPoly dual(const MaPoly& p);

Connection parallel_connection(const MaPoly& p, const MaPoly& q, int ep, int eq);
Connection series_connection(const MaPoly& p, const MaPoly& q, int ep, int eq);
Connection two_sum(const MaPoly& p, const MaPoly& q, int ep, int eq);

MaPoly principal_truncation(const MaPoly& p, const Weighting& lambda);
MaPoly principal_extension(const MaPoly& p, const Weighting& lambda);
MaPoly principal_cotruncation(const MaPoly& p, const Weighting& lambda);
MaPoly principal_coextension(const MaPoly& p, const Weighting& lambda);

GenPoly multiaffine_part(const GenPoly& p, Mask a);
GenPoly fold_mod2(const GenPoly& p, Mask a);
MaPoly convolution(const MaPoly& p, const MaPoly& q);

// Block layout of a polarization: element e of Q owns the variables
// offset[e] .. offset[e]+degrees[e]-1 of the result.
struct Polarization {
    MaPoly poly;
    std::vector<int> offset;
    std::vector<int> degrees;
};
Polarization polarize(const GenPoly& q, const std::vector<int>& degrees);

struct Region {
    enum class Kind { disc, half_plane };
    Kind kind = Kind::disc;
    cplx center{0.0, 0.0};
    double radius = 1.0;
    // Half-plane {z : Re(conj(normal) * (z - center)) >= 0}.
    cplx normal{1.0, 0.0};

    static Region disc(cplx c, double r) { return {Kind::disc, c, r, {1.0, 0.0}}; }
    static Region right_half_plane() { return {Kind::half_plane, {0.0, 0.0}, 0.0, {1.0, 0.0}}; }
    // Signed violation: <= 0 inside.
    double excess(cplx z) const;
};

cplx gws_witness(const MaPoly& p, const std::vector<cplx>& point, const Region& region);

GenPoly apply_diff_operator(const std::vector<std::pair<GenPoly, GenPoly>>& pairs);

std::vector<GenPoly> coefficient_slices(const GenPoly& p, int e);
GenPoly fettweis_transform(const GenPoly& p, int e, int r, int s);

struct PhaseResult {
    bool ok = false;
    double theta = 0.0;
    std::optional<std::pair<MultiIndex, MultiIndex>> witness;
};
PhaseResult same_phase(const GenPoly& p, double tol = 1e-9);

}  // namespace hpl
