#pragma once

#include "hpl/matroid.hpp"
#include "hpl/polycore.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hpl {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<T> data;  // row-major

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c, T{}) {}
    DenseMatrix(std::initializer_list<std::initializer_list<T>> init);

    T& operator()(int i, int j) { return data[std::size_t(i) * cols + j]; }
    const T& operator()(int i, int j) const { return data[std::size_t(i) * cols + j]; }
};

template <class T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> init)
{
    rows = int(init.size());
    cols = rows ? int(init.begin()->size()) : 0;
    for (const auto& row : init) {
        if (int(row.size()) != cols)
            throw std::invalid_argument("matrix: ragged rows");
        data.insert(data.end(), row.begin(), row.end());
    }
}

using ComplexMatrix = DenseMatrix<cplx>;
using NonnegMatrix = DenseMatrix<double>;

void check_nonneg(const NonnegMatrix& m);

// Determinant of the square submatrix on columns S (|S| = rows).
cplx minor_det(const ComplexMatrix& a, Mask s);
// Permanent of the square submatrix on columns S, Ryser with Gray code.
double minor_per(const NonnegMatrix& l, Mask s);
// Permanent of a square matrix.
double permanent(const NonnegMatrix& l);

// det(A diag(x) A*).
cplx cauchy_binet_value(const ComplexMatrix& a, const std::vector<cplx>& x);

// Coefficients |det(A|S)|^2. The result is cross-checked against
// det(A diag(x) A*) at a random point; a mismatch throws std::logic_error.
MaPoly det_construction(const ComplexMatrix& a);
MaPoly per_construction(const NonnegMatrix& l);

bool unimodular_minor_check(const ComplexMatrix& a, double tol = 1e-9);

struct NicenessSolution {
    enum class Status { nice, infeasible_nonneg, inconsistent };
    Status status = Status::inconsistent;
    std::vector<int> unknowns;      // element index of each weight
    std::vector<Rational> weights;  // exact; empty when inconsistent
    bool unique = false;            // solution set is a single point
    bool heuristic = false;         // nonneg search fell back to floating NNLS
    int equations = 0;
    int kernel_dim = 0;
};
std::string status_name(NicenessSolution::Status s);

NicenessSolution nice_principal_solve(const Matroid& m, Mask f);
NicenessSolution nice_cotruncation_solve(const Matroid& m, Mask d);

// Solve rows * lambda = 1 with the classification above. Exposed for tests.
NicenessSolution solve_unit_system(const std::vector<std::vector<int>>& rows, int unknowns);

struct TransversalCheck {
    bool uniform = false;
    std::vector<std::pair<Mask, double>> values;  // c(S; lambda) per basis
    bool extra_rows = false;                      // more sets than the rank
};
// weights(j, i) is the weight of the edge (A_j, i); it must vanish off edges.
TransversalCheck transversal_weight_verify(const Presentation& pres, const NonnegMatrix& weights);

// Weight 1 on every edge of the presentation.
NonnegMatrix unit_weights(const Presentation& pres);
// Known nice weighting of M_{n1,n2} for the catalog presentation (x, y, z).
NonnegMatrix m_family_weights(int n1, int n2);

// M_G(x; lambda) on the vertex ground set. lambda[k] belongs to g.edges[k].
MaPoly matching_polynomial(const Graph& g, const std::vector<double>& lambda);
// Complementary version: dual of M_G on the vertex set.
MaPoly complementary_matching_polynomial(const Graph& g, const std::vector<double>& lambda);

}  // namespace hpl
