#ifndef LIEINV_LINEAR_HPP
#define LIEINV_LINEAR_HPP

#include "lieinv/extscalar.hpp"
#include "lieinv/multipoly.hpp"

#include <vector>

namespace lieinv {

template <class T>
using Matrix = std::vector<std::vector<T>>;

using ScalarMatrix = Matrix<Scalar>;

/// In-place row reduction to reduced row echelon form over a field.
/// Returns the pivot column of each pivot row (in order).
template <class T>
std::vector<int> rref(Matrix<T>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t pr = 0;
    for (size_t col = 0; col < cols && pr < rows; ++col) {
        size_t sel = pr;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        T inv = m[pr][col].inv();
        for (size_t j = col; j < cols; ++j) m[pr][j] = m[pr][j] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || m[r][col].is_zero()) continue;
            T f = m[r][col];
            for (size_t j = col; j < cols; ++j) m[r][j] = m[r][j] - f * m[pr][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++pr;
    }
    return pivots;
}

template <class T>
int rank(Matrix<T> m) {
    return static_cast<int>(rref(m).size());
}

struct Nullspace {
    int dim = 0;
    ScalarMatrix basis; // each row is a kernel vector
};

/// Exact kernel basis of a Scalar matrix; dim + rank = n_cols.
Nullspace nullspace(const ScalarMatrix& m, size_t n_cols);

/// Kernel basis over Q(i)[x]/(modulus); may throw SplitError.
Matrix<ExtScalar> nullspace_ext(const Matrix<ExtScalar>& m, size_t n_cols);

/// Row-space basis (RREF, zero rows dropped).
ScalarMatrix row_space(ScalarMatrix m);

/// True if v lies in the row space given by an RREF basis.
bool in_row_space(const ScalarMatrix& rref_basis, const std::vector<Scalar>& v);

/// Solve the linear system (columns of `basis` rows span) coords * basis = v.
/// Returns empty optional when v is outside the span.
std::optional<std::vector<Scalar>> coords_in_span(const ScalarMatrix& basis,
                                                  const std::vector<Scalar>& v);

/// Exact rank of a parameter-dependent matrix as a function of the parameter.
struct StepRank {
    int n_cols = 0;
    int generic_rank = 0;
    std::vector<std::pair<UniPoly, int>> exceptional; // pairwise coprime monic squarefree factors
};

/// Gaussian elimination with assumption tracking over Q(i)[alpha];
/// recomputes the rank at every candidate exceptional locus by dynamic
/// evaluation and keeps only the strict rank drops.
StepRank param_step_rank(const Matrix<UniPoly>& m);

/// Rank of a Scalar matrix specialization helper.
int rank_at(const Matrix<UniPoly>& m, const Scalar& point);

/// Rank over the rational-function field in the symbols (fraction-free
/// Bareiss elimination with symbolic pivots).
int generic_rank_multivar(Matrix<MultiPoly> m);

} // namespace lieinv

#endif
