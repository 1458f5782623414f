#ifndef LIEINV_COCYCLES_HPP
#define LIEINV_COCYCLES_HPP

#include "lieinv/algebra.hpp"

#include <array>

namespace lieinv {

/// Symmetric (q+1)x(q+1) coefficient matrix of a twisted cocycle condition.
struct Kappa {
    ScalarMatrix m;
    static Kappa ones(int q);
};

struct SixParams {
    Scalar a1, a2, a3, b1, b2, b3;
    std::array<Scalar, 6> as_array() const { return {a1, a2, a3, b1, b2, b3}; }
    bool operator==(const SixParams& o) const = default;
};

struct CanonicalSix {
    int cls = 0; // 1..16, ordered as in the sixteen-subspace classification
    SixParams rep;
};

CanonicalSix canonicalize_six(const SixParams& p);

/// Index of the pair (j,k), j<k, in lexicographic order.
int pair_index(int n, int j, int k);

/// Coefficient rows of the defining system of the six-parameter 2-cocycle
/// space over ring R; unknowns B^s_{jk} (j<k) flattened pair-major. The rows
/// cover, for every argument multiset, all parameter-permutation variants of
/// the defining identity, which is equivalent to requiring it for all
/// ordered triples.
template <class R>
Matrix<R> two_cocycle_system(const StructureConstants& sc, const std::array<R, 6>& p) {
    int n = sc.dim();
    size_t ncols = static_cast<size_t>(n) * (n * (n - 1) / 2);
    Matrix<R> rows;

    // the six parameter permutations under which the identity transports
    static const int perms[6][6] = {{0, 1, 2, 3, 4, 5}, {2, 0, 1, 5, 3, 4}, {1, 2, 0, 4, 5, 3},
                                    {0, 2, 1, 3, 5, 4}, {1, 0, 2, 4, 3, 5}, {2, 1, 0, 5, 4, 3}};
    std::vector<std::array<R, 6>> variants;
    for (const auto& perm : perms) {
        std::array<R, 6> v;
        for (int k = 0; k < 6; ++k) v[k] = p[perm[k]];
        bool dup = false;
        for (const auto& w : variants)
            if (w == v) { dup = true; break; }
        if (!dup) variants.push_back(std::move(v));
    }

    // coefficient of the cochain coordinate B(u,v) target s, with sign for
    // unordered storage
    auto add_B = [&](std::vector<R>& row, int u, int v, int s, const R& coef) {
        if (u == v) return;
        if (u < v)
            row[static_cast<size_t>(pair_index(n, u, v)) * n + s] += coef;
        else
            row[static_cast<size_t>(pair_index(n, v, u)) * n + s] -= coef;
    };

    auto emit = [&](int i, int j, int k) {
        for (const auto& v : variants) {
            const R &a1 = v[0], &a2 = v[1], &a3 = v[2], &b1 = v[3], &b2 = v[4], &b3 = v[5];
            for (int s = 0; s < n; ++s) {
                std::vector<R> row(ncols, R{});
                for (int r = 0; r < n; ++r) {
                    // a1 B(x,[y,z]) + a2 B(z,[x,y]) + a3 B(y,[z,x])
                    const Scalar& cjk = sc.at(j, k, r);
                    if (!cjk.is_zero()) add_B(row, i, r, s, a1 * R(cjk));
                    const Scalar& cij = sc.at(i, j, r);
                    if (!cij.is_zero()) add_B(row, k, r, s, a2 * R(cij));
                    const Scalar& cki = sc.at(k, i, r);
                    if (!cki.is_zero()) add_B(row, j, r, s, a3 * R(cki));
                    // b1 [x,B(y,z)] + b2 [z,B(x,y)] + b3 [y,B(z,x)]
                    const Scalar& cir = sc.at(i, r, s);
                    if (!cir.is_zero()) add_B(row, j, k, r, b1 * R(cir));
                    const Scalar& ckr = sc.at(k, r, s);
                    if (!ckr.is_zero()) add_B(row, i, j, r, b2 * R(ckr));
                    const Scalar& cjr = sc.at(j, r, s);
                    if (!cjr.is_zero()) add_B(row, k, i, r, b3 * R(cjr));
                }
                bool allzero = true;
                for (const auto& x : row)
                    if (!x.is_zero()) { allzero = false; break; }
                if (!allzero) rows.push_back(std::move(row));
            }
        }
    };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) emit(i, j, k);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) emit(u, u, v);
    return rows;
}

struct CochainSpace {
    int dim = 0;
    ScalarMatrix basis; // each row: cochain coordinates
};

/// Solution space of the six-parameter 2-cocycle identity.
CochainSpace two_cocycle_space(const StructureConstants& sc, const SixParams& p);

/// kappa-twisted cocycle space Z^q(L, ad, kappa) for q in {1,2,3}.
CochainSpace cocycle_space(const StructureConstants& sc, int q, const Kappa& kappa);

/// Matrix of the untwisted differential d : C^q -> C^{q+1} for q in {0,1,2}.
ScalarMatrix differential_matrix(const StructureConstants& sc, int q);

struct CohomologyDims {
    int z = 0, b = 0, h = 0;
};

CohomologyDims cohomology_dims(const StructureConstants& sc, int q);

size_t cochain_dim(int n, int q);

} // namespace lieinv

#endif
