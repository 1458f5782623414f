#ifndef LIEINV_DERIVATIONS_HPP
#define LIEINV_DERIVATIONS_HPP

#include "lieinv/algebra.hpp"

namespace lieinv {

struct AbcTriple {
    Scalar alpha, beta, gamma;
};

enum class AbcClass { d00, d1m1, d10, d11 }; // D(d,0,0), D(d,1,-1), D(d,1,0), D(d,1,1)

struct CanonicalAbc {
    AbcClass cls;
    Scalar delta;
    AbcTriple triple() const;
};

/// Reduce (alpha,beta,gamma) to one of the four one-parameter normal forms.
CanonicalAbc canonicalize_abc(const AbcTriple& t);

/// Coefficient rows of the defining linear system of D_(alpha,beta,gamma):
/// one equation per ordered pair (i,j) and target coordinate s, unknowns
/// D_{rs} flattened row-major. Identically zero rows are dropped.
template <class R>
Matrix<R> derivation_system(const StructureConstants& sc, const R& alpha, const R& beta,
                            const R& gamma) {
    int n = sc.dim();
    Matrix<R> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int s = 0; s < n; ++s) {
                std::vector<R> row(static_cast<size_t>(n) * n, R{});
                bool nonzero = false;
                for (int r = 0; r < n; ++r) {
                    const Scalar& cij = sc.at(i, j, r);
                    if (!cij.is_zero()) {
                        row[static_cast<size_t>(s) * n + r] += alpha * R(cij);
                        nonzero = true;
                    }
                    const Scalar& crj = sc.at(r, j, s);
                    if (!crj.is_zero()) {
                        row[static_cast<size_t>(r) * n + i] -= beta * R(crj);
                        nonzero = true;
                    }
                    const Scalar& cir = sc.at(i, r, s);
                    if (!cir.is_zero()) {
                        row[static_cast<size_t>(r) * n + j] -= gamma * R(cir);
                        nonzero = true;
                    }
                }
                if (!nonzero) continue;
                bool allzero = true;
                for (const auto& x : row)
                    if (!x.is_zero()) { allzero = false; break; }
                if (!allzero) rows.push_back(std::move(row));
            }
    return rows;
}

/// Kernel of the stacked systems: one triple gives D_(a,b,c), several give
/// the intersection.
OperatorSpace derivation_space(const StructureConstants& sc, const std::vector<AbcTriple>& triples);

struct NamedSpaces {
    OperatorSpace der;           // D(1,1,1)
    OperatorSpace d011;          // D(0,1,1)
    OperatorSpace centroid;      // D(1,1,0)
    OperatorSpace d100;          // D(1,0,0)
    OperatorSpace d010;          // D(0,1,0)
    OperatorSpace d11m1;         // D(1,1,-1)
    OperatorSpace quasicentroid; // D(0,1,-1)
    OperatorSpace der_cap_d011;  // D(1,1,1) n D(0,1,1)
    OperatorSpace d100_cap_d010; // D(1,0,0) n D(0,1,0)
};

NamedSpaces named_spaces(const StructureConstants& sc);

std::string operator_space_to_string(const OperatorSpace& os);

} // namespace lieinv

#endif
