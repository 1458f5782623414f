#ifndef LIEINV_CLASSICAL_HPP
#define LIEINV_CLASSICAL_HPP

#include "lieinv/derivations.hpp"

#include <optional>

namespace lieinv {

struct SeriesProfile {
    std::vector<int> d; // derived sequence dims, consecutive repeats dropped
    std::vector<int> l; // descending central sequence dims
    std::vector<int> c; // ascending central sequence dims
    bool solvable = false;
    bool nilpotent = false;
};

SeriesProfile series(const StructureConstants& sc);

/// Number of algebraically independent formal invariants:
/// dim - generic rank of the matrix (M_L)_{ij} = sum_k c^k_{ij} e_k.
int tau(const StructureConstants& sc);

/// Center of the algebra as a row-space basis.
ScalarMatrix center(const StructureConstants& sc);

struct ChiInvariants {
    std::optional<Scalar> chi1, chi2, chi3;
};

ChiInvariants chi(const StructureConstants& sc);

std::optional<Scalar> cpq(const StructureConstants& sc, int p, int q);

struct InvTuple {
    SeriesProfile series;
    int tau = 0;
    int d111 = 0, d011 = 0, d110 = 0, d111_011 = 0;
    std::string to_string() const;
};

InvTuple inv_tuple(const StructureConstants& sc);

} // namespace lieinv

#endif
