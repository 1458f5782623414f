#ifndef LIEINV_INVARIANT_FUNCTION_HPP
#define LIEINV_INVARIANT_FUNCTION_HPP

#include "lieinv/cocycles.hpp"
#include "lieinv/derivations.hpp"

#include <map>

namespace lieinv {

/// Exact step function C -> N: a generic value plus pairwise coprime monic
/// squarefree factors carrying the exceptional values on their zero loci.
struct InvariantFunction {
    int generic = 0;
    std::vector<std::pair<UniPoly, int>> exceptional;

    /// Canonical form: per exceptional value, the monic product of all its
    /// factors. Two functions are equal iff their normal forms agree.
    std::map<int, UniPoly> normalized() const;
    bool operator==(const InvariantFunction& o) const;
    bool operator!=(const InvariantFunction& o) const { return !(*this == o); }
};

enum class WhichFunction { psi, psi0, phi, phi0 };

WhichFunction which_from_name(const std::string& s);
std::string which_name(WhichFunction w);

/// The four invariant functions: psi = dim D(a,1,1), psi0 = dim D(a,1,0),
/// phi = dim B(1,1,1,a,a,a), phi0 = dim B(0,1,1,a,1,1).
InvariantFunction invariant_function(const StructureConstants& sc, WhichFunction which);

int evaluate(const InvariantFunction& f, const Scalar& point);

struct LeqWitness {
    UniPoly factor;             // locus where the comparison fails (or zero)
    std::optional<Scalar> point; // a concrete witness point when available
    int lhs = 0, rhs = 0;
};

struct LeqResult {
    bool ok = true;
    std::optional<LeqWitness> witness;
};

/// Decides f(a) <= g(a) for every complex a, exactly.
LeqResult leq(const InvariantFunction& f, const InvariantFunction& g);

/// Occurrence counts: value -> number of points attaining it (sum of factor
/// degrees); the generic value is kept separately.
struct OccurrenceSignature {
    int generic = 0;
    std::map<int, int> counts;
    bool operator==(const OccurrenceSignature& o) const = default;
    std::string to_string() const; // e.g. "6_1,5_2,4"
};

OccurrenceSignature signature(const InvariantFunction& f);

/// One exceptional point prepared for display.
struct DisplayPoint {
    std::string text;   // exact closed form, or a 10-digit approximation
    bool exact = false;
    Scalar exact_value; // meaningful when `exact` and the value lies in Q(i)
    std::string factor; // the factor this point is a root of
    int value = 0;
    double re = 0, im = 0; // sort key
};

std::vector<DisplayPoint> display_points(const InvariantFunction& f);

/// Appendix-style table: header row of exceptional points, value row,
/// trailing blank column for the generic value.
std::string render_table(const InvariantFunction& f, const std::string& fname);

} // namespace lieinv

#endif
