#ifndef LIEINV_CLASSIFY_HPP
#define LIEINV_CLASSIFY_HPP

#include "lieinv/catalog.hpp"
#include "lieinv/invariant_function.hpp"

namespace lieinv {

struct IdentificationResult {
    std::string label;                       // catalog label of the match
    std::string case_tag;                    // "(g-11)" for 4-dim matches
    std::vector<std::string> param_names;    // slot names of the family
    std::vector<std::vector<Scalar>> orbit;  // admissible parameter tuples
    std::vector<Scalar> params;              // canonical member (lexicographically least)
    std::string evidence;                    // matched signature summary
    std::string display() const;
};

/// Three-dimensional Lie identification via the psi table shapes.
IdentificationResult identify3(const StructureConstants& sc);

/// Four-dimensional Lie identification via psi/phi occurrence signatures
/// and per-case parameter recovery.
IdentificationResult identify4(const StructureConstants& sc);

/// Jordan identification in dimensions 1 and 2 via the psi tables.
IdentificationResult identify_jordan2(const StructureConstants& sc);

/// Dispatch on dim and kind (also handles 2-dim lie).
IdentificationResult identify(const StructureConstants& sc);

} // namespace lieinv

#endif
