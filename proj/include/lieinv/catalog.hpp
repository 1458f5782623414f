#ifndef LIEINV_CATALOG_HPP
#define LIEINV_CATALOG_HPP

#include "lieinv/algebra.hpp"

#include <functional>
#include <optional>

namespace lieinv {

struct CatalogEntry {
    std::string label;                // canonical label, e.g. "g_{4,2}"
    std::vector<std::string> aliases; // case tags "(g-11)" and variants
    int dim = 0;
    AlgKind kind = AlgKind::lie;
    std::vector<std::string> params;  // parameter slot names
    std::vector<std::string> basis;
    std::vector<BracketRelation> brackets;
    std::function<std::optional<std::string>(const std::map<std::string, Scalar>&)> admissible;
    std::string nota_nes, nota_bur, nota_ay; // notation comparison strings
};

const std::vector<CatalogEntry>& catalog_entries();

/// Find by canonical label or alias; nullptr when unknown.
const CatalogEntry* catalog_find(const std::string& label);

/// Instantiate and validate a catalog algebra.
StructureConstants catalog_get(const std::string& label,
                               const std::map<std::string, Scalar>& params = {});

/// Contraction matrices of the Pauli-graded sl(3,C) examples, kept as data
/// with their Z3 x Z3 group indexing.
struct GradedEpsilonData {
    std::string label;                          // e.g. "eps_{18,25}"
    std::vector<std::pair<int, int>> grades;    // component grades in order
    std::vector<std::vector<std::string>> eps;  // entries as expressions in "a"
};

const std::vector<GradedEpsilonData>& graded_epsilon_data();

} // namespace lieinv

#endif
