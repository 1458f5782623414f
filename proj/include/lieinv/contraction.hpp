#ifndef LIEINV_CONTRACTION_HPP
#define LIEINV_CONTRACTION_HPP

#include "lieinv/invariant_function.hpp"
#include "lieinv/ratfunc.hpp"

namespace lieinv {

struct CriterionResult {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::optional<LeqWitness> witness;
};

enum class ContractionDecision { Excluded, NotExcluded, Exists };

std::string decision_name(ContractionDecision d);

struct ContractionVerdict {
    CriterionResult psi_leq, psi1_strict, phi_leq, phi0_leq;
    ContractionDecision decision = ContractionDecision::NotExcluded;
    std::string detail;
    const CriterionResult* failed() const;
};

/// Necessary-criteria check: psi_L <= psi_L0, psi_L(1) < psi_L0(1),
/// phi_L <= phi_L0, phi0_L <= phi0_L0 (phi checks skipped for jordan).
/// Decision is Excluded or NotExcluded only.
ContractionVerdict contraction_criteria(const StructureConstants& l,
                                        const StructureConstants& l0);

/// Existence decision for 3-dimensional lie algebras (the criterion is an
/// iff there); Exists only for proper contractions with non-abelian target.
ContractionVerdict decide_contraction3(const StructureConstants& l,
                                       const StructureConstants& l0);

/// Existence decision for 2-dimensional jordan algebras.
ContractionVerdict decide_contraction_jordan2(const StructureConstants& j,
                                              const StructureConstants& j0);

struct GradedSetup {
    int m1 = 1, m2 = 1;                      // group Z_m1 x Z_m2 (m2 may be 1)
    std::vector<std::pair<int, int>> grades; // one group element per basis vector
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Scalar> epsilon;

    Scalar eps(std::pair<int, int> g, std::pair<int, int> h) const;
    std::pair<int, int> add(std::pair<int, int> g, std::pair<int, int> h) const;
};

/// Graded contraction [x,y]_eps = eps_{ij} [x,y]; validates the grading and
/// the Jacobi identity of the result.
StructureConstants graded_apply(const StructureConstants& sc, const GradedSetup& setup);

/// One-parametric limit contraction by u(eps); entries' limits for eps -> 0+
/// are taken by order comparison.
StructureConstants limit_contraction(const StructureConstants& sc, const Matrix<RatFunc>& u);

} // namespace lieinv

#endif
