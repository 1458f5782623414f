#include "lieinv/contraction.hpp"

namespace lieinv {

std::string decision_name(ContractionDecision d) {
    switch (d) {
        case ContractionDecision::Excluded: return "Excluded";
        case ContractionDecision::NotExcluded: return "NotExcluded";
        default: return "Exists";
    }
}

const CriterionResult* ContractionVerdict::failed() const {
    for (const CriterionResult* c : {&psi_leq, &psi1_strict, &phi_leq, &phi0_leq})
        if (c->applicable && !c->pass) return c;
    return nullptr;
}

namespace {

CriterionResult leq_criterion(const std::string& name, const InvariantFunction& f,
                              const InvariantFunction& g) {
    CriterionResult c;
    c.name = name;
    LeqResult r = leq(f, g);
    c.pass = r.ok;
    c.witness = r.witness;
    return c;
}

bool is_abelian(const StructureConstants& sc) {
    for (int i = 0; i < sc.dim(); ++i)
        for (int j = 0; j < sc.dim(); ++j)
            for (int k = 0; k < sc.dim(); ++k)
                if (!sc.at(i, j, k).is_zero()) return false;
    return true;
}

} // namespace

ContractionVerdict contraction_criteria(const StructureConstants& l,
                                        const StructureConstants& l0) {
    if (l.dim() != l0.dim())
        throw LieInvError("DimMismatch", "contraction criteria need equal dimensions");
    if (l.kind() != l0.kind())
        throw LieInvError("KindMismatch", "contraction criteria need matching kinds");
    ContractionVerdict v;
    InvariantFunction psi_l = invariant_function(l, WhichFunction::psi);
    InvariantFunction psi_l0 = invariant_function(l0, WhichFunction::psi);
    v.psi_leq = leq_criterion("psi_leq", psi_l, psi_l0);

    v.psi1_strict.name = "psi1_strict";
    int a = evaluate(psi_l, Scalar(1)), b = evaluate(psi_l0, Scalar(1));
    v.psi1_strict.pass = a < b;
    if (!v.psi1_strict.pass) {
        LeqWitness w;
        w.factor = UniPoly::linear_from_root(Scalar(1));
        w.point = Scalar(1);
        w.lhs = a;
        w.rhs = b;
        v.psi1_strict.witness = w;
    }

    if (l.kind() == AlgKind::lie) {
        v.phi_leq = leq_criterion("phi_leq", invariant_function(l, WhichFunction::phi),
                                  invariant_function(l0, WhichFunction::phi));
        v.phi0_leq = leq_criterion("phi0_leq", invariant_function(l, WhichFunction::phi0),
                                   invariant_function(l0, WhichFunction::phi0));
    } else {
        v.phi_leq = {"phi_leq", false, true, std::nullopt};
        v.phi0_leq = {"phi0_leq", false, true, std::nullopt};
    }
    v.decision = v.failed() ? ContractionDecision::Excluded : ContractionDecision::NotExcluded;
    if (const CriterionResult* f = v.failed()) v.detail = "excluded by " + f->name;
    return v;
}

namespace {

ContractionVerdict decide_iff(const StructureConstants& l, const StructureConstants& l0,
                              int required_dim, AlgKind kind, const char* what) {
    if (l.dim() != required_dim || l0.dim() != required_dim)
        throw LieInvError("DimMismatch", std::string(what) + " needs dimension " +
                                             std::to_string(required_dim));
    if (l.kind() != kind || l0.kind() != kind)
        throw LieInvError("KindMismatch", std::string(what) + " kind mismatch");
    ContractionVerdict v = contraction_criteria(l, l0);
    bool criterion = v.psi_leq.pass && v.psi1_strict.pass;
    if (criterion && !is_abelian(l0)) {
        v.decision = ContractionDecision::Exists;
        v.detail = "psi criterion satisfied";
    } else {
        v.decision = ContractionDecision::Excluded;
        if (criterion) v.detail = "abelian target (trivial contraction)";
    }
    return v;
}

} // namespace

ContractionVerdict decide_contraction3(const StructureConstants& l,
                                       const StructureConstants& l0) {
    return decide_iff(l, l0, 3, AlgKind::lie, "decide_contraction3");
}

ContractionVerdict decide_contraction_jordan2(const StructureConstants& j,
                                              const StructureConstants& j0) {
    return decide_iff(j, j0, 2, AlgKind::jordan, "decide_contraction_jordan2");
}

Scalar GradedSetup::eps(std::pair<int, int> g, std::pair<int, int> h) const {
    auto key = g <= h ? std::make_pair(g, h) : std::make_pair(h, g);
    auto it = epsilon.find(key);
    return it == epsilon.end() ? Scalar(0) : it->second;
}

std::pair<int, int> GradedSetup::add(std::pair<int, int> g, std::pair<int, int> h) const {
    return {(g.first + h.first) % m1, m2 > 1 ? (g.second + h.second) % m2 : 0};
}

StructureConstants graded_apply(const StructureConstants& sc, const GradedSetup& setup) {
    int n = sc.dim();
    if (static_cast<int>(setup.grades.size()) != n)
        throw LieInvError("BadInput", "grading must label every basis vector");
    // grading closure: [L_i, L_j] inside L_{i+j}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto target = setup.add(setup.grades[i], setup.grades[j]);
            for (int k = 0; k < n; ++k)
                if (!sc.at(i, j, k).is_zero() && setup.grades[k] != target)
                    throw LieInvError("GradingNotClosed",
                                      "bracket [" + sc.basis()[i] + "," + sc.basis()[j] +
                                          "] leaves the graded component");
        }
    StructureConstants out(n, sc.kind(), sc.basis(), sc.name());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar e = setup.eps(setup.grades[i], setup.grades[j]);
            for (int k = 0; k < n; ++k) out.at(i, j, k) = e * sc.at(i, j, k);
        }
    ValidationReport rep = validate(out);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        std::string idx;
        for (int x : v.index) idx += (idx.empty() ? "" : ",") + std::to_string(x);
        throw LieInvError("JacobiFails", "contracted tensor violates " + v.law + " at (" + idx + ")");
    }
    return out;
}

StructureConstants limit_contraction(const StructureConstants& sc, const Matrix<RatFunc>& u) {
    int n = sc.dim();
    if (static_cast<int>(u.size()) != n)
        throw LieInvError("BadInput", "u must be a square matrix of size dim");
    // invert u over the rational-function field
    Matrix<RatFunc> aug(n, std::vector<RatFunc>(2 * n, RatFunc()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = u[i][j];
        aug[i][n + i] = RatFunc(Scalar(1));
    }
    std::vector<int> pivots = rref(aug);
    if (pivots.size() != static_cast<size_t>(n) || pivots.back() >= n)
        throw LieInvError("SingularU", "u(eps) is singular over the function field");
    Matrix<RatFunc> uinv(n, std::vector<RatFunc>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) uinv[i][j] = aug[i][n + j];

    StructureConstants out(n, sc.kind(), sc.basis(), sc.name());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // [u e_i, u e_j] in old coordinates, as rational functions
            std::vector<RatFunc> prod(n);
            for (int p = 0; p < n; ++p) {
                if (u[p][i].is_zero()) continue;
                for (int q = 0; q < n; ++q) {
                    if (u[q][j].is_zero()) continue;
                    RatFunc f = u[p][i] * u[q][j];
                    for (int s = 0; s < n; ++s) {
                        const Scalar& c = sc.at(p, q, s);
                        if (!c.is_zero()) prod[s] += f * RatFunc(c);
                    }
                }
            }
            for (int k = 0; k < n; ++k) {
                RatFunc entry;
                for (int s = 0; s < n; ++s)
                    if (!prod[s].is_zero()) entry += uinv[k][s] * prod[s];
                auto lim = entry.limit_at_zero();
                if (!lim)
                    throw LieInvError("DivergentEntry",
                                      "structure constant c^" + std::to_string(k + 1) + "_{" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "} diverges as eps -> 0+");
                out.at(i, j, k) = *lim;
            }
        }
    ValidationReport rep = validate(out);
    if (!rep.ok())
        throw LieInvError("LawViolation", "limit tensor violates the algebra laws");
    return out;
}

} // namespace lieinv
