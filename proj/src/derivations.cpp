#include "lieinv/derivations.hpp"

namespace lieinv {

AbcTriple CanonicalAbc::triple() const {
    switch (cls) {
        case AbcClass::d00: return {delta, Scalar(0), Scalar(0)};
        case AbcClass::d1m1: return {delta, Scalar(1), Scalar(-1)};
        case AbcClass::d10: return {delta, Scalar(1), Scalar(0)};
        default: return {delta, Scalar(1), Scalar(1)};
    }
}

CanonicalAbc canonicalize_abc(const AbcTriple& t) {
    const Scalar &a = t.alpha, &b = t.beta, &g = t.gamma;
    if ((b + g).is_zero()) {
        if (b.is_zero()) {
            // D(a,0,0); scale to delta in {0,1}
            return {AbcClass::d00, a.is_zero() ? Scalar(0) : Scalar(1)};
        }
        // b = -g != 0: equals D(0,1,-1) n D(a,0,0), i.e. delta in {0,1}
        return {AbcClass::d1m1, a.is_zero() ? Scalar(0) : Scalar(1)};
    }
    if (b != g) return {AbcClass::d10, a / (b + g)};
    return {AbcClass::d11, a / b};
}

OperatorSpace derivation_space(const StructureConstants& sc,
                               const std::vector<AbcTriple>& triples) {
    int n = sc.dim();
    ScalarMatrix sys;
    for (const auto& t : triples) {
        Matrix<Scalar> block = derivation_system<Scalar>(sc, t.alpha, t.beta, t.gamma);
        for (auto& row : block) sys.push_back(std::move(row));
    }
    Nullspace ns = nullspace(sys, static_cast<size_t>(n) * n);
    OperatorSpace os;
    os.dim_ambient = n;
    for (const auto& v : ns.basis) {
        ScalarMatrix mat(n, std::vector<Scalar>(n));
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) mat[r][s] = v[static_cast<size_t>(r) * n + s];
        os.basis.push_back(std::move(mat));
    }
    return os;
}

NamedSpaces named_spaces(const StructureConstants& sc) {
    if (sc.kind() != AlgKind::lie)
        throw LieInvError("KindMismatch", "named derivation spaces require a lie algebra");
    auto one = [&](long a, long b, long g) {
        return derivation_space(sc, {{Scalar(a), Scalar(b), Scalar(g)}});
    };
    NamedSpaces out;
    out.der = one(1, 1, 1);
    out.d011 = one(0, 1, 1);
    out.centroid = one(1, 1, 0);
    out.d100 = one(1, 0, 0);
    out.d010 = one(0, 1, 0);
    out.d11m1 = one(1, 1, -1);
    out.quasicentroid = one(0, 1, -1);
    out.der_cap_d011 = derivation_space(
        sc, {{Scalar(1), Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(1)}});
    out.d100_cap_d010 = derivation_space(
        sc, {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}});
    return out;
}

std::string operator_space_to_string(const OperatorSpace& os) {
    std::string out = "dim " + std::to_string(os.dim()) + "\n";
    for (const auto& m : os.basis) {
        for (const auto& row : m) {
            std::string line;
            for (const auto& x : row) {
                if (!line.empty()) line += " ";
                line += x.to_string();
            }
            out += "  [" + line + "]\n";
        }
        out += "\n";
    }
    return out;
}

} // namespace lieinv
