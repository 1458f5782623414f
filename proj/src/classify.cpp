#include "lieinv/classify.hpp"

#include <algorithm>
#include <mutex>

namespace lieinv {

namespace {

/// Cached psi/phi tables of catalog instances, keyed by label.
struct TableCache {
    std::map<std::string, InvariantFunction> psi, phi;
    std::mutex mu;

    const InvariantFunction& get(const std::string& label, WhichFunction w) {
        std::lock_guard<std::mutex> lock(mu);
        auto& store = w == WhichFunction::psi ? psi : phi;
        auto it = store.find(label);
        if (it == store.end()) {
            StructureConstants sc = catalog_get(label);
            it = store.emplace(label, invariant_function(sc, w)).first;
        }
        return it->second;
    }
};

TableCache& cache() {
    static TableCache c;
    return c;
}

/// Q(i) roots of all degree<=2 factors of the given polynomial list.
std::vector<Scalar> exact_roots(const UniPoly& p) {
    std::vector<Scalar> roots;
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
    } else if (p.degree() == 2) {
        Scalar b = p.coeff(1) / p.coeff(2), c = p.coeff(0) / p.coeff(2);
        Scalar disc = b * b - Scalar(4) * c;
        if (auto rt = disc.sqrt_exact()) {
            roots.push_back((-b + *rt) / Scalar(2));
            roots.push_back((-b - *rt) / Scalar(2));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// All Q(i) points where f attains the given value (only factors of degree
/// <=2 can contribute exact roots; higher-degree factors yield none).
std::vector<Scalar> value_points(const InvariantFunction& f, int value) {
    std::vector<Scalar> pts;
    for (const auto& [p, v] : f.exceptional) {
        if (v != value) continue;
        for (const auto& r : exact_roots(p)) pts.push_back(r);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::string sig_text(const OccurrenceSignature& s) { return s.to_string(); }

bool scalar_tuple_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    for (size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return a.size() < b.size();
}

IdentificationResult fixed_result(const std::string& label, const std::string& tag,
                                  const std::string& evidence) {
    IdentificationResult r;
    r.label = label;
    r.case_tag = tag;
    r.evidence = evidence;
    return r;
}

/// Verify a family candidate by instantiation; true when psi (and phi when
/// given) match the input's tables exactly.
bool verify_member(const std::string& label, const std::vector<std::string>& slots,
                   const std::vector<Scalar>& values, const InvariantFunction& psi_in,
                   const InvariantFunction* phi_in) {
    std::map<std::string, Scalar> p;
    for (size_t k = 0; k < slots.size(); ++k) p[slots[k]] = values[k];
    StructureConstants sc;
    try {
        sc = catalog_get(label, p);
    } catch (const LieInvError&) {
        return false;
    }
    if (invariant_function(sc, WhichFunction::psi) != psi_in) return false;
    if (phi_in && invariant_function(sc, WhichFunction::phi) != *phi_in) return false;
    return true;
}

} // namespace

std::string IdentificationResult::display() const {
    std::string s = label;
    if (const CatalogEntry* e = catalog_find(label))
        if (!e->nota_nes.empty()) s = e->nota_nes;
    if (!param_names.empty() && !params.empty()) {
        s += ", ";
        for (size_t k = 0; k < param_names.size(); ++k) {
            if (k) s += ", ";
            s += param_names[k] + " = " + params[k].to_string();
        }
    }
    return s;
}

IdentificationResult identify3(const StructureConstants& sc) {
    if (sc.dim() != 3 || sc.kind() != AlgKind::lie)
        throw LieInvError("BadInput", "identify3 requires a 3-dimensional lie algebra");
    InvariantFunction psi_in = invariant_function(sc, WhichFunction::psi);
    static const char* fixed[] = {"3g_1",   "g_{2,1}+g_1", "g_{3,1}", "g_{3,2}",
                                  "g_{3,3}", "g_{3,4}(-1)", "sl(2,C)"};
    for (const char* label : fixed) {
        if (psi_in == cache().get(label, WhichFunction::psi))
            return fixed_result(label, "", "psi = " + sig_text(signature(psi_in)));
    }
    // continuum g_{3,4}(a): psi is 4 on {1, a, 1/a} and 3 elsewhere
    auto norm = psi_in.normalized();
    if (psi_in.generic == 3 && norm.size() == 1 && norm.count(4) && norm.at(4).degree() == 3) {
        UniPoly p = norm.at(4);
        UniPoly lin1 = UniPoly::linear_from_root(Scalar(1));
        if (poly_gcd(p, lin1).degree() == 1) {
            UniPoly q = (p / lin1).monic();
            IdentificationResult r;
            r.label = "g_{3,4}";
            r.param_names = {"a"};
            r.evidence = "psi = " + sig_text(signature(psi_in));
            for (const auto& root : exact_roots(q)) {
                if (verify_member("g_{3,4}", {"a"}, {root}, psi_in, nullptr))
                    r.orbit.push_back({root});
            }
            if (!r.orbit.empty()) {
                std::sort(r.orbit.begin(), r.orbit.end(), scalar_tuple_less);
                r.params = r.orbit.front();
                return r;
            }
            // parameters outside Q(i): report the factor carrying the orbit
            r.evidence += "; orbit = roots of " + q.to_string();
            return r;
        }
    }
    throw LieInvError("NoMatch", "psi table matches no 3-dimensional lie algebra");
}

namespace {

enum class Recover4 { none, g8, g11, g17, g18, g19, g20, g21, g28 };

struct Case4 {
    int case_no;
    const char* label;
    int psi_gen;
    std::vector<std::pair<int, int>> psi_counts; // value -> occurrences
    int phi_gen;
    std::vector<std::pair<int, int>> phi_counts;
    Recover4 recover;
};

const std::vector<Case4>& case_table() {
    static const std::vector<Case4> t = {
        {1, "4g_1", 16, {}, 24, {}, Recover4::none},
        {2, "g_{2,1}+2g_1", 8, {{11, 1}}, 14, {{16, 1}}, Recover4::none},
        {3, "g_{2,1}+g_{2,1}", 4, {{6, 1}}, 10, {{12, 2}}, Recover4::none},
        {4, "g_{3,1}+g_1", 10, {{11, 1}}, 19, {{20, 1}}, Recover4::none},
        {5, "g_{3,2}+g_1", 5, {{6, 1}, {7, 1}}, 12, {{13, 1}}, Recover4::none},
        {6, "g_{3,3}+g_1", 5, {{7, 1}, {8, 1}}, 12, {{15, 1}}, Recover4::none},
        {7, "g_{3,4}(-1)+g_1", 5, {{6, 1}, {7, 2}}, 14, {{15, 1}, {16, 2}}, Recover4::none},
        {8, "g_{3,4}+g_1", 5, {{6, 3}, {7, 1}}, 12, {{13, 3}}, Recover4::g8},
        {9, "sl(2,C)+g_1", 1, {{2, 1}, {4, 2}, {6, 1}}, 9, {{10, 1}, {12, 2}, {14, 1}},
         Recover4::none},
        {10, "g_{4,1}", 7, {}, 15, {{16, 2}}, Recover4::none},
        {11, "g_{4,2}", 4, {{5, 2}, {6, 1}}, 12, {{13, 2}}, Recover4::g11},
        {12, "g_{4,2}(1)", 4, {{8, 1}}, 12, {{15, 1}}, Recover4::none},
        {13, "g_{4,2}(-2)", 4, {{5, 2}, {6, 1}}, 12, {{15, 1}}, Recover4::none},
        {14, "g_{4,2}(-1)", 4, {{6, 2}}, 12, {{13, 1}, {16, 1}}, Recover4::none},
        {15, "g_{4,3}", 6, {{7, 1}}, 13, {{16, 1}}, Recover4::none},
        {16, "g_{4,4}", 4, {{6, 1}}, 12, {{13, 1}}, Recover4::none},
        {17, "g_{4,5}", 4, {{5, 6}, {6, 1}}, 12, {{13, 3}}, Recover4::g17},
        {18, "g_{4,5}(a,-1-a)", 4, {{5, 6}, {6, 1}}, 12, {{15, 1}}, Recover4::g18},
        {19, "g_{4,5}(a,a^2)", 4, {{5, 2}, {6, 3}}, 12, {{13, 3}}, Recover4::g19},
        {20, "g_{4,5}(a,1)", 4, {{6, 2}, {8, 1}}, 12, {{13, 1}, {15, 1}}, Recover4::g20},
        {21, "g_{4,5}(a,-1)", 4, {{5, 4}, {6, 2}}, 12, {{13, 2}, {16, 1}}, Recover4::g21},
        {22, "g_{4,5}(1,1)", 4, {{12, 1}}, 12, {{18, 1}}, Recover4::none},
        {23, "g_{4,5}(-1,1)", 4, {{8, 2}}, 12, {{13, 1}, {20, 1}}, Recover4::none},
        {24, "g_{4,5}(-2,1)", 4, {{6, 2}, {8, 1}}, 12, {{16, 1}}, Recover4::none},
        {25, "(g-25)", 4, {{6, 1}, {7, 2}}, 12, {{15, 1}}, Recover4::none},
        {26, "g_{4,5}(i,-1)", 4, {{6, 4}}, 12, {{13, 2}, {16, 1}}, Recover4::none},
        {27, "g_{4,7}", 3, {{4, 1}, {5, 1}}, 11, {{12, 3}}, Recover4::none},
        {28, "g_{4,8}", 3, {{4, 3}, {5, 1}}, 11, {{12, 5}}, Recover4::g28},
        {29, "g_{4,8}(1)", 3, {{4, 1}, {7, 1}}, 11, {{12, 2}, {14, 1}}, Recover4::none},
        {30, "g_{4,8}(2)", 3, {{4, 1}, {5, 2}}, 11, {{12, 5}}, Recover4::none},
        {31, "g_{4,8}(0)", 4, {{5, 1}, {6, 1}}, 11, {{12, 1}, {13, 1}}, Recover4::none},
        {32, "g_{4,8}(-1)", 4, {{5, 1}, {6, 1}}, 12, {{13, 1}, {14, 1}}, Recover4::none},
        {33, "g_{4,8}(-2)", 3, {{4, 3}, {5, 1}}, 11, {{12, 2}, {16, 1}}, Recover4::none},
        {34, "(g-34)", 3, {{4, 3}, {5, 1}}, 11, {{12, 4}}, Recover4::none},
    };
    return t;
}

bool sig_matches(const OccurrenceSignature& s, int gen,
                 const std::vector<std::pair<int, int>>& counts) {
    if (s.generic != gen) return false;
    if (s.counts.size() != counts.size()) return false;
    for (const auto& [v, c] : counts) {
        auto it = s.counts.find(v);
        if (it == s.counts.end() || it->second != c) return false;
    }
    return true;
}

} // namespace

IdentificationResult identify4(const StructureConstants& sc) {
    if (sc.dim() != 4 || sc.kind() != AlgKind::lie)
        throw LieInvError("BadInput", "identify4 requires a 4-dimensional lie algebra");
    InvariantFunction psi_in = invariant_function(sc, WhichFunction::psi);
    InvariantFunction phi_in = invariant_function(sc, WhichFunction::phi);
    OccurrenceSignature ps = signature(psi_in), fs = signature(phi_in);

    const Case4* match = nullptr;
    for (const auto& c : case_table()) {
        if (sig_matches(ps, c.psi_gen, c.psi_counts) && sig_matches(fs, c.phi_gen, c.phi_counts)) {
            if (match)
                throw LieInvError("AmbiguousSignature",
                                  "signatures match both " + std::string(match->label) + " and " +
                                      c.label);
            match = &c;
        }
    }
    if (!match)
        throw LieInvError("NoMatch", "psi/phi signatures match no 4-dimensional case: psi " +
                                         sig_text(ps) + ", phi " + sig_text(fs));

    std::string tag = "(g-" + std::to_string(match->case_no) + ")";
    std::string evidence = "psi " + sig_text(ps) + "; phi " + sig_text(fs);

    if (match->recover == Recover4::none) {
        // fixed entry: confirm the full tables against the catalog instance
        if (psi_in != cache().get(match->label, WhichFunction::psi) ||
            phi_in != cache().get(match->label, WhichFunction::phi))
            throw LieInvError("NoMatch", "signature matched " + std::string(match->label) +
                                             " but the exceptional points differ");
        return fixed_result(match->label, tag, evidence);
    }

    IdentificationResult r;
    r.label = match->label;
    r.case_tag = tag;
    r.evidence = evidence;
    const CatalogEntry* entry = catalog_find(match->label);
    r.param_names = entry->params;

    std::vector<std::vector<Scalar>> candidates;
    switch (match->recover) {
        case Recover4::g8:
        case Recover4::g19: {
            // a among the psi-value-6 points different from 1
            for (const auto& z : value_points(psi_in, 6))
                if (z != Scalar(1)) candidates.push_back({z});
            break;
        }
        case Recover4::g11: {
            // z1, z2 with phi = 13; a = z-1 for the right assignment
            for (const auto& z : value_points(phi_in, 13)) candidates.push_back({z - Scalar(1)});
            break;
        }
        case Recover4::g17: {
            auto zs = value_points(phi_in, 13);
            if (zs.size() == 3) {
                int idx[3] = {0, 1, 2};
                std::sort(idx, idx + 3);
                do {
                    const Scalar &z2 = zs[idx[1]], &z3 = zs[idx[2]];
                    if ((z2 + Scalar(1)).is_zero()) continue;
                    Scalar a = (z3 + Scalar(1)) / (z2 + Scalar(1));
                    Scalar b = (z2 * z3 - Scalar(1)) / (z2 + Scalar(1));
                    candidates.push_back({a, b});
                } while (std::next_permutation(idx, idx + 3));
            }
            break;
        }
        case Recover4::g18: {
            for (const auto& z : value_points(psi_in, 5)) candidates.push_back({z});
            break;
        }
        case Recover4::g20: {
            for (const auto& z : value_points(phi_in, 15)) candidates.push_back({z - Scalar(1)});
            break;
        }
        case Recover4::g21: {
            for (const auto& z : value_points(phi_in, 13)) candidates.push_back({z + Scalar(1)});
            break;
        }
        case Recover4::g28: {
            for (const auto& z : value_points(psi_in, 4))
                if (z != Scalar(2)) candidates.push_back({z});
            break;
        }
        default: break;
    }

    std::sort(candidates.begin(), candidates.end(), scalar_tuple_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& cand : candidates) {
        if (verify_member(match->label, entry->params, cand, psi_in, &phi_in))
            r.orbit.push_back(cand);
    }
    if (r.orbit.empty())
        throw LieInvError("NoMatch", "case " + tag + " matched but no admissible parameter "
                                                     "value reproduces the tables");
    r.params = r.orbit.front();
    return r;
}

IdentificationResult identify_jordan2(const StructureConstants& sc) {
    if (sc.kind() != AlgKind::jordan || sc.dim() > 2)
        throw LieInvError("BadInput", "identify_jordan2 requires a jordan algebra of dim <= 2");
    InvariantFunction psi_in = invariant_function(sc, WhichFunction::psi);
    static const char* dim1[] = {"j_1", "j_{1,1}"};
    static const char* dim2[] = {"2j_1", "j_{2,1}", "j_{2,2}", "j_{2,3}", "j_{2,4}", "j_{2,5}"};
    if (sc.dim() == 1) {
        for (const char* label : dim1)
            if (psi_in == cache().get(label, WhichFunction::psi))
                return fixed_result(label, "", "psi = " + sig_text(signature(psi_in)));
    } else {
        for (const char* label : dim2)
            if (psi_in == cache().get(label, WhichFunction::psi))
                return fixed_result(label, "", "psi = " + sig_text(signature(psi_in)));
    }
    throw LieInvError("NoMatch", "psi table matches no low-dimensional jordan algebra");
}

IdentificationResult identify(const StructureConstants& sc) {
    if (sc.kind() == AlgKind::jordan) return identify_jordan2(sc);
    if (sc.kind() != AlgKind::lie) throw LieInvError("BadInput", "cannot identify raw algebras");
    if (sc.dim() == 3) return identify3(sc);
    if (sc.dim() == 4) return identify4(sc);
    if (sc.dim() <= 2) {
        InvariantFunction psi_in = invariant_function(sc, WhichFunction::psi);
        static const char* low[] = {"g_1", "2g_1", "g_{2,1}"};
        for (const char* label : low) {
            const CatalogEntry* e = catalog_find(label);
            if (e->dim != sc.dim()) continue;
            if (psi_in == cache().get(label, WhichFunction::psi))
                return fixed_result(label, "", "psi = " + sig_text(signature(psi_in)));
        }
        throw LieInvError("NoMatch", "no low-dimensional lie match");
    }
    throw LieInvError("BadInput", "identification implemented for dim <= 4");
}

} // namespace lieinv
