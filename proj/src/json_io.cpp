#include "lieinv/json_io.hpp"
#include "lieinv/classical.hpp"

#include <fstream>

namespace lieinv {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LieInvError("BadInput", "cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw LieInvError("BadInput", "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace

StructureConstants algebra_from_json(const Json& j) {
    if (!j.is_object()) throw LieInvError("BadInput", "algebra file must be a JSON object");
    int dim = j.at("dim").get<int>();
    AlgKind kind = kind_from_name(j.value("kind", "lie"));
    std::string name = j.value("name", "");
    std::vector<std::string> basis;
    if (j.contains("basis")) basis = j.at("basis").get<std::vector<std::string>>();
    std::map<std::string, Scalar> params;
    if (j.contains("parameters"))
        for (const auto& [key, val] : j.at("parameters").items())
            params[key] = Scalar::parse(val.get<std::string>());
    std::vector<BracketRelation> rels;
    if (j.contains("brackets"))
        for (const auto& b : j.at("brackets")) {
            if (!b.is_array() || b.size() != 3)
                throw LieInvError("BadInput", "each bracket must be [label, label, expr]");
            rels.emplace_back(b[0].get<std::string>(), b[1].get<std::string>(),
                              b[2].get<std::string>());
        }
    return from_brackets(dim, basis, rels, kind, params, name);
}

StructureConstants load_algebra_file(const std::string& path) {
    return algebra_from_json(read_json_file(path));
}

StructureConstants algebra_from_string(const std::string& text) {
    return algebra_from_json(Json::parse(text));
}

Json algebra_to_json(const StructureConstants& sc) {
    Json j;
    if (!sc.name().empty()) j["name"] = sc.name();
    j["dim"] = sc.dim();
    j["kind"] = kind_name(sc.kind());
    j["basis"] = sc.basis();
    Json brackets = Json::array();
    int n = sc.dim();
    for (int i = 0; i < n; ++i) {
        int j0 = sc.kind() == AlgKind::lie ? i + 1 : i;
        for (int jj = j0; jj < n; ++jj) {
            std::string rhs;
            for (int k = 0; k < n; ++k) {
                const Scalar& c = sc.at(i, jj, k);
                if (c.is_zero()) continue;
                std::string term;
                if (c.is_one()) {
                    term = sc.basis()[k];
                } else if (c == Scalar(-1)) {
                    term = "-" + sc.basis()[k];
                } else {
                    std::string cs = c.to_string();
                    if (!c.is_rational() && c.re() != 0) cs = "(" + cs + ")";
                    term = cs + "*" + sc.basis()[k];
                }
                if (rhs.empty())
                    rhs = term;
                else
                    rhs += term[0] == '-' ? term : "+" + term;
            }
            if (!rhs.empty())
                brackets.push_back(Json::array({sc.basis()[i], sc.basis()[jj], rhs}));
        }
    }
    j["brackets"] = brackets;
    return j;
}

GradedSetup graded_setup_from_json(const Json& j, int dim) {
    GradedSetup s;
    auto group = j.at("group").get<std::vector<int>>();
    if (group.empty() || group.size() > 2)
        throw LieInvError("BadInput", "group must be [m1] or [m1,m2]");
    s.m1 = group[0];
    s.m2 = group.size() > 1 ? group[1] : 1;
    if (s.m1 < 1 || s.m2 < 1) throw LieInvError("BadInput", "group orders must be positive");
    for (const auto& g : j.at("grades")) {
        if (g.is_number()) {
            s.grades.push_back({g.get<int>() % s.m1, 0});
        } else {
            auto v = g.get<std::vector<int>>();
            if (v.size() != 2) throw LieInvError("BadInput", "grades must be ints or pairs");
            s.grades.push_back({v[0] % s.m1, s.m2 > 1 ? v[1] % s.m2 : 0});
        }
    }
    if (static_cast<int>(s.grades.size()) != dim)
        throw LieInvError("BadInput", "grades must list one group element per basis vector");
    if (j.contains("epsilon"))
        for (const auto& e : j.at("epsilon")) {
            if (!e.is_array() || e.size() != 3)
                throw LieInvError("BadInput", "epsilon entries must be [g, h, value]");
            auto read_el = [&](const Json& x) -> std::pair<int, int> {
                if (x.is_number()) return {x.get<int>() % s.m1, 0};
                auto v = x.get<std::vector<int>>();
                if (v.size() != 2) throw LieInvError("BadInput", "bad group element in epsilon");
                return {v[0] % s.m1, s.m2 > 1 ? v[1] % s.m2 : 0};
            };
            auto g = read_el(e[0]), h = read_el(e[1]);
            Scalar val = Scalar::parse(e[2].get<std::string>());
            auto key = g <= h ? std::make_pair(g, h) : std::make_pair(h, g);
            auto it = s.epsilon.find(key);
            if (it != s.epsilon.end() && it->second != val)
                throw LieInvError("EpsilonNotSymmetric",
                                  "conflicting epsilon values for a symmetric pair");
            s.epsilon[key] = val;
        }
    return s;
}

GradedSetup load_graded_setup_file(const std::string& path, int dim) {
    return graded_setup_from_json(read_json_file(path), dim);
}

Matrix<RatFunc> umatrix_from_json(const Json& j, int dim) {
    auto rows = j.at("u");
    if (static_cast<int>(rows.size()) != dim)
        throw LieInvError("BadInput", "u must have dim rows");
    Matrix<RatFunc> u;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim)
            throw LieInvError("BadInput", "u must be square");
        std::vector<RatFunc> r;
        for (const auto& cell : row) {
            std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
            // rational functions in eps: parse num and optional /den at the
            // top level is handled by the polynomial parser plus division
            size_t slash = std::string::npos;
            int depth = 0;
            for (size_t k = 0; k < text.size(); ++k) {
                if (text[k] == '(') ++depth;
                if (text[k] == ')') --depth;
                if (text[k] == '/' && depth == 0) {
                    // only treat as rational-function split when the divisor
                    // mentions the parameter
                    std::string den = text.substr(k + 1);
                    if (den.find("eps") != std::string::npos ||
                        den.find("\xce\xb5") != std::string::npos) {
                        slash = k;
                        break;
                    }
                }
            }
            auto parse_poly = [](const std::string& s) {
                std::string t = s;
                // accept both the epsilon glyph and "eps"
                const std::string glyph = "\xce\xb5";
                for (size_t p = t.find(glyph); p != std::string::npos; p = t.find(glyph))
                    t.replace(p, glyph.size(), "eps");
                return UniPoly::parse(t, "eps");
            };
            if (slash == std::string::npos) {
                r.emplace_back(parse_poly(text));
            } else {
                r.emplace_back(parse_poly(text.substr(0, slash)),
                               parse_poly(text.substr(slash + 1)));
            }
        }
        u.push_back(std::move(r));
    }
    return u;
}

Matrix<RatFunc> load_umatrix_file(const std::string& path, int dim) {
    return umatrix_from_json(read_json_file(path), dim);
}

Json invariant_function_to_json(const InvariantFunction& f) {
    Json j;
    j["generic"] = f.generic;
    Json exc = Json::array();
    for (const auto& p : display_points(f)) {
        Json e;
        e["factor"] = p.factor;
        e["roots_display"] = p.text;
        e["exact"] = p.exact;
        e["value"] = p.value;
        exc.push_back(e);
    }
    j["exceptional"] = exc;
    return j;
}

Json inv_tuple_to_json(const InvTuple& t) {
    Json j;
    j["d"] = t.series.d;
    j["l"] = t.series.l;
    j["c"] = t.series.c;
    j["solvable"] = t.series.solvable;
    j["nilpotent"] = t.series.nilpotent;
    j["tau"] = t.tau;
    j["d111"] = t.d111;
    j["d011"] = t.d011;
    j["d110"] = t.d110;
    j["d111_011"] = t.d111_011;
    j["text"] = t.to_string();
    return j;
}

Json identification_to_json(const IdentificationResult& r) {
    Json j;
    j["label"] = r.label;
    if (!r.case_tag.empty()) j["case"] = r.case_tag;
    j["display"] = r.display();
    if (!r.param_names.empty()) {
        j["param_names"] = r.param_names;
        Json orbit = Json::array();
        for (const auto& tuple : r.orbit) {
            Json t = Json::array();
            for (const auto& v : tuple) t.push_back(v.to_string());
            orbit.push_back(t);
        }
        j["orbit"] = orbit;
        Json canon = Json::array();
        for (const auto& v : r.params) canon.push_back(v.to_string());
        j["params"] = canon;
    }
    j["evidence"] = r.evidence;
    return j;
}

Json verdict_to_json(const ContractionVerdict& v) {
    Json j;
    auto crit = [](const CriterionResult& c) {
        Json x;
        x["applicable"] = c.applicable;
        x["pass"] = c.pass;
        if (c.witness) {
            Json w;
            if (!c.witness->factor.is_zero()) w["factor"] = c.witness->factor.to_string();
            if (c.witness->point) w["point"] = c.witness->point->to_string();
            w["lhs"] = c.witness->lhs;
            w["rhs"] = c.witness->rhs;
            x["witness"] = w;
        }
        return x;
    };
    j["psi_leq"] = crit(v.psi_leq);
    j["psi1_strict"] = crit(v.psi1_strict);
    j["phi_leq"] = crit(v.phi_leq);
    j["phi0_leq"] = crit(v.phi0_leq);
    j["decision"] = decision_name(v.decision);
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

Json validation_to_json(const ValidationReport& rep) {
    Json j;
    j["valid"] = rep.ok();
    Json v = Json::array();
    for (const auto& x : rep.violations) {
        Json e;
        e["law"] = x.law;
        e["index"] = x.index;
        v.push_back(e);
    }
    j["violations"] = v;
    return j;
}

} // namespace lieinv
