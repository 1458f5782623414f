#include <CLI11.hpp>

#include "lieinv/classical.hpp"
#include "lieinv/json_io.hpp"

#include <atomic>
#include <filesystem>
#include <future>
#include <iostream>

using namespace lieinv;

namespace {

int thread_cap() {
    if (const char* env = std::getenv("LIEINV_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Deterministic parallel map: results are collected and consumed in input
/// order regardless of the number of worker threads.
template <class T, class F>
std::vector<T> parallel_map(int count, F&& fn) {
    int threads = std::min(thread_cap(), count);
    std::vector<T> out(count);
    if (threads <= 1) {
        for (int k = 0; k < count; ++k) out[k] = fn(k);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::future<void>> workers;
    for (int w = 0; w < threads; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
            for (;;) {
                int k = next.fetch_add(1);
                if (k >= count) return;
                out[k] = fn(k);
            }
        }));
    for (auto& w : workers) w.get();
    return out;
}

StructureConstants load_input(const std::string& arg) {
    if (std::filesystem::exists(arg)) return load_algebra_file(arg);
    if (catalog_find(arg)) return catalog_get(arg);
    throw LieInvError("BadInput", "no such file or parameter-free catalog label: " + arg);
}

std::map<std::string, Scalar> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, Scalar> params;
    for (const auto& kv : kvs) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos)
            throw LieInvError("BadInput", "--param expects name=value, got: " + kv);
        params[kv.substr(0, eq)] = Scalar::parse(kv.substr(eq + 1));
    }
    return params;
}

bool json_output = false;

void emit(const Json& j, const std::string& text) {
    if (json_output)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_check(const std::string& file) {
    StructureConstants sc = load_input(file);
    ValidationReport rep = validate(sc);
    Json j = validation_to_json(rep);
    j["dim"] = sc.dim();
    j["kind"] = kind_name(sc.kind());
    if (rep.ok()) {
        emit(j, "valid " + kind_name(sc.kind()) + " algebra, dim " + std::to_string(sc.dim()) +
                    "\n");
        return 0;
    }
    std::string text = "invalid " + kind_name(sc.kind()) + " algebra, dim " +
                       std::to_string(sc.dim()) + "\n";
    for (const auto& v : rep.violations) {
        text += "  " + v.law + " violated at (";
        for (size_t k = 0; k < v.index.size(); ++k)
            text += (k ? "," : "") + std::to_string(v.index[k]);
        text += ")\n";
    }
    emit(j, text);
    return 1;
}

int cmd_inv(const std::string& file) {
    StructureConstants sc = load_input(file);
    InvTuple t = inv_tuple(sc);
    emit(inv_tuple_to_json(t), t.to_string() + "\n");
    return 0;
}

int cmd_fun(const std::string& which, const std::string& file) {
    StructureConstants sc = load_input(file);
    InvariantFunction f = invariant_function(sc, which_from_name(which));
    emit(invariant_function_to_json(f), render_table(f, which));
    return 0;
}

int cmd_identify(const std::string& file) {
    StructureConstants sc = load_input(file);
    IdentificationResult r = identify(sc);
    std::string text = r.display() + "\n";
    if (r.orbit.size() > 1) {
        text += "isomorphic parameter orbit:";
        for (const auto& tuple : r.orbit) {
            text += " (";
            for (size_t k = 0; k < tuple.size(); ++k)
                text += (k ? "," : "") + tuple[k].to_string();
            text += ")";
        }
        text += "\n";
    }
    emit(identification_to_json(r), text);
    return 0;
}

std::string verdict_text(const ContractionVerdict& v) {
    std::string text = decision_name(v.decision);
    if (!v.detail.empty()) text += " (" + v.detail + ")";
    text += "\n";
    for (const CriterionResult* c : {&v.psi_leq, &v.psi1_strict, &v.phi_leq, &v.phi0_leq}) {
        if (!c->applicable) continue;
        text += "  " + c->name + ": " + (c->pass ? "pass" : "fail");
        if (c->witness) {
            text += " [";
            if (c->witness->point)
                text += "alpha = " + c->witness->point->to_string();
            else
                text += "factor " + c->witness->factor.to_string();
            text += ": " + std::to_string(c->witness->lhs) + " vs " +
                    std::to_string(c->witness->rhs) + "]";
        }
        text += "\n";
    }
    return text;
}

int cmd_contract(const std::string& from, const std::string& to, bool criteria_only) {
    StructureConstants l = load_input(from), l0 = load_input(to);
    ContractionVerdict v;
    if (!criteria_only && l.kind() == AlgKind::lie && l.dim() == 3 && l0.dim() == 3)
        v = decide_contraction3(l, l0);
    else if (!criteria_only && l.kind() == AlgKind::jordan && l.dim() == 2 && l0.dim() == 2)
        v = decide_contraction_jordan2(l, l0);
    else
        v = contraction_criteria(l, l0);
    emit(verdict_to_json(v), verdict_text(v));
    return 0;
}

int cmd_scan(bool jordan) {
    std::vector<std::pair<std::string, StructureConstants>> algs;
    if (jordan) {
        for (const char* l : {"2j_1", "j_{2,1}", "j_{2,2}", "j_{2,3}", "j_{2,4}", "j_{2,5}"})
            algs.emplace_back(l, catalog_get(l));
    } else {
        for (const char* l :
             {"3g_1", "g_{2,1}+g_1", "g_{3,1}", "g_{3,2}", "g_{3,3}", "g_{3,4}(-1)"})
            algs.emplace_back(l, catalog_get(l));
        algs.emplace_back("g_{3,4}(2)", catalog_get("g_{3,4}", {{"a", Scalar(2)}}));
        algs.emplace_back("sl(2,C)", catalog_get("sl(2,C)"));
    }
    int n = static_cast<int>(algs.size());
    std::vector<ContractionDecision> cells = parallel_map<ContractionDecision>(n * n, [&](int k) {
        int i = k / n, j = k % n;
        if (i == j) return ContractionDecision::Excluded;
        ContractionVerdict v = jordan
                                   ? decide_contraction_jordan2(algs[i].second, algs[j].second)
                                   : decide_contraction3(algs[i].second, algs[j].second);
        return v.decision;
    });
    Json rows = Json::array();
    std::string text;
    size_t w = 0;
    for (const auto& [l, sc] : algs) w = std::max(w, l.size());
    for (int i = 0; i < n; ++i) {
        std::string name = algs[i].first;
        name.resize(w, ' ');
        text += name + " -> ";
        Json row = Json::array();
        for (int j = 0; j < n; ++j) {
            bool e = cells[i * n + j] == ContractionDecision::Exists;
            text += e ? " E" : " .";
            if (e) row.push_back(algs[j].first);
        }
        text += "\n";
        rows.push_back(Json{{"from", algs[i].first}, {"contracts_to", row}});
    }
    std::string legend = "columns:";
    for (const auto& [l, sc] : algs) legend += " " + l;
    emit(rows, legend + "\n" + text);
    return 0;
}

int cmd_graded(const std::string& host, const std::string& setup) {
    StructureConstants sc = load_input(host);
    GradedSetup gs = load_graded_setup_file(setup, sc.dim());
    StructureConstants got = graded_apply(sc, gs);
    got.set_name(sc.name().empty() ? "graded contraction" : sc.name() + " (graded)");
    Json j = algebra_to_json(got);
    std::string text;
    for (const auto& b : got.bracket_strings()) text += b + "\n";
    if (text.empty()) text = "(abelian)\n";
    emit(j, text);
    return 0;
}

int cmd_limit(const std::string& file, const std::string& umatrix) {
    StructureConstants sc = load_input(file);
    Matrix<RatFunc> u = load_umatrix_file(umatrix, sc.dim());
    StructureConstants got = limit_contraction(sc, u);
    got.set_name(sc.name().empty() ? "limit contraction" : sc.name() + " (limit)");
    Json j = algebra_to_json(got);
    std::string text;
    for (const auto& b : got.bracket_strings()) text += b + "\n";
    if (text.empty()) text = "(abelian)\n";
    emit(j, text);
    return 0;
}

int cmd_catalog(bool list, const std::string& label, const std::vector<std::string>& params) {
    if (list) {
        Json arr = Json::array();
        std::string text;
        for (const auto& e : catalog_entries()) {
            Json j;
            j["label"] = e.label;
            j["dim"] = e.dim;
            j["kind"] = kind_name(e.kind);
            if (!e.params.empty()) j["parameters"] = e.params;
            if (!e.aliases.empty()) j["aliases"] = e.aliases;
            if (!e.nota_nes.empty()) j["notation"] = e.nota_nes;
            if (!e.nota_bur.empty()) j["notation_gz"] = e.nota_bur;
            if (!e.nota_ay.empty()) j["notation_ay"] = e.nota_ay;
            arr.push_back(j);
            text += e.label;
            if (!e.params.empty()) {
                text += " [";
                for (size_t k = 0; k < e.params.size(); ++k) text += (k ? "," : "") + e.params[k];
                text += "]";
            }
            text += "  dim " + std::to_string(e.dim) + " " + kind_name(e.kind);
            for (const auto& a : e.aliases) text += "  " + a;
            if (!e.nota_ay.empty()) text += "  ~ " + e.nota_ay;
            text += "\n";
        }
        emit(arr, text);
        return 0;
    }
    StructureConstants sc = catalog_get(label, parse_params(params));
    std::cout << algebra_to_json(sc).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, identification, and contractions of low-dimensional "
                 "complex Lie and Jordan algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file, which = "psi", from, to, host, setup, umatrix, label;
    std::vector<std::string> params;
    bool criteria_only = false, scan3 = false, scan_jordan2 = false, list = false;

    auto* check = app.add_subcommand("check", "validate an algebra file");
    check->add_option("file", file)->required();

    auto* inv = app.add_subcommand("inv", "print the inv tuple");
    inv->add_option("file", file)->required();

    auto* fun = app.add_subcommand("fun", "print an invariant function table");
    fun->add_option("--which", which, "psi | psi0 | phi | phi0")
        ->check(CLI::IsMember({"psi", "psi0", "phi", "phi0"}));
    fun->add_option("file", file)->required();

    auto* identify_cmd = app.add_subcommand("identify", "identify a low-dimensional algebra");
    identify_cmd->add_option("file", file)->required();

    auto* contract = app.add_subcommand("contract", "contraction criteria and decisions");
    contract->add_option("from", from);
    contract->add_option("to", to);
    contract->add_flag("--criteria-only", criteria_only, "necessary criteria only");
    contract->add_flag("--scan3", scan3, "full 3-dimensional contraction matrix");
    contract->add_flag("--scan-jordan2", scan_jordan2, "2-dimensional jordan matrix");

    auto* graded = app.add_subcommand("graded", "apply a graded contraction");
    graded->add_option("host", host)->required();
    graded->add_option("setup", setup)->required();

    auto* limit = app.add_subcommand("limit", "one-parametric limit contraction");
    limit->add_option("file", file)->required();
    limit->add_option("umatrix", umatrix)->required();

    auto* catalog = app.add_subcommand("catalog", "built-in algebra catalog");
    catalog->add_flag("--list", list, "list all entries");
    catalog->add_option("--get", label, "instantiate an entry by label");
    catalog->add_option("--param", params, "parameter assignment name=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    json_output = format == "json";
    try {
        if (check->parsed()) return cmd_check(file);
        if (inv->parsed()) return cmd_inv(file);
        if (fun->parsed()) return cmd_fun(which, file);
        if (identify_cmd->parsed()) return cmd_identify(file);
        if (contract->parsed()) {
            if (scan3) return cmd_scan(false);
            if (scan_jordan2) return cmd_scan(true);
            if (from.empty() || to.empty())
                throw LieInvError("BadInput", "contract needs FROM and TO (or a --scan mode)");
            return cmd_contract(from, to, criteria_only);
        }
        if (graded->parsed()) return cmd_graded(host, setup);
        if (limit->parsed()) return cmd_limit(file, umatrix);
        if (catalog->parsed()) {
            if (!list && label.empty())
                throw LieInvError("BadInput", "catalog needs --list or --get LABEL");
            return cmd_catalog(list, label, params);
        }
    } catch (const LieInvError& e) {
        if (json_output) {
            Json j;
            j["error"] = {{"code", e.code()}, {"message", e.what()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
