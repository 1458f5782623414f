#include "lieinv/catalog.hpp"

namespace lieinv {

namespace {

using Params = std::map<std::string, Scalar>;
using Admiss = std::function<std::optional<std::string>(const Params&)>;

Scalar sc_of(long n, long d = 1) { return Scalar::of(n, d); }

/// Forbidden values with an optional redirect label per value.
Admiss forbid(const std::string& slot, std::vector<std::pair<Scalar, std::string>> bad) {
    return [slot, bad = std::move(bad)](const Params& p) -> std::optional<std::string> {
        const Scalar& v = p.at(slot);
        for (const auto& [value, redirect] : bad) {
            if (v == value) {
                std::string msg = slot + " = " + value.to_string() + " is not admissible";
                if (!redirect.empty()) msg += "; use " + redirect;
                return msg;
            }
        }
        return std::nullopt;
    };
}

Admiss all_of(std::vector<Admiss> checks) {
    return [checks = std::move(checks)](const Params& p) -> std::optional<std::string> {
        for (const auto& c : checks)
            if (auto m = c(p)) return m;
        return std::nullopt;
    };
}

Admiss forbid_rel(std::string description, std::function<bool(const Params&)> violated) {
    return [description = std::move(description),
            violated = std::move(violated)](const Params& p) -> std::optional<std::string> {
        if (violated(p)) return description;
        return std::nullopt;
    };
}

std::vector<std::string> e_basis(int n) {
    std::vector<std::string> b;
    for (int k = 1; k <= n; ++k) b.push_back("e" + std::to_string(k));
    return b;
}

const std::vector<std::string> z3_basis = {"l01", "l02", "l10", "l20", "l11", "l22", "l12", "l21"};

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> E;
    auto add = [&](CatalogEntry e) { E.push_back(std::move(e)); };

    // ---- low-dimensional abelian ----
    add({"g_1", {"j_1 (lie)", "1g_1"}, 1, AlgKind::lie, {}, e_basis(1), {}, nullptr, "g_1", "C", ""});
    add({"2g_1", {}, 2, AlgKind::lie, {}, e_basis(2), {}, nullptr, "2g_1", "C^2", ""});
    add({"3g_1", {}, 3, AlgKind::lie, {}, e_basis(3), {}, nullptr, "3g_1", "C^3", ""});
    add({"4g_1", {"(g-1)"}, 4, AlgKind::lie, {}, e_basis(4), {}, nullptr, "4g_1", "C^4", "L_0"});

    // ---- dimension 2 ----
    add({"g_{2,1}", {}, 2, AlgKind::lie, {}, e_basis(2), {{"e1", "e2", "e1"}}, nullptr,
         "g_{2,1}", "r_2(C)", ""});

    // ---- dimension 3 ----
    add({"g_{2,1}+g_1", {"g_{2,1}(+)g_1"}, 3, AlgKind::lie, {}, e_basis(3),
         {{"e1", "e2", "e2"}}, nullptr, "g_{2,1}+g_1", "r_2(C)+C", ""});
    add({"g_{3,1}", {}, 3, AlgKind::lie, {}, e_basis(3), {{"e2", "e3", "e1"}}, nullptr,
         "g_{3,1}", "n_3(C)", ""});
    add({"g_{3,2}", {}, 3, AlgKind::lie, {}, e_basis(3),
         {{"e1", "e3", "e1"}, {"e2", "e3", "e1+e2"}}, nullptr, "g_{3,2}", "r_3(C)", ""});
    add({"g_{3,3}", {}, 3, AlgKind::lie, {}, e_basis(3),
         {{"e1", "e3", "e1"}, {"e2", "e3", "e2"}}, nullptr, "g_{3,3}", "r_{3,1}(C)", ""});
    add({"g_{3,4}(-1)", {}, 3, AlgKind::lie, {}, e_basis(3),
         {{"e1", "e3", "e1"}, {"e2", "e3", "-e2"}}, nullptr, "g_{3,4}(-1)", "r_{3,-1}(C)", ""});
    add({"g_{3,4}", {"g_{3,4}(a)"}, 3, AlgKind::lie, {"a"}, e_basis(3),
         {{"e1", "e3", "e1"}, {"e2", "e3", "a*e2"}},
         forbid("a", {{sc_of(0), "g_{2,1}+g_1"}, {sc_of(1), "g_{3,3}"}, {sc_of(-1), "g_{3,4}(-1)"}}),
         "g_{3,4}(a)", "r_{3,a}(C)", ""});
    add({"sl(2,C)", {"sl2", "sl(2)"}, 3, AlgKind::lie, {}, e_basis(3),
         {{"e1", "e2", "e1"}, {"e2", "e3", "e3"}, {"e1", "e3", "2*e2"}}, nullptr, "sl(2,C)",
         "sl_2(C)", ""});

    // ---- dimension 4 ----
    add({"g_{2,1}+2g_1", {"(g-2)"}, 4, AlgKind::lie, {}, e_basis(4), {{"e1", "e2", "e1"}},
         nullptr, "g_{2,1}+2g_1", "r_2(C)+C^2", "L_4(inf)"});
    add({"g_{2,1}+g_{2,1}", {"(g-3)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e2", "e1"}, {"e3", "e4", "e3"}}, nullptr, "g_{2,1}+g_{2,1}",
         "r_2(C)+r_2(C)", "L_9"});
    add({"g_{3,1}+g_1", {"(g-4)"}, 4, AlgKind::lie, {}, e_basis(4), {{"e2", "e3", "e1"}},
         nullptr, "g_{3,1}+g_1", "n_3(C)+C", "L_1"});
    add({"g_{3,2}+g_1", {"(g-5)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e3", "e1"}, {"e2", "e3", "e1+e2"}}, nullptr, "g_{3,2}+g_1", "r_3(C)+C",
         "L_7(1,0)"});
    add({"g_{3,3}+g_1", {"(g-6)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e3", "e1"}, {"e2", "e3", "e2"}}, nullptr, "g_{3,3}+g_1", "r_{3,1}(C)+C",
         "L_4(0)"});
    add({"g_{3,4}(-1)+g_1", {"(g-7)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e3", "e1"}, {"e2", "e3", "-e2"}}, nullptr, "g_{3,4}(-1)+g_1",
         "r_{3,-1}(C)+C", "L_7(-1,0)"});
    add({"g_{3,4}+g_1", {"(g-8)", "g_{3,4}(a)+g_1"}, 4, AlgKind::lie, {"a"}, e_basis(4),
         {{"e1", "e3", "e1"}, {"e2", "e3", "a*e2"}},
         forbid("a", {{sc_of(0), "g_{2,1}+2g_1"}, {sc_of(1), "g_{3,3}+g_1"},
                      {sc_of(-1), "g_{3,4}(-1)+g_1"}}),
         "g_{3,4}(a)+g_1", "r_{3,a}(C)+C", "L_7(a,0)"});
    add({"sl(2,C)+g_1", {"(g-9)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e2", "e1"}, {"e2", "e3", "e3"}, {"e1", "e3", "2*e2"}}, nullptr, "sl(2,C)+g_1",
         "sl_2(C)+C", "L_6"});
    add({"g_{4,1}", {"(g-10)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e4", "e1"}, {"e3", "e4", "e2"}}, nullptr, "g_{4,1}", "n_4", "L_2"});
    add({"g_{4,2}", {"(g-11)", "g_{4,2}(a)"}, 4, AlgKind::lie, {"a"}, e_basis(4),
         {{"e1", "e4", "a*e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "e2+e3"}},
         forbid("a", {{sc_of(0), "g_{3,2}+g_1"},
                      {sc_of(1), "g_{4,2}(1) [(g-12)]"},
                      {sc_of(-1), "g_{4,2}(-1) [(g-14)]"},
                      {sc_of(-2), "g_{4,2}(-2) [(g-13)]"}}),
         "g_{4,2}(a)", "g_2(a/(a+2)^3,(2a+1)/(a+2)^2)", "L_7(a,1)"});
    add({"g_{4,2}(1)", {"(g-12)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e4", "e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "e2+e3"}}, nullptr, "g_{4,2}(1)",
         "g_5", "L_4(1)"});
    add({"g_{4,2}(-2)", {"(g-13)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e4", "-2*e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "e2+e3"}}, nullptr,
         "g_{4,2}(-2)", "g_3(27/4)", "L_7(-2,1)"});
    add({"g_{4,2}(-1)", {"(g-14)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e4", "-e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "e2+e3"}}, nullptr,
         "g_{4,2}(-1)", "g_2(-1,-1)", "L_7(-1,1)"});
    add({"g_{4,3}", {"(g-15)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e4", "e1"}, {"e3", "e4", "e2"}}, nullptr, "g_{4,3}", "g_2(0,0)", "L_7(0,0)"});
    add({"g_{4,4}", {"(g-16)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e4", "e1"}, {"e2", "e4", "e1+e2"}, {"e3", "e4", "e2+e3"}}, nullptr, "g_{4,4}",
         "g_2(1/27,1/3)", "L_7(1,1)"});

    auto g45_brackets = [](const std::string& a, const std::string& b) {
        return std::vector<BracketRelation>{
            {"e1", "e4", a + "*e1"}, {"e2", "e4", b + "*e2"}, {"e3", "e4", "e3"}};
    };
    add({"g_{4,5}", {"(g-17)", "g_{4,5}(a,b)"}, 4, AlgKind::lie, {"a", "b"}, e_basis(4),
         g45_brackets("a", "b"),
         all_of({forbid("a", {{sc_of(0), ""}, {sc_of(1), ""}, {sc_of(-1), ""}}),
                 forbid("b", {{sc_of(0), ""}, {sc_of(1), ""}, {sc_of(-1), ""}}),
                 forbid_rel("a = b is not admissible in g_{4,5}(a,b)",
                            [](const Params& p) { return p.at("a") == p.at("b"); }),
                 forbid_rel("a = -b is not admissible in g_{4,5}(a,b)",
                            [](const Params& p) { return p.at("a") == -p.at("b"); }),
                 forbid_rel("a*b = 1 is not admissible in g_{4,5}(a,b)",
                            [](const Params& p) { return (p.at("a") * p.at("b")).is_one(); }),
                 forbid_rel("a = b^2 is not admissible; use g_{4,5}(a,a^2) [(g-19)]",
                            [](const Params& p) { return p.at("a") == p.at("b") * p.at("b"); }),
                 forbid_rel("b = a^2 is not admissible; use g_{4,5}(a,a^2) [(g-19)]",
                            [](const Params& p) { return p.at("b") == p.at("a") * p.at("a"); }),
                 forbid_rel("a+b = -1 is not admissible; use g_{4,5}(a,-1-a) [(g-18)]",
                            [](const Params& p) {
                                return (p.at("a") + p.at("b")) == Scalar(-1);
                            })}),
         "g_{4,5}(a,b)", "g_2(ab/(a+b+1)^3,(ab+a+b)/(a+b+1)^2)", "L_7(a,b)"});
    add({"g_{4,5}(a,-1-a)", {"(g-18)"}, 4, AlgKind::lie, {"a"}, e_basis(4),
         g45_brackets("a", "(-1-a)"),
         forbid("a", {{sc_of(0), ""}, {sc_of(1), ""}, {sc_of(-1), ""}, {sc_of(-2), ""},
                      {sc_of(-1, 2), ""}}),
         "g_{4,5}(a,-1-a)", "g_3((a^2+a+1)/(a^2(a+1)^2))", "L_7(a,-1-a)"});
    add({"g_{4,5}(a,a^2)", {"(g-19)"}, 4, AlgKind::lie, {"a"}, e_basis(4),
         g45_brackets("a", "a^2"),
         all_of({forbid("a", {{sc_of(0), ""}, {sc_of(1), ""}, {sc_of(-1), ""}}),
                 forbid_rel("a = i or a = -i is not admissible in g_{4,5}(a,a^2)",
                            [](const Params& p) {
                                return p.at("a") == Scalar::i() || p.at("a") == -Scalar::i();
                            })}),
         "g_{4,5}(a,a^2)", "g_2(a^3/(a+a^2+1)^3,(a^3+a+a^2)/(a+a^2+1)^2)", "L_7(a,a^2)"});
    add({"g_{4,5}(a,1)", {"(g-20)"}, 4, AlgKind::lie, {"a"}, e_basis(4), g45_brackets("a", "1"),
         forbid("a", {{sc_of(0), ""}, {sc_of(1), "g_{4,5}(1,1) [(g-22)]"},
                      {sc_of(-1), "g_{4,5}(-1,1) [(g-23)]"},
                      {sc_of(-2), "g_{4,5}(-2,1) [(g-24)]"}}),
         "g_{4,5}(a,1)", "g_1(a)", "L_4(a)"});
    add({"g_{4,5}(a,-1)", {"(g-21)"}, 4, AlgKind::lie, {"a"}, e_basis(4),
         g45_brackets("a", "(-1)"),
         all_of({forbid("a", {{sc_of(0), ""}, {sc_of(1), ""}, {sc_of(-1), ""}}),
                 forbid_rel("a = i or a = -i is not admissible; use g_{4,5}(i,-1) [(g-26)]",
                            [](const Params& p) {
                                return p.at("a") == Scalar::i() || p.at("a") == -Scalar::i();
                            })}),
         "g_{4,5}(a,-1)", "g_2(-1/a^2,-1/a^2)", "L_7(a,-1)"});
    add({"g_{4,5}(1,1)", {"(g-22)"}, 4, AlgKind::lie, {}, e_basis(4), g45_brackets("1", "1"),
         nullptr, "g_{4,5}(1,1)", "g_1(1)", "L_3"});
    add({"g_{4,5}(-1,1)", {"(g-23)"}, 4, AlgKind::lie, {}, e_basis(4), g45_brackets("(-1)", "1"),
         nullptr, "g_{4,5}(-1,1)", "g_1(-1)", "L_4(-1)"});
    add({"g_{4,5}(-2,1)", {"(g-24)"}, 4, AlgKind::lie, {}, e_basis(4), g45_brackets("(-2)", "1"),
         nullptr, "g_{4,5}(-2,1)", "g_1(-2)", "L_4(-2)"});
    // (g-25) is g_{4,5}(w,conj(w)) for w = -1/2+sqrt(3)/2 i; shipped as the
    // rational form with ad(e4) cyclic on e1,e2,e3 (eigenvalues 1, w, w^2)
    add({"(g-25)", {"g_{4,5}(w,w^2)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e1", "e4", "e2"}, {"e2", "e4", "e3"}, {"e3", "e4", "e1"}}, nullptr,
         "g_{4,5}(-1/2+sqrt(3)/2 i,-1/2-sqrt(3)/2 i)", "g_4",
         "L_7(-1/2+sqrt(3)/2 i,-1/2-sqrt(3)/2 i)"});
    add({"g_{4,5}(i,-1)", {"(g-26)"}, 4, AlgKind::lie, {}, e_basis(4), g45_brackets("i", "(-1)"),
         nullptr, "g_{4,5}(i,-1)", "g_2(1,1)", "L_7(i,-1)"});
    add({"g_{4,7}", {"(g-27)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e3", "e1"}, {"e1", "e4", "2*e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "e2+e3"}},
         nullptr, "g_{4,7}", "g_{4,8}(1/4)", "L_8(1)"});
    auto g48_brackets = [](const std::string& a1, const std::string& a) {
        return std::vector<BracketRelation>{{"e2", "e3", "e1"},
                                            {"e1", "e4", a1 + "*e1"},
                                            {"e2", "e4", "e2"},
                                            {"e3", "e4", a + "*e3"}};
    };
    add({"g_{4,8}", {"(g-28)", "g_{4,8}(a)"}, 4, AlgKind::lie, {"a"}, e_basis(4),
         g48_brackets("(1+a)", "a"),
         forbid("a", {{sc_of(0), "g_{4,8}(0) [(g-31)]"},
                      {sc_of(1), "g_{4,8}(1) [(g-29)]"},
                      {sc_of(-1), "g_{4,8}(-1) [(g-32)]"},
                      {sc_of(2), "g_{4,8}(2) [(g-30)]"},
                      {sc_of(-2), "g_{4,8}(-2) [(g-33)]"},
                      {sc_of(1, 2), "g_{4,8}(2) [(g-30)]"},
                      {sc_of(-1, 2), "g_{4,8}(-2) [(g-33)]"}}),
         "g_{4,8}(a)", "g_8(a/(a+1)^2)", "L_8(a)"});
    add({"g_{4,8}(1)", {"(g-29)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e3", "e1"}, {"e1", "e4", "2*e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "e3"}},
         nullptr, "g_{4,8}(1)", "g_6", "L_5"});
    add({"g_{4,8}(2)", {"(g-30)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e3", "e1"}, {"e1", "e4", "3*e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "2*e3"}},
         nullptr, "g_{4,8}(2)", "g_8(2/9)", "L_8(2)"});
    add({"g_{4,8}(0)", {"(g-31)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e3", "e1"}, {"e1", "e4", "e1"}, {"e2", "e4", "e2"}}, nullptr, "g_{4,8}(0)",
         "g_8(0)", "L_8(0)"});
    add({"g_{4,8}(-1)", {"(g-32)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e3", "e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "-e3"}}, nullptr, "g_{4,8}(-1)",
         "g_7", "L_8(-1)"});
    add({"g_{4,8}(-2)", {"(g-33)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e3", "e1"}, {"e1", "e4", "-e1"}, {"e2", "e4", "e2"}, {"e3", "e4", "-2*e3"}},
         nullptr, "g_{4,8}(-2)", "g_8(-2)", "L_8(-2)"});
    // (g-34) is g_{4,8}(w) for w = -1/2+sqrt(3)/2 i; rational form with the
    // plane action given by the companion matrix of x^2+x+1
    add({"(g-34)", {"g_{4,8}(w)"}, 4, AlgKind::lie, {}, e_basis(4),
         {{"e2", "e3", "e1"}, {"e1", "e4", "-e1"}, {"e2", "e4", "e3"}, {"e3", "e4", "-e2-e3"}},
         nullptr, "g_{4,8}(-1/2+sqrt(3)/2 i)", "g_8(-1/2+sqrt(3)/2 i)",
         "L_8(-1/2+sqrt(3)/2 i)"});

    // ---- 8-dimensional graded contractions of the Pauli graded sl(3,C) ----
    add({"l_{17,9}", {}, 8, AlgKind::lie, {}, z3_basis,
         {{"l01", "l10", "l11"},
          {"l01", "l20", "l21"},
          {"l01", "l11", "l12"},
          {"l01", "l22", "l20"},
          {"l02", "l10", "l12"},
          {"l10", "l11", "l21"},
          {"l20", "l22", "l12"}},
         nullptr, "l_{17,9}", "", ""});
    add({"l_{17,12}", {}, 8, AlgKind::lie, {}, z3_basis,
         {{"l01", "l10", "l11"},
          {"l01", "l20", "l21"},
          {"l01", "l22", "l20"},
          {"l02", "l10", "l12"},
          {"l02", "l22", "l21"},
          {"l10", "l11", "l21"},
          {"l20", "l22", "l12"}},
         nullptr, "l_{17,12}", "", ""});
    add({"l_{18,25}", {"l_{18,25}(a)"}, 8, AlgKind::lie, {"a"}, z3_basis,
         {{"l01", "l10", "l11"},
          {"l01", "l20", "-a*l21"},
          {"l02", "l10", "l12"},
          {"l02", "l20", "l22"},
          {"l10", "l11", "l21"},
          {"l10", "l12", "l22"}},
         nullptr, "l_{18,25}(a)", "", ""});
    add({"l_{17,13}", {"l_{17,13}(a)"}, 8, AlgKind::lie, {"a"}, z3_basis,
         {{"l01", "l10", "a*l11"},
          {"l01", "l20", "l21"},
          {"l01", "l22", "l20"},
          {"l02", "l10", "l12"},
          {"l10", "l11", "l21"},
          {"l10", "l22", "l02"},
          {"l20", "l22", "l12"}},
         forbid("a", {{sc_of(0), ""}}), "l_{17,13}(a)", "", ""});
    add({"l_{17,7}", {"l_{17,7}(a)"}, 8, AlgKind::lie, {"a"}, z3_basis,
         {{"l01", "l10", "-a*l11"},
          {"l01", "l20", "l21"},
          {"l01", "l11", "l12"},
          {"l01", "l22", "l20"},
          {"l02", "l10", "l12"},
          {"l02", "l22", "l21"},
          {"l10", "l11", "l21"}},
         forbid("a", {{sc_of(0), ""}}), "l_{17,7}(a)", "", ""});

    // ---- independence witnesses (7- and 8-dimensional pairs) ----
    add({"indep_d111_a", {}, 7, AlgKind::lie, {}, e_basis(7),
         {{"e4", "e6", "e1"}, {"e4", "e7", "e2"}, {"e5", "e6", "e2"}, {"e5", "e7", "e3"}},
         nullptr, "", "", ""});
    add({"indep_d111_b", {}, 7, AlgKind::lie, {}, e_basis(7),
         {{"e4", "e6", "e1"}, {"e4", "e7", "e2"}, {"e5", "e7", "e3"}}, nullptr, "", "", ""});
    add({"indep_d011_a", {}, 8, AlgKind::lie, {}, e_basis(8),
         {{"e2", "e3", "e4"},
          {"e2", "e4", "e5"},
          {"e2", "e6", "-e7"},
          {"e2", "e8", "e1"},
          {"e3", "e7", "e1"},
          {"e4", "e6", "e1"},
          {"e6", "e8", "e5"}},
         nullptr, "", "", ""});
    add({"indep_d011_b", {}, 8, AlgKind::lie, {}, e_basis(8),
         {{"e2", "e3", "e4"},
          {"e2", "e4", "e5"},
          {"e2", "e8", "e1"},
          {"e3", "e6", "e8"},
          {"e3", "e7", "e1"},
          {"e4", "e6", "e1"},
          {"e6", "e8", "e5"}},
         nullptr, "", "", ""});
    add({"indep_d110_a", {}, 7, AlgKind::lie, {}, e_basis(7),
         {{"e1", "e2", "e4"},
          {"e1", "e3", "e5"},
          {"e1", "e6", "e1"},
          {"e1", "e7", "e3"},
          {"e2", "e6", "-e2"},
          {"e3", "e6", "e3"},
          {"e5", "e6", "2*e5"}},
         nullptr, "", "", ""});
    add({"indep_d110_b", {}, 7, AlgKind::lie, {}, e_basis(7),
         {{"e1", "e2", "e4"},
          {"e1", "e4", "e5"},
          {"e1", "e6", "e1"},
          {"e1", "e7", "e3"},
          {"e2", "e6", "-2*e2"},
          {"e3", "e6", "e3"},
          {"e4", "e6", "-e4"}},
         nullptr, "", "", ""});
    add({"indep_dint_a", {}, 8, AlgKind::lie, {}, e_basis(8),
         {{"e1", "e3", "-e3"},
          {"e1", "e4", "e4"},
          {"e1", "e6", "2*e6"},
          {"e1", "e7", "-e7"},
          {"e1", "e8", "e8"},
          {"e3", "e6", "e8"},
          {"e4", "e5", "e8"},
          {"e4", "e7", "e2"}},
         nullptr, "", "", ""});
    add({"indep_dint_b", {}, 8, AlgKind::lie, {}, e_basis(8),
         {{"e1", "e2", "-2*e2"},
          {"e1", "e3", "-e3"},
          {"e1", "e4", "e4"},
          {"e1", "e6", "2*e6"},
          {"e1", "e8", "e8"},
          {"e2", "e6", "e7"},
          {"e3", "e6", "e8"},
          {"e4", "e5", "e8"}},
         nullptr, "", "", ""});

    // ---- Jordan algebras ----
    add({"j_1", {}, 1, AlgKind::jordan, {}, e_basis(1), {}, nullptr, "j_1", "", ""});
    add({"j_{1,1}", {}, 1, AlgKind::jordan, {}, e_basis(1), {{"e1", "e1", "e1"}}, nullptr,
         "j_{1,1}", "", ""});
    add({"2j_1", {}, 2, AlgKind::jordan, {}, e_basis(2), {}, nullptr, "2j_1", "", ""});
    add({"j_{2,1}", {}, 2, AlgKind::jordan, {}, e_basis(2),
         {{"e1", "e1", "e1"}, {"e1", "e2", "e2"}}, nullptr, "j_{2,1}", "", ""});
    add({"j_{2,2}", {}, 2, AlgKind::jordan, {}, e_basis(2), {{"e2", "e2", "e2"}}, nullptr,
         "j_{2,2}", "", ""});
    add({"j_{2,3}", {}, 2, AlgKind::jordan, {}, e_basis(2), {{"e1", "e1", "e2"}}, nullptr,
         "j_{2,3}", "", ""});
    add({"j_{2,4}", {}, 2, AlgKind::jordan, {}, e_basis(2),
         {{"e1", "e1", "e1"}, {"e1", "e2", "1/2*e2"}}, nullptr, "j_{2,4}", "", ""});
    add({"j_{2,5}", {}, 2, AlgKind::jordan, {}, e_basis(2),
         {{"e1", "e1", "e1"}, {"e2", "e2", "-e1"}, {"e1", "e2", "e2"}}, nullptr, "j_{2,5}", "",
         ""});

    return E;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& label) {
    for (const auto& e : catalog_entries()) {
        if (e.label == label) return &e;
        for (const auto& a : e.aliases)
            if (a == label) return &e;
    }
    return nullptr;
}

StructureConstants catalog_get(const std::string& label,
                               const std::map<std::string, Scalar>& params) {
    const CatalogEntry* e = catalog_find(label);
    if (!e) throw LieInvError("UnknownLabel", "unknown catalog label: " + label);
    for (const auto& slot : e->params)
        if (!params.count(slot))
            throw LieInvError("ParameterMissing",
                              "catalog entry " + e->label + " needs parameter " + slot);
    for (const auto& [k, v] : params)
        if (std::find(e->params.begin(), e->params.end(), k) == e->params.end())
            throw LieInvError("BadInput", "catalog entry " + e->label + " has no parameter " + k);
    if (e->admissible) {
        if (auto msg = e->admissible(params))
            throw LieInvError("InadmissibleParameter", e->label + ": " + *msg);
    }
    std::string name = e->label;
    if (!e->params.empty()) {
        name += "(";
        for (size_t k = 0; k < e->params.size(); ++k) {
            if (k) name += ",";
            name += params.at(e->params[k]).to_string();
        }
        name += ")";
    }
    return from_brackets(e->dim, e->basis, e->brackets, e->kind, params, name);
}

const std::vector<GradedEpsilonData>& graded_epsilon_data() {
    static const std::vector<GradedEpsilonData> data = [] {
        std::vector<std::pair<int, int>> grades = {{0, 1}, {0, 2}, {1, 0}, {2, 0},
                                                   {1, 1}, {2, 2}, {1, 2}, {2, 1}};
        std::vector<GradedEpsilonData> d;
        d.push_back({"eps_{18,25}",
                     grades,
                     {{"0", "0", "1", "a", "0", "0", "0", "0"},
                      {"0", "0", "1", "1", "0", "0", "0", "0"},
                      {"1", "1", "0", "0", "1", "0", "1", "0"},
                      {"a", "1", "0", "0", "0", "0", "0", "0"},
                      {"0", "0", "1", "0", "0", "0", "0", "0"},
                      {"0", "0", "0", "0", "0", "0", "0", "0"},
                      {"0", "0", "1", "0", "0", "0", "0", "0"},
                      {"0", "0", "0", "0", "0", "0", "0", "0"}}});
        d.push_back({"eps_{17,13}",
                     grades,
                     {{"0", "0", "a", "1", "0", "1", "0", "0"},
                      {"0", "0", "1", "0", "0", "0", "0", "0"},
                      {"a", "1", "0", "0", "1", "1", "0", "0"},
                      {"1", "0", "0", "0", "0", "1", "0", "0"},
                      {"0", "0", "1", "0", "0", "0", "0", "0"},
                      {"1", "0", "1", "1", "0", "0", "0", "0"},
                      {"0", "0", "0", "0", "0", "0", "0", "0"},
                      {"0", "0", "0", "0", "0", "0", "0", "0"}}});
        d.push_back({"eps_{17,7}",
                     grades,
                     {{"0", "0", "a", "1", "1", "1", "0", "0"},
                      {"0", "0", "1", "0", "0", "1", "0", "0"},
                      {"a", "1", "0", "0", "1", "0", "0", "0"},
                      {"1", "0", "0", "0", "0", "0", "0", "0"},
                      {"1", "0", "1", "0", "0", "0", "0", "0"},
                      {"1", "1", "0", "0", "0", "0", "0", "0"},
                      {"0", "0", "0", "0", "0", "0", "0", "0"},
                      {"0", "0", "0", "0", "0", "0", "0", "0"}}});
        return d;
    }();
    return data;
}

} // namespace lieinv
