#include <doctest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/classical.hpp"
#include "lieinv/invariant_function.hpp"
#include "test_util.hpp"

using namespace lieinv;
using lieinv::test::Rng;
using lieinv::test::naive_rank;

namespace {

struct ExpectEntry {
    std::string point_or_factor; // scalar text, or a polynomial when prefixed "p:"
    int value;
};

InvariantFunction expect_fn(int generic, const std::vector<ExpectEntry>& entries) {
    InvariantFunction f;
    f.generic = generic;
    for (const auto& e : entries) {
        if (e.point_or_factor.rfind("p:", 0) == 0) {
            f.exceptional.emplace_back(UniPoly::parse(e.point_or_factor.substr(2)), e.value);
        } else {
            f.exceptional.emplace_back(
                UniPoly::linear_from_root(Scalar::parse(e.point_or_factor)), e.value);
        }
    }
    return f;
}

InvariantFunction fn(const std::string& label, WhichFunction w,
                     const std::map<std::string, Scalar>& params = {}) {
    return invariant_function(catalog_get(label, params), w);
}

/// Brute-force nullity of the dense system at a fixed alpha, written against
/// the definitional equations only.
int psi_nullity_at(const StructureConstants& sc, const Scalar& alpha, bool psi0 = false) {
    int n = sc.dim();
    ScalarMatrix rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int s = 0; s < n; ++s) {
                std::vector<Scalar> row(static_cast<size_t>(n) * n, Scalar(0));
                for (int r = 0; r < n; ++r) {
                    row[static_cast<size_t>(s) * n + r] += alpha * sc.at(i, j, r);
                    row[static_cast<size_t>(r) * n + i] -= sc.at(r, j, s);
                    if (!psi0) row[static_cast<size_t>(r) * n + j] -= sc.at(i, r, s);
                }
                rows.push_back(std::move(row));
            }
    return n * n - naive_rank(rows);
}

} // namespace

TEST_CASE("psi tables of the three-dimensional lie algebras") {
    CHECK(fn("3g_1", WhichFunction::psi) == expect_fn(9, {}));
    CHECK(fn("g_{2,1}+g_1", WhichFunction::psi) == expect_fn(4, {{"0", 6}}));
    CHECK(fn("g_{3,1}", WhichFunction::psi) == expect_fn(6, {}));
    CHECK(fn("g_{3,2}", WhichFunction::psi) == expect_fn(3, {{"1", 4}}));
    CHECK(fn("g_{3,3}", WhichFunction::psi) == expect_fn(3, {{"1", 6}}));
    CHECK(fn("g_{3,4}(-1)", WhichFunction::psi) == expect_fn(3, {{"1", 4}, {"-1", 5}}));
    CHECK(fn("g_{3,4}", WhichFunction::psi, {{"a", Scalar(2)}}) ==
          expect_fn(3, {{"1", 4}, {"2", 4}, {"1/2", 4}}));
    CHECK(fn("sl(2,C)", WhichFunction::psi) == expect_fn(0, {{"1", 3}, {"-1", 5}, {"2", 1}}));
}

TEST_CASE("psi0 of the three-dimensional lie algebras") {
    CHECK(fn("g_{3,1}", WhichFunction::psi0) == expect_fn(3, {}));
    for (const char* label : {"g_{3,2}", "g_{3,3}", "g_{3,4}(-1)", "sl(2,C)"})
        CHECK(fn(label, WhichFunction::psi0) == expect_fn(0, {{"1", 1}}));
    // the worked 4-dimensional example
    CHECK(fn("g_{4,2}", WhichFunction::psi0, {{"a", Scalar(2)}}) == expect_fn(0, {{"1", 1}}));
}

TEST_CASE("phi and phi0 tables of the three-dimensional lie algebras") {
    CHECK(fn("3g_1", WhichFunction::phi) == expect_fn(9, {}));
    CHECK(fn("g_{2,1}+g_1", WhichFunction::phi) == expect_fn(6, {}));
    CHECK(fn("g_{3,1}", WhichFunction::phi) == expect_fn(8, {{"0", 9}}));
    CHECK(fn("g_{3,2}", WhichFunction::phi) == expect_fn(6, {}));
    CHECK(fn("g_{3,3}", WhichFunction::phi) == expect_fn(6, {}));
    CHECK(fn("g_{3,4}(-1)", WhichFunction::phi) == expect_fn(7, {{"0", 9}}));
    CHECK(fn("g_{3,4}", WhichFunction::phi, {{"a", Scalar(2)}}) == expect_fn(6, {}));
    CHECK(fn("sl(2,C)", WhichFunction::phi) == expect_fn(6, {{"0", 9}}));

    CHECK(fn("3g_1", WhichFunction::phi0) == expect_fn(9, {}));
    CHECK(fn("g_{2,1}+g_1", WhichFunction::phi0) == expect_fn(1, {{"1", 2}, {"2", 2}}));
    CHECK(fn("g_{3,1}", WhichFunction::phi0) == expect_fn(3, {}));
    CHECK(fn("g_{3,2}", WhichFunction::phi0) == expect_fn(0, {{"2", 2}}));
    CHECK(fn("g_{3,3}", WhichFunction::phi0) == expect_fn(0, {{"2", 6}}));
    CHECK(fn("g_{3,4}(-1)", WhichFunction::phi0) == expect_fn(0, {{"0", 2}, {"2", 2}}));
    CHECK(fn("g_{3,4}", WhichFunction::phi0, {{"a", Scalar(2)}}) ==
          expect_fn(0, {{"2", 2}, {"3", 1}, {"3/2", 1}}));
    CHECK(fn("sl(2,C)", WhichFunction::phi0) == expect_fn(0, {{"2", 1}}));
}

TEST_CASE("psi tables of the one- and two-dimensional algebras") {
    CHECK(fn("g_1", WhichFunction::psi) == expect_fn(1, {}));
    CHECK(fn("2g_1", WhichFunction::psi) == expect_fn(4, {}));
    CHECK(fn("g_{2,1}", WhichFunction::psi) == expect_fn(2, {{"0", 3}}));
    CHECK(fn("g_{2,1}", WhichFunction::phi) == expect_fn(2, {}));
    CHECK(fn("g_{2,1}", WhichFunction::phi0) == expect_fn(0, {{"2", 1}}));
    CHECK(fn("2g_1", WhichFunction::phi) == expect_fn(2, {}));
    CHECK(fn("2g_1", WhichFunction::phi0) == expect_fn(2, {}));
}

TEST_CASE("psi and psi0 separate l_{17,9} from l_{17,12}") {
    StructureConstants l9 = catalog_get("l_{17,9}"), l12 = catalog_get("l_{17,12}");
    // psi0 agrees on the pair while psi tells them apart
    InvariantFunction want_psi0 = expect_fn(8, {{"0", 16}, {"1", 9}});
    CHECK(invariant_function(l9, WhichFunction::psi0) == want_psi0);
    CHECK(invariant_function(l12, WhichFunction::psi0) == want_psi0);
    CHECK(invariant_function(l9, WhichFunction::psi) == expect_fn(16, {{"0", 19}, {"-2", 17}}));
    CHECK(invariant_function(l12, WhichFunction::psi) ==
          expect_fn(16, {{"0", 19}, {"-1/2", 17}}));
    AbcTriple t11m1{Scalar(1), Scalar(1), Scalar(-1)}, t01m1{Scalar(0), Scalar(1), Scalar(-1)};
    CHECK(derivation_space(l9, {t11m1}).dim() == 8);
    CHECK(derivation_space(l12, {t11m1}).dim() == 8);
    CHECK(derivation_space(l9, {t01m1}).dim() == 17);
    CHECK(derivation_space(l12, {t01m1}).dim() == 17);
}

TEST_CASE("psi tables of the jordan algebras") {
    CHECK(fn("j_1", WhichFunction::psi) == expect_fn(1, {}));
    CHECK(fn("j_{1,1}", WhichFunction::psi) == expect_fn(0, {{"2", 1}}));
    CHECK(fn("2j_1", WhichFunction::psi) == expect_fn(4, {}));
    CHECK(fn("j_{2,1}", WhichFunction::psi) == expect_fn(0, {{"1", 1}, {"2", 2}}));
    CHECK(fn("j_{2,2}", WhichFunction::psi) == expect_fn(1, {{"0", 2}, {"2", 2}}));
    CHECK(fn("j_{2,3}", WhichFunction::psi) == expect_fn(2, {}));
    CHECK(fn("j_{2,4}", WhichFunction::psi) == expect_fn(0, {{"1", 2}, {"2", 1}}));
    CHECK(fn("j_{2,5}", WhichFunction::psi) == expect_fn(0, {{"2", 2}}));
}

TEST_CASE("evaluate and blank-column semantics") {
    InvariantFunction f = fn("g_{3,4}", WhichFunction::psi, {{"a", Scalar(2)}});
    CHECK(evaluate(f, Scalar(1)) == 4);
    CHECK(evaluate(f, Scalar(2)) == 4);
    CHECK(evaluate(f, Scalar(7)) == 3); // generic
    // factors are pairwise coprime: no point carries two values
    for (size_t a = 0; a < f.exceptional.size(); ++a)
        for (size_t b = a + 1; b < f.exceptional.size(); ++b)
            CHECK(poly_gcd(f.exceptional[a].first, f.exceptional[b].first).degree() == 0);
}

TEST_CASE("psi agrees with the dense brute-force nullity at sample points") {
    Rng rng(83);
    for (const char* label : {"g_{3,2}", "g_{3,4}(-1)", "g_{4,7}", "j_{2,5}"}) {
        StructureConstants sc = catalog_get(label);
        InvariantFunction psi = invariant_function(sc, WhichFunction::psi);
        InvariantFunction psi0 = invariant_function(sc, WhichFunction::psi0);
        for (int t = 0; t < 20; ++t) {
            Scalar pt = rng.scalar();
            CHECK(evaluate(psi, pt) == psi_nullity_at(sc, pt, false));
            CHECK(evaluate(psi0, pt) == psi_nullity_at(sc, pt, true));
        }
        CHECK(evaluate(psi, Scalar(1)) == psi_nullity_at(sc, Scalar(1), false));
    }
}

TEST_CASE("phi and phi0 agree with the fixed-parameter cocycle spaces") {
    Rng rng(91);
    for (const char* label : {"g_{3,4}(-1)", "g_{4,2}(1)", "g_{4,7}"}) {
        StructureConstants sc = catalog_get(label);
        InvariantFunction phi = invariant_function(sc, WhichFunction::phi);
        InvariantFunction phi0 = invariant_function(sc, WhichFunction::phi0);
        Scalar one(1), zero(0);
        for (int t = 0; t < 10; ++t) {
            Scalar l = rng.scalar();
            CHECK(evaluate(phi, l) == two_cocycle_space(sc, {one, one, one, l, l, l}).dim);
            CHECK(evaluate(phi0, l) == two_cocycle_space(sc, {zero, one, one, l, one, one}).dim);
        }
        CHECK(evaluate(phi, one) == two_cocycle_space(sc, {one, one, one, one, one, one}).dim);
    }
}

TEST_CASE("invariant functions are basis-change invariant") {
    Rng rng(89);
    for (const char* label : {"g_{3,4}(-1)", "g_{4,2}(1)", "j_{2,2}"}) {
        StructureConstants sc = catalog_get(label);
        bool lie = sc.kind() == AlgKind::lie;
        InvariantFunction psi = invariant_function(sc, WhichFunction::psi);
        InvariantFunction phi0 =
            lie ? invariant_function(sc, WhichFunction::phi0) : InvariantFunction{};
        for (int t = 0; t < 3; ++t) {
            StructureConstants moved = change_basis(sc, rng.invertible(sc.dim()));
            CHECK(invariant_function(moved, WhichFunction::psi) == psi);
            if (lie) CHECK(invariant_function(moved, WhichFunction::phi0) == phi0);
        }
    }
}

TEST_CASE("leq with witnesses") {
    InvariantFunction f32 = fn("g_{3,2}", WhichFunction::psi);
    InvariantFunction f21 = fn("g_{2,1}+g_1", WhichFunction::psi);
    InvariantFunction fsl = fn("sl(2,C)", WhichFunction::psi);
    CHECK(leq(f32, f21).ok);
    LeqResult bad = leq(fsl, f21);
    CHECK(!bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->point == Scalar(-1));
    CHECK(bad.witness->lhs == 5);
    CHECK(bad.witness->rhs == 4);
    CHECK(leq(f32, f32).ok);
}

TEST_CASE("occurrence signatures") {
    OccurrenceSignature s18 =
        signature(fn("g_{4,5}(a,-1-a)", WhichFunction::psi, {{"a", Scalar(3)}}));
    CHECK(s18.generic == 4);
    CHECK(s18.counts == std::map<int, int>{{6, 1}, {5, 6}});
    CHECK(s18.to_string() == "6_1,5_6,4");

    OccurrenceSignature s11 = signature(fn("g_{4,2}", WhichFunction::psi, {{"a", Scalar(2)}}));
    CHECK(s11.counts == std::map<int, int>{{6, 1}, {5, 2}});
    CHECK(s11.to_string() == "6_1,5_2,4");

    CHECK(signature(fn("3g_1", WhichFunction::psi)).counts.empty());
}

TEST_CASE("inequalities relating psi, psi0 and the quasicentroid") {
    Rng rng(97);
    for (const char* label : {"g_{2,1}+g_1", "g_{3,2}", "g_{3,3}", "sl(2,C)+g_1"}) {
        StructureConstants sc = catalog_get(label);
        InvariantFunction psi = invariant_function(sc, WhichFunction::psi);
        InvariantFunction psi0 = invariant_function(sc, WhichFunction::psi0);
        // codim L^2 * dim C(L) <= psi0(alpha) <= dim D(0,1,-1); psi0(a) <= psi(2a)
        int n = sc.dim();
        ScalarMatrix dsq;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Scalar> v(n);
                for (int k = 0; k < n; ++k) v[k] = sc.at(i, j, k);
                dsq.push_back(std::move(v));
            }
        int dim_derived = naive_rank(dsq);
        int dim_center = static_cast<int>(center(sc).size());
        int lower = (n - dim_derived) * dim_center;
        int quasi = derivation_space(sc, {{Scalar(0), Scalar(1), Scalar(-1)}}).dim();
        for (int t = 0; t < 8; ++t) {
            Scalar a = rng.scalar();
            int p0 = evaluate(psi0, a);
            CHECK(lower <= p0);
            CHECK(p0 <= quasi);
            CHECK(p0 <= evaluate(psi, a + a));
            CHECK(lower <= evaluate(psi, a));
        }
    }
}
