#include <doctest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/classical.hpp"
#include "test_util.hpp"

using namespace lieinv;
using lieinv::test::Rng;

namespace {

/// Independent chi oracle: evaluate the trace expressions at rational points
/// and read the constant off a nonvanishing sample, then confirm the
/// identity at many more points.
std::optional<Scalar> chi1_oracle(const StructureConstants& sc, Rng& rng) {
    int n = sc.dim();
    auto ad_at = [&](const std::vector<Scalar>& x) {
        ScalarMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
        for (int s = 0; s < n; ++s)
            for (int r = 0; r < n; ++r)
                for (int i = 0; i < n; ++i) m[s][r] += x[i] * sc.at(i, r, s);
        return m;
    };
    auto p11_p22 = [&](const std::vector<Scalar>& x) {
        ScalarMatrix m = ad_at(x);
        Scalar t1, t2;
        for (int i = 0; i < n; ++i) t1 += m[i][i];
        ScalarMatrix m2 = matrix_product(m, m);
        for (int i = 0; i < n; ++i) t2 += m2[i][i];
        Scalar p111 = -t1;
        Scalar p222 = (t1 * t1 - t2) * Scalar::of(1, 2);
        return std::make_pair(p111, p222);
    };
    std::optional<Scalar> cand;
    for (int t = 0; t < 50; ++t) {
        std::vector<Scalar> x(n);
        for (auto& v : x) v = Scalar(rng.integer(-5, 5));
        auto [p1, p2] = p11_p22(x);
        if (!p1.is_zero() && !p2.is_zero()) {
            cand = p2 / (p1 * p1);
            break;
        }
    }
    if (!cand) return std::nullopt;
    for (int t = 0; t < 20; ++t) {
        std::vector<Scalar> x(n);
        for (auto& v : x) v = Scalar(rng.integer(-7, 7));
        auto [p1, p2] = p11_p22(x);
        if (p2 != *cand * p1 * p1) return std::nullopt;
    }
    return cand;
}

} // namespace

TEST_CASE("series of the worked examples") {
    SeriesProfile s = series(catalog_get("l_{17,9}"));
    CHECK(s.d == std::vector<int>{8, 4, 0});
    CHECK(s.l == std::vector<int>{8, 4, 2, 0});
    CHECK(s.c == std::vector<int>{2, 5, 8});
    CHECK(s.solvable);
    CHECK(s.nilpotent);

    SeriesProfile ab = series(from_brackets(5, {}, {}, AlgKind::lie));
    CHECK(ab.d == std::vector<int>{5, 0});
    CHECK(ab.l == std::vector<int>{5, 0});
    CHECK(ab.c == std::vector<int>{5});

    SeriesProfile sl = series(catalog_get("sl(2,C)"));
    CHECK(sl.d == std::vector<int>{3}); // stabilizes at 3, never reaches 0
    CHECK(sl.l == std::vector<int>{3});
    CHECK(sl.c == std::vector<int>{0});
    CHECK(!sl.solvable);
    CHECK(!sl.nilpotent);
}

TEST_CASE("tau") {
    CHECK(tau(catalog_get("indep_d111_a")) == 3);
    CHECK(tau(catalog_get("indep_d111_b")) == 3);
    CHECK(tau(catalog_get("l_{18,25}", {{"a", Scalar(3)}})) == 4);
    CHECK(tau(from_brackets(4, {}, {}, AlgKind::lie)) == 4);
}

TEST_CASE("chi invariants") {
    Rng rng(71);
    ChiInvariants nil = chi(catalog_get("g_{3,1}")); // nilpotent: traces vanish
    CHECK(!nil.chi1);
    CHECK(!nil.chi2);
    CHECK(!nil.chi3);

    ChiInvariants c33 = chi(catalog_get("g_{3,3}"));
    REQUIRE(c33.chi1.has_value());
    CHECK(*c33.chi1 == Scalar::of(1, 4));
    CHECK(*c33.chi1 == *chi1_oracle(catalog_get("g_{3,3}"), rng));

    StructureConstants g34 = catalog_get("g_{3,4}", {{"a", Scalar(2)}});
    ChiInvariants c34 = chi(g34);
    REQUIRE(c34.chi1.has_value());
    CHECK(*c34.chi1 == Scalar::of(2, 9));
    CHECK(*c34.chi1 == *chi1_oracle(g34, rng));
    // in dimension 3 every ad x is singular, so chi2 and chi3 never exist
    CHECK(!c34.chi2);
    CHECK(!c34.chi3);

    // ad(x4 e4 + ...) on g_{4,5}(3,5) has eigenvalues (-3,-5,-1,0) x4, so
    // p111 = 9 x4, p222 = 23 x4^2, p333 = 15 x4^3
    ChiInvariants c45 = chi(catalog_get("g_{4,5}", {{"a", Scalar(3)}, {"b", Scalar(5)}}));
    REQUIRE(c45.chi1.has_value());
    REQUIRE(c45.chi2.has_value());
    REQUIRE(c45.chi3.has_value());
    CHECK(*c45.chi1 == Scalar::of(23, 81));
    CHECK(*c45.chi2 == Scalar::of(5, 243));
    CHECK(*c45.chi3 == Scalar::of(225, 12167));
}

TEST_CASE("cpq invariants") {
    CHECK(!cpq(catalog_get("g_{3,1}"), 1, 1).has_value()); // nilpotent
    CHECK(!cpq(from_brackets(3, {}, {}, AlgKind::lie), 1, 1).has_value());
    auto c11 = cpq(catalog_get("g_{3,3}"), 1, 1);
    REQUIRE(c11.has_value());
    CHECK(*c11 == Scalar(2));
}

TEST_CASE("inv tuples of the 8-dimensional graded contractions") {
    CHECK(inv_tuple(catalog_get("l_{17,9}")).to_string() ==
          "(8,4,0)(8,4,2,0)(2,5,8)  2  [16,19,9,11]");
    CHECK(inv_tuple(catalog_get("l_{17,12}")).to_string() ==
          "(8,4,0)(8,4,2,0)(2,5,8)  2  [16,19,9,11]");
    // the l_{18,25} family splits into two isolated points plus the rest
    CHECK(inv_tuple(catalog_get("l_{18,25}", {{"a", Scalar(0)}})).to_string() ==
          "(8,4,0)(8,4,2,0)(2,5,8)  4  [21,23,10,14]");
    CHECK(inv_tuple(catalog_get("l_{18,25}", {{"a", Scalar(-1)}})).to_string() ==
          "(8,4,0)(8,4,2,0)(2,5,8)  4  [22,22,10,13]");
    CHECK(inv_tuple(catalog_get("l_{18,25}", {{"a", Scalar(3)}})).to_string() ==
          "(8,4,0)(8,4,2,0)(2,5,8)  4  [20,22,10,13]");
    CHECK(inv_tuple(catalog_get("l_{17,13}", {{"a", Scalar(3)}})).to_string() ==
          "(8,5,0)(8,5,2,0)(2,5,8)  4  [17,19,8,9]");
    CHECK(inv_tuple(catalog_get("l_{17,7}", {{"a", Scalar(3)}})).to_string() ==
          "(8,4,0)(8,4,2,0)(2,5,8)  2  [19,20,9,12]");
}

TEST_CASE("inv tuple of an abelian algebra") {
    InvTuple t = inv_tuple(from_brackets(3, {}, {}, AlgKind::lie));
    CHECK(t.tau == 3);
    CHECK(t.d111 == 9);
    CHECK(t.d011 == 9);
    CHECK(t.d110 == 9);
    CHECK(t.d111_011 == 9);
}

TEST_CASE("independence witness pair for the derivation slot") {
    CHECK(inv_tuple(catalog_get("indep_d111_a")).to_string() ==
          "(7,3,0)(7,3,0)(3,7)  3  [19,24,13,15]");
    CHECK(inv_tuple(catalog_get("indep_d111_b")).to_string() ==
          "(7,3,0)(7,3,0)(3,7)  3  [20,24,13,15]");
}

TEST_CASE("inv tuple is invariant under a change of basis") {
    Rng rng(73);
    for (const char* label : {"g_{3,2}", "g_{4,7}"}) {
        StructureConstants sc = catalog_get(label);
        std::string expect = inv_tuple(sc).to_string();
        for (int t = 0; t < 3; ++t) {
            StructureConstants moved = change_basis(sc, rng.invertible(sc.dim()));
            CHECK(inv_tuple(moved).to_string() == expect);
        }
    }
}
