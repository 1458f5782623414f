#include <doctest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/json_io.hpp"
#include "test_util.hpp"

using namespace lieinv;
using lieinv::test::Rng;

TEST_CASE("validate accepts the catalog laws") {
    CHECK(validate(catalog_get("g_{3,1}")).ok());
    CHECK(validate(catalog_get("j_{2,5}")).ok());
    CHECK(validate(catalog_get("sl(2,C)")).ok());

    // antisymmetry violation at (1,2,1)
    StructureConstants bad(2, AlgKind::raw);
    bad.at(0, 1, 0) = Scalar(1);
    bad.at(1, 0, 0) = Scalar(1);
    StructureConstants bad_lie(2, AlgKind::lie);
    bad_lie.at(0, 1, 0) = Scalar(1);
    bad_lie.at(1, 0, 0) = Scalar(1);
    ValidationReport rep = validate(bad_lie);
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front().law == "antisymmetry");
    CHECK(rep.violations.front().index == std::vector<int>{1, 2, 1});
    CHECK(validate(bad).ok()); // raw kind always passes
}

TEST_CASE("from_brackets") {
    StructureConstants g42 = catalog_get("g_{4,2}", {{"a", Scalar(2)}});
    CHECK(g42.dim() == 4);
    CHECK(g42.at(0, 3, 0) == Scalar(2));
    CHECK(g42.at(3, 0, 0) == Scalar(-2));
    CHECK(validate(g42).ok());

    StructureConstants abelian = from_brackets(3, {}, {}, AlgKind::lie);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(abelian.at(i, j, k).is_zero());

    StructureConstants l1825 = catalog_get("l_{18,25}", {{"a", Scalar(3)}});
    CHECK(l1825.dim() == 8);
    CHECK(validate(l1825).ok());
    CHECK(l1825.at(0, 3, 7) == Scalar(-3)); // [l01,l20] = -a l21

    CHECK_THROWS_AS((void)from_brackets(2, {}, {{"e1", "e9", "e1"}}, AlgKind::lie),
                    LieInvError);
    CHECK_THROWS_AS((void)catalog_get("g_{4,2}", {{"a", Scalar(-2)}}), LieInvError);
    CHECK_THROWS_AS((void)catalog_get("g_{4,2}"), LieInvError);
}

TEST_CASE("bracket expressions evaluate rational functions of parameters") {
    std::map<std::string, Scalar> params{{"a", Scalar(2)}};
    StructureConstants sc =
        from_brackets(2, {}, {{"e1", "e2", "(1+a)/a*e1"}}, AlgKind::lie, params);
    CHECK(sc.at(0, 1, 0) == Scalar::of(3, 2));
    CHECK_THROWS_AS((void)from_brackets(2, {}, {{"e1", "e2", "1/(a-2)*e1"}}, AlgKind::lie, params),
                    LieInvError);
}

TEST_CASE("change_basis") {
    StructureConstants sc = catalog_get("g_{3,4}", {{"a", Scalar(5)}});
    SUBCASE("identity") {
        ScalarMatrix id(3, std::vector<Scalar>(3, Scalar(0)));
        for (int k = 0; k < 3; ++k) id[k][k] = Scalar(1);
        CHECK(change_basis(sc, id) == sc);
    }
    SUBCASE("g_{3,4}(a) realizes g_{3,4}(1/a) by swapping e1,e2 and scaling e3") {
        // f(e1)=e2, f(e2)=e1, f(e3)=e3/a
        ScalarMatrix g(3, std::vector<Scalar>(3, Scalar(0)));
        g[1][0] = Scalar(1);
        g[0][1] = Scalar(1);
        g[2][2] = Scalar(1) / Scalar(5);
        StructureConstants got = change_basis(sc, g);
        StructureConstants want = catalog_get("g_{3,4}", {{"a", Scalar(1) / Scalar(5)}});
        CHECK(got.at(0, 2, 0) == want.at(0, 2, 0));
        CHECK(got == want);
    }
    SUBCASE("random basis change keeps the laws") {
        Rng rng(5);
        for (int t = 0; t < 10; ++t) {
            StructureConstants a = catalog_get("g_{4,8}", {{"a", Scalar(3)}});
            StructureConstants moved = change_basis(a, rng.invertible(4));
            CHECK(validate(moved).ok());
        }
    }
    SUBCASE("singular matrix is rejected") {
        ScalarMatrix z(3, std::vector<Scalar>(3, Scalar(0)));
        CHECK_THROWS_AS((void)change_basis(sc, z), LieInvError);
    }
}

TEST_CASE("direct_sum") {
    StructureConstants s = direct_sum(catalog_get("g_{2,1}"), catalog_get("g_1"));
    CHECK(s.dim() == 3);
    CHECK(validate(s).ok());
    CHECK(s.at(0, 1, 1).is_zero());
    CHECK(s.at(0, 1, 0) == Scalar(1)); // [e1,e2] = e1 block

    StructureConstants ab = direct_sum(from_brackets(2, {}, {}, AlgKind::lie),
                                       from_brackets(1, {}, {}, AlgKind::lie));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(ab.at(i, j, k).is_zero());

    StructureConstants sl2g1 = direct_sum(catalog_get("sl(2,C)"), catalog_get("g_1"));
    CHECK(sl2g1 == catalog_get("sl(2,C)+g_1"));

    CHECK_THROWS_AS((void)direct_sum(catalog_get("g_{2,1}"), catalog_get("j_{2,1}")), LieInvError);
}

TEST_CASE("operator_space_algebra") {
    SUBCASE("identity matrix under anticommutator is j_{1,1}") {
        OperatorSpace os;
        os.dim_ambient = 2;
        ScalarMatrix id(2, std::vector<Scalar>(2, Scalar(0)));
        id[0][0] = id[1][1] = Scalar(1);
        os.basis.push_back(id);
        StructureConstants sc = operator_space_algebra(os, OperatorProduct::anticommutator);
        CHECK(sc.dim() == 1);
        CHECK(sc.kind() == AlgKind::jordan);
        CHECK(sc.at(0, 0, 0) == Scalar(1)); // e1 o e1 = e1, i.e. j_{1,1}
    }
    SUBCASE("E12 alone is closed and abelian under commutator") {
        OperatorSpace os;
        os.dim_ambient = 2;
        ScalarMatrix e12(2, std::vector<Scalar>(2, Scalar(0)));
        e12[0][1] = Scalar(1);
        os.basis.push_back(e12);
        StructureConstants sc = operator_space_algebra(os, OperatorProduct::commutator);
        CHECK(sc.at(0, 0, 0).is_zero());
    }
    SUBCASE("a non-closed span is reported with the witness pair") {
        OperatorSpace os;
        os.dim_ambient = 2;
        ScalarMatrix e12(2, std::vector<Scalar>(2, Scalar(0))), e21 = e12;
        e12[0][1] = Scalar(1);
        e21[1][0] = Scalar(1);
        os.basis = {e12, e21};
        CHECK_THROWS_AS((void)operator_space_algebra(os, OperatorProduct::commutator),
                        LieInvError);
    }
}

TEST_CASE("algebra json round-trip") {
    StructureConstants sc = catalog_get("g_{4,5}", {{"a", Scalar(3)}, {"b", Scalar(7)}});
    Json j = algebra_to_json(sc);
    StructureConstants back = algebra_from_json(j);
    CHECK(back == sc);

    Json file = Json::parse(R"({
      "name": "g34", "dim": 3, "kind": "lie",
      "basis": ["e1","e2","e3"],
      "parameters": {"a": "2"},
      "brackets": [["e1","e3","e1"], ["e2","e3","a*e2"]]
    })");
    StructureConstants g34 = algebra_from_json(file);
    CHECK(g34 == catalog_get("g_{3,4}", {{"a", Scalar(2)}}));
}
