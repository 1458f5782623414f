#include <doctest.h>

#include "lieinv/catalog.hpp"
#include "lieinv/classical.hpp"
#include "lieinv/derivations.hpp"
#include "test_util.hpp"

using namespace lieinv;
using lieinv::test::Rng;

namespace {

AbcTriple T(long a, long b, long g) { return {Scalar(a), Scalar(b), Scalar(g)}; }

int dim_of(const StructureConstants& sc, const AbcTriple& t) {
    return derivation_space(sc, {t}).dim();
}

ScalarMatrix flatten(const OperatorSpace& os) {
    ScalarMatrix flat;
    for (const auto& m : os.basis) {
        std::vector<Scalar> v;
        for (const auto& row : m)
            for (const auto& x : row) v.push_back(x);
        flat.push_back(std::move(v));
    }
    return flat;
}

bool space_contained(const OperatorSpace& small, const OperatorSpace& big) {
    ScalarMatrix basis = row_space(flatten(big));
    for (const auto& m : small.basis) {
        std::vector<Scalar> v;
        for (const auto& row : m)
            for (const auto& x : row) v.push_back(x);
        if (!in_row_space(basis, v)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("canonicalize_abc") {
    auto c1 = canonicalize_abc({Scalar(2), Scalar(3), Scalar(3)});
    CHECK(c1.cls == AbcClass::d11);
    CHECK(c1.delta == Scalar::of(2, 3));

    auto c2 = canonicalize_abc({Scalar(1), Scalar(-1), Scalar(1)});
    CHECK(c2.cls == AbcClass::d1m1);
    CHECK(c2.delta == Scalar(1));

    auto c3 = canonicalize_abc({Scalar(5), Scalar(0), Scalar(0)});
    CHECK(c3.cls == AbcClass::d00);
    CHECK(c3.delta == Scalar(1));

    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        AbcTriple x{rng.scalar(), rng.scalar(), rng.scalar()};
        CanonicalAbc c = canonicalize_abc(x);
        CanonicalAbc cc = canonicalize_abc(c.triple());
        CHECK(cc.cls == c.cls);
        CHECK(cc.delta == c.delta);
    }
}

TEST_CASE("derivation algebra of the worked 4-dimensional example") {
    StructureConstants g42 = catalog_get("g_{4,2}", {{"a", Scalar(2)}});
    CHECK(dim_of(g42, T(1, 1, 1)) == 6);
}

TEST_CASE("derivation space dims of g_{3,2} and g_{3,3}") {
    StructureConstants sc = catalog_get("g_{3,2}");
    CHECK(dim_of(sc, T(1, 1, 1)) == 4);
    CHECK(dim_of(sc, T(0, 1, 1)) == 3);
    CHECK(dim_of(sc, T(1, 1, 0)) == 1);
    CHECK(derivation_space(sc, {T(1, 1, 1), T(0, 1, 1)}).dim() == 2);
    CHECK(dim_of(sc, T(1, 1, -1)) == 0);
    CHECK(dim_of(sc, T(0, 1, -1)) == 1);
    StructureConstants g33 = catalog_get("g_{3,3}");
    CHECK(dim_of(g33, T(1, 1, 1)) == 6);
    CHECK(dim_of(g33, T(0, 1, 1)) == 3);
    CHECK(dim_of(g33, T(1, 1, 0)) == 1);
    CHECK(derivation_space(g33, {T(1, 1, 1), T(0, 1, 1)}).dim() == 2);
    CHECK(dim_of(g33, T(1, 1, -1)) == 0);
    CHECK(dim_of(g33, T(0, 1, -1)) == 1);
}

TEST_CASE("abelian algebras have the full operator space for every triple") {
    StructureConstants ab = from_brackets(3, {}, {}, AlgKind::lie);
    Rng rng(9);
    for (int t = 0; t < 5; ++t) {
        AbcTriple x{rng.scalar(), rng.scalar(), rng.scalar()};
        CHECK(dim_of(ab, x) == 9);
    }
    NamedSpaces ns = named_spaces(ab);
    for (const OperatorSpace* os :
         {&ns.der, &ns.d011, &ns.centroid, &ns.d100, &ns.d010, &ns.d11m1, &ns.quasicentroid,
          &ns.der_cap_d011, &ns.d100_cap_d010})
        CHECK(os->dim() == 9);
}

TEST_CASE("named spaces of sl(2,C)+g_1 and l_{18,25}(3)") {
    StructureConstants sc = catalog_get("sl(2,C)+g_1");
    NamedSpaces ns = named_spaces(sc);
    CHECK(ns.quasicentroid.dim() == 5); // dim D(0,1,-1) = 5
    StructureConstants l = catalog_get("l_{18,25}", {{"a", Scalar(3)}});
    CHECK(dim_of(l, T(1, 1, -1)) == 9);
    CHECK(dim_of(l, T(0, 1, -1)) == 18);
}

TEST_CASE("derivation space is constant on the canonicalization classes") {
    Rng rng(17);
    for (const char* label : {"g_{3,2}", "g_{3,3}", "sl(2,C)", "j_{2,5}"}) {
        StructureConstants sc = catalog_get(label);
        for (int t = 0; t < 6; ++t) {
            AbcTriple x{rng.scalar(), rng.scalar(), rng.scalar()};
            int direct = dim_of(sc, x);
            CHECK(direct == dim_of(sc, canonicalize_abc(x).triple()));
            Scalar e = rng.nonzero_scalar();
            CHECK(direct == dim_of(sc, {x.alpha * e, x.beta * e, x.gamma * e}));
            CHECK(direct == dim_of(sc, {x.alpha, x.gamma, x.beta}));
        }
    }
}

TEST_CASE("closure laws of the named spaces") {
    for (const char* label : {"g_{3,2}", "g_{2,1}+g_1", "g_{4,2}(1)", "sl(2,C)"}) {
        StructureConstants sc = catalog_get(label);
        NamedSpaces ns = named_spaces(sc);
        if (ns.der.dim() > 0) (void)operator_space_algebra(ns.der, OperatorProduct::commutator);
        if (ns.d011.dim() > 0) (void)operator_space_algebra(ns.d011, OperatorProduct::commutator);
        if (ns.d11m1.dim() > 0)
            (void)operator_space_algebra(ns.d11m1, OperatorProduct::anticommutator);
        if (ns.quasicentroid.dim() > 0)
            (void)operator_space_algebra(ns.quasicentroid, OperatorProduct::anticommutator);
        for (const OperatorSpace* os : {&ns.centroid, &ns.d100, &ns.d010}) {
            ScalarMatrix flat = flatten(*os);
            for (const auto& A : os->basis)
                for (const auto& B : os->basis) {
                    ScalarMatrix prod = matrix_product(A, B);
                    std::vector<Scalar> v;
                    for (const auto& row : prod)
                        for (const auto& x : row) v.push_back(x);
                    CHECK(coords_in_span(flat, v).has_value());
                }
        }
    }
}

TEST_CASE("D(1,0,0) n D(0,1,0) sits inside every derivation space") {
    Rng rng(29);
    for (const char* label : {"g_{2,1}+g_1", "g_{3,2}", "g_{4,3}"}) {
        StructureConstants sc = catalog_get(label);
        OperatorSpace core = derivation_space(sc, {T(1, 0, 0), T(0, 1, 0)});
        for (int t = 0; t < 4; ++t) {
            AbcTriple x{rng.scalar(), rng.scalar(), rng.scalar()};
            CHECK(space_contained(core, derivation_space(sc, {x})));
        }
    }
}

TEST_CASE("operator bases print as matrix lists") {
    NamedSpaces ns = named_spaces(catalog_get("g_{2,1}"));
    std::string text = operator_space_to_string(ns.der);
    CHECK(text.find("dim 2") == 0);
    CHECK(text.find("[0 0]") != std::string::npos);
}

TEST_CASE("dimension formulas hold on the whole lie catalog") {
    std::map<std::string, Scalar> one{{"a", Scalar(3)}}, two{{"a", Scalar(3)}, {"b", Scalar(7)}};
    for (const auto& e : catalog_entries()) {
        if (e.kind != AlgKind::lie) continue;
        std::map<std::string, Scalar> p;
        if (!e.params.empty()) p = e.params.size() == 1 ? one : two;
        StructureConstants sc = catalog_get(e.label, p);
        int n = sc.dim();
        SeriesProfile s = series(sc);
        int dim_derived = s.d.size() > 1 ? s.d[1] : s.d[0];
        int dim_center = s.c.front();
        NamedSpaces ns = named_spaces(sc);
        CHECK(ns.d100.dim() == (n - dim_derived) * n);
        CHECK(ns.d010.dim() == n * dim_center);
        CHECK(ns.d100_cap_d010.dim() == (n - dim_derived) * dim_center);
    }
}

TEST_CASE("conjugation carries named spaces onto the transported algebra") {
    Rng rng(31);
    StructureConstants sc = catalog_get("g_{4,2}", {{"a", Scalar(3)}});
    ScalarMatrix g = rng.invertible(4);
    ScalarMatrix ginv = matrix_inverse(g);
    StructureConstants moved = change_basis(sc, g);
    NamedSpaces a = named_spaces(sc), b = named_spaces(moved);
    auto check_pair = [&](const OperatorSpace& from, const OperatorSpace& to) {
        CHECK(from.dim() == to.dim());
        // an operator M in new coordinates corresponds to g M g^{-1} in old ones
        OperatorSpace mapped;
        mapped.dim_ambient = 4;
        for (const auto& m : to.basis)
            mapped.basis.push_back(matrix_product(g, matrix_product(m, ginv)));
        CHECK(space_contained(mapped, from));
    };
    check_pair(a.der, b.der);
    check_pair(a.d011, b.d011);
    check_pair(a.centroid, b.centroid);
    check_pair(a.quasicentroid, b.quasicentroid);
    check_pair(a.der_cap_d011, b.der_cap_d011);
}
