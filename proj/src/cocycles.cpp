#include "lieinv/cocycles.hpp"

#include <algorithm>

namespace lieinv {

Kappa Kappa::ones(int q) {
    Kappa k;
    k.m.assign(q + 1, std::vector<Scalar>(q + 1, Scalar(1)));
    return k;
}

int pair_index(int n, int j, int k) {
    return j * n - j * (j + 1) / 2 + (k - j - 1);
}

size_t cochain_dim(int n, int q) {
    // n * C(n,q)
    size_t binom = 1;
    for (int t = 0; t < q; ++t) binom = binom * (n - t) / (t + 1);
    return static_cast<size_t>(n) * binom;
}

CanonicalSix canonicalize_six(const SixParams& p) {
    const Scalar &a1 = p.a1, &a2 = p.a2, &a3 = p.a3, &b1 = p.b1, &b2 = p.b2, &b3 = p.b3;
    Scalar za = a2 + a3, zb = b2 + b3;
    Scalar zero(0), one(1);
    if (za.is_zero() && zb.is_zero()) {
        bool an = !a2.is_zero(), bn = !b2.is_zero();
        if (!an && !bn) return {1, {a1, zero, zero, b1, zero, zero}};
        if (!an && bn) return {2, {a1, zero, zero, b1, one, -one}};
        if (an && !bn) return {3, {a1, one, -one, b1, zero, zero}};
        Scalar q = a2 / b2;
        return {4, {a1, q, -q, b1, one, -one}};
    }
    if (za.is_zero()) { // zb != 0
        bool an = !a2.is_zero();
        if (!an && b2 != b3) return {5, {a1 / zb, zero, zero, b1 / zb, one, zero}};
        if (!an) return {6, {a1 / b2, zero, zero, b1 / b2, one, one}};
        if (b2 != b3) {
            Scalar q = a2 / (b2 - b3);
            return {7, {a1 / zb, q, -q, b1 / zb, one, zero}};
        }
        return {8, {a1 / b2, one, -one, b1 / b2, one, one}};
    }
    if (zb.is_zero()) { // za != 0
        bool bn = !b2.is_zero();
        if (!bn && a2 != a3) return {9, {a1 / za, one, zero, b1 / za, zero, zero}};
        if (!bn) return {10, {a1 / a2, one, one, b1 / a2, zero, zero}};
        if (a2 != a3) {
            Scalar q = b2 / (a2 - a3);
            return {11, {a1 / za, one, zero, b1 / za, q, -q}};
        }
        return {12, {a1 / a2, one, one, b1 / a2, one, -one}};
    }
    Scalar half = Scalar::of(1, 2);
    if (a2 != a3 && b2 != b3) {
        Scalar u = za / zb * half, v = (a2 - a3) / (b2 - b3) * half;
        return {13, {a1 / zb, u + v, u - v, b1 / zb, one, zero}};
    }
    if (a2 != a3) { // b2 == b3 != 0
        Scalar u = za / b2 * half;
        return {14, {a1 / b2, u + one, u - one, b1 / b2, one, one}};
    }
    if (b2 != b3) { // a2 == a3 != 0
        Scalar u = zb / a2 * half;
        return {15, {a1 / a2, one, one, b1 / a2, u + one, u - one}};
    }
    return {16, {a1 / b2, a2 / b2, a2 / b2, b1 / b2, one, one}};
}

CochainSpace two_cocycle_space(const StructureConstants& sc, const SixParams& p) {
    if (sc.kind() != AlgKind::lie)
        throw LieInvError("KindMismatch", "2-cocycle spaces require a lie algebra");
    int n = sc.dim();
    auto sys = two_cocycle_system<Scalar>(sc, p.as_array());
    Nullspace ns = nullspace(sys, cochain_dim(n, 2));
    return {ns.dim, std::move(ns.basis)};
}

namespace {

/// Generic koho1t assembler: equations for all ordered (q+1)-tuples of basis
/// indices and all target coordinates.
ScalarMatrix twisted_system(const StructureConstants& sc, int q, const Kappa& kappa) {
    int n = sc.dim();
    // enumerate increasing q-tuples for the cochain coordinates
    std::vector<std::vector<int>> tuples;
    std::vector<int> t(q);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == q) { tuples.push_back(t); return; }
        for (int v = start; v < n; ++v) {
            t[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    std::map<std::vector<int>, int> tuple_index;
    for (size_t k = 0; k < tuples.size(); ++k) tuple_index[tuples[k]] = static_cast<int>(k);

    size_t ncols = tuples.size() * static_cast<size_t>(n);
    auto add_c = [&](std::vector<Scalar>& row, std::vector<int> args, int s, const Scalar& coef) {
        // sort args, tracking the permutation sign; repeated args vanish
        int sign = 1;
        for (size_t a = 0; a + 1 < args.size(); ++a)
            for (size_t b = 0; b + 1 < args.size() - a; ++b)
                if (args[b] > args[b + 1]) {
                    std::swap(args[b], args[b + 1]);
                    sign = -sign;
                }
        for (size_t a = 0; a + 1 < args.size(); ++a)
            if (args[a] == args[a + 1]) return;
        int ti = tuple_index.at(args);
        Scalar v = sign < 0 ? -coef : coef;
        row[static_cast<size_t>(ti) * n + s] += v;
    };

    ScalarMatrix rows;
    std::vector<int> x(q + 1, 0);
    for (;;) {
        for (int s = 0; s < n; ++s) {
            std::vector<Scalar> row(ncols, Scalar(0));
            for (int i = 0; i <= q; ++i) {
                if (kappa.m[i][i].is_zero()) continue;
                Scalar sign = (i % 2 == 0) ? Scalar(1) : Scalar(-1);
                std::vector<int> rest;
                for (int k = 0; k <= q; ++k)
                    if (k != i) rest.push_back(x[k]);
                // kappa_ii [x_i, c(rest)]: coordinate s picks up, for each
                // value index r of the cochain, the factor [x_i, e_r]_s
                for (int r = 0; r < n; ++r) {
                    const Scalar& c = sc.at(x[i], r, s);
                    if (c.is_zero()) continue;
                    add_c(row, rest, r, kappa.m[i][i] * c * sign);
                }
            }
            for (int i = 0; i <= q; ++i)
                for (int j = i + 1; j <= q; ++j) {
                    if (kappa.m[i][j].is_zero()) continue;
                    Scalar sign = ((i + j) % 2 == 1) ? Scalar(-1) : Scalar(1);
                    std::vector<int> rest;
                    for (int k = 0; k <= q; ++k)
                        if (k != i && k != j) rest.push_back(x[k]);
                    for (int r = 0; r < n; ++r) {
                        const Scalar& c = sc.at(x[i], x[j], r);
                        if (c.is_zero()) continue;
                        std::vector<int> args;
                        args.push_back(r);
                        for (int v : rest) args.push_back(v);
                        add_c(row, args, s, kappa.m[i][j] * c * sign);
                    }
                }
            bool allzero = true;
            for (const auto& v : row)
                if (!v.is_zero()) { allzero = false; break; }
            if (!allzero) rows.push_back(std::move(row));
        }
        int pos = q;
        while (pos >= 0 && ++x[pos] == n) x[pos--] = 0;
        if (pos < 0) break;
    }
    return rows;
}

} // namespace

CochainSpace cocycle_space(const StructureConstants& sc, int q, const Kappa& kappa) {
    if (sc.kind() != AlgKind::lie)
        throw LieInvError("KindMismatch", "twisted cocycles require a lie algebra");
    if (q < 1 || q > 3) throw LieInvError("UnsupportedDegree", "q must be in 1..3");
    if (static_cast<int>(kappa.m.size()) != q + 1)
        throw LieInvError("BadInput", "kappa must be (q+1)x(q+1)");
    for (int i = 0; i <= q; ++i)
        for (int j = 0; j <= q; ++j)
            if (kappa.m[i][j] != kappa.m[j][i])
                throw LieInvError("BadInput", "kappa must be symmetric");
    int n = sc.dim();
    ScalarMatrix sys = twisted_system(sc, q, kappa);
    Nullspace ns = nullspace(sys, cochain_dim(n, q));
    return {ns.dim, std::move(ns.basis)};
}

ScalarMatrix differential_matrix(const StructureConstants& sc, int q) {
    int n = sc.dim();
    if (q == 0) {
        // (dc)(x_i) = [x_i, c]; rows (i,s), columns t
        ScalarMatrix d(static_cast<size_t>(n) * n, std::vector<Scalar>(n, Scalar(0)));
        for (int i = 0; i < n; ++i)
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) d[static_cast<size_t>(i) * n + s][t] = sc.at(i, t, s);
        return d;
    }
    if (q == 1) {
        // (dc)(x_i,x_j) = [x_i,c(x_j)] - [x_j,c(x_i)] - c([x_i,x_j]);
        // C^1 coordinates are (argument)*n + value, matching d at q=0
        size_t rows = static_cast<size_t>(n) * (n * (n - 1) / 2);
        ScalarMatrix d(rows, std::vector<Scalar>(static_cast<size_t>(n) * n, Scalar(0)));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                size_t base = static_cast<size_t>(pair_index(n, i, j)) * n;
                for (int s = 0; s < n; ++s) {
                    auto& row = d[base + s];
                    for (int r = 0; r < n; ++r) {
                        row[static_cast<size_t>(j) * n + r] += sc.at(i, r, s);
                        row[static_cast<size_t>(i) * n + r] -= sc.at(j, r, s);
                        row[static_cast<size_t>(r) * n + s] -= sc.at(i, j, r);
                    }
                }
            }
        return d;
    }
    if (q == 2) {
        // (dB)(x,y,z) with C^3 coordinates on increasing triples
        std::vector<std::array<int, 3>> triples;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) triples.push_back({i, j, k});
        size_t rows = triples.size() * static_cast<size_t>(n);
        size_t cols = cochain_dim(n, 2);
        ScalarMatrix d(rows, std::vector<Scalar>(cols, Scalar(0)));
        auto add_B = [&](std::vector<Scalar>& row, int u, int v, int s, const Scalar& coef) {
            if (u == v) return;
            if (u < v)
                row[static_cast<size_t>(pair_index(n, u, v)) * n + s] += coef;
            else
                row[static_cast<size_t>(pair_index(n, v, u)) * n + s] -= coef;
        };
        for (size_t tix = 0; tix < triples.size(); ++tix) {
            auto [i, j, k] = triples[tix];
            for (int s = 0; s < n; ++s) {
                auto& row = d[tix * n + s];
                for (int r = 0; r < n; ++r) {
                    add_B(row, j, k, r, sc.at(i, r, s));  // [x, B(y,z)]
                    add_B(row, i, k, r, -sc.at(j, r, s)); // -[y, B(x,z)]
                    add_B(row, i, j, r, sc.at(k, r, s));  // [z, B(x,y)]
                    add_B(row, r, k, s, -sc.at(i, j, r)); // -B([x,y],z)
                    add_B(row, r, j, s, sc.at(i, k, r));  // +B([x,z],y)
                    add_B(row, r, i, s, -sc.at(j, k, r)); // -B([y,z],x)
                }
            }
        }
        return d;
    }
    throw LieInvError("UnsupportedDegree", "differential only implemented for q in 0..2");
}

CohomologyDims cohomology_dims(const StructureConstants& sc, int q) {
    if (sc.kind() != AlgKind::lie)
        throw LieInvError("KindMismatch", "cohomology requires a lie algebra");
    if (q != 1 && q != 2) throw LieInvError("UnsupportedDegree", "q must be 1 or 2");
    CohomologyDims out;
    out.z = cocycle_space(sc, q, Kappa::ones(q)).dim;
    out.b = rank(differential_matrix(sc, q - 1));
    out.h = out.z - out.b;
    return out;
}

} // namespace lieinv
