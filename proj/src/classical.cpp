#include "lieinv/classical.hpp"

namespace lieinv {

namespace {

void require_lie(const StructureConstants& sc, const char* what) {
    if (sc.kind() != AlgKind::lie)
        throw LieInvError("KindMismatch", std::string(what) + " requires a lie algebra");
}

std::vector<Scalar> unit_vector(int n, int k) {
    std::vector<Scalar> v(n, Scalar(0));
    v[k] = Scalar(1);
    return v;
}

/// Span of all products [u,v] with u from a, v from b.
ScalarMatrix product_span(const StructureConstants& sc, const ScalarMatrix& a,
                          const ScalarMatrix& b) {
    ScalarMatrix gens;
    for (const auto& u : a)
        for (const auto& v : b) gens.push_back(sc.product(u, v));
    return row_space(std::move(gens));
}

/// Reduce v against an RREF basis (single pass; basis rows have leading 1
/// with zeros above and below).
std::vector<Scalar> reduce_against(const ScalarMatrix& basis, std::vector<Scalar> v) {
    for (const auto& row : basis) {
        size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size() || v[lead].is_zero()) continue;
        Scalar f = v[lead];
        for (size_t j = lead; j < v.size(); ++j) v[j] -= f * row[j];
    }
    return v;
}

} // namespace

ScalarMatrix center(const StructureConstants& sc) {
    int n = sc.dim();
    // [x, e_j] = 0 for all j: rows (j,k), unknowns x_i
    ScalarMatrix sys;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            std::vector<Scalar> row(n, Scalar(0));
            for (int i = 0; i < n; ++i) row[i] = sc.at(i, j, k);
            sys.push_back(std::move(row));
        }
    return nullspace(sys, n).basis;
}

SeriesProfile series(const StructureConstants& sc) {
    require_lie(sc, "series");
    int n = sc.dim();
    SeriesProfile out;
    ScalarMatrix full;
    for (int k = 0; k < n; ++k) full.push_back(unit_vector(n, k));

    auto run_chain = [&](std::vector<int>& dims, bool derived) {
        ScalarMatrix cur = full;
        dims.push_back(n);
        for (;;) {
            ScalarMatrix next = product_span(sc, cur, derived ? cur : full);
            int d = static_cast<int>(next.size());
            if (d == dims.back()) break;
            dims.push_back(d);
            if (d == 0) break;
            cur = std::move(next);
        }
    };
    run_chain(out.d, true);
    run_chain(out.l, false);

    // ascending central sequence via preimages of the center of the quotient
    ScalarMatrix ck; // RREF basis of C^k, starts empty (C^0 = 0)
    for (;;) {
        // x in C^{k+1}  iff  [x, e_j] lies in span(C^k) for all j
        ScalarMatrix sys;
        for (int j = 0; j < sc.dim(); ++j) {
            // column i: reduce([e_i,e_j]) coordinates
            std::vector<std::vector<Scalar>> cols;
            for (int i = 0; i < sc.dim(); ++i) {
                std::vector<Scalar> prod(sc.dim(), Scalar(0));
                for (int k2 = 0; k2 < sc.dim(); ++k2) prod[k2] = sc.at(i, j, k2);
                cols.push_back(reduce_against(ck, std::move(prod)));
            }
            for (int s = 0; s < sc.dim(); ++s) {
                std::vector<Scalar> row(sc.dim(), Scalar(0));
                for (int i = 0; i < sc.dim(); ++i) row[i] = cols[i][s];
                sys.push_back(std::move(row));
            }
        }
        ScalarMatrix next = nullspace(sys, sc.dim()).basis;
        int d = static_cast<int>(next.size());
        if (!out.c.empty() && d == out.c.back()) break;
        out.c.push_back(d);
        if (d == sc.dim()) break;
        ck = row_space(std::move(next));
    }

    out.solvable = out.d.back() == 0;
    out.nilpotent = out.l.back() == 0;
    return out;
}

int tau(const StructureConstants& sc) {
    require_lie(sc, "tau");
    int n = sc.dim();
    Matrix<MultiPoly> m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly e(n);
            for (int k = 0; k < n; ++k) {
                const Scalar& c = sc.at(i, j, k);
                if (!c.is_zero()) e += MultiPoly::symbol(n, k) * c;
            }
            m[i][j] = std::move(e);
        }
    return n - generic_rank_multivar(std::move(m));
}

namespace {

/// ad x as a matrix of polynomials linear in the coordinates x_off..x_off+n-1
/// of a polynomial ring with nsyms symbols.
Matrix<MultiPoly> ad_symbolic(const StructureConstants& sc, size_t nsyms, size_t off) {
    int n = sc.dim();
    Matrix<MultiPoly> m(n, std::vector<MultiPoly>(n, MultiPoly(nsyms)));
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < n; ++r) {
            MultiPoly e(nsyms);
            for (int i = 0; i < n; ++i) {
                const Scalar& c = sc.at(i, r, s);
                if (!c.is_zero()) e += MultiPoly::symbol(nsyms, off + i) * c;
            }
            m[s][r] = std::move(e);
        }
    return m;
}

Matrix<MultiPoly> mat_mul(const Matrix<MultiPoly>& a, const Matrix<MultiPoly>& b) {
    size_t n = a.size();
    Matrix<MultiPoly> r(n, std::vector<MultiPoly>(n, MultiPoly(a[0][0].nsyms())));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

MultiPoly mat_trace(const Matrix<MultiPoly>& a) {
    MultiPoly t(a[0][0].nsyms());
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

} // namespace

ChiInvariants chi(const StructureConstants& sc) {
    require_lie(sc, "chi");
    int n = sc.dim();
    Matrix<MultiPoly> ad = ad_symbolic(sc, n, 0);
    Matrix<MultiPoly> ad2 = mat_mul(ad, ad);
    Matrix<MultiPoly> ad3 = mat_mul(ad2, ad);
    MultiPoly t1 = mat_trace(ad), t2 = mat_trace(ad2), t3 = mat_trace(ad3);
    MultiPoly p111 = -t1;
    MultiPoly p222 = (t1 * t1 - t2) * Scalar::of(1, 2);
    MultiPoly p333 = (t1 * t1 * t1 - (t1 * t2) * Scalar(3) + t3 * Scalar(2)) * Scalar::of(-1, 6);
    ChiInvariants out;
    auto ratio = [](const MultiPoly& num, const MultiPoly& den) -> std::optional<Scalar> {
        if (num.is_zero() || den.is_zero()) return std::nullopt;
        return num.proportional_to(den);
    };
    out.chi1 = ratio(p222, p111 * p111);
    out.chi2 = ratio(p333, p111 * p111 * p111);
    out.chi3 = ratio(p333 * p333, p222 * p222 * p222);
    return out;
}

std::optional<Scalar> cpq(const StructureConstants& sc, int p, int q) {
    require_lie(sc, "cpq");
    if (p < 1 || p > 3 || q < 1 || q > 3)
        throw LieInvError("BadInput", "cpq requires 1 <= p,q <= 3");
    int n = sc.dim();
    size_t nsyms = 2 * static_cast<size_t>(n);
    Matrix<MultiPoly> adx = ad_symbolic(sc, nsyms, 0);
    Matrix<MultiPoly> ady = ad_symbolic(sc, nsyms, n);
    Matrix<MultiPoly> xp = adx, yq = ady;
    for (int k = 1; k < p; ++k) xp = mat_mul(xp, adx);
    for (int k = 1; k < q; ++k) yq = mat_mul(yq, ady);
    MultiPoly a = mat_trace(xp), b = mat_trace(yq), t = mat_trace(mat_mul(xp, yq));
    if (a.is_zero() || b.is_zero() || t.is_zero()) return std::nullopt;
    return (a * b).proportional_to(t);
}

InvTuple inv_tuple(const StructureConstants& sc) {
    require_lie(sc, "inv tuple");
    InvTuple out;
    out.series = series(sc);
    out.tau = tau(sc);
    out.d111 = derivation_space(sc, {{Scalar(1), Scalar(1), Scalar(1)}}).dim();
    out.d011 = derivation_space(sc, {{Scalar(0), Scalar(1), Scalar(1)}}).dim();
    out.d110 = derivation_space(sc, {{Scalar(1), Scalar(1), Scalar(0)}}).dim();
    out.d111_011 = derivation_space(
                       sc, {{Scalar(1), Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(1)}})
                       .dim();
    return out;
}

std::string InvTuple::to_string() const {
    auto seq = [](const std::vector<int>& v) {
        std::string s = "(";
        for (size_t k = 0; k < v.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(v[k]);
        }
        return s + ")";
    };
    return seq(series.d) + seq(series.l) + seq(series.c) + "  " + std::to_string(tau) + "  [" +
           std::to_string(d111) + "," + std::to_string(d011) + "," + std::to_string(d110) + "," +
           std::to_string(d111_011) + "]";
}

} // namespace lieinv
