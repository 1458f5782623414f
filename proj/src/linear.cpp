#include "lieinv/linear.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lieinv {

namespace {

/// Kernel basis from an RREF matrix with known pivot columns.
template <class T>
Matrix<T> kernel_from_rref(const Matrix<T>& m, const std::vector<int>& pivots,
                           size_t n_cols, const T& one) {
    std::vector<int> pivot_of_col(n_cols, -1);
    for (size_t k = 0; k < pivots.size(); ++k) pivot_of_col[pivots[k]] = static_cast<int>(k);
    Matrix<T> basis;
    for (size_t freec = 0; freec < n_cols; ++freec) {
        if (pivot_of_col[freec] >= 0) continue;
        std::vector<T> v(n_cols, T{});
        v[freec] = one;
        for (size_t col = 0; col < n_cols; ++col) {
            int pr = pivot_of_col[col];
            if (pr >= 0) v[col] = -m[pr][freec];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

Nullspace nullspace(const ScalarMatrix& m, size_t n_cols) {
    ScalarMatrix w = m;
    for (auto& row : w) row.resize(n_cols, Scalar(0));
    std::vector<int> pivots = rref(w);
    Nullspace ns;
    ns.basis = kernel_from_rref(w, pivots, n_cols, Scalar(1));
    ns.dim = static_cast<int>(ns.basis.size());
    return ns;
}

Matrix<ExtScalar> nullspace_ext(const Matrix<ExtScalar>& m, size_t n_cols) {
    Matrix<ExtScalar> w = m;
    for (auto& row : w) row.resize(n_cols, ExtScalar{});
    std::vector<int> pivots = rref(w);
    std::shared_ptr<const UniPoly> mod;
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.modulus()) { mod = e.modulus(); break; }
    ExtScalar one(mod, UniPoly(Scalar(1)));
    return kernel_from_rref(w, pivots, n_cols, one);
}

ScalarMatrix row_space(ScalarMatrix m) {
    std::vector<int> pivots = rref(m);
    m.resize(pivots.size());
    return m;
}

bool in_row_space(const ScalarMatrix& rref_basis, const std::vector<Scalar>& v) {
    // reduce v against the basis rows (each starts with a leading 1)
    std::vector<Scalar> w = v;
    for (const auto& row : rref_basis) {
        size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size()) continue;
        if (!w[lead].is_zero()) {
            Scalar f = w[lead];
            for (size_t j = lead; j < w.size(); ++j) w[j] -= f * row[j];
        }
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<std::vector<Scalar>> coords_in_span(const ScalarMatrix& basis,
                                                  const std::vector<Scalar>& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return std::nullopt;
        return std::vector<Scalar>{};
    }
    size_t n = v.size(), k = basis.size();
    // augmented system: basis^T * c = v
    ScalarMatrix aug(n, std::vector<Scalar>(k + 1, Scalar(0)));
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < k; ++c) aug[r][c] = basis[c][r];
        aug[r][k] = v[r];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == static_cast<int>(k)) return std::nullopt; // inconsistent
    std::vector<Scalar> coords(k, Scalar(0));
    for (size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = aug[r][k];
    return coords;
}

namespace {

/// Bit-size measure of a polynomial's coefficients, used for pivot choice.
size_t coeff_bits(const UniPoly& p) {
    size_t bits = 0;
    for (const auto& c : p.coeffs())
        for (const Rat* part : {&c.re(), &c.im()}) {
            if (*part == 0) continue;
            bits += mpz_sizeinbase(part->get_num().get_mpz_t(), 2);
            bits += mpz_sizeinbase(part->get_den().get_mpz_t(), 2);
        }
    return bits;
}

/// Scale a row by a positive rational so all coefficients are Gaussian
/// integers with small content; never changes vanishing loci.
void rat_normalize_row(std::vector<UniPoly>& row) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& p : row)
        for (const auto& c : p.coeffs())
            for (const Rat* part : {&c.re(), &c.im()}) {
                if (*part == 0) continue;
                mpz_class n = abs(part->get_num());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), part->get_den().get_mpz_t());
            }
    if (num_gcd != 0 && !(num_gcd == 1 && den_lcm == 1)) {
        Rat r(den_lcm, num_gcd);
        r.canonicalize();
        Scalar f(r);
        for (auto& p : row) p = p * f;
    }
}

/// Insert a monic squarefree polynomial into a pairwise-coprime basis.
void coprime_insert(std::vector<UniPoly>& basis, UniPoly f) {
    if (f.degree() < 1) return;
    for (size_t k = 0; k < basis.size() && f.degree() >= 1; ++k) {
        UniPoly g = poly_gcd(f, basis[k]);
        if (g.degree() < 1) continue;
        if (g.degree() < basis[k].degree()) {
            UniPoly rest = (basis[k] / g).monic();
            basis[k] = g;
            coprime_insert(basis, rest);
        }
        f = (f / g).monic();
    }
    if (f.degree() >= 1) basis.push_back(f);
}

int rank_mod_factor(const Matrix<UniPoly>& m, const UniPoly& factor,
                    std::vector<UniPoly>& splits);

/// Rank of m(alpha) with alpha a root of the given squarefree factor.
/// When dynamic evaluation splits the factor, the pieces are appended to
/// `splits` and -1 is returned.
int rank_mod_factor(const Matrix<UniPoly>& m, const UniPoly& factor,
                    std::vector<UniPoly>& splits) {
    if (factor.degree() == 1) {
        Scalar root = -factor.coeff(0) / factor.coeff(1);
        return rank_at(m, root);
    }
    auto mod = ExtScalar::make_modulus(factor);
    Matrix<ExtScalar> w(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
        w[r].reserve(m[r].size());
        for (const auto& p : m[r]) w[r].emplace_back(mod, p);
    }
    try {
        return rank(std::move(w));
    } catch (const SplitError& e) {
        splits.push_back(e.m1);
        splits.push_back(e.m2);
        return -1;
    }
}

} // namespace

int rank_at(const Matrix<UniPoly>& m, const Scalar& point) {
    ScalarMatrix w(m.size());
    for (size_t r = 0; r < m.size(); ++r) {
        w[r].reserve(m[r].size());
        for (const auto& p : m[r]) w[r].push_back(p.eval(point));
    }
    return rank(std::move(w));
}

StepRank param_step_rank(const Matrix<UniPoly>& m) {
    StepRank out;
    if (m.empty()) return out;
    size_t cols = 0;
    for (const auto& row : m) cols = std::max(cols, row.size());
    out.n_cols = static_cast<int>(cols);

    Matrix<UniPoly> w;
    w.reserve(m.size());
    for (const auto& row : m) {
        std::vector<UniPoly> r = row;
        r.resize(cols, UniPoly());
        bool nonzero = false;
        for (const auto& p : r)
            if (!p.is_zero()) { nonzero = true; break; }
        if (!nonzero) continue;
        // a rational scaling of an input row scales minors by a constant
        rat_normalize_row(r);
        w.push_back(std::move(r));
    }

    // fraction-free Bareiss elimination: every stage entry is a minor of the
    // input, so the final pivot is a nonzero generic_rank-minor and the
    // exceptional locus is contained in its zero set
    auto run_elimination = [&](const std::vector<size_t>& col_order) {
        Matrix<UniPoly> work = w;
        UniPoly prev(Scalar(1));
        UniPoly last_pivot(Scalar(1));
        size_t pr = 0;
        for (size_t ci = 0; ci < col_order.size() && pr < work.size(); ++ci) {
            size_t col = col_order[ci];
            // pivot choice: first nonzero constant scanning rows in order,
            // else minimal degree then minimal coefficient size
            size_t sel = work.size();
            for (size_t r = pr; r < work.size(); ++r) {
                const UniPoly& p = work[r][col];
                if (p.is_zero()) continue;
                if (p.degree() == 0) { sel = r; break; }
                if (sel == work.size()) {
                    sel = r;
                } else {
                    const UniPoly& q = work[sel][col];
                    if (p.degree() < q.degree() ||
                        (p.degree() == q.degree() && coeff_bits(p) < coeff_bits(q)))
                        sel = r;
                }
            }
            if (sel == work.size()) continue;
            std::swap(work[pr], work[sel]);
            const UniPoly pivot = work[pr][col];
            for (size_t r = pr + 1; r < work.size(); ++r) {
                const UniPoly f = work[r][col];
                for (size_t j = 0; j < cols; ++j) {
                    if (work[r][j].is_zero() && f.is_zero()) continue;
                    UniPoly t = pivot * work[r][j];
                    if (!f.is_zero()) t = t - f * work[pr][j];
                    auto [q, rem] = UniPoly::divmod(t, prev);
                    if (!rem.is_zero())
                        throw std::logic_error("param_step_rank: Bareiss division not exact");
                    work[r][j] = std::move(q);
                }
                work[r][col] = UniPoly();
            }
            prev = pivot;
            last_pivot = pivot;
            ++pr;
        }
        return std::make_pair(static_cast<int>(pr), last_pivot);
    };

    std::vector<size_t> forward(cols);
    for (size_t c = 0; c < cols; ++c) forward[c] = c;
    auto [rank1, minor1] = run_elimination(forward);
    out.generic_rank = rank1;

    // candidate loci: squarefree coprime factors of the final pivot, pruned
    // against the final pivot of a second elimination path (both are nonzero
    // generic_rank-minors; every exceptional point kills all such minors)
    std::vector<UniPoly> assumptions;
    if (out.generic_rank > 0 && minor1.degree() >= 1) {
        UniPoly cand = squarefree_part(minor1);
        std::vector<size_t> reversed(forward.rbegin(), forward.rend());
        auto [rank2, minor2] = run_elimination(reversed);
        if (rank2 != rank1)
            throw std::logic_error("param_step_rank: rank mismatch between pivot orders");
        if (minor2.degree() >= 1)
            cand = poly_gcd(cand, minor2);
        else
            cand = UniPoly(Scalar(1));
        if (cand.degree() >= 1) coprime_insert(assumptions, cand);
    }

    // analyse each coprime candidate locus; dynamic evaluation may refine
    std::deque<UniPoly> worklist(assumptions.begin(), assumptions.end());
    while (!worklist.empty()) {
        UniPoly f = worklist.front();
        worklist.pop_front();
        std::vector<UniPoly> splits;
        int rk = rank_mod_factor(m, f, splits);
        if (rk < 0) {
            for (auto& s : splits) worklist.push_back(s);
            continue;
        }
        if (rk > out.generic_rank)
            throw std::logic_error("param_step_rank: specialization rank exceeds generic");
        if (rk < out.generic_rank) out.exceptional.emplace_back(f, rk);
    }
    std::sort(out.exceptional.begin(), out.exceptional.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second < b.second;
                  return a.first < b.first;
              });
    return out;
}

int generic_rank_multivar(Matrix<MultiPoly> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    MultiPoly prev; // previous pivot, starts as 1
    bool have_prev = false;
    size_t pr = 0;
    for (size_t col = 0; col < cols && pr < rows; ++col) {
        size_t sel = rows;
        for (size_t r = pr; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            if (sel == rows || m[r][col].term_count() < m[sel][col].term_count())
                sel = r;
        }
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        const MultiPoly pivot = m[pr][col];
        for (size_t r = pr + 1; r < rows; ++r) {
            for (size_t j = col + 1; j < cols; ++j) {
                MultiPoly t = pivot * m[r][j] - m[r][col] * m[pr][j];
                m[r][j] = have_prev ? MultiPoly::exact_div(t, prev) : t;
            }
            m[r][col] = MultiPoly(pivot.nsyms());
        }
        prev = pivot;
        have_prev = true;
        ++pr;
    }
    return static_cast<int>(pr);
}

} // namespace lieinv
