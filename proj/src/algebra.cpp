#include "lieinv/algebra.hpp"

#include <algorithm>
#include <cctype>

namespace lieinv {

std::string kind_name(AlgKind k) {
    switch (k) {
        case AlgKind::lie: return "lie";
        case AlgKind::jordan: return "jordan";
        default: return "raw";
    }
}

AlgKind kind_from_name(const std::string& s) {
    if (s == "lie") return AlgKind::lie;
    if (s == "jordan") return AlgKind::jordan;
    if (s == "raw") return AlgKind::raw;
    throw LieInvError("BadInput", "unknown algebra kind: " + s);
}

StructureConstants::StructureConstants(int dim, AlgKind kind, std::vector<std::string> basis_labels,
                                       std::string name)
    : dim_(dim), kind_(kind), name_(std::move(name)), basis_(std::move(basis_labels)) {
    if (dim < 1 || dim > 16) throw LieInvError("BadInput", "dimension must be in 1..16");
    if (basis_.empty()) {
        for (int k = 1; k <= dim; ++k) basis_.push_back("e" + std::to_string(k));
    }
    if (static_cast<int>(basis_.size()) != dim)
        throw LieInvError("BadInput", "basis label count does not match dim");
    c_.assign(static_cast<size_t>(dim) * dim * dim, Scalar(0));
}

std::vector<Scalar> StructureConstants::product(const std::vector<Scalar>& x,
                                                const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim_, Scalar(0));
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (int k = 0; k < dim_; ++k) {
                const Scalar& ck = at(i, j, k);
                if (!ck.is_zero()) out[k] += f * ck;
            }
        }
    }
    return out;
}

ScalarMatrix StructureConstants::left_mult_matrix(int i) const {
    ScalarMatrix m(dim_, std::vector<Scalar>(dim_, Scalar(0)));
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) m[k][j] = at(i, j, k);
    return m;
}

std::vector<std::string> StructureConstants::bracket_strings() const {
    std::vector<std::string> out;
    auto open = kind_ == AlgKind::jordan ? std::string("") : std::string("[");
    for (int i = 0; i < dim_; ++i) {
        int j0 = kind_ == AlgKind::lie ? i + 1 : i;
        for (int j = j0; j < dim_; ++j) {
            std::string rhs;
            for (int k = 0; k < dim_; ++k) {
                const Scalar& c = at(i, j, k);
                if (c.is_zero()) continue;
                std::string term;
                if (c.is_one()) {
                    term = basis_[k];
                } else if (c == Scalar(-1)) {
                    term = "-" + basis_[k];
                } else {
                    std::string cs = c.to_string();
                    if (!c.is_rational() && c.re() != 0) cs = "(" + cs + ")";
                    term = cs + "*" + basis_[k];
                }
                if (rhs.empty())
                    rhs = term;
                else
                    rhs += term[0] == '-' ? term : "+" + term;
            }
            if (rhs.empty()) continue;
            if (kind_ == AlgKind::jordan)
                out.push_back(basis_[i] + "o" + basis_[j] + " = " + rhs);
            else
                out.push_back(open + basis_[i] + "," + basis_[j] + "] = " + rhs);
        }
    }
    return out;
}

ValidationReport validate(const StructureConstants& sc) {
    ValidationReport rep;
    int n = sc.dim();
    if (sc.kind() == AlgKind::raw) return rep;
    if (sc.kind() == AlgKind::lie) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                for (int m = 0; m < n; ++m)
                    if (!(sc.at(i, j, m) + sc.at(j, i, m)).is_zero())
                        rep.violations.push_back({"antisymmetry", {i + 1, j + 1, m + 1}});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int m = 0; m < n; ++m) {
                        Scalar s;
                        for (int l = 0; l < n; ++l) {
                            s += sc.at(j, k, l) * sc.at(i, l, m);
                            s += sc.at(i, j, l) * sc.at(k, l, m);
                            s += sc.at(k, i, l) * sc.at(j, l, m);
                        }
                        if (!s.is_zero())
                            rep.violations.push_back({"jacobi", {i + 1, j + 1, k + 1, m + 1}});
                    }
        return rep;
    }
    // jordan
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int m = 0; m < n; ++m)
                if (!(sc.at(i, j, m) - sc.at(j, i, m)).is_zero())
                    rep.violations.push_back({"symmetry", {i + 1, j + 1, m + 1}});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m)
                    for (int r = 0; r < n; ++r) {
                        Scalar s;
                        for (int h = 0; h < n; ++h) {
                            if (!sc.at(i, k, h).is_zero()) {
                                const Scalar& a = sc.at(i, k, h);
                                for (int l = 0; l < n; ++l) {
                                    s += a * (sc.at(m, j, l) * sc.at(h, l, r) -
                                              sc.at(h, j, l) * sc.at(l, m, r));
                                }
                            }
                            if (!sc.at(i, m, h).is_zero()) {
                                const Scalar& a = sc.at(i, m, h);
                                for (int l = 0; l < n; ++l) {
                                    s += a * (sc.at(k, j, l) * sc.at(h, l, r) -
                                              sc.at(h, j, l) * sc.at(l, k, r));
                                }
                            }
                            if (!sc.at(m, k, h).is_zero()) {
                                const Scalar& a = sc.at(m, k, h);
                                for (int l = 0; l < n; ++l) {
                                    s += a * (sc.at(i, j, l) * sc.at(h, l, r) -
                                              sc.at(h, j, l) * sc.at(l, i, r));
                                }
                            }
                        }
                        if (!s.is_zero())
                            rep.violations.push_back({"jordan", {i + 1, j + 1, k + 1, m + 1, r + 1}});
                    }
    return rep;
}

namespace {

/// Value of a bracket expression: a scalar plus a linear combination of
/// basis vectors. Mixing the two under * or / is rejected.
struct LinComb {
    Scalar scalar;
    std::map<int, Scalar> vec;
    bool pure_scalar() const { return vec.empty(); }
};

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& labels;
    const std::map<std::string, Scalar>& params;

    ExprParser(const std::string& text, const std::vector<std::string>& l,
               const std::map<std::string, Scalar>& p)
        : s(text), labels(l), params(p) {}

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char c) { if (peek() == c) { ++pos; return true; } return false; }
    [[noreturn]] void fail(const std::string& why) {
        throw LieInvError("BadInput", why + " in expression: " + s);
    }

    LinComb parse() {
        LinComb v = sum();
        skip_ws();
        if (pos != s.size()) fail("trailing characters");
        return v;
    }

    LinComb sum() {
        LinComb acc = signed_product();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            LinComb t = signed_product();
            if (c == '-') t = negate(t);
            acc.scalar += t.scalar;
            for (auto& [k, coef] : t.vec) {
                acc.vec[k] += coef;
                if (acc.vec[k].is_zero()) acc.vec.erase(k);
            }
        }
        return acc;
    }

    LinComb signed_product() {
        int sign = 1;
        while (peek() == '+' || peek() == '-') {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        LinComb v = product();
        return sign < 0 ? negate(v) : v;
    }

    LinComb product() {
        LinComb acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = mul(acc, power());
            } else if (c == '/') {
                ++pos;
                LinComb d = power();
                if (!d.pure_scalar()) fail("division by a basis vector");
                if (d.scalar.is_zero())
                    throw LieInvError("DenominatorVanishes", "denominator vanishes in: " + s);
                LinComb inv;
                inv.scalar = d.scalar.inv();
                acc = mul(acc, inv);
            } else {
                break;
            }
        }
        return acc;
    }

    LinComb power() {
        LinComb base = atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("bad exponent");
            long e = std::stol(s.substr(start, pos - start));
            if (!base.pure_scalar()) fail("power of a basis vector");
            LinComb r;
            r.scalar = Scalar(1);
            for (long k = 0; k < e; ++k) r.scalar *= base.scalar;
            return r;
        }
        return base;
    }

    LinComb atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            LinComb v = sum();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos < s.size() && s[pos] == '/') {
                size_t save = pos;
                ++pos;
                size_t ds = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == ds) pos = save;
            }
            LinComb v;
            v.scalar = Scalar(rat_from_string(s.substr(start, pos - start)));
            return v;
        }
        // identifier: letters, digits, _, {, }, comma inside braces
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '{' ||
                s[pos] == '}' ||
                static_cast<unsigned char>(s[pos]) >= 0x80)) // allow UTF-8 labels
            ++pos;
        if (pos == start) fail("unexpected character");
        std::string name = s.substr(start, pos - start);
        if (name == "i") {
            LinComb v;
            v.scalar = Scalar::i();
            return v;
        }
        for (size_t k = 0; k < labels.size(); ++k) {
            if (labels[k] == name) {
                LinComb v;
                v.vec[static_cast<int>(k)] = Scalar(1);
                return v;
            }
        }
        auto it = params.find(name);
        if (it != params.end()) {
            LinComb v;
            v.scalar = it->second;
            return v;
        }
        throw LieInvError("UnknownLabel", "unknown identifier '" + name + "' in: " + s);
    }

    static LinComb negate(LinComb v) {
        v.scalar = -v.scalar;
        for (auto& [k, c] : v.vec) c = -c;
        return v;
    }

    LinComb mul(const LinComb& a, const LinComb& b) {
        if (!a.pure_scalar() && !b.pure_scalar()) fail("nonlinear product of basis vectors");
        const LinComb& sc = a.pure_scalar() ? a : b;
        const LinComb& vc = a.pure_scalar() ? b : a;
        LinComb r;
        r.scalar = sc.scalar * vc.scalar;
        for (const auto& [k, c] : vc.vec) {
            Scalar x = sc.scalar * c;
            if (!x.is_zero()) r.vec[k] = x;
        }
        return r;
    }
};

int label_index(const std::vector<std::string>& labels, const std::string& name) {
    for (size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == name) return static_cast<int>(k);
    throw LieInvError("UnknownLabel", "unknown basis label '" + name + "'");
}

} // namespace

Scalar eval_scalar_expr(const std::string& text, const std::map<std::string, Scalar>& params) {
    static const std::vector<std::string> no_labels;
    ExprParser p(text, no_labels, params);
    LinComb v = p.parse();
    if (!v.pure_scalar()) throw LieInvError("BadInput", "expected a scalar: " + text);
    return v.scalar;
}

StructureConstants from_brackets(int dim, const std::vector<std::string>& basis_labels,
                                 const std::vector<BracketRelation>& relations, AlgKind kind,
                                 const std::map<std::string, Scalar>& params,
                                 const std::string& name) {
    StructureConstants sc(dim, kind, basis_labels, name);
    std::vector<bool> seen(static_cast<size_t>(dim) * dim, false);
    for (const auto& [la, lb, rhs_text] : relations) {
        int i = label_index(sc.basis(), la);
        int j = label_index(sc.basis(), lb);
        ExprParser p(rhs_text, sc.basis(), params);
        LinComb rhs = p.parse();
        if (!rhs.scalar.is_zero())
            throw LieInvError("BadInput", "bracket right side has a scalar part: " + rhs_text);
        if (seen[i * dim + j] || (kind != AlgKind::raw && seen[j * dim + i]))
            throw LieInvError("BadInput", "duplicate bracket for (" + la + "," + lb + ")");
        seen[i * dim + j] = true;
        if (kind != AlgKind::raw) seen[j * dim + i] = true;
        for (const auto& [k, coef] : rhs.vec) {
            sc.at(i, j, k) = coef;
            if (i != j) {
                if (kind == AlgKind::lie)
                    sc.at(j, i, k) = -coef;
                else if (kind == AlgKind::jordan)
                    sc.at(j, i, k) = coef;
            } else if (kind == AlgKind::lie && !coef.is_zero()) {
                throw LieInvError("LawViolation", "[x,x] must vanish for lie kind");
            }
        }
    }
    ValidationReport rep = validate(sc);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        std::string idx;
        for (int x : v.index) idx += (idx.empty() ? "" : ",") + std::to_string(x);
        throw LieInvError("LawViolation",
                          "constructed tensor violates " + v.law + " at (" + idx + ")" +
                              (rep.violations.size() > 1
                                   ? " and " + std::to_string(rep.violations.size() - 1) + " more"
                                   : ""));
    }
    return sc;
}

ScalarMatrix matrix_product(const ScalarMatrix& a, const ScalarMatrix& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    ScalarMatrix r(n, std::vector<Scalar>(m, Scalar(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

ScalarMatrix matrix_inverse(const ScalarMatrix& g) {
    size_t n = g.size();
    ScalarMatrix aug(n, std::vector<Scalar>(2 * n, Scalar(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = g[i][j];
        aug[i][n + i] = Scalar(1);
    }
    std::vector<int> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() >= static_cast<int>(n))
        throw LieInvError("SingularMatrix", "matrix is singular");
    ScalarMatrix inv(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

StructureConstants change_basis(const StructureConstants& sc, const ScalarMatrix& g) {
    int n = sc.dim();
    ScalarMatrix ginv = matrix_inverse(g);
    StructureConstants out(n, sc.kind(), sc.basis(), sc.name());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // product of images f(e_i) * f(e_j) in the old coordinates
            std::vector<Scalar> prod(n, Scalar(0));
            for (int p = 0; p < n; ++p) {
                if (g[p][i].is_zero()) continue;
                for (int q = 0; q < n; ++q) {
                    if (g[q][j].is_zero()) continue;
                    Scalar f = g[p][i] * g[q][j];
                    for (int s = 0; s < n; ++s) {
                        const Scalar& c = sc.at(p, q, s);
                        if (!c.is_zero()) prod[s] += f * c;
                    }
                }
            }
            for (int k = 0; k < n; ++k) {
                Scalar v;
                for (int s = 0; s < n; ++s)
                    if (!prod[s].is_zero()) v += ginv[k][s] * prod[s];
                out.at(i, j, k) = v;
            }
        }
    return out;
}

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
    if (a.kind() != b.kind())
        throw LieInvError("KindMismatch", "direct sum requires matching kinds");
    int n = a.dim(), m = b.dim();
    std::vector<std::string> labels;
    for (int k = 1; k <= n + m; ++k) labels.push_back("e" + std::to_string(k));
    StructureConstants out(n + m, a.kind(), labels,
                           a.name().empty() || b.name().empty() ? std::string()
                                                                : a.name() + "+" + b.name());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.at(i, j, k) = a.at(i, j, k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) out.at(n + i, n + j, n + k) = b.at(i, j, k);
    return out;
}

StructureConstants operator_space_algebra(const OperatorSpace& os, OperatorProduct product) {
    int n = os.dim_ambient;
    int d = os.dim();
    if (d < 1) throw LieInvError("BadInput", "empty operator space");
    ScalarMatrix flat(d);
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) flat[k].push_back(os.basis[k][r][c]);
    std::vector<std::string> labels;
    for (int k = 1; k <= d; ++k) labels.push_back("D" + std::to_string(k));
    StructureConstants sc(d, product == OperatorProduct::commutator ? AlgKind::lie : AlgKind::jordan,
                          labels);
    Scalar half = Scalar::of(1, 2);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ScalarMatrix ab = matrix_product(os.basis[i], os.basis[j]);
            ScalarMatrix ba = matrix_product(os.basis[j], os.basis[i]);
            std::vector<Scalar> p;
            p.reserve(static_cast<size_t>(n) * n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    Scalar v = product == OperatorProduct::commutator
                                   ? ab[r][c] - ba[r][c]
                                   : (ab[r][c] + ba[r][c]) * half;
                    p.push_back(v);
                }
            auto coords = coords_in_span(flat, p);
            if (!coords) {
                throw LieInvError("NotClosed", "operator space not closed under product at pair (" +
                                                   std::to_string(i + 1) + "," +
                                                   std::to_string(j + 1) + ")");
            }
            for (int k = 0; k < d; ++k) sc.at(i, j, k) = (*coords)[k];
        }
    ValidationReport rep = validate(sc);
    if (!rep.ok())
        throw LieInvError("LawViolation", "operator algebra violates its product laws");
    return sc;
}

} // namespace lieinv
