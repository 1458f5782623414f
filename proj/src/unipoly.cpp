#include "lieinv/unipoly.hpp"

#include <functional>

namespace lieinv {

UniPoly UniPoly::operator-() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1, Scalar(0));
    for (size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (size_t b = 0; b < o.coeffs_.size(); ++b)
            c[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Scalar& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * s);
    return UniPoly(std::move(c));
}

bool UniPoly::operator<(const UniPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] != o.coeffs_[k]) return coeffs_[k] < o.coeffs_[k];
    }
    return false;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Scalar> rem = a.coeffs_;
    std::vector<Scalar> quo(a.degree() - b.degree() + 1, Scalar(0));
    Scalar lead_inv = b.leading().inv();
    for (int k = a.degree(); k >= b.degree(); --k) {
        Scalar q = rem[k] * lead_inv;
        if (q.is_zero()) continue;
        quo[k - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[k - b.degree() + j] -= q * b.coeffs_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Scalar> c(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        c[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
    return UniPoly(std::move(c));
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

namespace {

/// Scale by a positive rational so coefficients become Gaussian integers
/// with unit content; controls coefficient growth in remainder sequences.
UniPoly primitive_scaled(const UniPoly& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.coeffs())
        for (const Rat* part : {&c.re(), &c.im()}) {
            if (*part == 0) continue;
            mpz_class n = abs(part->get_num());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), part->get_den().get_mpz_t());
        }
    if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return p;
    Rat f(den_lcm, num_gcd);
    f.canonicalize();
    return p * Scalar(f);
}

} // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = primitive_scaled(a);
    b = primitive_scaled(b);
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = primitive_scaled(r);
    }
    return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.is_constant()) return UniPoly(Scalar(1));
    UniPoly g = poly_gcd(p, p.derivative());
    return (p / g).monic();
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    auto coeff_str = [&](const Scalar& c, bool with_var) -> std::string {
        // returns "" for 1, "-" for -1 when a variable follows
        if (with_var) {
            if (c.is_one()) return "";
            if (c == Scalar(-1)) return "-";
        }
        std::string s = c.to_string();
        bool mixed = !c.is_rational() && c.re() != 0;
        if (mixed) s = "(" + s + ")";
        return with_var ? s + "*" : s;
    };
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = coeff_str(c, false);
        } else {
            term = coeff_str(c, true) + var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (out.empty()) {
            out = term;
        } else {
            if (!term.empty() && (term[0] == '-'))
                out += term;
            else
                out += "+" + term;
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    const std::string& s;
    const std::string& var;
    size_t pos = 0;
    PolyLexer(const std::string& str, const std::string& v) : s(str), var(v) {}
    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    bool eat(char c) { if (peek() == c) { ++pos; return true; } return false; }
    bool eat_var() {
        skip_ws();
        if (s.compare(pos, var.size(), var) == 0) { pos += var.size(); return true; }
        if (s.compare(pos, 5, "alpha") == 0) { pos += 5; return true; }
        return false;
    }
    [[noreturn]] void fail() { throw std::invalid_argument("bad polynomial: " + s); }
};

UniPoly parse_sum(PolyLexer& lx);

UniPoly parse_atom(PolyLexer& lx) {
    if (lx.eat('(')) {
        UniPoly p = parse_sum(lx);
        if (!lx.eat(')')) lx.fail();
        return p;
    }
    if (lx.eat_var()) return UniPoly::variable();
    char c = lx.peek();
    if (c == 'i') { ++lx.pos; return UniPoly(Scalar::i()); }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t start = lx.pos;
        while (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])) && lx.pos < lx.s.size()) ++lx.pos;
        if (lx.pos < lx.s.size() && lx.s[lx.pos] == '/') {
            size_t save = lx.pos;
            ++lx.pos;
            size_t dstart = lx.pos;
            while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
            if (lx.pos == dstart) lx.pos = save;
        }
        return UniPoly(Scalar(rat_from_string(lx.s.substr(start, lx.pos - start))));
    }
    lx.fail();
}

UniPoly parse_power(PolyLexer& lx) {
    UniPoly base = parse_atom(lx);
    if (lx.eat('^')) {
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
        if (lx.pos == start) lx.fail();
        long e = std::stol(lx.s.substr(start, lx.pos - start));
        UniPoly acc(Scalar(1));
        for (long k = 0; k < e; ++k) acc *= base;
        return acc;
    }
    return base;
}

UniPoly parse_product(PolyLexer& lx) {
    UniPoly acc = parse_power(lx);
    for (;;) {
        if (lx.eat('*')) {
            acc *= parse_power(lx);
        } else if (lx.eat('/')) {
            UniPoly d = parse_power(lx);
            if (!d.is_constant() || d.is_zero()) lx.fail();
            acc *= UniPoly(d.coeffs()[0].inv());
        } else {
            break;
        }
    }
    return acc;
}

UniPoly parse_sum(PolyLexer& lx) {
    UniPoly acc;
    bool first = true;
    for (;;) {
        int sign = 1;
        bool saw = false;
        while (lx.peek() == '+' || lx.peek() == '-') {
            saw = true;
            if (lx.s[lx.pos] == '-') sign = -sign;
            ++lx.pos;
        }
        if (first || saw) {
            UniPoly t = parse_product(lx);
            acc = sign < 0 ? acc - t : acc + t;
            first = false;
        } else {
            break;
        }
        char c = lx.peek();
        if (c != '+' && c != '-') break;
    }
    return acc;
}

} // namespace

UniPoly UniPoly::parse(const std::string& text, const std::string& var) {
    PolyLexer lx(text, var);
    UniPoly p = parse_sum(lx);
    lx.skip_ws();
    if (lx.pos != text.size()) lx.fail();
    return p;
}

size_t UniPoly::hash() const {
    size_t h = 1469598103934665603ull;
    for (const auto& c : coeffs_) {
        h ^= c.hash();
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace lieinv
