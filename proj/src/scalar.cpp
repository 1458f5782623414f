#include "lieinv/scalar.hpp"

#include <cctype>
#include <functional>

namespace lieinv {

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

bool rat_sqrt(const Rat& r, Rat& out) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) { out = 0; return true; }
    mpz_class num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rat(sn, sd);
    out.canonicalize();
    return true;
}

std::optional<Scalar> Scalar::sqrt_exact() const {
    // (p+qi)^2 = re+im*i  =>  p^2-q^2 = re, 2pq = im.
    // p^2 is a root of t^2 - re*t - im^2/4, so p^2 = (re + sqrt(re^2+im^2))/2.
    Rat n = re_ * re_ + im_ * im_;
    Rat s;
    if (!rat_sqrt(n, s)) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rat p2 = (re_ + (sign ? -s : s)) / 2;
        Rat p;
        if (sgn(p2) > 0 && rat_sqrt(p2, p)) {
            if (im_ == 0) {
                if (p * p == re_) return Scalar(p);
                continue;
            }
            Rat q = im_ / (2 * p);
            Scalar cand(p, q);
            if (cand * cand == *this) return cand;
        } else if (sgn(p2) == 0 && im_ == 0 && sgn(re_) <= 0) {
            // re <= 0 pure real: sqrt is q*i with q^2 = -re
            Rat q;
            if (rat_sqrt(-re_, q)) return Scalar(Rat(0), q);
        }
    }
    // pure imaginary or negative-real cases where p2 chosen above was 0
    if (im_ == 0 && sgn(re_) < 0) {
        Rat q;
        if (rat_sqrt(-re_, q)) return Scalar(Rat(0), q);
    }
    return std::nullopt;
}

std::string Scalar::to_string() const {
    auto imag_part = [](const Rat& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return rat_to_string(v) + "*i";
    };
    if (im_ == 0) return rat_to_string(re_);
    if (re_ == 0) return imag_part(im_);
    std::string s = rat_to_string(re_);
    if (sgn(im_) > 0) {
        s += "+";
        s += imag_part(im_);
    } else {
        s += imag_part(im_); // starts with '-'
    }
    return s;
}

namespace {

// Minimal parser for scalar literals: sum of terms, each term a product of
// rationals and "i", e.g. "-1/2+3/4*i", "i", "2*i".
struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;
    explicit ScalarLexer(const std::string& str) : s(str) {}
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char get() { return pos < s.size() ? s[pos++] : '\0'; }
    bool done() const { return pos >= s.size(); }
};

Rat parse_rat_literal(ScalarLexer& lx) {
    size_t start = lx.pos;
    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.get();
    if (lx.peek() == '/') {
        lx.get();
        while (std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.get();
    }
    if (lx.pos == start) throw std::invalid_argument("bad scalar: " + lx.s);
    return rat_from_string(lx.s.substr(start, lx.pos - start));
}

Scalar parse_term(ScalarLexer& lx) {
    bool have_coeff = false;
    Rat coeff(1);
    bool imag = false;
    for (;;) {
        if (lx.peek() == 'i') {
            lx.get();
            if (imag) throw std::invalid_argument("bad scalar: " + lx.s);
            imag = true;
        } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            Rat r = parse_rat_literal(lx);
            coeff = have_coeff ? Rat(coeff * r) : r;
            have_coeff = true;
        } else {
            throw std::invalid_argument("bad scalar: " + lx.s);
        }
        if (lx.peek() == '*') { lx.get(); continue; }
        break;
    }
    return imag ? Scalar(Rat(0), coeff) : Scalar(coeff);
}

} // namespace

Scalar Scalar::parse(const std::string& text) {
    ScalarLexer lx(text);
    Scalar acc;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.get() == '-') sign = -sign;
        }
        if (lx.done()) throw std::invalid_argument("bad scalar: " + text);
        if (!first && sign == 1 && lx.s[lx.pos - 1] != '+' && lx.s[lx.pos - 1] != '-')
            throw std::invalid_argument("bad scalar: " + text);
        Scalar t = parse_term(lx);
        acc += sign < 0 ? -t : t;
        first = false;
    }
    if (first) throw std::invalid_argument("empty scalar");
    return acc;
}

size_t Scalar::hash() const {
    std::hash<std::string> h;
    return h(to_string());
}

} // namespace lieinv
