#include "lieinv/multipoly.hpp"

#include <stdexcept>

namespace lieinv {

MultiPoly MultiPoly::constant(size_t nsyms, const Scalar& c) {
    MultiPoly p(nsyms);
    if (!c.is_zero()) p.terms_[Monomial(nsyms, 0)] = c;
    return p;
}

MultiPoly MultiPoly::symbol(size_t nsyms, size_t k) {
    if (k >= nsyms) throw std::out_of_range("MultiPoly::symbol");
    MultiPoly p(nsyms);
    Monomial m(nsyms, 0);
    m[k] = 1;
    p.terms_[m] = Scalar(1);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nsyms_);
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly p = *this;
    for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly p(nsyms_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nsyms_);
            for (size_t k = 0; k < nsyms_; ++k) m[k] = ma[k] + mb[k];
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    MultiPoly p(nsyms_);
    if (c.is_zero()) return p;
    for (const auto& [m, x] : terms_) p.terms_[m] = x * c;
    return p;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    MultiPoly rem = num, quo(num.nsyms_);
    const auto& dlead = *den.terms_.rbegin(); // largest monomial in lex order
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Monomial q(num.nsyms_);
        for (size_t k = 0; k < num.nsyms_; ++k) {
            if (rlead.first[k] < dlead.first[k])
                throw std::domain_error("MultiPoly: division not exact");
            q[k] = rlead.first[k] - dlead.first[k];
        }
        Scalar qc = rlead.second / dlead.second;
        quo.add_term(q, qc);
        MultiPoly t(num.nsyms_);
        t.terms_[q] = qc;
        rem -= t * den;
    }
    return quo;
}

std::optional<Scalar> MultiPoly::proportional_to(const MultiPoly& other) const {
    if (other.is_zero()) return std::nullopt;
    if (is_zero()) return Scalar(0);
    const auto& a = *terms_.rbegin();
    const auto& b = *other.terms_.rbegin();
    if (a.first != b.first) return std::nullopt;
    Scalar c = a.second / b.second;
    if (*this == other * c) return c;
    return std::nullopt;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nsyms_) throw std::invalid_argument("MultiPoly::eval arity");
    Scalar acc;
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (size_t k = 0; k < nsyms_; ++k)
            for (unsigned e = 0; e < m[k]; ++e) t *= point[k];
        acc += t;
    }
    return acc;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned t = 0;
        for (unsigned e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string term = it->second.to_string();
        for (size_t k = 0; k < nsyms_; ++k) {
            if (it->first[k] == 0) continue;
            term += "*" + names[k];
            if (it->first[k] > 1) term += "^" + std::to_string(it->first[k]);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

} // namespace lieinv
