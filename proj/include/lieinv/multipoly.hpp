#ifndef LIEINV_MULTIPOLY_HPP
#define LIEINV_MULTIPOLY_HPP

#include "lieinv/scalar.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lieinv {

/// Sparse multivariate polynomial over Q(i) in a fixed number of symbols.
/// Monomials are exponent vectors; no zero coefficients are stored.
class MultiPoly {
public:
    using Monomial = std::vector<unsigned>;

    explicit MultiPoly(size_t nsyms = 0) : nsyms_(nsyms) {}

    static MultiPoly constant(size_t nsyms, const Scalar& c);
    static MultiPoly symbol(size_t nsyms, size_t k);

    size_t nsyms() const { return nsyms_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }

    bool operator==(const MultiPoly& o) const { return nsyms_ == o.nsyms_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Exact division; throws if the division is not exact.
    static MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

    /// If *this == c * other as polynomials (other != 0), returns c.
    std::optional<Scalar> proportional_to(const MultiPoly& other) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const Monomial& m, const Scalar& c);
    size_t nsyms_;
    std::map<Monomial, Scalar> terms_; // lex order on exponent vectors
};

} // namespace lieinv

#endif
