#ifndef LIEINV_UNIPOLY_HPP
#define LIEINV_UNIPOLY_HPP

#include "lieinv/scalar.hpp"

#include <utility>
#include <vector>

namespace lieinv {

/// Univariate polynomial over Q(i), coefficients stored lowest degree first.
/// Zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Scalar& c) { if (!c.is_zero()) coeffs_.push_back(c); }
    UniPoly(long c) : UniPoly(Scalar(c)) {}
    explicit UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    /// x - root
    static UniPoly linear_from_root(const Scalar& root) {
        return UniPoly(std::vector<Scalar>{-root, Scalar(1)});
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& operator[](size_t k) const { return coeffs_[k]; }
    Scalar coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }
    const Scalar& leading() const { return coeffs_.back(); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Scalar& c) const;
    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    /// Total order for canonical sorting: degree first, then coefficients.
    bool operator<(const UniPoly& o) const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    UniPoly operator/(const UniPoly& o) const { return divmod(*this, o).first; }
    UniPoly operator%(const UniPoly& o) const { return divmod(*this, o).second; }

    UniPoly monic() const;
    UniPoly derivative() const;
    Scalar eval(const Scalar& x) const;

    std::string to_string(const std::string& var = "\xce\xb1") const;
    static UniPoly parse(const std::string& text, const std::string& var = "\xce\xb1");

    size_t hash() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Scalar> coeffs_;
};

/// Monic gcd; gcd(0,0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Monic product of the distinct irreducible factors of p (p != 0).
UniPoly squarefree_part(const UniPoly& p);

} // namespace lieinv

#endif
