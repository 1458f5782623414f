#ifndef LIEINV_RATFUNC_HPP
#define LIEINV_RATFUNC_HPP

#include "lieinv/unipoly.hpp"

namespace lieinv {

/// Rational function num/den over Q(i) in one indeterminate, kept reduced
/// with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Scalar(1)) {}
    RatFunc(const Scalar& c) : num_(c), den_(Scalar(1)) {}
    RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit RatFunc(const UniPoly& p) : num_(p), den_(Scalar(1)) {}

    static RatFunc variable() { return RatFunc(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(den_, num_);
    }
    RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Order of vanishing at 0 (index of the lowest nonzero coefficient).
    static int order_at_zero(const UniPoly& p) {
        for (int k = 0; k <= p.degree(); ++k)
            if (!p.coeff(k).is_zero()) return k;
        return -1;
    }

    /// Limit for the parameter tending to 0+, by order comparison; empty when
    /// the entry diverges.
    std::optional<Scalar> limit_at_zero() const {
        if (is_zero()) return Scalar(0);
        int vn = order_at_zero(num_), vd = order_at_zero(den_);
        if (vn > vd) return Scalar(0);
        if (vn < vd) return std::nullopt;
        return num_.coeff(vn) / den_.coeff(vd);
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) { den_ = UniPoly(Scalar(1)); return; }
        UniPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Scalar lead = den_.leading();
        if (!lead.is_one()) {
            Scalar inv = lead.inv();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    UniPoly num_, den_;
};

} // namespace lieinv

#endif
