#ifndef LIEINV_SCALAR_HPP
#define LIEINV_SCALAR_HPP

#include <gmpxx.h>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lieinv {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

/// True if r is a square in Q; root returned through out.
bool rat_sqrt(const Rat& r, Rat& out);

/// Element of Q(i), the field of Gaussian rationals. Both parts are kept
/// canonical by GMP (lowest terms, positive denominator).
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(const Rat& re) : re_(re), im_(0) {}
    Scalar(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }
    static Scalar of(long num, long den) { Rat r(num, den); r.canonicalize(); return Scalar(r); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar inv() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        Rat n = re_ * re_ + im_ * im_;
        return Scalar(re_ / n, -im_ / n);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar conj() const { return Scalar(re_, -im_); }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Arbitrary total order, used only for canonical sorting of output.
    bool operator<(const Scalar& o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return cmp(im_, o.im_) < 0;
    }

    /// Exact square root in Q(i) if one exists.
    std::optional<Scalar> sqrt_exact() const;

    /// Text form "a/b" or "a/b+c/d*i" (no spaces); round-trips bit-exactly.
    std::string to_string() const;
    static Scalar parse(const std::string& text);

    double re_double() const { return re_.get_d(); }
    double im_double() const { return im_.get_d(); }

    size_t hash() const;

private:
    Rat re_, im_;
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

} // namespace lieinv

#endif
