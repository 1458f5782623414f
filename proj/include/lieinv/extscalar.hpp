#ifndef LIEINV_EXTSCALAR_HPP
#define LIEINV_EXTSCALAR_HPP

#include "lieinv/unipoly.hpp"

#include <memory>

namespace lieinv {

/// Control outcome of dynamic evaluation: the working modulus factored into
/// two coprime parts and the computation must be redone on each branch.
struct SplitError {
    UniPoly m1, m2;
};

/// Element of Q(i)[x]/(m) for a monic squarefree modulus m. Inversion either
/// succeeds or discovers a factorization of m and throws SplitError.
class ExtScalar {
public:
    ExtScalar() = default;
    ExtScalar(std::shared_ptr<const UniPoly> modulus, UniPoly residue)
        : mod_(std::move(modulus)), r_(std::move(residue)) {
        reduce();
    }

    static std::shared_ptr<const UniPoly> make_modulus(const UniPoly& m);

    const UniPoly& residue() const { return r_; }
    const std::shared_ptr<const UniPoly>& modulus() const { return mod_; }

    bool is_zero() const { return r_.is_zero(); }

    ExtScalar operator-() const { return ExtScalar(mod_, -r_); }
    ExtScalar operator+(const ExtScalar& o) const { return ExtScalar(pick(o), r_ + o.r_); }
    ExtScalar operator-(const ExtScalar& o) const { return ExtScalar(pick(o), r_ - o.r_); }
    ExtScalar operator*(const ExtScalar& o) const { return ExtScalar(pick(o), r_ * o.r_); }
    ExtScalar& operator+=(const ExtScalar& o) { *this = *this + o; return *this; }
    ExtScalar& operator-=(const ExtScalar& o) { *this = *this - o; return *this; }
    ExtScalar& operator*=(const ExtScalar& o) { *this = *this * o; return *this; }

    /// Inverse mod modulus; throws SplitError when the residue is a zero
    /// divisor and std::domain_error when it is zero.
    ExtScalar inv() const;
    ExtScalar operator/(const ExtScalar& o) const { return *this * o.inv(); }

    bool operator==(const ExtScalar& o) const { return r_ == o.r_; }
    bool operator!=(const ExtScalar& o) const { return !(*this == o); }

private:
    std::shared_ptr<const UniPoly> pick(const ExtScalar& o) const { return mod_ ? mod_ : o.mod_; }
    void reduce() {
        if (mod_ && r_.degree() >= mod_->degree()) r_ = r_ % *mod_;
    }
    std::shared_ptr<const UniPoly> mod_;
    UniPoly r_;
};

} // namespace lieinv

#endif
