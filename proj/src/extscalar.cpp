#include "lieinv/extscalar.hpp"

namespace lieinv {

std::shared_ptr<const UniPoly> ExtScalar::make_modulus(const UniPoly& m) {
    if (m.degree() < 1) throw std::domain_error("ExtScalar: modulus must be nonconstant");
    UniPoly mm = m.monic();
    if (poly_gcd(mm, mm.derivative()).degree() != 0)
        throw std::domain_error("ExtScalar: modulus must be squarefree");
    return std::make_shared<const UniPoly>(std::move(mm));
}

ExtScalar ExtScalar::inv() const {
    if (!mod_) throw std::domain_error("ExtScalar: inverse without modulus");
    if (r_.is_zero()) throw std::domain_error("ExtScalar: zero divisor is zero");
    // extended Euclid on (r, m), tracking the Bezout coefficient of r
    UniPoly a = r_, b = *mod_;
    UniPoly sa(Scalar(1)), sb; // s-coefficients: a = sa*r mod m, b = sb*r mod m
    while (!b.is_zero()) {
        auto [q, rem] = UniPoly::divmod(a, b);
        UniPoly snew = sa - q * sb;
        a = std::move(b);
        sa = std::move(sb);
        b = std::move(rem);
        sb = std::move(snew);
    }
    if (a.degree() == 0) {
        UniPoly inv = sa * a.leading().inv();
        return ExtScalar(mod_, inv % *mod_);
    }
    // proper common factor: split the modulus
    UniPoly g = a.monic();
    throw SplitError{g, (*mod_ / g).monic()};
}

} // namespace lieinv
