#include "poscert/bounds.hpp"

#include <stdexcept>

namespace poscert {

void BoundValue::mul_cofactor(const Rat& c) {
    if (c == 0) throw std::invalid_argument("BoundValue cofactor must be nonzero");
    if (c < 0) sign_ = -sign_;
    cofactor_ *= abs(c);
    cached_ = false;
}

void BoundValue::mul_power(const Int& base, const Int& exponent) {
    if (base <= 0) throw std::invalid_argument("BoundValue base must be positive");
    if (exponent == 0 || base == 1) return;
    factors_.emplace_back(base, exponent);
    cached_ = false;
}

const Rat& BoundValue::value() const {
    if (!cached_) {
        Rat v = cofactor_;
        if (sign_ < 0) v = -v;
        for (const auto& [b, e] : factors_) {
            Int ea = abs(e);
            unsigned long ae = mpz_get_ui(ea.get_mpz_t());
            Int p = int_pow(b, ae);
            if (e > 0)
                v *= Rat(p);
            else
                v /= Rat(p);
        }
        cache_ = v;
        cached_ = true;
    }
    return cache_;
}

BoundValue radius_bound(const SizeProfile& p) {
    BoundValue b;
    b.mul_power(Int(2), Int(p.n + 2 * p.d + p.tau));
    return b;
}

BoundValue critical_value_lower_bound(const SizeProfile& p) {
    // E = 27182818285 / 10^10 >= e, so c' lower-bounds the true constant.
    const Int eN("27182818285");
    const Int eD("10000000000");
    Int n(p.n), d(p.d);

    Int dn1 = int_pow(d, static_cast<unsigned long>(p.n + 1));
    Int dn = int_pow(d, static_cast<unsigned long>(p.n));
    Int expo1 = (n + 1) * (n + 2) * dn1;   // (n+1)(n+2) d^(n+1)
    Int expo2 = (n + 1) * dn;              // (n+1) d^n

    BoundValue b;
    // ((n+2)^2 eN^(n+3) / eD^(n+3))^(-expo1)
    b.mul_power((n + 2) * (n + 2), -expo1);
    b.mul_power(eN, -(Int(p.n + 3) * expo1));
    b.mul_power(eD, Int(p.n + 3) * expo1);
    // (n^n (n+1) d 2^tau)^(-expo2)
    Int base2 = int_pow(n, static_cast<unsigned long>(p.n)) * (n + 1) * d;
    b.mul_power(base2, -expo2);
    b.mul_power(Int(2), -(Int(p.tau) * expo2));
    return b;
}

BoundValue epsilon_bound(const SizeProfile& p) {
    long tau_star = p.d * ceil_lg(Int(p.n + 1)) + p.n + 2 * p.d + p.tau;
    SizeProfile steo{p.n, 2 * p.d, tau_star};
    BoundValue b = critical_value_lower_bound(steo);
    b.mul_cofactor(Rat(Int(1), Int(6 * p.n)));
    // divide by Rad(n,d,tau)^(2d+2)
    b.mul_power(Int(2), -Int(p.n + 2 * p.d + p.tau) * Int(2 * p.d + 2));
    return b;
}

}  // namespace poscert
