#pragma once

#include <vector>

#include "poscert/rational.hpp"

namespace poscert {

// Input size profile: n variables, degree d, coefficient bitsize bound tau
// (H(f) <= 2^tau).
struct SizeProfile {
    long n = 1;
    long d = 1;
    long tau = 0;
};

// A positive rational stored as sign * cofactor * prod base_i^exp_i with
// integer bases and (possibly negative) integer exponents. The pipeline's
// thresholds have astronomically small values; the factored form keeps
// them cheap to build and compare, and expands on demand.
class BoundValue {
public:
    BoundValue() : sign_(1), cofactor_(1) {}

    void mul_cofactor(const Rat& c);
    void mul_power(const Int& base, const Int& exponent);

    // Exact expansion; cached.
    const Rat& value() const;

    int sign() const { return sign_; }
    const Rat& cofactor() const { return cofactor_; }
    const std::vector<std::pair<Int, Int>>& factors() const { return factors_; }

private:
    int sign_;
    Rat cofactor_;
    std::vector<std::pair<Int, Int>> factors_;
    mutable Rat cache_;
    mutable bool cached_ = false;
};

// Rad(n,d,tau) = 2^(n+2d+tau).
BoundValue radius_bound(const SizeProfile& p);

// Rational lower bound c'(n,d,tau) on the smallest absolute value of the
// nonzero critical values of an integer polynomial of size (d,tau):
// ((n+2)^2 E^(n+3))^(-(n+1)(n+2)d^(n+1)) * (n^n (n+1) d 2^tau)^(-(n+1)d^n)
// with E = 27182818285/10^10, a rational upper bound on e.
BoundValue critical_value_lower_bound(const SizeProfile& p);

// Perturbation threshold eps'(n,d,tau) =
//   (1/(6n)) * c'(n, 2d, tau*) / Rad(n,d,tau)^(2d+2),
// tau* = d*ceil(lg(n+1)) + n + 2d + tau.
BoundValue epsilon_bound(const SizeProfile& p);

}  // namespace poscert
