#pragma once

#include <map>
#include <variant>

#include "poscert/groebner.hpp"
#include "poscert/matrix.hpp"
#include "poscert/rng.hpp"
#include "poscert/unipoly.hpp"

namespace poscert {

// Rational univariate representation of a zero-dimensional variety:
// V = { (R1(t)/R0'(t), ..., Rn(t)/R0'(t)) : R0(t) = 0 }, R0 squarefree,
// T = L(X) = sum_i L[i] X_i on the variety.
struct Rur {
    UvPoly R0;
    std::vector<UvPoly> R;
    std::vector<Rat> L;
    std::size_t quotient_dim = 0;
};

// Normal outcome when the ideal resists a RUR through the separating-form
// family (non-radical, or the family was exhausted). Callers fall through
// to a perturbed polynomial.
struct NotRadicalSignal {
    std::string detail;
};

// Normal-form coordinates in the quotient basis, with memoized monomial
// normal forms.
class QuotientTable {
public:
    QuotientTable(const GroebnerBasis& gb, const QuotientRing& q);

    const QuotientRing& ring() const { return q_; }
    const GroebnerBasis& basis() const { return gb_; }

    // coordinates of NF(f) w.r.t. the quotient basis monomials
    std::vector<Rat> coords(const MvPoly& f) const;
    // coordinates of NF(m * element), element given by coordinates
    std::vector<Rat> mul_monomial(const std::vector<Rat>& elem, const Mono& m) const;
    // multiplication operator of g on the quotient basis
    QMat mult_matrix(const MvPoly& g) const;
    // element as a polynomial (linear combination of basis monomials)
    MvPoly to_poly(const std::vector<Rat>& elem) const;

private:
    const std::vector<Rat>& mono_coords(const Mono& m) const;

    GroebnerBasis gb_;
    QuotientRing q_;
    std::map<Mono, std::size_t, GrlexLess> index_;
    mutable std::map<Mono, std::vector<Rat>, GrlexLess> cache_;
};

QMat multiplication_matrix(const GroebnerBasis& gb, const QuotientRing& q, const MvPoly& g);

// Searches separating forms L = X1 + j X2 + j^2 X3 + ... over seeded small
// integers j; accepts when the characteristic polynomial of M_L is
// squarefree (the ideal is then radical and L separating), solves the
// parametrization systems, and checks the trace identity
// T R0' = sum_i L_i R_i (mod R0).
std::variant<Rur, NotRadicalSignal> compute_rur(const GroebnerBasis& gb, const QuotientRing& q,
                                                uint64_t seed);

// (R0')^(deg g) * g(R1/R0', ..., Rn/R0') as a polynomial in T.
UvPoly rur_substitute(const Rur& rur, const MvPoly& g);

// Remainder of rur_substitute modulo R0; zero iff g vanishes on the
// parametrized points.
UvPoly rur_substitute_mod(const Rur& rur, const MvPoly& g);

}  // namespace poscert
