#pragma once

#include "poscert/unipoly.hpp"

namespace poscert {

// Exact decision: r(t) >= 0 for all real t. Even degree, positive leading
// coefficient (or nonnegative constant), and no real root of odd
// multiplicity, via squarefree decomposition and Sturm counting.
bool is_nonneg_univariate(const UvPoly& r);

// Weighted sum of squares with positive rational weights:
// sum_j weights[j] * squares[j]^2 equals the target exactly.
struct WeightedSos {
    std::vector<Rat> weights;
    std::vector<UvPoly> squares;

    UvPoly expand() const;
};

// Constructive decomposition of a nonnegative r != 0. Splits off the
// square part from the squarefree decomposition, then runs perturb-and-
// round on the strictly positive cofactor: binary-search the largest
// dyadic eps with cofactor - eps*Theta_m nonnegative, approximate the
// complex roots of the difference, round the conjugate-paired factors to
// rationals, and absorb the exact remainder into the eps*Theta_m monomial
// squares (odd coefficients by completing squares across adjacent even
// monomials). Precision doubles until every weight is nonnegative.
WeightedSos weighted_sos_decompose(const UvPoly& r);

}  // namespace poscert
