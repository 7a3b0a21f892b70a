#pragma once

#include <variant>

#include "poscert/bounds.hpp"
#include "poscert/mvpoly.hpp"
#include "poscert/rng.hpp"

namespace poscert {

enum class PertRegime { POS, NEG };

struct Lambda {
    Rat value;
    PertRegime regime;
    long gamma = 0;  // NEG dyadic window exponent
};

// f + lambda * sum_i (1 + Xi^2 + Xi^(d+2)), d = deg f. Degree d+2.
MvPoly pos_perturb(const MvPoly& f, const Lambda& lambda);

// f - lambda * sum_i (1 + Xi^2 + Xi^d), d = deg f.
MvPoly neg_perturb(const MvPoly& f, const Lambda& lambda);

// The rational in (0, eps'(profile)] with the smallest denominator, largest
// such numerator: lambda = p/q with q = ceil(1/eps'), p = floor(q*eps').
Lambda pick_lambda_pos(const SizeProfile& profile);

struct LambdaExhausted {};

// Dyadic lambda = (2^(gamma+m) + 2j+1) / 2^(2 gamma+m+1) in
// (2^(-2 gamma), 2^(-gamma)], j seeded-uniform over a candidate set of size
// k (2d-1)^(n-1) (2d-1+n), m = ceil(lg size). Distinct attempts yield
// distinct lambda; returns LambdaExhausted once attempts cover the set.
std::variant<Lambda, LambdaExhausted> pick_lambda_neg(const SizeProfile& profile, long gamma,
                                                      const Int& attempt, long k, uint64_t seed);

// Candidate-set size k (2d-1)^(n-1) (2d-1+n).
Int neg_candidate_count(const SizeProfile& profile, long k);

}  // namespace poscert
