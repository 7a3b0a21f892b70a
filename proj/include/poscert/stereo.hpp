#pragma once

#include <variant>
#include <vector>

#include "poscert/mvpoly.hpp"
#include "poscert/rng.hpp"

namespace poscert {

// S(f) = f^h(2 X1, ..., 2 Xn, -1 + sum Xi^2), expanded and collected.
struct SteoResult {
    MvPoly transformed;
    long source_degree;
    Int source_height;
};

SteoResult stereo_transform(const MvPoly& f);

// A rational point with a strictly negative value of the original f.
struct Witness {
    std::vector<Rat> point;
    Rat value;
};

// Maps x with S(f)(x) < 0 back to a point where f itself is negative.
// Rejects x when S(f)(x) >= 0 (the offending value is in the message).
Witness witness_transport(const MvPoly& f, const std::vector<Rat>& x);

// Height of a rational point, max over coordinates.
Int point_height(const std::vector<Rat>& x);

// Scale factor used on the unit sphere branch of the witness map:
// 2^(n+2d-1) H(x)^((n+1)d-1) H(f).
Int witness_scale(const MvPoly& f, const std::vector<Rat>& x);

// Translation preprocessing for f(0) <= 0: samples c from {1,...,k*d}^n
// until f(c) != 0. f(c) > 0 yields the shifted polynomial g = f(X+c)
// (witnesses for g map back by adding c); f(c) < 0 is already a witness.
struct ShiftResult {
    MvPoly shifted;
    std::vector<Int> offset;
};

std::variant<ShiftResult, Witness> shift_to_positive_constant(const MvPoly& f,
                                                              uint64_t seed, long k);

}  // namespace poscert
