#pragma once

#include "poscert/mvpoly.hpp"
#include "poscert/rng.hpp"

namespace poscert::testutil {

// random sparse polynomial with small integer coefficients
inline MvPoly random_poly(SplitMix64& rng, std::size_t nvars, uint32_t maxdeg, long terms,
                          long coef_bound = 9) {
    MvPoly f(nvars);
    for (long t = 0; t < terms; ++t) {
        Mono m(nvars);
        uint32_t budget = maxdeg;
        for (std::size_t i = 0; i < nvars; ++i) {
            uint32_t e = static_cast<uint32_t>(rng.below(budget + 1));
            m.e[i] = e;
            budget -= e;
        }
        long c = rng.range(-coef_bound, coef_bound);
        if (c == 0) c = 1;
        f.add_term(m, Rat(c));
    }
    if (f.is_zero()) f.add_term(Mono(nvars), Rat(1));
    return f;
}

inline std::vector<Rat> random_point(SplitMix64& rng, std::size_t nvars, long num_bound = 20,
                                     long den_bound = 9) {
    std::vector<Rat> x(nvars);
    for (auto& xi : x) xi = rng.rational(num_bound, den_bound);
    return x;
}

inline MvPoly motzkin() {
    return parse_poly("x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1", 2);
}

}  // namespace poscert::testutil
