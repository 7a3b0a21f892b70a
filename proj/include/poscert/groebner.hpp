#pragma once

#include <vector>

#include "poscert/mvpoly.hpp"

namespace poscert {

// Reduced Groebner basis under graded lex with X1 > ... > Xn.
// Generators are monic and interreduced; for the unit ideal the basis is
// the single polynomial 1.
struct GroebnerBasis {
    std::vector<MvPoly> generators;
    std::vector<Mono> leading_monomials;

    bool is_unit_ideal() const {
        return generators.size() == 1 && generators[0].is_constant() &&
               !generators[0].is_zero();
    }
};

// Full normal form of f modulo the generators (every term reduced).
MvPoly normal_form(const MvPoly& f, const std::vector<MvPoly>& basis);

MvPoly s_polynomial(const MvPoly& f, const MvPoly& g);

// Buchberger with the product and chain criteria; result is reduced.
GroebnerBasis groebner_basis(const std::vector<MvPoly>& gens);

// True iff the top-degree homogeneous parts of the generators have only the
// trivial common zero: the reduced basis of the ideal they generate has a
// pure power of every variable among its leading monomials. Equivalent to
// "the affine variety is finite and the system has no solutions at
// infinity" for the original generators.
bool is_zero_dim_no_infinity(const std::vector<MvPoly>& gens);

// Standard monomials under the staircase of gb, graded-lex ascending.
struct QuotientRing {
    std::vector<Mono> basis_monomials;
    std::size_t dimension = 0;
};

struct NotZeroDimensional : std::runtime_error {
    std::size_t unbounded_variable;
    explicit NotZeroDimensional(std::size_t var)
        : std::runtime_error("staircase unbounded in variable x" + std::to_string(var + 1)),
          unbounded_variable(var) {}
};

QuotientRing quotient_basis(const GroebnerBasis& gb);

}  // namespace poscert
