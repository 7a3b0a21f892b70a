#pragma once

#include <map>
#include <string>
#include <vector>

#include "poscert/monomial.hpp"
#include "poscert/rational.hpp"

namespace poscert {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms are kept in descending graded-lex order, so begin() is the leading
// term and iteration order is the canonical serialization order.
// No zero coefficients are ever stored.
class MvPoly {
public:
    using TermMap = std::map<Mono, Rat, GrlexGreater>;

    MvPoly() : nvars_(0) {}
    explicit MvPoly(std::size_t nvars) : nvars_(nvars) {}

    static MvPoly zero(std::size_t nvars) { return MvPoly(nvars); }
    static MvPoly constant(std::size_t nvars, const Rat& c);
    static MvPoly variable(std::size_t i, std::size_t nvars);
    static MvPoly monomial(const Mono& m, const Rat& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Degree of the zero polynomial is reported as -1.
    long degree() const;

    const Mono& leading_monomial() const;
    const Rat& leading_coeff() const;

    Rat coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const Rat& c);
    void add_term(const Mono& m, const Rat& c);

    MvPoly operator-() const;
    MvPoly operator+(const MvPoly& g) const;
    MvPoly operator-(const MvPoly& g) const;
    MvPoly operator*(const MvPoly& g) const;
    MvPoly& operator+=(const MvPoly& g);
    MvPoly& operator-=(const MvPoly& g);
    bool operator==(const MvPoly& g) const { return nvars_ == g.nvars_ && terms_ == g.terms_; }
    bool operator!=(const MvPoly& g) const { return !(*this == g); }

    MvPoly scaled(const Rat& c) const;
    MvPoly mul_term(const Mono& m, const Rat& c) const;
    MvPoly pow(unsigned e) const;

    Rat eval(const std::vector<Rat>& x) const;
    Rat constant_term() const { return coeff(Mono(nvars_)); }

    MvPoly derivative(std::size_t i) const;
    std::vector<MvPoly> gradient() const;

    // Homogenization with X0 prepended as variable index 0; requires
    // total_degree >= deg.
    MvPoly homogenize(uint32_t total_degree) const;
    // Substitutes 1 for variable index 0 and drops it.
    MvPoly dehomogenize_at_one() const;

    // Highest-degree homogeneous part; rejects the zero polynomial.
    MvPoly top_part() const;

    // Translation X_i -> X_i + c_i.
    MvPoly shifted(const std::vector<Int>& c) const;

    // Prepends k fresh variables (indices 0..k-1) that the polynomial does
    // not use; existing variables shift up by k.
    MvPoly prepend_vars(std::size_t k) const;

    Int height() const;       // H(f), max height over coefficients; H(0) = 0
    long height_bitsize() const;  // h(f) = floor(lg H(f)) + 1, h(0) = 0
    Rat one_norm() const;     // sum of |coefficients|

    bool has_integer_coeffs() const;
    // Least common multiple of coefficient denominators.
    Int denominator_lcm() const;
    // Content of an integer-coefficient polynomial (gcd of coefficients).
    Int integer_content() const;
    // Scales so coefficients are integers with content 1 and positive
    // leading coefficient.
    MvPoly primitive_part() const;
    MvPoly monic() const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// ---- text grammar (see README: terms joined by +/-, optional rational
// coefficient, '*'-separated xk^e powers) ----

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

MvPoly parse_poly(const std::string& text, std::size_t nvars);
// Largest variable index xk appearing in the text (0 when none).
std::size_t scan_max_var_index(const std::string& text);
std::string to_string(const MvPoly& f);

}  // namespace poscert
