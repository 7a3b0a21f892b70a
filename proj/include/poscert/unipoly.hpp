#pragma once

#include <string>
#include <utility>
#include <vector>

#include "poscert/rational.hpp"

namespace poscert {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The leading coefficient is nonzero unless the polynomial is zero.
class UvPoly {
public:
    UvPoly() = default;
    explicit UvPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UvPoly zero() { return UvPoly(); }
    static UvPoly constant(const Rat& a);
    static UvPoly variable();                     // T
    static UvPoly monomial(std::size_t k, const Rat& a);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const Rat& leading_coeff() const;

    UvPoly operator-() const;
    UvPoly operator+(const UvPoly& g) const;
    UvPoly operator-(const UvPoly& g) const;
    UvPoly operator*(const UvPoly& g) const;
    bool operator==(const UvPoly& g) const { return c_ == g.c_; }
    bool operator!=(const UvPoly& g) const { return c_ != g.c_; }

    UvPoly scaled(const Rat& a) const;
    UvPoly shifted_pow(std::size_t k) const;      // multiply by T^k
    UvPoly pow(unsigned e) const;

    Rat eval(const Rat& x) const;
    UvPoly derivative() const;

    // Euclidean division: *this = q*g + r with deg r < deg g.
    std::pair<UvPoly, UvPoly> divrem(const UvPoly& g) const;

    UvPoly monic() const;
    // Integer-coefficient, content-free, positive leading coefficient.
    UvPoly primitive_part() const;

    // Monic gcd via the Euclidean algorithm with primitive normalization.
    static UvPoly gcd(const UvPoly& a, const UvPoly& b);

    // Squarefree part p / gcd(p, p'), monic.
    UvPoly squarefree_part() const;

    // Yun squarefree decomposition: p = lc * prod_i f_i^i with the f_i
    // monic, squarefree, pairwise coprime. Returns (lc, [f_1, f_2, ...]).
    std::pair<Rat, std::vector<UvPoly>> squarefree_decomposition() const;

    Int height() const;
    Rat one_norm() const;

    std::string str(const std::string& var = "T") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// ---- real root machinery (Sturm sequences) ----

// Sturm chain of p (uses the squarefree part internally, so root counts are
// counts of distinct real roots of p).
std::vector<UvPoly> sturm_chain(const UvPoly& p);

int sign_at(const UvPoly& p, const Rat& x);
int sign_at_pos_inf(const UvPoly& p);
int sign_at_neg_inf(const UvPoly& p);

// Number of distinct real roots in (a, b].
long count_real_roots(const std::vector<UvPoly>& chain, const Rat& a, const Rat& b);
long count_real_roots(const UvPoly& p);  // over all of R

// Cauchy bound: all real roots lie in [-B, B].
Rat root_bound(const UvPoly& p);

// Disjoint isolating intervals (a, b] for the distinct real roots of p,
// sorted increasingly. Exact roots may land on a right endpoint.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UvPoly& p);

}  // namespace poscert
