#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace poscert {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Height of a rational: max(|numerator|, denominator), with H(0) = 0.
inline Int height(const Rat& r) {
    if (r == 0) return Int(0);
    Int n = abs(r.get_num());
    Int d = r.get_den();
    return n >= d ? n : d;
}

// Bitsize h(r) = floor(lg H(r)) + 1, with h(0) = 0.
inline long bitsize(const Int& v) {
    if (v == 0) return 0;
    Int a = abs(v);
    return static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

inline long bitsize(const Rat& r) { return bitsize(height(r)); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpq_set_ui(out.get_mpq_t(), 1, 1);
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return out;
}

inline Int pow2(unsigned long e) { return int_pow(Int(2), e); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int rat_ceil(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

// Canonical "p" / "p/q" form, fully reduced.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Parses "p" or "p/q" with optional sign; rejects anything else.
Rat rat_from_string(const std::string& s);

// ceil(lg(m)) for m >= 1.
inline long ceil_lg(const Int& m) {
    if (m <= 0) throw std::invalid_argument("ceil_lg: argument must be positive");
    if (m == 1) return 0;
    long bits = bitsize(m);
    Int p = pow2(static_cast<unsigned long>(bits - 1));
    return (p == m) ? bits - 1 : bits;
}

}  // namespace poscert
