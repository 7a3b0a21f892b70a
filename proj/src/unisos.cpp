#include "poscert/unisos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace poscert {

bool is_nonneg_univariate(const UvPoly& r) {
    if (r.is_zero()) return true;
    if (r.degree() == 0) return r.coeff(0) >= 0;
    if (r.degree() % 2 != 0) return false;
    if (r.leading_coeff() < 0) return false;
    auto [lc, factors] = r.squarefree_decomposition();
    UvPoly odd = UvPoly::constant(Rat(1));
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (i % 2 == 0) odd = odd * factors[i];  // multiplicity i+1 odd
    if (odd.degree() <= 0) return true;
    return count_real_roots(odd) == 0;
}

UvPoly WeightedSos::expand() const {
    UvPoly acc;
    for (std::size_t j = 0; j < weights.size(); ++j)
        acc = acc + (squares[j] * squares[j]).scaled(weights[j]);
    return acc;
}

namespace {

// ---- arbitrary-precision complex Aberth iteration (GMP floats) ----

struct CF {
    mpf_class re, im;
    CF() {}
    CF(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
};

CF cadd(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF csub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF cmul(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CF cdiv(const CF& a, const CF& b) {
    mpf_class d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class cabs2(const CF& a) { return a.re * a.re + a.im * a.im; }

CF horner(const std::vector<CF>& coef, const CF& z) {
    CF acc = coef.back();
    for (std::size_t i = coef.size() - 1; i-- > 0;) acc = cadd(cmul(acc, z), coef[i]);
    return acc;
}

std::vector<CF> to_float_coeffs(const UvPoly& p, unsigned long prec) {
    std::vector<CF> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        mpf_class v(0, prec);
        mpf_set_q(v.get_mpf_t(), c.get_mpq_t());
        out.push_back(CF{v, mpf_class(0, prec)});
    }
    return out;
}

// All complex roots of p at working precision prec, iterated until the
// corrections drop below 2^-(stop_bits+16); no certification here, the
// exact absorption step downstream decides success.
std::vector<CF> aberth_roots(const UvPoly& p, unsigned long prec, unsigned long stop_bits) {
    long deg = p.degree();
    std::vector<CF> c = to_float_coeffs(p, prec);
    std::vector<CF> dc;
    for (long i = 1; i <= deg; ++i)
        dc.push_back(CF{c[i].re * i, c[i].im * i});

    // initial guesses on circles whose radii come from the upper convex
    // hull of (k, lg|c_k|): badly scaled inputs have roots spread over
    // many orders of magnitude, and a single circle would take thousands
    // of iterations to traverse that range
    std::vector<double> lgmag(deg + 1, -1e18);
    for (long k = 0; k <= deg; ++k) {
        const Rat& ck = p.coeff(static_cast<std::size_t>(k));
        if (ck != 0)
            lgmag[k] = static_cast<double>(bitsize(Int(ck.get_num()))) -
                       static_cast<double>(bitsize(Int(ck.get_den())));
    }
    std::vector<long> hull;  // indices of the upper hull, left to right
    for (long k = 0; k <= deg; ++k) {
        if (lgmag[k] < -1e17) continue;
        while (hull.size() >= 2) {
            long a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            // drop b when it lies below segment a-k
            if ((lgmag[b] - lgmag[a]) * (k - a) <= (lgmag[k] - lgmag[a]) * (b - a))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }

    std::vector<CF> z(deg);
    double two_pi = 6.283185307179586;
    long filled = 0;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        long k1 = hull[s], k2 = hull[s + 1];
        double expo = (lgmag[k1] - lgmag[k2]) / static_cast<double>(k2 - k1);
        mpf_class radius(1, prec);
        long ipart = static_cast<long>(std::floor(expo));
        if (ipart >= 0)
            mpf_mul_2exp(radius.get_mpf_t(), radius.get_mpf_t(),
                         static_cast<unsigned long>(ipart));
        else
            mpf_div_2exp(radius.get_mpf_t(), radius.get_mpf_t(),
                         static_cast<unsigned long>(-ipart));
        radius *= std::pow(2.0, expo - static_cast<double>(ipart));
        for (long t2 = 0; t2 < k2 - k1; ++t2) {
            double ang = two_pi * (static_cast<double>(filled) + 0.354) /
                             static_cast<double>(deg) +
                         0.7;
            mpf_class zre(0, prec), zim(0, prec);
            zre = radius * std::cos(ang);
            zim = radius * std::sin(ang);
            z[filled++] = CF{zre, zim};
        }
    }
    while (filled < deg) {
        mpf_class zre(0, prec), zim(0, prec);
        zre = 0.5 + 0.1 * static_cast<double>(filled);
        zim = 0.7;
        z[filled++] = CF{zre, zim};
    }

    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), stop_bits + 16);
    mpf_class tol2 = tol * tol;

    for (int iter = 0; iter < 300; ++iter) {
        bool moved = false;
        for (long i = 0; i < deg; ++i) {
            CF pv = horner(c, z[i]);
            CF dv = horner(dc, z[i]);
            if (cabs2(dv) == 0) {
                z[i].re += tol;
                moved = true;
                continue;
            }
            CF newton = cdiv(pv, dv);
            CF sum{mpf_class(0, prec), mpf_class(0, prec)};
            for (long k = 0; k < deg; ++k) {
                if (k == i) continue;
                CF diff = csub(z[i], z[k]);
                if (cabs2(diff) == 0) {
                    diff.re += tol;
                }
                sum = cadd(sum, cdiv(CF{mpf_class(1, prec), mpf_class(0, prec)}, diff));
            }
            CF denom = csub(CF{mpf_class(1, prec), mpf_class(0, prec)}, cmul(newton, sum));
            CF w = cabs2(denom) == 0 ? newton : cdiv(newton, denom);
            mpf_class step = cabs2(w);
            z[i] = csub(z[i], w);
            if (step > tol2 * (1 + cabs2(z[i]))) moved = true;
        }
        if (!moved) break;
    }
    return z;
}

Rat round_to_dyadic(const mpf_class& v, unsigned long prec_bits) {
    mpf_class scaled = v;
    mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), prec_bits);
    mpf_class half(scaled >= 0 ? 0.5 : -0.5);
    scaled += half;
    mpz_class num;
    mpz_set_f(num.get_mpz_t(), scaled.get_mpf_t());
    return make_rat(Int(num), pow2(prec_bits));
}

// one perturb-and-round attempt at the given float precision; empty result
// means the absorption produced a negative weight and the caller should
// retry at higher precision
struct RoundedPair {
    UvPoly p, q;  // rational approximations with h ~ lc (p^2 + q^2)
};

RoundedPair pair_and_round(const UvPoly& h, unsigned long prec, unsigned long round_bits) {
    long deg = h.degree();
    std::vector<CF> roots = aberth_roots(h, prec, round_bits);
    // take one root from each conjugate pair: positive imaginary parts
    // first, then pair near-real roots among themselves by value
    std::vector<CF> upper, real_like;
    mpf_class tiny(1, prec);
    mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), prec / 4);
    for (auto& r : roots) {
        mpf_class a = abs(r.im);
        if (a * a <= tiny * (1 + cabs2(r)))
            real_like.push_back(r);
        else if (r.im > 0)
            upper.push_back(r);
    }
    std::sort(real_like.begin(), real_like.end(),
              [](const CF& a, const CF& b) { return a.re < b.re; });
    // near-real roots of a nonnegative polynomial come in even clusters;
    // pair consecutive ones
    for (std::size_t i = 0; i + 1 < real_like.size(); i += 2) {
        CF m{(real_like[i].re + real_like[i + 1].re) / 2, mpf_class(0, prec)};
        upper.push_back(m);
    }
    if (static_cast<long>(2 * upper.size()) != deg) {
        // odd leftover; give up at this precision
        return {};
    }
    // P = prod (T - z_j) over chosen roots, complex coefficients
    std::vector<CF> pc{CF{mpf_class(1, prec), mpf_class(0, prec)}};
    for (const CF& z : upper) {
        std::vector<CF> next(pc.size() + 1, CF{mpf_class(0, prec), mpf_class(0, prec)});
        for (std::size_t i = 0; i < pc.size(); ++i) {
            next[i + 1] = cadd(next[i + 1], pc[i]);
            next[i] = csub(next[i], cmul(pc[i], z));
        }
        pc = next;
    }
    std::vector<Rat> pr(pc.size()), qr(pc.size());
    for (std::size_t i = 0; i < pc.size(); ++i) {
        pr[i] = round_to_dyadic(pc[i].re, round_bits);
        qr[i] = round_to_dyadic(pc[i].im, round_bits);
    }
    pr.back() = 1;  // keep the paired factor monic
    qr.back() = 0;
    return RoundedPair{UvPoly(std::move(pr)), UvPoly(std::move(qr))};
}

// Theta_m = sum_{i=0}^m T^(2i)
UvPoly theta_poly(long m) {
    std::vector<Rat> c(2 * m + 1, Rat(0));
    for (long i = 0; i <= m; ++i) c[2 * i] = 1;
    return UvPoly(std::move(c));
}

// decompose eps*Theta_m + rho into monomial/binomial squares; empty on
// negative residual weight
bool absorb(const Rat& eps, long m, const UvPoly& rho, WeightedSos& out) {
    std::vector<Rat> t(2 * m + 1, Rat(0));
    for (long i = 0; i <= m; ++i) t[2 * i] = eps;
    for (long i = 0; i <= rho.degree(); ++i) t[i] += rho.coeff(i);
    // odd coefficients: c T^(2i+1) = w (T^(i+1) + s T^i)^2 - w T^(2i+2) - w T^(2i)
    // with w = |c|/2, s = sign(c)
    WeightedSos local;
    for (long i = 0; 2 * i + 1 <= 2 * m; ++i) {
        Rat c = t[2 * i + 1];
        if (c == 0) continue;
        Rat w = abs(c) / 2;
        Rat s = c > 0 ? Rat(1) : Rat(-1);
        std::vector<Rat> bin(i + 2, Rat(0));
        bin[i] = s;
        bin[i + 1] = 1;
        local.weights.push_back(w);
        local.squares.push_back(UvPoly(std::move(bin)));
        t[2 * i + 2] -= w;
        t[2 * i] -= w;
        t[2 * i + 1] = 0;
    }
    for (long i = 0; i <= m; ++i) {
        if (t[2 * i] < 0) return false;
        if (t[2 * i] > 0) {
            local.weights.push_back(t[2 * i]);
            local.squares.push_back(UvPoly::monomial(i, Rat(1)));
        }
    }
    for (std::size_t j = 0; j < local.weights.size(); ++j) {
        out.weights.push_back(local.weights[j]);
        out.squares.push_back(local.squares[j]);
    }
    return true;
}

}  // namespace

WeightedSos weighted_sos_decompose(const UvPoly& r) {
    if (r.is_zero()) throw std::invalid_argument("weighted_sos_decompose: zero polynomial");
    if (!is_nonneg_univariate(r))
        throw std::invalid_argument("weighted_sos_decompose: polynomial is not nonnegative");

    if (r.degree() == 0) return WeightedSos{{r.coeff(0)}, {UvPoly::constant(Rat(1))}};

    // split off the square part: r = lc * sigma^2 * rt with rt squarefree-odd
    // factors only, hence strictly positive
    auto [lc, factors] = r.squarefree_decomposition();
    UvPoly sigma = UvPoly::constant(Rat(1));
    UvPoly rt = UvPoly::constant(Rat(1));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        unsigned mult = static_cast<unsigned>(i + 1);
        if (mult / 2 > 0) sigma = sigma * factors[i].pow(mult / 2);
        if (mult % 2 == 1) rt = rt * factors[i];
    }

    WeightedSos out;
    if (rt.degree() == 0) {  // perfect (weighted) square
        out.weights.push_back(lc);
        out.squares.push_back(sigma);
        UvPoly check = out.expand();
        if (check != r) throw std::logic_error("sos decomposition mismatch");
        return out;
    }

    // diagonal short-circuit: even exponents, nonnegative coefficients
    {
        bool diag = true;
        for (long i = 0; i <= r.degree() && diag; ++i) {
            Rat c = r.coeff(i);
            if (c == 0) continue;
            if (i % 2 != 0 || c < 0) diag = false;
        }
        if (diag) {
            WeightedSos d;
            for (long i = 0; i <= r.degree(); i += 2) {
                Rat c = r.coeff(i);
                if (c == 0) continue;
                d.weights.push_back(c);
                d.squares.push_back(UvPoly::monomial(i / 2, Rat(1)));
            }
            return d;
        }
    }

    long m = rt.degree() / 2;
    UvPoly theta = theta_poly(m);

    // largest dyadic eps = 2^-k with rt - eps*Theta_m nonnegative:
    // exponential search on k, then bisection between the last failing and
    // first passing exponent
    auto passes = [&](long kk) {
        Rat e = make_rat(Int(1), pow2(static_cast<unsigned long>(kk)));
        return is_nonneg_univariate(rt - theta.scaled(e));
    };
    long k_pass;
    if (passes(0)) {
        k_pass = 0;
    } else {
        long lo = 0, hi = 1;
        while (!passes(hi)) {
            lo = hi;
            hi *= 2;
            if (hi > (1l << 24))
                throw std::runtime_error("weighted_sos_decompose: epsilon search exhausted");
        }
        while (hi - lo > 1) {
            long mid = lo + (hi - lo) / 2;
            if (passes(mid))
                hi = mid;
            else
                lo = mid;
        }
        k_pass = hi;
    }
    // one extra halving keeps the difference strictly positive, which
    // separates its roots from the real axis for the numeric stage
    Rat eps = make_rat(Int(1), pow2(static_cast<unsigned long>(k_pass + 1)));

    const bool debug = std::getenv("POSCERT_DEBUG_SOS") != nullptr;
    for (int outer = 0; outer < 8; ++outer) {
        UvPoly h = rt - theta.scaled(eps);
        unsigned long need = static_cast<unsigned long>(
            bitsize(eps.get_den()) + bitsize(h.height()) + 64);
        unsigned long prec = std::max<unsigned long>(192, 2 * need);
        const unsigned long prec_cap = std::max<unsigned long>(1u << 16, 8 * prec);
        while (prec <= prec_cap) {
            if (debug)
                std::fprintf(stderr, "[sos] outer=%d prec=%lu eps_den_bits=%ld h_deg=%ld\n",
                             outer, prec, bitsize(eps.get_den()), h.degree());
            WeightedSos attempt;
            if (h.is_zero()) {
                if (absorb(eps, m, UvPoly(), attempt)) {
                    for (std::size_t j = 0; j < attempt.weights.size(); ++j) {
                        out.weights.push_back(attempt.weights[j] * lc);
                        out.squares.push_back(sigma * attempt.squares[j]);
                    }
                    UvPoly check = out.expand();
                    if (check != r) throw std::logic_error("sos decomposition mismatch");
                    return out;
                }
            } else {
                unsigned long round_bits = prec / 2;
                RoundedPair pq = pair_and_round(h, prec, round_bits);
                if (debug)
                    std::fprintf(stderr, "[sos]   pairing %s\n",
                                 pq.p.is_zero() ? "failed" : "ok");
                if (!pq.p.is_zero()) {
                    Rat ch = h.leading_coeff();
                    UvPoly rho = h - (pq.p * pq.p + pq.q * pq.q).scaled(ch);
                    bool absorbed = ch > 0 && absorb(eps, m, rho, attempt);
                    if (debug)
                        std::fprintf(stderr, "[sos]   rho_height_bits=%ld absorbed=%d\n",
                                     bitsize(rho.height()), (int)absorbed);
                    if (absorbed) {
                        attempt.weights.push_back(ch);
                        attempt.squares.push_back(pq.p);
                        if (!pq.q.is_zero()) {
                            attempt.weights.push_back(ch);
                            attempt.squares.push_back(pq.q);
                        }
                        for (std::size_t j = 0; j < attempt.weights.size(); ++j) {
                            out.weights.push_back(attempt.weights[j] * lc);
                            out.squares.push_back(sigma * attempt.squares[j]);
                        }
                        UvPoly check = out.expand();
                        if (check != r) throw std::logic_error("sos decomposition mismatch");
                        return out;
                    }
                }
            }
            prec *= 2;
        }
        // precision cap reached: retry with a smaller (safer) eps
        eps /= 2;
    }
    throw std::runtime_error("weighted_sos_decompose: precision cap reached");
}

}  // namespace poscert
