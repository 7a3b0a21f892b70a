#include "poscert/stereo.hpp"

#include <stdexcept>

namespace poscert {

SteoResult stereo_transform(const MvPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("stereo_transform of zero polynomial");
    std::size_t n = f.nvars();
    uint32_t d = static_cast<uint32_t>(f.degree());

    // s = -1 + sum Xi^2; powers up to d
    MvPoly s = MvPoly::constant(n, Rat(-1));
    for (std::size_t i = 0; i < n; ++i)
        s += MvPoly::monomial(Mono::var(i, n, 2), Rat(1));
    std::vector<MvPoly> spow(d + 1);
    spow[0] = MvPoly::constant(n, Rat(1));
    for (uint32_t k = 1; k <= d; ++k) spow[k] = spow[k - 1] * s;

    // sum over terms a 2^|alpha| X^alpha s^(d-|alpha|)
    MvPoly out(n);
    for (const auto& [m, c] : f.terms()) {
        uint32_t k = m.degree();
        Rat coef = c * Rat(pow2(k));
        out += spow[d - k].mul_term(m, coef);
    }
    return SteoResult{out, static_cast<long>(d), f.height()};
}

Int point_height(const std::vector<Rat>& x) {
    Int h(0);
    for (const auto& xi : x) {
        Int hi = height(xi);
        if (hi > h) h = hi;
    }
    return h;
}

Int witness_scale(const MvPoly& f, const std::vector<Rat>& x) {
    std::size_t n = f.nvars();
    long d = f.degree();
    Int hx = point_height(x);
    if (hx == 0) hx = 1;
    unsigned long e = static_cast<unsigned long>((static_cast<long>(n) + 1) * d - 1);
    return pow2(static_cast<unsigned long>(n + 2 * d - 1)) * int_pow(hx, e) * f.height();
}

Witness witness_transport(const MvPoly& f, const std::vector<Rat>& x) {
    SteoResult st = stereo_transform(f);
    Rat sval = st.transformed.eval(x);
    if (sval >= 0)
        throw std::invalid_argument("witness_transport: S(f)(x) is not negative, value " +
                                    rat_to_string(sval));
    Rat norm2(0);
    for (const auto& xi : x) norm2 += xi * xi;

    std::vector<Rat> q(x.size());
    if (norm2 != 1) {
        Rat den = norm2 - 1;
        for (std::size_t i = 0; i < x.size(); ++i) q[i] = 2 * x[i] / den;
    } else {
        Rat c = Rat(witness_scale(f, x));
        for (std::size_t i = 0; i < x.size(); ++i) q[i] = 2 * x[i] * c;
    }
    Rat val = f.eval(q);
    if (val >= 0)
        throw std::logic_error("witness_transport: transported value not negative");
    return Witness{q, val};
}

std::variant<ShiftResult, Witness> shift_to_positive_constant(const MvPoly& f,
                                                              uint64_t seed, long k) {
    if (f.is_zero()) throw std::invalid_argument("shift of zero polynomial");
    if (k < 2) throw std::invalid_argument("shift grid parameter k must be >= 2");
    std::size_t n = f.nvars();
    long d = std::max<long>(f.degree(), 1);
    SplitMix64 rng(seed);
    while (true) {
        std::vector<Int> c(n);
        std::vector<Rat> cq(n);
        for (std::size_t i = 0; i < n; ++i) {
            long v = rng.range(1, k * d);
            c[i] = v;
            cq[i] = Rat(v);
        }
        Rat val = f.eval(cq);
        if (val == 0) continue;
        if (val < 0) return Witness{cq, val};
        return ShiftResult{f.shifted(c), c};
    }
}

}  // namespace poscert
