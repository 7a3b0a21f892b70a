#include "poscert/hjpert.hpp"

#include <stdexcept>

namespace poscert {

namespace {

MvPoly pert_sum(std::size_t n, uint32_t top_exp) {
    MvPoly s = MvPoly::constant(n, Rat(static_cast<long>(n)));
    for (std::size_t i = 0; i < n; ++i) {
        s += MvPoly::monomial(Mono::var(i, n, 2), Rat(1));
        s += MvPoly::monomial(Mono::var(i, n, top_exp), Rat(1));
    }
    return s;
}

}  // namespace

MvPoly pos_perturb(const MvPoly& f, const Lambda& lambda) {
    if (lambda.regime != PertRegime::POS) throw std::invalid_argument("pos_perturb: wrong regime");
    if (lambda.value <= 0) throw std::invalid_argument("pos_perturb: lambda must be positive");
    long d = f.degree();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("pos_perturb: degree must be even and >= 2");
    return f + pert_sum(f.nvars(), static_cast<uint32_t>(d + 2)).scaled(lambda.value);
}

MvPoly neg_perturb(const MvPoly& f, const Lambda& lambda) {
    if (lambda.regime != PertRegime::NEG) throw std::invalid_argument("neg_perturb: wrong regime");
    if (lambda.value <= 0) throw std::invalid_argument("neg_perturb: lambda must be positive");
    long d = f.degree();
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("neg_perturb: degree must be even and >= 2");
    return f - pert_sum(f.nvars(), static_cast<uint32_t>(d)).scaled(lambda.value);
}

Lambda pick_lambda_pos(const SizeProfile& profile) {
    const Rat& eps = epsilon_bound(profile).value();
    Int q = ceil_div(eps.get_den(), eps.get_num());
    Int p = floor_div(q * eps.get_num(), eps.get_den());
    if (p < 1) p = 1;  // q = ceil(1/eps) guarantees 1/q <= eps
    return Lambda{make_rat(p, q), PertRegime::POS, 0};
}

Int neg_candidate_count(const SizeProfile& profile, long k) {
    Int base(2 * profile.d - 1);
    Int count = int_pow(base, static_cast<unsigned long>(profile.n - 1));
    count *= (base + profile.n);
    count *= k;
    return count;
}

std::variant<Lambda, LambdaExhausted> pick_lambda_neg(const SizeProfile& profile, long gamma,
                                                      const Int& attempt, long k, uint64_t seed) {
    if (gamma < 1) throw std::invalid_argument("pick_lambda_neg: gamma must be >= 1");
    if (attempt < 0) throw std::invalid_argument("pick_lambda_neg: attempt must be >= 0");
    Int size = neg_candidate_count(profile, k);
    if (attempt >= size) return LambdaExhausted{};
    long m = ceil_lg(size);

    SplitMix64 rng(seed ^ (0x6e65676cull + static_cast<uint64_t>(gamma)));
    Int base(static_cast<long>(rng.next() >> 1));
    Int j = (base + attempt) % size;

    // numerator 2^(gamma+m) + 2j + 1, denominator 2^(2 gamma + m + 1)
    Int num = pow2(static_cast<unsigned long>(gamma + m)) + 2 * j + 1;
    Int den = pow2(static_cast<unsigned long>(2 * gamma + m + 1));
    return Lambda{make_rat(num, den), PertRegime::NEG, gamma};
}

}  // namespace poscert
