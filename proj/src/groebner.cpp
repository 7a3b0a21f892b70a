#include "poscert/groebner.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace poscert {

MvPoly normal_form(const MvPoly& f, const std::vector<MvPoly>& basis) {
    MvPoly rem(f.nvars());
    MvPoly h = f;
    while (!h.is_zero()) {
        const Mono& lm = h.leading_monomial();
        bool reduced = false;
        for (const MvPoly& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lm)) {
                Mono q = lm / g.leading_monomial();
                Rat c = h.leading_coeff() / g.leading_coeff();
                h -= g.mul_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(h.leading_monomial(), h.leading_coeff());
            h.set_coeff(h.leading_monomial(), Rat(0));
        }
    }
    return rem;
}

MvPoly s_polynomial(const MvPoly& f, const MvPoly& g) {
    Mono l = Mono::lcm(f.leading_monomial(), g.leading_monomial());
    MvPoly a = f.mul_term(l / f.leading_monomial(), Rat(1) / f.leading_coeff());
    MvPoly b = g.mul_term(l / g.leading_monomial(), Rat(1) / g.leading_coeff());
    return a - b;
}

namespace {

struct Pair {
    std::size_t i, j;
    Mono lcm;
    uint32_t deg;
};

bool coprime(const Mono& a, const Mono& b) {
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] && b.e[k]) return false;
    return true;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<MvPoly>& gens) {
    if (gens.empty()) throw std::invalid_argument("groebner_basis: no generators");
    std::size_t n = gens[0].nvars();
    for (const auto& g : gens)
        if (g.nvars() != n) throw std::invalid_argument("groebner_basis: variable count mismatch");

    std::vector<MvPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(g.primitive_part());
    }
    GroebnerBasis out;
    if (basis.empty()) throw std::invalid_argument("groebner_basis: all generators are zero");

    std::list<Pair> pairs;
    auto push_pairs = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            Mono l = Mono::lcm(basis[i].leading_monomial(), basis[t].leading_monomial());
            pairs.push_back({i, t, l, l.degree()});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it)
            if (it->deg < best->deg || (it->deg == best->deg && grlex_cmp(it->lcm, best->lcm) < 0))
                best = it;
        Pair p = *best;
        pairs.erase(best);

        const Mono& li = basis[p.i].leading_monomial();
        const Mono& lj = basis[p.j].leading_monomial();
        if (coprime(li, lj)) continue;  // product criterion
        // chain criterion: a third element whose leading monomial strictly
        // divides the lcm and whose pairs with i and j are already handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            const Mono& lk = basis[k].leading_monomial();
            if (!lk.divides(p.lcm)) continue;
            if (Mono::lcm(li, lk) == p.lcm || Mono::lcm(lj, lk) == p.lcm) continue;
            bool ik_pending = false, jk_pending = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k))) ik_pending = true;
                if ((q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) jk_pending = true;
            }
            if (!ik_pending && !jk_pending) skip = true;
        }
        if (skip) continue;

        MvPoly r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (r.is_zero()) continue;
        r = r.primitive_part();
        basis.push_back(r);
        push_pairs(basis.size() - 1);
        if (r.is_constant()) break;  // unit ideal
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another's
    std::vector<MvPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Mono& lj = basis[j].leading_monomial();
            const Mono& li = basis[i].leading_monomial();
            if (lj.divides(li) && (li != lj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // interreduce: replace each by its normal form against the others
    std::vector<MvPoly> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<MvPoly> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        MvPoly nf = others.empty() ? reduced[i] : normal_form(reduced[i], others);
        reduced[i] = nf.monic();
    }
    std::sort(reduced.begin(), reduced.end(), [](const MvPoly& a, const MvPoly& b) {
        return grlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });

    out.generators = std::move(reduced);
    for (const auto& g : out.generators) out.leading_monomials.push_back(g.leading_monomial());
    return out;
}

bool is_zero_dim_no_infinity(const std::vector<MvPoly>& gens) {
    std::vector<MvPoly> tops;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        tops.push_back(g.top_part());
    }
    if (tops.empty()) return false;
    std::size_t n = tops[0].nvars();
    GroebnerBasis gb = groebner_basis(tops);
    if (gb.is_unit_ideal()) return true;  // empty projective variety
    std::vector<bool> pure(n, false);
    for (const Mono& lm : gb.leading_monomials) {
        std::size_t nz = 0, idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm.e[i]) {
                ++nz;
                idx = i;
            }
        if (nz == 1) pure[idx] = true;
    }
    for (bool b : pure)
        if (!b) return false;
    return true;
}

QuotientRing quotient_basis(const GroebnerBasis& gb) {
    if (gb.generators.empty()) throw std::invalid_argument("quotient_basis: empty basis");
    std::size_t n = gb.generators[0].nvars();
    QuotientRing q;
    if (gb.is_unit_ideal()) return q;  // zero ring

    // every variable needs a pure-power leading monomial
    std::vector<uint32_t> cap(n, 0);
    std::vector<bool> pure(n, false);
    for (const Mono& lm : gb.leading_monomials) {
        std::size_t nz = 0, idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm.e[i]) {
                ++nz;
                idx = i;
            }
        if (nz == 1) {
            pure[idx] = true;
            cap[idx] = std::max(cap[idx], lm.e[idx]);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!pure[i]) throw NotZeroDimensional(i);

    // enumerate monomials below the caps, keep those outside the staircase
    std::vector<Mono> result;
    Mono cur(n);
    std::size_t pos = 0;
    // iterative odometer over exponents < cap[i]
    while (true) {
        bool standard = true;
        for (const Mono& lm : gb.leading_monomials)
            if (lm.divides(cur)) {
                standard = false;
                break;
            }
        if (standard) result.push_back(cur);
        pos = 0;
        while (pos < n) {
            if (cur.e[pos] + 1 < cap[pos]) {
                cur.e[pos] += 1;
                for (std::size_t r = 0; r < pos; ++r) cur.e[r] = 0;
                break;
            }
            ++pos;
        }
        if (pos == n) break;
    }
    std::sort(result.begin(), result.end(),
              [](const Mono& a, const Mono& b) { return grlex_cmp(a, b) < 0; });
    q.basis_monomials = std::move(result);
    q.dimension = q.basis_monomials.size();
    return q;
}

}  // namespace poscert
