#include "poscert/rur.hpp"

#include <set>
#include <stdexcept>

namespace poscert {

QuotientTable::QuotientTable(const GroebnerBasis& gb, const QuotientRing& q) : gb_(gb), q_(q) {
    for (std::size_t i = 0; i < q_.basis_monomials.size(); ++i)
        index_.emplace(q_.basis_monomials[i], i);
}

const std::vector<Rat>& QuotientTable::mono_coords(const Mono& m) const {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    std::vector<Rat> out(q_.dimension, Rat(0));
    auto idx = index_.find(m);
    if (idx != index_.end()) {
        out[idx->second] = 1;
    } else {
        MvPoly nf = normal_form(MvPoly::monomial(m, Rat(1)), gb_.generators);
        for (const auto& [mm, c] : nf.terms()) {
            auto jt = index_.find(mm);
            if (jt == index_.end())
                throw std::logic_error("normal form left the quotient basis");
            out[jt->second] = c;
        }
    }
    return cache_.emplace(m, std::move(out)).first->second;
}

std::vector<Rat> QuotientTable::coords(const MvPoly& f) const {
    std::vector<Rat> out(q_.dimension, Rat(0));
    for (const auto& [m, c] : f.terms()) {
        const auto& mc = mono_coords(m);
        for (std::size_t i = 0; i < out.size(); ++i)
            if (mc[i] != 0) out[i] += c * mc[i];
    }
    return out;
}

std::vector<Rat> QuotientTable::mul_monomial(const std::vector<Rat>& elem, const Mono& m) const {
    std::vector<Rat> out(q_.dimension, Rat(0));
    for (std::size_t i = 0; i < elem.size(); ++i) {
        if (elem[i] == 0) continue;
        const auto& mc = mono_coords(q_.basis_monomials[i] * m);
        for (std::size_t j = 0; j < out.size(); ++j)
            if (mc[j] != 0) out[j] += elem[i] * mc[j];
    }
    return out;
}

QMat QuotientTable::mult_matrix(const MvPoly& g) const {
    QMat mat(q_.dimension, q_.dimension);
    for (std::size_t col = 0; col < q_.dimension; ++col) {
        std::vector<Rat> acc(q_.dimension, Rat(0));
        for (const auto& [m, c] : g.terms()) {
            const auto& mc = mono_coords(q_.basis_monomials[col] * m);
            for (std::size_t i = 0; i < acc.size(); ++i)
                if (mc[i] != 0) acc[i] += c * mc[i];
        }
        for (std::size_t i = 0; i < q_.dimension; ++i) mat.at(i, col) = acc[i];
    }
    return mat;
}

MvPoly QuotientTable::to_poly(const std::vector<Rat>& elem) const {
    std::size_t n = gb_.generators[0].nvars();
    MvPoly out(n);
    for (std::size_t i = 0; i < elem.size(); ++i)
        if (elem[i] != 0) out.add_term(q_.basis_monomials[i], elem[i]);
    return out;
}

QMat multiplication_matrix(const GroebnerBasis& gb, const QuotientRing& q, const MvPoly& g) {
    QuotientTable table(gb, q);
    return table.mult_matrix(g);
}

namespace {

// evaluate p at the matrix acting on the element "coords of 1"
std::vector<Rat> poly_at_matrix_on(const QMat& m, const UvPoly& p, const std::vector<Rat>& v0) {
    std::vector<Rat> acc(v0.size(), Rat(0));
    std::vector<Rat> cur = v0;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0)
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c[k] * cur[i];
        if (k + 1 < c.size()) cur = m.apply(cur);
    }
    return acc;
}

UvPoly mulmod(const UvPoly& a, const UvPoly& b, const UvPoly& mod) {
    return (a * b).divrem(mod).second;
}

}  // namespace

std::variant<Rur, NotRadicalSignal> compute_rur(const GroebnerBasis& gb, const QuotientRing& q,
                                                uint64_t seed) {
    if (q.dimension == 0)
        throw std::invalid_argument("compute_rur: zero quotient (empty variety)");
    std::size_t n = gb.generators[0].nvars();
    std::size_t dim = q.dimension;
    QuotientTable table(gb, q);

    // index of the monomial 1 in the (ascending) quotient basis
    if (!q.basis_monomials[0].is_one())
        throw std::logic_error("quotient basis does not start at 1");

    Int attempts_bound = n == 1 ? Int(1) : 4 * Int(dim) * Int(dim - 1) / 2 + 1;
    SplitMix64 rng(seed ^ 0x72757273ull);
    std::set<long> used;
    Int attempt(0);

    while (attempt < attempts_bound) {
        long j;
        if (n == 1) {
            j = 0;
        } else if (attempt == 0) {
            j = 1;
        } else {
            j = rng.range(1, 8 * static_cast<long>(dim) * static_cast<long>(dim) + 7);
            if (used.count(j)) continue;  // does not consume an attempt
        }
        used.insert(j);
        attempt += 1;

        std::vector<Rat> lcoef(n);
        lcoef[0] = 1;
        Int jp(1);
        for (std::size_t i = 1; i < n; ++i) {
            jp *= j;
            lcoef[i] = Rat(jp);
        }
        MvPoly lform(n);
        for (std::size_t i = 0; i < n; ++i)
            lform.add_term(Mono::var(i, n), lcoef[i]);

        QMat ml = table.mult_matrix(lform);
        UvPoly chi = ml.charpoly();
        UvPoly sf = chi.squarefree_part();
        if (sf.degree() != chi.degree()) {
            // not squarefree: either L is non-separating or the ideal is
            // not radical. If some vector already generates a full-degree
            // minimal polynomial, the quotient is Q[T]/(chi) with chi
            // non-squarefree, hence non-radical for every L.
            std::vector<Rat> one(dim, Rat(0));
            one[0] = 1;
            UvPoly mp = ml.minpoly_of_vector(one);
            if (mp.degree() == static_cast<long>(dim))
                return NotRadicalSignal{"cyclic quotient with non-squarefree minimal polynomial"};
            continue;
        }

        // chi squarefree: radical ideal, separating form. R0 = chi.
        UvPoly r0 = chi.monic();
        UvPoly r0d = r0.derivative();

        // Krylov basis of powers of L on the element 1
        std::vector<Rat> one(dim, Rat(0));
        one[0] = 1;
        QMat kry(dim, dim);
        std::vector<Rat> cur = one;
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t i = 0; i < dim; ++i) kry.at(i, k) = cur[i];
            if (k + 1 < dim) cur = ml.apply(cur);
        }

        std::vector<Rat> r0d_elem = poly_at_matrix_on(ml, r0d, one);

        std::vector<UvPoly> Rs;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            std::vector<Rat> target = table.mul_monomial(r0d_elem, Mono::var(i, n));
            auto sol = kry.solve(target);
            if (!sol) {
                ok = false;
                break;
            }
            Rs.push_back(UvPoly(std::move(*sol)));
        }
        if (!ok) continue;

        // trace identity: T R0' = sum_i L_i R_i (mod R0)
        UvPoly lhs = mulmod(UvPoly::variable(), r0d, r0);
        UvPoly rhs;
        for (std::size_t i = 0; i < n; ++i) rhs = rhs + Rs[i].scaled(lcoef[i]);
        rhs = rhs.divrem(r0).second;
        if (lhs != rhs) continue;

        return Rur{r0, Rs, lcoef, dim};
    }
    return NotRadicalSignal{"separating-form family exhausted"};
}

UvPoly rur_substitute(const Rur& rur, const MvPoly& g) {
    UvPoly r0d = rur.R0.derivative();
    long dg = g.degree();
    if (dg < 0) return UvPoly();
    // sum over terms a * prod R_i^e_i * (R0')^(D - |e|)
    UvPoly acc;
    for (const auto& [m, c] : g.terms()) {
        UvPoly t = UvPoly::constant(c);
        for (std::size_t i = 0; i < g.nvars(); ++i)
            if (m.e[i]) t = t * rur.R[i].pow(m.e[i]);
        uint32_t rem = static_cast<uint32_t>(dg) - m.degree();
        if (rem) t = t * r0d.pow(rem);
        acc = acc + t;
    }
    return acc;
}

UvPoly rur_substitute_mod(const Rur& rur, const MvPoly& g) {
    return rur_substitute(rur, g).divrem(rur.R0).second;
}

}  // namespace poscert
