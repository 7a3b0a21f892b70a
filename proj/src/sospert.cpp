#include "poscert/sospert.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace poscert {

std::vector<Mono> gram_index(std::size_t n, long t) {
    // all degree-t monomials in n+1 variables, descending lex with
    // X0 > X1 > ... > Xn; this puts X0^t first, then X0^(t-1)Xi
    std::vector<Mono> out;
    Mono cur(n + 1);
    // recursive enumeration in descending lex
    std::vector<uint32_t> stack(n + 1, 0);
    auto rec = [&](auto&& self, std::size_t pos, long rem) -> void {
        if (pos == n) {
            stack[pos] = static_cast<uint32_t>(rem);
            out.push_back(Mono(std::vector<uint32_t>(stack.begin(), stack.end())));
            return;
        }
        for (long e = rem; e >= 0; --e) {
            stack[pos] = static_cast<uint32_t>(e);
            self(self, pos + 1, rem - e);
        }
    };
    rec(rec, 0, t);
    return out;
}

MvPoly gram_expand(const GramMatrix& g) {
    MvPoly out(g.nvars_h);
    std::size_t n = g.index.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& c = g.entries.at(i, j);
            if (c == 0) continue;
            out.add_term(g.index[i] * g.index[j], c);
        }
    return out;
}

namespace {

Int multinomial(long t, const Mono& m) {
    Int acc(1);
    long rem = t;
    for (auto e : m.e) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(rem),
                     static_cast<unsigned long>(e));
        acc *= b;
        rem -= e;
    }
    return acc;
}

}  // namespace

GramMatrix build_At(std::size_t n, long t) {
    if (t < 1) throw std::invalid_argument("build_At: t must be >= 1");
    GramMatrix g;
    g.t = t;
    g.nvars_h = n + 1;
    g.index = gram_index(n, t);
    g.entries = QMat(g.index.size(), g.index.size());
    for (std::size_t i = 0; i < g.index.size(); ++i)
        g.entries.at(i, i) = Rat(multinomial(t, g.index[i]));
    return g;
}

GramMatrix build_Ft(const MvPoly& f, long t) {
    long deg = f.degree();
    if (deg < 0) deg = 0;
    if (deg % 2 != 0) throw std::invalid_argument("build_Ft: degree must be even");
    long d = deg / 2;
    if (t < d) throw std::invalid_argument("build_Ft: t below half degree");
    std::size_t n = f.nvars();

    MvPoly fh = f.homogenize(static_cast<uint32_t>(2 * d));
    GramMatrix g;
    g.t = t;
    g.nvars_h = n + 1;
    g.index = gram_index(n, t);
    g.entries = QMat(g.index.size(), g.index.size());

    std::map<Mono, std::size_t, GrlexLess> pos;
    for (std::size_t i = 0; i < g.index.size(); ++i) pos.emplace(g.index[i], i);
    auto embed = [&](const Mono& alpha) {
        // degree-d monomial alpha of (X0..Xn) -> index of X0^(t-d) * alpha
        Mono m = alpha;
        m.e[0] += static_cast<uint32_t>(t - d);
        auto it = pos.find(m);
        if (it == pos.end()) throw std::logic_error("gram index lookup failed");
        return it->second;
    };

    for (const auto& [gamma, c] : fh.terms()) {
        // gamma is a degree-2d exponent vector over X0..Xn
        bool is_corner = gamma.e[0] == static_cast<uint32_t>(2 * d);
        bool is_edge = gamma.e[0] == static_cast<uint32_t>(2 * d - 1);
        if (is_corner) {
            Mono a(n + 1);
            a.e[0] = static_cast<uint32_t>(d);
            std::size_t i = embed(a);
            g.entries.at(i, i) += c;
            continue;
        }
        if (is_edge) {
            // gamma = (2d-1) e0 + ei: half the coefficient on each side of
            // the (X0^d, X0^(d-1) Xi) pair
            Mono a(n + 1), b(n + 1);
            a.e[0] = static_cast<uint32_t>(d);
            b.e[0] = static_cast<uint32_t>(d - 1);
            for (std::size_t i = 1; i <= n; ++i)
                if (gamma.e[i] == 1) b.e[i] = 1;
            std::size_t ia = embed(a), ib = embed(b);
            Rat half = c / 2;
            g.entries.at(ia, ib) += half;
            g.entries.at(ib, ia) += half;
            continue;
        }
        // split rule: alpha = floor(gamma/2), then increment coordinates,
        // non-X0 first (largest coordinate value first, ties by ascending
        // index), X0 only once the others are saturated
        Mono alpha(n + 1);
        long asum = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            alpha.e[i] = gamma.e[i] / 2;
            asum += alpha.e[i];
        }
        std::vector<std::size_t> order;
        for (std::size_t i = 1; i <= n; ++i) order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a2, std::size_t b2) {
            return gamma.e[a2] > gamma.e[b2];
        });
        order.push_back(0);
        std::size_t cursor = 0;
        while (asum < d) {
            std::size_t i = order[cursor % order.size()];
            ++cursor;
            if (alpha.e[i] < gamma.e[i]) {
                alpha.e[i] += 1;
                ++asum;
            }
        }
        Mono beta(n + 1);
        for (std::size_t i = 0; i <= n; ++i) beta.e[i] = gamma.e[i] - alpha.e[i];
        std::size_t ia = embed(alpha), ib = embed(beta);
        if (ia == ib) {
            g.entries.at(ia, ia) += c;
        } else {
            Rat half = c / 2;
            g.entries.at(ia, ib) += half;
            g.entries.at(ib, ia) += half;
        }
    }
    return g;
}

long sos_pert_threshold(const MvPoly& f, const Rat& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("sos_pert_threshold: epsilon must be positive");
    Rat f0 = f.constant_term();
    if (f0 < 0) throw std::invalid_argument("sos_pert_threshold: requires f(0) >= 0");
    long deg = std::max<long>(f.degree(), 0);
    if (deg % 2 != 0) throw std::invalid_argument("sos_pert_threshold: degree must be even");
    long d = deg / 2;
    Rat grad2(0);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Rat gi = f.coeff(Mono::var(i, f.nvars()));
        grad2 += gi * gi;
    }
    Rat val = (f.one_norm() + grad2 / (f0 + epsilon)) / epsilon;
    Int c = rat_ceil(val);
    long cl = static_cast<long>(c.get_si());
    return std::max(d, cl);
}

PsdReport psd_check(const GramMatrix& g) {
    std::size_t n = g.index.size();
    QMat a = g.entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.at(i, j) != a.at(j, i))
                throw std::invalid_argument("psd_check: matrix not symmetric");

    PsdReport rep;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    QMat lower = QMat::identity(n);

    auto to_original = [&](const std::vector<Rat>& schur_v,
                           std::size_t k) -> std::vector<Rat> {
        // solve L^T v = (0,...,0, schur_v) over the permuted coordinates
        std::vector<Rat> v(n, Rat(0));
        for (std::size_t i = k; i < n; ++i) v[i] = schur_v[i - k];
        for (std::size_t i = k; i-- > 0;) {
            Rat s(0);
            for (std::size_t j = i + 1; j < n; ++j) s += lower.at(j, i) * v[j];
            v[i] = -s;
        }
        std::vector<Rat> out(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) out[perm[i]] = v[i];
        return out;
    };

    for (std::size_t k = 0; k < n; ++k) {
        // max remaining diagonal entry
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (a.at(i, i) > a.at(piv, piv)) piv = i;
        if (a.at(piv, piv) <= 0) {
            // no positive diagonal left: PSD iff the whole block is zero
            bool all_zero = true;
            std::size_t bi = k, bj = k;
            for (std::size_t i = k; i < n && all_zero; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (a.at(i, j) != 0) {
                        all_zero = false;
                        bi = i;
                        bj = j;
                        break;
                    }
            if (all_zero) {
                for (std::size_t i = k; i < n; ++i) rep.pivots.push_back(Rat(0));
                rep.psd = true;
                return rep;
            }
            std::vector<Rat> sv(n - k, Rat(0));
            if (bi == bj) {
                sv[bi - k] = 1;  // negative diagonal entry
            } else {
                sv[bi - k] = 1;
                sv[bj - k] = a.at(bi, bj) > 0 ? Rat(-1) : Rat(1);
            }
            rep.failure_vector = to_original(sv, k);
            // exact verification by multiplication
            const auto& v = *rep.failure_vector;
            Rat val(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) val += v[i] * g.entries.at(i, j) * v[j];
            rep.failure_value = val;
            if (!(val < 0)) throw std::logic_error("psd_check: failure vector not certifying");
            rep.psd = false;
            return rep;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, piv), a.at(i, k));
            for (std::size_t j = 0; j < k; ++j) std::swap(lower.at(piv, j), lower.at(k, j));
            std::swap(perm[piv], perm[k]);
        }
        Rat pivot = a.at(k, k);
        rep.pivots.push_back(pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rat l = a.at(i, k) / pivot;
            lower.at(i, k) = l;
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= l * a.at(k, j);
        }
        for (std::size_t j = k + 1; j < n; ++j) a.at(k, j) = 0;
        for (std::size_t i = k + 1; i < n; ++i) a.at(i, k) = 0;
    }
    rep.psd = true;
    return rep;
}

SosPertCertificate certify_sos_perturbed(const MvPoly& f, const Rat& epsilon, long t) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    long deg = std::max<long>(f.degree(), 0);
    if (deg % 2 != 0) throw std::invalid_argument("degree must be even");
    long d = deg / 2;
    if (t < d) throw std::invalid_argument("t below half degree");
    std::size_t n = f.nvars();

    GramMatrix ft = build_Ft(f, t);
    GramMatrix at = build_At(n, t);
    GramMatrix g;
    g.t = t;
    g.nvars_h = n + 1;
    g.index = ft.index;
    g.entries = QMat(g.index.size(), g.index.size());
    for (std::size_t i = 0; i < g.index.size(); ++i)
        for (std::size_t j = 0; j < g.index.size(); ++j)
            g.entries.at(i, j) = ft.entries.at(i, j) + epsilon * at.entries.at(i, j);

    // exact re-expansion identity
    MvPoly fh = f.homogenize(static_cast<uint32_t>(2 * d));
    Mono x0sq(n + 1);
    x0sq.e[0] = 2;
    Mono x0pow(n + 1);
    x0pow.e[0] = static_cast<uint32_t>(2 * (t - d));
    MvPoly shifted = fh.mul_term(x0pow, Rat(1));
    MvPoly ball(n + 1);
    ball.add_term(x0sq, Rat(1));
    for (std::size_t i = 1; i <= n; ++i) ball.add_term(Mono::var(i, n + 1, 2), Rat(1));
    MvPoly target = shifted + ball.pow(static_cast<unsigned>(t)).scaled(epsilon);
    MvPoly expanded = gram_expand(g);
    if (expanded != target)
        throw std::logic_error("certify_sos_perturbed: re-expansion identity failed");

    SosPertCertificate out;
    out.gram = std::move(g);
    out.report = psd_check(out.gram);
    out.expanded = expanded;

    // reported slack of the proof's sufficiency inequality, with the
    // 1-norm standing in for the spectral norm
    Rat f0 = f.constant_term();
    Rat grad2(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rat gi = f.coeff(Mono::var(i, f.nvars()));
        grad2 += gi * gi;
    }
    // ||Ftilde||_1: max column sum of the inner block (skip the X0^t row/col)
    GramMatrix fd = build_Ft(f, d);
    Rat fnorm(0);
    for (std::size_t j = 1; j < fd.index.size(); ++j) {
        Rat colsum(0);
        for (std::size_t i = 1; i < fd.index.size(); ++i) colsum += abs(fd.entries.at(i, j));
        if (colsum > fnorm) fnorm = colsum;
    }
    out.schur_slack = Rat(t) * epsilon - fnorm - grad2 / (Rat(4) * (f0 + epsilon));
    return out;
}

MvPoly lasserre_theta(std::size_t n, long t) {
    if (t < 0) throw std::invalid_argument("lasserre_theta: t must be >= 0");
    MvPoly out(n);
    Int fact(1);
    for (long kk = 0; kk <= t; ++kk) {
        if (kk > 0) fact *= kk;
        Rat c(Int(1), fact);
        for (std::size_t i = 0; i < n; ++i)
            out.add_term(Mono::var(i, n, static_cast<uint32_t>(2 * kk)), c);
    }
    return out;
}

Rat theta_normalizer(long t) {
    Rat s(0);
    Int fact(1);
    for (long kk = 0; kk <= t; ++kk) {
        if (kk > 0) fact *= kk;
        s += Rat(Int(1), fact);
    }
    return s;
}

MvPoly lasserre_ht(std::size_t n, long t) {
    MvPoly ball = MvPoly::constant(n, Rat(1));
    for (std::size_t i = 0; i < n; ++i) ball.add_term(Mono::var(i, n, 2), Rat(1));
    return ball.pow(static_cast<unsigned>(t));
}

Int ht_one_norm(std::size_t n, long t) {
    return int_pow(Int(static_cast<long>(n) + 1), static_cast<unsigned long>(t));
}

uint64_t poly_checksum(const MvPoly& p) {
    std::string s = to_string(p);
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string sospert_report_json(const SosPertCertificate& cert, const Rat& epsilon) {
    nlohmann::ordered_json j;
    j["t"] = cert.gram.t;
    j["epsilon"] = rat_to_string(epsilon);
    j["dimension"] = cert.gram.index.size();
    j["psd"] = cert.report.psd;
    nlohmann::ordered_json piv = nlohmann::ordered_json::array();
    for (const auto& p : cert.report.pivots) piv.push_back(rat_to_string(p));
    j["pivots"] = piv;
    if (cert.report.failure_vector) {
        nlohmann::ordered_json v = nlohmann::ordered_json::array();
        for (const auto& x : *cert.report.failure_vector) v.push_back(rat_to_string(x));
        j["failure_vector"] = v;
        j["failure_value"] = rat_to_string(cert.report.failure_value);
    } else {
        j["failure_vector"] = nullptr;
    }
    j["schur_slack"] = rat_to_string(cert.schur_slack);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(poly_checksum(cert.expanded)));
    j["expansion_checksum"] = buf;
    return j.dump(2) + "\n";
}

}  // namespace poscert
