#include <doctest.h>

#include "poscert/sospert.hpp"
#include "test_util.hpp"

using namespace poscert;
using testutil::motzkin;

namespace {

MvPoly ball_power(std::size_t n, long t, const Rat& scale) {
    MvPoly ball(n + 1);
    Mono x0sq(n + 1);
    x0sq.e[0] = 2;
    ball.add_term(x0sq, Rat(1));
    for (std::size_t i = 1; i <= n; ++i) ball.add_term(Mono::var(i, n + 1, 2), Rat(1));
    return ball.pow(static_cast<unsigned>(t)).scaled(scale);
}

GramMatrix from_entries(std::size_t n, long t, std::vector<std::vector<long>> rows) {
    GramMatrix g;
    g.t = t;
    g.nvars_h = n + 1;
    g.index = gram_index(n, t);
    g.entries = QMat(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) g.entries.at(i, j) = Rat(rows[i][j]);
    return g;
}

}  // namespace

TEST_CASE("gram index ordering starts with X0 powers") {
    auto idx = gram_index(2, 2);
    REQUIRE(idx.size() == 6);
    CHECK(idx[0].e == std::vector<uint32_t>{2, 0, 0});
    CHECK(idx[1].e == std::vector<uint32_t>{1, 1, 0});
    CHECK(idx[2].e == std::vector<uint32_t>{1, 0, 1});
}

TEST_CASE("build_At examples") {
    GramMatrix a = build_At(1, 2);
    REQUIRE(a.index.size() == 3);
    CHECK(a.entries.at(0, 0) == 1);
    CHECK(a.entries.at(1, 1) == 2);
    CHECK(a.entries.at(2, 2) == 1);

    GramMatrix b = build_At(2, 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(b.entries.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("build_At re-expansion equals the ball power") {
    for (std::size_t n : {1u, 2u})
        for (long t = 1; t <= 6; ++t)
            CHECK(gram_expand(build_At(n, t)) == ball_power(n, t, Rat(1)));
}

TEST_CASE("build_At block structure facts") {
    // lambda_min over the A_{t,1} block >= t when t >= 2d; unit entries at
    // the t e_i slots of A_{t,2}
    for (std::size_t n : {1u, 2u}) {
        long d = 2;
        for (long t = 2 * d; t <= 2 * d + 2; ++t) {
            GramMatrix a = build_At(n, t);
            for (std::size_t i = 0; i < a.index.size(); ++i) {
                long a0 = a.index[i].e[0];
                if (a0 >= t - d && a0 < t) CHECK(a.entries.at(i, i) >= t);
            }
            for (std::size_t v = 1; v <= n; ++v) {
                Mono m(n + 1);
                m.e[v] = static_cast<uint32_t>(t);
                for (std::size_t i = 0; i < a.index.size(); ++i)
                    if (a.index[i] == m) CHECK(a.entries.at(i, i) == 1);
            }
        }
    }
}

TEST_CASE("build_Ft examples and identity") {
    // constant
    MvPoly c = MvPoly::constant(2, Rat(3));
    GramMatrix g = build_Ft(c, 2);
    CHECK(g.entries.at(0, 0) == 3);
    MvPoly expect(3);
    Mono m(3);
    m.e[0] = 4;
    expect.add_term(m, Rat(3));
    CHECK(gram_expand(g) == expect);

    // f = x^2 (n=1, 2d=2), t=1: single entry at (X1, X1)
    MvPoly f = parse_poly("x1^2", 1);
    GramMatrix g2 = build_Ft(f, 1);
    CHECK(g2.entries.at(0, 0) == 0);
    CHECK(g2.entries.at(1, 1) == 1);
    MvPoly fh = f.homogenize(2);
    CHECK(gram_expand(g2) == fh);

    // Motzkin at t = 3: expansion is M^h itself
    MvPoly mh = motzkin().homogenize(6);
    CHECK(gram_expand(build_Ft(motzkin(), 3)) == mh);

    // gradient row: f with linear terms
    MvPoly h = parse_poly("x1^2+3*x1+x2^2-x2+5", 2);
    GramMatrix g3 = build_Ft(h, 1);
    CHECK(g3.entries.at(0, 0) == 5);
    CHECK(g3.entries.at(0, 1) == make_rat(3, 2));
    CHECK(g3.entries.at(0, 2) == make_rat(-1, 2));
    CHECK(gram_expand(g3) == h.homogenize(2));

    CHECK_THROWS_AS(build_Ft(motzkin(), 2), std::invalid_argument);
}

TEST_CASE("build_Ft re-expansion identity on random even polynomials") {
    SplitMix64 rng(28);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = 1 + rng.below(2);
        MvPoly f = testutil::random_poly(rng, n, 4, 5);
        if (f.degree() % 2 != 0) f.add_term(Mono::var(0, n, 4), Rat(2));
        long d = f.degree() / 2;
        for (long t = d; t <= d + 2; ++t) {
            Mono x0(n + 1);
            x0.e[0] = static_cast<uint32_t>(2 * (t - d));
            MvPoly target = f.homogenize(static_cast<uint32_t>(2 * d)).mul_term(x0, Rat(1));
            CHECK(gram_expand(build_Ft(f, t)) == target);
        }
    }
}

TEST_CASE("threshold examples") {
    CHECK(sos_pert_threshold(motzkin(), Rat(1)) == 6);
    CHECK(sos_pert_threshold(motzkin(), Rat(2)) == 3);
    // gradient-free f with small 1-norm: the degree branch wins
    MvPoly f = parse_poly("x1^2+1", 1);  // ||f||_1 = 2, d = 1
    CHECK(sos_pert_threshold(f, Rat(2)) == 1);
    CHECK_THROWS_AS(sos_pert_threshold(f, Rat(0)), std::invalid_argument);
}

TEST_CASE("psd_check examples") {
    GramMatrix a = from_entries(0, 1, {{2, 1}, {1, 2}});
    PsdReport ra = psd_check(a);
    CHECK(ra.psd);
    REQUIRE(ra.pivots.size() == 2);
    CHECK(ra.pivots[0] == 2);
    CHECK(ra.pivots[1] == make_rat(3, 2));

    GramMatrix b = from_entries(0, 1, {{1, 2}, {2, 1}});
    PsdReport rb = psd_check(b);
    CHECK(!rb.psd);
    REQUIRE(rb.failure_vector.has_value());
    CHECK(rb.failure_value < 0);

    GramMatrix z = from_entries(0, 1, {{0, 0}, {0, 0}});
    PsdReport rz = psd_check(z);
    CHECK(rz.psd);
}

TEST_CASE("psd_check agrees with principal minors on random symmetric matrices") {
    SplitMix64 rng(29);
    auto det = [](const QMat& m, std::vector<std::size_t> idx, auto&& self) -> Rat {
        if (idx.empty()) return Rat(1);
        Rat acc(0);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Rat v = m.at(idx[0], idx[j]);
            if (v == 0) continue;
            std::vector<std::size_t> rest;
            for (std::size_t r = 1; r < idx.size(); ++r) rest.push_back(idx[r]);
            std::vector<std::size_t> cols;
            for (std::size_t r = 0; r < idx.size(); ++r)
                if (r != j) cols.push_back(idx[r]);
            // minor over rows rest x cols
            QMat sub(rest.size(), rest.size());
            for (std::size_t a2 = 0; a2 < rest.size(); ++a2)
                for (std::size_t b2 = 0; b2 < rest.size(); ++b2)
                    sub.at(a2, b2) = m.at(rest[a2], cols[b2]);
            std::vector<std::size_t> all(rest.size());
            for (std::size_t a2 = 0; a2 < rest.size(); ++a2) all[a2] = a2;
            Rat minor = self(sub, all, self);
            acc += (j % 2 ? -v : v) * minor;
        }
        return acc;
    };
    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + rng.below(6);
        GramMatrix g;
        g.t = 1;
        g.nvars_h = n;
        g.index.assign(n, Mono(1));  // placeholder index; only entries matter
        for (std::size_t i = 0; i < n; ++i) g.index[i] = Mono::var(0, 1, i + 1);
        g.entries = QMat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rat v = Rat(rng.range(-3, 3));
                g.entries.at(i, j) = v;
                g.entries.at(j, i) = v;
            }
        // PSD iff all principal minors (over every subset) are >= 0
        bool psd_minors = true;
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ul << i)) idx.push_back(i);
            if (det(g.entries, idx, det) < 0) {
                psd_minors = false;
                break;
            }
        }
        CHECK(psd_check(g).psd == psd_minors);
    }
}

TEST_CASE("certify_sos_perturbed: motzkin at the threshold") {
    SosPertCertificate cert = certify_sos_perturbed(motzkin(), Rat(1), 6);
    CHECK(cert.report.psd);
    CHECK(cert.gram.index.size() == 28);
    // re-expansion against the directly computed target
    MvPoly mh = motzkin().homogenize(6);
    Mono x0(3);
    x0.e[0] = 6;
    MvPoly target = mh.mul_term(x0, Rat(1)) + ball_power(2, 6, Rat(1));
    CHECK(cert.expanded == target);
}

TEST_CASE("certify_sos_perturbed: small quadratic") {
    MvPoly f = parse_poly("x1^2+1", 1);
    SosPertCertificate cert = certify_sos_perturbed(f, Rat(1), 1);
    CHECK(cert.report.psd);
}

TEST_CASE("theorem guarantee on seeded random SOS inputs") {
    SplitMix64 rng(30);
    int done = 0;
    while (done < 20) {
        std::size_t n = 1 + rng.below(2);
        // explicit small SOS with 2d <= 6
        MvPoly f(n);
        long terms = 1 + static_cast<long>(rng.below(2));
        for (long j = 0; j < terms; ++j) {
            MvPoly q = testutil::random_poly(rng, n, 1 + rng.below(2), 3, 3);
            f += q * q;
        }
        if (f.degree() > 6 || f.is_zero()) continue;
        if (f.degree() % 2 != 0) continue;
        Rat eps = make_rat(1, static_cast<long>(1) << rng.below(3));
        long t = sos_pert_threshold(f, eps);
        SosPertCertificate cert = certify_sos_perturbed(f, eps, t);
        CHECK(cert.report.psd);
        ++done;
    }
}

TEST_CASE("lasserre theta and h_t") {
    CHECK(lasserre_theta(1, 1) == parse_poly("x1^2+1", 1));
    CHECK(lasserre_theta(2, 0) == MvPoly::constant(2, Rat(2)));
    for (std::size_t n : {1u, 2u, 3u})
        for (long t = 0; t <= 8; ++t) {
            CHECK(lasserre_theta(n, t).one_norm() == Rat(static_cast<long>(n)) *
                                                         theta_normalizer(t));
            CHECK(lasserre_ht(n, t).one_norm() == Rat(ht_one_norm(n, t)));
        }
}

TEST_CASE("h_t is a sum of squares of monomials") {
    for (std::size_t n : {1u, 2u, 3u})
        for (long t = 1; t <= 8; ++t) {
            MvPoly h = lasserre_ht(n, t);
            for (const auto& [m, c] : h.terms()) {
                CHECK(c > 0);
                for (auto e : m.e) CHECK(e % 2 == 0);
            }
        }
}

TEST_CASE("theta subtraction structure inside h_t") {
    // h_t minus the pure-power binomial terms (k = 0 counted once) keeps
    // only positive coefficients on even exponent vectors
    for (std::size_t n : {2u, 3u})
        for (long t = 1; t <= 6; ++t) {
            MvPoly h = lasserre_ht(n, t);
            MvPoly sub = MvPoly::constant(n, Rat(1));
            for (long kk = 1; kk <= t; ++kk) {
                Int b;
                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(t),
                             static_cast<unsigned long>(kk));
                for (std::size_t i = 0; i < n; ++i)
                    sub.add_term(Mono::var(i, n, static_cast<uint32_t>(2 * kk)), Rat(b));
            }
            MvPoly rest = h - sub;
            for (const auto& [m, c] : rest.terms()) {
                CHECK(c > 0);
                for (auto e : m.e) CHECK(e % 2 == 0);
            }
        }
}

TEST_CASE("sospert report is stable") {
    SosPertCertificate cert = certify_sos_perturbed(motzkin(), Rat(1), 6);
    std::string a = sospert_report_json(cert, Rat(1));
    std::string b = sospert_report_json(certify_sos_perturbed(motzkin(), Rat(1), 6), Rat(1));
    CHECK(a == b);
}
