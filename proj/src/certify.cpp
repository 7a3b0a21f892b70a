#include "poscert/certify.hpp"

#include <json.hpp>

#include <stdexcept>

namespace poscert {

using ordered_json = nlohmann::ordered_json;

std::string pert_type_name(PertType t) {
    switch (t) {
        case PertType::NOPERT: return "nopert";
        case PertType::NEGPERT: return "negpert";
        case PertType::POSPERT: return "pospert";
    }
    return "?";
}

namespace {

PertType pert_type_from_name(const std::string& s) {
    if (s == "nopert") return PertType::NOPERT;
    if (s == "negpert") return PertType::NEGPERT;
    if (s == "pospert") return PertType::POSPERT;
    throw std::invalid_argument("unknown pert_type: " + s);
}

SizeProfile profile_of(const MvPoly& f) {
    return SizeProfile{static_cast<long>(f.nvars()), f.degree(), f.height_bitsize()};
}

// quotients q_i of the telescoped substitution identity
std::vector<MvPoly> build_quotients(const Rur& rur, const MvPoly& g) {
    std::size_t n = g.nvars();
    long D = g.degree();
    UvPoly r0d = rur.R0.derivative();
    std::vector<UvPoly> r0d_pow(static_cast<std::size_t>(D) + 1);
    r0d_pow[0] = UvPoly::constant(Rat(1));
    for (long e = 1; e <= D; ++e) r0d_pow[e] = r0d_pow[e - 1] * r0d;

    std::vector<MvPoly> q(n, MvPoly(n + 1));
    auto add_uv_times_mono = [&](MvPoly& dst, const UvPoly& u, const Mono& xpart) {
        for (long kk = 0; kk <= u.degree(); ++kk) {
            Rat c = u.coeff(static_cast<std::size_t>(kk));
            if (c == 0) continue;
            Mono m(n + 1);
            m.e[0] = static_cast<uint32_t>(kk);
            for (std::size_t i = 0; i < n; ++i) m.e[i + 1] = xpart.e[i];
            dst.add_term(m, c);
        }
    };

    for (const auto& [mono, coef] : g.terms()) {
        // the monomial as a sequence of variable factors, ascending index
        std::vector<std::size_t> seq;
        for (std::size_t i = 0; i < n; ++i)
            for (uint32_t r = 0; r < mono.e[i]; ++r) seq.push_back(i);
        std::size_t k = seq.size();
        if (k == 0) continue;  // constant term contributes only to r

        // prefix products of the R_i factors
        UvPoly prefix = UvPoly::constant(coef);
        // suffix monomials in X: exponents of seq[j+1..k-1]
        std::vector<Mono> suffix(k + 1, Mono(n));
        for (std::size_t j = k; j-- > 0;) {
            suffix[j] = suffix[j + 1];
            suffix[j].e[seq[j]] += 1;
        }
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t i = seq[j];
            // contribution c * prefix_j * (R0')^(D-1-j) * X^(suffix[j+1])
            UvPoly u = prefix * r0d_pow[static_cast<std::size_t>(D) - 1 - j];
            add_uv_times_mono(q[i], u, suffix[j + 1]);
            prefix = prefix * rur.R[i];
        }
    }
    return q;
}

// rational point with r(that point) < 0 and R0'(that point) != 0, scanned
// from the real roots of R0 first, then from the negative range of r
std::vector<Rat> extract_witness_point(const Rur& rur, const UvPoly& r, const MvPoly& g) {
    UvPoly r0d = rur.R0.derivative();
    auto r_chain = sturm_chain(r);

    auto try_make_point = [&](const Rat& t) -> std::optional<std::vector<Rat>> {
        if (r.eval(t) >= 0) return std::nullopt;
        Rat dv = r0d.eval(t);
        if (dv == 0) return std::nullopt;
        std::vector<Rat> p(g.nvars());
        for (std::size_t i = 0; i < g.nvars(); ++i) p[i] = rur.R[i].eval(t) / dv;
        if (g.eval(p) >= 0) return std::nullopt;
        return p;
    };

    // roots of R0 whose critical value is negative
    UvPoly common = UvPoly::gcd(rur.R0, r);
    auto common_chain = sturm_chain(common);
    for (auto [a, b] : isolate_real_roots(rur.R0)) {
        if (!common_chain.empty() && count_real_roots(common_chain, a, b) > 0)
            continue;  // critical value is exactly zero at this root
        // shrink until r has no root in (a,b], so its sign there is the
        // sign at the R0 root
        auto r0_chain = sturm_chain(rur.R0);
        for (int step = 0; step < 4096 && !r_chain.empty() &&
                           count_real_roots(r_chain, a, b) > 0;
             ++step) {
            Rat mid = (a + b) / 2;
            if (count_real_roots(r0_chain, a, mid) > 0)
                b = mid;
            else
                a = mid;
        }
        if (sign_at(r, b) >= 0) continue;
        // pick a rational inside (a, b] avoiding the finitely many roots
        // of R0'
        Rat lo = a, hi = b;
        for (int step = 0; step < 256; ++step) {
            Rat t = (lo + hi) / 2;
            auto p = try_make_point(t);
            if (p) return *p;
            auto pb = try_make_point(hi);
            if (pb) return *pb;
            lo = (lo + hi) / 2;
        }
    }

    // fallback: sample the negative range of r directly
    std::vector<Rat> candidates;
    auto rroots = isolate_real_roots(r);
    Rat big = root_bound(r);
    candidates.push_back(-big - 1);
    candidates.push_back(big + 1);
    for (std::size_t i = 0; i < rroots.size(); ++i) {
        candidates.push_back(rroots[i].first);
        if (i + 1 < rroots.size())
            candidates.push_back((rroots[i].second + rroots[i + 1].first) / 2);
    }
    for (const Rat& t0 : candidates) {
        Rat t = t0;
        for (int nudge = 0; nudge < 64; ++nudge) {
            auto p = try_make_point(t);
            if (p) return *p;
            t += make_rat(1, 257 + 31 * nudge);
        }
    }
    throw std::logic_error("witness extraction failed although r takes negative values");
}

}  // namespace

std::variant<SosRurResult, NotRadicalSignal> sos_rur(const MvPoly& g, uint64_t seed) {
    if (g.degree() < 2 || g.degree() % 2 != 0)
        throw std::invalid_argument("sos_rur: subject must have positive even degree");
    GroebnerBasis gb = groebner_basis(g.gradient());
    if (gb.is_unit_ideal())
        throw std::logic_error("sos_rur: gradient ideal is the unit ideal (no critical points)");
    QuotientRing q = quotient_basis(gb);  // throws NotZeroDimensional
    auto rur_or = compute_rur(gb, q, seed);
    if (std::holds_alternative<NotRadicalSignal>(rur_or))
        return std::get<NotRadicalSignal>(rur_or);
    Rur rur = std::get<Rur>(std::move(rur_or));

    UvPoly r = rur_substitute(rur, g);
    if (is_nonneg_univariate(r)) {
        SosRurResult res;
        res.nonneg = true;
        res.sos = r.is_zero() ? WeightedSos{} : weighted_sos_decompose(r);
        res.quotients = build_quotients(rur, g);
        res.rur = std::move(rur);
        return res;
    }
    SosRurResult res;
    res.nonneg = false;
    res.bad_point = extract_witness_point(rur, r, g);
    res.rur = std::move(rur);
    return res;
}

namespace {

Certificate make_nonneg_cert(const MvPoly& f, PertType pt, std::optional<Rat> lambda,
                             SosRurResult&& res, const MvPoly& subject) {
    Certificate cert;
    cert.nonneg = true;
    cert.pert_type = pt;
    cert.lambda = std::move(lambda);
    cert.rur = std::move(res.rur);
    cert.sos = std::move(res.sos);
    cert.quotients = std::move(res.quotients);
    cert.profile = profile_of(f);
    cert.subject = subject;
    cert.input = f;
    return cert;
}

Certificate make_witness_cert(const MvPoly& f, const Witness& w) {
    Certificate cert;
    cert.nonneg = false;
    cert.pert_type = PertType::NOPERT;
    cert.witness = w;
    cert.profile = profile_of(f);
    cert.input = f;
    cert.subject = MvPoly(f.nvars());
    return cert;
}

void require_hj_input(const MvPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("input polynomial is zero");
    if (!f.has_integer_coeffs())
        throw std::invalid_argument("input polynomial must have integer coefficients");
    if (f.degree() % 2 != 0 || f.degree() < 2)
        throw std::invalid_argument("input polynomial must have positive even degree");
    if (f.constant_term() <= 0)
        throw std::invalid_argument("input polynomial must satisfy f(0) > 0");
}

}  // namespace

Certificate hj_sos_pos(const MvPoly& f, uint64_t seed) {
    require_hj_input(f);
    SizeProfile profile = profile_of(f);
    Lambda lam0 = pick_lambda_pos(profile);
    SteoResult st = stereo_transform(f);

    for (int attempt = 0; attempt < 8; ++attempt) {
        Lambda lam{lam0.value / (2 * attempt + 1), PertRegime::POS, 0};
        MvPoly subject = pos_perturb(st.transformed, lam);
        auto outcome = sos_rur(subject, seed);
        if (std::holds_alternative<NotRadicalSignal>(outcome)) continue;
        SosRurResult res = std::get<SosRurResult>(std::move(outcome));
        if (res.nonneg)
            return make_nonneg_cert(f, PertType::POSPERT, lam.value, std::move(res), subject);
        // positive perturbation only adds nonnegative terms, so S(f) is
        // negative at the same point
        Witness w = witness_transport(f, res.bad_point);
        return make_witness_cert(f, w);
    }
    throw std::runtime_error(
        "positive stage: no radical gradient ideal within 8 lambda retries");
}

std::variant<Certificate, FailSignal> hj_sos_neg(const MvPoly& f, uint64_t seed, long k,
                                                 NegRunStats* stats) {
    require_hj_input(f);
    SizeProfile profile = profile_of(f);
    const Rat& eps = epsilon_bound(profile).value();
    SteoResult st = stereo_transform(f);

    NegRunStats local;
    NegRunStats& rs = stats ? *stats : local;

    long gamma = 1;
    while (true) {
        rs.final_gamma = gamma;
        Int attempt(0);
        while (true) {
            auto lam_or = pick_lambda_neg(profile, gamma, attempt, k, seed);
            if (std::holds_alternative<LambdaExhausted>(lam_or)) break;
            Lambda lam = std::get<Lambda>(lam_or);
            MvPoly subject = neg_perturb(st.transformed, lam);
            if (!is_zero_dim_no_infinity(subject.gradient())) {
                rs.rejected_lambdas += 1;
                attempt += 1;
                continue;
            }
            rs.sos_rur_runs += 1;
            auto outcome = sos_rur(subject, seed);
            if (std::holds_alternative<NotRadicalSignal>(outcome)) {
                rs.rejected_lambdas += 1;
                attempt += 1;
                continue;
            }
            SosRurResult res = std::get<SosRurResult>(std::move(outcome));
            if (res.nonneg)
                return make_nonneg_cert(f, PertType::NEGPERT, lam.value, std::move(res),
                                        subject);
            break;  // perturbed polynomial is negative somewhere: shrink lambda
        }
        // loop guard of the exponential search: stop once 2^-gamma <= eps
        Rat window = make_rat(Int(1), pow2(static_cast<unsigned long>(gamma)));
        if (window <= eps)
            return FailSignal{"window exhausted: f or its top homogeneous part "
                              "is not strictly positive, or all draws were unlucky",
                              gamma};
        gamma *= 2;
    }
}

Certificate hj_sos_rur(const MvPoly& f, uint64_t seed, long k) {
    if (f.is_zero()) throw std::invalid_argument("input polynomial is zero");
    if (!f.has_integer_coeffs())
        throw std::invalid_argument("input polynomial must have integer coefficients");
    long d = f.degree();
    if (d == 0) {
        Rat c = f.constant_term();
        if (c < 0) {
            std::vector<Rat> origin(f.nvars(), Rat(0));
            return make_witness_cert(f, Witness{origin, c});
        }
        Certificate cert;
        cert.nonneg = true;
        cert.pert_type = PertType::NOPERT;
        Rur rur;
        rur.R0 = UvPoly::variable();
        rur.R.assign(f.nvars(), UvPoly());
        rur.L.assign(f.nvars(), Rat(0));
        rur.L[0] = 1;
        rur.quotient_dim = 1;
        cert.rur = rur;
        WeightedSos sos;
        if (c > 0) {
            sos.weights.push_back(c);
            sos.squares.push_back(UvPoly::constant(Rat(1)));
        }
        cert.sos = sos;
        cert.quotients.assign(f.nvars(), MvPoly(f.nvars() + 1));
        cert.profile = profile_of(f);
        cert.subject = stereo_transform(f).transformed;
        cert.input = f;
        return cert;
    }
    if (d % 2 != 0) throw std::invalid_argument("input polynomial must have even degree");

    MvPoly g = f;
    std::vector<Int> shift;
    if (f.constant_term() <= 0) {
        auto shifted = shift_to_positive_constant(f, seed, k);
        if (std::holds_alternative<Witness>(shifted))
            return make_witness_cert(f, std::get<Witness>(shifted));
        ShiftResult sr = std::get<ShiftResult>(std::move(shifted));
        g = std::move(sr.shifted);
        shift = std::move(sr.offset);
    }

    auto finish = [&](Certificate cert) {
        cert.input = f;
        cert.shift = shift;
        if (cert.witness && !shift.empty()) {
            // witness for g maps back by adding the shift
            for (std::size_t i = 0; i < shift.size(); ++i)
                cert.witness->point[i] += Rat(shift[i]);
            cert.witness->value = f.eval(cert.witness->point);
        }
        return cert;
    };

    // stage 1: the unperturbed transform when its gradient ideal already
    // qualifies
    SteoResult st = stereo_transform(g);
    if (is_zero_dim_no_infinity(st.transformed.gradient())) {
        auto outcome = sos_rur(st.transformed, seed);
        if (std::holds_alternative<SosRurResult>(outcome)) {
            SosRurResult res = std::get<SosRurResult>(std::move(outcome));
            if (res.nonneg)
                return finish(make_nonneg_cert(g, PertType::NOPERT, std::nullopt,
                                               std::move(res), st.transformed));
            Witness w = witness_transport(g, res.bad_point);
            return finish(make_witness_cert(g, w));
        }
        // NotRadicalSignal: fall through to the perturbed stages
    }

    // stage 2: negative perturbation
    auto neg = hj_sos_neg(g, seed, k);
    if (std::holds_alternative<Certificate>(neg))
        return finish(std::get<Certificate>(std::move(neg)));

    // stage 3: positive perturbation, always decisive
    return finish(hj_sos_pos(g, seed));
}

// ---- verification ----

MvPoly uv_to_mv(const UvPoly& p, std::size_t nvars_total) {
    MvPoly out(nvars_total);
    for (long kk = 0; kk <= p.degree(); ++kk) {
        Rat c = p.coeff(static_cast<std::size_t>(kk));
        if (c == 0) continue;
        Mono m(nvars_total);
        m.e[0] = static_cast<uint32_t>(kk);
        out.add_term(m, c);
    }
    return out;
}

MvPoly certificate_residual(const Certificate& cert) {
    if (!cert.rur || !cert.sos) throw std::invalid_argument("certificate has no identity data");
    const Rur& rur = *cert.rur;
    std::size_t n = cert.subject.nvars();
    long D = cert.subject.degree();
    if (D < 0) D = 0;
    UvPoly r0d = rur.R0.derivative();

    MvPoly lhs = uv_to_mv(r0d.pow(static_cast<unsigned>(D)), n + 1) *
                 cert.subject.prepend_vars(1);
    UvPoly sos_sum = cert.sos->expand();
    MvPoly rhs = uv_to_mv(sos_sum, n + 1);
    MvPoly r0d_mv = uv_to_mv(r0d, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (cert.quotients.size() != n) throw std::invalid_argument("quotient count mismatch");
        MvPoly rel = r0d_mv * MvPoly::variable(i + 1, n + 1) - uv_to_mv(rur.R[i], n + 1);
        rhs += rel * cert.quotients[i];
    }
    return lhs - rhs;
}

VerificationReport verify_certificate(const MvPoly& f, const Certificate& cert) {
    VerificationReport report;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        report.checks.push_back({name, ok, detail});
    };
    auto guarded = [&](const std::string& name, auto&& fn) {
        try {
            auto [ok, detail] = fn();
            add(name, ok, detail);
        } catch (const std::exception& e) {
            add(name, false, std::string("error: ") + e.what());
        }
    };

    // reconstruct the shifted input and the subject
    MvPoly g = f;
    bool shift_ok = true;
    try {
        if (!cert.shift.empty()) g = f.shifted(cert.shift);
    } catch (const std::exception&) {
        shift_ok = false;
    }

    guarded("input-match", [&]() -> std::pair<bool, std::string> {
        if (cert.input != f) return {false, "certificate was created for a different polynomial"};
        if (!shift_ok) return {false, "shift vector does not apply to f"};
        return {true, ""};
    });

    if (cert.nonneg) {
        guarded("structure", [&]() -> std::pair<bool, std::string> {
            if (!cert.rur || !cert.sos) return {false, "missing rur/sos"};
            if (cert.witness) return {false, "nonneg certificate carries a witness"};
            if (cert.quotients.size() != f.nvars()) return {false, "quotient count mismatch"};
            return {true, ""};
        });
        guarded("subject-reconstruction", [&]() -> std::pair<bool, std::string> {
            if (g.is_zero()) return {false, "zero input"};
            if (g.degree() == 0) {
                // degree-0 inputs are certified directly by sign
                bool ok = cert.pert_type == PertType::NOPERT &&
                          cert.subject == stereo_transform(g).transformed;
                return {ok, ok ? "" : "constant subject mismatch"};
            }
            if (g.degree() % 2 != 0) return {false, "odd degree"};
            MvPoly expect = stereo_transform(g).transformed;
            if (cert.pert_type == PertType::POSPERT) {
                if (!cert.lambda) return {false, "missing lambda"};
                expect = pos_perturb(expect, Lambda{*cert.lambda, PertRegime::POS, 0});
            } else if (cert.pert_type == PertType::NEGPERT) {
                if (!cert.lambda) return {false, "missing lambda"};
                expect = neg_perturb(expect, Lambda{*cert.lambda, PertRegime::NEG, 0});
            } else if (cert.lambda) {
                return {false, "nopert certificate carries lambda"};
            }
            if (expect != cert.subject) return {false, "declared subject does not match"};
            return {true, ""};
        });
        guarded("lambda-range", [&]() -> std::pair<bool, std::string> {
            SizeProfile prof = profile_of(g);
            if (cert.pert_type == PertType::POSPERT) {
                if (!cert.lambda) return {false, "missing lambda"};
                if (*cert.lambda <= 0) return {false, "lambda not positive"};
                const Rat& eps = epsilon_bound(prof).value();
                if (*cert.lambda > eps) return {false, "lambda exceeds epsilon bound"};
                return {true, ""};
            }
            if (cert.pert_type == PertType::NEGPERT) {
                if (!cert.lambda) return {false, "missing lambda"};
                if (*cert.lambda <= 0) return {false, "lambda not positive"};
                if (*cert.lambda >= g.constant_term())
                    return {false, "lambda not below f(0)"};
                return {true, ""};
            }
            return {!cert.lambda, cert.lambda ? "unexpected lambda" : ""};
        });
        guarded("r0-squarefree", [&]() -> std::pair<bool, std::string> {
            if (!cert.rur) return {false, "missing rur"};
            const Rur& rur = *cert.rur;
            if (rur.R0.is_zero()) return {false, "R0 is zero"};
            UvPoly r0d = rur.R0.derivative();
            UvPoly gg = UvPoly::gcd(rur.R0, r0d);
            if (!(gg.degree() == 0)) return {false, "R0 is not squarefree"};
            if (rur.R.size() != f.nvars() || rur.L.size() != f.nvars())
                return {false, "parametrization arity mismatch"};
            UvPoly lhs = (UvPoly::variable() * r0d).divrem(rur.R0).second;
            UvPoly rhs;
            for (std::size_t i = 0; i < rur.R.size(); ++i)
                rhs = rhs + rur.R[i].scaled(rur.L[i]);
            rhs = rhs.divrem(rur.R0).second;
            if (lhs != rhs) return {false, "trace identity fails"};
            return {true, ""};
        });
        guarded("variety-inclusion", [&]() -> std::pair<bool, std::string> {
            if (!cert.rur) return {false, "missing rur"};
            for (std::size_t i = 0; i < cert.subject.nvars(); ++i) {
                MvPoly di = cert.subject.derivative(i);
                if (di.is_zero()) continue;
                if (!rur_substitute_mod(*cert.rur, di).is_zero())
                    return {false, "partial " + std::to_string(i + 1) +
                                       " does not vanish on the parametrized points"};
            }
            return {true, ""};
        });
        guarded("sos-identity", [&]() -> std::pair<bool, std::string> {
            if (!cert.sos) return {false, "missing sos"};
            for (const Rat& w : cert.sos->weights)
                if (w <= 0) return {false, "nonpositive weight"};
            MvPoly residual = certificate_residual(cert);
            if (!residual.is_zero()) return {false, "identity residual is nonzero"};
            return {true, ""};
        });
    } else {
        guarded("witness", [&]() -> std::pair<bool, std::string> {
            if (!cert.witness) return {false, "missing witness"};
            if (cert.rur || cert.sos || !cert.quotients.empty())
                return {false, "witness certificate carries identity data"};
            if (cert.witness->point.size() != f.nvars())
                return {false, "witness dimension mismatch"};
            Rat v = f.eval(cert.witness->point);
            if (v != cert.witness->value) return {false, "declared value mismatch"};
            if (!(v < 0)) return {false, "witness value is not negative"};
            return {true, ""};
        });
    }

    report.valid = true;
    for (const auto& c : report.checks) report.valid = report.valid && c.passed;
    return report;
}

// ---- JSON ----

namespace {

ordered_json poly_terms_json(const MvPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json ev = ordered_json::array();
        for (auto e : m.e) ev.push_back(e);
        arr.push_back(ordered_json::array({ev, rat_to_string(c)}));
    }
    return arr;
}

MvPoly poly_terms_from_json(const ordered_json& arr, std::size_t nvars) {
    MvPoly p(nvars);
    for (const auto& t : arr) {
        Mono m(nvars);
        const auto& ev = t.at(0);
        if (ev.size() != nvars) throw std::invalid_argument("exponent vector arity mismatch");
        for (std::size_t i = 0; i < nvars; ++i) m.e[i] = ev.at(i).get<uint32_t>();
        p.add_term(m, rat_from_string(t.at(1).get<std::string>()));
    }
    return p;
}

ordered_json uv_json(const UvPoly& p) {
    ordered_json arr = ordered_json::array();
    for (long i = 0; i <= p.degree(); ++i)
        arr.push_back(rat_to_string(p.coeff(static_cast<std::size_t>(i))));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

UvPoly uv_from_json(const ordered_json& arr) {
    std::vector<Rat> c;
    for (const auto& s : arr) c.push_back(rat_from_string(s.get<std::string>()));
    return UvPoly(std::move(c));
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["version"] = 1;
    ordered_json vars = ordered_json::array();
    for (std::size_t i = 0; i < cert.input.nvars(); ++i)
        vars.push_back("x" + std::to_string(i + 1));
    j["variables"] = vars;
    j["polynomial"] = poly_terms_json(cert.input);
    j["nonneg"] = cert.nonneg;
    j["pert_type"] = pert_type_name(cert.pert_type);
    j["lambda"] = cert.lambda ? ordered_json(rat_to_string(*cert.lambda)) : ordered_json(nullptr);
    if (cert.shift.empty()) {
        j["shift"] = nullptr;
    } else {
        ordered_json sh = ordered_json::array();
        for (const auto& c : cert.shift) sh.push_back(c.get_str());
        j["shift"] = sh;
    }
    if (cert.rur) {
        ordered_json r;
        r["R0"] = uv_json(cert.rur->R0);
        ordered_json rs = ordered_json::array();
        for (const auto& ri : cert.rur->R) rs.push_back(uv_json(ri));
        r["R"] = rs;
        ordered_json ls = ordered_json::array();
        for (const auto& li : cert.rur->L) ls.push_back(rat_to_string(li));
        r["L"] = ls;
        r["D"] = cert.subject.degree();
        j["rur"] = r;
    } else {
        j["rur"] = nullptr;
    }
    if (cert.sos) {
        ordered_json s;
        ordered_json ws = ordered_json::array();
        for (const auto& w : cert.sos->weights) ws.push_back(rat_to_string(w));
        s["weights"] = ws;
        ordered_json sq = ordered_json::array();
        for (const auto& p : cert.sos->squares) sq.push_back(uv_json(p));
        s["squares"] = sq;
        j["sos"] = s;
    } else {
        j["sos"] = nullptr;
    }
    if (!cert.quotients.empty()) {
        ordered_json qs = ordered_json::array();
        for (const auto& q : cert.quotients) qs.push_back(poly_terms_json(q));
        j["quotients"] = qs;
    } else {
        j["quotients"] = nullptr;
    }
    if (cert.witness) {
        ordered_json w;
        ordered_json pt = ordered_json::array();
        for (const auto& x : cert.witness->point) pt.push_back(rat_to_string(x));
        w["point"] = pt;
        w["value"] = rat_to_string(cert.witness->value);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("version").get<int>() != 1)
        throw std::invalid_argument("unsupported certificate version");
    Certificate cert;
    std::size_t n = j.at("variables").size();
    cert.input = poly_terms_from_json(j.at("polynomial"), n);
    cert.nonneg = j.at("nonneg").get<bool>();
    cert.pert_type = pert_type_from_name(j.at("pert_type").get<std::string>());
    if (!j.at("lambda").is_null())
        cert.lambda = rat_from_string(j.at("lambda").get<std::string>());
    if (!j.at("shift").is_null())
        for (const auto& s : j.at("shift")) cert.shift.push_back(Int(s.get<std::string>()));
    if (!j.at("rur").is_null()) {
        Rur rur;
        rur.R0 = uv_from_json(j.at("rur").at("R0"));
        for (const auto& ri : j.at("rur").at("R")) rur.R.push_back(uv_from_json(ri));
        for (const auto& li : j.at("rur").at("L"))
            rur.L.push_back(rat_from_string(li.get<std::string>()));
        rur.quotient_dim = static_cast<std::size_t>(std::max<long>(rur.R0.degree(), 0));
        cert.rur = rur;
    }
    if (!j.at("sos").is_null()) {
        WeightedSos sos;
        for (const auto& w : j.at("sos").at("weights"))
            sos.weights.push_back(rat_from_string(w.get<std::string>()));
        for (const auto& s : j.at("sos").at("squares")) sos.squares.push_back(uv_from_json(s));
        cert.sos = sos;
    }
    if (!j.at("quotients").is_null())
        for (const auto& q : j.at("quotients"))
            cert.quotients.push_back(poly_terms_from_json(q, n + 1));
    if (!j.at("witness").is_null()) {
        Witness w;
        for (const auto& x : j.at("witness").at("point"))
            w.point.push_back(rat_from_string(x.get<std::string>()));
        w.value = rat_from_string(j.at("witness").at("value").get<std::string>());
        cert.witness = w;
    }

    // derived fields
    MvPoly g = cert.input;
    if (!cert.shift.empty()) g = g.shifted(cert.shift);
    cert.profile = profile_of(g);
    if (cert.nonneg && !g.is_zero()) {
        MvPoly subject = stereo_transform(g).transformed;
        if (cert.pert_type == PertType::POSPERT && cert.lambda)
            subject = pos_perturb(subject, Lambda{*cert.lambda, PertRegime::POS, 0});
        else if (cert.pert_type == PertType::NEGPERT && cert.lambda)
            subject = neg_perturb(subject, Lambda{*cert.lambda, PertRegime::NEG, 0});
        cert.subject = subject;
    } else {
        cert.subject = MvPoly(n);
    }
    return cert;
}

}  // namespace poscert
