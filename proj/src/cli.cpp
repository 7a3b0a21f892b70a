#include "poscert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "poscert/certify.hpp"
#include "poscert/sospert.hpp"

namespace poscert {

namespace {

MvPoly load_polynomial(const std::string& inline_poly, const std::string& input_path) {
    std::string text;
    if (!inline_poly.empty() && !input_path.empty())
        throw std::invalid_argument("give either --poly or --input, not both");
    if (!inline_poly.empty()) {
        text = inline_poly;
    } else if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) throw std::invalid_argument("cannot open " + input_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        throw std::invalid_argument("no polynomial given (use --poly or --input)");
    }
    std::size_t n = scan_max_var_index(text);
    if (n == 0) n = 1;
    return parse_poly(text, n);
}

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        // strip whitespace
        std::string trimmed;
        for (char c : cur)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        out.push_back(rat_from_string(trimmed));
    }
    if (out.empty()) throw std::invalid_argument("empty point");
    return out;
}

int cmd_certify(const MvPoly& f, const std::string& mode, uint64_t seed, long k,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    Certificate cert;
    if (mode == "auto") {
        cert = hj_sos_rur(f, seed, k);
    } else if (mode == "pos") {
        cert = hj_sos_pos(f, seed);
    } else if (mode == "neg") {
        auto r = hj_sos_neg(f, seed, k);
        if (std::holds_alternative<FailSignal>(r)) {
            const auto& fail = std::get<FailSignal>(r);
            out << "FAIL: negative-perturbation stage exhausted (gamma reached "
                << fail.last_gamma << ")\n";
            out << "reason: " << fail.reason << "\n";
            return 1;
        }
        cert = std::get<Certificate>(std::move(r));
    } else if (mode == "nopert") {
        SteoResult st = stereo_transform(f);
        if (!is_zero_dim_no_infinity(st.transformed.gradient())) {
            err << "nopert mode: gradient ideal of the transform is not "
                   "zero-dimensional / has solutions at infinity\n";
            return 1;
        }
        auto outcome = sos_rur(st.transformed, seed);
        if (std::holds_alternative<NotRadicalSignal>(outcome)) {
            err << "nopert mode: " << std::get<NotRadicalSignal>(outcome).detail << "\n";
            return 1;
        }
        SosRurResult res = std::get<SosRurResult>(std::move(outcome));
        if (res.nonneg) {
            Certificate c;
            c.nonneg = true;
            c.pert_type = PertType::NOPERT;
            c.rur = std::move(res.rur);
            c.sos = std::move(res.sos);
            c.quotients = std::move(res.quotients);
            c.profile = SizeProfile{static_cast<long>(f.nvars()), f.degree(),
                                    f.height_bitsize()};
            c.subject = st.transformed;
            c.input = f;
            cert = std::move(c);
        } else {
            Witness w = witness_transport(f, res.bad_point);
            Certificate c;
            c.nonneg = false;
            c.witness = w;
            c.input = f;
            c.subject = MvPoly(f.nvars());
            c.profile = SizeProfile{static_cast<long>(f.nvars()), f.degree(),
                                    f.height_bitsize()};
            cert = std::move(c);
        }
    } else {
        err << "unknown mode: " << mode << "\n";
        return 2;
    }

    if (!out_path.empty()) {
        std::ofstream o(out_path, std::ios::binary);
        if (!o) {
            err << "cannot write " << out_path << "\n";
            return 2;
        }
        o << certificate_to_json(cert);
    }

    if (cert.nonneg) {
        if (cert.pert_type == PertType::NEGPERT) {
            out << "STRICTLY_POSITIVE (negative-perturbation certificate, lambda = "
                << rat_to_string(*cert.lambda) << ")\n";
        } else if (cert.pert_type == PertType::POSPERT) {
            out << "NONNEGATIVE (positive-perturbation certificate, lambda = "
                << rat_to_string(*cert.lambda) << ")\n";
        } else {
            out << "NONNEGATIVE (unperturbed certificate)\n";
        }
        out << "squares: " << cert.sos->weights.size()
            << ", quotient dimension: " << (cert.rur ? cert.rur->quotient_dim : 0) << "\n";
        return 0;
    }
    out << "NEGATIVE witness: point (";
    for (std::size_t i = 0; i < cert.witness->point.size(); ++i) {
        if (i) out << ", ";
        out << rat_to_string(cert.witness->point[i]);
    }
    out << "), value " << rat_to_string(cert.witness->value) << "\n";
    return 1;
}

int cmd_verify(const MvPoly& f, const std::string& cert_path, std::ostream& out,
               std::ostream& err) {
    std::ifstream in(cert_path);
    if (!in) {
        err << "cannot open " << cert_path << "\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    Certificate cert = certificate_from_json(ss.str());
    VerificationReport rep = verify_certificate(f, cert);
    for (const auto& c : rep.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    out << (rep.valid ? "VALID" : "INVALID") << "\n";
    return rep.valid ? 0 : 1;
}

int cmd_sospert(const MvPoly& f, const std::string& eps_str, long t_opt,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    Rat eps = eps_str.empty() ? Rat(1) : rat_from_string(eps_str);
    long t = t_opt >= 0 ? t_opt : sos_pert_threshold(f, eps);
    SosPertCertificate cert = certify_sos_perturbed(f, eps, t);
    std::string report = sospert_report_json(cert, eps);
    if (!out_path.empty()) {
        std::ofstream o(out_path, std::ios::binary);
        if (!o) {
            err << "cannot write " << out_path << "\n";
            return 2;
        }
        o << report;
    }
    out << report;
    out << (cert.report.psd ? "PSD" : "NOT_PSD") << " (t = " << t
        << ", dimension " << cert.gram.index.size() << ")\n";
    return cert.report.psd ? 0 : 1;
}

int cmd_eval(const MvPoly& f, const std::string& point_str, std::ostream& out) {
    std::vector<Rat> p = parse_point(point_str);
    if (p.size() < f.nvars()) throw std::invalid_argument("point has too few coordinates");
    p.resize(f.nvars());
    out << rat_to_string(f.eval(p)) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact certificates of global polynomial nonnegativity"};
    app.require_subcommand(1);

    std::string poly, input_path, mode = "auto", out_path, cert_path, point, eps_str;
    uint64_t seed = 0;
    long k = 4;
    long t_opt = -1;

    auto add_poly_opts = [&](CLI::App* cmd) {
        cmd->add_option("--poly", poly, "inline polynomial, e.g. \"x1^2-4*x1+3\"");
        cmd->add_option("--input", input_path, "path to a polynomial file");
    };

    CLI::App* certify = app.add_subcommand("certify", "decide global nonnegativity");
    add_poly_opts(certify);
    certify->add_option("--mode", mode, "auto|pos|neg|nopert")->default_str("auto");
    certify->add_option("--seed", seed, "seed for all randomized steps");
    certify->add_option("--k", k, "witness/shift grid parameter");
    certify->add_option("--out", out_path, "certificate output path");

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate file");
    add_poly_opts(verify);
    verify->add_option("--cert", cert_path, "certificate path")->required();

    CLI::App* sospert = app.add_subcommand("sospert", "structured Gram SOS perturbation check");
    add_poly_opts(sospert);
    sospert->add_option("--epsilon", eps_str, "perturbation size p/q (default 1)");
    sospert->add_option("--t", t_opt, "perturbation power (default: computed threshold)");
    sospert->add_option("--out", out_path, "report output path");

    CLI::App* eval = app.add_subcommand("eval", "exact evaluation at a rational point");
    add_poly_opts(eval);
    eval->add_option("--point", point, "comma-separated rationals p/q")->required();

    std::vector<std::string> args(argv.begin(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        MvPoly f = load_polynomial(poly, input_path);
        if (certify->parsed()) return cmd_certify(f, mode, seed, k, out_path, out, err);
        if (verify->parsed()) return cmd_verify(f, cert_path, out, err);
        if (sospert->parsed()) return cmd_sospert(f, eps_str, t_opt, out_path, out, err);
        if (eval->parsed()) return cmd_eval(f, point, out);
        err << "no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace poscert
