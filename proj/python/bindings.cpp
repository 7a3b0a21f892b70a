#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "poscert/certify.hpp"
#include "poscert/cli.hpp"
#include "poscert/sospert.hpp"

namespace py = pybind11;
using namespace poscert;

namespace {

MvPoly parse_auto(const std::string& text) {
    std::size_t n = scan_max_var_index(text);
    if (n == 0) n = 1;
    return parse_poly(text, n);
}

std::vector<Rat> point_from_strings(const std::vector<std::string>& xs) {
    std::vector<Rat> p;
    p.reserve(xs.size());
    for (const auto& s : xs) p.push_back(rat_from_string(s));
    return p;
}

py::dict report_to_dict(const VerificationReport& rep) {
    py::dict d;
    d["valid"] = rep.valid;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict item;
        item["name"] = c.name;
        item["passed"] = c.passed;
        item["detail"] = c.detail;
        checks.append(item);
    }
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_poscert, m) {
    m.doc() = "exact rational certificates of global polynomial nonnegativity";

    m.def("canonical_form", [](const std::string& text) { return to_string(parse_auto(text)); },
          py::arg("poly"), "parse and re-serialize a polynomial in canonical term order");

    m.def(
        "eval",
        [](const std::string& text, const std::vector<std::string>& point) {
            MvPoly f = parse_auto(text);
            return rat_to_string(f.eval(point_from_strings(point)));
        },
        py::arg("poly"), py::arg("point"), "exact evaluation; rationals as 'p/q' strings");

    m.def(
        "certify",
        [](const std::string& text, uint64_t seed, long k) {
            MvPoly f = parse_auto(text);
            Certificate cert = hj_sos_rur(f, seed, k);
            py::dict d;
            d["nonneg"] = cert.nonneg;
            d["pert_type"] = pert_type_name(cert.pert_type);
            if (cert.witness) {
                py::list pt;
                for (const auto& x : cert.witness->point) pt.append(rat_to_string(x));
                d["witness_point"] = pt;
                d["witness_value"] = rat_to_string(cert.witness->value);
            }
            d["certificate_json"] = certificate_to_json(cert);
            return d;
        },
        py::arg("poly"), py::arg("seed") = 0, py::arg("k") = 4,
        "run the staged certification pipeline");

    m.def(
        "verify",
        [](const std::string& text, const std::string& cert_json) {
            MvPoly f = parse_auto(text);
            Certificate cert = certificate_from_json(cert_json);
            return report_to_dict(verify_certificate(f, cert));
        },
        py::arg("poly"), py::arg("certificate_json"),
        "verify a certificate against a polynomial");

    m.def(
        "sos_pert_threshold",
        [](const std::string& text, const std::string& eps) {
            return sos_pert_threshold(parse_auto(text), rat_from_string(eps));
        },
        py::arg("poly"), py::arg("epsilon") = std::string("1"));

    m.def(
        "sospert",
        [](const std::string& text, const std::string& eps_s, long t) {
            MvPoly f = parse_auto(text);
            Rat eps = rat_from_string(eps_s);
            long tt = t >= 0 ? t : sos_pert_threshold(f, eps);
            SosPertCertificate cert = certify_sos_perturbed(f, eps, tt);
            py::dict d;
            d["psd"] = cert.report.psd;
            d["t"] = tt;
            d["dimension"] = cert.gram.index.size();
            d["report_json"] = sospert_report_json(cert, eps);
            return d;
        },
        py::arg("poly"), py::arg("epsilon") = std::string("1"), py::arg("t") = -1,
        "structured Gram-matrix SOS check of f + eps (1+||X||^2)^t");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "invoke the command-line interface in-process");
}
