#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poscert/matrix.hpp"
#include "poscert/mvpoly.hpp"

namespace poscert {

// Symmetric Gram matrix indexed by the degree-t monomials in n+1 variables
// (X0 first), ordered X0^t, X0^(t-1)X1, ..., X0^(t-1)Xn, then the rest in
// descending lex. [m_t]^T G [m_t] re-expands to a homogeneous degree-2t
// polynomial.
struct GramMatrix {
    long t = 0;
    std::size_t nvars_h = 0;  // n+1
    std::vector<Mono> index;
    QMat entries;
};

// Degree-t monomial index in the proof's ordering.
std::vector<Mono> gram_index(std::size_t n, long t);

// [m_t]^T G [m_t] as a polynomial in n+1 variables.
MvPoly gram_expand(const GramMatrix& g);

// Diagonal Gram matrix of (X0^2 + ||X||^2)^t: multinomial entries.
GramMatrix build_At(std::size_t n, long t);

// Gram matrix of X0^(2(t-d)) f^h with f of even degree 2d: f(0) in the
// (X0^t, X0^t) slot, half-gradient first row/column, the remaining
// coefficients split deterministically into the inner block.
GramMatrix build_Ft(const MvPoly& f, long t);

// max{d, ceil((1/eps)(||f||_1 + ||grad f(0)||_2^2 / (f(0)+eps)))} for f of
// even degree 2d; requires f(0) >= 0 and eps > 0.
long sos_pert_threshold(const MvPoly& f, const Rat& epsilon);

struct PsdReport {
    bool psd = false;
    std::vector<Rat> pivots;
    std::optional<std::vector<Rat>> failure_vector;  // v with v^T G v < 0
    Rat failure_value;                               // that v^T G v
};

// Exact LDL^T with max-diagonal symmetric pivoting; positive semidefinite
// iff every pivot is nonnegative and elimination steps with no positive
// diagonal left only meet an all-zero block.
PsdReport psd_check(const GramMatrix& g);

struct SosPertCertificate {
    GramMatrix gram;
    PsdReport report;
    MvPoly expanded;  // the certified homogeneous polynomial
    Rat schur_slack;  // t*eps - ||Ftilde||_1 - ||v||^2/(f0+eps), reported only
};

// G_t = F_t + eps A_t with the exact re-expansion identity checked; psd
// constitutes an SOS certificate for f + eps (1+||X||^2)^t.
SosPertCertificate certify_sos_perturbed(const MvPoly& f, const Rat& epsilon, long t);

// theta_t = sum_{k<=t} sum_i X_i^(2k) / k!, with the normalizer
// s_t = sum_{k<=t} 1/k! and ||h_t||_1 = (n+1)^t exposed alongside.
MvPoly lasserre_theta(std::size_t n, long t);
Rat theta_normalizer(long t);                       // s_t
MvPoly lasserre_ht(std::size_t n, long t);          // (1 + ||X||^2)^t
Int ht_one_norm(std::size_t n, long t);             // (n+1)^t

// Report format used by the CLI and bindings.
std::string sospert_report_json(const SosPertCertificate& cert, const Rat& epsilon);

// FNV-1a over the canonical serialization, used as the re-expansion
// checksum in reports.
uint64_t poly_checksum(const MvPoly& p);

}  // namespace poscert
