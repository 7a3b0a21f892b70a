#pragma once

#include <optional>
#include <string>
#include <variant>

#include "poscert/bounds.hpp"
#include "poscert/hjpert.hpp"
#include "poscert/rur.hpp"
#include "poscert/stereo.hpp"
#include "poscert/unisos.hpp"

namespace poscert {

enum class PertType { NOPERT, NEGPERT, POSPERT };

std::string pert_type_name(PertType t);

// Full certificate for the input polynomial. When nonneg, the identity
//   (R0')^D subject = sum_j w_j s_j(T)^2 + sum_i (R0' X_i - R_i) q_i
// holds exactly in Q[T, X1..Xn] with D = deg subject, subject being the
// stereographic transform of the (possibly shifted) input composed with
// the declared perturbation at the declared lambda. Otherwise a rational
// witness point with f(point) < 0 is carried instead.
struct Certificate {
    bool nonneg = false;
    PertType pert_type = PertType::NOPERT;
    std::optional<Rat> lambda;
    std::optional<Rur> rur;
    std::optional<WeightedSos> sos;
    std::vector<MvPoly> quotients;  // in Q[T, X1..Xn], T = variable 0
    std::optional<Witness> witness;
    SizeProfile profile;            // profile of the shifted input
    MvPoly subject;                 // certified polynomial
    MvPoly input;                   // original f
    std::vector<Int> shift;         // empty when no translation was applied
};

struct FailSignal {
    std::string reason;
    long last_gamma = 0;
};

struct NegRunStats {
    Int rejected_lambdas = 0;  // draws skipped at the zero-dim check
    long final_gamma = 0;
    long sos_rur_runs = 0;
};

// Inner routine: certificate data for a polynomial already satisfying the
// coercivity contract, or a point where it is negative, or the
// not-radical signal (caller reroutes to a perturbed polynomial).
struct SosRurResult {
    bool nonneg = false;
    Rur rur;
    WeightedSos sos;
    std::vector<MvPoly> quotients;
    std::vector<Rat> bad_point;  // g(bad_point) < 0 when !nonneg
};

std::variant<SosRurResult, NotRadicalSignal> sos_rur(const MvPoly& g, uint64_t seed);

// Positive Hanzon-Jibetean stage: always decisive for integer f of even
// degree with f(0) > 0.
Certificate hj_sos_pos(const MvPoly& f, uint64_t seed);

// Negative stage: certifies strict positivity of f or fails.
std::variant<Certificate, FailSignal> hj_sos_neg(const MvPoly& f, uint64_t seed, long k = 4,
                                                 NegRunStats* stats = nullptr);

// Staged pipeline: unperturbed transform, then the negative stage, then
// the positive stage. Handles f(0) <= 0 by translation.
Certificate hj_sos_rur(const MvPoly& f, uint64_t seed, long k = 4);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    bool valid = false;
    std::vector<CheckItem> checks;
};

// Independent verification: re-derives everything from f and the
// certificate content, never from prover state.
VerificationReport verify_certificate(const MvPoly& f, const Certificate& cert);

// ---- certificate file format (JSON) ----

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

// Quotient-ring polynomial over (T, X1..Xn) from a univariate polynomial
// in T (variable index 0 of an (n+1)-variable ring).
MvPoly uv_to_mv(const UvPoly& p, std::size_t nvars_total);

// The exact Eq-style residual: (R0')^D subject - sum w s^2 - sum (R0' Xi - Ri) q_i.
MvPoly certificate_residual(const Certificate& cert);

}  // namespace poscert
