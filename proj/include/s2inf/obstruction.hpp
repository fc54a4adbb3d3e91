#pragma once

// The integrality obstruction. For m points,
//
//   C_alpha(m) = sum_{j=0}^{m} binom(m, j) (-1)^{j-1} (j-1) (m-j)^alpha
//
// equals m^alpha * sum_{s in S(m)} sign(s) (|Fix(s)|/m)^alpha, the
// (unnormalized) trace of the antisymmetrizer; it must be non-negative for a
// genuine character. For integer alpha = n it equals m!(S(n,m) + S(n,m-1)).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

#include "s2inf/alpha.hpp"
#include "s2inf/error.hpp"
#include "s2inf/real_interval.hpp"

namespace s2inf {

inline constexpr mpfr_prec_t kMinObstructionPrecision = 64;
inline constexpr mpfr_prec_t kDefaultPrecisionCap = 4096;
/// Environment variable overriding the precision cap.
inline constexpr char const *kPrecisionCapEnv = "S2INF_PRECISION_CAP";

/// kDefaultPrecisionCap unless S2INF_PRECISION_CAP holds a valid value.
mpfr_prec_t precision_cap_from_env();

/// (-1)^(k-1) (k-1): the signed count of derangements of k points.
long long signed_derangement_closed_form(unsigned k);
/// Literal enumeration of the derangements of S(k). k <= 10.
long long signed_derangement_bruteforce(unsigned k);
/// Closed form, cross-checked against enumeration for k <= 9.
long long signed_derangement_sum(unsigned k);

mpz_class binomial(unsigned n, unsigned k);
mpz_class factorial(unsigned n);

/// S(n, m) from the alternating formula (1/m!) sum binom(m,j) (-1)^j (m-j)^n.
mpz_class stirling2_alternating(unsigned n, unsigned m);
/// S(n, m) from S(n,m) = m S(n-1,m) + S(n-1,m-1).
mpz_class stirling2_recurrence(unsigned n, unsigned m);
/// Alternating formula, cross-checked against the recurrence.
mpz_class stirling2(unsigned n, unsigned m);

/// Direct alternating sum for integer alpha (with 0^0 = 1).
mpz_class c_alpha_direct(unsigned n, unsigned m);
/// m!(S(n,m) + S(n,m-1)).
mpz_class c_alpha_stirling(unsigned n, unsigned m);
/// Both routes; throws InconsistencyError if they disagree.
mpz_class c_alpha_integer(unsigned n, unsigned m);

struct ObstructionReport {
  std::string alpha;
  unsigned m = 0;
  std::optional<mpz_class> exact;
  std::optional<RealInterval> enclosure;
  Sign sign = Sign::undetermined;
  /// "exact" or "interval".
  std::string method;
  mpfr_prec_t precision = 0;

  /// Exact integer, or the decimal enclosure "[lo, hi]".
  std::string value_string() const;
  nlohmann::json to_json() const;
  /// alpha,m,value_lo,value_hi,sign,method
  std::string csv_row() const;
};

inline constexpr char const *kObstructionCsvHeader = "alpha,m,value_lo,value_hi,sign,method";

/// Enclosure of C_alpha(m) for real alpha > 0, doubling the working
/// precision from `precision` until the sign is certified or `cap` is
/// reached. An uncertified result reports Sign::undetermined.
ObstructionReport c_alpha_real(AlphaParam const &alpha, unsigned m,
                               mpfr_prec_t precision = kMinObstructionPrecision,
                               mpfr_prec_t cap = kDefaultPrecisionCap);

/// Single enclosure of C_alpha(m) at a fixed working precision.
RealInterval c_alpha_enclosure(AlphaParam const &alpha, unsigned m, mpfr_prec_t precision);

/// Dispatches on the alpha kind: exact for integers, c_alpha_real for reals.
ObstructionReport c_alpha(AlphaParam const &alpha, unsigned m,
                          mpfr_prec_t cap = kDefaultPrecisionCap);

struct AltTraceResult {
  /// (1/m!) sum_{s in S(m)} sign(s) (|Fix(s)|/m)^alpha by enumeration.
  std::optional<mpq_class> exact;
  std::optional<RealInterval> enclosure;
  /// C_alpha(m) / (m! m^alpha).
  std::optional<mpq_class> closed_form_exact;
  std::optional<RealInterval> closed_form_enclosure;
  /// Exact equality, or overlap of the two enclosures.
  bool agrees = false;
  /// m is a power of two, so the value is a trace of an S(2^n) projection.
  bool group_level = false;
};

/// Literal enumeration over S(m), m <= 8. alpha finite.
AltTraceResult alt_trace_bruteforce(AlphaParam const &alpha, unsigned m,
                                    mpfr_prec_t precision = 128);

inline const mpq_class kDefaultNonIntegerThreshold = mpq_class(1, 1 << 20);

/// No certified-negative C_alpha(m) in the scanned range: the negativity
/// claim is falsified as implemented (or the precision cap is too low).
class WitnessNotFound : public InconsistencyError {
public:
  WitnessNotFound(std::string const &message, std::vector<ObstructionReport> scanned)
      : InconsistencyError(message), scanned_(std::move(scanned)) {}
  std::vector<ObstructionReport> const &scanned() const { return scanned_; }

private:
  std::vector<ObstructionReport> scanned_;
};

struct WitnessResult {
  unsigned m = 0;
  ObstructionReport report;
  /// Every report scanned, in order of m.
  std::vector<ObstructionReport> scanned;
};

/// Scans m = 2 .. floor(alpha) + 4 for the first certified-negative
/// C_alpha(m). Throws WitnessNotFound if none is found.
WitnessResult noninteger_witness(AlphaParam const &alpha,
                                 mpq_class const &threshold = kDefaultNonIntegerThreshold,
                                 mpfr_prec_t cap = kDefaultPrecisionCap);

} // namespace s2inf
