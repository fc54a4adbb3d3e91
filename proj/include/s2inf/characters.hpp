#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "s2inf/alpha.hpp"
#include "s2inf/dyadic.hpp"
#include "s2inf/perm.hpp"
#include "s2inf/real_interval.hpp"

namespace s2inf {

/// Value of a character: exact for integer and infinite alpha, an enclosing
/// interval for real alpha.
using CharValue = std::variant<Dyadic, RealInterval>;

inline constexpr mpfr_prec_t kDefaultCharPrecision = 128;

std::string to_string(CharValue const &v);
/// Exact equality for two exact values, enclosure overlap otherwise.
bool agree(CharValue const &a, CharValue const &b);
CharValue operator*(CharValue const &a, CharValue const &b);
RealInterval to_interval(CharValue const &v, mpfr_prec_t precision);

/// mu^alpha for a measure mu in [0, 1], with 0^0 = 1, x^inf = 0 for x < 1,
/// and 1^inf = 1.
CharValue power_of_measure(AlphaParam const &alpha, Dyadic const &mu,
                           mpfr_prec_t precision = kDefaultCharPrecision);

/// chi_alpha(s) = mu(Fix(s))^alpha.
CharValue char_eval(AlphaParam const &alpha, CubePermutation const &s,
                    mpfr_prec_t precision = kDefaultCharPrecision);

/// chi(g1 g2) == chi(g2 g1). Inputs are lifted to a common level.
bool centrality_check(AlphaParam const &alpha, CubePermutation const &g1, CubePermutation const &g2);

/// chi(s1 * i_n(s2)) == chi(s1) chi(s2) where n = s1.level() and s2 is
/// placed on the tail coordinates.
bool multiplicativity_check(AlphaParam const &alpha, CubePermutation const &s1,
                            CubePermutation const &s2);

/// chi(s * flip_perm(A, m)) == mu(A)^alpha. Requires A inside Fix(s) and
/// m > max(s.level(), A.level()).
bool fixproj_identity_check(AlphaParam const &alpha, CubePermutation const &s, NiceSet const &a,
                            unsigned m);

enum class GramVerdict { psd, not_psd, undetermined };
std::string to_string(GramVerdict v);

enum class WitnessMode {
  /// Witness from the elimination.
  elimination,
  /// Try v_i = sign(g_i) first; fall back to elimination if it does not
  /// certify a negative value.
  signs,
};

struct GramReport {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> matrix;
  GramVerdict verdict = GramVerdict::psd;
  std::vector<std::string> witness;
  std::string witness_value;
  /// "exact", "floating", or "interval-witness".
  std::string method;
  double tolerance = 0.0;
  std::string alpha;

  nlohmann::json to_json() const;
};

/// M[i][j] = chi(g_i g_j^-1) and a PSD decision: exact elimination for
/// integer or infinite alpha, floating elimination with relative tolerance
/// 2^-40 for real alpha. All elements must share one level.
GramReport gram_matrix(AlphaParam const &alpha, std::vector<CubePermutation> const &elements,
                       WitnessMode witness_mode = WitnessMode::elimination);

} // namespace s2inf
