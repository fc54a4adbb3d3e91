#include "s2inf/obstruction.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace s2inf {

namespace {

// (-1)^(j-1) (j-1), the signed derangement count of j points.
long derangement_weight(unsigned j) {
  auto const w = static_cast<long>(j) - 1;
  return j % 2 == 0 ? -w : w;
}

mpz_class pow_ui(unsigned long base, unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent); // 0^0 = 1
  return out;
}

// Signed counts by number of fixed points: result[f] = sum of sign(s) over
// s in S(m) with exactly f fixed points.
std::vector<long long> signed_counts_by_fixed_points(unsigned m) {
  std::vector<long long> counts(m + 1, 0);
  std::vector<unsigned> p(m);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<bool> seen(m);
  do {
    unsigned fixed = 0, cycles = 0;
    std::fill(seen.begin(), seen.end(), false);
    for (unsigned i = 0; i < m; ++i) {
      fixed += p[i] == i;
      if (seen[i])
        continue;
      ++cycles;
      for (auto x = i; !seen[x]; x = p[x])
        seen[x] = true;
    }
    counts[fixed] += (m - cycles) % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(p.begin(), p.end()));
  return counts;
}

} // namespace

mpfr_prec_t precision_cap_from_env() {
  if (char const *env = std::getenv(kPrecisionCapEnv)) {
    char *end = nullptr;
    auto const v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= kMinObstructionPrecision && v <= MPFR_PREC_MAX)
      return static_cast<mpfr_prec_t>(v);
  }
  return kDefaultPrecisionCap;
}

long long signed_derangement_closed_form(unsigned k) {
  if (k == 0)
    throw PreconditionError("signed_derangement: k must be positive");
  auto const v = static_cast<long long>(k) - 1;
  return k % 2 == 1 ? v : -v;
}

long long signed_derangement_bruteforce(unsigned k) {
  if (k == 0 || k > 10)
    throw PreconditionError("signed_derangement_bruteforce: 1 <= k <= 10");
  return signed_counts_by_fixed_points(k)[0];
}

long long signed_derangement_sum(unsigned k) {
  auto const closed = signed_derangement_closed_form(k);
  if (k <= 9 && signed_derangement_bruteforce(k) != closed)
    throw InconsistencyError("signed derangement sum: enumeration disagrees with (-1)^(k-1)(k-1)");
  return closed;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class stirling2_alternating(unsigned n, unsigned m) {
  mpz_class total = 0;
  for (unsigned j = 0; j <= m; ++j) {
    mpz_class const term = binomial(m, j) * pow_ui(m - j, n);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  auto const f = factorial(m);
  if (!mpz_divisible_p(total.get_mpz_t(), f.get_mpz_t()))
    throw InconsistencyError("stirling2: alternating sum is not divisible by m!");
  return total / f;
}

mpz_class stirling2_recurrence(unsigned n, unsigned m) {
  if (m > n)
    return 0;
  if (m == 0)
    return n == 0 ? 1 : 0;
  std::vector<mpz_class> row(m + 1, 0); // row[j] = S(i, j)
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = std::min(i, m); j >= 1; --j) {
      row[j] = j * row[j] + row[j - 1];
      if (j == 1)
        row[0] = 0;
    }
  return row[m];
}

mpz_class stirling2(unsigned n, unsigned m) {
  auto const a = stirling2_alternating(n, m);
  if (a != stirling2_recurrence(n, m))
    throw InconsistencyError("stirling2: alternating formula disagrees with the recurrence");
  return a;
}

mpz_class c_alpha_direct(unsigned n, unsigned m) {
  mpz_class total = 0;
  for (unsigned j = 0; j <= m; ++j)
    total += binomial(m, j) * derangement_weight(j) * pow_ui(m - j, n);
  return total;
}

mpz_class c_alpha_stirling(unsigned n, unsigned m) {
  if (m == 0)
    throw PreconditionError("c_alpha: m must be positive");
  return factorial(m) * (stirling2(n, m) + stirling2(n, m - 1));
}

mpz_class c_alpha_integer(unsigned n, unsigned m) {
  auto const direct = c_alpha_direct(n, m);
  auto const via_stirling = c_alpha_stirling(n, m);
  if (direct != via_stirling)
    throw InconsistencyError("C_" + std::to_string(n) + "(" + std::to_string(m) + "): direct sum " +
                             direct.get_str() + " != Stirling form " + via_stirling.get_str());
  return direct;
}

std::string ObstructionReport::value_string() const {
  if (exact)
    return exact->get_str();
  return enclosure ? enclosure->to_string() : "undetermined";
}

nlohmann::json ObstructionReport::to_json() const {
  nlohmann::json j{{"alpha", alpha}, {"m", m}, {"value", value_string()},
                   {"sign", to_string(sign)}, {"method", method}};
  if (method != "exact")
    j["precision"] = precision;
  return j;
}

std::string ObstructionReport::csv_row() const {
  auto const lo = exact ? exact->get_str() : enclosure->lo_string();
  auto const hi = exact ? exact->get_str() : enclosure->hi_string();
  return alpha + "," + std::to_string(m) + "," + lo + "," + hi + "," + to_string(sign) + "," +
         method;
}

RealInterval c_alpha_enclosure(AlphaParam const &alpha, unsigned m, mpfr_prec_t precision) {
  if (alpha.is_infinity())
    throw PreconditionError("c_alpha: alpha must be finite");
  if (m == 0)
    throw PreconditionError("c_alpha: m must be positive");
  if (sgn(alpha.value()) <= 0)
    throw PreconditionError("c_alpha_real: alpha must be positive");
  auto const e = alpha.enclosure(precision);
  auto total = RealInterval::from_long(0, precision);
  // j = m contributes 0^alpha = 0 for alpha > 0.
  for (unsigned j = 0; j < m; ++j) {
    auto const w = derangement_weight(j);
    if (w == 0)
      continue;
    total += pow_enclosure(mpq_class(m - j), e).scaled(binomial(m, j) * w);
  }
  return total;
}

ObstructionReport c_alpha_real(AlphaParam const &alpha, unsigned m, mpfr_prec_t precision,
                               mpfr_prec_t cap) {
  if (precision < kMinObstructionPrecision)
    throw PreconditionError("c_alpha_real: precision must be at least 64 bits");
  ObstructionReport report;
  report.alpha = alpha.to_string();
  report.m = m;
  report.method = "interval";
  for (auto prec = precision;; prec *= 2) {
    auto enclosure = c_alpha_enclosure(alpha, m, prec);
    report.sign = enclosure.sign();
    report.precision = prec;
    report.enclosure = std::move(enclosure);
    if (report.sign != Sign::undetermined || prec * 2 > cap)
      return report;
  }
}

ObstructionReport c_alpha(AlphaParam const &alpha, unsigned m, mpfr_prec_t cap) {
  if (!alpha.is_integer())
    return c_alpha_real(alpha, m, kMinObstructionPrecision, cap);
  ObstructionReport report;
  report.alpha = alpha.to_string();
  report.m = m;
  report.method = "exact";
  report.exact = c_alpha_integer(static_cast<unsigned>(alpha.integer_value()), m);
  auto const s = sgn(*report.exact);
  report.sign = s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  return report;
}

AltTraceResult alt_trace_bruteforce(AlphaParam const &alpha, unsigned m, mpfr_prec_t precision) {
  if (alpha.is_infinity())
    throw PreconditionError("alt_trace_bruteforce: alpha must be finite");
  if (m == 0 || m > 8)
    throw PreconditionError("alt_trace_bruteforce: 1 <= m <= 8");
  auto const counts = signed_counts_by_fixed_points(m);
  auto const m_factorial = factorial(m);

  AltTraceResult out;
  out.group_level = (m & (m - 1)) == 0;
  if (alpha.is_integer()) {
    auto const n = static_cast<unsigned>(alpha.integer_value());
    mpq_class sum = 0;
    for (unsigned f = 0; f <= m; ++f) {
      if (counts[f] == 0)
        continue;
      mpq_class const ratio(pow_ui(f, n), pow_ui(m, n));
      sum += mpq_class(mpz_class(std::to_string(counts[f]))) * ratio;
    }
    sum /= mpq_class(m_factorial);
    sum.canonicalize();
    out.exact = sum;
    mpq_class closed(c_alpha_integer(n, m), m_factorial * pow_ui(m, n));
    closed.canonicalize();
    out.closed_form_exact = closed;
    out.agrees = sum == closed;
    return out;
  }

  auto const e = alpha.enclosure(precision);
  auto sum = RealInterval::from_long(0, precision);
  for (unsigned f = 0; f <= m; ++f) {
    if (counts[f] == 0)
      continue;
    sum += pow_enclosure(mpq_class(f, m), e).scaled(mpz_class(std::to_string(counts[f])));
  }
  out.enclosure = sum.divided(m_factorial);
  out.closed_form_enclosure =
      (c_alpha_enclosure(alpha, m, precision) * pow_enclosure(mpq_class(1, m), e)).divided(m_factorial);
  out.agrees = out.enclosure->overlaps(*out.closed_form_enclosure);
  return out;
}

WitnessResult noninteger_witness(AlphaParam const &alpha, mpq_class const &threshold,
                                 mpfr_prec_t cap) {
  if (!alpha.is_real() || alpha.distance_to_integer() <= threshold)
    throw PreconditionError("noninteger_witness: alpha must be a real at distance > " +
                            threshold.get_str() + " from every integer");
  WitnessResult result;
  auto const last = static_cast<unsigned>(alpha.floor()) + 4;
  for (unsigned m = 2; m <= last; ++m) {
    auto report = c_alpha_real(alpha, m, kMinObstructionPrecision, cap);
    result.scanned.push_back(report);
    if (report.sign == Sign::negative) {
      result.m = m;
      result.report = std::move(report);
      return result;
    }
  }
  throw WitnessNotFound("no certified-negative C_alpha(m) for alpha = " + alpha.to_string() +
                            " with m <= " + std::to_string(last),
                        std::move(result.scanned));
}

} // namespace s2inf
