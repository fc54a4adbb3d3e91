#include "s2inf/characters.hpp"

#include <algorithm>

#include "s2inf/error.hpp"
#include "s2inf/psd.hpp"

namespace s2inf {

namespace {

std::pair<CubePermutation, CubePermutation> lift_pair(CubePermutation const &a,
                                                      CubePermutation const &b) {
  auto const level = std::max(a.level(), b.level());
  return {embed_head(a, level), embed_head(b, level)};
}

} // namespace

std::string to_string(CharValue const &v) {
  if (auto const *d = std::get_if<Dyadic>(&v))
    return d->to_string();
  return std::get<RealInterval>(v).to_string();
}

RealInterval to_interval(CharValue const &v, mpfr_prec_t precision) {
  if (auto const *d = std::get_if<Dyadic>(&v))
    return RealInterval::exact(d->to_mpq(), precision);
  return std::get<RealInterval>(v);
}

bool agree(CharValue const &a, CharValue const &b) {
  auto const *da = std::get_if<Dyadic>(&a);
  auto const *db = std::get_if<Dyadic>(&b);
  if (da && db)
    return *da == *db;
  auto const prec = std::max(to_interval(a, 64).precision(), to_interval(b, 64).precision());
  return to_interval(a, prec).overlaps(to_interval(b, prec));
}

CharValue operator*(CharValue const &a, CharValue const &b) {
  auto const *da = std::get_if<Dyadic>(&a);
  auto const *db = std::get_if<Dyadic>(&b);
  if (da && db)
    return *da * *db;
  auto const prec = std::max(to_interval(a, 64).precision(), to_interval(b, 64).precision());
  return to_interval(a, prec) * to_interval(b, prec);
}

CharValue power_of_measure(AlphaParam const &alpha, Dyadic const &mu, mpfr_prec_t precision) {
  if (mu < Dyadic(0) || mu > Dyadic(1))
    throw PreconditionError("measure must lie in [0, 1]");
  switch (alpha.kind()) {
  case AlphaParam::Kind::infinity:
    return Dyadic(mu.is_one() ? 1 : 0);
  case AlphaParam::Kind::integer:
    return pow(mu, alpha.integer_value()); // pow(0, 0) == 1
  case AlphaParam::Kind::real:
    break;
  }
  return pow_enclosure(mu.to_mpq(), alpha.enclosure(precision));
}

CharValue char_eval(AlphaParam const &alpha, CubePermutation const &s, mpfr_prec_t precision) {
  return power_of_measure(alpha, fixed_fraction(s), precision);
}

bool centrality_check(AlphaParam const &alpha, CubePermutation const &g1, CubePermutation const &g2) {
  auto const [a, b] = lift_pair(g1, g2);
  return agree(char_eval(alpha, compose(a, b)), char_eval(alpha, compose(b, a)));
}

bool multiplicativity_check(AlphaParam const &alpha, CubePermutation const &s1,
                            CubePermutation const &s2) {
  auto const n = s1.level();
  auto const tail = embed_tail(s2, n);
  auto const product = compose(embed_head(s1, tail.level()), tail);
  return agree(char_eval(alpha, product), char_eval(alpha, s1) * char_eval(alpha, s2));
}

bool fixproj_identity_check(AlphaParam const &alpha, CubePermutation const &s, NiceSet const &a,
                            unsigned m) {
  if (m <= s.level() || m <= a.level())
    throw PreconditionError("fixproj_identity_check: m must exceed the levels of s and A");
  auto const common = std::max(s.level(), a.level());
  auto const lifted_s = embed_head(s, common);
  auto const lifted_a = a.lift(common);
  for (std::uint64_t x = 0; x < lifted_s.size(); ++x)
    if (lifted_a.contains(x) && lifted_s(x) != x)
      throw PreconditionError("fixproj_identity_check: A is not contained in Fix(s)");
  auto const composite = compose(embed_head(s, m), flip_perm(a, m));
  return agree(char_eval(alpha, composite), power_of_measure(alpha, measure(a)));
}

std::string to_string(GramVerdict v) {
  switch (v) {
  case GramVerdict::psd:
    return "psd";
  case GramVerdict::not_psd:
    return "not_psd";
  case GramVerdict::undetermined:
    break;
  }
  return "undetermined";
}

nlohmann::json GramReport::to_json() const {
  nlohmann::json j;
  j["alpha"] = alpha;
  j["elements"] = elements;
  j["matrix"] = matrix;
  j["verdict"] = to_string(verdict);
  j["witness"] = witness;
  j["witness_value"] = witness_value;
  j["method"] = method;
  if (method != "exact")
    j["tolerance"] = tolerance;
  return j;
}

GramReport gram_matrix(AlphaParam const &alpha, std::vector<CubePermutation> const &elements,
                       WitnessMode witness_mode) {
  if (elements.empty())
    throw PreconditionError("gram_matrix: element list is empty");
  for (auto const &g : elements)
    if (g.level() != elements.front().level())
      throw LevelMismatch("gram_matrix: elements must be lifted to a common level");

  auto const n = elements.size();
  GramReport report;
  report.alpha = alpha.to_string();
  for (auto const &g : elements)
    report.elements.push_back(g.to_cycle_string());

  std::vector<CubePermutation> inverses;
  inverses.reserve(n);
  for (auto const &g : elements)
    inverses.push_back(inverse(g));

  SquareMatrix<CharValue> values(n);
  report.matrix.assign(n, std::vector<std::string>(n));
  for (std::size_t i = 0; i < n; ++i) {
    values[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      values[i].push_back(char_eval(alpha, compose(elements[i], inverses[j])));
      report.matrix[i][j] = to_string(values[i][j]);
    }
  }

  std::vector<int> signs;
  for (auto const &g : elements)
    signs.push_back(g.sign());

  if (!alpha.is_real()) {
    SquareMatrix<mpq_class> exact(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        exact[i][j] = std::get<Dyadic>(values[i][j]).to_mpq();
    report.method = "exact";
    if (witness_mode == WitnessMode::signs) {
      std::vector<mpq_class> v(signs.begin(), signs.end());
      auto const q = quadratic_form(exact, v);
      if (sgn(q) < 0) {
        report.verdict = GramVerdict::not_psd;
        for (auto const &x : v)
          report.witness.push_back(x.get_str());
        report.witness_value = q.get_str();
        return report;
      }
    }
    auto const result = exact_psd(exact);
    report.verdict = result.psd ? GramVerdict::psd : GramVerdict::not_psd;
    for (auto const &x : result.witness)
      report.witness.push_back(x.get_str());
    if (!result.psd)
      report.witness_value = result.witness_value.get_str();
    return report;
  }

  // Real alpha: certify any claimed negative direction with interval
  // arithmetic on the enclosures of the entries.
  auto const prec = std::get<RealInterval>(values[0][0]).precision();
  auto const interval_form = [&](std::vector<mpq_class> const &v) {
    RealInterval total = RealInterval::from_long(0, prec);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == 0)
          continue;
        total += std::get<RealInterval>(values[i][j]) * RealInterval::exact(v[i] * v[j], prec);
      }
    }
    return total;
  };

  if (witness_mode == WitnessMode::signs) {
    std::vector<mpq_class> v(signs.begin(), signs.end());
    auto const q = interval_form(v);
    if (q.sign() == Sign::negative) {
      report.verdict = GramVerdict::not_psd;
      report.method = "interval-witness";
      for (auto const &x : v)
        report.witness.push_back(x.get_str());
      report.witness_value = q.to_string();
      return report;
    }
  }

  SquareMatrix<double> approx(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      approx[i][j] = std::get<RealInterval>(values[i][j]).midpoint();
  // Midpoints of identical enclosures are identical, so approx is symmetric.
  auto const result = floating_psd(approx);
  report.method = "floating";
  report.tolerance = kDefaultRelativeTolerance;
  if (result.psd) {
    report.verdict = GramVerdict::psd;
    return report;
  }
  std::vector<mpq_class> v;
  for (double x : result.witness) {
    v.emplace_back(x); // doubles convert exactly
    report.witness.push_back(v.back().get_str());
  }
  auto const q = interval_form(v);
  report.witness_value = q.to_string();
  report.verdict = q.sign() == Sign::negative ? GramVerdict::not_psd : GramVerdict::undetermined;
  return report;
}

} // namespace s2inf
