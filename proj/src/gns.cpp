#include "s2inf/gns.hpp"

#include <algorithm>

#include "s2inf/error.hpp"

namespace s2inf {

namespace {

constexpr unsigned kMaxRepLevel = 10; // 4^10 basis points

bool less_or_equal(CharValue const &a, CharValue const &b) {
  auto const *da = std::get_if<Dyadic>(&a);
  auto const *db = std::get_if<Dyadic>(&b);
  if (da && db)
    return *da <= *db;
  auto const ia = to_interval(a, 128);
  auto const ib = to_interval(b, 128);
  return mpfr_lessequal_p(ia.lo().get(), ib.hi().get()) != 0;
}

IdentityCheck make_check(std::string name, CharValue const &lhs, CharValue const &rhs) {
  return {std::move(name), to_string(lhs), to_string(rhs), agree(lhs, rhs)};
}

} // namespace

Dyadic inner(WeightedFunction const &f, WeightedFunction const &g) {
  if (f.level != g.level || f.values.size() != g.values.size())
    throw LevelMismatch("inner: functions live on different truncations");
  mpz_class total = 0;
  for (std::size_t p = 0; p < f.values.size(); ++p)
    total += mpz_class(f.values[p]) * g.values[p];
  return {total, f.level};
}

RepMatrix::RepMatrix(unsigned level, std::vector<std::uint64_t> target)
    : level_(level), target_(std::move(target)) {
  if (target_.size() != (std::uint64_t{1} << (2 * level)))
    throw PreconditionError("RepMatrix: target table must have 4^level entries");
}

WeightedFunction RepMatrix::apply(WeightedFunction const &f) const {
  if (f.level != level_)
    throw LevelMismatch("RepMatrix::apply: function at a different level");
  WeightedFunction out{level_, std::vector<long>(f.values.size(), 0)};
  for (std::size_t p = 0; p < target_.size(); ++p)
    out.values[target_[p]] = f.values[p];
  return out;
}

bool RepMatrix::is_identity() const {
  for (std::size_t p = 0; p < target_.size(); ++p)
    if (target_[p] != p)
      return false;
  return true;
}

std::uint64_t RepMatrix::order() const {
  auto power = *this;
  std::uint64_t k = 1;
  while (!power.is_identity()) {
    power = power * *this;
    ++k;
  }
  return k;
}

RepMatrix operator*(RepMatrix const &a, RepMatrix const &b) {
  if (a.level_ != b.level_)
    throw LevelMismatch("RepMatrix product: levels differ");
  std::vector<std::uint64_t> target(a.target_.size());
  for (std::size_t p = 0; p < target.size(); ++p)
    target[p] = a.target_[b.target_[p]];
  return {a.level_, std::move(target)};
}

RepMatrix rep_matrix(CubePermutation const &s) {
  if (s.level() > kMaxRepLevel)
    throw CapExceeded("rep_matrix: level too large for an explicit 4^n matrix");
  TruncatedRep const rep{s.level()};
  std::vector<std::uint64_t> target(rep.dimension());
  auto const n = std::uint64_t{1} << s.level();
  for (std::uint64_t y = 0; y < n; ++y)
    for (std::uint64_t x = 0; x < n; ++x)
      target[rep.index(x, y)] = rep.index(s(x), y);
  return {s.level(), std::move(target)};
}

WeightedFunction xi_vector(unsigned level) {
  TruncatedRep const rep{level};
  WeightedFunction xi{level, std::vector<long>(rep.dimension(), 0)};
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << level); ++a)
    xi.values[rep.index(a, a)] = 1;
  return xi;
}

Dyadic matrix_character(CubePermutation const &s) {
  auto const xi = xi_vector(s.level());
  return inner(rep_matrix(s).apply(xi), xi);
}

WeightedFunction lift_function(WeightedFunction const &f) {
  TruncatedRep const low{f.level};
  TruncatedRep const high{f.level + 1};
  auto const n = std::uint64_t{1} << f.level;
  WeightedFunction out{f.level + 1, std::vector<long>(high.dimension(), 0)};
  for (std::uint64_t b = 0; b < n; ++b)
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t c = 0; c < 2; ++c)
        out.values[high.index(a | (c << f.level), b | (c << f.level))] =
            f.values[low.index(a, b)];
  return out;
}

Dyadic tensor_character(CubePermutation const &s, unsigned k, TensorMode mode,
                        Limits const &limits) {
  if (k == 0)
    throw PreconditionError("tensor_character: k must be positive");
  auto const product = pow(matrix_character(s), k);
  if (mode == TensorMode::product)
    return product;

  auto const factor = TruncatedRep{s.level()}.dimension();
  std::uint64_t dim = 1;
  bool fits = true;
  for (unsigned i = 0; i < k && fits; ++i) {
    if (dim > limits.max_tensor_dimension / factor)
      fits = false;
    else
      dim *= factor;
  }
  if (!fits) {
    if (mode == TensorMode::explicit_build)
      throw CapExceeded("tensor_character: explicit tensor dimension exceeds the cap");
    return product;
  }

  // Explicit build: the permutation of the k-fold product basis, the vector
  // xi^{(x)k}, and the gamma^{(x)k} weighted inner product.
  auto const rep = rep_matrix(s);
  auto const xi = xi_vector(s.level());
  std::vector<std::uint64_t> target(dim);
  std::vector<long> xi_k(dim);
  for (std::uint64_t p = 0; p < dim; ++p) {
    std::uint64_t rest = p, image = 0, scale = 1;
    long value = 1;
    for (unsigned i = 0; i < k; ++i) {
      auto const digit = rest % factor;
      rest /= factor;
      image += rep.target()[digit] * scale;
      scale *= factor;
      value *= xi.values[digit];
    }
    target[p] = image;
    xi_k[p] = value;
  }
  std::vector<long> moved(dim, 0);
  for (std::uint64_t p = 0; p < dim; ++p)
    moved[target[p]] = xi_k[p];
  mpz_class total = 0;
  for (std::uint64_t p = 0; p < dim; ++p)
    total += moved[p] * xi_k[p];
  Dyadic const explicit_value(total, std::uint64_t{s.level()} * k);

  if (mode == TensorMode::automatic && explicit_value != product)
    throw InconsistencyError("tensor_character: explicit tensor " + explicit_value.to_string() +
                             " != product " + product.to_string());
  return explicit_value;
}

std::vector<CharValue> stabilization_scan(AlphaParam const &alpha, CubePermutation const &g1,
                                          CubePermutation const &g2, NiceSet const &a,
                                          std::vector<unsigned> const &m_range) {
  auto const base = std::max(g1.level(), g2.level());
  std::vector<CharValue> out;
  for (auto m : m_range) {
    if (m <= base || m <= a.level())
      throw PreconditionError("stabilization_scan: every m must exceed the levels of g1, g2, A");
    auto const h1 = inverse(embed_head(g1, m));
    auto const h2 = embed_head(g2, m);
    out.push_back(char_eval(alpha, compose(compose(h1, flip_perm(a, m)), h2)));
  }
  return out;
}

bool is_constant(std::vector<CharValue> const &values) {
  return std::all_of(values.begin(), values.end(),
                     [&](CharValue const &v) { return agree(v, values.front()); });
}

bool ProjectionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.passed; });
}

nlohmann::json ProjectionReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (auto const &c : checks)
    out.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"passed", c.passed}});
  return {{"checks", out}, {"all_passed", all_passed()}};
}

ProjectionReport projection_identity_checks(AlphaParam const &alpha, NiceSet const &a,
                                            NiceSet const &b, NiceSet const &c, NiceSet const &d) {
  ProjectionReport report;
  auto const mu_pow = [&](NiceSet const &x) { return power_of_measure(alpha, measure(x)); };

  // Intersection: m1 > m2 > m3 above both sets.
  auto const top = std::max(a.level(), b.level());
  auto const m3 = top + 1, m2 = top + 2, m1 = top + 3;
  auto const ab = nice_intersect(a, b);
  auto const fa = flip_perm(a, m1);
  auto const fb = embed_head(flip_perm(b, m2), m1);
  auto const fab3 = embed_head(flip_perm(ab, m3), m1);
  auto const two = compose(fa, fb);
  auto const three = compose(two, fab3);
  auto const single = flip_perm(ab, m1);
  report.checks.push_back(make_check("intersection", char_eval(alpha, two), mu_pow(ab)));
  report.checks.push_back({"intersection_conjugacy", cycle_type(three).to_string(),
                           cycle_type(two).to_string() + " " + cycle_type(single).to_string(),
                           cycle_type(three) == cycle_type(two) &&
                               cycle_type(two) == cycle_type(single)});

  // Traces of single projections.
  report.checks.push_back(make_check("trace_A", char_eval(alpha, flip_perm(a, a.level() + 1)), mu_pow(a)));
  report.checks.push_back(make_check("trace_B", char_eval(alpha, flip_perm(b, b.level() + 1)), mu_pow(b)));

  // Product sets.
  auto const n = c.level();
  auto const md = d.level();
  auto const cd = nice_product(c, d);
  auto const direct = flip_perm(cd, n + md + 1);
  report.checks.push_back(make_check("product", char_eval(alpha, direct), mu_pow(c) * mu_pow(d)));

  auto const split_head = embed_head(flip_perm(c, n + 1), n + md + 2);
  auto const split_tail = flip_perm(nice_product(NiceSet::full(n + 1), d), n + md + 2);
  auto const split_tail_alt = embed_tail(flip_perm(d, md + 1), n + 1);
  auto const split = compose(split_head, split_tail);
  auto const lifted_direct = embed_head(direct, n + md + 2);
  report.checks.push_back({"product_split_conjugacy", cycle_type(split).to_string(),
                           cycle_type(lifted_direct).to_string(),
                           split_tail == split_tail_alt &&
                               cycle_type(split) == cycle_type(lifted_direct)});
  report.checks.push_back(make_check(
      "product_split_multiplicative", char_eval(alpha, split),
      char_eval(alpha, flip_perm(c, n + 1)) * char_eval(alpha, flip_perm(d, md + 1))));

  // Monotonicity in the measure.
  auto const level = std::max(a.level(), b.level()) + 1;
  auto const ta = char_eval(alpha, flip_perm(a, level));
  auto const tb = char_eval(alpha, flip_perm(b, level));
  bool const monotone =
      measure(a) <= measure(b) ? less_or_equal(ta, tb) : less_or_equal(tb, ta);
  report.checks.push_back({"monotonicity", to_string(ta), to_string(tb), monotone});
  return report;
}

} // namespace s2inf
