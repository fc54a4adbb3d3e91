#include "s2inf/appendix.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "s2inf/error.hpp"

namespace s2inf {

namespace {

using Images = std::vector<unsigned>;

Images identity_images(unsigned degree) {
  Images p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

// (c_0, c_1, ..., c_{len-1}) sending c_i to c_{i+1}, given 1-based points.
Images cycle_1based(unsigned degree, std::vector<unsigned> const &points) {
  auto p = identity_images(degree);
  for (std::size_t i = 0; i < points.size(); ++i)
    p[points[i] - 1] = points[(i + 1) % points.size()] - 1;
  return p;
}

// (p q)(x) = p(q(x)).
Images compose_images(Images const &p, Images const &q) {
  Images out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    out[x] = p[q[x]];
  return out;
}

Images inverse_images(Images const &p) {
  Images out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    out[p[x]] = static_cast<unsigned>(x);
  return out;
}

// Product of 1-based transpositions written left to right; the rightmost
// factor acts first.
Images transposition_product(unsigned degree, std::vector<std::pair<unsigned, unsigned>> const &ts) {
  auto p = identity_images(degree);
  for (auto it = ts.rbegin(); it != ts.rend(); ++it)
    p = compose_images(cycle_1based(degree, {it->first, it->second}), p);
  return p;
}

void check_pair_invariants(std::vector<unsigned> const &g1_lengths,
                           std::vector<unsigned> const &g2_lengths,
                           std::vector<unsigned> const &quotient_lengths, unsigned k,
                           bool exact_k, std::string const &what) {
  auto const ok_length = [&](unsigned len) {
    return len == 1 || (exact_k ? len == k : k % len == 0);
  };
  for (auto const *lengths : {&g1_lengths, &g2_lengths})
    for (auto len : *lengths)
      if (!ok_length(len))
        throw InconsistencyError(what + ": generator has a cycle of length " + std::to_string(len) +
                                 " for k = " + std::to_string(k));
  for (auto len : quotient_lengths)
    if (len != 1 && len % 2 != 0)
      throw InconsistencyError(what + ": quotient has an odd cycle of length " +
                               std::to_string(len) + " for k = " + std::to_string(k));
}

std::vector<unsigned> lengths_of(CycleType const &ct) {
  std::vector<unsigned> out;
  for (auto [len, mult] : ct.counts())
    for (std::uint64_t i = 0; i < mult; ++i)
      out.push_back(static_cast<unsigned>(len));
  return out;
}

} // namespace

// CyclePair ------------------------------------------------------------------

std::vector<unsigned> CyclePair::quotient() const {
  return compose_images(g1, inverse_images(g2));
}

std::string CyclePair::cycle_string(std::vector<unsigned> const &images) {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (unsigned start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start)
      continue;
    out += "(";
    bool first = true;
    for (auto x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      out += (first ? "" : ",") + std::to_string(x + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<unsigned> CyclePair::cycle_lengths(std::vector<unsigned> const &images) {
  std::vector<unsigned> out;
  std::vector<bool> seen(images.size(), false);
  for (unsigned start = 0; start < images.size(); ++start) {
    if (seen[start])
      continue;
    unsigned len = 0;
    for (auto x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

CyclePair lemma_g1(unsigned k, unsigned l) {
  if (k <= 4 || k % 2 == 0)
    throw PreconditionError("lemma_g1: k must be odd and greater than 4");
  if (l != 2 * k - 2 && l != 2 * k - 4)
    throw PreconditionError("lemma_g1: l must be 2k-2 or 2k-4");

  CyclePair pair;
  pair.k = k;
  pair.degree = l;
  std::vector<unsigned> first(k);
  std::iota(first.begin(), first.end(), 1u);
  pair.g1 = cycle_1based(l, first);

  if (l == 2 * k - 2) {
    std::vector<unsigned> second;
    for (unsigned p = 2 * k - 2; p >= k - 1; --p)
      second.push_back(p);
    pair.g2 = cycle_1based(l, second);
  } else {
    std::vector<std::pair<unsigned, unsigned>> ts;
    for (unsigned p = 2 * k - 4; p >= k + 1; --p)
      ts.emplace_back(p, p - 1);
    ts.emplace_back(k - 3, k - 2);
    ts.emplace_back(k - 2, k - 1);
    ts.emplace_back(k - 1, k);
    pair.g2 = transposition_product(l, ts);
  }

  check_pair_invariants(CyclePair::cycle_lengths(pair.g1), CyclePair::cycle_lengths(pair.g2),
                        CyclePair::cycle_lengths(pair.quotient()), k, true, "lemma_g1");
  return pair;
}

unsigned generator_threshold(unsigned k) {
  if (k == 0)
    throw PreconditionError("generator_threshold: k must be positive");
  if (k == 1)
    return 0;
  if (k % 2 == 0 || k == 3)
    return 2;
  return k;
}

std::optional<BlockDecomposition> decompose_power_of_two(unsigned k, unsigned m) {
  if (k <= 4 || k % 2 == 0 || m >= 63)
    throw PreconditionError("decompose_power_of_two: odd k > 4 and m < 63 required");
  auto const total = std::uint64_t{1} << m;
  auto const short_size = std::uint64_t{2} * k - 4;
  auto const long_size = std::uint64_t{2} * k - 2;
  for (std::uint64_t r = 0; r * long_size <= total; ++r) {
    auto const rest = total - r * long_size;
    if (rest % short_size == 0)
      return BlockDecomposition{rest / short_size, r};
  }
  return std::nullopt;
}

MkGenerators mk_generators(unsigned k, unsigned m, Limits const &limits) {
  auto const threshold = generator_threshold(k);
  if (m < threshold)
    throw PreconditionError("mk_generators: level " + std::to_string(m) + " is below M(" +
                            std::to_string(k) + ") = " + std::to_string(threshold));
  if (m > limits.max_dense_level)
    throw CapExceeded("mk_generators: level exceeds the dense cap");

  MkGenerators out{k, threshold, m, CubePermutation::identity(m), CubePermutation::identity(m), {}};
  if (k == 1) {
    // Nothing to do: fixed points carry no generators.
  } else if (k % 2 == 0) {
    std::vector<std::uint32_t> a(std::size_t{1} << m), b(a.size());
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      a[x] = x ^ 1u;
      b[x] = x ^ 2u;
    }
    out.g1 = CubePermutation(m, std::move(a));
    out.g2 = CubePermutation(m, std::move(b));
  } else if (k == 3) {
    out.g1 = embed_head(CubePermutation::from_cycles(2, {{0, 1, 2}}), m);
    out.g2 = embed_head(CubePermutation::from_cycles(2, {{3, 2, 1}}), m);
  } else {
    auto const blocks = decompose_power_of_two(k, m);
    if (!blocks)
      throw InconsistencyError("mk_generators: no decomposition 2^" + std::to_string(m) +
                               " = (2k-4) l + (2k-2) r for k = " + std::to_string(k));
    out.blocks = blocks;
    std::vector<std::uint32_t> a(std::size_t{1} << m), b(a.size());
    std::iota(a.begin(), a.end(), 0u);
    std::iota(b.begin(), b.end(), 0u);
    std::uint64_t offset = 0;
    auto install = [&](CyclePair const &pair) {
      for (unsigned i = 0; i < pair.degree; ++i) {
        a[offset + i] = static_cast<std::uint32_t>(offset + pair.g1[i]);
        b[offset + i] = static_cast<std::uint32_t>(offset + pair.g2[i]);
      }
      offset += pair.degree;
    };
    auto const short_pair = lemma_g1(k, 2 * k - 4);
    auto const long_pair = lemma_g1(k, 2 * k - 2);
    for (std::uint64_t i = 0; i < blocks->short_blocks; ++i)
      install(short_pair);
    for (std::uint64_t i = 0; i < blocks->long_blocks; ++i)
      install(long_pair);
    out.g1 = CubePermutation(m, std::move(a));
    out.g2 = CubePermutation(m, std::move(b));
  }

  check_pair_invariants(lengths_of(cycle_type(out.g1)), lengths_of(cycle_type(out.g2)),
                        lengths_of(cycle_type(compose(out.g1, inverse(out.g2)))), k, false,
                        "mk_generators");
  return out;
}

nlohmann::json SiFamily::to_json(unsigned max_export_level) const {
  nlohmann::json gens = nlohmann::json::array();
  for (auto const &[k, g] : generators) {
    nlohmann::json entry{{"k", k}, {"threshold", g.threshold}, {"level", g.level}};
    if (g.blocks)
      entry["decomposition"] = {{"short_blocks", g.blocks->short_blocks},
                                {"long_blocks", g.blocks->long_blocks}};
    gens.push_back(entry);
  }
  nlohmann::json out{{"s", s.to_cycle_string()}, {"m", tail_level}, {"r", blocks},
                     {"level", level()}, {"generators", gens}, {"labels", labels}};
  if (level() <= max_export_level) {
    nlohmann::json members_json = nlohmann::json::array();
    for (auto const &p : members)
      members_json.push_back(p.densify().to_cycle_string());
    out["members"] = members_json;
  }
  return out;
}

SiFamily construct_si(CubePermutation const &s, unsigned r, Limits const &limits) {
  auto const ct = cycle_type(s);
  std::set<unsigned> orders;
  unsigned m = 0;
  for (auto [len, mult] : ct.counts()) {
    if (len == 1)
      continue;
    orders.insert(static_cast<unsigned>(len));
    m = std::max(m, generator_threshold(static_cast<unsigned>(len)));
  }
  if (std::uint64_t{s.level()} + std::uint64_t{m} * r > limits.max_product_level)
    throw CapExceeded("construct_si: level n + m r exceeds the product-form cap");
  if (r >= 32)
    throw CapExceeded("construct_si: family of 2^r members is too large");

  SiFamily family{s, m, r, {}, {}, {}};
  for (auto k : orders)
    family.generators.emplace(k, mk_generators(k, m, limits));

  // Tail slot 0 is the identity (fixed head points); slot i >= 1 serves the
  // i-th cycle length in `orders`.
  std::vector<unsigned> const order_list(orders.begin(), orders.end());
  std::vector<std::uint32_t> tail_of(s.size(), 0);
  {
    std::vector<bool> seen(s.size(), false);
    for (auto const &cycle : s.cycles(true)) {
      if (cycle.size() == 1)
        continue;
      auto const slot = static_cast<std::uint32_t>(
          1 + (std::find(order_list.begin(), order_list.end(), cycle.size()) - order_list.begin()));
      for (auto x : cycle)
        tail_of[x] = slot;
    }
  }

  for (std::uint64_t label = 0; label < (std::uint64_t{1} << r); ++label) {
    std::string name;
    for (unsigned i = 0; i < r; ++i)
      name.push_back(((label >> i) & 1u) ? '2' : '1');
    std::vector<BlockPermutation> tails{BlockPermutation::identity(m, r)};
    for (auto k : order_list) {
      auto const &g = family.generators.at(k);
      std::vector<CubePermutation> blocks;
      for (unsigned i = 0; i < r; ++i)
        blocks.push_back(((label >> i) & 1u) ? g.g2 : g.g1);
      tails.emplace_back(m, std::move(blocks));
    }
    family.labels.push_back(name);
    family.members.emplace_back(s, std::move(tails), tail_of, limits);
  }
  return family;
}

nlohmann::json SiVerification::to_json() const {
  nlohmann::json failures_json = nlohmann::json::array();
  for (auto const &f : failures)
    failures_json.push_back(
        {{"i", f.i}, {"j", f.j}, {"property", f.property}, {"detail", f.detail}});
  return {{"members", members},
          {"pairs_checked", pairs_checked},
          {"conjugacy", conjugacy},
          {"fixed_sets", fixed_sets},
          {"even_quotients", even_quotients},
          {"involutive_quotients", involutive_quotients},
          {"passed", passed()},
          {"failures", failures_json}};
}

SiVerification verify_si_properties(CubePermutation const &s,
                                    std::vector<ProductFormPermutation> const &family) {
  SiVerification out;
  out.members = family.size();
  if (family.empty())
    return out;
  auto const extra_levels = family.front().level() - s.level();
  if (family.front().head().level() != s.level())
    throw LevelMismatch("verify_si_properties: family head level differs from s");

  auto const lifted_type = cycle_type(s).scaled(std::uint64_t{1} << extra_levels);
  std::vector<Dyadic> lifted_fix(s.size());
  for (std::uint64_t x = 0; x < s.size(); ++x)
    lifted_fix[x] = s(x) == x ? Dyadic(1) : Dyadic(0);

  auto const fix_mismatch = [&](std::vector<Dyadic> const &profile) -> std::string {
    for (std::uint64_t x = 0; x < profile.size(); ++x)
      if (profile[x] != lifted_fix[x])
        return "head point " + std::to_string(x) + ": fixed fraction of fiber " +
               profile[x].to_string() + ", expected " + lifted_fix[x].to_string();
    return {};
  };

  for (std::size_t i = 0; i < family.size(); ++i) {
    auto const ct = family[i].cycle_type();
    if (ct != lifted_type) {
      out.conjugacy = false;
      out.failures.push_back({i, i, "conjugate", "cycle type " + ct.to_string() +
                                                     " != lifted " + lifted_type.to_string()});
    }
    if (auto msg = fix_mismatch(family[i].fixed_profile()); !msg.empty()) {
      out.fixed_sets = false;
      out.failures.push_back({i, i, "fixed_set", msg});
    }
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ++out.pairs_checked;
      auto const q = compose(family[i], inverse(family[j]));
      if (auto msg = fix_mismatch(q.fixed_profile()); !msg.empty()) {
        out.fixed_sets = false;
        out.failures.push_back({i, j, "quotient_fixed_set", msg});
      }
      auto const ct = q.cycle_type();
      if (!ct.only_even_and_fixed()) {
        out.even_quotients = false;
        std::uint64_t odd = 0;
        for (auto [len, mult] : ct.counts())
          if (len != 1 && len % 2 == 1)
            odd = len;
        out.failures.push_back({i, j, "even_cycles",
                                "quotient has a cycle of odd length " + std::to_string(odd)});
      }
      if (!ct.only_involutive())
        out.involutive_quotients = false;
    }
  }
  return out;
}

} // namespace s2inf
