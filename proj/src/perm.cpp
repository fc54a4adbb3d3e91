#include "s2inf/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "s2inf/error.hpp"

namespace s2inf {

namespace {

void check_level(unsigned level, Limits const &limits) {
  if (level > limits.max_dense_level)
    throw CapExceeded("level " + std::to_string(level) + " exceeds the dense cap " +
                      std::to_string(limits.max_dense_level));
}

void require_same_level(CubePermutation const &p, CubePermutation const &q, char const *what) {
  if (p.level() != q.level())
    throw LevelMismatch(std::string(what) + ": levels " + std::to_string(p.level()) + " and " +
                        std::to_string(q.level()) + " differ; lift with embed_head first");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  auto e = s.find_last_not_of(" \t\n\r");
  if (b == std::string_view::npos)
    return {};
  return std::string(s.substr(b, e - b + 1));
}

unsigned parse_unsigned(std::string const &s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a non-negative integer in: " + std::string(context));
  try {
    return static_cast<unsigned>(std::stoul(s));
  } catch (std::exception const &) {
    throw ParseError("integer out of range in: " + std::string(context));
  }
}

} // namespace

// CycleType ------------------------------------------------------------------

CycleType::CycleType(std::map<std::uint64_t, std::uint64_t> counts) {
  for (auto [len, mult] : counts)
    add(len, mult);
}

void CycleType::add(std::uint64_t length, std::uint64_t multiplicity) {
  if (length == 0)
    throw PreconditionError("cycle length must be positive");
  if (multiplicity != 0)
    counts_[length] += multiplicity;
}

std::uint64_t CycleType::degree() const {
  std::uint64_t d = 0;
  for (auto [len, mult] : counts_)
    d += len * mult;
  return d;
}

std::uint64_t CycleType::cycle_count() const {
  std::uint64_t c = 0;
  for (auto [len, mult] : counts_)
    c += mult;
  return c;
}

std::uint64_t CycleType::fixed_points() const {
  auto it = counts_.find(1);
  return it == counts_.end() ? 0 : it->second;
}

bool CycleType::only_even_and_fixed() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](auto const &kv) { return kv.first == 1 || kv.first % 2 == 0; });
}

bool CycleType::only_involutive() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](auto const &kv) { return kv.first <= 2; });
}

CycleType CycleType::scaled(std::uint64_t factor) const {
  CycleType out;
  for (auto [len, mult] : counts_)
    out.add(len, mult * factor);
  return out;
}

std::string CycleType::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
    auto const [len, mult] = *it;
    if (mult <= 8) {
      for (std::uint64_t i = 0; i < mult; ++i) {
        out += (first ? "" : ",") + std::to_string(len);
        first = false;
      }
    } else {
      out += (first ? "" : ",") + std::to_string(len) + "^" + std::to_string(mult);
      first = false;
    }
  }
  return out + "}";
}

// CubePermutation ------------------------------------------------------------

CubePermutation::CubePermutation(unsigned level, std::vector<std::uint32_t> images,
                                 Limits const &limits)
    : level_(level), images_(std::move(images)) {
  check_level(level, limits);
  auto const n = std::size_t{1} << level;
  if (images_.size() != n)
    throw PreconditionError("image table must have 2^level entries");
  std::vector<bool> seen(n, false);
  for (auto y : images_) {
    if (y >= n || seen[y])
      throw PreconditionError("image table is not a bijection of [0, 2^level)");
    seen[y] = true;
  }
}

CubePermutation CubePermutation::identity(unsigned level, Limits const &limits) {
  check_level(level, limits);
  std::vector<std::uint32_t> images(std::size_t{1} << level);
  std::iota(images.begin(), images.end(), 0u);
  return {level, std::move(images), limits};
}

CubePermutation CubePermutation::transposition(unsigned level, std::uint64_t a, std::uint64_t b,
                                               Limits const &limits) {
  return from_cycles(level, {{a, b}}, limits);
}

CubePermutation CubePermutation::from_cycles(unsigned level,
                                             std::vector<std::vector<std::uint64_t>> const &cycles,
                                             Limits const &limits) {
  check_level(level, limits);
  auto const n = std::size_t{1} << level;
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(n, false);
  for (auto const &cycle : cycles) {
    for (auto x : cycle) {
      if (x >= n)
        throw PreconditionError("cycle entry " + std::to_string(x) + " out of range for level " +
                                std::to_string(level));
      if (used[x])
        throw PreconditionError("cycles are not disjoint at point " + std::to_string(x));
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()]);
  }
  return {level, std::move(images), limits};
}

bool CubePermutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

int CubePermutation::sign() const {
  auto const ct = cycle_type(*this);
  return (ct.degree() - ct.cycle_count()) % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<std::uint64_t>> CubePermutation::cycles(bool include_fixed) const {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint64_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<std::uint64_t> cycle;
    for (auto x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    if (cycle.size() > 1 || include_fixed)
      out.push_back(std::move(cycle));
  }
  return out;
}

CubePermutation CubePermutation::parse(std::string_view text, Limits const &limits) {
  auto const s = trim(text);
  if (s == "e")
    return identity(0, limits);
  for (std::string const name : {"identity", "odometer"}) {
    if (s.rfind(name + "(", 0) == 0 && s.back() == ')') {
      auto const arg = trim(s.substr(name.size() + 1, s.size() - name.size() - 2));
      auto const level = parse_unsigned(arg, text);
      return name == "identity" ? identity(level, limits) : odometer(level, limits);
    }
  }
  if (s.rfind("level=", 0) != 0)
    throw ParseError("permutation must start with 'level=<n>:' or be identity(n)/odometer(n)/e: " +
                     std::string(text));
  auto const colon = s.find(':');
  if (colon == std::string::npos)
    throw ParseError("permutation is missing ':' after the level: " + std::string(text));
  auto const level = parse_unsigned(trim(s.substr(6, colon - 6)), text);
  check_level(level, limits);
  auto const body = trim(s.substr(colon + 1));

  if (body.empty() || body == "()" || body == "e")
    return identity(level, limits);

  if (body.front() == '(') {
    std::vector<std::vector<std::uint64_t>> cycles;
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[pos]))) {
        ++pos;
        continue;
      }
      if (body[pos] != '(')
        throw ParseError("expected '(' in cycle notation: " + std::string(text));
      auto const close = body.find(')', pos);
      if (close == std::string::npos)
        throw ParseError("unbalanced '(' in cycle notation: " + std::string(text));
      std::string inner = body.substr(pos + 1, close - pos - 1);
      std::replace(inner.begin(), inner.end(), ',', ' ');
      std::istringstream in(inner);
      std::vector<std::uint64_t> cycle;
      std::string tok;
      while (in >> tok)
        cycle.push_back(parse_unsigned(tok, text));
      if (!cycle.empty())
        cycles.push_back(std::move(cycle));
      pos = close + 1;
    }
    try {
      return from_cycles(level, cycles, limits);
    } catch (PreconditionError const &e) {
      throw ParseError(e.what());
    }
  }

  std::istringstream in(body);
  std::vector<std::uint32_t> images;
  std::string tok;
  while (in >> tok)
    images.push_back(parse_unsigned(tok, text));
  try {
    return {level, std::move(images), limits};
  } catch (PreconditionError const &e) {
    throw ParseError(std::string(e.what()) + ": " + std::string(text));
  }
}

std::string CubePermutation::to_cycle_string() const {
  std::string out = "level=" + std::to_string(level_) + ": ";
  auto const cs = cycles(false);
  if (cs.empty())
    return out + "()";
  for (auto const &c : cs) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i)
      out += (i ? " " : "") + std::to_string(c[i]);
    out += ")";
  }
  return out;
}

std::string CubePermutation::to_table_string() const {
  std::string out = "level=" + std::to_string(level_) + ":";
  for (auto y : images_)
    out += " " + std::to_string(y);
  return out;
}

// Free operations ------------------------------------------------------------

CubePermutation compose(CubePermutation const &p, CubePermutation const &q) {
  require_same_level(p, q, "compose");
  std::vector<std::uint32_t> images(p.size());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = static_cast<std::uint32_t>(p(q(x)));
  return {p.level(), std::move(images)};
}

CubePermutation inverse(CubePermutation const &p) {
  std::vector<std::uint32_t> images(p.size());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[p(x)] = static_cast<std::uint32_t>(x);
  return {p.level(), std::move(images)};
}

CycleType cycle_type(CubePermutation const &p) {
  CycleType ct;
  std::vector<bool> seen(p.size(), false);
  for (std::uint64_t start = 0; start < p.size(); ++start) {
    if (seen[start])
      continue;
    std::uint64_t len = 0;
    for (auto x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    ct.add(len);
  }
  return ct;
}

bool are_conjugate(CubePermutation const &p, CubePermutation const &q) {
  return p.level() == q.level() && cycle_type(p) == cycle_type(q);
}

std::vector<std::uint64_t> fixed_set(CubePermutation const &p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < p.size(); ++x)
    if (p(x) == x)
      out.push_back(x);
  return out;
}

Dyadic fixed_fraction(CubePermutation const &p) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p.size(); ++x)
    count += p(x) == x;
  return Dyadic::fraction(count, p.level());
}

NiceSet fixed_nice_set(CubePermutation const &p) {
  return NiceSet::from_indices(p.level(), fixed_set(p));
}

CubePermutation embed_head(CubePermutation const &p, unsigned target, Limits const &limits) {
  if (target < p.level())
    throw LevelMismatch("embed_head: target level " + std::to_string(target) +
                        " is below the source level " + std::to_string(p.level()));
  check_level(target, limits);
  auto const head_mask = static_cast<std::uint32_t>(p.size() - 1);
  std::vector<std::uint32_t> images(std::size_t{1} << target);
  for (std::uint32_t x = 0; x < images.size(); ++x)
    images[x] = (x & ~head_mask) | static_cast<std::uint32_t>(p(x & head_mask));
  return {target, std::move(images), limits};
}

CubePermutation embed_tail(CubePermutation const &p, unsigned head_levels, Limits const &limits) {
  auto const level = head_levels + p.level();
  check_level(level, limits);
  auto const head_mask = (std::uint32_t{1} << head_levels) - 1;
  std::vector<std::uint32_t> images(std::size_t{1} << level);
  for (std::uint32_t x = 0; x < images.size(); ++x)
    images[x] = (x & head_mask) | static_cast<std::uint32_t>(p(x >> head_levels) << head_levels);
  return {level, std::move(images), limits};
}

CubePermutation flip_perm(NiceSet const &a, unsigned m, Limits const &limits) {
  if (m <= a.level())
    throw PreconditionError("flip_perm: coordinate m = " + std::to_string(m) +
                            " must exceed the nice set level " + std::to_string(a.level()));
  check_level(m, limits);
  auto const bit = std::uint32_t{1} << (m - 1);
  std::vector<std::uint32_t> images(std::size_t{1} << m);
  for (std::uint32_t x = 0; x < images.size(); ++x)
    images[x] = a.contains_word(x) ? x : (x ^ bit);
  return {m, std::move(images), limits};
}

CubePermutation conjugate(CubePermutation const &s, CubePermutation const &g) {
  require_same_level(s, g, "conjugate");
  return compose(compose(g, s), inverse(g));
}

Dyadic uniform_distance(CubePermutation const &p, CubePermutation const &q) {
  require_same_level(p, q, "uniform_distance");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p.size(); ++x)
    count += p(x) != q(x);
  return Dyadic::fraction(count, p.level());
}

std::vector<CubePermutation> all_permutations(unsigned level) {
  if (level > 3)
    throw CapExceeded("all_permutations: level must be at most 3");
  std::vector<std::uint32_t> images(std::size_t{1} << level);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<CubePermutation> out;
  do {
    out.emplace_back(level, images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace s2inf
