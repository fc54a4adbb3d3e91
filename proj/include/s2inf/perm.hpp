#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "s2inf/cube.hpp"
#include "s2inf/dyadic.hpp"
#include "s2inf/limits.hpp"

namespace s2inf {

/// Multiset of cycle lengths (fixed points count as cycles of length 1),
/// stored as length -> multiplicity.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::map<std::uint64_t, std::uint64_t> counts);

  std::map<std::uint64_t, std::uint64_t> const &counts() const { return counts_; }
  void add(std::uint64_t length, std::uint64_t multiplicity = 1);

  /// Sum of length * multiplicity, i.e. the degree of the permutation.
  std::uint64_t degree() const;
  std::uint64_t cycle_count() const;
  std::uint64_t fixed_points() const;
  /// Every cycle has even length or is a fixed point.
  bool only_even_and_fixed() const;
  /// Every cycle has length 1 or 2.
  bool only_involutive() const;
  /// Each multiplicity multiplied by `factor` (cycle type of a head lift).
  CycleType scaled(std::uint64_t factor) const;

  friend bool operator==(CycleType const &, CycleType const &) = default;

  /// Descending lengths, e.g. "{2,2,1,1}"; long runs are compressed as
  /// "{8^4,1^16}".
  std::string to_string() const;

private:
  std::map<std::uint64_t, std::uint64_t> counts_;
};

/// An element of S(2^n): a bijection of X_n as a dense image table.
class CubePermutation {
public:
  /// Validates that `images` is a bijection of [0, 2^level).
  CubePermutation(unsigned level, std::vector<std::uint32_t> images,
                  Limits const &limits = {});

  static CubePermutation identity(unsigned level, Limits const &limits = {});
  /// The transposition of indices a and b at the given level.
  static CubePermutation transposition(unsigned level, std::uint64_t a, std::uint64_t b,
                                       Limits const &limits = {});
  static CubePermutation from_cycles(unsigned level,
                                     std::vector<std::vector<std::uint64_t>> const &cycles,
                                     Limits const &limits = {});

  unsigned level() const { return level_; }
  std::uint64_t size() const { return images_.size(); }
  std::vector<std::uint32_t> const &images() const { return images_; }
  std::uint64_t operator()(std::uint64_t x) const { return images_[x]; }

  bool is_identity() const;
  /// +1 or -1.
  int sign() const;
  std::vector<std::vector<std::uint64_t>> cycles(bool include_fixed = false) const;

  friend bool operator==(CubePermutation const &, CubePermutation const &) = default;

  /// Accepts "level=2: 2 3 0 1", "level=2: (0 2)(1 3)", "identity(3)",
  /// "odometer(3)", and "e" (the identity of X_0).
  static CubePermutation parse(std::string_view text, Limits const &limits = {});
  /// Cycle notation "level=n: (a b)(c d e)"; the identity prints as "()".
  std::string to_cycle_string() const;
  /// Image table "level=n: i0 i1 ...".
  std::string to_table_string() const;

private:
  unsigned level_;
  std::vector<std::uint32_t> images_;
};

/// (p o q)(x) = p(q(x)).
CubePermutation compose(CubePermutation const &p, CubePermutation const &q);
CubePermutation inverse(CubePermutation const &p);
CycleType cycle_type(CubePermutation const &p);
bool are_conjugate(CubePermutation const &p, CubePermutation const &q);

std::vector<std::uint64_t> fixed_set(CubePermutation const &p);
Dyadic fixed_fraction(CubePermutation const &p);
/// Fix(p) as a nice set at level p.level().
NiceSet fixed_nice_set(CubePermutation const &p);

/// p acting on the first n coordinates, identity on coordinates n+1..target.
CubePermutation embed_head(CubePermutation const &p, unsigned target, Limits const &limits = {});
/// p acting on coordinates head_levels+1 .. head_levels+p.level().
CubePermutation embed_tail(CubePermutation const &p, unsigned head_levels,
                           Limits const &limits = {});

/// The involution at level m fixing A pointwise and toggling coordinate m
/// off A. Requires m > a.level().
CubePermutation flip_perm(NiceSet const &a, unsigned m, Limits const &limits = {});

/// g s g^-1.
CubePermutation conjugate(CubePermutation const &s, CubePermutation const &g);

/// mu({x : p(x) != q(x)}).
Dyadic uniform_distance(CubePermutation const &p, CubePermutation const &q);

/// Every permutation of X_n, in lexicographic order of image tables. n <= 3.
std::vector<CubePermutation> all_permutations(unsigned level);

} // namespace s2inf
