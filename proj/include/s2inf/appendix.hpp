#pragma once

// Families s_1, ..., s_{2^r} of conjugates of a permutation s whose pairwise
// quotients fix exactly Fix(s) and have only even cycles besides fixed
// points, built from pairs of permutations with cycle lengths dividing k
// whose quotient has only even cycles.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "s2inf/limits.hpp"
#include "s2inf/perm.hpp"
#include "s2inf/product_form.hpp"

namespace s2inf {

/// Two permutations of {1, ..., degree} made of k-cycles and fixed points.
/// Images are stored 0-based; cycle strings are 1-based.
struct CyclePair {
  unsigned k = 0;
  unsigned degree = 0;
  std::vector<unsigned> g1;
  std::vector<unsigned> g2;

  /// g1 g2^-1 (apply g2^-1 first).
  std::vector<unsigned> quotient() const;
  static std::string cycle_string(std::vector<unsigned> const &images);
  /// Cycle lengths in descending order, fixed points included.
  static std::vector<unsigned> cycle_lengths(std::vector<unsigned> const &images);
};

/// The explicit pair for odd k > 4 on l = 2k-2 or l = 2k-4 points: g1 is the
/// k-cycle (1, ..., k); g2 is (2k-2, ..., k-1) for l = 2k-2 and
/// (2k-4,2k-5)...(k+1,k)(k-3,k-2)(k-2,k-1)(k-1,k) for l = 2k-4. Invariants
/// are checked on construction.
CyclePair lemma_g1(unsigned k, unsigned l);

/// Smallest level M(k) from which generator pairs exist: 2 for even k and
/// for k = 3, k for odd k > 4, 0 for k = 1.
unsigned generator_threshold(unsigned k);

/// 2^m = (2k-4) short_blocks + (2k-2) long_blocks.
struct BlockDecomposition {
  std::uint64_t short_blocks = 0;
  std::uint64_t long_blocks = 0;
};

/// Scans long_blocks = 0, 1, 2, ... and returns the first solution.
std::optional<BlockDecomposition> decompose_power_of_two(unsigned k, unsigned m);

struct MkGenerators {
  unsigned k = 0;
  unsigned threshold = 0;
  unsigned level = 0;
  CubePermutation g1;
  CubePermutation g2;
  std::optional<BlockDecomposition> blocks;
};

/// Generator pair at level m >= M(k). Even k: flips of coordinates 1 and 2.
/// k = 3: (1,2,3) and (4,3,2) on X_2 (point i is index i-1), lifted. Odd
/// k > 4: X_m in index order is cut into short blocks of 2k-4 points
/// followed by long blocks of 2k-2 points, each carrying a lemma_g1 pair.
MkGenerators mk_generators(unsigned k, unsigned m, Limits const &limits = {});

struct SiFamily {
  CubePermutation s;
  unsigned tail_level = 0; // m
  unsigned blocks = 0;     // r
  std::map<unsigned, MkGenerators> generators; // keyed by cycle length k
  std::vector<std::string> labels;             // a in {1,2}^r, e.g. "12"
  std::vector<ProductFormPermutation> members;

  unsigned level() const { return s.level() + tail_level * blocks; }
  /// Members are exported in cycle notation only up to `max_export_level`.
  nlohmann::json to_json(unsigned max_export_level = 8) const;
};

/// The 2^r permutations s_a(x, y) = (x, y) if x in Fix(s), else
/// (s(x), g_a^{(ord x)}(y)), at level n + m r with m the largest M(ord x).
SiFamily construct_si(CubePermutation const &s, unsigned r, Limits const &limits = {});

struct SiFalsification {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string property;
  std::string detail;
};

struct SiVerification {
  std::size_t members = 0;
  std::size_t pairs_checked = 0;
  bool conjugacy = true;
  bool fixed_sets = true;
  bool even_quotients = true;
  /// Every quotient has cycles of length 1 and 2 only.
  bool involutive_quotients = true;
  std::vector<SiFalsification> failures;

  bool passed() const { return conjugacy && fixed_sets && even_quotients; }
  nlohmann::json to_json() const;
};

/// For all members and all pairs i != j: s_i is conjugate to the lifted s;
/// Fix(s_i) = Fix(s_i s_j^-1) = lifted Fix(s); s_i s_j^-1 has only even
/// cycles and fixed points. Also records whether the quotients happen to be
/// involutions.
SiVerification verify_si_properties(CubePermutation const &s,
                                    std::vector<ProductFormPermutation> const &family);

} // namespace s2inf
