#pragma once

// The binary hypercube X_n and cylinder ("nice") subsets of X.
//
// Coordinate convention, used everywhere in the library: coordinate 1 of a
// word is the least significant bit of its index. Coordinate i of index x is
// (x >> (i - 1)) & 1. Extending a word by a suffix therefore adds high bits,
// and the odometer is "add one with carry" on the index.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "s2inf/dyadic.hpp"
#include "s2inf/limits.hpp"

namespace s2inf {

class CubePermutation;

/// A point of X_n.
class BinaryWord {
public:
  BinaryWord(unsigned level, std::uint64_t index);
  static BinaryWord from_bits(std::vector<std::uint8_t> const &bits);

  unsigned level() const { return level_; }
  std::uint64_t index() const { return index_; }
  /// Value of coordinate i, 1-based.
  int bit(unsigned coordinate) const;
  std::vector<std::uint8_t> bits() const;

  friend bool operator==(BinaryWord const &, BinaryWord const &) = default;

private:
  unsigned level_;
  std::uint64_t index_;
};

/// A cylinder set C x X with C a subset of X_k, stored as a 2^k-bit mask.
///
/// The stored level is the one the set was declared at; `canonical()` gives
/// the minimal level. Level 0 is allowed and holds only the empty set and X.
class NiceSet {
public:
  NiceSet(unsigned level, std::vector<bool> mask, Limits const &limits = {});

  static NiceSet empty(unsigned level = 0);
  static NiceSet full(unsigned level = 0);
  /// {x : x_coordinate = value}, declared at level `coordinate`.
  static NiceSet coordinate_equals(unsigned coordinate, int value);
  static NiceSet from_indices(unsigned level, std::vector<std::uint64_t> const &members);

  unsigned level() const { return level_; }
  std::vector<bool> const &mask() const { return mask_; }
  std::uint64_t size() const { return size_; }
  bool contains(std::uint64_t index) const { return mask_[index]; }
  /// Membership of a point of X_n for any n >= level().
  bool contains_word(std::uint64_t index_at_any_higher_level) const;

  bool is_empty() const { return size_ == 0; }
  bool is_full() const { return size_ == mask_.size(); }

  /// Same subset of X, declared at `target >= level()`.
  NiceSet lift(unsigned target, Limits const &limits = {}) const;
  /// Same subset of X at the minimal level where it is a union of fibers.
  NiceSet canonical() const;
  /// Complement in X, at the same level.
  NiceSet complement() const;
  /// Image under a permutation of X_n, n >= level(); result at level n.
  NiceSet image(CubePermutation const &p) const;

  /// Equality as subsets of X (compared after lifting).
  friend bool operator==(NiceSet const &a, NiceSet const &b);

  /// "k=2:1010": character i is membership of index i. "k=3:0x1f": bit i of
  /// the hex number is membership of index i.
  static NiceSet parse(std::string_view text, Limits const &limits = {});
  std::string to_string() const;

private:
  unsigned level_;
  std::vector<bool> mask_;
  std::uint64_t size_ = 0;
};

/// |mask| / 2^level, exactly.
Dyadic measure(NiceSet const &a);

NiceSet nice_intersect(NiceSet const &a, NiceSet const &b);
NiceSet nice_union(NiceSet const &a, NiceSet const &b);
/// C x D x X: the level n+m set of concatenations c.d.
NiceSet nice_product(NiceSet const &c, NiceSet const &d);

/// Add-one-with-carry on X_n, wrapping 11..1 -> 00..0. A single 2^n-cycle.
CubePermutation odometer(unsigned level, Limits const &limits = {});

} // namespace s2inf
