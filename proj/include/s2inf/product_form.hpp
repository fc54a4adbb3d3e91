#pragma once

// Permutations of X_{n + m r} that act on a point (x, y_1, ..., y_r), with x
// in X_n and each y_i in X_m, as
//
//   (x, y) -> (h(x), T_x(y)),   T_x(y) = (t_{x,1}(y_1), ..., t_{x,r}(y_r)).
//
// The tail action T_x is shared between head points through an index table,
// so these stay small even when 2^{n + m r} points could never be stored.
// Cycle types and fixed sets are computed from the block structure.

#include <cstdint>
#include <vector>

#include "s2inf/dyadic.hpp"
#include "s2inf/limits.hpp"
#include "s2inf/perm.hpp"

namespace s2inf {

/// r independent permutations of X_m acting on consecutive m-bit blocks.
class BlockPermutation {
public:
  BlockPermutation(unsigned block_level, std::vector<CubePermutation> blocks);
  static BlockPermutation identity(unsigned block_level, unsigned block_count);

  unsigned block_level() const { return block_level_; }
  unsigned block_count() const { return static_cast<unsigned>(blocks_.size()); }
  std::vector<CubePermutation> const &blocks() const { return blocks_; }

  std::uint64_t operator()(std::uint64_t y) const;
  bool is_identity() const;
  /// Product of the per-block fixed fractions.
  Dyadic fixed_fraction() const;
  /// Cycle type of the direct product, from the per-block cycle types.
  CycleType cycle_type() const;

  friend BlockPermutation compose(BlockPermutation const &p, BlockPermutation const &q);
  friend BlockPermutation inverse(BlockPermutation const &p);
  friend bool operator==(BlockPermutation const &, BlockPermutation const &) = default;

private:
  unsigned block_level_;
  std::vector<CubePermutation> blocks_;
};

class ProductFormPermutation {
public:
  /// `tail_of[x]` selects the tail action used at head point x.
  ProductFormPermutation(CubePermutation head, std::vector<BlockPermutation> tails,
                         std::vector<std::uint32_t> tail_of, Limits const &limits = {});

  CubePermutation const &head() const { return head_; }
  unsigned head_level() const { return head_.level(); }
  unsigned block_level() const { return tails_.front().block_level(); }
  unsigned block_count() const { return tails_.front().block_count(); }
  unsigned level() const { return head_level() + block_level() * block_count(); }
  std::vector<BlockPermutation> const &tails() const { return tails_; }
  BlockPermutation const &tail_at(std::uint64_t x) const { return tails_[tail_of_[x]]; }

  std::uint64_t operator()(std::uint64_t point) const;

  /// For each head point x, the fraction of the fiber {x} x X_{mr} that is
  /// fixed (zero when h moves x).
  std::vector<Dyadic> fixed_profile() const;
  Dyadic fixed_fraction() const;
  CycleType cycle_type() const;

  /// Dense table; throws CapExceeded above Limits::max_dense_level.
  CubePermutation densify(Limits const &limits = {}) const;

  friend ProductFormPermutation compose(ProductFormPermutation const &p,
                                        ProductFormPermutation const &q);
  friend ProductFormPermutation inverse(ProductFormPermutation const &p);

private:
  CubePermutation head_;
  std::vector<BlockPermutation> tails_;
  std::vector<std::uint32_t> tail_of_;
};

} // namespace s2inf
