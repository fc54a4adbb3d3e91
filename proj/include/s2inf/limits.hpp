#pragma once

#include <cstdint>

namespace s2inf {

/// Resource caps for dense tables. Everything in the library stays far below
/// the defaults; they exist so that a typo on the command line fails fast
/// instead of allocating gigabytes.
struct Limits {
  /// Largest level at which a CubePermutation or NiceSet is materialized.
  unsigned max_dense_level = 20;
  /// Largest dimension of an explicitly built tensor-power representation.
  std::uint64_t max_tensor_dimension = std::uint64_t{1} << 14;
  /// Largest level of a product-form permutation (indices must fit 64 bits).
  unsigned max_product_level = 62;
};

} // namespace s2inf
