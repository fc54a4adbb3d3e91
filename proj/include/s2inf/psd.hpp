#pragma once

// Positive-semidefiniteness decisions for symmetric matrices by symmetric
// elimination with diagonal pivoting. A negative direction found during
// elimination is returned as a witness v with v^T M v < 0.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace s2inf {

template <typename T>
using SquareMatrix = std::vector<std::vector<T>>;

struct ExactPsdResult {
  bool psd = true;
  /// Empty when psd.
  std::vector<mpq_class> witness;
  /// witness^T M witness, recomputed from the input matrix.
  mpq_class witness_value;
  /// Number of positive pivots taken.
  std::size_t rank = 0;
};

/// Unconditional verdict over the rationals.
ExactPsdResult exact_psd(SquareMatrix<mpq_class> const &m);

struct FloatPsdResult {
  bool psd = true;
  std::vector<double> witness;
  double witness_value = 0.0;
  /// Absolute threshold below which pivots were treated as zero.
  double threshold = 0.0;
};

inline constexpr double kDefaultRelativeTolerance = 0x1p-40;

/// Floating-point verdict; pivots within `relative_tolerance * max|M_ii|` of
/// zero count as zero.
FloatPsdResult floating_psd(SquareMatrix<double> const &m,
                            double relative_tolerance = kDefaultRelativeTolerance);

/// v^T M v.
mpq_class quadratic_form(SquareMatrix<mpq_class> const &m, std::vector<mpq_class> const &v);

} // namespace s2inf
