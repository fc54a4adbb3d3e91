#pragma once

// Finite truncations of the representation on L^2(Y, gamma).
//
// At level n the space Y_n is identified with X_n x X_n: the point (a, b)
// stands for the cylinder Y_n^{a,b} of gamma-mass 2^-n and has basis index
// a + 2^n b. Permutations of X_n act on the first factor only.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "s2inf/alpha.hpp"
#include "s2inf/characters.hpp"
#include "s2inf/cube.hpp"
#include "s2inf/dyadic.hpp"
#include "s2inf/limits.hpp"
#include "s2inf/perm.hpp"

namespace s2inf {

struct TruncatedRep {
  unsigned level;

  std::uint64_t dimension() const { return std::uint64_t{1} << (2 * level); }
  /// gamma of a single basis point.
  Dyadic point_weight() const { return Dyadic(mpz_class(1), level); }
  std::uint64_t index(std::uint64_t x, std::uint64_t y) const { return x | (y << level); }
};

/// A real function on Y_n with integer values, paired under the gamma
/// weighted inner product.
struct WeightedFunction {
  unsigned level = 0;
  std::vector<long> values;
};

Dyadic inner(WeightedFunction const &f, WeightedFunction const &g);

/// Sparse permutation matrix: basis point p is sent to target[p].
class RepMatrix {
public:
  RepMatrix(unsigned level, std::vector<std::uint64_t> target);

  unsigned level() const { return level_; }
  std::uint64_t dimension() const { return target_.size(); }
  std::vector<std::uint64_t> const &target() const { return target_; }

  /// (pi f)(target[p]) = f(p).
  WeightedFunction apply(WeightedFunction const &f) const;
  bool is_identity() const;
  /// Smallest k >= 1 with M^k = I.
  std::uint64_t order() const;

  friend RepMatrix operator*(RepMatrix const &a, RepMatrix const &b);
  friend bool operator==(RepMatrix const &, RepMatrix const &) = default;

private:
  unsigned level_;
  std::vector<std::uint64_t> target_;
};

/// pi(s): basis point (x, y) goes to (s(x), y).
RepMatrix rep_matrix(CubePermutation const &s);

/// Indicator of the diagonal {(a, a)}; unit norm.
WeightedFunction xi_vector(unsigned level);

/// <pi(s) xi, xi> from the explicit matrix.
Dyadic matrix_character(CubePermutation const &s);

/// Restriction of a function on Y_n to Y_{n+1}: the cylinder Y_n^{a,b} is
/// the union of Y_{n+1}^{ac,bc} for c in {0,1}.
WeightedFunction lift_function(WeightedFunction const &f);

enum class TensorMode { automatic, explicit_build, product };

/// <pi^{(x)k}(s) xi^{(x)k}, xi^{(x)k}>. explicit_build materializes the
/// 4^{nk}-dimensional permutation (subject to Limits::max_tensor_dimension);
/// product uses the factorization over tensor factors; automatic builds
/// explicitly when allowed and checks it against the product.
Dyadic tensor_character(CubePermutation const &s, unsigned k,
                        TensorMode mode = TensorMode::automatic, Limits const &limits = {});

/// chi(g1^-1 flip_perm(A, m) g2) for each m in the range. Requires every m
/// to exceed g1/g2's common level and A's level.
std::vector<CharValue> stabilization_scan(AlphaParam const &alpha, CubePermutation const &g1,
                                          CubePermutation const &g2, NiceSet const &a,
                                          std::vector<unsigned> const &m_range);

/// True when every value in the scan agrees with the first.
bool is_constant(std::vector<CharValue> const &values);

struct IdentityCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool passed = false;
};

struct ProjectionReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Character-level forms of the projection identities:
///   intersection:  chi(flip(A,m1) flip(B,m2)) = mu(A n B)^alpha, m1 > m2,
///                  together with the three-flip conjugacy chain;
///   product:       chi(flip(C x D x X, m)) = mu(C)^alpha mu(D)^alpha, also
///                  through the conjugate split flip(C,n+1) flip(X_{n+1} x D, n+m+2);
///   trace:         chi(flip(A, m)) = mu(A)^alpha for A and B;
///   monotonicity:  mu(A) <= mu(B) implies chi(flip(A)) <= chi(flip(B)).
ProjectionReport projection_identity_checks(AlphaParam const &alpha, NiceSet const &a,
                                            NiceSet const &b, NiceSet const &c, NiceSet const &d);

} // namespace s2inf
