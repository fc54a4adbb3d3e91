#include "s2inf/psd.hpp"

#include <algorithm>
#include <cmath>

#include "s2inf/error.hpp"

namespace s2inf {

namespace {

// Maintains S = V^T M V on the still-active indices. Eliminating a positive
// pivot p replaces every other active column c_i by c_i - (S_ip / S_pp) c_p,
// which makes it M-orthogonal to c_p, so the active block of S is always the
// Schur complement expressed in original coordinates through V.
template <typename T, typename Classify>
struct Eliminator {
  SquareMatrix<T> s;
  SquareMatrix<T> v; // v[col] = coefficient vector of column col
  Classify classify; // returns -1, 0, +1

  std::vector<T> run(std::size_t &rank) {
    auto const n = s.size();
    std::vector<bool> active(n, true);
    for (;;) {
      // A negative diagonal is an immediate witness.
      for (std::size_t i = 0; i < n; ++i)
        if (active[i] && classify(s[i][i]) < 0)
          return v[i];

      std::size_t pivot = n;
      for (std::size_t i = 0; i < n; ++i)
        if (active[i] && classify(s[i][i]) > 0 && (pivot == n || s[i][i] > s[pivot][pivot]))
          pivot = i;

      if (pivot == n) {
        // Zero diagonal block: any non-zero off-diagonal entry gives the
        // indefinite 2x2 [[0, a], [a, 0]].
        for (std::size_t i = 0; i < n; ++i) {
          if (!active[i])
            continue;
          for (std::size_t j = i + 1; j < n; ++j) {
            if (!active[j] || classify(s[i][j]) == 0)
              continue;
            auto w = v[i];
            T const t = classify(s[i][j]) > 0 ? T(-1) : T(1);
            for (std::size_t r = 0; r < n; ++r)
              w[r] += t * v[j][r];
            return w;
          }
        }
        return {};
      }

      ++rank;
      active[pivot] = false;
      T const d = s[pivot][pivot];
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i])
          continue;
        T const f = s[i][pivot] / d;
        if (f == T(0))
          continue;
        for (std::size_t r = 0; r < n; ++r)
          v[i][r] -= f * v[pivot][r];
        for (std::size_t j = 0; j < n; ++j) {
          if (!active[j])
            continue;
          s[i][j] -= f * s[pivot][j];
        }
      }
      // Keep the active block exactly symmetric.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (active[i] && active[j])
            s[j][i] = s[i][j];
    }
  }
};

template <typename T>
void require_square_symmetric(SquareMatrix<T> const &m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size())
      throw PreconditionError("matrix is not square");
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!(m[i][j] == m[j][i]))
        throw PreconditionError("matrix is not symmetric");
}

template <typename T>
SquareMatrix<T> identity_matrix(std::size_t n) {
  SquareMatrix<T> id(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    id[i][i] = T(1);
  return id;
}

} // namespace

mpq_class quadratic_form(SquareMatrix<mpq_class> const &m, std::vector<mpq_class> const &v) {
  mpq_class total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (v[i] == 0)
      continue;
    mpq_class row = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      row += m[i][j] * v[j];
    total += v[i] * row;
  }
  return total;
}

ExactPsdResult exact_psd(SquareMatrix<mpq_class> const &m) {
  require_square_symmetric(m);
  auto classify = [](mpq_class const &x) { return sgn(x); };
  Eliminator<mpq_class, decltype(classify)> e{m, identity_matrix<mpq_class>(m.size()), classify};
  ExactPsdResult out;
  out.witness = e.run(out.rank);
  out.psd = out.witness.empty();
  if (!out.psd) {
    out.witness_value = quadratic_form(m, out.witness);
    if (sgn(out.witness_value) >= 0)
      throw InconsistencyError("exact_psd produced a witness with non-negative quadratic form");
  }
  return out;
}

FloatPsdResult floating_psd(SquareMatrix<double> const &m, double relative_tolerance) {
  require_square_symmetric(m);
  double scale = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    scale = std::max(scale, std::abs(m[i][i]));
  FloatPsdResult out;
  out.threshold = relative_tolerance * (scale > 0.0 ? scale : 1.0);
  auto const threshold = out.threshold;
  auto classify = [threshold](double x) { return x > threshold ? 1 : (x < -threshold ? -1 : 0); };
  Eliminator<double, decltype(classify)> e{m, identity_matrix<double>(m.size()), classify};
  std::size_t rank = 0;
  out.witness = e.run(rank);
  out.psd = out.witness.empty();
  if (!out.psd) {
    double total = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        total += out.witness[i] * m[i][j] * out.witness[j];
    out.witness_value = total;
  }
  return out;
}

} // namespace s2inf
