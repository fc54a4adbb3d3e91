#include "doctest.h"
#include "s2inf/error.hpp"
#include "s2inf/psd.hpp"
#include "s2inf/random.hpp"

using namespace s2inf;

namespace {

// B^T B for an integer matrix B: PSD by construction, rank at most rows(B).
SquareMatrix<mpq_class> gram_of(std::vector<std::vector<long>> const &b) {
  auto const n = b.front().size();
  SquareMatrix<mpq_class> g(n, std::vector<mpq_class>(n, 0));
  for (auto const &row : b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g[i][j] += row[i] * row[j];
  return g;
}

SquareMatrix<double> to_double(SquareMatrix<mpq_class> const &m) {
  SquareMatrix<double> out(m.size(), std::vector<double>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out[i][j] = m[i][j].get_d();
  return out;
}

} // namespace

TEST_CASE("small exact cases") {
  SquareMatrix<mpq_class> const id{{1, 0}, {0, 1}};
  CHECK(exact_psd(id).psd);
  CHECK(exact_psd(id).rank == 2);

  SquareMatrix<mpq_class> const swap{{0, 1}, {1, 0}};
  auto const r = exact_psd(swap);
  REQUIRE_FALSE(r.psd);
  CHECK(r.witness_value < 0);
  CHECK(quadratic_form(swap, r.witness) == r.witness_value);

  SquareMatrix<mpq_class> const zero{{0, 0}, {0, 0}};
  CHECK(exact_psd(zero).psd);
  CHECK(exact_psd(zero).rank == 0);

  SquareMatrix<mpq_class> const ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  CHECK(exact_psd(ones).psd);
  CHECK(exact_psd(ones).rank == 1);
}

TEST_CASE("random Gram matrices are PSD with the right rank") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t const n = 2 + rng.below(6), k = 1 + rng.below(n);
    std::vector<std::vector<long>> b(k, std::vector<long>(n));
    for (auto &row : b)
      for (auto &v : row)
        v = static_cast<long>(rng.below(7)) - 3;
    auto const g = gram_of(b);
    auto const r = exact_psd(g);
    CHECK(r.psd);
    CHECK(r.rank <= k);
    CHECK(floating_psd(to_double(g)).psd);
  }
}

TEST_CASE("perturbed Gram matrices yield verified witnesses") {
  Rng rng(12);
  int negatives = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t const n = 3 + rng.below(5);
    std::vector<std::vector<long>> b(n - 1, std::vector<long>(n));
    for (auto &row : b)
      for (auto &v : row)
        v = static_cast<long>(rng.below(5)) - 2;
    auto g = gram_of(b);
    // Rank <= n - 1, so subtracting from one diagonal entry can only break
    // PSD-ness when it leaves the range; either way the verdict must be
    // backed by a witness.
    auto const i = rng.below(n);
    g[i][i] -= 1;
    auto const r = exact_psd(g);
    if (!r.psd) {
      ++negatives;
      CHECK(quadratic_form(g, r.witness) < 0);
      auto const f = floating_psd(to_double(g));
      CHECK_FALSE(f.psd);
    }
  }
  CHECK(negatives > 0);
}

TEST_CASE("negative definite matrix") {
  SquareMatrix<mpq_class> const m{{-1, 0}, {0, -2}};
  auto const r = exact_psd(m);
  REQUIRE_FALSE(r.psd);
  CHECK(quadratic_form(m, r.witness) < 0);
}
