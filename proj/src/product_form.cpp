#include "s2inf/product_form.hpp"

#include <map>
#include <numeric>

#include "s2inf/error.hpp"

namespace s2inf {

namespace {

CycleType direct_product(CycleType const &a, CycleType const &b) {
  CycleType out;
  for (auto [la, ca] : a.counts())
    for (auto [lb, cb] : b.counts()) {
      auto const g = std::gcd(la, lb);
      out.add(la / g * lb, ca * cb * g);
    }
  return out;
}

} // namespace

// BlockPermutation -----------------------------------------------------------

BlockPermutation::BlockPermutation(unsigned block_level, std::vector<CubePermutation> blocks)
    : block_level_(block_level), blocks_(std::move(blocks)) {
  for (auto const &b : blocks_)
    if (b.level() != block_level_)
      throw LevelMismatch("BlockPermutation: every block must have the block level");
}

BlockPermutation BlockPermutation::identity(unsigned block_level, unsigned block_count) {
  return {block_level, std::vector<CubePermutation>(block_count, CubePermutation::identity(block_level))};
}

std::uint64_t BlockPermutation::operator()(std::uint64_t y) const {
  auto const mask = (std::uint64_t{1} << block_level_) - 1;
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto const shift = i * block_level_;
    out |= blocks_[i]((y >> shift) & mask) << shift;
  }
  return out;
}

bool BlockPermutation::is_identity() const {
  for (auto const &b : blocks_)
    if (!b.is_identity())
      return false;
  return true;
}

Dyadic BlockPermutation::fixed_fraction() const {
  Dyadic out(1);
  for (auto const &b : blocks_)
    out *= s2inf::fixed_fraction(b);
  return out;
}

CycleType BlockPermutation::cycle_type() const {
  CycleType out;
  out.add(1);
  for (auto const &b : blocks_)
    out = direct_product(out, s2inf::cycle_type(b));
  return out;
}

BlockPermutation compose(BlockPermutation const &p, BlockPermutation const &q) {
  if (p.block_level_ != q.block_level_ || p.blocks_.size() != q.blocks_.size())
    throw LevelMismatch("BlockPermutation compose: block shapes differ");
  std::vector<CubePermutation> blocks;
  for (std::size_t i = 0; i < p.blocks_.size(); ++i)
    blocks.push_back(compose(p.blocks_[i], q.blocks_[i]));
  return {p.block_level_, std::move(blocks)};
}

BlockPermutation inverse(BlockPermutation const &p) {
  std::vector<CubePermutation> blocks;
  for (auto const &b : p.blocks_)
    blocks.push_back(inverse(b));
  return {p.block_level_, std::move(blocks)};
}

// ProductFormPermutation -----------------------------------------------------

ProductFormPermutation::ProductFormPermutation(CubePermutation head,
                                               std::vector<BlockPermutation> tails,
                                               std::vector<std::uint32_t> tail_of,
                                               Limits const &limits)
    : head_(std::move(head)), tails_(std::move(tails)), tail_of_(std::move(tail_of)) {
  if (tails_.empty())
    throw PreconditionError("ProductFormPermutation: at least one tail action is required");
  for (auto const &t : tails_)
    if (t.block_level() != tails_.front().block_level() ||
        t.block_count() != tails_.front().block_count())
      throw LevelMismatch("ProductFormPermutation: tail actions have different shapes");
  if (tail_of_.size() != head_.size())
    throw PreconditionError("ProductFormPermutation: tail_of needs one entry per head point");
  for (auto t : tail_of_)
    if (t >= tails_.size())
      throw PreconditionError("ProductFormPermutation: tail index out of range");
  if (level() > limits.max_product_level)
    throw CapExceeded("ProductFormPermutation: level " + std::to_string(level()) +
                      " exceeds the product-form cap");
}

std::uint64_t ProductFormPermutation::operator()(std::uint64_t point) const {
  auto const n = head_level();
  auto const x = point & ((std::uint64_t{1} << n) - 1);
  auto const y = point >> n;
  return head_(x) | (tail_at(x)(y) << n);
}

std::vector<Dyadic> ProductFormPermutation::fixed_profile() const {
  std::vector<Dyadic> out(head_.size());
  for (std::uint64_t x = 0; x < head_.size(); ++x)
    out[x] = head_(x) == x ? tail_at(x).fixed_fraction() : Dyadic(0);
  return out;
}

Dyadic ProductFormPermutation::fixed_fraction() const {
  Dyadic total(0);
  for (auto const &d : fixed_profile())
    total += d;
  return total * Dyadic(mpz_class(1), head_level());
}

CycleType ProductFormPermutation::cycle_type() const {
  // The orbit of (x, y) under a head cycle of length k returns to the fiber
  // of x through R = T_{x_{k-1}} o ... o T_{x_0}; each R-cycle of length L
  // gives one cycle of length k L.
  CycleType out;
  for (auto const &cycle : head_.cycles(true)) {
    auto r = tail_at(cycle.front());
    for (std::size_t i = 1; i < cycle.size(); ++i)
      r = compose(tail_at(cycle[i]), r);
    auto const rt = r.cycle_type();
    for (auto [len, count] : rt.counts())
      out.add(len * cycle.size(), count);
  }
  return out;
}

CubePermutation ProductFormPermutation::densify(Limits const &limits) const {
  if (level() > limits.max_dense_level)
    throw CapExceeded("densify: level " + std::to_string(level()) + " exceeds the dense cap");
  std::vector<std::uint32_t> images(std::size_t{1} << level());
  for (std::uint64_t p = 0; p < images.size(); ++p)
    images[p] = static_cast<std::uint32_t>((*this)(p));
  return {level(), std::move(images), limits};
}

ProductFormPermutation compose(ProductFormPermutation const &p, ProductFormPermutation const &q) {
  if (p.head_level() != q.head_level() || p.block_level() != q.block_level() ||
      p.block_count() != q.block_count())
    throw LevelMismatch("ProductFormPermutation compose: shapes differ");
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> cache;
  std::vector<BlockPermutation> tails;
  std::vector<std::uint32_t> tail_of(q.head_.size());
  for (std::uint64_t x = 0; x < q.head_.size(); ++x) {
    auto const key = std::make_pair(p.tail_of_[q.head_(x)], q.tail_of_[x]);
    auto [it, inserted] = cache.emplace(key, static_cast<std::uint32_t>(tails.size()));
    if (inserted)
      tails.push_back(compose(p.tails_[key.first], q.tails_[key.second]));
    tail_of[x] = it->second;
  }
  return {compose(p.head_, q.head_), std::move(tails), std::move(tail_of)};
}

ProductFormPermutation inverse(ProductFormPermutation const &p) {
  std::vector<BlockPermutation> tails;
  for (auto const &t : p.tails_)
    tails.push_back(inverse(t));
  std::vector<std::uint32_t> tail_of(p.head_.size());
  for (std::uint64_t x = 0; x < p.head_.size(); ++x)
    tail_of[p.head_(x)] = p.tail_of_[x];
  return {inverse(p.head_), std::move(tails), std::move(tail_of)};
}

} // namespace s2inf
