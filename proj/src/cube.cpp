#include "s2inf/cube.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "s2inf/error.hpp"
#include "s2inf/perm.hpp"

namespace s2inf {

namespace {

void check_level(unsigned level, Limits const &limits) {
  if (level > limits.max_dense_level)
    throw CapExceeded("level " + std::to_string(level) + " exceeds the dense cap " +
                      std::to_string(limits.max_dense_level));
}

} // namespace

BinaryWord::BinaryWord(unsigned level, std::uint64_t index) : level_(level), index_(index) {
  if (level >= 64 || index >> level != 0)
    throw PreconditionError("word index " + std::to_string(index) + " out of range for level " +
                            std::to_string(level));
}

BinaryWord BinaryWord::from_bits(std::vector<std::uint8_t> const &bits) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1)
      throw PreconditionError("bits must be 0 or 1");
    index |= std::uint64_t{bits[i]} << i;
  }
  return {static_cast<unsigned>(bits.size()), index};
}

int BinaryWord::bit(unsigned coordinate) const {
  if (coordinate == 0 || coordinate > level_)
    throw PreconditionError("coordinate out of range");
  return static_cast<int>((index_ >> (coordinate - 1)) & 1u);
}

std::vector<std::uint8_t> BinaryWord::bits() const {
  std::vector<std::uint8_t> out(level_);
  for (unsigned i = 0; i < level_; ++i)
    out[i] = static_cast<std::uint8_t>((index_ >> i) & 1u);
  return out;
}

NiceSet::NiceSet(unsigned level, std::vector<bool> mask, Limits const &limits)
    : level_(level), mask_(std::move(mask)) {
  check_level(level, limits);
  if (mask_.size() != (std::size_t{1} << level))
    throw PreconditionError("nice set mask must have 2^level entries");
  size_ = static_cast<std::uint64_t>(std::count(mask_.begin(), mask_.end(), true));
}

NiceSet NiceSet::empty(unsigned level) {
  return {level, std::vector<bool>(std::size_t{1} << level, false)};
}

NiceSet NiceSet::full(unsigned level) {
  return {level, std::vector<bool>(std::size_t{1} << level, true)};
}

NiceSet NiceSet::coordinate_equals(unsigned coordinate, int value) {
  if (coordinate == 0 || (value != 0 && value != 1))
    throw PreconditionError("coordinate_equals: coordinate >= 1 and value in {0,1}");
  std::vector<bool> mask(std::size_t{1} << coordinate);
  for (std::size_t x = 0; x < mask.size(); ++x)
    mask[x] = static_cast<int>((x >> (coordinate - 1)) & 1u) == value;
  return {coordinate, std::move(mask)};
}

NiceSet NiceSet::from_indices(unsigned level, std::vector<std::uint64_t> const &members) {
  auto mask = std::vector<bool>(std::size_t{1} << level, false);
  for (auto x : members) {
    if (x >= mask.size())
      throw PreconditionError("member index out of range");
    mask[x] = true;
  }
  return {level, std::move(mask)};
}

bool NiceSet::contains_word(std::uint64_t index) const {
  return mask_[index & ((std::uint64_t{1} << level_) - 1)];
}

NiceSet NiceSet::lift(unsigned target, Limits const &limits) const {
  if (target < level_)
    throw LevelMismatch("cannot lift a nice set to a lower level");
  check_level(target, limits);
  std::vector<bool> mask(std::size_t{1} << target);
  for (std::size_t x = 0; x < mask.size(); ++x)
    mask[x] = contains_word(x);
  return {target, std::move(mask), limits};
}

NiceSet NiceSet::canonical() const {
  auto mask = mask_;
  auto level = level_;
  while (level > 0) {
    auto const half = std::size_t{1} << (level - 1);
    bool fibered = true;
    for (std::size_t x = 0; x < half && fibered; ++x)
      fibered = mask[x] == mask[x + half];
    if (!fibered)
      break;
    mask.resize(half);
    --level;
  }
  return {level, std::move(mask)};
}

NiceSet NiceSet::complement() const {
  auto mask = mask_;
  mask.flip();
  return {level_, std::move(mask)};
}

NiceSet NiceSet::image(CubePermutation const &p) const {
  if (p.level() < level_)
    throw LevelMismatch("image: permutation level below nice set level");
  auto lifted = lift(p.level());
  std::vector<bool> mask(lifted.mask().size(), false);
  for (std::size_t x = 0; x < mask.size(); ++x)
    if (lifted.contains(x))
      mask[p(x)] = true;
  return {p.level(), std::move(mask)};
}

bool operator==(NiceSet const &a, NiceSet const &b) {
  auto const level = std::max(a.level_, b.level_);
  auto const n = std::size_t{1} << level;
  for (std::size_t x = 0; x < n; ++x)
    if (a.contains_word(x) != b.contains_word(x))
      return false;
  return true;
}

NiceSet NiceSet::parse(std::string_view text, Limits const &limits) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.rfind("k=", 0) != 0)
    throw ParseError("nice set must look like k=<level>:<mask>: " + std::string(text));
  auto const colon = s.find(':');
  if (colon == std::string::npos)
    throw ParseError("nice set is missing ':': " + std::string(text));
  unsigned level = 0;
  try {
    level = static_cast<unsigned>(std::stoul(s.substr(2, colon - 2)));
  } catch (std::exception const &) {
    throw ParseError("bad nice set level: " + std::string(text));
  }
  check_level(level, limits);
  auto const body = s.substr(colon + 1);
  auto const n = std::size_t{1} << level;
  std::vector<bool> mask(n, false);
  if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) {
    auto const hex = body.substr(2);
    // Least significant hex digit is last.
    for (std::size_t d = 0; d < hex.size(); ++d) {
      auto const c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[hex.size() - 1 - d])));
      int v = 0;
      if (c >= '0' && c <= '9')
        v = c - '0';
      else if (c >= 'a' && c <= 'f')
        v = c - 'a' + 10;
      else
        throw ParseError("bad hex digit in nice set: " + std::string(text));
      for (int b = 0; b < 4; ++b) {
        if (((v >> b) & 1) == 0)
          continue;
        auto const idx = 4 * d + static_cast<std::size_t>(b);
        if (idx >= n)
          throw ParseError("hex mask has bits beyond 2^level: " + std::string(text));
        mask[idx] = true;
      }
    }
  } else {
    if (body.size() != n)
      throw ParseError("binary mask must have exactly 2^level characters: " + std::string(text));
    for (std::size_t i = 0; i < n; ++i) {
      if (body[i] != '0' && body[i] != '1')
        throw ParseError("binary mask must consist of 0 and 1: " + std::string(text));
      mask[i] = body[i] == '1';
    }
  }
  return {level, std::move(mask), limits};
}

std::string NiceSet::to_string() const {
  std::string out = "k=" + std::to_string(level_) + ":";
  for (bool b : mask_)
    out.push_back(b ? '1' : '0');
  return out;
}

Dyadic measure(NiceSet const &a) { return Dyadic::fraction(a.size(), a.level()); }

NiceSet nice_intersect(NiceSet const &a, NiceSet const &b) {
  auto const level = std::max(a.level(), b.level());
  std::vector<bool> mask(std::size_t{1} << level);
  for (std::size_t x = 0; x < mask.size(); ++x)
    mask[x] = a.contains_word(x) && b.contains_word(x);
  return {level, std::move(mask)};
}

NiceSet nice_union(NiceSet const &a, NiceSet const &b) {
  auto const level = std::max(a.level(), b.level());
  std::vector<bool> mask(std::size_t{1} << level);
  for (std::size_t x = 0; x < mask.size(); ++x)
    mask[x] = a.contains_word(x) || b.contains_word(x);
  return {level, std::move(mask)};
}

NiceSet nice_product(NiceSet const &c, NiceSet const &d) {
  auto const level = c.level() + d.level();
  check_level(level, {});
  std::vector<bool> mask(std::size_t{1} << level);
  for (std::size_t x = 0; x < mask.size(); ++x)
    mask[x] = c.contains(x & ((std::size_t{1} << c.level()) - 1)) && d.contains(x >> c.level());
  return {level, std::move(mask)};
}

CubePermutation odometer(unsigned level, Limits const &limits) {
  if (level == 0)
    throw PreconditionError("odometer: level must be at least 1");
  check_level(level, limits);
  auto const n = std::uint32_t{1} << level;
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t x = 0; x < n; ++x)
    images[x] = (x + 1) & (n - 1);
  return {level, std::move(images), limits};
}

} // namespace s2inf
