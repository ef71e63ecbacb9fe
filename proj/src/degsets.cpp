#include "divdeg/degsets.hpp"

namespace divdeg {

void ReachabilityBitset::or_shifted(std::uint64_t shift) {
  if (shift == 0 || shift >= size_) return;
  const std::uint64_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  // High to low so every read sees the pre-shift value.
  for (std::size_t i = words_.size(); i-- > word_shift;) {
    std::uint64_t moved = words_[i - word_shift] << bit_shift;
    if (bit_shift != 0 && i > word_shift) moved |= words_[i - word_shift - 1] >> (64 - bit_shift);
    words_[i] |= moved;
  }
  if (const unsigned tail = size_ % 64; tail != 0) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

bool ReachabilityBitset::all_set(std::uint64_t lo, std::uint64_t hi) const {
  for (std::uint64_t i = lo; i <= hi;) {
    if (i % 64 == 0 && i + 63 <= hi) {
      if (words_[i / 64] != ~std::uint64_t{0}) return false;
      i += 64;
    } else {
      if (!test(i)) return false;
      ++i;
    }
  }
  return true;
}

bool covers_all_bitset_u64(const std::vector<DegreeCount<std::uint64_t>>& entries, std::uint64_t total,
                           std::uint64_t bound) {
  if (total > bound) throw OracleBoundExceeded("oracle bound exceeded: total " + std::to_string(total));
  ReachabilityBitset reach(total + 1);
  reach.set(0);
  for (const auto& e : entries) {
    std::uint64_t left = e.multiplicity;
    for (std::uint64_t chunk = 1; left > 0; chunk *= 2) {
      const std::uint64_t take = std::min(chunk, left);
      reach.or_shifted(e.degree * take);
      left -= take;
    }
  }
  return total == 0 || reach.all_set(1, total);
}

}  // namespace divdeg
