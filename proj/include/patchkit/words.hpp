#pragma once

#include "patchkit/rational.hpp"

#include <cstdint>

namespace patchkit {

/// The binary Champernowne sequence: the concatenation 0,1,00,01,10,11,000,...
/// of all binary words ordered by length, then numerically. Positions are
/// 1-based. Every finite word occurs (its own block is an occurrence).
namespace champernowne {

/// Total bits contributed by the words of length <= len:
/// sum_{l<=len} l*2^l = (len-1)*2^(len+1) + 2.
inline std::int64_t bits_through_length(int len) {
    if (len <= 0) return 0;
    return (static_cast<std::int64_t>(len) - 1) * (std::int64_t(1) << (len + 1)) + 2;
}

/// 1-based start position of the block spelling the length-`len` word with
/// numeric value `value` (MSB first).
inline std::int64_t word_block_start(int len, std::int64_t value) {
    return bits_through_length(len - 1) + value * len + 1;
}

inline int bit(std::int64_t n) {
    if (n < 1) throw internal_error("champernowne position must be >= 1");
    int len = 1;
    while (bits_through_length(len) < n) ++len;
    std::int64_t offset = n - bits_through_length(len - 1) - 1;
    std::int64_t word = offset / len;
    int j = static_cast<int>(offset % len);
    return static_cast<int>((word >> (len - 1 - j)) & 1);
}

}  // namespace champernowne

}  // namespace patchkit
