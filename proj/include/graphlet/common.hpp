// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphlet {

// Internal vertex/edge ids are dense 32-bit. Graph construction rejects
// inputs with 2^32 or more vertices/edges; original labels are full 64-bit.
using vid_t = std::uint32_t;
using eid_t = std::uint32_t;

// Global counts scale as C(n,4) and overflow 64 bits around n ~ 1e5,
// so the count algebra runs on 128-bit unsigned throughout.
using count_t = unsigned __int128;

class count_overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline count_t checked_add(count_t a, count_t b) {
    count_t s = a + b;
    if (s < a) throw count_overflow_error("128-bit count accumulator overflow");
    return s;
}

// C(x,2), C(x,3), C(x,4) as exact 128-bit values.
inline count_t choose2(std::uint64_t x) {
    if (x < 2) return 0;
    return (count_t)x * (x - 1) / 2;
}
inline count_t choose3(std::uint64_t x) {
    if (x < 3) return 0;
    return (count_t)x * (x - 1) / 2 * (x - 2) / 3;
}
inline count_t choose4(std::uint64_t x) {
    if (x < 4) return 0;
    return (count_t)x * (x - 1) / 2 * (x - 2) / 3 * (x - 3) / 4;
}

std::string to_decimal(count_t v);
count_t from_decimal(std::string_view s);

} // namespace graphlet
