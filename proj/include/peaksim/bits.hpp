// Copyright 2025 The peaksim developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace peaksim {

// An n-qubit computational basis label packed into a 64-bit word.
// Qubit 0 is the most significant bit, so a label compares like the
// string "x0 x1 ... x(n-1)" and doubles as a statevector index.
using Bits = std::uint64_t;

inline int bit_of(Bits x, int qubit, int n) {
    return static_cast<int>((x >> (n - 1 - qubit)) & 1u);
}

inline Bits with_bit(Bits x, int qubit, int n, int value) {
    const Bits mask = Bits{1} << (n - 1 - qubit);
    return value ? (x | mask) : (x & ~mask);
}

inline int weight(Bits x) { return std::popcount(x); }

inline std::string bits_to_string(Bits x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) {
        if (bit_of(x, j, n)) s[static_cast<std::size_t>(j)] = '1';
    }
    return s;
}

inline Bits bits_from_string(const std::string& s) {
    if (s.size() > 64) throw std::invalid_argument("bitstring longer than 64");
    Bits x = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bitstring must be over {0,1}");
        x = (x << 1) | static_cast<Bits>(c == '1');
    }
    return x;
}

}  // namespace peaksim
