// The sixteen binary de Bruijn sequences of order 4 started at 0000, with
// their minimal preference spans.

#pragma once

#include <array>
#include <string>

namespace testdata {

inline constexpr std::array<const char*, 16> kOrder4Binary = {
    "0000100110101111000",  // 1
    "0000101001101111000",  // 2
    "0000111101100101000",  // 3: the Ford / prefer-one sequence
    "0000111101011001000",  // 4
    "0000100111101011000",  // 5
    "0000101001111011000",  // 6
    "0000110111100101000",  // 7
    "0000110101111001000",  // 8
    "0000101111001101000",  // 9
    "0000101111010011000",  // 10
    "0000101100111101000",  // 11
    "0000110010111101000",  // 12
    "0000111101001011000",  // 13
    "0000110100101111000",  // 14
    "0000101101001111000",  // 15
    "0000111100101101000",  // 16
};

inline constexpr std::array<unsigned, 16> kOrder4BinarySpans = {
    3, 3, 0, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3,
};

}  // namespace testdata
