// census.hpp -- exact sequence counts and exhaustive complete-function census

#pragma once

#include <cstdint>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "prefseq/core.hpp"

namespace prefseq {

using BigInt = boost::multiprecision::cpp_int;

/// Default ceiling on constructive enumeration work.
inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

/// M(t,i): the total number of de Bruijn sequences of order i over t symbols
/// started at a fixed word, ((t-1)!)^(t^(i-1)) * t^(t^(i-1) - i).  Exact.
BigInt count_de_bruijn(unsigned t, unsigned i);

/// The published closed forms for the complexity distribution N_i versus the
/// telescoped M-differences.  The two disagree only at i = 1, where the
/// printed closed form misses the subtraction of the lower-order count; the
/// corrected value is the one the empirical census reproduces.
enum class CountMode { paper_literal, corrected };

/// N_i: the number of order-n de Bruijn sequences (started at the all-zero
/// word) of complexity exactly i; independent of n for n > i.  Exact.
BigInt count_by_complexity(unsigned t, unsigned i, CountMode mode);

/// Streams every complete preference function of the given span, each
/// exactly once: all least-digit assignments whose shift graph funnels into
/// the all-zero context, expanded by all orderings of each row's remaining
/// digits.  Deterministic order.  Throws std::length_error when the work
/// exceeds `guard`.
void enumerate_complete(unsigned t, unsigned span,
                        const std::function<void(const PreferenceFunction&)>& yield,
                        std::uint64_t guard = kDefaultEnumerationGuard);

/// Convenience: the same enumeration collected into a vector.
std::vector<PreferenceFunction> enumerate_complete(
    unsigned t, unsigned span, std::uint64_t guard = kDefaultEnumerationGuard);

/// Empirical complexity distribution of all order-n de Bruijn sequences.
struct CensusTable {
    unsigned t;
    unsigned order;
    /// counts[s] = number of sequences with complexity exactly s, s < order.
    std::vector<std::uint64_t> counts;
    std::uint64_t total;
};

/// Enumerates every complete function of span order-1, generates each
/// sequence and tabulates its complexity.
CensusTable empirical_census(unsigned t, unsigned order,
                             std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace prefseq
