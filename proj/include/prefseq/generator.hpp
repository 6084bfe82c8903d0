// generator.hpp -- greedy sequence generation from preference functions

#pragma once

#include <cstdint>
#include <functional>

#include "prefseq/core.hpp"

namespace prefseq {

/// Default ceiling on the number of length-n windows a single run may track.
inline constexpr std::uint64_t kDefaultWindowGuard = std::uint64_t(1) << 31;

struct GenerateOptions {
    /// Append the first n-1 digits after halting, matching how full
    /// sequences are usually listed.
    bool wrap = false;
    /// Refuse runs whose window table would exceed this many entries.
    std::uint64_t max_windows = kDefaultWindowGuard;
};

/// Greedy generation: starting from `initial`, repeatedly propose digits in
/// the priority order of the last `span` digits and accept the first whose
/// length-`order` window is new; halt when none is.  Deterministic.
///
/// Requires order >= span+1 and an initial word of length `order` over the
/// function's alphabet.  Throws std::length_error when t^order exceeds the
/// window guard.
DigitSequence generate(const PreferenceFunction& p, unsigned order,
                       const Word& initial, const GenerateOptions& options = {});

/// generate() from the all-zero initial word.
DigitSequence generate_from_zeros(const PreferenceFunction& p, unsigned order,
                                  const GenerateOptions& options = {});

/// Span-0 function with the single row (t-1, t-2, ..., 0); generates the
/// Ford sequence (binary: prefer-one).
PreferenceFunction prefer_higher(unsigned t);

/// Binary span-1 function proposing the opposite of the last bit first:
/// 0 -> (1,0), 1 -> (0,1).
PreferenceFunction prefer_opposite_binary();

/// Largest r such that the length-r suffix of `context` equals the length-r
/// prefix of `initial`.  Requires context.size() + 1 == initial.size().
unsigned max_overlap(const Word& context, const Word& initial);

/// Orders the t-1 digits other than `least`; the result becomes P_1..P_{t-1}.
using OverlapFill = std::function<Word(const Word& context, Digit least)>;

/// Span n-1 function whose least preference at each context is the initial
/// word's digit just past the maximal overlap.  Generating from `initial`
/// then yields a full sequence of order n.  The default fill orders the
/// remaining digits decreasingly.
PreferenceFunction overlap_preference(Alphabet alphabet, const Word& initial,
                                      const OverlapFill& fill = {});

/// The oracle: true iff the sequence has exactly t^n + n - 1 digits and
/// every length-n window occurs exactly once (linear convention).
bool is_de_bruijn(const DigitSequence& s);

/// The length-n windows that never occur in the sequence, in increasing
/// base-t order.  Duplicated windows do not count as covering anything extra.
std::vector<Word> missing_windows(const DigitSequence& s,
                                  std::uint64_t max_windows = kDefaultWindowGuard);

}  // namespace prefseq
