// core.hpp -- alphabets, words, preference tables and the least preference map
//
// Every type here is immutable after construction and safe to share across
// concurrent readers.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prefseq {

/// A symbol of the alphabet {0, ..., t-1}.
using Digit = std::uint8_t;

/// A fixed-length string of digits.  Contexts have length `span`,
/// windows have length `order`.
using Word = std::vector<Digit>;

/// Largest supported alphabet: digits serialize as single characters
/// 0-9a-z, which caps t at 36.
inline constexpr unsigned kMaxAlphabetSize = 36;

/// The digit set {0, ..., t-1}.
struct Alphabet {
    unsigned size;

    explicit Alphabet(unsigned t) : size(t) {
        if (t < 2)
            throw std::invalid_argument("alphabet size must be at least 2");
        if (t > kMaxAlphabetSize)
            throw std::invalid_argument("alphabet size must be at most 36");
    }

    bool contains(Digit d) const noexcept { return d < size; }
    bool operator==(const Alphabet&) const noexcept = default;
};

// -- digit and word helpers --------------------------------------------------

/// Single-character digit form: 0-9 then a-z.
char digit_to_char(Digit d);

/// Inverse of digit_to_char; accepts upper case letters too.
std::optional<Digit> digit_from_char(char c);

/// True when every digit of `w` is below `t`.
bool word_in_alphabet(const Word& w, unsigned t);

/// Base-t value of a word, first digit most significant.
std::uint64_t word_value(const Word& w, unsigned t);

/// The length-`length` word whose base-t value is `value`.
Word word_from_value(std::uint64_t value, unsigned t, std::size_t length);

/// The all-zero word of the given length.
Word zero_word(std::size_t length);

/// Contiguous single-character rendering (contexts, windows).
std::string format_word(const Word& w);

/// base^exp, or nullopt when the result would exceed `limit`.
std::optional<std::uint64_t> pow_checked(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit);

// -- sequence serialization ---------------------------------------------------

/// Digit string for t <= 10, comma-separated decimals above.
std::string format_sequence(const Word& digits, unsigned t);

/// Inverse of format_sequence.  Throws std::invalid_argument on bad input.
Word parse_sequence(const std::string& text, unsigned t);

// -- preference functions -----------------------------------------------------

/// A total map from length-`span` contexts to permutations of the alphabet:
/// the priority order of digits to try after that context.
class PreferenceFunction {
public:
    /// `rows[c]` is the permutation for the context whose base-t value is c.
    /// Throws std::invalid_argument unless there are exactly t^span rows and
    /// every row is a permutation of {0, ..., t-1}.
    PreferenceFunction(Alphabet alphabet, unsigned span, std::vector<Word> rows);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    unsigned t() const noexcept { return alphabet_.size; }
    unsigned span() const noexcept { return span_; }
    std::size_t context_count() const noexcept { return rows_.size(); }

    const Word& row(std::size_t context_id) const { return rows_.at(context_id); }

    /// P_t of the given context: the digit tried last.
    Digit least(std::size_t context_id) const { return rows_.at(context_id).back(); }

    bool operator==(const PreferenceFunction&) const = default;

private:
    Alphabet alphabet_;
    unsigned span_;
    std::vector<Word> rows_;
};

/// The same function viewed at a larger span: each longer context uses the
/// row of its length-`span` suffix.
PreferenceFunction lift_span(const PreferenceFunction& p, unsigned new_span);

// -- least preference map -----------------------------------------------------

/// The functional graph of g on contexts: g(a_1...a_k) is the left shift of
/// the context with the least-preferred digit appended.
struct LeastPreferenceMap {
    unsigned t;
    unsigned span;
    /// next[c] = base-t value of g(context c).
    std::vector<std::size_t> next;
    /// Cycle decomposition of the graph.  Each cycle starts at its smallest
    /// context id; cycles are sorted by that id.
    std::vector<std::vector<std::size_t>> cycles;
};

LeastPreferenceMap least_preference(const PreferenceFunction& p);

/// Cycle extraction for an arbitrary total map on {0, ..., map.size()-1}.
/// Iterative three-color walk; cycles are normalized as in LeastPreferenceMap.
std::vector<std::vector<std::size_t>> find_cycles(const std::vector<std::size_t>& map);

// -- digit sequences ----------------------------------------------------------

enum class SequenceOrigin { generated, supplied };

/// A generated or supplied sequence with its declared alphabet and order.
/// Linear convention: a full de Bruijn sequence of order n has t^n + n - 1
/// digits and every length-n window occurs exactly once.
class DigitSequence {
public:
    DigitSequence(Alphabet alphabet, unsigned order, Word digits,
                  SequenceOrigin origin = SequenceOrigin::supplied,
                  std::optional<std::size_t> halt_length = std::nullopt);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    unsigned t() const noexcept { return alphabet_.size; }
    unsigned order() const noexcept { return order_; }
    const Word& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    SequenceOrigin origin() const noexcept { return origin_; }

    /// The cycle period L: the number of length-`order` windows the run
    /// realized.  For generated sequences this is recorded by the generator
    /// (wrap digits do not count); otherwise it is derived from the length.
    std::size_t halt_length() const noexcept { return halt_length_; }

    bool starts_with_zeros() const;

    std::string to_string() const { return format_sequence(digits_, t()); }

private:
    Alphabet alphabet_;
    unsigned order_;
    Word digits_;
    SequenceOrigin origin_;
    std::size_t halt_length_;
};

// -- preference table text format ----------------------------------------------

/// Parse failure with a 1-based line number, e.g. "line 3: row is not a
/// permutation".
class TableParseError : public std::runtime_error {
public:
    TableParseError(unsigned line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    unsigned line() const noexcept { return line_; }

private:
    unsigned line_;
};

/// Text format: optional '#' comment lines, a header `t=<int> span=<int>`,
/// then exactly t^span rows `CONTEXT: d1 d2 ... dt`.  CONTEXT is `span`
/// digit characters, or `-` when span is 0.  Rows may appear in any order.
PreferenceFunction parse_preference_table(const std::string& text);

/// Canonical form: header then rows in numeric context order.
std::string format_preference_table(const PreferenceFunction& p);

}  // namespace prefseq
