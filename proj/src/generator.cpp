#include "prefseq/generator.hpp"

#include <algorithm>
#include <string>

namespace prefseq {

namespace {

std::uint64_t window_count_or_throw(unsigned t, unsigned order,
                                    std::uint64_t max_windows) {
    auto count = pow_checked(t, order, max_windows);
    if (!count)
        throw std::length_error("window table of " + std::to_string(t) + "^" +
                                std::to_string(order) +
                                " entries exceeds the memory guard");
    return *count;
}

}  // namespace

DigitSequence generate(const PreferenceFunction& p, unsigned order,
                       const Word& initial, const GenerateOptions& options) {
    const unsigned t = p.t();
    const unsigned k = p.span();
    if (order < k + 1)
        throw std::invalid_argument("order must be at least span+1");
    if (initial.size() != order)
        throw std::invalid_argument("initial word must have exactly `order` digits");
    if (!word_in_alphabet(initial, t))
        throw std::invalid_argument("initial word digit outside the function's alphabet");

    const std::uint64_t windows = window_count_or_throw(t, order, options.max_windows);
    const std::uint64_t window_shift = windows / t;  // t^(order-1)
    const std::uint64_t context_mod = p.context_count();

    std::vector<bool> visited(windows, false);
    Word digits = initial;
    digits.reserve(static_cast<std::size_t>(
        std::min<std::uint64_t>(windows + order - 1, std::uint64_t(1) << 20)));

    std::uint64_t window = word_value(initial, t);
    visited[window] = true;
    std::uint64_t context = 0;
    for (unsigned i = order - k; i < order; ++i)
        context = context * t + initial[i];

    for (;;) {
        const Word& row = p.row(static_cast<std::size_t>(context));
        const std::uint64_t base = (window % window_shift) * t;
        bool accepted = false;
        for (Digit d : row) {
            const std::uint64_t candidate = base + d;
            if (!visited[candidate]) {
                visited[candidate] = true;
                digits.push_back(d);
                window = candidate;
                context = (context * t + d) % context_mod;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    const std::size_t halt_length = digits.size() - order + 1;
    if (options.wrap) {
        const Word head(digits.begin(), digits.begin() + order - 1);
        digits.insert(digits.end(), head.begin(), head.end());
    }
    return DigitSequence(p.alphabet(), order, std::move(digits),
                         SequenceOrigin::generated, halt_length);
}

DigitSequence generate_from_zeros(const PreferenceFunction& p, unsigned order,
                                  const GenerateOptions& options) {
    return generate(p, order, zero_word(order), options);
}

PreferenceFunction prefer_higher(unsigned t) {
    Word row(t);
    for (unsigned i = 0; i < t; ++i) row[i] = static_cast<Digit>(t - 1 - i);
    return PreferenceFunction(Alphabet(t), 0, {std::move(row)});
}

PreferenceFunction prefer_opposite_binary() {
    return PreferenceFunction(Alphabet(2), 1, {{1, 0}, {0, 1}});
}

unsigned max_overlap(const Word& context, const Word& initial) {
    if (context.size() + 1 != initial.size())
        throw std::invalid_argument("context must be one digit shorter than the initial word");
    const std::size_t n1 = context.size();
    for (std::size_t r = n1; r > 0; --r) {
        if (std::equal(context.end() - r, context.end(), initial.begin(),
                       initial.begin() + r))
            return static_cast<unsigned>(r);
    }
    return 0;
}

PreferenceFunction overlap_preference(Alphabet alphabet, const Word& initial,
                                      const OverlapFill& fill) {
    const unsigned t = alphabet.size;
    if (initial.empty())
        throw std::invalid_argument("initial word must not be empty");
    if (!word_in_alphabet(initial, t))
        throw std::invalid_argument("initial word digit outside the alphabet");
    const unsigned span = static_cast<unsigned>(initial.size() - 1);

    auto count = pow_checked(t, span, kDefaultWindowGuard);
    if (!count) throw std::length_error("overlap table exceeds the memory guard");

    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(*count));
    for (std::uint64_t c = 0; c < *count; ++c) {
        Word context = word_from_value(c, t, span);
        unsigned r = max_overlap(context, initial);
        Digit least = initial[r];
        Word row;
        if (fill) {
            row = fill(context, least);
            if (row.size() != static_cast<std::size_t>(t) - 1)
                throw std::invalid_argument("fill rule must order the other t-1 digits");
        } else {
            for (unsigned d = t; d-- > 0;)
                if (static_cast<Digit>(d) != least) row.push_back(static_cast<Digit>(d));
        }
        row.push_back(least);
        rows.push_back(std::move(row));
    }
    return PreferenceFunction(alphabet, span, std::move(rows));
}

bool is_de_bruijn(const DigitSequence& s) {
    const unsigned t = s.t();
    const unsigned n = s.order();
    auto count = pow_checked(t, n, kDefaultWindowGuard);
    if (!count) return false;
    const std::uint64_t windows = *count;
    if (s.size() != windows + n - 1) return false;

    const std::uint64_t shift = windows / t;
    const Word& digits = s.digits();
    std::vector<bool> seen(windows, false);

    std::uint64_t w = 0;
    for (unsigned i = 0; i < n; ++i) w = w * t + digits[i];
    seen[w] = true;
    for (std::size_t i = n; i < digits.size(); ++i) {
        w = (w % shift) * t + digits[i];
        if (seen[w]) return false;
        seen[w] = true;
    }
    // Exactly t^n windows in a sequence of this length, all distinct, so
    // every window occurred once.
    return true;
}

std::vector<Word> missing_windows(const DigitSequence& s, std::uint64_t max_windows) {
    const unsigned t = s.t();
    const unsigned n = s.order();
    const std::uint64_t windows = window_count_or_throw(t, n, max_windows);
    const std::uint64_t shift = windows / t;
    const Word& digits = s.digits();

    std::vector<bool> seen(windows, false);
    if (digits.size() >= n) {
        std::uint64_t w = 0;
        for (unsigned i = 0; i < n; ++i) w = w * t + digits[i];
        seen[w] = true;
        for (std::size_t i = n; i < digits.size(); ++i) {
            w = (w % shift) * t + digits[i];
            seen[w] = true;
        }
    }
    std::vector<Word> missing;
    for (std::uint64_t w = 0; w < windows; ++w)
        if (!seen[w]) missing.push_back(word_from_value(w, t, n));
    return missing;
}

}  // namespace prefseq
