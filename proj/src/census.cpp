#include "prefseq/census.hpp"

#include <algorithm>

#include "prefseq/analysis.hpp"
#include "prefseq/generator.hpp"

namespace prefseq {

namespace {

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// t^e as a machine exponent; the closed forms need it both as an exponent
// and an integer.
std::uint64_t small_power(unsigned t, unsigned e) {
    auto v = pow_checked(t, e, std::uint64_t(1) << 32);
    if (!v) throw std::overflow_error("count exponent t^" + std::to_string(e) +
                                      " is too large to evaluate");
    return *v;
}

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

}  // namespace

BigInt count_de_bruijn(unsigned t, unsigned i) {
    if (t < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (i < 1) throw std::invalid_argument("order must be at least 1");
    const std::uint64_t e = small_power(t, i - 1);  // t^(i-1)
    if (e < i) throw std::overflow_error("order exceeds t^(i-1)");
    return big_pow(factorial(t - 1), e) * big_pow(t, e - i);
}

BigInt count_by_complexity(unsigned t, unsigned i, CountMode mode) {
    if (t < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (i == 0) return factorial(t - 1);
    if (mode == CountMode::paper_literal && i == 1)
        return big_pow(factorial(t - 1), t) * big_pow(t, t - 2);
    // For i > 1 the printed closed form telescopes to the same difference.
    return count_de_bruijn(t, i + 1) - count_de_bruijn(t, i);
}

// -- constructive enumeration ---------------------------------------------------

namespace {

// True when every context funnels into the all-zero context under
// c -> shift(c) + least[c], and that context is a fixed point.
bool funnels_to_zero(const std::vector<Digit>& least, unsigned t, unsigned span) {
    const std::size_t m = least.size();
    if (span == 0) return least[0] == 0;
    if (least[0] != 0) return false;
    const std::size_t shift_mod = m / t;

    enum : unsigned char { unknown, good, walking };
    std::vector<unsigned char> state(m, unknown);
    state[0] = good;
    std::vector<std::size_t> path;
    for (std::size_t start = 1; start < m; ++start) {
        if (state[start] != unknown) continue;
        path.clear();
        std::size_t v = start;
        while (state[v] == unknown) {
            state[v] = walking;
            path.push_back(v);
            v = (v % shift_mod) * t + least[v];
        }
        if (state[v] == walking) return false;  // a cycle off the root
        for (std::size_t u : path) state[u] = good;
    }
    return true;
}

// All permutations of {0..t-1} \ {excluded}, in lexicographic order.
std::vector<Word> orderings_without(unsigned t, Digit excluded) {
    Word base;
    for (unsigned d = 0; d < t; ++d)
        if (static_cast<Digit>(d) != excluded) base.push_back(static_cast<Digit>(d));
    std::vector<Word> all;
    do {
        all.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return all;
}

}  // namespace

namespace {

// Advance a mixed-radix counter; false once it wraps around to all zeros.
bool advance_counter(std::vector<std::size_t>& counter, std::size_t radix) {
    for (std::size_t i = counter.size(); i-- > 0;) {
        if (++counter[i] < radix) return true;
        counter[i] = 0;
    }
    return false;
}

}  // namespace

void enumerate_complete(unsigned t, unsigned span,
                        const std::function<void(const PreferenceFunction&)>& yield,
                        std::uint64_t guard) {
    const Alphabet alphabet(t);
    auto contexts = pow_checked(t, span, guard);
    if (!contexts)
        throw std::length_error("enumeration guard exceeded: too many contexts");
    const std::size_t m = static_cast<std::size_t>(*contexts);  // m >= 1

    // Work bound: the t^m least-digit assignments swept plus the complete
    // functions they expand into.
    if (!pow_checked(t, static_cast<unsigned>(m), guard))
        throw std::length_error("enumeration guard exceeded: too many least-digit "
                                "assignments");
    BigInt total = count_de_bruijn(t, span + 1);
    if (total > guard)
        throw std::length_error("enumeration guard exceeded: " + total.str() +
                                " complete functions");

    // Per excluded digit, the orderings of the remaining ones.
    std::vector<std::vector<Word>> orderings(t);
    for (unsigned d = 0; d < t; ++d)
        orderings[d] = orderings_without(t, static_cast<Digit>(d));
    const std::size_t per_row = orderings[0].size();  // (t-1)!

    std::vector<std::size_t> least_pick(m, 0);
    std::vector<Digit> least(m, 0);
    do {
        for (std::size_t c = 0; c < m; ++c) least[c] = static_cast<Digit>(least_pick[c]);
        if (!funnels_to_zero(least, t, span)) continue;

        // Odometer over the row orderings of every context.
        std::vector<std::size_t> pick(m, 0);
        std::vector<Word> rows(m);
        do {
            for (std::size_t c = 0; c < m; ++c) {
                rows[c] = orderings[least[c]][pick[c]];
                rows[c].push_back(least[c]);
            }
            yield(PreferenceFunction(alphabet, span, rows));
        } while (advance_counter(pick, per_row));
    } while (advance_counter(least_pick, t));
}

std::vector<PreferenceFunction> enumerate_complete(unsigned t, unsigned span,
                                                   std::uint64_t guard) {
    std::vector<PreferenceFunction> all;
    enumerate_complete(
        t, span, [&](const PreferenceFunction& p) { all.push_back(p); }, guard);
    return all;
}

CensusTable empirical_census(unsigned t, unsigned order, std::uint64_t guard) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    CensusTable table{t, order, std::vector<std::uint64_t>(order, 0), 0};
    enumerate_complete(
        t, order - 1,
        [&](const PreferenceFunction& p) {
            DigitSequence s = generate_from_zeros(p, order);
            ComplexityReport report = complexity(s);
            ++table.counts[report.span];
            ++table.total;
        },
        guard);
    return table;
}

}  // namespace prefseq
