#include "prefseq/analysis.hpp"

#include <algorithm>

namespace prefseq {

// -- PrecedenceConstraints ------------------------------------------------------

PrecedenceConstraints::PrecedenceConstraints(Alphabet alphabet, unsigned span)
    : alphabet_(alphabet), span_(span) {
    auto count = pow_checked(alphabet.size, span, std::uint64_t(1) << 24);
    if (!count) throw std::length_error("constraint table too large");
    context_count_ = static_cast<std::size_t>(*count);
    edges_.assign(context_count_ * alphabet.size * alphabet.size, false);
}

std::size_t PrecedenceConstraints::edge_index(std::size_t context_id, Digit before,
                                              Digit after) const {
    return (context_id * alphabet_.size + before) * alphabet_.size + after;
}

void PrecedenceConstraints::add_edge(std::size_t context_id, Digit before,
                                     Digit after) {
    if (context_id >= context_count_ || before >= t() || after >= t() ||
        before == after)
        throw std::invalid_argument("invalid precedence edge");
    edges_[edge_index(context_id, before, after)] = true;
}

bool PrecedenceConstraints::has_edge(std::size_t context_id, Digit before,
                                     Digit after) const {
    return edges_[edge_index(context_id, before, after)];
}

std::optional<Word> PrecedenceConstraints::smallest_extension(
    std::size_t context_id) const {
    const unsigned n = t();
    Word order;
    order.reserve(n);
    std::vector<bool> placed(n, false);
    for (unsigned step = 0; step < n; ++step) {
        bool found = false;
        for (unsigned d = 0; d < n && !found; ++d) {
            if (placed[d]) continue;
            bool ready = true;
            for (unsigned u = 0; u < n; ++u) {
                if (!placed[u] && u != d &&
                    has_edge(context_id, static_cast<Digit>(u), static_cast<Digit>(d))) {
                    ready = false;
                    break;
                }
            }
            if (ready) {
                order.push_back(static_cast<Digit>(d));
                placed[d] = true;
                found = true;
            }
        }
        if (!found) return std::nullopt;  // every remaining digit is blocked
    }
    return order;
}

std::optional<PrecedenceCycle> PrecedenceConstraints::find_conflict() const {
    const unsigned n = t();
    for (std::size_t c = 0; c < context_count_; ++c) {
        if (smallest_extension(c)) continue;

        // Peel off digits with no unsatisfied predecessor; the leftover set
        // is nonempty and every member has a leftover predecessor.
        std::vector<bool> removed(n, false);
        bool changed = true;
        while (changed) {
            changed = false;
            for (unsigned d = 0; d < n; ++d) {
                if (removed[d]) continue;
                bool ready = true;
                for (unsigned u = 0; u < n; ++u)
                    if (!removed[u] && u != d &&
                        has_edge(c, static_cast<Digit>(u), static_cast<Digit>(d))) {
                        ready = false;
                        break;
                    }
                if (ready) {
                    removed[d] = true;
                    changed = true;
                }
            }
        }

        // Walk predecessors inside the leftover set until a digit repeats.
        unsigned start = 0;
        while (removed[start]) ++start;
        std::vector<unsigned> walk{start};
        std::vector<int> seen_at(n, -1);
        seen_at[start] = 0;
        for (;;) {
            unsigned v = walk.back();
            unsigned pred = n;
            for (unsigned u = 0; u < n; ++u)
                if (!removed[u] && u != v &&
                    has_edge(c, static_cast<Digit>(u), static_cast<Digit>(v))) {
                    pred = u;
                    break;
                }
            if (seen_at[pred] >= 0) {
                // Digits from the first occurrence of `pred` onward form the
                // cycle; the walk records successors right-to-left.
                Word cycle;
                for (std::size_t i = walk.size(); i-- > static_cast<std::size_t>(seen_at[pred]);)
                    cycle.push_back(static_cast<Digit>(walk[i]));
                auto min_it = std::min_element(cycle.begin(), cycle.end());
                std::rotate(cycle.begin(), min_it, cycle.end());
                return PrecedenceCycle{c, std::move(cycle)};
            }
            seen_at[pred] = static_cast<int>(walk.size());
            walk.push_back(pred);
        }
    }
    return std::nullopt;
}

// -- constraint construction ----------------------------------------------------

PrecedenceConstraints build_constraints(const DigitSequence& s, unsigned span) {
    const unsigned t = s.t();
    const unsigned n = s.order();
    if (!is_de_bruijn(s))
        throw std::invalid_argument("sequence is not a de Bruijn sequence of its order");
    if (!s.starts_with_zeros())
        throw std::invalid_argument("sequence must start with the all-zero word");
    if (span > n - 1)
        throw std::invalid_argument("span must be at most order-1");

    PrecedenceConstraints constraints(s.alphabet(), span);
    const Word& digits = s.digits();
    const std::uint64_t windows = *pow_checked(t, n, kDefaultWindowGuard);
    const std::uint64_t shift = windows / t;
    const std::uint64_t context_mod = constraints.context_count();

    std::vector<bool> seen(windows, false);
    std::uint64_t w = 0;
    for (unsigned i = 0; i < n; ++i) w = w * t + digits[i];
    seen[w] = true;
    std::uint64_t context = 0;  // the initial word ends in zeros

    for (std::size_t pos = n; pos < digits.size(); ++pos) {
        const Digit accepted = digits[pos];
        const std::uint64_t base = (w % shift) * t;
        for (unsigned z = 0; z < t; ++z) {
            if (static_cast<Digit>(z) == accepted) continue;
            if (!seen[base + z])
                constraints.add_edge(static_cast<std::size_t>(context), accepted,
                                     static_cast<Digit>(z));
        }
        w = base + accepted;
        seen[w] = true;
        context = (context * t + accepted) % context_mod;
    }
    return constraints;
}

InduceResult induce_preference(const DigitSequence& s, unsigned span) {
    PrecedenceConstraints constraints = build_constraints(s, span);

    std::vector<Word> rows;
    rows.reserve(constraints.context_count());
    for (std::size_t c = 0; c < constraints.context_count(); ++c) {
        auto row = constraints.smallest_extension(c);
        if (!row) {
            auto conflict = constraints.find_conflict();
            return InduceResult{std::nullopt, std::move(conflict)};
        }
        rows.push_back(std::move(*row));
    }

    PreferenceFunction fn(s.alphabet(), span, std::move(rows));
    DigitSequence regenerated = generate_from_zeros(fn, s.order());
    if (regenerated.digits() != s.digits())
        throw std::logic_error("induced preference function failed to regenerate "
                               "the sequence");
    return InduceResult{std::move(fn), std::nullopt};
}

// -- completeness -----------------------------------------------------------------

CompletenessReport is_complete(const PreferenceFunction& p) {
    // A span-0 table has a one-node graph that says nothing; its behaviour
    // shows up one digit of context later.
    const PreferenceFunction& analyzed = p.span() == 0 ? lift_span(p, 1) : p;
    LeastPreferenceMap g = least_preference(analyzed);

    std::vector<std::vector<std::size_t>> forbidden;
    for (auto& cycle : g.cycles)
        if (!(cycle.size() == 1 && cycle.front() == 0))
            forbidden.push_back(std::move(cycle));

    return CompletenessReport{forbidden.empty(), p.t(), analyzed.span(),
                              std::move(forbidden)};
}

// -- complexity -------------------------------------------------------------------

ComplexityReport complexity(const DigitSequence& s) {
    const unsigned n = s.order();
    if (!is_de_bruijn(s))
        throw std::invalid_argument("sequence is not a de Bruijn sequence of its order");
    if (!s.starts_with_zeros())
        throw std::invalid_argument("sequence must start with the all-zero word");

    std::vector<bool> feasible(n, false);
    std::optional<PreferenceFunction> witness;
    unsigned minimal = n - 1;
    for (unsigned k = 0; k < n; ++k) {
        InduceResult result = induce_preference(s, k);
        feasible[k] = result.feasible();
        if (result.feasible() && !witness) {
            minimal = k;
            witness = std::move(result.function);
        }
    }
    if (!witness)
        throw std::logic_error("no feasible span found; span order-1 must be feasible");
    return ComplexityReport{s.to_string(), n, minimal, std::move(*witness),
                            std::move(feasible)};
}

// -- digit permutations -------------------------------------------------------------

namespace {

bool is_digit_bijection(const Word& sigma, unsigned t) {
    if (sigma.size() != t) return false;
    std::uint64_t seen = 0;
    for (Digit d : sigma) {
        if (d >= t || (seen >> d) & 1) return false;
        seen |= std::uint64_t(1) << d;
    }
    return true;
}

}  // namespace

DigitSequence apply_permutation(const DigitSequence& s, const Word& sigma) {
    if (!is_digit_bijection(sigma, s.t()))
        throw std::invalid_argument("sigma is not a permutation of the alphabet");
    Word image;
    image.reserve(s.size());
    for (Digit d : s.digits()) image.push_back(sigma[d]);
    DigitSequence result(s.alphabet(), s.order(), std::move(image),
                         SequenceOrigin::supplied);
    if (is_de_bruijn(s) && !is_de_bruijn(result))
        throw std::logic_error("relabeling must preserve the de Bruijn property");
    return result;
}

std::optional<Word> equivalent_to_ford(const DigitSequence& s) {
    const unsigned t = s.t();
    DigitSequence ford = generate_from_zeros(prefer_higher(t), s.order());
    if (ford.size() != s.size()) return std::nullopt;

    // sigma(0) = 0 since both sequences start with the all-zero word; try
    // every arrangement of the remaining digits.
    Word sigma(t);
    Word tail(t - 1);
    for (unsigned d = 1; d < t; ++d) tail[d - 1] = static_cast<Digit>(d);
    do {
        sigma[0] = 0;
        std::copy(tail.begin(), tail.end(), sigma.begin() + 1);
        bool match = true;
        for (std::size_t i = 0; i < s.size() && match; ++i)
            match = sigma[ford.digits()[i]] == s.digits()[i];
        if (match) return sigma;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return std::nullopt;
}

}  // namespace prefseq
