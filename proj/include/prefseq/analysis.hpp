// analysis.hpp -- completeness, inverse construction and sequence complexity

#pragma once

#include <optional>

#include "prefseq/core.hpp"
#include "prefseq/generator.hpp"

namespace prefseq {

/// A per-context precedence cycle: digits[0] must precede digits[1], ...,
/// and the last digit must precede digits[0] again.
struct PrecedenceCycle {
    std::size_t context_id;
    Word digits;
};

/// Per-context precedence relations between digits: an edge a -> z means
/// "a must come before z in this context's preference row".  A row order
/// regenerates the source sequence exactly when it linearly extends every
/// context's relation, so the set is feasible iff every context is acyclic.
class PrecedenceConstraints {
public:
    PrecedenceConstraints(Alphabet alphabet, unsigned span);

    unsigned t() const noexcept { return alphabet_.size; }
    unsigned span() const noexcept { return span_; }
    std::size_t context_count() const noexcept { return context_count_; }

    void add_edge(std::size_t context_id, Digit before, Digit after);
    bool has_edge(std::size_t context_id, Digit before, Digit after) const;

    /// The lexicographically smallest linear extension of one context's
    /// relation, or nullopt when that context has a precedence cycle.
    std::optional<Word> smallest_extension(std::size_t context_id) const;

    /// A witness precedence cycle from the first cyclic context, if any.
    std::optional<PrecedenceCycle> find_conflict() const;

    bool feasible() const { return !find_conflict().has_value(); }

private:
    std::size_t edge_index(std::size_t context_id, Digit before, Digit after) const;

    Alphabet alphabet_;
    unsigned span_;
    std::size_t context_count_;
    std::vector<bool> edges_;
};

/// Replays the run that produced `s` and records, at each generated
/// position, that the accepted digit must precede every digit whose
/// candidate window was still unseen at that moment.  The initial `order`
/// positions contribute nothing.
///
/// Requires `s` to be a de Bruijn sequence starting with the all-zero word;
/// 0 <= span <= order-1.
PrecedenceConstraints build_constraints(const DigitSequence& s, unsigned span);

struct InduceResult {
    /// Set when the constraints admit a row order per context; the function
    /// regenerates `s` exactly (verified before returning).
    std::optional<PreferenceFunction> function;
    /// Set when some context's relation is cyclic.
    std::optional<PrecedenceCycle> conflict;

    bool feasible() const noexcept { return function.has_value(); }
};

/// The lexicographically smallest span-`span` preference function that
/// regenerates `s` from the all-zero word, or the witness cycle showing no
/// such function exists.
InduceResult induce_preference(const DigitSequence& s, unsigned span);

/// Completeness decision for a preference function.  A function is complete
/// when generation from the all-zero initial word fills every window at
/// every order above its span, which holds exactly when the least preference
/// map has no cycles besides the self-loop at the all-zero context.  (An
/// incomplete function whose forbidden cycle runs through the all-zero
/// context can still fill the single order span+1; it halts short at every
/// order past that.)  Span-0 functions are decided on their span-1 lift,
/// where their behaviour actually shows; `cycle_span` records the context
/// length the cycles are reported at.
struct CompletenessReport {
    bool complete;
    unsigned t;
    unsigned cycle_span;
    /// Every cycle of g other than the all-zero self-loop, in canonical
    /// order.  Empty iff complete.
    std::vector<std::vector<std::size_t>> forbidden_cycles;
};

CompletenessReport is_complete(const PreferenceFunction& p);

/// Minimal-span report for a de Bruijn sequence started at the all-zero word.
struct ComplexityReport {
    std::string sequence;
    unsigned order;
    /// The smallest feasible span.
    unsigned span;
    PreferenceFunction witness;
    /// Feasibility of spans 0 .. order-1; false below `span`, true from it on.
    std::vector<bool> feasible_by_span;
};

/// The preference-function complexity of `s`: the least span admitting a
/// function that regenerates it.  Span order-1 is always feasible.
/// Requires `s` de Bruijn and starting with the all-zero word.
ComplexityReport complexity(const DigitSequence& s);

/// Digitwise image of `s` under the permutation sigma (sigma[d] replaces d).
/// Relabeling preserves the de Bruijn property; this is re-checked and a
/// violation raises std::logic_error.
DigitSequence apply_permutation(const DigitSequence& s, const Word& sigma);

/// The permutation sigma with sigma(0)=0 mapping the Ford sequence of the
/// same alphabet and order onto `s` digitwise, if one exists.
std::optional<Word> equivalent_to_ford(const DigitSequence& s);

}  // namespace prefseq
