#include "prefseq/core.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace prefseq {

char digit_to_char(Digit d) {
    assert(d < kMaxAlphabetSize);
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

std::optional<Digit> digit_from_char(char c) {
    if (c >= '0' && c <= '9') return static_cast<Digit>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<Digit>(c - 'a' + 10);
    if (c >= 'A' && c <= 'Z') return static_cast<Digit>(c - 'A' + 10);
    return std::nullopt;
}

bool word_in_alphabet(const Word& w, unsigned t) {
    return std::all_of(w.begin(), w.end(), [t](Digit d) { return d < t; });
}

std::uint64_t word_value(const Word& w, unsigned t) {
    std::uint64_t v = 0;
    for (Digit d : w) v = v * t + d;
    return v;
}

Word word_from_value(std::uint64_t value, unsigned t, std::size_t length) {
    Word w(length, 0);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = static_cast<Digit>(value % t);
        value /= t;
    }
    return w;
}

Word zero_word(std::size_t length) { return Word(length, 0); }

std::string format_word(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Digit d : w) s.push_back(digit_to_char(d));
    return s;
}

std::optional<std::uint64_t> pow_checked(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return std::nullopt;
        result *= base;
        if (result > limit) return std::nullopt;
    }
    return result;
}

std::string format_sequence(const Word& digits, unsigned t) {
    if (t <= 10) return format_word(digits);
    std::string s;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(static_cast<unsigned>(digits[i]));
    }
    return s;
}

Word parse_sequence(const std::string& text, unsigned t) {
    Word digits;
    if (t <= 10) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            auto d = digit_from_char(c);
            if (!d || *d >= t)
                throw std::invalid_argument(std::string("invalid sequence digit '") +
                                            c + "'");
            digits.push_back(*d);
        }
    } else {
        std::string token;
        std::istringstream in(text);
        while (std::getline(in, token, ',')) {
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(token, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid sequence digit '" + token + "'");
            }
            while (pos < token.size() &&
                   std::isspace(static_cast<unsigned char>(token[pos])))
                ++pos;
            if (pos != token.size() || v >= t)
                throw std::invalid_argument("invalid sequence digit '" + token + "'");
            digits.push_back(static_cast<Digit>(v));
        }
    }
    return digits;
}

// -- PreferenceFunction -------------------------------------------------------

namespace {

// Upper bound on t^span for in-memory tables.
constexpr std::uint64_t kMaxTableRows = std::uint64_t(1) << 24;

bool is_permutation_row(const Word& row, unsigned t) {
    if (row.size() != t) return false;
    std::uint64_t seen = 0;
    for (Digit d : row) {
        if (d >= t || (seen >> d) & 1) return false;
        seen |= std::uint64_t(1) << d;
    }
    return true;
}

}  // namespace

PreferenceFunction::PreferenceFunction(Alphabet alphabet, unsigned span,
                                       std::vector<Word> rows)
    : alphabet_(alphabet), span_(span), rows_(std::move(rows)) {
    auto expected = pow_checked(alphabet_.size, span_, kMaxTableRows);
    if (!expected)
        throw std::invalid_argument("preference table too large");
    if (rows_.size() != *expected)
        throw std::invalid_argument("preference table must have t^span rows");
    for (const Word& row : rows_)
        if (!is_permutation_row(row, alphabet_.size))
            throw std::invalid_argument("preference row is not a permutation");
}

PreferenceFunction lift_span(const PreferenceFunction& p, unsigned new_span) {
    if (new_span < p.span())
        throw std::invalid_argument("lift_span cannot shrink the span");
    const unsigned t = p.t();
    auto count = pow_checked(t, new_span, kMaxTableRows);
    if (!count) throw std::invalid_argument("lifted table too large");
    std::uint64_t suffix_mod = 1;
    for (unsigned i = 0; i < p.span(); ++i) suffix_mod *= t;
    std::vector<Word> rows;
    rows.reserve(*count);
    for (std::uint64_t c = 0; c < *count; ++c)
        rows.push_back(p.row(static_cast<std::size_t>(c % suffix_mod)));
    return PreferenceFunction(p.alphabet(), new_span, std::move(rows));
}

// -- least preference ---------------------------------------------------------

std::vector<std::vector<std::size_t>> find_cycles(const std::vector<std::size_t>& map) {
    const std::size_t n = map.size();
    for (std::size_t v : map)
        if (v >= n) throw std::invalid_argument("map value out of domain");

    enum : unsigned char { unseen, active, done };
    std::vector<unsigned char> state(n, unseen);
    std::vector<std::vector<std::size_t>> cycles;
    std::vector<std::size_t> path;

    for (std::size_t start = 0; start < n; ++start) {
        if (state[start] != unseen) continue;
        path.clear();
        std::size_t v = start;
        while (state[v] == unseen) {
            state[v] = active;
            path.push_back(v);
            v = map[v];
        }
        if (state[v] == active) {
            auto it = std::find(path.begin(), path.end(), v);
            cycles.emplace_back(it, path.end());
        }
        for (std::size_t u : path) state[u] = done;
    }

    // Canonical form: each cycle starts at its smallest node, cycles sorted
    // by that node.
    for (auto& cycle : cycles) {
        auto min_it = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), min_it, cycle.end());
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

LeastPreferenceMap least_preference(const PreferenceFunction& p) {
    const unsigned t = p.t();
    const unsigned k = p.span();
    const std::size_t m = p.context_count();

    std::vector<std::size_t> next(m);
    if (k == 0) {
        next[0] = 0;  // the empty context maps to itself
    } else {
        std::size_t shift_mod = m / t;  // t^(k-1)
        for (std::size_t c = 0; c < m; ++c)
            next[c] = (c % shift_mod) * t + p.least(c);
    }
    LeastPreferenceMap g{t, k, std::move(next), {}};
    g.cycles = find_cycles(g.next);
    return g;
}

// -- DigitSequence -------------------------------------------------------------

DigitSequence::DigitSequence(Alphabet alphabet, unsigned order, Word digits,
                             SequenceOrigin origin,
                             std::optional<std::size_t> halt_length)
    : alphabet_(alphabet), order_(order), digits_(std::move(digits)),
      origin_(origin) {
    if (order_ < 1) throw std::invalid_argument("sequence order must be at least 1");
    if (!word_in_alphabet(digits_, alphabet_.size))
        throw std::invalid_argument("sequence digit outside the alphabet");
    if (halt_length)
        halt_length_ = *halt_length;
    else
        halt_length_ = digits_.size() >= order_ ? digits_.size() - order_ + 1 : 0;
}

bool DigitSequence::starts_with_zeros() const {
    if (digits_.size() < order_) return false;
    return std::all_of(digits_.begin(), digits_.begin() + order_,
                       [](Digit d) { return d == 0; });
}

// -- table text format ----------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// "t=3" -> 3; rejects anything else.
std::optional<unsigned long> parse_keyed_int(const std::string& token,
                                             const std::string& key) {
    if (token.size() <= key.size() + 1 || token.compare(0, key.size(), key) != 0 ||
        token[key.size()] != '=')
        return std::nullopt;
    const std::string value = token.substr(key.size() + 1);
    if (!std::all_of(value.begin(), value.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    if (value.size() > 9) return std::nullopt;
    return std::stoul(value);
}

}  // namespace

PreferenceFunction parse_preference_table(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    unsigned line_no = 0;

    // Header.
    unsigned t = 0, span = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hdr(line);
        std::string tok_t, tok_span, extra;
        hdr >> tok_t >> tok_span;
        auto t_val = parse_keyed_int(tok_t, "t");
        auto span_val = parse_keyed_int(tok_span, "span");
        if (!t_val || !span_val || (hdr >> extra))
            throw TableParseError(line_no, "expected header 't=<int> span=<int>'");
        if (*t_val < 2 || *t_val > kMaxAlphabetSize)
            throw TableParseError(line_no, "alphabet size must be between 2 and 36");
        t = static_cast<unsigned>(*t_val);
        span = static_cast<unsigned>(*span_val);
        have_header = true;
        break;
    }
    if (!have_header) throw TableParseError(line_no, "missing header line");

    auto row_count = pow_checked(t, span, kMaxTableRows);
    if (!row_count) throw TableParseError(line_no, "span too large for this alphabet");
    const std::size_t m = static_cast<std::size_t>(*row_count);

    std::vector<Word> rows(m);
    std::vector<bool> present(m, false);
    std::size_t seen_rows = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw TableParseError(line_no, "expected 'CONTEXT: d1 d2 ... dt'");

        // Context.
        std::string ctx_text = trim(line.substr(0, colon));
        std::size_t context_id = 0;
        if (span == 0) {
            if (ctx_text != "-")
                throw TableParseError(line_no, "span-0 context must be written '-'");
        } else {
            if (ctx_text.size() != span)
                throw TableParseError(line_no, "context must have exactly " +
                                                   std::to_string(span) + " digits");
            for (char c : ctx_text) {
                auto d = digit_from_char(c);
                if (!d || *d >= t)
                    throw TableParseError(line_no,
                                          std::string("context digit '") + c +
                                              "' outside the alphabet");
                context_id = context_id * t + *d;
            }
        }
        if (present[context_id])
            throw TableParseError(line_no, "duplicate context '" + ctx_text + "'");

        // Row.
        Word row;
        std::istringstream digits_in(line.substr(colon + 1));
        std::string tok;
        while (digits_in >> tok) {
            if (!std::all_of(tok.begin(), tok.end(),
                             [](char c) { return c >= '0' && c <= '9'; }) ||
                tok.size() > 2)
                throw TableParseError(line_no, "invalid digit '" + tok + "'");
            unsigned long v = std::stoul(tok);
            if (v >= t)
                throw TableParseError(line_no, "digit " + tok + " outside the alphabet");
            row.push_back(static_cast<Digit>(v));
        }
        if (row.size() != t)
            throw TableParseError(line_no, "expected " + std::to_string(t) +
                                               " digits in the row");
        if (!is_permutation_row(row, t))
            throw TableParseError(line_no, "row is not a permutation of the alphabet");

        rows[context_id] = std::move(row);
        present[context_id] = true;
        ++seen_rows;
    }

    if (seen_rows != m) {
        for (std::size_t c = 0; c < m; ++c) {
            if (!present[c]) {
                Word ctx = word_from_value(c, t, span);
                throw TableParseError(line_no + 1,
                                      "missing row for context '" +
                                          (span == 0 ? std::string("-")
                                                     : format_word(ctx)) +
                                          "'");
            }
        }
    }

    return PreferenceFunction(Alphabet(t), span, std::move(rows));
}

std::string format_preference_table(const PreferenceFunction& p) {
    std::ostringstream out;
    out << "t=" << p.t() << " span=" << p.span() << "\n";
    for (std::size_t c = 0; c < p.context_count(); ++c) {
        if (p.span() == 0)
            out << "-";
        else
            out << format_word(word_from_value(c, p.t(), p.span()));
        out << ":";
        for (Digit d : p.row(c)) out << " " << static_cast<unsigned>(d);
        out << "\n";
    }
    return out.str();
}

}  // namespace prefseq
