#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prefseq/census.hpp"
#include "prefseq/core.hpp"
#include "prefseq/generator.hpp"

using namespace prefseq;

namespace {

std::string run(const PreferenceFunction& p, unsigned order, const Word& initial,
                bool wrap = false) {
    return generate(p, order, initial, {.wrap = wrap}).to_string();
}

std::string run_zeros(const PreferenceFunction& p, unsigned order, bool wrap = false) {
    return generate_from_zeros(p, order, {.wrap = wrap}).to_string();
}

// The six classic span-0/1 diagrams over t=3 and t=4.
PreferenceFunction diagram(int which) {
    switch (which) {
        case 1: return prefer_higher(3);
        case 2:
            return PreferenceFunction(Alphabet(3), 1,
                                      {{1, 2, 0}, {1, 0, 2}, {2, 1, 0}});
        case 3:
            return PreferenceFunction(Alphabet(3), 1,
                                      {{1, 2, 0}, {2, 1, 0}, {0, 2, 1}});
        case 4: return prefer_higher(4);
        case 5:
            return PreferenceFunction(
                Alphabet(4), 1,
                {{1, 2, 3, 0}, {3, 1, 0, 2}, {0, 2, 1, 3}, {2, 3, 1, 0}});
        default:
            return PreferenceFunction(
                Alphabet(4), 1,
                {{3, 2, 1, 0}, {3, 2, 1, 0}, {0, 2, 3, 1}, {0, 2, 3, 1}});
    }
}

}  // namespace

TEST_CASE("the oracle recognizes full sequences") {
    CHECK(is_de_bruijn(DigitSequence(Alphabet(2), 2, parse_sequence("00110", 2))));
    CHECK(is_de_bruijn(
        DigitSequence(Alphabet(3), 2, parse_sequence("0011221020", 3))));
    // window 00 twice, 11 missing
    CHECK_FALSE(
        is_de_bruijn(DigitSequence(Alphabet(2), 2, parse_sequence("00010", 2))));
    // wrong length
    CHECK_FALSE(
        is_de_bruijn(DigitSequence(Alphabet(2), 2, parse_sequence("0011", 2))));
}

TEST_CASE("classic constructors") {
    CHECK(prefer_higher(2).row(0) == Word{1, 0});
    CHECK(prefer_higher(3).row(0) == Word{2, 1, 0});
    CHECK(prefer_higher(4).row(0) == Word{3, 2, 1, 0});
    CHECK(prefer_opposite_binary().row(0) == Word{1, 0});
    CHECK(prefer_opposite_binary().row(1) == Word{0, 1});
}

TEST_CASE("order-2 runs of the six classic diagrams") {
    CHECK(run_zeros(diagram(1), 2, true) == "00221201100");
    CHECK(run_zeros(diagram(2), 2, true) == "00110221200");
    CHECK(run_zeros(diagram(3), 2, true) == "00120221100");
    CHECK(run_zeros(diagram(4), 2, true) == "003323130221201100");
    CHECK(run_zeros(diagram(5), 2, true) == "001320221103312300");
    CHECK(run_zeros(diagram(6), 2, true) == "003020132233121100");

    SUBCASE("unwrapped form drops the final n-1 digits") {
        CHECK(run_zeros(diagram(1), 2) == "0022120110");
    }
}

TEST_CASE("ternary order-3 run from a non-zero initial word") {
    auto table = PreferenceFunction(
        Alphabet(3), 2,
        {{0, 2, 1}, {1, 2, 0}, {0, 1, 2}, {1, 2, 0}, {0, 1, 2},
         {1, 2, 0}, {1, 0, 2}, {2, 1, 0}, {2, 0, 1}});
    auto s = generate(table, 3, parse_sequence("001", 3));
    CHECK(s.to_string() == "00110121222010200021112022100");
    CHECK(s.size() == 29);
    CHECK(is_de_bruijn(s));
}

TEST_CASE("prefer-opposite halts one window short") {
    auto p = prefer_opposite_binary();

    SUBCASE("order 3 from zeros misses exactly 111") {
        auto s = generate_from_zeros(p, 3);
        CHECK(s.to_string() == "000101100");
        CHECK(s.halt_length() == 7);
        CHECK_FALSE(is_de_bruijn(s));
        auto missing = missing_windows(s);
        REQUIRE(missing.size() == 1);
        CHECK(missing[0] == Word{1, 1, 1});
    }

    SUBCASE("order-4 run has length 2^4 + 4 - 2") {
        auto s = generate_from_zeros(p, 4);
        CHECK(s.size() == 18);
        CHECK(missing_windows(s) == std::vector<Word>{Word{1, 1, 1, 1}});
    }

    SUBCASE("length 2^n + n - 2 and missing window 1^n for n up to 12") {
        for (unsigned n = 2; n <= 12; ++n) {
            auto s = generate_from_zeros(p, n);
            CHECK(s.size() == (std::size_t(1) << n) + n - 2);
            auto missing = missing_windows(s);
            REQUIRE(missing.size() == 1);
            CHECK(missing[0] == Word(n, 1));
        }
    }
}

TEST_CASE("generation preconditions") {
    auto p = prefer_opposite_binary();
    CHECK_THROWS_AS(generate(p, 1, {0}), std::invalid_argument);  // order < span+1
    CHECK_THROWS_AS(generate(p, 3, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate(p, 3, {0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(
        generate(prefer_higher(2), 40, zero_word(40)), std::length_error);
    CHECK_NOTHROW(generate(prefer_higher(2), 4, zero_word(4),
                           {.max_windows = 16}));
    CHECK_THROWS_AS(generate(prefer_higher(2), 5, zero_word(5),
                             {.max_windows = 16}),
                    std::length_error);
}

TEST_CASE("generation is deterministic") {
    auto p = diagram(5);
    auto a = generate_from_zeros(p, 3);
    auto b = generate_from_zeros(p, 3);
    CHECK(a.digits() == b.digits());
    CHECK(a.halt_length() == b.halt_length());
}

TEST_CASE("r-overlap") {
    CHECK(max_overlap(parse_sequence("00", 2), parse_sequence("001", 2)) == 2);
    CHECK(max_overlap(parse_sequence("10", 2), parse_sequence("001", 2)) == 1);
    CHECK(max_overlap(parse_sequence("11", 2), parse_sequence("001", 2)) == 0);
    CHECK_THROWS_AS(max_overlap(parse_sequence("1", 2), parse_sequence("001", 2)),
                    std::invalid_argument);
}

TEST_CASE("overlap preference tables") {
    SUBCASE("an all-zero initial word pins every least digit to 0") {
        auto p = overlap_preference(Alphabet(3), zero_word(3));
        for (std::size_t c = 0; c < p.context_count(); ++c) CHECK(p.least(c) == 0);
    }

    SUBCASE("binary I=001 least digits follow the maximal overlap") {
        auto p = overlap_preference(Alphabet(2), parse_sequence("001", 2));
        CHECK(p.least(0) == 1);  // context 00, full overlap
        CHECK(p.least(1) == 0);  // context 01
        CHECK(p.least(2) == 0);  // context 10, r = 1
        CHECK(p.least(3) == 0);  // context 11, r = 0
    }

    SUBCASE("generating from the initial word fills every window") {
        std::mt19937 rng(5);
        for (unsigned t = 2; t <= 4; ++t) {
            for (unsigned n = 1; n <= 12; ++n) {
                std::uint64_t windows = 1;
                for (unsigned i = 0; i < n; ++i) windows *= t;
                if (windows > 4096) break;
                for (int round = 0; round < 3; ++round) {
                    Word initial(n);
                    for (auto& d : initial) d = static_cast<Digit>(rng() % t);
                    auto p = overlap_preference(Alphabet(t), initial);
                    CHECK(is_de_bruijn(generate(p, n, initial)));
                }
            }
        }
    }
}

TEST_CASE("prefer-higher agrees with the oracle across alphabets") {
    for (unsigned t = 2; t <= 4; ++t) {
        for (unsigned n = 1;; ++n) {
            std::uint64_t windows = 1;
            for (unsigned i = 0; i < n; ++i) windows *= t;
            if (windows > 4096) break;
            CAPTURE(t);
            CAPTURE(n);
            CHECK(is_de_bruijn(generate_from_zeros(prefer_higher(t), n)));
        }
    }
}

TEST_CASE("complete runs from zeros cover the all-zero-tail words") {
    // Across every complete function at t=2 (span <= 3) and t=3 (span <= 1),
    // for orders up to 8: the run ends just after a word a000...0 with a != 0,
    // and every word b000...0 occurs.
    auto check_family = [](unsigned t, unsigned span) {
        for (const auto& p : enumerate_complete(t, span)) {
            for (unsigned n = span + 1; n <= 8; ++n) {
                auto s = generate_from_zeros(p, n);
                REQUIRE(is_de_bruijn(s));
                const Word& d = s.digits();
                CHECK(d[d.size() - n] != 0);  // a
                for (std::size_t i = d.size() - n + 1; i < d.size(); ++i)
                    CHECK(d[i] == 0);
                // b 0^(n-1) for every b: count tail-zero windows.
                std::size_t found = 0;
                for (std::size_t i = 0; i + n <= d.size(); ++i) {
                    bool zeros = true;
                    for (std::size_t j = i + 1; j < i + n; ++j)
                        if (d[j] != 0) zeros = false;
                    if (zeros) ++found;
                }
                CHECK(found == t);
            }
        }
    };
    check_family(2, 0);
    check_family(2, 1);
    check_family(2, 2);
    check_family(2, 3);
    check_family(3, 0);
    check_family(3, 1);
}
