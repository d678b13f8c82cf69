#include "doctest.h"

#include "oracles.hpp"
#include "parikh/nfa.hpp"
#include "parikh/parikh_image.hpp"

using namespace parikh;

namespace {

const Symbol A = U'a';
const Symbol B = U'b';

Nfa ab_star() {
    Nfa n(2, make_alphabet({A, B}));
    n.add_transition(0, A, 1);
    n.add_transition(1, B, 0);
    n.set_final(0);
    return n;
}

// A small automaton with nested and overlapping cycles and an ε-move.
Nfa tangled() {
    Nfa n(4, make_alphabet({A, B}));
    n.add_transition(0, A, 1);
    n.add_transition(1, B, 0);
    n.add_transition(1, A, 2);
    n.add_transition(2, std::nullopt, 1);
    n.add_transition(2, B, 3);
    n.add_transition(3, A, 3);
    n.add_transition(3, B, 1);
    n.add_transition(0, B, 3);
    n.set_final(3);
    n.set_final(0);
    return n;
}

Nfa dead_end() {
    Nfa n(3, make_alphabet({A}));
    n.add_transition(0, A, 1);
    n.add_transition(1, A, 1);
    n.add_transition(0, A, 2);
    n.set_final(2);
    return n;
}

}  // namespace

TEST_CASE("acceptance with ε-closure") {
    auto n = tangled();
    CHECK(accepts(n, U""));
    CHECK(accepts(n, U"ab"));
    CHECK(accepts(n, U"aab"));
    CHECK(accepts(n, U"b"));
    CHECK_FALSE(accepts(n, U"a"));
    CHECK_THROWS_AS(n.add_transition(0, U'z', 1), InvalidArgument);
}

TEST_CASE("paths") {
    auto n = ab_star();
    Path p{{0, 1, 0, 1}};
    CHECK(is_valid_path(n, p));
    CHECK(is_accepting(n, p));
    CHECK(label_of(n, p) == U"abab");
    CHECK(parikh_of(n, p) == NatVector{2, 2});
    CHECK_FALSE(is_valid_path(n, Path{{0, 0}}));
}

TEST_CASE("determinization and completion") {
    auto n = tangled();
    auto d = determinize_complete(dead_end());
    CHECK(d.is_deterministic());
    CHECK(d.is_complete());
    for_each_word(d.alphabet(), 5, [&](const Word& w) {
        CHECK(accepts(d, w) == accepts(dead_end(), w));
        return true;
    });
    auto c = complete_with_sink(ab_star());
    CHECK(c.is_complete());
    CHECK(c.transition(0) == ab_star().transition(0));
    for_each_word(c.alphabet(), 6, [&](const Word& w) {
        CHECK(accepts(c, w) == accepts(ab_star(), w));
        return true;
    });
}

TEST_CASE("product") {
    auto p = product(tangled(), ab_star());
    for_each_word(p.automaton.alphabet(), 6, [&](const Word& w) {
        CHECK(accepts(p.automaton, w) == (accepts(tangled(), w) && accepts(ab_star(), w)));
        return true;
    });
}

TEST_CASE("elementary cycles") {
    auto cycles = elementary_cycles(ab_star());
    CHECK(cycles.size() == 2);
    for (const auto& c : cycles) {
        CHECK(is_valid_path(ab_star(), c));
        CHECK(ab_star().transition(c.steps.front()).from == ab_star().transition(c.steps.back()).to);
    }
}

TEST_CASE("Parikh image of (ab)*") {
    auto img = parikh_image(ab_star());
    CHECK(oracle::members_up_to(img, 8) == oracle::run_images_up_to(ab_star(), ab_star().finals(), 8));
    CHECK(sl_member(NatVector{3, 3}, img));
    CHECK_FALSE(sl_member(NatVector{3, 2}, img));
}

TEST_CASE("Parikh image agrees with run enumeration") {
    for (const auto& n : {tangled(), dead_end(), ab_star()}) {
        auto img = parikh_image(n);
        CHECK(img.dim() == n.transition_count());
        CHECK(oracle::members_up_to(img, 9) == oracle::run_images_up_to(n, n.finals(), 9));
    }
}

TEST_CASE("Parikh image with no accepting run") {
    Nfa n(2, make_alphabet({A}));
    n.add_transition(0, A, 0);
    n.set_final(1);
    CHECK(parikh_image(n).is_empty());
}

TEST_CASE("bounded sublanguage") {
    auto n = tangled();
    auto schemes = bounded_sublanguage(n);
    CHECK_FALSE(schemes.empty());
    std::set<NatVector> covered;
    for (const auto& s : schemes) {
        CHECK(is_well_formed(n, n.finals(), s));
        std::vector<std::size_t> counts(s.cycles.size(), 0);
        for (std::size_t round = 0; round < 3; ++round) {
            auto p = s.generate(counts);
            CHECK(is_accepting(n, p));
            covered.insert(parikh_of(n, p));
            for (auto& c : counts) ++c;
        }
        std::vector<std::size_t> ones(s.cycles.size(), 0);
        for (std::size_t i = 0; i < ones.size(); ++i) {
            ones[i] = 1;
            covered.insert(parikh_of(n, s.generate(ones)));
            ones[i] = 0;
        }
    }
    auto runs = oracle::run_images_up_to(n, n.finals(), 5);
    auto image = parikh_image(n);
    for (const auto& v : covered) CHECK(sl_member(v, image));
    CHECK(runs.size() > 0);
}

TEST_CASE("realize counts") {
    auto n = tangled();
    auto img = parikh_image(n);
    for (const auto& v : oracle::members_up_to(img, 6)) {
        auto p = realize_counts(n, n.finals(), v);
        REQUIRE(p.has_value());
        CHECK(parikh_of(n, *p) == v);
        CHECK(is_accepting(n, *p));
    }
    CHECK_FALSE(realize_counts(ab_star(), ab_star().finals(), NatVector{2, 1}).has_value());
}

TEST_CASE("line automaton and words") {
    auto l = line_automaton(make_alphabet({A, B}), U"aba");
    CHECK(accepts(l, U"aba"));
    CHECK_FALSE(accepts(l, U"ab"));
    std::vector<Word> seen;
    for_each_word(make_alphabet({A, B}), 2, [&](const Word& w) {
        seen.push_back(w);
        return true;
    });
    CHECK(seen == std::vector<Word>{U"", U"a", U"b", U"aa", U"ab", U"ba", U"bb"});
    CHECK(from_utf8(to_utf8(Word{U'♯', U'a'})) == Word{U'♯', U'a'});
}
