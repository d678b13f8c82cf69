#include "doctest.h"

#include "parikh/corpus.hpp"

using namespace parikh;

TEST_CASE("every corpus entry agrees with its oracle up to its bound") {
    for (const auto& name : corpus_names()) {
        CAPTURE(name);
        auto e = corpus_build(name);
        CHECK(e.bound >= (e.alphabet.size() <= 2 ? 8u : e.alphabet.size() == 3 ? 7u : 6u));
        auto bad = corpus_mismatch(e);
        CHECK_MESSAGE(!bad, "mismatch on '" << to_utf8(bad.value_or(Word{})) << "'");
    }
}

TEST_CASE("corpus spot checks") {
    auto equal = corpus_build("equal");
    CHECK(machine_accepts(equal.machine, U"baa#aa"));
    CHECK_FALSE(machine_accepts(equal.machine, U"ba#aa"));
    auto pal = corpus_build("pal");
    CHECK(machine_accepts(pal.machine, U"ab#ba"));
    CHECK_FALSE(machine_accepts(pal.machine, U"#"));
    auto anbn = corpus_build("anbn");
    CHECK(machine_accepts(anbn.machine, U"ab"));
    CHECK(machine_accepts(anbn.machine, U"aabb"));
    CHECK_FALSE(machine_accepts(anbn.machine, U"ba"));
    auto nsum = corpus_build("nsum");
    CHECK(machine_accepts(nsum.machine, U"a♠bb#b♣cc"));
    CHECK_FALSE(machine_accepts(nsum.machine, U"a♠bb#b♣ccc"));
    CHECK(machine_accepts(nsum.machine, U"aa♠bb#b♣ccc"));
    CHECK(lang::nsum(U"aa♠bb#b♣ccc"));
    CHECK_FALSE(lang::nsum(U"a♠bb#b♣ccc"));
}

TEST_CASE("unknown corpus name") { CHECK_THROWS_AS(corpus_build("nope"), InvalidArgument); }
