// One PASS/FAIL line per acceptance criterion; exit status 1 on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "parikh/closure.hpp"
#include "parikh/corpus.hpp"
#include "parikh/hilbert.hpp"
#include "parikh/parikh_image.hpp"
#include "parikh/pumping.hpp"

using namespace parikh;

namespace {

struct Check {
    bool ok = true;
    std::string note;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
};

Ca corpus_ca(const std::string& name) {
    auto e = corpus_build(name);
    if (auto* p = std::get_if<Pa>(&e.machine)) return pa_to_ca(*p);
    return std::get<Ca>(e.machine);
}

Apa corpus_apa(const std::string& name) { return std::get<Apa>(corpus_build(name).machine); }

const Nfa& automaton_of(const Machine& m) {
    return std::visit(
        [](const auto& x) -> const Nfa& {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rbcm>) {
                throw Unsupported("no automaton");
            } else {
                return x.automaton();
            }
        },
        m);
}

Word repeat(const Word& w, std::size_t n) {
    Word out;
    for (std::size_t i = 0; i < n; ++i) out += w;
    return out;
}

std::set<NatVector> set_of(std::vector<NatVector> v) { return {v.begin(), v.end()}; }

Check hilbert() {
    Check c;
    IntMatrix a1{{2, -3}};
    auto h1 = hilbert_basis(a1, {0}, 2);
    c.expect(set_of(h1.homogeneous) == set_of({NatVector{3, 2}}), "basis of 2x = 3y");
    c.expect(set_of(h1.homogeneous) == oracle::minimal_solutions(a1, 2, 10), "2x = 3y against brute force");
    IntMatrix a2{{1, 1, -1}};
    auto h2 = hilbert_basis(a2, {0}, 3);
    c.expect(set_of(h2.homogeneous) == set_of({NatVector{1, 0, 1}, NatVector{0, 1, 1}}), "basis of x1 + x2 = x3");
    c.expect(set_of(h2.homogeneous) == oracle::minimal_solutions(a2, 3, 10), "x1 + x2 = x3 against brute force");
    return c;
}

Check parikh_theorem() {
    Check c;
    const Nfa ab = std::get<Ca>(corpus_build("ab-star").machine).automaton();
    SemilinearSet image = parikh_image(ab);
    SemilinearSet expected = SemilinearSet::linear({0, 0}, {{1, 1}});
    for (long x = 0; x <= 10; ++x) {
        for (long y = 0; y <= 10; ++y) {
            NatVector v{x, y};
            c.expect(sl_member(v, image) == sl_member(v, expected), "(ab)* image differs at " + to_string(v));
        }
    }
    for (const auto& name : corpus_names()) {
        auto e = corpus_build(name);
        if (std::holds_alternative<Rbcm>(e.machine)) continue;
        const Nfa& a = automaton_of(e.machine);
        SemilinearSet img = parikh_image(a);
        auto runs = oracle::run_images_layered(a, a.finals(), 12);
        auto members = oracle::generated_members(img, oracle::norm_at_most(12));
        c.expect(runs == members, name + ": run images of length <= 12 differ from the image");
        for (const auto& v : runs) c.expect(sl_member(v, img), name + ": run image not a member");
    }
    return c;
}

Check decidability() {
    Check c;
    using K = Cardinality::Kind;
    struct Row {
        const char* name;
        bool empty;
        K kind;
        long count;
    };
    for (auto r : {Row{"anbn", false, K::Infinite, -1}, Row{"ab-star", false, K::Infinite, -1},
                   Row{"astar-bstar", false, K::Infinite, -1}, Row{"parity", false, K::Infinite, -1},
                   Row{"two-words", false, K::Finite, 2}, Row{"empty", true, K::Empty, 0}}) {
        Ca m = corpus_ca(r.name);
        c.expect(is_empty(m) == r.empty, std::string(r.name) + ": emptiness");
        auto card = cardinality(m);
        c.expect(card.kind == r.kind, std::string(r.name) + ": cardinality kind");
        if (r.count >= 0) c.expect(card.count && *card.count == r.count, std::string(r.name) + ": count");
    }
    Ca anbn = corpus_ca("anbn");
    Ca astar = corpus_ca("astar-bstar");
    auto fwd = inclusion(anbn, astar);
    c.expect(fwd.included && !fwd.witness, "anbn in a*b*");
    auto back = inclusion(astar, anbn);
    c.expect(!back.included && back.witness, "a*b* not in anbn");
    if (back.witness) {
        c.expect(lang::astar_bstar(*back.witness) && !lang::anbn(*back.witness), "witness verified by oracle");
        c.expect(membership(astar, *back.witness) && !membership(anbn, *back.witness), "witness verified by membership");
    }
    return c;
}

Check equal_pa() {
    Check c;
    auto e = corpus_build("equal");
    c.expect(std::holds_alternative<Pa>(e.machine), "EQUAL is a PA");
    std::size_t words = 0;
    for_each_word(e.alphabet, 7, [&](const Word& w) {
        ++words;
        c.expect(machine_accepts(e.machine, w) == lang::equal(w), "mismatch on " + to_utf8(w));
        return true;
    });
    c.expect(words == 3280, "word count");
    return c;
}

Check pumping() {
    Check c;
    struct Case {
        const char* name;
        Word w;
    };
    std::vector<Case> cases{
        {"anbn", Word(11, U'a') + Word(11, U'b')},
        {"anbn", Word(12, U'a') + Word(12, U'b')},
        {"ab-star", repeat(U"ab", 6)},
        {"ab-star", repeat(U"ab", 8)},
        {"astar-bstar", Word(6, U'a') + Word(5, U'b')},
        {"astar-bstar", Word(3, U'a') + Word(9, U'b')},
        {"parity", U"aabbab"},
        {"parity", repeat(U"ab", 4)},
        {"equal", repeat(U"aab", 9) + U"aa#aa"},
        {"equal", repeat(U"ab", 14) + U"#"},
    };
    for (const auto& k : cases) {
        Ca m = corpus_ca(k.name);
        auto constants = pumping_constants(m);
        const std::size_t cycles = elementary_cycles(m.automaton()).size();
        c.expect(constants.p == m.automaton().state_count() && constants.m == cycles &&
                     constants.l == constants.p * (2 * constants.m + 1),
                 std::string(k.name) + ": constants");
        c.expect(k.w.size() > constants.l && membership(m, k.w), std::string(k.name) + ": word precondition");
        try {
            auto d = pump_decompose(m, k.w);
            c.expect(d.reassemble() == k.w, "reassembly");
            c.expect(!d.v.empty() && d.v.size() <= constants.p, "0 < |v| <= p");
            c.expect(d.x.size() > constants.p, "|x| > p");
            c.expect(d.u.size() + 2 * d.v.size() + d.x.size() <= constants.l, "|uvxv| <= l");
            c.expect(membership(m, d.pumped_left()), "u v^2 x z accepted");
            c.expect(membership(m, d.pumped_right()), "u x v^2 z accepted");
        } catch (const Error& e) {
            c.expect(false, std::string(k.name) + ": " + e.what());
        }
    }
    return c;
}

Check pal() {
    Check c;
    Apa m = corpus_apa("pal");
    c.expect(m.is_deterministic() && m.domain() == Domain::Rationals, "deterministic over Q");
    for_each_word(m.alphabet(), 9, [&](const Word& w) {
        c.expect(apa_membership(m, w) == lang::pal(w), "mismatch on " + to_utf8(w));
        return true;
    });
    auto run = apa_accepting_run(m, U"ab#ba");
    c.expect(run.has_value(), "ab#ba accepted");
    if (run) c.expect(register_trace(m, *run).back() == RatVector{1, 0}, "trace ends at (1,0)");
    return c;
}

Check transforms() {
    Check c;
    Apa m = corpus_apa("pal");
    Apa n = rationals_to_naturals(m);
    Apa two = normalize_two_state(m);
    c.expect(n.domain() == Domain::Naturals, "q-to-n lands in N");
    c.expect(two.automaton().state_count() == 2, "two states");
    c.expect(two.dim() == m.automaton().state_count() * (m.dim() + 1), "dimension k(d+1)");
    for_each_word(m.alphabet(), 8, [&](const Word& w) {
        bool in = apa_membership(m, w);
        c.expect(apa_membership(n, w) == in, "q-to-n mismatch on " + to_utf8(w));
        c.expect(apa_membership(two, w) == in, "two-state mismatch on " + to_utf8(w));
        return true;
    });
    return c;
}

Check register_growth() {
    Check c;
    std::vector<std::pair<std::string, Apa>> machines{
        {"expo", corpus_apa("expo")},
        {"embedded anbn", embed_ca(corpus_ca("anbn"))},
        {"embedded parity", embed_ca(corpus_ca("parity"))},
        {"pal over N", rationals_to_naturals(corpus_apa("pal"))},
    };
    for (const auto& [name, a] : machines) {
        auto r = register_bound_check(a, 6);
        c.expect(r.holds && r.paths_checked > 0, name + ": register bound");
    }
    return c;
}

Check compiler() {
    Check c;
    for (const char* name : {"parity", "anbn", "astar-bstar"}) {
        Ca m = corpus_ca(name);
        Rbcm r = compile_to_rbcm(m);
        c.expect(r.is_deterministic(), std::string(name) + ": deterministic");
        for_each_word(m.alphabet(), 10, [&](const Word& w) {
            auto s = simulate(r, w, 10'000'000);
            c.expect(s.outcome != Outcome::FuelExhausted, "fuel");
            c.expect((s.outcome == Outcome::Accept) == membership(m, w), std::string(name) + ": " + to_utf8(w));
            c.expect(!s.nondeterministic_step && !s.bound_violated, "determinism and bound");
            if (s.trace) {
                for (auto k : s.trace->reversals) c.expect(k < r.reversal_bound(), "reversals within bound");
                for (const auto& conf : s.trace->configurations) {
                    for (auto v : conf.counters) c.expect(v >= 0, "counters nonnegative");
                }
            }
            return true;
        });
    }
    return c;
}

Check closure() {
    Check c;
    Pa p = commutative_closure(corpus_ca("ab-star"));
    for_each_word(make_alphabet({U'a', U'b'}), 10, [&](const Word& w) {
        c.expect(membership(p, w) == lang::equal_counts(w), "mismatch on " + to_utf8(w));
        return true;
    });
    return c;
}

Check blocker() {
    Check c;
    Pa p = std::get<Pa>(corpus_build("equal-counts").machine);
    Nfa e(3, make_alphabet({U'a', U'b'}));
    e.add_transition(0, U'a', 1);
    e.add_transition(1, U'a', 1);
    e.add_transition(1, U'b', 2);
    e.add_transition(2, U'b', 2);
    e.set_final(2);
    auto w = lpa_blocker(p, e, 8);
    c.expect(w.has_value(), "a blocker exists");
    if (w) {
        c.expect(accepts(e, *w), "blocker in a+b+");
        c.expect(!lang::equal_counts(*w), "blocker has unequal counts");
        c.expect(*w == Word(U"aab"), "first blocker is aab");
    }
    return c;
}

Check boundedness() {
    Check c;
    for (const char* name : {"ab-star", "anbn", "equal"}) {
        const Nfa a = automaton_of(corpus_build(name).machine);
        SemilinearSet img = parikh_image(a);
        auto schemes = bounded_sublanguage(a);
        std::set<NatVector> generated;
        for (const auto& s : schemes) {
            c.expect(is_well_formed(a, a.finals(), s), std::string(name) + ": scheme well formed");
            std::vector<std::size_t> counts(s.cycles.size(), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t i) {
                if (i == counts.size()) {
                    Path p = s.generate(counts);
                    NatVector v = parikh_of(a, p);
                    if (!oracle::entries_at_most(6)(v)) return;
                    c.expect(is_accepting(a, p), std::string(name) + ": generated run accepting");
                    c.expect(sl_member(v, img), std::string(name) + ": generated image in parikh_image");
                    generated.insert(v);
                    return;
                }
                for (std::size_t k = 0; k <= 6; ++k) {
                    counts[i] = k;
                    rec(i + 1);
                }
                counts[i] = 0;
            };
            rec(0);
        }
        auto members = oracle::generated_members(img, oracle::entries_at_most(6));
        c.expect(generated == members, std::string(name) + ": schemes reproduce the image up to 6");
    }
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Check()> run;
        double seconds;
    };
    std::vector<Criterion> criteria{
        {1, "Hilbert bases of 2x=3y and x1+x2=x3", hilbert, 1},
        {2, "Parikh image of (ab)* and of every corpus automaton", parikh_theorem, 10},
        {3, "emptiness, cardinality and inclusion", decidability, 0},
        {4, "EQUAL PA agrees on all 3280 words up to length 7", equal_pa, 30},
        {5, "pumping decompositions for 10 long words", pumping, 0},
        {6, "PAL APA over Q up to length 9 and its register trace", pal, 0},
        {7, "Q-to-N and two-state forms of PAL up to length 8", transforms, 0},
        {8, "register growth bound on runs of length <= 6", register_growth, 0},
        {9, "compiled RBCMs agree with three DetCAs up to length 10", compiler, 60},
        {10, "commutative closure of (ab)* up to length 10", closure, 0},
        {11, "LPA blocker for a+b+", blocker, 0},
        {12, "linear path schemes reproduce the Parikh image", boundedness, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.ok = false;
            r.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.seconds > 0 && secs > c.seconds) {
            r.ok = false;
            r.note = "took longer than " + std::to_string(static_cast<int>(c.seconds)) + " s";
        }
        std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", c.id, r.ok ? "PASS" : "FAIL", c.title, secs,
                    r.ok ? "" : " -- ", r.note.c_str());
        std::fflush(stdout);
        if (!r.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
