#include "parikh/corpus.hpp"

#include <algorithm>
#include <map>

#include "parikh/closure.hpp"

namespace parikh {

namespace lang {

namespace {

std::size_t count(const Word& w, Symbol s) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), s)); }

bool only(const Word& w, Symbol s) { return count(w, s) == w.size(); }

bool is_anbn(const Word& w) {
    const std::size_t n = w.size() / 2;
    return w.size() % 2 == 0 && w == Word(n, U'a') + Word(n, U'b');
}

}  // namespace

bool anbn(const Word& w) { return is_anbn(w); }

bool ab_star(const Word& w) {
    if (w.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != (i % 2 == 0 ? U'a' : U'b')) return false;
    }
    return true;
}

bool astar_bstar(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

bool equal(const Word& w) {
    if (count(w, U'#') != 1) return false;
    const std::size_t hash = w.find(U'#');
    const Word tail = w.substr(hash + 1);
    if (!only(tail, U'a')) return false;
    const std::size_t n = tail.size();
    return hash >= n && only(w.substr(hash - n, n), U'a');
}

bool copy(const Word& w) {
    if (count(w, U'#') != 1) return false;
    const std::size_t hash = w.find(U'#');
    return w.substr(0, hash) == w.substr(hash + 1);
}

bool pal(const Word& w) {
    if (count(w, U'#') != 1) return false;
    const std::size_t hash = w.find(U'#');
    Word left = w.substr(0, hash);
    Word right = w.substr(hash + 1);
    std::reverse(right.begin(), right.end());
    return !left.empty() && left == right;
}

bool sigma_anbn(const Word& w) {
    const std::size_t hash = w.rfind(U'#');
    return hash != Word::npos && is_anbn(w.substr(hash + 1));
}

bool nsum(const Word& w) {
    const std::size_t spade = w.find(U'♠');
    const std::size_t club = w.find(U'♣');
    if (spade == Word::npos || club == Word::npos || spade > club) return false;
    if (count(w, U'♠') != 1 || count(w, U'♣') != 1) return false;
    const Word as = w.substr(0, spade);
    const Word middle = w.substr(spade + 1, club - spade - 1);
    const Word cs = w.substr(club + 1);
    if (!only(as, U'a') || !only(cs, U'c')) return false;
    std::vector<std::size_t> blocks{0};
    for (Symbol s : middle) {
        if (s == U'#') {
            blocks.push_back(0);
        } else if (s == U'b') {
            ++blocks.back();
        } else {
            return false;
        }
    }
    const std::size_t n = as.size();
    if (n > blocks.size()) return false;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += blocks[i];
    return sum == cs.size();
}

bool expo(const Word& w) {
    const std::size_t n = count(w, U'a');
    if (n >= 20 || !astar_bstar(w)) return false;
    return w.size() - n == (std::size_t{1} << n);
}

bool equal_counts(const Word& w) { return count(w, U'a') == count(w, U'b'); }

}  // namespace lang

namespace {

using F = PresburgerFormula;

Term var(std::size_t d, std::size_t i) { return Term::var(d, i); }

// q0 -a-> q0, q0 -b-> q1, q1 -b-> q1.
Nfa astar_bstar_automaton() {
    Nfa a(2, make_alphabet({U'a', U'b'}));
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'b', 1);
    a.add_transition(1, U'b', 1);
    a.set_final(0);
    a.set_final(1);
    return a;
}

Nfa ab_star_automaton() {
    Nfa a(2, make_alphabet({U'a', U'b'}));
    a.add_transition(0, U'a', 1);
    a.add_transition(1, U'b', 0);
    a.set_final(0);
    return a;
}

Ca anbn_ca() { return Ca(astar_bstar_automaton(), F(3, {equal_clause(var(3, 0), var(3, 1) + var(3, 2))})); }

Ca two_words_ca() {
    Clause c = equal_clause(var(3, 0), var(3, 1) + var(3, 2));
    c.push_back({Atom::less(Term::constant_term(3, 0), var(3, 0)), false});
    c.push_back({Atom::less(var(3, 0), Term::constant_term(3, 3)), false});
    return Ca(astar_bstar_automaton(), F(3, {c}));
}

Ca parity_ca() {
    Nfa a(1, make_alphabet({U'a', U'b'}));
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'b', 0);
    a.set_final(0);
    return Ca(std::move(a), F::atom(2, Atom::cong(2, var(2, 0), var(2, 1))));
}

Ca empty_ca() {
    return Ca(ab_star_automaton(), F(2, {equal_clause(var(2, 0), var(2, 1) + Integer(1))}));
}

Alphabet abh() { return make_alphabet({U'a', U'b', U'#'}); }

Pa equal_pa() {
    enum : StateId { Free, Run, After };
    Nfa a(3, abh());
    std::vector<NatVector> w;
    auto add = [&](StateId p, Symbol s, StateId q, NatVector v) {
        a.add_transition(p, s, q);
        w.push_back(std::move(v));
    };
    add(Free, U'a', Free, {0, 0});
    add(Free, U'b', Free, {0, 0});
    add(Free, U'a', Run, {1, 0});
    add(Free, U'#', After, {0, 0});
    add(Run, U'a', Run, {1, 0});
    add(Run, U'#', After, {0, 0});
    add(After, U'a', After, {0, 1});
    a.set_final(After);
    return Pa(std::move(a), std::move(w), F(2, {equal_clause(var(2, 0), var(2, 1))}));
}

// {a,b}* over {a,b,#}, constraint true.
Ca ab_free_ca() {
    Nfa a(1, abh());
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'b', 0);
    a.set_final(0);
    return Ca(std::move(a), F::verum(2));
}

Ca equal_concat_ca() {
    Nfa a(2, abh());
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'#', 1);
    a.add_transition(1, U'a', 1);
    a.set_final(1);
    Ca tail(std::move(a), F(3, {equal_clause(var(3, 0), var(3, 2))}));
    return combine(ab_free_ca(), tail, CombineOp::Concatenation);
}

Ca sigma_anbn_ca() {
    Nfa a(3, abh());
    a.add_transition(0, U'#', 1);
    a.add_transition(1, U'a', 1);
    a.add_transition(1, U'b', 2);
    a.add_transition(2, U'b', 2);
    a.set_final(1);
    a.set_final(2);
    Ca tail(std::move(a), F(4, {equal_clause(var(4, 1), var(4, 2) + var(4, 3))}));
    return combine(universal_ca(abh()), tail, CombineOp::Concatenation);
}

Pa equal_counts_lpa() {
    Nfa a(1, make_alphabet({U'a', U'b'}));
    a.add_transition(0, U'a', 0);
    a.add_transition(0, U'b', 0);
    a.set_final(0);
    return Pa(std::move(a), {{1, 0}, {0, 1}}, F(2, {equal_clause(var(2, 0), var(2, 1))}));
}

AffineMap map(RatMatrix m, RatVector v) { return {std::move(m), std::move(v)}; }

Rational half() { return Rational(1, 2); }

// Registers (p, v): p = 2^|w|, v the binary code of the a-positions.
Apa pal_apa() {
    Nfa a(3, abh());
    std::vector<AffineMap> u;
    auto add = [&](StateId p, Symbol s, StateId q, AffineMap f) {
        a.add_transition(p, s, q);
        u.push_back(std::move(f));
    };
    add(0, U'a', 1, AffineMap::constant({2, 1}));
    add(0, U'b', 1, AffineMap::constant({2, 0}));
    add(1, U'a', 1, map({{2, 0}, {1, 1}}, {0, 0}));
    add(1, U'b', 1, map({{2, 0}, {0, 1}}, {0, 0}));
    add(1, U'#', 2, AffineMap::identity(2));
    add(2, U'a', 2, map({{half(), 0}, {-half(), 1}}, {0, 0}));
    add(2, U'b', 2, map({{half(), 0}, {0, 1}}, {0, 0}));
    a.set_final(2);
    return Apa(std::move(a), 2, std::move(u), QAffineSet::point({1, 0}), Domain::Rationals);
}

// Registers (p, v, q): p and q encode the lengths of the halves, v adds
// 2^i for an a at position i of the first half and subtracts it for the second.
Apa copy_apa() {
    Nfa a(2, abh());
    std::vector<AffineMap> u;
    auto add = [&](StateId p, Symbol s, StateId q, AffineMap f) {
        a.add_transition(p, s, q);
        u.push_back(std::move(f));
    };
    add(0, U'a', 0, map({{2, 0, 0}, {1, 1, 0}, {0, 0, 1}}, {1, 1, 0}));
    add(0, U'b', 0, map({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 0, 0}));
    add(0, U'#', 1, AffineMap::identity(3));
    add(1, U'a', 1, map({{1, 0, 0}, {0, 1, -1}, {0, 0, 2}}, {0, -1, 1}));
    add(1, U'b', 1, map({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, {0, 0, 1}));
    a.set_final(1);
    QAffineClause c;
    c.zeros.push_back({0, {1, 0, -1}});
    c.zeros.push_back({0, {0, 1, 0}});
    return Apa(std::move(a), 3, std::move(u), QAffineSet(3, {c}), Domain::Rationals);
}

// Registers (p, m): p = 2^n - 1 after n a's, m counts b's; m = p + 1.
Apa expo_apa() {
    Nfa a = astar_bstar_automaton();
    a.set_final(0, false);
    std::vector<AffineMap> u{map({{2, 0}, {0, 1}}, {1, 0}), map({{1, 0}, {0, 1}}, {0, 1}),
                             map({{1, 0}, {0, 1}}, {0, 1})};
    return Apa(std::move(a), 2, std::move(u), SemilinearSet::linear({0, 1}, {{1, 1}}), Domain::Naturals);
}

struct Recipe {
    const char* description;
    std::function<Machine()> machine;
    bool (*oracle)(const Word&);
    std::size_t bound;
    bool reconstruction;
};

const std::map<std::string, Recipe>& recipes() {
    static const std::map<std::string, Recipe> table{
        {"anbn", {"a^n b^n as a deterministic CA", [] { return Machine(anbn_ca()); }, lang::anbn, 10, false}},
        {"ab-star",
         {"(ab)* with constraint true", [] { return Machine(Ca(ab_star_automaton(), F::verum(2))); }, lang::ab_star,
          10, false}},
        {"astar-bstar",
         {"a*b* with constraint true", [] { return Machine(Ca(astar_bstar_automaton(), F::verum(3))); },
          lang::astar_bstar, 10, false}},
        {"parity",
         {"|w|_a = |w|_b mod 2 as a deterministic CA", [] { return Machine(parity_ca()); },
          [](const Word& w) {
              return std::count(w.begin(), w.end(), U'a') % 2 == std::count(w.begin(), w.end(), U'b') % 2;
          },
          10, false}},
        {"two-words",
         {"{ab, aabb}", [] { return Machine(two_words_ca()); },
          [](const Word& w) { return w == U"ab" || w == U"aabb"; }, 10, false}},
        {"empty",
         {"(ab)* runs with one more a than b: empty", [] { return Machine(empty_ca()); },
          [](const Word&) { return false; }, 10, false}},
        {"equal",
         {"{a,b}* a^n # a^n as a PA guessing where a^n starts", [] { return Machine(equal_pa()); }, lang::equal, 7,
          true}},
        {"equal-concat",
         {"{a,b}* concatenated with the deterministic CA for a^n # a^n", [] { return Machine(equal_concat_ca()); },
          lang::equal, 7, false}},
        {"sigma-anbn",
         {"{a,b,#}* # a^n b^n by concatenation", [] { return Machine(sigma_anbn_ca()); }, lang::sigma_anbn, 7,
          false}},
        {"equal-counts",
         {"|w|_a = |w|_b as an LPA", [] { return Machine(equal_counts_lpa()); }, lang::equal_counts, 10, false}},
        {"pal", {"w # w^R, w nonempty, as a deterministic APA over Q", [] { return Machine(pal_apa()); }, lang::pal,
                 9, false}},
        {"copy", {"w # w as a deterministic APA over Q", [] { return Machine(copy_apa()); }, lang::copy, 8, true}},
        {"expo", {"a^n b^(2^n) as a deterministic APA over N", [] { return Machine(expo_apa()); }, lang::expo, 10,
                  true}},
        {"nsum", {"NSUM as a deterministic RBCM", [] { return Machine(nsum_rbcm()); }, lang::nsum, 6, true}},
    };
    return table;
}

}  // namespace

const char* model_name(const Machine& m) {
    static const char* names[] = {"ca", "pa", "apa", "rbcm"};
    return names[m.index()];
}

const Alphabet& machine_alphabet(const Machine& m) {
    return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, m);
}

bool machine_accepts(const Machine& m, const Word& w, const Limits& limits, std::size_t fuel) {
    if (auto* c = std::get_if<Ca>(&m)) return membership(*c, w, limits);
    if (auto* p = std::get_if<Pa>(&m)) return membership(*p, w, limits);
    if (auto* a = std::get_if<Apa>(&m)) return apa_membership(*a, w, limits);
    auto r = simulate(std::get<Rbcm>(m), w, fuel);
    if (r.outcome == Outcome::FuelExhausted) throw ResourceLimit("simulation ran out of fuel");
    return r.outcome == Outcome::Accept;
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto& [name, r] : recipes()) out.push_back(name);
    return out;
}

CorpusEntry corpus_build(const std::string& name) {
    auto it = recipes().find(name);
    if (it == recipes().end()) throw InvalidArgument("unknown corpus entry '" + name + "'");
    const Recipe& r = it->second;
    Machine m = r.machine();
    Alphabet alphabet = machine_alphabet(m);
    return {name, r.description, std::move(m), r.oracle, std::move(alphabet), r.bound, r.reconstruction};
}

std::optional<Word> corpus_mismatch(const CorpusEntry& e, std::size_t bound, const Limits& limits) {
    std::optional<Word> out;
    for_each_word(e.alphabet, bound, [&](const Word& w) {
        if (machine_accepts(e.machine, w, limits) != e.oracle(w)) {
            out = w;
            return false;
        }
        return true;
    });
    return out;
}

std::optional<Word> corpus_mismatch(const CorpusEntry& e, const Limits& limits) {
    return corpus_mismatch(e, e.bound, limits);
}

}  // namespace parikh
