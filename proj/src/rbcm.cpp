#include "parikh/rbcm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace parikh {

namespace {

bool tests_overlap(const std::vector<ZeroTest>& a, const std::vector<ZeroTest>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != ZeroTest::Any && b[i] != ZeroTest::Any && a[i] != b[i]) return false;
    }
    return true;
}

bool test_holds(const std::vector<ZeroTest>& test, const std::vector<std::int64_t>& counters) {
    for (std::size_t i = 0; i < test.size(); ++i) {
        if (test[i] == ZeroTest::Zero && counters[i] != 0) return false;
        if (test[i] == ZeroTest::Positive && counters[i] <= 0) return false;
    }
    return true;
}

// Transitions with sparse tests and increments; counters are allocated
// while emitting and the machine is assembled at the end.
class Draft {
public:
    using Counter = std::size_t;

    struct Edge {
        StateId from;
        Symbol letter;
        std::vector<std::pair<Counter, ZeroTest>> test;
        StateId to;
        HeadMove head;
        std::vector<std::pair<Counter, int>> inc;
    };

    explicit Draft(std::size_t states, std::size_t counters) : states_(states), counters_(counters) {}

    StateId state() { return states_++; }
    Counter counter() { return counters_++; }
    void edge(Edge e) { edges_.push_back(std::move(e)); }
    // A step after ♯: the head stays.
    void step(StateId from, std::vector<std::pair<Counter, ZeroTest>> test, StateId to,
              std::vector<std::pair<Counter, int>> inc = {}) {
        edges_.push_back({from, kEndMarker, std::move(test), to, HeadMove::Stay, std::move(inc)});
    }

    Rbcm build(const Alphabet& alphabet, StateId initial, const std::vector<StateId>& finals, std::size_t r) const {
        Rbcm m(states_, alphabet, counters_, initial, r);
        for (const auto& e : edges_) {
            RbcmTransition t{e.from, e.letter, std::vector<ZeroTest>(counters_, ZeroTest::Any), e.to, e.head,
                             std::vector<int>(counters_, 0)};
            for (auto [c, z] : e.test) t.test[c] = z;
            for (auto [c, v] : e.inc) t.increments[c] = v;
            m.add_transition(std::move(t));
        }
        for (StateId q : finals) m.set_final(q);
        return m;
    }

private:
    std::size_t states_;
    std::size_t counters_;
    std::vector<Edge> edges_;
};

class Compiler {
public:
    explicit Compiler(const Ca& m) : m_(m), draft_(m.automaton().state_count(), m.dim()), uses_(m.dim(), 0) {}

    Rbcm run() {
        const Nfa& a = m_.automaton();
        for (TransitionId t = 0; t < a.transition_count(); ++t) {
            const auto& tr = a.transition(t);
            draft_.edge({tr.from, *tr.label, {}, tr.to, HeadMove::Right, {{t, +1}}});
        }
        accept_ = draft_.state();
        dead_ = draft_.state();
        std::map<std::vector<std::size_t>, StateId> chains;
        for (StateId q = 0; q < a.state_count(); ++q) {
            std::vector<std::size_t> in;
            for (std::size_t i = 0; i < m_.clauses().size(); ++i) {
                if (m_.clauses()[i].finals[q]) in.push_back(i);
            }
            if (in.empty()) continue;
            auto it = chains.find(in);
            if (it == chains.end()) it = chains.emplace(in, chain(in)).first;
            draft_.edge({q, kEndMarker, {}, it->second, HeadMove::Stay, {}});
        }
        std::size_t most = 0;
        for (auto u : uses_) most = std::max(most, u);
        // Base counters reverse twice per use; gadget counters once.
        const std::size_t reversals = std::max<std::size_t>(1, 2 * most);
        return draft_.build(a.alphabet(), a.initial(), {accept_}, reversals + 1);
    }

private:
    using Counter = Draft::Counter;
    using Piece = std::pair<Counter, Integer>;

    StateId chain(const std::vector<std::size_t>& clauses) {
        StateId fail = dead_;
        for (auto it = clauses.rbegin(); it != clauses.rend(); ++it) {
            const auto& phi = std::get<PresburgerFormula>(m_.clauses()[*it].constraint);
            StateId entry = fail;
            for (auto c = phi.clauses().rbegin(); c != phi.clauses().rend(); ++c) entry = clause(*c, accept_, entry);
            fail = entry;
        }
        return fail;
    }

    StateId clause(const Clause& c, StateId pass, StateId fail) {
        StateId next = pass;
        for (auto it = c.rbegin(); it != c.rend(); ++it) next = literal(*it, next, fail);
        return next;
    }

    StateId literal(const Literal& l, StateId pass, StateId fail) {
        StateId yes = l.negated ? fail : pass;
        StateId no = l.negated ? pass : fail;
        Term diff = l.atom.lhs - l.atom.rhs;
        return l.atom.kind == Atom::Kind::Less ? less(diff, yes, no) : congruence(diff, l.atom.modulus, yes, no);
    }

    // diff < 0, i.e. P < N with P, N the positive and negated parts.
    StateId less(const Term& diff, StateId yes, StateId no) {
        std::vector<Piece> p, n;
        for (std::size_t j = 0; j < diff.coeffs.size(); ++j) {
            if (diff.coeffs[j] > 0) p.emplace_back(j, diff.coeffs[j]);
            if (diff.coeffs[j] < 0) n.emplace_back(j, -diff.coeffs[j]);
        }
        Integer cp = diff.constant > 0 ? diff.constant : Integer(0);
        Integer cn = diff.constant < 0 ? Integer(-diff.constant) : Integer(0);
        Counter x = draft_.counter();
        Counter y = draft_.counter();
        StateId entry = draft_.state();
        StateId mid = evaluate(entry, x, p, cp);
        StateId cmp = evaluate(mid, y, n, cn);
        draft_.step(cmp, {{x, ZeroTest::Positive}, {y, ZeroTest::Positive}}, cmp, {{x, -1}, {y, -1}});
        draft_.step(cmp, {{x, ZeroTest::Zero}, {y, ZeroTest::Positive}}, yes);
        draft_.step(cmp, {{y, ZeroTest::Zero}}, no);
        return entry;
    }

    // Adds Σ c_j x_j + constant to `target`, restoring every x_j.
    StateId evaluate(StateId at, Counter target, const std::vector<Piece>& pieces, const Integer& constant) {
        for (const auto& [j, c] : pieces) {
            ++uses_[j];
            Counter keep = draft_.counter();
            StateId restore = draft_.state();
            StateId done = draft_.state();
            const unsigned long k = c.get_ui();
            StateId from = at;
            for (unsigned long step = 0; step < k; ++step) {
                StateId to = step + 1 == k ? at : draft_.state();
                if (step == 0) {
                    draft_.step(from, {{j, ZeroTest::Positive}}, to, {{j, -1}, {target, +1}, {keep, +1}});
                } else {
                    draft_.step(from, {}, to, {{target, +1}});
                }
                from = to;
            }
            draft_.step(at, {{j, ZeroTest::Zero}}, restore);
            draft_.step(restore, {{keep, ZeroTest::Positive}}, restore, {{keep, -1}, {j, +1}});
            draft_.step(restore, {{keep, ZeroTest::Zero}}, done);
            at = done;
        }
        for (Integer i = 0; i < constant; ++i) {
            StateId next = draft_.state();
            draft_.step(at, {}, next, {{target, +1}});
            at = next;
        }
        return at;
    }

    // diff ≡ 0 (mod m), tracking the residue in the state.
    StateId congruence(const Term& diff, const Integer& modulus, StateId yes, StateId no) {
        const unsigned long m = modulus.get_ui();
        auto residue = [&](const Integer& v) {
            Integer r = v % modulus;
            if (r < 0) r += modulus;
            return r.get_ui();
        };
        std::vector<StateId> layer(m);
        for (auto& s : layer) s = draft_.state();
        const StateId entry = layer[0];
        for (std::size_t j = 0; j < diff.coeffs.size(); ++j) {
            const unsigned long c = residue(diff.coeffs[j]);
            if (c == 0) continue;
            ++uses_[j];
            Counter keep = draft_.counter();
            std::vector<StateId> restore(m), next(m);
            for (auto& s : restore) s = draft_.state();
            for (auto& s : next) s = draft_.state();
            for (unsigned long r = 0; r < m; ++r) {
                draft_.step(layer[r], {{j, ZeroTest::Positive}}, layer[(r + c) % m], {{j, -1}, {keep, +1}});
                draft_.step(layer[r], {{j, ZeroTest::Zero}}, restore[r]);
                draft_.step(restore[r], {{keep, ZeroTest::Positive}}, restore[r], {{keep, -1}, {j, +1}});
                draft_.step(restore[r], {{keep, ZeroTest::Zero}}, next[r]);
            }
            layer = next;
        }
        const unsigned long c0 = residue(diff.constant);
        for (unsigned long r = 0; r < m; ++r) draft_.step(layer[r], {}, (r + c0) % m == 0 ? yes : no);
        return entry;
    }

    const Ca& m_;
    Draft draft_;
    std::vector<std::size_t> uses_;
    StateId accept_ = 0;
    StateId dead_ = 0;
};

}  // namespace

Rbcm::Rbcm(std::size_t states, Alphabet alphabet, std::size_t counters, StateId initial, std::size_t reversal_bound,
           Symbol end_marker)
    : alphabet_(make_alphabet(std::move(alphabet))),
      counters_(counters),
      initial_(initial),
      reversal_bound_(reversal_bound),
      end_marker_(end_marker),
      finals_(states, false),
      out_(states) {
    if (states == 0) throw InvalidArgument("machine needs at least one state");
    if (initial >= states) throw InvalidArgument("initial state out of range");
    if (alphabet_contains(alphabet_, end_marker)) throw InvalidArgument("the end marker must not be a letter");
}

StateId Rbcm::add_state() {
    finals_.push_back(false);
    out_.emplace_back();
    return finals_.size() - 1;
}

void Rbcm::add_transition(RbcmTransition t) {
    if (t.from >= state_count() || t.to >= state_count()) throw InvalidArgument("transition endpoint out of range");
    if (t.letter != end_marker_ && !alphabet_contains(alphabet_, t.letter)) {
        throw InvalidArgument("transition letter '" + to_utf8(t.letter) + "' is not in the alphabet");
    }
    require_dim(t.test.size(), counters_, "zero-test pattern");
    require_dim(t.increments.size(), counters_, "counter increments");
    for (int v : t.increments) {
        if (v < -1 || v > 1) throw InvalidArgument("counter increments must be -1, 0 or +1");
    }
    out_[t.from].push_back(transitions_.size());
    transitions_.push_back(std::move(t));
}

void Rbcm::set_final(StateId q, bool final) { finals_.at(q) = final; }

bool Rbcm::is_deterministic() const {
    for (StateId q = 0; q < state_count(); ++q) {
        const auto& out = out_[q];
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = i + 1; j < out.size(); ++j) {
                const auto& a = transitions_[out[i]];
                const auto& b = transitions_[out[j]];
                if (a.letter == b.letter && tests_overlap(a.test, b.test)) return false;
            }
        }
    }
    return true;
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Accept:
            return "accept";
        case Outcome::Reject:
            return "reject";
        case Outcome::FuelExhausted:
            return "fuel-exhausted";
    }
    return "?";
}

SimulationResult simulate(const Rbcm& m, const Word& w, std::size_t fuel) {
    for (Symbol s : w) {
        if (!alphabet_contains(m.alphabet(), s)) throw InvalidArgument("symbol '" + to_utf8(s) + "' is not in the alphabet");
    }
    Word tape = w;
    tape.push_back(m.end_marker());
    const std::size_t k = m.counter_count();

    struct Node {
        Configuration config;
        std::vector<int> phase;  // -1 decreasing, 0 untouched, +1 increasing
        std::vector<std::size_t> reversals;
        std::vector<std::size_t> moves;
        std::size_t next = 0;
    };
    using Key = std::tuple<StateId, std::size_t, std::vector<std::int64_t>, std::vector<int>, std::vector<std::size_t>>;
    std::set<Key> seen;
    SimulationResult result;

    auto applicable = [&](const Configuration& c) {
        std::vector<std::size_t> out;
        for (std::size_t i : m.outgoing(c.state)) {
            const auto& t = m.transitions()[i];
            if (t.letter == tape[c.head] && test_holds(t.test, c.counters)) out.push_back(i);
        }
        if (out.size() > 1) result.nondeterministic_step = true;
        return out;
    };
    auto accept = [&](const std::vector<Node>& stack, const Node* last) {
        RbcmTrace trace;
        for (const auto& n : stack) trace.configurations.push_back(n.config);
        if (last) trace.configurations.push_back(last->config);
        trace.reversals = last ? last->reversals : stack.back().reversals;
        result.outcome = Outcome::Accept;
        result.trace = std::move(trace);
    };

    std::vector<Node> stack;
    Node root{{m.initial(), 0, std::vector<std::int64_t>(k, 0)}, std::vector<int>(k, 0), std::vector<std::size_t>(k, 0), {}, 0};
    if (m.is_final(root.config.state)) {
        stack.push_back(std::move(root));
        accept(stack, nullptr);
        return result;
    }
    root.moves = applicable(root.config);
    seen.insert({root.config.state, root.config.head, root.config.counters, root.phase, root.reversals});
    stack.push_back(std::move(root));

    while (!stack.empty()) {
        Node& top = stack.back();
        if (top.next == top.moves.size()) {
            stack.pop_back();
            continue;
        }
        const auto& t = m.transitions()[top.moves[top.next++]];
        if (result.steps == fuel) {
            result.outcome = Outcome::FuelExhausted;
            return result;
        }
        ++result.steps;
        Node child{top.config, top.phase, top.reversals, {}, 0};
        child.config.state = t.to;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            int v = t.increments[i];
            if (v == 0) continue;
            child.config.counters[i] += v;
            if (child.config.counters[i] < 0) ok = false;
            if (child.phase[i] != 0 && child.phase[i] != v) ++child.reversals[i];
            child.phase[i] = v;
            if (child.reversals[i] >= m.reversal_bound()) {
                result.bound_violated = true;
                ok = false;
            }
        }
        if (t.head == HeadMove::Right) {
            if (child.config.head + 1 >= tape.size()) ok = false;
            ++child.config.head;
        }
        if (!ok) continue;
        if (m.is_final(child.config.state)) {
            accept(stack, &child);
            return result;
        }
        if (!seen.insert({child.config.state, child.config.head, child.config.counters, child.phase, child.reversals})
                 .second) {
            continue;
        }
        child.moves = applicable(child.config);
        stack.push_back(std::move(child));
    }
    result.outcome = Outcome::Reject;
    return result;
}

Rbcm compile_to_rbcm(const Ca& m) {
    if (!m.is_deterministic()) throw InvalidArgument("compile_to_rbcm: automaton is not deterministic");
    if (!m.has_formula_constraints()) throw Unsupported("compile_to_rbcm: constraints must be formulas");
    return Compiler(m).run();
}

Rbcm compile_to_rbcm(const Ca& m, const PresburgerFormula& phi) {
    std::vector<AcceptanceClause> clauses;
    StateSet finals(m.automaton().state_count(), false);
    for (const auto& c : m.clauses()) {
        for (StateId q = 0; q < finals.size(); ++q) finals[q] = finals[q] || c.finals[q];
    }
    clauses.push_back({finals, phi});
    return compile_to_rbcm(Ca(m.automaton(), std::move(clauses)));
}

Rbcm nsum_rbcm() {
    const Symbol a = U'a', b = U'b', c = U'c', hash = U'#', spade = U'♠', club = U'♣';
    enum : StateId { Ones, Blocks, Check, Sum, Done };
    enum : std::size_t { A, S };
    Rbcm m(5, make_alphabet({a, b, c, hash, spade, club}), 2, Ones, 2);
    using Z = ZeroTest;
    auto add = [&](StateId from, Symbol l, Z ta, Z ts, StateId to, HeadMove h, int ia, int is) {
        m.add_transition({from, l, {ta, ts}, to, h, {ia, is}});
    };
    add(Ones, a, Z::Any, Z::Any, Ones, HeadMove::Right, +1, 0);
    add(Ones, spade, Z::Any, Z::Any, Blocks, HeadMove::Right, 0, 0);
    // A counts the blocks still to be added.
    add(Blocks, b, Z::Positive, Z::Any, Blocks, HeadMove::Right, 0, +1);
    add(Blocks, b, Z::Zero, Z::Any, Blocks, HeadMove::Right, 0, 0);
    add(Blocks, hash, Z::Positive, Z::Any, Blocks, HeadMove::Right, -1, 0);
    add(Blocks, hash, Z::Zero, Z::Any, Blocks, HeadMove::Right, 0, 0);
    add(Blocks, club, Z::Positive, Z::Any, Check, HeadMove::Right, -1, 0);
    add(Blocks, club, Z::Zero, Z::Any, Sum, HeadMove::Right, 0, 0);
    // k ≥ n: at most one block was missing.
    add(Check, c, Z::Zero, Z::Any, Sum, HeadMove::Stay, 0, 0);
    add(Check, kEndMarker, Z::Zero, Z::Any, Sum, HeadMove::Stay, 0, 0);
    add(Sum, c, Z::Any, Z::Positive, Sum, HeadMove::Right, 0, -1);
    add(Sum, kEndMarker, Z::Any, Z::Zero, Done, HeadMove::Stay, 0, 0);
    m.set_final(Done);
    return m;
}

}  // namespace parikh
