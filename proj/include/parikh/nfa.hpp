#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "parikh/error.hpp"
#include "parikh/numeric.hpp"
#include "parikh/word.hpp"

namespace parikh {

using StateId = std::size_t;
/// Position of a transition in declaration order. Count vectors over the
/// transitions of an automaton are indexed by it.
using TransitionId = std::size_t;
using StateSet = std::vector<bool>;

struct Transition {
    StateId from;
    std::optional<Symbol> label;  ///< nullopt is ε
    StateId to;

    bool is_epsilon() const { return !label.has_value(); }
    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Finite automaton with ε-transitions over a finite alphabet. States are
/// 0..state_count()-1.
class Nfa {
public:
    Nfa() : Nfa(1, {}) {}
    Nfa(std::size_t states, Alphabet alphabet, StateId initial = 0);

    StateId add_state();
    TransitionId add_transition(StateId from, std::optional<Symbol> label, StateId to);
    void set_final(StateId q, bool final = true);
    void set_initial(StateId q);

    std::size_t state_count() const { return out_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    StateId initial() const { return initial_; }
    const std::vector<Transition>& transitions() const { return transitions_; }
    const Transition& transition(TransitionId t) const { return transitions_.at(t); }
    std::size_t transition_count() const { return transitions_.size(); }
    const StateSet& finals() const { return finals_; }
    bool is_final(StateId q) const { return finals_.at(q); }
    std::vector<StateId> final_states() const;
    const std::vector<TransitionId>& outgoing(StateId q) const { return out_.at(q); }

    bool has_epsilon() const;
    /// ε-free with at most one transition per (state, symbol).
    bool is_deterministic() const;
    /// At least one transition per (state, symbol).
    bool is_complete() const;

    friend bool operator==(const Nfa& a, const Nfa& b) {
        return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ && a.transitions_ == b.transitions_ &&
               a.finals_ == b.finals_ && a.out_.size() == b.out_.size();
    }

private:
    Alphabet alphabet_;
    StateId initial_;
    std::vector<Transition> transitions_;
    StateSet finals_;
    std::vector<std::vector<TransitionId>> out_;
};

/// A sequence of transitions, each starting where the previous one ends.
struct Path {
    std::vector<TransitionId> steps;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
    Path operator+(const Path& other) const;
    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

bool is_valid_path(const Nfa& a, const Path& p);
/// Concatenated non-ε labels. Throws InvalidArgument on an invalid path.
Word label_of(const Nfa& a, const Path& p);
/// Starts at the initial state and ends in `finals`.
bool is_accepting(const Nfa& a, const Path& p, const StateSet& finals);
bool is_accepting(const Nfa& a, const Path& p);
/// Transition counts of the path (dimension |δ|).
NatVector parikh_of(const Nfa& a, const Path& p);
/// States visited by the path started at `start` (including `start`).
std::vector<StateId> states_of(const Nfa& a, const Path& p, StateId start);

/// Plain automaton acceptance (no constraint), with ε-closure.
bool accepts(const Nfa& a, const Word& w);
bool accepts(const Nfa& a, const StateSet& finals, const Word& w);

struct Product {
    Nfa automaton;
    /// For each product transition, the transition of the left (right)
    /// operand it moves; ε-moves of one side leave the other side empty.
    std::vector<std::optional<TransitionId>> left;
    std::vector<std::optional<TransitionId>> right;
    /// Product state -> (left state, right state).
    std::vector<std::pair<StateId, StateId>> pairs;
};

/// Synchronous product with ε-interleaving, restricted to reachable pairs.
/// Finals are the pairs (p, q) with p in `left_finals` and q in `right_finals`.
Product product(const Nfa& a, const Nfa& b, const StateSet& left_finals, const StateSet& right_finals);
Product product(const Nfa& a, const Nfa& b);

/// Subset construction completed with one sink; every subset that cannot
/// reach a final state is merged into the sink. Requires an ε-free input.
Nfa determinize_complete(const Nfa& a);

/// Copy of `a` with one sink state added when needed so that every
/// (state, symbol) has a transition. Existing transitions keep their ids.
Nfa complete_with_sink(const Nfa& a);

/// Elementary cycles anchored at their start state: no state except the
/// start occurs twice. Each anchored transition sequence appears once.
std::vector<Path> elementary_cycles(const Nfa& a, const Limits& limits = {});

/// An accepting path ending in `finals` whose transition counts are exactly
/// `counts`, found by exhaustive search (budgeted).
std::optional<Path> realize_counts(const Nfa& a, const StateSet& finals, const NatVector& counts,
                                   const Limits& limits = {});

/// The line automaton of `w`: states 0..|w|, transition i reads w[i].
Nfa line_automaton(const Alphabet& alphabet, const Word& w);

/// States reachable from the initial state.
StateSet reachable_states(const Nfa& a);

}  // namespace parikh
