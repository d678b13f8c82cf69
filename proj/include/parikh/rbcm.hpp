#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "parikh/ca.hpp"
#include "parikh/nfa.hpp"
#include "parikh/presburger.hpp"

namespace parikh {

/// Per-counter guard of a transition. `Any` stands for both 0 and 1.
enum class ZeroTest { Zero, Positive, Any };
enum class HeadMove { Stay, Right };

inline constexpr Symbol kEndMarker = U'♯';  // ♯

struct RbcmTransition {
    StateId from;
    Symbol letter;  ///< a letter of the alphabet or the end marker
    std::vector<ZeroTest> test;
    StateId to;
    HeadMove head;
    std::vector<int> increments;  ///< each in {-1, 0, +1}

    friend bool operator==(const RbcmTransition&, const RbcmTransition&) = default;
};

/// One-way counter machine reading w♯. Accepts when some execution reaches
/// a final state; a run must reverse each counter fewer than
/// `reversal_bound` times.
class Rbcm {
public:
    Rbcm(std::size_t states, Alphabet alphabet, std::size_t counters, StateId initial = 0,
         std::size_t reversal_bound = 1, Symbol end_marker = kEndMarker);

    StateId add_state();
    void add_transition(RbcmTransition t);
    void set_final(StateId q, bool final = true);
    void set_reversal_bound(std::size_t r) { reversal_bound_ = r; }

    std::size_t state_count() const { return finals_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t counter_count() const { return counters_; }
    StateId initial() const { return initial_; }
    Symbol end_marker() const { return end_marker_; }
    std::size_t reversal_bound() const { return reversal_bound_; }
    const std::vector<RbcmTransition>& transitions() const { return transitions_; }
    const std::vector<std::size_t>& outgoing(StateId q) const { return out_.at(q); }
    bool is_final(StateId q) const { return finals_.at(q); }

    /// No two transitions on the same (state, letter) with overlapping tests.
    bool is_deterministic() const;

    friend bool operator==(const Rbcm&, const Rbcm&) = default;

private:
    Alphabet alphabet_;
    std::size_t counters_;
    StateId initial_;
    std::size_t reversal_bound_;
    Symbol end_marker_;
    std::vector<RbcmTransition> transitions_;
    std::vector<bool> finals_;
    std::vector<std::vector<std::size_t>> out_;
};

struct Configuration {
    StateId state;
    std::size_t head;  ///< index into w♯
    std::vector<std::int64_t> counters;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct RbcmTrace {
    std::vector<Configuration> configurations;
    std::vector<std::size_t> reversals;  ///< per counter, at the end
};

enum class Outcome { Accept, Reject, FuelExhausted };

const char* to_string(Outcome o);

struct SimulationResult {
    Outcome outcome = Outcome::Reject;
    std::optional<RbcmTrace> trace;  ///< when accepted
    std::size_t steps = 0;
    /// Some branch reached the reversal bound and was cut.
    bool bound_violated = false;
    /// Some configuration had two applicable transitions.
    bool nondeterministic_step = false;
};

/// Depth-first search over executions; every transition taken costs one
/// unit of `fuel`.
SimulationResult simulate(const Rbcm& m, const Word& w, std::size_t fuel);

/// Compiles a deterministic, ε-free CA with formula constraints into a
/// deterministic RBCM: one counter per transition while reading, then,
/// on ♯, one checking gadget per clause with fresh counters.
Rbcm compile_to_rbcm(const Ca& m);
/// The CA's automaton with `phi` as its single constraint.
Rbcm compile_to_rbcm(const Ca& m, const PresburgerFormula& phi);

/// Deterministic machine for a^n ♠ b^m1 # ... # b^mk ♣ c^(m1+...+mn), k ≥ n.
Rbcm nsum_rbcm();

}  // namespace parikh
