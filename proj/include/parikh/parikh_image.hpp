#pragma once

#include <cstddef>
#include <vector>

#include "parikh/nfa.hpp"
#include "parikh/semilinear.hpp"

namespace parikh {

struct AnchoredCycle {
    /// Position in the base run: the cycle is inserted after `anchor` base steps.
    std::size_t anchor;
    Path cycle;

    friend bool operator==(const AnchoredCycle&, const AnchoredCycle&) = default;
};

/// An accepting base run plus elementary cycles hooked at states the base
/// visits. Generates the bounded run set x0 c1^k1 x1 ... cm^km xm.
struct LinearPathScheme {
    Path base;
    std::vector<AnchoredCycle> cycles;  ///< sorted by anchor

    /// The run with cycle i repeated counts[i] times.
    Path generate(const std::vector<std::size_t>& counts) const;
};

/// Φ(Run(A)) over transition counts, for runs ending in `finals`.
///
/// Accepting runs are enumerated depth-first; a prefix is dropped as soon
/// as it contains an elementary cycle whose removal keeps the set of visited
/// states. Every surviving run contributes the linear set
/// Φ(run) + N·{Φ(c) | c elementary cycle inside the visited states}.
SemilinearSet parikh_image(const Nfa& a, const StateSet& finals, const Limits& limits = {});
SemilinearSet parikh_image(const Nfa& a, const Limits& limits = {});

/// Schemes from the same enumeration as parikh_image: their runs are
/// accepting and have, together, the same Parikh image as Run(A).
std::vector<LinearPathScheme> bounded_sublanguage(const Nfa& a, const StateSet& finals, const Limits& limits = {});
std::vector<LinearPathScheme> bounded_sublanguage(const Nfa& a, const Limits& limits = {});

/// Structural check: base accepting, every cycle starts and ends at the
/// base state of its anchor, cycles elementary, anchors sorted.
bool is_well_formed(const Nfa& a, const StateSet& finals, const LinearPathScheme& scheme);

}  // namespace parikh
