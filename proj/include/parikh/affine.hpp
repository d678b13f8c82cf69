#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "parikh/ca.hpp"
#include "parikh/nfa.hpp"
#include "parikh/numeric.hpp"
#include "parikh/presburger.hpp"
#include "parikh/qaffine.hpp"
#include "parikh/semilinear.hpp"

namespace parikh {

/// x ↦ M x + v on K^d.
struct AffineMap {
    RatMatrix matrix;
    RatVector offset;

    static AffineMap identity(std::size_t dim);
    static AffineMap constant(const RatVector& value);

    std::size_t dim() const { return offset.size(); }
    RatVector apply(const RatVector& x) const;
    bool is_linear() const;
    AffineMap scaled(const Rational& factor) const;

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// f ⋄ g, the map x ↦ g(f(x)): (M_g M_f, M_g v_f + v_g).
AffineMap compose(const AffineMap& f, const AffineMap& g);

enum class Domain { Naturals, Integers, Rationals };

const char* to_string(Domain d);

/// Generators and formulas read integer vectors; a QAffineSet reads any
/// rational vector.
using ApaConstraint = std::variant<SemilinearSet, PresburgerFormula, QAffineSet>;

std::size_t apa_constraint_dim(const ApaConstraint& c);
/// False for vectors outside the constraint's number domain.
bool apa_constraint_contains(const ApaConstraint& c, const RatVector& x);

/// Affine Parikh automaton: L = { μ(π) | π accepting run, U(π)(0) in C }.
class Apa {
public:
    /// Throws InvalidArgument if the automaton has ε-transitions or an entry
    /// falls outside the domain.
    Apa(Nfa automaton, std::size_t dim, std::vector<AffineMap> updates, ApaConstraint constraint, Domain domain);

    const Nfa& automaton() const { return automaton_; }
    std::size_t dim() const { return dim_; }
    const std::vector<AffineMap>& updates() const { return updates_; }
    const ApaConstraint& constraint() const { return constraint_; }
    Domain domain() const { return domain_; }
    const Alphabet& alphabet() const { return automaton_.alphabet(); }
    bool is_deterministic() const { return automaton_.is_deterministic(); }

    friend bool operator==(const Apa&, const Apa&) = default;

private:
    Nfa automaton_;
    std::size_t dim_;
    std::vector<AffineMap> updates_;
    ApaConstraint constraint_;
    Domain domain_;
};

/// U(π).
AffineMap path_map(const Apa& a, const Path& p);
/// Registers after each step of π, starting from 0 (|π| + 1 entries).
std::vector<RatVector> register_trace(const Apa& a, const Path& p);

std::optional<Path> apa_accepting_run(const Apa& a, const Word& w, const Limits& limits = {});
bool apa_membership(const Apa& a, const Word& w, const Limits& limits = {});

/// Adds a fresh initial state; afterwards only its outgoing transitions
/// have nonzero offsets. Dimension d(1 + |δ|). Transitions keep their ids;
/// the copies of the old initial state's transitions come last.
Apa linearize(const Apa& a);

/// Same language over N with a formula constraint. Requires a QAffineSet
/// constraint (Unsupported otherwise).
Apa rationals_to_naturals(const Apa& a, const Limits& limits = {});

/// Two states r (initial) and s, both final, and one transition per
/// (state, letter) into s. Dimension k(d+1) for k automaton states (one more
/// state when ε is accepted and the automaton is incomplete).
Apa normalize_two_state(const Apa& a, const Limits& limits = {});

/// The block matrix U_a of the two-state normal form.
RatMatrix letter_matrix(const Apa& a, Symbol letter);
/// Vec(q, v) in K^{k(d+1)}.
RatVector state_vector(std::size_t states, StateId q, const RatVector& v);

/// U(t) = (Id, Φ(t)) with the clause constraint. Requires an ε-free,
/// single-clause CA.
Apa embed_ca(const Ca& m);

struct RegisterBound {
    Integer c;      ///< largest entry of any matrix or offset
    Integer bound;  ///< (c(d+1))^(n-1) c
    bool holds = true;
    std::size_t paths_checked = 0;
    std::optional<Path> violation;
};

/// Checks every path of length 1..n from the initial state against the
/// register growth bound for its length. Requires the Naturals domain.
RegisterBound register_bound_check(const Apa& a, std::size_t n, const Limits& limits = {});

}  // namespace parikh
