#include "parikh/affine.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace parikh {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

RatVector zero_vector(std::size_t n) { return RatVector(n, Rational(0)); }

void check_domain(const AffineMap& f, Domain d) {
    if (d == Domain::Rationals) return;
    auto ok = [&](const Rational& q) { return is_integer(q) && (d == Domain::Integers || q >= 0); };
    for (const auto& row : f.matrix) {
        for (const auto& x : row) {
            if (!ok(x)) throw InvalidArgument(std::string("affine map entry outside the ") + to_string(d));
        }
    }
    for (const auto& x : f.offset) {
        if (!ok(x)) throw InvalidArgument(std::string("affine map entry outside the ") + to_string(d));
    }
}

ApaConstraint pad_constraint(const ApaConstraint& c, std::size_t extra) {
    const std::size_t dim = apa_constraint_dim(c);
    if (const auto* q = std::get_if<QAffineSet>(&c)) return q->padded(extra);
    if (const auto* f = std::get_if<PresburgerFormula>(&c)) {
        return std::get<PresburgerFormula>(constraint_embed(*f, 0, dim + extra));
    }
    return std::get<SemilinearSet>(constraint_embed(std::get<SemilinearSet>(c), 0, dim + extra));
}

Integer lcm_of_denominators(const AffineMap& f) {
    Integer l = 1;
    auto take = [&](const Rational& q) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t()); };
    for (const auto& row : f.matrix) {
        for (const auto& x : row) take(x);
    }
    for (const auto& x : f.offset) take(x);
    return l;
}

Rational positive_part(const Rational& q) { return q > 0 ? q : Rational(0); }
Rational negative_part(const Rational& q) { return q < 0 ? Rational(-q) : Rational(0); }

// z = z+ - z-, stored as (z+, z-).
AffineMap split_signs(const AffineMap& f) {
    const std::size_t e = f.dim();
    AffineMap out{zero_rat(2 * e, 2 * e), zero_vector(2 * e)};
    for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = 0; j < e; ++j) {
            Rational p = positive_part(f.matrix[i][j]);
            Rational n = negative_part(f.matrix[i][j]);
            out.matrix[i][j] = p;
            out.matrix[i][e + j] = n;
            out.matrix[e + i][j] = n;
            out.matrix[e + i][e + j] = p;
        }
        out.offset[i] = positive_part(f.offset[i]);
        out.offset[e + i] = negative_part(f.offset[i]);
    }
    return out;
}

bool accepts_empty(const Apa& a) {
    return a.automaton().is_final(a.automaton().initial()) &&
           apa_constraint_contains(a.constraint(), zero_vector(a.dim()));
}

}  // namespace

AffineMap AffineMap::identity(std::size_t dim) { return {identity_rat(dim), zero_vector(dim)}; }

AffineMap AffineMap::constant(const RatVector& value) { return {zero_rat(value.size(), value.size()), value}; }

RatVector AffineMap::apply(const RatVector& x) const {
    require_dim(x.size(), dim(), "affine map argument");
    RatVector y = mat_vec(matrix, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += offset[i];
    return y;
}

bool AffineMap::is_linear() const {
    return std::all_of(offset.begin(), offset.end(), [](const Rational& q) { return q == 0; });
}

AffineMap AffineMap::scaled(const Rational& factor) const {
    AffineMap out = *this;
    for (auto& row : out.matrix) {
        for (auto& x : row) x *= factor;
    }
    for (auto& x : out.offset) x *= factor;
    return out;
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    require_dim(g.dim(), f.dim(), "compose");
    AffineMap out{mat_mul(g.matrix, f.matrix), mat_vec(g.matrix, f.offset)};
    for (std::size_t i = 0; i < out.offset.size(); ++i) out.offset[i] += g.offset[i];
    return out;
}

const char* to_string(Domain d) {
    switch (d) {
        case Domain::Naturals:
            return "naturals";
        case Domain::Integers:
            return "integers";
        case Domain::Rationals:
            return "rationals";
    }
    return "?";
}

std::size_t apa_constraint_dim(const ApaConstraint& c) {
    return std::visit([](const auto& x) { return x.dim(); }, c);
}

bool apa_constraint_contains(const ApaConstraint& c, const RatVector& x) {
    require_dim(x.size(), apa_constraint_dim(c), "APA constraint membership");
    if (const auto* q = std::get_if<QAffineSet>(&c)) return q->contains(x);
    IntVector v;
    for (const auto& r : x) {
        if (!is_integer(r)) return false;
        v.push_back(r.get_num());
    }
    if (const auto* f = std::get_if<PresburgerFormula>(&c)) return formula_eval(*f, v);
    if (std::any_of(v.begin(), v.end(), [](const Integer& i) { return i < 0; })) return false;
    return sl_member(NatVector(v), std::get<SemilinearSet>(c));
}

Apa::Apa(Nfa automaton, std::size_t dim, std::vector<AffineMap> updates, ApaConstraint constraint, Domain domain)
    : automaton_(std::move(automaton)),
      dim_(dim),
      updates_(std::move(updates)),
      constraint_(std::move(constraint)),
      domain_(domain) {
    if (automaton_.has_epsilon()) throw InvalidArgument("an APA has no ε-transitions");
    require_dim(updates_.size(), automaton_.transition_count(), "APA updates");
    for (const auto& f : updates_) {
        require_dim(f.offset.size(), dim_, "APA update offset");
        require_dim(f.matrix.size(), dim_, "APA update matrix");
        for (const auto& row : f.matrix) require_dim(row.size(), dim_, "APA update matrix row");
        check_domain(f, domain_);
    }
    require_dim(apa_constraint_dim(constraint_), dim_, "APA constraint");
}

AffineMap path_map(const Apa& a, const Path& p) {
    if (!is_valid_path(a.automaton(), p)) throw InvalidArgument("path_map: invalid path");
    AffineMap f = AffineMap::identity(a.dim());
    for (TransitionId t : p.steps) f = compose(f, a.updates()[t]);
    return f;
}

std::vector<RatVector> register_trace(const Apa& a, const Path& p) {
    if (!is_valid_path(a.automaton(), p)) throw InvalidArgument("register_trace: invalid path");
    std::vector<RatVector> out{zero_vector(a.dim())};
    for (TransitionId t : p.steps) out.push_back(a.updates()[t].apply(out.back()));
    return out;
}

std::optional<Path> apa_accepting_run(const Apa& a, const Word& w, const Limits& limits) {
    const Nfa& n = a.automaton();
    for (Symbol s : w) {
        if (!alphabet_contains(n.alphabet(), s)) throw InvalidArgument("symbol '" + to_utf8(s) + "' is not in the alphabet");
    }
    std::set<std::tuple<StateId, std::size_t, RatVector>> seen;
    std::vector<TransitionId> stack;
    std::size_t nodes = 0;
    auto dfs = [&](auto&& self, StateId q, const RatVector& x) -> bool {
        const std::size_t pos = stack.size();
        if (pos == w.size()) return n.is_final(q) && apa_constraint_contains(a.constraint(), x);
        if (!seen.insert({q, pos, x}).second) return false;
        if (++nodes > limits.enumeration_nodes) throw ResourceLimit("apa_membership: node budget exhausted");
        for (TransitionId t : n.outgoing(q)) {
            if (*n.transition(t).label != w[pos]) continue;
            stack.push_back(t);
            if (self(self, n.transition(t).to, a.updates()[t].apply(x))) return true;
            stack.pop_back();
        }
        return false;
    };
    if (dfs(dfs, n.initial(), zero_vector(a.dim()))) return Path{stack};
    return std::nullopt;
}

bool apa_membership(const Apa& a, const Word& w, const Limits& limits) {
    return apa_accepting_run(a, w, limits).has_value();
}

Apa linearize(const Apa& a) {
    const Nfa& n = a.automaton();
    const std::size_t d = a.dim();
    const std::size_t m = n.transition_count();
    const std::size_t big = d * (1 + m);
    const StateId fresh = n.state_count();

    Nfa out(n.state_count() + 1, n.alphabet(), fresh);
    for (const auto& t : n.transitions()) out.add_transition(t.from, t.label, t.to);
    std::vector<AffineMap> updates;
    // (x, y1..ym) ↦ (M_i x + y_i, y1..ym)
    for (TransitionId i = 0; i < m; ++i) {
        AffineMap f{zero_rat(big, big), zero_vector(big)};
        const auto& g = a.updates()[i];
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) f.matrix[r][c] = g.matrix[r][c];
            f.matrix[r][d * (1 + i) + r] = 1;
        }
        for (std::size_t r = d; r < big; ++r) f.matrix[r][r] = 1;
        updates.push_back(std::move(f));
    }
    RatVector all_offsets(big, Rational(0));
    for (TransitionId i = 0; i < m; ++i) {
        for (std::size_t r = 0; r < d; ++r) all_offsets[d * (1 + i) + r] = a.updates()[i].offset[r];
    }
    // (x, y1..ym) ↦ (v_i, v1..vm)
    for (TransitionId i : n.outgoing(n.initial())) {
        const auto& t = n.transition(i);
        out.add_transition(fresh, t.label, t.to);
        RatVector value = all_offsets;
        for (std::size_t r = 0; r < d; ++r) value[r] = a.updates()[i].offset[r];
        updates.push_back(AffineMap::constant(value));
    }
    for (StateId q = 0; q < n.state_count(); ++q) out.set_final(q, n.is_final(q));
    out.set_final(fresh, n.is_final(n.initial()));
    return Apa(std::move(out), big, std::move(updates), pad_constraint(a.constraint(), big - d), a.domain());
}

Apa rationals_to_naturals(const Apa& a, const Limits& limits) {
    if (!std::holds_alternative<QAffineSet>(a.constraint())) {
        throw Unsupported("rationals_to_naturals: the constraint must be a union of affine clauses");
    }
    const bool empty_word = accepts_empty(a);
    Apa lin = linearize(a);
    const Nfa& n = lin.automaton();
    const std::size_t big = lin.dim();
    const auto& c = std::get<QAffineSet>(lin.constraint());

    // Every affine form of every clause becomes a register.
    std::vector<AffineForm> forms;
    struct ClauseIndex {
        std::vector<std::size_t> zeros, positives;
    };
    std::vector<ClauseIndex> index;
    for (const auto& cl : c.clauses()) {
        ClauseIndex ci;
        for (const auto& f : cl.zeros) {
            ci.zeros.push_back(forms.size());
            forms.push_back(f);
        }
        for (const auto& g : cl.positives) {
            ci.positives.push_back(forms.size());
            forms.push_back(g);
        }
        index.push_back(std::move(ci));
    }
    const std::size_t r = forms.size();
    const std::size_t one = big;
    const std::size_t e = big + 1 + r;

    std::vector<AffineMap> updates;
    for (TransitionId t = 0; t < n.transition_count(); ++t) {
        const auto& f = lin.updates()[t];
        AffineMap g{zero_rat(e, e), zero_vector(e)};
        if (n.transition(t).from == n.initial()) {
            // (v, 1, F v)
            for (std::size_t i = 0; i < big; ++i) g.offset[i] = f.offset[i];
            g.offset[one] = 1;
            for (std::size_t k = 0; k < r; ++k) g.offset[one + 1 + k] = forms[k].eval(f.offset);
        } else {
            // (M x, one, F_lin M x + f0 one)
            for (std::size_t i = 0; i < big; ++i) {
                for (std::size_t j = 0; j < big; ++j) g.matrix[i][j] = f.matrix[i][j];
            }
            g.matrix[one][one] = 1;
            for (std::size_t k = 0; k < r; ++k) {
                for (std::size_t j = 0; j < big; ++j) {
                    Rational s = 0;
                    for (std::size_t i = 0; i < big; ++i) s += forms[k].coeffs[i] * f.matrix[i][j];
                    g.matrix[one + 1 + k][j] = s;
                }
                g.matrix[one + 1 + k][one] = forms[k].constant;
            }
        }
        g = g.scaled(Rational(lcm_of_denominators(g)));
        updates.push_back(split_signs(g));
    }

    const std::size_t dim = 2 * e;
    auto pos = [&](std::size_t i) { return Term::var(dim, i); };
    auto neg = [&](std::size_t i) { return Term::var(dim, e + i); };
    PresburgerFormula phi(dim);
    for (const auto& ci : index) {
        Clause clause{Literal{Atom::less(neg(one), pos(one)), false}};
        for (std::size_t k : ci.zeros) {
            auto eq = equal_clause(pos(one + 1 + k), neg(one + 1 + k));
            clause.insert(clause.end(), eq.begin(), eq.end());
        }
        for (std::size_t k : ci.positives) clause.push_back(Literal{Atom::less(neg(one + 1 + k), pos(one + 1 + k)), false});
        phi.add_clause(std::move(clause));
    }
    if (empty_word) phi.add_clause({Literal{Atom::less(pos(one), Term::constant_term(dim, 1)), false}});
    (void)limits;
    return Apa(n, dim, std::move(updates), std::move(phi), Domain::Naturals);
}

RatVector state_vector(std::size_t states, StateId q, const RatVector& v) {
    const std::size_t d = v.size();
    if (q >= states) throw InvalidArgument("state_vector: state out of range");
    RatVector out(states * (d + 1), Rational(0));
    out[q * (d + 1)] = 1;
    for (std::size_t i = 0; i < d; ++i) out[q * (d + 1) + 1 + i] = v[i];
    return out;
}

RatMatrix letter_matrix(const Apa& a, Symbol letter) {
    const Nfa& n = a.automaton();
    const std::size_t d = a.dim();
    const std::size_t k = n.state_count();
    const std::size_t big = k * (d + 1);
    RatMatrix u = zero_rat(big, big);
    for (TransitionId t = 0; t < n.transition_count(); ++t) {
        const auto& tr = n.transition(t);
        if (tr.label != letter) continue;
        const std::size_t col = tr.from * (d + 1);
        const std::size_t row = tr.to * (d + 1);
        const auto& f = a.updates()[t];
        u[row][col] = 1;
        for (std::size_t i = 0; i < d; ++i) {
            u[row + 1 + i][col] = f.offset[i];
            for (std::size_t j = 0; j < d; ++j) u[row + 1 + i][col + 1 + j] = f.matrix[i][j];
        }
    }
    return u;
}

Apa normalize_two_state(const Apa& input, const Limits& limits) {
    if (!input.is_deterministic()) throw InvalidArgument("normalize_two_state: automaton is not deterministic");
    const bool empty_word = accepts_empty(input);
    Apa a = input;
    // A dead run ends in 0^N, which must not be confused with ε.
    if (empty_word && !input.automaton().is_complete()) {
        Nfa full = complete_with_sink(input.automaton());
        auto updates = input.updates();
        while (updates.size() < full.transition_count()) updates.push_back(AffineMap::identity(input.dim()));
        a = Apa(std::move(full), input.dim(), std::move(updates), input.constraint(), input.domain());
    }
    const Nfa& n = a.automaton();
    const std::size_t d = a.dim();
    const std::size_t k = n.state_count();
    const std::size_t big = k * (d + 1);
    const RatVector start = state_vector(k, n.initial(), zero_vector(d));

    Nfa two(2, n.alphabet(), 0);
    std::vector<AffineMap> updates;
    std::vector<RatMatrix> u;
    for (Symbol s : n.alphabet()) u.push_back(letter_matrix(a, s));
    for (std::size_t i = 0; i < n.alphabet().size(); ++i) {
        two.add_transition(0, n.alphabet()[i], 1);
        updates.push_back(AffineMap::constant(mat_vec(u[i], start)));
    }
    for (std::size_t i = 0; i < n.alphabet().size(); ++i) {
        two.add_transition(1, n.alphabet()[i], 1);
        updates.push_back({u[i], zero_vector(big)});
    }
    two.set_final(0);
    two.set_final(1);

    auto block = [&](StateId q) { return q * (d + 1); };
    ApaConstraint g = QAffineSet(big);
    if (const auto* c = std::get_if<QAffineSet>(&a.constraint())) {
        QAffineSet out(big);
        auto lift = [&](const AffineForm& f, StateId q) {
            AffineForm h{f.constant, RatVector(big, Rational(0))};
            for (std::size_t i = 0; i < d; ++i) h.coeffs[block(q) + 1 + i] = f.coeffs[i];
            return h;
        };
        auto coordinate = [&](std::size_t i, const Rational& minus) {
            AffineForm h{-minus, RatVector(big, Rational(0))};
            h.coeffs[i] = 1;
            return h;
        };
        for (StateId q = 0; q < k; ++q) {
            if (!n.is_final(q)) continue;
            for (const auto& cl : c->clauses()) {
                QAffineClause x;
                for (std::size_t i = 0; i < big; ++i) {
                    if (i == block(q)) {
                        x.zeros.push_back(coordinate(i, 1));
                    } else if (i < block(q) || i > block(q) + d) {
                        x.zeros.push_back(coordinate(i, 0));
                    }
                }
                for (const auto& f : cl.zeros) x.zeros.push_back(lift(f, q));
                for (const auto& f : cl.positives) x.positives.push_back(lift(f, q));
                out.add_clause(std::move(x));
            }
        }
        if (empty_word) out.add_clause(QAffineClause{[&] {
            std::vector<AffineForm> zs;
            for (std::size_t i = 0; i < big; ++i) zs.push_back(coordinate(i, 0));
            return zs;
        }(), {}});
        g = std::move(out);
    } else if (const auto* f = std::get_if<PresburgerFormula>(&a.constraint())) {
        PresburgerFormula out(big);
        for (StateId q = 0; q < k; ++q) {
            if (!n.is_final(q)) continue;
            IntMatrix sel(d, IntVector(big, 0));
            for (std::size_t i = 0; i < d; ++i) sel[i][block(q) + 1 + i] = 1;
            Clause frame;
            for (std::size_t i = 0; i < big; ++i) {
                if (i >= block(q) + 1 && i <= block(q) + d) continue;
                auto eq = equal_clause(Term::var(big, i), Term::constant_term(big, i == block(q) ? 1 : 0));
                frame.insert(frame.end(), eq.begin(), eq.end());
            }
            out = formula_or(out, formula_and(formula_pullback(*f, sel, big), PresburgerFormula(big, {frame}), limits));
        }
        if (empty_word) {
            Clause zero;
            for (std::size_t i = 0; i < big; ++i) {
                auto eq = equal_clause(Term::var(big, i), Term::constant_term(big, 0));
                zero.insert(zero.end(), eq.begin(), eq.end());
            }
            out.add_clause(std::move(zero));
        }
        g = std::move(out);
    } else {
        const auto& s = std::get<SemilinearSet>(a.constraint());
        SemilinearSet out(big);
        auto embed = [&](const NatVector& v, StateId q, bool lead) {
            IntVector x(big, 0);
            if (lead) x[block(q)] = 1;
            for (std::size_t i = 0; i < d; ++i) x[block(q) + 1 + i] = v[i];
            return NatVector(std::move(x));
        };
        for (StateId q = 0; q < k; ++q) {
            if (!n.is_final(q)) continue;
            for (const auto& l : s.components()) {
                std::vector<NatVector> periods;
                for (const auto& p : l.periods()) periods.push_back(embed(p, q, false));
                out.add(LinearSet(embed(l.base(), q, true), std::move(periods)));
            }
        }
        if (empty_word) out.add(LinearSet(NatVector::zero(big), {}));
        g = std::move(out);
    }
    return Apa(std::move(two), big, std::move(updates), std::move(g), a.domain());
}

Apa embed_ca(const Ca& m) {
    if (m.automaton().has_epsilon()) throw InvalidArgument("embed_ca: automaton has ε-transitions");
    if (m.clauses().size() != 1) throw InvalidArgument("embed_ca: needs exactly one acceptance clause");
    const auto& clause = m.clauses().front();
    Nfa a = m.automaton();
    for (StateId q = 0; q < a.state_count(); ++q) a.set_final(q, clause.finals[q]);
    const std::size_t n = a.transition_count();
    std::vector<AffineMap> updates;
    for (TransitionId t = 0; t < n; ++t) {
        AffineMap f = AffineMap::identity(n);
        f.offset[t] = 1;
        updates.push_back(std::move(f));
    }
    ApaConstraint c = is_formula(clause.constraint) ? ApaConstraint(std::get<PresburgerFormula>(clause.constraint))
                                                    : ApaConstraint(std::get<SemilinearSet>(clause.constraint));
    return Apa(std::move(a), n, std::move(updates), std::move(c), Domain::Naturals);
}

RegisterBound register_bound_check(const Apa& a, std::size_t n, const Limits& limits) {
    if (a.domain() != Domain::Naturals) throw InvalidArgument("register_bound_check: needs an APA over the naturals");
    if (n == 0) throw InvalidArgument("register_bound_check: length must be positive");
    RegisterBound out;
    out.c = 0;
    for (const auto& f : a.updates()) {
        for (const auto& row : f.matrix) {
            for (const auto& x : row) out.c = std::max(out.c, Integer(x.get_num()));
        }
        for (const auto& x : f.offset) out.c = std::max(out.c, Integer(x.get_num()));
    }
    const Integer base = out.c * static_cast<unsigned long>(a.dim() + 1);
    std::vector<Integer> bound(n + 1, 0);
    Integer power = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        bound[m] = power * out.c;
        power *= base;
    }
    out.bound = bound[n];

    const Nfa& aut = a.automaton();
    std::vector<TransitionId> stack;
    std::size_t nodes = 0;
    auto dfs = [&](auto&& self, StateId q, const RatVector& x) -> void {
        for (TransitionId t : aut.outgoing(q)) {
            if (!out.holds) return;
            if (++nodes > limits.enumeration_nodes) throw ResourceLimit("register_bound_check: node budget exhausted");
            stack.push_back(t);
            RatVector y = a.updates()[t].apply(x);
            ++out.paths_checked;
            const Integer& limit = bound[stack.size()];
            if (std::any_of(y.begin(), y.end(), [&](const Rational& v) { return v > limit; })) {
                out.holds = false;
                out.violation = Path{stack};
            } else if (stack.size() < n) {
                self(self, aut.transition(t).to, y);
            }
            stack.pop_back();
        }
    };
    dfs(dfs, aut.initial(), zero_vector(a.dim()));
    return out;
}

}  // namespace parikh
