#include "parikh/pumping.hpp"

namespace parikh {

namespace {

Path slice(const Path& p, std::size_t from, std::size_t to) {
    return Path{{p.steps.begin() + from, p.steps.begin() + to}};
}

bool same_steps(const Path& p, std::size_t i, std::size_t k, std::size_t len) {
    for (std::size_t s = 0; s < len; ++s) {
        if (p.steps[i + s] != p.steps[k + s]) return false;
    }
    return true;
}

}  // namespace

PumpingConstants pumping_constants(const Ca& m, const Limits& limits) {
    const std::size_t p = m.automaton().state_count();
    const std::size_t cycles = elementary_cycles(m.automaton(), limits).size();
    return {p, cycles, p * (2 * cycles + 1)};
}

PumpDecomposition pump_decompose(const Ca& m, const Word& w, const std::optional<Path>& run, const Limits& limits) {
    const Nfa& a = m.automaton();
    if (a.has_epsilon()) throw Unsupported("pump_decompose: automaton has ε-transitions");
    const PumpingConstants k = pumping_constants(m, limits);
    if (w.size() <= k.l) {
        throw InvalidArgument("pump_decompose: |w| = " + std::to_string(w.size()) + " is not above ℓ = " +
                              std::to_string(k.l));
    }
    Path pi;
    if (run) {
        bool ok = is_valid_path(a, *run) && label_of(a, *run) == w;
        if (ok) {
            ok = false;
            for (const auto& c : m.clauses()) {
                if (is_accepting(a, *run, c.finals) && constraint_contains(c.constraint, parikh_of(a, *run))) ok = true;
            }
        }
        if (!ok) throw InvalidArgument("pump_decompose: the given path is not an accepting run of w");
        pi = *run;
    } else {
        auto found = accepting_run(m, w, limits);
        if (!found) throw InvalidArgument("pump_decompose: the word is not in the language");
        pi = std::move(found->path);
    }

    // η_v at [i, i+len) and again at [j, j+len): a cycle read twice, with
    // p < |x| and the second copy ending within the first ℓ steps.
    auto states = states_of(a, pi, a.initial());
    for (std::size_t i = 0; i < k.l; ++i) {
        for (std::size_t len = 1; len <= k.p && i + len <= k.l; ++len) {
            if (states[i] != states[i + len]) continue;
            for (std::size_t j = i + len + k.p + 1; j + len <= k.l; ++j) {
                if (!same_steps(pi, i, j, len)) continue;
                PumpDecomposition d;
                d.constants = k;
                d.eta_u = slice(pi, 0, i);
                d.eta_v = slice(pi, i, i + len);
                d.eta_x = slice(pi, i + len, j);
                d.eta_z = slice(pi, j + len, pi.size());
                d.u = w.substr(0, i);
                d.v = w.substr(i, len);
                d.x = w.substr(i + len, j - i - len);
                d.z = w.substr(j + len);
                if (d.reassemble() != w) throw Error("pump_decompose: decomposition does not reassemble w");
                if (!membership(m, d.pumped_left(), limits) || !membership(m, d.pumped_right(), limits)) {
                    throw Error("pump_decompose: pumped word rejected");
                }
                return d;
            }
        }
    }
    throw Error("pump_decompose: no repeated cycle within the first ℓ steps");
}

std::optional<Word> bounded_nerode_distinct(const Ca& m, const Word& u, const Word& v, std::size_t bound,
                                            const Limits& limits) {
    if (u == v) return std::nullopt;
    std::optional<Word> out;
    for_each_word(m.alphabet(), bound, [&](const Word& z) {
        if (membership(m, u + z, limits) != membership(m, v + z, limits)) {
            out = z;
            return false;
        }
        return true;
    });
    return out;
}

}  // namespace parikh
