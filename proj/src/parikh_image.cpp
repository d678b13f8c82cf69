#include "parikh/parikh_image.hpp"

#include <algorithm>
#include <map>

namespace parikh {

namespace {

struct CycleInfo {
    Path path;
    StateId anchor;
    StateSet states;
    NatVector image;
};

struct BaseRun {
    StateSet visited;
    Path path;
};

StateSet coreachable(const Nfa& a, const StateSet& finals) {
    StateSet live = finals;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : a.transitions()) {
            if (!live[t.from] && live[t.to]) {
                live[t.from] = true;
                changed = true;
            }
        }
    }
    return live;
}

bool subset_of(const StateSet& x, const StateSet& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] && !y[i]) return false;
    }
    return true;
}

class BaseRunEnumerator {
public:
    BaseRunEnumerator(const Nfa& a, const StateSet& finals, const Limits& limits)
        : a_(a), finals_(finals), limits_(limits), live_(coreachable(a, finals)), count_(a.state_count(), 0) {
        const std::size_t q = a.state_count();
        cap_ = (q + 1) * (q + 1) * std::max<std::size_t>(1, limits.base_run_factor);
    }

    /// One representative base run per (visited set, Parikh vector).
    std::vector<BaseRun> run() {
        if (!live_[a_.initial()]) return {};
        states_.push_back(a_.initial());
        count_[a_.initial()] = 1;
        visit(a_.initial());
        std::vector<BaseRun> out;
        for (auto& [key, path] : found_) out.push_back({key.first, std::move(path)});
        return out;
    }

private:
    void visit(StateId q) {
        if (finals_[q]) {
            StateSet visited(a_.state_count(), false);
            for (StateId s = 0; s < count_.size(); ++s) visited[s] = count_[s] > 0;
            NatVector image(a_.transition_count());
            for (TransitionId t : steps_) image.add_at(t, 1);
            found_.try_emplace({std::move(visited), std::move(image)}, Path{steps_});
        }
        if (steps_.size() >= cap_) {
            throw ResourceLimit("parikh_image: base run exceeded the length bound");
        }
        for (TransitionId t : a_.outgoing(q)) {
            StateId to = a_.transition(t).to;
            if (!live_[to]) continue;
            if (++nodes_ > limits_.enumeration_nodes) throw ResourceLimit("parikh_image: node budget exhausted");
            steps_.push_back(t);
            states_.push_back(to);
            ++count_[to];
            if (!has_removable_cycle()) visit(to);
            --count_[to];
            states_.pop_back();
            steps_.pop_back();
        }
    }

    // An elementary factor s_a..s_b (s_a = s_b) is removable when every
    // interior state also occurs outside of it.
    bool has_removable_cycle() const {
        const std::size_t n = states_.size();
        std::map<StateId, std::size_t> last;
        for (std::size_t b = 0; b < n; ++b) {
            auto it = last.find(states_[b]);
            if (it != last.end()) {
                std::size_t from = it->second;
                bool elementary = true;
                bool removable = true;
                std::vector<StateId> interior;
                for (std::size_t i = from + 1; i < b; ++i) interior.push_back(states_[i]);
                std::sort(interior.begin(), interior.end());
                if (std::adjacent_find(interior.begin(), interior.end()) != interior.end()) elementary = false;
                if (elementary) {
                    for (StateId s : interior) {
                        if (count_[s] < 2) {
                            removable = false;
                            break;
                        }
                    }
                    if (removable) return true;
                }
            }
            last[states_[b]] = b;
        }
        return false;
    }

    const Nfa& a_;
    const StateSet& finals_;
    const Limits& limits_;
    StateSet live_;
    std::vector<std::size_t> count_;
    std::vector<StateId> states_;
    std::vector<TransitionId> steps_;
    std::size_t cap_ = 0;
    std::size_t nodes_ = 0;
    std::map<std::pair<StateSet, NatVector>, Path> found_;
};

std::vector<CycleInfo> cycle_table(const Nfa& a, const Limits& limits) {
    std::vector<CycleInfo> out;
    for (auto& c : elementary_cycles(a, limits)) {
        StateId anchor = a.transition(c.steps.front()).from;
        StateSet states(a.state_count(), false);
        for (StateId s : states_of(a, c, anchor)) states[s] = true;
        NatVector image = parikh_of(a, c);
        out.push_back({std::move(c), anchor, std::move(states), std::move(image)});
    }
    return out;
}

}  // namespace

Path LinearPathScheme::generate(const std::vector<std::size_t>& counts) const {
    if (counts.size() != cycles.size()) throw InvalidArgument("LinearPathScheme::generate: wrong number of counts");
    Path out;
    std::size_t next = 0;
    for (std::size_t pos = 0; pos <= base.size(); ++pos) {
        while (next < cycles.size() && cycles[next].anchor == pos) {
            for (std::size_t k = 0; k < counts[next]; ++k) out = out + cycles[next].cycle;
            ++next;
        }
        if (pos < base.size()) out.steps.push_back(base.steps[pos]);
    }
    return out;
}

SemilinearSet parikh_image(const Nfa& a, const StateSet& finals, const Limits& limits) {
    require_dim(finals.size(), a.state_count(), "parikh_image finals");
    const std::size_t dim = a.transition_count();
    SemilinearSet image(dim);
    auto bases = BaseRunEnumerator(a, finals, limits).run();
    if (bases.empty()) return image;
    auto cycles = cycle_table(a, limits);
    for (const auto& b : bases) {
        std::vector<NatVector> periods;
        for (const auto& c : cycles) {
            if (subset_of(c.states, b.visited)) periods.push_back(c.image);
        }
        image.add(LinearSet(parikh_of(a, b.path), std::move(periods)));
    }
    image.dedup();
    return image;
}

SemilinearSet parikh_image(const Nfa& a, const Limits& limits) { return parikh_image(a, a.finals(), limits); }

std::vector<LinearPathScheme> bounded_sublanguage(const Nfa& a, const StateSet& finals, const Limits& limits) {
    require_dim(finals.size(), a.state_count(), "bounded_sublanguage finals");
    std::vector<LinearPathScheme> out;
    auto bases = BaseRunEnumerator(a, finals, limits).run();
    if (bases.empty()) return out;
    auto cycles = cycle_table(a, limits);
    for (auto& b : bases) {
        LinearPathScheme scheme{b.path, {}};
        auto visits = states_of(a, b.path, a.initial());
        for (const auto& c : cycles) {
            if (!subset_of(c.states, b.visited)) continue;
            auto at = std::find(visits.begin(), visits.end(), c.anchor);
            scheme.cycles.push_back({static_cast<std::size_t>(at - visits.begin()), c.path});
        }
        std::stable_sort(scheme.cycles.begin(), scheme.cycles.end(),
                         [](const AnchoredCycle& x, const AnchoredCycle& y) { return x.anchor < y.anchor; });
        out.push_back(std::move(scheme));
    }
    return out;
}

std::vector<LinearPathScheme> bounded_sublanguage(const Nfa& a, const Limits& limits) {
    return bounded_sublanguage(a, a.finals(), limits);
}

bool is_well_formed(const Nfa& a, const StateSet& finals, const LinearPathScheme& scheme) {
    if (!is_accepting(a, scheme.base, finals)) return false;
    auto visits = states_of(a, scheme.base, a.initial());
    std::size_t previous = 0;
    for (const auto& c : scheme.cycles) {
        if (c.anchor < previous || c.anchor >= visits.size()) return false;
        previous = c.anchor;
        if (c.cycle.empty() || !is_valid_path(a, c.cycle)) return false;
        StateId at = visits[c.anchor];
        if (a.transition(c.cycle.steps.front()).from != at || a.transition(c.cycle.steps.back()).to != at) return false;
        auto states = states_of(a, c.cycle, at);
        states.pop_back();
        std::sort(states.begin(), states.end());
        if (std::adjacent_find(states.begin(), states.end()) != states.end()) return false;
    }
    return true;
}

}  // namespace parikh
