#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parikh/affine.hpp"
#include "parikh/ca.hpp"
#include "parikh/rbcm.hpp"

namespace parikh {

using Machine = std::variant<Ca, Pa, Apa, Rbcm>;

const char* model_name(const Machine& m);
const Alphabet& machine_alphabet(const Machine& m);
/// Membership for any model; RBCMs are simulated with `fuel` steps and a
/// FuelExhausted outcome raises ResourceLimit.
bool machine_accepts(const Machine& m, const Word& w, const Limits& limits = {}, std::size_t fuel = 1'000'000);

/// A named language: a machine, a direct membership oracle and the word
/// length up to which the two are known to agree.
struct CorpusEntry {
    std::string name;
    std::string description;
    Machine machine;
    std::function<bool(const Word&)> oracle;
    Alphabet alphabet;
    std::size_t bound;
    /// The machine is our own construction, not one written out in the literature.
    bool reconstruction = false;
};

std::vector<std::string> corpus_names();
/// Throws InvalidArgument for an unknown name.
CorpusEntry corpus_build(const std::string& name);

/// The first word of length ≤ bound (length-lexicographic) where machine and
/// oracle disagree.
std::optional<Word> corpus_mismatch(const CorpusEntry& e, std::size_t bound, const Limits& limits = {});
std::optional<Word> corpus_mismatch(const CorpusEntry& e, const Limits& limits = {});

namespace lang {

bool anbn(const Word& w);
bool ab_star(const Word& w);
bool astar_bstar(const Word& w);
bool equal(const Word& w);
bool copy(const Word& w);
bool pal(const Word& w);
bool sigma_anbn(const Word& w);
bool nsum(const Word& w);
bool expo(const Word& w);
bool equal_counts(const Word& w);

}  // namespace lang

}  // namespace parikh
