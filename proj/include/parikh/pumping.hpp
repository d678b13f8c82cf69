#pragma once

#include <cstddef>
#include <optional>

#include "parikh/ca.hpp"

namespace parikh {

struct PumpingConstants {
    std::size_t p;  ///< states
    std::size_t m;  ///< anchored elementary cycles
    std::size_t l;  ///< p(2m + 1)
};

PumpingConstants pumping_constants(const Ca& m, const Limits& limits = {});

/// w = u v x v z with path segments η_u η_v η_x η_v η_z of an accepting run.
struct PumpDecomposition {
    Word u, v, x, z;
    Path eta_u, eta_v, eta_x, eta_z;
    PumpingConstants constants;

    Word reassemble() const { return u + v + x + v + z; }
    /// u v² x z and u x v² z.
    Word pumped_left() const { return u + v + v + x + z; }
    Word pumped_right() const { return u + x + v + v + z; }
};

/// Requires an ε-free automaton and |w| > ℓ. The run is found by
/// accepting_run when not given. Both pumped words are checked by
/// membership before returning.
PumpDecomposition pump_decompose(const Ca& m, const Word& w, const std::optional<Path>& run = std::nullopt,
                                 const Limits& limits = {});

/// A suffix z with |z| ≤ bound and uz ∈ L xor vz ∈ L, in length-lexicographic
/// order. Absence is not a proof of equivalence.
std::optional<Word> bounded_nerode_distinct(const Ca& m, const Word& u, const Word& v, std::size_t bound,
                                            const Limits& limits = {});

}  // namespace parikh
