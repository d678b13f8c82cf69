#include "parikh/hilbert.hpp"

#include <set>
#include <string>

namespace parikh {

namespace {

struct Candidate {
    IntVector x;
    IntVector image;  // A' x
};

bool is_zero(const IntVector& v) {
    for (const auto& e : v) {
        if (e != 0) return false;
    }
    return true;
}

bool dominates(const IntVector& big, const IntVector& small) {
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (big[i] < small[i]) return false;
    }
    return true;
}

}  // namespace

HilbertResult hilbert_basis(const IntMatrix& a, const IntVector& b, std::size_t vars, const Limits& limits) {
    const std::size_t rows = a.size();
    require_dim(b.size(), rows, "hilbert_basis right-hand side");
    for (const auto& row : a) require_dim(row.size(), vars, "hilbert_basis matrix row");

    // Column j of the homogenized matrix [A | -b]; index `vars` is the marker y.
    const std::size_t n = vars + 1;
    std::vector<IntVector> column(n, IntVector(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < vars; ++j) column[j][i] = a[i][j];
        column[vars][i] = -b[i];
    }

    std::vector<IntVector> solutions;
    std::vector<Candidate> frontier;
    for (std::size_t j = 0; j < n; ++j) {
        IntVector x(n, 0);
        x[j] = 1;
        frontier.push_back({std::move(x), column[j]});
    }

    std::size_t expanded = 0;
    mpz_class dot;
    while (!frontier.empty()) {
        std::vector<Candidate> open;
        open.reserve(frontier.size());
        for (auto& c : frontier) {
            if (is_zero(c.image)) {
                solutions.push_back(std::move(c.x));
            } else {
                open.push_back(std::move(c));
            }
        }

        std::set<IntVector> seen;
        std::vector<Candidate> next;
        for (const auto& c : open) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == vars && c.x[vars] >= 1) continue;
                // Contejean–Devie criterion: only move towards the origin.
                dot = 0;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (column[j][i] != 0 && c.image[i] != 0) dot += c.image[i] * column[j][i];
                }
                if (dot >= 0) continue;

                IntVector x = c.x;
                x[j] += 1;
                bool pruned = false;
                for (const auto& s : solutions) {
                    if (dominates(x, s)) {
                        pruned = true;
                        break;
                    }
                }
                if (pruned || !seen.insert(x).second) continue;

                if (++expanded > limits.hilbert_nodes) {
                    throw ResourceLimit("hilbert_basis: node budget of " + std::to_string(limits.hilbert_nodes) +
                                        " exhausted");
                }
                IntVector image = c.image;
                for (std::size_t i = 0; i < rows; ++i) image[i] += column[j][i];
                next.push_back({std::move(x), std::move(image)});
            }
        }
        frontier = std::move(next);
    }

    HilbertResult result;
    for (auto& s : solutions) {
        bool particular = s[vars] == 1;
        s.pop_back();
        if (particular) {
            result.particular.emplace_back(std::move(s));
        } else {
            result.homogeneous.emplace_back(std::move(s));
        }
    }
    return result;
}

}  // namespace parikh
