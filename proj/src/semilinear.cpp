#include "parikh/semilinear.hpp"

#include <algorithm>
#include <set>

#include "parikh/hilbert.hpp"

namespace parikh {

namespace {

// Residual search for r = sum ki·periods[i], i >= index.
bool decompose(const IntVector& r, const std::vector<NatVector>& periods, std::size_t index) {
    const std::size_t dim = r.size();
    if (index == periods.size()) {
        return std::all_of(r.begin(), r.end(), [](const Integer& e) { return e == 0; });
    }
    const NatVector& p = periods[index];
    if (index + 1 == periods.size()) {
        // r must be k·p for a single k.
        std::optional<Integer> k;
        for (std::size_t i = 0; i < dim; ++i) {
            if (p[i] == 0) {
                if (r[i] != 0) return false;
                continue;
            }
            if (r[i] % p[i] != 0) return false;
            Integer q = r[i] / p[i];
            if (k && *k != q) return false;
            k = q;
        }
        return true;
    }
    IntVector rest = r;
    while (true) {
        if (decompose(rest, periods, index + 1)) return true;
        for (std::size_t i = 0; i < dim; ++i) {
            rest[i] -= p[i];
            if (rest[i] < 0) return false;
        }
    }
}

NatVector project(const NatVector& v, std::size_t offset, std::size_t count) {
    IntVector e(v.entries().begin() + static_cast<std::ptrdiff_t>(offset),
                v.entries().begin() + static_cast<std::ptrdiff_t>(offset + count));
    return NatVector(std::move(e));
}

NatVector image_of(const IntMatrix& m, const std::vector<NatVector>& columns, const NatVector& coeffs) {
    // sum coeffs[j] * columns[j]
    std::size_t dim = m.size();
    IntVector out(dim, 0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (coeffs[j] == 0) continue;
        for (std::size_t i = 0; i < dim; ++i) out[i] += coeffs[j] * columns[j][i];
    }
    return NatVector(std::move(out));
}

// Row i of m selects column sel[i] with coefficient 1 and columns are hit at most once.
std::optional<std::vector<std::size_t>> as_selection(const IntMatrix& m, std::size_t n) {
    std::vector<std::size_t> sel;
    std::vector<bool> hit(n, false);
    for (const auto& row : m) {
        std::optional<std::size_t> one;
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            if (row[j] != 1 || one) return std::nullopt;
            one = j;
        }
        if (!one || hit[*one]) return std::nullopt;
        hit[*one] = true;
        sel.push_back(*one);
    }
    return sel;
}

}  // namespace

LinearSet::LinearSet(NatVector base, std::vector<NatVector> periods) : base_(std::move(base)) {
    for (auto& p : periods) {
        require_dim(p.dim(), base_.dim(), "linear set period");
        if (!p.is_zero()) periods_.push_back(std::move(p));
    }
    std::sort(periods_.begin(), periods_.end());
    periods_.erase(std::unique(periods_.begin(), periods_.end()), periods_.end());
}

bool LinearSet::contains(const NatVector& v) const {
    require_dim(v.dim(), dim(), "linear set membership");
    IntVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        r[i] = v[i] - base_[i];
        if (r[i] < 0) return false;
    }
    return decompose(r, periods_, 0);
}

SemilinearSet::SemilinearSet(std::size_t dim, std::vector<LinearSet> components) : dim_(dim) {
    for (auto& c : components) add(std::move(c));
}

SemilinearSet SemilinearSet::full(std::size_t dim) {
    std::vector<NatVector> units;
    for (std::size_t i = 0; i < dim; ++i) units.push_back(NatVector::unit(dim, i));
    return linear(NatVector::zero(dim), std::move(units));
}

SemilinearSet SemilinearSet::singleton(const NatVector& v) { return linear(v, {}); }

SemilinearSet SemilinearSet::linear(NatVector base, std::vector<NatVector> periods) {
    SemilinearSet s(base.dim());
    s.add(LinearSet(std::move(base), std::move(periods)));
    return s;
}

void SemilinearSet::add(LinearSet component) {
    require_dim(component.dim(), dim_, "semilinear component");
    components_.push_back(std::move(component));
}

void SemilinearSet::dedup() {
    std::set<LinearSet> seen;
    std::vector<LinearSet> kept;
    for (auto& c : components_) {
        if (seen.insert(c).second) kept.push_back(std::move(c));
    }
    components_ = std::move(kept);
}

const char* to_string(Cardinality::Kind kind) {
    switch (kind) {
        case Cardinality::Kind::Empty: return "empty";
        case Cardinality::Kind::Finite: return "finite";
        case Cardinality::Kind::Infinite: return "infinite";
    }
    return "?";
}

bool sl_member(const NatVector& v, const SemilinearSet& s) {
    require_dim(v.dim(), s.dim(), "sl_member");
    return std::any_of(s.components().begin(), s.components().end(),
                       [&](const LinearSet& c) { return c.contains(v); });
}

SemilinearSet sl_union(const SemilinearSet& a, const SemilinearSet& b) {
    require_dim(b.dim(), a.dim(), "sl_union");
    SemilinearSet r = a;
    for (const auto& c : b.components()) r.add(c);
    r.dedup();
    return r;
}

SemilinearSet sl_intersect(const SemilinearSet& a, const SemilinearSet& b, const Limits& limits) {
    require_dim(b.dim(), a.dim(), "sl_intersect");
    const std::size_t dim = a.dim();
    SemilinearSet result(dim);
    for (const auto& ca : a.components()) {
        for (const auto& cb : b.components()) {
            if (cb.periods().empty()) {
                if (ca.contains(cb.base())) result.add(cb);
                continue;
            }
            if (ca.periods().empty()) {
                if (cb.contains(ca.base())) result.add(ca);
                continue;
            }
            // a0 + A k = b0 + B l  <=>  [A | -B] (k, l) = b0 - a0
            const std::size_t na = ca.periods().size();
            const std::size_t nb = cb.periods().size();
            IntMatrix system(dim, IntVector(na + nb, 0));
            IntVector rhs(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                for (std::size_t j = 0; j < na; ++j) system[i][j] = ca.periods()[j][i];
                for (std::size_t j = 0; j < nb; ++j) system[i][na + j] = -cb.periods()[j][i];
                rhs[i] = cb.base()[i] - ca.base()[i];
            }
            HilbertResult hb = hilbert_basis(system, rhs, na + nb, limits);
            if (hb.particular.empty()) continue;
            std::vector<NatVector> periods;
            for (const auto& h : hb.homogeneous) {
                periods.push_back(image_of(system, ca.periods(), project(h, 0, na)));
            }
            for (const auto& p : hb.particular) {
                NatVector base = ca.base() + image_of(system, ca.periods(), project(p, 0, na));
                result.add(LinearSet(std::move(base), periods));
            }
        }
    }
    result.dedup();
    return result;
}

SemilinearSet sl_linear_image(const SemilinearSet& s, const IntMatrix& m) {
    for (const auto& row : m) {
        require_dim(row.size(), s.dim(), "sl_linear_image matrix row");
        for (const auto& e : row) {
            if (e < 0) throw InvalidArgument("sl_linear_image: matrix has a negative entry");
        }
    }
    SemilinearSet r(m.size());
    for (const auto& c : s.components()) {
        std::vector<NatVector> periods;
        for (const auto& p : c.periods()) periods.emplace_back(mat_vec(m, p.entries()));
        r.add(LinearSet(NatVector(mat_vec(m, c.base().entries())), std::move(periods)));
    }
    r.dedup();
    return r;
}

SemilinearSet sl_preimage(const SemilinearSet& s, const IntMatrix& m, std::size_t n, const Limits& limits) {
    require_dim(m.size(), s.dim(), "sl_preimage matrix rows");
    for (const auto& row : m) require_dim(row.size(), n, "sl_preimage matrix row");
    const std::size_t dim = s.dim();
    SemilinearSet r(n);

    if (auto sel = as_selection(m, n)) {
        std::vector<bool> selected(n, false);
        for (auto j : *sel) selected[j] = true;
        auto lift = [&](const NatVector& v) {
            IntVector out(n, 0);
            for (std::size_t i = 0; i < dim; ++i) out[(*sel)[i]] = v[i];
            return NatVector(std::move(out));
        };
        for (const auto& c : s.components()) {
            std::vector<NatVector> periods;
            for (const auto& p : c.periods()) periods.push_back(lift(p));
            for (std::size_t j = 0; j < n; ++j) {
                if (!selected[j]) periods.push_back(NatVector::unit(n, j));
            }
            r.add(LinearSet(lift(c.base()), std::move(periods)));
        }
        return r;
    }

    for (const auto& c : s.components()) {
        // M z - P k = base
        const std::size_t np = c.periods().size();
        IntMatrix system(dim, IntVector(n + np, 0));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < n; ++j) system[i][j] = m[i][j];
            for (std::size_t j = 0; j < np; ++j) system[i][n + j] = -c.periods()[j][i];
        }
        HilbertResult hb = hilbert_basis(system, c.base().entries(), n + np, limits);
        std::vector<NatVector> periods;
        for (const auto& h : hb.homogeneous) periods.push_back(project(h, 0, n));
        for (const auto& p : hb.particular) r.add(LinearSet(project(p, 0, n), periods));
    }
    r.dedup();
    return r;
}

SemilinearSet sl_concat(const SemilinearSet& c, const SemilinearSet& d) {
    const std::size_t dc = c.dim();
    const std::size_t dd = d.dim();
    SemilinearSet r(dc + dd);
    for (const auto& x : c.components()) {
        for (const auto& y : d.components()) {
            std::vector<NatVector> periods;
            for (const auto& p : x.periods()) periods.push_back(p.concat(NatVector::zero(dd)));
            for (const auto& p : y.periods()) periods.push_back(NatVector::zero(dc).concat(p));
            r.add(LinearSet(x.base().concat(y.base()), std::move(periods)));
        }
    }
    return r;
}

Cardinality sl_cardinality(const SemilinearSet& s) {
    if (s.is_empty()) return Cardinality::empty();
    std::set<NatVector> members;
    for (const auto& c : s.components()) {
        if (!c.periods().empty()) return Cardinality::infinite();
        members.insert(c.base());
    }
    return Cardinality::finite(Integer(static_cast<unsigned long>(members.size())));
}

std::optional<NatVector> sl_some_member(const SemilinearSet& s) {
    if (s.is_empty()) return std::nullopt;
    return s.components().front().base();
}

}  // namespace parikh
