#include "parikh/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace parikh {

namespace {

bool is_integer_literal(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) {
        throw InvalidArgument("not an integer literal: '" + std::string(text) + "'");
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str(10);
    return r.get_str(10);
}

NatVector::NatVector(IntVector entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (sgn(e) < 0) throw InvalidArgument("NatVector entry is negative: " + to_string(e));
    }
}

NatVector::NatVector(std::initializer_list<long> entries) {
    entries_.reserve(entries.size());
    for (long e : entries) {
        if (e < 0) throw InvalidArgument("NatVector entry is negative");
        entries_.emplace_back(e);
    }
}

NatVector NatVector::unit(std::size_t dim, std::size_t index) {
    NatVector v(dim);
    v.entries_.at(index) = 1;
    return v;
}

bool NatVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& e) { return e == 0; });
}

bool NatVector::leq(const NatVector& other) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > other.entries_[i]) return false;
    }
    return true;
}

Integer NatVector::norm1() const {
    Integer s = 0;
    for (const auto& e : entries_) s += e;
    return s;
}

NatVector NatVector::operator+(const NatVector& other) const {
    require_dim(other.dim(), dim(), "NatVector addition");
    NatVector r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += other.entries_[i];
    return r;
}

NatVector NatVector::scaled(const Integer& factor) const {
    if (sgn(factor) < 0) throw InvalidArgument("NatVector scaled by a negative factor");
    NatVector r = *this;
    for (auto& e : r.entries_) e *= factor;
    return r;
}

NatVector NatVector::concat(const NatVector& other) const {
    NatVector r = *this;
    r.entries_.insert(r.entries_.end(), other.entries_.begin(), other.entries_.end());
    return r;
}

void NatVector::add_at(std::size_t i, const Integer& amount) {
    Integer next = entries_.at(i) + amount;
    if (sgn(next) < 0) throw InvalidArgument("NatVector entry would become negative");
    entries_[i] = std::move(next);
}

std::strong_ordering operator<=>(const NatVector& a, const NatVector& b) {
    if (a.dim() != b.dim()) return a.dim() <=> b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntVector to_int(const NatVector& v) { return v.entries(); }

RatVector to_rat(const IntVector& v) {
    RatVector r;
    r.reserve(v.size());
    for (const auto& e : v) r.emplace_back(e);
    return r;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
    IntVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        require_dim(m[i].size(), v.size(), "matrix-vector product");
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
        }
    }
    return r;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        require_dim(m[i].size(), v.size(), "matrix-vector product");
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] != 0 && v[j] != 0) r[i] += m[i][j] * v[j];
        }
    }
    return r;
}

IntMatrix identity_int(std::size_t dim) {
    IntMatrix m(dim, IntVector(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
    return m;
}

RatMatrix identity_rat(std::size_t dim) {
    RatMatrix m = zero_rat(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
    return m;
}

RatMatrix zero_rat(std::size_t rows, std::size_t cols) { return RatMatrix(rows, RatVector(cols, 0)); }

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t inner = b.size();
    std::size_t cols = inner == 0 ? 0 : b[0].size();
    RatMatrix r = zero_rat(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        require_dim(a[i].size(), inner, "matrix product");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

std::size_t columns(const IntMatrix& m) { return m.empty() ? 0 : m[0].size(); }

std::string to_string(const NatVector& v) { return to_string(v.entries()); }

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace parikh
