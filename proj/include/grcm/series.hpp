#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grcm/error.hpp"

namespace grcm {

using Rational = mpq_class;

inline constexpr int default_truncation = 16;

// Parses "p/q", "p" or "-p/q". Throws Error(InvalidInput) on malformed text
// or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(Errc::InvalidInput, "empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error(Errc::InvalidInput, "malformed rational '" + s + "'");
    if (q.get_den() == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

/// Element of Q[t]/(t^N), stored as exactly N coefficients, constant term first.
///
/// Every binary operation requires both operands to carry the same truncation
/// order and throws Error(MismatchedOrder) otherwise.
class Series {
public:
    Series() = default;

    explicit Series(int order) : c_(checked_order(order)) {}

    Series(int order, std::initializer_list<Rational> coeffs) : c_(checked_order(order)) {
        std::size_t d = 0;
        for (const auto& q : coeffs) {
            if (d < c_.size()) c_[d] = q;
            ++d;
        }
    }

    Series(int order, const std::vector<Rational>& coeffs) : c_(checked_order(order)) {
        for (std::size_t d = 0; d < coeffs.size() && d < c_.size(); ++d) c_[d] = coeffs[d];
    }

    static Series zero(int order) { return Series(order); }

    static Series constant(int order, const Rational& q) {
        Series s(order);
        s.c_[0] = q;
        return s;
    }

    static Series one(int order) { return constant(order, 1); }

    /// q * t^d, or zero when d >= order.
    static Series monomial(int order, int d, const Rational& q = 1) {
        Series s(order);
        if (d >= 0 && d < order) s.c_[static_cast<std::size_t>(d)] = q;
        return s;
    }

    static Series t(int order) { return monomial(order, 1); }

    int order() const noexcept { return static_cast<int>(c_.size()); }

    const Rational& operator[](int d) const { return c_[static_cast<std::size_t>(d)]; }
    Rational& operator[](int d) { return c_[static_cast<std::size_t>(d)]; }

    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }

    /// Index of the first nonzero coefficient, or order() for zero.
    int valuation() const {
        for (std::size_t d = 0; d < c_.size(); ++d)
            if (c_[d] != 0) return static_cast<int>(d);
        return order();
    }

    /// Highest index carrying a nonzero coefficient, -1 for zero.
    int degree() const {
        for (std::size_t d = c_.size(); d-- > 0;)
            if (c_[d] != 0) return static_cast<int>(d);
        return -1;
    }

    bool divisible_by_t() const { return c_.empty() || c_[0] == 0; }

    bool is_unit() const { return !divisible_by_t(); }

    /// Re-truncates (order < this->order()) or zero-extends (order > this->order()).
    Series with_order(int order) const {
        Series s(order);
        for (std::size_t d = 0; d < s.c_.size() && d < c_.size(); ++d) s.c_[d] = c_[d];
        return s;
    }

    Series& operator+=(const Series& o) {
        same_order(o);
        for (std::size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
        return *this;
    }

    Series& operator-=(const Series& o) {
        same_order(o);
        for (std::size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
        return *this;
    }

    Series& operator*=(const Rational& q) {
        for (auto& x : c_) x *= q;
        return *this;
    }

    Series& operator*=(const Series& o) {
        *this = *this * o;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& q) { return a *= q; }
    friend Series operator*(const Rational& q, Series a) { return a *= q; }

    friend Series operator-(Series a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend Series operator*(const Series& a, const Series& b) {
        a.same_order(b);
        const std::size_t n = a.c_.size();
        Series r(a.order());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Multiplicative inverse of a unit, by the usual coefficient recursion.
    Series invert() const {
        if (!is_unit()) throw Error(Errc::NotAUnit, "series " + to_string() + " is not a unit");
        const std::size_t n = c_.size();
        Series u(order());
        const Rational inv0 = 1 / c_[0];
        u.c_[0] = inv0;
        for (std::size_t d = 1; d < n; ++d) {
            Rational acc = 0;
            for (std::size_t i = 1; i <= d; ++i)
                if (c_[i] != 0) acc += c_[i] * u.c_[d - i];
            u.c_[d] = -acc * inv0;
        }
        return u;
    }

    /// t^d * this, truncated.
    Series shift_up(int d) const {
        Series s(order());
        for (int i = 0; i + d < order(); ++i) s[i + d] = (*this)[i];
        return s;
    }

    /// The v with t^d * v = this. The top d coefficients of v are unknowable
    /// from the truncated input and are set to zero.
    Series shift_down(int d) const {
        if (d < 0) throw Error(Errc::InvalidInput, "negative shift");
        for (int i = 0; i < d && i < order(); ++i)
            if ((*this)[i] != 0)
                throw Error(Errc::NotDivisible, to_string() + " is not divisible by t^" + std::to_string(d));
        Series s(order());
        for (int i = 0; i + d < order(); ++i) s[i] = (*this)[i + d];
        return s;
    }

    /// Human-readable form, e.g. "1 - t/2 + 3*t^2".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d < order(); ++d) {
            Rational q = (*this)[d];
            if (q == 0) continue;
            bool neg = q < 0;
            if (neg) q = -q;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (d == 0) {
                os << q.get_str();
                continue;
            }
            const bool den = q.get_den() != 1;
            if (q.get_num() != 1) os << q.get_num().get_str() << '*';
            os << 't';
            if (d > 1) os << '^' << d;
            if (den) os << '/' << q.get_den().get_str();
        }
        if (first) os << '0';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

private:
    static std::size_t checked_order(int order) {
        if (order < 2) throw Error(Errc::InvalidInput, "truncation order must be at least 2");
        return static_cast<std::size_t>(order);
    }

    void same_order(const Series& o) const {
        if (o.c_.size() != c_.size())
            throw Error(Errc::MismatchedOrder, "truncation orders differ: " + std::to_string(c_.size()) +
                                                   " vs " + std::to_string(o.c_.size()));
    }

    std::vector<Rational> c_;
};

/// Factory for elements of Q[t]/(t^N) sharing one truncation order.
class SeriesRing {
public:
    explicit SeriesRing(int order = default_truncation) : order_(order) {
        if (order < 2) throw Error(Errc::InvalidInput, "truncation order must be at least 2");
    }

    int order() const noexcept { return order_; }

    Series zero() const { return Series::zero(order_); }
    Series one() const { return Series::one(order_); }
    Series t() const { return Series::t(order_); }
    Series constant(const Rational& q) const { return Series::constant(order_, q); }
    Series monomial(int d, const Rational& q = 1) const { return Series::monomial(order_, d, q); }
    Series operator()(std::initializer_list<Rational> coeffs) const { return Series(order_, coeffs); }

    friend bool operator==(const SeriesRing&, const SeriesRing&) = default;

private:
    int order_;
};

} // namespace grcm
