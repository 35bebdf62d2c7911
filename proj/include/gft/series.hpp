#pragma once

// Truncated power series over complex coefficients.
//
// A series of order N stores c_0..c_N. Binary operations truncate to the
// smaller of the two orders, so no coefficient is ever reported beyond what
// both inputs determine.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

inline constexpr std::size_t default_order = 10;
inline constexpr double division_guard = 1e-6;
inline constexpr double unit_constant_tolerance = 1e-9;
inline constexpr double inner_constant_tolerance = 1e-12;

template <class Scalar>
class basic_series {
public:
    using value_type = Scalar;

    basic_series() : coeffs_(default_order + 1, Scalar{}) {}

    /// Zero series of the given truncation order.
    explicit basic_series(std::size_t order) : coeffs_(order + 1, Scalar{}) {
        if (order == 0) throw std::invalid_argument("series order must be positive");
    }

    /// Coefficients c_0..c_k; padded with zeros (or truncated) to `order`.
    basic_series(std::span<const Scalar> coeffs, std::size_t order) : basic_series(order) {
        std::copy_n(coeffs.begin(), std::min(coeffs.size(), coeffs_.size()), coeffs_.begin());
    }

    basic_series(std::initializer_list<Scalar> coeffs, std::size_t order)
        : basic_series(std::span<const Scalar>(coeffs.begin(), coeffs.size()), order) {}

    static basic_series constant(Scalar c, std::size_t order) {
        basic_series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The series c * z.
    static basic_series identity(std::size_t order, Scalar c = Scalar{1}) {
        basic_series s(order);
        s.coeffs_[1] = c;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Scalar& operator[](std::size_t k) const { return coeffs_.at(k); }
    Scalar& operator[](std::size_t k) { return coeffs_.at(k); }

    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

    /// Same coefficients at a lower order.
    basic_series truncated(std::size_t order) const {
        return basic_series(std::span<const Scalar>(coeffs_), std::min(order, this->order()));
    }

    basic_series& operator+=(const basic_series& other) { return *this = *this + other; }
    basic_series& operator-=(const basic_series& other) { return *this = *this - other; }
    basic_series& operator*=(const basic_series& other) { return *this = *this * other; }

    friend basic_series operator+(const basic_series& a, const basic_series& b) {
        basic_series r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend basic_series operator-(const basic_series& a, const basic_series& b) {
        basic_series r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    friend basic_series operator-(const basic_series& a) {
        basic_series r(a.order());
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = -a.coeffs_[k];
        return r;
    }

    friend basic_series operator*(const Scalar& c, const basic_series& a) {
        basic_series r(a.order());
        for (std::size_t k = 0; k <= r.order(); ++k) r.coeffs_[k] = c * a.coeffs_[k];
        return r;
    }

    friend basic_series operator*(const basic_series& a, const basic_series& b) {
        basic_series r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= r.order(); ++n) {
            Scalar acc{};
            for (std::size_t k = 0; k <= n; ++k) acc += a.coeffs_[k] * b.coeffs_[n - k];
            r.coeffs_[n] = acc;
        }
        return r;
    }

    friend basic_series operator/(const basic_series& a, const basic_series& b) {
        if (std::abs(b.coeffs_[0]) < division_guard)
            throw division_by_near_zero_constant_term("series division: |b0| below guard");
        basic_series q(std::min(a.order(), b.order()));
        const Scalar inv = Scalar{1} / b.coeffs_[0];
        for (std::size_t n = 0; n <= q.order(); ++n) {
            Scalar acc = a.coeffs_[n];
            for (std::size_t k = 1; k <= n; ++k) acc -= b.coeffs_[k] * q.coeffs_[n - k];
            q.coeffs_[n] = acc * inv;
        }
        return q;
    }

    friend bool operator==(const basic_series&, const basic_series&) = default;

private:
    std::vector<Scalar> coeffs_;
};

using TruncatedSeries = basic_series<std::complex<double>>;

template <class Scalar>
basic_series<Scalar> add(const basic_series<Scalar>& a, const basic_series<Scalar>& b) {
    return a + b;
}

template <class Scalar>
basic_series<Scalar> mul(const basic_series<Scalar>& a, const basic_series<Scalar>& b) {
    return a * b;
}

template <class Scalar>
basic_series<Scalar> div(const basic_series<Scalar>& a, const basic_series<Scalar>& b) {
    return a / b;
}

/// outer(inner(z)) truncated to the smaller order. Horner evaluation.
template <class Scalar>
basic_series<Scalar> compose(const basic_series<Scalar>& outer, const basic_series<Scalar>& inner) {
    if (std::abs(inner[0]) > inner_constant_tolerance)
        throw inner_constant_term_nonzero("compose: inner series must vanish at 0");
    const std::size_t order = std::min(outer.order(), inner.order());
    auto w = inner.truncated(order);
    w[0] = Scalar{};
    auto r = basic_series<Scalar>::constant(outer[order], order);
    for (std::size_t k = order; k-- > 0;) {
        r = r * w;
        r[0] += outer[k];
    }
    return r;
}

/// Principal logarithm of a series with unit constant term (log 1 = 0).
template <class Scalar>
basic_series<Scalar> log1(const basic_series<Scalar>& s) {
    if (std::abs(s[0] - Scalar{1}) > unit_constant_tolerance)
        throw constant_term_not_one("log1: constant term must be 1");
    // L' s = s'  =>  n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}
    basic_series<Scalar> l(s.order());
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Scalar acc = static_cast<double>(n) * s[n];
        for (std::size_t k = 1; k < n; ++k) acc -= static_cast<double>(k) * l[k] * s[n - k];
        l[n] = acc / (static_cast<double>(n) * s[0]);
    }
    return l;
}

template <class Scalar>
basic_series<Scalar> exps(const basic_series<Scalar>& s) {
    // E' = s' E  =>  n E_n = sum_{k=1}^{n} k s_k E_{n-k}
    basic_series<Scalar> e(s.order());
    e[0] = std::exp(s[0]);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        Scalar acc{};
        for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * s[k] * e[n - k];
        e[n] = acc / static_cast<double>(n);
    }
    return e;
}

/// Formal derivative. The top coefficient is unknown after differentiating,
/// so the result has order one less (floored at 1).
template <class Scalar>
basic_series<Scalar> derivative(const basic_series<Scalar>& s) {
    const std::size_t order = std::max<std::size_t>(1, s.order() - 1);
    basic_series<Scalar> d(order);
    for (std::size_t k = 1; k <= s.order() && k - 1 <= order; ++k)
        d[k - 1] = static_cast<double>(k) * s[k];
    return d;
}

/// integral_0^z (s(t) - s(0)) / t dt : c_k t^k -> c_k z^k / k for k >= 1.
template <class Scalar>
basic_series<Scalar> integrate_over_t(const basic_series<Scalar>& s) {
    basic_series<Scalar> r(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k) r[k] = s[k] / static_cast<double>(k);
    return r;
}

/// Multiply by z. Keeps the order, so the top coefficient falls off.
template <class Scalar>
basic_series<Scalar> shift_up(const basic_series<Scalar>& s) {
    basic_series<Scalar> r(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k) r[k] = s[k - 1];
    return r;
}

/// Divide by z; requires c_0 == 0. Order drops by one.
template <class Scalar>
basic_series<Scalar> shift_down(const basic_series<Scalar>& s) {
    if (s.order() < 2) throw order_too_low("shift_down needs order >= 2");
    basic_series<Scalar> r(s.order() - 1);
    for (std::size_t k = 0; k <= r.order(); ++k) r[k] = s[k + 1];
    return r;
}

template <class Scalar>
double max_abs_difference(const basic_series<Scalar>& a, const basic_series<Scalar>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    double m = 0.0;
    for (std::size_t k = 0; k <= order; ++k) m = std::max(m, static_cast<double>(std::abs(a[k] - b[k])));
    return m;
}

} // namespace gft
