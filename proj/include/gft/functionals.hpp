#pragma once

// Coefficient functionals bounded by the theorems, plus the two coefficient
// inequalities (Prokhorov-Szynal, Efraimidis) their proofs rely on.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gft/classes.hpp"
#include "gft/errors.hpp"
#include "gft/series.hpp"

namespace gft {

enum class Region { D1, D2, D3, outside };

inline const char* to_string(Region r) {
    switch (r) {
    case Region::D1: return "D1";
    case Region::D2: return "D2";
    case Region::D3: return "D3";
    case Region::outside: return "outside";
    }
    return "?";
}

template <class T>
struct basic_region_point {
    T mu;
    T nu;
    friend bool operator==(const basic_region_point&, const basic_region_point&) = default;
};

using RegionPoint = basic_region_point<double>;

/// First of D1, D2, D3 containing (mu, nu); boundaries inclusive, widened by `slack`.
///   D1: |mu| <= 2,       nu >= 1
///   D2: 2 <= |mu| <= 4,  nu >= (mu^2 + 8)/12
///   D3: |mu| >= 4,       nu >= 2(|mu| - 1)/3
template <class T>
Region region_member(const T& mu, const T& nu, const T& slack = T(0)) {
    const T amu = mu < T(0) ? T(-mu) : T(mu);
    if (amu <= T(2) + slack && nu >= T(1) - slack) return Region::D1;
    if (amu >= T(2) - slack && amu <= T(4) + slack && nu >= (mu * mu + T(8)) / T(12) - slack) return Region::D2;
    if (amu >= T(4) - slack && nu >= T(2) * (amu - T(1)) / T(3) - slack) return Region::D3;
    return Region::outside;
}

inline Region region_member(const RegionPoint& pt, double slack = 0.0) { return region_member(pt.mu, pt.nu, slack); }

namespace detail {

template <class T>
T laplace_det(std::vector<std::vector<T>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    T det{};
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<T>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const T term = m[0][col] * laplace_det(std::move(minor));
        if (col % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

template <class T>
T lu_det(std::vector<std::vector<T>> m) {
    const std::size_t n = m.size();
    using std::abs;
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (abs(m[r][k]) > abs(m[pivot][k])) pivot = r;
        if (m[pivot][k] == T(0)) return T(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const T factor = m[r][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c) m[r][c] -= factor * m[k][c];
        }
    }
    return det;
}

} // namespace detail

/// Determinant of the symmetric Toeplitz matrix with entries row[|i-j|].
/// Cofactor expansion up to 4x4, partial-pivot LU beyond.
template <class T>
T toeplitz_determinant(std::span<const T> row) {
    const std::size_t m = row.size();
    if (m == 0) return T(1);
    std::vector<std::vector<T>> mat(m, std::vector<T>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) mat[i][j] = row[i > j ? i - j : j - i];
    return m <= 4 ? detail::laplace_det(std::move(mat)) : detail::lu_det(std::move(mat));
}

/// T_{m,n}(f): entries a_n..a_{n+m-1}.
inline complex toeplitz_det(const TruncatedSeries& f, std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw index_out_of_range("toeplitz_det: m, n must be >= 1");
    if (n + m - 1 > f.order()) throw order_too_low("toeplitz_det: n + m - 1 exceeds series order");
    std::vector<complex> row(m);
    for (std::size_t k = 0; k < m; ++k) row[k] = f[n + k];
    return toeplitz_determinant<complex>(row);
}

inline complex toeplitz_det(const ClassMember& f, std::size_t m, std::size_t n) { return toeplitz_det(f.f, m, n); }

/// T_{m,n}(gamma_f): entries gamma_n..gamma_{n+m-1}.
inline complex toeplitz_det_log(const TruncatedSeries& f, std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw index_out_of_range("toeplitz_det_log: m, n must be >= 1");
    if (n + m > f.order()) throw order_too_low("toeplitz_det_log: n + m - 1 exceeds order - 1");
    const auto gamma = log_coefficients(f, n + m - 1);
    return toeplitz_determinant<complex>(std::span<const complex>(gamma).subspan(n - 1, m));
}

inline complex toeplitz_det_log(const ClassMember& f, std::size_t m, std::size_t n) {
    return toeplitz_det_log(f.f, m, n);
}

/// a_3 - lambda a_2^2
inline complex fekete_szego(const ClassMember& f, double lambda) {
    if (f.order() < 3) throw order_too_low("fekete_szego needs order >= 3");
    return f.a(3) - lambda * f.a(2) * f.a(2);
}

/// a_2^3/3 - a_2 a_3 + a_4, which is 2 gamma_3.
inline complex cubic_functional(const ClassMember& f) {
    if (f.order() < 4) throw order_too_low("cubic_functional needs order >= 4");
    const complex a2 = f.a(2), a3 = f.a(3), a4 = f.a(4);
    return a2 * a2 * a2 / 3.0 - a2 * a3 + a4;
}

/// |c_3 + mu c_1 c_2 + nu c_1^3| for a Schwarz series omega.
inline double prokhorov_szynal_value(const TruncatedSeries& omega, const RegionPoint& pt) {
    if (omega.order() < 3) throw order_too_low("prokhorov_szynal_value needs order >= 3");
    const complex c1 = omega[1], c2 = omega[2], c3 = omega[3];
    return std::abs(c3 + pt.mu * c1 * c2 + pt.nu * c1 * c1 * c1);
}

inline double prokhorov_szynal_value(const SchwarzSample& w, const RegionPoint& pt) {
    return prokhorov_szynal_value(w.schwarz(3), pt);
}

/// |p_n - mu p_k p_{n-k}| for Caratheodory coefficients p (p[0] = 1).
inline double efraimidis_value(std::span<const complex> p, std::size_t n, std::size_t k, complex mu) {
    if (n >= p.size()) throw index_out_of_range("efraimidis_value: n beyond available coefficients");
    if (k < 1 || k + 1 > n) throw index_out_of_range("efraimidis_value: need 1 <= k <= n-1");
    return std::abs(p[n] - mu * p[k] * p[n - k]);
}

/// 2 max{1, |2 mu - 1|}
inline double efraimidis_bound(complex mu) { return 2.0 * std::max(1.0, std::abs(2.0 * mu - 1.0)); }

/// The functionals the theorems bound.
enum class Functional { log_toeplitz_21, log_toeplitz_22, toeplitz_32 };

inline const char* to_string(Functional f) {
    switch (f) {
    case Functional::log_toeplitz_21: return "T21_gamma";
    case Functional::log_toeplitz_22: return "T22_gamma";
    case Functional::toeplitz_32: return "T32_f";
    }
    return "?";
}

inline complex evaluate(Functional which, const ClassMember& f) {
    switch (which) {
    case Functional::log_toeplitz_21: return toeplitz_det_log(f, 2, 1);
    case Functional::log_toeplitz_22: return toeplitz_det_log(f, 2, 2);
    case Functional::toeplitz_32: return toeplitz_det(f, 3, 2);
    }
    return {};
}

} // namespace gft
