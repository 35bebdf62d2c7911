#pragma once

// Ma-Minda targets, Schwarz/Caratheodory samples and class members of
// S*(phi) and C(phi) built from them by coefficient recurrence.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gft/errors.hpp"
#include "gft/series.hpp"

namespace gft {

using complex = std::complex<double>;

enum class PhiKind { janowski, power, robertson, custom };

inline const char* to_string(PhiKind k) {
    switch (k) {
    case PhiKind::janowski: return "janowski";
    case PhiKind::power: return "power";
    case PhiKind::robertson: return "robertson";
    case PhiKind::custom: return "custom";
    }
    return "?";
}

/// phi(z) = 1 + B1 z + B2 z^2 + ... with real B_n, B1 > 0 and |B_n| <= 2.
/// Closed-form kinds produce coefficients to any order; a custom target is
/// the polynomial given by its B list (higher B_n are zero).
class MindaPhi {
public:
    static MindaPhi janowski(double a, double b) {
        if (!(-1.0 <= b && b < a && a <= 1.0))
            throw invalid_janowski_parameters("janowski requires -1 <= B < A <= 1");
        return MindaPhi(PhiKind::janowski, {a, b});
    }

    /// Starlike/convex of order alpha: janowski(1 - 2 alpha, -1).
    static MindaPhi order_alpha(double alpha) {
        if (!(0.0 <= alpha && alpha < 1.0)) throw invalid_phi("order alpha requires 0 <= alpha < 1");
        return janowski(1.0 - 2.0 * alpha, -1.0);
    }

    /// ((1+z)/(1-z))^beta, strongly starlike/convex of order beta.
    static MindaPhi power(double beta) {
        if (!(0.0 < beta && beta <= 1.0)) throw invalid_phi("power requires 0 < beta <= 1");
        return MindaPhi(PhiKind::power, {beta});
    }

    /// (1 + 2 lambda z)/(1 - z), the Robertson target.
    static MindaPhi robertson(double lambda) {
        if (!(-0.5 < lambda && lambda <= 1.0)) throw invalid_phi("robertson requires -1/2 < lambda <= 1");
        return MindaPhi(PhiKind::robertson, {lambda});
    }

    static MindaPhi custom(std::vector<double> b) {
        if (b.empty()) throw invalid_phi("custom phi needs at least B1");
        return MindaPhi(PhiKind::custom, std::move(b));
    }

    PhiKind kind() const noexcept { return kind_; }
    std::span<const double> params() const noexcept { return params_; }

    /// B_n for n >= 1.
    double b(std::size_t n) const {
        if (n == 0) throw index_out_of_range("B_n is 1-based");
        if (kind_ == PhiKind::custom) return n <= params_.size() ? params_[n - 1] : 0.0;
        if (n < cache_.size()) return cache_[n];
        return closed_form(n)[n];
    }

    std::vector<double> coefficients(std::size_t count) const {
        std::vector<double> out;
        for (std::size_t n = 1; n <= count; ++n) out.push_back(b(n));
        return out;
    }

    std::string describe() const {
        std::ostringstream os;
        os << to_string(kind_) << '(';
        for (std::size_t i = 0; i < params_.size(); ++i) os << (i ? "," : "") << params_[i];
        os << ')';
        return os.str();
    }

private:
    MindaPhi(PhiKind kind, std::vector<double> params) : kind_(kind), params_(std::move(params)) {
        if (kind_ != PhiKind::custom) cache_ = closed_form(default_order);
        validate();
    }

    std::vector<double> closed_form(std::size_t order) const {
        std::vector<double> c(order + 1, 0.0);
        c[0] = 1.0;
        switch (kind_) {
        case PhiKind::janowski: {
            // (1+Az)/(1+Bz) = 1 + (A-B) sum (-B)^{n-1} z^n
            const double a = params_[0], bb = params_[1];
            double pw = 1.0;
            for (std::size_t n = 1; n <= order; ++n, pw *= -bb) c[n] = (a - bb) * pw;
            break;
        }
        case PhiKind::power: {
            TruncatedSeries half_plane(order);
            half_plane[0] = 1.0;
            for (std::size_t n = 1; n <= order; ++n) half_plane[n] = 2.0;
            const auto s = exps(complex(params_[0]) * log1(half_plane));
            for (std::size_t n = 1; n <= order; ++n) c[n] = s[n].real();
            break;
        }
        case PhiKind::robertson:
            for (std::size_t n = 1; n <= order; ++n) c[n] = 1.0 + 2.0 * params_[0];
            break;
        case PhiKind::custom:
            for (std::size_t n = 1; n <= order && n <= params_.size(); ++n) c[n] = params_[n - 1];
            break;
        }
        return c;
    }

    void validate() const {
        if (!(b(1) > 0.0)) throw invalid_phi("phi requires B1 > 0");
        const std::size_t upto = kind_ == PhiKind::custom ? params_.size() : default_order;
        for (std::size_t n = 1; n <= upto; ++n) {
            const double bn = b(n);
            if (!std::isfinite(bn)) throw invalid_phi("phi coefficients must be finite");
            if (std::abs(bn) > 2.0 + 1e-12) throw invalid_phi("phi requires |B_n| <= 2 (B" + std::to_string(n) + ")");
        }
    }

    PhiKind kind_;
    std::vector<double> params_;
    std::vector<double> cache_;
};

inline TruncatedSeries phi_series(const MindaPhi& phi, std::size_t order) {
    TruncatedSeries s(order);
    s[0] = 1.0;
    for (std::size_t n = 1; n <= order; ++n) s[n] = phi.b(n);
    return s;
}

/// One Herglotz atom: the rotation (1 + e^{i angle} z)/(1 - e^{i angle} z).
struct HerglotzAtom {
    double weight;
    double angle;
    friend bool operator==(const HerglotzAtom&, const HerglotzAtom&) = default;
};

/// p(z) = sum_k w_k (1 + e^{i t_k} z)/(1 - e^{i t_k} z) with w on the simplex,
/// and omega = (p - 1)/(p + 1). No atoms stands for p == 1 (omega == 0).
class SchwarzSample {
public:
    SchwarzSample() = default;

    explicit SchwarzSample(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
        double total = 0.0;
        for (auto& a : atoms_) {
            if (!(a.weight >= 0.0) || !std::isfinite(a.angle))
                throw invalid_sample("atom weights must be >= 0 and angles finite");
            a.angle = std::fmod(a.angle, 2.0 * std::numbers::pi);
            if (a.angle < 0.0) a.angle += 2.0 * std::numbers::pi;
            total += a.weight;
        }
        if (!atoms_.empty() && std::abs(total - 1.0) > 1e-9) throw invalid_sample("atom weights must sum to 1");
    }

    std::span<const HerglotzAtom> atoms() const noexcept { return atoms_; }

    /// Caratheodory series: p_0 = 1, p_n = 2 sum_k w_k e^{i n t_k}.
    TruncatedSeries caratheodory(std::size_t order) const {
        TruncatedSeries p(order);
        p[0] = 1.0;
        for (const auto& a : atoms_)
            for (std::size_t n = 1; n <= order; ++n)
                p[n] += 2.0 * a.weight * std::polar(1.0, static_cast<double>(n) * a.angle);
        return p;
    }

    TruncatedSeries schwarz(std::size_t order) const {
        const auto p = caratheodory(order);
        const auto one = TruncatedSeries::constant(1.0, order);
        auto w = (p - one) / (p + one);
        w[0] = 0.0;
        return w;
    }

    friend bool operator==(const SchwarzSample&, const SchwarzSample&) = default;

private:
    std::vector<HerglotzAtom> atoms_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent stream seed for item `index` of a run seeded with `seed`.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Uniform double in (0, 1), fixed bit recipe so draws are identical across platforms.
inline double unit_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace detail

/// Dirichlet(1,...,1) weights, uniform angles. Deterministic in the seed.
inline SchwarzSample sample_schwarz(std::size_t num_atoms, std::uint64_t seed) {
    if (num_atoms == 0) throw invalid_sample("sample_schwarz needs at least one atom");
    std::mt19937_64 rng(seed);
    std::vector<HerglotzAtom> atoms(num_atoms);
    double total = 0.0;
    for (auto& a : atoms) {
        a.weight = -std::log(detail::unit_open(rng));
        a.angle = 2.0 * std::numbers::pi * detail::unit_open(rng);
        total += a.weight;
    }
    for (auto& a : atoms) a.weight /= total;
    return SchwarzSample(std::move(atoms));
}

enum class ClassKind { starlike, convex };

inline const char* to_string(ClassKind k) { return k == ClassKind::starlike ? "starlike" : "convex"; }

/// f(z) = z + a_2 z^2 + ... in S*(phi) or C(phi).
struct ClassMember {
    TruncatedSeries f;
    ClassKind kind;
    MindaPhi phi;
    std::string provenance;
    std::optional<SchwarzSample> sample;

    std::size_t order() const noexcept { return f.order(); }
    complex a(std::size_t n) const { return f[n]; }
};

namespace detail {

inline void require_order(std::size_t order, std::size_t needed, const char* what) {
    if (order < needed) throw order_too_low(std::string(what) + ": order too low");
}

/// Solves zf' = f Phi (starlike) or (zf')' = f' Phi (convex) for f with
/// a_0 = 0, a_1 = 1, where Phi = phi(omega):
///   starlike  (n-1) a_n = sum_{j=1}^{n-1} a_j Phi_{n-j}
///   convex  n(n-1) a_n  = sum_{j=1}^{n-1} j a_j Phi_{n-j}
inline TruncatedSeries solve_subordination(ClassKind kind, const TruncatedSeries& big_phi) {
    const std::size_t order = big_phi.order();
    TruncatedSeries f(order);
    f[1] = 1.0;
    for (std::size_t n = 2; n <= order; ++n) {
        complex acc{};
        for (std::size_t j = 1; j < n; ++j) {
            const double weight = kind == ClassKind::starlike ? 1.0 : static_cast<double>(j);
            acc += weight * f[j] * big_phi[n - j];
        }
        const double denom = kind == ClassKind::starlike ? static_cast<double>(n - 1)
                                                         : static_cast<double>(n * (n - 1));
        f[n] = acc / denom;
    }
    return f;
}

} // namespace detail

/// Member of the class driven by an arbitrary Schwarz series omega.
inline ClassMember member_from_omega(ClassKind kind, const MindaPhi& phi, const TruncatedSeries& omega,
                                     std::string provenance = "omega") {
    detail::require_order(omega.order(), 4, "member_from_omega");
    const auto big_phi = compose(phi_series(phi, omega.order()), omega);
    return ClassMember{detail::solve_subordination(kind, big_phi), kind, phi, std::move(provenance), std::nullopt};
}

inline ClassMember starlike_from_schwarz(const MindaPhi& phi, const SchwarzSample& w,
                                         std::size_t order = default_order) {
    detail::require_order(order, 4, "starlike_from_schwarz");
    auto m = member_from_omega(ClassKind::starlike, phi, w.schwarz(order), "schwarz-sample");
    m.sample = w;
    return m;
}

inline ClassMember convex_from_schwarz(const MindaPhi& phi, const SchwarzSample& w,
                                       std::size_t order = default_order) {
    detail::require_order(order, 4, "convex_from_schwarz");
    auto m = member_from_omega(ClassKind::convex, phi, w.schwarz(order), "schwarz-sample");
    m.sample = w;
    return m;
}

inline ClassMember member_from_schwarz(ClassKind kind, const MindaPhi& phi, const SchwarzSample& w,
                                       std::size_t order = default_order) {
    return kind == ClassKind::starlike ? starlike_from_schwarz(phi, w, order) : convex_from_schwarz(phi, w, order);
}

/// The rotated inner function omega(z) = i z used by both extremal functions.
inline TruncatedSeries rotated_identity(std::size_t order) { return TruncatedSeries::identity(order, complex(0.0, 1.0)); }

/// The single-atom sample whose Schwarz function is i z.
inline SchwarzSample rotated_identity_sample() { return SchwarzSample({{1.0, std::numbers::pi / 2.0}}); }

/// k_phi(z) = z exp integral_0^z (phi(it) - 1)/t dt.
inline ClassMember extremal_starlike(const MindaPhi& phi, std::size_t order = default_order) {
    const auto phi_it = compose(phi_series(phi, order), rotated_identity(order));
    const auto k = shift_up(exps(integrate_over_t(phi_it)));
    return ClassMember{k, ClassKind::starlike, phi, "extremal k_phi", rotated_identity_sample()};
}

/// h_phi with 1 + z h''/h' = phi(iz), solved by the convex recurrence.
inline ClassMember extremal_convex(const MindaPhi& phi, std::size_t order = default_order) {
    auto m = member_from_omega(ClassKind::convex, phi, rotated_identity(order), "extremal h_phi");
    m.sample = rotated_identity_sample();
    return m;
}

inline ClassMember extremal_member(ClassKind kind, const MindaPhi& phi, std::size_t order = default_order) {
    return kind == ClassKind::starlike ? extremal_starlike(phi, order) : extremal_convex(phi, order);
}

/// gamma_1..gamma_count with log(f(z)/z) = 2 sum gamma_n z^n.
inline std::vector<complex> log_coefficients(const TruncatedSeries& f, std::size_t count) {
    if (count + 1 > f.order()) throw order_too_low("log_coefficients: count must be <= order - 1");
    const auto l = log1(shift_down(f));
    std::vector<complex> gamma(count);
    for (std::size_t n = 1; n <= count; ++n) gamma[n - 1] = 0.5 * l[n];
    return gamma;
}

inline std::vector<complex> log_coefficients(const ClassMember& m, std::size_t count) {
    return log_coefficients(m.f, count);
}

/// Largest coefficient of zf'/f - phi(omega) (starlike) or
/// 1 + zf''/f' - phi(omega) (convex), over the orders both sides determine.
inline double subordination_residual(const ClassMember& m, const TruncatedSeries& omega) {
    const std::size_t order = std::min(m.order(), omega.order());
    const auto f = m.f.truncated(order);
    const auto target = compose(phi_series(m.phi, order), omega.truncated(order));
    // f = z g with g(0) = 1; zf'/f = (zf')/z / g.
    const auto g = shift_down(f);
    TruncatedSeries zfp_over_z(g.order());
    for (std::size_t k = 0; k <= g.order(); ++k) zfp_over_z[k] = static_cast<double>(k + 1) * f[k + 1];
    TruncatedSeries lhs;
    if (m.kind == ClassKind::starlike) {
        lhs = zfp_over_z / g;
    } else {
        // 1 + zf''/f' = (zf')'/f'; f' coefficients are (k+1) a_{k+1}.
        TruncatedSeries zfp_prime(g.order());
        for (std::size_t k = 0; k <= g.order(); ++k)
            zfp_prime[k] = static_cast<double>((k + 1) * (k + 1)) * f[k + 1];
        lhs = zfp_prime / zfp_over_z;
    }
    return max_abs_difference(lhs, target);
}

} // namespace gft
