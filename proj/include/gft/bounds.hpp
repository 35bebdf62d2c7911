#pragma once

// Sharp bounds for |T_{2,1}(gamma)|, |T_{2,2}(gamma)| and |T_{3,2}(f)| over
// S*(phi) and C(phi), with their hypothesis gates, plus the closed forms
// obtained for the Janowski, order-alpha, strongly starlike/convex and
// Robertson families.
//
// Every formula is a template over the scalar so that the same expression is
// evaluated in double precision and in exact rational arithmetic.

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "gft/classes.hpp"
#include "gft/errors.hpp"
#include "gft/functionals.hpp"
#include "gft/rational.hpp"

namespace gft {

enum class Claim { T1, T2, T3, T4, T5, T6, C1i, C1ii, C2i, C2ii, C6, C7, CS, CC, C4, C5, SSb, CCb, Crlr };

inline constexpr std::array all_claims{Claim::T1,  Claim::T2,   Claim::T3,  Claim::T4,   Claim::T5,
                                       Claim::T6,  Claim::C1i,  Claim::C1ii, Claim::C2i, Claim::C2ii,
                                       Claim::C6,  Claim::C7,   Claim::CS,  Claim::CC,   Claim::C4,
                                       Claim::C5,  Claim::SSb,  Claim::CCb, Claim::Crlr};

inline constexpr std::array theorem_claims{Claim::T1, Claim::T2, Claim::T3, Claim::T4, Claim::T5, Claim::T6};

inline const char* to_string(Claim c) {
    switch (c) {
    case Claim::T1: return "T1";
    case Claim::T2: return "T2";
    case Claim::T3: return "T3";
    case Claim::T4: return "T4";
    case Claim::T5: return "T5";
    case Claim::T6: return "T6";
    case Claim::C1i: return "C1i";
    case Claim::C1ii: return "C1ii";
    case Claim::C2i: return "C2i";
    case Claim::C2ii: return "C2ii";
    case Claim::C6: return "C6";
    case Claim::C7: return "C7";
    case Claim::CS: return "CS";
    case Claim::CC: return "CC";
    case Claim::C4: return "C4";
    case Claim::C5: return "C5";
    case Claim::SSb: return "SSb";
    case Claim::CCb: return "CCb";
    case Claim::Crlr: return "Crlr";
    }
    return "?";
}

inline std::optional<Claim> claim_from_string(std::string_view s) {
    for (Claim c : all_claims)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

inline bool is_theorem(Claim c) {
    return c == Claim::T1 || c == Claim::T2 || c == Claim::T3 || c == Claim::T4 || c == Claim::T5 || c == Claim::T6;
}

/// Parameter family a corollary is stated for.
enum class Family { generic, janowski, alpha, beta, lambda, fixed };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::generic: return "generic";
    case Family::janowski: return "janowski";
    case Family::alpha: return "alpha";
    case Family::beta: return "beta";
    case Family::lambda: return "lambda";
    case Family::fixed: return "fixed";
    }
    return "?";
}

struct ClaimInfo {
    ClassKind class_kind;
    Family family;
    std::vector<Functional> functionals;
};

inline ClaimInfo claim_info(Claim c) {
    using F = Functional;
    const auto S = ClassKind::starlike, C = ClassKind::convex;
    const std::vector<F> all{F::log_toeplitz_21, F::log_toeplitz_22, F::toeplitz_32};
    switch (c) {
    case Claim::T1: return {S, Family::generic, {F::log_toeplitz_21}};
    case Claim::T2: return {C, Family::generic, {F::log_toeplitz_21}};
    case Claim::T3: return {S, Family::generic, {F::log_toeplitz_22}};
    case Claim::T4: return {C, Family::generic, {F::log_toeplitz_22}};
    case Claim::T5: return {S, Family::generic, {F::toeplitz_32}};
    case Claim::T6: return {C, Family::generic, {F::toeplitz_32}};
    case Claim::C1i: return {S, Family::janowski, {F::log_toeplitz_21}};
    case Claim::C1ii: return {S, Family::janowski, {F::log_toeplitz_22}};
    case Claim::C2i: return {C, Family::janowski, {F::log_toeplitz_21}};
    case Claim::C2ii: return {C, Family::janowski, {F::log_toeplitz_22}};
    case Claim::C4: return {S, Family::janowski, {F::toeplitz_32}};
    case Claim::C5: return {C, Family::janowski, {F::toeplitz_32}};
    case Claim::C6: return {S, Family::alpha, all};
    case Claim::C7: return {C, Family::alpha, all};
    case Claim::CS: return {S, Family::fixed, all};
    case Claim::CC: return {C, Family::fixed, all};
    case Claim::SSb: return {S, Family::beta, {F::toeplitz_32}};
    case Claim::CCb: return {C, Family::beta, {F::toeplitz_32}};
    case Claim::Crlr: return {C, Family::lambda, {F::toeplitz_32}};
    }
    throw std::logic_error("unknown claim");
}

/// The generic theorem bounding `f` over the given class.
inline Claim theorem_for(Functional f, ClassKind k) {
    const bool s = k == ClassKind::starlike;
    switch (f) {
    case Functional::log_toeplitz_21: return s ? Claim::T1 : Claim::T2;
    case Functional::log_toeplitz_22: return s ? Claim::T3 : Claim::T4;
    case Functional::toeplitz_32: return s ? Claim::T5 : Claim::T6;
    }
    throw std::logic_error("unknown functional");
}

inline constexpr double gate_slack = 1e-12;

struct GateCheck {
    std::string name;
    bool ok;
    friend bool operator==(const GateCheck&, const GateCheck&) = default;
};

/// First three Taylor coefficients of phi; all the bounds depend on.
template <class T>
struct Coefficients {
    T b1, b2, b3;
};

template <class T>
struct Evaluation {
    std::vector<GateCheck> gates;
    T value{};
    std::optional<basic_region_point<T>> region_point;
    Region region = Region::outside;

    bool ok() const {
        for (const auto& g : gates)
            if (!g.ok) return false;
        return true;
    }
};

namespace detail {

template <class T>
T magnitude(const T& x) {
    return x < T(0) ? T(-x) : T(x);
}

template <class T>
void region_gate(Evaluation<T>& e, const char* name, const std::type_identity_t<T>& mu, const std::type_identity_t<T>& nu,
                 const std::type_identity_t<T>& slack) {
    e.region_point = basic_region_point<T>{mu, nu};
    e.region = region_member(mu, nu, slack);
    e.gates.push_back({name, e.region != Region::outside});
}

} // namespace detail

/// Families as coefficient triples.
template <class T>
Coefficients<T> janowski_coefficients(const T& a, const T& b) {
    return {a - b, b * b - a * b, a * b * b - b * b * b};
}

template <class T>
Coefficients<T> alpha_coefficients(const T& alpha) {
    return janowski_coefficients<T>(T(1) - T(2) * alpha, T(-1));
}

template <class T>
Coefficients<T> beta_coefficients(const T& beta) {
    return {T(2) * beta, T(2) * beta * beta, (T(2) * beta + T(4) * beta * beta * beta) / T(3)};
}

template <class T>
Coefficients<T> lambda_coefficients(const T& lambda) {
    const T b = T(1) + T(2) * lambda;
    return {b, b, b};
}

inline Coefficients<double> coefficients_of(const MindaPhi& phi) { return {phi.b(1), phi.b(2), phi.b(3)}; }

/// Generic theorem: gates and right-hand side in terms of B1, B2, B3.
template <class T>
Evaluation<T> evaluate_theorem(Claim claim, const Coefficients<T>& c, const T& slack) {
    const auto leq = [](const T& x, const T& y, const T& s) { return x <= y + s; };
    const auto magnitude = [](const T& x) { return detail::magnitude<T>(x); };
    const T& b1 = c.b1;
    const T& b2 = c.b2;
    const T& b3 = c.b3;
    const T b1sq = b1 * b1;
    Evaluation<T> e;
    switch (claim) {
    case Claim::T1:
        e.gates.push_back({"|B2| >= B1", leq(b1, magnitude(b2), slack)});
        e.value = b1sq / T(4) + b2 * b2 / T(16);
        break;
    case Claim::T2: {
        const T s = b2 + b1sq / T(4);
        e.gates.push_back({"|B2 + B1^2/4| >= B1", leq(b1, magnitude(s), slack)});
        e.value = b1sq / T(16) + s * s / T(144);
        break;
    }
    case Claim::T3:
        e.gates.push_back({"|B2| >= B1", leq(b1, magnitude(b2), slack)});
        detail::region_gate(e, "(mu1,nu1) in D1uD2uD3", T(2) * b2 / b1, b3 / b1, slack);
        e.value = (T(9) * b2 * b2 + T(4) * b3 * b3) / T(144);
        break;
    case Claim::T4: {
        const T s = b2 + b1sq / T(4);
        e.gates.push_back({"|B2 + B1^2/4| >= B1", leq(b1, magnitude(s), slack)});
        detail::region_gate(e, "(mu2,nu2) in D1uD2uD3", (b1sq + T(4) * b2) / (T(2) * b1),
                            (b1 * b2 + T(2) * b3) / (T(2) * b1), slack);
        e.value = (b1sq * b1sq + T(8) * b1sq * b2 + T(16) * b2 * b2 + b1sq * b2 * b2 + T(4) * b1 * b2 * b3 +
                   T(4) * b3 * b3) /
                  T(2304);
        break;
    }
    case Claim::T5: {
        const T middle = b1 * (T(3) * b1sq + T(2) * b2);
        e.gates.push_back({"6B1^2 <= B1(3B1^2+2B2)", leq(T(6) * b1sq, middle, slack)});
        e.gates.push_back({"B1(3B1^2+2B2) <= B1^2+2B1^4+3B1^2B2+3B2^2-2B1B3",
                           leq(middle, b1sq + T(2) * b1sq * b1sq + T(3) * b1sq * b2 + T(3) * b2 * b2 - T(2) * b1 * b3,
                               slack)});
        const T q2_num = b1sq * b1 + T(3) * b1 * b2 + T(2) * b3;
        detail::region_gate(e, "(q1,q2) in D1uD2uD3", (T(3) * b1sq + T(4) * b2) / (T(2) * b1), q2_num / (T(2) * b1),
                            slack);
        e.value = (b1 + q2_num / T(6)) *
                  (b1sq + b1sq * b1sq / T(3) + b1sq * b2 / T(2) + b2 * b2 / T(2) - b1 * b3 / T(3));
        break;
    }
    case Claim::T6: {
        const T middle = T(7) * b1sq * b1;
        e.gates.push_back({"16B1^2-4B1B2 <= 7B1^3", leq(T(16) * b1sq - T(4) * b1 * b2, middle, slack)});
        e.gates.push_back({"7B1^3 <= 5B1^4+2B1^2-4B1B2+7B1^2B2+8B2^2-6B1B3",
                           leq(middle,
                               T(5) * b1sq * b1sq + T(2) * b1sq - T(4) * b1 * b2 + T(7) * b1sq * b2 + T(8) * b2 * b2 -
                                   T(6) * b1 * b3,
                               slack)});
        const T q2_num = b1sq * b1 + T(3) * b1 * b2 + T(2) * b3;
        detail::region_gate(e, "(q1,q2) in D1uD2uD3", (T(3) * b1sq + T(4) * b2) / (T(2) * b1), q2_num / (T(2) * b1),
                            slack);
        e.value = (b1 / T(2) + q2_num / T(24)) *
                  (T(5) * b1sq * b1sq + T(36) * b1sq + T(7) * b1sq * b2 + T(8) * b2 * b2 - T(6) * b1 * b3) / T(144);
        break;
    }
    default: throw std::invalid_argument(std::string("not a theorem claim: ") + to_string(claim));
    }
    return e;
}

/// Janowski corollaries written directly in A and B.
template <class T>
Evaluation<T> evaluate_janowski(Claim claim, const T& a, const T& b, const T& slack) {
    const auto leq = [](const T& x, const T& y, const T& s) { return x <= y + s; };
    const auto magnitude = [](const T& x) { return detail::magnitude<T>(x); };
    const T d = a - b;
    const T d2 = d * d;
    Evaluation<T> e;
    switch (claim) {
    case Claim::C1i:
        e.gates.push_back({"|B^2-AB| >= A-B", leq(d, magnitude(b * b - a * b), slack)});
        e.value = d2 * (T(4) + b * b) / T(16);
        break;
    case Claim::C1ii:
        e.gates.push_back({"|B^2-AB| >= A-B", leq(d, magnitude(b * b - a * b), slack)});
        detail::region_gate(e, "(mu1,nu1) in D1uD2uD3", T(-2) * b, b * b, slack);
        e.value = d2 * b * b * (T(4) * b * b + T(9)) / T(144);
        break;
    case Claim::C2i:
        e.gates.push_back(
            {"|A^2-6AB+5B^2| >= 4(A-B)", leq(T(4) * d, magnitude(a * a - T(6) * a * b + T(5) * b * b), slack)});
        e.value = d2 * (a * a + T(25) * b * b - T(10) * a * b + T(144)) / T(2304);
        break;
    case Claim::C2ii:
        e.gates.push_back(
            {"|A^2-6AB+5B^2| >= 4(A-B)", leq(T(4) * d, magnitude(a * a - T(6) * a * b + T(5) * b * b), slack)});
        detail::region_gate(e, "(mu2,nu2) in D1uD2uD3", (a - T(5) * b) / T(2), b * (T(3) * b - a) / T(2), slack);
        e.value = d2 *
                  (a * a * (b * b + T(1)) + b * b * (T(9) * b * b + T(25)) - T(2) * a * b * (T(3) * b * b + T(5))) /
                  T(2304);
        break;
    case Claim::C4: {
        const T middle = (T(3) * a - T(5) * b) * d2;
        const T p = T(2) * a * a - T(7) * a * b + T(6) * b * b;
        e.gates.push_back({"6(A-B)^2 <= (3A-5B)(A-B)^2", leq(T(6) * d2, middle, slack)});
        e.gates.push_back({"(3A-5B)(A-B)^2 <= (A-B)^2(2A^2-7AB+6B^2+1)", leq(middle, d2 * (p + T(1)), slack)});
        detail::region_gate(e, "(q1,q2) in D1uD2uD3", (T(3) * a - T(7) * b) / T(2),
                            (a * a - T(5) * a * b + T(6) * b * b) / T(2), slack);
        e.value = d2 * (p + T(6)) *
                  (a * a * a + T(6) * a - T(6) * b - T(6) * a * a * b + T(11) * a * b * b - T(6) * b * b * b) / T(36);
        break;
    }
    case Claim::C5: {
        const T middle = T(7) * d2 * d;
        const T p = T(5) * a * a - T(17) * a * b + T(14) * b * b;
        e.gates.push_back({"4(A-B)^2(4+B) <= 7(A-B)^3", leq(T(4) * d2 * (T(4) + b), middle, slack)});
        e.gates.push_back({"7(A-B)^3 <= (A-B)^2(2+5A^2+4B-17AB+14B^2)", leq(middle, d2 * (T(2) + T(4) * b + p), slack)});
        detail::region_gate(e, "(q1,q2) in D1uD2uD3", (T(3) * a - T(7) * b) / T(2),
                            (a * a - T(5) * a * b + T(6) * b * b) / T(2), slack);
        e.value = d2 * (p + T(36)) *
                  (a * a * a + T(12) * a - T(12) * b - T(6) * a * a * b + T(11) * a * b * b - T(6) * b * b * b) /
                  T(3456);
        break;
    }
    default: throw std::invalid_argument(std::string("not a Janowski corollary: ") + to_string(claim));
    }
    return e;
}

/// One-parameter corollaries (order alpha, strongly starlike/convex of
/// order beta, Robertson lambda) and the fixed S*, C constants. The gate is
/// the parameter range the closed form is stated for.
template <class T>
Evaluation<T> evaluate_family(Claim claim, Functional f, const T& t) {
    Evaluation<T> e;
    const auto in = [&](const T& lo, const T& hi, bool lo_open, bool hi_open) {
        return (lo_open ? t > lo : t >= lo) && (hi_open ? t < hi : t <= hi);
    };
    const T one(1);
    switch (claim) {
    case Claim::C6:
    case Claim::C7: {
        const bool starlike = claim == Claim::C6;
        const T m = one - t;
        if (f == Functional::toeplitz_32) {
            e.gates.push_back({"0 <= alpha <= 1/7", in(T(0), one / T(7), false, false)});
            if (starlike)
                e.value = T(4) * m * m * m *
                          (T(16) * t * t * t * t - T(100) * t * t * t + T(268) * t * t - T(345) * t + T(189)) / T(9);
            else
                e.value = m * m * m *
                          (T(20) * t * t * t * t - T(124) * t * t * t + T(381) * t * t - T(576) * t + T(432)) / T(108);
        } else {
            e.gates.push_back({"0 <= alpha < 1", in(T(0), one, false, true)});
            const T two_m = T(2) * m;
            if (f == Functional::log_toeplitz_21)
                e.value = starlike ? T(T(5) * two_m * two_m / T(16)) : T(m * m * (t * t - T(6) * t + T(45)) / T(144));
            else
                e.value = starlike ? T(T(13) * two_m * two_m / T(144))
                                   : T(m * m * (T(2) * t * t - T(10) * t + T(13)) / T(144));
        }
        break;
    }
    case Claim::CS:
    case Claim::CC: {
        const bool starlike = claim == Claim::CS;
        e.gates.push_back({"fixed class", true});
        switch (f) {
        case Functional::log_toeplitz_21: e.value = starlike ? T(T(5) / T(4)) : T(T(5) / T(16)); break;
        case Functional::log_toeplitz_22: e.value = starlike ? T(T(13) / T(36)) : T(T(13) / T(144)); break;
        case Functional::toeplitz_32: e.value = starlike ? T(84) : T(4); break;
        }
        break;
    }
    case Claim::SSb:
        if (f != Functional::toeplitz_32) throw std::invalid_argument("SSb bounds T32 only");
        e.gates.push_back({"3/4 <= beta <= 1", in(T(3) / T(4), one, false, false)});
        e.value = T(4) * t * t * t * (T(160) + T(742) * t * t + T(799) * t * t * t * t) / T(81);
        break;
    case Claim::CCb:
        if (f != Functional::toeplitz_32) throw std::invalid_argument("CCb bounds T32 only");
        e.gates.push_back({"8/9 <= beta <= 1", in(T(8) / T(9), one, false, false)});
        e.value = t * t * t * (T(323) + T(650) * t * t + T(323) * t * t * t * t) / T(324);
        break;
    case Claim::Crlr: {
        if (f != Functional::toeplitz_32) throw std::invalid_argument("Crlr bounds T32 only");
        e.gates.push_back({"5/14 <= lambda <= 1/2", in(T(5) / T(14), one / T(2), false, false)});
        const T u = one + T(2) * t;
        e.value = u * u * u * (T(9) + T(5) * t + T(2) * t * t) * (T(25) + T(17) * t + T(10) * t * t) / T(864);
        break;
    }
    default: throw std::invalid_argument(std::string("not a family corollary: ") + to_string(claim));
    }
    return e;
}

/// Coefficients of the phi a family corollary is stated for.
template <class T>
Coefficients<T> family_coefficients(Family family, const T& t) {
    switch (family) {
    case Family::alpha: return alpha_coefficients(t);
    case Family::beta: return beta_coefficients(t);
    case Family::lambda: return lambda_coefficients(t);
    case Family::fixed: return {T(2), T(2), T(2)};
    default: throw std::invalid_argument("family has no one-parameter coefficients");
    }
}

/// Exact right-hand side of a theorem, or nullopt when its gate fails.
inline std::optional<Rational> exact_theorem_bound(Claim claim, const Coefficients<Rational>& c) {
    auto e = evaluate_theorem<Rational>(claim, c, Rational(0));
    if (!e.ok()) return std::nullopt;
    return e.value;
}

/// Structured result for one claim and one functional.
struct BoundReport {
    Claim claim;
    Functional functional;
    ClassKind class_kind;
    std::string phi;
    bool hypotheses_ok = false;
    std::vector<GateCheck> gates;
    std::optional<double> bound;
    std::optional<RegionPoint> region_point;
    std::optional<Region> region;
    std::vector<std::string> notes;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

namespace detail {

inline BoundReport make_report(Claim claim, Functional f, std::string phi, const Evaluation<double>& e) {
    BoundReport r;
    r.claim = claim;
    r.functional = f;
    r.class_kind = claim_info(claim).class_kind;
    r.phi = std::move(phi);
    r.gates = e.gates;
    r.hypotheses_ok = e.ok();
    if (r.hypotheses_ok) r.bound = e.value;
    if (e.region_point) {
        r.region_point = e.region_point;
        r.region = e.region;
    }
    return r;
}

inline bool same_value(double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); }

} // namespace detail

inline BoundReport bound_theorem(Claim claim, const Coefficients<double>& c, std::string phi_label = "custom") {
    if (!is_theorem(claim)) throw std::invalid_argument(std::string("not a theorem claim: ") + to_string(claim));
    const auto e = evaluate_theorem<double>(claim, c, gate_slack);
    return detail::make_report(claim, claim_info(claim).functionals.front(), std::move(phi_label), e);
}

inline BoundReport bound_theorem(Claim claim, const MindaPhi& phi) {
    return bound_theorem(claim, coefficients_of(phi), phi.describe());
}

inline BoundReport bound_T1(const MindaPhi& phi) { return bound_theorem(Claim::T1, phi); }
inline BoundReport bound_T2(const MindaPhi& phi) { return bound_theorem(Claim::T2, phi); }
inline BoundReport bound_T3(const MindaPhi& phi) { return bound_theorem(Claim::T3, phi); }
inline BoundReport bound_T4(const MindaPhi& phi) { return bound_theorem(Claim::T4, phi); }
inline BoundReport bound_T5(const MindaPhi& phi) { return bound_theorem(Claim::T5, phi); }
inline BoundReport bound_T6(const MindaPhi& phi) { return bound_theorem(Claim::T6, phi); }

/// Janowski corollary in closed form, cross-checked against the generic
/// theorem at B1 = A-B, B2 = B^2-AB, B3 = AB^2-B^3. A disagreement in value
/// or gate is a defect and throws std::logic_error.
inline BoundReport bound_janowski(Claim claim, double a, double b) {
    if (claim_info(claim).family != Family::janowski)
        throw std::invalid_argument(std::string("not a Janowski corollary: ") + to_string(claim));
    if (!(-1.0 <= b && b < a && a <= 1.0))
        throw invalid_janowski_parameters("janowski requires -1 <= B < A <= 1");
    const auto e = evaluate_janowski<double>(claim, a, b, gate_slack);
    const auto info = claim_info(claim);
    const auto generic = evaluate_theorem<double>(theorem_for(info.functionals.front(), info.class_kind),
                                                  janowski_coefficients(a, b), gate_slack);
    if (e.ok() != generic.ok() || !detail::same_value(e.value, generic.value))
        throw std::logic_error(std::string("Janowski closed form disagrees with generic theorem for ") +
                               to_string(claim));
    std::ostringstream label;
    label << "janowski(" << a << "," << b << ")";
    return detail::make_report(claim, info.functionals.front(), label.str(), e);
}

/// One-parameter corollary (C6, C7, CS, CC, SSb, CCb, Crlr). The closed form
/// is cross-checked against the generic theorem on the family's phi, and no
/// bound is emitted unless both the stated range and the theorem's own gate hold.
inline BoundReport bound_corollary(Claim claim, Functional f, double param = 0.0) {
    const auto info = claim_info(claim);
    if (info.family == Family::generic || info.family == Family::janowski)
        throw std::invalid_argument(std::string("not a one-parameter corollary: ") + to_string(claim));
    const double t = info.family == Family::fixed ? 0.0 : param;
    auto e = evaluate_family<double>(claim, f, t);
    std::ostringstream label;
    label << to_string(info.family);
    if (info.family != Family::fixed) label << ':' << t;
    BoundReport r = detail::make_report(claim, f, label.str(), e);
    if (e.ok()) {
        const auto generic = evaluate_theorem<double>(theorem_for(f, info.class_kind),
                                                      family_coefficients(info.family, t), gate_slack);
        r.gates.insert(r.gates.end(), generic.gates.begin(), generic.gates.end());
        if (generic.region_point) {
            r.region_point = generic.region_point;
            r.region = generic.region;
        }
        if (!generic.ok()) {
            r.hypotheses_ok = false;
            r.bound.reset();
        } else if (!detail::same_value(e.value, generic.value)) {
            throw std::logic_error(std::string("corollary closed form disagrees with generic theorem for ") +
                                   to_string(claim));
        }
    }
    if (claim == Claim::Crlr)
        r.notes.push_back("closed form for F(lambda) is written in a parameter alpha; evaluated with alpha = lambda");
    return r;
}

} // namespace gft
