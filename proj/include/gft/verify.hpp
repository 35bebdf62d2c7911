#pragma once

// Numerical corroboration of the bounds: randomized search for the supremum
// of each bounded functional over sampled class members, attainment on the
// extremal functions, gate-window scans over the parameter families, and
// fuzzing of the two coefficient lemmas.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gft/bounds.hpp"
#include "gft/classes.hpp"
#include "gft/functionals.hpp"
#include "gft/nelder_mead.hpp"

namespace gft {

inline constexpr double tol_violation = 1e-9;

struct SearchBudget {
    std::size_t samples = 2000;
    std::size_t refine_steps = 300;
    std::size_t starts = 5;
    std::size_t min_atoms = 2;
    std::size_t max_atoms = 4;
    /// 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
    std::size_t threads = 0;
};

struct SearchResult {
    Claim claim;
    std::string phi;
    std::uint64_t seed = 0;
    double empirical_sup = 0.0;
    /// Best value among the random draws, before refinement.
    double sampled_sup = 0.0;
    double theoretical_bound = 0.0;
    SchwarzSample best_params;
    std::size_t num_samples = 0;
    std::size_t refinement_iterations = 0;
    /// Refined starts that ended within 1e-6 (relative) of the supremum at
    /// distinct Caratheodory coefficients (p1, p2, p3).
    std::size_t distinct_near_maximizers = 0;
    bool violation = false;
    double attainment_gap = 0.0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

namespace detail {

/// Evaluates |functional| on members of one class for a fixed phi.
class FunctionalProbe {
public:
    static constexpr std::size_t order = 5;

    FunctionalProbe(Functional f, ClassKind kind, const MindaPhi& phi) : f_(f), kind_(kind), phi_(phi) {}

    double operator()(const SchwarzSample& w) const {
        const auto m = member_from_omega(kind_, phi_, w.schwarz(order));
        return std::abs(evaluate(f_, m));
    }

private:
    Functional f_;
    ClassKind kind_;
    MindaPhi phi_;
};

inline std::size_t worker_count(std::size_t requested, std::size_t jobs) {
    std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(n, jobs));
}

/// Runs job(i) for i in [0, count) on `threads` workers; job writes only its own slot.
template <class Job>
void parallel_for(std::size_t count, std::size_t threads, Job&& job) {
    const std::size_t workers = worker_count(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) job(i);
        });
}

/// Sample number `index` of a run: 2..4 atoms, independent stream per index.
inline SchwarzSample indexed_sample(std::uint64_t seed, std::uint64_t index, std::size_t min_atoms,
                                    std::size_t max_atoms) {
    const std::uint64_t s = stream_seed(seed, index);
    const std::size_t span = max_atoms - min_atoms + 1;
    return sample_schwarz(min_atoms + static_cast<std::size_t>(splitmix64(s) % span), s);
}

/// Unconstrained chart: softmax logits for the weights, raw angles.
inline std::vector<double> to_chart(const SchwarzSample& w) {
    const auto atoms = w.atoms();
    std::vector<double> x;
    for (const auto& a : atoms) x.push_back(std::log(std::max(a.weight, 1e-300)));
    for (const auto& a : atoms) x.push_back(a.angle);
    return x;
}

inline SchwarzSample from_chart(const std::vector<double>& x) {
    const std::size_t k = x.size() / 2;
    const double top = *std::max_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<HerglotzAtom> atoms(k);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        atoms[i].weight = std::exp(x[i] - top);
        atoms[i].angle = x[k + i];
        total += atoms[i].weight;
    }
    for (auto& a : atoms) a.weight /= total;
    return SchwarzSample(std::move(atoms));
}

inline bool same_caratheodory(const SchwarzSample& a, const SchwarzSample& b) {
    return max_abs_difference(a.caratheodory(3), b.caratheodory(3)) < 1e-3;
}

} // namespace detail

inline Functional claim_functional(Claim claim) {
    if (!is_theorem(claim)) throw std::invalid_argument(std::string("search runs on theorem claims, got ") + to_string(claim));
    return claim_info(claim).functionals.front();
}

/// Randomized search for sup |functional| over the claim's class for `phi`,
/// followed by simplex refinement from the best starts. Deterministic in
/// (seed, budget); independent of the worker count.
inline SearchResult search_supremum(Claim claim, const MindaPhi& phi, const SearchBudget& budget, std::uint64_t seed) {
    const auto report = bound_theorem(claim, phi);
    if (!report.hypotheses_ok)
        throw hypothesis_gate_failed(std::string(to_string(claim)) + " hypotheses fail for " + phi.describe());
    if (budget.min_atoms == 0 || budget.min_atoms > budget.max_atoms)
        throw std::invalid_argument("search budget: need 1 <= min_atoms <= max_atoms");

    const auto kind = claim_info(claim).class_kind;
    const detail::FunctionalProbe probe(claim_functional(claim), kind, phi);

    SearchResult r;
    r.claim = claim;
    r.phi = phi.describe();
    r.seed = seed;
    r.theoretical_bound = *report.bound;
    r.num_samples = budget.samples;

    if (budget.samples == 0) {
        r.best_params = rotated_identity_sample();
        r.empirical_sup = r.sampled_sup = probe(r.best_params);
    } else {
        std::vector<double> values(budget.samples);
        detail::parallel_for(budget.samples, budget.threads, [&](std::size_t i) {
            values[i] = probe(detail::indexed_sample(seed, i, budget.min_atoms, budget.max_atoms));
        });

        std::vector<std::size_t> rank(budget.samples);
        std::iota(rank.begin(), rank.end(), std::size_t{0});
        std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
        rank.resize(std::min(budget.starts, rank.size()));

        r.sampled_sup = values[rank.front()];
        r.empirical_sup = r.sampled_sup;
        r.best_params = detail::indexed_sample(seed, rank.front(), budget.min_atoms, budget.max_atoms);

        std::vector<SimplexResult> refined(rank.size());
        detail::parallel_for(rank.size(), budget.threads, [&](std::size_t s) {
            const auto start = detail::indexed_sample(seed, rank[s], budget.min_atoms, budget.max_atoms);
            auto x0 = detail::to_chart(start);
            std::vector<double> step(x0.size());
            for (std::size_t i = 0; i < step.size(); ++i) step[i] = i < step.size() / 2 ? 0.5 : 0.3;
            refined[s] = nelder_mead_maximize([&](const std::vector<double>& x) { return probe(detail::from_chart(x)); },
                                              std::move(x0), step, budget.refine_steps);
        });

        std::vector<SchwarzSample> endpoints;
        for (const auto& s : refined) {
            r.refinement_iterations += s.iterations;
            endpoints.push_back(detail::from_chart(s.x));
            if (s.value > r.empirical_sup) {
                r.empirical_sup = s.value;
                r.best_params = endpoints.back();
            }
        }
        std::vector<SchwarzSample> distinct;
        for (std::size_t s = 0; s < refined.size(); ++s) {
            if (refined[s].value < r.empirical_sup * (1.0 - 1e-6)) continue;
            const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                          [&](const SchwarzSample& d) { return detail::same_caratheodory(d, endpoints[s]); });
            if (!seen) distinct.push_back(endpoints[s]);
        }
        r.distinct_near_maximizers = distinct.size();
    }
    r.violation = r.empirical_sup > r.theoretical_bound + tol_violation;
    r.attainment_gap = r.theoretical_bound - r.empirical_sup;
    return r;
}

/// |functional(extremal)| - bound for a theorem claim; the extremal is k_phi
/// for starlike claims and h_phi for convex ones.
inline double check_attainment(Claim claim, const MindaPhi& phi) {
    const auto report = bound_theorem(claim, phi);
    if (!report.hypotheses_ok)
        throw hypothesis_gate_failed(std::string(to_string(claim)) + " hypotheses fail for " + phi.describe());
    const auto m = extremal_member(claim_info(claim).class_kind, phi);
    return std::abs(evaluate(claim_functional(claim), m)) - *report.bound;
}

/// MindaPhi of a one-parameter family.
inline MindaPhi family_phi(Family family, double t) {
    switch (family) {
    case Family::alpha: return MindaPhi::order_alpha(t);
    case Family::beta: return MindaPhi::power(t);
    case Family::lambda: return MindaPhi::robertson(t);
    case Family::fixed: return MindaPhi::janowski(1.0, -1.0);
    default: throw std::invalid_argument("family_phi: not a one-parameter family");
    }
}

/// Same as check_attainment for a one-parameter corollary.
inline double check_corollary_attainment(Claim claim, Functional f, double param) {
    const auto report = bound_corollary(claim, f, param);
    if (!report.hypotheses_ok)
        throw hypothesis_gate_failed(std::string(to_string(claim)) + " hypotheses fail");
    const auto info = claim_info(claim);
    const auto m = extremal_member(info.class_kind, family_phi(info.family, param));
    return std::abs(evaluate(f, m)) - *report.bound;
}

struct GateScan {
    std::vector<Claim> claims;
    Family family;
    double resolution;
    std::vector<std::pair<double, bool>> points;
    /// Midpoints between consecutive grid points where the gate changes.
    std::vector<double> transitions;
};

/// Parameter domain of each family: alpha [0,1), beta (0,1], lambda (-1/2,1/2].
inline std::vector<double> family_grid(Family family, double resolution) {
    if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
    std::vector<double> grid;
    const auto steps = [&](double lo, double hi) { return static_cast<long>(std::floor((hi - lo) / resolution + 1e-9)); };
    switch (family) {
    case Family::alpha:
        for (long k = 0; k * resolution < 1.0 - 1e-12; ++k) grid.push_back(static_cast<double>(k) * resolution);
        break;
    case Family::beta:
        for (long k = steps(0.0, 1.0); k >= 0; --k) {
            const double t = 1.0 - static_cast<double>(k) * resolution;
            if (t > 1e-12) grid.push_back(t);
        }
        break;
    case Family::lambda:
        for (long k = steps(-0.5, 0.5); k >= 0; --k) {
            const double t = 0.5 - static_cast<double>(k) * resolution;
            if (t > -0.5 + 1e-12) grid.push_back(t);
        }
        break;
    default: throw std::invalid_argument("family_grid: not a one-parameter family");
    }
    return grid;
}

/// Gate truth (conjunction over `claims`) along the family's parameter grid.
inline GateScan scan_gate_window(const std::vector<Claim>& claims, Family family, double resolution) {
    GateScan scan{claims, family, resolution, {}, {}};
    for (double t : family_grid(family, resolution)) {
        const auto phi = family_phi(family, t);
        bool ok = true;
        for (Claim c : claims) ok = ok && bound_theorem(c, phi).hypotheses_ok;
        scan.points.emplace_back(t, ok);
    }
    for (std::size_t i = 1; i < scan.points.size(); ++i)
        if (scan.points[i].second != scan.points[i - 1].second)
            scan.transitions.push_back(0.5 * (scan.points[i].first + scan.points[i - 1].first));
    return scan;
}

inline GateScan scan_gate_window(Claim claim, Family family, double resolution) {
    return scan_gate_window(std::vector<Claim>{claim}, family, resolution);
}

enum class Lemma { prokhorov_szynal, efraimidis };

struct LemmaFuzzResult {
    Lemma lemma;
    std::size_t trials = 0;
    std::size_t evaluations = 0;
    /// max over trials and grid of (value - bound); <= 0 when the lemma holds.
    double max_slack = -std::numeric_limits<double>::infinity();
};

/// (mu, nu) grid covering D1, D2 and D3, boundaries included.
inline std::vector<RegionPoint> prokhorov_szynal_grid() {
    std::vector<RegionPoint> grid;
    for (int i = -12; i <= 12; ++i) {
        const double mu = 0.5 * i;
        const double amu = std::abs(mu);
        std::vector<double> lows;
        if (amu <= 2.0) lows.push_back(1.0);
        if (amu >= 2.0 && amu <= 4.0) lows.push_back((mu * mu + 8.0) / 12.0);
        if (amu >= 4.0) lows.push_back(2.0 * (amu - 1.0) / 3.0);
        for (double lo : lows)
            for (int j = 0; j <= 6; ++j) grid.push_back({mu, lo + 0.5 * j});
    }
    return grid;
}

inline std::vector<complex> efraimidis_mu_grid() {
    std::vector<complex> grid;
    for (int i = -8; i <= 12; ++i) grid.emplace_back(0.25 * i, 0.0);
    for (double im : {-1.0, -0.5, 0.5, 1.0})
        for (double re : {-0.5, 0.0, 0.5, 1.0, 1.5}) grid.emplace_back(re, im);
    return grid;
}

/// Largest observed violation of a coefficient lemma over `trials` seeded
/// samples (1..4 atoms, so extreme points are included).
inline LemmaFuzzResult lemma_fuzz(Lemma lemma, std::size_t trials, std::uint64_t seed, std::size_t threads = 0) {
    if (trials == 0) throw std::invalid_argument("lemma_fuzz needs at least one trial");
    LemmaFuzzResult r{lemma, trials, 0, -std::numeric_limits<double>::infinity()};
    std::vector<double> worst(trials);
    std::size_t per_trial = 0;
    if (lemma == Lemma::prokhorov_szynal) {
        const auto grid = prokhorov_szynal_grid();
        per_trial = grid.size();
        detail::parallel_for(trials, threads, [&](std::size_t i) {
            const auto omega = detail::indexed_sample(seed, i, 1, 4).schwarz(3);
            double m = -std::numeric_limits<double>::infinity();
            for (const auto& pt : grid) m = std::max(m, prokhorov_szynal_value(omega, pt) - std::abs(pt.nu));
            worst[i] = m;
        });
    } else {
        const auto grid = efraimidis_mu_grid();
        per_trial = grid.size() * 6;
        detail::parallel_for(trials, threads, [&](std::size_t i) {
            const auto p = detail::indexed_sample(seed, i, 1, 4).caratheodory(4);
            double m = -std::numeric_limits<double>::infinity();
            for (std::size_t n = 2; n <= 4; ++n)
                for (std::size_t k = 1; k < n; ++k)
                    for (const auto& mu : grid) m = std::max(m, efraimidis_value(p.coeffs(), n, k, mu) - efraimidis_bound(mu));
            worst[i] = m;
        });
    }
    r.evaluations = trials * per_trial;
    for (double w : worst) r.max_slack = std::max(r.max_slack, w);
    return r;
}

} // namespace gft
