#pragma once

// JSON encoding of reports (nlohmann/json). Layout is documented in docs/schema.md.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gft/bounds.hpp"
#include "gft/verify.hpp"

namespace gft {

namespace detail {

template <class Enum, std::size_t N>
Enum enum_from_json(const nlohmann::json& j, const std::array<Enum, N>& values) {
    const auto s = j.get<std::string>();
    for (Enum e : values)
        if (s == to_string(e)) return e;
    throw std::invalid_argument("unknown enum value: " + s);
}

inline constexpr std::array all_functionals{Functional::log_toeplitz_21, Functional::log_toeplitz_22,
                                            Functional::toeplitz_32};
inline constexpr std::array all_class_kinds{ClassKind::starlike, ClassKind::convex};
inline constexpr std::array all_regions{Region::D1, Region::D2, Region::D3, Region::outside};

} // namespace detail

inline void to_json(nlohmann::json& j, const GateCheck& g) { j = {{"name", g.name}, {"ok", g.ok}}; }
inline void from_json(const nlohmann::json& j, GateCheck& g) {
    g.name = j.at("name").get<std::string>();
    g.ok = j.at("ok").get<bool>();
}

inline void to_json(nlohmann::json& j, const HerglotzAtom& a) { j = {{"weight", a.weight}, {"angle", a.angle}}; }
inline void from_json(const nlohmann::json& j, HerglotzAtom& a) {
    a.weight = j.at("weight").get<double>();
    a.angle = j.at("angle").get<double>();
}

inline void to_json(nlohmann::json& j, const SchwarzSample& w) {
    j = nlohmann::json::array();
    for (const auto& a : w.atoms()) j.push_back(a);
}
inline void from_json(const nlohmann::json& j, SchwarzSample& w) {
    w = SchwarzSample(j.get<std::vector<HerglotzAtom>>());
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
    j = {{"claim_id", to_string(r.claim)},
         {"functional", to_string(r.functional)},
         {"class", to_string(r.class_kind)},
         {"phi", r.phi},
         {"hypotheses_ok", r.hypotheses_ok},
         {"gates", r.gates},
         {"bound", r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr)},
         {"notes", r.notes}};
    if (r.region_point) {
        j["region_detail"] = {{"mu", r.region_point->mu},
                              {"nu", r.region_point->nu},
                              {"region", r.region ? to_string(*r.region) : "outside"}};
    } else {
        j["region_detail"] = nullptr;
    }
}

inline void from_json(const nlohmann::json& j, BoundReport& r) {
    const auto claim = claim_from_string(j.at("claim_id").get<std::string>());
    if (!claim) throw std::invalid_argument("unknown claim id");
    r.claim = *claim;
    r.functional = detail::enum_from_json(j.at("functional"), detail::all_functionals);
    r.class_kind = detail::enum_from_json(j.at("class"), detail::all_class_kinds);
    r.phi = j.at("phi").get<std::string>();
    r.hypotheses_ok = j.at("hypotheses_ok").get<bool>();
    r.gates = j.at("gates").get<std::vector<GateCheck>>();
    r.bound = j.at("bound").is_null() ? std::nullopt : std::optional<double>(j.at("bound").get<double>());
    r.notes = j.at("notes").get<std::vector<std::string>>();
    const auto& rd = j.at("region_detail");
    if (rd.is_null()) {
        r.region_point.reset();
        r.region.reset();
    } else {
        r.region_point = RegionPoint{rd.at("mu").get<double>(), rd.at("nu").get<double>()};
        r.region = detail::enum_from_json(rd.at("region"), detail::all_regions);
    }
}

inline void to_json(nlohmann::json& j, const SearchResult& r) {
    j = {{"claim_id", to_string(r.claim)},
         {"phi", r.phi},
         {"seed", r.seed},
         {"empirical_sup", r.empirical_sup},
         {"sampled_sup", r.sampled_sup},
         {"theoretical_bound", r.theoretical_bound},
         {"best_params", r.best_params},
         {"num_samples", r.num_samples},
         {"refinement_iterations", r.refinement_iterations},
         {"distinct_near_maximizers", r.distinct_near_maximizers},
         {"violation", r.violation},
         {"attainment_gap", r.attainment_gap}};
}

inline void from_json(const nlohmann::json& j, SearchResult& r) {
    const auto claim = claim_from_string(j.at("claim_id").get<std::string>());
    if (!claim) throw std::invalid_argument("unknown claim id");
    r.claim = *claim;
    r.phi = j.at("phi").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.empirical_sup = j.at("empirical_sup").get<double>();
    r.sampled_sup = j.at("sampled_sup").get<double>();
    r.theoretical_bound = j.at("theoretical_bound").get<double>();
    r.best_params = j.at("best_params").get<SchwarzSample>();
    r.num_samples = j.at("num_samples").get<std::size_t>();
    r.refinement_iterations = j.at("refinement_iterations").get<std::size_t>();
    r.distinct_near_maximizers = j.at("distinct_near_maximizers").get<std::size_t>();
    r.violation = j.at("violation").get<bool>();
    r.attainment_gap = j.at("attainment_gap").get<double>();
}

} // namespace gft
