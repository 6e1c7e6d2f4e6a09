#pragma once

// JSON serialization of the public types via nlohmann::json. Keys are
// emitted in sorted order and floats use the shortest round-trip
// representation, so dumps are byte-stable across runs.

#include <json.hpp>

#include "adsfn/fn_coords.hpp"

namespace adsfn {

using nlohmann::json;

inline void to_json(json& j, const SplitComplex& z) {
    j = json{{"re", z.re}, {"im", z.im}};
}
inline void from_json(const json& j, SplitComplex& z) {
    j.at("re").get_to(z.re);
    j.at("im").get_to(z.im);
}

inline void to_json(json& j, const ProjectivePoint& p) { j = json::array({p.x, p.y}); }
inline void from_json(const json& j, ProjectivePoint& p) {
    p = ProjectivePoint(j.at(0).get<double>(), j.at(1).get<double>());
}

inline void to_json(json& j, const BoundaryPoint& p) {
    j = json{{"plus", p.plus}, {"minus", p.minus}};
}
inline void from_json(const json& j, BoundaryPoint& p) {
    j.at("plus").get_to(p.plus);
    j.at("minus").get_to(p.minus);
}

inline void to_json(json& j, const Mat2& m) {
    j = json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}
inline void from_json(const json& j, Mat2& m) {
    j.at(0).at(0).get_to(m.a);
    j.at(0).at(1).get_to(m.b);
    j.at(1).at(0).get_to(m.c);
    j.at(1).at(1).get_to(m.d);
}

inline void to_json(json& j, const Isometry& g) {
    j = json{{"plus", g.plus}, {"minus", g.minus}};
}
inline void from_json(const json& j, Isometry& g) {
    j.at("plus").get_to(g.plus);
    j.at("minus").get_to(g.minus);
}

inline void to_json(json& j, const SlotRef& s) { j = json::array({s.pants, s.slot}); }
inline void from_json(const json& j, SlotRef& s) {
    j.at(0).get_to(s.pants);
    j.at(1).get_to(s.slot);
}

inline void to_json(json& j, const DecCurve& c) {
    j = json{{"ends", json::array({c.a, c.b})}};
}
inline void from_json(const json& j, DecCurve& c) {
    j.at("ends").at(0).get_to(c.a);
    j.at("ends").at(1).get_to(c.b);
}

inline void to_json(json& j, const PantsDecomposition& d) {
    j = json{{"pants", d.num_pants}, {"curves", d.curves}, {"peripherals", d.peripherals}};
}
inline void from_json(const json& j, PantsDecomposition& d) {
    j.at("pants").get_to(d.num_pants);
    j.at("curves").get_to(d.curves);
    d.peripherals.clear();
    if (j.contains("peripherals")) j.at("peripherals").get_to(d.peripherals);
}

inline void to_json(json& j, const CurveCoord& c) {
    j = json{{"length", c.length}, {"twist", c.twist}};
}
inline void from_json(const json& j, CurveCoord& c) {
    j.at("length").get_to(c.length);
    j.at("twist").get_to(c.twist);
}

inline void to_json(json& j, const PeripheralCoord& p) {
    j = json{{"length", p.length}, {"delta", p.delta}};
}
inline void from_json(const json& j, PeripheralCoord& p) {
    j.at("length").get_to(p.length);
    j.at("delta").get_to(p.delta);
}

inline void to_json(json& j, const FNPoint& x) {
    j = json{{"curves", x.curves}, {"peripherals", x.peripherals}};
}
inline void from_json(const json& j, FNPoint& x) {
    j.at("curves").get_to(x.curves);
    x.peripherals.clear();
    if (j.contains("peripherals")) j.at("peripherals").get_to(x.peripherals);
}

inline void to_json(json& j, const GluingRecord& r) {
    j = json{{"kind", r.kind == GluingKind::Amalgamated ? "amalgamated" : "hnn"},
             {"tw", r.tw},
             {"normalizer", r.normalizer},
             {"canonical", r.canonical},
             {"twist", r.twist},
             {"gen1", r.gen1},
             {"next1", r.next1},
             {"gen2", r.gen2},
             {"next2", r.next2},
             {"stable", r.stable}};
}
inline void from_json(const json& j, GluingRecord& r) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "amalgamated" && kind != "hnn")
        throw DomainError("gluing record: unknown kind " + kind);
    r.kind = kind == "hnn" ? GluingKind::Hnn : GluingKind::Amalgamated;
    j.at("tw").get_to(r.tw);
    j.at("normalizer").get_to(r.normalizer);
    j.at("canonical").get_to(r.canonical);
    j.at("twist").get_to(r.twist);
    j.at("gen1").get_to(r.gen1);
    j.at("next1").get_to(r.next1);
    j.at("gen2").get_to(r.gen2);
    j.at("next2").get_to(r.next2);
    j.at("stable").get_to(r.stable);
}

inline void to_json(json& j, const GluedRep& r) {
    j = json{{"generators", r.generators},
             {"relations", r.relations},
             {"gluing_records", r.gluing_records}};
}
inline void from_json(const json& j, GluedRep& r) {
    j.at("generators").get_to(r.generators);
    j.at("relations").get_to(r.relations);
    j.at("gluing_records").get_to(r.gluing_records);
}

inline void to_json(json& j, const DegenerateData& d) {
    j = json{{"a", d.a}, {"d", d.d}};
}
inline void from_json(const json& j, DegenerateData& d) {
    j.at("a").get_to(d.a);
    j.at("d").get_to(d.d);
}

namespace detail {

// int-keyed maps serialize as objects with decimal string keys
template <typename T>
json int_map_to_json(const std::map<int, T>& m) {
    json j = json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

template <typename T>
std::map<int, T> int_map_from_json(const json& j) {
    std::map<int, T> m;
    for (auto it = j.begin(); it != j.end(); ++it)
        m[std::stoi(it.key())] = it.value().get<T>();
    return m;
}

} // namespace detail

inline void to_json(json& j, const StratumPoint& s) {
    j = json{{"undegenerate", detail::int_map_to_json(s.undegenerate)},
             {"degenerate", detail::int_map_to_json(s.degenerate)},
             {"peripherals", s.peripherals}};
}
inline void from_json(const json& j, StratumPoint& s) {
    s.undegenerate = detail::int_map_from_json<CurveCoord>(j.at("undegenerate"));
    s.degenerate =
        detail::int_map_from_json<std::array<double, 4>>(j.at("degenerate"));
    s.peripherals.clear();
    if (j.contains("peripherals")) j.at("peripherals").get_to(s.peripherals);
}

inline void to_json(json& j, const SurfaceStructure& s) {
    j = json{{"decomposition", s.decomposition},
             {"degenerate", s.degenerate},
             {"degenerate_data", detail::int_map_to_json(s.degenerate_data)},
             {"components", s.components},
             {"pants_component", s.pants_component},
             {"curve_component", detail::int_map_to_json(s.curve_component)},
             {"peripheral_eps", s.peripheral_eps}};
}
inline void from_json(const json& j, SurfaceStructure& s) {
    j.at("decomposition").get_to(s.decomposition);
    j.at("degenerate").get_to(s.degenerate);
    s.degenerate_data = detail::int_map_from_json<DegenerateData>(j.at("degenerate_data"));
    j.at("components").get_to(s.components);
    j.at("pants_component").get_to(s.pants_component);
    s.curve_component = detail::int_map_from_json<int>(j.at("curve_component"));
    j.at("peripheral_eps").get_to(s.peripheral_eps);
}

/// Canonical dump: two-space indent, sorted keys (std::map / ordered
/// construction above), trailing newline. Byte-identical across runs.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace adsfn
