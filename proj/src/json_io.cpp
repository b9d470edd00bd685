#include "contspec/json_io.hpp"

#include <nlohmann/json.hpp>

namespace contspec {

using nlohmann::json;

void to_json(json& j, const Rat& r) { j = json{{"num", r.num()}, {"den", r.den()}}; }

void to_json(json& j, const Interval& iv) {
    j = json{{"lo", iv.lo}, {"hi", iv.hi}, {"lo_closed", iv.lo_closed}, {"hi_closed", iv.hi_closed}};
}

void to_json(json& j, const IntervalUnion& u) { j = u.parts(); }

void to_json(json& j, const ColumnSpace& space) {
    json columns = json::array();
    for (const auto& [index, column] : space.columns)
        columns.push_back(json{{"index", index}, {"parts", column}});
    j = json{{"columns", columns}};
    if (space.window)
        j["window"] = *space.window;
}

void to_json(json& j, const Piece& p) {
    j = json{{"source", p.source}, {"target", p.target}, {"offset", p.offset}};
}

void to_json(json& j, const PiecewiseMap& f) {
    json pieces = json::array();
    for (const auto& [column, list] : f.columns()) {
        for (const Piece& p : list) {
            json entry = p;
            entry["column"] = column;
            pieces.push_back(std::move(entry));
        }
    }
    j = json{{"pieces", pieces}};
}

void to_json(json& j, const Witness& w) {
    j = json{{"column", w.column},
             {"point", w.point},
             {"side", w.side == Side::Left ? "left" : "right"},
             {"value", json{{"column", w.value_column}, {"ordinate", w.value_ordinate}}},
             {"limit", json{{"column", w.limit_column}, {"ordinate", w.limit_ordinate}}}};
}

void to_json(json& j, const CanonicalSubmonoid& s) {
    switch (s.kind()) {
    case SubmonoidKind::Zero:
        j = json{{"variant", "zero"}};
        break;
    case SubmonoidKind::Group:
        j = json{{"variant", "group"}, {"d", s.d()}};
        break;
    case SubmonoidKind::Positive:
    case SubmonoidKind::Negative:
        j = json{{"variant", s.kind() == SubmonoidKind::Positive ? "positive" : "negative"},
                 {"d", s.d()},
                 {"gaps", s.gaps()},
                 {"conductor", s.conductor()}};
        break;
    }
}

std::vector<int> subset_points(std::uint32_t subset, int n_points) {
    std::vector<int> out;
    for (int i = 0; i < n_points; ++i) {
        if ((subset >> i) & 1u)
            out.push_back(i);
    }
    return out;
}

void to_json(json& j, const TopologyClass& c) {
    json opens = json::array();
    for (std::uint32_t s : c.representative.open_sets())
        opens.push_back(subset_points(s, c.representative.n_points));
    j = json{{"class_id", c.class_id},
             {"opens", opens},
             {"labeled_count", c.labeled_count},
             {"group_order", c.group_order},
             {"group_type", c.group_type}};
}

void to_json(json& j, const CayleyTable& t) {
    j = json{{"size", t.size}, {"identity", t.identity}, {"op", t.op}};
    if (!t.names.empty())
        j["names"] = t.names;
}

void from_json(const json& j, CayleyTable& t) {
    t = CayleyTable{};
    t.size = j.at("size").get<int>();
    t.identity = j.at("identity").get<int>();
    t.op = j.at("op").get<std::vector<std::vector<int>>>();
    if (j.contains("names"))
        t.names = j.at("names").get<std::vector<std::string>>();
}

} // namespace contspec
