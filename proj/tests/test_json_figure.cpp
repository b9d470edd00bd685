#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "contspec/figure.hpp"
#include "contspec/json_io.hpp"

using namespace contspec;
using nlohmann::json;

TEST_CASE("rationals and submonoids serialize with sorted keys") {
    CHECK(json(Rat(3, 2)).dump() == R"({"den":2,"num":3})");
    CHECK(json(canonicalize({3, 5})).dump() ==
          R"({"conductor":8,"d":1,"gaps":[1,2,4,7],"variant":"positive"})");
    CHECK(json(CanonicalSubmonoid::zero()).dump() == R"({"variant":"zero"})");
    CHECK(json(CanonicalSubmonoid::group(2)).dump() == R"({"d":2,"variant":"group"})");
    CHECK(json(canonicalize({-3})).dump() ==
          R"({"conductor":1,"d":3,"gaps":[],"variant":"negative"})");
}

TEST_CASE("space and map exports carry exact endpoints") {
    const auto s = canonicalize({3, 4, 5});
    const json space = build_line_space(s, 2);
    CHECK(space.at("window") == 2);
    CHECK(space.at("columns").size() == 5);
    const auto& col0 = space.at("columns").at(2); // index 0 in sorted order -2..2
    CHECK(col0.at("index") == 0);
    CHECK(col0.at("parts").at(0).at("lo") == json({{"den", 1}, {"num", 0}}));
    CHECK(col0.at("parts").at(0).at("hi") == json({{"den", 1}, {"num", 2}}));
    CHECK(col0.at("parts").at(0).at("lo_closed") == true);
    CHECK(col0.at("parts").at(0).at("hi_closed") == false);

    const json map = build_line_map(s, 2);
    CHECK(map.at("pieces").is_array());
    for (const auto& piece : map.at("pieces")) {
        CHECK(piece.contains("column"));
        CHECK(piece.contains("target"));
        CHECK(piece.at("offset").contains("num"));
    }
}

TEST_CASE("dumps are deterministic") {
    const auto s = canonicalize({3, 4, 5});
    const json a = build_line_map(s, 4);
    const json b = build_line_map(s, 4);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("cayley table round trip") {
    const auto s3 = symmetric3_table();
    const json j = s3;
    const auto back = j.get<CayleyTable>();
    CHECK(back.size == s3.size);
    CHECK(back.identity == s3.identity);
    CHECK(back.op == s3.op);
    CHECK(back.names == s3.names);

    const auto parsed = json::parse(R"({"size":2,"identity":0,"op":[[0,1],[1,1]]})");
    const auto table = parsed.get<CayleyTable>();
    CHECK(validate(table).kind == TableKind::Monoid);
    CHECK(table.name_of(1) == "1"); // falls back to decimal ids
}

TEST_CASE("witness serialization") {
    const auto s = canonicalize({3, 4, 5});
    const auto space = build_line_space(s, 4);
    const auto report = is_continuous(build_line_map(s, 4), space);
    REQUIRE_FALSE(report.continuous);
    const json w = report.witnesses.front();
    CHECK(w.at("column") == 0);
    CHECK(w.at("side") == "left");
    CHECK(w.at("value").at("ordinate") == json({{"den", 1}, {"num", 2}}));
    CHECK(w.at("limit").at("ordinate") == json({{"den", 1}, {"num", 1}}));
}

TEST_CASE("classification table serialization") {
    const json rows = classify_topologies(3);
    REQUIRE(rows.size() == 9);
    CHECK(rows.at(0).at("class_id") == 1);
    CHECK(rows.at(0).at("opens") == json::array({json::array(), json::array({0, 1, 2})}));
    CHECK(rows.at(0).at("group_type") == "S3");
}

TEST_CASE("svg figure shows columns, arrows and witnesses") {
    const auto s = canonicalize({3, 4, 5});
    const auto space = build_line_space(s, 3);
    const auto map = build_line_map(s, 3);
    const auto report = is_continuous(map, space);
    const std::string svg = render_svg(space, map, report.witnesses);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("marker-end=\"url(#arrow)\"") != std::string::npos);
    CHECK(svg.find("stroke=\"red\"") != std::string::npos);      // witness mark
    CHECK(svg.find(">+1<") != std::string::npos);                // offset label
    CHECK(svg == render_svg(space, map, report.witnesses));      // deterministic
}

TEST_CASE("dot export lists parts and labeled edges") {
    const auto s = canonicalize({3, 4, 5});
    const auto space = build_line_space(s, 2);
    const auto map = build_line_map(s, 2);
    const std::string dot = render_dot(space, map);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("cm2_0") != std::string::npos);   // column -2, first part
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("+1") != std::string::npos);
}
