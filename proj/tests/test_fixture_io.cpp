#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "ndga/errors.hpp"
#include "ndga/fixture_io.hpp"
#include "ndga/gallery.hpp"
#include "support/generators.hpp"

using namespace ndga;
using namespace ndga::io;

namespace {

std::string parse_error_location(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.where();
    }
    return "<no error>";
}

json ej1_json() {
    return json::parse(R"({"degrees": {"0": ["e1"], "1": ["e2"], "2": ["e3"]},
                           "d": {"e1": {"e2": "1"}, "e2": {"e3": "1"}}, "N": 3})");
}

} // namespace

TEST_CASE("complexes round-trip through JSON") {
    const NComplex V = complex_from_json(ej1_json());
    CHECK(V.d() == gallery::build_ej1().d());
    CHECK(V.order_bound() == 3);
    CHECK(to_json(V) == to_json(gallery::build_ej1()));
    CHECK(complex_from_json(to_json(V)).d() == V.d());

    gen::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const NComplex C = gen::proper_complex(rng, static_cast<unsigned>(rng.uniform(1, 4)), 8);
        const NComplex back = complex_from_json(json::parse(dump(to_json(C))));
        CHECK(back.d() == C.d());
        CHECK(back.order_bound() == C.order_bound());
    }
}

TEST_CASE("algebras and modules round-trip") {
    for (const auto& A : {gallery::build_vtensor_algebra(), gallery::forms_algebra(2, 2), gallery::build_ej1_algebra()}) {
        const NDga back = algebra_from_json(to_json(A));
        CHECK(back.d() == A.d());
        CHECK(back.product() == A.product());
        CHECK(back.unit() == A.unit());
        CHECK(back.order_bound() == A.order_bound());
        CHECK(detect_kind(to_json(A)) == FixtureKind::algebra);
    }
    const Kdgm M = evaluation_module(gallery::build_ej1());
    const Kdgm back = module_from_json(to_json(M));
    CHECK(back.action() == M.action());
    CHECK(back.d() == M.d());
    CHECK(back.algebra().product() == M.algebra().product());
    CHECK(detect_kind(to_json(M)) == FixtureKind::module);
    CHECK(detect_kind(ej1_json()) == FixtureKind::complex);
}

TEST_CASE("perturbation files") {
    const NComplex V = gallery::build_ej1();
    const GradedMap e = map_from_json(json::parse(R"({"e": {"e1": {"e2": "2/3"}}})"), V.space());
    CHECK(e.degree() == 1);
    CHECK(e.entry("e1", "e2") == Scalar(2, 3));
    CHECK(map_from_json(map_to_json(e), V.space()) == e);
    const GradedMap f = map_from_json(json::parse(R"({"e": {"e1": {"e3": "1"}}, "degree": 2})"), V.space());
    CHECK(f.degree() == 2);
    CHECK_THROWS_AS(map_from_json(json::parse(R"({"e": {"e1": {"e3": "1"}}})"), V.space()), StructuralError);
}

TEST_CASE("graphs") {
    const LabelledGraph g = graph_from_json(json::parse(R"({"edges": [{"from": "x", "to": "y", "weight": "-1/2"},
                                                                         {"from": "y", "to": "x"}]})"));
    CHECK(g.vertices() == std::vector<std::string>{"x", "y"});
    CHECK(g.edges()[0].weight == Scalar(-1, 2));
    CHECK(g.edges()[1].weight == Scalar(1));
}

TEST_CASE("parse errors carry a location") {
    json bad_scalar = ej1_json();
    bad_scalar["d"]["e1"]["e2"] = "1/x";
    CHECK(parse_error_location([&] { complex_from_json(bad_scalar); }) == "d.e1.e2");

    json unknown = ej1_json();
    unknown["d"]["e1"]["e9"] = "1";
    CHECK(parse_error_location([&] { complex_from_json(unknown); }) == "d.e1.e9");

    json missing = ej1_json();
    missing.erase("N");
    CHECK(parse_error_location([&] { complex_from_json(missing); }) == "N");

    json zero_n = ej1_json();
    zero_n["N"] = 0;
    CHECK(parse_error_location([&] { complex_from_json(zero_n); }) == "N");

    json bad_degree = ej1_json();
    bad_degree["degrees"]["x"] = json::array({"e4"});
    CHECK(parse_error_location([&] { complex_from_json(bad_degree); }) == "degrees.x");

    json algebra = to_json(gallery::build_ej1_algebra());
    algebra["product"]["e1,e9"] = json::object({{"e1", "1"}});
    CHECK(parse_error_location([&] { algebra_from_json(algebra); }) == "product.e1,e9");

    CHECK(parse_error_location([&] { graph_from_json(json::parse(R"({"edges": [{"from": "x"}]})")); }) == "edges[0].to");
    CHECK(parse_error_location([&] { complex_from_json(json::array()); }) == "<root>");
}

TEST_CASE("structural problems are not parse errors") {
    json wrong_degree = ej1_json();
    wrong_degree["d"]["e1"] = json::object({{"e3", "1"}});
    CHECK_THROWS_AS(complex_from_json(wrong_degree), StructuralError);
    json not_nilpotent = ej1_json();
    not_nilpotent["N"] = 2;
    CHECK_THROWS_AS(complex_from_json(not_nilpotent), StructuralError);
    CHECK_NOTHROW(complex_data_from_json(not_nilpotent));
}

TEST_CASE("files") {
    CHECK_THROWS_AS(read_json_file("/nonexistent/fixture.json"), ParseError);
    const std::string path = "test_fixture_io_tmp.json";
    {
        std::ofstream out(path);
        out << "{\"degrees\": ";
    }
    CHECK_THROWS_AS(read_json_file(path), ParseError);
    {
        std::ofstream out(path);
        out << dump(ej1_json());
    }
    CHECK(read_json_file(path) == ej1_json());
    std::remove(path.c_str());
    CHECK(dump(json::object()) == "{}\n");
}

TEST_CASE("gallery fixtures export and reload") {
    for (const auto& name : gallery_names()) {
        const json j = gallery_json(name);
        CHECK_MESSAGE(dump(j) == dump(json::parse(dump(j))), name);
        if (name == "connection2form-e") continue;
        switch (detect_kind(j)) {
        case FixtureKind::complex:
            CHECK_NOTHROW(complex_from_json(j));
            break;
        case FixtureKind::algebra:
            CHECK_MESSAGE(verify_ndga(algebra_from_json(j)).ok(), name);
            break;
        case FixtureKind::module:
            CHECK_MESSAGE(verify_kdgm(module_from_json(j)).ok(), name);
            break;
        }
    }
    const Kdgm M = module_from_json(gallery_json("connection2form"));
    CHECK_NOTHROW(map_from_json(gallery_json("connection2form-e"), M.space()));
    CHECK_THROWS_AS(gallery_json("nope"), ArgumentError);
}
