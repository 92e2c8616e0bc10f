#include "ndga/fixture_io.hpp"

#include <fstream>
#include <sstream>

#include "ndga/errors.hpp"
#include "ndga/gallery.hpp"

namespace ndga::io {

namespace {

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

const json& require(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where.empty() ? "<root>" : where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(join(where, key), "missing key");
    return *it;
}

Scalar scalar_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw ParseError(where, "expected a scalar string \"p/q\"");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where, e.what());
    }
}

int parse_int(const std::string& text, const std::string& where) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ParseError(where, "degree key \"" + text + "\" is not an integer");
    }
    if (used != text.size()) throw ParseError(where, "degree key \"" + text + "\" is not an integer");
    return value;
}

SpacePtr space_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object of degree -> labels");
    GradedSpace::Components components;
    for (const auto& [key, labels] : j.items()) {
        const std::string here = join(where, key);
        const int degree = parse_int(key, here);
        if (!labels.is_array()) throw ParseError(here, "expected an array of labels");
        for (const auto& label : labels) {
            if (!label.is_string()) throw ParseError(here, "labels must be strings");
            components[degree].push_back(label.get<std::string>());
        }
    }
    try {
        return make_space(std::move(components));
    } catch (const StructuralError& e) {
        throw ParseError(where, e.what());
    }
}

void require_label(const GradedSpace& space, const std::string& label, const std::string& where) {
    if (!space.contains(label)) throw ParseError(where, "unknown basis label \"" + label + "\"");
}

// {"x": {"y": "c"}} as entries; labels checked against the two spaces.
std::vector<GradedMap::Entry> entries_from_json(const json& j, const GradedSpace& source, const GradedSpace& target,
                                                const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object of label -> combination");
    std::vector<GradedMap::Entry> entries;
    for (const auto& [from, row] : j.items()) {
        const std::string here = join(where, from);
        require_label(source, from, here);
        if (!row.is_object()) throw ParseError(here, "expected an object of label -> scalar");
        for (const auto& [to, c] : row.items()) {
            require_label(target, to, join(here, to));
            entries.emplace_back(from, to, scalar_from_json(c, join(here, to)));
        }
    }
    return entries;
}

unsigned order_from_json(const json& j, const std::string& where) {
    const json& n = require(j, "N", where);
    if (!n.is_number_integer() || n.get<long>() <= 0) throw ParseError(join(where, "N"), "N must be a positive integer");
    return n.get<unsigned>();
}

// "a,b" split so that both halves are known labels.
std::pair<std::string, std::string> split_pair(const std::string& key, const GradedSpace& left, const GradedSpace& right,
                                               const std::string& where) {
    for (std::size_t pos = key.find(','); pos != std::string::npos; pos = key.find(',', pos + 1)) {
        std::string a = key.substr(0, pos);
        std::string b = key.substr(pos + 1);
        if (left.contains(a) && right.contains(b)) return {std::move(a), std::move(b)};
    }
    throw ParseError(where, "\"" + key + "\" is not a pair \"a,b\" of known labels");
}

std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>>
bilinear_from_json(const json& j, const GradedSpace& left, const GradedSpace& right, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object of \"a,b\" -> combination");
    std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>> entries;
    for (const auto& [key, combination] : j.items()) {
        const std::string here = join(where, key);
        auto pair = split_pair(key, left, right, here);
        if (!combination.is_object()) throw ParseError(here, "expected an object of label -> scalar");
        for (const auto& [label, c] : combination.items()) {
            require_label(right, label, join(here, label));
            entries[pair][label] += scalar_from_json(c, join(here, label));
        }
    }
    return entries;
}

json space_to_json(const GradedSpace& space) {
    json out = json::object();
    for (const auto& [degree, labels] : space.components()) out[std::to_string(degree)] = labels;
    return out;
}

json entries_to_json(const GradedMap& f) {
    json out = json::object();
    for (const auto& [from, to, c] : f.entries()) out[from][to] = c.str();
    return out;
}

json bilinear_to_json(const std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>>& entries) {
    json out = json::object();
    for (const auto& [pair, combination] : entries)
        for (const auto& [label, c] : combination) out[pair.first + "," + pair.second][label] = c.str();
    return out;
}

} // namespace

ComplexData complex_data_from_json(const json& j, const std::string& where) {
    SpacePtr space = space_from_json(require(j, "degrees", where), join(where, "degrees"));
    const unsigned N = order_from_json(j, where);
    std::vector<GradedMap::Entry> entries;
    if (j.contains("d")) entries = entries_from_json(j.at("d"), *space, *space, join(where, "d"));
    // degree mismatches are structural (exit 1 in the CLI), not parse errors
    return {GradedMap::from_entries(space, space, 1, entries), N};
}

NComplex complex_from_json(const json& j, const std::string& where) {
    ComplexData data = complex_data_from_json(j, where);
    return NComplex(std::move(data.d), data.N);
}

NDga algebra_from_json(const json& j, const std::string& where) {
    ComplexData data = complex_data_from_json(j, where);
    const GradedSpace& space = *data.d.source();
    NDga::ProductSpec product;
    if (j.contains("product")) product = bilinear_from_json(j.at("product"), space, space, join(where, "product"));
    std::optional<std::string> unit;
    if (j.contains("unit")) {
        const json& u = j.at("unit");
        if (!u.is_string()) throw ParseError(join(where, "unit"), "unit must be a label");
        require_label(space, u.get<std::string>(), join(where, "unit"));
        unit = u.get<std::string>();
    }
    return NDga(std::move(data.d), data.N, product, unit);
}

Kdgm module_from_json(const json& j, const std::string& where) {
    NDga algebra = algebra_from_json(require(j, "algebra", where), join(where, "algebra"));
    ComplexData module = complex_data_from_json(require(j, "module", where), join(where, "module"));
    Kdgm::ActionSpec action;
    if (j.contains("action")) {
        action = bilinear_from_json(j.at("action"), *algebra.space(), *module.d.source(), join(where, "action"));
    }
    return Kdgm(std::move(algebra), std::move(module.d), module.N, action);
}

GradedMap map_from_json(const json& j, const SpacePtr& space, const std::string& where) {
    int degree = 1;
    if (j.contains("degree")) {
        if (!j.at("degree").is_number_integer()) throw ParseError(join(where, "degree"), "degree must be an integer");
        degree = j.at("degree").get<int>();
    }
    const auto entries = entries_from_json(require(j, "e", where), *space, *space, join(where, "e"));
    return GradedMap::from_entries(space, space, degree, entries);
}

LabelledGraph graph_from_json(const json& j, const std::string& where) {
    const json& edges = require(j, "edges", where);
    const std::string base = join(where, "edges");
    if (!edges.is_array()) throw ParseError(base, "expected an array of edges");
    std::vector<LabelledGraph::EdgeSpec> specs;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string here = base + "[" + std::to_string(k) + "]";
        const json& e = edges[k];
        const json& from = require(e, "from", here);
        const json& to = require(e, "to", here);
        if (!from.is_string() || !to.is_string()) throw ParseError(here, "edge endpoints must be strings");
        const Scalar weight = e.contains("weight") ? scalar_from_json(e.at("weight"), join(here, "weight")) : Scalar(1);
        specs.push_back({from.get<std::string>(), to.get<std::string>(), weight});
    }
    return LabelledGraph(std::move(specs));
}

json to_json(const NComplex& complex) {
    return {{"degrees", space_to_json(*complex.space())}, {"d", entries_to_json(complex.d())}, {"N", complex.order_bound()}};
}

json to_json(const NDga& algebra) {
    json out = {{"degrees", space_to_json(*algebra.space())},
                {"d", entries_to_json(algebra.d())},
                {"N", algebra.order_bound()},
                {"product", bilinear_to_json(algebra.product_spec())}};
    if (algebra.unit()) out["unit"] = *algebra.unit();
    return out;
}

json to_json(const Kdgm& module) {
    return {{"algebra", to_json(module.algebra())},
            {"module",
             {{"degrees", space_to_json(*module.space())}, {"d", entries_to_json(module.d())}, {"N", module.order_bound()}}},
            {"action", bilinear_to_json(module.action_spec())}};
}

json map_to_json(const GradedMap& f) { return {{"e", entries_to_json(f)}, {"degree", f.degree()}}; }

FixtureKind detect_kind(const json& j) {
    if (j.is_object() && j.contains("algebra")) return FixtureKind::module;
    if (j.is_object() && j.contains("product")) return FixtureKind::algebra;
    return FixtureKind::complex;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ":byte " + std::to_string(e.byte), "malformed JSON");
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names{"ej1",   "ej1-algebra",     "vtensor",
                                                "vtensor-algebra", "forms", "connection2form",
                                                "connection2form-e"};
    return names;
}

namespace {

// A = x2 dx1 on two variables, weight <= 3: dA = -dx1^dx2 != 0.
gallery::ConnectionFixture demo_connection() {
    return gallery::build_connection_fixture(2, 3, {{"x2*dx1", Scalar(1)}});
}

} // namespace

json gallery_json(const std::string& name) {
    if (name == "ej1") return to_json(gallery::build_ej1());
    if (name == "ej1-algebra") return to_json(gallery::build_ej1_algebra());
    if (name == "vtensor") return to_json(gallery::build_vtensor());
    if (name == "vtensor-algebra") return to_json(gallery::build_vtensor_algebra());
    if (name == "forms") return to_json(gallery::forms_algebra(2, 3));
    if (name == "connection2form") return to_json(demo_connection().module);
    if (name == "connection2form-e") return map_to_json(demo_connection().e);
    throw ArgumentError("unknown gallery fixture \"" + name + "\"");
}

} // namespace ndga::io
