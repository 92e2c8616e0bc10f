#ifndef NDGA_FIXTURE_IO_HPP
#define NDGA_FIXTURE_IO_HPP

#include <string>
#include <variant>

#include "json.hpp"

#include "ndga/dqm.hpp"
#include "ndga/ncomplex.hpp"
#include "ndga/ndga.hpp"

namespace ndga::io {

using nlohmann::json;

// Fixture files. Every scalar is a string "p/q" or "p"; absent entries are zero.
//
//   complex: {"degrees": {"0": ["e1"], ...}, "d": {"e1": {"e2": "1"}}, "N": 3}
//   algebra: the complex keys plus "product": {"a,b": {"c": "1"}} and "unit": "1"
//   module:  {"algebra": <algebra>, "module": <complex>, "action": {"a,m": {"m'": "1"}}}
//   e-file:  {"e": {"x": {"y": "1"}}, "degree": 1}     ("degree" defaults to 1)
//   graph:   {"edges": [{"from": "v1", "to": "v2", "weight": "-1"}]}
//
// Parse problems throw ParseError whose where() is a path like "d.e1.e2".

/// Space and differential only; the nilpotency bound is not checked here.
struct ComplexData {
    GradedMap d;
    unsigned N = 1;
};

ComplexData complex_data_from_json(const json& j, const std::string& where = "");

/// Throws StructuralError when d^N != 0.
NComplex complex_from_json(const json& j, const std::string& where = "");
NDga algebra_from_json(const json& j, const std::string& where = "");
Kdgm module_from_json(const json& j, const std::string& where = "");

/// Degree-1 (or the stated degree) endomorphism of `space`.
GradedMap map_from_json(const json& j, const SpacePtr& space, const std::string& where = "");
LabelledGraph graph_from_json(const json& j, const std::string& where = "");

json to_json(const NComplex& complex);
json to_json(const NDga& algebra);
json to_json(const Kdgm& module);
json map_to_json(const GradedMap& f); // e-file layout

enum class FixtureKind { complex, algebra, module };
/// "algebra" key: module; "product" key: algebra; otherwise a complex.
FixtureKind detect_kind(const json& j);

/// Reads and parses a JSON file; a missing file or malformed JSON is a ParseError.
json read_json_file(const std::string& path);

/// Stable text form: two-space indent, trailing newline.
std::string dump(const json& j);

/// Gallery fixtures as JSON, by name (see gallery_names).
json gallery_json(const std::string& name);
const std::vector<std::string>& gallery_names();

} // namespace ndga::io

#endif // NDGA_FIXTURE_IO_HPP
