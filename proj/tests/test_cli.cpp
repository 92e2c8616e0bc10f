#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "ndga/fixture_io.hpp"

namespace fs = std::filesystem;
using ndga::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("ndga_cli_test_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const json& j) const {
        std::ofstream(path(name)) << ndga::io::dump(j);
        return path(name);
    }

    std::string gallery(const std::string& name) const {
        const std::string p = path(name + ".json");
        REQUIRE(run({"export-gallery", name, "--output", p}).code == 0);
        return p;
    }

private:
    fs::path dir_;
};

} // namespace

TEST_CASE("verify") {
    Workspace ws;
    const std::string ej1 = ws.gallery("ej1");
    const Run good = run({"verify", ej1});
    CHECK(good.code == 0);
    CHECK(good.out == "ok: proper 3-complex, dimension 3 (deg 0: 1, deg 1: 1, deg 2: 1)\n");

    json j = ndga::io::read_json_file(ej1);
    j["N"] = 2;
    const Run nil = run({"verify", ws.write("n2.json", j)});
    CHECK(nil.code == 1);
    CHECK(nil.out.find("FAIL nilpotency: d^2 != 0 on e1") != std::string::npos);

    j = ndga::io::read_json_file(ej1);
    j["d"]["e1"] = json::object({{"e3", "1"}});
    const Run structure = run({"verify", ws.write("bad.json", j)});
    CHECK(structure.code == 1);
    CHECK(structure.out.find("e1 -> e3") != std::string::npos);

    json alg = ndga::io::read_json_file(ws.gallery("vtensor-algebra"));
    alg["product"]["e2<-e1,e1<-e1"] = json::object({{"e2<-e1", "3/2"}});
    const Run assoc = run({"verify", ws.write("assoc.json", alg)});
    CHECK(assoc.code == 1);
    CHECK(assoc.out.find("FAIL associativity") != std::string::npos);
    CHECK(assoc.out.find("e2<-e1") != std::string::npos);

    const Run module = run({"verify", ws.gallery("connection2form")});
    CHECK(module.code == 0);
    CHECK(module.out.find("ok: algebra: proper 2-dga") != std::string::npos);
    CHECK(module.out.find("ok: module: proper 2-dgm") != std::string::npos);

    CHECK(run({"verify", ws.path("missing.json")}).code == 2);
    std::ofstream(ws.path("broken.json")) << "{\"degrees\": [";
    CHECK(run({"verify", ws.path("broken.json")}).code == 2);
    j = ndga::io::read_json_file(ej1);
    j["d"]["e1"]["e2"] = "1/0";
    const Run located = run({"verify", ws.write("located.json", j)});
    CHECK(located.code == 2);
    CHECK(located.err.find("d.e1.e2") != std::string::npos);
}

TEST_CASE("cohomology") {
    Workspace ws;
    const std::string ej1 = ws.gallery("ej1");
    const Run all = run({"cohomology", ej1, "--all"});
    CHECK(all.code == 0);
    for (const auto& line : lines(all.out)) CHECK(line.substr(line.size() - 3) == " 0)");
    CHECK(run({"cohomology", ej1, "--p", "1", "--i", "1"}).out == "(1, 1, 0)\n");
    CHECK(run({"cohomology", ej1, "--p", "3", "--i", "0"}).code == 2);
    CHECK(run({"cohomology", ej1, "--p", "0", "--i", "0"}).code == 2);

    const json zero = json::parse(R"({"degrees": {"0": ["a", "b"], "1": ["c"]}, "d": {}, "N": 2})");
    const Run z = run({"cohomology", ws.write("zero.json", zero), "--all"});
    CHECK(z.code == 0);
    CHECK(z.out == "(1, 0, 2)\n(1, 1, 1)\n");

    const Run js = run({"cohomology", ej1, "--p", "1", "--i", "0", "--format", "json"});
    CHECK(js.code == 0);
    CHECK(json::parse(js.out).is_object());
}

TEST_CASE("mc") {
    Workspace ws;
    CHECK(run({"mc", "--N", "2", "--M", "2", "--coeffs"}).out ==
          "s=()  c=1  dpow=2\ns=(1)  c=1  dpow=0\ns=(0,0)  c=1  dpow=0\n");
    CHECK(run({"mc", "--N", "1", "--M", "1", "--coeffs"}).out == "s=()  c=1  dpow=1\ns=(0)  c=1  dpow=0\n");

    const Run oracle = run({"mc", "--N", "8", "--M", "8", "--oracle"});
    CHECK(oracle.code == 0);
    const auto rows = lines(oracle.out);
    CHECK(rows.size() == 256);
    for (const auto& row : rows) CHECK(row.substr(row.size() - 5) == "MATCH");

    const std::string c = ws.gallery("connection2form");
    const std::string e = ws.gallery("connection2form-e");
    const Run curved = run({"mc", "--N", "2", "--M", "2", "--residual", c, "--e", e});
    CHECK(curved.code == 1);
    CHECK(lines(curved.out).front() == "residual (M=2, N=2): 3 nonzero entries, max |entry| = 1");
    CHECK(curved.out.find("dx1^dx2 <- 1 : -1") != std::string::npos);
    const Run flat = run({"mc", "--N", "3", "--M", "2", "--residual", c, "--e", e});
    CHECK(flat.code == 0);
    CHECK(flat.out == "residual (M=2, N=3): 0 nonzero entries, max |entry| = 0\n");

    const std::string ej1 = ws.gallery("ej1");
    const std::string e0 = ws.write("e0.json", json::parse(R"({"e": {"e1": {"e2": "1"}}})"));
    CHECK(run({"mc", "--N", "3", "--M", "2", "--residual", ej1, "--e", e0}).code == 2); // d^2 != 0
    CHECK(run({"mc", "--N", "1", "--M", "2", "--coeffs"}).code == 2);
    CHECK(run({"mc", "--N", "2", "--M", "2"}).code == 2);
    CHECK(run({"mc", "--N", "2", "--M", "2", "--coeffs", "--oracle"}).code == 2);
}

TEST_CASE("cs") {
    CHECK(run({"cs", "1"}).out == "1 * a·da + 2/3 * a·a·a\n");
    CHECK(run({"cs", "2"}).out == "4/3 * a·da·da + 2 * a·a·a·da + 4/5 * a·a·a·a·a\n");
    const Run v = run({"cs", "3", "--variational"});
    CHECK(v.code == 0);
    CHECK(v.out.find("variational: true") != std::string::npos);
    const json j = json::parse(run({"cs", "1", "--format", "json"}).out);
    CHECK(j["K"] == 1);
    CHECK(j["text"] == "1 * a·da + 2/3 * a·a·a");
    CHECK(j["terms"].size() == 2);
    CHECK(run({"cs", "0"}).code == 2);
    CHECK(run({"cs", "7"}).code == 2);
}

TEST_CASE("kernel") {
    Workspace ws;
    CHECK(run({"kernel", "--builtin", "L", "--n", "2", "--from", "()", "--to", "(0)"}).out == "(0) <- () : 0\n");
    CHECK(run({"kernel", "--builtin", "L", "--n", "2", "--from", "()", "--to", "(1)"}).out == "(1) <- () : 1\n");
    CHECK(run({"kernel", "--builtin", "L", "--n", "0", "--from", "()", "--to", "()"}).out == "() <- () : 1\n");
    CHECK(run({"kernel", "--builtin", "L", "--n", "2", "--from", "()", "--to", "(9"}).code == 2);

    const std::string g = ws.write("g.json", json::parse(R"({"edges": [{"from": "x", "to": "y", "weight": "-3/4"}]})"));
    CHECK(run({"kernel", "--graph", g, "--n", "1", "--from", "x", "--to", "y"}).out == "y <- x : -3/4\n");
    CHECK(run({"kernel", "--graph", g, "--n", "0", "--from", "x", "--to", "x"}).out == "x <- x : 1\n");
    CHECK(run({"kernel", "--graph", g, "--n", "1", "--from", "x", "--to", "z"}).code == 2);
    const Run row = run({"kernel", "--graph", g, "--n", "1", "--from", "x"});
    CHECK(row.code == 0);
    CHECK(row.out == "y <- x : -3/4\n");
}

TEST_CASE("tensor and export") {
    Workspace ws;
    const std::string ej1 = ws.gallery("ej1");
    const std::string out = ws.path("t.json");
    CHECK(run({"tensor", ej1, ej1, "--output", out}).code == 0);
    CHECK(run({"verify", out}).out == "ok: proper 5-complex, dimension 9 (deg 0: 1, deg 1: 2, deg 2: 3, deg 3: 2, deg 4: 1)\n");

    const std::string alg = ws.gallery("ej1-algebra");
    const Run product = run({"tensor", alg, alg});
    CHECK(product.code == 0);
    CHECK(json::parse(product.out).contains("product"));
    CHECK(run({"tensor", ws.gallery("connection2form"), ej1}).code == 2);

    CHECK(run({"export-gallery", "nope"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("commands are deterministic and exports round-trip") {
    Workspace ws;
    for (const auto& name : ndga::io::gallery_names()) {
        if (name == "connection2form-e") continue;
        const std::string first = ws.gallery(name);
        const Run a = run({"verify", first});
        const json reread = ndga::io::read_json_file(first);
        const Run b = run({"verify", ws.write("again-" + name + ".json", reread)});
        CHECK_MESSAGE(a.out == b.out, name);
        CHECK(a.code == 0);
        CHECK(run({"export-gallery", name}).out == ndga::io::dump(reread));
    }
    CHECK(run({"mc", "--N", "6", "--M", "3", "--coeffs"}).out == run({"mc", "--N", "6", "--M", "3", "--coeffs"}).out);
}
