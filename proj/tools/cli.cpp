#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ndga/dqm.hpp"
#include "ndga/errors.hpp"
#include "ndga/fixture_io.hpp"
#include "ndga/freealg.hpp"
#include "ndga/mc.hpp"
#include "ndga/multi_index.hpp"
#include "ndga/ncomplex.hpp"
#include "ndga/ndga.hpp"

namespace ndga::cli {

namespace {

using io::json;

class UsageError : public Error {
public:
    using Error::Error;
};

constexpr unsigned kMaxListingN = 12;
constexpr unsigned kMaxK = 6;

std::string properness(unsigned order, unsigned bound, const char* noun) {
    std::ostringstream os;
    if (order == bound) os << "proper " << bound << "-" << noun;
    else os << bound << "-" << noun << " (not proper: already d^" << order << " = 0)";
    return os.str();
}

std::string dimension_summary(const GradedSpace& space) {
    std::ostringstream os;
    os << "dimension " << space.total_dim();
    if (!space.degrees().empty()) {
        os << " (";
        bool first = true;
        for (int degree : space.degrees()) {
            os << (first ? "" : ", ") << "deg " << degree << ": " << space.dim(degree);
            first = false;
        }
        os << ")";
    }
    return os.str();
}

int report_failures(const AxiomReport& report, const std::string& prefix, std::ostream& out) {
    std::istringstream lines(report.str());
    for (std::string line; std::getline(lines, line);) out << "FAIL " << prefix << line << "\n";
    return report.ok() ? ok : math_failure;
}

int verify_complex_json(const json& j, std::ostream& out) {
    io::ComplexData data = io::complex_data_from_json(j);
    const auto violations = nilpotency_violations(data.d, data.N);
    if (!violations.empty()) {
        out << "FAIL nilpotency: d^" << data.N << " != 0 on";
        for (const auto& label : violations) out << " " << label;
        out << "\n";
        return math_failure;
    }
    const unsigned order = *nilpotency_order(data.d, data.N);
    out << "ok: " << properness(order, data.N, "complex") << ", " << dimension_summary(*data.d.source()) << "\n";
    return ok;
}

int verify_algebra(const NDga& A, std::ostream& out, const std::string& prefix) {
    const AxiomReport report = verify_ndga(A);
    if (!report.ok()) return report_failures(report, prefix, out);
    const unsigned order = *nilpotency_order(A.d(), A.order_bound());
    out << "ok: " << prefix << properness(order, A.order_bound(), "dga") << ", " << dimension_summary(*A.space()) << "\n";
    return ok;
}

int cmd_verify(const std::string& path, std::ostream& out) {
    const json j = io::read_json_file(path);
    switch (io::detect_kind(j)) {
    case io::FixtureKind::complex: return verify_complex_json(j, out);
    case io::FixtureKind::algebra: return verify_algebra(io::algebra_from_json(j), out, "");
    case io::FixtureKind::module: {
        const Kdgm M = io::module_from_json(j);
        int code = verify_algebra(M.algebra(), out, "algebra: ");
        const AxiomReport report = verify_kdgm(M);
        if (!report.ok()) return report_failures(report, "module: ", out);
        if (code != ok) return code;
        const unsigned order = *nilpotency_order(M.d(), M.order_bound());
        out << "ok: module: " << properness(order, M.order_bound(), "dgm") << ", " << dimension_summary(*M.space())
            << "\n";
        return ok;
    }
    }
    return ok;
}

// The underlying complex of any fixture kind (for a module, its own complex).
NComplex load_complex(const std::string& path) {
    const json j = io::read_json_file(path);
    switch (io::detect_kind(j)) {
    case io::FixtureKind::complex: return io::complex_from_json(j);
    case io::FixtureKind::algebra: return io::algebra_from_json(j).complex();
    case io::FixtureKind::module: {
        const Kdgm M = io::module_from_json(j);
        return NComplex(M.d(), M.order_bound());
    }
    }
    throw UsageError("unrecognized fixture");
}

struct CohomologyArgs {
    std::string path;
    std::optional<unsigned> p;
    std::optional<int> i;
    bool all = false;
    std::string format = "text";
};

int cmd_cohomology(const CohomologyArgs& a, std::ostream& out) {
    if (!a.all && (!a.p || !a.i)) throw UsageError("give --p and --i, or --all");
    if (a.p && *a.p == 0) throw UsageError("p must be at least 1");
    const NComplex C = load_complex(a.path);
    const unsigned N = C.order_bound();
    if (a.p && *a.p >= N) throw UsageError("p must satisfy 1 <= p < N = " + std::to_string(N));

    std::vector<Cohomology> rows;
    if (a.all) {
        for (unsigned p = 1; p < N; ++p) {
            if (a.p && p != *a.p) continue;
            for (int degree : C.space()->degrees()) {
                if (a.i && degree != *a.i) continue;
                rows.push_back(cohomology(C, p, degree));
            }
        }
    } else {
        rows.push_back(cohomology(C, *a.p, *a.i));
    }

    if (a.format == "json") {
        json table = json::array();
        for (const auto& h : rows) table.push_back({{"p", h.p}, {"i", h.degree}, {"dim", h.dimension}});
        out << io::dump({{"N", N}, {"cohomology", table}});
    } else {
        for (const auto& h : rows) out << "(" << h.p << ", " << h.degree << ", " << h.dimension << ")\n";
    }
    return ok;
}

struct McArgs {
    std::optional<unsigned> N;
    std::optional<unsigned> M;
    bool coeffs = false;
    bool oracle = false;
    std::string residual;
    std::string e_file;
    std::string format = "text";
};

std::string term_line(const MultiIndex& s, const Scalar& c, unsigned dpow) {
    return "s=" + s.str() + "  c=" + c.str() + "  dpow=" + std::to_string(dpow);
}

int cmd_mc(const McArgs& a, std::ostream& out) {
    const int modes = int(a.coeffs) + int(a.oracle) + int(!a.residual.empty());
    if (modes != 1) throw UsageError("choose exactly one of --coeffs, --oracle, --residual");
    if (!a.N) throw UsageError("--N is required");
    const unsigned N = *a.N;
    if (a.M && (*a.M == 0 || *a.M > N)) throw UsageError("need N >= M >= 1");
    if (N == 0) throw UsageError("N must be at least 1");
    if ((a.coeffs || a.oracle) && N > kMaxListingN) {
        throw UsageError("N is limited to " + std::to_string(kMaxListingN) + " for listings");
    }

    if (a.coeffs) {
        const auto terms = mc_terms(N, a.M);
        if (a.format == "json") {
            json list = json::array();
            for (const auto& t : terms) list.push_back({{"s", t.s.str()}, {"c", t.coefficient.str()}, {"dpow", t.d_power}});
            out << io::dump({{"N", N}, {"terms", list}});
        } else {
            for (const auto& t : terms) out << term_line(t.s, t.coefficient, t.d_power) << "\n";
        }
        return ok;
    }

    if (a.oracle) {
        bool all_match = true;
        for (const auto& s : enumerate_EN(N)) {
            if (a.M && !s.all_below(*a.M)) continue;
            const Scalar c = c_coeff(s, N);
            const Scalar w = c_oracle(s, N);
            const bool match = c == w;
            all_match = all_match && match;
            out << "s=" << s.str() << "  c=" << c.str() << "  oracle=" << w.str() << "  " << (match ? "MATCH" : "MISMATCH")
                << "\n";
        }
        return all_match ? ok : invariant_breach;
    }

    if (a.e_file.empty()) throw UsageError("--residual needs --e <file>");
    const NComplex C = load_complex(a.residual);
    const GradedMap e = io::map_from_json(io::read_json_file(a.e_file), C.space());
    const unsigned M = a.M.value_or(C.order_bound());
    if (M > N) throw UsageError("need N >= M >= 1");
    const GradedMap r = mc_residual(C.d(), e, M, N);
    const auto entries = r.entries();
    Scalar largest;
    for (const auto& [from, to, c] : entries) largest = std::max(largest, c.abs());
    out << "residual (M=" << M << ", N=" << N << "): " << entries.size() << " nonzero entries, max |entry| = "
        << largest.str() << "\n";
    for (const auto& [from, to, c] : entries) out << "  " << to << " <- " << from << " : " << c.str() << "\n";
    return entries.empty() ? ok : math_failure;
}

struct CsArgs {
    unsigned K = 0;
    bool variational = false;
    std::string format = "text";
};

int cmd_cs(const CsArgs& a, std::ostream& out) {
    if (a.K == 0 || a.K > kMaxK) throw UsageError("K must satisfy 1 <= K <= " + std::to_string(kMaxK));
    const auto functional = freealg::cs_functional(a.K);
    std::optional<bool> variational;
    if (a.variational) variational = freealg::variational_check(a.K);
    if (a.format == "json") {
        json doc = {{"K", a.K}, {"text", freealg::format_functional(functional)},
                    {"terms", freealg::functional_to_json(functional)["terms"]}};
        if (variational) doc["variational"] = *variational;
        out << io::dump(doc);
    } else {
        out << freealg::format_functional(functional) << "\n";
        if (variational) out << "variational: " << (*variational ? "true" : "false") << "\n";
    }
    return variational.value_or(true) ? ok : math_failure;
}

struct KernelArgs {
    std::string builtin;
    std::string graph;
    std::optional<unsigned> n;
    std::string from;
    std::optional<std::string> to;
};

template <class Vertex, class Show>
void print_row(const std::map<Vertex, Scalar>& row, const Vertex& x, const std::optional<Vertex>& y, Show show,
               std::ostream& out) {
    if (y) {
        auto it = row.find(*y);
        out << show(*y) << " <- " << show(x) << " : " << (it == row.end() ? Scalar(0) : it->second).str() << "\n";
        return;
    }
    for (const auto& [v, c] : row) out << show(v) << " <- " << show(x) << " : " << c.str() << "\n";
}

int cmd_kernel(const KernelArgs& a, std::ostream& out) {
    if (a.builtin.empty() == a.graph.empty()) throw UsageError("choose one of --builtin L or --graph <file>");
    if (!a.n) throw UsageError("--n is required");
    if (!a.builtin.empty()) {
        if (a.builtin != "L") throw UsageError("the only built-in graph is L");
        const MultiIndex x = MultiIndex::parse(a.from.empty() ? "()" : a.from);
        std::optional<MultiIndex> y;
        if (a.to) y = MultiIndex::parse(*a.to);
        print_row(kernel_row(graph_L(), *a.n, x), x, y, [](const MultiIndex& s) { return s.str(); }, out);
        return ok;
    }
    const LabelledGraph G = io::graph_from_json(io::read_json_file(a.graph));
    if (a.from.empty()) throw UsageError("--from is required for a graph file");
    if (!G.has_vertex(a.from)) throw UsageError("unknown vertex \"" + a.from + "\"");
    if (a.to && !G.has_vertex(*a.to)) throw UsageError("unknown vertex \"" + *a.to + "\"");
    print_row(kernel_row(G.digraph(), *a.n, a.from), a.from, a.to, [](const std::string& s) { return s; }, out);
    return ok;
}

void emit(const json& doc, const std::string& output, std::ostream& out) {
    if (output.empty()) {
        out << io::dump(doc);
        return;
    }
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write " + output);
    file << io::dump(doc);
}

int cmd_tensor(const std::string& left, const std::string& right, const std::string& output, std::ostream& out) {
    const json a = io::read_json_file(left);
    const json b = io::read_json_file(right);
    const auto ka = io::detect_kind(a);
    const auto kb = io::detect_kind(b);
    if (ka == io::FixtureKind::module || kb == io::FixtureKind::module) {
        throw UsageError("tensor accepts complexes or algebras, not modules");
    }
    if (ka == io::FixtureKind::algebra && kb == io::FixtureKind::algebra) {
        emit(io::to_json(tensor_dga(io::algebra_from_json(a), io::algebra_from_json(b))), output, out);
    } else {
        emit(io::to_json(tensor_complex(load_complex(left), load_complex(right))), output, out);
    }
    return ok;
}

int cmd_export(const std::string& name, const std::string& output, std::ostream& out) {
    const auto& names = io::gallery_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string known;
        for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
        throw UsageError("unknown gallery fixture \"" + name + "\" (known: " + known + ")");
    }
    emit(io::gallery_json(name), output, out);
    return ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with N-complexes and N-differential graded algebras", "ndga"};
    app.require_subcommand(1);

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Check the axioms of a complex, algebra or module fixture");
    verify->add_option("fixture", verify_path, "fixture JSON file")->required();

    CohomologyArgs coh;
    auto* cohom = app.add_subcommand("cohomology", "Dimensions of ker d^p / im d^(N-p)");
    cohom->add_option("fixture", coh.path, "fixture JSON file")->required();
    cohom->add_option("--p", coh.p, "closedness order p, 1 <= p < N");
    cohom->add_option("--i", coh.i, "degree");
    cohom->add_flag("--all", coh.all, "sweep every p and every nonzero degree");
    cohom->add_option("--format", coh.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    McArgs mc;
    auto* mcc = app.add_subcommand("mc", "Coefficients c(s,N), their path-sum oracle, and residuals");
    mcc->add_option("--N", mc.N, "power N");
    mcc->add_option("--M", mc.M, "keep only s with every entry below M");
    mcc->add_flag("--coeffs", mc.coeffs, "list nonzero coefficients");
    mcc->add_flag("--oracle", mc.oracle, "compare the recurrence with graph path sums");
    mcc->add_option("--residual", mc.residual, "fixture whose differential is perturbed");
    mcc->add_option("--e", mc.e_file, "perturbation file");
    mcc->add_option("--format", mc.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CsArgs cs;
    auto* csc = app.add_subcommand("cs", "Chern-Simons type functional as cyclic words");
    csc->add_option("K", cs.K, "K >= 1")->required();
    csc->add_flag("--variational", cs.variational, "check the first variation");
    csc->add_option("--format", cs.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    KernelArgs ker;
    auto* kern = app.add_subcommand("kernel", "Path-sum kernel of a weighted graph");
    kern->add_option("--builtin", ker.builtin, "built-in graph (L)");
    kern->add_option("--graph", ker.graph, "graph JSON file");
    kern->add_option("--n", ker.n, "path length");
    kern->add_option("--from", ker.from, "start vertex (multi-index like (1,0) for L)");
    kern->add_option("--to", ker.to, "end vertex; omit to list every reachable one");

    std::string tensor_left, tensor_right, tensor_output;
    auto* tens = app.add_subcommand("tensor", "Tensor product of two fixtures");
    tens->add_option("left", tensor_left, "first fixture")->required();
    tens->add_option("right", tensor_right, "second fixture")->required();
    tens->add_option("--output", tensor_output, "write here instead of standard output");

    std::string export_name, export_output;
    auto* exp = app.add_subcommand("export-gallery", "Write a built-in fixture as JSON");
    exp->add_option("name", export_name, "fixture name")->required();
    exp->add_option("--output", export_output, "write here instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (*verify) return cmd_verify(verify_path, out);
        if (*cohom) return cmd_cohomology(coh, out);
        if (*mcc) return cmd_mc(mc, out);
        if (*csc) return cmd_cs(cs, out);
        if (*kern) return cmd_kernel(ker, out);
        if (*tens) return cmd_tensor(tensor_left, tensor_right, tensor_output, out);
        if (*exp) return cmd_export(export_name, export_output, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return input_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return input_error;
    } catch (const ArgumentError& e) {
        err << "argument error: " << e.what() << "\n";
        return input_error;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return input_error;
    } catch (const StructuralError& e) {
        out << "FAIL structure: " << e.what() << "\n";
        return math_failure;
    }
    return input_error;
}

} // namespace ndga::cli
