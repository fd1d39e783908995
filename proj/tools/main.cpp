#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqm/canonical.hpp"
#include "eqm/census.hpp"
#include "eqm/certificate.hpp"
#include "eqm/classify.hpp"
#include "eqm/codec.hpp"
#include "eqm/decomposition.hpp"
#include "eqm/errors.hpp"
#include "eqm/families.hpp"

using namespace eqm;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 2;
constexpr int exit_census_failure = 3;

struct IoOptions {
    std::vector<std::string> inputs;  // file paths; empty or "-" means stdin
    std::string format = "graph6";
    bool json_out = false;
    int workers = 1;
    int guard = default_oracle_guard;
    bool force_oracle = false;
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool with_inputs = true) {
    if (with_inputs)
        cmd->add_option("inputs", io.inputs, "input files ('-' for stdin)");
    cmd->add_option("--format", io.format, "input format: graph6 | edges")
        ->check(CLI::IsMember({"graph6", "edges"}));
    cmd->add_flag("--json", io.json_out, "structured output");
    cmd->add_option("--workers", io.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--guard", io.guard,
                    "oracle guard (max n for enumeration-backed paths)");
    cmd->add_flag("--force-oracle", io.force_oracle,
                  "allow raising the oracle guard past the default");
}

// The guard protects against accidental exponential runs; raising it must be
// an explicit two-flag decision.
int resolve_guard(IoOptions& io) {
    if (io.guard > default_oracle_guard && !io.force_oracle) {
        std::cerr << "error: --guard " << io.guard << " exceeds the default "
                  << default_oracle_guard << "; pass --force-oracle to confirm\n";
        return -1;
    }
    if (io.force_oracle && io.guard == default_oracle_guard) io.guard = 1 << 20;
    if (io.force_oracle)
        std::cerr << "warning: oracle guard raised to " << io.guard
                  << "; enumeration may be exponential\n";
    return io.guard;
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One graph per graph6 line, or one graph per edge-list document.
std::vector<Graph> read_graphs(const IoOptions& io, std::string& error) {
    std::vector<std::string> texts;
    if (io.inputs.empty()) {
        texts.push_back(read_stream(std::cin));
    } else {
        for (const std::string& path : io.inputs) {
            if (path == "-") {
                texts.push_back(read_stream(std::cin));
                continue;
            }
            std::ifstream f(path);
            if (!f) {
                error = "cannot open " + path;
                return {};
            }
            texts.push_back(read_stream(f));
        }
    }
    std::vector<Graph> graphs;
    for (const std::string& text : texts) {
        if (io.format == "edges") {
            try {
                graphs.push_back(decode_edge_list(text));
            } catch (const parse_error& e) {
                error = e.what();
                return {};
            }
            continue;
        }
        std::istringstream lines(text);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(lines, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            try {
                graphs.push_back(decode_graph6(line));
            } catch (const parse_error& e) {
                error = "line " + std::to_string(line_no) + ": " + e.what();
                return {};
            }
        }
    }
    return graphs;
}

void emit_graph(const Graph& g, const std::string& format) {
    if (format == "edges")
        std::cout << encode_edge_list(g);
    else
        std::cout << encode_graph6(g) << "\n";
}

template <class F>
void parallel_for(std::size_t count, int workers, F&& f) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> threads;
    std::size_t chunk = count / workers + 1;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = std::min(count, w * chunk);
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) continue;
        threads.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : threads) t.join();
}

// ---------------------------------------------------------------------------
// classify / oracle

struct CheckResult {
    std::string name;
    bool ok = false;  // ran without error
    bool verdict = false;
    std::string error;
    std::optional<Certificate> certificate;
};

json result_to_json(const CheckResult& r) {
    json j;
    j["check"] = r.name;
    if (!r.ok) {
        j["error"] = r.error;
        return j;
    }
    j["verdict"] = r.verdict;
    if (r.certificate)
        j["certificate"] = json::parse(certificate_to_json(*r.certificate));
    return j;
}

int run_classify(const IoOptions& io_in, const std::vector<std::string>& which,
                 bool oracle_mode) {
    IoOptions io = io_in;
    int guard = resolve_guard(io);
    if (guard < 0) return exit_input_error;
    std::string error;
    std::vector<Graph> graphs = read_graphs(io, error);
    if (!error.empty()) {
        std::cerr << "error: " << error << "\n";
        return exit_input_error;
    }

    std::vector<std::vector<CheckResult>> rows(graphs.size());
    parallel_for(graphs.size(), io.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        for (const std::string& name : which) {
            CheckResult r;
            r.name = name;
            try {
                Classification c;
                if (name == "equimatchable")
                    c = oracle_mode ? is_equimatchable_oracle(g, guard)
                                    : is_equimatchable(g, guard);
                else if (name == "ese")
                    c = oracle_mode ? is_ese_oracle(g, guard) : is_ese(g, guard);
                else if (name == "vse")
                    c = oracle_mode ? is_vse_oracle(g, guard) : is_vse(g, guard);
                else if (name == "factor-critical")
                    c = classify_factor_critical(g);
                else if (name == "randomly-matchable")
                    c = classify_randomly_matchable(g);
                else
                    throw std::invalid_argument("unknown check '" + name + "'");
                r.ok = true;
                r.verdict = c.verdict;
                r.certificate = c.certificate;
            } catch (const std::exception& e) {
                r.ok = false;
                r.error = e.what();
            }
            rows[i].push_back(std::move(r));
        }
    });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        if (io.json_out) {
            json j;
            j["index"] = i + 1;
            j["n"] = g.order();
            j["m"] = g.edge_count();
            j["graph6"] = encode_graph6(g);
            j["results"] = json::array();
            for (const auto& r : rows[i]) j["results"].push_back(result_to_json(r));
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "#" << (i + 1) << " n=" << g.order()
                      << " m=" << g.edge_count();
            for (const auto& r : rows[i]) {
                std::cout << " " << r.name << "=";
                if (!r.ok)
                    std::cout << "error(" << r.error << ")";
                else
                    std::cout << (r.verdict ? "yes" : "no") << "["
                              << certificate_kind(*r.certificate) << "]";
            }
            std::cout << "\n";
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// decompose

int run_decompose(const IoOptions& io_in) {
    IoOptions io = io_in;
    int guard = resolve_guard(io);
    if (guard < 0) return exit_input_error;
    std::string error;
    std::vector<Graph> graphs = read_graphs(io, error);
    if (!error.empty()) {
        std::cerr << "error: " << error << "\n";
        return exit_input_error;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        GallaiEdmonds ge = gallai_edmonds(g);
        bool fc = is_factor_critical(g);
        auto parts = bipartition(g);
        std::vector<std::string> kinds(g.order(), "unknown");
        for (int v = 0; v < g.order(); ++v) {
            if (parts)
                kinds[v] = is_strong_bipartite(g, *parts, v) ? "strong" : "weak";
            else if (g.order() <= guard)
                kinds[v] = strong_weak_oracle(g, v, guard) == VertexKind::strong
                               ? "strong"
                               : "weak";
        }
        if (io.json_out) {
            json j;
            j["index"] = i + 1;
            j["graph6"] = encode_graph6(g);
            j["d"] = ge.d;
            j["a"] = ge.a;
            j["c"] = ge.c;
            j["factor_critical"] = fc;
            j["vertex_kinds"] = kinds;
            std::cout << j.dump() << "\n";
        } else {
            auto list = [](const std::vector<int>& vs) {
                std::string s = "{";
                for (std::size_t t = 0; t < vs.size(); ++t)
                    s += (t ? "," : "") + std::to_string(vs[t]);
                return s + "}";
            };
            std::cout << "#" << (i + 1) << " D=" << list(ge.d)
                      << " A=" << list(ge.a) << " C=" << list(ge.c)
                      << " factor-critical=" << (fc ? "yes" : "no") << " kinds=";
            for (int v = 0; v < g.order(); ++v)
                std::cout << (v ? "," : "") << kinds[v];
            std::cout << "\n";
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const std::string& family, int r, int k, int s, int a, int b, int n,
            std::uint64_t seed, const std::string& shape,
            const std::string& format) {
    std::vector<Graph> out;
    try {
        if (family == "g1") {
            out.push_back(gen_g1(r, k));
        } else if (family == "g2") {
            if (shape == "triangle")
                out.push_back(gen_g2(r, G2Shape::triangle()));
            else if (shape.rfind("star:", 0) == 0)
                out.push_back(gen_g2(r, G2Shape::star(std::stoi(shape.substr(5)))));
            else
                throw std::invalid_argument("gen g2: --shape star:K or triangle");
        } else if (family == "bip") {
            out.push_back(gen_bipartite_ese(r, s, seed));
        } else if (family == "catalog") {
            out = small_catalog();
        } else if (family == "fig-degree3") {
            out.push_back(fig_degree3_example());
        } else if (family == "complete") {
            out.push_back(complete_graph(n));
        } else if (family == "complete-bipartite") {
            out.push_back(complete_bipartite_graph(a, b));
        } else if (family == "cycle") {
            out.push_back(cycle_graph(n));
        } else if (family == "path") {
            out.push_back(path_graph(n));
        } else {
            throw std::invalid_argument("unknown family '" + family + "'");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    for (const Graph& g : out) emit_graph(g, format);
    return exit_ok;
}

// ---------------------------------------------------------------------------
// census

int run_census(IoOptions& io, int n, const std::string& scope,
               const std::string& mode, const std::string& checks_csv,
               const std::string& input_path) {
    int guard = resolve_guard(io);
    if (guard < 0) return exit_input_error;

    std::vector<Graph> stream;
    bool have_stream = !input_path.empty();
    if (have_stream) {
        IoOptions stream_io = io;
        stream_io.inputs = {input_path};
        std::string error;
        stream = read_graphs(stream_io, error);
        if (!error.empty()) {
            std::cerr << "error: " << error << "\n";
            return exit_input_error;
        }
    }

    CensusReport report;
    try {
        if (mode == "fc-ese") {
            report = have_stream ? census_fc_ese_stream(stream)
                                 : census_fc_ese(n, io.workers);
        } else {
            if (!have_stream) {
                if (n < 0) {
                    std::cerr << "error: census needs --n or --input\n";
                    return exit_input_error;
                }
                stream = enumerate_graphs(n, scope == "connected", io.workers);
            }
            if (mode == "cross-validate") {
                std::vector<CheckKind> checks;
                std::stringstream ss(checks_csv);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item == "equimatchable")
                        checks.push_back(CheckKind::equimatchable);
                    else if (item == "ese")
                        checks.push_back(CheckKind::ese);
                    else if (item == "vse")
                        checks.push_back(CheckKind::vse);
                    else {
                        std::cerr << "error: unknown check '" << item << "'\n";
                        return exit_input_error;
                    }
                }
                report = cross_validate(stream, checks, guard, io.workers);
            } else {
                report = verify_properties(stream, guard, io.workers);
            }
            report.n = n;
            report.scope = have_stream ? "stream" : scope;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    if (io.force_oracle)
        report.notes.push_back("oracle guard raised to " + std::to_string(guard));

    if (io.json_out)
        std::cout << census_report_to_json(report, true) << "\n";
    else
        std::cout << census_report_human(report);
    return report.clean() ? exit_ok : exit_census_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "equimatch: recognize equimatchable, edge-stable (ESE) and "
        "vertex-stable (VSE) equimatchable graphs, with certificates, "
        "generators, and an exhaustive census"};
    app.require_subcommand(1);

    IoOptions classify_io;
    std::vector<std::string> which{"equimatchable", "ese", "vse"};
    CLI::App* classify = app.add_subcommand("classify", "structural recognizers");
    add_io_options(classify, classify_io);
    classify
        ->add_option("--which", which,
                     "checks: equimatchable ese vse factor-critical "
                     "randomly-matchable")
        ->delimiter(',');

    IoOptions oracle_io;
    std::vector<std::string> oracle_which{"equimatchable", "ese", "vse"};
    CLI::App* oracle =
        app.add_subcommand("oracle", "brute-force enumeration oracles");
    add_io_options(oracle, oracle_io);
    oracle->add_option("--which", oracle_which, "checks: equimatchable ese vse")
        ->delimiter(',');

    IoOptions dec_io;
    CLI::App* dec = app.add_subcommand(
        "decompose", "Gallai-Edmonds partition and strong/weak vertices");
    add_io_options(dec, dec_io);

    std::string family, shape = "triangle", gen_format = "graph6";
    int r = 3, k = 1, s = 4, a = 1, b = 1, n_gen = 1;
    std::uint64_t seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "family generators");
    gen->add_option("family", family,
                    "g1 | g2 | bip | catalog | fig-degree3 | complete | "
                    "complete-bipartite | cycle | path")
        ->required();
    gen->add_option("--r", r, "family parameter r");
    gen->add_option("--k", k, "removed matching size (g1)");
    gen->add_option("--s", s, "large side size (bip)");
    gen->add_option("--seed", seed, "seed (bip)");
    gen->add_option("--shape", shape, "g2 shape: star:K | triangle");
    gen->add_option("--a", a, "small side (complete-bipartite)");
    gen->add_option("--b", b, "large side (complete-bipartite)");
    gen->add_option("--n", n_gen, "order (complete, cycle, path)");
    gen->add_option("--format", gen_format, "output format: graph6 | edges")
        ->check(CLI::IsMember({"graph6", "edges"}));

    IoOptions census_io;
    int census_n = -1;
    std::string scope = "connected", mode = "fc-ese", checks_csv = "ese";
    std::string census_input;
    CLI::App* census = app.add_subcommand(
        "census", "exhaustive counts, cross-validation, property checks");
    add_io_options(census, census_io, false);
    census->add_option("--n", census_n, "graph order for the built-in scan");
    census->add_option("--scope", scope, "all | connected")
        ->check(CLI::IsMember({"all", "connected"}));
    census->add_option("--mode", mode, "fc-ese | cross-validate | properties")
        ->check(CLI::IsMember({"fc-ese", "cross-validate", "properties"}));
    census->add_option("--checks", checks_csv,
                       "comma list for cross-validate (equimatchable,ese,vse)");
    census->add_option("--input", census_input,
                       "external graph6 stream instead of the built-in scan");

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) return run_classify(classify_io, which, false);
    if (oracle->parsed()) return run_classify(oracle_io, oracle_which, true);
    if (dec->parsed()) return run_decompose(dec_io);
    if (gen->parsed())
        return run_gen(family, r, k, s, a, b, n_gen, seed, shape, gen_format);
    if (census->parsed())
        return run_census(census_io, census_n, scope, mode, checks_csv,
                          census_input);
    return exit_ok;
}
