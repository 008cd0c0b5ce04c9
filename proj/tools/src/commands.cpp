#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <span>
#include <sstream>
#include <thread>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"

#include "mtg/chain_certificate.hpp"
#include "mtg/constructions.hpp"
#include "mtg/graph_io.hpp"
#include "mtg/representation.hpp"
#include "mtg/solver.hpp"

namespace mtg::cli {

namespace {

constexpr int kDecimalDigits = 6;

using Logger = std::shared_ptr<spdlog::logger>;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    Logger log;
};

struct ConstructArgs {
    std::string kind;
    int n = 0;
    std::string out = "-";
    bool decimal = false;
};

struct VerifyArgs {
    std::string graph;
    std::string rep;
    std::string format = "edges";
    bool decimal = false;
    bool verbose = false;
};

struct ThetaArgs {
    std::string graph;
    std::string format = "edges";
    int k_max = 5;
    std::string emit;
    int jobs = 1;
    bool decimal = false;
};

struct RefuteArgs {
    std::string kind;
    int n = 0;
    int k = 0;
    std::string style;
    std::string out;
    int jobs = 1;
};

Logger make_logger(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto log = std::make_shared<spdlog::logger>("mtg", std::move(sink));
    log->set_pattern("[%l] %v");
    log->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("MTG_LOG"); env != nullptr && *env != '\0') {
        const std::string name(env);
        const auto level = spdlog::level::from_str(name);
        if (level == spdlog::level::off && name != "off") {
            log->warn("MTG_LOG='{}' is not a level (trace, debug, info, warn, error, critical, off)", name);
        } else {
            log->set_level(level);
        }
    }
    return log;
}

std::string read_file(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) throw UsageError("cannot write '" + path + "'");
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
    const auto text = read_file(path);
    if (format == "edges") return {graph_from_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())) != 0) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(graph_from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (out.empty()) throw ParseError(0, "no graph6 lines in '" + path + "'");
    return out;
}

Graph load_single(const std::string& path, const std::string& format) {
    auto graphs = load_graphs(path, format);
    if (graphs.size() != 1) {
        throw UsageError("expected one graph in '" + path + "', found " + std::to_string(graphs.size()));
    }
    return std::move(graphs.front());
}

std::string number(const Rational& x, bool decimal) {
    if (!decimal) return x.to_string();
    return x.to_string() + " (~" + x.to_decimal(kDecimalDigits) + ")";
}

void print_row(std::ostream& os, std::string_view name, std::span<const Rational> xs, bool decimal) {
    os << std::left << std::setw(11) << name;
    for (const auto& x : xs) os << ' ' << number(x, decimal);
    os << '\n';
}

SearchOptions search_options(int jobs) {
    SearchOptions options;
    options.jobs = jobs > 0 ? jobs : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    return options;
}

// One line per threshold and pair sum, sorted along the real line.
void print_number_line(std::ostream& os, const Graph& g, const Representation& rep, const VerifyReport& report,
                       bool decimal) {
    struct Mark {
        Rational value;
        int threshold = 0; // 1-based index, 0 for a pair sum
        VertexPair pair;
    };
    std::vector<Mark> marks;
    for (int i = 0; i < rep.threshold_count(); ++i) {
        marks.push_back({rep.thresholds()[static_cast<std::size_t>(i)], i + 1, {}});
    }
    for (const auto& p : g.pairs()) marks.push_back({rep.pair_sum(p.u, p.v), 0, p});
    std::stable_sort(marks.begin(), marks.end(), [](const Mark& a, const Mark& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.threshold != 0 && b.threshold == 0;
    });
    auto violated = [&](const VertexPair& p) {
        return std::any_of(report.violations.begin(), report.violations.end(),
                           [&](const Violation& v) { return v.pair == p; });
    };

    os << "region 0 (NO)\n";
    for (const auto& m : marks) {
        if (m.threshold != 0) {
            os << "---------------- t" << m.threshold << " = " << number(m.value, decimal) << '\n';
            os << "region " << m.threshold << (m.threshold % 2 == 1 ? " (YES)" : " (NO)") << '\n';
            continue;
        }
        os << "    s(" << m.pair.u << ',' << m.pair.v << ") = " << number(m.value, decimal)
           << (g.adjacent(m.pair.u, m.pair.v) ? "  edge" : "  nonedge") << (violated(m.pair) ? "  !" : "") << '\n';
    }
}

int cmd_construct(const ConstructArgs& a, const Io& io) {
    if (a.n < 3) {
        io.err << "error: cycles need n >= 3, got " << a.n << '\n';
        return usage;
    }
    const auto rep = construct_cycle_rep(a.n);
    std::ostream& note = a.out == "-" ? io.err : io.out;
    if (a.out == "-") {
        io.out << to_json(rep);
    } else {
        write_file(a.out, to_json(rep));
        io.log->info("wrote {}", a.out);
    }
    note << "theta(C" << a.n << ") = " << thresholds_count_of_construction(a.n) << '\n';
    if (a.decimal) print_row(note, "thresholds", rep.thresholds(), true);
    return ok;
}

int cmd_verify(const VerifyArgs& a, const Io& io) {
    const Graph g = load_single(a.graph, a.format);
    const Representation rep = representation_from_json(read_file(a.rep));
    if (rep.order() != g.order()) {
        io.err << "error: graph has " << g.order() << " vertices, representation has " << rep.order() << '\n';
        return usage;
    }
    const auto report = verify(g, rep);
    if (a.verbose) print_number_line(io.out, g, rep, report, a.decimal);
    if (report.ok) {
        io.out << "ok\n";
        return ok;
    }
    io.out << "invalid: " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations) {
        io.out << "  pair " << v.pair.u << ' ' << v.pair.v << "  sum " << number(v.sum, a.decimal) << "  region "
               << v.region << "  expected " << (v.expected_odd ? "odd" : "even") << '\n';
    }
    return negative;
}

int cmd_theta(const ThetaArgs& a, const Io& io) {
    const auto graphs = load_graphs(a.graph, a.format);
    if (!a.emit.empty() && graphs.size() != 1) throw UsageError("--emit needs a single input graph");
    const auto options = search_options(a.jobs);
    int status = ok;
    for (const auto& g : graphs) {
        SearchStats stats;
        const auto start = std::chrono::steady_clock::now();
        const auto result = threshold_number(g, a.k_max, options, &stats);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        io.log->info("n={} m={} nodes={} lp_calls={} prunes={}/{} {:.3f}s", g.order(), g.edge_count(), stats.nodes,
                     stats.lp_calls, stats.propagation_prunes, stats.lp_prunes, elapsed.count());

        const std::string prefix = graphs.size() > 1 ? to_graph6(g) + "  " : "";
        if (result.exceeded()) {
            io.out << prefix << "theta > " << a.k_max << " (exceeded --kmax)\n";
            status = negative;
            continue;
        }
        io.out << prefix << "theta = " << *result.value << '\n';
        if (graphs.size() == 1) {
            print_row(io.out, "thresholds", result.witness->thresholds(), a.decimal);
            print_row(io.out, "ranks", result.witness->ranks(), a.decimal);
        }
        if (!a.emit.empty()) {
            write_file(a.emit, to_json(*result.witness));
            io.log->info("wrote {}", a.emit);
        }
    }
    return status;
}

int cmd_refute(const RefuteArgs& a, const Io& io) {
    if (a.style == "chain") {
        if (a.k != 2) {
            io.err << "error: --style chain only covers --k 2\n";
            return usage;
        }
        if (a.n < 5) {
            io.err << "error: chain refutations need n >= 5, got " << a.n << '\n';
            return usage;
        }
        const auto cert = two_threshold_refutation_chain(a.n);
        const bool valid = check_chain_certificate(cert);
        std::ostream& note = a.out.empty() ? io.err : io.out;
        if (a.out.empty()) {
            io.out << to_json(cert);
        } else {
            write_file(a.out, to_json(cert));
        }
        if (!valid) {
            note << "certificate for C" << a.n << " failed its check\n";
            return negative;
        }
        note << "refuted: C" << a.n << " is not 2-threshold (" << to_string(cert.kind) << " chain, "
             << cert.steps.size() << " steps, certificate checked)\n";
        return ok;
    }

    if (a.n < 3) {
        io.err << "error: cycles need n >= 3, got " << a.n << '\n';
        return usage;
    }
    SearchStats stats;
    const auto rep = is_k_threshold(cycle_graph(a.n), a.k, search_options(a.jobs), &stats);
    io.log->info("nodes={} lp_calls={} prunes={}/{}", stats.nodes, stats.lp_calls, stats.propagation_prunes,
                 stats.lp_prunes);
    if (!rep) {
        io.out << "refuted: C" << a.n << " has no " << a.k << "-threshold representation (" << stats.nodes << " nodes, "
               << stats.lp_calls << " LP checks)\n";
        return ok;
    }
    io.out << "not refuted: C" << a.n << " is " << a.k << "-threshold\n";
    if (!a.out.empty()) write_file(a.out, to_json(*rep));
    return negative;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const Io io{out, err, make_logger(err)};

    CLI::App app{"Multithreshold graph representations: construct, verify, compute and refute.", "mtg"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"edges", "g6"};

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "Write a representation of C_n with the fewest thresholds");
    construct->add_option("kind", construct_args.kind, "Graph family")->required()->check(CLI::IsMember({"cycle"}));
    construct->add_option("n", construct_args.n, "Number of vertices")->required();
    construct->add_option("-o,--out", construct_args.out, "Output path, - for stdout")->capture_default_str();
    construct->add_flag("--decimal", construct_args.decimal, "Also print decimal approximations");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check a representation against a graph");
    verify_cmd->add_option("graph", verify_args.graph, "Graph file")->required();
    verify_cmd->add_option("rep", verify_args.rep, "Representation JSON")->required();
    verify_cmd->add_option("--format", verify_args.format, "Graph format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    verify_cmd->add_flag("--decimal", verify_args.decimal, "Also print decimal approximations");
    verify_cmd->add_flag("-v,--verbose", verify_args.verbose, "Print every sum on a number line");

    ThetaArgs theta_args;
    auto* theta = app.add_subcommand("theta", "Compute the threshold number, searching k = 1..kmax");
    theta->add_option("graph", theta_args.graph, "Graph file (graph6 files may hold one graph per line)")->required();
    theta->add_option("--format", theta_args.format, "Graph format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    theta->add_option("--kmax", theta_args.k_max, "Largest k to try")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    theta->add_option("--emit", theta_args.emit, "Write the witness representation here");
    theta->add_option("--jobs", theta_args.jobs, "Search threads, 0 for all cores")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    theta->add_flag("--decimal", theta_args.decimal, "Also print decimal approximations");

    RefuteArgs refute_args;
    auto* refute = app.add_subcommand("refute", "Show that C_n has no k-threshold representation");
    refute->add_option("kind", refute_args.kind, "Graph family")->required()->check(CLI::IsMember({"cycle"}));
    refute->add_option("n", refute_args.n, "Number of vertices")->required();
    refute->add_option("--k", refute_args.k, "Number of thresholds")->required()->check(CLI::PositiveNumber);
    refute->add_option("--style", refute_args.style, "chain (certificate, k = 2) or search (exhaustive)")
        ->required()
        ->check(CLI::IsMember({"chain", "search"}));
    refute->add_option("--out", refute_args.out, "Write the certificate or found representation here");
    refute->add_option("--jobs", refute_args.jobs, "Search threads, 0 for all cores")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return e.get_exit_code() == 0 ? ok : usage;
    }

    try {
        if (*construct) return cmd_construct(construct_args, io);
        if (*verify_cmd) return cmd_verify(verify_args, io);
        if (*theta) return cmd_theta(theta_args, io);
        return cmd_refute(refute_args, io);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
    }
    return usage;
}

} // namespace mtg::cli
