#include <atomic>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "intercol/bounds.hpp"
#include "intercol/constructions.hpp"
#include "intercol/equivalence.hpp"
#include "intercol/io.hpp"
#include "intercol/search.hpp"

namespace {

using namespace intercol;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;       // verification or parse failure
constexpr int exit_inconclusive = 2;  // budget exhausted, nothing decided

std::atomic<bool> g_interrupted{false};

void handle_interrupt(int) { g_interrupted.store(true); }

int default_threads() {
    if (const char* env = std::getenv("INTERCOL_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_text_file(path, content);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<int> parse_shift_arg(const std::string& s, int n) {
    std::vector<int> vals;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(item, &pos);
            } catch (...) {
                pos = 0;
            }
            if (pos != item.size() || item.empty() || v < 0)
                throw std::runtime_error("invalid shift vector entry '" + item + "'");
            vals.push_back(v);
        }
    }
    if (n == 1 && (vals.empty() || (vals.size() == 1 && vals[0] == 0))) return {};
    if (static_cast<int>(vals.size()) != n - 1)
        throw std::runtime_error("shift vector needs " + std::to_string(n - 1) +
                                 " entries for n = " + std::to_string(n));
    return vals;
}

LabeledFactorization load_factorization(const std::string& path) {
    Document d = parse_document(read_text_file(path));
    if (std::holds_alternative<ColoringDocument>(d))
        return coloring_to_factorization(std::get<ColoringDocument>(d).coloring);
    return std::get<FactorizationDocument>(d).factorization;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string method;
    int n = 0;
    std::string left, right;
    int left_n = 0, right_n = 0;
    std::string out;
    std::string emit_kind = "coloring";
};

int run_construct(const ConstructArgs& a) {
    std::optional<LabeledFactorization> f;
    if (a.method == "three-five") {
        f = construct_three_five(a.n);
    } else if (a.method == "pn") {
        f = construct_pn_konig(a.n);
    } else if (a.method == "round-robin") {
        f = coloring_to_factorization(construct_round_robin(a.n));
    } else {  // composite
        std::optional<LabeledFactorization> left, right;
        if (!a.left.empty()) left = load_factorization(a.left);
        if (!a.right.empty()) right = load_factorization(a.right);
        if (!left && a.left_n > 0) left = construct_three_five(a.left_n);
        if (!right && a.right_n > 0) right = construct_three_five(a.right_n);
        if (!left || !right)
            throw std::runtime_error(
                "composite needs --left/--right documents (or --left-n/--right-n)");
        f = construct_composite(*left, *right);
    }

    EdgeColoring c = factorization_to_coloring(*f);
    IntervalReport report = verify_interval(c);
    if (!report.valid) {
        std::cerr << "error: construction failed verification: " << report.message << "\n";
        return exit_failure;
    }
    std::string sh = shift_vector(c).to_string();

    std::string text = (a.emit_kind == "factorization")
                           ? serialize(FactorizationDocument{*f})
                           : serialize(ColoringDocument{c, {a.method, sh}});
    emit(a.out, text);
    if (!a.out.empty())
        std::cout << "wrote " << a.out << ": " << a.emit_kind << " document, n=" << c.n()
                  << ", t=" << c.t() << ", shift vector " << sh << "\n";
    return exit_ok;
}

// ------------------------------------------------- verify / shift / convert

int run_verify(const std::string& file) {
    Document d = parse_document(read_text_file(file));
    if (std::holds_alternative<ColoringDocument>(d)) {
        const EdgeColoring& c = std::get<ColoringDocument>(d).coloring;
        IntervalReport report = verify_interval(c);
        if (!report.valid) {
            std::cout << "invalid: " << report.message << "\n";
            return exit_failure;
        }
        std::cout << "valid: interval " << c.t() << "-coloring of K_" << c.vertex_count()
                  << "\n"
                  << "shift vector: " << shift_vector(c).to_string() << "\n";
        return exit_ok;
    }
    const LabeledFactorization& f = std::get<FactorizationDocument>(d).factorization;
    EdgeColoring c = factorization_to_coloring(f);
    std::cout << "valid: labeled factorization of K_" << 2 * f.n() << " (" << f.size()
              << " matchings, " << f.labeled_count() << " labeled)\n"
              << "as coloring: interval " << c.t() << "-coloring, shift vector "
              << f.implied_shift().to_string() << "\n";
    return exit_ok;
}

int run_shift(const std::string& file) {
    Document d = parse_document(read_text_file(file));
    std::string s = std::holds_alternative<ColoringDocument>(d)
                        ? shift_vector(std::get<ColoringDocument>(d).coloring).to_string()
                        : std::get<FactorizationDocument>(d)
                              .factorization.implied_shift()
                              .to_string();
    std::cout << s << "\n";
    return exit_ok;
}

int run_convert(const std::string& file, const std::string& out) {
    Document d = parse_document(read_text_file(file));
    std::string text;
    if (std::holds_alternative<ColoringDocument>(d)) {
        const EdgeColoring& c = std::get<ColoringDocument>(d).coloring;
        IntervalReport report = verify_interval(c);
        if (!report.valid) {
            std::cerr << "error: input is not a valid interval coloring: " << report.message
                      << "\n";
            return exit_failure;
        }
        text = serialize(FactorizationDocument{coloring_to_factorization(c)});
    } else {
        const LabeledFactorization& f = std::get<FactorizationDocument>(d).factorization;
        EdgeColoring c = factorization_to_coloring(f);
        text = serialize(ColoringDocument{c, {"", shift_vector(c).to_string()}});
    }
    emit(out, text);
    return exit_ok;
}

// ------------------------------------------------------------------- bound

std::string render_certificate(const BoundCertificate& c) {
    std::ostringstream os;
    os << "bound certificate\n"
       << "n: " << c.n << "\n"
       << "graph: K_" << 2 * c.n << "\n"
       << "total shift: " << c.total << "\n"
       << "filters: " << join(c.filters, ", ") << "\n"
       << "vectors checked: " << c.vectors_checked << "\n"
       << "nodes explored: " << c.nodes_explored << "\n"
       << "feasible vectors: " << c.feasible_count << "\n";
    if (c.empty)
        os << "verdict: empty; every interval coloring of K_" << 2 * c.n
           << " has t <= " << c.claimed_bound << "\n";
    else
        os << "verdict: not empty; no bound certified at this total\n";
    return os.str();
}

int run_bound(const std::string& kind, int n, int total, bool has_total, int threads,
              const std::string& out) {
    if (kind == "lower") {
        std::cout << lower_bound(n) << "\n";
        return exit_ok;
    }
    if (kind == "upper") {
        std::cout << upper_bound(n) << "\n";
        return exit_ok;
    }
    if (kind == "reference") {
        ReferenceFormulas f = reference_formulas(n);
        int lo = lower_bound(n);
        auto conjecture_note = [lo](int v) {
            if (v < lo) return "  [disproved by witness " + std::to_string(lo) + "]";
            return std::string();
        };
        std::cout << "kamalian lower     = " << f.kamalian << "\n"
                  << "giaro upper        = " << f.giaro << "\n"
                  << "petrosyan_3n2      = " << f.petrosyan_3n2 << "\n"
                  << "petrosyan_pq       = " << f.petrosyan_pq << "\n"
                  << "conjecture_pq      = " << f.conjecture_pq
                  << conjecture_note(f.conjecture_pq) << "\n"
                  << "conjecture_log     = " << f.conjecture_log
                  << conjecture_note(f.conjecture_log) << "\n";
        return exit_ok;
    }
    // certified-upper
    if (has_total) {
        BoundCertificate cert = certify_upper(n, total, {}, threads);
        std::string text = render_certificate(cert);
        emit(out, text);
        if (!out.empty()) {
            std::cout << "wrote " << out << ": "
                      << (cert.empty ? "empty at total " + std::to_string(cert.total) +
                                           ", W(K_" + std::to_string(2 * n) +
                                           ") <= " + std::to_string(cert.claimed_bound)
                                     : "not empty at total " + std::to_string(cert.total))
                      << "\n";
        }
        return cert.empty ? exit_ok : exit_inconclusive;
    }
    std::cout << certified_upper_bound(n, threads) << "\n";
    return exit_ok;
}

// ------------------------------------------------------------------- table

int run_table(int max_n, int threads) {
    std::vector<std::string> ns{"n"}, lower{"lower"}, exact{"exact"}, upper{"upper"};
    for (int n = 1; n <= max_n; ++n) {
        int lo = lower_bound(n);
        int up = upper_bound(n);
        ns.push_back(std::to_string(n));
        lower.push_back(std::to_string(lo));
        upper.push_back(std::to_string(up));
        // The exact cell is filled where the bounds meet: either the
        // closed forms agree, or (for n <= 12, where the vector calculus
        // is decisive) the certified bound comes down to the witness value.
        bool is_exact = lo == up || (n <= 12 && lo == certified_upper_bound(n, threads));
        exact.push_back(is_exact ? std::to_string(lo) : "");
    }
    for (const auto* row : {&ns, &lower, &exact, &upper}) {
        std::cout << (*row)[0];
        for (size_t i = 0; i < 6 - (*row)[0].size(); ++i) std::cout << ' ';
        for (size_t i = 1; i < row->size(); ++i) {
            const std::string& cell = (*row)[i];
            for (size_t k = 0; k < 4 - std::min<size_t>(cell.size(), 3); ++k)
                std::cout << ' ';
            std::cout << cell;
        }
        std::cout << "\n";
    }
    return exit_ok;
}

// ---------------------------------------------------------- sigma / realize

int run_sigma(int n, std::int64_t node_limit, double time_limit, bool no_prune,
              bool show_progress, const std::string& out) {
    SearchBudget budget{node_limit, time_limit, 0, &g_interrupted};
    SigmaProgress progress;
    if (show_progress)
        progress = [](std::int64_t nodes, int best) {
            std::cerr << "progress: nodes=" << nodes << " best=" << best << "\n";
        };
    SigmaResult r = sigma_search(n, budget, !no_prune, progress);
    std::cout << "n: " << r.n << "\n"
              << "sigma: " << r.sigma << (r.exhaustive ? "" : " (lower bound only)") << "\n"
              << "implied t: " << 2 * n - 1 + r.sigma << "\n"
              << "nodes: " << r.nodes << "\n"
              << "exhaustive: " << (r.exhaustive ? "yes" : "no") << "\n";
    if (!out.empty()) {
        if (!r.witness) {
            std::cerr << "error: no witness factorization available\n";
            return exit_failure;
        }
        EdgeColoring c = factorization_to_coloring(*r.witness);
        IntervalReport report = verify_interval(c);
        if (!report.valid) {
            std::cerr << "error: witness failed verification: " << report.message << "\n";
            return exit_failure;
        }
        write_text_file(out, serialize(FactorizationDocument{*r.witness}));
        std::cout << "wrote " << out << ": factorization document, t=" << c.t() << "\n";
    }
    return r.exhaustive ? exit_ok : exit_inconclusive;
}

int run_realize(int n, const std::string& shift_str, std::uint64_t seed,
                std::int64_t node_limit, double time_limit, const std::string& out) {
    ShiftVector target{parse_shift_arg(shift_str, n)};
    SearchBudget budget{node_limit, time_limit, seed, &g_interrupted};
    RealizeResult r = realize_shift(n, target, budget);
    if (r.coloring) {
        IntervalReport report = verify_interval(*r.coloring);
        if (!report.valid) {
            std::cerr << "error: found coloring failed verification: " << report.message
                      << "\n";
            return exit_failure;
        }
        std::string text = serialize(
            ColoringDocument{*r.coloring, {"realize-shift", target.to_string()}});
        emit(out, text);
        if (!out.empty())
            std::cout << "wrote " << out << ": coloring document, n=" << n
                      << ", t=" << r.coloring->t() << ", nodes=" << r.nodes
                      << ", restarts=" << r.restarts << "\n";
        return exit_ok;
    }
    if (r.completed) {
        std::cout << "not found: canonical search space fully covered (" << r.nodes
                  << " nodes)\n";
    } else {
        std::cout << "not found: budget exhausted after " << r.nodes << " nodes and "
                  << r.restarts << " restarts\n";
    }
    return exit_inconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_interrupt);

    CLI::App app{
        "interval edge colorings of complete graphs: constructions, verification, "
        "bounds, and exact searches"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand("construct", "build a verified document");
    construct->add_option("--method", ca.method, "construction method")
        ->required()
        ->check(CLI::IsMember({"three-five", "composite", "pn", "round-robin"}));
    construct->add_option("--n", ca.n, "number of vertex pairs");
    construct->add_option("--left", ca.left, "left input document (composite)");
    construct->add_option("--right", ca.right, "right input document (composite)");
    construct->add_option("--left-n", ca.left_n, "build left input as three-five at this n");
    construct->add_option("--right-n", ca.right_n,
                          "build right input as three-five at this n");
    construct->add_option("-o,--output", ca.out, "output file (default stdout)");
    construct->add_option("--emit", ca.emit_kind, "document kind to write")
        ->check(CLI::IsMember({"coloring", "factorization"}));

    std::string verify_file;
    CLI::App* verify = app.add_subcommand("verify", "check a document");
    verify->add_option("file", verify_file, "document to verify")->required();

    std::string shift_file;
    CLI::App* shift = app.add_subcommand("shift", "print a document's shift vector");
    shift->add_option("file", shift_file, "input document")->required();

    std::string convert_file, convert_out;
    CLI::App* convert =
        app.add_subcommand("convert", "coloring <-> factorization document");
    convert->add_option("file", convert_file, "input document")->required();
    convert->add_option("-o,--output", convert_out, "output file (default stdout)");

    std::string bound_kind, bound_out;
    int bound_n = 1, bound_total = 0, bound_threads = default_threads();
    CLI::App* bound = app.add_subcommand("bound", "bound values and certificates");
    bound->add_option("kind", bound_kind, "which bound")
        ->required()
        ->check(CLI::IsMember({"lower", "upper", "certified-upper", "reference"}));
    bound->add_option("--n", bound_n, "number of vertex pairs")
        ->required()
        ->check(CLI::PositiveNumber);
    CLI::Option* total_opt =
        bound->add_option("--total", bound_total, "total shift to certify empty");
    bound->add_option("--threads", bound_threads, "enumeration worker threads");
    bound->add_option("-o,--output", bound_out, "certificate output file");

    int table_max_n = 1, table_threads = default_threads();
    CLI::App* table = app.add_subcommand("table", "render the bound table");
    table->add_option("--max-n", table_max_n, "last column")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--threads", table_threads, "enumeration worker threads");

    int sigma_n = 1;
    std::int64_t sigma_nodes = 0;
    double sigma_time = 0.0;
    bool sigma_no_prune = false;
    bool sigma_progress = false;
    std::string sigma_out;
    CLI::App* sigma =
        app.add_subcommand("sigma", "maximize labeled matchings over factorizations");
    sigma->add_option("--n", sigma_n, "number of vertex pairs")
        ->required()
        ->check(CLI::PositiveNumber);
    sigma->add_option("--node-limit", sigma_nodes, "search node budget (0 = unlimited)");
    sigma->add_option("--time-limit", sigma_time, "seconds budget (0 = unlimited)");
    sigma->add_flag("--no-prune", sigma_no_prune, "disable branch-and-bound cutoffs");
    sigma->add_flag("--progress", sigma_progress, "report nodes/best-so-far on stderr");
    sigma->add_option("-o,--output", sigma_out, "write witness factorization here");

    int realize_n = 1;
    std::string realize_shift_str, realize_out;
    std::uint64_t realize_seed = 0;
    std::int64_t realize_nodes = 0;
    double realize_time = 0.0;
    CLI::App* realize =
        app.add_subcommand("realize", "search for a coloring with an exact shift vector");
    realize->add_option("--n", realize_n, "number of vertex pairs")
        ->required()
        ->check(CLI::PositiveNumber);
    realize->add_option("--shift", realize_shift_str, "target, e.g. 1,1,3,0,0")->required();
    realize->add_option("--seed", realize_seed, "restart randomization seed");
    realize->add_option("--node-limit", realize_nodes, "search node budget (0 = unlimited)");
    realize->add_option("--time-limit", realize_time, "seconds budget (0 = unlimited)");
    realize->add_option("-o,--output", realize_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_failure;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*verify) return run_verify(verify_file);
        if (*shift) return run_shift(shift_file);
        if (*convert) return run_convert(convert_file, convert_out);
        if (*bound)
            return run_bound(bound_kind, bound_n, bound_total,
                             static_cast<bool>(*total_opt), bound_threads, bound_out);
        if (*table) return run_table(table_max_n, table_threads);
        if (*sigma) return run_sigma(sigma_n, sigma_nodes, sigma_time, sigma_no_prune,
                                     sigma_progress, sigma_out);
        if (*realize)
            return run_realize(realize_n, realize_shift_str, realize_seed, realize_nodes,
                               realize_time, realize_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}
