// Command-line front end: hook grids, b(n,k) tables three ways, series
// expansions, diagram rewriting traces, witnesses, and the cross-check
// suite. Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <climits>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookmax/enumerate.hpp"
#include "hookmax/parallel.hpp"
#include "hookmax/partition.hpp"
#include "hookmax/qseries.hpp"
#include "hookmax/transforms.hpp"
#include "hookmax/triangular.hpp"
#include "hookmax/verification.hpp"

namespace {

using nlohmann::json;
using namespace hookmax;

constexpr int kDefaultSafetyCeiling = 70;

struct Range {
    long long lo = 0;
    long long hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "', expected N or A..B");
    }
    if (r.lo < 0 || r.hi < r.lo)
        throw std::invalid_argument("bad range '" + text + "'");
    return r;
}

json partition_json(const Partition& p) { return json(p.parts()); }

int run_hooks(const std::string& text, int k, const std::string& format) {
    Partition p = Partition::from_text(text);
    MarkSet marks = mark_set(p, k);
    if (format == "json") {
        json j;
        j["partition"] = partition_json(p);
        j["k"] = k;
        json grid = json::array();
        for (int i = 1; i <= p.length(); ++i) {
            json row = json::array();
            for (int c = 1; c <= p.part(i); ++c)
                row.push_back(hook_length(p, Cell{i, c}));
            grid.push_back(row);
        }
        j["hooks"] = grid;
        json cells = json::array();
        for (Cell c : marks.cells) cells.push_back(json::array({c.row, c.col}));
        j["marks"] = cells;
        j["alpha"] = marks.count();
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "partition\t" << p.to_text() << '\n';
    std::cout << "k\t" << k << '\n';
    for (int i = 1; i <= p.length(); ++i) {
        std::cout << "hooks\t";
        for (int c = 1; c <= p.part(i); ++c) {
            if (c > 1) std::cout << ' ';
            std::cout << hook_length(p, Cell{i, c});
        }
        std::cout << '\n';
    }
    std::cout << "marks\t";
    for (std::size_t i = 0; i < marks.cells.size(); ++i) {
        if (i > 0) std::cout << ' ';
        std::cout << '(' << marks.cells[i].row << ',' << marks.cells[i].col << ')';
    }
    std::cout << '\n';
    std::cout << "alpha\t" << marks.count() << '\n';
    return 0;
}

int run_bnk(const std::string& range_text, int k, const std::string& mode,
            int threads, int ceiling, const std::string& format) {
    Range range = parse_range(range_text);
    bool brute = mode == "brute" || mode == "both";
    bool formula = mode == "formula" || mode == "both";
    if (brute && range.hi > ceiling)
        throw std::invalid_argument("brute-force range end " +
                                    std::to_string(range.hi) +
                                    " exceeds the safety ceiling " +
                                    std::to_string(ceiling));
    json rows = json::array();
    for (long long n = range.lo; n <= range.hi; ++n) {
        int value = 0;
        std::optional<Partition> witness;
        if (formula) value = max_hook_count(n, k);
        if (brute) {
            BruteMaxResult b = max_hook_count_brute(static_cast<int>(n), k, threads);
            if (formula && b.value != value) {
                std::cerr << "mismatch at n=" << n << " k=" << k << ": formula "
                          << value << " != exhaustive " << b.value << '\n';
                return 1;
            }
            value = b.value;
            witness = std::move(b.witness);
        }
        if (format == "json") {
            json row;
            row["n"] = n;
            row["k"] = k;
            row["b"] = value;
            if (witness) row["witness"] = partition_json(*witness);
            rows.push_back(std::move(row));
        } else {
            std::cout << n << '\t' << value;
            if (witness) std::cout << '\t' << witness->to_text();
            std::cout << '\n';
        }
    }
    if (format == "json") std::cout << rows.dump() << '\n';
    return 0;
}

QSeries build_series(const std::string& name, std::optional<int> k,
                     std::optional<long long> x, int order) {
    auto need_k = [&]() -> int {
        if (!k) throw std::invalid_argument("series '" + name + "' requires --k");
        return *k;
    };
    if (name == "bn") return gf_max_hooks_k1(order);
    if (name == "bnk") return gf_max_hooks(need_k(), order);
    if (name == "pak") return gf_hook_sum_k1(order);
    if (name == "han") return gf_hook_sum(need_k(), order);
    if (name == "han-eval") {
        if (!x) throw std::invalid_argument("series 'han-eval' requires --x");
        return gf_hook_weighted(need_k(), *x, order);
    }
    if (name == "jacobi") return gf_max_hooks_theta(need_k(), order);
    throw std::invalid_argument("unknown series '" + name + "'");
}

int run_series(const std::string& name, std::optional<int> k,
               std::optional<long long> x, int order, const std::string& format) {
    if (name == "gauss") {
        if (auto n = gauss_first_mismatch(order)) {
            std::cout << "fail\tfirst_mismatch=" << *n << '\n';
            return 1;
        }
        std::cout << "pass\n";
        return 0;
    }
    QSeries s = build_series(name, k, x, order);
    if (format == "json") {
        json j;
        j["name"] = name;
        if (k) j["k"] = *k;
        if (x) j["x"] = *x;
        j["order"] = order;
        json coeffs = json::array();
        for (int n = 0; n <= order; ++n) coeffs.push_back(s.coeff(n).str());
        j["coefficients"] = std::move(coeffs);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << s.to_tsv();
    }
    return 0;
}

json start_json(const Partition& p, int k) {
    json j;
    j["partition"] = partition_json(p);
    j["weight"] = p.weight();
    j["alpha"] = hook_count(p, k);
    return j;
}

void print_state_line(const char* tag, const Partition& p, int k) {
    std::cout << tag << '\t' << p.to_text() << "\tweight=" << p.weight()
              << "\talpha_k=" << hook_count(p, k) << '\n';
}

int run_reduce(const std::string& text, int k, const std::string& format) {
    Partition p = Partition::from_text(text);
    auto [end, trace] = reduce_to_triangular(p, k);
    int family_index = end.length();
    if (format == "json") {
        json j = json::parse(trace_to_json_text(trace));
        j["start"] = start_json(p, k);
        j["final"] = start_json(end, k);
        j["family_index"] = family_index;
        j["family_weight"] = triangular_weight(family_index, k);
        std::cout << j.dump() << '\n';
        return 0;
    }
    print_state_line("start", p, k);
    std::cout << trace_to_text(trace);
    print_state_line("final", end, k);
    std::cout << "family_index\t" << family_index << '\n';
    std::cout << "family_weight\t" << triangular_weight(family_index, k) << '\n';
    return 0;
}

int run_grow(const std::string& text, int k, long long steps,
             const std::string& format) {
    Partition p = Partition::from_text(text);
    TransformTrace trace;
    trace.k = k;
    Partition cur = p;
    for (long long s = 1; s <= steps; ++s) {
        TraceStep step;
        step.label = "grow_" + std::to_string(s);
        cur = grow_one(cur, k, &step);
        trace.steps.push_back(std::move(step));
    }
    if (format == "json") {
        json j = json::parse(trace_to_json_text(trace));
        j["start"] = start_json(p, k);
        j["final"] = start_json(cur, k);
        std::cout << j.dump() << '\n';
        return 0;
    }
    print_state_line("start", p, k);
    std::cout << trace_to_text(trace);
    print_state_line("final", cur, k);
    return 0;
}

int run_witness(long long n, int k, const std::string& format) {
    Partition w = max_hook_witness(n, k);
    int b = max_hook_count(n, k);
    if (format == "json") {
        json j;
        j["n"] = n;
        j["k"] = k;
        j["b"] = b;
        j["witness"] = partition_json(w);
        j["alpha"] = hook_count(w, k);
        std::cout << j.dump() << '\n';
        return 0;
    }
    std::cout << "n\t" << n << '\n';
    std::cout << "k\t" << k << '\n';
    std::cout << "b\t" << b << '\n';
    std::cout << "witness\t" << w.to_text() << '\n';
    std::cout << "alpha\t" << hook_count(w, k) << '\n';
    return 0;
}

int run_verify(int n_max, int k_max, int order, int threads, unsigned seed,
               int ceiling, bool inject_fault, bool literal_sweep) {
    if (n_max > ceiling)
        throw std::invalid_argument("--n-max " + std::to_string(n_max) +
                                    " exceeds the safety ceiling " +
                                    std::to_string(ceiling));
    VerifyOptions opts = scaled_verify_options(n_max, k_max, order, threads);
    opts.seed = seed;
    opts.ring_laws = true;
    opts.fault_offset = inject_fault ? 1 : 0;
    opts.strict_cascade_sweep = literal_sweep;
    opts.stop_on_failure = true;
    bool all_pass = true;
    std::vector<CheckResult> results = run_verification(opts);
    for (const CheckResult& r : results) {
        if (r.pass) {
            std::cout << "[PASS] " << r.name << ": " << r.detail << '\n';
        } else {
            all_pass = false;
            std::cout << "[FAIL] " << r.name << ": " << r.detail << '\n';
        }
    }
    std::cout << (all_pass ? "all checks passed" : "verification failed") << '\n';
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-hook maxima over integer partitions"};
    app.require_subcommand(1);

    std::string format = "tsv";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"tsv", "json"}))
            ->capture_default_str();
    };

    // hooks
    std::string hooks_partition;
    int hooks_k = 1;
    CLI::App* hooks = app.add_subcommand("hooks", "hook-length grid and marked cells");
    hooks->add_option("partition", hooks_partition,
                      "comma-separated parts; empty string for the empty partition");
    hooks->add_option("--k", hooks_k, "hook length")->required()->check(CLI::Range(1, INT_MAX));
    add_format(hooks);

    // bnk
    std::string bnk_range;
    int bnk_k = 1;
    std::string bnk_mode = "formula";
    int bnk_threads = 1;
    CLI::App* bnk = app.add_subcommand("bnk", "table of maximum k-hook counts");
    bnk->add_option("range", bnk_range, "N or A..B")->required();
    bnk->add_option("--k", bnk_k, "hook length")->required()->check(CLI::Range(1, INT_MAX));
    bnk->add_option("--mode", bnk_mode, "computation route")
        ->check(CLI::IsMember({"formula", "brute", "both"}))
        ->capture_default_str();
    bnk->add_option("--threads", bnk_threads, "worker threads for the exhaustive scan")
        ->check(CLI::Range(1, INT_MAX))
        ->capture_default_str();
    int bnk_ceiling = kDefaultSafetyCeiling;
    bnk->add_option("--safety-ceiling", bnk_ceiling,
                    "largest n the brute modes will enumerate")
        ->check(CLI::Range(0, INT_MAX))
        ->capture_default_str();
    add_format(bnk);

    // series
    std::string series_name;
    int series_k = 0;
    long long series_x = 0;
    int series_order = 200;
    bool series_has_k = false, series_has_x = false;
    CLI::App* series = app.add_subcommand("series", "series coefficients and identity checks");
    series->add_option("name", series_name, "bn|bnk|pak|han|han-eval|jacobi|gauss")
        ->required()
        ->check(CLI::IsMember({"bn", "bnk", "pak", "han", "han-eval", "jacobi", "gauss"}));
    series->add_option("--k", series_k, "hook length")
        ->check(CLI::Range(1, INT_MAX))
        ->each([&](const std::string&) { series_has_k = true; });
    series->add_option("--x", series_x, "integer evaluation point")
        ->each([&](const std::string&) { series_has_x = true; });
    series->add_option("--order", series_order, "truncation order")
        ->check(CLI::Range(0, INT_MAX))
        ->capture_default_str();
    add_format(series);

    // reduce
    std::string reduce_partition;
    int reduce_k = 1;
    CLI::App* reduce = app.add_subcommand("reduce", "rewrite down to the staircase family");
    reduce->add_option("partition", reduce_partition, "comma-separated parts");
    reduce->add_option("--k", reduce_k, "hook length")->required()->check(CLI::Range(1, INT_MAX));
    add_format(reduce);

    // grow
    std::string grow_partition;
    int grow_k = 1;
    long long grow_steps = 1;
    CLI::App* grow = app.add_subcommand("grow", "weight-increment growth steps");
    grow->add_option("partition", grow_partition, "comma-separated parts");
    grow->add_option("--k", grow_k, "hook length")->required()->check(CLI::Range(1, INT_MAX));
    grow->add_option("--steps", grow_steps, "number of unit growth steps")
        ->check(CLI::Range(1, INT_MAX))
        ->capture_default_str();
    add_format(grow);

    // witness
    long long witness_n = 0;
    int witness_k = 1;
    CLI::App* witness = app.add_subcommand("witness", "a partition attaining the maximum");
    witness->add_option("n", witness_n, "weight")->required()->check(CLI::Range(0, INT_MAX));
    witness->add_option("--k", witness_k, "hook length")->required()->check(CLI::Range(1, INT_MAX));
    add_format(witness);

    // verify
    int verify_n_max = 45, verify_k_max = 6, verify_order = 200, verify_threads = 1;
    unsigned verify_seed = 12345;
    bool verify_fault = false;
    CLI::App* verify = app.add_subcommand("verify", "cross-check suite");
    verify->add_option("--n-max", verify_n_max, "exhaustive-scan weight ceiling")
        ->check(CLI::Range(0, INT_MAX))
        ->capture_default_str();
    verify->add_option("--k-max", verify_k_max, "hook-length ceiling")
        ->check(CLI::Range(1, INT_MAX))
        ->capture_default_str();
    verify->add_option("--order", verify_order, "series truncation order")
        ->check(CLI::Range(0, INT_MAX))
        ->capture_default_str();
    verify->add_option("--threads", verify_threads, "worker threads")
        ->check(CLI::Range(1, INT_MAX))
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "seed for the randomized ring-law check")
        ->capture_default_str();
    int verify_ceiling = kDefaultSafetyCeiling;
    verify->add_option("--safety-ceiling", verify_ceiling,
                       "largest n the exhaustive sweeps may touch")
        ->check(CLI::Range(0, INT_MAX))
        ->capture_default_str();
    bool verify_literal = false;
    verify->add_flag("--strict-cascade-sweep", verify_literal,
                     "also demand the strict row-excluded inequality from the "
                     "addition cascade, which provably fails for k=1 (see README)");
    verify->add_flag("--inject-fault-t-weight", verify_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (hooks->parsed()) return run_hooks(hooks_partition, hooks_k, format);
        if (bnk->parsed())
            return run_bnk(bnk_range, bnk_k, bnk_mode, bnk_threads, bnk_ceiling,
                           format);
        if (series->parsed())
            return run_series(series_name,
                              series_has_k ? std::optional<int>(series_k) : std::nullopt,
                              series_has_x ? std::optional<long long>(series_x)
                                           : std::nullopt,
                              series_order, format);
        if (reduce->parsed()) return run_reduce(reduce_partition, reduce_k, format);
        if (grow->parsed())
            return run_grow(grow_partition, grow_k, grow_steps, format);
        if (witness->parsed()) return run_witness(witness_n, witness_k, format);
        if (verify->parsed())
            return run_verify(verify_n_max, verify_k_max, verify_order,
                              verify_threads, verify_seed, verify_ceiling,
                              verify_fault, verify_literal);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
