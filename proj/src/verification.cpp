#include "hookmax/verification.hpp"

#include <algorithm>
#include <random>

#include "hookmax/enumerate.hpp"
#include "hookmax/parallel.hpp"
#include "hookmax/partition.hpp"
#include "hookmax/qseries.hpp"
#include "hookmax/transforms.hpp"
#include "hookmax/triangular.hpp"

namespace hookmax {

namespace {

// Staircase weight with the test-only fault applied; fault 0 is the real value.
long long staircase_weight(int m, int k, int fault) {
    return triangular_weight(m, k) + fault;
}

int interval_index(long long n, int k, int fault) {
    int m = 0;
    while (staircase_weight(m + 1, k, fault) <= n) ++m;
    return m;
}

std::string fmt_nk(long long n, int k) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

CheckResult check_formula_vs_brute(const VerifyOptions& o) {
    CheckResult r{"bnk interval formula vs exhaustive maximum", true, ""};
    struct Task {
        int n, k;
    };
    std::vector<Task> tasks;
    for (int k = 1; k <= o.brute_k_max; ++k)
        for (int n = 0; n <= o.brute_n_max; ++n) tasks.push_back({n, k});
    std::vector<std::string> fail(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), o.threads, [&](int i) {
        const Task& t = tasks[static_cast<std::size_t>(i)];
        int formula = interval_index(t.n, t.k, o.fault_offset);
        BruteMaxResult brute = max_hook_count_brute(t.n, t.k);
        if (formula != brute.value) {
            fail[static_cast<std::size_t>(i)] =
                fmt_nk(t.n, t.k) + ": formula " + std::to_string(formula) +
                " != exhaustive " + std::to_string(brute.value);
        } else if (hook_count(brute.witness, t.k) != brute.value ||
                   brute.witness.weight() != t.n) {
            fail[static_cast<std::size_t>(i)] =
                fmt_nk(t.n, t.k) + ": witness fails recomputation";
        }
    });
    for (const std::string& f : fail) {
        if (!f.empty()) {
            r.pass = false;
            r.detail = f;
            return r;
        }
    }
    r.detail = "all n <= " + std::to_string(o.brute_n_max) + ", k <= " +
               std::to_string(o.brute_k_max);
    return r;
}

CheckResult check_k1_series(const VerifyOptions& o) {
    CheckResult r{"distinct-part series vs exhaustive and interval formula", true, ""};
    QSeries s = gf_max_hooks_k1(o.series_order);
    int brute_limit = std::min(o.brute_n_max, o.series_order);
    for (int n = 0; n <= brute_limit; ++n) {
        BruteMaxResult brute = max_hook_count_brute(n, 1);
        if (s.coeff(n) != brute.value) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": series coefficient " +
                       s.coeff(n).str() + " != exhaustive " +
                       std::to_string(brute.value);
            return r;
        }
    }
    for (int n = 0; n <= o.series_order; ++n) {
        if (s.coeff(n) != max_distinct_parts(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": series coefficient " +
                       s.coeff(n).str() + " != interval value " +
                       std::to_string(max_distinct_parts(n));
            return r;
        }
    }
    r.detail = "exhaustive to n = " + std::to_string(brute_limit) +
               ", interval formula to n = " + std::to_string(o.series_order);
    return r;
}

CheckResult check_bnk_series(const VerifyOptions& o) {
    CheckResult r{"bnk series vs interval formula", true, ""};
    for (int k = 1; k <= o.series_k_max; ++k) {
        QSeries s = gf_max_hooks(k, o.series_order);
        for (int n = 0; n <= o.series_order; ++n) {
            int expected = interval_index(n, k, o.fault_offset);
            if (s.coeff(n) != expected) {
                r.pass = false;
                r.detail = fmt_nk(n, k) + ": series coefficient " +
                           s.coeff(n).str() + " != interval value " +
                           std::to_string(expected);
                return r;
            }
        }
    }
    r.detail = "orders to " + std::to_string(o.series_order) + ", k <= " +
               std::to_string(o.series_k_max);
    return r;
}

CheckResult check_theta_form(const VerifyOptions& o) {
    CheckResult r{"triple-product form vs bnk series", true, ""};
    for (int k = 1; k <= o.theta_k_max; ++k) {
        try {
            QSeries theta = gf_max_hooks_theta(k, o.theta_order);
            QSeries direct = gf_max_hooks(k, o.theta_order);
            if (auto n = first_mismatch(theta, direct)) {
                r.pass = false;
                r.detail = fmt_nk(*n, k) + ": triple-product " +
                           theta.coeff(*n).str() + " != direct " +
                           direct.coeff(*n).str();
                return r;
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = "k=" + std::to_string(k) + ": " + e.what();
            return r;
        }
    }
    r.detail = "k <= " + std::to_string(o.theta_k_max) + " to order " +
               std::to_string(o.theta_order) + ", all halvings even";
    return r;
}

CheckResult check_hook_sums(const VerifyOptions& o) {
    CheckResult r{"hook-count sum and weighted-sum series vs enumeration", true, ""};
    QSeries pak = gf_hook_sum_k1(o.hook_sum_n_max);
    for (int n = 0; n <= o.hook_sum_n_max; ++n) {
        if (pak.coeff(n) != hook_count_sum(n, 1)) {
            r.pass = false;
            r.detail = "1-hook sum mismatch at n=" + std::to_string(n);
            return r;
        }
    }
    for (int k = 1; k <= o.hook_sum_k_max; ++k) {
        QSeries s = gf_hook_sum(k, o.hook_sum_n_max);
        for (int n = 0; n <= o.hook_sum_n_max; ++n) {
            if (s.coeff(n) != hook_count_sum(n, k)) {
                r.pass = false;
                r.detail = fmt_nk(n, k) + ": series " + s.coeff(n).str() +
                           " != enumerated sum " +
                           std::to_string(hook_count_sum(n, k));
                return r;
            }
        }
    }
    for (int k = 1; k <= o.weighted_k_max; ++k) {
        for (long long x : {0LL, 2LL, 3LL}) {
            QSeries s = gf_hook_weighted(k, x, o.weighted_n_max);
            for (int n = 0; n <= o.weighted_n_max; ++n) {
                if (s.coeff(n) != hook_count_weighted_sum(n, k, x)) {
                    r.pass = false;
                    r.detail = fmt_nk(n, k) + " x=" + std::to_string(x) +
                               ": series " + s.coeff(n).str() +
                               " != enumerated sum";
                    return r;
                }
            }
        }
    }
    r.detail = "sums to n = " + std::to_string(o.hook_sum_n_max) +
               ", weighted sums to n = " + std::to_string(o.weighted_n_max) +
               " at x in {0,2,3}";
    return r;
}

CheckResult check_gauss(const VerifyOptions& o) {
    CheckResult r{"Gauss identity", true, ""};
    if (auto n = gauss_first_mismatch(o.gauss_order)) {
        r.pass = false;
        r.detail = "first mismatch at q^" + std::to_string(*n);
        return r;
    }
    r.detail = "coefficientwise to order " + std::to_string(o.gauss_order);
    return r;
}

/* Shared sweep over every legal row of every partition. With `literal` the
 * addition check demands the row-excluded inequality
 *   count(p) - count(p,row) <= count(q) - count(q,row)
 * outright; that form is false for k = 1 whenever the displaced mark slides
 * into the worked row (smallest case: row 2 of (1)). Without `literal` the
 * addition check uses the bound that does hold everywhere,
 *   count(p) - count(p,row) <= count(q),
 * plus the row-excluded form for k >= 2 where it is valid. The removal
 * inequality and both weight bounds are identical either way. */
CheckResult run_cascade_sweep(const VerifyOptions& o, bool literal) {
    CheckResult r;
    r.name = literal ? "cascade sweep (strict row-excluded inequalities)"
                     : "cascade sweep (corrected addition bound)";
    r.pass = true;
    std::vector<std::string> fail(static_cast<std::size_t>(o.cascade_n_max) + 1);
    parallel_for(o.cascade_n_max + 1, o.threads, [&](int n) {
        std::string& out = fail[static_cast<std::size_t>(n)];
        try {
            for_each_partition(n, [&](const std::vector<int>& parts) {
                if (!out.empty()) return;
                Partition p = Partition::unchecked(parts);
                for (int k = 1; k <= o.cascade_k_max && out.empty(); ++k) {
                    int total = hook_count(p, k);
                    for (int i = 1; i <= p.length(); ++i) {
                        if (p.part(i) <= p.part_or_zero(i + 1)) continue;
                        Partition q = remove_cell_cascade(p, i, k);
                        if (q.weight() > p.weight() ||
                            p.weight() - q.weight() > 1) {
                            out = "removal weight off at " + p.to_text() +
                                  " row " + std::to_string(i) +
                                  " k=" + std::to_string(k);
                            return;
                        }
                        int lhs = total - hook_count_in_row(p, k, i);
                        int rhs = hook_count(q, k) -
                                  (i <= q.length() ? hook_count_in_row(q, k, i) : 0);
                        if (lhs > rhs) {
                            out = "removal inequality failed at " + p.to_text() +
                                  " row " + std::to_string(i) +
                                  " k=" + std::to_string(k);
                            return;
                        }
                    }
                    for (int j = 1; j <= p.length() + 1; ++j) {
                        if (j > 1 && p.part(j - 1) <= p.part_or_zero(j)) continue;
                        Partition q = add_cell_cascade(p, j, k);
                        if (q.weight() < p.weight() ||
                            q.weight() > p.weight() + 1) {
                            out = "addition weight off at " + p.to_text() +
                                  " row " + std::to_string(j) +
                                  " k=" + std::to_string(k);
                            return;
                        }
                        int lhs = total -
                                  (j <= p.length() ? hook_count_in_row(p, k, j) : 0);
                        int rhs = hook_count(q, k) -
                                  (j <= q.length() ? hook_count_in_row(q, k, j) : 0);
                        bool ok = (literal || k >= 2) ? lhs <= rhs
                                                      : lhs <= hook_count(q, k);
                        if (!ok) {
                            out = "addition inequality failed at " + p.to_text() +
                                  " row " + std::to_string(j) +
                                  " k=" + std::to_string(k);
                            if (literal && k == 1)
                                out += " (displaced 1-hook slides into the worked "
                                       "row; only the total-count bound holds there)";
                            return;
                        }
                    }
                }
            });
        } catch (const std::exception& e) {
            out = std::string("exception at n=") + std::to_string(n) + ": " + e.what();
        }
    });
    for (int n = 0; n <= o.cascade_n_max; ++n) {
        if (!fail[static_cast<std::size_t>(n)].empty()) {
            r.pass = false;
            r.detail = fail[static_cast<std::size_t>(n)];
            return r;
        }
    }
    r.detail = "every legal row of every partition of n <= " +
               std::to_string(o.cascade_n_max) + ", k <= " +
               std::to_string(o.cascade_k_max);
    return r;
}

CheckResult check_cascade_strict(const VerifyOptions& o) {
    return run_cascade_sweep(o, true);
}

CheckResult check_cascade_corrected(const VerifyOptions& o) {
    return run_cascade_sweep(o, false);
}

CheckResult check_reduction(const VerifyOptions& o) {
    CheckResult r{"reduction endpoint, bound, and monotone trace", true, ""};
    std::vector<std::string> fail(static_cast<std::size_t>(o.reduce_n_max) + 1);
    parallel_for(o.reduce_n_max + 1, o.threads, [&](int n) {
        std::string& out = fail[static_cast<std::size_t>(n)];
        try {
            for_each_partition(n, [&](const std::vector<int>& parts) {
                if (!out.empty()) return;
                Partition p = Partition::unchecked(parts);
                for (int k = 1; k <= o.reduce_k_max && out.empty(); ++k) {
                    int hooks = hook_count(p, k);
                    auto [end, trace] = reduce_to_triangular(p, k);
                    int s = end.length();
                    if (end != nearly_triangular(s, k)) {
                        out = p.to_text() + " k=" + std::to_string(k) +
                              ": endpoint not in the staircase family";
                        return;
                    }
                    if (s < hooks || end.weight() != triangular_weight(s, k) ||
                        p.weight() < triangular_weight(hooks, k)) {
                        out = p.to_text() + " k=" + std::to_string(k) +
                              ": weight bound violated";
                        return;
                    }
                    long long w = p.weight();
                    int a = hooks;
                    for (const TraceStep& step : trace.steps) {
                        if (step.weight > w || step.hook_count < a ||
                            step.weight != step.result.weight() ||
                            step.hook_count != hook_count(step.result, k)) {
                            out = p.to_text() + " k=" + std::to_string(k) +
                                  ": non-monotone or inconsistent trace";
                            return;
                        }
                        w = step.weight;
                        a = step.hook_count;
                    }
                }
            });
        } catch (const std::exception& e) {
            out = std::string("exception at n=") + std::to_string(n) + ": " + e.what();
        }
    });
    for (int n = 0; n <= o.reduce_n_max; ++n) {
        if (!fail[static_cast<std::size_t>(n)].empty()) {
            r.pass = false;
            r.detail = fail[static_cast<std::size_t>(n)];
            return r;
        }
    }
    r.detail = "every partition of n <= " + std::to_string(o.reduce_n_max) +
               ", k <= " + std::to_string(o.reduce_k_max);
    return r;
}

CheckResult check_reduction_golden(const VerifyOptions&) {
    CheckResult r{"golden reduction trace", true, ""};
    Partition start = Partition::from_text("10,7,4,3,3,3,3");
    auto [end, trace] = reduce_to_triangular(start, 3);
    if (end != Partition::from_text("6,6,3,3,3") || end.weight() != 21) {
        r.pass = false;
        r.detail = "endpoint " + end.to_text() + " weight " +
                   std::to_string(end.weight());
        return r;
    }
    if (hook_count(start, 3) != 5) {
        r.pass = false;
        r.detail = "start hook count " + std::to_string(hook_count(start, 3));
        return r;
    }
    std::vector<long long> weights;
    for (const TraceStep& step : trace.steps) {
        if (step.hook_count != 5) {
            r.pass = false;
            r.detail = "hook count " + std::to_string(step.hook_count) +
                       " at step " + step.label;
            return r;
        }
        weights.push_back(step.weight);
    }
    if (weights != std::vector<long long>{30, 26, 25, 21}) {
        std::string got;
        for (long long w : weights) got += std::to_string(w) + " ";
        r.pass = false;
        r.detail = "checkpoint weights " + got;
        return r;
    }
    r.detail = "(10,7,4,3,3,3,3) -> (6,6,3,3,3), weights 33,30,26,25,21, 5 hooks throughout";
    return r;
}

CheckResult check_growth_golden(const VerifyOptions&) {
    CheckResult r{"golden growth chain", true, ""};
    Partition p = Partition::from_text("3,3,3");
    for (int step = 0; step < 3; ++step) {
        long long before = p.weight();
        int hooks = hook_count(p, 3);
        p = grow_one(p, 3);
        if (p.weight() != before + 1 || hook_count(p, 3) < hooks) {
            r.pass = false;
            r.detail = "growth step " + std::to_string(step + 1) +
                       " broke its contract at " + p.to_text();
            return r;
        }
    }
    if (p.weight() != 12 || hook_count(p, 3) < 3) {
        r.pass = false;
        r.detail = "reached " + p.to_text();
        return r;
    }
    BruteMaxResult brute = max_hook_count_brute(12, 3);
    if (brute.value != 3) {
        r.pass = false;
        r.detail = "exhaustive maximum at n=12 k=3 is " +
                   std::to_string(brute.value);
        return r;
    }
    r.detail = "(3,3,3) grows to " + p.to_text() +
               " of weight 12 with 3 hooks; 3 is maximal";
    return r;
}

CheckResult check_family(const VerifyOptions& o) {
    CheckResult r{"staircase family weight and one-hook-per-row", true, ""};
    for (int k = 1; k <= o.family_k_max; ++k) {
        for (int m = 0; m <= o.family_m_max; ++m) {
            Partition t = nearly_triangular(m, k);
            if (t.weight() != staircase_weight(m, k, o.fault_offset)) {
                r.pass = false;
                r.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                           ": weight " + std::to_string(t.weight()) +
                           " != formula " +
                           std::to_string(staircase_weight(m, k, o.fault_offset));
                return r;
            }
            MarkSet marks = mark_set(t, k);
            if (marks.count() != m) {
                r.pass = false;
                r.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                           ": " + std::to_string(marks.count()) + " hooks";
                return r;
            }
            for (int i = 0; i < m; ++i) {
                if (marks.cells[static_cast<std::size_t>(i)].row != i + 1) {
                    r.pass = false;
                    r.detail = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                               ": rows not each marked once";
                    return r;
                }
            }
        }
    }
    r.detail = "m <= " + std::to_string(o.family_m_max) + ", k <= " +
               std::to_string(o.family_k_max);
    return r;
}

CheckResult check_ring_laws(const VerifyOptions& o) {
    CheckResult r{"series ring laws (randomized)", true, ""};
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> order_dist(0, 64);
    for (int trial = 0; trial < 25; ++trial) {
        int order = order_dist(rng);
        auto random_series = [&] {
            QSeries s(order);
            for (int n = 0; n <= order; ++n) s.set_coeff(n, BigInt(coeff(rng)));
            return s;
        };
        QSeries a = random_series(), b = random_series(), c = random_series();
        if ((a + b) + c != a + (b + c) || a * b != b * a ||
            (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) {
            r.pass = false;
            r.detail = "trial " + std::to_string(trial) + " at order " +
                       std::to_string(order);
            return r;
        }
    }
    r.detail = "25 seeded trials, order <= 64";
    return r;
}

} // namespace

VerifyOptions scaled_verify_options(int n_max, int k_max, int order,
                                    int threads) {
    VerifyOptions o;
    k_max = std::max(1, k_max);
    // k ceilings follow the request; n ceilings of the exhaustive sweeps
    // stay capped at the suite defaults to keep the runtime bounded.
    o.brute_n_max = n_max;
    o.brute_k_max = k_max;
    o.series_order = order;
    o.series_k_max = k_max;
    o.theta_order = std::min(o.theta_order, order);
    o.theta_k_max = k_max;
    o.hook_sum_n_max = std::min(o.hook_sum_n_max, n_max);
    o.hook_sum_k_max = k_max;
    o.weighted_n_max = std::min(o.weighted_n_max, n_max);
    o.weighted_k_max = std::min(o.weighted_k_max, k_max);
    o.gauss_order = std::min(o.gauss_order, order);
    o.cascade_n_max = std::min(o.cascade_n_max, n_max);
    o.cascade_k_max = std::min(o.cascade_k_max, k_max);
    o.reduce_n_max = std::min(o.reduce_n_max, n_max);
    o.reduce_k_max = std::min(o.reduce_k_max, k_max);
    o.family_k_max = std::max(o.family_k_max, k_max);
    o.threads = threads;
    return o;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    using Check = CheckResult (*)(const VerifyOptions&);
    struct Entry {
        Check check;
        int criterion;
    };
    std::vector<Entry> entries{
        {check_formula_vs_brute, 1}, {check_k1_series, 2},
        {check_bnk_series, 3},       {check_theta_form, 4},
        {check_hook_sums, 5},        {check_gauss, 6},
    };
    if (opts.strict_cascade_sweep) entries.push_back({check_cascade_strict, 7});
    entries.push_back({check_cascade_corrected, opts.strict_cascade_sweep ? 0 : 7});
    entries.push_back({check_reduction, 8});
    entries.push_back({check_reduction_golden, 9});
    entries.push_back({check_growth_golden, 10});
    entries.push_back({check_family, 11});
    if (opts.ring_laws) entries.push_back({check_ring_laws, 0});

    std::vector<CheckResult> results;
    for (const Entry& entry : entries) {
        results.push_back(entry.check(opts));
        results.back().criterion = entry.criterion;
        if (opts.stop_on_failure && !results.back().pass) return results;
    }
    return results;
}

} // namespace hookmax
