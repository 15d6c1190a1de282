#include "hookmax/transforms.hpp"

#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "hookmax/triangular.hpp"

namespace hookmax {

namespace {

using detail::conjugate_into;
using detail::hook_count_raw;

/* Row of the unique hook-length-k cell in the given column, or 0 if none.
 * skip_row excludes the cell just removed from that row (relevant only for
 * k = 1, where a row's last cell is its own mark). Hook lengths strictly
 * decrease down a column, so two marks in one column would signal a broken
 * diagram; that aborts loudly instead of picking one. */
int marked_row_in_column(const std::vector<int>& parts, int k, int col,
                         int skip_row = 0) {
    std::vector<int> conj;
    conjugate_into(parts, conj);
    if (col < 1 || parts.empty() || col > parts[0]) return 0;
    const int col_height = conj[static_cast<std::size_t>(col) - 1];
    int found = 0;
    for (int i = 1; i <= col_height; ++i) {
        if (i == skip_row) continue;
        int h = parts[static_cast<std::size_t>(i) - 1] - col +
                col_height - i + 1;
        if (h == k) {
            if (found != 0)
                throw std::logic_error("two hook-" + std::to_string(k) +
                                       " cells in column " + std::to_string(col));
            found = i;
        }
    }
    return found;
}

std::vector<int> with_last_cell_removed(std::vector<int> parts, int row) {
    int& value = parts[static_cast<std::size_t>(row) - 1];
    --value;
    if (value == 0) parts.erase(parts.begin() + (row - 1));
    return parts;
}

std::vector<int> with_cell_added(std::vector<int> parts, int row) {
    if (row == static_cast<int>(parts.size()) + 1)
        parts.push_back(1);
    else
        ++parts[static_cast<std::size_t>(row) - 1];
    return parts;
}

int hook_count_of(const std::vector<int>& parts, int k) {
    std::vector<int> conj;
    conjugate_into(parts, conj);
    return hook_count_raw(parts, conj, k);
}

void record_edit(TraceStep* step, const char* kind, int row, int col,
                 const std::vector<int>& parts, int k) {
    if (!step) return;
    TraceStep edit;
    edit.label = std::string(kind) + "(" + std::to_string(row) + "," +
                 std::to_string(col) + ")";
    edit.result = Partition(parts);
    edit.weight = edit.result.weight();
    edit.hook_count = hook_count_of(parts, k);
    step->sub.push_back(std::move(edit));
}

Partition finish_op(std::vector<int> parts, int k, TraceStep* step) {
    Partition result(std::move(parts));  // validating: cascades must end valid
    if (step) {
        step->result = result;
        step->weight = result.weight();
        step->hook_count = hook_count(result, k);
    }
    return result;
}

} // namespace

Partition delete_row(const Partition& p, int row) {
    if (row < 1 || row > p.length())
        throw std::invalid_argument("delete_row: row " + std::to_string(row) +
                                    " out of range");
    std::vector<int> parts = p.parts();
    parts.erase(parts.begin() + (row - 1));
    return Partition(std::move(parts));
}

Partition remove_cell_cascade(const Partition& p, int row, int k,
                              TraceStep* step) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (row < 1 || row > p.length())
        throw std::invalid_argument("removal cascade: row " + std::to_string(row) +
                                    " out of range");
    if (p.part(row) <= p.part_or_zero(row + 1))
        throw std::invalid_argument(
            "removal cascade requires the row to be strictly longer than the next");

    int removed_row = row;
    int removed_col = p.part(row);
    std::vector<int> mu = with_last_cell_removed(p.parts(), removed_row);
    record_edit(step, "remove", removed_row, removed_col, mu, k);

    // Mark left uncovered by the removal, strictly above the removed cell.
    int mark = marked_row_in_column(p.parts(), k, removed_col, removed_row);
    int prev_mark = std::numeric_limits<int>::max();
    while (mark != 0) {
        if (mark >= prev_mark)
            throw std::logic_error("removal cascade failed to move upward");
        prev_mark = mark;

        // A matching row above absorbs the change: the mark slides up.
        if (mark > 1 && mu[static_cast<std::size_t>(mark) - 1] ==
                            mu[static_cast<std::size_t>(mark) - 2])
            break;

        // Re-point the mark by extending its row with one cell.
        int add_col = mu[static_cast<std::size_t>(mark) - 1] + 1;
        std::vector<int> nu = with_cell_added(mu, mark);
        record_edit(step, "add", mark, add_col, nu, k);

        // If the added cell sits under another mark, that mark is now
        // overloaded by one.
        int buried = marked_row_in_column(mu, k, add_col);
        if (buried == 0) {
            mu = std::move(nu);
            break;
        }
        if (buried >= mark)
            throw std::logic_error("removal cascade failed to move upward");
        // A matching row below absorbs it: the mark slides down.
        if (nu[static_cast<std::size_t>(buried) - 1] ==
            (buried < static_cast<int>(nu.size()) ? nu[static_cast<std::size_t>(buried)]
                                                  : 0)) {
            mu = std::move(nu);
            break;
        }
        // Otherwise shorten the overloaded mark's row and continue upward.
        removed_row = buried;
        removed_col = nu[static_cast<std::size_t>(buried) - 1];
        std::vector<int> mu2 = with_last_cell_removed(nu, removed_row);
        record_edit(step, "remove", removed_row, removed_col, mu2, k);
        mark = marked_row_in_column(nu, k, removed_col, removed_row);
        mu = std::move(mu2);
    }
    return finish_op(std::move(mu), k, step);
}

Partition add_cell_cascade(const Partition& p, int row, int k, TraceStep* step) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (row < 1 || row > p.length() + 1)
        throw std::invalid_argument("addition cascade: row " + std::to_string(row) +
                                    " out of range");
    if (row > 1 && p.part(row - 1) <= p.part_or_zero(row))
        throw std::invalid_argument(
            "addition cascade requires the previous row to be strictly longer");

    int add_col = p.part_or_zero(row) + 1;
    std::vector<int> mu = with_cell_added(p.parts(), row);
    record_edit(step, "add", row, add_col, mu, k);

    int buried = marked_row_in_column(p.parts(), k, add_col);
    if (buried == 0) return finish_op(std::move(mu), k, step);

    // The new cell overloads the mark at (buried, add_col) by one; a
    // matching row below absorbs it, otherwise a removal cascade on the
    // mark's row restores it.
    if (mu[static_cast<std::size_t>(buried) - 1] ==
        (buried < static_cast<int>(mu.size()) ? mu[static_cast<std::size_t>(buried)] : 0))
        return finish_op(std::move(mu), k, step);

    TraceStep inner;
    inner.label = "P_" + std::to_string(buried);
    Partition result = remove_cell_cascade(Partition::unchecked(std::move(mu)),
                                           buried, k, step ? &inner : nullptr);
    if (step) {
        step->sub.push_back(std::move(inner));
        step->result = result;
        step->weight = result.weight();
        step->hook_count = hook_count(result, k);
    }
    return result;
}

Partition grow_one(const Partition& p, int k, TraceStep* step) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const long long target = p.weight() + 1;
    Partition cur = p;
    for (int attempt = 1; attempt <= k - 1; ++attempt) {
        int row = cur.length() + 1;
        TraceStep qs;
        qs.label = "Q_" + std::to_string(row);
        cur = add_cell_cascade(cur, row, k, step ? &qs : nullptr);
        if (step) step->sub.push_back(std::move(qs));
        if (cur.weight() == target) {
            if (step) {
                step->result = cur;
                step->weight = cur.weight();
                step->hook_count = hook_count(cur, k);
            }
            return cur;
        }
    }
    // Every attempt rebalanced the weight away; a fresh bottom part of 1
    // lands the extra cell without disturbing the marks above.
    std::vector<int> parts = cur.parts();
    parts.push_back(1);
    cur = Partition::unchecked(std::move(parts));
    if (step) {
        TraceStep app;
        app.label = "append_part_1";
        app.result = cur;
        app.weight = cur.weight();
        app.hook_count = hook_count(cur, k);
        step->sub.push_back(std::move(app));
        step->result = cur;
        step->weight = cur.weight();
        step->hook_count = step->sub.back().hook_count;
    }
    return cur;
}

std::pair<Partition, TransformTrace> reduce_to_triangular(const Partition& p,
                                                          int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    TransformTrace trace;
    trace.k = k;
    Partition cur = p;
    for (int i = p.length(); i >= 1; --i) {
        int t = cur.length();
        if (i > t) throw std::logic_error("reduction lost track of its row");
        Partition ref = nearly_triangular(t, k);
        if (cur.part(i) == ref.part(i)) continue;

        int gap = cur.part(i) - cur.part_or_zero(i + 1);
        bool block_edge = (t - i) % k == 0;  // the reference steps down here
        int pulls;
        bool drop_row;
        const char* case_tag;
        if (block_edge && gap < k) {
            pulls = gap;
            drop_row = true;
            case_tag = " [case 2.1]";
        } else if (block_edge) {
            pulls = gap - k;  // gap == k would have matched the reference
            drop_row = false;
            case_tag = " [case 2.2]";
        } else {
            pulls = gap;
            drop_row = false;
            case_tag = " [case 2.3]";
        }

        TraceStep stage;
        for (int a = 0; a < pulls; ++a) {
            TraceStep ps;
            ps.label = "P_" + std::to_string(i);
            cur = remove_cell_cascade(cur, i, k, &ps);
            stage.sub.push_back(std::move(ps));
        }
        if (drop_row && cur.length() >= i) {
            TraceStep ds;
            ds.label = "D_" + std::to_string(i);
            cur = delete_row(cur, i);
            ds.result = cur;
            ds.weight = cur.weight();
            ds.hook_count = hook_count(cur, k);
            stage.sub.push_back(std::move(ds));
        }

        std::string label;
        if (pulls == 1)
            label = "P_" + std::to_string(i);
        else if (pulls > 1)
            label = "(P_" + std::to_string(i) + ")^" + std::to_string(pulls);
        if (drop_row) {
            if (!label.empty()) label += ' ';
            label += "D_" + std::to_string(i);
        }
        stage.label = label + case_tag;
        stage.result = cur;
        stage.weight = cur.weight();
        stage.hook_count = hook_count(cur, k);
        trace.steps.push_back(std::move(stage));
    }
    if (cur != nearly_triangular(cur.length(), k))
        throw std::logic_error("reduction did not terminate on the staircase family");
    return {cur, std::move(trace)};
}

namespace {

void append_step_text(std::string& out, const TraceStep& step, int depth) {
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    out += step.label;
    out += '\t';
    out += step.result.to_text();
    out += "\tweight=" + std::to_string(step.weight);
    out += "\talpha_k=" + std::to_string(step.hook_count);
    out += '\n';
    for (const TraceStep& s : step.sub) append_step_text(out, s, depth + 1);
}

nlohmann::json step_to_json(const TraceStep& step) {
    nlohmann::json j;
    j["label"] = step.label;
    j["partition"] = step.result.parts();
    j["weight"] = step.weight;
    j["alpha"] = step.hook_count;
    j["steps"] = nlohmann::json::array();
    for (const TraceStep& s : step.sub) j["steps"].push_back(step_to_json(s));
    return j;
}

} // namespace

std::string trace_to_text(const TransformTrace& trace) {
    std::string out;
    for (const TraceStep& s : trace.steps) append_step_text(out, s, 0);
    return out;
}

std::string trace_to_json_text(const TransformTrace& trace) {
    nlohmann::json j;
    j["k"] = trace.k;
    j["trace"] = nlohmann::json::array();
    for (const TraceStep& s : trace.steps) j["trace"].push_back(step_to_json(s));
    return j.dump();
}

} // namespace hookmax
