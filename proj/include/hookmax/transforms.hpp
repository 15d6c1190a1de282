#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hookmax/partition.hpp"

namespace hookmax {

/* One node of a transformation trace. Top-level steps are the checkpoints
 * along which weight is non-increasing (reduction) or increasing by one
 * (growth) and the k-hook count is non-decreasing; sub-entries record every
 * elementary row deletion / cell-cascade application, and their sub-entries
 * in turn record single cell edits, whose hook counts may fluctuate. */
struct TraceStep {
    std::string label;
    Partition result;
    long long weight = 0;
    int hook_count = 0;  // k-hook count of result, recomputed from scratch
    std::vector<TraceStep> sub;
};

struct TransformTrace {
    int k = 0;
    std::vector<TraceStep> steps;
};

/// Line-oriented text form, depth-first; nested steps indent the label:
/// `<label> <TAB> <partition> <TAB> weight=<w> <TAB> alpha_k=<a>`.
std::string trace_to_text(const TransformTrace& trace);

/// Structured export: a JSON tree of steps, serialized to text.
std::string trace_to_json_text(const TransformTrace& trace);

/// Deletes the given row and closes the diagram up. Weight drops by that
/// row's length. Throws std::invalid_argument if row is out of range.
Partition delete_row(const Partition& p, int row);

/* Cell-removal cascade on row `row` (requires p[row] > p[row+1]): removes
 * the row's last cell, then repairs hook-length-k marks by alternately
 * adding a cell next to an uncovered mark and removing a cell under a newly
 * overloaded one, working strictly upward until the marks stabilize. Weight
 * never increases and drops by at most one; the k-hook count outside the
 * worked row never decreases. If `step` is non-null its sub-entries receive
 * one node per cell edit. Throws std::invalid_argument on precondition
 * violation and std::logic_error if the cascade ever fails to move upward
 * or a column holds two marks (neither can occur for valid inputs). */
Partition remove_cell_cascade(const Partition& p, int row, int k,
                              TraceStep* step = nullptr);

/* Cell-addition cascade on row `row` (requires p[row-1] > p[row], where
 * row 0 counts as infinite and row length+1 as 0, so row may be length+1):
 * adds a cell at the row's end, then if that buries a mark one compensating
 * removal cascade runs on the mark's row. Weight grows by at most one and
 * never shrinks. The result's k-hook count is at least the input's count
 * outside the worked row; for k >= 2 the count outside the worked row
 * itself never decreases, but for k = 1 a displaced mark can slide onto
 * the added cell (e.g. row 2 of (2,1) gives (2,2), whose only 1-hook is
 * the new cell). */
Partition add_cell_cascade(const Partition& p, int row, int k,
                           TraceStep* step = nullptr);

/* Produces a partition of weight |p|+1 whose k-hook count is at least that
 * of p: tries the addition cascade on each of the k-1 rows just below the
 * diagram, stopping as soon as the weight grows; if every attempt keeps the
 * weight, appends a new part equal to 1. */
Partition grow_one(const Partition& p, int k, TraceStep* step = nullptr);

/* Rewrites p into the minimum-weight member of the k-triangular staircase
 * family with at least as many k-hooks, processing rows bottom-up and
 * emitting one checkpoint per reworked row. Along the checkpoints the
 * weight is non-increasing and the k-hook count non-decreasing; the final
 * partition has one k-hook in every row. */
std::pair<Partition, TransformTrace> reduce_to_triangular(const Partition& p,
                                                          int k);

} // namespace hookmax
