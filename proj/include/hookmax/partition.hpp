#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hookmax {

/* An integer partition: a weakly decreasing sequence of positive parts.
 * The empty partition is the unique partition of 0. Values are immutable
 * after construction and safe to share across threads. All row and column
 * indices in this API are 1-based, row 1 being the top row of the Young
 * diagram. */
class Partition {
public:
    Partition() = default;

    /// Validating constructor. Throws std::invalid_argument unless parts is
    /// weakly decreasing with every part >= 1. Input is never sorted.
    explicit Partition(std::vector<int> parts);

    /// Parses the textual format: comma-separated parts ("10,7,4,3,3,3,3");
    /// the empty string denotes the empty partition.
    static Partition from_text(std::string_view text);

    /// Bypasses validation; the caller guarantees a valid part list.
    static Partition unchecked(std::vector<int> parts);

    int length() const noexcept { return static_cast<int>(parts_.size()); }
    long long weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part at 1-based row; throws std::invalid_argument if out of range.
    int part(int row) const;

    /// Part at 1-based row, 0 for rows below the diagram.
    int part_or_zero(int row) const noexcept;

    const std::vector<int>& parts() const noexcept { return parts_; }

    std::string to_text() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/* A cell (row, col) of a Young diagram, 1-based. */
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::ostream& operator<<(std::ostream& os, Cell c);

/* The cells of a partition whose hook length equals k, sorted by row.
 * Hook lengths strictly decrease along rows and down columns, so a
 * partition holds at most one such cell per row and per column; the
 * cardinality is the partition's k-hook count. */
struct MarkSet {
    int k = 0;
    std::vector<Cell> cells;
    int count() const noexcept { return static_cast<int>(cells.size()); }
};

/// True iff cell lies inside the diagram of p.
bool cell_valid(const Partition& p, Cell cell) noexcept;

/// Column lengths of the diagram; an involution.
Partition conjugate(const Partition& p);

/// Hook length of a cell: 1 + cells to its right + cells below it.
/// Throws std::invalid_argument for cells outside the diagram.
int hook_length(const Partition& p, Cell cell);

/// All cells of hook length k (k >= 1 required).
MarkSet mark_set(const Partition& p, int k);

/// Number of cells of hook length k.
int hook_count(const Partition& p, int k);

/// Number of cells of hook length k in one row (0 or 1);
/// throws std::invalid_argument if row is outside 1..length.
int hook_count_in_row(const Partition& p, int k, int row);

namespace detail {

/// Conjugate of a raw weakly-decreasing part list, written into out.
void conjugate_into(const std::vector<int>& parts, std::vector<int>& out);

/// k-hook count from raw parts plus their conjugate; no validation.
int hook_count_raw(const std::vector<int>& parts, const std::vector<int>& conj,
                   int k) noexcept;

} // namespace detail

} // namespace hookmax
