#include "hookmax/partition.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hookmax {

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(parts[i]));
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0LL);
    return p;
}

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Partition Partition::from_text(std::string_view text) {
    text = trimmed(text);
    if (text.empty()) return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = trimmed(text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("bad partition text: cannot parse part '" +
                                        std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::part(int row) const {
    if (row < 1 || row > length())
        throw std::invalid_argument("row " + std::to_string(row) +
                                    " out of range for partition of length " +
                                    std::to_string(length()));
    return parts_[static_cast<std::size_t>(row) - 1];
}

int Partition::part_or_zero(int row) const noexcept {
    if (row < 1 || row > length()) return 0;
    return parts_[static_cast<std::size_t>(row) - 1];
}

std::string Partition::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_text() << ')';
}

std::ostream& operator<<(std::ostream& os, Cell c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

bool cell_valid(const Partition& p, Cell cell) noexcept {
    return cell.row >= 1 && cell.row <= p.length() && cell.col >= 1 &&
           cell.col <= p.part_or_zero(cell.row);
}

namespace detail {

void conjugate_into(const std::vector<int>& parts, std::vector<int>& out) {
    out.clear();
    if (parts.empty()) return;
    out.resize(static_cast<std::size_t>(parts[0]));
    int rows = static_cast<int>(parts.size());
    for (int col = 1; col <= parts[0]; ++col) {
        while (rows > 0 && parts[static_cast<std::size_t>(rows) - 1] < col) --rows;
        out[static_cast<std::size_t>(col) - 1] = rows;
    }
}

int hook_count_raw(const std::vector<int>& parts, const std::vector<int>& conj,
                   int k) noexcept {
    int count = 0;
    const int rows = static_cast<int>(parts.size());
    for (int i = 1; i <= rows; ++i) {
        const int len = parts[static_cast<std::size_t>(i) - 1];
        // hook(i,j) = len - j + conj[j-1] - i + 1 strictly decreases in j,
        // so each row holds at most one k-hook; binary search for it.
        int lo = 1, hi = len;
        while (lo <= hi) {
            int mid = lo + (hi - lo) / 2;
            int h = len - mid + conj[static_cast<std::size_t>(mid) - 1] - i + 1;
            if (h == k) {
                ++count;
                break;
            }
            if (h > k)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
    }
    return count;
}

} // namespace detail

Partition conjugate(const Partition& p) {
    std::vector<int> conj;
    detail::conjugate_into(p.parts(), conj);
    return Partition::unchecked(std::move(conj));
}

int hook_length(const Partition& p, Cell cell) {
    if (!cell_valid(p, cell))
        throw std::invalid_argument("cell (" + std::to_string(cell.row) + "," +
                                    std::to_string(cell.col) +
                                    ") outside partition " + p.to_text());
    std::vector<int> conj;
    detail::conjugate_into(p.parts(), conj);
    return p.parts()[static_cast<std::size_t>(cell.row) - 1] - cell.col +
           conj[static_cast<std::size_t>(cell.col) - 1] - cell.row + 1;
}

MarkSet mark_set(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("hook length k must be >= 1");
    MarkSet marks;
    marks.k = k;
    std::vector<int> conj;
    detail::conjugate_into(p.parts(), conj);
    for (int i = 1; i <= p.length(); ++i) {
        const int len = p.parts()[static_cast<std::size_t>(i) - 1];
        int lo = 1, hi = len;
        while (lo <= hi) {
            int mid = lo + (hi - lo) / 2;
            int h = len - mid + conj[static_cast<std::size_t>(mid) - 1] - i + 1;
            if (h == k) {
                marks.cells.push_back(Cell{i, mid});
                break;
            }
            if (h > k)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
    }
    return marks;
}

int hook_count(const Partition& p, int k) {
    if (k < 1) throw std::invalid_argument("hook length k must be >= 1");
    std::vector<int> conj;
    detail::conjugate_into(p.parts(), conj);
    return detail::hook_count_raw(p.parts(), conj, k);
}

int hook_count_in_row(const Partition& p, int k, int row) {
    if (k < 1) throw std::invalid_argument("hook length k must be >= 1");
    if (row < 1 || row > p.length())
        throw std::invalid_argument("row " + std::to_string(row) +
                                    " out of range for partition of length " +
                                    std::to_string(p.length()));
    std::vector<int> conj;
    detail::conjugate_into(p.parts(), conj);
    const int len = p.parts()[static_cast<std::size_t>(row) - 1];
    for (int j = 1; j <= len; ++j) {
        int h = len - j + conj[static_cast<std::size_t>(j) - 1] - row + 1;
        if (h == k) return 1;
        if (h < k) break;
    }
    return 0;
}

} // namespace hookmax
