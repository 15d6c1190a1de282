#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookmax/bigint.hpp"

namespace hookmax {

/* Truncated formal power series in q with exact integer coefficients,
 * stored for q^0 .. q^order. All arithmetic is exact; binary operations on
 * mismatched orders truncate to the smaller one. Values are immutable from
 * the outside except through the documented mutators. */
class QSeries {
public:
    explicit QSeries(int order);  // the zero series

    static QSeries one(int order);
    static QSeries term(int exp, BigInt coefficient, int order);

    int order() const noexcept { return order_; }
    const BigInt& coeff(int n) const;  // throws std::invalid_argument off range
    void set_coeff(int n, BigInt value);
    void add_coeff(int n, const BigInt& delta);

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    friend QSeries operator+(QSeries lhs, const QSeries& rhs);
    friend QSeries operator-(QSeries lhs, const QSeries& rhs);
    friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);

    /// In place: multiply by the binomial 1 + c q^exp (exp >= 0).
    QSeries& mul_term(int exp, const BigInt& c);

    /// In place: divide by 1 - q^exp (exp >= 1), i.e. multiply by the
    /// geometric series in q^exp; the exact inverse of mul_term(exp, -1).
    QSeries& geom_div(int exp);

    QSeries& scale(const BigInt& c);

    /// Lines of "n<TAB>coefficient" for n = 0..order.
    std::string to_tsv() const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    int order_;
    std::vector<BigInt> c_;
};

/// Smallest exponent (up to the smaller order) where the two series differ.
std::optional<int> first_mismatch(const QSeries& a, const QSeries& b);

/* Truncated infinite q-Pochhammer product (sign * q^lead; q^step)_inf =
 * prod_{j>=0} (1 - sign q^(lead + j*step)). sign is +1 or -1; lead = 0 with
 * sign +1 is rejected (zero constant factor). */
QSeries pochhammer(int sign, int lead, int step, int order);

/// 1 / prod_{j>=1} (1 - q^j): the partition-counting series.
QSeries partition_series(int order);

/// Theta sum over triangular numbers: sum_{m>=0} q^(m(m+1)/2).
QSeries triangular_number_theta(int order);

/// Generating function of the maximum distinct-part count:
/// (1/(1-q)) ((q^2;q^2)_inf^2 / (q;q)_inf - 1).
QSeries gf_max_hooks_k1(int order);

/// Generating function of the maximum k-hook count:
/// (1/(1-q)) (sum_{t>=1} q^(C(t,2)k^2) (1 + q^(tk) + ... + q^((k-1)tk)) - 1).
QSeries gf_max_hooks(int k, int order);

/* The same series through the Jacobi triple product:
 * (1/(1-q)) ( (q^(2k^2);q^(2k^2))/(q^(k^2);q^(2k^2))
 *   + (1/2) sum_{r=1}^{k-1} (-q^(rk);q^(k^2)) (-q^(k^2-rk);q^(k^2))
 *                           (q^(k^2);q^(k^2))  - (k+1)/2 ).
 * Computed as twice the parenthesized value in integers; every coefficient
 * must come out even before halving, else std::logic_error. */
QSeries gf_max_hooks_theta(int k, int order);

/// Total 1-hook count over all partitions, by weight: q/((1-q)(q;q)_inf).
QSeries gf_hook_sum_k1(int order);

/// Total k-hook count over all partitions, by weight:
/// k q^k / ((1-q^k)(q;q)_inf).
QSeries gf_hook_sum(int k, int order);

/// Sum of x^(k-hook count) over all partitions, by weight, at integer x:
/// prod_{j>=1} (1 + (x-1) q^(kj))^k / (1 - q^j).
QSeries gf_hook_weighted(int k, long long x, int order);

/// First exponent where the triangular theta sum and
/// (q^2;q^2)_inf/(q;q^2)_inf disagree, if any.
std::optional<int> gauss_first_mismatch(int order);

/// Gauss' identity checked coefficientwise to the given order.
bool gauss_identity_holds(int order);

} // namespace hookmax
