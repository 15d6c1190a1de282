#include "hookmax/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace hookmax {

QSeries::QSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s.c_[0] = 1;
    return s;
}

QSeries QSeries::term(int exp, BigInt coefficient, int order) {
    QSeries s(order);
    if (exp < 0) throw std::invalid_argument("exponent must be >= 0");
    if (exp <= order) s.c_[static_cast<std::size_t>(exp)] = std::move(coefficient);
    return s;
}

const BigInt& QSeries::coeff(int n) const {
    if (n < 0 || n > order_)
        throw std::invalid_argument("coefficient index " + std::to_string(n) +
                                    " outside order " + std::to_string(order_));
    return c_[static_cast<std::size_t>(n)];
}

void QSeries::set_coeff(int n, BigInt value) {
    if (n < 0 || n > order_)
        throw std::invalid_argument("coefficient index out of range");
    c_[static_cast<std::size_t>(n)] = std::move(value);
}

void QSeries::add_coeff(int n, const BigInt& delta) {
    if (n < 0 || n > order_)
        throw std::invalid_argument("coefficient index out of range");
    c_[static_cast<std::size_t>(n)] += delta;
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    if (rhs.order_ < order_) {
        order_ = rhs.order_;
        c_.resize(static_cast<std::size_t>(order_) + 1);
    }
    for (int n = 0; n <= order_; ++n)
        c_[static_cast<std::size_t>(n)] += rhs.c_[static_cast<std::size_t>(n)];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    if (rhs.order_ < order_) {
        order_ = rhs.order_;
        c_.resize(static_cast<std::size_t>(order_) + 1);
    }
    for (int n = 0; n <= order_; ++n)
        c_[static_cast<std::size_t>(n)] -= rhs.c_[static_cast<std::size_t>(n)];
    return *this;
}

QSeries operator+(QSeries lhs, const QSeries& rhs) {
    lhs += rhs;
    return lhs;
}

QSeries operator-(QSeries lhs, const QSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
    int order = std::min(lhs.order_, rhs.order_);
    QSeries out(order);
    for (int i = 0; i <= order; ++i) {
        const BigInt& a = lhs.c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            const BigInt& b = rhs.c_[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            out.c_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return out;
}

QSeries& QSeries::mul_term(int exp, const BigInt& c) {
    if (exp < 0) throw std::invalid_argument("exponent must be >= 0");
    if (c == 0) return *this;
    if (exp == 0) return scale(BigInt(1) + c);
    for (int n = order_; n >= exp; --n)
        c_[static_cast<std::size_t>(n)] += c * c_[static_cast<std::size_t>(n - exp)];
    return *this;
}

QSeries& QSeries::geom_div(int exp) {
    if (exp < 1) throw std::invalid_argument("geom_div exponent must be >= 1");
    for (int n = exp; n <= order_; ++n)
        c_[static_cast<std::size_t>(n)] += c_[static_cast<std::size_t>(n - exp)];
    return *this;
}

QSeries& QSeries::scale(const BigInt& c) {
    for (BigInt& v : c_) v *= c;
    return *this;
}

std::string QSeries::to_tsv() const {
    std::ostringstream out;
    for (int n = 0; n <= order_; ++n)
        out << n << '\t' << c_[static_cast<std::size_t>(n)] << '\n';
    return out.str();
}

std::optional<int> first_mismatch(const QSeries& a, const QSeries& b) {
    int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n)
        if (a.coeff(n) != b.coeff(n)) return n;
    return std::nullopt;
}

QSeries pochhammer(int sign, int lead, int step, int order) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer sign must be +1 or -1");
    if (lead < 0 || step < 1)
        throw std::invalid_argument("pochhammer requires lead >= 0 and step >= 1");
    if (sign == 1 && lead == 0)
        throw std::invalid_argument("pochhammer (q^0; ...) has a zero factor");
    QSeries out = QSeries::one(order);
    for (long long e = lead; e <= order; e += step)
        out.mul_term(static_cast<int>(e), BigInt(-sign));
    return out;
}

namespace {

// In place division by (q;q)_inf, factor by factor.
void divide_by_euler_product(QSeries& s) {
    for (int j = 1; j <= s.order(); ++j) s.geom_div(j);
}

} // namespace

QSeries partition_series(int order) {
    QSeries s = QSeries::one(order);
    divide_by_euler_product(s);
    return s;
}

QSeries triangular_number_theta(int order) {
    QSeries s(order);
    for (long long m = 0; m * (m + 1) / 2 <= order; ++m)
        s.add_coeff(static_cast<int>(m * (m + 1) / 2), BigInt(1));
    return s;
}

QSeries gf_max_hooks_k1(int order) {
    QSeries even = pochhammer(+1, 2, 2, order);
    QSeries s = even * even;
    divide_by_euler_product(s);
    s.add_coeff(0, BigInt(-1));
    s.geom_div(1);
    return s;
}

QSeries gf_max_hooks(int k, int order) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    QSeries s(order);
    const long long kk = static_cast<long long>(k) * k;
    for (long long t = 1; t * (t - 1) / 2 * kk <= order; ++t) {
        long long base = t * (t - 1) / 2 * kk;
        // (1 - q^(t k^2)) / (1 - q^(tk)) expanded as the k-term geometric
        // polynomial, exact at every truncation order.
        for (long long r = 0; r < k; ++r) {
            long long e = base + r * t * k;
            if (e > order) break;
            s.add_coeff(static_cast<int>(e), BigInt(1));
        }
    }
    s.add_coeff(0, BigInt(-1));
    s.geom_div(1);
    return s;
}

QSeries gf_max_hooks_theta(int k, int order) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const long long kk = static_cast<long long>(k) * k;
    // Twice the bracketed expression, kept integral until the evenness of
    // every coefficient is established.
    QSeries doubled(order);
    {
        // (q^(2k^2); q^(2k^2))_inf / (q^(k^2); q^(2k^2))_inf
        QSeries gauss_part = QSeries::one(order);
        for (long long e = 2 * kk; e <= order; e += 2 * kk)
            gauss_part.mul_term(static_cast<int>(e), BigInt(-1));
        for (long long e = kk; e <= order; e += 2 * kk)
            gauss_part.geom_div(static_cast<int>(e));
        gauss_part.scale(BigInt(2));
        doubled += gauss_part;
    }
    for (int r = 1; r <= k - 1; ++r) {
        QSeries triple = QSeries::one(order);
        for (long long e = static_cast<long long>(r) * k; e <= order; e += kk)
            triple.mul_term(static_cast<int>(e), BigInt(1));
        for (long long e = kk - static_cast<long long>(r) * k; e <= order; e += kk)
            triple.mul_term(static_cast<int>(e), BigInt(1));
        for (long long e = kk; e <= order; e += kk)
            triple.mul_term(static_cast<int>(e), BigInt(-1));
        doubled += triple;
    }
    doubled.add_coeff(0, BigInt(-(k + 1)));
    QSeries halved(order);
    for (int n = 0; n <= order; ++n) {
        const BigInt& v = doubled.coeff(n);
        if (v % 2 != 0)
            throw std::logic_error("odd coefficient at q^" + std::to_string(n) +
                                   " in the triple-product form");
        halved.set_coeff(n, v / 2);
    }
    halved.geom_div(1);
    return halved;
}

QSeries gf_hook_sum_k1(int order) {
    QSeries s = QSeries::term(1, BigInt(1), order);
    s.geom_div(1);
    divide_by_euler_product(s);
    return s;
}

QSeries gf_hook_sum(int k, int order) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    QSeries s(order);
    if (k <= order) s.set_coeff(k, BigInt(k));
    s.geom_div(k);
    divide_by_euler_product(s);
    return s;
}

QSeries gf_hook_weighted(int k, long long x, int order) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    QSeries s = QSeries::one(order);
    const BigInt factor = BigInt(x) - 1;
    if (factor != 0) {
        for (long long e = k; e <= order; e += k)
            for (int rep = 0; rep < k; ++rep)
                s.mul_term(static_cast<int>(e), factor);
    }
    divide_by_euler_product(s);
    return s;
}

std::optional<int> gauss_first_mismatch(int order) {
    QSeries rhs = pochhammer(+1, 2, 2, order);
    for (int e = 1; e <= order; e += 2) rhs.geom_div(e);
    return first_mismatch(triangular_number_theta(order), rhs);
}

bool gauss_identity_holds(int order) {
    return !gauss_first_mismatch(order).has_value();
}

} // namespace hookmax
