#ifndef CYLQ_SERIES_HPP
#define CYLQ_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "cylq/errors.hpp"
#include "cylq/rings.hpp"

namespace cylq {

/* A formal power series in q modulo q^(order+1) with exact coefficients in
 * a ring R.  All arithmetic is exact; there is no floating point anywhere.
 */
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order)
        : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, RingOps<R>::zero()) {
        if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = RingOps<R>::one();
        return s;
    }

    static TruncatedSeries monomial(int order, int degree, R c) {
        TruncatedSeries s(order);
        if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
        return s;
    }

    int order() const { return order_; }

    const R& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, R v) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(v); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
        require_same_order(f, g);
        TruncatedSeries h(f.order_);
        for (std::size_t n = 0; n < h.coeffs_.size(); ++n)
            h.coeffs_[n] = f.coeffs_[n] + g.coeffs_[n];
        return h;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
        require_same_order(f, g);
        TruncatedSeries h(f.order_);
        for (std::size_t n = 0; n < h.coeffs_.size(); ++n)
            h.coeffs_[n] = f.coeffs_[n] - g.coeffs_[n];
        return h;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    TruncatedSeries scaled(const R& c) const {
        TruncatedSeries h(order_);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) h.coeffs_[n] = coeffs_[n] * c;
        return h;
    }

    /* Multiplication by q^d, d >= 0; coefficients pushed past the order
     * vanish. */
    TruncatedSeries shifted(int d) const {
        if (d < 0) throw std::invalid_argument("shift degree must be nonnegative");
        TruncatedSeries h(order_);
        for (int n = order_; n >= d; --n)
            h.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - d)];
        return h;
    }

    /* In-place multiplication by the binomial (1 - c q^d), d >= 1.
     * This is the workhorse of the Pochhammer constructors: one pass,
     * no convolution. */
    void mul_one_minus(const R& c, int d) {
        if (d <= 0) throw std::invalid_argument("binomial q-degree must be positive");
        for (int n = order_; n >= d; --n)
            coeffs_[static_cast<std::size_t>(n)] =
                coeffs_[static_cast<std::size_t>(n)] -
                c * coeffs_[static_cast<std::size_t>(n - d)];
    }

    /* Constant factor (1 - c): scales every coefficient by (1 - c). */
    void mul_one_minus_constant(const R& c) {
        const R f = RingOps<R>::one() - c;
        for (auto& x : coeffs_) x = x * f;
    }

    TruncatedSeries invert() const {
        if (!RingOps<R>::is_unit(coeffs_[0])) throw NonUnitConstantTerm();
        const R c0inv = RingOps<R>::unit_inverse(coeffs_[0]);
        TruncatedSeries g(order_);
        g.coeffs_[0] = c0inv;
        for (int n = 1; n <= order_; ++n) {
            R acc = RingOps<R>::zero();
            for (int i = 1; i <= n; ++i)
                acc += coeffs_[static_cast<std::size_t>(i)] *
                       g.coeffs_[static_cast<std::size_t>(n - i)];
            g.coeffs_[static_cast<std::size_t>(n)] = -(c0inv * acc);
        }
        return g;
    }

    /* Coefficientwise exact division by a small integer. */
    TruncatedSeries divided_exact(long long d) const {
        TruncatedSeries h(order_);
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            h.coeffs_[n] = RingOps<R>::divide_exact(coeffs_[n], d);
        return h;
    }

    static void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g) {
        if (f.order_ != g.order_) throw OrderMismatch(f.order_, g.order_);
    }

private:
    int order_;
    std::vector<R> coeffs_;
};

/* Cauchy product, single-threaded reference. */
template <class R>
TruncatedSeries<R> mul_serial(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    TruncatedSeries<R>::require_same_order(f, g);
    const int N = f.order();
    TruncatedSeries<R> h(N);
    for (int n = 0; n <= N; ++n) {
        R acc = RingOps<R>::zero();
        for (int i = 0; i <= n; ++i) acc += f.coeff(i) * g.coeff(n - i);
        h.set_coeff(n, std::move(acc));
    }
    return h;
}

/* Cauchy product parallelized over the output coefficient index.  Each
 * coefficient is computed independently and in full, so the result is
 * bit-identical to mul_serial for any thread count. */
template <class R>
TruncatedSeries<R> mul_parallel(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    TruncatedSeries<R>::require_same_order(f, g);
    const int N = f.order();
    TruncatedSeries<R> h(N);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int n = 0; n <= N; ++n) {
        R acc = RingOps<R>::zero();
        for (int i = 0; i <= n; ++i) acc += f.coeff(i) * g.coeff(n - i);
        h.set_coeff(n, std::move(acc));
    }
    return h;
}

/* Dispatch: the parallel kernel only pays off on large orders. */
template <class R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    return f.order() >= 128 ? mul_parallel(f, g) : mul_serial(f, g);
}

/* Index of the first differing coefficient, or -1 when equal up to the
 * common order. */
template <class R>
int first_difference(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    TruncatedSeries<R>::require_same_order(f, g);
    for (int n = 0; n <= f.order(); ++n)
        if (!(f.coeff(n) == g.coeff(n))) return n;
    return -1;
}

/* Describes a monomial a = coefficient * q^q_exponent used as the first
 * argument of a Pochhammer product (a; q^step)_n.  For tracked rings the
 * tracking-variable power is part of the coefficient (e.g. z*1 for
 * (zq; q)_inf).  step = 0 is representable but never truncatable.
 */
template <class R>
struct FactorSpec {
    R coefficient = RingOps<R>::one();
    int q_exponent = 0;
    int step = 1;
};

/* (a; q^step)_n = prod_{i=0}^{n-1} (1 - a q^{i*step}), truncated. */
template <class R>
TruncatedSeries<R> poch_finite(const FactorSpec<R>& spec, long long count, int order) {
    if (spec.q_exponent < 0) throw std::invalid_argument("q exponent must be nonnegative");
    TruncatedSeries<R> f = TruncatedSeries<R>::one(order);
    for (long long i = 0; i < count; ++i) {
        const long long d = spec.q_exponent + i * spec.step;
        if (d == 0) {
            f.mul_one_minus_constant(spec.coefficient);
        } else if (d <= order) {
            f.mul_one_minus(spec.coefficient, static_cast<int>(d));
        } else if (spec.step > 0) {
            break;  // degrees only grow; the remaining factors are 1 mod q^(order+1)
        }
    }
    return f;
}

/* (a; q^step)_inf truncated at the order.  Only finitely many factors have
 * q-degree <= order; with q_exponent = 0 exactly one factor (i = 0) is the
 * constant (1 - coefficient).  step = 0 would repeat that constant factor
 * forever, hence NotTruncatable. */
template <class R>
TruncatedSeries<R> poch_infinite(const FactorSpec<R>& spec, int order) {
    if (spec.step <= 0)
        throw NotTruncatable("step must be positive, got " + std::to_string(spec.step));
    if (spec.q_exponent < 0)
        throw NotTruncatable("q exponent must be nonnegative");
    TruncatedSeries<R> f = TruncatedSeries<R>::one(order);
    for (long long d = spec.q_exponent; d <= order; d += spec.step) {
        if (d == 0)
            f.mul_one_minus_constant(spec.coefficient);
        else
            f.mul_one_minus(spec.coefficient, static_cast<int>(d));
    }
    return f;
}

namespace detail {

template <class R>
R pow_int(const R& base, long long e) {
    R r = RingOps<R>::one();
    for (long long i = 0; i < e; ++i) r = r * base;
    return r;
}

inline long long binom2(long long n) { return n * (n - 1) / 2; }

/* sum over n in {start, start+2, ...} of q^binom(n,2) a^n / (q;q)_n,
 * with a = coefficient * q^q_exponent.  stride 1 gives the full Euler sum. */
template <class R>
TruncatedSeries<R> euler_sum(const FactorSpec<R>& a, int order, long long start, long long stride) {
    TruncatedSeries<R> total(order);
    for (long long n = start;; n += stride) {
        const long long lead = binom2(n) + n * a.q_exponent;
        if (lead > order) break;
        FactorSpec<R> base{RingOps<R>::one(), 1, 1};  // (q; q)_n
        TruncatedSeries<R> term = poch_finite(base, n, order).invert();
        term = term.scaled(pow_int(a.coefficient, n)).shifted(static_cast<int>(lead));
        total = total + term;
    }
    return total;
}

} // namespace detail

/* Verifies  sum_{n>=0} q^binom(n,2) a^n / (q;q)_n = (-a; q)_inf  up to the
 * order.  The identity's Pochhammer base is q itself, so spec.step must
 * be 1. */
template <class R>
int euler_product_check(const FactorSpec<R>& a, int order) {
    if (a.step != 1)
        throw std::invalid_argument("euler_product_check: base is q, step must be 1");
    TruncatedSeries<R> lhs = detail::euler_sum(a, order, 0, 1);
    FactorSpec<R> neg{-a.coefficient, a.q_exponent, 1};
    TruncatedSeries<R> rhs = poch_infinite(neg, order);
    return first_difference(lhs, rhs);
}

/* Even/odd dissection of the same identity:
 *   sum_n q^binom(2n,2)   a^{2n}   / (q;q)_{2n}   = ((-a;q)inf + (a;q)inf)/2
 *   sum_n q^binom(2n+1,2) a^{2n+1} / (q;q)_{2n+1} = ((-a;q)inf - (a;q)inf)/2
 * Returns the first differing index of each split (-1 = pass).  Division
 * by 2 must be exact in R; InexactDivision otherwise. */
template <class R>
std::pair<int, int> euler_dissection(const FactorSpec<R>& a, int order) {
    if (a.step != 1)
        throw std::invalid_argument("euler_dissection: base is q, step must be 1");
    FactorSpec<R> neg{-a.coefficient, a.q_exponent, 1};
    FactorSpec<R> pos{a.coefficient, a.q_exponent, 1};
    const TruncatedSeries<R> pn = poch_infinite(neg, order);
    const TruncatedSeries<R> pp = poch_infinite(pos, order);

    const TruncatedSeries<R> even_lhs = detail::euler_sum(a, order, 0, 2);
    const TruncatedSeries<R> even_rhs = (pn + pp).divided_exact(2);
    const TruncatedSeries<R> odd_lhs = detail::euler_sum(a, order, 1, 2);
    const TruncatedSeries<R> odd_rhs = (pn - pp).divided_exact(2);

    return {first_difference(even_lhs, even_rhs), first_difference(odd_lhs, odd_rhs)};
}

/* Ring-change helpers. */
inline TruncatedSeries<QuadElem> to_quad(const TruncatedSeries<BigInt>& f) {
    TruncatedSeries<QuadElem> g(f.order());
    for (int n = 0; n <= f.order(); ++n) g.set_coeff(n, QuadElem(f.coeff(n), BigInt(0)));
    return g;
}

inline TruncatedSeries<BigInt> at_tracking_one(const TruncatedSeries<TrackedPoly>& f) {
    TruncatedSeries<BigInt> g(f.order());
    for (int n = 0; n <= f.order(); ++n) g.set_coeff(n, f.coeff(n).evaluate_at_one());
    return g;
}

} // namespace cylq

#endif
