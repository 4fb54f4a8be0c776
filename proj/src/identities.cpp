#include "cylq/identities.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "cylq/bijection.hpp"

namespace cylq {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <class R>
VerificationReport compare(std::string name, const TruncatedSeries<R>& lhs,
                           const TruncatedSeries<R>& rhs, Clock::time_point start) {
    VerificationReport rep;
    rep.identity = std::move(name);
    rep.order = lhs.order();
    rep.first_diff = first_difference(lhs, rhs);
    rep.pass = rep.first_diff < 0;
    if (!rep.pass) {
        rep.lhs = RingOps<R>::to_string(lhs.coeff(rep.first_diff));
        rep.rhs = RingOps<R>::to_string(rhs.coeff(rep.first_diff));
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

VerificationReport compare_counts(std::string name, const TruncatedSeries<BigInt>& series,
                                  const std::vector<long long>& counts,
                                  Clock::time_point start) {
    VerificationReport rep;
    rep.identity = std::move(name);
    rep.order = static_cast<int>(counts.size()) - 1;
    rep.pass = true;
    for (int n = 0; n < static_cast<int>(counts.size()); ++n) {
        if (series.coeff(n) != counts[static_cast<std::size_t>(n)]) {
            rep.pass = false;
            rep.first_diff = n;
            rep.lhs = series.coeff(n).str();
            rep.rhs = std::to_string(counts[static_cast<std::size_t>(n)]);
            break;
        }
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

FactorSpec<BigInt> int_spec(long long coeff, int q_exponent, int step) {
    return FactorSpec<BigInt>{BigInt(coeff), q_exponent, step};
}

} // namespace

int s_range(const Profile& c, int i, int j) {
    if (i < 1 || i > c.rank() + 1 || j < 0 || j > c.rank())
        throw std::out_of_range("s_range indices out of range");
    int s = 0;
    for (int x = i; x <= j; ++x) s += c.shift(x);  // empty when j < i
    return s;
}

std::vector<std::pair<int, int>> borodin_factor_exponents(const Profile& c) {
    const int k = c.rank();
    const int t = c.modulus();
    std::vector<std::pair<int, int>> factors;
    factors.emplace_back(t, t);
    for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int m = 1; m <= c.shift(i); ++m)
                factors.emplace_back(m + j - i + s_range(c, i + 1, j), t);
    for (int i = 2; i <= k; ++i)
        for (int j = 2; j <= i; ++j)
            for (int m = 1; m <= c.shift(i); ++m)
                factors.emplace_back(t - m + j - i - s_range(c, j, i - 1), t);
    return factors;
}

TruncatedSeries<BigInt> product_of_inverse_pochhammers(
    const std::vector<std::pair<int, int>>& factors, int order) {
    // assemble the full denominator first, one binomial pass per factor,
    // then invert once
    TruncatedSeries<BigInt> denom = TruncatedSeries<BigInt>::one(order);
    for (const auto& [e, t] : factors) {
        if (e <= 0) throw NotTruncatable("factor exponent must be positive");
        for (long long d = e; d <= order; d += t) denom.mul_one_minus(BigInt(1), static_cast<int>(d));
    }
    return denom.invert();
}

TruncatedSeries<BigInt> borodin_series(const Profile& c, int order) {
    return product_of_inverse_pochhammers(borodin_factor_exponents(c), order);
}

TruncatedSeries<BigInt> f11_closed(int order) {
    return poch_infinite(int_spec(-1, 1, 2), order) *
           poch_infinite(int_spec(1, 1, 1), order).invert();
}

TruncatedSeries<BigInt> f20_closed(int order) {
    return poch_infinite(int_spec(-1, 2, 2), order) *
           poch_infinite(int_spec(1, 1, 1), order).invert();
}

TruncatedSeries<TrackedPoly> f11_bivariate(int order) {
    const TrackedPoly z = TrackedPoly::variable();
    FactorSpec<TrackedPoly> neg{-z, 1, 2};  // (-zq; q^2)inf
    FactorSpec<TrackedPoly> pos{z, 1, 1};   // (zq; q)inf
    return poch_infinite(neg, order) * poch_infinite(pos, order).invert();
}

VerificationReport euler_odd_distinct_check(int order) {
    const auto start = Clock::now();
    const auto lhs = poch_infinite(int_spec(1, 2, 4), order).invert();  // 1/(q^2;q^4)inf
    const auto rhs = poch_infinite(int_spec(-1, 2, 2), order);          // (-q^2;q^2)inf
    return compare("euler-odd-distinct", lhs, rhs, start);
}

namespace {

/* sum over selected n of q^binom(n,2) 2^floor(n/2) / (q;q)_n, the common
 * shape of the two distinct-part sums at t = 1. */
TruncatedSeries<BigInt> distinct_sum(int order, long long start_n) {
    TruncatedSeries<BigInt> total(order);
    for (long long n = start_n;; n += 2) {
        const long long lead = n * (n - 1) / 2;
        if (lead > order) break;
        auto term = poch_finite(int_spec(1, 1, 1), n, order).invert();
        term = term.scaled(BigInt(1) << static_cast<unsigned>(n / 2))
                   .shifted(static_cast<int>(lead));
        total = total + term;
    }
    return total;
}

} // namespace

TruncatedSeries<BigInt> d11_series(int order) { return distinct_sum(order, 0); }
TruncatedSeries<BigInt> d20_series(int order) { return distinct_sum(order, 1); }

namespace {

TruncatedSeries<TrackedPoly> distinct_bivariate_sum(int order, long long start_n) {
    TruncatedSeries<TrackedPoly> total(order);
    for (long long n = start_n;; n += 2) {
        const long long lead = n * (n - 1) / 2;
        if (lead > order) break;
        if (n == 0) {
            // the empty cylindric partition: statistic pair (0,0), weight 0
            total = total + TruncatedSeries<TrackedPoly>::one(order);
            continue;
        }
        FactorSpec<TrackedPoly> tq{TrackedPoly::variable(), 1, 1};  // (tq; q)_n
        auto term = poch_finite(tq, n, order).invert();
        const TrackedPoly scale =
            TrackedPoly::monomial(static_cast<int>(n) - 1, BigInt(1) << static_cast<unsigned>(n / 2));
        term = term.scaled(scale).shifted(static_cast<int>(lead));
        total = total + term;
    }
    return total;
}

} // namespace

TruncatedSeries<TrackedPoly> d11_bivariate(int order) { return distinct_bivariate_sum(order, 0); }
TruncatedSeries<TrackedPoly> d20_bivariate(int order) { return distinct_bivariate_sum(order, 1); }

std::vector<VerificationReport> sqrt2_product_checks(int order) {
    std::vector<VerificationReport> reports;
    const QuadElem s2 = QuadElem::sqrt2();
    FactorSpec<QuadElem> neg{-s2, 0, 1};
    FactorSpec<QuadElem> pos{s2, 0, 1};

    auto start = Clock::now();
    const auto p_neg = poch_infinite(neg, order);  // (-sqrt2; q)inf
    const auto p_pos = poch_infinite(pos, order);  // (sqrt2; q)inf
    const auto d11 = to_quad(d11_series(order));
    const auto d20 = to_quad(d20_series(order));

    reports.push_back(
        compare("sqrt2-sum", d11, (p_neg + p_pos).divided_exact(2), start));

    start = Clock::now();
    TruncatedSeries<QuadElem> diff_half(order);
    {
        const auto diff = p_neg - p_pos;
        for (int n = 0; n <= order; ++n)
            diff_half.set_coeff(n, RingOps<QuadElem>::divide_exact(diff.coeff(n).div_sqrt2(), 2));
    }
    reports.push_back(compare("sqrt2-diff", d20, diff_half, start));

    start = Clock::now();
    reports.push_back(
        compare("sqrt2-combined", d11 + d20.scaled(s2), p_neg, start));
    return reports;
}

TruncatedSeries<BigInt> oc_two_sum(int order) {
    TruncatedSeries<BigInt> total(order);
    for (long long k = 0; 2 * k <= order; ++k) {
        auto term = poch_finite(int_spec(1, 2, 2), 2 * k, order).invert() *
                    poch_finite(int_spec(-1, 2, 4), k, order);
        total = total + term.shifted(static_cast<int>(2 * k));
    }
    for (long long k = 0; 2 * k + 1 <= order; ++k) {
        auto term = poch_finite(int_spec(1, 2, 2), 2 * k + 1, order).invert() *
                    poch_finite(int_spec(-1, 2, 4), k + 1, order);
        total = total + term.shifted(static_cast<int>(2 * k + 1));
    }
    return total;
}

TruncatedSeries<BigInt> oc_closed(int order) {
    TruncatedSeries<BigInt> total(order);
    for (long long k = 0; 2 * k <= order; ++k) {
        // numerator 1 + q - q^{4k+2} + q^{4k+3}
        TruncatedSeries<BigInt> numer(order);
        numer.set_coeff(0, BigInt(1));
        if (order >= 1) numer.set_coeff(1, BigInt(1));
        if (4 * k + 2 <= order) numer.set_coeff(static_cast<int>(4 * k + 2), BigInt(-1));
        if (4 * k + 3 <= order) numer.set_coeff(static_cast<int>(4 * k + 3), BigInt(1));
        auto term = poch_finite(int_spec(1, 2, 2), 2 * k + 1, order).invert() *
                    poch_finite(int_spec(-1, 2, 4), k, order);
        term = term * numer;
        total = total + term.shifted(static_cast<int>(2 * k));
    }
    return total;
}

std::vector<OcComparisonRow> oc_vs_enumeration(int max_weight) {
    const Profile c11({1, 1});
    const auto series = oc_two_sum(max_weight);
    std::vector<OcComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(max_weight) + 1);
    for (int n = 0; n <= max_weight; ++n) {
        OcComparisonRow row;
        row.weight = n;
        row.series_coefficient = series.coeff(n);
        row.enumeration =
            static_cast<long long>(enumerate_cylindric(c11, n, PartFilter::Odd).size());
        row.pair_count = static_cast<long long>(all_doubled_odd_pairs(n).size());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_oc_table(const std::vector<OcComparisonRow>& rows) {
    std::ostringstream out;
    out << "| weight | series | all-odd enumeration | doubled-odd pairs | enumeration - series |\n";
    out << "|-------:|-------:|--------------------:|------------------:|---------------------:|\n";
    int first_divergence = -1;
    for (const auto& r : rows) {
        const BigInt delta = BigInt(r.enumeration) - r.series_coefficient;
        if (delta != 0 && first_divergence < 0) first_divergence = r.weight;
        out << "| " << r.weight << " | " << r.series_coefficient.str() << " | "
            << r.enumeration << " | " << r.pair_count << " | " << delta.str() << " |\n";
    }
    if (first_divergence >= 0)
        out << "\nFirst divergence between the series and the all-odd enumeration: weight "
            << first_divergence << ".\n";
    else
        out << "\nNo divergence up to the tabulated weight.\n";
    return out.str();
}

namespace {

VerificationReport check_borodin_vs_closed(const char* name, const Profile& c,
                                           TruncatedSeries<BigInt> (*closed)(int), int order) {
    const auto start = Clock::now();
    return compare(name, borodin_series(c, order), closed(order), start);
}

VerificationReport check_series_vs_counts(const char* name,
                                          const TruncatedSeries<BigInt>& series,
                                          const Profile& c, PartFilter filter, int order,
                                          Clock::time_point start) {
    return compare_counts(name, series, count_sequence(c, order, filter), start);
}

VerificationReport check_bivariate_vs_refined(const char* name,
                                              const TruncatedSeries<TrackedPoly>& series,
                                              const Profile& c, PartFilter filter, int order) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.identity = name;
    rep.order = order;
    rep.pass = true;
    const RefinedCounts table = refined_counts(c, order, filter);
    for (int n = 0; n <= order && rep.pass; ++n) {
        const TrackedPoly& poly = series.coeff(n);
        for (int m = 0; m <= n; ++m) {
            if (poly.coeff(m) != table.at(m, n)) {
                rep.pass = false;
                rep.first_diff = n;
                rep.lhs = poly.coeff(m).str();
                rep.rhs = std::to_string(table.at(m, n));
                rep.note = "tracking degree " + std::to_string(m);
                break;
            }
        }
        // the statistic never exceeds the weight
        if (rep.pass && poly.degree() > n) {
            rep.pass = false;
            rep.first_diff = n;
            rep.note = "tracking degree exceeds weight";
        }
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

} // namespace

VerificationReport compare_series(const std::string& name,
                                  const TruncatedSeries<BigInt>& lhs,
                                  const TruncatedSeries<BigInt>& rhs) {
    return compare(name, lhs, rhs, Clock::now());
}

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {
        "borodin-f11",        "borodin-f20",            "f11-enum",
        "f20-enum",           "borodin-enum-120",       "borodin-enum-21",
        "euler-odd-distinct", "f11-bivariate",          "d11-enum",
        "d20-enum",           "d11-bivariate",          "d20-bivariate",
        "d11-specialization", "sqrt2-sum",              "sqrt2-diff",
        "sqrt2-combined",     "euler-product-q",        "euler-product-sqrt2",
        "euler-product-zq",   "euler-dissection-sqrt2", "dissection-routes",
        "oc-forms",           "oc-table",
    };
    return names;
}

std::optional<VerificationReport> run_check(const std::string& name,
                                            const VerifyConfig& config,
                                            std::optional<int> order_override) {
    const auto pick = [&](int def) { return order_override.value_or(def); };
    const auto start = Clock::now();

    if (name == "borodin-f11")
        return check_borodin_vs_closed("borodin-f11", Profile({1, 1}), f11_closed,
                                       pick(config.univariate));
    if (name == "borodin-f20")
        return check_borodin_vs_closed("borodin-f20", Profile({2, 0}), f20_closed,
                                       pick(config.univariate));
    if (name == "f11-enum") {
        const int N = pick(config.enumeration);
        return check_series_vs_counts("f11-enum", f11_closed(N), Profile({1, 1}),
                                      PartFilter::None, N, start);
    }
    if (name == "f20-enum") {
        const int N = pick(config.enumeration);
        return check_series_vs_counts("f20-enum", f20_closed(N), Profile({2, 0}),
                                      PartFilter::None, N, start);
    }
    if (name == "borodin-enum-120") {
        const int N = pick(config.three_row);
        return check_series_vs_counts("borodin-enum-120", borodin_series(Profile({1, 2, 0}), N),
                                      Profile({1, 2, 0}), PartFilter::None, N, start);
    }
    if (name == "borodin-enum-21") {
        const int N = pick(config.enumeration);
        return check_series_vs_counts("borodin-enum-21", borodin_series(Profile({2, 1}), N),
                                      Profile({2, 1}), PartFilter::None, N, start);
    }
    if (name == "euler-odd-distinct") return euler_odd_distinct_check(pick(config.odd_distinct));
    if (name == "f11-bivariate")
        return check_bivariate_vs_refined("f11-bivariate",
                                          f11_bivariate(pick(config.f11_bivariate_order)),
                                          Profile({1, 1}), PartFilter::None,
                                          pick(config.f11_bivariate_order));
    if (name == "d11-enum") {
        const int N = pick(config.distinct_t1);
        return check_series_vs_counts("d11-enum", d11_series(N), Profile({1, 1}),
                                      PartFilter::Distinct, N, start);
    }
    if (name == "d20-enum") {
        const int N = pick(config.distinct_t1);
        return check_series_vs_counts("d20-enum", d20_series(N), Profile({2, 0}),
                                      PartFilter::Distinct, N, start);
    }
    if (name == "d11-bivariate")
        return check_bivariate_vs_refined("d11-bivariate",
                                          d11_bivariate(pick(config.distinct_bivariate)),
                                          Profile({1, 1}), PartFilter::Distinct,
                                          pick(config.distinct_bivariate));
    if (name == "d20-bivariate")
        return check_bivariate_vs_refined("d20-bivariate",
                                          d20_bivariate(pick(config.distinct_bivariate)),
                                          Profile({2, 0}), PartFilter::Distinct,
                                          pick(config.distinct_bivariate));
    if (name == "d11-specialization") {
        const int N = pick(config.distinct_t1);
        return compare("d11-specialization", at_tracking_one(d11_bivariate(N)), d11_series(N),
                       start);
    }
    if (name == "sqrt2-sum" || name == "sqrt2-diff" || name == "sqrt2-combined") {
        auto all = sqrt2_product_checks(pick(config.univariate));
        for (auto& rep : all)
            if (rep.identity == name) return rep;
        return std::nullopt;
    }
    if (name == "euler-product-q") {
        const int N = pick(30);
        VerificationReport rep;
        rep.identity = name;
        rep.order = N;
        rep.first_diff = euler_product_check(int_spec(1, 1, 1), N);
        rep.pass = rep.first_diff < 0;
        rep.millis = elapsed_ms(start);
        return rep;
    }
    if (name == "euler-product-sqrt2") {
        const int N = pick(config.dissection);
        VerificationReport rep;
        rep.identity = name;
        rep.order = N;
        rep.first_diff =
            euler_product_check(FactorSpec<QuadElem>{QuadElem::sqrt2(), 0, 1}, N);
        rep.pass = rep.first_diff < 0;
        rep.millis = elapsed_ms(start);
        return rep;
    }
    if (name == "euler-product-zq") {
        const int N = pick(20);
        VerificationReport rep;
        rep.identity = name;
        rep.order = N;
        rep.first_diff =
            euler_product_check(FactorSpec<TrackedPoly>{TrackedPoly::variable(), 1, 1}, N);
        rep.pass = rep.first_diff < 0;
        rep.millis = elapsed_ms(start);
        return rep;
    }
    if (name == "euler-dissection-sqrt2") {
        const int N = pick(config.dissection);
        const auto [even_diff, odd_diff] =
            euler_dissection(FactorSpec<QuadElem>{QuadElem::sqrt2(), 0, 1}, N);
        VerificationReport rep;
        rep.identity = name;
        rep.order = N;
        rep.pass = even_diff < 0 && odd_diff < 0;
        rep.first_diff = even_diff >= 0 ? even_diff : odd_diff;
        rep.note = "even and odd splits";
        rep.millis = elapsed_ms(start);
        return rep;
    }
    if (name == "dissection-routes") {
        // route 1: powers of sqrt2 inside Z[sqrt2] via the Euler sum;
        // route 2: the integer 2^n sum mapped into Z[sqrt2]
        const int N = pick(config.univariate);
        FactorSpec<QuadElem> a{QuadElem::sqrt2(), 0, 1};
        TruncatedSeries<QuadElem> route1 = detail::euler_sum(a, N, 0, 2);
        return compare("dissection-routes", route1, to_quad(d11_series(N)), start);
    }
    if (name == "oc-forms") {
        const int N = pick(config.univariate);
        return compare("oc-forms", oc_two_sum(N), oc_closed(N), start);
    }
    if (name == "oc-table") {
        const int N = pick(config.oc_table);
        const auto rows = oc_vs_enumeration(N);
        VerificationReport rep;
        rep.identity = name;
        rep.order = N;
        rep.pass = true;  // informational: never gates
        int first_divergence = -1;
        for (const auto& r : rows)
            if (BigInt(r.enumeration) != r.series_coefficient) {
                first_divergence = r.weight;
                break;
            }
        rep.note = first_divergence < 0
                       ? "series matches all-odd enumeration"
                       : "series and all-odd enumeration diverge first at weight " +
                             std::to_string(first_divergence);
        rep.millis = elapsed_ms(start);
        return rep;
    }
    return std::nullopt;
}

std::vector<VerificationReport> verify_all(const VerifyConfig& config) {
    std::vector<VerificationReport> reports;
    for (const auto& name : verify_check_names()) {
        auto rep = run_check(name, config);
        if (rep) reports.push_back(std::move(*rep));
    }
    return reports;
}

} // namespace cylq
