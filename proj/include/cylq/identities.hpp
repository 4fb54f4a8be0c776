#ifndef CYLQ_IDENTITIES_HPP
#define CYLQ_IDENTITIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylq/enumerate.hpp"
#include "cylq/partition.hpp"
#include "cylq/series.hpp"

namespace cylq {

struct VerificationReport {
    std::string identity;
    int order = 0;
    bool pass = false;
    int first_diff = -1;      // -1 when the sides agree
    std::string lhs, rhs;     // the two differing coefficients, when failing
    std::string note;         // extra context (informational checks)
    double millis = 0.0;
};

/* s(i,j) = c_i + ... + c_j, with s(i+1, i) = 0 (empty range).
 * Indices are 1-based; out-of-range indices throw std::out_of_range. */
int s_range(const Profile& c, int i, int j);

/* The product expansion of F_c(1,q): exponent/modulus pairs (e, t) for the
 * factors 1/(q^e; q^t)_inf, leading with the (t, t) factor.  Exposed so
 * tests can corrupt one exponent and watch the comparison fail. */
std::vector<std::pair<int, int>> borodin_factor_exponents(const Profile& c);

/* prod over (e, t) of 1/(q^e; q^t)_inf, truncated. */
TruncatedSeries<BigInt> product_of_inverse_pochhammers(
    const std::vector<std::pair<int, int>>& factors, int order);

TruncatedSeries<BigInt> borodin_series(const Profile& c, int order);

/* Closed forms for the two small profiles. */
TruncatedSeries<BigInt> f11_closed(int order);  // (-q;q^2)inf / (q;q)inf
TruncatedSeries<BigInt> f20_closed(int order);  // (-q^2;q^2)inf / (q;q)inf

/* (-zq;q^2)inf / (zq;q)inf; z tracks the largest part. */
TruncatedSeries<TrackedPoly> f11_bivariate(int order);

/* 1/(q^2;q^4)inf = (-q^2;q^2)inf. */
VerificationReport euler_odd_distinct_check(int order);

/* Distinct-part generating functions at t = 1:
 *   d11: sum_n q^binom(2n,2)   2^n / (q;q)_{2n}
 *   d20: sum_n q^binom(2n+1,2) 2^n / (q;q)_{2n+1}        */
TruncatedSeries<BigInt> d11_series(int order);
TruncatedSeries<BigInt> d20_series(int order);

/* Bivariate versions with t tracking the largest part.  The n = 0 summand
 * of the first sum is taken as the constant 1 (the empty cylindric
 * partition); the formal t^{-1} reading is not a polynomial. */
TruncatedSeries<TrackedPoly> d11_bivariate(int order);
TruncatedSeries<TrackedPoly> d20_bivariate(int order);

/* The three Z[sqrt2] identities:
 *   D11(1,q)                 = ((-s;q)inf + (s;q)inf) / 2
 *   D20(1,q)                 = ((-s;q)inf - (s;q)inf) / (2 s)
 *   D11(1,q) + s * D20(1,q)  = (-s;q)inf              with s = sqrt2.
 * All divisions must be exact; InexactDivision signals a bug. */
std::vector<VerificationReport> sqrt2_product_checks(int order);

/* The two displayed forms of the all-odd generating function. */
TruncatedSeries<BigInt> oc_two_sum(int order);
TruncatedSeries<BigInt> oc_closed(int order);

/* Exploratory comparison (documentation, not an assertion): per weight,
 * the series coefficient, the naive all-odd enumeration count, and the
 * number of valid doubled-odd pairs of that effective weight. */
struct OcComparisonRow {
    int weight = 0;
    BigInt series_coefficient;
    long long enumeration = 0;
    long long pair_count = 0;
};

std::vector<OcComparisonRow> oc_vs_enumeration(int max_weight);
std::string format_oc_table(const std::vector<OcComparisonRow>& rows);

/* Orders for the full verification run.  Defaults match the library's
 * documented guarantees; they keep the suite in CI-minutes territory. */
struct VerifyConfig {
    int univariate = 200;        // product-vs-product comparisons
    int odd_distinct = 500;
    int f11_bivariate_order = 20;
    int distinct_bivariate = 16;
    int distinct_t1 = 22;
    int enumeration = 25;        // 2-row profiles
    int three_row = 15;          // (1,2,0)
    int dissection = 50;
    int oc_table = 25;
};

/* Builds a report by comparing two series coefficientwise; on mismatch the
 * report carries the first differing index and both coefficients. */
VerificationReport compare_series(const std::string& name,
                                  const TruncatedSeries<BigInt>& lhs,
                                  const TruncatedSeries<BigInt>& rhs);

const std::vector<std::string>& verify_check_names();

/* Runs one named check; std::nullopt for an unknown name.  The override
 * replaces the check's default order. */
std::optional<VerificationReport> run_check(const std::string& name,
                                            const VerifyConfig& config = {},
                                            std::optional<int> order_override = {});

/* Every check at its configured order.  The oc-table entry is
 * informational and always passes; everything else gates. */
std::vector<VerificationReport> verify_all(const VerifyConfig& config = {});

} // namespace cylq

#endif
