#include <doctest.h>

#include <random>

#include "cylq/enumerate.hpp"
#include "cylq/errors.hpp"
#include "cylq/rings.hpp"
#include "cylq/series.hpp"

using namespace cylq;

namespace {

FactorSpec<BigInt> int_spec(long long c, int e, int step) {
    return FactorSpec<BigInt>{BigInt(c), e, step};
}

TruncatedSeries<BigInt> from_ints(std::vector<long long> v) {
    TruncatedSeries<BigInt> s(static_cast<int>(v.size()) - 1);
    for (std::size_t i = 0; i < v.size(); ++i) s.set_coeff(static_cast<int>(i), BigInt(v[i]));
    return s;
}

QuadElem random_quad(std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(-20, 20);
    return QuadElem(BigInt(d(rng)), BigInt(d(rng)));
}

TrackedPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(-9, 9);
    std::uniform_int_distribution<int> deg(0, 4);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : coeffs) c = d(rng);
    return TrackedPoly(std::move(coeffs));
}

} // namespace

TEST_CASE("quad ring: arithmetic laws under randomized inputs") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 300; ++i) {
        const QuadElem x = random_quad(rng), y = random_quad(rng), z = random_quad(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        // conjugation norm
        CHECK(x * x.conjugate() == QuadElem(x.norm(), BigInt(0)));
    }
}

TEST_CASE("quad ring: units, inverse, sqrt2 division") {
    CHECK(QuadElem(1, 1) * QuadElem(-1, 1) == QuadElem(1));  // (1+s)(-1+s) = 1
    CHECK(RingOps<QuadElem>::is_unit(QuadElem(1, 1)));
    CHECK(!RingOps<QuadElem>::is_unit(QuadElem(2)));
    CHECK(RingOps<QuadElem>::unit_inverse(QuadElem(1, 1)) * QuadElem(1, 1) == QuadElem(1));

    CHECK(QuadElem(4, 3).div_sqrt2() == QuadElem(3, 2));  // (4+3s)/s = 3 + 2s
    CHECK_THROWS_AS(QuadElem(3, 1).div_sqrt2(), InexactDivision);
    CHECK_THROWS_AS(RingOps<QuadElem>::divide_exact(QuadElem(3, 2), 2), InexactDivision);

    // (1+s)(1-s) = -1
    CHECK(QuadElem(1, 1) * QuadElem(1, -1) == QuadElem(-1));
}

TEST_CASE("tracked polynomials: ring laws and normalization") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const TrackedPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK((x - x).is_zero());
    }
    CHECK(TrackedPoly({std::vector<BigInt>{BigInt(1), BigInt(0)}}) == TrackedPoly(1));
    CHECK(TrackedPoly::variable().degree() == 1);
    CHECK(TrackedPoly::monomial(3).evaluate_at_one() == 1);
}

TEST_CASE("series add/mul basics") {
    auto f = from_ints({1, 1, 0});   // 1 + q
    auto g = from_ints({1, -1, 0});  // 1 - q
    CHECK(f * g == from_ints({1, 0, -1}));  // 1 - q^2 at N=2

    CHECK_THROWS_AS(f + TruncatedSeries<BigInt>(5), OrderMismatch);
}

TEST_CASE("inversion") {
    // (q;q)inf inverted: partition numbers
    auto euler = poch_infinite(int_spec(1, 1, 1), 5);
    auto partitions = euler.invert();
    CHECK(partitions == from_ints({1, 1, 2, 3, 5, 7}));
    CHECK(mul_serial(euler, partitions) == TruncatedSeries<BigInt>::one(5));

    // geometric series
    auto one_minus_q = from_ints({1, -1, 0, 0});
    CHECK(one_minus_q.invert() == from_ints({1, 1, 1, 1}));

    TruncatedSeries<BigInt> zero_const(3);
    CHECK_THROWS_AS(zero_const.invert(), NonUnitConstantTerm);
}

TEST_CASE("inversion contract for every ring") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> d(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries<BigInt> f(12);
        f.set_coeff(0, BigInt(trial % 2 ? 1 : -1));
        for (int n = 1; n <= 12; ++n) f.set_coeff(n, BigInt(d(rng)));
        CHECK(mul_serial(f, f.invert()) == TruncatedSeries<BigInt>::one(12));
    }
    // Z[sqrt2]: unit constant term 1+sqrt2
    TruncatedSeries<QuadElem> g(8);
    g.set_coeff(0, QuadElem(1, 1));
    for (int n = 1; n <= 8; ++n) g.set_coeff(n, random_quad(rng));
    CHECK(mul_serial(g, g.invert()) == TruncatedSeries<QuadElem>::one(8));
}

TEST_CASE("poch_finite small products") {
    CHECK(poch_finite(int_spec(1, 1, 1), 2, 3) == from_ints({1, -1, -1, 1}));  // (q;q)_2
    CHECK(poch_finite(int_spec(1, 1, 1), 0, 3) == TruncatedSeries<BigInt>::one(3));

    // (tq;q)_2 at N=2: 1 - tq - tq^2
    FactorSpec<TrackedPoly> tq{TrackedPoly::variable(), 1, 1};
    auto p = poch_finite(tq, 2, 2);
    CHECK(p.coeff(0) == TrackedPoly(1));
    CHECK(p.coeff(1) == -TrackedPoly::variable());
    CHECK(p.coeff(2) == -TrackedPoly::variable());
}

TEST_CASE("poch_infinite examples") {
    // (-q;q^2)inf at N=4: 1 + q + q^3 + q^4
    CHECK(poch_infinite(int_spec(-1, 1, 2), 4) == from_ints({1, 1, 0, 1, 1}));
    // (q^2;q^4)inf at N=2: only the first factor contributes
    CHECK(poch_infinite(int_spec(1, 2, 4), 2) == from_ints({1, 0, -1}));
    // (-sqrt2;q)inf constant and q^1 coefficients
    FactorSpec<QuadElem> neg{-QuadElem::sqrt2(), 0, 1};
    auto p = poch_infinite(neg, 3);
    CHECK(p.coeff(0) == QuadElem(1, 1));
    CHECK(p.coeff(1) == QuadElem(2, 1));  // sqrt2 * (1 + sqrt2)

    CHECK_THROWS_AS(poch_infinite(int_spec(2, 0, 0), 4), NotTruncatable);
}

TEST_CASE("poch prefix property: first n factors fix the series up to the first omitted degree") {
    for (int step : {1, 2, 3}) {
        FactorSpec<BigInt> spec{BigInt(1), 1, step};
        const int N = 24;
        auto full = poch_infinite(spec, N);
        for (long long n : {1LL, 2LL, 4LL}) {
            auto partial = poch_finite(spec, n, N);
            const int agree_up_to = std::min<long long>(N, spec.q_exponent + n * step - 1);
            for (int d = 0; d <= agree_up_to; ++d) CHECK(partial.coeff(d) == full.coeff(d));
        }
    }
}

TEST_CASE("serial and parallel multiplication agree") {
    auto f = poch_infinite(int_spec(-1, 1, 2), 300);
    auto g = poch_infinite(int_spec(1, 1, 1), 300).invert();
    CHECK(mul_serial(f, g) == mul_parallel(f, g));

    FactorSpec<QuadElem> neg{-QuadElem::sqrt2(), 0, 1};
    FactorSpec<QuadElem> pos{QuadElem::sqrt2(), 0, 1};
    auto a = poch_infinite(neg, 150);
    auto b = poch_infinite(pos, 150);
    CHECK(mul_serial(a, b) == mul_parallel(a, b));
}

TEST_CASE("poch_infinite times its inverse is one, every ring") {
    auto p_int = poch_infinite(int_spec(-1, 1, 2), 40);
    CHECK(mul_serial(p_int, p_int.invert()) == TruncatedSeries<BigInt>::one(40));

    auto p_quad = poch_infinite(FactorSpec<QuadElem>{-QuadElem::sqrt2(), 0, 1}, 30);
    CHECK(mul_serial(p_quad, p_quad.invert()) == TruncatedSeries<QuadElem>::one(30));

    auto p_poly = poch_infinite(FactorSpec<TrackedPoly>{TrackedPoly::variable(), 1, 1}, 20);
    CHECK(mul_serial(p_poly, p_poly.invert()) == TruncatedSeries<TrackedPoly>::one(20));
}

TEST_CASE("1/(q;q)inf matches the partition enumerator to n = 40") {
    auto series = poch_infinite(int_spec(1, 1, 1), 40).invert();
    for (long long n = 0; n <= 40; ++n)
        CHECK(series.coeff(static_cast<int>(n)) ==
              static_cast<long long>(partitions_of(n).size()));
}

TEST_CASE("euler product identity") {
    CHECK(euler_product_check(int_spec(1, 1, 1), 30) == -1);  // a = q
    CHECK(euler_product_check(FactorSpec<QuadElem>{QuadElem::sqrt2(), 0, 1}, 50) == -1);
    CHECK(euler_product_check(FactorSpec<TrackedPoly>{TrackedPoly::variable(), 1, 1}, 20) ==
          -1);  // a = zq
    CHECK_THROWS_AS(euler_product_check(int_spec(1, 1, 2), 10), std::invalid_argument);
}

TEST_CASE("euler dissection") {
    auto [even_q, odd_q] = euler_dissection(int_spec(1, 1, 1), 30);
    CHECK(even_q == -1);
    CHECK(odd_q == -1);

    auto [even_s, odd_s] = euler_dissection(FactorSpec<QuadElem>{QuadElem::sqrt2(), 0, 1}, 50);
    CHECK(even_s == -1);
    CHECK(odd_s == -1);

    auto [even_0, odd_0] = euler_dissection(int_spec(1, 1, 1), 0);
    CHECK(even_0 == -1);
    CHECK(odd_0 == -1);
}

TEST_CASE("tracked degree never exceeds the weight") {
    FactorSpec<TrackedPoly> neg{-TrackedPoly::variable(), 1, 2};
    FactorSpec<TrackedPoly> pos{TrackedPoly::variable(), 1, 1};
    auto f = mul_serial(poch_infinite(neg, 12), poch_infinite(pos, 12).invert());
    for (int n = 0; n <= 12; ++n) CHECK(f.coeff(n).degree() <= n);
}

TEST_CASE("shift and scale") {
    auto f = from_ints({1, 2, 3, 4});
    CHECK(f.shifted(2) == from_ints({0, 0, 1, 2}));
    CHECK(f.scaled(BigInt(-3)) == from_ints({-3, -6, -9, -12}));
    CHECK(f.divided_exact(1) == f);
    CHECK_THROWS_AS(from_ints({1, 3}).divided_exact(2), InexactDivision);
}
