// Acceptance suite: runs every gating criterion at its stated tolerance and
// prints one PASS/FAIL line each.  Exact arithmetic throughout -- every
// comparison is equality, there are no tolerances to tune.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "cylq/bijection.hpp"
#include "cylq/enumerate.hpp"
#include "cylq/identities.hpp"

using namespace cylq;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

bool report(int id, const std::string& what, bool pass, Clock::time_point start,
            const std::string& detail = "", bool gating = true) {
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    const char* tag = !gating ? "INFO" : pass ? "PASS" : "FAIL";
    std::printf("[%s] criterion %2d: %s (%.0f ms)%s%s\n", tag, id, what.c_str(), ms,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (gating && !pass) ++failures;
    return pass;
}

CylindricPartition cyl(const Profile& profile, std::vector<std::vector<long long>> rows) {
    auto res = validate_cylindric(rows, profile);
    if (!res.ok()) throw std::logic_error("fixture invalid: " + res.failure->message);
    return *res.value;
}

void criterion_1() {
    const auto start = Clock::now();
    auto [pair, trace] = forward_11(cyl(Profile({1, 1}), {{7, 4, 4, 3}, {6, 5, 4}}), true);
    const bool ok = pair.mu == Partition({5, 5, 4, 3, 3, 3, 2}) &&
                    pair.beta == Partition({7, 1});
    report(1, "golden forward example, profile (1,1)", ok, start);
}

void criterion_2() {
    const auto start = Clock::now();
    auto cp = inverse_11({Partition({6, 5, 5, 3, 1}), Partition({9, 7, 3}),
                          PairFlavor::DistinctOdd},
                         true);
    const bool ok = cp.rows[0] == Partition({8, 8, 2, 2, 1}) &&
                    cp.rows[1] == Partition({9, 5, 3, 1});
    report(2, "golden inverse example, profile (1,1)", ok, start);
}

void criterion_3() {
    const auto start = Clock::now();
    bool ok = true;
    long long objects = 0, pairs = 0;

    for (long long n = 0; n <= 20 && ok; ++n) {
        for (const auto& cp : enumerate_cylindric(Profile({1, 1}), n)) {
            auto [pair, trace] = forward_11(cp, true);
            ok = ok && inverse_11(pair) == cp &&
                 pair.mu.weight() + pair.beta.weight() == n;
            ++objects;
        }
        for (const auto& cp : enumerate_cylindric(Profile({2, 0}), n)) {
            auto [pair, trace] = forward_20(cp, true);
            ok = ok && inverse_20(pair) == cp &&
                 pair.mu.weight() + pair.beta.weight() == n;
            ++objects;
        }
        for (const auto& pair : all_pairs(PairFlavor::DistinctOdd, n)) {
            auto [back, trace] = forward_11(inverse_11(pair, true));
            ok = ok && back == pair;
            ++pairs;
        }
        for (const auto& pair : all_pairs(PairFlavor::DistinctEven, n)) {
            auto [back, trace] = forward_20(inverse_20(pair, true));
            ok = ok && back == pair;
            ++pairs;
        }
    }
    report(3, "round trips to weight 20, both profiles, both directions", ok, start,
           std::to_string(objects) + " objects, " + std::to_string(pairs) + " pairs");
}

void criterion_4() {
    const auto start = Clock::now();
    bool ok = first_difference(borodin_series(Profile({1, 1}), 200), f11_closed(200)) == -1;
    ok = ok &&
         first_difference(borodin_series(Profile({2, 0}), 200), f20_closed(200)) == -1;

    const auto f11 = f11_closed(25);
    const auto counts11 = count_sequence(Profile({1, 1}), 25);
    const auto f20 = f20_closed(25);
    const auto counts20 = count_sequence(Profile({2, 0}), 25);
    for (int n = 0; n <= 25; ++n) {
        ok = ok && f11.coeff(n) == counts11[static_cast<std::size_t>(n)];
        ok = ok && f20.coeff(n) == counts20[static_cast<std::size_t>(n)];
    }
    const std::vector<long long> spot{1, 2, 3, 6, 10};
    for (int n = 0; n <= 4; ++n) ok = ok && f11.coeff(n) == spot[static_cast<std::size_t>(n)];
    report(4, "Borodin = closed forms to 200, = enumeration to 25", ok, start);
}

void criterion_5() {
    const auto start = Clock::now();
    auto rep = euler_odd_distinct_check(500);
    report(5, "1/(q^2;q^4)inf = (-q^2;q^2)inf to 500", rep.pass, start);
}

void criterion_6() {
    const auto start = Clock::now();
    const int N = 18;
    auto f = f11_bivariate(N);
    auto table = refined_counts(Profile({1, 1}), N);
    bool ok = true;
    for (int n = 0; n <= N && ok; ++n)
        for (int m = 0; m <= n && ok; ++m) ok = f.coeff(n).coeff(m) == table.at(m, n);
    report(6, "bivariate product = refined enumeration to 18", ok, start);
}

void criterion_7() {
    const auto start = Clock::now();
    bool ok = true;
    {
        auto d11 = d11_series(22);
        auto d20 = d20_series(22);
        auto c11 = count_sequence(Profile({1, 1}), 22, PartFilter::Distinct);
        auto c20 = count_sequence(Profile({2, 0}), 22, PartFilter::Distinct);
        for (int n = 0; n <= 22; ++n) {
            ok = ok && d11.coeff(n) == c11[static_cast<std::size_t>(n)];
            ok = ok && d20.coeff(n) == c20[static_cast<std::size_t>(n)];
        }
    }
    {
        const int N = 16;
        auto b11 = d11_bivariate(N);
        auto b20 = d20_bivariate(N);
        auto t11 = refined_counts(Profile({1, 1}), N, PartFilter::Distinct);
        auto t20 = refined_counts(Profile({2, 0}), N, PartFilter::Distinct);
        for (int n = 0; n <= N && ok; ++n)
            for (int m = 0; m <= n && ok; ++m) {
                ok = b11.coeff(n).coeff(m) == t11.at(m, n) &&
                     b20.coeff(n).coeff(m) == t20.at(m, n);
            }
    }
    report(7, "distinct-part sums: t=1 to 22, bivariate to 16", ok, start);
}

void criterion_8() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        for (const auto& rep : sqrt2_product_checks(200)) ok = ok && rep.pass;
        auto routes = run_check("dissection-routes", {}, 200);
        ok = ok && routes && routes->pass;
    } catch (const InexactDivision& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "Z[sqrt2] identities to 200, dissection route = integer-sum route", ok, start,
           detail);
}

void criterion_9() {
    const auto start = Clock::now();
    bool ok = first_difference(oc_two_sum(200), oc_closed(200)) == -1;
    long long pairs = 0;
    for (long long n = 0; n <= 20 && ok; ++n) {
        for (const auto& pair : all_doubled_odd_pairs(n)) {
            auto cp = inverse_odd_11(pair, false, true);
            for (const auto& row : cp.rows) ok = ok && row.all_odd();
            auto back = forward_odd_11(cp);
            ok = ok && back.in_image() && *back.pair == pair &&
                 cp.weight() == pair.effective_weight();
            ++pairs;
        }
    }
    report(9, "two displayed all-odd forms agree to 200; doubled round trip to 20", ok,
           start, std::to_string(pairs) + " pairs");
}

void criterion_10(const std::string& docs_path) {
    const auto start = Clock::now();
    const auto rows = oc_vs_enumeration(25);
    int first_divergence = -1;
    for (const auto& r : rows)
        if (BigInt(r.enumeration) != r.series_coefficient) {
            first_divergence = r.weight;
            break;
        }
    std::string detail =
        first_divergence < 0
            ? "series matches the all-odd enumeration everywhere"
            : "series and all-odd enumeration first diverge at weight " +
                  std::to_string(first_divergence);

    bool docs_ok = true;
    if (!docs_path.empty()) {
        std::ifstream in(docs_path);
        if (!in) {
            docs_ok = false;
            detail += "; committed table missing at " + docs_path;
        } else {
            std::stringstream buf;
            buf << in.rdbuf();
            const std::string committed = buf.str();
            docs_ok = committed.find(format_oc_table(rows)) != std::string::npos;
            if (!docs_ok) detail += "; committed table is stale";
        }
    }
    // the divergence itself is informational; a stale committed table gates
    report(10, "all-odd comparison table to 25", docs_ok, start, detail,
           /*gating=*/!docs_path.empty());
}

void criterion_11() {
    const auto start = Clock::now();
    bool ok = true;

    auto factors = borodin_factor_exponents(Profile({1, 1}));
    factors[1].first += 1;
    ok = ok && first_difference(product_of_inverse_pochhammers(factors, 60),
                                f11_closed(60)) == 1;

    bool threw = false;
    try {
        inverse_11({Partition({2, 1}), Partition({3, 3}), PairFlavor::DistinctOdd});
    } catch (const BetaNotDistinctOdd&) {
        threw = true;
    }
    ok = ok && threw;
    report(11, "negative controls: corrupted exponent, non-distinct beta", ok, start);
}

} // namespace

int main(int argc, char** argv) {
    std::string docs_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--docs") docs_path = argv[i + 1];

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(docs_path);
    criterion_11();

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria satisfied\n");
    return 0;
}
