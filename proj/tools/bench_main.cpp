// Compares the serial reference kernels against their OpenMP versions on
// sizable workloads and reports timings and speedups.  Results must agree
// exactly; a mismatch aborts.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cylq/enumerate.hpp"
#include "cylq/identities.hpp"
#include "cylq/series.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_ms(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name,
                serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

void bench_series_mul(int order) {
    using cylq::BigInt;
    const auto f = cylq::f11_closed(order);
    const auto g = cylq::borodin_series(cylq::Profile({1, 1}), order);

    cylq::TruncatedSeries<BigInt> hs(order), hp(order);
    const double s = time_ms([&] { hs = cylq::mul_serial(f, g); });
    const double p = time_ms([&] { hp = cylq::mul_parallel(f, g); });
    if (!(hs == hp)) {
        std::fprintf(stderr, "series multiplication mismatch at order %d\n", order);
        std::exit(1);
    }
    report(("series mul, integer, N=" + std::to_string(order)).c_str(), s, p);
}

void bench_quad_mul(int order) {
    using cylq::QuadElem;
    cylq::FactorSpec<QuadElem> neg{-QuadElem::sqrt2(), 0, 1};
    cylq::FactorSpec<QuadElem> pos{QuadElem::sqrt2(), 0, 1};
    const auto f = cylq::poch_infinite(neg, order);
    const auto g = cylq::poch_infinite(pos, order);

    cylq::TruncatedSeries<QuadElem> hs(order), hp(order);
    const double s = time_ms([&] { hs = cylq::mul_serial(f, g); });
    const double p = time_ms([&] { hp = cylq::mul_parallel(f, g); });
    if (!(hs == hp)) {
        std::fprintf(stderr, "quad multiplication mismatch at order %d\n", order);
        std::exit(1);
    }
    report(("series mul, Z[sqrt2], N=" + std::to_string(order)).c_str(), s, p);
}

void bench_enumeration(const cylq::Profile& profile, long long weight) {
    std::vector<cylq::CylindricPartition> serial, parallel;
    const double s =
        time_ms([&] { serial = cylq::enumerate_cylindric_serial(profile, weight); });
    const double p = time_ms([&] { parallel = cylq::enumerate_cylindric(profile, weight); });
    if (serial != parallel) {
        std::fprintf(stderr, "enumeration mismatch for %s at weight %lld\n",
                     profile.to_string().c_str(), weight);
        std::exit(1);
    }
    report(("enumerate " + profile.to_string() + ", n=" + std::to_string(weight) + " (" +
            std::to_string(serial.size()) + " objects)")
               .c_str(),
           s, p);
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the same code path\n");
#endif

    if (quick) {
        bench_series_mul(600);
        bench_quad_mul(400);
        bench_enumeration(cylq::Profile({1, 1}), 22);
        return 0;
    }

    bench_series_mul(1500);
    bench_series_mul(3000);
    bench_quad_mul(1200);
    bench_enumeration(cylq::Profile({1, 1}), 31);
    bench_enumeration(cylq::Profile({2, 1}), 29);
    bench_enumeration(cylq::Profile({1, 2, 0}), 19);
    return 0;
}
