// Compares the serial reference scans with the OpenMP bitmask kernels.
#include <chrono>
#include <cstdio>

#include <omp.h>

#include "copatt/config.hpp"
#include "copatt/oracle.hpp"
#include "copatt/series.hpp"

using namespace copatt;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return ms_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = 22;
    if (argc > 1) max_n = std::atoi(argv[1]);
    if (max_n > resource_cap()) set_resource_cap(max_n);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %6s %12s %12s %9s %7s\n", "kernel", "n", "serial ms", "parallel ms",
                "speedup", "agree");

    const Spop w = Spop::parse("112");
    for (int n = max_n - 4; n <= max_n; n += 2) {
        BigInt a, b;
        const double ts = timed([&] { a = oracle::total_occurrences_serial(w, n); });
        const double tp = timed([&] { b = oracle::total_occurrences(w, n); });
        std::printf("%-28s %6d %12.1f %12.1f %8.2fx %7s\n", "total_occurrences(112)", n, ts, tp,
                    ts / tp, a == b ? "yes" : "NO");
    }
    for (int n = max_n - 4; n <= max_n; n += 2) {
        oracle::CountTable a, b;
        const double ts = timed([&] { a = oracle::kpart_table_serial(n, 2); });
        const double tp = timed([&] { b = oracle::kpart_table(n, 2); });
        std::printf("%-28s %6d %12.1f %12.1f %8.2fx %7s\n", "kpart_table(k=2)", n, ts, tp,
                    ts / tp, a == b ? "yes" : "NO");
    }
    // the serial palindrome reference filters the full composition stream, so
    // its cost is 2^(N-1) like the other serial scans
    for (int N = max_n - 4 + (max_n & 1); N <= max_n; N += 2) {
        BigInt a, b;
        const double ts = timed([&] { a = oracle::palindrome_kparts_serial(N, 1); });
        const double tp = timed([&] { b = oracle::palindrome_kparts(N, 1); });
        std::printf("%-28s %6d %12.1f %12.1f %8.2fx %7s\n", "palindrome_kparts(k=1)", N, ts, tp,
                    ts / tp, a == b ? "yes" : "NO");
    }
    {
        const Caps caps{14, 14, 14};
        TruncatedSeries3 f(caps), g(caps);
        for (int a = 0; a <= caps.nx; ++a)
            for (int b = 0; b <= caps.ny; ++b)
                for (int c = 0; c <= caps.nz; ++c) {
                    f.set(a, b, c, (a * 31 + b * 7 + c) % 11 - 5);
                    g.set(a, b, c, (a * 13 + b * 3 + c * 5) % 9 - 4);
                }
        TruncatedSeries3 r1 = TruncatedSeries3::zero(caps), r2 = TruncatedSeries3::zero(caps);
        const double ts = timed([&] { r1 = mul_serial(f, g); });
        const double tp = timed([&] { r2 = mul(f, g); });
        std::printf("%-28s %6d %12.1f %12.1f %8.2fx %7s\n", "series mul caps(14,14,14)", 14, ts,
                    tp, ts / tp, r1 == r2 ? "yes" : "NO");
    }
    return 0;
}
