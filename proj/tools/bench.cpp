// Compares the OpenMP model-evaluation kernel against the serial pruning
// reference on growing classification grids and checks they agree.

#include "ulrich/classifier.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

using namespace ulrich;

static double time_ms(const std::function<std::vector<ClassificationRow>()>& f,
                      std::vector<ClassificationRow>& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int main(int argc, char** argv) {
    int factor = argc > 1 ? std::atoi(argv[1]) : 48;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%4s %6s %8s %12s %12s %8s\n", "n", "rmax", "models", "serial[ms]",
                "parallel[ms]", "speedup");
    for (int n : {6, 8, 10, 12}) {
        const int rmax = factor * spinor_rank(n);
        std::vector<ClassificationRow> serial_rows, parallel_rows;
        double ts = time_ms([&] { return classify_nonbig_serial(n, rmax); }, serial_rows);
        double tp = time_ms([&] { return classify_nonbig(n, rmax); }, parallel_rows);
        const long models = (long)(factor) * (factor + 3) / 2; // even n grid size
        if (serial_rows.size() != parallel_rows.size()) {
            std::fprintf(stderr, "MISMATCH at n=%d\n", n);
            return 1;
        }
        for (size_t i = 0; i < serial_rows.size(); ++i)
            if (!(serial_rows[i].model.a == parallel_rows[i].model.a &&
                  serial_rows[i].model.b == parallel_rows[i].model.b &&
                  serial_rows[i].witness == parallel_rows[i].witness)) {
                std::fprintf(stderr, "ROW MISMATCH at n=%d row %zu\n", n, i);
                return 1;
            }
        std::printf("%4d %6d %8ld %12.1f %12.1f %8.2f\n", n, rmax, models, ts, tp,
                    ts / tp);
    }
    std::puts("serial and parallel classifications agree");
    return 0;
}
