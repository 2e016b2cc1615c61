// Times the parallel order-3 circuit scan against the serial reference.
#include <chrono>
#include <cstdio>
#include <string>

#include <omp.h>

#include "rootmat/linmatroid.hpp"

using namespace rootmat;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-6s %6s %8s %12s %12s %8s\n", "system", "lines", "|C3|", "serial ms", "parallel ms", "speedup");
  bool same = true;
  for (const char* id : {"D7", "E6", "E7", "H4", "E8"}) {
    LinearMatroid m = LinearMatroid::from_system(parse_system(id));
    std::vector<Circuit> serial, parallel;
    double ts = best_of(reps, [&] { serial = circuits3_serial(m); });
    double tp = best_of(reps, [&] { parallel = circuits3(m); });
    same &= serial == parallel;
    std::printf("%-6s %6d %8zu %12.1f %12.1f %8.2f%s\n", id, m.ground_size(), serial.size(), ts, tp, ts / tp,
                serial == parallel ? "" : "  MISMATCH");
  }
  return same ? 0 : 1;
}
