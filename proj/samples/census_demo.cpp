// Prints tau(n), sigma(n) and the sigma(n) >= tau(n-4) bound for small n.
#include <cstdio>
#include <cstdlib>

#include "nsum/census.hpp"

int main(int argc, char** argv) {
  const std::size_t n_max = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 14;
  const auto report = nsum::census(n_max);
  std::printf("%4s %10s %10s %10s\n", "n", "tau", "sigma", "ratio");
  for (const auto& r : report.records()) {
    std::printf("%4zu %10llu %10llu %10.4f\n", r.n, static_cast<unsigned long long>(r.tau),
                static_cast<unsigned long long>(r.sigma), static_cast<double>(r.sigma) / r.tau);
  }
  if (n_max >= 5) {
    for (const auto& row : nsum::density_check(report, n_max)) {
      std::printf("n=%zu sigma=%llu tau(n-4)=%llu %s\n", row.n, static_cast<unsigned long long>(row.sigma),
                  static_cast<unsigned long long>(row.tau_minus_4), row.holds ? "ok" : "VIOLATED");
    }
  }
  std::printf("reference density 1/alpha^4 ~ %.4f\n", nsum::otter_density_reference);
}
