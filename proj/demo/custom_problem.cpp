// Reads a problem description (default: catalytic.json next to this file),
// runs a short resolution sweep and prints E per level.

#include <cstdio>
#include <exception>

#include "fhaar/analysis.hpp"
#include "fhaar/problem_config.hpp"

int main(int argc, char** argv) {
  const char* path = argc > 1 ? argv[1] : FHAAR_DEMO_CONFIG;
  try {
    const auto spec = fhaar::load_problem_config(path);
    fhaar::require_valid(spec);
    const auto table = fhaar::convergence_sweep(spec, {3, 4, 5});
    std::printf("%s\n", spec.name.c_str());
    for (const auto& row : table.rows) {
      if (!row.error.empty()) {
        std::printf("  J=%d failed: %s\n", row.J, row.error.c_str());
        continue;
      }
      std::printf("  J=%d  E=%.9g  E_dense=%.9g  iterations=%d  cond1=%.3g\n", row.J, row.E, row.E_dense, row.iterations,
                  row.condition_estimate);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  }
  return 0;
}
