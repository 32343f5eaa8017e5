#include "uncertain/numeric.hpp"

#include <cstdlib>

namespace uncertain {

namespace {

double initial_epsilon() {
  if (const char* env = std::getenv("UK_EPSILON")) {
    char* end = nullptr;
    double value = std::strtod(env, &end);
    if (end != env && value > 0.0) return value;
  }
  return 1e-9;
}

double g_epsilon = initial_epsilon();

}  // namespace

double epsilon() { return g_epsilon; }

void set_epsilon(double eps) { g_epsilon = eps; }

}  // namespace uncertain
