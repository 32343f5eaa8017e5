#ifndef UNCERTAIN_NUMERIC_HPP
#define UNCERTAIN_NUMERIC_HPP

namespace uncertain {

// Global comparison tolerance. Defaults to 1e-9; the UK_EPSILON environment
// variable overrides it at startup, set_epsilon() overrides it at runtime.
double epsilon();
void set_epsilon(double eps);

inline bool approx_le(double a, double b) { return a <= b + epsilon(); }
inline bool approx_ge(double a, double b) { return a + epsilon() >= b; }
inline bool approx_eq(double a, double b) {
  double d = a - b;
  return d <= epsilon() && -d <= epsilon();
}
inline bool strictly_above(double a, double b) { return a > b + epsilon(); }
inline bool strictly_below(double a, double b) { return a + epsilon() < b; }
inline bool in_interval(double x, double lo, double hi) {
  return approx_ge(x, lo) && approx_le(x, hi);
}

}  // namespace uncertain

#endif
