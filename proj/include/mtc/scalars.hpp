#pragma once

#include <complex>
#include <cstdint>

namespace mtc {

using Complex = std::complex<double>;

// Session-wide comparison tolerance (default 1e-9). Every approximate
// comparison in the library routes through this value.
double tolerance();
void set_tolerance(double tau);

// |a-b| <= tau * max(1, |a|, |b|)
bool approx_eq(double a, double b);
bool approx_eq(const Complex& a, const Complex& b);
bool approx_zero(double a);

// The unit complex number exp(2*pi*i * num/den), stored as a reduced
// fraction with 0 <= num < den. Twists and cocycle values live here so
// that identities like theta^N = 1 stay exact.
struct PhaseQ {
  std::int64_t num = 0;
  std::int64_t den = 1;

  PhaseQ() = default;
  PhaseQ(std::int64_t numerator, std::int64_t denominator);

  static PhaseQ one() { return PhaseQ(); }
  bool operator==(const PhaseQ&) const = default;
};

// Product of phases = addition of fractions mod 1.
PhaseQ phase_mul(PhaseQ p, PhaseQ q);
// n-fold product; n may be negative (inverse powers), phase_pow(p,0) = 1.
PhaseQ phase_pow(PhaseQ p, std::int64_t n);
PhaseQ phase_inv(PhaseQ p);
Complex to_complex(PhaseQ p);

}  // namespace mtc
