#include "mtc/scalars.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mtc {

namespace {
double g_tolerance = 1e-9;
}  // namespace

double tolerance() { return g_tolerance; }

void set_tolerance(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tolerance must be positive");
  g_tolerance = tau;
}

bool approx_eq(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= g_tolerance * scale;
}

bool approx_eq(const Complex& a, const Complex& b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= g_tolerance * scale;
}

bool approx_zero(double a) { return std::abs(a) <= g_tolerance; }

PhaseQ::PhaseQ(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("PhaseQ: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  numerator %= denominator;
  if (numerator < 0) numerator += denominator;
  const std::int64_t g = std::gcd(numerator, denominator);
  num = numerator / g;
  den = denominator / g;
}

PhaseQ phase_mul(PhaseQ p, PhaseQ q) {
  // p.den, q.den stay small; the cross products fit comfortably in 64 bits.
  const std::int64_t den = p.den * q.den;
  const std::int64_t num = p.num * q.den + q.num * p.den;
  return PhaseQ(num, den);
}

PhaseQ phase_pow(PhaseQ p, std::int64_t n) {
  const std::int64_t r = ((p.num * n) % p.den + p.den) % p.den;
  return PhaseQ(r, p.den);
}

PhaseQ phase_inv(PhaseQ p) { return PhaseQ(-p.num, p.den); }

Complex to_complex(PhaseQ p) {
  if (p.num == 0) return Complex(1.0, 0.0);
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(p.num) / p.den;
  return Complex(std::cos(angle), std::sin(angle));
}

}  // namespace mtc
