#include "shearlift/families.hpp"

#include <cmath>

namespace shearlift {

namespace {

Complex pow_int(Complex z, int n) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < n; ++i) out *= z;
  return out;
}

}  // namespace

Complex eval_F(const ConformalFamily& family, const DiskPoint& p) {
  const Complex z = p.z;
  if (family.is_fc()) {
    const double c = family.fc().c;
    const Complex den = 1.0 + c * z + z * z;
    if (std::abs(den) < 1e-300) {
      throw DegenerateDenominator("eval_F: 1 + cz + z^2 below floating floor");
    }
    return z / den;
  }
  const int n = family.fn().n;
  return z - pow_int(z, n) / (static_cast<double>(n) * n);
}

Complex eval_F_prime(const ConformalFamily& family, const DiskPoint& p) {
  const Complex z = p.z;
  if (family.is_fc()) {
    const double c = family.fc().c;
    const Complex den = 1.0 + c * z + z * z;
    if (std::abs(den) < 1e-300) {
      throw DegenerateDenominator("eval_F_prime: 1 + cz + z^2 below floating floor");
    }
    return (1.0 - z * z) / (den * den);
  }
  const int n = family.fn().n;
  return 1.0 - pow_int(z, n - 1) / static_cast<double>(n);
}

Complex eval_omega(const Dilatation& d, const DiskPoint& p) {
  const Complex z = p.z;
  if (d.is_mobius()) {
    const double a = d.mobius().a;
    return z * (z + a) / (1.0 + a * z);
  }
  return pow_int(z, d.power().n);
}

std::optional<std::function<Complex(Complex)>> sqrt_dilatation(const Dilatation& d) {
  if (d.is_mobius()) {
    if (d.mobius().a != 0.0) return std::nullopt;
    return [](Complex z) { return z; };  // omega = z^2
  }
  const int n = d.power().n;
  if (n % 2 != 0) return std::nullopt;
  const int m = n / 2;
  return [m](Complex z) { return pow_int(z, m); };
}

}  // namespace shearlift
