#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "shearlift/types.hpp"

namespace shearlift {

/// F_c(z) = z/(1 + cz + z^2), c in [-2, 2].  |c| = 2 is a boundary case:
/// the map is still univalent onto a slit domain but the sigma-based closed
/// forms do not apply there.
struct Fc {
  double c;
};

/// F_n(z) = z - z^n/n^2, n >= 2, mapping onto the interior of an epicycloid.
struct Fn {
  int n;
};

class ConformalFamily {
 public:
  explicit ConformalFamily(Fc fc) : variant_(fc) {
    if (!std::isfinite(fc.c) || fc.c < -2.0 || fc.c > 2.0) {
      throw std::invalid_argument("ConformalFamily: Fc requires c in [-2, 2]");
    }
  }
  explicit ConformalFamily(Fn fn) : variant_(fn) {
    if (fn.n < 2) {
      throw std::invalid_argument("ConformalFamily: Fn requires n >= 2");
    }
  }

  bool is_fc() const { return std::holds_alternative<Fc>(variant_); }
  bool is_fn() const { return std::holds_alternative<Fn>(variant_); }
  const Fc& fc() const { return std::get<Fc>(variant_); }
  const Fn& fn() const { return std::get<Fn>(variant_); }

  /// c = +-2 parameterizes the slit-domain boundary cases.
  bool is_boundary_case() const {
    return is_fc() && std::abs(std::abs(fc().c) - 2.0) == 0.0;
  }

 private:
  std::variant<Fc, Fn> variant_;
};

/// omega_a(z) = z(z+a)/(1+az), a in [-1, 1].
struct MobiusProduct {
  double a;
};

/// omega(z) = z^n, n >= 1.
struct Power {
  int n;
};

class Dilatation {
 public:
  explicit Dilatation(MobiusProduct m) : variant_(m) {
    if (!std::isfinite(m.a) || m.a < -1.0 || m.a > 1.0) {
      throw std::invalid_argument("Dilatation: MobiusProduct requires a in [-1, 1]");
    }
  }
  explicit Dilatation(Power p) : variant_(p) {
    if (p.n < 1) {
      throw std::invalid_argument("Dilatation: Power requires n >= 1");
    }
  }

  bool is_mobius() const { return std::holds_alternative<MobiusProduct>(variant_); }
  bool is_power() const { return std::holds_alternative<Power>(variant_); }
  const MobiusProduct& mobius() const { return std::get<MobiusProduct>(variant_); }
  const Power& power() const { return std::get<Power>(variant_); }

 private:
  std::variant<MobiusProduct, Power> variant_;
};

Complex eval_F(const ConformalFamily& family, const DiskPoint& p);
Complex eval_F_prime(const ConformalFamily& family, const DiskPoint& p);
Complex eval_omega(const Dilatation& d, const DiskPoint& p);

/// Analytic square root q with q(z)^2 = omega(z), when one exists on the
/// disk: q(z) = z^m for omega = z^{2m} and q(z) = z for the a = 0 Mobius
/// product.  Empty optional means the dilatation is not a perfect square
/// (odd power, or Mobius product with a != 0) and lifting is not permitted.
std::optional<std::function<Complex(Complex)>> sqrt_dilatation(const Dilatation& d);

}  // namespace shearlift
