#include "shearlift/special.hpp"

#include <cmath>

namespace shearlift {

namespace {

constexpr double kSeriesTol = 1e-14;
constexpr int kMaxTerms = 100000;
constexpr double kCutEps = 1e-14;

bool near_nonpositive_integer(Complex c) {
  if (std::abs(c.imag()) > kCutEps) return false;
  const double r = c.real();
  if (r > 0.5) return false;
  return std::abs(r - std::round(r)) < kCutEps;
}

}  // namespace

Complex pochhammer(Complex x, int k) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < k; ++i) out *= x + static_cast<double>(i);
  return out;
}

Complex hyp2f1(const Hyp2F1Params& p) {
  if (near_nonpositive_integer(p.c)) {
    throw std::invalid_argument("hyp2f1: c must not be a non-positive integer");
  }
  const double az = std::abs(p.z);
  if (!(az < 1.0)) {
    throw std::invalid_argument("hyp2f1: series evaluation requires |z| < 1");
  }
  Complex sum{1.0, 0.0};
  Complex term{1.0, 0.0};
  const double tail_factor = az / (1.0 - az);
  for (int k = 0; k < kMaxTerms; ++k) {
    const double dk = static_cast<double>(k);
    term *= (p.a + dk) * (p.b + dk) / ((p.c + dk) * (dk + 1.0)) * p.z;
    sum += term;
    if (std::abs(term) * tail_factor <= kSeriesTol * std::abs(sum)) {
      return sum;
    }
  }
  throw NoConvergence("hyp2f1: term budget exhausted before tail bound met");
}

Complex log_c(Complex z) {
  if (std::abs(z.imag()) < kCutEps && z.real() <= 0.0) {
    throw BranchCutHit("log_c: argument on the cut (-inf, 0]");
  }
  return std::log(z);
}

Complex atanh_c(Complex z) {
  if (std::abs(z.imag()) < kCutEps && std::abs(z.real()) >= 1.0) {
    throw BranchCutHit("atanh_c: argument on a cut ray |Re| >= 1");
  }
  return std::atanh(z);
}

Complex atan_c(Complex z) {
  if (std::abs(z.real()) < kCutEps && std::abs(z.imag()) >= 1.0) {
    throw BranchCutHit("atan_c: argument on a cut ray |Im| >= 1");
  }
  return std::atan(z);
}

SigmaValues sigma_values(double c, Complex z) {
  if (std::abs(c) >= 2.0) {
    throw EndpointParameter("sigma_values: requires c strictly inside (-2, 2)");
  }
  const Complex s3 = std::pow(Complex{c - 2.0, 0.0}, 1.5);
  const Complex s4 = std::pow(Complex{c + 2.0, 0.0}, 1.5);
  const Complex s34 = s3 * s4;
  const double c2m4 = c * c - 4.0;
  const Complex s1 = atanh_c(c2m4 * (c + 2.0 * z) / s34);
  const Complex s2 = atanh_c((4.0 * c - c * c * c) / s34);
  return SigmaValues{s1, s2, s3, s4};
}

}  // namespace shearlift
