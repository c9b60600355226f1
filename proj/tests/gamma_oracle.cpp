// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_oracle.hpp"

#include <cmath>

namespace oracle {

std::complex<double> log_gamma(std::complex<double> z) {
  // Shift to re(z) >= 15, then Stirling with B_2k/(2k(2k-1)) z^(1-2k).
  std::complex<double> shift = 0.0;
  while (z.real() < 15.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  static const double c[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188, -691.0 / 360360, 1.0 / 156};
  const double half_log_2pi = 0.91893853320467274178;
  std::complex<double> r = (z - 0.5) * std::log(z) - z + half_log_2pi;
  std::complex<double> zi = 1.0 / z, z2 = zi * zi, p = zi;
  for (double ck : c) {
    r += ck * p;
    p *= z2;
  }
  return r + shift;
}

std::complex<double> chi(std::complex<double> s) {
  const double pi = 3.14159265358979323846;
  std::complex<double> l = s * std::log(2.0) + (s - 1.0) * std::log(pi) + log_gamma(1.0 - s);
  return std::exp(l) * std::sin(pi * s / 2.0);
}

}  // namespace oracle
