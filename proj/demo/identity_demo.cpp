// Momenta of one jet two ways: automatic differentiation of the Lagrangian
// and the closed-form expressions.

#include <iostream>

#include "zitterlab/identities.hpp"

int main() {
  using namespace zitterlab;
  const BoppParams params{1.0, 1.0};
  Xoshiro256ss rng(7);
  const JetPoint p = sample_jet(rng);
  const Momenta ad = momenta_ad(bopp(params), p);
  const Momenta ex = momenta_explicit(p, params);
  std::cout << "u        " << p.u << "\n";
  std::cout << "wp  (AD) " << ad.wp << "\n";
  std::cout << "wp  (ex) " << ex.wp << "\n";
  std::cout << "wp' (AD) " << ad.wp1 << "\n";
  std::cout << "wp' (ex) " << ex.wp1 << "\n";
  std::cout << "H - 1 on the Legendre image: " << h_on_legendre_residual(p, params).value << "\n";

  const IdentityReport report = run_identity_suite(params, 42, 200);
  for (const auto& c : report.checks) std::cout << c.name << ' ' << c.worst << (c.passed() ? "" : "  FAIL") << '\n';
  return report.passed() ? 0 : 1;
}
