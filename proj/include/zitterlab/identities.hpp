#pragma once

// The identity suite: every jet-level relation of the formalism evaluated on
// seeded random jets, reduced to one worst-case number per relation.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "zitterlab/hamiltonian.hpp"
#include "zitterlab/jet.hpp"
#include "zitterlab/lagrangians.hpp"
#include "zitterlab/legendre.hpp"
#include "zitterlab/residual.hpp"
#include "zitterlab/rng.hpp"

namespace zitterlab {

struct IdentityCheck {
  std::string name;
  bool relative = true;  ///< compared as Residual::relative(), else absolute
  double tolerance = 0.0;
  double worst = 0.0;

  bool passed() const { return worst <= tolerance; }
};

struct IdentityReport {
  BoppParams params;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<IdentityCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
  }
  const IdentityCheck& at(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return c;
    }
    throw Error(ErrorCode::InvalidArgument, "no identity check named " + name);
  }
};

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::vector<IdentityCheck>& checks) : checks_(checks) {}

  void record(const std::string& name, const Residual& r, double tolerance, bool relative = true) {
    IdentityCheck* check = find(name);
    if (check == nullptr) {
      checks_.push_back({name, relative, tolerance, 0.0});
      check = &checks_.back();
    }
    check->worst = std::max(check->worst, relative ? r.relative() : r.abs());
  }

 private:
  IdentityCheck* find(const std::string& name) {
    for (auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  std::vector<IdentityCheck>& checks_;
};

}  // namespace detail

/// Evaluates every identity on `samples` random order-4 jets drawn from `seed`.
inline IdentityReport run_identity_suite(const BoppParams& params, std::uint64_t seed, std::size_t samples) {
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "identity suite needs at least one sample");
  IdentityReport report{params, seed, samples, {}};
  detail::SuiteBuilder suite(report.checks);
  Xoshiro256ss rng(seed);
  const auto lagrangian = bopp(params);
  auto density = [&params](const auto& c) { return contact_density(c, params); };
  auto f_v = [](const auto& c) { return c.v[0]; };
  auto f_vdot = [](const auto& c) { return c.vdot[1]; };
  auto f_product = [](const auto& c) { return c.v[2] * c.vdot[0]; };
  auto f_gamma = [](const auto& c) { return 1.0 + dot3(c.v, c.v); };

  for (std::size_t k = 0; k < samples; ++k) {
    const JetPoint p = sample_jet(rng, 4);

    const ZermeloResiduals z = zermelo_residuals(lagrangian, p);
    suite.record("zermelo_u_dot", z.first, 1e-8);
    suite.record("zermelo_homogeneity", z.second, 1e-8);

    const Momenta ad = momenta_ad(lagrangian, p);
    const Momenta ex = momenta_explicit(p, params);
    suite.record("momenta_ad_vs_explicit_wp", vector_residual(ad.wp, ex.wp), 1e-7);
    suite.record("momenta_ad_vs_explicit_wp1", vector_residual(ad.wp1, ex.wp1), 1e-7);
    const MomentumConstraintResiduals mc = zermelo_momentum_residuals(p, lagrangian);
    suite.record("constraint_u_wp1", mc.first, 1e-8);
    suite.record("constraint_energy", mc.second, 1e-8);

    suite.record("hamiltonian_on_legendre", h_on_legendre_residual(p, params), 1e-8, false);
    suite.record("lift_relation", lift_relation_residual(p, params), 1e-7);
    suite.record("direct_form", direct_form_residual(p, params), 1e-9);
    const EliminationResiduals el = elimination_identities(p, params);
    suite.record("elimination_work", el.work, 1e-9);
    suite.record("elimination_curvature", el.curvature, 1e-9);

    const PullbackResiduals pb = pullback_residuals(p, params);
    suite.record("pullback_wp1_time", pb.wp1_time, 1e-7);
    suite.record("pullback_wp1_space", pb.wp1_space, 1e-7);
    suite.record("pullback_wp_time", pb.wp_time, 1e-7);
    suite.record("pullback_wp_space", pb.wp_space, 1e-7);

    Residual corr = correspondence_residual(f_v, p);
    for (const Residual& r : {correspondence_residual(f_vdot, p), correspondence_residual(f_product, p),
                              correspondence_residual(f_gamma, p)}) {
      if (r.relative() > corr.relative()) corr = r;
    }
    suite.record("correspondence", corr, 1e-8);

    const ContactJet c = project_contact(p);
    const double lagr = bopp_lagrangian(p, params);
    const double lifted = p.u[0] * contact_density(c, params);
    suite.record("density_factorization", {lagr - lifted, std::abs(lagr) + std::abs(lifted)}, 1e-10);
    const ContactMomenta cm = contact_momenta(c, params);
    const ContactMomenta cad = contact_momenta_ad(density, c);
    suite.record("contact_momenta_ad", vector_residual(cm.p, cad.p), 1e-7);
    suite.record("contact_momenta_ad", vector_residual(cm.p1, cad.p1), 1e-7);
    const double h_std = standard_contact_H(c, cm, params);
    const double h_elim = contact_H(make_contact_state(c, cm), params);
    suite.record("contact_hamiltonian", {h_elim - h_std, std::abs(h_elim) + std::abs(h_std)}, 1e-8);
  }
  return report;
}

}  // namespace zitterlab
