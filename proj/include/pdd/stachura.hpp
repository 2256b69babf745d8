// Classification tools for skew r-matrices on the (2+1) Poincare algebra in
// the basis J K1 K2 P0 P1 P2.
#pragma once

#include <string>

#include "pdd/doubles.hpp"

namespace pdd {

struct NotProportional : std::domain_error {
  explicit NotProportional(const std::string& w) : std::domain_error(w) {}
};
struct NotAutomorphism : std::invalid_argument {
  explicit NotAutomorphism(const std::string& w) : std::invalid_argument(w) {}
};
struct WitnessFailed : std::runtime_error {
  Bivector residual;
  WitnessFailed(const std::string& w, Bivector r) : std::runtime_error(w), residual(std::move(r)) {}
};
struct Unclassified : std::invalid_argument {
  explicit Unclassified(const std::string& w) : std::invalid_argument(w) {}
};

// t = span{P0,P1,P2}, h = span{J,K1,K2}.
struct RDecomposition {
  Bivector a;  // t^t
  Bivector b;  // t^h
  Bivector c;  // h^h
};
RDecomposition decompose(const Bivector& r);

struct MuP {
  Scalar mu;
  Scalar p;
};
// [[a,b]] = p P0^P1^P2 and 2[[a,c]] + [[b,b]] = mu * Omega_ref, where
// Omega_ref = 1/2 [[b,b]] of the Class IV form.
MuP invariants_mu_p(const Bivector& r);
const Trivector& omega_ref();

// Pushforward of r through an automorphism of poincare21().
Bivector apply_automorphism(const Bivector& r, const LinearMap& m, const Domains& domains = {});

// Canonical representatives; a = (a01, a02, a12). Throws Unclassified for an
// unknown class name.
Bivector canonical_form(const std::string& cls, const Scalar& alpha = Scalar(0),
                        const Scalar& rho = Scalar(0), const std::array<Scalar, 3>& a = {});

struct ClassWitness {
  std::string cls;
  LinearMap automorphism;  // composite of the witness chain
  Scalar constant;
  Scalar alpha, rho;
  std::array<Scalar, 3> a;
};
ClassWitness make_witness(const WitnessSpec& spec, const std::map<std::string, Scalar>& aliases);

struct WitnessCheck {
  Bivector transformed;  // automorphism applied to r
  Bivector expected;     // constant * canonical form
  Bivector residual;     // transformed - expected
  bool ok() const { return residual.is_zero(); }
};
WitnessCheck verify_witness(const Bivector& r, const ClassWitness& w, const Domains& domains = {});

struct Classification {
  std::string cls;
  MuP invariants;
  MuP canonical_invariants;  // of constant * canonical form
  WitnessCheck check;
};
// Witness-based: verifies the stored witness against the printed r and checks
// that p vanishes where the class or the coisotropy verdict requires it.
Classification classify(const CatalogEntry& e);
// Same, for an arbitrary r and witness.
Classification classify(const Bivector& r, const WitnessSpec& spec,
                        const std::map<std::string, Scalar>& aliases, const Domains& domains = {});

}  // namespace pdd
