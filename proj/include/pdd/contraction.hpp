// The Lambda-family of (anti-)de Sitter algebras, their double r-matrices and
// the vanishing cosmological constant limit.
#pragma once

#include <string>
#include <vector>

#include "pdd/bialg.hpp"

namespace pdd {

// Kinematical brackets plus [P0,P1] = -Lambda K1, [P0,P2] = -Lambda K2,
// [P1,P2] = Lambda J, with Lambda symbolic.
const LieAlgebra& lambda_family();
LieAlgebra family_at(const Scalar& lambda);

struct AdsLimit {
  int k;               // power of the contraction scale applied before the limit
  bool divergent;
  std::string limit;   // bivector literal when not divergent
};

struct AdsRMatrix {
  std::string id;      // A..G
  std::string text;    // bivector literal over J K1 K2 P0 P1 P2
  Bivector r;
  ContractionScale scale;
  Domains domains;     // Lambda sign and extra parameters
  std::string sign_domain;
  std::vector<AdsLimit> limits;
};

const std::vector<std::string>& ads_ids();
// Accepts "A" or "ADS-A"; throws std::invalid_argument otherwise.
const AdsRMatrix& ads_r_matrix(const std::string& id);

// Map from the (J0,J1,J2,P0,P1,P2) basis to the kinematical one. The source
// brackets are pulled back from lambda_family().
LinearMap basis_map(const std::string& id);

// Coefficientwise laurent_leading of scale^k * r. Divergent names the first
// offending component.
Bivector contract(const AdsRMatrix& r, int k);

}  // namespace pdd
