// Verification pipelines shared by the command-line tool and the acceptance
// suite.
#pragma once

#include <cstdint>
#include <string>

#include "pdd/contraction.hpp"
#include "pdd/doubles.hpp"
#include "pdd/plgroup.hpp"
#include "pdd/report.hpp"
#include "pdd/stachura.hpp"

namespace pdd {

struct RunOptions {
  Bindings params;  // overrides of the entry defaults
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  double tol = 1e-9;
};

// Entry defaults overridden by opt.params.
Bindings effective_bindings(const CatalogEntry& e, const RunOptions& opt);

const Chart& chart_for(Family f);
const MatrixRep& rep_for(Family f);

// Largest coefficient difference between a fitted table and printed brackets.
struct SpacetimeComparison {
  double max_error = 0.0;
  std::string worst;  // bracket where it occurs
};
SpacetimeComparison compare_spacetime(const PoissonTable& t, const std::vector<SpacetimeBracket>& printed,
                                      const Bindings& b, const std::map<std::string, Scalar>& aliases);

// The pipeline r-matrix of an entry with a Manin triple: transport through the
// primary realization followed by skew reduction.
Bivector pipeline_r(const CatalogEntry& e);

Report verify_entry(const CatalogEntry& e, const RunOptions& opt = {});
Report catalog_show(const CatalogEntry& e);
Report contract_report(const std::string& id, int rescale);
Report spacetime_report(const CatalogEntry& e, const RunOptions& opt = {});
Report classify_report(const CatalogEntry& e);
Report schouten_report(const LieAlgebra& L, const Bivector& r, const std::string& subject);

}  // namespace pdd
