// Manin triples, their doubles, canonical r-matrices, transport to a
// kinematical basis, and the built-in catalog of cases.
#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pdd/bialg.hpp"

namespace pdd {

struct IncompatibleTriple : std::invalid_argument {
  CocycleViolation violation;
  IncompatibleTriple(const std::string& w, CocycleViolation v)
      : std::invalid_argument(w), violation(std::move(v)) {}
};
struct NotIsomorphism : std::invalid_argument {
  explicit NotIsomorphism(const std::string& w) : std::invalid_argument(w) {}
};
struct TargetMismatch : std::invalid_argument {
  explicit TargetMismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct NotReducible : std::domain_error {
  explicit NotReducible(const std::string& w) : std::domain_error(w) {}
};
struct UnknownId : std::invalid_argument {
  explicit UnknownId(const std::string& id) : std::invalid_argument("unknown id: " + id) {}
};

// The algebra g on Y_i and the dual algebra g* on y^i; the brackets of g*
// are the cocommutator of g.
struct ManinTriple {
  LieAlgebra g;
  LieAlgebra dual;
  std::vector<std::string> constraints;  // informational, e.g. "lambda != 0"

  Cocommutator cocommutator() const { return Cocommutator::from_dual(dual); }
  ManinTriple swapped() const { return {dual, g, constraints}; }
};

struct DoubleAlgebra {
  LieAlgebra L;     // basis Y_0..Y_{d-1}, y^0..y^{d-1}
  Tensor2 pairing;  // <y^i, Y_j> = delta
  std::size_t d = 0;
  std::vector<std::size_t> first() const;
  std::vector<std::size_t> second() const;
};

// Throws IncompatibleTriple when the cocycle condition fails.
DoubleAlgebra assemble_double(const ManinTriple& t);
// Same brackets without the compatibility check, for probing broken triples.
DoubleAlgebra assemble_double_unchecked(const ManinTriple& t);

struct CanonicalR {
  Tensor2 r;         // sum y^i @ Y_i
  Bivector r_skew;   // 1/2 sum y^i ^ Y_i
  Tensor2 omega;     // r - r_skew
};
CanonicalR canonical_r(const DoubleAlgebra& D);

// Result of rewriting a double in the basis of a kinematical algebra. The map
// has the kinematical algebra as source and the double as target.
struct Transported {
  LieAlgebra algebra;
  Tensor2 r;
  Bivector r_skew;
  Tensor2 pairing;
};
Transported transport(const DoubleAlgebra& D, const LinearMap& m, const Domains& domains = {});

struct SkewReduction {
  Bivector r_skew;
  Vec coefficients;              // weights of the invariant tensors removed
  std::vector<Tensor2> casimirs;  // basis of invariant symmetric tensors
};
// Removes the symmetric part of r using the invariant symmetric tensors of L.
SkewReduction skew_reduce(const LieAlgebra& L, const Tensor2& r);

// Structural check that the double of t.swapped() maps onto the double of t
// under Y_i <-> y^i.
bool duality_swap_check(const ManinTriple& t);

// ---------------------------------------------------------------------------
// Kinematical algebras.
const LieAlgebra& poincare21();      // J K1 K2 P0 P1 P2
const LieAlgebra& extended11();      // K P0 P1 F
const LieAlgebra& poincare31();      // J1 J2 J3 K1 K2 K3 P0 P1 P2 P3

// ---------------------------------------------------------------------------
// Catalog.

enum class Family { P21, EXT11, ADS, ISO31 };

struct Realization {
  std::string label;
  std::map<std::string, Scalar> fixed;  // parameter values set on the triple
  Domains domains;                      // sampling domains for the free ones
  std::vector<std::string> images;      // kinematical generator -> double
  bool primary = true;                  // used by the downstream pipeline
  std::string note;
};

struct WitnessSpec {
  std::string cls;                      // I, IIa, IIb, IIc, IIIa, IIIb, IV, V
  std::vector<std::string> images;      // automorphism, generator -> image
  std::string constant;                 // transformed r = constant * form
  std::string alpha = "0", rho = "0";
  std::array<std::string, 3> a{"0", "0", "0"};  // a01, a02, a12
  std::vector<std::vector<std::string>> pre;    // automorphisms applied before `images`
};

struct SpacetimeBracket {
  std::string a, b, value;  // {a,b} = value in the chart coordinates
};

// Multi-parameter r-matrix with a printed spacetime.
struct ParametricTemplate {
  std::vector<std::string> params;
  std::string r;
  std::map<std::string, std::string> dd_point;  // parameter -> value giving the double's r
  std::vector<SpacetimeBracket> spacetime;      // in the chart coordinates
};

struct CatalogEntry {
  std::string id;
  Family family = Family::P21;
  std::string title;
  std::optional<ManinTriple> triple;
  LieAlgebra kinematical;
  std::vector<Realization> realizations;
  std::map<std::string, Scalar> aliases;

  std::string expected_r_full;                          // printed mixed r
  std::string expected_r;                               // printed skew r
  std::vector<std::pair<std::string, std::string>> expected_delta;  // printed cocommutator
  std::string expected_pairing;                         // as a symmetric tensor literal
  std::string pairing_lorentz_extra;                    // invariant Lorentz-block term on top of it
  std::vector<std::string> lorentz;                     // generators of h
  std::optional<Coisotropy> expected_verdict;
  std::string expected_witness_generator;
  std::string expected_witness_terms;                   // printed offending part
  std::string expected_class;
  std::optional<WitnessSpec> witness;                   // applied to expected_r
  std::optional<WitnessSpec> derived_witness;           // applied to the pipeline r
  std::optional<ParametricTemplate> templ;
  std::vector<SpacetimeBracket> spacetime;              // printed, parameter free
  std::map<std::string, std::string> defaults;          // default numeric parameters
  std::vector<std::string> notes;

  const Realization& primary() const;
  LinearMap map(const Realization& r, const DoubleAlgebra& D) const;
  Bivector expected_r_bivector() const;
};

const std::vector<std::string>& catalog_ids();
const CatalogEntry& catalog(const std::string& id);

// Double of the entry's triple with the realization's fixed parameters applied.
DoubleAlgebra realize_double(const CatalogEntry& e, const Realization& r);

}  // namespace pdd
