// Numeric Poisson-Lie layer: 4x4 matrix groups, exponential charts, invariant
// vector fields, the Sklyanin bracket and polynomial fits of its projection.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdd/bialg.hpp"

namespace pdd {

struct SingularChart : std::runtime_error {
  explicit SingularChart(const std::string& w) : std::runtime_error(w) {}
};
struct NotCoisotropic : std::invalid_argument {
  explicit NotCoisotropic(const std::string& w) : std::invalid_argument(w) {}
};

using Mat4 = Eigen::Matrix4d;

struct MatrixRep {
  LieAlgebra algebra;
  std::vector<Mat4> gens;  // indexed like algebra.basis()

  static MatrixRep poincare21();
  static MatrixRep extended11();
  // max |rho([X,Y]) - [rho X, rho Y]| over generator pairs
  double fidelity_error() const;
};

struct Chart {
  Names coords;                        // coordinate names
  std::vector<std::size_t> generator;  // generator index attached to each coordinate
  std::vector<std::size_t> factors;    // coordinate indices in product order
  std::vector<std::size_t> homogeneous;  // coordinates of the quotient
  std::vector<std::size_t> isotropy;     // generators spanning the isotropy algebra

  static Chart poincare21();  // theta xi1 xi2 x0 x1 x2
  static Chart extended11();  // phi xi x0 x1
  std::size_t dim() const { return coords.size(); }
  std::size_t index(const std::string& name) const;
};

Mat4 group_element(const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q);
// 16 x m; column k is the derivative of the flattened group element in q_k.
Eigen::MatrixXd chart_jacobian(const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q);

// Column i holds the coordinate components of the left (right) invariant
// field of generator i.
struct InvariantFields {
  Eigen::MatrixXd left, right;
  double residual = 0.0;
};
InvariantFields invariant_fields(const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q,
                                 double tol = 1e-9);

// Sign in front of sum r^{ij}(L_i L_j - R_i R_j), fixed by the Case 0 spacetime.
inline constexpr double kSklyaninSign = 1.0;

// Antisymmetric matrix r^{ij} = coefficient of X_i^X_j.
Eigen::MatrixXd numeric_r(const Bivector& r, const Bindings& b = {});

double sklyanin_eval(const Eigen::MatrixXd& r, const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q,
                     std::size_t a, std::size_t b);

// Exponent vector over the homogeneous coordinates.
using MonomialKey = std::vector<int>;

struct PoissonEntry {
  std::size_t a, b;  // indices into PoissonTable::vars
  std::map<MonomialKey, double> coeffs;
};

struct PoissonTable {
  Names vars;
  std::vector<PoissonEntry> entries;  // a < b
  double residual = 0.0;
  // coefficient of monomial `key` in {vars[a], vars[b]}, antisymmetric
  double coeff(std::size_t a, std::size_t b, const MonomialKey& key) const;
  std::string to_string() const;
};

struct FitResidualExceeded : std::runtime_error {
  PoissonTable table;
  Eigen::VectorXd worst_sample;
  FitResidualExceeded(const std::string& w, PoissonTable t, Eigen::VectorXd q)
      : std::runtime_error(w), table(std::move(t)), worst_sample(std::move(q)) {}
};

struct FitOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  double prune = 1e-8;
};

// Fits every bracket of homogeneous coordinates by a polynomial of degree <= 2
// in the homogeneous coordinates. Refuses when the isotropy subalgebra is not
// coisotropic for the coboundary cocommutator of r.
PoissonTable poisson_fit(const Bivector& r, const Bindings& params, const Chart& c, const MatrixRep& rep,
                         const FitOptions& opt = {});

// Rational approximation p/q with q <= 64 when within 1e-8, else the exact
// binary value.
Rational snap(double v);

// The table as exact polynomials in the coordinate symbols, after snapping.
Scalar exact_bracket(const PoissonTable& t, std::size_t a, std::size_t b);

// Max absolute coefficient of the cyclic sum {x^a,{x^b,x^c}} + cyc over all
// triples.
double jacobi_poisson(const PoissonTable& t);

// Coefficients of a polynomial literal over `vars` with the remaining symbols
// bound numerically.
std::map<MonomialKey, double> polynomial_coefficients(const Scalar& s, const Names& vars, const Bindings& b = {});

}  // namespace pdd
