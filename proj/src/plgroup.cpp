#include "pdd/plgroup.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>
#include <sstream>

#include "pdd/doubles.hpp"

namespace pdd {

namespace {

Mat4 unit(std::initializer_list<std::tuple<int, int, double>> entries) {
  Mat4 m = Mat4::Zero();
  for (const auto& [i, j, v] : entries) m(i, j) = v;
  return m;
}

Eigen::VectorXd flatten(const Mat4& m) { return Eigen::Map<const Eigen::VectorXd>(m.data(), 16); }

Mat4 factor(const MatrixRep& rep, const Chart& c, std::size_t coord, double t) {
  return (t * rep.gens[c.generator[coord]]).exp();
}

std::vector<MonomialKey> monomials(std::size_t n) {
  std::vector<MonomialKey> out{MonomialKey(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    MonomialKey k(n, 0);
    k[i] = 1;
    out.push_back(k);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      MonomialKey k(n, 0);
      ++k[i];
      ++k[j];
      out.push_back(k);
    }
  return out;
}

double eval_monomial(const MonomialKey& k, const std::vector<double>& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < k.size(); ++i) v *= std::pow(x[i], k[i]);
  return v;
}

}  // namespace

MatrixRep MatrixRep::poincare21() {
  return {pdd::poincare21(),
          {unit({{2, 3, -1}, {3, 2, 1}}), unit({{1, 2, 1}, {2, 1, 1}}), unit({{1, 3, 1}, {3, 1, 1}}),
           unit({{1, 0, 1}}), unit({{2, 0, 1}}), unit({{3, 0, 1}})}};
}

MatrixRep MatrixRep::extended11() {
  return {pdd::extended11(),
          {unit({{1, 2, 1}, {2, 1, 1}}), unit({{1, 0, 1}, {3, 2, 1}}), unit({{2, 0, 1}, {3, 1, -1}}),
           unit({{3, 0, -2}})}};
}

double MatrixRep::fidelity_error() const {
  double worst = 0.0;
  const std::size_t n = gens.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mat4 lhs = Mat4::Zero();
      for (std::size_t k = 0; k < n; ++k) lhs += substitute_numeric(algebra.c(a, b, k), {}) * gens[k];
      Mat4 rhs = gens[a] * gens[b] - gens[b] * gens[a];
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

Chart Chart::poincare21() {
  return {{"theta", "xi1", "xi2", "x0", "x1", "x2"}, {0, 1, 2, 3, 4, 5}, {3, 4, 5, 1, 2, 0}, {3, 4, 5}, {0, 1, 2}};
}

Chart Chart::extended11() {
  // generators of extended11(): K P0 P1 F
  return {{"phi", "xi", "x0", "x1"}, {3, 0, 1, 2}, {0, 2, 3, 1}, {2, 3, 0}, {0}};
}

std::size_t Chart::index(const std::string& name) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == name) return i;
  throw std::invalid_argument("unknown coordinate " + name);
}

Mat4 group_element(const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q) {
  Mat4 g = Mat4::Identity();
  for (std::size_t k : c.factors) g *= factor(rep, c, k, q[k]);
  return g;
}

Eigen::MatrixXd chart_jacobian(const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q) {
  const std::size_t m = c.dim();
  std::vector<Mat4> f;
  for (std::size_t k : c.factors) f.push_back(factor(rep, c, k, q[k]));
  Eigen::MatrixXd jac(16, m);
  for (std::size_t pos = 0; pos < m; ++pos) {
    Mat4 d = Mat4::Identity();
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pos) d *= rep.gens[c.generator[c.factors[i]]];
      d *= f[i];
    }
    jac.col(c.factors[pos]) = flatten(d);
  }
  return jac;
}

InvariantFields invariant_fields(const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q, double tol) {
  Mat4 g = group_element(c, rep, q);
  Eigen::MatrixXd jac = chart_jacobian(c, rep, q);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(jac);
  if (qr.rank() < Eigen::Index(c.dim())) throw SingularChart("chart Jacobian is rank deficient");
  const std::size_t n = rep.gens.size();
  InvariantFields out{Eigen::MatrixXd(c.dim(), n), Eigen::MatrixXd(c.dim(), n), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXd lhs = flatten(g * rep.gens[i]);
    Eigen::VectorXd rhs = flatten(rep.gens[i] * g);
    out.left.col(i) = qr.solve(lhs);
    out.right.col(i) = qr.solve(rhs);
    out.residual = std::max({out.residual, (jac * out.left.col(i) - lhs).cwiseAbs().maxCoeff(),
                             (jac * out.right.col(i) - rhs).cwiseAbs().maxCoeff()});
  }
  if (out.residual > tol)
    throw SingularChart("invariant field solve residual " + std::to_string(out.residual));
  return out;
}

Eigen::MatrixXd numeric_r(const Bivector& r, const Bindings& b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r.dim(), r.dim());
  for (const auto& [key, v] : r.terms()) {
    double x = substitute_numeric(v, b);
    m(key.first, key.second) = x;
    m(key.second, key.first) = -x;
  }
  return m;
}

double sklyanin_eval(const Eigen::MatrixXd& r, const Chart& c, const MatrixRep& rep, const Eigen::VectorXd& q,
                     std::size_t a, std::size_t b) {
  InvariantFields f = invariant_fields(c, rep, q);
  double left = f.left.row(a) * r * f.left.row(b).transpose();
  double right = f.right.row(a) * r * f.right.row(b).transpose();
  return kSklyaninSign * (left - right);
}

double PoissonTable::coeff(std::size_t a, std::size_t b, const MonomialKey& key) const {
  if (a == b) return 0.0;
  const double sign = a < b ? 1.0 : -1.0;
  for (const auto& e : entries)
    if (e.a == std::min(a, b) && e.b == std::max(a, b)) {
      auto it = e.coeffs.find(key);
      return it == e.coeffs.end() ? 0.0 : sign * it->second;
    }
  return 0.0;
}

std::string PoissonTable::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries)
    os << "{" << vars[e.a] << "," << vars[e.b] << "} = " << exact_bracket(*this, e.a, e.b).to_string() << "\n";
  os << "fit residual " << residual << "\n";
  return os.str();
}

PoissonTable poisson_fit(const Bivector& r, const Bindings& params, const Chart& c, const MatrixRep& rep,
                         const FitOptions& opt) {
  SubalgebraSpec h(rep.algebra, c.isotropy);
  if (coisotropy_classify(coboundary_delta(rep.algebra, r), h).verdict == Coisotropy::neither)
    throw NotCoisotropic("the isotropy subalgebra is not coisotropic for this r-matrix");
  const Eigen::MatrixXd rn = numeric_r(r, params);
  const std::size_t nh = c.homogeneous.size();
  const auto mons = monomials(nh);

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<Eigen::VectorXd> points;
  Eigen::MatrixXd design(opt.samples, mons.size());
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Eigen::VectorXd q(c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k) q[k] = unif(rng);
    std::vector<double> x(nh);
    for (std::size_t i = 0; i < nh; ++i) x[i] = q[c.homogeneous[i]];
    for (std::size_t j = 0; j < mons.size(); ++j) design(s, j) = eval_monomial(mons[j], x);
    points.push_back(q);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);

  PoissonTable table;
  for (std::size_t i : c.homogeneous) table.vars.push_back(c.coords[i]);
  Eigen::VectorXd worst_q;
  std::vector<InvariantFields> fields;
  for (const auto& q : points) fields.push_back(invariant_fields(c, rep, q));
  for (std::size_t a = 0; a < nh; ++a)
    for (std::size_t b = a + 1; b < nh; ++b) {
      const std::size_t ca = c.homogeneous[a], cb = c.homogeneous[b];
      Eigen::VectorXd y(opt.samples);
      for (std::size_t s = 0; s < opt.samples; ++s) {
        const auto& f = fields[s];
        y[s] = kSklyaninSign * (double(f.left.row(ca) * rn * f.left.row(cb).transpose()) -
                                double(f.right.row(ca) * rn * f.right.row(cb).transpose()));
      }
      Eigen::VectorXd coef = qr.solve(y);
      Eigen::VectorXd err = (design * coef - y).cwiseAbs();
      Eigen::Index worst;
      double res = err.maxCoeff(&worst);
      if (res > table.residual) {
        table.residual = res;
        worst_q = points[worst];
      }
      PoissonEntry e{a, b, {}};
      for (std::size_t j = 0; j < mons.size(); ++j)
        if (std::abs(coef[j]) >= opt.prune) e.coeffs[mons[j]] = coef[j];
      table.entries.push_back(std::move(e));
    }
  if (table.residual > opt.tol)
    throw FitResidualExceeded("fit residual " + std::to_string(table.residual) + " exceeds tolerance", table,
                              worst_q);
  return table;
}

Rational snap(double v) {
  for (long q = 1; q <= 64; ++q) {
    double p = std::round(v * double(q));
    if (std::abs(v - p / double(q)) <= 1e-8) {
      Rational out(static_cast<long>(p), q);
      out.canonicalize();
      return out;
    }
  }
  return Rational(v);
}

Scalar exact_bracket(const PoissonTable& t, std::size_t a, std::size_t b) {
  Scalar out;
  if (a == b) return out;
  const double sign = a < b ? 1.0 : -1.0;
  for (const auto& e : t.entries) {
    if (e.a != std::min(a, b) || e.b != std::max(a, b)) continue;
    for (const auto& [key, v] : e.coeffs) {
      Scalar m = Scalar(snap(sign * v));
      for (std::size_t i = 0; i < key.size(); ++i) m = m * Scalar::symbol(t.vars[i]).pow(key[i]);
      out += m;
    }
  }
  return out;
}

double jacobi_poisson(const PoissonTable& t) {
  const std::size_t n = t.vars.size();
  // {x^a, P} = sum_k dP/dx^k {x^a, x^k}
  auto act = [&](std::size_t a, const Scalar& p) {
    Scalar out;
    for (std::size_t k = 0; k < n; ++k) out += derivative(p, t.vars[k]) * exact_bracket(t, a, k);
    return out;
  };
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Scalar s = act(a, exact_bracket(t, b, c)) + act(b, exact_bracket(t, c, a)) + act(c, exact_bracket(t, a, b));
        for (const auto& [m, v] : s.terms()) worst = std::max(worst, std::abs(v.get_d()));
      }
  return worst;
}

std::map<MonomialKey, double> polynomial_coefficients(const Scalar& s, const Names& vars, const Bindings& b) {
  std::map<MonomialKey, double> out;
  for (const auto& [m, v] : s.terms()) {
    MonomialKey key(vars.size(), 0);
    Monomial rest;
    rest.radicals = m.radicals;
    for (const auto& [name, e] : m.powers) {
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end())
        rest.powers[name] = e;
      else
        key[it - vars.begin()] = e;
    }
    out[key] += v.get_d() * substitute_numeric(Scalar::from_terms({{rest, Rational(1)}}), b);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0.0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace pdd
