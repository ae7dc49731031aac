#include "homtaylor/homfun.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "homtaylor/combinatorics.hpp"

namespace homtaylor {

namespace {

// Scalar-generic power. Both instantiations take the same branch, so the
// double path and the jet's degree-0 coefficient perform identical floating
// point operations.
inline double pow_real(double base, double e) { return std::pow(base, e); }
inline Jet pow_real(const Jet& base, double e) {
  return compose_binomial(base, e);
}

inline double one_like(const double&) { return 1.0; }
inline Jet one_like(const Jet& j) { return Jet::constant(j.layout_ptr(), 1.0); }

inline bool is_nonneg_integer(double e) {
  return e >= 0.0 && e == std::floor(e) && e <= 1000.0;
}

template <class Scalar>
Scalar pow_hom(const Scalar& base, double e) {
  if (is_nonneg_integer(e)) {
    Scalar r = one_like(base);
    const int n = static_cast<int>(e);
    for (int i = 0; i < n; ++i) {
      r = r * base;
    }
    return r;
  }
  return pow_real(base, e);
}

bool any_nonzero(std::span<const double> x) {
  for (double xi : x) {
    if (xi != 0.0) {
      return true;
    }
  }
  return false;
}

bool strictly_positive(std::span<const double> x) {
  for (double xi : x) {
    if (!(xi > 0.0)) {
      return false;
    }
  }
  return true;
}

class QuadraticRootFn final : public HomogeneousFunction {
 public:
  QuadraticRootFn(std::string name, Matrix r)
      : HomogeneousFunction(std::move(name), 1.0, static_cast<int>(r.size())),
        r_(std::move(r)) {}

 protected:
  double eval_real(std::span<const double> x) const override {
    return eval_any<double>(x);
  }
  Jet eval_jets(std::span<const Jet> x) const override {
    return eval_any<Jet>(x);
  }
  bool contains(std::span<const double> x) const override {
    return any_nonzero(x);
  }

 private:
  template <class Scalar>
  Scalar eval_any(std::span<const Scalar> x) const {
    const int n = dim();
    Scalar q = (x[0] * x[0]) * r_[0][0];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == 0 && j == 0) {
          continue;
        }
        q = q + (x[i] * x[j]) * r_[i][j];
      }
    }
    return pow_real(q, 0.5);
  }

  Matrix r_;
};

class MonomialFn final : public HomogeneousFunction {
 public:
  MonomialFn(std::string name, std::vector<double> alpha)
      : HomogeneousFunction(std::move(name), degree_of(alpha),
                            static_cast<int>(alpha.size())),
        alpha_(std::move(alpha)) {
    integer_exponents_ = true;
    for (double a : alpha_) {
      if (!is_nonneg_integer(a)) {
        integer_exponents_ = false;
        break;
      }
    }
  }

 protected:
  double eval_real(std::span<const double> x) const override {
    return eval_any<double>(x);
  }
  Jet eval_jets(std::span<const Jet> x) const override {
    return eval_any<Jet>(x);
  }
  bool contains(std::span<const double> x) const override {
    return integer_exponents_ || strictly_positive(x);
  }

 private:
  static double degree_of(const std::vector<double>& alpha) {
    double d = 0.0;
    for (double a : alpha) {
      d += a;
    }
    return d;
  }

  template <class Scalar>
  Scalar eval_any(std::span<const Scalar> x) const {
    Scalar prod = pow_hom(x[0], alpha_[0]);
    for (int i = 1; i < dim(); ++i) {
      prod = prod * pow_hom(x[i], alpha_[i]);
    }
    return prod;
  }

  std::vector<double> alpha_;
  bool integer_exponents_;
};

class PNormFn final : public HomogeneousFunction {
 public:
  PNormFn(std::string name, int dim, double p)
      : HomogeneousFunction(std::move(name), 1.0, dim), p_(p) {}

 protected:
  double eval_real(std::span<const double> x) const override {
    return eval_any<double>(x);
  }
  Jet eval_jets(std::span<const Jet> x) const override {
    return eval_any<Jet>(x);
  }
  bool contains(std::span<const double> x) const override {
    return strictly_positive(x);
  }

 private:
  template <class Scalar>
  Scalar eval_any(std::span<const Scalar> x) const {
    Scalar s = pow_hom(x[0], p_);
    for (int i = 1; i < dim(); ++i) {
      s = s + pow_hom(x[i], p_);
    }
    return pow_real(s, 1.0 / p_);
  }

  double p_;
};

class PowerFn final : public HomogeneousFunction {
 public:
  PowerFn(std::string name, FunctionPtr inner, int m)
      : HomogeneousFunction(std::move(name), static_cast<double>(m),
                            inner->dim()),
        inner_(std::move(inner)),
        m_(m) {}

 protected:
  double eval_real(std::span<const double> x) const override {
    return pow_hom((*inner_)(x), static_cast<double>(m_));
  }
  Jet eval_jets(std::span<const Jet> x) const override {
    // x is always the coordinate-variable list built by eval_jet, so the
    // expansion point can be read back off the constant terms.
    std::vector<double> a(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      a[i] = x[i].value();
    }
    const Jet v = inner_->eval_jet(a, x[0].max_degree());
    return pow_hom(v, static_cast<double>(m_));
  }
  bool contains(std::span<const double> x) const override {
    return inner_->in_domain(x);
  }

 private:
  FunctionPtr inner_;
  int m_;
};

}  // namespace

HomogeneousFunction::HomogeneousFunction(std::string name, double degree,
                                         int dim)
    : name_(std::move(name)), degree_(degree), dim_(dim) {}

bool HomogeneousFunction::in_domain(std::span<const double> x) const {
  return static_cast<int>(x.size()) == dim_ && contains(x);
}

double HomogeneousFunction::operator()(std::span<const double> x) const {
  if (!in_domain(x)) {
    throw std::domain_error(name_ + ": point outside the smooth domain");
  }
  return eval_real(x);
}

Jet HomogeneousFunction::eval_jet(std::span<const double> a,
                                  int max_degree) const {
  if (!in_domain(a)) {
    throw std::domain_error(name_ +
                            ": expansion point outside the smooth domain");
  }
  const std::vector<Jet> vars = Jet::variables(a, max_degree);
  return eval_jets(vars);
}

FunctionPtr make_quadratic_root(Matrix r) {
  if (!is_square(r)) {
    throw std::invalid_argument("quadratic_root: R must be square");
  }
  if (static_cast<int>(r.size()) > kMaxDim) {
    throw std::invalid_argument("quadratic_root: dimension above guard");
  }
  if (!is_symmetric(r, 1e-12)) {
    throw std::invalid_argument("quadratic_root: R must be symmetric");
  }
  if (!is_positive_definite(r)) {
    throw std::domain_error(
        "quadratic_root: R must be strictly positive definite");
  }
  std::ostringstream name;
  name << "quadratic_root(n=" << r.size() << ")";
  return std::make_shared<QuadraticRootFn>(name.str(), std::move(r));
}

FunctionPtr make_euclidean_norm(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("euclidean: dimension out of range");
  }
  std::ostringstream name;
  name << "euclidean(n=" << dim << ")";
  return std::make_shared<QuadraticRootFn>(name.str(), identity_matrix(dim));
}

FunctionPtr make_monomial(std::vector<double> alpha) {
  if (alpha.empty() || static_cast<int>(alpha.size()) > kMaxDim) {
    throw std::invalid_argument("monomial: dimension out of range");
  }
  for (double a : alpha) {
    if (!(a >= 0.0)) {
      throw std::invalid_argument("monomial: exponents must be >= 0");
    }
  }
  std::ostringstream name;
  name << "monomial(alpha=";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    name << (i ? "," : "") << alpha[i];
  }
  name << ")";
  return std::make_shared<MonomialFn>(name.str(), std::move(alpha));
}

FunctionPtr make_pnorm(int dim, double p) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("pnorm: dimension out of range");
  }
  if (!(p > 1.0)) {
    throw std::invalid_argument("pnorm: requires p > 1");
  }
  std::ostringstream name;
  name << "pnorm(p=" << p << ",n=" << dim << ")";
  return std::make_shared<PNormFn>(name.str(), dim, p);
}

FunctionPtr make_power(FunctionPtr inner, int m) {
  if (!inner) {
    throw std::invalid_argument("power: missing inner function");
  }
  if (m < 1 || m > kMaxOrder) {
    throw std::invalid_argument("power: exponent must be in [1, 10]");
  }
  if (std::abs(inner->degree() - 1.0) > 1e-12) {
    throw std::invalid_argument("power: inner function must have degree 1");
  }
  std::ostringstream name;
  name << inner->name() << "^" << m;
  return std::make_shared<PowerFn>(name.str(), std::move(inner), m);
}

FunctionPtr make_function(const FunctionSpec& spec, int dim_hint) {
  if (spec.family == "quadratic_root") {
    return make_quadratic_root(spec.R);
  }
  if (spec.family == "monomial") {
    return make_monomial(spec.alpha);
  }
  if (spec.family == "pnorm") {
    const int dim = spec.dim > 0 ? spec.dim : dim_hint;
    if (dim <= 0) {
      throw std::invalid_argument(
          "pnorm: dimension missing (set \"dim\" or derive it from a point)");
    }
    return make_pnorm(dim, spec.p);
  }
  if (spec.family == "power") {
    if (!spec.inner) {
      throw std::invalid_argument("power: spec must carry an inner spec");
    }
    return make_power(make_function(*spec.inner, dim_hint), spec.power);
  }
  throw std::invalid_argument("unknown function family: " + spec.family);
}

double homogeneity_residual(const HomogeneousFunction& f,
                            std::span<const double> x, double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("homogeneity_residual: lambda must be > 0");
  }
  std::vector<double> scaled(x.begin(), x.end());
  for (double& s : scaled) {
    s *= lambda;
  }
  if (!f.in_domain(x) || !f.in_domain(scaled)) {
    throw std::domain_error("homogeneity_residual: point outside domain");
  }
  return std::abs(f(scaled) - std::pow(lambda, f.degree()) * f(x));
}

bool segment_in_domain(const HomogeneousFunction& f, std::span<const double> a,
                       std::span<const double> b, int samples) {
  if (samples < 2) {
    throw std::invalid_argument("segment_in_domain: samples must be >= 2");
  }
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<double> point(a.size());
  for (int s = 0; s < samples; ++s) {
    const double t = static_cast<double>(s) / (samples - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      point[i] = a[i] + t * (b[i] - a[i]);
    }
    if (!f.in_domain(point)) {
      return false;
    }
  }
  return true;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> list;
    list.push_back({"euclidean2", "quadratic_root", make_euclidean_norm(2)});
    list.push_back({"quad_root2", "quadratic_root",
                    make_quadratic_root({{1.0, 0.5}, {0.5, 1.0}})});
    list.push_back({"quad_root3", "quadratic_root",
                    make_quadratic_root({{1.0, 0.3, 0.2},
                                         {0.3, 1.0, 0.4},
                                         {0.2, 0.4, 1.0}})});
    list.push_back({"pnorm_p3_n2", "pnorm", make_pnorm(2, 3.0)});
    list.push_back({"pnorm_p1.5_n3", "pnorm", make_pnorm(3, 1.5)});
    list.push_back({"mono_11", "monomial", make_monomial({1.0, 1.0})});
    list.push_back({"mono_21", "monomial", make_monomial({2.0, 1.0})});
    list.push_back({"mono_211", "monomial", make_monomial({2.0, 1.0, 1.0})});
    return list;
  }();
  return entries;
}

}  // namespace homtaylor
