#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "homtaylor/jet.hpp"
#include "homtaylor/linalg.hpp"

namespace homtaylor {

/// Positively homogeneous function f with declared degree m and an open-cone
/// smooth domain U: f(lambda x) = lambda^m f(x) for lambda > 0. The same
/// evaluation routine is instantiated with plain doubles and with jets, so
/// evaluate() and the degree-0 jet coefficient agree bit for bit.
class HomogeneousFunction {
 public:
  virtual ~HomogeneousFunction() = default;

  const std::string& name() const { return name_; }
  double degree() const { return degree_; }
  int dim() const { return dim_; }

  bool in_domain(std::span<const double> x) const;

  /// f(x); throws std::domain_error outside the smooth domain.
  double operator()(std::span<const double> x) const;

  /// Jet of f at `a` truncated to total degree `max_degree`.
  Jet eval_jet(std::span<const double> a, int max_degree) const;

 protected:
  HomogeneousFunction(std::string name, double degree, int dim);

  virtual double eval_real(std::span<const double> x) const = 0;
  virtual Jet eval_jets(std::span<const Jet> x) const = 0;
  virtual bool contains(std::span<const double> x) const = 0;

 private:
  std::string name_;
  double degree_;
  int dim_;
};

using FunctionPtr = std::shared_ptr<const HomogeneousFunction>;

/// Declarative description of a catalog function, mirroring its JSON form:
///   {"family": "...", "R": [[...]], "alpha": [...], "p": ..., "power": ...,
///    "inner": {...}}
struct FunctionSpec {
  std::string family;                   // quadratic_root|monomial|pnorm|power
  Matrix R;                             // quadratic_root
  std::vector<double> alpha;            // monomial
  double p = 0.0;                       // pnorm
  int power = 0;                        // power
  std::shared_ptr<FunctionSpec> inner;  // power
  int dim = 0;                          // pnorm; 0 = take the caller's hint
};

/// Builds the function described by the spec.
///   quadratic_root: sqrt(x^T R x), degree 1, domain x != 0 (R strictly PD)
///   monomial:       prod x_i^alpha_i, degree sum(alpha), domain R^n for
///                   integer alpha, else the strictly positive orthant
///   pnorm:          (sum x_i^p)^(1/p) with p > 1, degree 1, domain the
///                   strictly positive orthant
///   power:          g^m for degree-1 g, degree m, domain of g
/// Throws std::invalid_argument on malformed specs and std::domain_error
/// when R is not strictly positive definite. `dim_hint` supplies the
/// dimension for specs that do not carry one (pnorm parsed from flags).
FunctionPtr make_function(const FunctionSpec& spec, int dim_hint = 0);

FunctionPtr make_quadratic_root(Matrix r);
FunctionPtr make_euclidean_norm(int dim);
FunctionPtr make_monomial(std::vector<double> alpha);
FunctionPtr make_pnorm(int dim, double p);
FunctionPtr make_power(FunctionPtr inner, int m);

/// |f(lambda x) - lambda^degree f(x)|.
double homogeneity_residual(const HomogeneousFunction& f,
                            std::span<const double> x, double lambda);

/// True iff the domain predicate holds at `samples` equally spaced points of
/// the segment [a, b], endpoints included. Sampling is a documented
/// approximation of exact segment membership.
bool segment_in_domain(const HomogeneousFunction& f, std::span<const double> a,
                       std::span<const double> b, int samples = 101);

struct CatalogEntry {
  std::string name;
  std::string family;
  FunctionPtr fn;
};

/// Fixed desk-scale test catalog (all dimensions <= 3, integer degrees).
const std::vector<CatalogEntry>& catalog();

}  // namespace homtaylor
