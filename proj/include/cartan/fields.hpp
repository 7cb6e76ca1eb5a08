#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan/matrix.hpp"
#include "cartan/spaces.hpp"

namespace cartan {

/// A complex-valued function on a matrix group, evaluable over plain
/// complex entries or over order-2 jets. Both evaluators come from one
/// generic callable, so jet evaluation agrees with the plain one on
/// constant jets by construction.
struct ScalarField {
  std::string label;
  std::function<Complex(const CMat&)> eval_plain;
  std::function<Jet(const JMat&)> eval_jet;

  Complex operator()(const CMat& m) const { return eval_plain(m); }
  Jet operator()(const JMat& m) const { return eval_jet(m); }
};

template <class F>
ScalarField make_field(std::string label, F f) {
  return {std::move(label), [f](const CMat& m) -> Complex { return f(m); },
          [f](const JMat& m) -> Jet { return f(m); }};
}

/// Thrown when an evaluator fails along one basis direction (for example a
/// quotient field hitting its singular set); carries the direction so a
/// harness can resample the point.
struct EvaluationError : std::runtime_error {
  int direction;
  EvaluationError(int dir, const std::string& field, const std::string& why)
      : std::runtime_error("evaluation of '" + field + "' failed along basis direction " +
                           std::to_string(dir) + ": " + why),
        direction(dir) {}
};

ScalarField constant_field(Complex c);
ScalarField coordinate_field(int i, int j);
ScalarField conj_coordinate_field(int i, int j);
ScalarField field_product(const ScalarField& f, const ScalarField& h);
ScalarField field_linear_combination(Complex a, const ScalarField& f, Complex b,
                                     const ScalarField& h);
/// f pre-composed with left translation by q.
ScalarField left_translate(const ScalarField& f, const CMat& q);
/// f pre-composed with the Cartan map of s.
ScalarField compose_with_cartan(const ScalarField& f, const SpaceSpec& s);

/// Tension field over an explicit orthonormal frame:
///   tau(f)(p) = sum_k d^2/dt^2|_0 f(p exp(t X_k)),
/// the covariant term vanishing identically on a bi-invariant metric.
Complex tension(const ScalarField& f, const std::vector<CMat>& basis, const CMat& p);
Complex tension(const ScalarField& f, const GroupSpec& g, const CMat& p);
Complex tension(const ScalarField& f, const SpaceSpec& ambient_of, const CMat& p);

/// Conformality operator kappa(f,h)(p) = sum_k X_k(f) X_k(h) at p.
Complex conformality(const ScalarField& f, const ScalarField& h, const std::vector<CMat>& basis,
                     const CMat& p);
Complex conformality(const ScalarField& f, const ScalarField& h, const GroupSpec& g, const CMat& p);
Complex conformality(const ScalarField& f, const ScalarField& h, const SpaceSpec& ambient_of,
                     const CMat& p);

/// Restriction to the Cartan image: the sum runs over the p-space basis only,
/// with jets taken along t -> Phi(p exp(tX)). Equals tension(f o Phi) over
/// the full ambient basis.
Complex tension_restricted(const ScalarField& f, const SpaceSpec& s, const CMat& p);
Complex conformality_restricted(const ScalarField& f, const ScalarField& h, const SpaceSpec& s,
                                const CMat& p);

/// tau_N and kappa_N of the image N = Phi(G) at Phi(p), via the transported
/// orthonormal frame Ad_{sigma(p)}(X) of T_{Phi(p)} N.
Complex tension_on_image(const ScalarField& f, const SpaceSpec& s, const CMat& p);
Complex conformality_on_image(const ScalarField& f, const ScalarField& h, const SpaceSpec& s,
                              const CMat& p);

/// |tau(fh) - f tau(h) - 2 kappa(f,h) - tau(f) h| at p.
double product_rule_residual(const ScalarField& f, const ScalarField& h,
                             const std::vector<CMat>& basis, const CMat& p);

}  // namespace cartan
