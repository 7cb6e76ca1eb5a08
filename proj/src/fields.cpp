#include "cartan/fields.hpp"

#include <cmath>

namespace cartan {

ScalarField constant_field(Complex c) {
  return {"const", [c](const CMat&) { return c; }, [c](const JMat&) { return Jet(c); }};
}

ScalarField coordinate_field(int i, int j) {
  const std::string label = "z_" + std::to_string(i + 1) + std::to_string(j + 1);
  return make_field(label, [i, j](const auto& m) { return m(i, j); });
}

ScalarField conj_coordinate_field(int i, int j) {
  const std::string label = "conj z_" + std::to_string(i + 1) + std::to_string(j + 1);
  return make_field(label, [i, j](const auto& m) {
    using std::conj;
    return conj(m(i, j));
  });
}

ScalarField field_product(const ScalarField& f, const ScalarField& h) {
  return {f.label + "*" + h.label,
          [f, h](const CMat& m) { return f.eval_plain(m) * h.eval_plain(m); },
          [f, h](const JMat& m) { return f.eval_jet(m) * h.eval_jet(m); }};
}

ScalarField field_linear_combination(Complex a, const ScalarField& f, Complex b,
                                     const ScalarField& h) {
  return {"lin(" + f.label + "," + h.label + ")",
          [=](const CMat& m) { return a * f.eval_plain(m) + b * h.eval_plain(m); },
          [=](const JMat& m) { return a * f.eval_jet(m) + b * h.eval_jet(m); }};
}

ScalarField left_translate(const ScalarField& f, const CMat& q) {
  const JMat qj = promote(q);
  return {f.label + " o L_q", [f, q](const CMat& m) { return f.eval_plain(q * m); },
          [f, qj](const JMat& m) { return f.eval_jet(qj * m); }};
}

ScalarField compose_with_cartan(const ScalarField& f, const SpaceSpec& s) {
  return {f.label + " o Phi",
          [f, s](const CMat& m) { return f.eval_plain(cartan_map_matrix(s, m)); },
          [f, s](const JMat& m) { return f.eval_jet(cartan_map_matrix(s, m)); }};
}

namespace {

Jet eval_along(const ScalarField& f, const CMat& p, const CMat& x, int direction) {
  try {
    return f.eval_jet(jet_curve(p, x));
  } catch (const EvaluationError&) {
    throw;
  } catch (const std::exception& e) {
    throw EvaluationError(direction, f.label, e.what());
  }
}

}  // namespace

Complex tension(const ScalarField& f, const std::vector<CMat>& basis, const CMat& p) {
  Complex sum = 0.0;
  for (int k = 0; k < int(basis.size()); ++k) sum += 2.0 * eval_along(f, p, basis[k], k).v2;
  return sum;
}

Complex tension(const ScalarField& f, const GroupSpec& g, const CMat& p) {
  return tension(f, algebra_basis(g).elements, p);
}

Complex tension(const ScalarField& f, const SpaceSpec& ambient_of, const CMat& p) {
  return tension(f, ambient_algebra_basis(ambient_of), p);
}

Complex conformality(const ScalarField& f, const ScalarField& h, const std::vector<CMat>& basis,
                     const CMat& p) {
  Complex sum = 0.0;
  for (int k = 0; k < int(basis.size()); ++k) {
    const JMat curve = jet_curve(p, basis[k]);
    Jet vf, vh;
    try {
      vf = f.eval_jet(curve);
      vh = h.eval_jet(curve);
    } catch (const EvaluationError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvaluationError(k, f.label + "," + h.label, e.what());
    }
    sum += vf.v1 * vh.v1;
  }
  return sum;
}

Complex conformality(const ScalarField& f, const ScalarField& h, const GroupSpec& g,
                     const CMat& p) {
  return conformality(f, h, algebra_basis(g).elements, p);
}

Complex conformality(const ScalarField& f, const ScalarField& h, const SpaceSpec& ambient_of,
                     const CMat& p) {
  return conformality(f, h, ambient_algebra_basis(ambient_of), p);
}

namespace {

JMat cartan_curve(const SpaceSpec& s, const CMat& p, const CMat& x) {
  return cartan_map_matrix(s, jet_curve(p, x));
}

}  // namespace

Complex tension_restricted(const ScalarField& f, const SpaceSpec& s, const CMat& p) {
  Complex sum = 0.0;
  const auto basis = p_basis(s).elements;
  for (int k = 0; k < int(basis.size()); ++k) {
    try {
      sum += 2.0 * f.eval_jet(cartan_curve(s, p, basis[k])).v2;
    } catch (const EvaluationError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvaluationError(k, f.label, e.what());
    }
  }
  return sum;
}

Complex conformality_restricted(const ScalarField& f, const ScalarField& h, const SpaceSpec& s,
                                const CMat& p) {
  Complex sum = 0.0;
  const auto basis = p_basis(s).elements;
  for (int k = 0; k < int(basis.size()); ++k) {
    try {
      const JMat curve = cartan_curve(s, p, basis[k]);
      sum += f.eval_jet(curve).v1 * h.eval_jet(curve).v1;
    } catch (const EvaluationError&) {
      throw;
    } catch (const std::exception& e) {
      throw EvaluationError(k, f.label + "," + h.label, e.what());
    }
  }
  return sum;
}

namespace {

// Orthonormal frame of T_{Phi(p)} N: Ad_{sigma(p)}(X) over the p-basis.
std::vector<CMat> image_frame(const SpaceSpec& s, const CMat& p, CMat& phip) {
  phip = cartan_map_matrix(s, p);
  const CMat sp = detail::apply_involution(s, p);
  const CMat sp_inv = inverse(sp);
  std::vector<CMat> frame;
  for (const CMat& x : p_basis(s).elements) frame.push_back(sp * x * sp_inv);
  return frame;
}

}  // namespace

Complex tension_on_image(const ScalarField& f, const SpaceSpec& s, const CMat& p) {
  CMat phip;
  const auto frame = image_frame(s, p, phip);
  Complex sum = 0.0;
  for (int k = 0; k < int(frame.size()); ++k) sum += 2.0 * eval_along(f, phip, frame[k], k).v2;
  return sum;
}

Complex conformality_on_image(const ScalarField& f, const ScalarField& h, const SpaceSpec& s,
                              const CMat& p) {
  CMat phip;
  const auto frame = image_frame(s, p, phip);
  Complex sum = 0.0;
  for (int k = 0; k < int(frame.size()); ++k) {
    const JMat curve = jet_curve(phip, frame[k]);
    sum += f.eval_jet(curve).v1 * h.eval_jet(curve).v1;
  }
  return sum;
}

double product_rule_residual(const ScalarField& f, const ScalarField& h,
                             const std::vector<CMat>& basis, const CMat& p) {
  const Complex lhs = tension(field_product(f, h), basis, p);
  const Complex rhs = f.eval_plain(p) * tension(h, basis, p) +
                      2.0 * conformality(f, h, basis, p) + tension(f, basis, p) * h.eval_plain(p);
  return std::abs(lhs - rhs);
}

}  // namespace cartan
