#pragma once
#include <complex>
#include <utility>
#include <variant>
#include <vector>

#include "oce/errors.hpp"

namespace oce::spectra {

using cplx = std::complex<double>;

/// Piecewise-linear complex function of omega, sampled on a strictly
/// increasing grid. Used for tabulated susceptibilities and for the
/// compression rates n'(omega), nu'(omega), which are free functions.
class TabulatedComplex {
public:
  TabulatedComplex() = default;
  TabulatedComplex(std::vector<double> omegas, std::vector<cplx> values);

  /// Linear interpolation; throws out_of_band outside the sample range.
  cplx operator()(double omega) const;

  bool empty() const { return omegas_.empty(); }
  const std::vector<double>& omegas() const { return omegas_; }
  const std::vector<cplx>& values() const { return values_; }

private:
  std::vector<double> omegas_;
  std::vector<cplx> values_;
};

struct ConstantModel {
  cplx chi{0.0, 0.0};
};

/// chi(w) = s w_r^2 / (w_r^2 - w^2 - i gamma w); passive for gamma > 0, s >= 0.
struct LorentzModel {
  double strength = 0.0;
  double omega_r = 1.0;
  double gamma = 0.0;
};

struct TabulatedModel {
  TabulatedComplex samples;
};

/// Parametric dispersion model for one material: omega -> complex
/// susceptibility.
struct DispersionModel {
  std::variant<ConstantModel, LorentzModel, TabulatedModel> variant{ConstantModel{}};

  static DispersionModel constant(cplx chi) { return {ConstantModel{chi}}; }
  static DispersionModel lorentz(double s, double omega_r, double gamma) {
    return {LorentzModel{s, omega_r, gamma}};
  }
  static DispersionModel tabulated(TabulatedComplex t) {
    return {TabulatedModel{std::move(t)}};
  }
};

/// chi(omega) for the given model.
cplx susceptibility_eval(const DispersionModel& model, double omega);

/// sqrt(1 + chi) on the principal branch (Im >= 0, Re > 0 for passive media).
/// Throws branch_ambiguity when 1 + chi lies on the closed negative real axis.
cplx refractive_index(cplx chi);

/// (chi_p - chi_bg) / (1 + chi_bg).
cplx contrast(cplx chi_p, cplx chi_bg);

/// Spherical form factor h(xi) = (sin xi - xi cos xi) / xi^3, with the
/// removable singularity at 0 handled by a 3-term series for |xi| < 1e-2.
cplx form_factor(cplx xi);

} // namespace oce::spectra
