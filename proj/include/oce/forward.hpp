#pragma once
#include <array>
#include <functional>

#include "oce/medium.hpp"

namespace oce::forward {

using medium::CompressedLayer;
using medium::CompressedStack;
using medium::RandomSublayer;
using spectra::cplx;

/// Scalar scattering description of a sub-stack at one omega: reflection and
/// transmission for illumination from above/below, phases referenced to the
/// plane z_ref on both ports.
struct TwoPort {
  cplx r_top{0.0};
  cplx t_down{1.0};
  cplx r_bottom{0.0};
  cplx t_up{1.0};
  double z_ref = 0.0;
};

/// Downward plane-wave illumination: spectrum f(omega) and horizontal unit
/// polarization. The scalar pipeline carries the field as the coefficient of
/// eta, so eta only participates through its validation.
struct IncidentBeam {
  std::function<cplx(double)> spectrum = [](double) { return cplx(1.0); };
  std::array<double, 2> eta{1.0, 0.0};

  void validate() const;
};

/// Normal-incidence interface coefficients for illumination from medium a
/// into medium b: r = (n_a - n_b)/(n_a + n_b), t = 2 n_a/(n_a + n_b) = 1 + r.
struct FresnelCoeffs {
  cplx r;
  cplx t;
};
FresnelCoeffs fresnel(cplx n_a, cplx n_b);

/// Both-port description of the bare interface at z_interface.
TwoPort interface_two_port(cplx n_a, cplx n_b, double z_interface);

struct InterfaceResponse {
  cplx reflected;    ///< upward amplitude referenced to the x3 = 0 plane
  cplx transmitted;  ///< downward amplitude referenced to z_interface
};
InterfaceResponse single_interface_response(double omega, const IncidentBeam& beam,
                                            cplx n_a, cplx n_b, double z_interface,
                                            double c = 1.0);

struct SeriesResult {
  cplx r_total;
  int terms_used = 0;
};

/// Truncated two-bounce Neumann series for the compound reflectance of an
/// upper and a lower two-port separated by one-way gap phase p:
///   r = r_up + t_down t_up sum_k r_lo p^2 (r_up^bottom r_lo p^2)^k.
/// Truncates when the geometric tail bound drops below tol.
SeriesResult series_reflectance(const TwoPort& upper, const TwoPort& lower, cplx gap_phase,
                                double tol = 1e-14, int max_terms = 10000);

enum class StackMode { series, oracle };

/// Reflectance of the compressed interface stack at the x3 = 0 plane for a
/// unit-amplitude downward wave (sublayers ignored; see scene_response).
/// series composes interfaces bottom-up through series_reflectance; oracle
/// uses 2x2 transfer matrices.
cplx stack_response(const CompressedStack& stack, double omega, StackMode mode,
                    double c = 1.0, double series_tol = 1e-14);

enum class ScatterSide { reflect, transmit };
enum class Variant { paper, derived };

/// Ensemble-averaged first-order field perturbation of a random particle
/// band, observed at x3 inside the same (infinite) host medium.
/// variant=paper evaluates the averaged-limit formulas exactly as printed;
/// variant=derived evaluates the slab integral
///   (rho/(zeta-Z)) pi R^3 h(2 R k) (e^{-2ikZ} - e^{-2ik zeta}) e^{+ikx3}
/// (reflect side; k = omega n / c), cross-checked against quadrature and
/// Monte Carlo. Inputs are the compressed (per-delta) values.
cplx expected_scatter(const RandomSublayer& sub, double zeta_bar, double Z_bar,
                      cplx nu_bar, cplx n_host, const IncidentBeam& beam, double omega,
                      double x3, ScatterSide side, Variant variant, double c = 1.0);

/// Elastography data functionals of section-5 form. All affine laws applied
/// internally from the rest values and rates.
cplx datum_m0(cplx n1, cplx n1_rate, double z1, double omega, double delta, double c = 1.0);

cplx datum_mj(cplx n_j, cplx n_j_rate, cplx n_next, cplx n_next_rate, double z_next,
              double z_next_rate, double omega, double delta, double c = 1.0);

/// Random-band functional. Evaluates the analytic continuation for every
/// delta; the derived variant returns the L'Hopital limit at band collapse.
struct SublayerParams {
  double rho = 0.0;
  cplx nu{0.0};
  cplx nu_rate{0.0};
  double zeta = 0.0, zeta_rate = 0.0;
  double Z = 0.0, Z_rate = 0.0;
};
cplx datum_Mj(const SublayerParams& s, cplx n_j, cplx n_j_rate, double omega, double delta,
              Variant variant, double c = 1.0);

/// One-way transmission correction factor (1 + tau) for a wave crossing the
/// particle band, derived variant: tau = phi rho 4 pi R^3 h(0) (i k / 2).
cplx band_transit_factor(const RandomSublayer& sub, double zeta_bar, double Z_bar,
                         cplx nu_bar, cplx n_host, double omega, Variant variant,
                         double c = 1.0);

/// Full scene reflectance at the x3 = 0 plane for unit incident amplitude:
/// the interface stack with all inter-interface bounces, plus each particle
/// band's first-order reflected echo and its transmission correction on
/// everything below it. First order in the particle contrast throughout.
cplx scene_response(const CompressedStack& stack, double omega, StackMode mode,
                    Variant variant, double c = 1.0);

} // namespace oce::forward
