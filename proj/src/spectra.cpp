#include "oce/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace oce {

const char* errc_name(errc code) {
  switch (code) {
    case errc::out_of_band: return "OutOfBand";
    case errc::branch_ambiguity: return "BranchAmbiguity";
    case errc::degenerate_background: return "DegenerateBackground";
    case errc::degenerate_interface: return "DegenerateInterface";
    case errc::ordering_violated: return "OrderingViolated";
    case errc::series_diverges: return "SeriesDiverges";
    case errc::max_terms_exceeded: return "MaxTermsExceeded";
    case errc::pole_hit: return "PoleHit";
    case errc::geometry_violated: return "GeometryViolated";
    case errc::origin_singularity: return "OriginSingularity";
    case errc::inside_ball: return "InsideBall";
    case errc::collinear_references: return "CollinearReferences";
    case errc::inconsistent_intensities: return "InconsistentIntensities";
    case errc::zero_spectrum: return "ZeroSpectrum";
    case errc::nonuniform_grid: return "NonuniformGrid";
    case errc::degenerate_lift: return "DegenerateLift";
    case errc::unwrap_aliased: return "UnwrapAliased";
    case errc::decay_hypothesis_violated: return "DecayHypothesisViolated";
    case errc::contrast_degenerate: return "ContrastDegenerate";
    case errc::nonphysical_density: return "NonPhysicalDensity";
    case errc::no_convergence: return "NoConvergence";
    case errc::gating_overlap: return "GatingOverlap";
    case errc::invalid_scenario: return "InvalidScenario";
    case errc::io_failure: return "IoFailure";
  }
  return "UnknownError";
}

} // namespace oce

namespace oce::spectra {

TabulatedComplex::TabulatedComplex(std::vector<double> omegas, std::vector<cplx> values)
    : omegas_(std::move(omegas)), values_(std::move(values)) {
  if (omegas_.size() != values_.size() || omegas_.empty())
    fail(errc::invalid_scenario, "tabulated function needs matching, nonempty samples");
  for (std::size_t i = 1; i < omegas_.size(); ++i)
    if (!(omegas_[i] > omegas_[i - 1]))
      fail(errc::invalid_scenario, "tabulated samples must be strictly increasing in omega");
}

cplx TabulatedComplex::operator()(double omega) const {
  if (omegas_.empty()) fail(errc::invalid_scenario, "empty tabulated function");
  if (omega < omegas_.front() || omega > omegas_.back())
    fail(errc::out_of_band, "omega outside tabulated range");
  if (omegas_.size() == 1) return values_.front();
  auto it = std::upper_bound(omegas_.begin(), omegas_.end(), omega);
  if (it == omegas_.begin()) ++it;
  if (it == omegas_.end()) --it;
  std::size_t hi = static_cast<std::size_t>(it - omegas_.begin());
  std::size_t lo = hi - 1;
  double t = (omega - omegas_[lo]) / (omegas_[hi] - omegas_[lo]);
  return values_[lo] + t * (values_[hi] - values_[lo]);
}

cplx susceptibility_eval(const DispersionModel& model, double omega) {
  return std::visit(
      [omega](const auto& m) -> cplx {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantModel>) {
          return m.chi;
        } else if constexpr (std::is_same_v<T, LorentzModel>) {
          const double wr2 = m.omega_r * m.omega_r;
          return m.strength * wr2 / (cplx(wr2 - omega * omega, -m.gamma * omega));
        } else {
          return m.samples(omega);
        }
      },
      model.variant);
}

cplx refractive_index(cplx chi) {
  const cplx one_plus = 1.0 + chi;
  if (one_plus.imag() == 0.0 && one_plus.real() <= 0.0)
    fail(errc::branch_ambiguity, "1 + chi on the closed negative real axis");
  return std::sqrt(one_plus);
}

cplx contrast(cplx chi_p, cplx chi_bg) {
  const cplx denom = 1.0 + chi_bg;
  if (std::abs(denom) == 0.0)
    fail(errc::degenerate_background, "1 + chi_bg = 0");
  return (chi_p - chi_bg) / denom;
}

cplx form_factor(cplx xi) {
  if (std::abs(xi) < 1e-2) {
    const cplx x2 = xi * xi;
    return 1.0 / 3.0 - x2 / 30.0 + x2 * x2 / 840.0;
  }
  return (std::sin(xi) - xi * std::cos(xi)) / (xi * xi * xi);
}

} // namespace oce::spectra
