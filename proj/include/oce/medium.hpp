#pragma once
#include <optional>
#include <string>
#include <vector>

#include "oce/spectra.hpp"

namespace oce::medium {

using spectra::cplx;
using spectra::DispersionModel;
using spectra::TabulatedComplex;

/// Top boundary of a layer: rest position and compression slope.
struct LayerBoundary {
  double z = 0.0;
  double z_rate = 0.0;
};

/// Band of randomly distributed spherical particles inside a layer.
/// Geometry obeys Z < zeta (bottom below top) and the shrink condition
/// Z_rate > zeta_rate > 0 when used for inversion.
struct RandomSublayer {
  double rho = 0.0;                ///< particles per unit horizontal area
  DispersionModel nu_model;        ///< particle material (chi_p)
  TabulatedComplex nu_rate;        ///< d(nu)/d(delta) as a free function of omega
  double zeta = 0.0, zeta_rate = 0.0;  ///< top of the band
  double Z = 0.0, Z_rate = 0.0;        ///< bottom of the band
  double R = 0.0;                  ///< particle radius

  /// nu(omega) at rest, from the particle dispersion model.
  cplx nu(double omega) const;
};

struct Layer {
  DispersionModel optics;          ///< background susceptibility chi_j
  TabulatedComplex optics_rate;    ///< d(n_j)/d(delta) as a free function of omega
  LayerBoundary boundary_top;
  std::optional<RandomSublayer> sublayer;

  cplx index(double omega) const;  ///< n_j(omega) at rest
};

/// Sampling lattice shared by forward synthesis and inversion.
struct ScanGrid {
  std::vector<double> omegas;  ///< strictly increasing
  std::vector<double> deltas;  ///< strictly increasing, containing 0

  void validate() const;
  bool omegas_uniform(double tol = 1e-9) const;
};

/// Ordered layer stack, top to bottom. Layer j occupies
/// (z_{j+1}, z_j); the last layer is the semi-infinite substrate. Above
/// z_1 lies the background (vacuum by default), which is not compressed.
struct MediumStack {
  std::vector<Layer> layers;
  DispersionModel background;  ///< chi_0, default vacuum
  double delta_min = 0.0, delta_max = 0.0;

  void validate_structure() const;
};

/// One layer with all affine compression laws applied at a fixed delta.
struct CompressedLayer {
  const Layer* source = nullptr;
  double delta = 0.0;
  double z = 0.0;  ///< compressed top boundary

  cplx index(double omega) const;  ///< n_j(omega) + delta * n_j'(omega)

  bool has_sublayer() const { return source->sublayer.has_value(); }
  double zeta = 0.0, Z = 0.0;      ///< compressed band edges (if sublayer)
  cplx nu(double omega) const;     ///< nu(omega) + delta * nu'(omega)
};

struct CompressedStack {
  const MediumStack* source = nullptr;
  double delta = 0.0;
  std::vector<CompressedLayer> layers;
};

/// Applies all affine laws at this delta and re-checks boundary ordering.
/// Throws ordering_violated on any crossing.
CompressedStack compress(const MediumStack& stack, double delta);

/// Non-fatal checks of the recovery-lemma hypotheses and geometry over the
/// grid: decay condition Im n_j'(w0) > 0, n_1' not identically zero,
/// particle contrast condition, and ordering across the delta range.
std::vector<std::string> validate(const MediumStack& stack, const ScanGrid& grid);

} // namespace oce::medium
