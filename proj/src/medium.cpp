#include "oce/medium.hpp"

#include <cmath>
#include <sstream>

namespace oce::medium {

cplx RandomSublayer::nu(double omega) const {
  return spectra::refractive_index(spectra::susceptibility_eval(nu_model, omega));
}

cplx Layer::index(double omega) const {
  return spectra::refractive_index(spectra::susceptibility_eval(optics, omega));
}

void ScanGrid::validate() const {
  if (omegas.size() < 2) fail(errc::invalid_scenario, "need at least 2 omega samples");
  for (std::size_t i = 1; i < omegas.size(); ++i)
    if (!(omegas[i] > omegas[i - 1]))
      fail(errc::invalid_scenario, "omegas must be strictly increasing");
  if (deltas.size() < 5)
    fail(errc::invalid_scenario, "need at least 5 delta samples for inversion use");
  bool has_zero = false;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i > 0 && !(deltas[i] > deltas[i - 1]))
      fail(errc::invalid_scenario, "deltas must be strictly increasing");
    if (deltas[i] == 0.0) has_zero = true;
  }
  if (!has_zero) fail(errc::invalid_scenario, "deltas must contain 0");
}

bool ScanGrid::omegas_uniform(double tol) const {
  if (omegas.size() < 2) return false;
  const double step = omegas[1] - omegas[0];
  for (std::size_t i = 1; i < omegas.size(); ++i)
    if (std::abs((omegas[i] - omegas[i - 1]) - step) > tol * std::abs(step)) return false;
  return true;
}

void MediumStack::validate_structure() const {
  if (layers.empty()) fail(errc::invalid_scenario, "stack needs at least one layer");
  if (!(delta_max >= delta_min)) fail(errc::invalid_scenario, "empty delta range");
}

cplx CompressedLayer::index(double omega) const {
  cplx n = source->index(omega);
  if (!source->optics_rate.empty()) n += delta * source->optics_rate(omega);
  return n;
}

cplx CompressedLayer::nu(double omega) const {
  const auto& sub = *source->sublayer;
  cplx v = sub.nu(omega);
  if (!sub.nu_rate.empty()) v += delta * sub.nu_rate(omega);
  return v;
}

CompressedStack compress(const MediumStack& stack, double delta) {
  stack.validate_structure();
  CompressedStack out;
  out.source = &stack;
  out.delta = delta;
  out.layers.reserve(stack.layers.size());
  for (const auto& layer : stack.layers) {
    CompressedLayer cl;
    cl.source = &layer;
    cl.delta = delta;
    cl.z = layer.boundary_top.z + delta * layer.boundary_top.z_rate;
    if (layer.sublayer) {
      cl.zeta = layer.sublayer->zeta + delta * layer.sublayer->zeta_rate;
      cl.Z = layer.sublayer->Z + delta * layer.sublayer->Z_rate;
    }
    out.layers.push_back(cl);
  }
  for (std::size_t j = 0; j + 1 < out.layers.size(); ++j)
    if (!(out.layers[j].z > out.layers[j + 1].z)) {
      std::ostringstream msg;
      msg << "boundaries " << j + 1 << " and " << j + 2 << " cross at delta=" << delta;
      fail(errc::ordering_violated, msg.str());
    }
  for (std::size_t j = 0; j < out.layers.size(); ++j) {
    const auto& cl = out.layers[j];
    if (!cl.has_sublayer()) continue;
    const double z_below =
        (j + 1 < out.layers.size()) ? out.layers[j + 1].z
                                    : -std::numeric_limits<double>::infinity();
    if (!(cl.Z < cl.zeta && cl.zeta < cl.z && z_below < cl.Z)) {
      std::ostringstream msg;
      msg << "sublayer of layer " << j + 1 << " leaves its layer at delta=" << delta;
      fail(errc::ordering_violated, msg.str());
    }
  }
  return out;
}

std::vector<std::string> validate(const MediumStack& stack, const ScanGrid& grid) {
  std::vector<std::string> diags;
  auto note = [&diags](std::size_t j, const std::string& text) {
    std::ostringstream msg;
    msg << "layer " << j + 1 << ": " << text;
    diags.push_back(msg.str());
  };

  for (std::size_t j = 0; j < stack.layers.size(); ++j) {
    const auto& layer = stack.layers[j];
    bool any_rate_nonzero = false;
    bool any_im_positive = false;
    for (double w : grid.omegas) {
      cplx rate = layer.optics_rate.empty() ? cplx(0.0) : layer.optics_rate(w);
      if (std::abs(rate) > 1e-14) any_rate_nonzero = true;
      if (rate.imag() > 0.0) any_im_positive = true;
    }
    if (j == 0 && !any_rate_nonzero)
      note(j, "first-interface recovery degenerate (n1' identically zero)");
    if (!any_im_positive && j + 1 < stack.layers.size())
      note(j, "decay condition violated (no omega with Im n' > 0); deeper "
              "interface recovery unavailable");

    if (layer.sublayer) {
      const auto& sub = *layer.sublayer;
      if (!(sub.Z_rate > sub.zeta_rate && sub.zeta_rate > 0.0))
        note(j, "shrink condition violated (requires Z' > zeta' > 0)");
      if (!(sub.rho > 0.0)) note(j, "sublayer density must be positive");
      bool contrast_ok = false;
      for (double w : grid.omegas) {
        cplx n = layer.index(w);
        cplx np = layer.optics_rate.empty() ? cplx(0.0) : layer.optics_rate(w);
        cplx nu = sub.nu(w);
        cplx nup = sub.nu_rate.empty() ? cplx(0.0) : sub.nu_rate(w);
        if (std::abs(np * nu - nup * n) > 1e-12 * std::abs(n * nu)) {
          contrast_ok = true;
          break;
        }
      }
      if (!contrast_ok)
        note(j, "contrast condition violated (n'/n = nu'/nu at every grid omega)");
    }

    for (double w : grid.omegas) {
      cplx chi = spectra::susceptibility_eval(layer.optics, w);
      if (chi.imag() < -1e-12) {
        note(j, "passivity violated (Im chi < 0 at some grid omega)");
        break;
      }
    }
  }

  for (double d : {stack.delta_min, stack.delta_max}) {
    try {
      (void)compress(stack, d);
    } catch (const Error& e) {
      diags.push_back(std::string("ordering: ") + e.what());
    }
  }
  return diags;
}

} // namespace oce::medium
