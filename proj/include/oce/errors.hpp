#pragma once
#include <stdexcept>
#include <string>

namespace oce {

/// Failure categories used across the library. Each maps to one of the
/// documented error conditions of the operation that throws it.
enum class errc {
  out_of_band,
  branch_ambiguity,
  degenerate_background,
  degenerate_interface,
  ordering_violated,
  series_diverges,
  max_terms_exceeded,
  pole_hit,
  geometry_violated,
  origin_singularity,
  inside_ball,
  collinear_references,
  inconsistent_intensities,
  zero_spectrum,
  nonuniform_grid,
  degenerate_lift,
  unwrap_aliased,
  decay_hypothesis_violated,
  contrast_degenerate,
  nonphysical_density,
  no_convergence,
  gating_overlap,
  invalid_scenario,
  io_failure,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace oce
