#pragma once

#include "johnson/types.hpp"

namespace johnson {

/// S = -Σ D_λ [λ ln λ + (1-λ) ln(1-λ)], in nats.
double von_neumann(const CorrelationSpectrum& spectrum);

struct EntropyReport {
  double entropy = 0.0;
  Index subsystem_size = 0;
  Index boundary_size = 0;  // neighborhood at the cut of {0..N} or {N+1..k}, else |SV|
  double ratio_sv = 0.0;
  double ratio_boundary = 0.0;
};

EntropyReport report(const GraphSpec& spec, const SubsystemSpec& sub,
                     const CorrelationSpectrum& spectrum);

}  // namespace johnson
