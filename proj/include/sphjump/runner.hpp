#pragma once

#include "sphjump/config.hpp"

namespace sphjump {

// CLI subcommand drivers. Each writes its CSV/JSON artifacts into
// config.out_dir and returns an exit code: 0 pass, 1 experiment failure.
// Configuration errors surface as std::invalid_argument (exit code 2 in
// the CLI layer).
int run_spectrum(const RunConfig& config);
int run_simulate(const RunConfig& config);
int run_moments(const RunConfig& config);
int run_diffusion(const RunConfig& config);
int run_peaked(const RunConfig& config);
int run_invariant(const RunConfig& config);
int run_validate(const RunConfig& config);

}  // namespace sphjump
