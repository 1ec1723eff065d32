#pragma once

namespace ratseries::cli {

// Dispatches one subcommand run. Exit codes: 0 success, 1 analysis-level
// failure (no certificate, no fit, divergence), 2 usage error.
int run(int argc, char** argv);

}  // namespace ratseries::cli
