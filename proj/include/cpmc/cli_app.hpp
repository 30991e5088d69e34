#pragma once

#include <string>

#include "cpmc/instance.hpp"
#include "cpmc/io.hpp"

namespace cpmc {

// Exit-code vocabulary shared by every command.
enum ExitCode {
  ExitOk = 0,            // solved / valid / generated
  ExitInvalid = 1,       // certificate failed verification
  ExitInfeasible = 2,    // no valid cut or path exists
  ExitPrecondition = 3,  // well-formed input, ill-posed question
  ExitMalformed = 4,     // unparsable or contract-breaking input
  ExitOracleMismatch = 5
};

// Full command-line entry point; returns the exit code instead of
// calling exit() so tests can drive it in-process.
int cli_main(int argc, const char* const* argv);

// Certificate check behind `verify`: re-derives the perturbed weights
// the named solver used, then re-checks the cut (or path) by plain
// connectivity and recomputed totals.  Never runs a solver.  On
// failure returns false and, given `why`, says what broke.
bool verify_result(const PlanarInstance& inst, const ResultDoc& doc, std::string* why = nullptr);

// The perturbation a solver name implies (node weights for the node
// cut problem, edge weights otherwise).
PerturbMode perturb_mode_for(const std::string& solver);

}  // namespace cpmc
