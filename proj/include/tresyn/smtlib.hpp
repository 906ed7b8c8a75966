#pragma once

#include <optional>
#include <string>

#include "tresyn/encode.hpp"

namespace tresyn {

/*
 * External SMT solver, as a shell command that reads an SMT-LIB 2 script on
 * stdin and prints "sat"/"unsat" on the first output line followed by an
 * S-expression model (e.g. "z3 -in" or "cvc5 --lang smt2").  Selected by
 * `--solver smtlib:CMD` or the TRESYN_SOLVER environment variable.
 */
struct ExternalSolver {
    std::string command;
};

enum class SmtVerdict : std::uint8_t { Sat, Unsat, Unknown, Error };

struct ExternalResult {
    SmtVerdict verdict{SmtVerdict::Error};
    /* Sat only: the interval per id, reconstructed from the model. */
    std::optional<Assignment> assignment;
    /* Diagnostic: first output line, or what went wrong. */
    std::string detail;
};

/* Emit the problem, run the solver on it, and parse verdict plus model. */
ExternalResult solve_external(const ExternalSolver& solver, const Problem& problem);

/*
 * Parse "(define-fun l_3 () Int 5)"-style model text into an assignment over
 * the given ids; ids absent from the model default to [0, inf).  Returns
 * nullopt on malformed input.
 */
std::optional<Assignment> parse_model(const std::string& model_text, const std::vector<std::uint32_t>& ids);

}  // namespace tresyn
