#pragma once

#include "affmon/json_io.hpp"
#include "affmon/rational.hpp"

#include <string>
#include <vector>

namespace affmon {

/// Outcome of one CLI command. The envelope is what goes to stdout:
///   {"status": "ok"|"error", "payload": ..., "diagnostics": [...]}
/// exit code 0 iff status is ok; 1 for domain errors (axiom failure,
/// rationality failure, regularity mismatch, invalid parameter values);
/// 2 for usage and parse errors.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json envelope;
    std::string pretty;

    bool ok() const { return exit_code == 0; }
    const nlohmann::json& payload() const { return envelope.at("payload"); }
};

/// Classification table for one dimension; payload is a JSON array of monoid
/// objects in deterministic order (table rows, then parameters).
CommandResult cmd_catalog(int dim, int bound, const std::vector<Rational>& quadratic_ds,
                          const std::vector<std::vector<Rational>>& cubic_coeff_lists);

/// Axiom check of a monoid JSON object, or of every entry of a catalog
/// array. Nonzero exit iff some axiom fails.
CommandResult cmd_verify(const nlohmann::json& input);

CommandResult cmd_qpoly(int b, int c);

CommandResult cmd_twist(const nlohmann::json& base_monoid, const nlohmann::json& splitting);

/// Request: {"family": "plain"|"deformed"|"corank1", "params": {...},
/// "matrix": [[...]]}. plain/deformed take params {"b","c"} and a 2x2
/// rational matrix; corank1 takes params {"b_vector": [...], "z": "r"} and a
/// permutation matrix. The payload echoes the request plus "regular"
/// (computed from the induced birational map) and "expected" (closed form);
/// disagreement is a domain error.
CommandResult cmd_autcheck(const nlohmann::json& request);

CommandResult cmd_norm(const nlohmann::json& algebra);

CommandResult cmd_iso(const Rational& d1, const Rational& d2);

}  // namespace affmon
