#pragma once

#include "affmon/poly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace affmon {

class EtaleAlgebra;
struct MonoidStructure;
struct AxiomReport;
struct SplittingData;

/// Malformed or non-canonical content in an otherwise well-formed JSON
/// document. Distinct from domain errors: the CLI maps this (and JSON parse
/// errors) to the usage exit code.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial encoding, shared by all schemas:
//   {"nvars": n, "terms": [{"num": "p", "den": "q", "exps": [e1,...]}, ...]}
// Terms appear in ascending lexicographic order of the exponent vectors;
// coefficients are nonzero and in lowest terms. Readers reject anything
// non-canonical so that serialization is bit-exact across runs.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json monoid_to_json(const MonoidStructure& m);
MonoidStructure monoid_from_json(const nlohmann::json& j);
std::string monoid_to_json_string(const MonoidStructure& m);
MonoidStructure monoid_from_json_string(const std::string& text);

nlohmann::json axiom_report_to_json(const AxiomReport& r);

// {"factors": [{"minpoly_coeffs": ["c0", "c1", ...]}, ...]}, low to high.
nlohmann::json algebra_to_json(const EtaleAlgebra& a);
EtaleAlgebra algebra_from_json(const nlohmann::json& j);

// {"d": "5", "dim": n, "pairs": [[i, j], ...]} with 1-based coordinates.
nlohmann::json splitting_to_json(const SplittingData& s);
SplittingData splitting_from_json(const nlohmann::json& j);

/// Canonical byte encoding used everywhere: compact dump, object keys in
/// nlohmann's sorted order.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace affmon
