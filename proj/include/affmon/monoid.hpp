#pragma once

#include "affmon/poly.hpp"
#include "affmon/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affmon {

/// A commutative monoid structure on affine n-space: n multiplication
/// polynomials in the 2n variables x1..xn,y1..yn and a unit point. rank and
/// corank (dimension/codimension of the maximal torus in the unit group) are
/// constructor-provided metadata; rank + corank = dim when both are present.
struct MonoidStructure {
    int dim = 0;
    std::vector<Poly> mult;
    std::vector<Rational> unit;
    std::optional<int> rank;
    std::optional<int> corank;
    std::optional<std::string> label;

    /// Validates arity: dim coordinates, each in 2*dim variables, unit of
    /// length dim, rank + corank = dim when both are set.
    static MonoidStructure create(int dim, std::vector<Poly> mult, std::vector<Rational> unit,
                                  std::optional<int> rank = std::nullopt,
                                  std::optional<int> corank = std::nullopt,
                                  std::optional<std::string> label = std::nullopt);

    /// Multiplication table rendered one coordinate per line.
    std::string str() const;
};

struct AxiomReport {
    bool associative = false;
    bool commutative = false;
    bool unital = false;
    /// Nonzero difference polynomial for the first failed axiom (checked in
    /// the order associative, commutative, unital; first failing coordinate).
    std::optional<Poly> witness;

    bool all() const { return associative && commutative && unital; }
};

/// Checks the monoid axioms as exact polynomial identities: associativity in
/// 3n variables, commutativity and the (two-sided, via commutativity) unit
/// law in 2n variables.
AxiomReport verify_axioms(const MonoidStructure& m);

/// Coordinate-level identity of structures: equal dimensions, units, and
/// multiplication polynomials. This is not isomorphism; rank/corank/label
/// metadata is ignored.
bool monoid_equal(const MonoidStructure& a, const MonoidStructure& b);

}  // namespace affmon
