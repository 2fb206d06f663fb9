#pragma once

#include "affmon/poly.hpp"
#include "affmon/rational.hpp"

#include <vector>

namespace affmon {

/// A field extension of Q presented by a monic minimal polynomial.
/// Irreducibility is verified for degree <= 3 (no rational roots); higher
/// degrees require the caller to vouch via assume_irreducible.
class FieldExtension {
public:
    /// coeffs low-to-high, monic (last coefficient 1), degree >= 1.
    static FieldExtension create(std::vector<Rational> coeffs, bool assume_irreducible = false);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& minpoly_coeffs() const { return coeffs_; }

    /// degree-many coordinates of the product of two generic elements in the
    /// power basis 1, a, a^2, ...; polynomials in 2*degree variables
    /// (x1..xd, y1..yd).
    std::vector<Poly> multiplication() const;

    /// Minimal polynomial rendered in the variable "a", e.g. "a^3 + a + 1".
    std::string minpoly_str() const;

    friend bool operator==(const FieldExtension&, const FieldExtension&) = default;

private:
    explicit FieldExtension(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<Rational> coeffs_;
};

/// Finite product of field extensions of Q with the fixed basis given by
/// concatenating the power bases of the factors.
class EtaleAlgebra {
public:
    static EtaleAlgebra create(std::vector<FieldExtension> factors);

    int dim() const { return dim_; }
    const std::vector<FieldExtension>& factors() const { return factors_; }

    /// dim-many coordinates of the product of two generic elements;
    /// polynomials in 2*dim variables, block-diagonal over the factors.
    std::vector<Poly> multiplication() const;

    /// (1, 0, ..., 0) per factor, concatenated.
    std::vector<Rational> unit() const;

    friend bool operator==(const EtaleAlgebra&, const EtaleAlgebra&) = default;

private:
    EtaleAlgebra(std::vector<FieldExtension> factors, int dim)
        : factors_(std::move(factors)), dim_(dim) {}
    std::vector<FieldExtension> factors_;
    int dim_;
};

/// The determinant of left multiplication by a generic element: a polynomial
/// in dim variables with N(x*y) = N(x)N(y) and N(unit) = 1.
struct NormForm {
    EtaleAlgebra algebra;
    Poly poly;
};

NormForm norm_form(const EtaleAlgebra& a);

/// Q(sqrt(d1)) and Q(sqrt(d2)) are isomorphic iff d1/d2 is a square.
/// Throws std::domain_error when either argument is zero or a square.
bool quadratic_iso(const Rational& d1, const Rational& d2);

/// Shorthand constructors for the extensions the catalog uses.
FieldExtension rational_field();                  // minpoly a
FieldExtension quadratic_field(const Rational& d);  // minpoly a^2 - d, d not a square
EtaleAlgebra split_algebra(int n);                // Q^n

}  // namespace affmon
