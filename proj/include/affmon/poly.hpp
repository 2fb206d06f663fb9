#pragma once

#include "affmon/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affmon {

/// Exponent vector of a single term. Its length is the variable count of the
/// containing polynomial; comparison is lexicographic.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int nvars() const { return static_cast<int>(exps.size()); }
    int operator[](int i) const { return exps[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return exps[static_cast<std::size_t>(i)]; }

    bool all_nonnegative() const;
    int total_degree() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps <=> b.exps; }
};

using TermMap = std::map<Monomial, Rational>;

class Poly;

/// Sparse Laurent polynomial over Q: integer exponents of either sign.
/// Terms are kept in ascending lexicographic order with no zero coefficients.
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars);
    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly variable(int nvars, int index);
    static LaurentPoly term(int nvars, Monomial m, const Rational& c);
    static LaurentPoly from_terms(int nvars, TermMap terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Exactly one stored term.
    bool is_single_term() const { return terms_.size() == 1; }
    int min_exponent(int var) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }

    /// a^k. Negative k requires a single-term operand (the units of the
    /// Laurent ring); throws std::invalid_argument otherwise.
    LaurentPoly pow(long k) const;

    /// Simultaneous substitution of every variable. images[i] replaces
    /// variable i; all images must share one variable count. A variable
    /// occurring with a negative exponent needs a single-term image.
    LaurentPoly subst(const std::vector<LaurentPoly>& images) const;

    /// Succeeds iff every exponent is nonnegative.
    std::optional<Poly> to_poly() const;

    /// Moves variable i of this polynomial to slot positions[i] of a
    /// new_nvars-variable polynomial. positions must be injective.
    LaurentPoly remap(int new_nvars, const std::vector<int>& positions) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    int nvars_;
    TermMap terms_;
};

/// Sparse multivariate polynomial over Q (all exponents >= 0), the canonical
/// carrier for multiplication formulas and norm forms. Same term invariants
/// as LaurentPoly.
class Poly {
public:
    explicit Poly(int nvars);
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index);
    static Poly term(int nvars, Monomial m, const Rational& c);
    static Poly from_terms(int nvars, TermMap terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Repeated squaring; a^0 = 1.
    Poly pow(unsigned long k) const;

    LaurentPoly to_laurent() const;
    LaurentPoly subst(const std::vector<LaurentPoly>& images) const;
    /// Substitution with polynomial images; the result is again a Poly.
    Poly subst_poly(const std::vector<Poly>& images) const;

    /// Exact division: returns q with q*d == *this, or nullopt when no such
    /// polynomial exists. Division by the zero polynomial throws.
    std::optional<Poly> divexact(const Poly& d) const;

    Poly remap(int new_nvars, const std::vector<int>& positions) const;

    /// Human-readable rendering with the given variable names,
    /// highest term first; "0" for the zero polynomial.
    std::string str(const std::vector<std::string>& names) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    int nvars_;
    TermMap terms_;
};

/// Row-major matrix of polynomials sharing one variable count.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, std::vector<Poly> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const;
    const Poly& at(int r, int c) const;
    Poly& at(int r, int c);

private:
    int rows_, cols_;
    std::vector<Poly> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with column
/// pivoting. Throws std::invalid_argument for non-square input.
Poly polymat_det(const PolyMatrix& m);

/// Variable name vectors for the standard coordinate conventions.
std::vector<std::string> var_names(int n, const std::string& stem);
/// x1..xn,y1..yn — the 2n-variable space of a dimension-n multiplication law.
std::vector<std::string> xy_names(int n);

}  // namespace affmon
