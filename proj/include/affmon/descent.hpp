#pragma once

#include "affmon/monoid.hpp"
#include "affmon/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace affmon {

/// Twisting produced a coefficient with a nonzero sqrt(d)-part, i.e. the
/// splitting data is not a valid cocycle for the structure being twisted.
class RationalityFailure : public std::runtime_error {
public:
    explicit RationalityFailure(const std::string& what) : std::runtime_error(what) {}
};

/// The quadratic extension Q(sqrt(d)), d nonzero and not a square.
struct QuadExt {
    Rational d;

    static QuadExt create(const Rational& d);
};

/// a + b*sqrt(d) relative to an ambient QuadExt.
struct QuadElement {
    Rational a;
    Rational b;

    bool is_rational() const { return b.is_zero(); }
    friend bool operator==(const QuadElement&, const QuadElement&) = default;
};

/// Square matrix over Q(sqrt(d)) with exact arithmetic; carries its own
/// extension so entry products can resolve sqrt(d)^2 = d.
class QuadMatrix {
public:
    QuadMatrix(QuadExt ext, int n);  // zero matrix
    static QuadMatrix identity(QuadExt ext, int n);

    int size() const { return n_; }
    const QuadExt& ext() const { return ext_; }
    const QuadElement& at(int r, int c) const;
    QuadElement& at(int r, int c);

    QuadMatrix operator*(const QuadMatrix& o) const;
    std::vector<QuadElement> apply(const std::vector<Rational>& v) const;

    /// Entrywise Galois conjugation a + b*sqrt(d) -> a - b*sqrt(d).
    QuadMatrix conjugate() const;

    /// Gauss-Jordan over the field Q(sqrt(d)); nullopt for singular input.
    std::optional<QuadMatrix> inverse() const;

    friend bool operator==(const QuadMatrix& x, const QuadMatrix& y) {
        return x.n_ == y.n_ && x.ext_.d == y.ext_.d && x.e_ == y.e_;
    }

private:
    QuadExt ext_;
    int n_;
    std::vector<QuadElement> e_;
};

QuadElement qadd(const QuadElement& u, const QuadElement& v);
QuadElement qsub(const QuadElement& u, const QuadElement& v);
QuadElement qmul(const QuadExt& ext, const QuadElement& u, const QuadElement& v);
QuadElement qconj(const QuadElement& u);
/// a^2 - d b^2; zero only for the zero element since d is not a square.
Rational qnorm(const QuadExt& ext, const QuadElement& u);
QuadElement qinv(const QuadExt& ext, const QuadElement& u);

/// Base-change matrix P over K(sqrt(d)) together with the image f(sigma) of
/// the nontrivial Galois element under the attached cocycle.
///
/// Conventions (column vectors): the twisted multiplication is
///   m'(x,y) = P^{-1} m(Px, Py),
/// and descent compatibility reads sigma(P) = f(sigma) o P with sigma acting
/// entrywise. The order-2 cocycle condition is f(sigma) * sigma(f(sigma)) = id.
struct SplittingMatrix {
    QuadMatrix p;
    QuadMatrix cocycle_image;

    SplittingMatrix(QuadMatrix p_, QuadMatrix f_) : p(std::move(p_)), cocycle_image(std::move(f_)) {
        if (p.size() != cocycle_image.size() || !(p.ext().d == cocycle_image.ext().d))
            throw std::invalid_argument("splitting matrix and cocycle image must match");
    }
};

/// Serializable description of the standard coordinate-swap splittings:
/// dimension, d, and the list of swapped coordinate pairs (0-based here;
/// 1-based in JSON).
struct SplittingData {
    Rational d;
    int dim = 0;
    std::vector<std::pair<int, int>> pairs;
};

/// Block-diagonal P with [[1, sqrt(d)], [1, -sqrt(d)]] on each swapped pair
/// and 1 elsewhere; f(sigma) is the corresponding transposition permutation
/// matrix. check_cocycle holds by construction.
SplittingMatrix standard_splitting(const QuadExt& ext, int dim,
                                   const std::vector<std::pair<int, int>>& pairs);
SplittingMatrix standard_splitting(const SplittingData& data);

/// f(sigma) * sigma(f(sigma)) = id and sigma(P) = f(sigma) o P.
bool check_cocycle(const SplittingMatrix& s);

/// Galois twist of a split structure: computes P^{-1} m(Px, Py) over
/// K(sqrt(d)), checks every coefficient and the transformed unit are
/// rational, and returns the K-form with rank/corank copied from the input.
/// Throws RationalityFailure otherwise; singular P throws
/// std::invalid_argument.
MonoidStructure twist(const MonoidStructure& split, const SplittingMatrix& s);

}  // namespace affmon
