#pragma once

#include "affmon/etale.hpp"
#include "affmon/monoid.hpp"

#include <vector>

namespace affmon {

/// Data of a corank-1 structure: separable algebras R_1..R_k of total
/// dimension n-1 together with strictly increasing weights 0 <= c_1 < ... < c_k.
struct CorankOneSpec {
    std::vector<EtaleAlgebra> algebras;
    std::vector<int> weights;

    static CorankOneSpec create(std::vector<EtaleAlgebra> algebras, std::vector<int> weights);
};

/// Exponent pair 0 < b <= c of the deformed rank-1 family, with the Euclidean
/// division c = b*d + e, 0 <= e < b, fixed at construction.
struct QBCParams {
    int b = 1;
    int c = 1;
    int d = 1;
    int e = 0;

    static QBCParams create(int b, int c);
};

/// (x+y) on A^n: rank 0, corank n, unit 0.
MonoidStructure build_rank0(int n);

/// Multiplicative monoid of a separable algebra: rank = dim, corank 0.
MonoidStructure build_corank0(const EtaleAlgebra& a);

/// Blockwise algebra multiplication on the first n-1 coordinates; the last
/// coordinate is N(x_1)^{c_1}..N(x_k)^{c_k} y + N(y_1)^{c_1}..N(y_k)^{c_k} x.
MonoidStructure build_corank1(const CorankOneSpec& spec);

/// The integer-coefficient polynomial
///   ((x1^b y2 + y1^b x2)^{d+1} - (x1^b y2)^{d+1} - (y1^b x2)^{d+1})
///     / (x1^{b-e} y1^{b-e})
/// in the four variables x1,x2,y1,y2. The quotient is exact by construction;
/// a division failure is an internal error and throws std::logic_error.
Poly q_poly(const QBCParams& p);

/// (x1y1, x1^b y2 + y1^b x2, x1^c y3 + y1^c x3) with 0 <= b <= c.
MonoidStructure build_rank1_dim3_plain(int b, int c);

/// Third coordinate additionally carries Q_{b,c}(x1,y1,x2,y2); needs b >= 1.
MonoidStructure build_rank1_dim3_deformed(const QBCParams& p);

/// Every structure of the dimension-1/2/3 classification with parameters
/// b, c <= bound, quadratic extensions Q(sqrt(d)) for each listed d, and the
/// listed cubic extensions. Deterministic order: table rows, then
/// lexicographic parameters. Every entry carries a label and passes
/// verify_axioms.
std::vector<MonoidStructure> enumerate_dim(int n, int bound,
                                           const std::vector<Rational>& quadratic_ds,
                                           const std::vector<FieldExtension>& cubics);

}  // namespace affmon
