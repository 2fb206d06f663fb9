#pragma once

#include "affmon/catalog.hpp"
#include "affmon/poly.hpp"
#include "affmon/rational.hpp"

#include <vector>

namespace affmon {

/// Square integer matrix; as a torus automorphism it must lie in GL(n,Z)
/// (determinant +-1), in which case the inverse is again integral.
struct IntMatrix {
    int n = 0;
    std::vector<long long> entries;  // row-major

    static IntMatrix identity(int n);
    /// at(sigma[i], i) = 1: sends basis vector e_i to e_{sigma(i)}.
    static IntMatrix permutation(const std::vector<int>& sigma);

    long long at(int r, int c) const { return entries[static_cast<std::size_t>(r) * n + c]; }
    long long& at(int r, int c) { return entries[static_cast<std::size_t>(r) * n + c]; }

    long long det() const;
    IntMatrix mul(const IntMatrix& o) const;
    /// Adjugate divided by det; only valid for det = +-1.
    std::optional<IntMatrix> inverse_unimodular() const;
    bool nonnegative() const;
    bool is_permutation() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
};

/// Automorphism of the unit group G_m^r x G_a^s of a split monoid: a
/// GL(r,Z) monomial action on the torus block and an invertible s x s
/// rational matrix on the additive block. There are no homomorphisms between
/// G_a and G_m, so no mixing blocks exist.
struct UnitGroupAut {
    IntMatrix torus;                              // r x r, det +-1
    std::vector<std::vector<Rational>> additive;  // s x s, invertible

    static UnitGroupAut create(IntMatrix torus, std::vector<std::vector<Rational>> additive);
    int torus_rank() const { return torus.n; }
    int additive_rank() const { return static_cast<int>(additive.size()); }
};

/// Unit-group chart of one of the named families: the open embedding
/// i : G_m^r x G_a^s -> A^n and its inverse as Laurent maps, with
/// i_inv o i = id. Chart variables are ordered torus block then additive
/// block.
struct EmbeddingData {
    enum class Family { Rank1Dim3Plain, Rank1Dim3Deformed, CorankOne };

    Family family;
    int torus_rank = 0;
    int additive_rank = 0;
    std::vector<Poly> fwd;        // n coordinates in torus_rank + additive_rank variables
    std::vector<LaurentPoly> inv;  // torus_rank + additive_rank coordinates in n variables

    int ambient_dim() const { return torus_rank + additive_rank; }

    /// i(t,v1,v2) = (t, t^b v1, t^c v2), 0 <= b <= c.
    static EmbeddingData rank1_dim3_plain(int b, int c);
    /// i(t,v1,v2) = (t, t^b v1, t^c (v2 + v1^{d+1})).
    static EmbeddingData rank1_dim3_deformed(const QBCParams& p);
    /// i(t1..t_{n-1}, v) = (t1, ..., t_{n-1}, t1^{b1}..t^{b}v).
    static EmbeddingData corank1(const std::vector<int>& b_vector);
};

/// The birational map i o g o i^{-1} on the ambient affine space, one Laurent
/// polynomial per coordinate.
std::vector<LaurentPoly> induced_map(const EmbeddingData& e, const UnitGroupAut& g);

/// True iff every exponent of every coordinate is nonnegative, i.e. the
/// Laurent map extends to a regular map on affine space.
bool is_regular(const std::vector<LaurentPoly>& map);

/// Closed-form regularity criteria from the classification proofs. sigma is a
/// 0-based permutation (images), z any nonzero scalar (no constraint).
bool corank1_regularity(const std::vector<int>& b_vector, const std::vector<int>& sigma);
/// b = c: always regular; b < c: regular iff beta = 0.
bool plain_regularity(int b, int c, const std::vector<std::vector<Rational>>& g2x2);
/// Regular iff beta = 0 and delta = alpha^{d+1}.
bool deformed_regularity(const QBCParams& p, const std::vector<std::vector<Rational>>& g2x2);

/// All integer matrices with entries in [0, bound], determinant +-1, and an
/// entrywise-nonnegative inverse — precisely the permutation matrices.
/// Deterministic (row-major lexicographic) order.
std::vector<IntMatrix> doubly_nonneg_glnz(int n, long long bound);

}  // namespace affmon
