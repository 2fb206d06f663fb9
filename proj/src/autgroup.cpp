#include "affmon/autgroup.hpp"

#include <stdexcept>

namespace affmon {

namespace {

long long det_recursive(const IntMatrix& m, std::vector<int>& cols, int row) {
    if (static_cast<int>(cols.size()) == row) return 1;
    long long acc = 0;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (c >= 0) {
            long long entry = m.at(row, c);
            if (entry != 0) {
                cols[k] = -1;
                acc += sign * entry * det_recursive(m, cols, row + 1);
                cols[k] = c;
            }
            sign = -sign;
        }
    }
    return acc;
}

Rational rational_det(const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a = m;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
            det = -det;
        }
        Rational pv = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= pv;
        for (int r = col + 1; r < n; ++r) {
            Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pv;
            if (f.is_zero()) continue;
            for (int c = col; c < n; ++c)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    return det;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m{n, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::permutation(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation: not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    IntMatrix m{n, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m.at(sigma[static_cast<std::size_t>(i)], i) = 1;
    return m;
}

long long IntMatrix::det() const {
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
    return det_recursive(*this, cols, 0);
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r{n, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long acc = 0;
            for (int k = 0; k < n; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

std::optional<IntMatrix> IntMatrix::inverse_unimodular() const {
    long long dv = det();
    if (dv != 1 && dv != -1) return std::nullopt;
    // Adjugate over Z; dividing by det = +-1 keeps integrality.
    IntMatrix r{n, std::vector<long long>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // Minor with row j and column i removed, cofactor-signed.
            IntMatrix sub{n - 1, std::vector<long long>(static_cast<std::size_t>(n - 1) * (n - 1), 0)};
            int rr = 0;
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == j) continue;
                int cc = 0;
                for (int c2 = 0; c2 < n; ++c2) {
                    if (c2 == i) continue;
                    sub.at(rr, cc) = at(r2, c2);
                    ++cc;
                }
                ++rr;
            }
            long long minor = n == 1 ? 1 : sub.det();
            long long sign = ((i + j) % 2 == 0) ? 1 : -1;
            r.at(i, j) = sign * minor * dv;  // dv = 1/dv for +-1
        }
    }
    return r;
}

bool IntMatrix::nonnegative() const {
    for (long long v : entries)
        if (v < 0) return false;
    return true;
}

bool IntMatrix::is_permutation() const {
    for (int i = 0; i < n; ++i) {
        int row_ones = 0;
        for (int j = 0; j < n; ++j) {
            if (at(i, j) == 1)
                ++row_ones;
            else if (at(i, j) != 0)
                return false;
        }
        if (row_ones != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        int col_ones = 0;
        for (int i = 0; i < n; ++i) col_ones += at(i, j) == 1 ? 1 : 0;
        if (col_ones != 1) return false;
    }
    return true;
}

UnitGroupAut UnitGroupAut::create(IntMatrix torus, std::vector<std::vector<Rational>> additive) {
    long long td = torus.n == 0 ? 1 : torus.det();
    if (td != 1 && td != -1)
        throw std::invalid_argument("UnitGroupAut: torus part must be in GL(r,Z)");
    for (const auto& row : additive)
        if (row.size() != additive.size())
            throw std::invalid_argument("UnitGroupAut: additive part must be square");
    if (!additive.empty() && rational_det(additive).is_zero())
        throw std::invalid_argument("UnitGroupAut: additive part must be invertible");
    return UnitGroupAut{std::move(torus), std::move(additive)};
}

EmbeddingData EmbeddingData::rank1_dim3_plain(int b, int c) {
    if (b < 0 || b > c) throw std::invalid_argument("plain family requires 0 <= b <= c");
    EmbeddingData e;
    e.family = Family::Rank1Dim3Plain;
    e.torus_rank = 1;
    e.additive_rank = 2;
    // Chart variables (t, v1, v2); ambient (x1, x2, x3).
    const Poly t = Poly::variable(3, 0), v1 = Poly::variable(3, 1), v2 = Poly::variable(3, 2);
    e.fwd = {t, t.pow(static_cast<unsigned long>(b)) * v1,
             t.pow(static_cast<unsigned long>(c)) * v2};
    const LaurentPoly x1 = LaurentPoly::variable(3, 0);
    const LaurentPoly x2 = LaurentPoly::variable(3, 1);
    const LaurentPoly x3 = LaurentPoly::variable(3, 2);
    e.inv = {x1, x1.pow(-b) * x2, x1.pow(-c) * x3};
    return e;
}

EmbeddingData EmbeddingData::rank1_dim3_deformed(const QBCParams& p) {
    EmbeddingData e = rank1_dim3_plain(p.b, p.c);
    e.family = Family::Rank1Dim3Deformed;
    const Poly t = Poly::variable(3, 0), v1 = Poly::variable(3, 1), v2 = Poly::variable(3, 2);
    const auto d1 = static_cast<unsigned long>(p.d + 1);
    e.fwd[2] = t.pow(static_cast<unsigned long>(p.c)) * (v2 + v1.pow(d1));
    const LaurentPoly x1 = LaurentPoly::variable(3, 0);
    const LaurentPoly x2 = LaurentPoly::variable(3, 1);
    const LaurentPoly x3 = LaurentPoly::variable(3, 2);
    e.inv[2] = x1.pow(-p.c) * x3 - (x1.pow(-p.b) * x2).pow(static_cast<long>(d1));
    return e;
}

EmbeddingData EmbeddingData::corank1(const std::vector<int>& b_vector) {
    const int r = static_cast<int>(b_vector.size());
    if (r < 1) throw std::invalid_argument("corank-1 family needs at least one torus coordinate");
    for (int b : b_vector)
        if (b < 0) throw std::invalid_argument("corank-1 exponents must be nonnegative");
    const int n = r + 1;
    EmbeddingData e;
    e.family = Family::CorankOne;
    e.torus_rank = r;
    e.additive_rank = 1;
    e.fwd.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) e.fwd.push_back(Poly::variable(n, i));
    Poly last = Poly::variable(n, n - 1);
    for (int i = 0; i < r; ++i)
        last = last * Poly::variable(n, i).pow(static_cast<unsigned long>(b_vector[static_cast<std::size_t>(i)]));
    e.fwd.push_back(last);
    e.inv.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) e.inv.push_back(LaurentPoly::variable(n, i));
    LaurentPoly last_inv = LaurentPoly::variable(n, n - 1);
    for (int i = 0; i < r; ++i)
        last_inv = last_inv * LaurentPoly::variable(n, i).pow(-b_vector[static_cast<std::size_t>(i)]);
    e.inv.push_back(last_inv);
    return e;
}

std::vector<LaurentPoly> induced_map(const EmbeddingData& e, const UnitGroupAut& g) {
    if (g.torus_rank() != e.torus_rank || g.additive_rank() != e.additive_rank)
        throw std::invalid_argument("induced_map: automorphism shape does not match family");
    const int n = e.ambient_dim();
    const int r = e.torus_rank;
    const int s = e.additive_rank;

    // g applied to the chart coordinates of i^{-1}: monomial action on the
    // torus block, linear action on the additive block.
    std::vector<LaurentPoly> chart;
    chart.reserve(static_cast<std::size_t>(r + s));
    for (int j = 0; j < r; ++j) {
        LaurentPoly acc = LaurentPoly::constant(n, Rational(1));
        for (int i = 0; i < r; ++i) {
            long long a = g.torus.at(j, i);
            if (a != 0) acc = acc * e.inv[static_cast<std::size_t>(i)].pow(static_cast<long>(a));
        }
        chart.push_back(acc);
    }
    for (int j = 0; j < s; ++j) {
        LaurentPoly acc(n);
        for (int k = 0; k < s; ++k) {
            const Rational& coef = g.additive[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            if (coef.is_zero()) continue;
            acc = acc + LaurentPoly::constant(n, coef) * e.inv[static_cast<std::size_t>(r + k)];
        }
        chart.push_back(acc);
    }

    std::vector<LaurentPoly> out;
    out.reserve(static_cast<std::size_t>(n));
    for (const Poly& coord : e.fwd) out.push_back(coord.subst(chart));
    return out;
}

bool is_regular(const std::vector<LaurentPoly>& map) {
    for (const LaurentPoly& coord : map)
        for (const auto& [m, c] : coord.terms()) {
            (void)c;
            if (!m.all_nonnegative()) return false;
        }
    return true;
}

bool corank1_regularity(const std::vector<int>& b_vector, const std::vector<int>& sigma) {
    if (b_vector.size() != sigma.size())
        throw std::invalid_argument("corank1_regularity: length mismatch");
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (b_vector[static_cast<std::size_t>(sigma[i])] != b_vector[i]) return false;
    return true;
}

namespace {

void check_2x2(const std::vector<std::vector<Rational>>& g) {
    if (g.size() != 2 || g[0].size() != 2 || g[1].size() != 2)
        throw std::invalid_argument("regularity condition expects a 2x2 matrix");
}

}  // namespace

bool plain_regularity(int b, int c, const std::vector<std::vector<Rational>>& g2x2) {
    check_2x2(g2x2);
    if (b == c) return true;
    return g2x2[0][1].is_zero();
}

bool deformed_regularity(const QBCParams& p, const std::vector<std::vector<Rational>>& g2x2) {
    check_2x2(g2x2);
    return g2x2[0][1].is_zero() &&
           g2x2[1][1] == g2x2[0][0].pow(static_cast<unsigned long>(p.d + 1));
}

std::vector<IntMatrix> doubly_nonneg_glnz(int n, long long bound) {
    if (n < 1) throw std::invalid_argument("doubly_nonneg_glnz: n must be positive");
    if (bound < 1) throw std::invalid_argument("doubly_nonneg_glnz: bound must be positive");
    std::vector<IntMatrix> out;
    const int cells = n * n;
    std::vector<long long> entries(static_cast<std::size_t>(cells), 0);
    while (true) {
        IntMatrix m{n, entries};
        long long d = m.det();
        if (d == 1 || d == -1) {
            auto inv = m.inverse_unimodular();
            if (inv && inv->nonnegative()) out.push_back(m);
        }
        // Odometer over [0, bound]^{n*n}, row-major lexicographic.
        int pos = cells - 1;
        while (pos >= 0 && entries[static_cast<std::size_t>(pos)] == bound) {
            entries[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++entries[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace affmon
