#pragma once

#include "affmon/poly.hpp"

#include <random>

namespace affmon::testutil {

inline Poly make_poly(int nvars, std::initializer_list<std::pair<std::vector<int>, long>> terms) {
    Poly p(nvars);
    for (const auto& [exps, coeff] : terms)
        p = p + Poly::term(nvars, Monomial(exps), Rational(coeff));
    return p;
}

inline Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exponent(0, max_deg);
    std::uniform_int_distribution<long> numerator(-9, 9);
    std::uniform_int_distribution<long> denominator(1, 4);
    Poly p(nvars);
    const int k = term_count(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(nvars);
        for (int i = 0; i < nvars; ++i) m[i] = exponent(rng);
        p = p + Poly::term(nvars, std::move(m), Rational(numerator(rng), denominator(rng)));
    }
    return p;
}

/// Naive Laplace expansion along the first row; the independent route the
/// Bareiss implementation is checked against.
inline Poly cofactor_det(const PolyMatrix& m) {
    const int n = m.rows();
    const int nv = m.nvars();
    if (n == 1) return m.at(0, 0);
    Poly acc(nv);
    for (int c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        std::vector<Poly> sub;
        sub.reserve(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1));
        for (int r = 1; r < n; ++r)
            for (int c2 = 0; c2 < n; ++c2)
                if (c2 != c) sub.push_back(m.at(r, c2));
        Poly minor = cofactor_det(PolyMatrix(n - 1, n - 1, std::move(sub)));
        Poly contrib = m.at(0, c) * minor;
        acc = c % 2 == 0 ? acc + contrib : acc - contrib;
    }
    return acc;
}

}  // namespace affmon::testutil
