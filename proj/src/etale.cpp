#include "affmon/etale.hpp"

#include <sstream>
#include <stdexcept>

namespace affmon {

namespace {

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& at) {
    Rational v;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * at + *it;
    return v;
}

std::vector<unsigned long> divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (!a.fits_ulong_p())
        throw std::invalid_argument(
            "minimal polynomial coefficients too large for the rational-root "
            "irreducibility check; construct with assume_irreducible");
    unsigned long m = a.get_ui();
    std::vector<unsigned long> ds;
    for (unsigned long i = 1; i * i <= m; ++i) {
        if (m % i != 0) continue;
        ds.push_back(i);
        if (i != m / i) ds.push_back(m / i);
    }
    return ds;
}

// Rational-root test for a monic polynomial over Q: clears denominators and
// enumerates candidate roots +-p/q with p | a0 and q | an.
bool has_rational_root(const std::vector<Rational>& coeffs) {
    if (coeffs.front().is_zero()) return true;
    mpz_class lcm_den = 1;
    for (const Rational& c : coeffs) {
        mpz_class d = c.den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class a0 = coeffs.front().num() * (lcm_den / coeffs.front().den());
    mpz_class an = coeffs.back().num() * (lcm_den / coeffs.back().den());
    for (unsigned long p : divisors(a0)) {
        for (unsigned long q : divisors(an)) {
            Rational cand =
                Rational::from_string(std::to_string(p) + "/" + std::to_string(q));
            if (evaluate(coeffs, cand).is_zero()) return true;
            if (evaluate(coeffs, -cand).is_zero()) return true;
        }
    }
    return false;
}

}  // namespace

FieldExtension FieldExtension::create(std::vector<Rational> coeffs, bool assume_irreducible) {
    if (coeffs.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
    if (!coeffs.back().is_one()) throw std::invalid_argument("minimal polynomial must be monic");
    int degree = static_cast<int>(coeffs.size()) - 1;
    if (degree > 3 && !assume_irreducible)
        throw std::invalid_argument(
            "irreducibility is only checked for degree <= 3; construct with assume_irreducible");
    // Degree 2 and 3 polynomials are irreducible over Q iff they have no
    // rational root.
    if (degree == 2 || degree == 3) {
        if (has_rational_root(coeffs))
            throw std::invalid_argument("minimal polynomial is reducible over Q");
    }
    return FieldExtension(std::move(coeffs));
}

std::vector<Poly> FieldExtension::multiplication() const {
    const int d = degree();
    const int nv = 2 * d;

    // alpha^k reduced modulo the minimal polynomial, k = 0 .. 2d-2.
    std::vector<std::vector<Rational>> pw;
    std::vector<Rational> e0(static_cast<std::size_t>(d));
    e0[0] = Rational(1);
    pw.push_back(e0);
    for (int k = 1; k <= 2 * d - 2; ++k) {
        const auto& prev = pw.back();
        std::vector<Rational> next(static_cast<std::size_t>(d));
        for (int j = d - 1; j >= 1; --j) next[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
        Rational overflow = prev[static_cast<std::size_t>(d - 1)];
        if (!overflow.is_zero())
            for (int j = 0; j < d; ++j)
                next[static_cast<std::size_t>(j)] -= overflow * coeffs_[static_cast<std::size_t>(j)];
        pw.push_back(std::move(next));
    }

    std::vector<TermMap> coords(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Monomial m(nv);
            m[i] += 1;
            m[d + j] += 1;
            const auto& rep = pw[static_cast<std::size_t>(i + j)];
            for (int r = 0; r < d; ++r) {
                const Rational& c = rep[static_cast<std::size_t>(r)];
                if (c.is_zero()) continue;
                auto& acc = coords[static_cast<std::size_t>(r)];
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, c);
                else {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
    }

    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(d));
    for (auto& t : coords) out.push_back(Poly::from_terms(nv, std::move(t)));
    return out;
}

std::string FieldExtension::minpoly_str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? "-" : "+");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "a";
            if (k > 1) os << "^" << k;
        }
    }
    return first ? "0" : os.str();
}

EtaleAlgebra EtaleAlgebra::create(std::vector<FieldExtension> factors) {
    if (factors.empty()) throw std::invalid_argument("etale algebra needs at least one factor");
    int dim = 0;
    for (const auto& f : factors) dim += f.degree();
    return EtaleAlgebra(std::move(factors), dim);
}

std::vector<Poly> EtaleAlgebra::multiplication() const {
    const int nv = 2 * dim_;
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(dim_));
    int offset = 0;
    for (const auto& f : factors_) {
        const int d = f.degree();
        std::vector<int> positions(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < d; ++i) {
            positions[static_cast<std::size_t>(i)] = offset + i;
            positions[static_cast<std::size_t>(d + i)] = dim_ + offset + i;
        }
        for (const Poly& p : f.multiplication()) out.push_back(p.remap(nv, positions));
        offset += d;
    }
    return out;
}

std::vector<Rational> EtaleAlgebra::unit() const {
    std::vector<Rational> u(static_cast<std::size_t>(dim_));
    int offset = 0;
    for (const auto& f : factors_) {
        u[static_cast<std::size_t>(offset)] = Rational(1);
        offset += f.degree();
    }
    return u;
}

NormForm norm_form(const EtaleAlgebra& a) {
    const int n = a.dim();
    const auto mult = a.multiplication();

    // Left multiplication by the generic element (x1..xn): column c of the
    // matrix is m(x, e_c), extracted by substituting the c-th basis vector
    // for the y block.
    std::vector<std::vector<Poly>> columns;
    columns.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        std::vector<LaurentPoly> images;
        images.reserve(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::variable(n, i));
        for (int j = 0; j < n; ++j)
            images.push_back(LaurentPoly::constant(n, Rational(j == c ? 1 : 0)));
        std::vector<Poly> column;
        column.reserve(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r)
            column.push_back(*mult[static_cast<std::size_t>(r)].subst(images).to_poly());
        columns.push_back(std::move(column));
    }
    std::vector<Poly> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            entries.push_back(columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
    return NormForm{a, polymat_det(PolyMatrix(n, n, std::move(entries)))};
}

bool quadratic_iso(const Rational& d1, const Rational& d2) {
    auto check = [](const Rational& d) {
        if (d.is_zero()) throw std::domain_error("quadratic_iso: d must be nonzero");
        if (d.is_square()) throw std::domain_error("quadratic_iso: d must not be a square");
    };
    check(d1);
    check(d2);
    return (d1 / d2).is_square();
}

FieldExtension rational_field() { return FieldExtension::create({Rational(0), Rational(1)}); }

FieldExtension quadratic_field(const Rational& d) {
    return FieldExtension::create({-d, Rational(0), Rational(1)});
}

EtaleAlgebra split_algebra(int n) {
    if (n < 1) throw std::invalid_argument("split_algebra: n must be positive");
    std::vector<FieldExtension> fs(static_cast<std::size_t>(n), rational_field());
    return EtaleAlgebra::create(std::move(fs));
}

}  // namespace affmon
