#include "affmon/descent.hpp"

#include <sstream>
#include <stdexcept>

namespace affmon {

QuadExt QuadExt::create(const Rational& d) {
    if (d.is_zero()) throw std::invalid_argument("QuadExt: d must be nonzero");
    if (d.is_square()) throw std::invalid_argument("QuadExt: d must not be a square");
    return QuadExt{d};
}

QuadElement qadd(const QuadElement& u, const QuadElement& v) { return {u.a + v.a, u.b + v.b}; }
QuadElement qsub(const QuadElement& u, const QuadElement& v) { return {u.a - v.a, u.b - v.b}; }

QuadElement qmul(const QuadExt& ext, const QuadElement& u, const QuadElement& v) {
    return {u.a * v.a + ext.d * u.b * v.b, u.a * v.b + u.b * v.a};
}

QuadElement qconj(const QuadElement& u) { return {u.a, -u.b}; }

Rational qnorm(const QuadExt& ext, const QuadElement& u) { return u.a * u.a - ext.d * u.b * u.b; }

QuadElement qinv(const QuadExt& ext, const QuadElement& u) {
    Rational n = qnorm(ext, u);
    if (n.is_zero()) throw std::domain_error("QuadElement: inverse of zero");
    return {u.a / n, -u.b / n};
}

QuadMatrix::QuadMatrix(QuadExt ext, int n) : ext_(std::move(ext)), n_(n) {
    if (n < 1) throw std::invalid_argument("QuadMatrix: size must be positive");
    e_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

QuadMatrix QuadMatrix::identity(QuadExt ext, int n) {
    QuadMatrix m(std::move(ext), n);
    for (int i = 0; i < n; ++i) m.at(i, i) = {Rational(1), Rational(0)};
    return m;
}

const QuadElement& QuadMatrix::at(int r, int c) const {
    return e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(c)];
}

QuadElement& QuadMatrix::at(int r, int c) {
    return e_[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(c)];
}

QuadMatrix QuadMatrix::operator*(const QuadMatrix& o) const {
    if (n_ != o.n_ || !(ext_.d == o.ext_.d))
        throw std::invalid_argument("QuadMatrix: shape or extension mismatch");
    QuadMatrix r(ext_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            QuadElement acc{Rational(0), Rational(0)};
            for (int k = 0; k < n_; ++k) acc = qadd(acc, qmul(ext_, at(i, k), o.at(k, j)));
            r.at(i, j) = acc;
        }
    return r;
}

std::vector<QuadElement> QuadMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("QuadMatrix: vector length mismatch");
    std::vector<QuadElement> r(static_cast<std::size_t>(n_), QuadElement{Rational(0), Rational(0)});
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            QuadElement scaled{at(i, j).a * v[static_cast<std::size_t>(j)],
                               at(i, j).b * v[static_cast<std::size_t>(j)]};
            r[static_cast<std::size_t>(i)] = qadd(r[static_cast<std::size_t>(i)], scaled);
        }
    return r;
}

QuadMatrix QuadMatrix::conjugate() const {
    QuadMatrix r(ext_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = qconj(at(i, j));
    return r;
}

std::optional<QuadMatrix> QuadMatrix::inverse() const {
    QuadMatrix a = *this;
    QuadMatrix inv = identity(ext_, n_);
    const QuadElement zero{Rational(0), Rational(0)};
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (!(a.at(r, col) == zero)) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int c = 0; c < n_; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        QuadElement scale = qinv(ext_, a.at(col, col));
        for (int c = 0; c < n_; ++c) {
            a.at(col, c) = qmul(ext_, a.at(col, c), scale);
            inv.at(col, c) = qmul(ext_, inv.at(col, c), scale);
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || a.at(r, col) == zero) continue;
            QuadElement factor = a.at(r, col);
            for (int c = 0; c < n_; ++c) {
                a.at(r, c) = qsub(a.at(r, c), qmul(ext_, factor, a.at(col, c)));
                inv.at(r, c) = qsub(inv.at(r, c), qmul(ext_, factor, inv.at(col, c)));
            }
        }
    }
    return inv;
}

SplittingMatrix standard_splitting(const QuadExt& ext, int dim,
                                   const std::vector<std::pair<int, int>>& pairs) {
    QuadMatrix p = QuadMatrix::identity(ext, dim);
    QuadMatrix f = QuadMatrix::identity(ext, dim);
    std::vector<bool> used(static_cast<std::size_t>(dim), false);
    const QuadElement one{Rational(1), Rational(0)};
    const QuadElement zero{Rational(0), Rational(0)};
    const QuadElement root{Rational(0), Rational(1)};
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= dim || j >= dim || i == j)
            throw std::invalid_argument("standard_splitting: bad coordinate pair");
        if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)])
            throw std::invalid_argument("standard_splitting: overlapping coordinate pairs");
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
        p.at(i, i) = one;
        p.at(i, j) = root;
        p.at(j, i) = one;
        p.at(j, j) = QuadElement{Rational(0), Rational(-1)};
        f.at(i, i) = zero;
        f.at(j, j) = zero;
        f.at(i, j) = one;
        f.at(j, i) = one;
    }
    return SplittingMatrix(std::move(p), std::move(f));
}

SplittingMatrix standard_splitting(const SplittingData& data) {
    return standard_splitting(QuadExt::create(data.d), data.dim, data.pairs);
}

bool check_cocycle(const SplittingMatrix& s) {
    const QuadMatrix& p = s.p;
    const QuadMatrix& f = s.cocycle_image;
    QuadMatrix id = QuadMatrix::identity(p.ext(), p.size());
    if (!(f * f.conjugate() == id)) return false;
    return p.conjugate() == f * p;
}

namespace {

// Polynomials over K(sqrt(d)) are encoded as rational polynomials in one
// extra variable s with the reduction s^2 = d applied after every product.
Poly reduce_root(const Poly& p, int s_index, const Rational& d) {
    TermMap out;
    for (const auto& [m, c] : p.terms()) {
        int es = m[s_index];
        Monomial nm = m;
        nm[s_index] = es % 2;
        Rational nc = c * d.pow(static_cast<unsigned long>(es / 2));
        auto it = out.find(nm);
        if (it == out.end())
            out.emplace(std::move(nm), nc);
        else {
            it->second += nc;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return Poly::from_terms(p.nvars(), std::move(out));
}

Poly element_poly(const QuadElement& q, int nvars, int s_index) {
    Poly p = Poly::constant(nvars, q.a);
    if (!q.b.is_zero()) {
        Monomial m(nvars);
        m[s_index] = 1;
        p = p + Poly::term(nvars, std::move(m), q.b);
    }
    return p;
}

}  // namespace

MonoidStructure twist(const MonoidStructure& split, const SplittingMatrix& s) {
    const int n = split.dim;
    if (s.p.size() != n) throw std::invalid_argument("twist: splitting dimension mismatch");
    auto p_inv = s.p.inverse();
    if (!p_inv) throw std::invalid_argument("twist: singular splitting matrix");
    const Rational d = s.p.ext().d;

    // 2n + 1 variables: the x and y blocks plus the root symbol s.
    const int nv = 2 * n + 1;
    const int s_index = 2 * n;

    std::vector<LaurentPoly> images;
    images.reserve(static_cast<std::size_t>(2 * n));
    for (int block = 0; block < 2; ++block) {
        for (int i = 0; i < n; ++i) {
            Poly coord(nv);
            for (int j = 0; j < n; ++j) {
                Poly entry = element_poly(s.p.at(i, j), nv, s_index);
                coord = coord + entry * Poly::variable(nv, block * n + j);
            }
            images.push_back(coord.to_laurent());
        }
    }

    std::vector<Poly> composed;
    composed.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        composed.push_back(
            reduce_root(*split.mult[static_cast<std::size_t>(k)].subst(images).to_poly(), s_index, d));

    std::vector<Poly> mult;
    mult.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Row i of P^{-1} applied to m(Px, Py).
        Poly acc(nv);
        for (int k = 0; k < n; ++k) {
            Poly entry = element_poly(p_inv->at(i, k), nv, s_index);
            acc = acc + entry * composed[static_cast<std::size_t>(k)];
        }
        acc = reduce_root(acc, s_index, d);
        for (const auto& [m, c] : acc.terms()) {
            (void)c;
            if (m[s_index] != 0) {
                std::ostringstream os;
                os << "twist: coordinate " << i + 1 << " has a nonzero sqrt(" << d.str()
                   << ")-part; splitting data is not a cocycle for this structure";
                throw RationalityFailure(os.str());
            }
        }
        // All s-exponents are zero; project back to the 2n-variable space.
        TermMap trimmed;
        for (const auto& [m, c] : acc.terms()) {
            Monomial nm(2 * n);
            for (int v = 0; v < 2 * n; ++v) nm[v] = m[v];
            trimmed.emplace(std::move(nm), c);
        }
        mult.push_back(Poly::from_terms(2 * n, std::move(trimmed)));
    }

    std::vector<Rational> unit;
    unit.reserve(static_cast<std::size_t>(n));
    for (const QuadElement& u : p_inv->apply(split.unit)) {
        if (!u.is_rational())
            throw RationalityFailure("twist: transformed unit has a nonzero sqrt(d)-part");
        unit.push_back(u.a);
    }

    return MonoidStructure::create(n, std::move(mult), std::move(unit), split.rank, split.corank,
                                   std::nullopt);
}

}  // namespace affmon
