#include "affmon/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace affmon {

namespace {

void check_same_nvars(int a, int b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": variable-count mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
}

void add_term_into(TermMap& acc, const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

TermMap add_maps(const TermMap& a, const TermMap& b, int sign_b) {
    TermMap r = a;
    for (const auto& [m, c] : b) add_term_into(r, m, sign_b < 0 ? -c : c);
    return r;
}

TermMap mul_maps(const TermMap& a, const TermMap& b, int nvars) {
    TermMap r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m(nvars);
            for (int i = 0; i < nvars; ++i) m[i] = ma[i] + mb[i];
            add_term_into(r, m, ca * cb);
        }
    }
    return r;
}

TermMap drop_zeros(TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    return terms;
}

void check_term_arity(const TermMap& terms, int nvars) {
    for (const auto& [m, c] : terms) {
        (void)c;
        if (m.nvars() != nvars)
            throw std::invalid_argument("polynomial term arity does not match variable count");
    }
}

}  // namespace

bool Monomial::all_nonnegative() const {
    for (int e : exps)
        if (e < 0) return false;
    return true;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars);
    m[index] = 1;
    return term(nvars, std::move(m), Rational(1));
}

LaurentPoly LaurentPoly::term(int nvars, Monomial m, const Rational& c) {
    if (m.nvars() != nvars) throw std::invalid_argument("monomial arity mismatch");
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(int nvars, TermMap terms) {
    check_term_arity(terms, nvars);
    LaurentPoly p(nvars);
    p.terms_ = drop_zeros(std::move(terms));
    return p;
}

int LaurentPoly::min_exponent(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [mon, c] : terms_) {
        (void)c;
        if (first || mon[var] < m) m = mon[var];
        first = false;
    }
    return m;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_nvars(a.nvars_, b.nvars_, "laurent add");
    return LaurentPoly::from_terms(a.nvars_, add_maps(a.terms_, b.terms_, +1));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_nvars(a.nvars_, b.nvars_, "laurent sub");
    return LaurentPoly::from_terms(a.nvars_, add_maps(a.terms_, b.terms_, -1));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_nvars(a.nvars_, b.nvars_, "laurent mul");
    return LaurentPoly::from_terms(a.nvars_, mul_maps(a.terms_, b.terms_, a.nvars_));
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) {
        if (!is_single_term())
            throw std::invalid_argument("negative power of a non-monomial Laurent polynomial");
        const auto& [m, c] = *terms_.begin();
        Monomial inv(nvars_);
        for (int i = 0; i < nvars_; ++i) inv[i] = -m[i];
        return term(nvars_, std::move(inv), c.inverse()).pow(-k);
    }
    LaurentPoly acc = constant(nvars_, Rational(1));
    LaurentPoly base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

LaurentPoly LaurentPoly::subst(const std::vector<LaurentPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("subst: image count does not match variable count");
    int target = images.empty() ? 0 : images.front().nvars();
    for (const auto& im : images) check_same_nvars(im.nvars(), target, "subst images");

    // Per-variable power cache; association checks reuse the same exponents
    // many times.
    std::vector<std::map<int, LaurentPoly>> cache(images.size());
    auto power = [&](int var, int e) -> const LaurentPoly& {
        auto& slot = cache[static_cast<std::size_t>(var)];
        auto it = slot.find(e);
        if (it == slot.end())
            it = slot.emplace(e, images[static_cast<std::size_t>(var)].pow(e)).first;
        return it->second;
    };

    LaurentPoly acc(target);
    for (const auto& [m, c] : terms_) {
        LaurentPoly prod = LaurentPoly::constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] != 0) prod = prod * power(i, m[i]);
        acc += prod;
    }
    return acc;
}

std::optional<Poly> LaurentPoly::to_poly() const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (!m.all_nonnegative()) return std::nullopt;
    }
    return Poly::from_terms(nvars_, terms_);
}

LaurentPoly LaurentPoly::remap(int new_nvars, const std::vector<int>& positions) const {
    if (static_cast<int>(positions.size()) != nvars_)
        throw std::invalid_argument("remap: position count does not match variable count");
    std::vector<bool> used(static_cast<std::size_t>(new_nvars), false);
    for (int p : positions) {
        if (p < 0 || p >= new_nvars) throw std::invalid_argument("remap: position out of range");
        if (used[static_cast<std::size_t>(p)])
            throw std::invalid_argument("remap: positions must be injective");
        used[static_cast<std::size_t>(p)] = true;
    }
    TermMap out;
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_nvars);
        for (int i = 0; i < nvars_; ++i) nm[positions[static_cast<std::size_t>(i)]] = m[i];
        out.emplace(std::move(nm), c);
    }
    return from_terms(new_nvars, std::move(out));
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m(nvars);
    m[index] = 1;
    return term(nvars, std::move(m), Rational(1));
}

Poly Poly::term(int nvars, Monomial m, const Rational& c) {
    if (m.nvars() != nvars) throw std::invalid_argument("monomial arity mismatch");
    if (!m.all_nonnegative()) throw std::invalid_argument("Poly term with negative exponent");
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

Poly Poly::from_terms(int nvars, TermMap terms) {
    check_term_arity(terms, nvars);
    for (const auto& [m, c] : terms) {
        (void)c;
        if (!m.all_nonnegative()) throw std::invalid_argument("Poly term with negative exponent");
    }
    Poly p(nvars);
    p.terms_ = drop_zeros(std::move(terms));
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_) &&
           terms_.begin()->second.is_one();
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.total_degree() > d) d = m.total_degree();
    }
    return d;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same_nvars(a.nvars_, b.nvars_, "poly add");
    return Poly::from_terms(a.nvars_, add_maps(a.terms_, b.terms_, +1));
}

Poly operator-(const Poly& a, const Poly& b) {
    check_same_nvars(a.nvars_, b.nvars_, "poly sub");
    return Poly::from_terms(a.nvars_, add_maps(a.terms_, b.terms_, -1));
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_nvars(a.nvars_, b.nvars_, "poly mul");
    return Poly::from_terms(a.nvars_, mul_maps(a.terms_, b.terms_, a.nvars_));
}

Poly Poly::pow(unsigned long k) const {
    Poly acc = constant(nvars_, Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return acc;
}

LaurentPoly Poly::to_laurent() const { return LaurentPoly::from_terms(nvars_, terms_); }

LaurentPoly Poly::subst(const std::vector<LaurentPoly>& images) const {
    return to_laurent().subst(images);
}

Poly Poly::subst_poly(const std::vector<Poly>& images) const {
    std::vector<LaurentPoly> ims;
    ims.reserve(images.size());
    for (const Poly& p : images) ims.push_back(p.to_laurent());
    auto r = subst(ims).to_poly();
    if (!r) throw std::logic_error("subst_poly: polynomial images produced negative exponents");
    return *r;
}

std::optional<Poly> Poly::divexact(const Poly& d) const {
    check_same_nvars(nvars_, d.nvars_, "divexact");
    if (d.is_zero()) throw std::domain_error("divexact: division by zero polynomial");

    const auto& [dm, dc] = *d.terms_.rbegin();  // lex-leading term of the divisor
    TermMap rem = terms_;
    TermMap quo;
    while (!rem.empty()) {
        const auto& [rm, rc] = *rem.rbegin();
        Monomial t(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            t[i] = rm[i] - dm[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rational tc = rc / dc;
        // rem -= (tc * t) * d; the leading term cancels, every new term is
        // lex-smaller, so the loop terminates.
        for (const auto& [m2, c2] : d.terms_) {
            Monomial prod(nvars_);
            for (int i = 0; i < nvars_; ++i) prod[i] = t[i] + m2[i];
            add_term_into(rem, prod, -(tc * c2));
        }
        add_term_into(quo, t, tc);
    }
    return Poly::from_terms(nvars_, std::move(quo));
}

Poly Poly::remap(int new_nvars, const std::vector<int>& positions) const {
    auto r = to_laurent().remap(new_nvars, positions).to_poly();
    return *r;  // nonnegative exponents are preserved by remapping
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
        throw std::invalid_argument("str: name count does not match variable count");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = m.total_degree() != 0 || !m.all_nonnegative();
        bool printed_coeff = false;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            printed_coeff = true;
        }
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (printed_coeff || !first_var) os << "*";
            os << names[static_cast<std::size_t>(i)];
            if (m[i] != 1) os << "^" << m[i];
            first_var = false;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("PolyMatrix: nonpositive shape");
    if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw std::invalid_argument("PolyMatrix: entry count does not match shape");
    for (const Poly& p : entries_)
        check_same_nvars(p.nvars(), entries_.front().nvars(), "PolyMatrix entries");
}

int PolyMatrix::nvars() const { return entries_.front().nvars(); }

const Poly& PolyMatrix::at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
}

Poly& PolyMatrix::at(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(c)];
}

Poly polymat_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("polymat_det: matrix is not square");
    const int n = m.rows();
    const int nv = m.nvars();
    PolyMatrix a = m;
    int sign = 1;
    Poly prev = Poly::constant(nv, Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!a.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Poly(nv);
        if (pivot != k) {
            for (int c = k; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto q = num.divexact(prev);
                if (!q) throw std::logic_error("polymat_det: Bareiss division failed");
                a.at(i, j) = std::move(*q);
            }
            a.at(i, k) = Poly(nv);
        }
        prev = a.at(k, k);
    }
    Poly det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

std::vector<std::string> var_names(int n, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

std::vector<std::string> xy_names(int n) {
    std::vector<std::string> names = var_names(n, "x");
    auto ys = var_names(n, "y");
    names.insert(names.end(), ys.begin(), ys.end());
    return names;
}

}  // namespace affmon
