#include "affmon/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace affmon {

namespace {

std::string quadratic_label(const FieldExtension& f) {
    // x^2 - d renders as Q(sqrt(d)); anything else falls back to the minpoly.
    const auto& c = f.minpoly_coeffs();
    if (f.degree() == 2 && c[1].is_zero()) return "Q(sqrt(" + (-c[0]).str() + "))";
    return f.minpoly_str();
}

std::string factor_label(const FieldExtension& f) {
    if (f.degree() == 1) return "M";
    return "M^" + std::to_string(f.degree()) + "(" + quadratic_label(f) + ")";
}

std::string rank0_label(int n) { return n == 1 ? "A" : std::to_string(n) + "A"; }

std::string corank0_label(const EtaleAlgebra& a) {
    std::string s;
    for (const auto& f : a.factors()) {
        if (!s.empty()) s += "+";
        s += factor_label(f);
    }
    return s;
}

std::string corank1_label(const CorankOneSpec& spec) {
    std::string s;
    for (const auto& a : spec.algebras)
        for (const auto& f : a.factors()) {
            if (!s.empty()) s += "+";
            s += factor_label(f);
        }
    s += "+A(";
    // One weight per coordinate block keeps two-parameter rows readable:
    // M+M+A(b=1,c=2) rather than a bare weight list.
    std::vector<int> per_block;
    for (std::size_t i = 0; i < spec.algebras.size(); ++i)
        for (std::size_t j = 0; j < spec.algebras[i].factors().size(); ++j)
            per_block.push_back(spec.weights[i]);
    static const char* names[] = {"b", "c", "e", "f"};
    if (per_block.size() == 1) {
        s += "c=" + std::to_string(per_block[0]);
    } else {
        for (std::size_t i = 0; i < per_block.size(); ++i) {
            if (i) s += ",";
            s += std::string(i < 4 ? names[i] : "w") + "=" + std::to_string(per_block[i]);
        }
    }
    s += ")";
    return s;
}

}  // namespace

CorankOneSpec CorankOneSpec::create(std::vector<EtaleAlgebra> algebras, std::vector<int> weights) {
    if (algebras.empty()) throw std::invalid_argument("corank-1 spec needs at least one algebra");
    if (algebras.size() != weights.size())
        throw std::invalid_argument("corank-1 spec needs one weight per algebra");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) throw std::invalid_argument("corank-1 weights must be nonnegative");
        if (i > 0 && weights[i - 1] >= weights[i])
            throw std::invalid_argument("corank-1 weights must be strictly increasing");
    }
    return CorankOneSpec{std::move(algebras), std::move(weights)};
}

QBCParams QBCParams::create(int b, int c) {
    if (b < 1) throw std::invalid_argument("Q_{b,c} requires b >= 1");
    if (c < b) throw std::invalid_argument("Q_{b,c} requires b <= c");
    QBCParams p;
    p.b = b;
    p.c = c;
    p.d = c / b;
    p.e = c % b;
    return p;
}

MonoidStructure build_rank0(int n) {
    if (n < 1) throw std::invalid_argument("build_rank0: n must be positive");
    std::vector<Poly> mult;
    mult.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        mult.push_back(Poly::variable(2 * n, i) + Poly::variable(2 * n, n + i));
    std::vector<Rational> unit(static_cast<std::size_t>(n));
    return MonoidStructure::create(n, std::move(mult), std::move(unit), 0, n, rank0_label(n));
}

MonoidStructure build_corank0(const EtaleAlgebra& a) {
    return MonoidStructure::create(a.dim(), a.multiplication(), a.unit(), a.dim(), 0,
                                   corank0_label(a));
}

MonoidStructure build_corank1(const CorankOneSpec& spec) {
    int n = 1;
    for (const auto& a : spec.algebras) n += a.dim();
    const int nv = 2 * n;

    std::vector<Poly> mult;
    mult.reserve(static_cast<std::size_t>(n));
    Poly norm_x = Poly::constant(nv, Rational(1));
    Poly norm_y = Poly::constant(nv, Rational(1));
    std::vector<Rational> unit;
    unit.reserve(static_cast<std::size_t>(n));

    int offset = 0;
    for (std::size_t k = 0; k < spec.algebras.size(); ++k) {
        const EtaleAlgebra& a = spec.algebras[k];
        const int d = a.dim();
        std::vector<int> x_block(static_cast<std::size_t>(d)), y_block(static_cast<std::size_t>(d));
        std::vector<int> xy_block(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < d; ++i) {
            x_block[static_cast<std::size_t>(i)] = offset + i;
            y_block[static_cast<std::size_t>(i)] = n + offset + i;
            xy_block[static_cast<std::size_t>(i)] = offset + i;
            xy_block[static_cast<std::size_t>(d + i)] = n + offset + i;
        }
        for (const Poly& p : a.multiplication()) mult.push_back(p.remap(nv, xy_block));
        const Poly norm = norm_form(a).poly;
        const auto w = static_cast<unsigned long>(spec.weights[k]);
        norm_x = norm_x * norm.remap(nv, x_block).pow(w);
        norm_y = norm_y * norm.remap(nv, y_block).pow(w);
        for (const Rational& u : a.unit()) unit.push_back(u);
        offset += d;
    }

    mult.push_back(norm_x * Poly::variable(nv, 2 * n - 1) + norm_y * Poly::variable(nv, n - 1));
    unit.push_back(Rational(0));
    return MonoidStructure::create(n, std::move(mult), std::move(unit), n - 1, 1,
                                   corank1_label(spec));
}

Poly q_poly(const QBCParams& p) {
    // Four variables x1,x2,y1,y2 — the 2n-variable convention at n = 2.
    const int nv = 4;
    const Poly x1 = Poly::variable(nv, 0), x2 = Poly::variable(nv, 1);
    const Poly y1 = Poly::variable(nv, 2), y2 = Poly::variable(nv, 3);
    const auto b = static_cast<unsigned long>(p.b);
    const auto d1 = static_cast<unsigned long>(p.d + 1);

    const Poly u = x1.pow(b) * y2;
    const Poly v = y1.pow(b) * x2;
    const Poly numerator = (u + v).pow(d1) - u.pow(d1) - v.pow(d1);
    const Poly divisor = x1.pow(static_cast<unsigned long>(p.b - p.e)) *
                         y1.pow(static_cast<unsigned long>(p.b - p.e));
    auto q = numerator.divexact(divisor);
    if (!q) throw std::logic_error("q_poly: defining numerator was not divisible");
    return *q;
}

MonoidStructure build_rank1_dim3_plain(int b, int c) {
    if (b < 0 || b > c) throw std::invalid_argument("rank-1 family requires 0 <= b <= c");
    const int nv = 6;
    const Poly x1 = Poly::variable(nv, 0), x2 = Poly::variable(nv, 1), x3 = Poly::variable(nv, 2);
    const Poly y1 = Poly::variable(nv, 3), y2 = Poly::variable(nv, 4), y3 = Poly::variable(nv, 5);
    std::vector<Poly> mult = {
        x1 * y1,
        x1.pow(static_cast<unsigned long>(b)) * y2 + y1.pow(static_cast<unsigned long>(b)) * x2,
        x1.pow(static_cast<unsigned long>(c)) * y3 + y1.pow(static_cast<unsigned long>(c)) * x3,
    };
    std::ostringstream label;
    label << "M+A+A(b=" << b << ",c=" << c << ")";
    return MonoidStructure::create(3, std::move(mult),
                                   {Rational(1), Rational(0), Rational(0)}, 1, 2, label.str());
}

MonoidStructure build_rank1_dim3_deformed(const QBCParams& p) {
    MonoidStructure m = build_rank1_dim3_plain(p.b, p.c);
    // Q_{b,c}(x1,y1,x2,y2) lives in (x1,x2 | y1,y2); embed into the
    // 6-variable space of the dimension-3 law.
    m.mult[2] = m.mult[2] + q_poly(p).remap(6, {0, 1, 3, 4});
    std::ostringstream label;
    label << "deformed M+A+A(b=" << p.b << ",c=" << p.c << ")";
    m.label = label.str();
    return m;
}

std::vector<MonoidStructure> enumerate_dim(int n, int bound,
                                           const std::vector<Rational>& quadratic_ds,
                                           const std::vector<FieldExtension>& cubics) {
    if (n < 1 || n > 3) throw std::invalid_argument("enumerate_dim: n must be 1, 2 or 3");
    if (bound < 0) throw std::invalid_argument("enumerate_dim: bound must be nonnegative");
    for (const auto& f : cubics)
        if (f.degree() != 3)
            throw std::invalid_argument("enumerate_dim: cubic list entries must have degree 3");

    std::vector<MonoidStructure> out;
    auto relabel = [](MonoidStructure m, const std::string& label) {
        m.label = label;
        return m;
    };

    if (n == 1) {
        out.push_back(build_rank0(1));                                    // A
        out.push_back(relabel(build_corank0(split_algebra(1)), "M"));     // M
        return out;
    }

    if (n == 2) {
        out.push_back(build_rank0(2));  // 2A
        for (int b = 0; b <= bound; ++b) {
            auto spec = CorankOneSpec::create({split_algebra(1)}, {b});
            out.push_back(relabel(build_corank1(spec), "M+A(b=" + std::to_string(b) + ")"));
        }
        out.push_back(relabel(build_corank0(split_algebra(2)), "M+M"));
        for (const Rational& d : quadratic_ds) {
            auto field = quadratic_field(d);
            out.push_back(relabel(build_corank0(EtaleAlgebra::create({field})),
                                  "M(" + quadratic_label(field) + ")"));
        }
        return out;
    }

    // n == 3, the eight rows of the dimension-3 table.
    out.push_back(build_rank0(3));  // 3A
    for (int b = 0; b <= bound; ++b)
        for (int c = b; c <= bound; ++c) out.push_back(build_rank1_dim3_plain(b, c));
    for (int b = 1; b <= bound; ++b)
        for (int c = b; c <= bound; ++c)
            out.push_back(build_rank1_dim3_deformed(QBCParams::create(b, c)));
    for (int b = 0; b <= bound; ++b) {
        for (int c = b; c <= bound; ++c) {
            // Equal weights merge into a single Q x Q block; the weight list
            // itself must stay strictly increasing.
            auto spec = b == c ? CorankOneSpec::create({split_algebra(2)}, {b})
                               : CorankOneSpec::create({split_algebra(1), split_algebra(1)}, {b, c});
            out.push_back(relabel(build_corank1(spec), "M+M+A(b=" + std::to_string(b) + ",c=" +
                                                           std::to_string(c) + ")"));
        }
    }
    for (const Rational& d : quadratic_ds) {
        auto field = quadratic_field(d);
        for (int c = 0; c <= bound; ++c) {
            auto spec = CorankOneSpec::create({EtaleAlgebra::create({field})}, {c});
            out.push_back(relabel(build_corank1(spec), "M^2(" + quadratic_label(field) + ")+A(c=" +
                                                           std::to_string(c) + ")"));
        }
    }
    out.push_back(relabel(build_corank0(split_algebra(3)), "M+M+M"));
    for (const Rational& d : quadratic_ds) {
        auto field = quadratic_field(d);
        out.push_back(relabel(build_corank0(EtaleAlgebra::create({field, rational_field()})),
                              "M^2(" + quadratic_label(field) + ")+M"));
    }
    for (const auto& cubic : cubics)
        out.push_back(relabel(build_corank0(EtaleAlgebra::create({cubic})),
                              "M^3(" + cubic.minpoly_str() + ")"));
    return out;
}

}  // namespace affmon
