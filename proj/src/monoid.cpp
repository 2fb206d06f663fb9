#include "affmon/monoid.hpp"

#include <sstream>
#include <stdexcept>

namespace affmon {

MonoidStructure MonoidStructure::create(int dim, std::vector<Poly> mult,
                                        std::vector<Rational> unit, std::optional<int> rank,
                                        std::optional<int> corank,
                                        std::optional<std::string> label) {
    if (dim < 1) throw std::invalid_argument("monoid dimension must be positive");
    if (static_cast<int>(mult.size()) != dim)
        throw std::invalid_argument("monoid needs exactly dim multiplication polynomials");
    for (const Poly& p : mult)
        if (p.nvars() != 2 * dim)
            throw std::invalid_argument("multiplication polynomials must have 2*dim variables");
    if (static_cast<int>(unit.size()) != dim)
        throw std::invalid_argument("unit point must have dim coordinates");
    if (rank && (*rank < 0 || *rank > dim)) throw std::invalid_argument("rank out of range");
    if (corank && (*corank < 0 || *corank > dim)) throw std::invalid_argument("corank out of range");
    if (rank && corank && *rank + *corank != dim)
        throw std::invalid_argument("rank + corank must equal dim");
    MonoidStructure m;
    m.dim = dim;
    m.mult = std::move(mult);
    m.unit = std::move(unit);
    m.rank = rank;
    m.corank = corank;
    m.label = std::move(label);
    return m;
}

std::string MonoidStructure::str() const {
    std::ostringstream os;
    if (label) os << *label << "\n";
    auto names = xy_names(dim);
    os << "(";
    for (int i = 0; i < dim; ++i) os << (i ? "," : "") << "x" << i + 1;
    os << ")*(";
    for (int i = 0; i < dim; ++i) os << (i ? "," : "") << "y" << i + 1;
    os << ") =\n";
    for (int i = 0; i < dim; ++i)
        os << "  " << mult[static_cast<std::size_t>(i)].str(names) << "\n";
    os << "unit = (";
    for (int i = 0; i < dim; ++i) os << (i ? ", " : "") << unit[static_cast<std::size_t>(i)].str();
    os << ")";
    if (rank) os << ", rank " << *rank;
    if (corank) os << ", corank " << *corank;
    return os.str();
}

namespace {

// Identity images embedding the 2n-variable multiplication into 3n variables
// at the given blocks: block 0 = x, 1 = y, 2 = z.
std::vector<LaurentPoly> block_vars(int n, int first_block, int second_block) {
    std::vector<LaurentPoly> images;
    images.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::variable(3 * n, first_block * n + i));
    for (int i = 0; i < n; ++i) images.push_back(LaurentPoly::variable(3 * n, second_block * n + i));
    return images;
}

}  // namespace

AxiomReport verify_axioms(const MonoidStructure& m) {
    const int n = m.dim;
    for (const Poly& p : m.mult)
        if (p.nvars() != 2 * n)
            throw std::invalid_argument("verify_axioms: multiplication arity mismatch");

    AxiomReport report;
    report.associative = true;
    report.commutative = true;
    report.unital = true;

    // Associativity: m(m(x,y),z) = m(x,m(y,z)) in 3n variables.
    std::vector<LaurentPoly> inner_xy, inner_yz;
    inner_xy.reserve(static_cast<std::size_t>(n));
    inner_yz.reserve(static_cast<std::size_t>(n));
    {
        auto xy = block_vars(n, 0, 1);
        auto yz = block_vars(n, 1, 2);
        for (const Poly& p : m.mult) {
            inner_xy.push_back(p.subst(xy));
            inner_yz.push_back(p.subst(yz));
        }
    }
    std::vector<LaurentPoly> left_images = inner_xy;
    for (int k = 0; k < n; ++k) left_images.push_back(LaurentPoly::variable(3 * n, 2 * n + k));
    std::vector<LaurentPoly> right_images;
    right_images.reserve(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) right_images.push_back(LaurentPoly::variable(3 * n, k));
    for (const auto& q : inner_yz) right_images.push_back(q);
    for (int i = 0; i < n; ++i) {
        const Poly& p = m.mult[static_cast<std::size_t>(i)];
        LaurentPoly diff = p.subst(left_images) - p.subst(right_images);
        if (!diff.is_zero()) {
            report.associative = false;
            if (!report.witness) report.witness = *diff.to_poly();
            break;
        }
    }

    // Commutativity: m(x,y) = m(y,x).
    std::vector<LaurentPoly> swapped;
    swapped.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) swapped.push_back(LaurentPoly::variable(2 * n, n + i));
    for (int i = 0; i < n; ++i) swapped.push_back(LaurentPoly::variable(2 * n, i));
    for (int i = 0; i < n; ++i) {
        const Poly& p = m.mult[static_cast<std::size_t>(i)];
        LaurentPoly diff = p.to_laurent() - p.subst(swapped);
        if (!diff.is_zero()) {
            report.commutative = false;
            if (!report.witness) report.witness = *diff.to_poly();
            break;
        }
    }

    // Unit: m(e,y) = y coordinatewise. The y block keeps 2n variables so the
    // witness stays in the multiplication's variable space.
    std::vector<LaurentPoly> unit_images;
    unit_images.reserve(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i)
        unit_images.push_back(LaurentPoly::constant(2 * n, m.unit[static_cast<std::size_t>(i)]));
    for (int i = 0; i < n; ++i) unit_images.push_back(LaurentPoly::variable(2 * n, n + i));
    for (int i = 0; i < n; ++i) {
        const Poly& p = m.mult[static_cast<std::size_t>(i)];
        LaurentPoly diff = p.subst(unit_images) - LaurentPoly::variable(2 * n, n + i);
        if (!diff.is_zero()) {
            report.unital = false;
            if (!report.witness) report.witness = *diff.to_poly();
            break;
        }
    }

    return report;
}

bool monoid_equal(const MonoidStructure& a, const MonoidStructure& b) {
    return a.dim == b.dim && a.unit == b.unit && a.mult == b.mult;
}

}  // namespace affmon
