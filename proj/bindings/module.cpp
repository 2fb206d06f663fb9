#include "affmon/autgroup.hpp"
#include "affmon/catalog.hpp"
#include "affmon/commands.hpp"
#include "affmon/descent.hpp"
#include "affmon/etale.hpp"
#include "affmon/json_io.hpp"
#include "affmon/monoid.hpp"
#include "affmon/poly.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace affmon;

namespace {

Rational rat(const std::string& s) { return Rational::from_string(s); }

std::vector<Rational> rats(const std::vector<std::string>& ss) {
    std::vector<Rational> out;
    out.reserve(ss.size());
    for (const auto& s : ss) out.push_back(rat(s));
    return out;
}

EtaleAlgebra algebra_from_minpolys(const std::vector<std::vector<std::string>>& coeff_lists) {
    std::vector<FieldExtension> factors;
    factors.reserve(coeff_lists.size());
    for (const auto& coeffs : coeff_lists) factors.push_back(FieldExtension::create(rats(coeffs)));
    return EtaleAlgebra::create(std::move(factors));
}

std::vector<std::vector<Rational>> rat_matrix(const std::vector<std::vector<std::string>>& m) {
    std::vector<std::vector<Rational>> out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(rats(row));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact monoid structures on affine spaces: catalog, verification, "
              "Galois twisting, norm forms and automorphism regularity checks";
    m.attr("__version__") = "0.1.0";

    py::register_exception<RationalityFailure>(m, "RationalityFailure");
    py::register_exception<SchemaError>(m, "SchemaError");

    py::class_<Poly>(m, "Poly", "Sparse exact multivariate polynomial over Q")
        .def_static("from_json", [](const std::string& s) {
            return poly_from_json(nlohmann::json::parse(s));
        })
        .def("to_json", [](const Poly& p) { return canonical_dump(poly_to_json(p)); })
        .def_property_readonly("nvars", &Poly::nvars)
        .def_property_readonly("term_count", &Poly::term_count)
        .def("total_degree", &Poly::total_degree)
        .def("str", &Poly::str, py::arg("names"))
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("pow", [](const Poly& a, unsigned long k) { return a.pow(k); })
        .def("divexact",
             [](const Poly& a, const Poly& d) -> std::optional<Poly> { return a.divexact(d); },
             "Exact quotient, or None when the division fails")
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__repr__", [](const Poly& p) {
            return "<Poly nvars=" + std::to_string(p.nvars()) + " terms=" +
                   std::to_string(p.term_count()) + ">";
        });

    py::class_<AxiomReport>(m, "AxiomReport")
        .def_readonly("associative", &AxiomReport::associative)
        .def_readonly("commutative", &AxiomReport::commutative)
        .def_readonly("unital", &AxiomReport::unital)
        .def_property_readonly("witness",
                               [](const AxiomReport& r) -> std::optional<std::string> {
                                   if (!r.witness) return std::nullopt;
                                   return canonical_dump(poly_to_json(*r.witness));
                               })
        .def("all", &AxiomReport::all);

    py::class_<MonoidStructure>(m, "MonoidStructure",
                                "dim multiplication polynomials in 2*dim variables plus a unit")
        .def_static("from_json", &monoid_from_json_string)
        .def("to_json", &monoid_to_json_string)
        .def_readonly("dim", &MonoidStructure::dim)
        .def_property_readonly("mult",
                               [](const MonoidStructure& m_) { return m_.mult; })
        .def_property_readonly("unit",
                               [](const MonoidStructure& m_) {
                                   std::vector<std::string> out;
                                   for (const auto& u : m_.unit) out.push_back(u.str());
                                   return out;
                               })
        .def_readonly("rank", &MonoidStructure::rank)
        .def_readonly("corank", &MonoidStructure::corank)
        .def_readonly("label", &MonoidStructure::label)
        .def("str", &MonoidStructure::str)
        .def("__eq__", &monoid_equal,
             "Coordinate-level identity of formulas and units; metadata is ignored")
        .def("__repr__", [](const MonoidStructure& m_) {
            return "<MonoidStructure dim=" + std::to_string(m_.dim) +
                   (m_.label ? " label='" + *m_.label + "'" : "") + ">";
        });

    py::class_<EtaleAlgebra>(m, "EtaleAlgebra", "Product of field extensions of Q")
        .def_static("from_minpolys", &algebra_from_minpolys, py::arg("minpoly_coeff_lists"),
                    "Factors given by monic minimal polynomials, coefficients low to high")
        .def_static("from_json",
                    [](const std::string& s) { return algebra_from_json(nlohmann::json::parse(s)); })
        .def("to_json", [](const EtaleAlgebra& a) { return canonical_dump(algebra_to_json(a)); })
        .def_property_readonly("dim", &EtaleAlgebra::dim)
        .def("multiplication", &EtaleAlgebra::multiplication)
        .def("unit", [](const EtaleAlgebra& a) {
            std::vector<std::string> out;
            for (const auto& u : a.unit()) out.push_back(u.str());
            return out;
        });

    m.def("verify_axioms", &verify_axioms, py::arg("monoid"));
    m.def("monoid_equal", &monoid_equal);
    m.def("norm_form", [](const EtaleAlgebra& a) { return norm_form(a).poly; },
          "Determinant of left multiplication by a generic element");
    m.def("quadratic_iso",
          [](const std::string& d1, const std::string& d2) {
              return quadratic_iso(rat(d1), rat(d2));
          },
          py::arg("d1"), py::arg("d2"));

    m.def("build_rank0", &build_rank0, py::arg("n"));
    m.def("build_corank0", &build_corank0, py::arg("algebra"));
    m.def("build_corank1",
          [](const std::vector<EtaleAlgebra>& algebras, const std::vector<int>& weights) {
              return build_corank1(CorankOneSpec::create(algebras, weights));
          },
          py::arg("algebras"), py::arg("weights"));
    m.def("q_poly", [](int b, int c) { return q_poly(QBCParams::create(b, c)); }, py::arg("b"),
          py::arg("c"));
    m.def("build_rank1_dim3_plain", &build_rank1_dim3_plain, py::arg("b"), py::arg("c"));
    m.def("build_rank1_dim3_deformed",
          [](int b, int c) { return build_rank1_dim3_deformed(QBCParams::create(b, c)); },
          py::arg("b"), py::arg("c"));
    m.def("enumerate_dim",
          [](int n, int bound, const std::vector<std::string>& ds,
             const std::vector<std::vector<std::string>>& cubic_coeff_lists) {
              std::vector<FieldExtension> cubics;
              cubics.reserve(cubic_coeff_lists.size());
              for (const auto& coeffs : cubic_coeff_lists)
                  cubics.push_back(FieldExtension::create(rats(coeffs)));
              return enumerate_dim(n, bound, rats(ds), cubics);
          },
          py::arg("n"), py::arg("bound") = 0, py::arg("quadratic_ds") = std::vector<std::string>{},
          py::arg("cubic_minpolys") = std::vector<std::vector<std::string>>{});

    m.def("twist_standard",
          [](const MonoidStructure& split, const std::string& d,
             const std::vector<std::pair<int, int>>& pairs_1based) {
              SplittingData data;
              data.d = rat(d);
              data.dim = split.dim;
              for (auto [i, j] : pairs_1based) data.pairs.emplace_back(i - 1, j - 1);
              return twist(split, standard_splitting(data));
          },
          py::arg("split"), py::arg("d"), py::arg("pairs"),
          "Twist by the standard coordinate-swap splitting; pairs are 1-based");

    m.def("regular_plain",
          [](int b, int c, const std::vector<std::vector<std::string>>& g) {
              auto gm = rat_matrix(g);
              auto aut = UnitGroupAut::create(IntMatrix::identity(1), gm);
              bool computed = is_regular(induced_map(EmbeddingData::rank1_dim3_plain(b, c), aut));
              return py::make_tuple(computed, plain_regularity(b, c, gm));
          },
          py::arg("b"), py::arg("c"), py::arg("matrix"),
          "(computed, closed-form) regularity for the plain rank-1 family");
    m.def("regular_deformed",
          [](int b, int c, const std::vector<std::vector<std::string>>& g) {
              auto gm = rat_matrix(g);
              QBCParams p = QBCParams::create(b, c);
              auto aut = UnitGroupAut::create(IntMatrix::identity(1), gm);
              bool computed = is_regular(induced_map(EmbeddingData::rank1_dim3_deformed(p), aut));
              return py::make_tuple(computed, deformed_regularity(p, gm));
          },
          py::arg("b"), py::arg("c"), py::arg("matrix"));
    m.def("regular_corank1",
          [](const std::vector<int>& b_vector, const std::vector<int>& sigma,
             const std::string& z) {
              auto aut = UnitGroupAut::create(IntMatrix::permutation(sigma), {{rat(z)}});
              bool computed = is_regular(induced_map(EmbeddingData::corank1(b_vector), aut));
              return py::make_tuple(computed, corank1_regularity(b_vector, sigma));
          },
          py::arg("b_vector"), py::arg("sigma"), py::arg("z") = std::string("1"),
          "sigma is a 0-based permutation given by images");

    m.def("doubly_nonneg_glnz",
          [](int n, long long bound) {
              std::vector<std::vector<std::vector<long long>>> out;
              for (const auto& mat : doubly_nonneg_glnz(n, bound)) {
                  std::vector<std::vector<long long>> rows;
                  for (int r = 0; r < mat.n; ++r) {
                      std::vector<long long> row;
                      for (int c = 0; c < mat.n; ++c) row.push_back(mat.at(r, c));
                      rows.push_back(std::move(row));
                  }
                  out.push_back(std::move(rows));
              }
              return out;
          },
          py::arg("n"), py::arg("bound") = 2);
}
