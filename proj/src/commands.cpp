#include "affmon/commands.hpp"

#include "affmon/autgroup.hpp"
#include "affmon/catalog.hpp"
#include "affmon/descent.hpp"
#include "affmon/etale.hpp"
#include "affmon/monoid.hpp"

#include <functional>
#include <sstream>

namespace affmon {

using nlohmann::json;

namespace {

CommandResult make_ok(json payload, std::string pretty,
                      std::vector<std::string> diagnostics = {}) {
    CommandResult r;
    r.exit_code = 0;
    r.envelope = json{{"status", "ok"}, {"payload", std::move(payload)},
                      {"diagnostics", diagnostics}};
    r.pretty = std::move(pretty);
    return r;
}

CommandResult make_error(int code, json payload, std::vector<std::string> diagnostics,
                         std::string pretty = {}) {
    CommandResult r;
    r.exit_code = code;
    r.envelope = json{{"status", "error"}, {"payload", std::move(payload)},
                      {"diagnostics", std::move(diagnostics)}};
    r.pretty = std::move(pretty);
    return r;
}

CommandResult run_guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const SchemaError& e) {
        return make_error(2, nullptr, {e.what()});
    } catch (const json::exception& e) {
        return make_error(2, nullptr, {e.what()});
    } catch (const RationalityFailure& e) {
        return make_error(1, nullptr, {e.what()});
    } catch (const std::invalid_argument& e) {
        return make_error(1, nullptr, {e.what()});
    } catch (const std::domain_error& e) {
        return make_error(1, nullptr, {e.what()});
    }
}

json verify_one(const MonoidStructure& m, bool& all_pass, std::vector<std::string>& diagnostics) {
    AxiomReport report = verify_axioms(m);
    if (!report.all()) {
        all_pass = false;
        std::string label = m.label ? *m.label : "<unlabeled>";
        std::string axiom = !report.associative ? "associativity"
                            : !report.commutative ? "commutativity"
                                                   : "unit law";
        diagnostics.push_back(label + ": " + axiom + " fails");
    }
    return axiom_report_to_json(report);
}

std::vector<std::vector<Rational>> parse_rational_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw SchemaError(std::string(what) + " must be a nonempty array of rows");
    std::vector<std::vector<Rational>> m;
    for (const json& row : j) {
        if (!row.is_array() || row.size() != j.size())
            throw SchemaError(std::string(what) + " must be square");
        std::vector<Rational> out_row;
        for (const json& cell : row) {
            if (!cell.is_string()) throw SchemaError(std::string(what) + " entries must be rational strings");
            try {
                out_row.push_back(Rational::from_string(cell.get_ref<const std::string&>()));
            } catch (const std::exception& e) {
                throw SchemaError(std::string(what) + ": " + e.what());
            }
        }
        m.push_back(std::move(out_row));
    }
    return m;
}

}  // namespace

CommandResult cmd_catalog(int dim, int bound, const std::vector<Rational>& quadratic_ds,
                          const std::vector<std::vector<Rational>>& cubic_coeff_lists) {
    return run_guarded([&] {
        std::vector<FieldExtension> cubics;
        cubics.reserve(cubic_coeff_lists.size());
        for (const auto& coeffs : cubic_coeff_lists) cubics.push_back(FieldExtension::create(coeffs));
        auto entries = enumerate_dim(dim, bound, quadratic_ds, cubics);
        json payload = json::array();
        std::ostringstream pretty;
        pretty << entries.size() << " structures on A^" << dim << "\n";
        for (const auto& m : entries) {
            payload.push_back(monoid_to_json(m));
            pretty << "\n" << m.str() << "\n";
        }
        return make_ok(std::move(payload), pretty.str());
    });
}

CommandResult cmd_verify(const json& input) {
    return run_guarded([&] {
        bool all_pass = true;
        std::vector<std::string> diagnostics;
        json payload;
        if (input.is_array()) {
            payload = json::array();
            for (const json& entry : input)
                payload.push_back(verify_one(monoid_from_json(entry), all_pass, diagnostics));
        } else {
            payload = verify_one(monoid_from_json(input), all_pass, diagnostics);
        }
        std::string pretty = all_pass ? "all axioms hold" : "axiom failure";
        if (all_pass) return make_ok(std::move(payload), std::move(pretty), std::move(diagnostics));
        return make_error(1, std::move(payload), std::move(diagnostics), std::move(pretty));
    });
}

CommandResult cmd_qpoly(int b, int c) {
    return run_guarded([&] {
        Poly q = q_poly(QBCParams::create(b, c));
        std::ostringstream pretty;
        pretty << "Q_{" << b << "," << c << "} = " << q.str(xy_names(2));
        return make_ok(poly_to_json(q), pretty.str());
    });
}

CommandResult cmd_twist(const json& base_monoid, const json& splitting) {
    return run_guarded([&] {
        MonoidStructure split = monoid_from_json(base_monoid);
        SplittingData data = splitting_from_json(splitting);
        if (data.dim != split.dim)
            throw std::invalid_argument("splitting dimension does not match the monoid");
        SplittingMatrix s = standard_splitting(data);
        if (!check_cocycle(s)) throw std::invalid_argument("splitting data violates the cocycle condition");
        MonoidStructure twisted = twist(split, s);
        return make_ok(monoid_to_json(twisted), twisted.str());
    });
}

CommandResult cmd_autcheck(const json& request) {
    return run_guarded([&] {
        if (!request.is_object() || !request.contains("family") || !request.contains("params") ||
            !request.contains("matrix"))
            throw SchemaError("autcheck request needs family, params and matrix");
        const std::string family = request["family"].get<std::string>();
        const json& params = request["params"];

        bool regular = false;
        bool expected = false;
        if (family == "plain" || family == "deformed") {
            if (!params.contains("b") || !params.contains("c"))
                throw SchemaError("params needs integers b and c");
            const int b = params["b"].get<int>();
            const int c = params["c"].get<int>();
            auto g = parse_rational_matrix(request["matrix"], "matrix");
            if (g.size() != 2) throw SchemaError("plain/deformed families take a 2x2 matrix");
            auto aut = UnitGroupAut::create(IntMatrix::identity(1), g);
            if (family == "plain") {
                regular = is_regular(induced_map(EmbeddingData::rank1_dim3_plain(b, c), aut));
                expected = plain_regularity(b, c, g);
            } else {
                QBCParams p = QBCParams::create(b, c);
                regular = is_regular(induced_map(EmbeddingData::rank1_dim3_deformed(p), aut));
                expected = deformed_regularity(p, g);
            }
        } else if (family == "corank1") {
            if (!params.contains("b_vector") || !params["b_vector"].is_array())
                throw SchemaError("params needs a b_vector array");
            std::vector<int> b_vector;
            for (const json& v : params["b_vector"]) b_vector.push_back(v.get<int>());
            Rational z(1);
            if (params.contains("z") && !params["z"].is_null())
                z = Rational::from_string(params["z"].get<std::string>());
            auto g = parse_rational_matrix(request["matrix"], "matrix");
            if (g.size() != b_vector.size())
                throw SchemaError("matrix size must match b_vector length");
            IntMatrix perm{static_cast<int>(g.size()),
                           std::vector<long long>(g.size() * g.size(), 0)};
            std::vector<int> sigma(b_vector.size(), -1);
            for (std::size_t r = 0; r < g.size(); ++r)
                for (std::size_t c2 = 0; c2 < g.size(); ++c2) {
                    const Rational& v = g[r][c2];
                    if (v.is_zero()) continue;
                    if (!v.is_one()) throw SchemaError("corank1 matrix must be a permutation matrix");
                    perm.at(static_cast<int>(r), static_cast<int>(c2)) = 1;
                    sigma[c2] = static_cast<int>(r);
                }
            if (!perm.is_permutation())
                throw SchemaError("corank1 matrix must be a permutation matrix");
            auto aut = UnitGroupAut::create(perm, {{z}});
            regular = is_regular(induced_map(EmbeddingData::corank1(b_vector), aut));
            expected = corank1_regularity(b_vector, sigma);
        } else {
            throw SchemaError("family must be plain, deformed or corank1");
        }

        json payload = request;
        payload["regular"] = regular;
        payload["expected"] = expected;
        std::ostringstream pretty;
        pretty << family << ": computed " << (regular ? "regular" : "non-regular") << ", closed form "
               << (expected ? "regular" : "non-regular");
        if (regular == expected) return make_ok(std::move(payload), pretty.str());
        return make_error(1, std::move(payload),
                          {"computed regularity disagrees with the closed-form condition"},
                          pretty.str());
    });
}

CommandResult cmd_norm(const json& algebra) {
    return run_guarded([&] {
        EtaleAlgebra a = algebra_from_json(algebra);
        NormForm n = norm_form(a);
        std::ostringstream pretty;
        pretty << "N = " << n.poly.str(var_names(a.dim(), "x"));
        return make_ok(poly_to_json(n.poly), pretty.str());
    });
}

CommandResult cmd_iso(const Rational& d1, const Rational& d2) {
    return run_guarded([&] {
        bool iso = quadratic_iso(d1, d2);
        json payload{{"d1", d1.str()}, {"d2", d2.str()}, {"isomorphic", iso}};
        std::ostringstream pretty;
        pretty << "Q(sqrt(" << d1.str() << ")) and Q(sqrt(" << d2.str() << ")) are "
               << (iso ? "isomorphic" : "not isomorphic");
        return make_ok(std::move(payload), pretty.str());
    });
}

}  // namespace affmon
