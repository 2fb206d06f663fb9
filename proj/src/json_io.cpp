#include "affmon/json_io.hpp"

#include "affmon/descent.hpp"
#include "affmon/etale.hpp"
#include "affmon/monoid.hpp"

namespace affmon {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw SchemaError(msg);
}

// Accepts exactly the canonical spelling of an integer: what the writer
// would emit for the same value.
void require_canonical_integer(const json& j, const char* what) {
    require(j.is_string(), std::string(what) + " must be a decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    Rational parsed = [&] {
        try {
            return Rational::from_string(s);
        } catch (const std::exception& e) {
            throw SchemaError(std::string(what) + ": " + e.what());
        }
    }();
    require(parsed.is_integer() && parsed.num_str() == s,
            std::string(what) + " is not a canonical integer: '" + s + "'");
}

Rational rational_from_json_string(const json& j, const char* what) {
    require(j.is_string(), std::string(what) + " must be a string");
    try {
        return Rational::from_string(j.get_ref<const std::string&>());
    } catch (const std::exception& e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["num"] = c.num_str();
        t["den"] = c.den_str();
        t["exps"] = m.exps;
        terms.push_back(std::move(t));
    }
    return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j) {
    require(j.is_object(), "polynomial must be an object");
    require(j.contains("nvars") && j.contains("terms"), "polynomial needs nvars and terms");
    require(j.size() == 2, "polynomial has unexpected keys");
    require(j["nvars"].is_number_integer(), "nvars must be an integer");
    const int nvars = j["nvars"].get<int>();
    require(nvars >= 0, "nvars must be nonnegative");
    require(j["terms"].is_array(), "terms must be an array");

    TermMap terms;
    const Monomial* prev = nullptr;
    for (const json& t : j["terms"]) {
        require(t.is_object() && t.contains("num") && t.contains("den") && t.contains("exps") &&
                    t.size() == 3,
                "term needs exactly num, den and exps");
        require_canonical_integer(t["num"], "num");
        require_canonical_integer(t["den"], "den");
        const std::string& num = t["num"].get_ref<const std::string&>();
        const std::string& den = t["den"].get_ref<const std::string&>();
        Rational c = Rational::from_string(num + "/" + den);
        // Lowest terms with positive denominator, exactly as serialized.
        require(c.num_str() == num && c.den_str() == den,
                "coefficient " + num + "/" + den + " is not canonical");
        require(!c.is_zero(), "zero coefficient stored in term list");

        require(t["exps"].is_array(), "exps must be an array");
        require(static_cast<int>(t["exps"].size()) == nvars,
                "exps length does not match nvars");
        Monomial m(nvars);
        for (int i = 0; i < nvars; ++i) {
            require(t["exps"][static_cast<std::size_t>(i)].is_number_integer(),
                    "exps entries must be integers");
            m[i] = t["exps"][static_cast<std::size_t>(i)].get<int>();
        }
        auto [it, inserted] = terms.emplace(m, c);
        require(inserted, "duplicate exponent vector in term list");
        require(prev == nullptr || *prev < it->first,
                "terms are not in canonical lexicographic order");
        prev = &it->first;
    }
    try {
        return Poly::from_terms(nvars, std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json monoid_to_json(const MonoidStructure& m) {
    json mult = json::array();
    for (const Poly& p : m.mult) mult.push_back(poly_to_json(p));
    json unit = json::array();
    for (const Rational& u : m.unit) unit.push_back(u.str());
    json j;
    j["dim"] = m.dim;
    j["mult"] = std::move(mult);
    j["unit"] = std::move(unit);
    j["rank"] = m.rank ? json(*m.rank) : json(nullptr);
    j["corank"] = m.corank ? json(*m.corank) : json(nullptr);
    j["label"] = m.label ? json(*m.label) : json(nullptr);
    return j;
}

MonoidStructure monoid_from_json(const json& j) {
    require(j.is_object(), "monoid must be an object");
    for (const char* key : {"dim", "mult", "unit"})
        require(j.contains(key), std::string("monoid needs key '") + key + "'");
    require(j["dim"].is_number_integer(), "dim must be an integer");
    const int dim = j["dim"].get<int>();
    require(dim >= 1, "dim must be positive");

    require(j["mult"].is_array(), "mult must be an array");
    std::vector<Poly> mult;
    for (const json& p : j["mult"]) mult.push_back(poly_from_json(p));

    require(j["unit"].is_array(), "unit must be an array");
    std::vector<Rational> unit;
    for (const json& u : j["unit"]) unit.push_back(rational_from_json_string(u, "unit entry"));

    auto opt_int = [&](const char* key) -> std::optional<int> {
        if (!j.contains(key) || j[key].is_null()) return std::nullopt;
        require(j[key].is_number_integer(), std::string(key) + " must be an integer or null");
        return j[key].get<int>();
    };
    std::optional<std::string> label;
    if (j.contains("label") && !j["label"].is_null()) {
        require(j["label"].is_string(), "label must be a string or null");
        label = j["label"].get<std::string>();
    }

    try {
        return MonoidStructure::create(dim, std::move(mult), std::move(unit), opt_int("rank"),
                                       opt_int("corank"), std::move(label));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

std::string monoid_to_json_string(const MonoidStructure& m) {
    return canonical_dump(monoid_to_json(m));
}

MonoidStructure monoid_from_json_string(const std::string& text) {
    return monoid_from_json(json::parse(text));
}

json axiom_report_to_json(const AxiomReport& r) {
    json j;
    j["associative"] = r.associative;
    j["commutative"] = r.commutative;
    j["unital"] = r.unital;
    j["witness"] = r.witness ? poly_to_json(*r.witness) : json(nullptr);
    return j;
}

json algebra_to_json(const EtaleAlgebra& a) {
    json factors = json::array();
    for (const FieldExtension& f : a.factors()) {
        json coeffs = json::array();
        for (const Rational& c : f.minpoly_coeffs()) coeffs.push_back(c.str());
        factors.push_back(json{{"minpoly_coeffs", std::move(coeffs)}});
    }
    return json{{"factors", std::move(factors)}};
}

EtaleAlgebra algebra_from_json(const json& j) {
    require(j.is_object() && j.contains("factors") && j["factors"].is_array(),
            "algebra needs a factors array");
    std::vector<FieldExtension> factors;
    for (const json& f : j["factors"]) {
        require(f.is_object() && f.contains("minpoly_coeffs") && f["minpoly_coeffs"].is_array(),
                "factor needs a minpoly_coeffs array");
        std::vector<Rational> coeffs;
        for (const json& c : f["minpoly_coeffs"])
            coeffs.push_back(rational_from_json_string(c, "minpoly coefficient"));
        factors.push_back(FieldExtension::create(std::move(coeffs)));
    }
    if (factors.empty()) throw SchemaError("algebra needs at least one factor");
    return EtaleAlgebra::create(std::move(factors));
}

json splitting_to_json(const SplittingData& s) {
    json pairs = json::array();
    for (auto [i, jj] : s.pairs) pairs.push_back(json::array({i + 1, jj + 1}));
    return json{{"d", s.d.str()}, {"dim", s.dim}, {"pairs", std::move(pairs)}};
}

SplittingData splitting_from_json(const json& j) {
    require(j.is_object() && j.contains("d") && j.contains("dim") && j.contains("pairs"),
            "splitting needs d, dim and pairs");
    SplittingData s;
    s.d = rational_from_json_string(j["d"], "d");
    require(j["dim"].is_number_integer(), "dim must be an integer");
    s.dim = j["dim"].get<int>();
    require(s.dim >= 1, "dim must be positive");
    require(j["pairs"].is_array(), "pairs must be an array");
    for (const json& p : j["pairs"]) {
        require(p.is_array() && p.size() == 2 && p[0].is_number_integer() &&
                    p[1].is_number_integer(),
                "each pair must be two integers");
        int a = p[0].get<int>(), b = p[1].get<int>();
        require(a >= 1 && a <= s.dim && b >= 1 && b <= s.dim,
                "pair coordinates must lie in 1..dim");
        s.pairs.emplace_back(a - 1, b - 1);
    }
    return s;
}

std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace affmon
