#include "affmon/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using affmon::CommandResult;
using affmon::Rational;
using nlohmann::json;

constexpr int kUsageError = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return json::parse(buf.str());
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& raw, const char* flag) {
    std::vector<Rational> out;
    out.reserve(raw.size());
    for (const auto& s : raw) {
        try {
            out.push_back(Rational::from_string(s));
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string(flag) + ": " + e.what());
        }
    }
    return out;
}

// --cubic takes a comma-separated coefficient list, low degree first:
// "a^3 - 2" is "-2,0,0,1".
std::vector<Rational> parse_coeff_list(const std::string& raw) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : raw) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parse_rationals(parts, "--cubic");
}

int emit(const CommandResult& result, const std::optional<std::string>& out_path, bool pretty) {
    if (out_path) {
        std::ofstream out(*out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << *out_path << "'\n";
            return kUsageError;
        }
        out << affmon::canonical_dump(result.payload()) << "\n";
        if (!out) {
            std::cerr << "error: short write to '" << *out_path << "'\n";
            return kUsageError;
        }
    }
    std::cout << affmon::canonical_dump(result.envelope) << "\n";
    if (pretty && !result.pretty.empty()) std::cerr << result.pretty << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact catalog of commutative algebraic monoid structures on affine spaces"};
    app.require_subcommand(1);

    bool pretty = false;
    std::optional<std::string> out_path;
    app.add_flag("--pretty", pretty, "Render a human-readable form to stderr");
    app.add_option("--out", out_path, "Write the payload JSON to this file");

    int dim = 2;
    int bound = 0;
    int b = 1, c = 1;
    std::vector<std::string> d_args;
    std::vector<std::string> cubic_args;
    std::string in_path, splitting_path;

    auto* catalog = app.add_subcommand("catalog", "Enumerate the classification for one dimension");
    catalog->add_option("--dim", dim, "Dimension (1, 2 or 3)")->required();
    catalog->add_option("--bound", bound, "Upper bound for the exponents b, c");
    catalog->add_option("--d", d_args, "Quadratic discriminant (repeatable)");
    catalog->add_option("--cubic", cubic_args,
                        "Cubic minimal polynomial as comma-separated coefficients, low to high "
                        "(repeatable)");

    auto* verify = app.add_subcommand("verify", "Check the monoid axioms of a JSON file");
    verify->add_option("--in", in_path, "Monoid JSON object or catalog array")->required();

    auto* qpoly = app.add_subcommand("qpoly", "Emit the deformation polynomial Q_{b,c}");
    qpoly->add_option("--b", b, "Exponent b (>= 1)")->required();
    qpoly->add_option("--c", c, "Exponent c (>= b)")->required();

    auto* twist = app.add_subcommand("twist", "Twist a split monoid by a quadratic splitting");
    twist->add_option("--in", in_path, "Split monoid JSON")->required();
    twist->add_option("--splitting", splitting_path, "Splitting JSON {d, dim, pairs}")->required();

    auto* autcheck = app.add_subcommand("autcheck", "Regularity of an induced unit-group map");
    autcheck->add_option("--in", in_path, "Request JSON {family, params, matrix}")->required();

    auto* norm = app.add_subcommand("norm", "Norm form of an etale algebra");
    norm->add_option("--in", in_path, "Algebra JSON {factors: [{minpoly_coeffs}]}")->required();

    auto* iso = app.add_subcommand("iso", "Isomorphy of Q(sqrt(d1)) and Q(sqrt(d2))");
    iso->add_option("--d", d_args, "The two discriminants (give --d twice)")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        CommandResult result;
        if (catalog->parsed()) {
            std::vector<std::vector<Rational>> cubics;
            cubics.reserve(cubic_args.size());
            for (const auto& raw : cubic_args) cubics.push_back(parse_coeff_list(raw));
            result = affmon::cmd_catalog(dim, bound, parse_rationals(d_args, "--d"), cubics);
        } else if (verify->parsed()) {
            result = affmon::cmd_verify(read_json_file(in_path));
        } else if (qpoly->parsed()) {
            result = affmon::cmd_qpoly(b, c);
        } else if (twist->parsed()) {
            result = affmon::cmd_twist(read_json_file(in_path), read_json_file(splitting_path));
        } else if (autcheck->parsed()) {
            result = affmon::cmd_autcheck(read_json_file(in_path));
        } else if (norm->parsed()) {
            result = affmon::cmd_norm(read_json_file(in_path));
        } else if (iso->parsed()) {
            auto ds = parse_rationals(d_args, "--d");
            result = affmon::cmd_iso(ds[0], ds[1]);
        }
        return emit(result, out_path, pretty);
    } catch (const json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
}
