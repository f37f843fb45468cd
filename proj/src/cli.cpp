#include "orelim/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "orelim/checks.hpp"
#include "orelim/infmat.hpp"
#include "orelim/oresystem.hpp"

namespace orelim {

namespace {

std::optional<int> env_depth() {
    const char* v = std::getenv("ORELIM_DEPTH");
    if (!v || !*v) return std::nullopt;
    try {
        int d = std::stoi(v);
        if (d >= 1) return d;
    } catch (...) {
    }
    return std::nullopt;
}

std::vector<Rational> parse_c_list(const std::string& list) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::size_t end = comma == std::string::npos ? list.size() : comma;
        std::string piece = list.substr(start, end - start);
        if (!piece.empty()) out.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw orelim::ParseError("empty c list", 0);
    return out;
}

InfMatrix catalog_by_name(const std::string& name, const std::string& q) {
    MatrixName id = matrix_name_from_string(name);
    std::optional<Rational> qv;
    if (id == MatrixName::D_q) {
        if (q.empty()) throw CatalogError("D_q requires --q");
        qv = parse_rational(q);
    }
    return catalog(id, qv);
}

int cmd_catalog(const std::string& name, int n, const std::string& format,
                const std::string& q, std::ostream& out) {
    Minor m = minor(catalog_by_name(name, q), n);
    if (format == "json")
        out << minor_to_json(name, m) << "\n";
    else if (format == "csv")
        out << minor_to_csv(m);
    else
        out << minor_to_pretty(m);
    return 0;
}

int cmd_lu(const std::string& name, int n, const std::string& format,
           const std::string& q, std::ostream& out) {
    LUPair lu = lu_minor(catalog_by_name(name, q), n);
    if (format == "json")
        out << lu_to_json(name, lu) << "\n";
    else if (format == "csv")
        out << lu_to_csv(lu);
    else
        out << lu_to_pretty(lu);
    return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> depth_flag,
               const std::string& c_list, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    std::optional<int> depth = depth_flag ? depth_flag : env_depth();
    std::vector<CheckReport> reports;

    auto run_matrix = [&] {
        auto rs = run_matrix_suite(depth.value_or(8));
        reports.insert(reports.end(), rs.begin(), rs.end());
    };
    auto run_jacobi = [&] {
        int d = depth.value_or(12);
        auto rs = run_jacobi_suite(d, d, d);
        reports.insert(reports.end(), rs.begin(), rs.end());
    };
    auto run_ore = [&] {
        OreSweepConfig cfg;
        cfg.max_n = depth.value_or(5);
        if (!c_list.empty()) cfg.c_values = parse_c_list(c_list);
        auto rs = run_ore_suite(cfg);
        reports.insert(reports.end(), rs.begin(), rs.end());
    };

    if (suite == "matrix") {
        run_matrix();
    } else if (suite == "jacobi") {
        run_jacobi();
    } else if (suite == "ore") {
        run_ore();
    } else if (suite == "full") {
        run_matrix();
        run_jacobi();
        run_ore();
    } else {
        err << "unknown suite: " << suite << "\n";
        return 2;
    }

    std::string payload = reports_to_json(reports);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot open " << out_path << "\n";
            return 2;
        }
        f << payload << "\n";
    } else {
        out << payload << "\n";
    }
    for (const auto& r : reports)
        if (r.failed()) return 1;
    return 0;
}

int cmd_ore_residual(const std::string& poly, const std::string& c_str, int n,
                     std::optional<int> k, std::ostream& out) {
    Rational c = parse_rational(c_str);
    OrePoly p = parse_ore_poly(poly, c);
    OreElem res = k ? eq_residual(p, n, *k) : system_residual(p, n);
    out << res.str() << "\n";
    return res.is_zero() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification of periodic elimination and Jacobi matrix identities"};
    app.require_subcommand(1);

    std::string name, format = "pretty", q, suite, c_list, out_path, poly, c_str;
    int n = 1;
    std::optional<int> depth, k;

    auto* cat = app.add_subcommand("catalog", "print the n-minor of a named matrix");
    cat->add_option("--name", name, "matrix name")->required();
    cat->add_option("--n", n, "minor size")->required()->check(CLI::PositiveNumber);
    cat->add_option("--format", format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    cat->add_option("--q", q, "parameter for D_q");

    auto* lu = app.add_subcommand("lu", "LU-factor the n-minor of a named matrix");
    lu->add_option("--name", name, "matrix name")->required();
    lu->add_option("--n", n, "minor size")->required()->check(CLI::PositiveNumber);
    lu->add_option("--format", format, "pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    lu->add_option("--q", q, "parameter for D_q");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "matrix|jacobi|ore|full")->required();
    verify->add_option("--depth", depth, "minor size / sweep bound");
    verify->add_option("--c", c_list, "comma-separated structure constants (ore)");
    verify->add_option("--out", out_path, "write the JSON report here");

    auto* ore = app.add_subcommand("ore-residual", "evaluate an equation residual");
    ore->add_option("--poly", poly, "polynomial, e.g. \"1; 2 E H^2\"")->required();
    ore->add_option("--c", c_str, "structure constant")->required();
    ore->add_option("--n", n, "equation index")->required();
    ore->add_option("--k", k, "elimination level (omitted = original system)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cat->parsed()) return cmd_catalog(name, n, format, q, out);
        if (lu->parsed()) return cmd_lu(name, n, format, q, out);
        if (verify->parsed()) return cmd_verify(suite, depth, c_list, out_path, out, err);
        if (ore->parsed()) return cmd_ore_residual(poly, c_str, n, k, out);
    } catch (const orelim::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CatalogError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const NoLUError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const MathError& e) {
        err << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace orelim
