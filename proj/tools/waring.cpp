#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "waring/parse.hpp"
#include "waring/report.hpp"

namespace {

using namespace waring;

ParseOptions make_parse_options(const std::string& vars, int nvars) {
    ParseOptions opts;
    if (!vars.empty()) {
        std::istringstream in(vars);
        std::string tok;
        while (std::getline(in, tok, ',')) opts.variables.push_back(tok);
    }
    if (nvars > 0) opts.nvars = nvars;
    return opts;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const Report& r) { std::cout << r.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank and border-rank bounds for symmetric tensors"};
    app.require_subcommand(1);

    long precision_bits = BigFloat::kDefaultPrecision;
    double tolerance = 1e-20;
    app.add_option("--precision-bits", precision_bits, "mantissa bits for numeric checks");
    app.add_option("--tolerance", tolerance, "absolute tolerance for numeric checks");

    std::string poly_text, poly_file, vars;
    int nvars = 0;

    auto add_poly_options = [&](CLI::App* cmd) {
        cmd->add_option("--poly", poly_text, "polynomial, expanded form");
        cmd->add_option("--poly-file", poly_file,
                        "structured polynomial file: JSON [[exponents, coeff], ...]");
        cmd->add_option("--vars", vars, "comma-separated variable names");
        cmd->add_option("--nvars", nvars, "number of variables (default: inferred)");
    };

    auto* flatten = app.add_subcommand("flatten-rank", "catalecticant ranks per order");
    add_poly_options(flatten);

    auto* binary = app.add_subcommand("binary-rank", "exact rank of a binary form");
    add_poly_options(binary);
    std::string field = "rational";
    binary->add_option("--field", field, "rational | gaussian");

    auto* monomial = app.add_subcommand("monomial-bounds", "border/rank bounds for a monomial");
    std::string exponents;
    monomial->add_option("--exponents", exponents, "comma-separated exponents")->required();

    auto* detperm = app.add_subcommand("detperm-table", "determinant/permanent bound table");
    int max_n = 7, max_verify_n = 4;
    bool verify_flattenings = false;
    detperm->add_option("--max-n", max_n, "largest matrix size");
    detperm->add_flag("--verify-flattenings", verify_flattenings,
                      "verify middle flattening ranks by exact elimination");
    detperm->add_option("--max-verify-n", max_verify_n, "largest n for matrix verification");

    auto* bounds_cmd = app.add_subcommand("bounds", "aggregate every applicable bound source");
    add_poly_options(bounds_cmd);

    auto* verify_cmd = app.add_subcommand("verify-decomp", "check a power-sum decomposition");
    std::string target_text, decomp_path, catalog_id;
    bool catalog_all = false;
    verify_cmd->add_option("--target", target_text, "target polynomial");
    verify_cmd->add_option("--decomp", decomp_path, "decomposition file: 'coeff | c1, ..., cn'");
    verify_cmd->add_option("--catalog", catalog_id, "verify one catalog identity");
    verify_cmd->add_flag("--catalog-all", catalog_all, "verify every catalog identity");
    verify_cmd->add_option("--vars", vars, "comma-separated variable names");
    verify_cmd->add_option("--field", field, "rational | gaussian");

    auto* limit = app.add_subcommand("limit-plane", "limits of moving secant planes");
    std::string monomial_exps, row_id;
    int degree = 0;
    limit->add_option("--monomial", monomial_exps, "exponents b0,b1,... of the target monomial");
    limit->add_option("--normal-form", row_id, "normal-form row id (see docs)");
    limit->add_option("--degree", degree, "degree d for a normal-form row");

    auto* cubic_cmd = app.add_subcommand("cubic-classify", "plane-cubic rank classification");
    add_poly_options(cubic_cmd);

    auto* tables = app.add_subcommand("paper-tables", "reproduce the three bound tables");
    std::string which;
    tables->add_option("--which", which, "det-perm | products | cubics")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        auto opts = make_parse_options(vars, nvars);
        auto input_poly = [&]() -> Poly<Rational> {
            if (!poly_file.empty()) return poly_from_structured(read_file(poly_file));
            if (poly_text.empty())
                throw PreconditionError("a polynomial is required (--poly or --poly-file)");
            return parse_poly(poly_text, opts);
        };
        if (*flatten) {
            emit(report_flatten_rank(input_poly()));
        } else if (*binary) {
            if (field == "gaussian")
                emit(report_binary_rank(parse_poly_gaussian(poly_text, opts)));
            else
                emit(report_binary_rank(input_poly()));
        } else if (*monomial) {
            emit(report_monomial_bounds(parse_int_list(exponents)));
        } else if (*detperm) {
            emit(report_detperm_table(max_n, verify_flattenings, max_verify_n));
        } else if (*bounds_cmd) {
            emit(report_bounds(input_poly()));
        } else if (*verify_cmd) {
            if (catalog_all) {
                Report all = Report::array();
                for (const auto& id : catalog_ids())
                    all.push_back(
                        report_catalog_entry(run_catalog_entry(id, precision_bits, tolerance)));
                Report r;
                r["command"] = "verify-decomp";
                r["catalog"] = all;
                emit(r);
            } else if (!catalog_id.empty()) {
                emit(report_catalog_entry(
                    run_catalog_entry(catalog_id, precision_bits, tolerance)));
            } else {
                if (target_text.empty() || decomp_path.empty())
                    throw PreconditionError(
                        "verify-decomp needs --target and --decomp (or --catalog)");
                std::string file = read_file(decomp_path);
                Report r;
                r["command"] = "verify-decomp";
                if (field == "gaussian") {
                    auto target = parse_poly_gaussian(target_text, opts);
                    auto dec = parse_decomposition_gaussian(file, target.nvars(),
                                                            target.degree());
                    auto res = verify(target, dec);
                    r["target"] = poly_to_string(target);
                    r["powers"] = dec.power_count();
                    r["status"] = res.status == VerifyStatus::ExactMatch ? "exact" : "mismatch";
                    if (!res.witness_monomial.empty()) r["witness"] = res.witness_monomial;
                } else {
                    auto target = parse_poly(target_text, opts);
                    auto dec = parse_decomposition(file, target.nvars(), target.degree());
                    auto res = verify(target, dec);
                    r["target"] = poly_to_string(target);
                    r["powers"] = dec.power_count();
                    r["status"] = res.status == VerifyStatus::ExactMatch ? "exact" : "mismatch";
                    if (!res.witness_monomial.empty()) r["witness"] = res.witness_monomial;
                }
                emit(r);
            }
        } else if (*limit) {
            if (!monomial_exps.empty()) {
                emit(report_limit_monomial(parse_int_list(monomial_exps)));
            } else if (!row_id.empty()) {
                if (degree == 0)
                    throw PreconditionError("limit-plane: --normal-form needs --degree");
                emit(report_limit_normal_form(row_id, degree));
            } else {
                throw PreconditionError("limit-plane needs --monomial or --normal-form");
            }
        } else if (*cubic_cmd) {
            emit(report_cubic_classify(input_poly(), false, precision_bits));
        } else if (*tables) {
            emit(report_paper_tables(which));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const LimitError& e) {
        std::cerr << "internal limit exceeded: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
