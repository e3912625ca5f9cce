// stickkit — exact triangles, coefficients and hockey-stick identity sweeps.
//
//   stickkit triangle --kind pascal|trinomial --rows N [--highlight n,k]
//                     [--format text|csv|json]
//   stickkit coeff binomial n k | trinomial n k | multinomial n p1 p2 ...
//   stickkit verify --family F --n-max A --k-max B [--format text|json]
//                   [--fail-fast]
//
// verify exits 0 only when every checked case holds; domain errors exit 2,
// command-line usage errors exit with CLI11's nonzero codes.

#include "stickkit/coefficients.hpp"
#include "stickkit/identities.hpp"
#include "stickkit/render.hpp"
#include "stickkit/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

long long parse_integer(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw CLI::ValidationError(what, "'" + text + "' is not an integer");
    return value;
}

stickkit::render_format parse_render_format(const std::string& name) {
    if (name == "text") return stickkit::render_format::text;
    if (name == "csv") return stickkit::render_format::csv;
    return stickkit::render_format::json;
}

stickkit::highlight_spec parse_highlight(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw CLI::ValidationError("--highlight", "expected 'n,k'");
    return {parse_integer(text.substr(0, comma), "--highlight"),
            parse_integer(text.substr(comma + 1), "--highlight")};
}

int run_coeff(const std::vector<std::string>& args) {
    if (args.empty())
        throw CLI::ValidationError("coeff", "expected a coefficient kind");
    const std::string& kind = args.front();
    std::vector<long long> values;
    for (std::size_t i = 1; i < args.size(); ++i)
        values.push_back(parse_integer(args[i], "coeff"));

    stickkit::Integer result;
    if (kind == "binomial" || kind == "trinomial") {
        if (values.size() != 2)
            throw CLI::ValidationError("coeff", kind + " takes exactly n and k");
        result = kind == "binomial" ? stickkit::binomial(values[0], values[1])
                                    : stickkit::trinomial(values[0], values[1]);
    } else if (kind == "multinomial") {
        if (values.empty())
            throw CLI::ValidationError("coeff", "multinomial takes n followed by parts");
        result = stickkit::multinomial(
            values[0], std::span<const long long>(values.data() + 1, values.size() - 1));
    } else {
        throw CLI::ValidationError("coeff", "unknown kind '" + kind + "'");
    }
    std::cout << result.str() << "\n";
    return 0;
}

int run_verify(const std::string& family_name, long long n_max, long long k_max,
               const std::string& format, bool fail_fast) {
    std::vector<stickkit::identity_family> families;
    if (family_name == "all") {
        families.assign(stickkit::all_families.begin(), stickkit::all_families.end());
    } else if (auto family = stickkit::family_from_name(family_name)) {
        families.push_back(*family);
    } else {
        throw CLI::ValidationError("--family", "unknown family '" + family_name + "'");
    }

    std::vector<stickkit::verification_report> reports;
    reports.reserve(families.size());
    for (stickkit::identity_family family : families)
        reports.push_back(stickkit::verify_family(family, n_max, k_max, {.fail_fast = fail_fast}));

    if (format == "json") {
        if (reports.size() == 1) {
            std::cout << stickkit::canonical_json_text(stickkit::report_json(reports.front()));
        } else {
            nlohmann::json all = nlohmann::json::array();
            for (const auto& report : reports) all.push_back(stickkit::report_json(report));
            std::cout << stickkit::canonical_json_text(all);
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i > 0) std::cout << "\n";
            std::cout << stickkit::report_text(reports[i]);
        }
    }
    return stickkit::exit_status(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Pascal/trinomial triangles and hockey-stick identity verification"};
    app.require_subcommand(1);
    int status = 0;

    auto* triangle = app.add_subcommand("triangle", "render a coefficient triangle");
    std::string tri_kind;
    std::string tri_rows;
    std::string tri_highlight;
    std::string tri_format = "text";
    triangle->add_option("--kind", tri_kind, "pascal or trinomial")
        ->required()
        ->check(CLI::IsMember({"pascal", "trinomial"}));
    triangle->add_option("--rows", tri_rows, "number of rows to render")->required();
    triangle->add_option("--highlight", tri_highlight, "identity parameters n,k to mark");
    triangle->add_option("--format", tri_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    triangle->callback([&] {
        stickkit::render_spec spec{
            tri_kind == "pascal" ? stickkit::triangle_kind::pascal
                                 : stickkit::triangle_kind::trinomial,
            parse_integer(tri_rows, "--rows"),
            tri_highlight.empty() ? std::nullopt
                                  : std::optional(parse_highlight(tri_highlight)),
            parse_render_format(tri_format)};
        std::cout << stickkit::render_triangle(spec);
    });

    auto* coeff = app.add_subcommand("coeff", "print one exact coefficient");
    std::vector<std::string> coeff_args;
    coeff->add_option("args", coeff_args, "kind followed by its integer arguments")
        ->expected(-1);
    coeff->callback([&] { status = run_coeff(coeff_args); });

    auto* verify = app.add_subcommand("verify", "sweep an identity family and report");
    std::string verify_family_name;
    std::string verify_n_max;
    std::string verify_k_max;
    std::string verify_format = "text";
    bool fail_fast = false;
    verify->add_option("--family", verify_family_name,
                       "little-stick, big-stick-puck, pascal-hockey, trinomial-hockey, "
                       "pyramid or all")
        ->required();
    verify->add_option("--n-max", verify_n_max, "sweep n over [0, n-max]")->required();
    verify->add_option("--k-max", verify_k_max, "sweep k over [0, k-max]")->required();
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--fail-fast", fail_fast, "stop at the first failing case");
    verify->callback([&] {
        status = run_verify(verify_family_name, parse_integer(verify_n_max, "--n-max"),
                            parse_integer(verify_k_max, "--k-max"), verify_format, fail_fast);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "stickkit: " << e.what() << "\n";
        return 2;
    }
    return status;
}
