// segre: top Segre numbers of tautological bundles on Hilbert schemes of points.
//
//   segre number --d 28 --pi 4 --kappa -1 --e 25 --k 5
//   segre series --which A --order 6 --format csv
//   segre lehn --d 2 --e 24 --order 6 --compare
//   segre verify --max-k 8 --max-order 8
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include <segre/k3.hpp>
#include <segre/lehn.hpp>
#include <segre/records.hpp>
#include <segre/universal.hpp>
#include <segre/verify.hpp>

namespace
{

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::size_t default_order()
{
    std::size_t order = 8;
    if (const char *env = std::getenv("SEGRE_DEFAULT_ORDER")) {
        try {
            const long v = std::stol(env);
            if (v >= 0) {
                order = static_cast<std::size_t>(v);
            }
        } catch (const std::exception &) {
            std::cerr << "ignoring malformed SEGRE_DEFAULT_ORDER='" << env << "'\n";
        }
    }
    return order;
}

struct CommonOptions {
    segre::OutputFormat format = segre::OutputFormat::table;
    std::string output;
};

void add_common(CLI::App *cmd, CommonOptions &opts)
{
    const std::map<std::string, segre::OutputFormat> formats{
        {"table", segre::OutputFormat::table}, {"csv", segre::OutputFormat::csv}, {"json", segre::OutputFormat::json}};
    cmd->add_option("--format", opts.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    cmd->add_option("--output", opts.output, "Write output to this file instead of stdout");
}

void add_tuple(CLI::App *cmd, segre::SurfaceInvariants &inv)
{
    cmd->add_option("--d", inv.d, "H^2");
    cmd->add_option("--pi", inv.pi, "H.K");
    cmd->add_option("--kappa", inv.kappa, "K^2");
    cmd->add_option("--e", inv.e, "c_2 of the surface");
}

void emit(const CommonOptions &opts, const std::string &text)
{
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) {
        throw std::runtime_error("cannot open '" + opts.output + "' for writing");
    }
    out << text;
}

bool has_closed_route(const segre::SurfaceInvariants &inv)
{
    return inv.pi == 0 && inv.kappa == 0 && inv.e == 24 && inv.d % 2 == 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Top Segre numbers of tautological bundles on Hilbert schemes of surfaces"};
    app.require_subcommand(1);

    // number
    CommonOptions number_opts;
    segre::SurfaceInvariants number_inv;
    std::int64_t number_k = 0;
    bool all_routes = false;
    auto *number = app.add_subcommand("number", "Print s_k(d, pi, kappa, e)");
    add_tuple(number, number_inv);
    number->add_option("--k", number_k, "Hilbert scheme length k")->required()->check(CLI::NonNegativeNumber);
    number->add_flag("--all-routes", all_routes, "Also print the closed K3 formula (when applicable) and the Lehn route");
    add_common(number, number_opts);

    // series
    CommonOptions series_opts;
    segre::SurfaceInvariants series_inv;
    std::string which;
    std::size_t series_order = default_order();
    auto *series = app.add_subcommand("series", "Print coefficients of A, B, C, D, s or the Lehn series");
    series->add_option("--which", which, "Series name")->required()->check(CLI::IsMember({"A", "B", "C", "D", "s", "lehn"}));
    series->add_option("--order", series_order, "Truncation order");
    add_tuple(series, series_inv);
    add_common(series, series_opts);

    // lehn
    CommonOptions lehn_opts;
    segre::SurfaceInvariants lehn_inv;
    std::optional<std::int64_t> lehn_k;
    std::size_t lehn_order = default_order();
    bool compare = false;
    auto *lehn = app.add_subcommand("lehn", "Evaluate the Lehn generating function");
    add_tuple(lehn, lehn_inv);
    lehn->add_option("--k", lehn_k, "Only this coefficient")->check(CLI::NonNegativeNumber);
    lehn->add_option("--order", lehn_order, "Print coefficients 0..order");
    lehn->add_flag("--compare", compare, "Also print the engine value for each coefficient");
    add_common(lehn, lehn_opts);

    // verify
    CommonOptions verify_opts;
    segre::VerifyOptions verify_cfg;
    verify_cfg.max_order = default_order();
    auto *verify = app.add_subcommand("verify", "Run the cross-route verification suite");
    verify->add_option("--max-k", verify_cfg.max_k, "Largest k for recursion and vanishing checks")
        ->check(CLI::Range(2, 40));
    verify->add_option("--max-order", verify_cfg.max_order, "Truncation order for series comparisons");
    verify->add_flag("--inject-fault", verify_cfg.inject_fault, "Perturb D before checking (negative control)")
        ->group("");
    verify->add_option("--output", verify_opts.output, "Write the report to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*number) {
            segre::SegreEngine engine;
            const auto k = static_cast<std::size_t>(number_k);
            std::vector<segre::OutputRecord> records;
            if (all_routes && has_closed_route(number_inv)) {
                records.push_back({number_inv, k, segre::closed_segre(number_k, {number_inv.d / 2 + 1}),
                                   segre::Route::closed});
            }
            records.push_back({number_inv, k, engine.number(number_inv, k), segre::Route::engine});
            if (all_routes) {
                records.push_back({number_inv, k, segre::lehn_series(number_inv, k)[k], segre::Route::lehn});
            }
            emit(number_opts, segre::format_records(records, number_opts.format));
            return 0;
        }

        if (*series) {
            segre::SeriesListing listing;
            listing.name = which;
            segre::Series result;
            if (which == "s") {
                segre::SegreEngine engine;
                listing.invariants = series_inv;
                result = engine.series(series_inv, series_order);
            } else if (which == "lehn") {
                listing.invariants = series_inv;
                result = segre::lehn_series(series_inv, series_order);
            } else {
                const auto u = segre::determine_universal(series_order);
                result = which == "A" ? u.a : which == "B" ? u.b : which == "C" ? u.c : u.d;
            }
            listing.coefficients.assign(result.coefficients().begin(), result.coefficients().end());
            emit(series_opts, segre::format_series(listing, series_opts.format));
            return 0;
        }

        if (*lehn) {
            const std::size_t order = lehn_k ? static_cast<std::size_t>(*lehn_k) : lehn_order;
            const segre::Series values = segre::lehn_series(lehn_inv, order);
            std::optional<segre::Series> engine_values;
            if (compare) {
                segre::SegreEngine engine;
                engine_values = engine.series(lehn_inv, order);
            }
            std::vector<segre::OutputRecord> records;
            for (std::size_t k = lehn_k ? order : 0; k <= order; ++k) {
                records.push_back({lehn_inv, k, values[k], segre::Route::lehn});
                if (engine_values) {
                    records.push_back({lehn_inv, k, (*engine_values)[k], segre::Route::engine});
                }
            }
            std::string text;
            if (lehn_opts.format == segre::OutputFormat::table) {
                const auto x = segre::lehn_exponents(lehn_inv);
                text = "exponents: a=" + x.a.to_string() + " b=" + x.b.to_string() + " c=" + x.c.to_string()
                       + " chi=" + x.chi.to_string() + "\n";
            }
            text += segre::format_records(records, lehn_opts.format);
            emit(lehn_opts, text);
            return 0;
        }

        if (*verify) {
            const auto results = segre::run_verification(verify_cfg);
            emit(verify_opts, segre::format_report(results));
            return segre::all_passed(results) ? 0 : kExitCheckFailed;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
