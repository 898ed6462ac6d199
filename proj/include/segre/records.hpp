#ifndef SEGRE_RECORDS_HPP
#define SEGRE_RECORDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <segre/rational.hpp>
#include <segre/universal.hpp>

namespace segre
{

struct OutputRecord {
    SurfaceInvariants invariants;
    std::size_t k = 0;
    Rational value;
    Route route = Route::engine;

    friend bool operator==(const OutputRecord &, const OutputRecord &) = default;
};

enum class OutputFormat { table, csv, json };

std::optional<Route> parse_route(std::string_view name);

// JSON: flat array of {"d","pi","kappa","e","k","route","value"} objects,
// value as an exact "p/q" string.
std::string records_to_json(const std::vector<OutputRecord> &records);
// CSV: header `d,pi,kappa,e,k,route,value`.
std::string records_to_csv(const std::vector<OutputRecord> &records);
// Aligned text; tuples that no surface realizes are marked "formal".
std::string records_to_table(const std::vector<OutputRecord> &records);
std::string format_records(const std::vector<OutputRecord> &records, OutputFormat format);

// Inverse of records_to_json / records_to_csv. Throw std::invalid_argument on malformed input.
std::vector<OutputRecord> records_from_json(std::string_view text);
std::vector<OutputRecord> records_from_csv(std::string_view text);

// A bare coefficient listing, as printed by `series`.
struct SeriesListing {
    std::string name;
    std::optional<SurfaceInvariants> invariants;
    std::vector<Rational> coefficients;
};

std::string format_series(const SeriesListing &listing, OutputFormat format);
SeriesListing series_from_json(std::string_view text);

} // namespace segre

#endif
