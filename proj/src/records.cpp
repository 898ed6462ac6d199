#include <segre/records.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace segre
{

using json = nlohmann::ordered_json;

std::optional<Route> parse_route(std::string_view name)
{
    for (Route r : {Route::closed, Route::engine, Route::lehn}) {
        if (to_string(r) == name) {
            return r;
        }
    }
    return std::nullopt;
}

namespace
{

json invariants_json(const SurfaceInvariants &inv)
{
    return {{"d", inv.d}, {"pi", inv.pi}, {"kappa", inv.kappa}, {"e", inv.e}};
}

SurfaceInvariants invariants_from(const json &j)
{
    return {j.at("d").get<std::int64_t>(), j.at("pi").get<std::int64_t>(), j.at("kappa").get<std::int64_t>(),
            j.at("e").get<std::int64_t>()};
}

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::int64_t parse_int(const std::string &s)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw std::invalid_argument("malformed integer: '" + s + "'");
    }
    return v;
}

Route route_or_throw(std::string_view name)
{
    const auto r = parse_route(name);
    if (!r) {
        throw std::invalid_argument("unknown route: '" + std::string(name) + "'");
    }
    return *r;
}

} // namespace

std::string records_to_json(const std::vector<OutputRecord> &records)
{
    json arr = json::array();
    for (const auto &r : records) {
        json obj = invariants_json(r.invariants);
        obj["k"] = r.k;
        obj["route"] = std::string(to_string(r.route));
        obj["value"] = r.value.to_string();
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<OutputRecord> &records)
{
    std::ostringstream os;
    os << "d,pi,kappa,e,k,route,value\n";
    for (const auto &r : records) {
        const auto &inv = r.invariants;
        os << inv.d << ',' << inv.pi << ',' << inv.kappa << ',' << inv.e << ',' << r.k << ',' << to_string(r.route)
           << ',' << r.value << '\n';
    }
    return os.str();
}

std::string records_to_table(const std::vector<OutputRecord> &records)
{
    std::ostringstream os;
    os << std::left << std::setw(6) << "d" << std::setw(6) << "pi" << std::setw(7) << "kappa" << std::setw(6) << "e"
       << std::setw(4) << "k" << std::setw(8) << "route" << "value\n";
    for (const auto &r : records) {
        const auto &inv = r.invariants;
        os << std::setw(6) << inv.d << std::setw(6) << inv.pi << std::setw(7) << inv.kappa << std::setw(6) << inv.e
           << std::setw(4) << r.k << std::setw(8) << to_string(r.route) << r.value;
        if (!inv.is_geometric()) {
            os << "  (formal)";
        }
        os << '\n';
    }
    return os.str();
}

std::string format_records(const std::vector<OutputRecord> &records, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        return records_to_csv(records);
    case OutputFormat::json:
        return records_to_json(records);
    case OutputFormat::table:
        break;
    }
    return records_to_table(records);
}

std::vector<OutputRecord> records_from_json(std::string_view text)
{
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception &ex) {
        throw std::invalid_argument(std::string("malformed JSON: ") + ex.what());
    }
    if (!arr.is_array()) {
        throw std::invalid_argument("expected a JSON array of records");
    }
    std::vector<OutputRecord> out;
    for (const auto &obj : arr) {
        try {
            out.push_back({invariants_from(obj), obj.at("k").get<std::size_t>(),
                           Rational::parse(obj.at("value").get<std::string>()),
                           route_or_throw(obj.at("route").get<std::string>())});
        } catch (const json::exception &ex) {
            throw std::invalid_argument(std::string("malformed record: ") + ex.what());
        }
    }
    return out;
}

std::vector<OutputRecord> records_from_csv(std::string_view text)
{
    std::vector<OutputRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "d,pi,kappa,e,k,route,value") {
        throw std::invalid_argument("missing CSV header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 7) {
            throw std::invalid_argument("expected 7 CSV fields: '" + line + "'");
        }
        const auto k = parse_int(f[4]);
        if (k < 0) {
            throw std::invalid_argument("negative k in CSV: '" + line + "'");
        }
        out.push_back({{parse_int(f[0]), parse_int(f[1]), parse_int(f[2]), parse_int(f[3])},
                       static_cast<std::size_t>(k),
                       Rational::parse(f[6]),
                       route_or_throw(f[5])});
    }
    return out;
}

std::string format_series(const SeriesListing &listing, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::csv:
        os << "k,value\n";
        for (std::size_t k = 0; k < listing.coefficients.size(); ++k) {
            os << k << ',' << listing.coefficients[k] << '\n';
        }
        break;
    case OutputFormat::json: {
        json obj;
        obj["series"] = listing.name;
        obj["order"] = listing.coefficients.empty() ? 0 : listing.coefficients.size() - 1;
        if (listing.invariants) {
            obj["invariants"] = invariants_json(*listing.invariants);
        }
        json coeffs = json::array();
        for (const auto &c : listing.coefficients) {
            coeffs.push_back(c.to_string());
        }
        obj["coefficients"] = std::move(coeffs);
        os << obj.dump(2) << '\n';
        break;
    }
    case OutputFormat::table:
        for (const auto &c : listing.coefficients) {
            os << c << '\n';
        }
        break;
    }
    return os.str();
}

SeriesListing series_from_json(std::string_view text)
{
    try {
        const json obj = json::parse(text);
        SeriesListing listing;
        listing.name = obj.at("series").get<std::string>();
        if (obj.contains("invariants")) {
            listing.invariants = invariants_from(obj.at("invariants"));
        }
        for (const auto &c : obj.at("coefficients")) {
            listing.coefficients.push_back(Rational::parse(c.get<std::string>()));
        }
        return listing;
    } catch (const json::exception &ex) {
        throw std::invalid_argument(std::string("malformed series JSON: ") + ex.what());
    }
}

} // namespace segre
