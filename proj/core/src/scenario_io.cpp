#include "dsm/scenario_io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "dsm/errors.hpp"

namespace dsm {
namespace {

using json = nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& where) {
    const std::string path = where.empty() ? key : where + "." + key;
    if (!obj.is_object()) {
        throw ParseError("`" + where + "` must be an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError("missing field `" + path + "`");
    }
    return *it;
}

double number(const json& obj, const std::string& key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) {
        throw ParseError("field `" + where + "." + key + "` must be a number");
    }
    return v.get<double>();
}

Point2 point(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ParseError("field `" + path + "` must be a [x, y] pair of numbers");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

MediumParams parse_medium(const json& j) {
    MediumParams m;
    m.eps_rel_background = number(j, "eps_rel", "medium");
    m.sigma_background = number(j, "sigma", "medium");
    m.frequency = number(j, "frequency_hz", "medium");
    if (j.contains("mu")) {
        m.mu = number(j, "mu", "medium");
    }
    return m;
}

AntennaArray parse_array(const json& j) {
    if (!j.is_object()) {
        throw ParseError("`array` must be an object");
    }
    if (j.contains("n")) {
        const json& n = j.at("n");
        if (!n.is_number_integer()) {
            throw ParseError("field `array.n` must be an integer");
        }
        return AntennaArray::polar(n.get<int>(), number(j, "radius_m", "array"), number(j, "tx_angle_rad", "array"));
    }
    const Point2 tx = point(require(j, "tx", "array"), "array.tx");
    const json& rx = require(j, "rx", "array");
    if (!rx.is_array()) {
        throw ParseError("field `array.rx` must be a list of [x, y] points");
    }
    std::vector<Point2> points;
    for (std::size_t n = 0; n < rx.size(); ++n) {
        points.push_back(point(rx[n], "array.rx[" + std::to_string(n) + "]"));
    }
    return AntennaArray::explicit_points(tx, std::move(points));
}

std::vector<Anomaly> parse_anomalies(const json& j) {
    if (!j.is_array()) {
        throw ParseError("field `anomalies` must be a list");
    }
    std::vector<Anomaly> out;
    for (std::size_t l = 0; l < j.size(); ++l) {
        const std::string where = "anomalies[" + std::to_string(l) + "]";
        Anomaly a;
        a.center = point(require(j[l], "center_m", where), where + ".center_m");
        a.radius = number(j[l], "radius_m", where);
        a.eps_rel = number(j[l], "eps_rel", where);
        a.sigma = number(j[l], "sigma", where);
        out.push_back(a);
    }
    return out;
}

void parse_options(const json& j, Scenario& s) {
    if (!j.is_object()) {
        throw ParseError("`options` must be an object");
    }
    if (j.contains("contrast_mode")) {
        const auto mode = j.at("contrast_mode").get<std::string>();
        if (mode == "sigma_ratio") {
            s.contrast_mode = ContrastMode::sigma_ratio;
        } else if (mode == "conventional") {
            s.contrast_mode = ContrastMode::conventional;
        } else {
            throw ParseError("field `options.contrast_mode` must be \"sigma_ratio\" or \"conventional\"");
        }
    }
    if (j.contains("field_mode")) {
        const auto mode = j.at("field_mode").get<std::string>();
        if (mode == "exact") {
            s.field_mode = FieldMode::exact;
        } else if (mode == "asymptotic") {
            s.field_mode = FieldMode::asymptotic;
        } else if (mode != "auto") {
            throw ParseError("field `options.field_mode` must be \"auto\", \"exact\" or \"asymptotic\"");
        }
    }
    if (j.contains("noise")) {
        const json& noise = j.at("noise");
        NoiseOptions opts;
        opts.snr_db = number(noise, "snr_db", "options.noise");
        const json& seed = require(noise, "seed", "options.noise");
        if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
            throw ParseError("field `options.noise.seed` must be a non-negative integer");
        }
        opts.seed = seed.get<std::uint64_t>();
        s.noise = opts;
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view field, std::size_t line) {
    double v = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("line " + std::to_string(line) + ": cannot parse number `" + std::string(field) + "`");
    }
    return v;
}

std::vector<std::string_view> split_row(std::string_view row) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = row.find(',', start);
        out.push_back(row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

// Rows of a CSV with a fixed header and `columns` numeric fields per row.
std::vector<std::vector<double>> parse_numeric_csv(std::string_view text, std::string_view header,
                                                   std::size_t columns) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    bool seen_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!seen_header) {
            if (line != header) {
                throw ParseError("expected CSV header `" + std::string(header) + "`");
            }
            seen_header = true;
            continue;
        }
        const auto fields = split_row(line);
        if (fields.size() != columns) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(columns) + " fields");
        }
        std::vector<double> row;
        for (auto f : fields) {
            row.push_back(parse_double(f, line_no));
        }
        rows.push_back(std::move(row));
    }
    if (!seen_header) {
        throw ParseError("empty CSV: missing header `" + std::string(header) + "`");
    }
    return rows;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ParseError("scenario root must be an object");
    }
    Scenario s;
    try {
        s.medium = parse_medium(require(root, "medium", ""));
        s.array = parse_array(require(root, "array", ""));
        s.anomalies = parse_anomalies(require(root, "anomalies", ""));
        const json& search = require(root, "search", "");
        s.search_radius = number(search, "radius_m", "search");
        s.grid_step = number(search, "step_m", "search");
        if (root.contains("options")) {
            parse_options(root.at("options"), s);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("scenario field has the wrong type: ") + e.what());
    }
    s.validate();
    if (s.field_mode == FieldMode::exact && wavenumber(s.medium).lossy()) {
        throw ValidationError("options.field_mode \"exact\" requires a lossless medium (medium.sigma = 0)");
    }
    return s;
}

Scenario read_scenario(const std::filesystem::path& path) {
    return parse_scenario(read_text_file(path));
}

std::string format_sparams_csv(const SParamSet& s) {
    std::string out = "n,re,im\n";
    for (std::size_t n = 0; n < s.values.size(); ++n) {
        out += std::to_string(n + 1) + "," + format_double(s.values[n].real()) + "," +
               format_double(s.values[n].imag()) + "\n";
    }
    return out;
}

SParamSet parse_sparams_csv(std::string_view text) {
    const auto rows = parse_numeric_csv(text, "n,re,im", 3);
    SParamSet s;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][0] != static_cast<double>(r + 1)) {
            throw ParseError("S-parameter rows must be numbered 1..N in order (row " + std::to_string(r + 1) + ")");
        }
        s.values.emplace_back(rows[r][1], rows[r][2]);
    }
    return s;
}

void write_sparams_csv(const SParamSet& s, const std::filesystem::path& path) {
    write_file_atomic(path, format_sparams_csv(s));
}

SParamSet read_sparams_csv(const std::filesystem::path& path) {
    return parse_sparams_csv(read_text_file(path));
}

std::string format_map_csv(const IndicatorMap& map) {
    std::string out = "x,y,value\n";
    for (std::size_t p = 0; p < map.values.size(); ++p) {
        out += format_double(map.grid.points[p].x) + "," + format_double(map.grid.points[p].y) + "," +
               format_double(map.values[p]) + "\n";
    }
    return out;
}

std::pair<int, int> pgm_pixel_of(const DiskGrid& grid, std::size_t index) {
    const LatticeIndex node = grid.lattice.at(index);
    return {grid.half_extent - node.j, node.i + grid.half_extent};
}

std::string format_map_pgm(const IndicatorMap& map) {
    const auto& grid = map.grid;
    const int width = grid.raster_width();
    std::vector<int> pixels(static_cast<std::size_t>(width) * static_cast<std::size_t>(width), 0);
    for (std::size_t p = 0; p < map.values.size(); ++p) {
        const auto [row, col] = pgm_pixel_of(grid, p);
        const double v = std::clamp(map.values[p], 0.0, 1.0);
        pixels[static_cast<std::size_t>(row * width + col)] = static_cast<int>(std::lround(255.0 * v));
    }
    std::ostringstream out;
    out << "P2\n" << width << ' ' << width << "\n255\n";
    for (int row = 0; row < width; ++row) {
        for (int col = 0; col < width; ++col) {
            out << pixels[static_cast<std::size_t>(row * width + col)] << (col + 1 < width ? ' ' : '\n');
        }
    }
    return out.str();
}

void write_map(const IndicatorMap& map, const std::filesystem::path& path, MapFormat format) {
    if (map.values.empty()) {
        throw UsageError("write_map: map is empty");
    }
    write_file_atomic(path, format == MapFormat::csv ? format_map_csv(map) : format_map_pgm(map));
}

std::vector<MapSample> parse_map_csv(std::string_view text) {
    std::vector<MapSample> out;
    for (const auto& row : parse_numeric_csv(text, "x,y,value", 3)) {
        out.push_back({{row[0], row[1]}, row[2]});
    }
    return out;
}

std::vector<MapSample> read_map_csv(const std::filesystem::path& path) {
    return parse_map_csv(read_text_file(path));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open `" + tmp.string() + "` for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("failed writing `" + tmp.string() + "`");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move output into place at `" + path.string() + "`");
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open `" + path.string() + "`");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace dsm
