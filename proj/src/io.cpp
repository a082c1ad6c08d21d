#include "smf/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace smf::io {

namespace {

/// Locale-independent fixed-point decimal with 6 fractional digits.
std::string format_fixed6(double value) {
    value += 0.0;  // canonicalize -0.0 (the y flip produces it constantly)
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 6);
    return std::string(buf.data(), res.ptr);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = line.find(sep, begin);
        if (end == std::string::npos) {
            out.push_back(line.substr(begin));
            return out;
        }
        out.push_back(line.substr(begin, end - begin));
        begin = end + 1;
    }
}

double parse_field(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw std::runtime_error("csv: bad numeric field '" + field + "' on line " +
                                 std::to_string(line_no));
    }
    return value;
}

/// Reads CSV rows below an already-consumed header. Each row must have
/// `width` fields; blank lines delimit groups.
std::vector<std::vector<std::array<double, 5>>> read_groups(std::istream& is, std::size_t width) {
    std::vector<std::vector<std::array<double, 5>>> groups;
    std::vector<std::array<double, 5>> current;
    std::string line;
    std::size_t line_no = 1;
    bool saw_row = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            if (!current.empty()) {
                groups.push_back(std::move(current));
                current.clear();
            }
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != width) {
            throw std::runtime_error("csv: expected " + std::to_string(width) +
                                     " fields on line " + std::to_string(line_no));
        }
        std::array<double, 5> row{};
        for (std::size_t i = 0; i < width; ++i) {
            row[i] = parse_field(fields[i], line_no);
        }
        current.push_back(row);
        saw_row = true;
    }
    if (!current.empty()) {
        groups.push_back(std::move(current));
    }
    (void)saw_row;
    return groups;
}

std::string read_header(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
        throw std::runtime_error("csv: empty input");
    }
    if (!header.empty() && header.back() == '\r') {
        header.pop_back();
    }
    return header;
}

}  // namespace

std::string format_double(double value) {
    value += 0.0;  // canonicalize -0.0 so zero prints as "0" everywhere
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

void emit_csv(const curves::Polyline& polyline, std::ostream& os) {
    os << "theta,x,y\n";
    bool first_run = true;
    for (const auto& run : polyline.runs) {
        if (!first_run) {
            os << '\n';
        }
        first_run = false;
        for (const auto& sample : run.samples) {
            os << format_double(sample.theta) << ',' << format_double(sample.point.x) << ','
               << format_double(sample.point.y) << '\n';
        }
    }
}

void emit_csv(const std::vector<mech::OscillatorSample>& series, std::ostream& os) {
    os << "t,theta,alpha,x,omega\n";
    for (const auto& s : series) {
        os << format_double(s.t) << ',' << format_double(s.theta) << ',' << format_double(s.alpha)
           << ',' << format_double(s.x) << ',' << format_double(s.omega) << '\n';
    }
}

void emit_plain(const curves::Polyline& polyline, std::ostream& os) {
    bool first_run = true;
    for (const auto& run : polyline.runs) {
        if (!first_run) {
            os << '\n';
        }
        first_run = false;
        for (const auto& sample : run.samples) {
            os << format_double(sample.theta) << ' ' << format_double(sample.point.x) << ' '
               << format_double(sample.point.y) << '\n';
        }
    }
}

void emit_plain(const std::vector<mech::OscillatorSample>& series, std::ostream& os) {
    for (const auto& s : series) {
        os << format_double(s.t) << ' ' << format_double(s.theta) << ' ' << format_double(s.alpha)
           << ' ' << format_double(s.x) << ' ' << format_double(s.omega) << '\n';
    }
}

void emit_svg(const curves::Polyline& polyline, std::ostream& os) {
    // SVG's y axis points down; emit (x, -y) so curves keep the usual
    // mathematical orientation.
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& run : polyline.runs) {
        for (const auto& sample : run.samples) {
            any = true;
            min_x = std::min(min_x, sample.point.x);
            max_x = std::max(max_x, sample.point.x);
            min_y = std::min(min_y, -sample.point.y);
            max_y = std::max(max_y, -sample.point.y);
        }
    }
    if (!any) {
        min_x = min_y = 0.0;
        max_x = max_y = 0.0;
    }

    const double width = max_x - min_x;
    const double height = max_y - min_y;
    double pad = 0.05 * std::max(width, height);
    if (!(pad > 0.0)) {
        pad = 1.0;  // degenerate bbox (single point or empty)
    }

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
       << format_fixed6(min_x - pad) << ' ' << format_fixed6(min_y - pad) << ' '
       << format_fixed6(width + 2.0 * pad) << ' ' << format_fixed6(height + 2.0 * pad) << "\">\n";
    for (const auto& run : polyline.runs) {
        if (run.samples.empty()) {
            continue;
        }
        os << "  <path d=\"";
        bool first = true;
        for (const auto& sample : run.samples) {
            os << (first ? "M " : " L ") << format_fixed6(sample.point.x) << ','
               << format_fixed6(-sample.point.y);
            first = false;
        }
        if (run.closed) {
            os << " Z";
        }
        os << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\" "
              "vector-effect=\"non-scaling-stroke\"/>\n";
    }
    os << "</svg>\n";
}

curves::Polyline parse_polyline_csv(std::istream& is) {
    if (const auto header = read_header(is); header != "theta,x,y") {
        throw std::runtime_error("csv: expected header 'theta,x,y', got '" + header + "'");
    }
    curves::Polyline out;
    for (const auto& group : read_groups(is, 3)) {
        curves::PolylineRun run;
        run.samples.reserve(group.size());
        for (const auto& row : group) {
            run.samples.push_back({row[0], {row[1], row[2]}});
        }
        out.runs.push_back(std::move(run));
    }
    return out;
}

std::vector<mech::OscillatorSample> parse_series_csv(std::istream& is) {
    if (const auto header = read_header(is); header != "t,theta,alpha,x,omega") {
        throw std::runtime_error("csv: expected header 't,theta,alpha,x,omega', got '" + header +
                                 "'");
    }
    std::vector<mech::OscillatorSample> out;
    for (const auto& group : read_groups(is, 5)) {
        for (const auto& row : group) {
            mech::OscillatorSample s;
            s.t = row[0];
            s.theta = row[1];
            s.alpha = row[2];
            s.x = row[3];
            s.omega = row[4];
            s.alpha_rk4 = s.alpha;
            out.push_back(s);
        }
    }
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (dir.empty()) {
        dir = ".";
    }
    const fs::path tmp =
        dir / (path.filename().string() + ".tmp." + std::to_string(::getpid()));

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open temporary file " + tmp.string());
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }

    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ec_rm;
        fs::remove(tmp, ec_rm);
        throw std::runtime_error("failed to move " + tmp.string() + " to " + path.string() + ": " +
                                 ec.message());
    }
}

}  // namespace smf::io
