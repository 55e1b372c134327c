#include "gwva/grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gwva/errors.hpp"
#include "gwva/kernels.hpp"

namespace gwva {

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

double parse_number(std::string_view token, std::size_t line_no)
{
    double v = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw input_error("line " + std::to_string(line_no) +
                          ": non-numeric token '" + std::string(token) + "'");
    return v;
}

// Shortest representation that parses back to the same double.
std::string format_number(double v)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

bool GridHeader::same_geometry(const GridHeader& other) const
{
    return describe_mismatch(other).empty();
}

std::string GridHeader::describe_mismatch(const GridHeader& other) const
{
    std::string diff;
    auto add = [&diff](const char* name) {
        if (!diff.empty())
            diff += ", ";
        diff += name;
    };
    if (ncols != other.ncols)
        add("ncols");
    if (nrows != other.nrows)
        add("nrows");
    if (xllcorner != other.xllcorner)
        add("xllcorner");
    if (yllcorner != other.yllcorner)
        add("yllcorner");
    if (cellsize != other.cellsize)
        add("cellsize");
    if (nodata != other.nodata)
        add("NODATA_value");
    return diff;
}

Grid::Grid(GridHeader header, std::vector<double> values)
    : header_(header), values_(std::move(values))
{
    if (header_.ncols < 1 || header_.nrows < 1)
        throw input_error("grid dimensions must be at least 1x1");
    if (!(header_.cellsize > 0.0))
        throw input_error("cellsize must be positive");
    const std::size_t expected =
        static_cast<std::size_t>(header_.ncols) * header_.nrows;
    if (values_.size() != expected)
        throw input_error("wrong value count: expected " +
                          std::to_string(expected) + ", got " +
                          std::to_string(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]) && values_[i] != header_.nodata)
            throw input_error("non-finite value at cell " + std::to_string(i));
}

Grid Grid::filled(const GridHeader& header, double v)
{
    const std::size_t n = static_cast<std::size_t>(header.ncols) * header.nrows;
    return Grid(header, std::vector<double>(n, v));
}

bool Grid::contains(double x, double y) const
{
    return x >= header_.xllcorner &&
           x < header_.xllcorner + header_.ncols * header_.cellsize &&
           y >= header_.yllcorner &&
           y < header_.yllcorner + header_.nrows * header_.cellsize;
}

std::size_t Grid::count_valid() const
{
    double mn = 0.0, mx = 0.0;
    std::size_t n_valid = 0;
    kernels::minmax_valid(values_.data(), values_.size(), header_.nodata, mn,
                          mx, n_valid);
    return n_valid;
}

std::optional<std::pair<double, double>> Grid::value_range() const
{
    double mn = 0.0, mx = 0.0;
    std::size_t n_valid = 0;
    kernels::minmax_valid(values_.data(), values_.size(), header_.nodata, mn,
                          mx, n_valid);
    if (n_valid == 0)
        return std::nullopt;
    return std::make_pair(mn, mx);
}

std::vector<double> Grid::valid_values() const
{
    std::vector<double> out;
    out.reserve(values_.size());
    for (double v : values_)
        if (v != header_.nodata)
            out.push_back(v);
    return out;
}

bool Grid::operator==(const Grid& other) const
{
    return header_.same_geometry(other.header_) && values_ == other.values_;
}

Grid read_ascii_grid(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    GridHeader header;
    bool seen[6] = {false, false, false, false, false, false};
    int header_lines = 0;
    while (header_lines < 6) {
        if (!std::getline(in, line))
            throw input_error("line " + std::to_string(line_no + 1) +
                              ": unexpected end of document inside header");
        ++line_no;
        std::istringstream ls(line);
        std::string key, value, extra;
        if (!(ls >> key))
            continue; // blank line
        if (!(ls >> value) || (ls >> extra))
            throw input_error("line " + std::to_string(line_no) +
                              ": header line must be 'keyword value'");
        const std::string k = lower(key);
        if (k == "xllcenter" || k == "yllcenter")
            throw input_error("line " + std::to_string(line_no) +
                              ": center-registered grids are not supported "
                              "(use xllcorner/yllcorner)");
        int slot;
        if (k == "ncols")
            slot = 0;
        else if (k == "nrows")
            slot = 1;
        else if (k == "xllcorner")
            slot = 2;
        else if (k == "yllcorner")
            slot = 3;
        else if (k == "cellsize")
            slot = 4;
        else if (k == "nodata_value")
            slot = 5;
        else
            throw input_error("line " + std::to_string(line_no) +
                              ": malformed header keyword '" + key + "'");
        if (seen[slot])
            throw input_error("line " + std::to_string(line_no) +
                              ": duplicate header keyword '" + key + "'");
        seen[slot] = true;
        const double num = parse_number(value, line_no);
        if ((slot == 0 || slot == 1) && num != std::floor(num))
            throw input_error("line " + std::to_string(line_no) + ": " + k +
                              " must be an integer");
        switch (slot) {
        case 0: header.ncols = static_cast<int>(num); break;
        case 1: header.nrows = static_cast<int>(num); break;
        case 2: header.xllcorner = num; break;
        case 3: header.yllcorner = num; break;
        case 4: header.cellsize = num; break;
        case 5: header.nodata = num; break;
        }
        ++header_lines;
    }
    if (header.ncols < 1 || header.nrows < 1)
        throw input_error("grid dimensions must be at least 1x1");
    if (!(header.cellsize > 0.0))
        throw input_error("cellsize must be positive");

    const std::size_t expected =
        static_cast<std::size_t>(header.ncols) * header.nrows;
    std::vector<double> values;
    values.reserve(expected);
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string token;
        while (ls >> token) {
            if (values.size() == expected)
                throw input_error("wrong value count: more than " +
                                  std::to_string(expected) +
                                  " values (line " + std::to_string(line_no) +
                                  ")");
            values.push_back(parse_number(token, line_no));
        }
    }
    if (values.size() != expected)
        throw input_error("wrong value count: expected " +
                          std::to_string(expected) + " values, got " +
                          std::to_string(values.size()));
    return Grid(header, std::move(values));
}

Grid read_ascii_grid_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error("cannot open grid file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return read_ascii_grid(buf.str());
    } catch (const input_error& e) {
        throw input_error(path.string() + ": " + e.what());
    }
}

std::string write_ascii_grid(const Grid& g)
{
    const GridHeader& h = g.header();
    std::string out;
    out += "ncols " + std::to_string(h.ncols) + "\n";
    out += "nrows " + std::to_string(h.nrows) + "\n";
    out += "xllcorner " + format_number(h.xllcorner) + "\n";
    out += "yllcorner " + format_number(h.yllcorner) + "\n";
    out += "cellsize " + format_number(h.cellsize) + "\n";
    out += "NODATA_value " + format_number(h.nodata) + "\n";
    const auto values = g.values();
    for (int r = 0; r < h.nrows; ++r) {
        for (int c = 0; c < h.ncols; ++c) {
            if (c > 0)
                out += ' ';
            out += format_number(values[static_cast<std::size_t>(r) * h.ncols + c]);
        }
        out += '\n';
    }
    return out;
}

void write_ascii_grid_file(const Grid& g, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot create grid file: " + path.string());
    out << write_ascii_grid(g);
    if (!out)
        throw input_error("failed writing grid file: " + path.string());
}

Grid map_cells(const Grid& g, const std::function<double(double)>& f)
{
    std::vector<double> out(g.values().begin(), g.values().end());
    const double nodata = g.nodata();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] == nodata)
            continue;
        const double r = f(out[i]);
        if (!std::isfinite(r))
            throw compute_error("map_cells produced a non-finite value at cell " +
                                std::to_string(i));
        out[i] = r;
    }
    return Grid(g.header(), std::move(out));
}

Grid weighted_sum(std::span<const WeightedLayer> layers)
{
    if (layers.empty())
        throw input_error("weighted_sum requires at least one layer");
    const GridHeader& h = layers[0].grid->header();
    std::vector<const double*> ptrs;
    std::vector<double> weights;
    ptrs.reserve(layers.size());
    weights.reserve(layers.size());
    for (const WeightedLayer& wl : layers) {
        const std::string diff = h.describe_mismatch(wl.grid->header());
        if (!diff.empty())
            throw input_error("weighted_sum header mismatch: " + diff);
        ptrs.push_back(wl.grid->values().data());
        weights.push_back(wl.weight);
    }
    const std::size_t n = static_cast<std::size_t>(h.ncols) * h.nrows;
    std::vector<double> out(n);
    kernels::weighted_sum(ptrs.data(), weights.data(), ptrs.size(), h.nodata,
                          out.data(), n);
    return Grid(h, std::move(out));
}

std::optional<double> sample_at(const Grid& g, double x, double y)
{
    if (!g.contains(x, y))
        throw compute_error("sample point (" + format_number(x) + ", " +
                            format_number(y) + ") lies outside the grid extent");
    const GridHeader& h = g.header();
    const int col = static_cast<int>(std::floor((x - h.xllcorner) / h.cellsize));
    const int row_from_bottom =
        static_cast<int>(std::floor((y - h.yllcorner) / h.cellsize));
    const int row = h.nrows - 1 - row_from_bottom;
    const double v = g.at(row, col);
    if (g.is_nodata(v))
        return std::nullopt;
    return v;
}

} // namespace gwva
