#include "chemopat/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "chemopat/version.hpp"

namespace chemopat {

std::string format_double(double v)
{
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

void write_csv(const std::string& path, const Table& table)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    auto write_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    write_row(table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::runtime_error("CSV row width does not match the header");
        write_row(row);
    }
    if (!out)
        throw std::runtime_error("failed while writing '" + path + "'");
}

Table read_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    Table table;
    std::string line;
    auto split = [](const std::string& text) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(text);
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (!text.empty() && text.back() == ',')
            cells.emplace_back();
        return cells;
    };
    if (!std::getline(in, line))
        throw std::runtime_error("'" + path + "' is empty");
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto cells = split(line);
        if (cells.size() != table.header.size())
            throw std::runtime_error("'" + path + "': row width does not match the header");
        table.rows.push_back(std::move(cells));
    }
    return table;
}

void write_profile_csv(const std::string& path, const SimulationState& state)
{
    Table table;
    table.header = {"x", "n", "c"};
    table.rows.reserve(state.grid.ncells);
    for (int i = 0; i < state.grid.ncells; ++i)
        table.rows.push_back({format_double(state.grid.x(i)), format_double(state.n[i]),
                              format_double(state.c[i])});
    write_csv(path, table);
}

namespace {

double parse_cell(const std::string& cell, const std::string& path)
{
    double v = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::runtime_error("'" + path + "': cannot parse number '" + cell + "'");
    return v;
}

} // namespace

SimulationState read_profile_csv(const std::string& path)
{
    const Table table = read_csv(path);
    int xi = -1, ni = -1, ci = -1;
    for (std::size_t j = 0; j < table.header.size(); ++j) {
        if (table.header[j] == "x")
            xi = static_cast<int>(j);
        else if (table.header[j] == "n")
            ni = static_cast<int>(j);
        else if (table.header[j] == "c")
            ci = static_cast<int>(j);
    }
    if (xi < 0 || ni < 0)
        throw std::runtime_error("'" + path + "': profile files need 'x' and 'n' columns");
    const int rows = static_cast<int>(table.rows.size());
    if (rows < 8)
        throw std::runtime_error("'" + path + "': too few rows for a grid (need >= 8)");

    std::vector<double> x(rows);
    SimulationState state;
    state.n.resize(rows);
    state.c.assign(rows, 0.0);
    for (int i = 0; i < rows; ++i) {
        x[i] = parse_cell(table.rows[i][xi], path);
        state.n[i] = parse_cell(table.rows[i][ni], path);
        if (ci >= 0)
            state.c[i] = parse_cell(table.rows[i][ci], path);
    }
    const double dx = rows > 1 ? x[1] - x[0] : 2.0 * x[0];
    if (!(dx > 0.0))
        throw std::runtime_error("'" + path + "': x column must be increasing");
    for (int i = 0; i < rows; ++i)
        if (std::abs(x[i] - (i + 0.5) * dx) > 1e-6 * std::max(1.0, std::abs(x[i])))
            throw std::runtime_error("'" + path +
                                     "': x column is not a uniform cell-centered grid");
    state.grid = Grid1D(dx * rows, rows);
    return state;
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& parameters,
                    const std::vector<std::string>& outputs,
                    const std::vector<std::string>& notes)
{
    nlohmann::ordered_json doc;
    doc["tool"] = "chemopat";
    doc["version"] = kVersion;
    doc["command"] = command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : parameters)
        params[key] = value;
    doc["parameters"] = std::move(params);
    doc["outputs"] = outputs;
    doc["notes"] = notes;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << doc.dump(2) << '\n';
}

} // namespace chemopat
