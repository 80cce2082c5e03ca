#ifndef CHEMOPAT_CSV_HPP
#define CHEMOPAT_CSV_HPP

#include <string>
#include <utility>
#include <vector>

#include "chemopat/solver.hpp"

namespace chemopat {

// Shortest decimal string that round-trips the value (via std::to_chars).
std::string format_double(double v);

// Minimal CSV representation: a header row plus string cells, no quoting
// (none of the emitted values contain commas).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Throws std::runtime_error when the file cannot be written / parsed.
void write_csv(const std::string& path, const Table& table);
Table read_csv(const std::string& path);

// Profile files: columns x, n, c (cell centers of a uniform grid).
void write_profile_csv(const std::string& path, const SimulationState& state);

// Rebuilds the grid from the x column (uniform spacing required); the time
// is not stored in the file and comes back as 0.
SimulationState read_profile_csv(const std::string& path);

// Machine-readable run manifest (JSON): tool name and version, the
// subcommand, its parameters in the given order, the files produced, and
// free-form notes (for example blow-up diagnostics). Deterministic output.
void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& parameters,
                    const std::vector<std::string>& outputs,
                    const std::vector<std::string>& notes = {});

} // namespace chemopat

#endif
