#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gbs/subsystem.hpp"

namespace gbs {

/*
 * Matrix text format (repo-wide): lines starting with '#' are comments,
 * blank lines are ignored, every other line is one row of '0'/'1'
 * characters. Ragged rows and foreign characters are rejected.
 */
BitMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BitMatrix& a);
BitMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const BitMatrix& a);

/*
 * Code file format:
 *   n=<int>
 *   layout:                  (optional block)
 *   <qubit> <row> <col> <layer>
 *   ...
 *   gauge:
 *   <one Pauli string per line, e.g. "X0 X1">
 */
std::string format_code(const SubsystemCode& code);
SubsystemCode parse_code(std::string_view text);
SubsystemCode load_code(const std::filesystem::path& path);
void save_code(const std::filesystem::path& path, const SubsystemCode& code);

/// JSON mirror: n, layout, gauge_generators and, when requested, the
/// derived block {dim_s, k, g, distance?}.
nlohmann::json code_to_json(const SubsystemCode& code, bool include_derived = true,
                            std::optional<std::size_t> distance = std::nullopt);
SubsystemCode code_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const BitMatrix& a);

/// FNV-1a 64-bit content hash, hex-encoded; used to fingerprint inputs in
/// CLI reports.
std::string fnv1a64_hex(std::string_view data);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace gbs
