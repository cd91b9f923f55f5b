#include "gbs/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gbs {

namespace {

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else if (ch != '\r') {
            current += ch;
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

bool is_blank(const std::string& s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
    std::vector<BitVector> rows;
    for (const auto& line : lines_of(text)) {
        if (is_blank(line) || line[0] == '#') continue;
        BitVector row(line.size());
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '1')
                row.set(i, true);
            else if (line[i] != '0')
                throw ParseError("matrix rows may contain only '0' and '1'");
        }
        if (!rows.empty() && row.size() != rows[0].size())
            throw ParseError("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix file has no rows");
    return BitMatrix::from_rows(std::move(rows));
}

std::string format_matrix(const BitMatrix& a) {
    std::string out;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out += a.row(r).to_string();
        out += '\n';
    }
    return out;
}

BitMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

void save_matrix(const std::filesystem::path& path, const BitMatrix& a) {
    write_file(path, format_matrix(a));
}

std::string format_code(const SubsystemCode& code) {
    std::ostringstream out;
    out << "n=" << code.n << '\n';
    if (code.layout) {
        out << "layout:\n";
        for (std::size_t q = 0; q < code.layout->positions.size(); ++q) {
            const CellPos& p = code.layout->positions[q];
            out << q << ' ' << p.row << ' ' << p.col << ' ' << p.layer << '\n';
        }
    }
    out << "gauge:\n";
    for (const auto& g : code.gauge_generators) out << g.to_string() << '\n';
    return out.str();
}

SubsystemCode parse_code(std::string_view text) {
    const auto lines = lines_of(text);
    std::size_t i = 0;
    auto next_line = [&]() -> const std::string* {
        while (i < lines.size() && (is_blank(lines[i]) || lines[i][0] == '#')) ++i;
        return i < lines.size() ? &lines[i] : nullptr;
    };

    const std::string* header = next_line();
    if (!header || header->rfind("n=", 0) != 0) throw ParseError("code file must start with n=<int>");
    std::size_t n = 0;
    try {
        n = std::stoul(header->substr(2));
    } catch (...) {
        throw ParseError("invalid qubit count in code file");
    }
    ++i;

    std::optional<Layout> layout;
    const std::string* section = next_line();
    if (section && *section == "layout:") {
        ++i;
        Layout l;
        l.positions.assign(n, CellPos{});
        std::vector<bool> seen(n, false);
        while (const std::string* line = next_line()) {
            if (*line == "gauge:") break;
            std::istringstream ss(*line);
            std::size_t q;
            std::int64_t row, col;
            int layer;
            if (!(ss >> q >> row >> col >> layer)) throw ParseError("bad layout line");
            if (q >= n) throw ParseError("layout qubit index out of range");
            if (seen[q]) throw ParseError("duplicate layout entry");
            seen[q] = true;
            l.positions[q] = {row, col, layer};
            ++i;
        }
        for (bool s : seen)
            if (!s) throw ParseError("layout does not cover all qubits");
        for (const auto& p : l.positions) {
            if (p.row < 0 || p.col < 0) throw ParseError("layout coordinates must be non-negative");
            l.grid_rows = std::max(l.grid_rows, static_cast<std::size_t>(p.row) + 1);
            l.grid_cols = std::max(l.grid_cols, static_cast<std::size_t>(p.col) + 1);
        }
        l.validate();
        layout = std::move(l);
        section = next_line();
    }

    if (!section || *section != "gauge:") throw ParseError("code file missing gauge: section");
    ++i;
    std::vector<PauliOp> gens;
    while (const std::string* line = next_line()) {
        gens.push_back(PauliOp::parse(*line, n));
        ++i;
    }
    return derive_code(n, std::move(gens), std::move(layout));
}

SubsystemCode load_code(const std::filesystem::path& path) { return parse_code(read_file(path)); }

void save_code(const std::filesystem::path& path, const SubsystemCode& code) {
    write_file(path, format_code(code));
}

nlohmann::json code_to_json(const SubsystemCode& code, bool include_derived,
                            std::optional<std::size_t> distance) {
    nlohmann::json j;
    j["n"] = code.n;
    if (code.layout) {
        nlohmann::json positions = nlohmann::json::array();
        for (std::size_t q = 0; q < code.layout->positions.size(); ++q) {
            const CellPos& p = code.layout->positions[q];
            positions.push_back({{"qubit", q}, {"row", p.row}, {"col", p.col}, {"layer", p.layer}});
        }
        j["layout"] = {{"grid_rows", code.layout->grid_rows},
                       {"grid_cols", code.layout->grid_cols},
                       {"positions", positions}};
    }
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : code.gauge_generators) gens.push_back(g.to_string());
    j["gauge_generators"] = gens;
    if (include_derived) {
        nlohmann::json derived;
        derived["dim_s"] = code.stabilizer.dim();
        derived["k"] = code.k;
        derived["g"] = code.g;
        if (distance) derived["distance"] = *distance;
        j["derived"] = derived;
    }
    return j;
}

SubsystemCode code_from_json(const nlohmann::json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::optional<Layout> layout;
    if (j.contains("layout")) {
        Layout l;
        l.grid_rows = j["layout"].value("grid_rows", std::size_t(0));
        l.grid_cols = j["layout"].value("grid_cols", std::size_t(0));
        l.positions.assign(n, CellPos{});
        for (const auto& e : j["layout"].at("positions")) {
            const std::size_t q = e.at("qubit").get<std::size_t>();
            if (q >= n) throw ParseError("layout qubit index out of range");
            l.positions[q] = {e.at("row").get<std::int64_t>(), e.at("col").get<std::int64_t>(),
                              e.at("layer").get<int>()};
        }
        l.validate();
        layout = std::move(l);
    }
    std::vector<PauliOp> gens;
    for (const auto& s : j.at("gauge_generators")) gens.push_back(PauliOp::parse(s.get<std::string>(), n));
    return derive_code(n, std::move(gens), std::move(layout));
}

nlohmann::json matrix_to_json(const BitMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r).to_string());
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", rows}};
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace gbs
