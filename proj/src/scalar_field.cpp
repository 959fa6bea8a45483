#include "morseforge/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

namespace morseforge {

ScalarField::ScalarField(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
        if (!std::isfinite(values_[v])) {
            throw MorseError(ErrorKind::NonFiniteValue,
                             "vertex " + std::to_string(v) + " has a non-finite value");
        }
    }
    vertex_at_rank_.resize(values_.size());
    std::iota(vertex_at_rank_.begin(), vertex_at_rank_.end(), 0);
    std::sort(vertex_at_rank_.begin(), vertex_at_rank_.end(), [&](std::int32_t a, std::int32_t b) {
        if (values_[a] != values_[b]) return values_[a] < values_[b];
        return a < b;
    });
    rank_.resize(values_.size());
    for (std::int32_t r = 0; r < static_cast<std::int32_t>(vertex_at_rank_.size()); ++r) {
        rank_[vertex_at_rank_[r]] = r;
    }
}

void ScalarField::ensure_matches(const CellComplex& complex) const {
    if (vertex_count() != complex.vertex_count()) {
        throw MorseError(ErrorKind::LengthMismatch,
                         "field has " + std::to_string(vertex_count()) + " values, complex has " +
                             std::to_string(complex.vertex_count()) + " vertices");
    }
}

std::int32_t ScalarField::max_vertex(const CellComplex& complex, CellId cell) const {
    std::int32_t best = -1;
    for (std::int32_t v : complex.cell_vertices(cell)) {
        if (best < 0 || rank_[v] > rank_[best]) best = v;
    }
    return best;
}

double ScalarField::cell_value(const CellComplex& complex, CellId cell) const {
    return values_[max_vertex(complex, cell)];
}

std::array<std::int32_t, 3> ScalarField::cell_tuple(const CellComplex& complex, CellId cell) const {
    std::array<std::int32_t, 3> tuple{-1, -1, -1};
    auto vs = complex.cell_vertices(cell);
    for (std::size_t i = 0; i < vs.size(); ++i) tuple[i] = rank_[vs[i]];
    std::sort(tuple.begin(), tuple.begin() + vs.size(), std::greater<std::int32_t>());
    return tuple;
}

bool ScalarField::cell_before(const CellComplex& complex, CellId a, CellId b) const {
    auto ta = cell_tuple(complex, a);
    auto tb = cell_tuple(complex, b);
    if (ta != tb) return ta < tb;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.index < b.index;
}

std::vector<CellId> ScalarField::lower_star(const CellComplex& complex, std::int32_t v) const {
    std::vector<CellId> star{vertex_cell(v)};
    for (std::int32_t e : complex.vertex_edges(v)) {
        if (max_vertex(complex, edge_cell(e)) == v) star.push_back(edge_cell(e));
    }
    for (std::int32_t t : complex.vertex_triangles(v)) {
        if (max_vertex(complex, triangle_cell(t)) == v) star.push_back(triangle_cell(t));
    }
    return star;
}

ScalarField load_field(const CellComplex& complex, const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw MorseError(ErrorKind::ParseError, "cannot open field file " + csv_path);

    std::vector<double> values(complex.vertex_count(), 0.0);
    std::vector<bool> seen(complex.vertex_count(), false);
    std::string line;
    std::size_t line_no = 0;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string id_text, value_text;
        if (!std::getline(row, id_text, ',') || !std::getline(row, value_text)) {
            throw MorseError(ErrorKind::ParseError,
                             csv_path + ":" + std::to_string(line_no) + ": expected vertex_id,value");
        }
        if (line_no == 1 && id_text == "vertex_id") continue;
        std::int64_t id = 0;
        double value = 0.0;
        try {
            std::size_t used = 0;
            id = std::stoll(id_text, &used);
            if (used != id_text.size()) throw std::invalid_argument(id_text);
            value = std::stod(value_text, &used);
        } catch (const std::exception&) {
            throw MorseError(ErrorKind::ParseError,
                             csv_path + ":" + std::to_string(line_no) + ": bad row '" + line + "'");
        }
        if (!std::isfinite(value)) {
            throw MorseError(ErrorKind::NonFiniteValue,
                             csv_path + ":" + std::to_string(line_no) + ": non-finite value");
        }
        if (id < 0 || id >= complex.vertex_count()) {
            throw MorseError(ErrorKind::LengthMismatch,
                             csv_path + ":" + std::to_string(line_no) + ": vertex id " +
                                 std::to_string(id) + " outside the complex");
        }
        if (seen[id]) {
            throw MorseError(ErrorKind::LengthMismatch,
                             csv_path + ": vertex " + std::to_string(id) + " listed twice");
        }
        seen[id] = true;
        values[id] = value;
        ++rows;
    }
    if (rows != static_cast<std::size_t>(complex.vertex_count())) {
        throw MorseError(ErrorKind::LengthMismatch,
                         csv_path + ": " + std::to_string(rows) + " rows for " +
                             std::to_string(complex.vertex_count()) + " vertices");
    }
    return ScalarField(std::move(values));
}

}  // namespace morseforge
