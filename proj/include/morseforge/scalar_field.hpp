#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "morseforge/cell_complex.hpp"

namespace morseforge {

/// Vertex-sampled scalar field with the simulation-of-simplicity total order:
/// vertices compare by (value, vertex index) lexicographically, which makes
/// every comparison strict even with repeated values. Cells take the value of
/// their maximum vertex under this order.
class ScalarField {
  public:
    explicit ScalarField(std::vector<double> values);

    std::int32_t vertex_count() const { return static_cast<std::int32_t>(values_.size()); }
    double value(std::int32_t v) const { return values_[v]; }
    const std::vector<double>& values() const { return values_; }

    /// Position of v in the ascending vertex order; injective.
    std::int32_t rank(std::int32_t v) const { return rank_[v]; }
    std::int32_t vertex_at_rank(std::int32_t r) const { return vertex_at_rank_[r]; }
    bool vertex_below(std::int32_t u, std::int32_t v) const { return rank_[u] < rank_[v]; }

    void ensure_matches(const CellComplex& complex) const;

    std::int32_t max_vertex(const CellComplex& complex, CellId cell) const;
    double cell_value(const CellComplex& complex, CellId cell) const;

    /// Vertex ranks of the cell, descending; unused slots are -1. With both
    /// tuples descending and -1 padding, plain lexicographic comparison sorts
    /// faces before cofaces inside a lower star.
    std::array<std::int32_t, 3> cell_tuple(const CellComplex& complex, CellId cell) const;
    bool cell_before(const CellComplex& complex, CellId a, CellId b) const;

    /// All cells whose maximum vertex is v. Lower stars partition the complex.
    std::vector<CellId> lower_star(const CellComplex& complex, std::int32_t v) const;

  private:
    std::vector<double> values_;
    std::vector<std::int32_t> rank_;
    std::vector<std::int32_t> vertex_at_rank_;
};

/// Reads "vertex_id,value" rows (header optional). Requires every vertex of
/// the complex to appear exactly once.
ScalarField load_field(const CellComplex& complex, const std::string& csv_path);

}  // namespace morseforge
