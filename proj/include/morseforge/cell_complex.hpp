#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "morseforge/errors.hpp"

namespace morseforge {

/// Address of a cell: dimension (0, 1, 2) plus index into that dimension's
/// cell list. Vertex-tuple identities live in the owning CellComplex.
struct CellId {
    std::int8_t dim = 0;
    std::int32_t index = 0;

    friend bool operator==(const CellId& a, const CellId& b) {
        return a.dim == b.dim && a.index == b.index;
    }
    friend bool operator!=(const CellId& a, const CellId& b) { return !(a == b); }
    friend bool operator<(const CellId& a, const CellId& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.index < b.index;
    }
};

inline CellId vertex_cell(std::int32_t v) { return CellId{0, v}; }
inline CellId edge_cell(std::int32_t e) { return CellId{1, e}; }
inline CellId triangle_cell(std::int32_t t) { return CellId{2, t}; }

/// Simplicial complex of dimension at most 2. Faces and cofaces are stored
/// both ways and kept mutually inverse; implied edges of triangles are
/// instantiated exactly once. Boundary cells are flagged at build time:
/// an edge is boundary iff it has exactly one triangle coface, a vertex iff
/// it lies on a boundary edge (degree <= 1 for pure graphs).
class CellComplex {
  public:
    static CellComplex from_triangles(std::int32_t vertex_count,
                                      const std::vector<std::array<std::int32_t, 3>>& triangles);
    static CellComplex from_edges(std::int32_t vertex_count,
                                  const std::vector<std::array<std::int32_t, 2>>& edges);

    std::int32_t vertex_count() const { return vertex_count_; }
    std::int32_t edge_count() const { return static_cast<std::int32_t>(edge_vertices_.size()); }
    std::int32_t triangle_count() const { return static_cast<std::int32_t>(tri_vertices_.size()); }
    std::int32_t cell_count(int dim) const;
    std::int32_t total_cells() const { return vertex_count() + edge_count() + triangle_count(); }

    /// V - E + F.
    int euler_characteristic() const;

    const std::array<std::int32_t, 2>& edge_vertices(std::int32_t e) const { return edge_vertices_[e]; }
    const std::array<std::int32_t, 3>& triangle_vertices(std::int32_t t) const { return tri_vertices_[t]; }
    const std::array<std::int32_t, 3>& triangle_edges(std::int32_t t) const { return tri_edges_[t]; }

    const std::vector<std::int32_t>& vertex_edges(std::int32_t v) const { return vertex_edges_[v]; }
    const std::vector<std::int32_t>& vertex_triangles(std::int32_t v) const { return vertex_tris_[v]; }
    /// Triangle cofaces of an edge; size 1 or 2 after a successful build.
    const std::vector<std::int32_t>& edge_triangles(std::int32_t e) const { return edge_tris_[e]; }

    /// Vertices of any cell, dimension + 1 entries.
    std::vector<std::int32_t> cell_vertices(CellId cell) const;
    /// Codimension-1 faces: dim + 1 entries (empty for vertices).
    std::vector<CellId> cell_faces(CellId cell) const;
    /// Codimension-1 cofaces.
    std::vector<CellId> cell_cofaces(CellId cell) const;

    bool is_boundary(CellId cell) const;
    bool has_boundary() const { return has_boundary_; }

    /// Edge index for an unordered vertex pair, or -1.
    std::int32_t find_edge(std::int32_t a, std::int32_t b) const;

    /// Dense cell numbering: vertices, then edges, then triangles.
    std::int32_t global_id(CellId cell) const;
    CellId cell_from_global(std::int32_t gid) const;

    /// Re-checks the structural invariants (face counts, boundary-of-boundary
    /// cancellation over Z/2, face/coface inversion, boundary flags).
    /// Throws MorseError{InvariantViolation} on failure.
    void validate() const;

  private:
    std::int32_t vertex_count_ = 0;
    std::vector<std::array<std::int32_t, 2>> edge_vertices_;
    std::vector<std::array<std::int32_t, 3>> tri_vertices_;
    std::vector<std::array<std::int32_t, 3>> tri_edges_;
    std::vector<std::vector<std::int32_t>> vertex_edges_;
    std::vector<std::vector<std::int32_t>> vertex_tris_;
    std::vector<std::vector<std::int32_t>> edge_tris_;
    std::vector<bool> boundary_vertex_;
    std::vector<bool> boundary_edge_;
    std::map<std::array<std::int32_t, 2>, std::int32_t> edge_lookup_;
    bool has_boundary_ = false;

    std::int32_t add_edge(std::int32_t a, std::int32_t b, bool reject_duplicate);
    void finish_build();
};

}  // namespace morseforge
