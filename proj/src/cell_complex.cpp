#include "morseforge/cell_complex.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace morseforge {

namespace {

void check_vertex(std::int32_t v, std::int32_t vertex_count) {
    if (v < 0 || v >= vertex_count) {
        throw MorseError(ErrorKind::DanglingVertexIndex,
                         "vertex index " + std::to_string(v) + " outside [0, " +
                             std::to_string(vertex_count) + ")");
    }
}

}  // namespace

std::int32_t CellComplex::cell_count(int dim) const {
    switch (dim) {
        case 0: return vertex_count();
        case 1: return edge_count();
        case 2: return triangle_count();
        default: return 0;
    }
}

int CellComplex::euler_characteristic() const {
    return static_cast<int>(vertex_count()) - static_cast<int>(edge_count()) +
           static_cast<int>(triangle_count());
}

std::int32_t CellComplex::add_edge(std::int32_t a, std::int32_t b, bool reject_duplicate) {
    if (a == b) {
        throw MorseError(ErrorKind::DuplicateCell,
                         "edge with repeated vertex " + std::to_string(a));
    }
    std::array<std::int32_t, 2> key{std::min(a, b), std::max(a, b)};
    auto it = edge_lookup_.find(key);
    if (it != edge_lookup_.end()) {
        if (reject_duplicate) {
            throw MorseError(ErrorKind::DuplicateCell,
                             "edge (" + std::to_string(key[0]) + ", " + std::to_string(key[1]) +
                                 ") listed twice");
        }
        return it->second;
    }
    std::int32_t e = static_cast<std::int32_t>(edge_vertices_.size());
    edge_vertices_.push_back(key);
    edge_lookup_.emplace(key, e);
    return e;
}

CellComplex CellComplex::from_edges(std::int32_t vertex_count,
                                    const std::vector<std::array<std::int32_t, 2>>& edges) {
    CellComplex c;
    c.vertex_count_ = vertex_count;
    for (const auto& e : edges) {
        check_vertex(e[0], vertex_count);
        check_vertex(e[1], vertex_count);
        c.add_edge(e[0], e[1], /*reject_duplicate=*/true);
    }
    c.finish_build();
    return c;
}

CellComplex CellComplex::from_triangles(std::int32_t vertex_count,
                                        const std::vector<std::array<std::int32_t, 3>>& triangles) {
    CellComplex c;
    c.vertex_count_ = vertex_count;
    std::set<std::array<std::int32_t, 3>> seen;
    for (const auto& t : triangles) {
        for (std::int32_t v : t) check_vertex(v, vertex_count);
        std::array<std::int32_t, 3> key = t;
        std::sort(key.begin(), key.end());
        if (key[0] == key[1] || key[1] == key[2]) {
            throw MorseError(ErrorKind::DuplicateCell,
                             "triangle with repeated vertex " + std::to_string(key[1]));
        }
        if (!seen.insert(key).second) {
            throw MorseError(ErrorKind::DuplicateCell,
                             "triangle (" + std::to_string(key[0]) + ", " + std::to_string(key[1]) +
                                 ", " + std::to_string(key[2]) + ") listed twice");
        }
        std::array<std::int32_t, 3> es{
            c.add_edge(key[0], key[1], false),
            c.add_edge(key[0], key[2], false),
            c.add_edge(key[1], key[2], false),
        };
        c.tri_vertices_.push_back(key);
        c.tri_edges_.push_back(es);
    }
    c.finish_build();
    return c;
}

void CellComplex::finish_build() {
    vertex_edges_.assign(vertex_count_, {});
    vertex_tris_.assign(vertex_count_, {});
    edge_tris_.assign(edge_vertices_.size(), {});

    for (std::int32_t e = 0; e < edge_count(); ++e) {
        vertex_edges_[edge_vertices_[e][0]].push_back(e);
        vertex_edges_[edge_vertices_[e][1]].push_back(e);
    }
    for (std::int32_t t = 0; t < triangle_count(); ++t) {
        for (std::int32_t v : tri_vertices_[t]) vertex_tris_[v].push_back(t);
        for (std::int32_t e : tri_edges_[t]) {
            edge_tris_[e].push_back(t);
            if (edge_tris_[e].size() > 2) {
                throw MorseError(ErrorKind::NonManifoldEdge,
                                 "edge (" + std::to_string(edge_vertices_[e][0]) + ", " +
                                     std::to_string(edge_vertices_[e][1]) +
                                     ") has more than two triangle cofaces");
            }
        }
    }

    boundary_vertex_.assign(vertex_count_, false);
    boundary_edge_.assign(edge_vertices_.size(), false);
    if (triangle_count() > 0) {
        for (std::int32_t e = 0; e < edge_count(); ++e) {
            if (edge_tris_[e].size() == 1) {
                boundary_edge_[e] = true;
                boundary_vertex_[edge_vertices_[e][0]] = true;
                boundary_vertex_[edge_vertices_[e][1]] = true;
            }
        }
    } else {
        for (std::int32_t v = 0; v < vertex_count_; ++v) {
            if (vertex_edges_[v].size() <= 1) boundary_vertex_[v] = true;
        }
    }
    has_boundary_ = false;
    for (std::int32_t v = 0; v < vertex_count_; ++v) {
        if (boundary_vertex_[v]) has_boundary_ = true;
    }
}

std::vector<std::int32_t> CellComplex::cell_vertices(CellId cell) const {
    switch (cell.dim) {
        case 0: return {cell.index};
        case 1: {
            const auto& e = edge_vertices_[cell.index];
            return {e[0], e[1]};
        }
        case 2: {
            const auto& t = tri_vertices_[cell.index];
            return {t[0], t[1], t[2]};
        }
        default: throw MorseError(ErrorKind::UnknownCell, "bad dimension");
    }
}

std::vector<CellId> CellComplex::cell_faces(CellId cell) const {
    switch (cell.dim) {
        case 0: return {};
        case 1: {
            const auto& e = edge_vertices_[cell.index];
            return {vertex_cell(e[0]), vertex_cell(e[1])};
        }
        case 2: {
            const auto& es = tri_edges_[cell.index];
            return {edge_cell(es[0]), edge_cell(es[1]), edge_cell(es[2])};
        }
        default: throw MorseError(ErrorKind::UnknownCell, "bad dimension");
    }
}

std::vector<CellId> CellComplex::cell_cofaces(CellId cell) const {
    std::vector<CellId> out;
    switch (cell.dim) {
        case 0:
            for (std::int32_t e : vertex_edges_[cell.index]) out.push_back(edge_cell(e));
            return out;
        case 1:
            for (std::int32_t t : edge_tris_[cell.index]) out.push_back(triangle_cell(t));
            return out;
        case 2: return {};
        default: throw MorseError(ErrorKind::UnknownCell, "bad dimension");
    }
}

bool CellComplex::is_boundary(CellId cell) const {
    switch (cell.dim) {
        case 0: return boundary_vertex_[cell.index];
        case 1: return boundary_edge_[cell.index];
        default: return false;
    }
}

std::int32_t CellComplex::find_edge(std::int32_t a, std::int32_t b) const {
    std::array<std::int32_t, 2> key{std::min(a, b), std::max(a, b)};
    auto it = edge_lookup_.find(key);
    return it == edge_lookup_.end() ? -1 : it->second;
}

std::int32_t CellComplex::global_id(CellId cell) const {
    switch (cell.dim) {
        case 0: return cell.index;
        case 1: return vertex_count() + cell.index;
        case 2: return vertex_count() + edge_count() + cell.index;
        default: throw MorseError(ErrorKind::UnknownCell, "bad dimension");
    }
}

CellId CellComplex::cell_from_global(std::int32_t gid) const {
    if (gid < vertex_count()) return vertex_cell(gid);
    gid -= vertex_count();
    if (gid < edge_count()) return edge_cell(gid);
    gid -= edge_count();
    if (gid < triangle_count()) return triangle_cell(gid);
    throw MorseError(ErrorKind::UnknownCell, "global id out of range");
}

void CellComplex::validate() const {
    auto fail = [](const std::string& what) {
        throw MorseError(ErrorKind::InvariantViolation, what);
    };

    for (std::int32_t e = 0; e < edge_count(); ++e) {
        const auto& ev = edge_vertices_[e];
        if (ev[0] >= ev[1]) fail("edge vertices not strictly sorted");
        if (ev[0] < 0 || ev[1] >= vertex_count()) fail("edge vertex out of range");
    }
    for (std::int32_t t = 0; t < triangle_count(); ++t) {
        const auto& tv = tri_vertices_[t];
        if (!(tv[0] < tv[1] && tv[1] < tv[2])) fail("triangle vertices not strictly sorted");
        // Boundary of boundary over Z/2: every vertex of the triangle appears
        // in exactly two of its three edges.
        std::vector<std::int32_t> incidence;
        for (std::int32_t e : tri_edges_[t]) {
            incidence.push_back(edge_vertices_[e][0]);
            incidence.push_back(edge_vertices_[e][1]);
        }
        std::sort(incidence.begin(), incidence.end());
        if (incidence.size() != 6) fail("triangle does not have 3 edges");
        for (std::size_t i = 0; i < 6; i += 2) {
            if (incidence[i] != incidence[i + 1]) fail("boundary-of-boundary mismatch");
        }
        for (std::int32_t e : tri_edges_[t]) {
            const auto& cof = edge_tris_[e];
            if (std::find(cof.begin(), cof.end(), t) == cof.end()) {
                fail("face/coface maps are not mutually inverse (edge->triangle)");
            }
        }
        for (std::int32_t v : tv) {
            const auto& cof = vertex_tris_[v];
            if (std::find(cof.begin(), cof.end(), t) == cof.end()) {
                fail("face/coface maps are not mutually inverse (vertex->triangle)");
            }
        }
    }
    for (std::int32_t e = 0; e < edge_count(); ++e) {
        for (std::int32_t v : edge_vertices_[e]) {
            const auto& cof = vertex_edges_[v];
            if (std::find(cof.begin(), cof.end(), e) == cof.end()) {
                fail("face/coface maps are not mutually inverse (vertex->edge)");
            }
        }
        if (triangle_count() > 0) {
            std::size_t cofaces = edge_tris_[e].size();
            if (cofaces == 0 || cofaces > 2) fail("closed-surface edge coface count violated");
            if ((cofaces == 1) != boundary_edge_[e]) fail("boundary flag mismatch on edge");
        }
    }
}

}  // namespace morseforge
