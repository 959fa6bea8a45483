#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "morseforge/cell_complex.hpp"
#include "morseforge/synthetic.hpp"

using namespace morseforge;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const MorseError& err) {
        return err.kind();
    }
    FAIL("expected a MorseError");
    return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("single triangle") {
    const auto c = CellComplex::from_triangles(3, {{{0, 1, 2}}});
    CHECK(c.vertex_count() == 3);
    CHECK(c.edge_count() == 3);
    CHECK(c.triangle_count() == 1);
    CHECK(c.total_cells() == 7);
    CHECK(c.euler_characteristic() == 1);
    CHECK(c.has_boundary());
    for (std::int32_t v = 0; v < 3; ++v) CHECK(c.is_boundary(vertex_cell(v)));
    for (std::int32_t e = 0; e < 3; ++e) CHECK(c.is_boundary(edge_cell(e)));

    const auto faces = c.cell_faces(triangle_cell(0));
    REQUIRE(faces.size() == 3);
    for (const CellId f : faces) {
        const auto up = c.cell_cofaces(f);
        REQUIRE(up.size() == 1);
        CHECK(up[0] == triangle_cell(0));
    }
    CHECK(c.cell_faces(vertex_cell(0)).empty());
    CHECK(c.cell_vertices(triangle_cell(0)) == std::vector<std::int32_t>{0, 1, 2});
    c.validate();
}

TEST_CASE("face and coface maps are mutually inverse") {
    const auto mesh = synthetic::octahedron();
    const auto& c = mesh.complex;
    for (std::int32_t gid = 0; gid < c.total_cells(); ++gid) {
        const CellId cell = c.cell_from_global(gid);
        for (const CellId f : c.cell_faces(cell)) {
            const auto up = c.cell_cofaces(f);
            CHECK(std::count(up.begin(), up.end(), cell) == 1);
        }
        for (const CellId cf : c.cell_cofaces(cell)) {
            const auto down = c.cell_faces(cf);
            CHECK(std::count(down.begin(), down.end(), cell) == 1);
        }
    }
}

TEST_CASE("closed surfaces") {
    const auto octa = synthetic::octahedron();
    CHECK(octa.complex.vertex_count() == 6);
    CHECK(octa.complex.edge_count() == 12);
    CHECK(octa.complex.triangle_count() == 8);
    CHECK(octa.complex.euler_characteristic() == 2);
    CHECK_FALSE(octa.complex.has_boundary());
    for (std::int32_t e = 0; e < 12; ++e) {
        CHECK(octa.complex.edge_triangles(e).size() == 2);
    }
    octa.complex.validate();

    const auto torus = synthetic::torus9();
    CHECK(torus.complex.vertex_count() == 9);
    CHECK(torus.complex.edge_count() == 27);
    CHECK(torus.complex.triangle_count() == 18);
    CHECK(torus.complex.euler_characteristic() == 0);
    CHECK_FALSE(torus.complex.has_boundary());
    torus.complex.validate();
}

TEST_CASE("grid patch") {
    const auto mesh = synthetic::grid(3, 3);
    const auto& c = mesh.complex;
    CHECK(c.vertex_count() == 9);
    CHECK(c.edge_count() == 16);
    CHECK(c.triangle_count() == 8);
    CHECK(c.euler_characteristic() == 1);
    CHECK(c.has_boundary());
    // Interior of a 3x3 patch is the single center vertex.
    for (std::int32_t v = 0; v < 9; ++v) {
        CHECK(c.is_boundary(vertex_cell(v)) == (v != 4));
    }
    c.validate();
}

TEST_CASE("cylinder band") {
    const auto mesh = synthetic::cylinder(8, 4);
    const auto& c = mesh.complex;
    CHECK(c.vertex_count() == 32);
    CHECK(c.edge_count() == 80);
    CHECK(c.triangle_count() == 48);
    CHECK(c.euler_characteristic() == 0);
    CHECK(c.has_boundary());
    for (std::int32_t v = 0; v < 32; ++v) {
        const bool rim = v < 8 || v >= 24;
        CHECK(c.is_boundary(vertex_cell(v)) == rim);
    }
    c.validate();
}

TEST_CASE("graphs from edges") {
    const auto path = CellComplex::from_edges(4, {{{0, 1}}, {{1, 2}}, {{2, 3}}});
    CHECK(path.euler_characteristic() == 1);
    CHECK(path.has_boundary());
    CHECK(path.is_boundary(vertex_cell(0)));
    CHECK(path.is_boundary(vertex_cell(3)));
    CHECK_FALSE(path.is_boundary(vertex_cell(1)));
    CHECK_FALSE(path.is_boundary(vertex_cell(2)));
    path.validate();

    const auto cycle = CellComplex::from_edges(4, {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 0}}});
    CHECK(cycle.euler_characteristic() == 0);
    CHECK_FALSE(cycle.has_boundary());
    cycle.validate();
}

TEST_CASE("find_edge is order insensitive") {
    const auto c = CellComplex::from_triangles(3, {{{0, 1, 2}}});
    const std::int32_t e = c.find_edge(2, 0);
    REQUIRE(e >= 0);
    CHECK(c.find_edge(0, 2) == e);
    CHECK(c.edge_vertices(e) == std::array<std::int32_t, 2>{0, 2});
    CHECK(c.find_edge(0, 0) == -1);
}

TEST_CASE("global numbering round-trips") {
    const auto mesh = synthetic::torus9();
    const auto& c = mesh.complex;
    std::set<std::int32_t> seen;
    for (std::int32_t gid = 0; gid < c.total_cells(); ++gid) {
        const CellId cell = c.cell_from_global(gid);
        CHECK(c.global_id(cell) == gid);
        seen.insert(gid);
    }
    CHECK(static_cast<std::int32_t>(seen.size()) == c.total_cells());
    CHECK(kind_of([&] { c.cell_from_global(c.total_cells()); }) == ErrorKind::UnknownCell);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK(kind_of([] {
              CellComplex::from_edges(3, {{{0, 1}}, {{1, 0}}});
          }) == ErrorKind::DuplicateCell);
    CHECK(kind_of([] { CellComplex::from_edges(3, {{{1, 1}}}); }) == ErrorKind::DuplicateCell);
    CHECK(kind_of([] {
              CellComplex::from_triangles(4, {{{0, 1, 2}}, {{2, 0, 1}}});
          }) == ErrorKind::DuplicateCell);
    CHECK(kind_of([] { CellComplex::from_triangles(4, {{{0, 1, 1}}}); }) == ErrorKind::DuplicateCell);
    CHECK(kind_of([] { CellComplex::from_edges(3, {{{0, 5}}}); }) == ErrorKind::DanglingVertexIndex);
    CHECK(kind_of([] { CellComplex::from_edges(3, {{{-1, 2}}}); }) == ErrorKind::DanglingVertexIndex);
    CHECK(kind_of([] {
              CellComplex::from_triangles(5, {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 1, 4}}});
          }) == ErrorKind::NonManifoldEdge);
}
