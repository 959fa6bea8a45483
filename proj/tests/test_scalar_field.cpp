#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <string>

#include "morseforge/cell_complex.hpp"
#include "morseforge/scalar_field.hpp"
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

struct TempCsv {
    std::string path;
    explicit TempCsv(const std::string& name, const std::string& body) : path(name) {
        std::ofstream out(path);
        out << body;
    }
    ~TempCsv() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("ties break by vertex index") {
    const ScalarField f({1.0, 1.0, 1.0});
    CHECK(f.vertex_at_rank(0) == 0);
    CHECK(f.vertex_at_rank(1) == 1);
    CHECK(f.vertex_at_rank(2) == 2);
    CHECK(f.vertex_below(0, 1));
    CHECK(f.vertex_below(1, 2));
    CHECK_FALSE(f.vertex_below(2, 0));
}

TEST_CASE("distinct values order by value") {
    const ScalarField f({3.0, 1.0, 2.0});
    CHECK(f.vertex_at_rank(0) == 1);
    CHECK(f.vertex_at_rank(1) == 2);
    CHECK(f.vertex_at_rank(2) == 0);
    CHECK(f.rank(0) == 2);
    for (std::int32_t v = 0; v < 3; ++v) CHECK(f.vertex_at_rank(f.rank(v)) == v);
}

TEST_CASE("cells take their maximum vertex value") {
    const auto c = CellComplex::from_triangles(3, {{{0, 1, 2}}});
    const ScalarField f({3.0, 1.0, 2.0});
    CHECK(f.max_vertex(c, triangle_cell(0)) == 0);
    CHECK(f.cell_value(c, triangle_cell(0)) == 3.0);
    const std::int32_t e12 = c.find_edge(1, 2);
    CHECK(f.cell_value(c, edge_cell(e12)) == 2.0);
    CHECK(f.max_vertex(c, edge_cell(e12)) == 2);
}

TEST_CASE("cell tuples sort faces before cofaces") {
    const auto c = CellComplex::from_triangles(3, {{{0, 1, 2}}});
    const ScalarField f({0.0, 1.0, 2.0});
    const std::int32_t e12 = c.find_edge(1, 2);
    const auto edge_tuple = f.cell_tuple(c, edge_cell(e12));
    CHECK(edge_tuple == std::array<std::int32_t, 3>{2, 1, -1});
    CHECK(f.cell_tuple(c, vertex_cell(2)) == std::array<std::int32_t, 3>{2, -1, -1});
    CHECK(f.cell_before(c, vertex_cell(2), edge_cell(e12)));
    CHECK(f.cell_before(c, edge_cell(e12), triangle_cell(0)));
    CHECK_FALSE(f.cell_before(c, triangle_cell(0), edge_cell(e12)));
}

TEST_CASE("lower stars partition the complex") {
    const auto mesh = synthetic::octahedron();
    const auto& c = mesh.complex;
    const ScalarField f({0.0, 1.0, 2.0, 3.0, 4.0, 5.0});
    std::set<CellId> all;
    std::size_t total = 0;
    for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
        const auto star = f.lower_star(c, v);
        total += star.size();
        for (const CellId cell : star) {
            CHECK(f.max_vertex(c, cell) == v);
            CHECK(all.insert(cell).second);
        }
    }
    CHECK(total == static_cast<std::size_t>(c.total_cells()));
    CHECK(f.lower_star(c, 0) == std::vector<CellId>{vertex_cell(0)});
    CHECK(f.lower_star(c, 5).size() == 9);  // top vertex owns its whole star
}

TEST_CASE("order is invariant under monotone rescaling") {
    const auto mesh = synthetic::torus9();
    const auto base = synthetic::random_field(9, 17);
    std::vector<double> scaled;
    for (double x : base) scaled.push_back(2.0 * x + 7.0);
    const ScalarField f(base), g(scaled);
    for (std::int32_t r = 0; r < 9; ++r) CHECK(f.vertex_at_rank(r) == g.vertex_at_rank(r));
    for (std::int32_t v = 0; v < 9; ++v) {
        CHECK(f.lower_star(mesh.complex, v) == g.lower_star(mesh.complex, v));
    }
}

TEST_CASE("field validation") {
    CHECK(kind_of([] {
              ScalarField({0.0, std::numeric_limits<double>::quiet_NaN()});
          }) == ErrorKind::NonFiniteValue);
    CHECK(kind_of([] {
              ScalarField({0.0, std::numeric_limits<double>::infinity()});
          }) == ErrorKind::NonFiniteValue);
    const auto c = CellComplex::from_triangles(3, {{{0, 1, 2}}});
    const ScalarField f({0.0, 1.0});
    CHECK(kind_of([&] { f.ensure_matches(c); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("field files round-trip") {
    const auto c = CellComplex::from_edges(3, {{{0, 1}}, {{1, 2}}});
    {
        const TempCsv csv("field_ok.csv", "vertex_id,value\n2,0.5\n0,1.25\n1,-3\n");
        const auto f = load_field(c, csv.path);
        CHECK(f.value(0) == 1.25);
        CHECK(f.value(1) == -3.0);
        CHECK(f.value(2) == 0.5);
    }
    {
        const TempCsv csv("field_short.csv", "0,1\n1,2\n");
        CHECK(kind_of([&] { load_field(c, csv.path); }) == ErrorKind::LengthMismatch);
    }
    {
        const TempCsv csv("field_dup.csv", "0,1\n1,2\n1,3\n");
        CHECK(kind_of([&] { load_field(c, csv.path); }) == ErrorKind::LengthMismatch);
    }
    {
        const TempCsv csv("field_out.csv", "0,1\n1,2\n7,3\n");
        CHECK(kind_of([&] { load_field(c, csv.path); }) == ErrorKind::LengthMismatch);
    }
    {
        const TempCsv csv("field_bad.csv", "0,1\n1,two\n2,3\n");
        CHECK(kind_of([&] { load_field(c, csv.path); }) == ErrorKind::ParseError);
    }
    {
        const TempCsv csv("field_nan.csv", "0,1\n1,nan\n2,3\n");
        CHECK(kind_of([&] { load_field(c, csv.path); }) == ErrorKind::NonFiniteValue);
    }
    CHECK(kind_of([&] { load_field(c, "does_not_exist.csv"); }) == ErrorKind::ParseError);
}
