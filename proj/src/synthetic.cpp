#include "morseforge/synthetic.hpp"

#include <algorithm>
#include <cmath>

namespace morseforge::synthetic {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Quad corners in cyclic order; the diagonal runs from the lowest-index
// corner to its opposite, giving one canonical triangulation per quad.
void split_quad(std::vector<std::array<std::int32_t, 3>>& triangles,
                const std::array<std::int32_t, 4>& cyc) {
    const std::size_t k = static_cast<std::size_t>(
        std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    triangles.push_back({cyc[k], cyc[(k + 1) % 4], cyc[(k + 2) % 4]});
    triangles.push_back({cyc[k], cyc[(k + 2) % 4], cyc[(k + 3) % 4]});
}

}  // namespace

Mesh octahedron() {
    std::vector<std::array<double, 3>> coords = {
        {0, 0, -1}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
    std::vector<std::array<std::int32_t, 3>> triangles;
    for (std::int32_t i = 0; i < 4; ++i) {
        const std::int32_t a = 1 + i, b = 1 + (i + 1) % 4;
        triangles.push_back({5, a, b});
        triangles.push_back({0, a, b});
    }
    return {CellComplex::from_triangles(6, triangles), std::move(coords)};
}

Mesh torus9() {
    std::vector<std::array<double, 3>> coords(9);
    for (std::int32_t j = 0; j < 3; ++j) {
        for (std::int32_t i = 0; i < 3; ++i) {
            const double theta = 2 * kPi * i / 3, phi = 2 * kPi * j / 3;
            coords[3 * j + i] = {(2 + std::cos(phi)) * std::cos(theta),
                                 (2 + std::cos(phi)) * std::sin(theta), std::sin(phi)};
        }
    }
    std::vector<std::array<std::int32_t, 3>> triangles;
    const auto at = [](std::int32_t i, std::int32_t j) {
        return 3 * ((j % 3 + 3) % 3) + (i % 3 + 3) % 3;
    };
    for (std::int32_t j = 0; j < 3; ++j) {
        for (std::int32_t i = 0; i < 3; ++i) {
            split_quad(triangles, {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
        }
    }
    return {CellComplex::from_triangles(9, triangles), std::move(coords)};
}

Mesh grid(std::int32_t nx, std::int32_t ny) {
    std::vector<std::array<double, 3>> coords(static_cast<std::size_t>(nx) * ny);
    for (std::int32_t y = 0; y < ny; ++y) {
        for (std::int32_t x = 0; x < nx; ++x) {
            coords[static_cast<std::size_t>(y) * nx + x] = {double(x) / (nx - 1),
                                                            double(y) / (ny - 1), 0.0};
        }
    }
    std::vector<std::array<std::int32_t, 3>> triangles;
    for (std::int32_t y = 0; y + 1 < ny; ++y) {
        for (std::int32_t x = 0; x + 1 < nx; ++x) {
            const std::int32_t v00 = y * nx + x;
            split_quad(triangles, {v00, v00 + 1, v00 + nx + 1, v00 + nx});
        }
    }
    return {CellComplex::from_triangles(nx * ny, triangles), std::move(coords)};
}

Mesh cylinder(std::int32_t nx, std::int32_t ny) {
    std::vector<std::array<double, 3>> coords(static_cast<std::size_t>(nx) * ny);
    for (std::int32_t y = 0; y < ny; ++y) {
        for (std::int32_t x = 0; x < nx; ++x) {
            const double theta = 2 * kPi * x / nx;
            coords[static_cast<std::size_t>(y) * nx + x] = {std::cos(theta), std::sin(theta),
                                                            double(y) / (ny - 1)};
        }
    }
    std::vector<std::array<std::int32_t, 3>> triangles;
    for (std::int32_t y = 0; y + 1 < ny; ++y) {
        for (std::int32_t x = 0; x < nx; ++x) {
            const std::int32_t x1 = (x + 1) % nx;
            split_quad(triangles,
                       {y * nx + x, y * nx + x1, (y + 1) * nx + x1, (y + 1) * nx + x});
        }
    }
    return {CellComplex::from_triangles(nx * ny, triangles), std::move(coords)};
}

std::vector<double> height_field(const Mesh& mesh, int axis) {
    std::vector<double> values(mesh.coords.size());
    for (std::size_t v = 0; v < mesh.coords.size(); ++v) values[v] = mesh.coords[v][axis];
    return values;
}

std::vector<double> two_bump_field(const Mesh& mesh, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> values(mesh.coords.size());
    const auto bump = [](double x, double y, double cx, double cy, double amp, double sigma) {
        const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
        return amp * std::exp(-d2 / (2 * sigma * sigma));
    };
    for (std::size_t v = 0; v < mesh.coords.size(); ++v) {
        const double x = mesh.coords[v][0], y = mesh.coords[v][1];
        values[v] = bump(x, y, 0.35, 0.35, 10.0, 0.15) + bump(x, y, 0.75, 0.75, 0.3, 0.08) +
                    0.1 * rng.uniform();
    }
    return values;
}

std::vector<double> cylinder_dip_field(const Mesh& mesh, std::int32_t nx, std::int32_t ny) {
    // Height up the cylinder, with the interior vertex at (x=2, y=ny-2)
    // pulled below every neighbor but above the bottom boundary ring: one
    // interior minimum paired with one interior saddle edge, joined by a
    // unique connector, and exactly one vertex moves when they cancel.
    std::vector<double> values = height_field(mesh, 2);
    values[static_cast<std::size_t>(ny - 2) * nx + 2] = 0.3 / (ny - 1);
    return values;
}

std::vector<double> random_field(std::int32_t vertex_count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> values(static_cast<std::size_t>(vertex_count));
    for (auto& value : values) value = rng.uniform();
    return values;
}

}  // namespace morseforge::synthetic
