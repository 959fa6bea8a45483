#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "morseforge/cell_complex.hpp"

namespace morseforge::synthetic {

/// Deterministic uniform deviates: raw engine bits mapped explicitly so that
/// sequences are identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    std::mt19937_64 engine_;
};

struct Mesh {
    CellComplex complex;
    std::vector<std::array<double, 3>> coords;
};

/// Octahedron sphere: vertex 0 bottom, 1..4 the equator ring, 5 top.
Mesh octahedron();

/// Flat 3x3 torus: vertices (i,j) in Z_3 x Z_3 at index 3*j+i, quads split by
/// the diagonal rule; 9 vertices, 27 edges, 18 triangles.
Mesh torus9();

/// Planar grid on [0,1]^2, nx * ny vertices, each quad split along the
/// diagonal from its lowest-index corner.
Mesh grid(std::int32_t nx, std::int32_t ny);

/// Grid wrapped in x: a triangulated cylinder with boundary rings at y = 0, 1.
Mesh cylinder(std::int32_t nx, std::int32_t ny);

/// Coordinate component as a field (axis 0, 1, or 2).
std::vector<double> height_field(const Mesh& mesh, int axis);

/// Two Gaussian bumps (amplitudes 10 and 0.3) plus uniform noise of amplitude
/// 0.1 drawn from the seed, evaluated at the mesh coordinates.
std::vector<double> two_bump_field(const Mesh& mesh, std::uint64_t seed);

/// Cylinder height plus one interior dip, shaped so the dip contributes one
/// extra (minimum, saddle) pair with a single moving vertex. nx, ny must be
/// the dimensions the mesh was built with.
std::vector<double> cylinder_dip_field(const Mesh& mesh, std::int32_t nx, std::int32_t ny);

/// Independent uniform values in [0, 1).
std::vector<double> random_field(std::int32_t vertex_count, std::uint64_t seed);

}  // namespace morseforge::synthetic
