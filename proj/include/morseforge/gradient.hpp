#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "morseforge/cell_complex.hpp"
#include "morseforge/scalar_field.hpp"

namespace morseforge {

struct CriticalCell {
    CellId cell;
    int morse_index = 0;  // equals cell.dim
    double value = 0.0;
};

/// A maximal V-path tau_0 > sigma_0, tau_1 > sigma_1, ... where sigma_i is a
/// face of tau_i not matched to it and tau_{i+1} = partner(sigma_i). cells
/// holds the alternating sequence starting at the (k+1)-cell; terminal is the
/// last k-cell. dead_end marks termination at a k-cell matched to a lower
/// cell instead of a critical one (possible only for k = 1). On bounded
/// complexes a (1,0)-path stops when it reaches a boundary vertex — the orbit
/// exits the complex — and boundary_exit records that.
struct VPath {
    std::vector<CellId> cells;
    CellId terminal;
    bool dead_end = false;
    bool boundary_exit = false;
};

/// Acyclic partial matching built per lower star: the discrete pseudo-gradient.
/// Unmatched cells are critical with Morse index = dimension.
class DiscreteGradient {
  public:
    explicit DiscreteGradient(const CellComplex& complex)
        : partner_(complex.total_cells(), -1) {}

    bool is_matched(const CellComplex& complex, CellId cell) const {
        return partner_[complex.global_id(cell)] >= 0;
    }
    bool is_critical(const CellComplex& complex, CellId cell) const {
        return !is_matched(complex, cell);
    }
    std::optional<CellId> partner(const CellComplex& complex, CellId cell) const;

    void match(const CellComplex& complex, CellId lower, CellId upper);
    void unmatch(const CellComplex& complex, CellId lower, CellId upper);

    std::uint64_t revision() const { return revision_; }
    void bump_revision() { ++revision_; }

    /// Critical census by dimension.
    std::array<std::int32_t, 3> census(const CellComplex& complex) const;

    /// Structural checks against a field: pairs are codimension-1, lie in one
    /// lower star (equal cell values), the involution is consistent, and the
    /// V-path relation is acyclic. Throws MorseError{InvariantViolation}.
    void validate(const CellComplex& complex, const ScalarField& field) const;

    /// Throws MorseError{CycleDetected} if some V-path closes on itself.
    void check_acyclic(const CellComplex& complex) const;

  private:
    std::vector<std::int32_t> partner_;
    std::uint64_t revision_ = 0;
};

/// Deterministic lower-star construction. Each star is grown by homotopy
/// expansion: the vertex takes its steepest edge, then cells with exactly one
/// unpaired face are absorbed in ascending (value tuple, dimension, index)
/// order, and a cell whose faces are all spoken for is declared critical.
DiscreteGradient build_gradient(const CellComplex& complex, const ScalarField& field);

/// Critical cells sorted by (dimension, value, index).
std::vector<CriticalCell> critical_cells(const CellComplex& complex, const ScalarField& field,
                                         const DiscreteGradient& gradient);

/// Exhaustive enumeration of maximal descending V-paths from a critical cell
/// of dimension >= 1, with multiplicity (distinct routes to one terminal are
/// distinct paths). Exponential in the worst case; meant for small inputs.
/// Counting queries below stay polynomial.
std::vector<VPath> descending_paths(const CellComplex& complex, const DiscreteGradient& gradient,
                                    CellId start);

/// Paths from p that terminate at the critical cell q, multiplicity preserved.
/// Throws MorseError{IndexMismatch} unless dim p = dim q + 1.
std::vector<VPath> connecting_paths(const CellComplex& complex, const DiscreteGradient& gradient,
                                    CellId p, CellId q);

/// Number of V-paths from p to q (saturating), by dynamic programming over the
/// acyclic V-path relation.
std::int64_t count_connecting_paths(const CellComplex& complex, const DiscreteGradient& gradient,
                                    CellId p, CellId q);

/// The unique connector; call only when count_connecting_paths(...) == 1.
VPath unique_connector(const CellComplex& complex, const DiscreteGradient& gradient, CellId p,
                       CellId q);

/// Deepest value that some descending orbit from p fails to descend below:
/// the maximum, over maximal paths from p other than those ending at exempt,
/// of the orbit's terminal value. Dead-ended paths continue through the
/// vertex-level flow (the orbit keeps descending), so their reach is the value
/// of the minimum they land on; orbits reaching a boundary vertex exit there
/// at that vertex's value. Returns -infinity when every orbit is exempt.
double worst_descent_reach(const CellComplex& complex, const ScalarField& field,
                           const DiscreteGradient& gradient, CellId p,
                           std::optional<CellId> exempt);

/// Mirror of worst_descent_reach along ascending V-paths: the minimum, over
/// maximal ascending orbits from the critical cell p, of the orbit's terminal
/// value. Used when a critical value must be raised.
double worst_ascent_reach(const CellComplex& complex, const ScalarField& field,
                          const DiscreteGradient& gradient, CellId p);

/// Follow the (1,0)-flow from a vertex to its terminal: a critical vertex, or
/// a boundary vertex where the orbit exits. Returns [w, ..., terminal].
std::vector<std::int32_t> vertex_flow(const CellComplex& complex, const DiscreteGradient& gradient,
                                      std::int32_t w);

/// All cells lying on some descending path from p whose value is strictly
/// above the cutoff, including p itself. Flow closure: dead ends continue
/// through the vertex flow. Sorted by (dim, index).
std::vector<CellId> descending_region_above(const CellComplex& complex, const ScalarField& field,
                                            const DiscreteGradient& gradient, CellId p,
                                            double cutoff);

/// Ascending mirror of descending_region_above: cells on ascending paths from
/// p with value strictly below the cutoff.
std::vector<CellId> ascending_region_below(const CellComplex& complex, const ScalarField& field,
                                           const DiscreteGradient& gradient, CellId p,
                                           double cutoff);

}  // namespace morseforge
