#include "morseforge/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "morseforge/errors.hpp"
#include "morseforge/log.hpp"

namespace morseforge {
namespace {

std::string cell_name(CellId cell) {
    return "(" + std::to_string(int(cell.dim)) + ":" + std::to_string(cell.index) + ")";
}

constexpr std::int64_t kCountCap = 1'000'000'000'000;

}  // namespace

std::optional<CellId> DiscreteGradient::partner(const CellComplex& complex, CellId cell) const {
    const std::int32_t gid = partner_[complex.global_id(cell)];
    if (gid < 0) return std::nullopt;
    return complex.cell_from_global(gid);
}

void DiscreteGradient::match(const CellComplex& complex, CellId lower, CellId upper) {
    if (upper.dim != lower.dim + 1) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "match: cells " + cell_name(lower) + ", " + cell_name(upper) +
                             " are not of consecutive dimension");
    }
    const auto faces = complex.cell_faces(upper);
    if (std::find(faces.begin(), faces.end(), lower) == faces.end()) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "match: " + cell_name(lower) + " is not a face of " + cell_name(upper));
    }
    const std::int32_t lo = complex.global_id(lower), hi = complex.global_id(upper);
    if (partner_[lo] >= 0 || partner_[hi] >= 0) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "match: cell already matched near " + cell_name(lower));
    }
    partner_[lo] = hi;
    partner_[hi] = lo;
}

void DiscreteGradient::unmatch(const CellComplex& complex, CellId lower, CellId upper) {
    const std::int32_t lo = complex.global_id(lower), hi = complex.global_id(upper);
    if (partner_[lo] != hi || partner_[hi] != lo) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "unmatch: " + cell_name(lower) + ", " + cell_name(upper) +
                             " are not a matched pair");
    }
    partner_[lo] = partner_[hi] = -1;
}

std::array<std::int32_t, 3> DiscreteGradient::census(const CellComplex& complex) const {
    std::array<std::int32_t, 3> counts{};
    for (std::int32_t gid = 0; gid < static_cast<std::int32_t>(partner_.size()); ++gid) {
        if (partner_[gid] < 0) ++counts[complex.cell_from_global(gid).dim];
    }
    return counts;
}

void DiscreteGradient::validate(const CellComplex& complex, const ScalarField& field) const {
    for (std::int32_t gid = 0; gid < static_cast<std::int32_t>(partner_.size()); ++gid) {
        const std::int32_t other = partner_[gid];
        if (other < 0) continue;
        if (partner_[other] != gid) {
            throw MorseError(ErrorKind::InvariantViolation, "partner map is not an involution");
        }
        if (other < gid) continue;  // inspect each pair once, lower first
        const CellId lower = complex.cell_from_global(gid);
        const CellId upper = complex.cell_from_global(other);
        if (upper.dim != lower.dim + 1) {
            throw MorseError(ErrorKind::InvariantViolation,
                             "pair " + cell_name(lower) + ", " + cell_name(upper) +
                                 " is not codimension one");
        }
        const auto faces = complex.cell_faces(upper);
        if (std::find(faces.begin(), faces.end(), lower) == faces.end()) {
            throw MorseError(ErrorKind::InvariantViolation,
                             cell_name(lower) + " is not a face of its partner " +
                                 cell_name(upper));
        }
        if (field.max_vertex(complex, lower) != field.max_vertex(complex, upper)) {
            throw MorseError(ErrorKind::InvariantViolation,
                             "pair " + cell_name(lower) + ", " + cell_name(upper) +
                                 " spans two lower stars");
        }
    }
    check_acyclic(complex);
}

void DiscreteGradient::check_acyclic(const CellComplex& complex) const {
    // V-paths project to walks on (k+1)-cells: tau -> partner(sigma) for each
    // face sigma not matched to tau. A gray-hit in the DFS is a closed V-path.
    for (std::int8_t dim = 1; dim <= 2; ++dim) {
        const std::int32_t count = complex.cell_count(dim);
        std::vector<char> color(count, 0);
        std::vector<std::pair<std::int32_t, std::size_t>> stack;
        for (std::int32_t root = 0; root < count; ++root) {
            if (color[root] != 0) continue;
            stack.push_back({root, 0});
            color[root] = 1;
            while (!stack.empty()) {
                auto& [index, at] = stack.back();
                const auto faces = complex.cell_faces(CellId{dim, index});
                bool advanced = false;
                while (at < faces.size() && !advanced) {
                    const CellId face = faces[at++];
                    const std::int32_t next = partner_[complex.global_id(face)];
                    if (next < 0) continue;
                    const CellId next_cell = complex.cell_from_global(next);
                    if (next_cell.dim != dim || next_cell.index == index) continue;
                    if (color[next_cell.index] == 1) {
                        throw MorseError(ErrorKind::CycleDetected,
                                         "closed V-path through cell " + cell_name(next_cell));
                    }
                    if (color[next_cell.index] == 0) {
                        color[next_cell.index] = 1;
                        stack.push_back({next_cell.index, 0});
                        advanced = true;
                    }
                }
                if (!advanced) {
                    color[index] = 2;
                    stack.pop_back();
                }
            }
        }
    }
}

namespace {

struct StarOrder {
    const CellComplex& complex;
    const ScalarField& field;
    bool less(CellId a, CellId b) const {
        const auto ta = field.cell_tuple(complex, a), tb = field.cell_tuple(complex, b);
        if (ta != tb) return ta < tb;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.index < b.index;
    }
};

}  // namespace

DiscreteGradient build_gradient(const CellComplex& complex, const ScalarField& field) {
    field.ensure_matches(complex);
    DiscreteGradient gradient(complex);
    const StarOrder order{complex, field};
    const auto greater = [&order](CellId a, CellId b) { return order.less(b, a); };

    for (std::int32_t v = 0; v < complex.vertex_count(); ++v) {
        const std::vector<CellId> star = field.lower_star(complex, v);
        if (star.size() == 1) continue;  // lone vertex stays critical

        std::set<CellId> in_star(star.begin(), star.end());
        std::set<CellId> assigned;
        const auto unpaired_faces = [&](CellId cell) {
            std::vector<CellId> faces;
            for (const CellId face : complex.cell_faces(cell)) {
                if (in_star.count(face) && !assigned.count(face)) faces.push_back(face);
            }
            return faces;
        };
        std::priority_queue<CellId, std::vector<CellId>, decltype(greater)> one(greater);
        std::priority_queue<CellId, std::vector<CellId>, decltype(greater)> zero(greater);
        const auto enqueue_cofaces = [&](CellId cell) {
            for (const CellId coface : complex.cell_cofaces(cell)) {
                if (in_star.count(coface) && !assigned.count(coface) &&
                    unpaired_faces(coface).size() == 1) {
                    one.push(coface);
                }
            }
        };

        // The vertex pairs with its steepest edge; expansion spreads from there:
        // a cell with exactly one unpaired face consumes it, and cells left with
        // none become critical in order.
        CellId steepest{};
        bool have_edge = false;
        for (const CellId cell : star) {
            if (cell.dim != 1) continue;
            if (!have_edge || order.less(cell, steepest)) {
                steepest = cell;
                have_edge = true;
            }
        }
        if (!have_edge) {
            throw MorseError(ErrorKind::InvariantViolation,
                             "lower star of vertex " + std::to_string(v) + " has no edge");
        }
        const CellId apex = vertex_cell(v);
        assigned.insert(apex);
        assigned.insert(steepest);
        gradient.match(complex, apex, steepest);
        for (const CellId cell : star) {
            if (cell.dim == 1 && cell != steepest) zero.push(cell);
        }
        enqueue_cofaces(steepest);

        while (!one.empty() || !zero.empty()) {
            while (!one.empty()) {
                const CellId cell = one.top();
                one.pop();
                if (assigned.count(cell)) continue;
                const auto faces = unpaired_faces(cell);
                if (faces.empty()) {
                    zero.push(cell);
                    continue;
                }
                const CellId face = faces.front();
                assigned.insert(cell);
                assigned.insert(face);
                gradient.match(complex, face, cell);
                enqueue_cofaces(cell);
                enqueue_cofaces(face);
            }
            while (!zero.empty()) {
                const CellId cell = zero.top();
                zero.pop();
                if (assigned.count(cell)) continue;
                assigned.insert(cell);  // critical
                enqueue_cofaces(cell);
                break;
            }
        }
    }

    const auto counts = gradient.census(complex);
    log_info("build_gradient: census (" + std::to_string(counts[0]) + ", " +
             std::to_string(counts[1]) + ", " + std::to_string(counts[2]) + ")");
    return gradient;
}

std::vector<CriticalCell> critical_cells(const CellComplex& complex, const ScalarField& field,
                                         const DiscreteGradient& gradient) {
    std::vector<CriticalCell> cells;
    for (std::int32_t gid = 0; gid < complex.total_cells(); ++gid) {
        const CellId cell = complex.cell_from_global(gid);
        if (gradient.is_critical(complex, cell)) {
            cells.push_back({cell, cell.dim, field.cell_value(complex, cell)});
        }
    }
    std::sort(cells.begin(), cells.end(), [](const CriticalCell& a, const CriticalCell& b) {
        if (a.morse_index != b.morse_index) return a.morse_index < b.morse_index;
        if (a.value != b.value) return a.value < b.value;
        return a.cell.index < b.cell.index;
    });
    return cells;
}

std::vector<VPath> descending_paths(const CellComplex& complex, const DiscreteGradient& gradient,
                                    CellId start) {
    if (start.dim < 1 || !gradient.is_critical(complex, start)) {
        throw MorseError(ErrorKind::NotCritical,
                         "descending_paths: " + cell_name(start) +
                             " is not a critical cell of dimension >= 1");
    }
    std::vector<VPath> paths;
    std::vector<CellId> current{start};
    std::set<CellId> on_path{start};

    const std::function<void(CellId)> extend = [&](CellId upper) {
        for (const CellId face : complex.cell_faces(upper)) {
            const auto partner = gradient.partner(complex, face);
            if (partner && *partner == upper) continue;
            current.push_back(face);
            const bool exits = face.dim == 0 && complex.is_boundary(face);
            if (!partner || exits) {
                paths.push_back({current, face, false, exits});
            } else if (partner->dim < face.dim) {
                paths.push_back({current, face, true, false});
            } else {
                if (on_path.count(*partner)) {
                    throw MorseError(ErrorKind::CycleDetected,
                                     "closed V-path through cell " + cell_name(*partner));
                }
                current.push_back(*partner);
                on_path.insert(*partner);
                extend(*partner);
                on_path.erase(*partner);
                current.pop_back();
            }
            current.pop_back();
        }
    };
    extend(start);
    return paths;
}

std::vector<VPath> connecting_paths(const CellComplex& complex, const DiscreteGradient& gradient,
                                    CellId p, CellId q) {
    if (p.dim != q.dim + 1) {
        throw MorseError(ErrorKind::IndexMismatch,
                         "connecting_paths: " + cell_name(p) + " and " + cell_name(q) +
                             " are not of consecutive dimension");
    }
    if (!gradient.is_critical(complex, q)) {
        throw MorseError(ErrorKind::NotCritical, cell_name(q) + " is not critical");
    }
    std::vector<VPath> connecting;
    for (auto& path : descending_paths(complex, gradient, p)) {
        if (!path.dead_end && path.terminal == q) connecting.push_back(std::move(path));
    }
    return connecting;
}

namespace {

// Saturating path counter over the V-path relation; memo holds -1 = unknown,
// -2 = on stack (a revisit means the relation has a cycle).
struct PathCounter {
    const CellComplex& complex;
    const DiscreteGradient& gradient;
    CellId target;
    std::vector<std::int64_t> memo;

    PathCounter(const CellComplex& c, const DiscreteGradient& g, CellId q)
        : complex(c), gradient(g), target(q), memo(c.total_cells(), -1) {}

    std::int64_t from_lower(CellId cell) {
        if (cell == target) return 1;
        if (cell.dim == 0 && complex.is_boundary(cell)) return 0;  // orbit exits the complex
        const auto partner = gradient.partner(complex, cell);
        if (!partner || partner->dim < cell.dim) return 0;  // other critical, or dead end
        return from_upper(*partner);
    }

    std::int64_t from_upper(CellId cell) {
        const std::int32_t gid = complex.global_id(cell);
        if (memo[gid] == -2) {
            throw MorseError(ErrorKind::CycleDetected,
                             "closed V-path through cell " + cell_name(cell));
        }
        if (memo[gid] >= 0) return memo[gid];
        memo[gid] = -2;
        std::int64_t total = 0;
        for (const CellId face : complex.cell_faces(cell)) {
            const auto partner = gradient.partner(complex, face);
            if (partner && *partner == cell) continue;
            total = std::min(kCountCap, total + from_lower(face));
        }
        return memo[gid] = total;
    }
};

}  // namespace

std::int64_t count_connecting_paths(const CellComplex& complex, const DiscreteGradient& gradient,
                                    CellId p, CellId q) {
    if (p.dim != q.dim + 1) {
        throw MorseError(ErrorKind::IndexMismatch,
                         "count_connecting_paths: " + cell_name(p) + " and " + cell_name(q) +
                             " are not of consecutive dimension");
    }
    if (!gradient.is_critical(complex, p) || !gradient.is_critical(complex, q)) {
        throw MorseError(ErrorKind::NotCritical,
                         "count_connecting_paths: both endpoints must be critical");
    }
    PathCounter counter(complex, gradient, q);
    return counter.from_upper(p);
}

VPath unique_connector(const CellComplex& complex, const DiscreteGradient& gradient, CellId p,
                       CellId q) {
    PathCounter counter(complex, gradient, q);
    if (counter.from_upper(p) != 1) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "unique_connector: path from " + cell_name(p) + " to " + cell_name(q) +
                             " is not unique");
    }
    VPath path;
    path.cells.push_back(p);
    CellId upper = p;
    while (true) {
        CellId chosen{};
        bool found = false;
        for (const CellId face : complex.cell_faces(upper)) {
            const auto partner = gradient.partner(complex, face);
            if (partner && *partner == upper) continue;
            if (counter.from_lower(face) > 0) {
                chosen = face;
                found = true;
                break;
            }
        }
        if (!found) {
            throw MorseError(ErrorKind::InvariantViolation, "unique_connector: walk lost the path");
        }
        path.cells.push_back(chosen);
        if (chosen == q) {
            path.terminal = q;
            path.dead_end = false;
            return path;
        }
        upper = *gradient.partner(complex, chosen);
        path.cells.push_back(upper);
    }
}

std::vector<std::int32_t> vertex_flow(const CellComplex& complex, const DiscreteGradient& gradient,
                                      std::int32_t w) {
    std::vector<std::int32_t> sequence{w};
    std::int32_t current = w;
    while (true) {
        if (complex.is_boundary(vertex_cell(current))) return sequence;  // orbit exits
        const auto partner = gradient.partner(complex, vertex_cell(current));
        if (!partner) return sequence;  // critical vertex: the orbit's minimum
        const auto ends = complex.edge_vertices(partner->index);
        current = (ends[0] == current) ? ends[1] : ends[0];
        sequence.push_back(current);
        if (sequence.size() > static_cast<std::size_t>(complex.vertex_count())) {
            throw MorseError(ErrorKind::CycleDetected, "vertex flow does not terminate");
        }
    }
}

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
constexpr double kPlusInf = std::numeric_limits<double>::infinity();

// Deepest terminal value over descending orbits, memoized per upper cell.
// Dead ends continue through the vertex flow, so a (2,1) orbit's reach is the
// value of the minimum it finally drains to.
struct DescentReach {
    const CellComplex& complex;
    const ScalarField& field;
    const DiscreteGradient& gradient;
    std::optional<CellId> exempt;
    std::vector<double> memo;
    std::vector<char> state;

    DescentReach(const CellComplex& c, const ScalarField& f, const DiscreteGradient& g,
                 std::optional<CellId> x)
        : complex(c), field(f), gradient(g), exempt(x), memo(c.total_cells(), 0),
          state(c.total_cells(), 0) {}

    double from_lower(CellId cell) {
        if (exempt && cell == *exempt) return kMinusInf;
        if (cell.dim == 0 && complex.is_boundary(cell)) return field.cell_value(complex, cell);
        const auto partner = gradient.partner(complex, cell);
        if (!partner) return field.cell_value(complex, cell);
        if (partner->dim < cell.dim) {
            // Edge matched below: the orbit slips through its free endpoint.
            const auto ends = complex.edge_vertices(cell.index);
            const std::int32_t free = (vertex_cell(ends[0]) == *partner) ? ends[1] : ends[0];
            const auto flow = vertex_flow(complex, gradient, free);
            const std::int32_t terminal = flow.back();
            if (exempt && vertex_cell(terminal) == *exempt) return kMinusInf;
            return field.value(terminal);
        }
        return from_upper(*partner);
    }

    double from_upper(CellId cell) {
        const std::int32_t gid = complex.global_id(cell);
        if (state[gid] == 1) {
            throw MorseError(ErrorKind::CycleDetected,
                             "closed V-path through cell " + cell_name(cell));
        }
        if (state[gid] == 2) return memo[gid];
        state[gid] = 1;
        double reach = kMinusInf;
        for (const CellId face : complex.cell_faces(cell)) {
            const auto partner = gradient.partner(complex, face);
            if (partner && *partner == cell) continue;
            reach = std::max(reach, from_lower(face));
        }
        state[gid] = 2;
        return memo[gid] = reach;
    }
};

// Ascending mirror: orbits climb through cofaces; an edge matched upward is
// consumed by its triangle, and from there the orbit keeps climbing the
// (1,2)-band until a critical triangle (or a stall with no coface to take).
struct AscentReach {
    const CellComplex& complex;
    const ScalarField& field;
    const DiscreteGradient& gradient;
    std::vector<double> memo;
    std::vector<char> state;

    AscentReach(const CellComplex& c, const ScalarField& f, const DiscreteGradient& g)
        : complex(c), field(f), gradient(g), memo(c.total_cells(), 0),
          state(c.total_cells(), 0) {}

    double from_upper(CellId cell) {
        const auto partner = gradient.partner(complex, cell);
        if (!partner) return field.cell_value(complex, cell);
        if (partner->dim > cell.dim) return from_lower(cell);  // dead end upward
        return from_lower(*partner);
    }

    double from_lower(CellId cell) {
        const std::int32_t gid = complex.global_id(cell);
        if (state[gid] == 1) {
            throw MorseError(ErrorKind::CycleDetected,
                             "closed V-path through cell " + cell_name(cell));
        }
        if (state[gid] == 2) return memo[gid];
        state[gid] = 1;
        double reach = kPlusInf;
        bool moved = false;
        const auto partner = gradient.partner(complex, cell);
        for (const CellId coface : complex.cell_cofaces(cell)) {
            if (partner && *partner == coface) continue;
            reach = std::min(reach, from_upper(coface));
            moved = true;
        }
        if (!moved) reach = field.cell_value(complex, cell);  // stalled orbit
        state[gid] = 2;
        return memo[gid] = reach;
    }
};

}  // namespace

double worst_descent_reach(const CellComplex& complex, const ScalarField& field,
                           const DiscreteGradient& gradient, CellId p,
                           std::optional<CellId> exempt) {
    DescentReach reach(complex, field, gradient, exempt);
    double worst = kMinusInf;
    for (const CellId face : complex.cell_faces(p)) {
        worst = std::max(worst, reach.from_lower(face));
    }
    return worst;
}

double worst_ascent_reach(const CellComplex& complex, const ScalarField& field,
                          const DiscreteGradient& gradient, CellId p) {
    AscentReach reach(complex, field, gradient);
    return reach.from_lower(p);
}

std::vector<CellId> descending_region_above(const CellComplex& complex, const ScalarField& field,
                                            const DiscreteGradient& gradient, CellId p,
                                            double cutoff) {
    std::set<CellId> region;
    std::vector<CellId> stack;
    const auto push_lower = [&](CellId cell) {
        if (field.cell_value(complex, cell) > cutoff && !region.count(cell)) {
            region.insert(cell);
            stack.push_back(cell);
        }
    };
    if (field.cell_value(complex, p) > cutoff) region.insert(p);
    for (const CellId face : complex.cell_faces(p)) push_lower(face);

    while (!stack.empty()) {
        const CellId cell = stack.back();
        stack.pop_back();
        if (cell.dim == 0 && complex.is_boundary(cell)) continue;  // orbit exits here
        const auto partner = gradient.partner(complex, cell);
        if (!partner) continue;  // critical terminal
        if (partner->dim < cell.dim) {
            const auto ends = complex.edge_vertices(cell.index);
            const std::int32_t free = (vertex_cell(ends[0]) == *partner) ? ends[1] : ends[0];
            push_lower(vertex_cell(free));
            continue;
        }
        if (field.cell_value(complex, *partner) > cutoff && !region.count(*partner)) {
            region.insert(*partner);
            for (const CellId face : complex.cell_faces(*partner)) {
                const auto fp = gradient.partner(complex, face);
                if (fp && *fp == *partner) continue;
                push_lower(face);
            }
        }
    }
    std::vector<CellId> sorted(region.begin(), region.end());
    return sorted;
}

std::vector<CellId> ascending_region_below(const CellComplex& complex, const ScalarField& field,
                                           const DiscreteGradient& gradient, CellId p,
                                           double cutoff) {
    std::set<CellId> region;
    std::vector<CellId> stack;
    const auto push_lower = [&](CellId cell) {
        if (field.cell_value(complex, cell) < cutoff && !region.count(cell)) {
            region.insert(cell);
            stack.push_back(cell);
        }
    };
    push_lower(p);
    while (!stack.empty()) {
        const CellId cell = stack.back();
        stack.pop_back();
        const auto partner = gradient.partner(complex, cell);
        for (const CellId coface : complex.cell_cofaces(cell)) {
            if (partner && *partner == coface) continue;
            if (field.cell_value(complex, coface) >= cutoff) continue;
            if (region.count(coface)) continue;
            region.insert(coface);
            const auto cpartner = gradient.partner(complex, coface);
            if (cpartner && cpartner->dim < coface.dim) {
                push_lower(*cpartner);  // climbed into a matched pair: keep going
            } else if (cpartner && cpartner->dim > coface.dim) {
                stack.push_back(coface);  // dead end upward: continue in the next band
            }
        }
    }
    std::vector<CellId> sorted(region.begin(), region.end());
    return sorted;
}

}  // namespace morseforge
