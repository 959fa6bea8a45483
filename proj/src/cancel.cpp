#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "morseforge/cancel.hpp"
#include "morseforge/errors.hpp"
#include "morseforge/log.hpp"
#include "morseforge/persistence.hpp"

namespace morseforge {

namespace {

std::string cell_name(CellId cell) {
    return "(" + std::to_string(cell.dim) + ":" + std::to_string(cell.index) + ")";
}

std::string pair_name(const CancellationPlan& plan) {
    return "p=" + cell_name(plan.p.cell) + " q=" + cell_name(plan.q.cell);
}

/// Region cells plus every coface of a region cell: one star outward, the
/// open neighborhood the deformation is allowed to touch.
std::vector<CellId> with_cofaces(const CellComplex& complex, const std::vector<CellId>& region) {
    std::vector<char> in(complex.total_cells(), 0);
    for (CellId cell : region) in[complex.global_id(cell)] = 1;
    std::vector<char> keep = in;
    for (std::int32_t e = 0; e < complex.edge_count(); ++e) {
        if (keep[complex.global_id(edge_cell(e))]) continue;
        const auto& ends = complex.edge_vertices(e);
        if (in[complex.global_id(vertex_cell(ends[0]))] ||
            in[complex.global_id(vertex_cell(ends[1]))]) {
            keep[complex.global_id(edge_cell(e))] = 1;
        }
    }
    for (std::int32_t t = 0; t < complex.triangle_count(); ++t) {
        if (keep[complex.global_id(triangle_cell(t))]) continue;
        bool touched = false;
        for (std::int32_t v : complex.triangle_vertices(t)) {
            touched = touched || in[complex.global_id(vertex_cell(v))] != 0;
        }
        for (std::int32_t e : complex.triangle_edges(t)) {
            touched = touched || in[complex.global_id(edge_cell(e))] != 0;
        }
        if (touched) keep[complex.global_id(triangle_cell(t))] = 1;
    }
    std::vector<CellId> out;
    for (std::int32_t gid = 0; gid < complex.total_cells(); ++gid) {
        if (keep[gid]) out.push_back(complex.cell_from_global(gid));
    }
    return out;  // global-id order is (dim, index) order
}

void require_critical(const CellComplex& complex, const DiscreteGradient& gradient,
                      const ScalarField& field, const CriticalCell& cc, const char* role) {
    if (!gradient.is_critical(complex, cc.cell)) {
        throw MorseError(ErrorKind::NotCritical,
                         std::string(role) + " " + cell_name(cc.cell) + " is matched");
    }
    if (cc.value != field.cell_value(complex, cc.cell)) {
        throw MorseError(ErrorKind::InvariantViolation,
                         std::string(role) + " " + cell_name(cc.cell) +
                             " carries a value from another field");
    }
}

double linf_diff(const ScalarField& a, const ScalarField& b) {
    double worst = 0.0;
    for (std::int32_t v = 0; v < a.vertex_count(); ++v) {
        worst = std::max(worst, std::abs(a.value(v) - b.value(v)));
    }
    return worst;
}

}  // namespace

const char* to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::IndexMismatch: return "IndexMismatch";
        case RejectReason::NoPath: return "NoPath";
        case RejectReason::MultiplePaths: return "MultiplePaths";
        case RejectReason::TrappedOrbit: return "TrappedOrbit";
    }
    return "?";
}

CancelDecision is_cancelable(const CellComplex& complex, const ScalarField& field,
                             const DiscreteGradient& gradient, const CriticalCell& p,
                             const CriticalCell& q, double epsilon) {
    field.ensure_matches(complex);
    if (!(epsilon > 0.0)) {
        throw MorseError(ErrorKind::InvariantViolation, "is_cancelable: epsilon must be positive");
    }
    require_critical(complex, gradient, field, p, "is_cancelable: p");
    require_critical(complex, gradient, field, q, "is_cancelable: q");

    if (p.cell.dim != q.cell.dim + 1) return {std::nullopt, RejectReason::IndexMismatch};

    const std::int64_t routes = count_connecting_paths(complex, gradient, p.cell, q.cell);
    if (routes == 0) return {std::nullopt, RejectReason::NoPath};
    if (routes > 1) return {std::nullopt, RejectReason::MultiplePaths};

    const double cutoff = q.value - epsilon;
    const double reach = worst_descent_reach(complex, field, gradient, p.cell, q.cell);
    if (!(reach < cutoff)) return {std::nullopt, RejectReason::TrappedOrbit};

    CancellationPlan plan;
    plan.p = p;
    plan.q = q;
    plan.path = unique_connector(complex, gradient, p.cell, q.cell);
    plan.support =
        with_cofaces(complex, descending_region_above(complex, field, gradient, p.cell, cutoff));
    plan.epsilon = epsilon;
    plan.persistence = p.value - q.value;
    plan.revision = gradient.revision();
    log_trace("is_cancelable: " + pair_name(plan) + " ok, support " +
              std::to_string(plan.support.size()) + " cells");
    return {std::move(plan), std::nullopt};
}

DiscreteGradient cancel_pair(const CellComplex& complex, const DiscreteGradient& gradient,
                             const CancellationPlan& plan) {
    if (plan.revision != gradient.revision()) {
        throw MorseError(ErrorKind::StalePlan,
                         "cancel_pair: gradient moved on since the plan was made (" +
                             std::to_string(gradient.revision()) + " != " +
                             std::to_string(plan.revision) + ")");
    }
    const auto& cells = plan.path.cells;
    if (cells.size() < 2 || cells.size() % 2 != 0 || cells.front() != plan.p.cell ||
        cells.back() != plan.q.cell || plan.path.terminal != plan.q.cell) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "cancel_pair: malformed connector for " + pair_name(plan));
    }
    if (!gradient.is_critical(complex, plan.p.cell) || !gradient.is_critical(complex, plan.q.cell)) {
        throw MorseError(ErrorKind::NotCritical, "cancel_pair: " + pair_name(plan));
    }

    DiscreteGradient out = gradient;
    for (std::size_t i = 1; i + 1 < cells.size(); i += 2) {
        out.unmatch(complex, cells[i], cells[i + 1]);
    }
    for (std::size_t i = 0; i + 1 < cells.size(); i += 2) {
        out.match(complex, cells[i + 1], cells[i]);
    }
    out.bump_revision();
    out.check_acyclic(complex);
    log_info("cancel_pair: reversed " + pair_name(plan) + ", " +
             std::to_string(cells.size() / 2) + " pairs on the connector");
    return out;
}

ScalarField lower_critical_value(const CellComplex& complex, const DiscreteGradient& gradient,
                                 const ScalarField& field, const CriticalCell& p, double a,
                                 double epsilon) {
    field.ensure_matches(complex);
    if (!(epsilon > 0.0)) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "lower_critical_value: epsilon must be positive");
    }
    require_critical(complex, gradient, field, p, "lower_critical_value: p");
    if (!(a < p.value)) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "lower_critical_value: target level " + std::to_string(a) +
                             " is not below value(p) = " + std::to_string(p.value));
    }
    const double reach = worst_descent_reach(complex, field, gradient, p.cell, std::nullopt);
    if (!(reach <= a)) {
        throw MorseError(ErrorKind::OrbitBelowLevelMissing,
                         "lower_critical_value: an orbit from " + cell_name(p.cell) +
                             " only descends to " + std::to_string(reach) + " > " +
                             std::to_string(a));
    }
    if (p.value < a + epsilon) return field;  // already inside the window

    const auto region = descending_region_above(complex, field, gradient, p.cell, a);
    std::vector<char> mover(field.vertex_count(), 0);
    std::vector<std::int32_t> movers;
    for (CellId cell : region) {
        if (cell.dim != 0) continue;
        mover[cell.index] = 1;
        movers.push_back(cell.index);
    }

    // Shrink (a, a + epsilon) so that re-ranking flips no cell's maximum
    // vertex: statics under a moving maximum push the floor up, static maxima
    // over a mover pull the ceiling down.
    double bottom = a, top = a + epsilon;
    auto scan_cell = [&](CellId cell) {
        const std::int32_t mx = field.max_vertex(complex, cell);
        if (mover[mx]) {
            for (std::int32_t w : complex.cell_vertices(cell)) {
                if (!mover[w]) bottom = std::max(bottom, field.value(w));
            }
        } else {
            top = std::min(top, field.value(mx));
        }
    };
    for (std::int32_t v : movers) {
        for (std::int32_t e : complex.vertex_edges(v)) scan_cell(edge_cell(e));
        for (std::int32_t t : complex.vertex_triangles(v)) scan_cell(triangle_cell(t));
    }
    if (!(bottom < top)) {
        throw MorseError(ErrorKind::BudgetTooTight,
                         "lower_critical_value: neighbors pin the window to [" +
                             std::to_string(bottom) + ", " + std::to_string(top) + "]");
    }

    std::sort(movers.begin(), movers.end(),
              [&](std::int32_t u, std::int32_t v) { return field.rank(u) < field.rank(v); });
    std::vector<double> values = field.values();
    const double span = top - bottom;
    const auto count = static_cast<double>(movers.size());
    for (std::size_t i = 0; i < movers.size(); ++i) {
        values[movers[i]] = bottom + span * static_cast<double>(i + 1) / (count + 1.0);
        if (i > 0 && !(values[movers[i - 1]] < values[movers[i]])) {
            throw MorseError(ErrorKind::BudgetTooTight,
                             "lower_critical_value: window below value resolution for " +
                                 std::to_string(movers.size()) + " vertices");
        }
    }
    log_info("lower_critical_value: " + std::to_string(movers.size()) + " vertices of " +
             cell_name(p.cell) + " re-ranked into (" + std::to_string(bottom) + ", " +
             std::to_string(top) + ")");
    return ScalarField(std::move(values));
}

ScalarField realize_function(const CellComplex& complex, const DiscreteGradient& g_prime,
                             const ScalarField& field, const CancellationPlan& plan) {
    field.ensure_matches(complex);
    const auto& cells = plan.path.cells;
    if (cells.size() < 2 || cells.size() % 2 != 0) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "realize_function: malformed connector for " + pair_name(plan));
    }
    // The plan must already be applied: every pair along the connector
    // reversed, in particular p and q matched into it.
    for (std::size_t i = 0; i + 1 < cells.size(); i += 2) {
        const auto partner = g_prime.partner(complex, cells[i]);
        if (!partner || *partner != cells[i + 1]) {
            throw MorseError(ErrorKind::StalePlan,
                             "realize_function: gradient is not the cancellation of " +
                                 pair_name(plan));
        }
    }

    std::vector<char> in_support(complex.total_cells(), 0);
    for (CellId cell : plan.support) in_support[complex.global_id(cell)] = 1;

    // Topological order of the support cells under the reversed V-path
    // relation: face steps, and matched-pair steps upward. q is the unique
    // source among the cells that carry flow.
    std::map<std::int32_t, std::size_t> node_of;
    for (std::size_t i = 0; i < plan.support.size(); ++i) {
        node_of[complex.global_id(plan.support[i])] = i;
    }
    std::vector<std::vector<std::size_t>> out_edges(plan.support.size());
    std::vector<std::size_t> indegree(plan.support.size(), 0);
    auto add_edge = [&](std::size_t from, std::size_t to) {
        out_edges[from].push_back(to);
        ++indegree[to];
    };
    for (std::size_t i = 0; i < plan.support.size(); ++i) {
        const CellId cell = plan.support[i];
        for (CellId face : complex.cell_faces(cell)) {
            const auto it = node_of.find(complex.global_id(face));
            if (it == node_of.end()) continue;
            const auto partner = g_prime.partner(complex, face);
            if (partner && *partner == cell) continue;  // pair edge points the other way
            add_edge(i, it->second);
        }
        const auto partner = g_prime.partner(complex, cell);
        if (partner && partner->dim == cell.dim + 1) {
            const auto it = node_of.find(complex.global_id(*partner));
            if (it != node_of.end()) add_edge(i, it->second);
        }
    }
    const auto later = [&](std::size_t x, std::size_t y) {
        // Pop higher old values first so that a cell's maximum vertex keeps
        // its lead over the sub-maximum ones.
        return field.cell_before(complex, plan.support[y], plan.support[x]) ||
               (!field.cell_before(complex, plan.support[x], plan.support[y]) && x < y);
    };
    std::set<std::size_t, decltype(later)> ready(later);
    for (std::size_t i = 0; i < plan.support.size(); ++i) {
        if (indegree[i] == 0) ready.insert(i);
    }
    std::vector<std::int32_t> vertex_order;
    std::size_t emitted = 0;
    while (!ready.empty()) {
        const std::size_t i = *ready.begin();
        ready.erase(ready.begin());
        ++emitted;
        if (plan.support[i].dim == 0) vertex_order.push_back(plan.support[i].index);
        for (std::size_t j : out_edges[i]) {
            if (--indegree[j] == 0) ready.insert(j);
        }
    }
    if (emitted != plan.support.size()) {
        throw MorseError(ErrorKind::CycleDetected,
                         "realize_function: support flow is not acyclic for " + pair_name(plan));
    }

    // Monotone ramp through the band (value(q) - epsilon, value(q)], pinned
    // at q and descending along the flow: the discrete h1 envelope.
    std::vector<double> values = field.values();
    const auto count = static_cast<double>(vertex_order.size());
    for (std::size_t i = 0; i < vertex_order.size(); ++i) {
        values[vertex_order[i]] =
            plan.q.value - plan.epsilon * static_cast<double>(i) / count;
        if (i > 0 && !(values[vertex_order[i]] < values[vertex_order[i - 1]])) {
            throw MorseError(ErrorKind::FrontierConflict,
                             "realize_function: epsilon below value resolution across " +
                                 std::to_string(vertex_order.size()) + " vertices");
        }
    }
    ScalarField deformed(std::move(values));

    const double moved = linf_diff(deformed, field);
    if (moved > plan.persistence + plan.epsilon) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "realize_function: perturbation " + std::to_string(moved) +
                             " exceeds the bound for " + pair_name(plan));
    }
    const auto want = g_prime.census(complex);
    const auto got = build_gradient(complex, deformed).census(complex);
    if (want != got) {
        throw MorseError(ErrorKind::FrontierConflict,
                         "realize_function: frontier of " + pair_name(plan) +
                             " breaks the census (expected " + std::to_string(want[0]) + "/" +
                             std::to_string(want[1]) + "/" + std::to_string(want[2]) + ", built " +
                             std::to_string(got[0]) + "/" + std::to_string(got[1]) + "/" +
                             std::to_string(got[2]) + "); enlarge epsilon");
    }
    log_info("realize_function: " + pair_name(plan) + " realized, " +
             std::to_string(vertex_order.size()) + " vertices moved, sup-change " +
             std::to_string(moved));
    return deformed;
}

PathCensus sample_deformation(const CellComplex& complex, const ScalarField& field,
                              const ScalarField& field_prime, const CancellationPlan& plan,
                              std::int32_t n) {
    if (n < 3) {
        throw MorseError(ErrorKind::InvariantViolation, "sample_deformation: need n >= 3 samples");
    }
    field.ensure_matches(complex);
    field_prime.ensure_matches(complex);
    std::vector<char> in_support(complex.total_cells(), 0);
    for (CellId cell : plan.support) in_support[complex.global_id(cell)] = 1;

    PathCensus out;
    bool collapsed = false;
    for (std::int32_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        std::vector<double> values(field.vertex_count());
        for (std::int32_t v = 0; v < field.vertex_count(); ++v) {
            values[v] = (1.0 - t) * field.value(v) + t * field_prime.value(v);
        }
        const ScalarField step(std::move(values));
        const DiscreteGradient gradient = build_gradient(complex, step);
        std::array<std::int32_t, 3> census{0, 0, 0};
        for (const CriticalCell& cc : critical_cells(complex, step, gradient)) {
            if (in_support[complex.global_id(cc.cell)]) ++census[cc.cell.dim];
        }
        const bool empty = census[0] + census[1] + census[2] == 0;
        if (empty && !collapsed) {
            collapsed = true;
            out.transition_index = i;
            out.t_star = t;
        }
        if (!empty && collapsed) {
            throw MorseError(ErrorKind::NonMonotoneCensus,
                             "sample_deformation: support census refills at t = " +
                                 std::to_string(t));
        }
        out.ts.push_back(t);
        out.support_census.push_back(census);
    }
    if (!collapsed) {
        throw MorseError(ErrorKind::NonMonotoneCensus,
                         "sample_deformation: support census never empties; " + pair_name(plan) +
                             " was not realized");
    }
    return out;
}

std::pair<ScalarField, SimplifyReport> simplify(const CellComplex& complex,
                                                const ScalarField& field, double threshold,
                                                std::int32_t census_scan) {
    field.ensure_matches(complex);
    if (threshold < 0.0) {
        throw MorseError(ErrorKind::InvariantViolation, "simplify: threshold must be >= 0");
    }
    if (census_scan != 0 && census_scan < 3) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "simplify: census scan needs at least 3 samples");
    }

    double value_scale = 1.0;
    for (double v : field.values()) value_scale = std::max(value_scale, std::abs(v));

    ScalarField current = field;
    SimplifyReport report;
    double epsilon_sum = 0.0;
    for (;;) {
        const DiscreteGradient gradient = build_gradient(complex, current);
        const auto pairs = persistence_pairs(complex, current);
        bool advanced = false;
        for (const auto& [death, birth] : schedule(pairs, threshold)) {
            const CriticalCell p{death, death.dim, current.cell_value(complex, death)};
            const CriticalCell q{birth, birth.dim, current.cell_value(complex, birth)};
            const double persistence = p.value - q.value;
            const double epsilon =
                persistence > 0.0 ? persistence / 100.0 : 1e-12 * value_scale;
            const CancelDecision decision = is_cancelable(complex, current, gradient, p, q, epsilon);
            if (!decision.ok()) {
                log_trace("simplify: pair p=" + cell_name(death) + " q=" + cell_name(birth) +
                          " rejected: " + to_string(*decision.rejection));
                continue;
            }
            const CancellationPlan& plan = *decision.plan;
            const DiscreteGradient after = cancel_pair(complex, gradient, plan);
            ScalarField deformed = [&] {
                try {
                    return realize_function(complex, after, current, plan);
                } catch (const MorseError& err) {
                    if (err.kind() == ErrorKind::FrontierConflict) {
                        throw MorseError(ErrorKind::FrontierConflict,
                                         "simplify: " + pair_name(plan) + ": " + err.what());
                    }
                    throw;
                }
            }();
            if (census_scan != 0) {
                const PathCensus scan =
                    sample_deformation(complex, current, deformed, plan, census_scan);
                report.transitions.push_back(scan.t_star);
            }
            report.plans.push_back({plan.p, plan.q, plan.persistence,
                                    static_cast<std::int32_t>(plan.support.size()),
                                    linf_diff(deformed, current)});
            epsilon_sum += plan.epsilon;
            current = std::move(deformed);
            advanced = true;
            break;
        }
        if (!advanced) break;
    }

    report.final_census = build_gradient(complex, current).census(complex);
    report.euler = complex.euler_characteristic();
    report.total_perturbation = linf_diff(current, field);
    report.perturbation_bound = threshold + epsilon_sum;
    log_info("simplify: " + std::to_string(report.plans.size()) + " cancellations, final census " +
             std::to_string(report.final_census[0]) + "/" + std::to_string(report.final_census[1]) +
             "/" + std::to_string(report.final_census[2]));
    return {std::move(current), std::move(report)};
}

}  // namespace morseforge
