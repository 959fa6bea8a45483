#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "morseforge/gradient.hpp"

namespace morseforge {

/// Why a (p, q) pair cannot be canceled. These are soft rejections, not
/// errors: a caller doing gradient-only surgery may ignore TrappedOrbit,
/// which only matters once the deformed function has to be realized.
enum class RejectReason {
    IndexMismatch,
    NoPath,
    MultiplePaths,
    TrappedOrbit,
};

const char* to_string(RejectReason reason);

/// Immutable snapshot of one cancellation. revision pins the gradient the
/// plan was made against; any later mutation invalidates it (StalePlan).
/// support is closed under taking cofaces of the affected descending region,
/// so every cell whose lower star the deformation can touch is listed.
struct CancellationPlan {
    CriticalCell p;
    CriticalCell q;
    VPath path;                   // the unique connector, p down to q
    std::vector<CellId> support;  // sorted by (dim, index)
    double epsilon = 0.0;
    double persistence = 0.0;  // value(p) - value(q)
    std::uint64_t revision = 0;
};

struct CancelDecision {
    std::optional<CancellationPlan> plan;
    std::optional<RejectReason> rejection;

    bool ok() const { return plan.has_value(); }
};

/// Decides cancelability of the critical pair (p, q): dim p = dim q + 1,
/// exactly one connecting V-path, and every other descending orbit from p
/// escapes below value(q) - epsilon (possibly through the boundary).
/// Throws MorseError{NotCritical} when either cell is matched.
CancelDecision is_cancelable(const CellComplex& complex, const ScalarField& field,
                             const DiscreteGradient& gradient, const CriticalCell& p,
                             const CriticalCell& q, double epsilon);

/// Reverses the matching along plan.path: every matched pair on the connector
/// flips, p pairs with its path face and q with its path coface. Exactly
/// {p, q} leave the critical set; acyclicity is preserved because the
/// connector was unique. Throws StalePlan if the gradient moved on since the
/// plan was made, CycleDetected if the post-reversal check fails.
DiscreteGradient cancel_pair(const CellComplex& complex, const DiscreteGradient& gradient,
                             const CancellationPlan& plan);

/// Strictly increasing envelope h1 <= h agreeing with h on the first and last
/// margin samples; u is the uniform parameter grid. The 1-D kernel every
/// deformed value profile is patterned on.
struct MonotoneProfile {
    std::vector<double> u;
    std::vector<double> h;
    std::vector<double> h1;
};

/// Flattens the hump of h (rise to a maximum, dip to a minimum, exit) into a
/// monotone ramp: h1[i] = min(h[i], m[i]) with m a strictly increasing
/// envelope below the running suffix minimum, repaired to strictness with
/// spacing delta = (h(last) - h(first)) / (10 N). Requires h(first) < h(last)
/// (EndpointOrder) and strictly increasing margins (MarginNotMonotone);
/// EndpointOrder also reports the infeasible case where no increasing
/// envelope can join the margins at this spacing.
MonotoneProfile cancel_1d(const std::vector<double>& h, std::int32_t margin);

/// Re-ranks the vertices of the truncated descending region of p (cells on
/// descending paths with value > a) into a window inside (a, a + epsilon),
/// preserving their relative order, so that value(p) lands in (a, a + epsilon)
/// and the given gradient stays valid for the result. Every other vertex is
/// untouched. Requires every descending orbit from p to reach values <= a
/// (OrbitBelowLevelMissing); throws BudgetTooTight when neighboring static
/// values squeeze the window shut. Raising a critical value is the same
/// operation applied to the negated field.
ScalarField lower_critical_value(const CellComplex& complex, const DiscreteGradient& gradient,
                                 const ScalarField& field, const CriticalCell& p, double a,
                                 double epsilon);

/// Realizes the deformed function after cancel_pair: vertices outside
/// plan.support keep their values bit-identically, the support vertices are
/// reassigned along the reversed flow of g_prime into the band
/// (value(q) - epsilon, value(q)], descending from q's pinned value, so the
/// rebuilt gradient census equals critical_cells(g_prime) and
/// ||f' - f||_inf <= persistence + epsilon. Throws FrontierConflict when the
/// frontier leaves no census-preserving monotone assignment (epsilon too
/// small for the neighborhood).
ScalarField realize_function(const CellComplex& complex, const DiscreteGradient& g_prime,
                             const ScalarField& field, const CancellationPlan& plan);

/// Support-restricted critical census along the straight-line homotopy
/// f_t = (1-t) f + t f'. transition_index is the first sample with an empty
/// support census; t_star the corresponding t.
struct PathCensus {
    std::vector<double> ts;
    std::vector<std::array<std::int32_t, 3>> support_census;
    std::int32_t transition_index = -1;
    double t_star = 1.0;
};

/// Scans n >= 3 uniform samples of the deformation. The support census must
/// collapse exactly once: non-empty after empty throws NonMonotoneCensus.
PathCensus sample_deformation(const CellComplex& complex, const ScalarField& field,
                              const ScalarField& field_prime, const CancellationPlan& plan,
                              std::int32_t n);

struct PlanRecord {
    CriticalCell p;
    CriticalCell q;
    double persistence = 0.0;
    std::int32_t support_size = 0;
    double max_perturbation = 0.0;
};

struct SimplifyReport {
    std::vector<PlanRecord> plans;
    std::array<std::int32_t, 3> final_census{0, 0, 0};
    int euler = 0;
    std::vector<double> transitions;    // one t* per plan when scanned
    double total_perturbation = 0.0;    // ||f_final - f||_inf, exact
    double perturbation_bound = 0.0;    // threshold + sum of per-step epsilons
};

/// Batch driver: repeatedly cancels the minimum-persistence cancelable pair
/// with persistence <= threshold (epsilon = persistence / 100) and realizes
/// the deformed field, until none remains. census_scan > 0 additionally runs
/// sample_deformation with that many samples per executed plan. Propagates
/// FrontierConflict naming the offending pair.
std::pair<ScalarField, SimplifyReport> simplify(const CellComplex& complex,
                                                const ScalarField& field, double threshold,
                                                std::int32_t census_scan = 0);

}  // namespace morseforge
