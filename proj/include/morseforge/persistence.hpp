#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "morseforge/gradient.hpp"

namespace morseforge {

/// One bar of the GF(2) persistence diagram. Finite bars pair a birth cell
/// with a death cell one dimension up; essential bars never die and carry no
/// death cell (persistence is +infinity there).
struct PersistencePair {
    CriticalCell birth;
    std::optional<CriticalCell> death;
    double persistence = 0.0;
    bool essential = false;
};

/// Boundary-matrix reduction of the Morse complex of the lower-star gradient,
/// filtered by the strict vertex-tuple order. Finite pairs connect critical
/// cells of consecutive dimension, essential counts per dimension are the
/// mod-2 Betti numbers, and 2 * #finite + #essential = #critical cells.
/// Pairs come back in filtration order of their birth cell.
std::vector<PersistencePair> persistence_pairs(const CellComplex& complex,
                                               const ScalarField& field);

/// Finite pairs with persistence <= threshold, ascending by persistence (ties
/// by death dimension then index), emitted as (death, birth) candidates for
/// cancellation. Essential pairs are never scheduled.
std::vector<std::pair<CellId, CellId>> schedule(const std::vector<PersistencePair>& pairs,
                                                double threshold);

}  // namespace morseforge
