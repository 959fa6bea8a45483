#include "morseforge/persistence.hpp"

#include <algorithm>
#include <limits>

#include "morseforge/errors.hpp"

namespace morseforge {

namespace {

// XOR of two sorted row lists (symmetric difference).
std::vector<std::int32_t> xor_rows(const std::vector<std::int32_t>& a,
                                   const std::vector<std::int32_t>& b) {
    std::vector<std::int32_t> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else if (b[j] < a[i]) {
            out.push_back(b[j++]);
        } else {
            ++i, ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

// Mod-2 connector parities from cells one band up to the critical cells one
// band down, as sorted filtration-row lists. Unlike the path queries in the
// gradient module, nothing stops at the boundary here: the Morse boundary
// operator needs true algebraic parities, or boundary-of-boundary would not
// vanish.
struct ParityDP {
    const CellComplex& complex;
    const DiscreteGradient& gradient;
    const std::vector<std::int32_t>& row_of;  // global id -> filtration row, -1 if not critical
    std::vector<std::vector<std::int32_t>> memo;
    std::vector<char> state;

    ParityDP(const CellComplex& c, const DiscreteGradient& g,
             const std::vector<std::int32_t>& rows)
        : complex(c), gradient(g), row_of(rows), memo(c.total_cells()), state(c.total_cells(), 0) {}

    std::vector<std::int32_t> from_lower(CellId cell) {
        const std::int32_t row = row_of[complex.global_id(cell)];
        if (row >= 0) return {row};
        const auto partner = gradient.partner(complex, cell);
        if (!partner || partner->dim < cell.dim) return {};  // dead end: no critical terminal
        return from_upper(*partner);
    }

    const std::vector<std::int32_t>& from_upper(CellId cell) {
        const std::int32_t gid = complex.global_id(cell);
        if (state[gid] == 1) {
            throw MorseError(ErrorKind::CycleDetected, "closed V-path in the Morse boundary");
        }
        if (state[gid] == 2) return memo[gid];
        state[gid] = 1;
        std::vector<std::int32_t> rows;
        for (const CellId face : complex.cell_faces(cell)) {
            const auto partner = gradient.partner(complex, face);
            if (partner && *partner == cell) continue;
            rows = xor_rows(rows, from_lower(face));
        }
        state[gid] = 2;
        return memo[gid] = std::move(rows);
    }
};

}  // namespace

std::vector<PersistencePair> persistence_pairs(const CellComplex& complex,
                                               const ScalarField& field) {
    field.ensure_matches(complex);
    const auto gradient = build_gradient(complex, field);
    auto criticals = critical_cells(complex, field, gradient);
    std::sort(criticals.begin(), criticals.end(), [&](const CriticalCell& a, const CriticalCell& b) {
        return field.cell_before(complex, a.cell, b.cell);
    });

    const std::int32_t n = static_cast<std::int32_t>(criticals.size());
    std::vector<std::int32_t> row_of(complex.total_cells(), -1);
    for (std::int32_t i = 0; i < n; ++i) row_of[complex.global_id(criticals[i].cell)] = i;

    ParityDP parity(complex, gradient, row_of);
    std::vector<std::vector<std::int32_t>> reduced(n);
    std::vector<std::int32_t> owner(n, -1);  // low row -> column that claimed it
    std::vector<std::int32_t> death_of(n, -1), birth_of(n, -1);

    for (std::int32_t j = 0; j < n; ++j) {
        if (criticals[j].cell.dim == 0) continue;
        std::vector<std::int32_t> column;
        for (const CellId face : complex.cell_faces(criticals[j].cell)) {
            column = xor_rows(column, parity.from_lower(face));
        }
        while (!column.empty() && owner[column.back()] >= 0) {
            column = xor_rows(column, reduced[owner[column.back()]]);
        }
        if (column.empty()) continue;
        const std::int32_t low = column.back();
        owner[low] = j;
        reduced[j] = std::move(column);
        death_of[low] = j;
        birth_of[j] = low;
    }

    std::vector<PersistencePair> pairs;
    for (std::int32_t i = 0; i < n; ++i) {
        if (birth_of[i] >= 0) continue;  // this cell is a death, not a birth
        PersistencePair pair;
        pair.birth = criticals[i];
        if (death_of[i] >= 0) {
            pair.death = criticals[death_of[i]];
            pair.persistence = pair.death->value - pair.birth.value;
        } else {
            pair.essential = true;
            pair.persistence = std::numeric_limits<double>::infinity();
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

std::vector<std::pair<CellId, CellId>> schedule(const std::vector<PersistencePair>& pairs,
                                                double threshold) {
    std::vector<const PersistencePair*> finite;
    for (const auto& pair : pairs) {
        if (!pair.essential && pair.persistence <= threshold) finite.push_back(&pair);
    }
    std::sort(finite.begin(), finite.end(), [](const PersistencePair* a, const PersistencePair* b) {
        if (a->persistence != b->persistence) return a->persistence < b->persistence;
        if (a->death->cell.dim != b->death->cell.dim) return a->death->cell.dim < b->death->cell.dim;
        return a->death->cell.index < b->death->cell.index;
    });
    std::vector<std::pair<CellId, CellId>> out;
    out.reserve(finite.size());
    for (const PersistencePair* pair : finite) {
        out.emplace_back(pair->death->cell, pair->birth.cell);
    }
    return out;
}

}  // namespace morseforge
