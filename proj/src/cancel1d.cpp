#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "morseforge/cancel.hpp"
#include "morseforge/errors.hpp"

namespace morseforge {

namespace {

bool strictly_increasing(const std::vector<double>& v, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin + 1; i < end; ++i) {
        if (!(v[i - 1] < v[i])) return false;
    }
    return true;
}

}  // namespace

MonotoneProfile cancel_1d(const std::vector<double>& h, std::int32_t margin) {
    const std::size_t n = h.size();
    if (margin < 1) {
        throw MorseError(ErrorKind::InvariantViolation, "cancel_1d: margin must be >= 1");
    }
    const std::size_t m = static_cast<std::size_t>(margin);
    if (n < 2 || n < 2 * m) {
        throw MorseError(ErrorKind::InvariantViolation,
                         "cancel_1d: need at least max(2, 2*margin) samples, got " +
                             std::to_string(n));
    }
    for (double x : h) {
        if (!std::isfinite(x)) {
            throw MorseError(ErrorKind::NonFiniteValue, "cancel_1d: non-finite sample");
        }
    }
    if (!(h.front() < h.back())) {
        throw MorseError(ErrorKind::EndpointOrder,
                         "cancel_1d: h(first) = " + std::to_string(h.front()) +
                             " must be below h(last) = " + std::to_string(h.back()));
    }
    if (!strictly_increasing(h, 0, m) || !strictly_increasing(h, n - m, n)) {
        throw MorseError(ErrorKind::MarginNotMonotone,
                         "cancel_1d: h must be strictly increasing on the first and last " +
                             std::to_string(margin) + " samples");
    }

    MonotoneProfile out;
    out.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.u[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    }
    out.h = h;
    out.h1 = h;

    if (strictly_increasing(h, 0, n)) return out;  // nothing to flatten

    // Backward pass: chain a strictly increasing cap below the suffix
    // constraint. Margins are pinned to h, so only the left seam can fail,
    // and that failure means no increasing envelope joins the margins.
    const double delta = (h.back() - h.front()) / (10.0 * static_cast<double>(n));
    for (std::size_t k = n - m; k-- > m;) {
        out.h1[k] = std::min(h[k], out.h1[k + 1] - delta);
    }
    if (!(out.h1[m - 1] < out.h1[m])) {
        throw MorseError(ErrorKind::EndpointOrder,
                         "cancel_1d: margins leave no room for an increasing envelope (seam " +
                             std::to_string(out.h1[m - 1]) + " >= " + std::to_string(out.h1[m]) +
                             ")");
    }
    return out;
}

}  // namespace morseforge
