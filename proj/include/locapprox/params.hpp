// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>

#include "locapprox/error.hpp"

namespace locapprox {

/// Degree bound d, color count c and radius r.
struct Params {
    int d = 1;
    int c = 1;
    int r = 0;

    void validate() const {
        if (d < 1) throw ValidationError("degree bound d must be >= 1, got " + std::to_string(d));
        if (c < 1) throw ValidationError("color count c must be >= 1, got " + std::to_string(c));
        if (r < 0) throw ValidationError("radius r must be >= 0, got " + std::to_string(r));
    }

    Params with_radius(int radius) const { return Params{d, c, radius}; }

    friend auto operator<=>(const Params&, const Params&) = default;
};

}  // namespace locapprox
