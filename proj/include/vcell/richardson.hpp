#pragma once

#include <vector>

#include "vcell/bigfloat.hpp"

namespace vcell {

struct RichardsonConfig {
    int order = 3;       // number of 1/N correction terms eliminated
    int min_points = 10; // shortest acceptable input sequence
};

struct Extrapolation {
    BigReal value;
    BigReal error;
    int points_used = 0;
};

// Limit of v(N) assuming v = v_inf + c1/N + c2/N^2 + ...; uses the last
// order+1 points. Error is the spread against lower-order and shifted windows.
Extrapolation richardson(const std::vector<BigReal>& n, const std::vector<BigReal>& v,
                         const RichardsonConfig& cfg = {});

// Value at h = 0 of the polynomial through (h_k, v_k).
BigReal interpolate_at_zero(const std::vector<BigReal>& h, const std::vector<BigReal>& v);

}  // namespace vcell
