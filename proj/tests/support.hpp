#pragma once

#include "tverberg/tverberg.hpp"

#include <cmath>
#include <random>

namespace tverberg::testing {

inline Rat q(long n, long d = 1) { return make_rat(n, d); }
inline CirclePoint cp(long x, long y) { return CirclePoint(Rat(x), Rat(y)); }

// Directions given with two decimals, scaled to integers.
inline CirclePoint cp100(double x, double y) {
    return CirclePoint(Rat(std::lround(x * 100)), Rat(std::lround(y * 100)));
}

inline double angle_of(const CirclePoint& p) { return std::atan2(p.dy.get_d(), p.dx.get_d()); }

// Clockwise angle from a to b in [0, 2pi), floating point.
inline double cw_angle(const CirclePoint& a, const CirclePoint& b) {
    const double two_pi = 2 * std::acos(-1.0);
    double d = std::fmod(angle_of(a) - angle_of(b), two_pi);
    if (d < 0) d += two_pi;
    return d;
}

inline CirclePoint random_direction(std::mt19937_64& rng, long range = 50, long den = 20) {
    for (;;) {
        const long x = long(rng() % (2 * range + 1)) - range;
        const long y = long(rng() % (2 * range + 1)) - range;
        if (x == 0 && y == 0) continue;
        return CirclePoint(make_rat(x, 1 + long(rng() % den)), make_rat(y, 1 + long(rng() % den)));
    }
}

inline CircleInstance with_colors(std::vector<CirclePoint> pts, std::vector<int> colors) {
    return make_circle_instance(std::move(pts), make_coloring(std::move(colors)));
}

}  // namespace tverberg::testing
