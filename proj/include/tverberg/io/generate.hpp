#pragma once

// Seeded random instances. Line instances are tangent lines of the unit circle
// at rational points, pushed through a random invertible affine map; tangent
// lines of a circle are always in convex position (the disk's cell meets every
// line), and affine maps preserve that.

#include "tverberg/dual_lines.hpp"
#include "tverberg/io/instance_file.hpp"

#include <cstdint>
#include <random>

namespace tverberg::io {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi]; plain modulo keeps the mapping identical across
    // standard libraries, unlike std::uniform_int_distribution.
    long between(long lo, long hi) {
        const auto span = std::uint64_t(hi - lo) + 1;
        return lo + long(engine_() % span);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[std::size_t(between(0, long(i) - 1))]);
    }

private:
    std::mt19937_64 engine_;
};

inline std::vector<int> random_balanced_coloring(Rng& rng, std::size_t k, int colors = 3) {
    std::vector<int> c;
    for (int col = 0; col < colors; ++col)
        for (std::size_t i = 0; i < k; ++i) c.push_back(col);
    rng.shuffle(c);
    return c;
}

inline constexpr std::size_t max_generate_k = 50;

inline CircleInstance random_circle_instance(std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    const long range = 8 + long(k) * 4;
    std::vector<CirclePoint> pts;
    while (pts.size() < 3 * k) {
        const long x = rng.between(-range, range);
        const long y = rng.between(-range, range);
        if (x == 0 && y == 0) continue;
        const CirclePoint p{Rat(x), Rat(y)};
        if (std::any_of(pts.begin(), pts.end(), [&](const CirclePoint& q) { return collinear_directions(p, q); }))
            continue;
        pts.push_back(p);
    }
    return make_circle_instance(std::move(pts), make_coloring(random_balanced_coloring(rng, k)));
}

namespace detail {

// Positive rescaling to coprime integer coefficients.
inline Line2 normalized(const Line2& l) {
    mpz_class den = 1, num = 0;
    for (const Rat* c : {&l.a, &l.b, &l.c}) den = lcm(den, c->get_den());
    for (const Rat* c : {&l.a, &l.b, &l.c}) num = gcd(num, mpz_class(*c * den));
    const Rat f = Rat(den) / Rat(num);
    return Line2(Rat(l.a * f), Rat(l.b * f), Rat(l.c * f));
}

}  // namespace detail

inline LineInstance random_line_instance(std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        std::vector<CirclePoint> normals;
        while (normals.size() < 3 * k) {
            // Rational point of the unit circle from the parameter t = p/q.
            const long p = rng.between(-40, 40);
            const long q = rng.between(1, 40);
            const Rat d(p * p + q * q);
            CirclePoint n(Rat((q * q - p * p) / d), Rat(2 * p * q / d));
            if (rng.between(0, 1)) n = -n;
            if (std::any_of(normals.begin(), normals.end(), [&](const CirclePoint& m) { return collinear_directions(n, m); }))
                continue;
            normals.push_back(n);
        }
        long m11, m12, m21, m22;
        do {
            m11 = rng.between(-3, 3);
            m12 = rng.between(-3, 3);
            m21 = rng.between(-3, 3);
            m22 = rng.between(-3, 3);
        } while (m11 * m22 - m12 * m21 == 0);
        const long tx = rng.between(-5, 5), ty = rng.between(-5, 5);
        const Rat det(m11 * m22 - m12 * m21);

        // Tangent line n.x = 1 under x' = M x + t becomes (M^-T n).x' = 1 + (M^-T n).t.
        std::vector<Line2> lines;
        for (const auto& n : normals) {
            const Rat a = (m22 * n.dx - m21 * n.dy) / det;
            const Rat b = (-m12 * n.dx + m11 * n.dy) / det;
            lines.push_back(detail::normalized(Line2(a, b, Rat(1 + a * tx + b * ty))));
        }
        if (!validate_general_position(lines).ok()) continue;
        if (!in_convex_position(lines)) throw ContractViolation("random_line_instance: tangent lines not in convex position");
        return LineInstance{std::move(lines), make_coloring(random_balanced_coloring(rng, k))};
    }
}

/// Eight tangent planes of the unit sphere at rational points of the upper
/// hemisphere, two per color.
inline space::PlaneSet random_plane_set(std::uint64_t seed) {
    Rng rng(seed);
    for (;;) {
        space::PlaneSet s;
        while (s.planes.size() < 8) {
            // Inverse stereographic projection of (u, v) with u^2 + v^2 < 1.
            const Rat u = make_rat(rng.between(-12, 12), 13);
            const Rat v = make_rat(rng.between(-12, 12), 13);
            const Rat r2 = u * u + v * v;
            if (r2 >= 1) continue;
            const Rat d = 1 + r2;
            s.planes.push_back(space::tangent_plane(space::Vec3{Rat(2 * u / d), Rat(2 * v / d), Rat((1 - r2) / d)}));
        }
        const auto col = random_balanced_coloring(rng, 2, 4);
        for (int i = 0; i < 8; ++i) s.color[i] = col[i];
        try {
            for (std::size_t a = 0; a < 8; ++a)
                for (std::size_t b = a + 1; b < 8; ++b)
                    for (std::size_t c = b + 1; c < 8; ++c)
                        for (std::size_t d = c + 1; d < 8; ++d) {
                            const std::array<std::size_t, 4> ids{a, b, c, d};
                            space::require_general_position(s.planes, ids);
                        }
        } catch (const GeneralPositionViolation&) {
            continue;
        }
        return s;
    }
}

inline InstanceFile generate(Kind kind, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > max_generate_k) throw ValidationError("generate: k must be in 1.." + std::to_string(max_generate_k));
    switch (kind) {
        case Kind::circle: return to_file(random_circle_instance(k, seed));
        case Kind::lines2d: return to_file(random_line_instance(k, seed));
        case Kind::planes3d:
            if (k != 2) throw ValidationError("generate: planes3d requires k = 2");
            return to_file(random_plane_set(seed));
    }
    throw ValidationError("generate: unknown kind");
}

}  // namespace tverberg::io
