#include "wsrn/geometry.hpp"

#include <cassert>
#include <limits>

namespace wsrn {

namespace {

constexpr double kOrientEps = 1e-12;
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

// Clockwise rotation needed to get from angle `from` to angle `to`,
// mapped into (0, 2*pi]: an exact match counts as a full turn.
double cw_delta(double from, double to) {
    double d = std::fmod(from - to, kTwoPi);
    if (d < 0.0) d += kTwoPi;
    if (d == 0.0) d = kTwoPi;
    return d;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (std::abs(v) <= kOrientEps) return 0;
    return v > 0.0 ? 1 : -1;
}

bool segments_properly_intersect(const Point& a1, const Point& a2,
                                 const Point& b1, const Point& b2) {
    const int o1 = orientation(a1, a2, b1);
    const int o2 = orientation(a1, a2, b2);
    const int o3 = orientation(b1, b2, a1);
    const int o4 = orientation(b1, b2, a2);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::optional<Point> segment_intersection(const Point& a1, const Point& a2,
                                          const Point& b1, const Point& b2) {
    if (!segments_properly_intersect(a1, a2, b1, b2)) return std::nullopt;
    const double d1x = a2.x - a1.x, d1y = a2.y - a1.y;
    const double d2x = b2.x - b1.x, d2y = b2.y - b1.y;
    const double denom = d1x * d2y - d1y * d2x;
    const double t = ((b1.x - a1.x) * d2y - (b1.y - a1.y) * d2x) / denom;
    return Point{a1.x + t * d1x, a1.y + t * d1y};
}

std::size_t next_face_neighbor(const Point& current, double reference_angle,
                               std::span<const Point> neighbors, HandRule rule) {
    assert(!neighbors.empty());
    std::size_t best = 0;
    double best_delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
        const double ang = angle_of(current, neighbors[i]);
        const double d = rule == HandRule::Right ? cw_delta(reference_angle, ang)
                                                 : cw_delta(ang, reference_angle);
        if (d < best_delta) {
            best_delta = d;
            best = i;
        }
    }
    return best;
}

}  // namespace wsrn
