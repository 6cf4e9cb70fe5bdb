#ifndef WSRN_GEOMETRY_HPP
#define WSRN_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

namespace wsrn {

// 2D position in unit-square coordinates. The x10 meter scaling used for
// energy accounting lives in EnergyParams, not here.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Squared distance, for hot loops that only compare.
inline double distance2(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Inclusive boundary: a robot exactly on the circle counts as found.
inline bool in_search_radius(const Point& p, const Point& event, double sr) {
    return distance(p, event) <= sr;
}

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 collinear (with a 1e-12 guard).
int orientation(const Point& a, const Point& b, const Point& c);

// Proper crossing of two open segments. Shared endpoints, touching and
// collinear overlap all return false.
bool segments_properly_intersect(const Point& a1, const Point& a2,
                                 const Point& b1, const Point& b2);

// Crossing point of two properly intersecting segments; nullopt otherwise.
std::optional<Point> segment_intersection(const Point& a1, const Point& a2,
                                          const Point& b1, const Point& b2);

enum class HandRule { Right, Left };

// Direction angle of the ray from -> to.
inline double angle_of(const Point& from, const Point& to) {
    return std::atan2(to.y - from.y, to.x - from.x);
}

// Index of the first neighbor encountered rotating clockwise (right hand)
// or counterclockwise (left hand) from the reference direction. A neighbor
// lying exactly on the reference direction is taken last (full rotation),
// which makes a dead-end edge traverse back. Ties go to the lower index,
// so callers passing id-sorted neighbor lists get the lower-id tie-break.
std::size_t next_face_neighbor(const Point& current, double reference_angle,
                               std::span<const Point> neighbors, HandRule rule);

}  // namespace wsrn

#endif  // WSRN_GEOMETRY_HPP
