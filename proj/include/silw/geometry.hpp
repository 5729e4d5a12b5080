#pragma once

// ============================================================================
// Analytic 2D geometries for embedded-boundary grids: circle, half-plane,
// axis-aligned rectangle, and a ramp wedge.  Each geometry provides a signed
// distance (negative inside the fluid) and closed-form foot points with unit
// outward normals, used to anchor ghost points to the physical boundary.
// ============================================================================

#include <cmath>
#include <string>

namespace silw {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

enum class GeometryKind {
    none,       // no embedded boundary (plain rectangular computational box)
    circle,     // fluid inside or outside a circle
    half_plane, // fluid on one side of a straight line
    rectangle,  // fluid inside an axis-aligned rectangle
    wedge,      // fluid above a horizontal floor joined to an inclined ramp
};

// Closest boundary point seen from an exterior (ghost) location.  The normal
// n = (cos(theta), sin(theta)) points out of the fluid, so an exterior point
// P satisfies P = point + distance * n.
struct FootPoint {
    Vec2 point;
    double theta = 0.0;
    double distance = 0.0;
    int piece = 0; // boundary piece id (wedge: 0 = floor, 1 = ramp;
                   //  rectangle: 0..3 = left, right, bottom, top)
};

struct Geometry2D {
    GeometryKind kind = GeometryKind::none;

    // circle
    Vec2 center;
    double radius = 0.0;
    bool fluid_inside = true;

    // half_plane: boundary passes through `point`; `normal` is the unit
    // normal pointing out of the fluid.
    Vec2 point;
    Vec2 normal{0.0, 1.0};

    // rectangle: fluid fills [xmin, xmax] x [ymin, ymax].
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;

    // wedge: solid floor along y = vertex.y for x <= vertex.x, ramp rising
    // from `vertex` at `ramp_angle` (radians); the fluid lies above both.
    Vec2 vertex;
    double ramp_angle = 0.0;

    // Signed distance to the fluid boundary: negative inside the fluid,
    // positive outside, zero on the boundary, Lipschitz with constant 1.
    // (For the wedge it may understate the true distance inside the solid
    // corner fan below the vertex, where no foot point exists anyway.)
    double signed_distance(Vec2 p) const;

    // Closest boundary point, outward normal angle, and distance.  Throws
    // std::runtime_error when the foot point is ambiguous (equidistant
    // boundary pieces, circle center) or does not exist on any piece.
    FootPoint foot_point(Vec2 p) const;

    std::string kind_name() const;
};

Geometry2D make_circle(Vec2 center, double radius, bool fluid_inside);
Geometry2D make_half_plane(Vec2 point, Vec2 outward_normal);
Geometry2D make_rectangle(double xmin, double xmax, double ymin, double ymax);
Geometry2D make_wedge(Vec2 vertex, double ramp_angle);

} // namespace silw
