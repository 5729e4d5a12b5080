#include "silw/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace silw {

namespace {

FootPoint make_foot(Vec2 p_a, Vec2 outward, double distance, int piece) {
    FootPoint f;
    f.point = p_a;
    f.theta = std::atan2(outward.y, outward.x);
    f.distance = distance;
    f.piece = piece;
    return f;
}

// ============================================================================
// per-kind signed distances
// ============================================================================

double sd_circle(const Geometry2D& g, Vec2 p) {
    const double r = norm(p - g.center);
    return g.fluid_inside ? r - g.radius : g.radius - r;
}

double sd_half_plane(const Geometry2D& g, Vec2 p) {
    return dot(p - g.point, g.normal);
}

double sd_rectangle(const Geometry2D& g, Vec2 p) {
    const double qx = std::max(g.xmin - p.x, p.x - g.xmax);
    const double qy = std::max(g.ymin - p.y, p.y - g.ymax);
    if (qx <= 0.0 && qy <= 0.0)
        return std::max(qx, qy);
    return std::hypot(std::max(qx, 0.0), std::max(qy, 0.0));
}

double sd_wedge(const Geometry2D& g, Vec2 p) {
    // Intersection of two fluid half-planes: above the floor and above the
    // ramp line.  max() keeps the sign and the Lipschitz bound.
    const double sd_floor = g.vertex.y - p.y;
    const Vec2 up{-std::sin(g.ramp_angle), std::cos(g.ramp_angle)};
    const double sd_ramp = -dot(p - g.vertex, up);
    return std::max(sd_floor, sd_ramp);
}

// ============================================================================
// per-kind foot points
// ============================================================================

FootPoint foot_circle(const Geometry2D& g, Vec2 p) {
    const Vec2 d = p - g.center;
    const double r = norm(d);
    if (r < 1e-14 * std::max(1.0, g.radius))
        throw std::runtime_error("geometry: foot point ambiguous at circle center");
    const Vec2 u = (1.0 / r) * d;
    const Vec2 p_a = g.center + g.radius * u;
    // Outward from the fluid: radially out when the fluid is the disk,
    // radially in when the fluid surrounds the circle.
    const Vec2 outward = g.fluid_inside ? u : -1.0 * u;
    return make_foot(p_a, outward, std::abs(sd_circle(g, p)), 0);
}

FootPoint foot_half_plane(const Geometry2D& g, Vec2 p) {
    const double s = dot(p - g.point, g.normal);
    return make_foot(p - s * g.normal, g.normal, std::abs(s), 0);
}

FootPoint foot_rectangle(const Geometry2D& g, Vec2 p) {
    const double scale = std::max({g.xmax - g.xmin, g.ymax - g.ymin, 1e-300});
    const double tie = 1e-12 * scale;
    if (sd_rectangle(g, p) < 0.0) {
        // Interior: nearest side wins, ties are ambiguous.
        const double d[4] = {p.x - g.xmin, g.xmax - p.x, p.y - g.ymin, g.ymax - p.y};
        const int side = int(std::min_element(d, d + 4) - d);
        for (int k = 0; k < 4; ++k)
            if (k != side && std::abs(d[k] - d[side]) <= tie)
                throw std::runtime_error("geometry: foot point ambiguous "
                                         "(equidistant rectangle sides)");
        static const Vec2 outward[4] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
        Vec2 p_a = p;
        if (side == 0) p_a.x = g.xmin;
        if (side == 1) p_a.x = g.xmax;
        if (side == 2) p_a.y = g.ymin;
        if (side == 3) p_a.y = g.ymax;
        return make_foot(p_a, outward[side], d[side], side);
    }
    const bool out_x = p.x < g.xmin - tie || p.x > g.xmax + tie;
    const bool out_y = p.y < g.ymin - tie || p.y > g.ymax + tie;
    if (out_x && out_y)
        throw std::runtime_error("geometry: foot point ambiguous "
                                 "(exterior rectangle corner region)");
    if (out_x) {
        const bool left = p.x < g.xmin;
        const Vec2 p_a{left ? g.xmin : g.xmax, p.y};
        return make_foot(p_a, {left ? -1.0 : 1.0, 0.0}, std::abs(p.x - p_a.x), left ? 0 : 1);
    }
    const bool below = p.y < g.ymin;
    const Vec2 p_a{p.x, below ? g.ymin : g.ymax};
    return make_foot(p_a, {0.0, below ? -1.0 : 1.0}, std::abs(p.y - p_a.y), below ? 2 : 3);
}

FootPoint foot_wedge(const Geometry2D& g, Vec2 p) {
    // Candidate 0: floor piece {y = vertex.y, x <= vertex.x}.  The projection
    // is valid only if it lands on the piece.
    bool have[2] = {false, false};
    FootPoint cand[2];
    if (p.x <= g.vertex.x) {
        const Vec2 p_a{p.x, g.vertex.y};
        cand[0] = make_foot(p_a, {0.0, -1.0}, std::abs(p.y - g.vertex.y), 0);
        have[0] = true;
    }
    // Candidate 1: ramp ray from the vertex along (cos w, sin w), t >= 0.
    const Vec2 dir{std::cos(g.ramp_angle), std::sin(g.ramp_angle)};
    const double t = dot(p - g.vertex, dir);
    if (t >= 0.0) {
        const Vec2 p_a = g.vertex + t * dir;
        cand[1] = make_foot(p_a, {dir.y, -dir.x}, norm(p - p_a), 1);
        have[1] = true;
    }
    if (!have[0] && !have[1])
        throw std::runtime_error("geometry: no valid foot point "
                                 "(wedge vertex corner fan)");
    if (have[0] && have[1]) {
        const double tie = 1e-12 * std::max(1.0, norm(p - g.vertex));
        if (std::abs(cand[0].distance - cand[1].distance) <= tie)
            throw std::runtime_error("geometry: foot point ambiguous "
                                     "(equidistant wedge pieces)");
        return cand[0].distance < cand[1].distance ? cand[0] : cand[1];
    }
    return have[0] ? cand[0] : cand[1];
}

} // namespace

// ============================================================================
// Geometry2D
// ============================================================================

double Geometry2D::signed_distance(Vec2 p) const {
    switch (kind) {
    case GeometryKind::none: return -1.0;
    case GeometryKind::circle: return sd_circle(*this, p);
    case GeometryKind::half_plane: return sd_half_plane(*this, p);
    case GeometryKind::rectangle: return sd_rectangle(*this, p);
    case GeometryKind::wedge: return sd_wedge(*this, p);
    }
    throw std::logic_error("geometry: unknown kind");
}

FootPoint Geometry2D::foot_point(Vec2 p) const {
    switch (kind) {
    case GeometryKind::none:
        throw std::runtime_error("geometry: foot point requested on 'none' geometry");
    case GeometryKind::circle: return foot_circle(*this, p);
    case GeometryKind::half_plane: return foot_half_plane(*this, p);
    case GeometryKind::rectangle: return foot_rectangle(*this, p);
    case GeometryKind::wedge: return foot_wedge(*this, p);
    }
    throw std::logic_error("geometry: unknown kind");
}

std::string Geometry2D::kind_name() const {
    switch (kind) {
    case GeometryKind::none: return "none";
    case GeometryKind::circle: return "circle";
    case GeometryKind::half_plane: return "half_plane";
    case GeometryKind::rectangle: return "rectangle";
    case GeometryKind::wedge: return "wedge";
    }
    return "unknown";
}

Geometry2D make_circle(Vec2 center, double radius, bool fluid_inside) {
    if (radius <= 0.0)
        throw std::invalid_argument("geometry: circle radius must be positive");
    Geometry2D g;
    g.kind = GeometryKind::circle;
    g.center = center;
    g.radius = radius;
    g.fluid_inside = fluid_inside;
    return g;
}

Geometry2D make_half_plane(Vec2 point, Vec2 outward_normal) {
    const double n = norm(outward_normal);
    if (n <= 0.0)
        throw std::invalid_argument("geometry: half-plane normal must be nonzero");
    Geometry2D g;
    g.kind = GeometryKind::half_plane;
    g.point = point;
    g.normal = (1.0 / n) * outward_normal;
    return g;
}

Geometry2D make_rectangle(double xmin, double xmax, double ymin, double ymax) {
    if (!(xmin < xmax) || !(ymin < ymax))
        throw std::invalid_argument("geometry: rectangle extents must be increasing");
    Geometry2D g;
    g.kind = GeometryKind::rectangle;
    g.xmin = xmin;
    g.xmax = xmax;
    g.ymin = ymin;
    g.ymax = ymax;
    return g;
}

Geometry2D make_wedge(Vec2 vertex, double ramp_angle) {
    if (!(ramp_angle > 0.0) || !(ramp_angle < 1.5707963267948966))
        throw std::invalid_argument("geometry: ramp angle must lie in (0, pi/2)");
    Geometry2D g;
    g.kind = GeometryKind::wedge;
    g.vertex = vertex;
    g.ramp_angle = ramp_angle;
    return g;
}

} // namespace silw
