#pragma once

// ============================================================================
// Embedded Cartesian grids: classify the points of a uniform 2D grid against
// an analytic geometry (and an optional rectangular computational window)
// into interior, ghost, and far-exterior points.  Ghost points are exterior
// points needed by dimension-split stencils: those within n_ghost index steps
// of an interior point along their row or column.  Each ghost carries either
// a geometry foot point (boundary anchor for the ghost-value machinery) or
// the window edge it belongs to.
// ============================================================================

#include <limits>
#include <vector>

#include "silw/geometry.hpp"

namespace silw {

enum class PointClass : unsigned char { far_exterior, interior, ghost };

enum class GhostSource : unsigned char {
    geometry,    // exterior to the embedded geometry; foot point populated
    edge_left,   // outside the computational window, by side
    edge_right,
    edge_bottom,
    edge_top,
};

struct GhostInfo {
    int i = 0;
    int j = 0;
    GhostSource source = GhostSource::geometry;
    FootPoint foot; // valid when source == geometry
};

// Rectangular computational window; +/-inf sides are unconstrained.
struct DomainBox {
    double xmin = -std::numeric_limits<double>::infinity();
    double xmax = std::numeric_limits<double>::infinity();
    double ymin = -std::numeric_limits<double>::infinity();
    double ymax = std::numeric_limits<double>::infinity();

    bool contains(Vec2 p) const {
        return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
    }
};

// Maximal run of consecutive interior points along one grid line.
struct Segment {
    int line = 0; // row index j (row segments) or column index i (columns)
    int lo = 0;   // first interior index along the line (inclusive)
    int hi = 0;   // last interior index along the line (inclusive)
};

struct EmbeddedGrid2D {
    int nx = 0;
    int ny = 0;
    double x0 = 0.0; // coordinate of index (0, 0)
    double y0 = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    int n_ghost = 0;
    Geometry2D geometry;
    DomainBox box;

    std::vector<PointClass> cls;  // nx*ny, row-major: index = j*nx + i
    std::vector<int> ghost_id;    // nx*ny, index into `ghosts`, -1 otherwise
    std::vector<GhostInfo> ghosts;

    double x(int i) const { return x0 + i * dx; }
    double y(int j) const { return y0 + j * dy; }
    Vec2 point(int i, int j) const { return {x(i), y(j)}; }
    double delta() const { return std::hypot(dx, dy); }

    PointClass at(int i, int j) const { return cls[std::size_t(j) * nx + i]; }
    bool is_interior(int i, int j) const { return at(i, j) == PointClass::interior; }
    int ghost_at(int i, int j) const { return ghost_id[std::size_t(j) * nx + i]; }

    int interior_count() const;
};

// Classifies all nx*ny points.  Interior means inside the fluid (negative
// signed distance when a geometry is present) and strictly inside the window.
// Throws std::invalid_argument on bad sizes or an anisotropy ratio dx/dy
// outside [1/2, 2]; foot-point failures on ghost points are rethrown with
// the offending grid indices attached.
EmbeddedGrid2D classify_points_2d(const Geometry2D& geometry, double x0, double y0,
                                  double dx, double dy, int nx, int ny, int n_ghost,
                                  const DomainBox& box = DomainBox{});

// Maximal interior runs along rows (varying i) and columns (varying j).
std::vector<Segment> row_segments(const EmbeddedGrid2D& grid);
std::vector<Segment> col_segments(const EmbeddedGrid2D& grid);

} // namespace silw
