#include "silw/embedded.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace silw {

namespace {

// Marks exterior points within n_ghost steps of an interior point along one
// scan direction.  `idx(k)` maps the running coordinate k in [0, n) to the
// flat array index.
template <typename IndexFn>
void mark_line_ghosts(const std::vector<PointClass>& cls, std::vector<char>& is_ghost,
                      int n, int n_ghost, IndexFn idx) {
    for (int k = 0; k < n; ++k) {
        if (cls[idx(k)] != PointClass::interior)
            continue;
        for (int p = 1; p <= n_ghost; ++p) {
            if (k - p >= 0 && cls[idx(k - p)] != PointClass::interior)
                is_ghost[idx(k - p)] = 1;
            if (k + p < n && cls[idx(k + p)] != PointClass::interior)
                is_ghost[idx(k + p)] = 1;
        }
    }
}

GhostSource edge_source(const DomainBox& box, Vec2 p, int i, int j) {
    const bool out_l = p.x <= box.xmin;
    const bool out_r = p.x >= box.xmax;
    const bool out_b = p.y <= box.ymin;
    const bool out_t = p.y >= box.ymax;
    const int n_out = int(out_l) + int(out_r) + int(out_b) + int(out_t);
    if (n_out != 1)
        throw std::runtime_error("embedded grid: ghost (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") leaves the window across " +
                                 std::to_string(n_out) + " sides");
    if (out_l) return GhostSource::edge_left;
    if (out_r) return GhostSource::edge_right;
    if (out_b) return GhostSource::edge_bottom;
    return GhostSource::edge_top;
}

} // namespace

int EmbeddedGrid2D::interior_count() const {
    int n = 0;
    for (PointClass c : cls)
        n += (c == PointClass::interior) ? 1 : 0;
    return n;
}

EmbeddedGrid2D classify_points_2d(const Geometry2D& geometry, double x0, double y0,
                                  double dx, double dy, int nx, int ny, int n_ghost,
                                  const DomainBox& box) {
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("embedded grid: need nx, ny >= 1");
    if (!(dx > 0.0) || !(dy > 0.0))
        throw std::invalid_argument("embedded grid: mesh widths must be positive");
    const double ratio = dx / dy;
    if (ratio < 0.5 || ratio > 2.0)
        throw std::invalid_argument("embedded grid: dx/dy ratio " + std::to_string(ratio) +
                                    " outside [1/2, 2]");
    if (n_ghost < 1)
        throw std::invalid_argument("embedded grid: need n_ghost >= 1");

    EmbeddedGrid2D g;
    g.nx = nx;
    g.ny = ny;
    g.x0 = x0;
    g.y0 = y0;
    g.dx = dx;
    g.dy = dy;
    g.n_ghost = n_ghost;
    g.geometry = geometry;
    g.box = box;

    const std::size_t total = std::size_t(nx) * ny;
    g.cls.assign(total, PointClass::far_exterior);
    g.ghost_id.assign(total, -1);

    // ---- pass 1: interior = fluid side of the geometry and inside the window
    const bool have_geom = geometry.kind != GeometryKind::none;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const Vec2 p = g.point(i, j);
            const bool fluid = !have_geom || geometry.signed_distance(p) < 0.0;
            if (fluid && box.contains(p))
                g.cls[std::size_t(j) * nx + i] = PointClass::interior;
        }

    // ---- pass 2: ghost marking along rows and columns
    std::vector<char> is_ghost(total, 0);
    for (int j = 0; j < ny; ++j)
        mark_line_ghosts(g.cls, is_ghost, nx, n_ghost,
                         [&](int i) { return std::size_t(j) * nx + i; });
    for (int i = 0; i < nx; ++i)
        mark_line_ghosts(g.cls, is_ghost, ny, n_ghost,
                         [&](int j) { return std::size_t(j) * nx + i; });

    // ---- pass 3: attribute each ghost to the window edge or the geometry
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const std::size_t id = std::size_t(j) * nx + i;
            if (!is_ghost[id])
                continue;
            g.cls[id] = PointClass::ghost;
            GhostInfo info;
            info.i = i;
            info.j = j;
            const Vec2 p = g.point(i, j);
            if (!box.contains(p)) {
                info.source = edge_source(box, p, i, j);
            } else {
                info.source = GhostSource::geometry;
                try {
                    info.foot = geometry.foot_point(p);
                } catch (const std::exception& e) {
                    throw std::runtime_error("embedded grid: ghost (" + std::to_string(i) +
                                             ", " + std::to_string(j) + ") at x=" +
                                             std::to_string(p.x) + " y=" + std::to_string(p.y) +
                                             ": " + e.what());
                }
            }
            g.ghost_id[id] = int(g.ghosts.size());
            g.ghosts.push_back(info);
        }

    return g;
}

std::vector<Segment> row_segments(const EmbeddedGrid2D& grid) {
    std::vector<Segment> segs;
    for (int j = 0; j < grid.ny; ++j) {
        int i = 0;
        while (i < grid.nx) {
            if (!grid.is_interior(i, j)) {
                ++i;
                continue;
            }
            int lo = i;
            while (i < grid.nx && grid.is_interior(i, j))
                ++i;
            segs.push_back({j, lo, i - 1});
        }
    }
    return segs;
}

std::vector<Segment> col_segments(const EmbeddedGrid2D& grid) {
    std::vector<Segment> segs;
    for (int i = 0; i < grid.nx; ++i) {
        int j = 0;
        while (j < grid.ny) {
            if (!grid.is_interior(i, j)) {
                ++j;
                continue;
            }
            int lo = j;
            while (j < grid.ny && grid.is_interior(i, j))
                ++j;
            segs.push_back({i, lo, j - 1});
        }
    }
    return segs;
}

} // namespace silw
