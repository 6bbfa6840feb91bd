#include "gdeck/renderer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "gdeck/error.hpp"

namespace gdeck {

namespace {

constexpr double kPi = 3.14159265358979323846;

// checkerboard shades keyed to (i+j) parity
constexpr Rgb kShadeEven{220, 220, 220};
constexpr Rgb kShadeOdd{70, 70, 110};

struct Edge {
    double a, b, c;  // w(p) = a*px + b*py + c
    bool accept_zero;
};

Edge make_edge(double x0, double y0, double x1, double y1) {
    Edge e;
    e.a = -(y1 - y0);
    e.b = x1 - x0;
    e.c = -(e.a * x0 + e.b * y0);
    // top-left rule in +y-up coordinates with CCW winding: count boundary
    // pixels on horizontal edges pointing -x (top) and on edges pointing -y
    // (left), so shared edges are filled exactly once
    e.accept_zero = (y0 == y1 && x1 < x0) || (y1 < y0);
    return e;
}

void fill_triangle(FrameBuffer& fb, Projected p0, Projected p1, Projected p2, Rgb color) {
    const double area = (p1.x - p0.x) * (p2.y - p0.y) - (p1.y - p0.y) * (p2.x - p0.x);
    if (area == 0.0) return;
    if (area < 0.0) std::swap(p1, p2);  // normalize to CCW

    const Edge edges[3] = {
        make_edge(p0.x, p0.y, p1.x, p1.y),
        make_edge(p1.x, p1.y, p2.x, p2.y),
        make_edge(p2.x, p2.y, p0.x, p0.y),
    };

    const double min_x = std::min({p0.x, p1.x, p2.x});
    const double max_x = std::max({p0.x, p1.x, p2.x});
    const double min_y = std::min({p0.y, p1.y, p2.y});
    const double max_y = std::max({p0.y, p1.y, p2.y});

    // pixel (ix, iy) center in centered coordinates
    const double half_w = fb.width / 2.0;
    const double half_h = fb.height / 2.0;
    const int ix0 = std::max(0, int(std::floor(min_x + half_w - 0.5)));
    const int ix1 = std::min(fb.width - 1, int(std::ceil(max_x + half_w - 0.5)));
    const int iy0 = std::max(0, int(std::floor(min_y + half_h - 0.5)));
    const int iy1 = std::min(fb.height - 1, int(std::ceil(max_y + half_h - 0.5)));

    for (int iy = iy0; iy <= iy1; ++iy) {
        const double py = iy - half_h + 0.5;
        for (int ix = ix0; ix <= ix1; ++ix) {
            const double px = ix - half_w + 0.5;
            bool inside = true;
            for (const Edge& e : edges) {
                const double w = e.a * px + e.b * py + e.c;
                if (w < 0.0 || (w == 0.0 && !e.accept_zero)) {
                    inside = false;
                    break;
                }
            }
            if (inside) fb.at(ix, iy) = color;
        }
    }
}

}  // namespace

SphereMesh build_sphere(int num, double radius) {
    if (num < 2) throw Error(ErrorCode::BadSubdivision, "num must be >= 2, got " + std::to_string(num));
    if (radius <= 0.0) throw Error(ErrorCode::BadSubdivision, "radius must be positive");

    SphereMesh mesh;
    mesh.num = num;
    mesh.radius = radius;
    mesh.grid.resize(std::size_t(num + 1) * (num + 1));
    for (int i = 0; i < num + 1; ++i) {
        for (int j = 0; j < num + 1; ++j) {
            const double polar = j * kPi / num;
            const double azimuth = i * 2.0 * kPi / num;
            mesh.at(i, j) = {radius * std::sin(polar) * std::cos(azimuth), radius * std::cos(polar),
                             radius * std::sin(polar) * std::sin(azimuth)};
        }
    }
    return mesh;
}

std::vector<Vec3> rotate(const SphereMesh& mesh, Orientation orientation) {
    const double cx = std::cos(orientation.angley);  // about the x-axis
    const double sx = std::sin(orientation.angley);
    const double cy = std::cos(orientation.anglex);  // about the y-axis
    const double sy = std::sin(orientation.anglex);

    std::vector<Vec3> out(mesh.grid.size());
    for (std::size_t k = 0; k < mesh.grid.size(); ++k) {
        const Vec3& p = mesh.grid[k];
        // x-axis rotation by angley
        const double y1 = p.y * cx - p.z * sx;
        const double z1 = p.y * sx + p.z * cx;
        // y-axis rotation by anglex
        out[k] = {p.x * cy + z1 * sy, y1, -p.x * sy + z1 * cy};
    }
    return out;
}

Projected project(const Vec3& point, Camera camera) {
    const double eps = 1e-6 * camera.f;
    if (point.z <= -camera.f + eps) {
        throw Error(ErrorCode::BehindCamera, "point at z=" + std::to_string(point.z) + " with f=" +
                                                 std::to_string(camera.f));
    }
    const double scale = camera.f / (camera.f + point.z);
    return {point.x * scale, point.y * scale};
}

Tessellation tessellate(const std::vector<Vec3>& rotated, int num, Camera camera) {
    Tessellation out;
    out.quads.reserve(std::size_t(num) * num);
    const auto at = [&rotated, num](int i, int j) -> const Vec3& {
        return rotated[std::size_t(i) * (num + 1) + j];
    };
    const double eps = 1e-6 * camera.f;

    for (int i = 0; i < num; ++i) {
        for (int j = 0; j < num; ++j) {
            // perimeter order: (i,j), (i,j+1), (i+1,j+1), (i+1,j)
            const Vec3* corners[4] = {&at(i, j), &at(i, j + 1), &at(i + 1, j + 1), &at(i + 1, j)};
            bool behind = false;
            for (const Vec3* c : corners) {
                if (c->z <= -camera.f + eps) {
                    behind = true;
                    break;
                }
            }
            if (behind) {
                ++out.culled;
                continue;
            }
            ProjectedQuad quad;
            double z_sum = 0.0;
            for (int v = 0; v < 4; ++v) {
                const Projected p = project(*corners[v], camera);
                quad.xs[v] = p.x;
                quad.ys[v] = p.y;
                z_sum += corners[v]->z;
            }
            quad.mean_z = z_sum / 4.0;
            quad.shade = uint8_t((i + j) % 2);
            out.quads.push_back(quad);
        }
    }
    return out;
}

void rasterize(const std::vector<ProjectedQuad>& quads, FrameBuffer& fb) {
    std::vector<const ProjectedQuad*> order;
    order.reserve(quads.size());
    for (const ProjectedQuad& q : quads) order.push_back(&q);
    // back to front: larger z is farther from the camera
    std::stable_sort(order.begin(), order.end(),
                     [](const ProjectedQuad* a, const ProjectedQuad* b) { return a->mean_z > b->mean_z; });

    for (const ProjectedQuad* q : order) {
        const Rgb color = q->shade == 0 ? kShadeEven : kShadeOdd;
        const auto& ind = ProjectedQuad::kTriangleIndices;
        for (int t = 0; t < 2; ++t) {
            const Projected p0{q->xs[ind[3 * t]], q->ys[ind[3 * t]]};
            const Projected p1{q->xs[ind[3 * t + 1]], q->ys[ind[3 * t + 1]]};
            const Projected p2{q->xs[ind[3 * t + 2]], q->ys[ind[3 * t + 2]]};
            fill_triangle(fb, p0, p1, p2, color);
        }
    }
}

uint64_t write_image(const FrameBuffer& fb, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");

    std::string header = "P6\n" + std::to_string(fb.width) + " " + std::to_string(fb.height) + "\n255\n";
    out.write(header.data(), std::streamsize(header.size()));
    // storage is bottom-up; PPM rows go top to bottom
    for (int iy = fb.height - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < fb.width; ++ix) {
            const Rgb& p = fb.at(ix, iy);
            const char rgb[3] = {char(p.r), char(p.g), char(p.b)};
            out.write(rgb, 3);
        }
    }
    out.flush();
    if (!out) throw Error(ErrorCode::IoFailure, "write to " + path + " failed");
    return header.size() + uint64_t(fb.width) * fb.height * 3;
}

FrameBuffer render_sphere_frame(int num, double radius, Camera camera, Orientation orientation, int width,
                                int height) {
    const SphereMesh mesh = build_sphere(num, radius);
    const std::vector<Vec3> rotated = rotate(mesh, orientation);
    const Tessellation tess = tessellate(rotated, num, camera);
    FrameBuffer fb(width, height);
    rasterize(tess.quads, fb);
    return fb;
}

}  // namespace gdeck
