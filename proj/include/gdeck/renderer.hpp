#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gdeck/vec.hpp"

namespace gdeck {

/// Latitude/longitude point grid of a sphere. grid(i, j) =
///   (radius sin(j pi/num) cos(i 2pi/num),
///    radius cos(j pi/num),
///    radius sin(j pi/num) sin(i 2pi/num))
/// for i, j in 0..num; column i=num closes the seam.
struct SphereMesh {
    int num = 20;
    double radius = 160.0;
    std::vector<Vec3> grid;  // (num+1) x (num+1), row-major over i

    const Vec3& at(int i, int j) const { return grid[std::size_t(i) * (num + 1) + j]; }
    Vec3& at(int i, int j) { return grid[std::size_t(i) * (num + 1) + j]; }
};

/// Perspective parameter of the projection (x f/(f+z), y f/(f+z)).
struct Camera {
    double f = 300.0;
};

/// Accumulated model rotation: anglex about the y-axis, angley about the
/// x-axis, applied in the order x-axis rotation then y-axis rotation.
struct Orientation {
    double anglex = 0.0;
    double angley = 0.0;
};

struct Projected {
    double x = 0.0;
    double y = 0.0;
};

/// A projected grid quad. Vertices are kept in perimeter order
/// (i,j) -> (i,j+1) -> (i+1,j+1) -> (i+1,j) so the fixed triangle index
/// pattern (0,1,3),(1,2,3) tiles the quad without gaps.
struct ProjectedQuad {
    static constexpr std::array<int, 6> kTriangleIndices{0, 1, 3, 1, 2, 3};

    std::array<double, 4> xs{};
    std::array<double, 4> ys{};
    double mean_z = 0.0;  // mean pre-projection z, used for painter ordering
    uint8_t shade = 0;    // (i+j) parity
};

struct Rgb {
    uint8_t r = 0;
    uint8_t g = 0;
    uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

/// Center-origin framebuffer, +y up; row 0 of the storage is the bottom row
/// and the top-left screen transform happens at write-out. Pixel (ix, iy) is
/// centered at (ix - width/2 + 0.5, iy - height/2 + 0.5).
struct FrameBuffer {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;

    FrameBuffer() = default;
    FrameBuffer(int w, int h) : width(w), height(h), pixels(std::size_t(w) * h) {}

    const Rgb& at(int ix, int iy) const { return pixels[std::size_t(iy) * width + ix]; }
    Rgb& at(int ix, int iy) { return pixels[std::size_t(iy) * width + ix]; }

    bool operator==(const FrameBuffer&) const = default;
};

/// Throws BadSubdivision for num < 2 or radius <= 0.
SphereMesh build_sphere(int num, double radius = 160.0);

/// Rotates every grid point about the x-axis by angley, then about the y-axis
/// by anglex. Point norms are preserved.
std::vector<Vec3> rotate(const SphereMesh& mesh, Orientation orientation);

/// (x f/(f+z), y f/(f+z)). Throws BehindCamera for z <= -f + 1e-6 f; callers
/// are expected to cull such points rather than divide.
Projected project(const Vec3& point, Camera camera);

struct Tessellation {
    std::vector<ProjectedQuad> quads;
    std::size_t culled = 0;  // quads dropped because a vertex sat behind the camera
};

/// Projects the rotated grid into num*num quads; any quad with a vertex
/// failing project()'s precondition is culled silently and counted.
Tessellation tessellate(const std::vector<Vec3>& rotated, int num, Camera camera);

/// Painter's algorithm: quads sorted back-to-front by mean z, each filled as
/// two triangles with half-space tests and a top-left fill rule. Coverage is
/// deterministic: identical quads yield bit-identical framebuffers.
void rasterize(const std::vector<ProjectedQuad>& quads, FrameBuffer& fb);

/// Binary PPM (P6), 8-bit RGB, rows written top to bottom. Returns the byte
/// count. Throws IoFailure.
uint64_t write_image(const FrameBuffer& fb, const std::string& path);

/// Convenience: build, rotate, tessellate and rasterize one frame.
FrameBuffer render_sphere_frame(int num, double radius, Camera camera, Orientation orientation, int width,
                                int height);

}  // namespace gdeck
