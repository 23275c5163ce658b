#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace et {

/// Integer voxel coordinate.
struct Vec3i {
    int x = 0;
    int y = 0;
    int z = 0;

    friend auto operator<=>(const Vec3i&, const Vec3i&) = default;
};

/// Real-valued point, used for network anchor points.
struct Vec3d {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double distance(const Vec3i& a, const Vec3d& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline double distance(const Vec3i& a, const Vec3i& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace et
