#include "et/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace et {

TargetShape::TargetShape(Vec3i dims, std::vector<Vec3i> voxels)
    : dims_(dims), voxels_(std::move(voxels)) {
    if (voxels_.empty()) throw std::invalid_argument("target shape: no voxels");
    for (const Vec3i& v : voxels_)
        if (v.x < 0 || v.y < 0 || v.z < 0 || v.x >= dims.x || v.y >= dims.y || v.z >= dims.z)
            throw std::invalid_argument("target shape: voxel out of bounds");
}

TargetShape TargetShape::sphere(Vec3i dims, Vec3i center, double radius) {
    return ellipsoid(dims, center, radius, radius, radius);
}

TargetShape TargetShape::ellipsoid(Vec3i dims, Vec3i center, double ax, double ay, double az) {
    if (!(ax > 0.0) || !(ay > 0.0) || !(az > 0.0))
        throw std::invalid_argument("target shape: semi-axes must be positive");
    std::vector<Vec3i> voxels;
    const int rx = static_cast<int>(ax), ry = static_cast<int>(ay), rz = static_cast<int>(az);
    for (int x = std::max(0, center.x - rx); x <= std::min(dims.x - 1, center.x + rx); ++x)
        for (int y = std::max(0, center.y - ry); y <= std::min(dims.y - 1, center.y + ry); ++y)
            for (int z = std::max(0, center.z - rz); z <= std::min(dims.z - 1, center.z + rz); ++z) {
                const double dx = (x - center.x) / ax, dy = (y - center.y) / ay,
                             dz = (z - center.z) / az;
                if (dx * dx + dy * dy + dz * dz <= 1.0) voxels.push_back(Vec3i{x, y, z});
            }
    return TargetShape(dims, std::move(voxels));
}

TargetShape TargetShape::box(Vec3i dims, Vec3i lo, Vec3i hi) {
    std::vector<Vec3i> voxels;
    for (int x = std::max(0, lo.x); x <= std::min(dims.x - 1, hi.x); ++x)
        for (int y = std::max(0, lo.y); y <= std::min(dims.y - 1, hi.y); ++y)
            for (int z = std::max(0, lo.z); z <= std::min(dims.z - 1, hi.z); ++z)
                voxels.push_back(Vec3i{x, y, z});
    return TargetShape(dims, std::move(voxels));
}

double normalized_distance(const ConcVector& a, const ConcVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("normalized_distance: vector lengths differ");
    double sum = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        const double d = a[s] - b[s];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

double metabolic_fitness(const std::vector<ConcVector>& outputs,
                         const std::vector<ConcVector>& targets) {
    if (outputs.size() != targets.size())
        throw std::invalid_argument("metabolic_fitness: list lengths differ");
    if (outputs.empty()) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < outputs.size(); ++i)
        sum += std::min(1.0, normalized_distance(outputs[i], targets[i]));
    return 1.0 - sum / static_cast<double>(outputs.size());
}

double shape_fitness(const Embryo& embryo, const TargetShape& target) {
    if (embryo.dims() != target.dims())
        throw std::invalid_argument("shape_fitness: grid dims differ from target dims");
    std::int64_t intersection = 0;
    for (const Vec3i& v : target.voxels())
        if (embryo.occupied(v)) ++intersection;
    const std::int64_t uni =
        embryo.cell_count() + static_cast<std::int64_t>(target.size()) - intersection;
    return uni == 0 ? 0.0 : static_cast<double>(intersection) / static_cast<double>(uni);
}

FitnessReport combined_fitness(const Embryo& embryo, const Genome& genome, const TargetShape& target,
                               const ExampleSet& examples, const NetworkConfig& net_config) {
    FitnessReport report;
    report.shape_fitness = shape_fitness(embryo, target);

    if (embryo.live_driver_count() < 2 || examples.empty()) {
        report.metabolic_fitness = 0.0;
        report.example_distances.assign(examples.size(), 1.0);
        report.mean_distance = 1.0;
    } else {
        const LeveledNetwork net = assign_levels(embryo, net_config);
        report.example_distances.reserve(examples.size());
        double sum = 0.0;
        for (const Example& ex : examples) {
            const ConcVector out = propagate(net, genome, ex.input);
            const double d = std::min(1.0, normalized_distance(out, ex.target));
            report.example_distances.push_back(d);
            sum += d;
        }
        report.mean_distance = sum / static_cast<double>(examples.size());
        report.metabolic_fitness = 1.0 - report.mean_distance;
    }
    report.combined = 0.5 * report.shape_fitness + 0.5 * report.metabolic_fitness;
    return report;
}

}  // namespace et
