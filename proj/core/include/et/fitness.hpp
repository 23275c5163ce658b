#pragma once

#include <string>
#include <vector>

#include "et/development.hpp"
#include "et/metabolism.hpp"

namespace et {

/// Occupied-voxel target the developed shape is scored against.
class TargetShape {
public:
    TargetShape(Vec3i dims, std::vector<Vec3i> voxels);

    static TargetShape sphere(Vec3i dims, Vec3i center, double radius);
    static TargetShape ellipsoid(Vec3i dims, Vec3i center, double ax, double ay, double az);
    static TargetShape box(Vec3i dims, Vec3i lo, Vec3i hi);

    const Vec3i& dims() const { return dims_; }
    const std::vector<Vec3i>& voxels() const { return voxels_; }
    std::size_t size() const { return voxels_.size(); }

private:
    Vec3i dims_;
    std::vector<Vec3i> voxels_;
};

struct Example {
    ConcVector input;
    ConcVector target;
};
using ExampleSet = std::vector<Example>;

struct FitnessReport {
    double shape_fitness = 0.0;
    double metabolic_fitness = 0.0;
    double combined = 0.0;
    double mean_distance = 1.0;          // mean of per-example clamped distances
    std::vector<double> example_distances;
};

/// ||a-b||_2 / sqrt(S). With this normalization the expected distance of two
/// uniform(0,1)^8 vectors is 0.398866681.
double normalized_distance(const ConcVector& a, const ConcVector& b);

/// 1 - mean over examples of min(1, normalized_distance(output, target)).
double metabolic_fitness(const std::vector<ConcVector>& outputs, const std::vector<ConcVector>& targets);

/// Jaccard index of the embryo's occupied voxels against the target.
double shape_fitness(const Embryo& embryo, const TargetShape& target);

/// Builds the leveled network once, propagates every example input, and
/// blends the two components 50/50. An embryo with fewer than two drivers
/// scores metabolic 0 (every example at worst distance); shape is still
/// scored.
FitnessReport combined_fitness(const Embryo& embryo, const Genome& genome, const TargetShape& target,
                               const ExampleSet& examples, const NetworkConfig& net_config);

}  // namespace et
