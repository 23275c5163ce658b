#pragma once

#include <vector>

#include "et/development.hpp"
#include "et/genome.hpp"
#include "et/geometry.hpp"

namespace et {

/// S substance concentrations, the unit of metabolic computation.
using ConcVector = std::vector<double>;

struct NetworkConfig {
    int levels = 6;       // top level index L; input at 0, output at L
    double c_max = 4.0;   // concentrations clamp to [0, c_max]
    Vec3d in_point;       // anchor choosing the input cell
    Vec3d out_point;      // anchor choosing the output cell

    /// Default anchors sit on opposite grid faces along x, so the input and
    /// output cells land on opposite sides of a centered body.
    static NetworkConfig defaults_for(const Vec3i& dims);

    void validate() const;  // throws std::invalid_argument
};

/// Driver-cell state copied into a leveled network; enough to evaluate the
/// cell without keeping the embryo alive.
struct NetworkCell {
    Vec3i pos;
    int level = 0;
    SwitchOverlay ops;
    Filters filters;
};

/// Structure-wide strictly-layered feed-forward network over driver cells.
/// levels[0] holds exactly the input cell, levels[L] exactly the output
/// cell; every participating driver appears in exactly one level.
struct LeveledNetwork {
    std::vector<NetworkCell> cells;
    std::vector<std::vector<int>> levels;  // indices into cells, size L+1
    int substances = 0;
    double c_max = 0.0;

    int input_cell() const { return levels.front().front(); }
    int output_cell() const { return levels.back().front(); }
};

struct OperatorResult {
    int target = 0;
    double delta = 0.0;
};

/// y = tanh(w1*conc[input_a] + w2*conc[input_b] + w0), targeting the gene's
/// output substance. The caller adds the delta.
OperatorResult eval_operator(const MetabolicGene& gene, const ConcVector& conc);

/// Runs the cell's three operator layers. Operators of a layer read the
/// vector as it stood at layer entry; their deltas accumulate per target
/// substance and are applied at once, then every entry is clamped to
/// [0, c_max]. A layer with no active operators leaves the vector untouched.
/// Effective operator activity is the genome switch unless the overlay sets
/// an override.
ConcVector eval_cell(const SwitchOverlay& ops, const Genome& genome, const ConcVector& conc_in,
                     double c_max);

/// Builds the leveled network from an embryo's live drivers. The input cell
/// minimizes distance to config.in_point, the output cell to
/// config.out_point (ties by lexicographic position; if both anchors pick
/// the same driver the output falls to the next closest). Every other
/// driver lands at clamp(round(L * d_in / (d_in + d_out)), 1, L-1) where
/// distances are to the chosen input/output cells. Throws std::runtime_error
/// if the embryo has fewer than two live drivers.
LeveledNetwork assign_levels(const Embryo& embryo, const NetworkConfig& config);

/// Feed-forward pass. The input cell receives `input` through its in-filter
/// and emits through its out-filter; each later cell receives the
/// component-wise mean of the previous non-empty level's emissions through
/// its own in-filter. Empty intermediate levels are skipped. Returns the
/// output cell's post-evaluation vector, unmasked.
ConcVector propagate(const LeveledNetwork& network, const Genome& genome, const ConcVector& input);

/// Same pass, also recording each cell's post-evaluation vector (indexed
/// like network.cells). Used for concentration-map export and invariants.
struct PropagationTrace {
    ConcVector output;
    std::vector<ConcVector> cell_state;
};
PropagationTrace propagate_trace(const LeveledNetwork& network, const Genome& genome,
                                 const ConcVector& input);

}  // namespace et
