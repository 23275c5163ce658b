#include "et/metabolism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace et {

NetworkConfig NetworkConfig::defaults_for(const Vec3i& dims) {
    NetworkConfig cfg;
    cfg.in_point = Vec3d{0.0, dims.y / 2.0, dims.z / 2.0};
    cfg.out_point = Vec3d{static_cast<double>(dims.x - 1), dims.y / 2.0, dims.z / 2.0};
    return cfg;
}

void NetworkConfig::validate() const {
    if (levels < 1) throw std::invalid_argument("network config: levels must be >= 1");
    if (!(c_max > 0.0)) throw std::invalid_argument("network config: c_max must be > 0");
}

OperatorResult eval_operator(const MetabolicGene& gene, const ConcVector& conc) {
    const double y = std::tanh(gene.w1 * conc[static_cast<std::size_t>(gene.input_a)] +
                               gene.w2 * conc[static_cast<std::size_t>(gene.input_b)] + gene.w0);
    return OperatorResult{gene.output, y};
}

ConcVector eval_cell(const SwitchOverlay& ops, const Genome& genome, const ConcVector& conc_in,
                     double c_max) {
    ConcVector vec = conc_in;
    ConcVector deltas(vec.size(), 0.0);
    for (int layer = 1; layer <= kOperatorLayers; ++layer) {
        bool any = false;
        std::fill(deltas.begin(), deltas.end(), 0.0);
        for (std::size_t i = 0; i < genome.met_genes.size(); ++i) {
            const MetabolicGene& gene = genome.met_genes[i];
            if (gene.layer != layer) continue;
            if (!ops.effective(static_cast<int>(i), gene.switch_on)) continue;
            const OperatorResult r = eval_operator(gene, vec);
            deltas[static_cast<std::size_t>(r.target)] += r.delta;
            any = true;
        }
        if (!any) continue;
        for (std::size_t s = 0; s < vec.size(); ++s)
            vec[s] = std::clamp(vec[s] + deltas[s], 0.0, c_max);
    }
    return vec;
}

namespace {

// Closest live driver to a point; ties resolved by lexicographic position.
// `exclude` skips one roster entry (used when both anchors pick the same
// driver).
int closest_driver(const std::vector<DriverCell>& drivers, const Vec3d& point, int exclude = -1) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(drivers.size()); ++i) {
        if (i == exclude || !drivers[static_cast<std::size_t>(i)].alive) continue;
        const DriverCell& d = drivers[static_cast<std::size_t>(i)];
        const double dist = distance(d.pos, point);
        if (dist < best_d ||
            (dist == best_d && best >= 0 && d.pos < drivers[static_cast<std::size_t>(best)].pos)) {
            best = i;
            best_d = dist;
        }
    }
    return best;
}

ConcVector masked(const ConcVector& v, const std::vector<std::uint8_t>& filter) {
    ConcVector out(v.size());
    for (std::size_t s = 0; s < v.size(); ++s) out[s] = filter[s] ? v[s] : 0.0;
    return out;
}

}  // namespace

LeveledNetwork assign_levels(const Embryo& embryo, const NetworkConfig& config) {
    config.validate();
    const std::vector<DriverCell>& drivers = embryo.drivers();
    if (embryo.live_driver_count() < 2)
        throw std::runtime_error("assign_levels: embryo has fewer than 2 driver cells");

    const int in_idx = closest_driver(drivers, config.in_point);
    int out_idx = closest_driver(drivers, config.out_point);
    if (out_idx == in_idx) out_idx = closest_driver(drivers, config.out_point, in_idx);

    const int L = config.levels;
    LeveledNetwork net;
    net.substances = static_cast<int>(drivers[static_cast<std::size_t>(in_idx)].filters.in.size());
    net.c_max = config.c_max;
    net.levels.assign(static_cast<std::size_t>(L) + 1, {});

    const Vec3i in_pos = drivers[static_cast<std::size_t>(in_idx)].pos;
    const Vec3i out_pos = drivers[static_cast<std::size_t>(out_idx)].pos;
    for (int i = 0; i < static_cast<int>(drivers.size()); ++i) {
        const DriverCell& d = drivers[static_cast<std::size_t>(i)];
        if (!d.alive) continue;
        int level;
        if (i == in_idx) {
            level = 0;
        } else if (i == out_idx) {
            level = L;
        } else {
            const double d_in = distance(d.pos, in_pos);
            const double d_out = distance(d.pos, out_pos);
            level = static_cast<int>(std::lround(L * d_in / (d_in + d_out)));
            level = std::clamp(level, 1, L - 1);
        }
        net.levels[static_cast<std::size_t>(level)].push_back(static_cast<int>(net.cells.size()));
        net.cells.push_back(NetworkCell{d.pos, level, d.ops, d.filters});
    }
    return net;
}

namespace {

PropagationTrace run_network(const LeveledNetwork& net, const Genome& genome, const ConcVector& input,
                             bool record) {
    if (static_cast<int>(input.size()) != net.substances)
        throw std::invalid_argument("propagate: input length does not match network substances");
    PropagationTrace trace;
    if (record) trace.cell_state.resize(net.cells.size());

    const int L = static_cast<int>(net.levels.size()) - 1;
    std::vector<ConcVector> emissions;

    {
        const NetworkCell& cell = net.cells[static_cast<std::size_t>(net.input_cell())];
        const ConcVector received = masked(input, cell.filters.in);
        ConcVector state = eval_cell(cell.ops, genome, received, net.c_max);
        if (record) trace.cell_state[static_cast<std::size_t>(net.input_cell())] = state;
        emissions.push_back(masked(state, cell.filters.out));
    }

    for (int level = 1; level <= L; ++level) {
        const std::vector<int>& members = net.levels[static_cast<std::size_t>(level)];
        if (members.empty()) continue;  // skipped level: emissions pass through

        ConcVector mean(static_cast<std::size_t>(net.substances), 0.0);
        for (const ConcVector& e : emissions)
            for (std::size_t s = 0; s < mean.size(); ++s) mean[s] += e[s];
        for (double& m : mean) m /= static_cast<double>(emissions.size());

        std::vector<ConcVector> next;
        next.reserve(members.size());
        for (int idx : members) {
            const NetworkCell& cell = net.cells[static_cast<std::size_t>(idx)];
            const ConcVector received = masked(mean, cell.filters.in);
            ConcVector state = eval_cell(cell.ops, genome, received, net.c_max);
            if (record) trace.cell_state[static_cast<std::size_t>(idx)] = state;
            if (level == L) {
                trace.output = std::move(state);
                return trace;
            }
            next.push_back(masked(state, cell.filters.out));
        }
        emissions = std::move(next);
    }
    throw std::logic_error("propagate: network has no output level");
}

}  // namespace

ConcVector propagate(const LeveledNetwork& network, const Genome& genome, const ConcVector& input) {
    return run_network(network, genome, input, false).output;
}

PropagationTrace propagate_trace(const LeveledNetwork& network, const Genome& genome,
                                 const ConcVector& input) {
    return run_network(network, genome, input, true);
}

}  // namespace et
