#include "et/development.hpp"

#include <algorithm>
#include <stdexcept>

namespace et {

void DevConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("dev config: " + msg); };
    if (dims.x < 1 || dims.y < 1 || dims.z < 1) fail("grid dims must be positive");
    if (static_cast<std::int64_t>(dims.x) * dims.y * dims.z > (1LL << 31))
        fail("grid too large");
    if (num_stages < 1) fail("num_stages must be >= 1");
    if (driver_spacing < 1) fail("driver_spacing must be >= 1");
}

Embryo::Embryo(Vec3i dims)
    : dims_(dims),
      cells_(static_cast<std::size_t>(dims.x) * static_cast<std::size_t>(dims.y) *
                 static_cast<std::size_t>(dims.z),
             0) {}

std::optional<CellView> Embryo::cell_at(const Vec3i& p) const {
    const std::uint8_t v = cells_[index(p)];
    if (v == 0) return std::nullopt;
    return CellView{p, (v & kDriverBit) ? CellKind::driver : CellKind::normal,
                    static_cast<int>(v & ~kDriverBit) - 1};
}

std::size_t Embryo::live_driver_count() const {
    return driver_at_.size();
}

void Embryo::kill_driver_at(std::size_t idx) {
    auto it = driver_at_.find(static_cast<std::uint64_t>(idx));
    if (it == driver_at_.end()) return;
    roster_[it->second].alive = false;
    driver_at_.erase(it);
}

void Embryo::set_normal(const Vec3i& p, int color) {
    const std::size_t i = index(p);
    if (cells_[i] == 0)
        ++occupied_;
    else if (cells_[i] & kDriverBit)
        kill_driver_at(i);
    cells_[i] = static_cast<std::uint8_t>(color + 1);
}

void Embryo::place_driver(const Vec3i& p, MobileCode code, SwitchOverlay ops, Filters filters, int color) {
    const std::size_t i = index(p);
    if (cells_[i] == 0)
        ++occupied_;
    else if (cells_[i] & kDriverBit)
        kill_driver_at(i);
    cells_[i] = static_cast<std::uint8_t>(color + 1) | kDriverBit;
    driver_at_[static_cast<std::uint64_t>(i)] = roster_.size();
    roster_.push_back(DriverCell{p, std::move(code), std::move(ops), std::move(filters),
                                 static_cast<std::uint8_t>(color), true});
}

bool Embryo::erase_cell(const Vec3i& p) {
    const std::size_t i = index(p);
    if (cells_[i] == 0) return false;
    if (cells_[i] & kDriverBit) kill_driver_at(i);
    cells_[i] = 0;
    --occupied_;
    return true;
}

void Embryo::compact_roster() {
    if (roster_.size() == driver_at_.size()) return;
    std::vector<DriverCell> live;
    live.reserve(driver_at_.size());
    for (DriverCell& d : roster_)
        if (d.alive) live.push_back(std::move(d));
    roster_ = std::move(live);
    driver_at_.clear();
    for (std::size_t slot = 0; slot < roster_.size(); ++slot)
        driver_at_[static_cast<std::uint64_t>(index(roster_[slot].pos))] = slot;
}

bool gene_matches(const DriverCell& driver, const DevelopmentalGene& gene, int clock) {
    return gene.switch_on && gene.timer == clock && gene.mobile_sequence == driver.code;
}

std::vector<MobileCode> derive_child_codes(const MobileCode& parent, std::uint32_t event_ordinal, int n) {
    std::vector<MobileCode> codes;
    codes.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) codes.push_back(parent.extend(event_ordinal, static_cast<std::uint32_t>(i)));
    return codes;
}

namespace {

// Exact integer membership test for the axis-aligned lattice ellipsoid:
// dx^2/a^2 + dy^2/b^2 + dz^2/c^2 <= 1. Semi-axes <= 255 keep the products
// within int64.
struct EllipsoidTest {
    std::int64_t a2b2, a2c2, b2c2, a2b2c2;

    EllipsoidTest(int a, int b, int c) {
        const std::int64_t a2 = static_cast<std::int64_t>(a) * a;
        const std::int64_t b2 = static_cast<std::int64_t>(b) * b;
        const std::int64_t c2 = static_cast<std::int64_t>(c) * c;
        a2b2 = a2 * b2;
        a2c2 = a2 * c2;
        b2c2 = b2 * c2;
        a2b2c2 = a2 * b2 * c2;
    }

    bool contains(std::int64_t dx, std::int64_t dy, std::int64_t dz) const {
        return dx * dx * b2c2 + dy * dy * a2c2 + dz * dz * a2b2 <= a2b2c2;
    }
};

}  // namespace

EmbryoDelta apply_change_event(Embryo& embryo, const DriverCell& driver, const DevelopmentalGene& gene,
                               const DevConfig& config, std::uint32_t event_ordinal,
                               DevelopmentTrace& trace) {
    EmbryoDelta delta;
    const Vec3i c = driver.pos;
    const int a = gene.axis_x, b = gene.axis_y, cc = gene.axis_z;
    const EllipsoidTest ell(a, b, cc);
    const Vec3i& dims = embryo.dims();

    const int x0 = std::max(0, c.x - a), x1 = std::min(dims.x - 1, c.x + a);
    const int y0 = std::max(0, c.y - b), y1 = std::min(dims.y - 1, c.y + b);
    const int z0 = std::max(0, c.z - cc), z1 = std::min(dims.z - 1, c.z + cc);

    if (gene.event_kind == EventKind::apoptosis) {
        for (int x = x0; x <= x1; ++x)
            for (int y = y0; y <= y1; ++y)
                for (int z = z0; z <= z1; ++z) {
                    if (!ell.contains(x - c.x, y - c.y, z - c.z)) continue;
                    const Vec3i p{x, y, z};
                    const bool was_driver =
                        embryo.occupied(p) && embryo.cell_at(p)->kind == CellKind::driver;
                    if (embryo.erase_cell(p)) {
                        ++delta.cells_deleted;
                        if (was_driver) ++delta.drivers_deleted;
                    }
                }
        return delta;
    }

    // Proliferation: fill with normal cells, then place the new drivers.
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y)
            for (int z = z0; z <= z1; ++z) {
                if (!ell.contains(x - c.x, y - c.y, z - c.z)) continue;
                const Vec3i p{x, y, z};
                if (embryo.occupied(p)) {
                    if (embryo.cell_at(p)->kind == CellKind::driver) ++delta.drivers_deleted;
                    ++delta.cells_overwritten;
                } else {
                    ++delta.cells_created;
                }
                embryo.set_normal(p, gene.color);
            }

    // Child overlay: parent's overlay updated by this gene's switch changes.
    SwitchOverlay child_ops = driver.ops;
    for (const SwitchChangeSlot& slot : gene.switch_changes) child_ops.apply(slot);

    const int sp = config.driver_spacing;
    auto lattice_lo = [&](int center, int lo) { return -((center - lo) / sp); };
    auto lattice_hi = [&](int center, int hi) { return (hi - center) / sp; };

    std::uint32_t child_index = 0;
    for (int i = lattice_lo(c.x, x0); i <= lattice_hi(c.x, x1); ++i)
        for (int j = lattice_lo(c.y, y0); j <= lattice_hi(c.y, y1); ++j)
            for (int k = lattice_lo(c.z, z0); k <= lattice_hi(c.z, z1); ++k) {
                const std::int64_t dx = static_cast<std::int64_t>(i) * sp;
                const std::int64_t dy = static_cast<std::int64_t>(j) * sp;
                const std::int64_t dz = static_cast<std::int64_t>(k) * sp;
                if (!ell.contains(dx, dy, dz)) continue;
                const Vec3i p{c.x + static_cast<int>(dx), c.y + static_cast<int>(dy),
                              c.z + static_cast<int>(dz)};
                MobileCode code = driver.code.extend(event_ordinal, child_index++);
                trace.codes.push_back(code);
                embryo.place_driver(p, std::move(code), child_ops,
                                    Filters::all_pass(static_cast<int>(driver.filters.in.size())),
                                    gene.color);
                ++delta.drivers_created;
            }
    return delta;
}

DevelopmentResult develop(const Genome& genome, const DevConfig& config, std::uint64_t /*seed*/) {
    config.validate();
    const GenomeConfig& gc = genome.config;
    Embryo embryo(config.dims);
    DevelopmentTrace trace;

    const Vec3i center{config.dims.x / 2, config.dims.y / 2, config.dims.z / 2};
    MobileCode root = MobileCode::root();
    trace.codes.push_back(root);
    embryo.place_driver(center, std::move(root), SwitchOverlay(gc.n_met),
                        Filters::all_pass(gc.substances), 0);

    struct PendingEvent {
        DriverCell driver;  // snapshot at stage entry
        int gene_index;
    };

    std::uint32_t event_ordinal = 0;
    for (int stage = 0; stage < config.num_stages; ++stage) {
        std::vector<PendingEvent> proliferations;
        std::vector<PendingEvent> apoptoses;
        for (const DriverCell& d : embryo.drivers()) {
            if (!d.alive) continue;
            for (int gi = 0; gi < static_cast<int>(genome.dev_genes.size()); ++gi) {
                const DevelopmentalGene& gene = genome.dev_genes[static_cast<std::size_t>(gi)];
                if (!gene_matches(d, gene, stage)) continue;
                auto& bucket =
                    gene.event_kind == EventKind::proliferation ? proliferations : apoptoses;
                bucket.push_back(PendingEvent{d, gi});
            }
        }
        for (const PendingEvent& ev : proliferations)
            apply_change_event(embryo, ev.driver, genome.dev_genes[static_cast<std::size_t>(ev.gene_index)],
                               config, event_ordinal++, trace);
        for (const PendingEvent& ev : apoptoses)
            apply_change_event(embryo, ev.driver, genome.dev_genes[static_cast<std::size_t>(ev.gene_index)],
                               config, event_ordinal++, trace);
        embryo.compact_roster();
        embryo.advance_clock();
    }
    return DevelopmentResult{std::move(embryo), std::move(trace)};
}

}  // namespace et
