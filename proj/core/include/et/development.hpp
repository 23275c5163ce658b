#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "et/genome.hpp"
#include "et/geometry.hpp"
#include "et/mobile_code.hpp"

namespace et {

enum class CellKind : std::uint8_t { normal, driver };

/// Per-driver override of the genome's metabolic switches. An unset entry
/// defers to the genome; a set entry wins.
struct SwitchOverlay {
    std::vector<bool> set;
    std::vector<bool> value;

    explicit SwitchOverlay(int n_met = 0)
        : set(static_cast<std::size_t>(n_met), false), value(static_cast<std::size_t>(n_met), false) {}

    void apply(const SwitchChangeSlot& slot) {
        if (slot.gene_index < 0 || slot.gene_index >= static_cast<int>(set.size())) return;
        set[static_cast<std::size_t>(slot.gene_index)] = true;
        value[static_cast<std::size_t>(slot.gene_index)] = slot.new_value;
    }

    bool effective(int gene_index, bool genome_switch) const {
        const auto i = static_cast<std::size_t>(gene_index);
        return set[i] ? value[i] : genome_switch;
    }

    friend bool operator==(const SwitchOverlay&, const SwitchOverlay&) = default;
};

/// Substance exchange masks, one bit per substance: 1 passes, 0 blocks.
struct Filters {
    std::vector<std::uint8_t> in;
    std::vector<std::uint8_t> out;

    static Filters all_pass(int substances) {
        Filters f;
        f.in.assign(static_cast<std::size_t>(substances), 1);
        f.out.assign(static_cast<std::size_t>(substances), 1);
        return f;
    }

    friend bool operator==(const Filters&, const Filters&) = default;
};

struct DriverCell {
    Vec3i pos;
    MobileCode code;
    SwitchOverlay ops;
    Filters filters;
    std::uint8_t color = 0;
    bool alive = true;

    friend bool operator==(const DriverCell&, const DriverCell&) = default;
};

struct CellView {
    Vec3i pos;
    CellKind kind;
    int color;
};

struct DevConfig {
    Vec3i dims{128, 128, 128};
    int num_stages = 8;
    int driver_spacing = 4;

    void validate() const;  // throws std::invalid_argument
};

/// Sparse multicellular body on a bounded 3D voxel grid: a dense occupancy
/// index over positions plus an ordered roster of driver cells. At most one
/// cell occupies a voxel; the roster mirrors exactly the driver-kind cells
/// in the grid.
class Embryo {
public:
    explicit Embryo(Vec3i dims);

    const Vec3i& dims() const { return dims_; }
    int clock() const { return clock_; }
    void advance_clock() { ++clock_; }

    std::int64_t cell_count() const { return occupied_; }
    bool in_bounds(const Vec3i& p) const {
        return p.x >= 0 && p.y >= 0 && p.z >= 0 && p.x < dims_.x && p.y < dims_.y && p.z < dims_.z;
    }
    bool occupied(const Vec3i& p) const { return cells_[index(p)] != 0; }
    std::optional<CellView> cell_at(const Vec3i& p) const;

    const std::vector<DriverCell>& drivers() const { return roster_; }
    std::size_t live_driver_count() const;

    // Mutators used by development. A write over an existing driver removes
    // it from the roster.
    void set_normal(const Vec3i& p, int color);
    void place_driver(const Vec3i& p, MobileCode code, SwitchOverlay ops, Filters filters, int color);
    bool erase_cell(const Vec3i& p);  // returns true if a cell was removed
    void compact_roster();

    /// Visits every occupied voxel in lexicographic (x,y,z) order.
    template <typename Fn>
    void for_each_cell(Fn&& fn) const {
        std::size_t i = 0;
        for (int x = 0; x < dims_.x; ++x)
            for (int y = 0; y < dims_.y; ++y)
                for (int z = 0; z < dims_.z; ++z, ++i) {
                    const std::uint8_t v = cells_[i];
                    if (v == 0) continue;
                    fn(CellView{Vec3i{x, y, z}, (v & kDriverBit) ? CellKind::driver : CellKind::normal,
                                static_cast<int>(v & ~kDriverBit) - 1});
                }
    }

private:
    static constexpr std::uint8_t kDriverBit = 0x80;

    std::size_t index(const Vec3i& p) const {
        return (static_cast<std::size_t>(p.x) * static_cast<std::size_t>(dims_.y) +
                static_cast<std::size_t>(p.y)) *
                   static_cast<std::size_t>(dims_.z) +
               static_cast<std::size_t>(p.z);
    }
    void kill_driver_at(std::size_t idx);

    Vec3i dims_;
    int clock_ = 0;
    std::int64_t occupied_ = 0;
    std::vector<std::uint8_t> cells_;                    // 0 empty, else (color+1) | driver bit
    std::vector<DriverCell> roster_;                     // creation order, may hold tombstones
    std::unordered_map<std::uint64_t, std::size_t> driver_at_;  // linear index -> roster slot
};

/// Every mobile code issued during one developmental run, in issue order
/// (root first). Germline penetration draws donor codes from here.
struct DevelopmentTrace {
    std::vector<MobileCode> codes;
};

struct EmbryoDelta {
    std::int64_t cells_created = 0;     // previously empty voxels now occupied
    std::int64_t cells_overwritten = 0; // occupied voxels rewritten
    std::int64_t cells_deleted = 0;     // occupied voxels now empty
    int drivers_created = 0;
    int drivers_deleted = 0;
};

struct DevelopmentResult {
    Embryo embryo;
    DevelopmentTrace trace;
};

/// True iff the gene is active, its mobile sequence equals the driver's code
/// exactly, and its timer equals the clock.
bool gene_matches(const DriverCell& driver, const DevelopmentalGene& gene, int clock);

/// Codes for n drivers placed by one change event: parent extended by
/// (event_ordinal, i) for i = 0..n-1.
std::vector<MobileCode> derive_child_codes(const MobileCode& parent, std::uint32_t event_ordinal, int n);

/// Applies one change event centered at the driver. Proliferation fills the
/// clipped axis-aligned ellipsoid with normal cells (overwriting existing
/// cells) and places fresh drivers on a regular sublattice of spacing
/// config.driver_spacing anchored at the center; apoptosis deletes every
/// cell inside the ellipsoid. New codes are appended to the trace.
EmbryoDelta apply_change_event(Embryo& embryo, const DriverCell& driver, const DevelopmentalGene& gene,
                               const DevConfig& config, std::uint32_t event_ordinal,
                               DevelopmentTrace& trace);

/// Grows an embryo from a single zygote driver at the grid center over
/// config.num_stages clock ticks. Matches are collected against the drivers
/// existing at stage entry (snapshot semantics), then applied with all
/// proliferations before all apoptoses, each group in roster order then gene
/// order. Development is fully deterministic; the seed parameter is part of
/// the call contract but currently unused.
DevelopmentResult develop(const Genome& genome, const DevConfig& config, std::uint64_t seed = 0);

}  // namespace et
