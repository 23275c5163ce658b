#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "et/mobile_code.hpp"
#include "et/rng.hpp"

namespace et {

enum class EventKind : std::uint8_t { proliferation = 0, apoptosis = 1 };

/// One entry of a developmental gene's metabolic-switch change list.
/// gene_index == disabled_index(n_met) marks an unused slot; slots are kept
/// verbatim so the base-string encoding is a bijection.
struct SwitchChangeSlot {
    int gene_index = 0;
    bool new_value = false;

    friend bool operator==(const SwitchChangeSlot&, const SwitchChangeSlot&) = default;
};

struct DevelopmentalGene {
    bool switch_on = false;
    MobileCode mobile_sequence;
    int timer = 0;  // developmental stage this gene can fire at
    EventKind event_kind = EventKind::proliferation;
    int axis_x = 1, axis_y = 1, axis_z = 1;  // ellipsoid semi-axes, voxels
    int color = 0;
    std::vector<SwitchChangeSlot> switch_changes;  // fixed length = config.switch_slots

    friend bool operator==(const DevelopmentalGene&, const DevelopmentalGene&) = default;
};

struct MetabolicGene {
    bool switch_on = false;
    int layer = 1;  // operator layer within a cell, 1..3
    int input_a = 0, input_b = 0;  // substance indices read by the operator
    int output = 0;                // substance index the delta is added to
    double w1 = 0.0, w2 = 0.0, w0 = 0.0;  // always on the quantization grid

    friend bool operator==(const MetabolicGene&, const MetabolicGene&) = default;
};

/// Structural parameters of the genotype. Two genomes can recombine only if
/// their structural fields agree.
struct GenomeConfig {
    int n_dev = 20;        // developmental gene count
    int n_met = 32;        // metabolic gene count
    int substances = 8;    // S, concentration vector length
    int num_stages = 8;    // developmental stages; timer range
    int max_axis = 15;     // upper bound of each ellipsoid semi-axis
    int num_colors = 8;
    int switch_slots = 4;  // metabolic-switch change slots per developmental gene
    double w_max = 4.0;    // operator weights span [-w_max, w_max]

    // Generation-only knob: how many developmental switches start active.
    int initial_active_dev = 3;

    void validate() const;  // throws std::invalid_argument
    bool structurally_equal(const GenomeConfig& o) const;

    friend bool operator==(const GenomeConfig&, const GenomeConfig&) = default;
};

struct Genome {
    GenomeConfig config;
    std::vector<DevelopmentalGene> dev_genes;
    std::vector<MetabolicGene> met_genes;

    int total_genes() const { return static_cast<int>(dev_genes.size() + met_genes.size()); }

    friend bool operator==(const Genome&, const Genome&) = default;
};

/// One position of the flat mutation surface. Discrete fields occupy one
/// slot each (cardinality = size of the field's legal range); each operator
/// weight is quantized to one slot over 256 levels spanning [-w_max, w_max];
/// the mobile sequence occupies one opaque slot whose legal values are all
/// syntactically valid codes.
struct Base {
    enum class Kind : std::uint8_t { discrete, code };
    Kind kind = Kind::discrete;
    int value = 0;
    int cardinality = 1;
    MobileCode code;

    friend bool operator==(const Base&, const Base&) = default;
};

inline constexpr int kWeightLevels = 256;
inline constexpr int kOperatorLayers = 3;

double weight_from_level(int level, double w_max);
int level_from_weight(double w, double w_max);

/// Number of bases a genome with this config encodes to.
int base_count(const GenomeConfig& config);

std::vector<Base> encode_bases(const Genome& genome);
Genome decode_bases(const GenomeConfig& config, const std::vector<Base>& bases);

/// Uniformly sampled genome; the first config.initial_active_dev (randomly
/// chosen) developmental switches start active, the rest inactive.
Genome random_genome(const GenomeConfig& config, std::uint64_t seed);

/// Random syntactically valid mobile code (bounded depth/ordinals); the
/// distribution used when mutation resamples a mobile-sequence slot.
MobileCode random_code(Rng& rng, const GenomeConfig& config);

/// Per-base point mutation: each base is independently replaced, with
/// probability rate, by a uniformly random different legal value. Slots with
/// a single legal value are left unchanged.
Genome mutate(const Genome& genome, double rate, Rng& rng);

/// Single-point crossover at gene boundary k over the concatenated
/// dev+metabolic gene list: child = a[0,k) + b[k,end).
Genome crossover_at(const Genome& parent_a, const Genome& parent_b, int k);
Genome crossover(const Genome& parent_a, const Genome& parent_b, Rng& rng);

// ETG1 text format: versioned header carrying the structural config, then
// one gene per line. Round-trips bit-exactly (weights are stored as
// quantization levels). Layout documented in the README.
void write_genome(const Genome& genome, std::ostream& out);
Genome read_genome(std::istream& in);
void save_genome_file(const Genome& genome, const std::string& path);
Genome load_genome_file(const std::string& path);

}  // namespace et
