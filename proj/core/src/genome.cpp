#include "et/genome.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace et {

namespace {

// Sampling bounds for blindly generated mobile codes. Deep or high-ordinal
// codes are reachable only through germline penetration, which copies codes
// observed during development.
constexpr int kCodeSampleMaxDepth = 4;
constexpr std::uint32_t kCodeSampleMaxEvent = 15;
constexpr std::uint32_t kCodeSampleMaxChild = 15;

int disabled_index(const GenomeConfig& c) { return c.n_met; }

}  // namespace

void GenomeConfig::validate() const {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("genome config: " + msg); };
    if (n_dev < 1) fail("n_dev must be >= 1");
    if (n_met < 0) fail("n_met must be >= 0");
    if (substances < 1) fail("substances must be >= 1");
    if (num_stages < 1) fail("num_stages must be >= 1");
    if (max_axis < 1 || max_axis > 255) fail("max_axis must be in [1,255]");
    if (num_colors < 1 || num_colors > 127) fail("num_colors must be in [1,127]");
    if (switch_slots < 0) fail("switch_slots must be >= 0");
    if (!(w_max > 0.0)) fail("w_max must be > 0");
    if (initial_active_dev < 0) fail("initial_active_dev must be >= 0");
}

bool GenomeConfig::structurally_equal(const GenomeConfig& o) const {
    return n_dev == o.n_dev && n_met == o.n_met && substances == o.substances &&
           num_stages == o.num_stages && max_axis == o.max_axis && num_colors == o.num_colors &&
           switch_slots == o.switch_slots && w_max == o.w_max;
}

double weight_from_level(int level, double w_max) {
    return -w_max + static_cast<double>(level) * (2.0 * w_max / (kWeightLevels - 1));
}

int level_from_weight(double w, double w_max) {
    const double q = (w + w_max) * (kWeightLevels - 1) / (2.0 * w_max);
    int level = static_cast<int>(std::lround(q));
    if (level < 0) level = 0;
    if (level >= kWeightLevels) level = kWeightLevels - 1;
    return level;
}

int base_count(const GenomeConfig& c) {
    const int dev_bases = 8 + 2 * c.switch_slots;
    const int met_bases = 8;
    return c.n_dev * dev_bases + c.n_met * met_bases;
}

namespace {

Base discrete(int value, int cardinality) {
    Base b;
    b.kind = Base::Kind::discrete;
    b.value = value;
    b.cardinality = cardinality;
    return b;
}

Base code_base(MobileCode code) {
    Base b;
    b.kind = Base::Kind::code;
    b.code = std::move(code);
    return b;
}

}  // namespace

std::vector<Base> encode_bases(const Genome& g) {
    const GenomeConfig& c = g.config;
    std::vector<Base> out;
    out.reserve(static_cast<std::size_t>(base_count(c)));
    for (const DevelopmentalGene& d : g.dev_genes) {
        out.push_back(discrete(d.switch_on ? 1 : 0, 2));
        out.push_back(code_base(d.mobile_sequence));
        out.push_back(discrete(d.timer, c.num_stages));
        out.push_back(discrete(static_cast<int>(d.event_kind), 2));
        out.push_back(discrete(d.axis_x - 1, c.max_axis));
        out.push_back(discrete(d.axis_y - 1, c.max_axis));
        out.push_back(discrete(d.axis_z - 1, c.max_axis));
        out.push_back(discrete(d.color, c.num_colors));
        for (const SwitchChangeSlot& s : d.switch_changes) {
            out.push_back(discrete(s.gene_index, c.n_met + 1));
            out.push_back(discrete(s.new_value ? 1 : 0, 2));
        }
    }
    for (const MetabolicGene& m : g.met_genes) {
        out.push_back(discrete(m.switch_on ? 1 : 0, 2));
        out.push_back(discrete(m.layer - 1, kOperatorLayers));
        out.push_back(discrete(m.input_a, c.substances));
        out.push_back(discrete(m.input_b, c.substances));
        out.push_back(discrete(m.output, c.substances));
        out.push_back(discrete(level_from_weight(m.w1, c.w_max), kWeightLevels));
        out.push_back(discrete(level_from_weight(m.w2, c.w_max), kWeightLevels));
        out.push_back(discrete(level_from_weight(m.w0, c.w_max), kWeightLevels));
    }
    return out;
}

Genome decode_bases(const GenomeConfig& c, const std::vector<Base>& bases) {
    if (static_cast<int>(bases.size()) != base_count(c))
        throw std::runtime_error("decode_bases: base count does not match config");
    Genome g;
    g.config = c;
    g.dev_genes.resize(static_cast<std::size_t>(c.n_dev));
    g.met_genes.resize(static_cast<std::size_t>(c.n_met));
    std::size_t i = 0;
    auto next = [&]() -> const Base& { return bases[i++]; };
    for (DevelopmentalGene& d : g.dev_genes) {
        d.switch_on = next().value != 0;
        d.mobile_sequence = next().code;
        d.timer = next().value;
        d.event_kind = static_cast<EventKind>(next().value);
        d.axis_x = next().value + 1;
        d.axis_y = next().value + 1;
        d.axis_z = next().value + 1;
        d.color = next().value;
        d.switch_changes.resize(static_cast<std::size_t>(c.switch_slots));
        for (SwitchChangeSlot& s : d.switch_changes) {
            s.gene_index = next().value;
            s.new_value = next().value != 0;
        }
    }
    for (MetabolicGene& m : g.met_genes) {
        m.switch_on = next().value != 0;
        m.layer = next().value + 1;
        m.input_a = next().value;
        m.input_b = next().value;
        m.output = next().value;
        m.w1 = weight_from_level(next().value, c.w_max);
        m.w2 = weight_from_level(next().value, c.w_max);
        m.w0 = weight_from_level(next().value, c.w_max);
    }
    return g;
}

MobileCode random_code(Rng& rng, const GenomeConfig& config) {
    const int max_depth = std::min(kCodeSampleMaxDepth, config.num_stages);
    const int depth = uniform_int(rng, 0, max_depth);
    MobileCode code;
    for (int i = 0; i < depth; ++i) {
        const auto event = static_cast<std::uint32_t>(uniform_int(rng, 0, static_cast<int>(kCodeSampleMaxEvent)));
        const auto child = static_cast<std::uint32_t>(uniform_int(rng, 0, static_cast<int>(kCodeSampleMaxChild)));
        code = code.extend(event, child);
    }
    return code;
}

Genome random_genome(const GenomeConfig& c, std::uint64_t seed) {
    c.validate();
    Rng rng(seed);
    Genome g;
    g.config = c;
    g.dev_genes.resize(static_cast<std::size_t>(c.n_dev));
    g.met_genes.resize(static_cast<std::size_t>(c.n_met));

    // Choose which developmental switches start active (partial shuffle).
    std::vector<int> order(static_cast<std::size_t>(c.n_dev));
    for (int i = 0; i < c.n_dev; ++i) order[static_cast<std::size_t>(i)] = i;
    const int active = std::min(c.initial_active_dev, c.n_dev);
    for (int i = 0; i < active; ++i) {
        const int j = uniform_int(rng, i, c.n_dev - 1);
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    std::vector<bool> starts_active(static_cast<std::size_t>(c.n_dev), false);
    for (int i = 0; i < active; ++i) starts_active[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = true;

    for (int i = 0; i < c.n_dev; ++i) {
        DevelopmentalGene& d = g.dev_genes[static_cast<std::size_t>(i)];
        d.switch_on = starts_active[static_cast<std::size_t>(i)];
        d.mobile_sequence = random_code(rng, c);
        d.timer = uniform_int(rng, 0, c.num_stages - 1);
        d.event_kind = static_cast<EventKind>(uniform_int(rng, 0, 1));
        d.axis_x = uniform_int(rng, 1, c.max_axis);
        d.axis_y = uniform_int(rng, 1, c.max_axis);
        d.axis_z = uniform_int(rng, 1, c.max_axis);
        d.color = uniform_int(rng, 0, c.num_colors - 1);
        d.switch_changes.resize(static_cast<std::size_t>(c.switch_slots));
        for (SwitchChangeSlot& s : d.switch_changes) {
            s.gene_index = uniform_int(rng, 0, c.n_met);  // n_met = disabled slot
            s.new_value = uniform_int(rng, 0, 1) != 0;
        }
    }
    for (MetabolicGene& m : g.met_genes) {
        m.switch_on = uniform_int(rng, 0, 1) != 0;
        m.layer = uniform_int(rng, 1, kOperatorLayers);
        m.input_a = uniform_int(rng, 0, c.substances - 1);
        m.input_b = uniform_int(rng, 0, c.substances - 1);
        m.output = uniform_int(rng, 0, c.substances - 1);
        m.w1 = weight_from_level(uniform_int(rng, 0, kWeightLevels - 1), c.w_max);
        m.w2 = weight_from_level(uniform_int(rng, 0, kWeightLevels - 1), c.w_max);
        m.w0 = weight_from_level(uniform_int(rng, 0, kWeightLevels - 1), c.w_max);
    }
    return g;
}

Genome mutate(const Genome& genome, double rate, Rng& rng) {
    if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("mutate: rate must be in [0,1]");
    std::vector<Base> bases = encode_bases(genome);
    for (Base& b : bases) {
        const double u = uniform01(rng);
        if (u >= rate) continue;
        if (b.kind == Base::Kind::discrete) {
            if (b.cardinality < 2) continue;  // no different legal value exists
            int v = uniform_int(rng, 0, b.cardinality - 2);
            if (v >= b.value) ++v;
            b.value = v;
        } else {
            MobileCode fresh = random_code(rng, genome.config);
            while (fresh == b.code) fresh = random_code(rng, genome.config);
            b.code = fresh;
        }
    }
    return decode_bases(genome.config, bases);
}

Genome crossover_at(const Genome& a, const Genome& b, int k) {
    if (!a.config.structurally_equal(b.config))
        throw std::runtime_error("crossover: parents have mismatched genome configs");
    const int total = a.total_genes();
    if (k < 0 || k > total) throw std::invalid_argument("crossover: cut point out of range");
    Genome child;
    child.config = a.config;
    const int n_dev = a.config.n_dev;
    child.dev_genes.reserve(a.dev_genes.size());
    child.met_genes.reserve(a.met_genes.size());
    for (int i = 0; i < n_dev; ++i)
        child.dev_genes.push_back(i < k ? a.dev_genes[static_cast<std::size_t>(i)]
                                        : b.dev_genes[static_cast<std::size_t>(i)]);
    for (int i = 0; i < a.config.n_met; ++i)
        child.met_genes.push_back(n_dev + i < k ? a.met_genes[static_cast<std::size_t>(i)]
                                                : b.met_genes[static_cast<std::size_t>(i)]);
    return child;
}

Genome crossover(const Genome& a, const Genome& b, Rng& rng) {
    if (!a.config.structurally_equal(b.config))
        throw std::runtime_error("crossover: parents have mismatched genome configs");
    const int k = uniform_int(rng, 0, a.total_genes());
    return crossover_at(a, b, k);
}

namespace {

std::string fmt_wmax(double w) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

}  // namespace

void write_genome(const Genome& g, std::ostream& out) {
    const GenomeConfig& c = g.config;
    out << "ETG1 " << c.n_dev << ' ' << c.n_met << ' ' << c.substances << ' ' << c.num_stages
        << ' ' << c.max_axis << ' ' << c.num_colors << ' ' << c.switch_slots << ' '
        << fmt_wmax(c.w_max) << '\n';
    for (const DevelopmentalGene& d : g.dev_genes) {
        out << "D " << (d.switch_on ? 1 : 0) << ' ' << d.mobile_sequence.to_string() << ' '
            << d.timer << ' ' << (d.event_kind == EventKind::proliferation ? 'P' : 'A') << ' '
            << d.axis_x << ' ' << d.axis_y << ' ' << d.axis_z << ' ' << d.color;
        for (const SwitchChangeSlot& s : d.switch_changes)
            out << ' ' << s.gene_index << ' ' << (s.new_value ? 1 : 0);
        out << '\n';
    }
    for (const MetabolicGene& m : g.met_genes) {
        out << "M " << (m.switch_on ? 1 : 0) << ' ' << m.layer << ' ' << m.input_a << ' '
            << m.input_b << ' ' << m.output << ' ' << level_from_weight(m.w1, c.w_max) << ' '
            << level_from_weight(m.w2, c.w_max) << ' ' << level_from_weight(m.w0, c.w_max) << '\n';
    }
}

Genome read_genome(std::istream& in) {
    std::string magic;
    in >> magic;
    if (magic != "ETG1") throw std::runtime_error("genome file: missing ETG1 header");
    GenomeConfig c;
    if (!(in >> c.n_dev >> c.n_met >> c.substances >> c.num_stages >> c.max_axis >> c.num_colors >>
          c.switch_slots >> c.w_max))
        throw std::runtime_error("genome file: truncated header");
    c.validate();
    Genome g;
    g.config = c;
    g.dev_genes.reserve(static_cast<std::size_t>(c.n_dev));
    g.met_genes.reserve(static_cast<std::size_t>(c.n_met));
    for (int i = 0; i < c.n_dev; ++i) {
        std::string tag, code_text;
        char kind = 0;
        int sw = 0;
        DevelopmentalGene d;
        if (!(in >> tag >> sw >> code_text >> d.timer >> kind >> d.axis_x >> d.axis_y >> d.axis_z >>
              d.color) ||
            tag != "D")
            throw std::runtime_error("genome file: bad developmental gene line");
        d.switch_on = sw != 0;
        d.mobile_sequence = MobileCode::parse(code_text);
        if (kind != 'P' && kind != 'A') throw std::runtime_error("genome file: bad event kind");
        d.event_kind = kind == 'P' ? EventKind::proliferation : EventKind::apoptosis;
        d.switch_changes.resize(static_cast<std::size_t>(c.switch_slots));
        for (SwitchChangeSlot& s : d.switch_changes) {
            int v = 0;
            if (!(in >> s.gene_index >> v)) throw std::runtime_error("genome file: bad switch slot");
            s.new_value = v != 0;
        }
        if (d.timer < 0 || d.timer >= c.num_stages || d.axis_x < 1 || d.axis_x > c.max_axis ||
            d.axis_y < 1 || d.axis_y > c.max_axis || d.axis_z < 1 || d.axis_z > c.max_axis ||
            d.color < 0 || d.color >= c.num_colors)
            throw std::runtime_error("genome file: developmental gene field out of range");
        for (const SwitchChangeSlot& s : d.switch_changes)
            if (s.gene_index < 0 || s.gene_index > c.n_met)
                throw std::runtime_error("genome file: switch slot index out of range");
        g.dev_genes.push_back(std::move(d));
    }
    for (int i = 0; i < c.n_met; ++i) {
        std::string tag;
        int sw = 0, q1 = 0, q2 = 0, q0 = 0;
        MetabolicGene m;
        if (!(in >> tag >> sw >> m.layer >> m.input_a >> m.input_b >> m.output >> q1 >> q2 >> q0) ||
            tag != "M")
            throw std::runtime_error("genome file: bad metabolic gene line");
        m.switch_on = sw != 0;
        if (m.layer < 1 || m.layer > kOperatorLayers || m.input_a < 0 ||
            m.input_a >= c.substances || m.input_b < 0 || m.input_b >= c.substances ||
            m.output < 0 || m.output >= c.substances || q1 < 0 || q1 >= kWeightLevels || q2 < 0 ||
            q2 >= kWeightLevels || q0 < 0 || q0 >= kWeightLevels)
            throw std::runtime_error("genome file: metabolic gene field out of range");
        m.w1 = weight_from_level(q1, c.w_max);
        m.w2 = weight_from_level(q2, c.w_max);
        m.w0 = weight_from_level(q0, c.w_max);
        g.met_genes.push_back(m);
    }
    return g;
}

void save_genome_file(const Genome& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open genome file for writing: " + path);
    write_genome(g, out);
    if (!out) throw std::runtime_error("failed writing genome file: " + path);
}

Genome load_genome_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open genome file: " + path);
    return read_genome(in);
}

}  // namespace et
