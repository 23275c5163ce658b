#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "et/development.hpp"
#include "et/fitness.hpp"
#include "et/genome.hpp"
#include "et/metabolism.hpp"
#include "et/rng.hpp"

namespace et {

struct EvolutionConfig {
    int population_size = 124;
    double crossover_probability = 0.5;
    double mutation_rate = 0.005;  // per base
    int generations = 100;
    int elitism_count = 1;
    int tournament_size = 2;
    double germline_rate = 0.02;  // per developmental gene per generation
    std::uint64_t master_seed = 1;
    int threads = 1;  // parallel fitness evaluations within a generation

    void validate() const;  // throws std::invalid_argument
};

struct Individual {
    Genome genome;
    FitnessReport report;
    std::shared_ptr<const DevelopmentTrace> trace;
    bool evaluated = false;
};

struct GenerationStats {
    int generation = 0;
    double champion_combined = 0.0;
    double mean_combined = 0.0;
    double champion_shape = 0.0;
    double mean_shape = 0.0;
    double champion_metabolic = 0.0;
    double mean_metabolic = 0.0;
    double champion_mean_distance = 1.0;
};

struct RunHistory {
    std::vector<GenerationStats> generations;  // one row per breeding cycle
    Genome champion;
    FitnessReport champion_report;
};

/// Index of the tournament winner: k uniform draws with replacement, best
/// combined fitness wins, ties to the lowest population index.
int tournament_select(const std::vector<Individual>& population, int k, Rng& rng);

/// Each developmental gene independently, with probability rate, has its
/// mobile sequence overwritten by a code drawn uniformly from the donor
/// trace. No other field changes.
Genome germline_penetration(const Genome& genome, const DevelopmentTrace& trace, double rate, Rng& rng);

/// Generational GA: evaluate (develop + combined fitness), carry the elite
/// unchanged, fill the rest from tournament parents via crossover (with
/// crossover_probability, else clone parent A), per-base mutation, then
/// germline penetration seeded from parent A's development trace.
RunHistory evolve(const EvolutionConfig& config, const GenomeConfig& genome_config,
                  const DevConfig& dev_config, const NetworkConfig& net_config,
                  const TargetShape& target, const ExampleSet& examples);

}  // namespace et
