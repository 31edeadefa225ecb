#pragma once

#include <string>

#include <json.hpp>

#include "projmotif/driver.hpp"
#include "projmotif/planted.hpp"

namespace projmotif {

/// Stable result schema, bumped on any layout change.
inline constexpr int kResultSchemaVersion = 1;

inline std::string render_result_json(const RunResult& result) {
    nlohmann::ordered_json doc;
    doc["version"] = kResultSchemaVersion;
    doc["params"] = {
        {"l", result.params.l}, {"d", result.params.d}, {"k", result.params.k},  {"s", result.params.s},
        {"m", result.params.m}, {"q", result.params.q}, {"seed", result.seed},
    };
    doc["best"] = {
        {"motif", result.best.consensus},
        {"score", result.best.score},
        {"expectation", result.best.expectation},
        {"positions", result.best.positions},
        {"source_bucket", result.best.source_bucket},
        {"trial", result.best_trial},
    };
    doc["stats"] = {
        {"trials_run", result.trials_run},
        {"buckets_enriched", result.buckets_enriched},
        {"wall_ms", result.wall_ms},
    };
    return doc.dump(2) + "\n";
}

inline std::string render_result_tsv(const RunResult& result) {
    std::string positions;
    for (std::size_t i = 0; i < result.best.positions.size(); ++i) {
        if (i > 0) {
            positions += ',';
        }
        positions += std::to_string(result.best.positions[i]);
    }
    std::string out = "motif\tscore\texpectation\tpositions\tsource_bucket\ttrial\ttrials_run\tbuckets_enriched\twall_ms\n";
    out += result.best.consensus + "\t" + std::to_string(result.best.score) + "\t" +
           nlohmann::json(result.best.expectation).dump() + "\t" + positions + "\t" +
           std::to_string(result.best.source_bucket) + "\t" + std::to_string(result.best_trial) + "\t" +
           std::to_string(result.trials_run) + "\t" + std::to_string(result.buckets_enriched) + "\t" +
           detail::format_ms(result.wall_ms) + "\n";
    return out;
}

/// Sidecar ground-truth file written next to generated FASTA.
inline std::string truth_json(const PlantedInstance& inst) {
    nlohmann::ordered_json doc;
    doc["motif"] = inst.motif;
    doc["positions"] = inst.positions;
    doc["d"] = inst.d;
    doc["l"] = inst.l;
    doc["seed"] = inst.seed;
    return doc.dump(2) + "\n";
}

}  // namespace projmotif
