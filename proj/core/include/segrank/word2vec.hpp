#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segrank/embedding.hpp"

namespace segrank {

struct TrainConfig {
    int dim = 100;
    int window = 5;
    int min_count = 2;
    int negative_samples = 5;
    int epochs = 5;
    double initial_learning_rate = 0.025;  // decays linearly to 1e-4 of itself
    uint64_t seed = 1;
    double subsample = 0.0;  // frequent-word subsampling threshold; 0 = off
    int threads = 1;         // >1 trades reproducibility for speed

    void validate() const;  // throws config_error on out-of-range fields
};

// Skip-gram with negative sampling, trained on token streams (one stream per
// sentence; context windows never cross stream boundaries). The vocabulary
// is exactly the words with corpus frequency >= min_count, ordered by
// descending frequency (ties broken alphabetically). Negative samples are
// drawn from the unigram distribution raised to 0.75. With threads == 1 the
// result is bit-reproducible for a fixed seed; with more threads the updates
// race benignly and the result varies run to run.
EmbeddingTable train_skipgram(const std::vector<std::vector<std::string>>& streams,
                              const TrainConfig& config);

// FNV-1a over the full token stream; identifies what a table was trained on.
std::string corpus_fingerprint(const std::vector<std::vector<std::string>>& streams);

}  // namespace segrank
