#include "segrank/word2vec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>
#include <unordered_map>

#include "segrank/errors.hpp"
#include "segrank/rng.hpp"

namespace segrank {

void TrainConfig::validate() const {
    if (dim < 1) throw config_error("train.dim must be >= 1");
    if (window < 1) throw config_error("train.window must be >= 1");
    if (min_count < 1) throw config_error("train.min_count must be >= 1");
    if (negative_samples < 1) throw config_error("train.negative_samples must be >= 1");
    if (epochs < 1) throw config_error("train.epochs must be >= 1");
    if (!(initial_learning_rate > 0.0))
        throw config_error("train.initial_learning_rate must be > 0");
    if (subsample < 0.0) throw config_error("train.subsample must be >= 0");
    if (threads < 1) throw config_error("train.threads must be >= 1");
}

namespace {

constexpr size_t kUnigramTableSize = 1 << 22;
constexpr double kUnigramPower = 0.75;
constexpr double kMaxExp = 6.0;

struct Vocab {
    std::vector<std::string> words;   // frequency-descending, ties alphabetic
    std::vector<int64_t> counts;
    std::unordered_map<std::string, int> index;
    int64_t total_tokens = 0;         // in-vocabulary occurrences
};

Vocab build_vocab(const std::vector<std::vector<std::string>>& streams, int min_count) {
    std::unordered_map<std::string, int64_t> freq;
    for (const auto& stream : streams)
        for (const auto& tok : stream) ++freq[tok];

    Vocab v;
    for (const auto& [word, count] : freq)
        if (count >= min_count) v.words.push_back(word);
    if (v.words.empty())
        throw config_error("no word reaches min_count=" + std::to_string(min_count) +
                           "; lower train.min_count or provide more text");
    std::sort(v.words.begin(), v.words.end(), [&](const std::string& a, const std::string& b) {
        const int64_t fa = freq[a], fb = freq[b];
        return fa != fb ? fa > fb : a < b;
    });
    v.counts.resize(v.words.size());
    for (size_t i = 0; i < v.words.size(); ++i) {
        v.counts[i] = freq[v.words[i]];
        v.index.emplace(v.words[i], static_cast<int>(i));
        v.total_tokens += v.counts[i];
    }
    return v;
}

// Word i occupies a stretch of the table proportional to count^0.75.
std::vector<uint32_t> build_unigram_table(const Vocab& vocab) {
    std::vector<uint32_t> table(kUnigramTableSize);
    double norm = 0.0;
    for (int64_t c : vocab.counts) norm += std::pow(static_cast<double>(c), kUnigramPower);
    size_t i = 0;
    double cum = std::pow(static_cast<double>(vocab.counts[0]), kUnigramPower) / norm;
    for (size_t j = 0; j < kUnigramTableSize; ++j) {
        table[j] = static_cast<uint32_t>(i);
        if (static_cast<double>(j) / kUnigramTableSize > cum && i + 1 < vocab.words.size()) {
            ++i;
            cum += std::pow(static_cast<double>(vocab.counts[i]), kUnigramPower) / norm;
        }
    }
    return table;
}

float sigmoid(float f) {
    if (f > kMaxExp) return 1.0f;
    if (f < -kMaxExp) return 0.0f;
    return static_cast<float>(1.0 / (1.0 + std::exp(-static_cast<double>(f))));
}

struct TrainerState {
    const Vocab& vocab;
    const std::vector<uint32_t>& unigram;
    const TrainConfig& cfg;
    std::vector<float>& syn0;
    std::vector<float>& syn1;
    int64_t total_train_words;  // per epoch
    std::atomic<int64_t> processed{0};

    TrainerState(const Vocab& v, const std::vector<uint32_t>& u, const TrainConfig& c,
                 std::vector<float>& s0, std::vector<float>& s1, int64_t total)
        : vocab(v), unigram(u), cfg(c), syn0(s0), syn1(s1), total_train_words(total) {}
};

// Trains one slice of streams for all epochs. The update rule is the classic
// one: for every (center, context) pair the context word's input vector is
// pulled toward the center word's output vector and away from sampled
// negatives.
void train_streams(TrainerState& st,
                   const std::vector<const std::vector<std::string>*>& streams,
                   uint64_t rng_seed) {
    Xoshiro256ss rng(rng_seed);
    const int dim = st.cfg.dim;
    const int window = st.cfg.window;
    const int negative = st.cfg.negative_samples;
    const double denom = static_cast<double>(st.cfg.epochs) * st.total_train_words + 1.0;
    std::vector<int> ids;
    std::vector<float> grad(static_cast<size_t>(dim));

    for (int epoch = 0; epoch < st.cfg.epochs; ++epoch) {
        for (const auto* stream_ptr : streams) {
            ids.clear();
            int64_t seen = 0;
            for (const auto& tok : *stream_ptr) {
                auto it = st.vocab.index.find(tok);
                if (it == st.vocab.index.end()) continue;
                ++seen;
                if (st.cfg.subsample > 0.0) {
                    const double f = static_cast<double>(st.vocab.counts[it->second]);
                    const double thresh = st.cfg.subsample * st.vocab.total_tokens;
                    const double keep = (std::sqrt(f / thresh) + 1.0) * thresh / f;
                    if (keep < 1.0 && rng.real() >= keep) continue;
                }
                ids.push_back(it->second);
            }
            if (seen == 0) continue;

            const int64_t done = st.processed.fetch_add(seen, std::memory_order_relaxed);
            double alpha = st.cfg.initial_learning_rate *
                           (1.0 - static_cast<double>(done) / denom);
            if (alpha < st.cfg.initial_learning_rate * 1e-4)
                alpha = st.cfg.initial_learning_rate * 1e-4;
            const float lr = static_cast<float>(alpha);

            const int n = static_cast<int>(ids.size());
            for (int pos = 0; pos < n; ++pos) {
                const int center = ids[pos];
                const int reduced = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(window)));
                for (int d = -reduced; d <= reduced; ++d) {
                    if (d == 0) continue;
                    const int j = pos + d;
                    if (j < 0 || j >= n) continue;
                    float* in = st.syn0.data() + static_cast<size_t>(ids[j]) * dim;
                    std::fill(grad.begin(), grad.end(), 0.0f);
                    for (int k = 0; k <= negative; ++k) {
                        int target;
                        float label;
                        if (k == 0) {
                            target = center;
                            label = 1.0f;
                        } else {
                            target = static_cast<int>(
                                st.unigram[rng.bounded(kUnigramTableSize)]);
                            if (target == center) continue;
                            label = 0.0f;
                        }
                        float* out = st.syn1.data() + static_cast<size_t>(target) * dim;
                        float dot = 0.0f;
                        for (int c = 0; c < dim; ++c) dot += in[c] * out[c];
                        const float g = (label - sigmoid(dot)) * lr;
                        for (int c = 0; c < dim; ++c) grad[c] += g * out[c];
                        for (int c = 0; c < dim; ++c) out[c] += g * in[c];
                    }
                    for (int c = 0; c < dim; ++c) in[c] += grad[c];
                }
            }
        }
    }
}

}  // namespace

EmbeddingTable train_skipgram(const std::vector<std::vector<std::string>>& streams,
                              const TrainConfig& config) {
    config.validate();
    if (streams.empty()) throw config_error("training corpus is empty");

    const Vocab vocab = build_vocab(streams, config.min_count);
    const std::vector<uint32_t> unigram = build_unigram_table(vocab);
    const int dim = config.dim;
    const size_t vocab_size = vocab.words.size();

    std::vector<float> syn0(vocab_size * static_cast<size_t>(dim));
    std::vector<float> syn1(vocab_size * static_cast<size_t>(dim), 0.0f);
    {
        Xoshiro256ss init_rng(config.seed);
        for (float& w : syn0)
            w = static_cast<float>((init_rng.real() - 0.5) / dim);
    }

    TrainerState state(vocab, unigram, config, syn0, syn1, vocab.total_tokens);

    if (config.threads <= 1) {
        std::vector<const std::vector<std::string>*> all;
        all.reserve(streams.size());
        for (const auto& s : streams) all.push_back(&s);
        train_streams(state, all, config.seed + 1);
    } else {
        std::vector<std::vector<const std::vector<std::string>*>> slices(
            static_cast<size_t>(config.threads));
        for (size_t i = 0; i < streams.size(); ++i)
            slices[i % static_cast<size_t>(config.threads)].push_back(&streams[i]);
        std::vector<std::thread> workers;
        for (int t = 0; t < config.threads; ++t)
            workers.emplace_back(train_streams, std::ref(state), std::cref(slices[t]),
                                 config.seed + 1 + static_cast<uint64_t>(t));
        for (auto& w : workers) w.join();
    }

    EmbeddingTable table(dim);
    table.set_trained_on(corpus_fingerprint(streams));
    for (size_t i = 0; i < vocab_size; ++i)
        table.add(vocab.words[i], {syn0.data() + i * static_cast<size_t>(dim),
                                   static_cast<size_t>(dim)});
    return table;
}

std::string corpus_fingerprint(const std::vector<std::vector<std::string>>& streams) {
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    for (const auto& stream : streams) {
        for (const auto& tok : stream) {
            for (char c : tok) mix(static_cast<unsigned char>(c));
            mix(0x1f);  // token separator
        }
        mix(0x1e);  // stream separator
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace segrank
