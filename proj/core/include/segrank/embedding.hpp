#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace segrank {

// Word -> dense vector map with a fixed dimension. Vectors are stored in one
// flat row-major block in insertion order, which is also the order save()
// writes rows in. Invariant: no stored vector has zero norm.
class EmbeddingTable {
public:
    explicit EmbeddingTable(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    size_t size() const { return words_.size(); }

    // Fingerprint of the token stream the table was trained on; empty for
    // tables read from disk.
    const std::string& trained_on() const { return trained_on_; }
    void set_trained_on(std::string fp) { trained_on_ = std::move(fp); }

    bool contains(const std::string& word) const { return index_.count(word) != 0; }

    // Throws std::out_of_range for unknown words; use contains() first.
    std::span<const float> vector(const std::string& word) const;
    std::span<const float> vector_at(size_t row) const;

    const std::vector<std::string>& words() const { return words_; }

    // Rejects duplicates, dimension mismatches and zero-norm vectors.
    void add(const std::string& word, std::span<const float> values);

private:
    int dim_;
    std::vector<std::string> words_;
    std::vector<float> data_;
    std::unordered_map<std::string, size_t> index_;
    std::string trained_on_;
};

// cos(u, v) = dot / (|u| |v|), clamped to [-1, 1]. Requires equal dimensions
// and nonzero norms (guaranteed for vectors from an EmbeddingTable).
double cosine(std::span<const float> u, std::span<const float> v);

// word2vec text interchange format: header "<vocab_size> <dim>", then one
// row per word: "word v1 v2 ... vdim". Malformed input raises io_error with
// the offending line number.
EmbeddingTable load_word2vec_text(const std::string& path);

// Emits 9 significant digits per component so a load of the written file
// reproduces the table bit-exactly. Refuses to write an empty table.
void save_word2vec_text(const EmbeddingTable& table, const std::string& path);

}  // namespace segrank
