#include "segrank/embedding.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "segrank/errors.hpp"

namespace segrank {

std::span<const float> EmbeddingTable::vector(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) throw std::out_of_range("unknown word: " + word);
    return vector_at(it->second);
}

std::span<const float> EmbeddingTable::vector_at(size_t row) const {
    return {data_.data() + row * static_cast<size_t>(dim_), static_cast<size_t>(dim_)};
}

void EmbeddingTable::add(const std::string& word, std::span<const float> values) {
    if (static_cast<int>(values.size()) != dim_)
        throw std::invalid_argument("vector for '" + word + "' has dimension " +
                                    std::to_string(values.size()) + ", table has " +
                                    std::to_string(dim_));
    if (index_.count(word)) throw std::invalid_argument("duplicate word: " + word);
    double norm2 = 0.0;
    for (float v : values) norm2 += static_cast<double>(v) * v;
    if (norm2 == 0.0) throw std::invalid_argument("zero-norm vector for '" + word + "'");
    index_.emplace(word, words_.size());
    words_.push_back(word);
    data_.insert(data_.end(), values.begin(), values.end());
}

double cosine(std::span<const float> u, std::span<const float> v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cosine: dimension mismatch");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
        dot += static_cast<double>(u[i]) * v[i];
        nu += static_cast<double>(u[i]) * u[i];
        nv += static_cast<double>(v[i]) * v[i];
    }
    if (nu == 0.0 || nv == 0.0)
        throw std::invalid_argument("cosine: zero-norm vector");
    double c = dot / (std::sqrt(nu) * std::sqrt(nv));
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return c;
}

EmbeddingTable load_word2vec_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open embeddings file: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw io_error(path + " line 1: missing header");
    long long vocab_size = -1, dim = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> vocab_size >> dim) || (hs >> extra) || vocab_size <= 0 || dim <= 0)
            throw io_error(path + " line 1: header must be '<vocab_size> <dim>'");
    }

    EmbeddingTable table(static_cast<int>(dim));
    std::vector<float> row(static_cast<size_t>(dim));
    long long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word))
            throw io_error(path + " line " + std::to_string(line_no) + ": missing word");
        for (long long i = 0; i < dim; ++i) {
            if (!(ls >> row[static_cast<size_t>(i)]))
                throw io_error(path + " line " + std::to_string(line_no) + ": expected " +
                               std::to_string(dim) + " components for '" + word + "'");
        }
        float trailing;
        if (ls >> trailing)
            throw io_error(path + " line " + std::to_string(line_no) +
                           ": too many components for '" + word + "'");
        try {
            table.add(word, row);
        } catch (const std::invalid_argument& e) {
            throw io_error(path + " line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (static_cast<long long>(table.size()) != vocab_size)
        throw io_error(path + ": header claims " + std::to_string(vocab_size) +
                       " words but file contains " + std::to_string(table.size()));
    return table;
}

void save_word2vec_text(const EmbeddingTable& table, const std::string& path) {
    if (table.size() == 0)
        throw std::invalid_argument("refusing to write empty embedding table");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write embeddings file: " + path);

    out << table.size() << ' ' << table.dim() << '\n';
    char buf[48];
    for (size_t r = 0; r < table.size(); ++r) {
        out << table.words()[r];
        for (float v : table.vector_at(r)) {
            std::snprintf(buf, sizeof buf, " %.9g", static_cast<double>(v));
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace segrank
