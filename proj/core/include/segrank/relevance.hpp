#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segrank/corpus.hpp"
#include "segrank/embedding.hpp"

namespace segrank {

// Cosine similarities between the unique in-vocabulary words of a segment
// (rows) and of a description (columns). Only constructed when both sides
// have at least one in-vocabulary word.
struct SimilarityMatrix {
    std::vector<std::string> segment_words;      // N, first-occurrence order
    std::vector<std::string> description_words;  // M, first-occurrence order
    std::vector<double> values;                  // row-major N x M

    double at(size_t row, size_t col) const {
        return values[row * description_words.size() + col];
    }
};

// Out-of-vocabulary words are dropped from both sides, then duplicates are
// collapsed. Returns nullopt when either side ends up empty.
std::optional<SimilarityMatrix> similarity_matrix(
    const std::vector<std::string>& segment_tokens,
    const std::vector<std::string>& description_tokens,
    const EmbeddingTable& table);

// The relatedness score: per segment word take the best similarity over the
// description words, then average those maxima. Lies in [-1, 1].
double segment_score(const SimilarityMatrix& matrix);

struct RankedSegment {
    enum class Kind { sentence, ngram };

    std::string doc_id;
    std::string criterion_id;
    Kind kind = Kind::sentence;
    int sentence_index = 0;
    int span_begin = 0;  // token span [begin, end) within the sentence
    int span_end = 0;    // == whole sentence for Kind::sentence
    std::string text;    // surface text, whitespace-normalized for ngrams
    double score = 0.0;
};

struct SentenceRanking {
    std::vector<RankedSegment> segments;  // top-k, score-descending
    bool no_scorable = false;             // no sentence had in-vocab words
};

// Per-sentence scores for every sentence of the document, nullopt where the
// similarity matrix is empty. This is the total order eval builds ranks on.
std::vector<std::optional<double>> score_sentences(const Document& doc,
                                                   const CriterionDescription& criterion,
                                                   const EmbeddingTable& table);

// Top-k sentences by score, ties broken toward the lower sentence index.
// Unscorable sentences are never returned. Throws config_error when the
// description itself has no in-vocabulary words.
SentenceRanking rank_sentences(const Document& doc, const CriterionDescription& criterion,
                               const EmbeddingTable& table, int k);

// Scores every contiguous n-token window of the sentence with the same
// matrix + pooling pipeline and returns the top k, ties broken toward the
// lower start offset. Sentences shorter than n yield one whole-sentence
// window.
std::vector<RankedSegment> refine_ngrams(const Document& doc, const Sentence& sentence,
                                         const CriterionDescription& criterion,
                                         const EmbeddingTable& table, int n, int k);

struct RankParams {
    int k_sentences = 5;
    int ngram_n = 5;
    int k_ngrams = 1;
    bool abstract_only = false;               // rank only paragraph 0
    bool filter_description_stopwords = false;
    int threads = 1;

    void validate() const;
};

struct RankResult {
    // Sentence entries in rank order, each immediately followed by its
    // n-gram entries.
    std::vector<RankedSegment> segments;
    bool no_scorable = false;
};

// doc_id -> criterion_id -> result, over every document x criterion pair.
using CorpusRanking = std::map<std::pair<std::string, std::string>, RankResult>;

CorpusRanking rank_corpus(const Corpus& corpus,
                          const std::vector<CriterionDescription>& criteria,
                          const EmbeddingTable& table, const RankParams& params);

// Description tokens actually used for scoring under the given params.
std::vector<std::string> effective_description_tokens(const CriterionDescription& criterion,
                                                      bool filter_stopwords);

}  // namespace segrank
