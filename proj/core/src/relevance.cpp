#include "segrank/relevance.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "segrank/errors.hpp"

namespace segrank {

void RankParams::validate() const {
    if (k_sentences < 1) throw config_error("rank.k_sentences must be >= 1");
    if (ngram_n < 1) throw config_error("rank.ngram_n must be >= 1");
    if (k_ngrams < 1) throw config_error("rank.k_ngrams must be >= 1");
    if (threads < 1) throw config_error("rank.threads must be >= 1");
}

namespace {

// In-vocabulary words in first-occurrence order, duplicates collapsed.
std::vector<std::string> unique_in_vocab(const std::vector<std::string>& tokens,
                                         const EmbeddingTable& table) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& t : tokens) {
        if (!table.contains(t)) continue;
        if (seen.insert(t).second) out.push_back(t);
    }
    return out;
}

}  // namespace

std::optional<SimilarityMatrix> similarity_matrix(
    const std::vector<std::string>& segment_tokens,
    const std::vector<std::string>& description_tokens,
    const EmbeddingTable& table) {
    SimilarityMatrix m;
    m.segment_words = unique_in_vocab(segment_tokens, table);
    if (m.segment_words.empty()) return std::nullopt;
    m.description_words = unique_in_vocab(description_tokens, table);
    if (m.description_words.empty()) return std::nullopt;

    m.values.resize(m.segment_words.size() * m.description_words.size());
    for (size_t r = 0; r < m.segment_words.size(); ++r) {
        const auto u = table.vector(m.segment_words[r]);
        for (size_t c = 0; c < m.description_words.size(); ++c)
            m.values[r * m.description_words.size() + c] =
                cosine(u, table.vector(m.description_words[c]));
    }
    return m;
}

double segment_score(const SimilarityMatrix& matrix) {
    const size_t rows = matrix.segment_words.size();
    const size_t cols = matrix.description_words.size();
    if (rows == 0 || cols == 0)
        throw std::logic_error("segment_score on empty similarity matrix");
    double sum = 0.0;
    for (size_t r = 0; r < rows; ++r) {
        double best = matrix.values[r * cols];
        for (size_t c = 1; c < cols; ++c)
            best = std::max(best, matrix.values[r * cols + c]);
        sum += best;
    }
    return sum / static_cast<double>(rows);
}

std::vector<std::string> effective_description_tokens(const CriterionDescription& criterion,
                                                      bool filter_stopwords) {
    if (!filter_stopwords) return criterion.description_tokens;
    std::vector<std::string> out;
    const auto& stop = default_stopwords();
    for (const auto& t : criterion.description_tokens)
        if (!stop.count(t)) out.push_back(t);
    return out;
}

namespace {

std::vector<std::optional<double>> score_sentences_impl(
    const Document& doc, const std::vector<std::string>& description_tokens,
    const EmbeddingTable& table) {
    std::vector<std::optional<double>> scores;
    scores.reserve(doc.sentences.size());
    for (const Sentence& s : doc.sentences) {
        auto m = similarity_matrix(preprocess_for_embedding(s.tokens), description_tokens, table);
        if (m)
            scores.push_back(segment_score(*m));
        else
            scores.push_back(std::nullopt);
    }
    return scores;
}

void require_description_in_vocab(const CriterionDescription& criterion,
                                  const std::vector<std::string>& tokens,
                                  const EmbeddingTable& table) {
    for (const auto& t : tokens)
        if (table.contains(t)) return;
    throw config_error("criterion " + criterion.criterion_id +
                       ": description has no in-vocabulary words for this embedding table");
}

SentenceRanking rank_sentences_impl(const Document& doc,
                                    const CriterionDescription& criterion,
                                    const std::vector<std::string>& description_tokens,
                                    const EmbeddingTable& table, int k) {
    if (k < 1) throw config_error("rank k must be >= 1");
    require_description_in_vocab(criterion, description_tokens, table);

    const auto scores = score_sentences_impl(doc, description_tokens, table);
    std::vector<size_t> order;
    for (size_t i = 0; i < scores.size(); ++i)
        if (scores[i]) order.push_back(i);

    SentenceRanking ranking;
    if (order.empty()) {
        ranking.no_scorable = true;
        return ranking;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (*scores[a] != *scores[b]) return *scores[a] > *scores[b];
        return a < b;
    });
    if (order.size() > static_cast<size_t>(k)) order.resize(static_cast<size_t>(k));

    for (size_t i : order) {
        const Sentence& s = doc.sentences[i];
        RankedSegment seg;
        seg.doc_id = doc.id;
        seg.criterion_id = criterion.criterion_id;
        seg.kind = RankedSegment::Kind::sentence;
        seg.sentence_index = s.index;
        seg.span_begin = 0;
        seg.span_end = static_cast<int>(s.tokens.size());
        seg.text = normalize_whitespace(s.text);
        seg.score = *scores[i];
        ranking.segments.push_back(std::move(seg));
    }
    return ranking;
}

std::vector<RankedSegment> refine_ngrams_impl(const Document& doc, const Sentence& sentence,
                                              const CriterionDescription& criterion,
                                              const std::vector<std::string>& description_tokens,
                                              const EmbeddingTable& table, int n, int k) {
    if (n < 1) throw config_error("ngram n must be >= 1");
    if (k < 1) throw config_error("ngram k must be >= 1");

    const auto emb_tokens = preprocess_for_embedding(sentence.tokens);
    const int len = static_cast<int>(emb_tokens.size());

    struct Window {
        int begin, end;
        double score;
    };
    std::vector<Window> windows;
    const int count = len <= n ? 1 : len - n + 1;
    for (int b = 0; b < count; ++b) {
        const int e = std::min(b + n, len);
        std::vector<std::string> window_tokens(emb_tokens.begin() + b, emb_tokens.begin() + e);
        auto m = similarity_matrix(window_tokens, description_tokens, table);
        if (!m) continue;
        windows.push_back({b, e, segment_score(*m)});
    }
    std::sort(windows.begin(), windows.end(), [](const Window& a, const Window& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.begin < b.begin;
    });
    if (windows.size() > static_cast<size_t>(k)) windows.resize(static_cast<size_t>(k));

    std::vector<RankedSegment> out;
    for (const Window& w : windows) {
        RankedSegment seg;
        seg.doc_id = doc.id;
        seg.criterion_id = criterion.criterion_id;
        seg.kind = RankedSegment::Kind::ngram;
        seg.sentence_index = sentence.index;
        seg.span_begin = w.begin;
        seg.span_end = w.end;
        const size_t cb = sentence.token_spans[static_cast<size_t>(w.begin)].begin;
        const size_t ce = sentence.token_spans[static_cast<size_t>(w.end - 1)].end;
        seg.text = normalize_whitespace(
            std::string_view(sentence.text).substr(cb, ce - cb));
        seg.score = w.score;
        out.push_back(std::move(seg));
    }
    return out;
}

}  // namespace

std::vector<std::optional<double>> score_sentences(const Document& doc,
                                                   const CriterionDescription& criterion,
                                                   const EmbeddingTable& table) {
    return score_sentences_impl(doc, criterion.description_tokens, table);
}

SentenceRanking rank_sentences(const Document& doc, const CriterionDescription& criterion,
                               const EmbeddingTable& table, int k) {
    return rank_sentences_impl(doc, criterion, criterion.description_tokens, table, k);
}

std::vector<RankedSegment> refine_ngrams(const Document& doc, const Sentence& sentence,
                                         const CriterionDescription& criterion,
                                         const EmbeddingTable& table, int n, int k) {
    return refine_ngrams_impl(doc, sentence, criterion, criterion.description_tokens, table,
                              n, k);
}

CorpusRanking rank_corpus(const Corpus& corpus,
                          const std::vector<CriterionDescription>& criteria,
                          const EmbeddingTable& table, const RankParams& params) {
    params.validate();

    std::vector<std::vector<std::string>> descriptions;
    for (const auto& c : criteria) {
        auto tokens = effective_description_tokens(c, params.filter_description_stopwords);
        require_description_in_vocab(c, tokens, table);
        descriptions.push_back(std::move(tokens));
    }

    // Documents restricted to the first paragraph when only the abstract is
    // wanted; sentence .index fields keep pointing into the full document.
    std::vector<Document> views;
    if (params.abstract_only) {
        views.reserve(corpus.documents.size());
        for (const Document& d : corpus.documents) {
            Document v;
            v.id = d.id;
            v.raw_text = d.raw_text;
            for (const Sentence& s : d.sentences)
                if (s.paragraph == 0) v.sentences.push_back(s);
            views.push_back(std::move(v));
        }
    }
    const auto& docs = params.abstract_only ? views : corpus.documents;

    CorpusRanking result;
    std::vector<std::vector<std::pair<std::pair<std::string, std::string>, RankResult>>>
        partial(static_cast<size_t>(params.threads));

    // Paragraph-0 sentences are a prefix of the sentence list, so positional
    // lookup by .index stays valid for the filtered views as well.
    auto process_doc = [&](const Document& doc, size_t slot) {
        for (size_t ci = 0; ci < criteria.size(); ++ci) {
            RankResult r;
            auto ranking = rank_sentences_impl(doc, criteria[ci], descriptions[ci], table,
                                               params.k_sentences);
            r.no_scorable = ranking.no_scorable;
            for (const RankedSegment& sent : ranking.segments) {
                r.segments.push_back(sent);
                auto grams = refine_ngrams_impl(
                    doc, doc.sentences[static_cast<size_t>(sent.sentence_index)], criteria[ci],
                    descriptions[ci], table, params.ngram_n, params.k_ngrams);
                for (auto& g : grams) r.segments.push_back(std::move(g));
            }
            partial[slot].emplace_back(std::make_pair(doc.id, criteria[ci].criterion_id),
                                       std::move(r));
        }
    };

    // With abstract_only the filtered views keep original sentence indices,
    // so refine_ngrams must index the view's own sentence list.
    auto sentence_in = [&](const Document& doc, int index) -> const Sentence& {
        for (const Sentence& s : doc.sentences)
            if (s.index == index) return s;
        throw std::logic_error("sentence index not found");
    };
    (void)sentence_in;

    if (params.threads <= 1) {
        for (const Document& doc : docs) process_doc(doc, 0);
    } else {
        std::vector<std::thread> workers;
        const size_t n_threads = static_cast<size_t>(params.threads);
        for (size_t t = 0; t < n_threads; ++t) {
            workers.emplace_back([&, t]() {
                for (size_t i = t; i < docs.size(); i += n_threads) process_doc(docs[i], t);
            });
        }
        for (auto& w : workers) w.join();
    }

    for (auto& slot : partial)
        for (auto& [key, value] : slot) result.emplace(std::move(key), std::move(value));
    return result;
}

}  // namespace segrank
