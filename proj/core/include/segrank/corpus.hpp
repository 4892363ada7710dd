#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segrank/text.hpp"

namespace segrank {

struct Document {
    std::string id;          // e.g. a PMID; unique within a corpus
    std::string raw_text;
    std::vector<Sentence> sentences;
};

enum class Label { negative = 0, positive = 1, discarded = 2 };

struct LabelRecord {
    std::string doc_id;
    std::string criterion_id;
    Label label = Label::discarded;
};

struct CriterionDescription {
    std::string criterion_id;  // MC1..MC6, GL, or anything the criteria file names
    std::string name;
    std::string description_text;
    std::vector<std::string> description_tokens;  // embedding-side preprocessed
};

struct Corpus {
    std::vector<Document> documents;                    // sorted by id
    const Document* find(const std::string& id) const;  // nullptr if absent
};

// Combines the per-study labels recorded for one (doc, criterion) pair:
// unanimous labels collapse to that label, any disagreement means the
// document is discarded for that criterion. Order-invariant.
Label merge_study_labels(const std::vector<Label>& study_labels);

// One UTF-8 text file per document, named <doc_id>.txt. Sentences are
// segmented at load; documents are sorted by id for deterministic iteration.
Corpus load_corpus_dir(const std::string& dir);

Document make_document(std::string id, std::string raw_text);

// Labels file: CSV with header doc_id,criterion_id,label and one row per
// study (label 0 or 1). Rows for the same (doc, criterion) are merged at
// load time via merge_study_labels.
using LabelTable = std::map<std::pair<std::string, std::string>, Label>;
LabelTable load_labels_csv(const std::string& path);

// Criteria file: JSON array of {"criterion_id", "name", "description"}.
std::vector<CriterionDescription> load_criteria_json(const std::string& path);

CriterionDescription make_criterion(std::string id, std::string name,
                                    std::string description);

}  // namespace segrank
