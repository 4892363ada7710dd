#include "segrank/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "segrank/errors.hpp"

namespace fs = std::filesystem;

namespace segrank {

const Document* Corpus::find(const std::string& id) const {
    auto it = std::lower_bound(documents.begin(), documents.end(), id,
                               [](const Document& d, const std::string& key) { return d.id < key; });
    if (it == documents.end() || it->id != id) return nullptr;
    return &*it;
}

Label merge_study_labels(const std::vector<Label>& study_labels) {
    if (study_labels.empty())
        throw std::logic_error("merge_study_labels: empty study list");
    const Label first = study_labels.front();
    for (Label l : study_labels)
        if (l != first) return Label::discarded;
    return first;
}

Document make_document(std::string id, std::string raw_text) {
    Document doc;
    doc.id = std::move(id);
    doc.raw_text = std::move(raw_text);
    doc.sentences = segment_sentences(doc.raw_text);
    return doc;
}

Corpus load_corpus_dir(const std::string& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw io_error("corpus directory does not exist: " + dir);

    Corpus corpus;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (p.extension() != ".txt") continue;
        std::ifstream in(p, std::ios::binary);
        if (!in) throw io_error("cannot read document file: " + p.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        corpus.documents.push_back(make_document(p.stem().string(), buf.str()));
    }
    std::sort(corpus.documents.begin(), corpus.documents.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    for (size_t i = 1; i < corpus.documents.size(); ++i)
        if (corpus.documents[i].id == corpus.documents[i - 1].id)
            throw io_error("duplicate document id: " + corpus.documents[i].id);
    return corpus;
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        size_t b = f.find_first_not_of(" \t");
        if (b == std::string::npos) { f.clear(); continue; }
        size_t e = f.find_last_not_of(" \t");
        f = f.substr(b, e - b + 1);
    }
    return fields;
}

}  // namespace

LabelTable load_labels_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open labels file: " + path);

    std::string line;
    if (!std::getline(in, line))
        throw io_error("labels file is empty: " + path);
    {
        auto header = split_csv_row(line);
        if (header.size() != 3 || header[0] != "doc_id" || header[1] != "criterion_id" ||
            header[2] != "label")
            throw io_error("labels file " + path +
                           ": expected header doc_id,criterion_id,label");
    }

    std::map<std::pair<std::string, std::string>, std::vector<Label>> studies;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_row(line);
        if (fields.size() != 3)
            throw io_error("labels file " + path + " line " + std::to_string(line_no) +
                           ": expected 3 fields");
        Label l;
        if (fields[2] == "0") l = Label::negative;
        else if (fields[2] == "1") l = Label::positive;
        else
            throw io_error("labels file " + path + " line " + std::to_string(line_no) +
                           ": label must be 0 or 1, got '" + fields[2] + "'");
        studies[{fields[0], fields[1]}].push_back(l);
    }

    LabelTable merged;
    for (const auto& [key, labels] : studies) merged[key] = merge_study_labels(labels);
    return merged;
}

CriterionDescription make_criterion(std::string id, std::string name,
                                    std::string description) {
    CriterionDescription c;
    c.criterion_id = std::move(id);
    c.name = std::move(name);
    c.description_text = std::move(description);
    c.description_tokens = preprocess_for_embedding(tokenize(c.description_text));
    return c;
}

std::vector<CriterionDescription> load_criteria_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open criteria file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("criteria file " + path + ": " + e.what());
    }
    if (!doc.is_array())
        throw io_error("criteria file " + path + ": expected a JSON array");

    std::vector<CriterionDescription> criteria;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("criterion_id") ||
            !item.contains("name") || !item.contains("description"))
            throw io_error("criteria file " + path +
                           ": each entry needs criterion_id, name, description");
        auto c = make_criterion(item["criterion_id"].get<std::string>(),
                                item["name"].get<std::string>(),
                                item["description"].get<std::string>());
        if (c.description_tokens.empty())
            throw config_error("criterion " + c.criterion_id +
                               " has an empty description after preprocessing");
        criteria.push_back(std::move(c));
    }
    for (size_t i = 0; i < criteria.size(); ++i)
        for (size_t j = i + 1; j < criteria.size(); ++j)
            if (criteria[i].criterion_id == criteria[j].criterion_id)
                throw io_error("criteria file " + path + ": duplicate criterion_id " +
                               criteria[i].criterion_id);
    return criteria;
}

}  // namespace segrank
