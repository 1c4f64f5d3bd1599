#pragma once
// JSON schemas, corpus files and fixture lookup.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bqk/biquasile.hpp"
#include "bqk/boltzmann.hpp"
#include "bqk/coloring.hpp"
#include "bqk/diagram.hpp"

namespace bqk {

using json = nlohmann::json;

// unreadable files, malformed JSON, schema violations
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::filesystem::path data_dir();  // $BQK_DATA, else the bundled data/ directory

std::string read_text(const std::filesystem::path& p);
json read_json(const std::filesystem::path& p);
// writes through a temporary file and a rename
void write_text_atomic(const std::filesystem::path& p, const std::string& text);

json to_json(const Biquasile& B);
std::pair<Table, Table> tables_from_json(const json& j);
Biquasile biquasile_from_json(const json& j);  // Latin check only

json to_json(const BoltzmannWeight& W);
BoltzmannWeight weight_from_json(const json& j);

json to_json(const DualGraphDiagram& G);
DualGraphDiagram dual_graph_from_json(const json& j);

json colorings_to_json(const std::vector<Coloring>& fs);

struct CorpusEntry {
    std::string name;
    LinkDiagram diagram;
    int crossings() const { return static_cast<int>(diagram.crossings.size()); }
};

// one "NAME PD[...]" per line; '#' starts a comment
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& p);
std::vector<CorpusEntry> bundled_links();  // prime links up to 7 crossings
std::vector<CorpusEntry> bundled_knots();  // prime knots up to 8 crossings
const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, const std::string& name);

}  // namespace bqk
