#include "bqk/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef BQK_DATA_DIR
#define BQK_DATA_DIR "data"
#endif

namespace bqk {

namespace fs = std::filesystem;

fs::path data_dir() {
    if (const char* env = std::getenv("BQK_DATA")) return env;
    return BQK_DATA_DIR;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw FormatError("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json(const fs::path& p) {
    try {
        return json::parse(read_text(p));
    } catch (const json::parse_error& e) {
        throw FormatError(p.string() + ": " + e.what());
    }
}

void write_text_atomic(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw FormatError("write failed for " + tmp.string());
    }
    fs::rename(tmp, p);
}

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

json to_json(const Biquasile& B) {
    return {{"order", B.order()}, {"star", B.star_table()}, {"dot", B.dot_table()}};
}

std::pair<Table, Table> tables_from_json(const json& j) {
    auto star = field<Table>(j, "star");
    auto dot = field<Table>(j, "dot");
    if (j.contains("order") && field<std::size_t>(j, "order") != star.size())
        throw FormatError("'order' does not match the table size");
    return {star, dot};
}

Biquasile biquasile_from_json(const json& j) {
    auto [star, dot] = tables_from_json(j);
    try {
        return Biquasile::from_tables(star, dot);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid biquasile tables: ") + e.what());
    }
}

json to_json(const BoltzmannWeight& W) {
    json coeffs = json::object();
    for (const auto& [k, v] : W.terms())
        coeffs[std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2])] = v;
    return {{"order", W.order}, {"modulus", W.modulus}, {"coeffs", coeffs}};
}

BoltzmannWeight weight_from_json(const json& j) {
    int order = field<int>(j, "order");
    int64_t m = field<int64_t>(j, "modulus");
    if (order < 1 || m < 2) throw FormatError("weight needs order >= 1 and modulus >= 2");
    std::map<std::array<int, 3>, int64_t> terms;
    const json coeffs = field<json>(j, "coeffs");
    for (const auto& [key, val] : coeffs.items()) {
        std::array<int, 3> k{};
        char c1 = 0, c2 = 0;
        std::istringstream is(key);
        if (!(is >> k[0] >> c1 >> k[1] >> c2 >> k[2]) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
            throw FormatError("bad coefficient key '" + key + "'");
        for (int e : k)
            if (e < 1 || e > order) throw FormatError("coefficient key '" + key + "' out of range");
        if (!val.is_number_integer()) throw FormatError("coefficient for '" + key + "' is not an integer");
        terms[k] = val.get<int64_t>();
    }
    return BoltzmannWeight::from_terms(order, m, terms);
}

json to_json(const DualGraphDiagram& G) {
    json cs = json::array();
    for (const auto& r : G.crossings)
        cs.push_back({{"sign", r.sign}, {"x", r.star_in}, {"a", r.dot_left}, {"b", r.dot_right}, {"y", r.star_out}});
    return {{"regions", G.region_count}, {"crossings", cs}};
}

DualGraphDiagram dual_graph_from_json(const json& j) {
    DualGraphDiagram G;
    G.region_count = field<int>(j, "regions");
    for (const auto& c : field<json>(j, "crossings"))
        G.crossings.push_back({field<int>(c, "sign"), field<int>(c, "x"), field<int>(c, "a"), field<int>(c, "b"),
                               field<int>(c, "y")});
    try {
        G.validate();
    } catch (const DiagramError& e) {
        throw FormatError(e.what());
    }
    return G;
}

json colorings_to_json(const std::vector<Coloring>& fs) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(f);
    return a;
}

std::vector<CorpusEntry> load_corpus(const fs::path& p) {
    std::istringstream in(read_text(p));
    std::vector<CorpusEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        std::string rest;
        std::getline(ls, rest);
        try {
            out.push_back({name, parse_pd(rest)});
        } catch (const DiagramError& e) {
            throw FormatError(p.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<CorpusEntry> bundled_links() { return load_corpus(data_dir() / "corpus" / "links_7.txt"); }
std::vector<CorpusEntry> bundled_knots() { return load_corpus(data_dir() / "corpus" / "knots_8.txt"); }

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, const std::string& name) {
    for (const auto& e : corpus)
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace bqk
