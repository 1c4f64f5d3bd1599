#include "bqk/scan.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "bqk/parallel.hpp"

namespace bqk {

namespace fs = std::filesystem;

const char* predicate_name(Predicate p) {
    switch (p) {
        case Predicate::trivial_zero: return "trivial-zero";
        case Predicate::constant: return "constant";
        case Predicate::counterexample: return "counterexample";
    }
    return "?";
}

json to_json(const ScanRecord& r) {
    json terms = json::object();
    for (const auto& [k, c] : r.poly.terms) terms[std::to_string(k)] = c;
    json j = {{"biquasile", {{"modulus", r.params.modulus}, {"d", r.params.d}, {"s", r.params.s}, {"n", r.params.n_param}}},
              {"gamma", r.gamma},
              {"link", r.link},
              {"polynomial", r.poly.text()},
              {"terms", terms},
              {"predicate", predicate_name(r.predicate)}};
    if (r.witness) {
        j["witness"] = *r.witness;
        j["witness_weight"] = r.witness_weight;
    }
    return j;
}

ScanRecord scan_record_from_json(const json& j) {
    try {
        ScanRecord r;
        const auto& b = j.at("biquasile");
        r.params = {b.at("modulus").get<int64_t>(), b.at("d").get<int64_t>(), b.at("s").get<int64_t>(),
                    b.at("n").get<int64_t>()};
        r.gamma = j.at("gamma").get<int64_t>();
        r.link = j.at("link").get<std::string>();
        r.poly.modulus = r.params.modulus;
        for (const auto& [k, c] : j.at("terms").items()) r.poly.terms[std::stoll(k)] = c.get<uint64_t>();
        const auto pred = j.at("predicate").get<std::string>();
        if (pred == "trivial-zero")
            r.predicate = Predicate::trivial_zero;
        else if (pred == "constant")
            r.predicate = Predicate::constant;
        else if (pred == "counterexample")
            r.predicate = Predicate::counterexample;
        else
            throw FormatError("unknown predicate '" + pred + "'");
        if (j.contains("witness")) {
            r.witness = j.at("witness").get<Coloring>();
            r.witness_weight = j.at("witness_weight").get<int64_t>();
        }
        return r;
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad scan record: ") + e.what());
    }
}

std::string ScanReport::summary() const {
    std::ostringstream os;
    os << records.size() << " records: " << trivial_zero << " trivial-zero, " << constant << " constant, "
       << counterexample << " counterexamples";
    return os.str();
}

ScanRecord classify(const AlexanderParams& p, int64_t gamma, const CorpusEntry& link, const std::vector<Coloring>& fs,
                    const DualGraphDiagram& G) {
    ScanRecord r;
    r.params = p;
    r.gamma = gamma;
    r.link = link.name;
    const BoltzmannWeight W = linear_weight(p, gamma);
    r.poly.modulus = p.modulus;
    bool all_zero = true;
    int64_t first = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        int64_t w = coloring_weight(G, W, fs[i]);
        ++r.poly.terms[w];
        all_zero &= w == 0;
        if (i == 0)
            first = w;
        else if (w != first && !r.witness) {
            r.witness = fs[i];
            r.witness_weight = w;
        }
    }
    r.predicate = all_zero ? Predicate::trivial_zero : r.witness ? Predicate::counterexample : Predicate::constant;
    return r;
}

namespace {

using Key = std::tuple<int64_t, int64_t, int64_t, int64_t, int64_t, std::string>;
Key key_of(const ScanRecord& r) {
    return {r.params.modulus, r.params.d, r.params.s, r.params.n_param, r.gamma, r.link};
}

std::vector<int64_t> gammas_for(const ScanConfig& cfg, int64_t n) {
    std::vector<int64_t> g;
    if (cfg.gammas.empty())
        for (int64_t k = 0; k < n; ++k) g.push_back(k);
    else
        for (int64_t k : cfg.gammas) g.push_back(mod(k, n));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

std::vector<AlexanderParams> all_params(const ScanConfig& cfg) {
    std::vector<int64_t> ms = cfg.moduli;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<AlexanderParams> out;
    for (int64_t m : ms) {
        if (m < 2) throw std::invalid_argument("scan moduli must be >= 2");
        for (const auto& p : unit_triples(m)) out.push_back(p);
    }
    return out;
}

std::vector<ScanRecord> run_unit(const AlexanderParams& p, const Biquasile& B, const CorpusEntry& e,
                                 const std::vector<int64_t>& gammas) {
    DualGraphDiagram G = to_dual_graph(e.diagram);
    auto fs = enumerate_colorings_serial(G, B);
    std::vector<ScanRecord> out;
    for (int64_t g : gammas) out.push_back(classify(p, g, e, fs, G));
    return out;
}

std::string chunk_name(const AlexanderParams& p) {
    std::ostringstream os;
    os << "m" << p.modulus << "_d" << p.d << "_s" << p.s << "_n" << p.n_param << ".jsonl";
    return os.str();
}

std::string to_jsonl(const std::vector<ScanRecord>& rs) {
    std::string s;
    for (const auto& r : rs) s += to_json(r).dump() + "\n";
    return s;
}

std::vector<ScanRecord> read_jsonl(const fs::path& p) {
    std::istringstream in(read_text(p));
    std::vector<ScanRecord> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) {
            try {
                out.push_back(scan_record_from_json(json::parse(line)));
            } catch (const json::parse_error& e) {
                throw FormatError(p.string() + ": " + e.what());
            }
        }
    return out;
}

void check_meta(const ScanConfig& cfg) {
    json names = json::array();
    for (const auto& e : cfg.corpus) names.push_back(e.name);
    json meta = {{"gammas", cfg.gammas}, {"corpus", names}};
    fs::path mp = cfg.out_dir / "scan_meta.json";
    if (fs::exists(mp)) {
        if (read_json(mp) != meta)
            throw FormatError(cfg.out_dir.string() + " holds a scan over a different corpus or gamma set");
    } else {
        write_text_atomic(mp, meta.dump(1) + "\n");
    }
}

ScanReport finish(std::vector<ScanRecord> rs) {
    std::sort(rs.begin(), rs.end(), [](const ScanRecord& a, const ScanRecord& b) { return key_of(a) < key_of(b); });
    ScanReport rep;
    for (const auto& r : rs) {
        if (r.predicate == Predicate::trivial_zero) ++rep.trivial_zero;
        if (r.predicate == Predicate::constant) ++rep.constant;
        if (r.predicate == Predicate::counterexample) ++rep.counterexample;
    }
    rep.records = std::move(rs);
    return rep;
}

}  // namespace

ScanReport scan_conjecture_serial(const ScanConfig& cfg) {
    std::vector<ScanRecord> all;
    for (const auto& p : all_params(cfg)) {
        Biquasile B = alexander(p);
        for (const auto& e : cfg.corpus)
            for (auto& r : run_unit(p, B, e, gammas_for(cfg, p.modulus))) all.push_back(std::move(r));
    }
    return finish(std::move(all));
}

ScanReport scan_conjecture(const ScanConfig& cfg) {
    const bool on_disk = !cfg.out_dir.empty();
    if (on_disk) check_meta(cfg);
    const fs::path chunks = cfg.out_dir / "chunks";

    std::vector<ScanRecord> all;
    std::vector<AlexanderParams> pending;
    std::size_t reused = 0;
    for (const auto& p : all_params(cfg)) {
        fs::path cp = chunks / chunk_name(p);
        if (on_disk && fs::exists(cp)) {
            for (auto& r : read_jsonl(cp)) all.push_back(std::move(r));
            ++reused;
        } else {
            pending.push_back(p);
        }
    }

    const int threads = thread_count();
    const std::size_t L = cfg.corpus.size();
    const std::size_t batch = static_cast<std::size_t>(std::max(1, 2 * threads));
    for (std::size_t lo = 0; lo < pending.size(); lo += batch) {
        const std::size_t hi = std::min(pending.size(), lo + batch);
        std::vector<Biquasile> Bs;
        for (std::size_t i = lo; i < hi; ++i) Bs.push_back(alexander(pending[i]));
        const long units = static_cast<long>((hi - lo) * L);
        std::vector<std::vector<ScanRecord>> out(units);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long u = 0; u < units; ++u) {
            std::size_t bi = u / L, li = u % L;
            const auto& p = pending[lo + bi];
            out[u] = run_unit(p, Bs[bi], cfg.corpus[li], gammas_for(cfg, p.modulus));
        }
        for (std::size_t bi = 0; bi < hi - lo; ++bi) {
            std::vector<ScanRecord> mine;
            for (std::size_t li = 0; li < L; ++li)
                for (auto& r : out[bi * L + li]) mine.push_back(std::move(r));
            if (on_disk) write_text_atomic(chunks / chunk_name(pending[lo + bi]), to_jsonl(mine));
            for (auto& r : mine) all.push_back(std::move(r));
        }
    }

    ScanReport rep = finish(std::move(all));
    rep.reused_chunks = reused;
    if (on_disk) write_text_atomic(cfg.out_dir / "scan_report.jsonl", to_jsonl(rep.records));
    return rep;
}

}  // namespace bqk
