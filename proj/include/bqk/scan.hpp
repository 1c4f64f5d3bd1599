#pragma once
// Scan of linear weights on Alexander biquasiles over a link corpus.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bqk/boltzmann.hpp"
#include "bqk/io.hpp"

namespace bqk {

enum class Predicate { trivial_zero, constant, counterexample };
const char* predicate_name(Predicate p);

struct ScanRecord {
    AlexanderParams params;
    int64_t gamma = 0;
    std::string link;
    EnhancedPolynomial poly;
    Predicate predicate = Predicate::trivial_zero;
    std::optional<Coloring> witness;  // a coloring whose weight differs from the first one
    int64_t witness_weight = 0;
};

json to_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const json& j);

struct ScanConfig {
    std::vector<int64_t> moduli;
    std::vector<int64_t> gammas;  // empty: every gamma in Z_n
    std::vector<CorpusEntry> corpus;
    // when set, per-biquasile chunks are kept under out_dir/chunks and reused
    // on the next run; the merged report goes to out_dir/scan_report.jsonl
    std::filesystem::path out_dir;
};

struct ScanReport {
    std::vector<ScanRecord> records;  // sorted by (n, d, s, n_param, gamma, link)
    std::size_t trivial_zero = 0, constant = 0, counterexample = 0;
    std::size_t reused_chunks = 0;
    std::string summary() const;
};

// predicates for one unit, computed from its colorings
ScanRecord classify(const AlexanderParams& p, int64_t gamma, const CorpusEntry& link, const std::vector<Coloring>& fs,
                    const DualGraphDiagram& G);

ScanReport scan_conjecture(const ScanConfig& cfg);
ScanReport scan_conjecture_serial(const ScanConfig& cfg);  // no files, single thread

}  // namespace bqk
