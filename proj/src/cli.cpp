#include "bqk/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bqk/boltzmann.hpp"
#include "bqk/coloring.hpp"
#include "bqk/io.hpp"
#include "bqk/parallel.hpp"
#include "bqk/scan.hpp"

namespace bqk {

namespace fs = std::filesystem;

namespace {

// validation failures (exit 1), as opposed to FormatError (exit 2)
class Invalid : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string link;
    std::string biquasile_path;
    std::string alexander;
    std::string weight_path;
    std::optional<int64_t> linear;
    std::optional<int64_t> modulus;
    std::string format = "text";
    int threads = 0;
    std::string out_dir;
    bool ascii = false;
    bool list = false;
    bool linear_algebra = false;
    int order = 1;
    // scan
    int64_t min_modulus = 2, max_modulus = 3;
    std::vector<int64_t> gammas;
    std::vector<std::string> corpus_files;
    int max_crossings = 7;
};

bool want_json(const RunConfig& c) { return c.format == "json"; }

AlexanderParams parse_alexander(const std::string& text) {
    std::vector<int64_t> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw FormatError("--alexander expects n,d,s,nn, got '" + text + "'");
        }
    }
    if (v.size() != 4) throw FormatError("--alexander expects n,d,s,nn, got '" + text + "'");
    AlexanderParams p{v[0], v[1], v[2], v[3]};
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw Invalid(e.what());
    }
    return p;
}

// a path, or the name of a bundled fixture
fs::path resolve(const std::string& s, const char* subdir) {
    fs::path p(s);
    if (fs::exists(p)) return p;
    fs::path q = data_dir() / subdir / (s + ".json");
    if (fs::exists(q)) return q;
    throw FormatError("no such file: " + s);
}

struct BiquasileSource {
    Biquasile B;
    std::optional<AlexanderParams> alex;
};

BiquasileSource load_biquasile(const RunConfig& c) {
    if (c.biquasile_path.empty() == c.alexander.empty())
        throw Invalid("give exactly one of --biquasile PATH or --alexander n,d,s,nn");
    if (!c.alexander.empty()) {
        auto p = parse_alexander(c.alexander);
        return {alexander(p), p};
    }
    auto [star, dot] = tables_from_json(read_json(resolve(c.biquasile_path, "biquasiles")));
    auto v = check_axioms(star, dot);
    if (!v) throw Invalid("not a biquasile: " + v.detail);
    return {Biquasile::from_tables(star, dot), std::nullopt};
}

std::optional<BoltzmannWeight> load_weight(const RunConfig& c, const BiquasileSource& src) {
    if (!c.weight_path.empty() && c.linear) throw Invalid("give at most one of --weight and --linear");
    std::optional<BoltzmannWeight> W;
    if (!c.weight_path.empty()) W = weight_from_json(read_json(resolve(c.weight_path, "weights")));
    if (c.linear) {
        if (!src.alex) throw Invalid("--linear needs an Alexander biquasile (--alexander)");
        W = linear_weight(*src.alex, *c.linear);
    }
    if (W) {
        if (W->order != src.B.order()) throw Invalid("weight order does not match the biquasile order");
        if (c.modulus && *c.modulus != W->modulus)
            throw Invalid("modulus mismatch: weight is over Z_" + std::to_string(W->modulus) + ", --modulus is " +
                          std::to_string(*c.modulus));
    }
    return W;
}

DualGraphDiagram load_link(const std::string& s) {
    if (s.empty()) throw Invalid("no link given");
    if (s == "unknot" || s == "0_1") return to_dual_graph(LinkDiagram{});
    for (const auto& corpus : {bundled_links(), bundled_knots()})
        if (const auto* e = find_entry(corpus, s)) return to_dual_graph(e->diagram);
    std::string text = s;
    if (fs::exists(s)) {
        text = read_text(s);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            try {
                return dual_graph_from_json(json::parse(text));
            } catch (const json::parse_error& e) {
                throw FormatError(s + ": " + e.what());
            }
        }
    }
    return to_dual_graph(parse_pd(text));
}

std::string verdict_name(AxiomVerdict::Kind k) {
    switch (k) {
        case AxiomVerdict::pass: return "pass";
        case AxiomVerdict::malformed: return "malformed";
        case AxiomVerdict::not_latin: return "not-latin";
        case AxiomVerdict::axiom_i: return "axiom-i";
        case AxiomVerdict::axiom_ii: return "axiom-ii";
    }
    return "?";
}

std::string weight_verdict_name(WeightVerdict::Kind k) {
    switch (k) {
        case WeightVerdict::pass: return "pass";
        case WeightVerdict::incomplete: return "incomplete";
        case WeightVerdict::axiom_i: return "axiom-i";
        case WeightVerdict::axiom_ii: return "axiom-ii";
    }
    return "?";
}

std::string tuple_text(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string weight_text(const BoltzmannWeight& W) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : W.terms()) {
        os << (first ? "" : " + ") << v << " chi(" << k[0] << ',' << k[1] << ',' << k[2] << ')';
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

json poly_json(const EnhancedPolynomial& P) {
    json t = json::object();
    for (const auto& [k, c] : P.terms) t[std::to_string(k)] = c;
    return {{"polynomial", P.text()}, {"terms", t}, {"count", P.at_one()}, {"modulus", P.modulus}};
}

int cmd_check_biquasile(const RunConfig& c, std::ostream& out) {
    auto [star, dot] = tables_from_json(read_json(resolve(c.biquasile_path, "biquasiles")));
    auto v = check_axioms(star, dot);
    std::vector<int> w(v.witness.begin(), v.witness.end());
    bool has_witness = v.kind == AxiomVerdict::axiom_i || v.kind == AxiomVerdict::axiom_ii;
    if (want_json(c)) {
        json j = {{"verdict", verdict_name(v.kind)}, {"detail", v.detail}};
        if (has_witness) j["witness"] = {{"a", w[0]}, {"b", w[1]}, {"x", w[2]}, {"y", w[3]}};
        out << j.dump() << "\n";
    } else if (v) {
        out << "pass: biquasile of order " << star.size() << "\n";
    } else {
        out << "fail: " << v.detail;
        if (has_witness) out << " at (a,b,x,y) = " << tuple_text(w);
        out << "\n";
    }
    return v ? 0 : 1;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
    if (c.order < 1 || c.order > 4) throw Invalid("--order must be in 1..4");
    auto all = enumerate_biquasiles(c.order);
    json list = json::array();
    for (const auto& B : all) list.push_back(to_json(B));
    json doc = {{"order", c.order}, {"count", all.size()}, {"biquasiles", list}};
    if (!c.out_dir.empty())
        write_text_atomic(fs::path(c.out_dir) / ("biquasiles_order" + std::to_string(c.order) + ".json"),
                          doc.dump(1) + "\n");
    if (want_json(c))
        out << doc.dump() << "\n";
    else
        out << all.size() << (all.size() == 1 ? " biquasile" : " biquasiles") << "\n";
    return 0;
}

int cmd_alexander(const RunConfig& c, std::ostream& out) {
    if (c.alexander.empty()) throw Invalid("give the parameters as n,d,s,nn");
    Biquasile B = alexander(parse_alexander(c.alexander));
    if (want_json(c))
        out << to_json(B).dump() << "\n";
    else
        out << render_block_matrix(B);
    return 0;
}

int cmd_regions(const RunConfig& c, std::ostream& out) {
    DualGraphDiagram G = load_link(c.link);
    if (want_json(c)) {
        out << to_json(G).dump() << "\n";
        return 0;
    }
    out << "regions: " << G.region_count << "\n";
    for (std::size_t i = 0; i < G.crossings.size(); ++i) {
        const auto& r = G.crossings[i];
        out << "crossing " << i + 1 << ": sign " << (r.sign > 0 ? "+1" : "-1") << "  x=" << r.star_in
            << " a=" << r.dot_left << " b=" << r.dot_right << " y=" << r.star_out << "\n";
    }
    return 0;
}

int cmd_color(const RunConfig& c, std::ostream& out) {
    DualGraphDiagram G = load_link(c.link);
    auto src = load_biquasile(c);
    if (c.linear_algebra) {
        if (!src.alex) throw Invalid("--linear-algebra needs --alexander");
        ModMatrix M = alexander_coloring_matrix(G, *src.alex);
        BigCount n = solve_count(M);
        if (want_json(c)) {
            json rows = json::array();
            for (std::size_t i = 0; i < M.rows; ++i) rows.push_back(M.row(i));
            out << json{{"count", n.str()}, {"matrix", rows}}.dump() << "\n";
        } else {
            out << n << "\n";
        }
        return 0;
    }
    if (c.list) {
        auto fs = enumerate_colorings(G, src.B);
        if (want_json(c)) {
            out << json{{"count", fs.size()}, {"colorings", colorings_to_json(fs)}}.dump() << "\n";
        } else {
            out << fs.size() << "\n";
            for (const auto& f : fs) {
                for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
                out << "\n";
            }
        }
        return 0;
    }
    uint64_t n = count_colorings(G, src.B);
    if (want_json(c))
        out << json{{"count", n}}.dump() << "\n";
    else
        out << n << "\n";
    return 0;
}

int cmd_invariant(const RunConfig& c, std::ostream& out) {
    DualGraphDiagram G = load_link(c.link);
    auto src = load_biquasile(c);
    auto W = load_weight(c, src);
    if (!W) {
        uint64_t n = count_colorings(G, src.B);
        if (want_json(c))
            out << json{{"count", n}}.dump() << "\n";
        else
            out << n << "\n";
        return 0;
    }
    auto P = enhanced_polynomial(G, src.B, *W);
    if (want_json(c))
        out << poly_json(P).dump() << "\n";
    else
        out << P.text() << "\n";
    return 0;
}

int cmd_presentation(const RunConfig& c, std::ostream& out) {
    auto P = presentation(load_link(c.link));
    if (want_json(c)) {
        json rel = json::array();
        for (const auto& r : P.relations)
            rel.push_back({{"y", r.star_out}, {"x", r.star_in}, {"a", r.dot_left}, {"b", r.dot_right}});
        out << json{{"generators", P.generators}, {"relations", rel}, {"text", P.text(c.ascii)}}.dump() << "\n";
    } else {
        out << P.text(c.ascii) << "\n";
    }
    return 0;
}

int cmd_check_weight(const RunConfig& c, std::ostream& out) {
    auto src = load_biquasile(c);
    auto W = load_weight(c, src);
    if (!W) throw Invalid("give --weight PATH or --linear gamma");
    auto v = check_weight(src.B, *W);
    if (want_json(c)) {
        json j = {{"verdict", weight_verdict_name(v.kind)}, {"detail", v.detail}};
        if (!v.witness.empty()) j["witness"] = v.witness;
        out << j.dump() << "\n";
    } else if (v) {
        out << "pass\n";
    } else {
        out << "fail: " << v.detail;
        if (v.kind == WeightVerdict::axiom_ii) out << " at (x,y,a,b) = " << tuple_text(v.witness);
        if (v.kind == WeightVerdict::axiom_i) out << " at " << tuple_text(v.witness);
        out << "\n";
    }
    return v ? 0 : 1;
}

int cmd_solve_weights(const RunConfig& c, std::ostream& out) {
    auto src = load_biquasile(c);
    if (!c.modulus) throw Invalid("--modulus is required");
    if (*c.modulus < 2) throw Invalid("--modulus must be >= 2");
    const int64_t m = *c.modulus;
    SolutionSpace S = solve_weights(src.B, m);
    json gens = json::array();
    for (const auto& g : S.generators) {
        BoltzmannWeight W = BoltzmannWeight::zero(src.B.order(), m);
        W.coeffs = g;
        gens.push_back(to_json(W));
    }
    json doc = {{"order", src.B.order()}, {"modulus", m}, {"count", S.count.str()}, {"generators", gens}};
    if (!c.out_dir.empty()) write_text_atomic(fs::path(c.out_dir) / "weights.json", doc.dump(1) + "\n");
    if (want_json(c))
        out << doc.dump() << "\n";
    else
        out << S.count << (S.count == 1 ? " solution" : " solutions") << " (" << S.generators.size()
            << " generators)\n";
    return 0;
}

int cmd_linear_weight(const RunConfig& c, std::ostream& out) {
    if (c.alexander.empty() || !c.linear) throw Invalid("linear-weight needs --alexander n,d,s,nn and --linear gamma");
    BoltzmannWeight W = linear_weight(parse_alexander(c.alexander), *c.linear);
    if (!c.out_dir.empty()) write_text_atomic(fs::path(c.out_dir) / "linear_weight.json", to_json(W).dump(1) + "\n");
    if (want_json(c))
        out << to_json(W).dump() << "\n";
    else
        out << weight_text(W) << "\n";
    return 0;
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
    ScanConfig cfg;
    if (c.min_modulus < 2 || c.max_modulus < c.min_modulus) throw Invalid("need 2 <= --min-modulus <= --max-modulus");
    for (int64_t m = c.min_modulus; m <= c.max_modulus; ++m) cfg.moduli.push_back(m);
    cfg.gammas = c.gammas;
    if (c.corpus_files.empty()) {
        for (const auto& corpus : {bundled_knots(), bundled_links()})
            for (const auto& e : corpus)
                if (e.crossings() <= c.max_crossings) cfg.corpus.push_back(e);
    } else {
        for (const auto& f : c.corpus_files)
            for (auto& e : load_corpus(f))
                if (e.crossings() <= c.max_crossings) cfg.corpus.push_back(std::move(e));
    }
    if (!c.out_dir.empty()) cfg.out_dir = c.out_dir;
    ScanReport rep = scan_conjecture(cfg);
    if (want_json(c)) {
        json j = {{"records", rep.records.size()},
                  {"trivial-zero", rep.trivial_zero},
                  {"constant", rep.constant},
                  {"counterexample", rep.counterexample},
                  {"reused_chunks", rep.reused_chunks}};
        out << j.dump() << "\n";
    } else {
        out << rep.summary() << "\n";
        for (const auto& r : rep.records)
            if (r.predicate == Predicate::counterexample) out << to_json(r).dump() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"biquasile counting invariants and Boltzmann enhancements", "bqk"};
    app.require_subcommand(1);
    RunConfig c;
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", c.threads, "worker threads (fallback: $BQK_THREADS)");

    auto biq_opts = [&](CLI::App* s) {
        s->add_option("--biquasile", c.biquasile_path, "biquasile JSON file or bundled fixture name");
        s->add_option("--alexander", c.alexander, "Alexander biquasile n,d,s,nn");
    };
    auto weight_opts = [&](CLI::App* s) {
        s->add_option("--weight", c.weight_path, "weight JSON file or bundled fixture name");
        s->add_option("--linear", c.linear, "linear weight with this gamma (needs --alexander)");
        s->add_option("--modulus", c.modulus, "expected weight modulus");
    };

    auto* s_check = app.add_subcommand("check-biquasile", "verify the biquasile axioms of a table file");
    s_check->add_option("path", c.biquasile_path)->required();

    auto* s_enum = app.add_subcommand("enumerate-biquasiles", "list every biquasile of a small order");
    s_enum->add_option("--order", c.order)->required();
    s_enum->add_option("--out", c.out_dir);

    auto* s_alex = app.add_subcommand("alexander", "print an Alexander biquasile");
    s_alex->add_option("params,--alexander", c.alexander, "n,d,s,nn")->required();

    auto* s_regions = app.add_subcommand("regions", "dual graph records of a diagram");
    s_regions->add_option("link", c.link, "corpus name, PD file or PD text")->required();

    auto* s_color = app.add_subcommand("color", "count or list colorings");
    s_color->add_option("link", c.link)->required();
    biq_opts(s_color);
    s_color->add_flag("--list", c.list, "print every coloring");
    s_color->add_flag("--linear-algebra", c.linear_algebra, "count through the linear system (Alexander only)");

    auto* s_inv = app.add_subcommand("invariant", "counting invariant or enhanced polynomial");
    s_inv->add_option("link", c.link)->required();
    biq_opts(s_inv);
    weight_opts(s_inv);

    auto* s_pres = app.add_subcommand("presentation", "fundamental biquasile presentation");
    s_pres->add_option("link", c.link)->required();
    s_pres->add_flag("--ascii", c.ascii);

    auto* s_cw = app.add_subcommand("check-weight", "verify the Boltzmann weight axioms");
    biq_opts(s_cw);
    weight_opts(s_cw);

    auto* s_solve = app.add_subcommand("solve-weights", "all Boltzmann weights over Z_m");
    biq_opts(s_solve);
    s_solve->add_option("--modulus", c.modulus)->required();
    s_solve->add_option("--out", c.out_dir);

    auto* s_lin = app.add_subcommand("linear-weight", "linear weight of an Alexander biquasile");
    s_lin->add_option("--alexander", c.alexander)->required();
    s_lin->add_option("--linear", c.linear, "gamma")->required();
    s_lin->add_option("--out", c.out_dir);

    auto* s_scan = app.add_subcommand("scan-conjecture", "linear weights over Alexander biquasiles on a corpus");
    s_scan->add_option("--min-modulus", c.min_modulus);
    s_scan->add_option("--max-modulus", c.max_modulus);
    s_scan->add_option("--gamma", c.gammas, "restrict gamma (default: all of Z_n)")->delimiter(',');
    s_scan->add_option("--corpus", c.corpus_files, "corpus files (default: bundled knots and links)");
    s_scan->add_option("--max-crossings", c.max_crossings);
    s_scan->add_option("--out", c.out_dir);

    for (auto* s : app.get_subcommands({})) s->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "bqk: " << e.what() << "\n";
        return 2;
    }

    set_thread_count(c.threads);
    try {
        auto* s = app.get_subcommands().front();
        if (s == s_check) return cmd_check_biquasile(c, out);
        if (s == s_enum) return cmd_enumerate(c, out);
        if (s == s_alex) return cmd_alexander(c, out);
        if (s == s_regions) return cmd_regions(c, out);
        if (s == s_color) return cmd_color(c, out);
        if (s == s_inv) return cmd_invariant(c, out);
        if (s == s_pres) return cmd_presentation(c, out);
        if (s == s_cw) return cmd_check_weight(c, out);
        if (s == s_solve) return cmd_solve_weights(c, out);
        if (s == s_lin) return cmd_linear_weight(c, out);
        if (s == s_scan) return cmd_scan(c, out);
    } catch (const FormatError& e) {
        err << "bqk: " << e.what() << "\n";
        return 2;
    } catch (const fs::filesystem_error& e) {
        err << "bqk: " << e.what() << "\n";
        return 2;
    } catch (const DiagramError& e) {
        err << "bqk: " << e.what() << "\n";
        return e.kind == DiagramError::split || e.kind == DiagramError::invalid_site ? 1 : 2;
    } catch (const Invalid& e) {
        err << "bqk: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "bqk: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "bqk: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "bqk: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace bqk
