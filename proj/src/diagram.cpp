#include "bqk/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bqk {

namespace {

struct Occ {
    int c, p;
    bool operator==(const Occ&) const = default;
};

struct Dsu {
    std::vector<int> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}
    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char ch) {
        ws();
        if (i_ < s_.size() && s_[i_] == ch) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char ch) {
        if (!eat(ch)) fail(std::string("expected '") + ch + "'");
    }
    bool eat_word(const char* w) {
        ws();
        std::size_t n = std::char_traits<char>::length(w);
        if (s_.compare(i_, n, w) == 0) {
            i_ += n;
            return true;
        }
        return false;
    }
    int integer() {
        ws();
        std::size_t j = i_;
        if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        if (k == j) fail("expected an integer");
        long v = std::stol(s_.substr(i_, k - i_));
        i_ = k;
        return static_cast<int>(v);
    }
    bool done() {
        ws();
        return i_ == s_.size();
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw DiagramError(DiagramError::syntax, "PD syntax error at offset " + std::to_string(i_) + ": " + why);
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

std::map<int, std::vector<Occ>> occurrences(const std::vector<std::array<int, 4>>& X) {
    std::map<int, std::vector<Occ>> occ;
    for (int c = 0; c < static_cast<int>(X.size()); ++c)
        for (int p = 0; p < 4; ++p) occ[X[c][p]].push_back({c, p});
    return occ;
}

Occ other(const std::vector<Occ>& v, Occ o) { return v[0] == o ? v[1] : v[0]; }

}  // namespace

std::string LinkDiagram::pd() const {
    std::ostringstream os;
    os << "PD[";
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        const auto& e = crossings[c].e;
        os << (c ? "," : "") << "X[" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ']';
    }
    os << ']';
    return os.str();
}

LinkDiagram parse_pd(const std::string& text) {
    Cursor cur(text);
    std::vector<std::array<int, 4>> X;
    cur.ws();
    if (cur.eat_word("PD")) {
        cur.expect('[');
        if (!cur.eat(']')) {
            do {
                if (!cur.eat_word("X")) cur.fail("expected X[...]");
                cur.expect('[');
                std::array<int, 4> t{};
                for (int k = 0; k < 4; ++k) {
                    if (k) cur.expect(',');
                    t[k] = cur.integer();
                }
                cur.expect(']');
                X.push_back(t);
            } while (cur.eat(','));
            cur.expect(']');
        }
        if (!cur.done()) cur.fail("trailing characters");
    } else {
        std::vector<int> nums;
        while (!cur.done()) {
            nums.push_back(cur.integer());
            cur.eat(',');
        }
        if (nums.size() % 4 != 0) cur.fail("integer count is not a multiple of 4");
        for (std::size_t i = 0; i < nums.size(); i += 4) X.push_back({nums[i], nums[i + 1], nums[i + 2], nums[i + 3]});
    }
    return make_diagram(X);
}

LinkDiagram make_diagram(const std::vector<std::array<int, 4>>& X) {
    LinkDiagram D;
    const int n = static_cast<int>(X.size());
    if (n == 0) return D;

    auto occ = occurrences(X);
    for (const auto& [label, v] : occ)
        if (v.size() != 2)
            throw DiagramError(DiagramError::multiplicity, "edge " + std::to_string(label) + " appears " +
                                                               std::to_string(v.size()) + " times");

    std::vector<int> labels;
    std::map<int, int> lid;
    for (const auto& [label, v] : occ) {
        lid[label] = static_cast<int>(labels.size());
        labels.push_back(label);
    }

    Dsu cross(n);
    for (const auto& [label, v] : occ) cross.unite(v[0].c, v[1].c);
    for (int c = 1; c < n; ++c)
        if (cross.find(c) != cross.find(0))
            throw SplitDiagramError("diagram is split (crossing " + std::to_string(c + 1) +
                                    " is not connected to crossing 1)");

    Dsu comp(labels.size());
    for (const auto& t : X) {
        comp.unite(lid[t[0]], lid[t[2]]);
        comp.unite(lid[t[1]], lid[t[3]]);
    }

    // +1 incoming, 0 outgoing, -1 unknown
    std::vector<int> in(4 * n, -1);
    for (int c = 0; c < n; ++c) {
        in[4 * c] = 1;
        in[4 * c + 2] = 0;
    }
    auto pair_up = [&](int i, int j, bool& changed) {
        if (in[i] >= 0 && in[j] >= 0) {
            if (in[i] == in[j]) throw DiagramError(DiagramError::labeling, "inconsistent strand orientation");
        } else if (in[i] >= 0) {
            in[j] = 1 - in[i];
            changed = true;
        } else if (in[j] >= 0) {
            in[i] = 1 - in[j];
            changed = true;
        }
    };
    auto propagate = [&] {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [label, v] : occ) pair_up(4 * v[0].c + v[0].p, 4 * v[1].c + v[1].p, changed);
            for (int c = 0; c < n; ++c) pair_up(4 * c + 1, 4 * c + 3, changed);
        }
    };
    propagate();
    for (int c = 0; c < n; ++c) {
        if (in[4 * c + 1] >= 0) continue;
        // strand is over at every crossing: orientation comes from the numbering
        int j = X[c][1], l = X[c][3];
        std::vector<int> mine;
        for (int lab : labels)
            if (comp.find(lid[lab]) == comp.find(lid[j])) mine.push_back(lab);
        auto next = [&](int e) {
            auto it = std::upper_bound(mine.begin(), mine.end(), e);
            return it == mine.end() ? mine.front() : *it;
        };
        if (next(j) == l)
            in[4 * c + 1] = 1;
        else if (next(l) == j)
            in[4 * c + 1] = 0;
        else
            throw DiagramError(DiagramError::labeling, "cannot orient over-only component at crossing " +
                                                           std::to_string(c + 1));
        in[4 * c + 3] = 1 - in[4 * c + 1];
        propagate();
    }

    // labels must run consecutively along each oriented component
    D.component_count = 0;
    std::set<int> seen_root;
    for (int start : labels) {
        int root = comp.find(lid[start]);
        if (!seen_root.insert(root).second) continue;
        std::vector<int> mine;
        for (int lab : labels)
            if (comp.find(lid[lab]) == root) mine.push_back(lab);
        int e = start;
        for (std::size_t k = 0; k < mine.size(); ++k) {
            if (e != mine[k] || (k > 0 && mine[k] != mine[k - 1] + 1))
                throw DiagramError(DiagramError::labeling,
                                   "edge labels are not consecutive along the component of edge " +
                                       std::to_string(start));
            const auto& v = occ[e];
            Occ head = in[4 * v[0].c + v[0].p] == 1 ? v[0] : v[1];
            e = X[head.c][(head.p + 2) % 4];
        }
        if (e != start)
            throw DiagramError(DiagramError::labeling, "component of edge " + std::to_string(start) + " does not close");
        ++D.component_count;
    }

    D.edge_count = static_cast<int>(labels.size());
    for (int c = 0; c < n; ++c) D.crossings.push_back({X[c], in[4 * c + 1] == 1 ? 1 : 3});
    return D;
}

RegionMap trace_regions(const LinkDiagram& D) {
    RegionMap R;
    const int n = static_cast<int>(D.crossings.size());
    if (n == 0) return R;
    std::vector<std::array<int, 4>> X;
    for (const auto& c : D.crossings) X.push_back(c.e);
    auto occ = occurrences(X);
    {
        Dsu cross(n);
        for (const auto& [label, v] : occ) cross.unite(v[0].c, v[1].c);
        for (int c = 1; c < n; ++c)
            if (cross.find(c) != cross.find(0)) throw SplitDiagramError("diagram is split");
    }

    R.corner.assign(n, {-1, -1, -1, -1});
    int faces = 0;
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            if (R.corner[c][p] >= 0) continue;
            Occ cur{c, p};
            // walk with the face on the right: leave through slot p+1, then
            // continue from the corner at the far end of that edge
            while (R.corner[cur.c][cur.p] < 0) {
                R.corner[cur.c][cur.p] = faces;
                Occ exit{cur.c, (cur.p + 1) % 4};
                cur = other(occ[X[exit.c][exit.p]], exit);
            }
            if (cur.c != c || cur.p != p)
                throw DiagramError(DiagramError::nonplanar, "face walk did not close; PD code is not planar");
            ++faces;
        }
    if (faces != n + 2)
        throw DiagramError(DiagramError::nonplanar, "found " + std::to_string(faces) + " faces, expected " +
                                                        std::to_string(n + 2) + "; PD code is not planar");
    R.region_count = faces;
    return R;
}

int crossing_sign(const LinkDiagram& D, std::size_t c) { return D.crossings.at(c).over_in == 3 ? +1 : -1; }

int writhe(const LinkDiagram& D) {
    int w = 0;
    for (std::size_t c = 0; c < D.crossings.size(); ++c) w += crossing_sign(D, c);
    return w;
}

LinkDiagram mirror(const LinkDiagram& D) {
    LinkDiagram M = D;
    for (auto& x : M.crossings) {
        const auto e = x.e;
        // the old over strand becomes the under strand, entering at slot 0
        if (x.over_in == 1) {
            x.e = {e[1], e[2], e[3], e[0]};
            x.over_in = 3;
        } else {
            x.e = {e[3], e[0], e[1], e[2]};
            x.over_in = 1;
        }
    }
    return M;
}

void DualGraphDiagram::validate() const {
    if (region_count < 2) throw DiagramError(DiagramError::invalid_record, "region count must be >= 2");
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        const auto& r = crossings[i];
        if (r.sign != 1 && r.sign != -1)
            throw DiagramError(DiagramError::invalid_record, "crossing " + std::to_string(i) + ": sign must be +-1");
        for (int v : {r.star_in, r.dot_left, r.dot_right, r.star_out})
            if (v < 0 || v >= region_count)
                throw DiagramError(DiagramError::invalid_record,
                                   "crossing " + std::to_string(i) + ": region index out of range");
    }
}

DualGraphDiagram to_dual_graph(const LinkDiagram& D) {
    RegionMap R = trace_regions(D);
    DualGraphDiagram G;
    G.region_count = R.region_count;
    for (std::size_t c = 0; c < D.crossings.size(); ++c) {
        const auto& k = R.corner[c];
        // Roles, for the under strand oriented "up": x is left of the under
        // strand and right of the over strand, y the opposite corner, a is
        // left of both strands and b right of both. The record sign is the
        // negated writhe.
        CrossingRecord r;
        if (D.crossings[c].over_in == 1)
            r = {+1, k[2], k[3], k[1], k[0]};
        else
            r = {-1, k[3], k[2], k[0], k[1]};
        G.crossings.push_back(r);
    }
    return G;
}

std::vector<int> edge_labels(const LinkDiagram& D) {
    std::set<int> s;
    for (const auto& c : D.crossings) s.insert(c.e.begin(), c.e.end());
    return {s.begin(), s.end()};
}

namespace {

bool is_incoming(const Crossing& x, int p) { return p == 0 || p == x.over_in; }

// relabel 1.. consecutively along each component; input orientation is kept
LinkDiagram relabel(const std::vector<Crossing>& C) {
    std::vector<std::array<int, 4>> X;
    for (const auto& c : C) X.push_back(c.e);
    auto occ = occurrences(X);
    std::map<int, int> fresh;
    int next = 0;
    for (const auto& c : C)
        for (int p = 0; p < 4; ++p) {
            int e = c.e[p];
            while (!fresh.count(e)) {
                fresh[e] = ++next;
                const auto& v = occ[e];
                Occ head = is_incoming(C[v[0].c], v[0].p) ? v[0] : v[1];
                e = X[head.c][(head.p + 2) % 4];
            }
        }
    std::vector<std::array<int, 4>> Y = X;
    for (auto& t : Y)
        for (auto& e : t) e = fresh[e];
    LinkDiagram D = make_diagram(Y);
    for (std::size_t c = 0; c < C.size(); ++c)
        if (D.crossings[c].over_in != C[c].over_in)
            throw std::logic_error("perturbation changed a strand orientation");
    return D;
}

}  // namespace

LinkDiagram perturb(const LinkDiagram& D, Move move, int site) {
    if (D.crossings.empty()) {
        if (site != 1) throw DiagramError(DiagramError::invalid_site, "the crossingless unknot has the single edge 1");
        if (move == Move::R1_pos) return make_diagram({{1, 1, 2, 2}});
        if (move == Move::R1_neg) return make_diagram({{1, 2, 2, 1}});
        throw DiagramError(DiagramError::invalid_site, "R2 needs two distinct edges");
    }
    std::vector<Crossing> C = D.crossings;
    std::vector<std::array<int, 4>> X;
    for (const auto& c : C) X.push_back(c.e);
    auto occ = occurrences(X);
    auto it = occ.find(site);
    if (it == occ.end()) throw DiagramError(DiagramError::invalid_site, "no edge labelled " + std::to_string(site));
    const auto& ev = it->second;
    Occ tail = is_incoming(C[ev[0].c], ev[0].p) ? ev[1] : ev[0];
    Occ head = other(ev, tail);
    int top = 0;
    for (const auto& t : X) top = std::max(top, *std::max_element(t.begin(), t.end()));
    auto set = [&](Occ o, int label) { C[o.c].e[o.p] = label; };

    if (move == Move::R1_pos || move == Move::R1_neg) {
        int e_in = top + 1, loop = top + 2, e_out = top + 3;
        set(tail, e_in);
        set(head, e_out);
        if (move == Move::R1_pos)
            C.push_back({{e_in, e_out, loop, loop}, 3});
        else
            C.push_back({{e_in, loop, loop, e_out}, 1});
        return relabel(C);
    }

    // R2: push e over the next edge f on the face to the right of e
    Occ f_start{head.c, (head.p + 1) % 4};
    int f = X[f_start.c][f_start.p];
    if (f == site) throw DiagramError(DiagramError::invalid_site, "face right of edge " + std::to_string(site) + " is a monogon");
    Occ f_end = other(occ[f], f_start);
    bool f_along = !is_incoming(C[f_start.c], f_start.p);

    int e1 = top + 1, e2 = top + 2, e3 = top + 3, f1 = top + 4, f2 = top + 5, f3 = top + 6;
    set(tail, e1);
    set(head, e3);
    set(f_start, f1);
    set(f_end, f3);
    if (f_along) {
        C.push_back({{f2, e1, f3, e2}, 1});
        C.push_back({{f1, e3, f2, e2}, 3});
    } else {
        C.push_back({{f3, e2, f2, e1}, 3});
        C.push_back({{f2, e2, f1, e3}, 1});
    }
    return relabel(C);
}

}  // namespace bqk
