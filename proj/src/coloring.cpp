#include "bqk/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bqk/parallel.hpp"

namespace bqk {

bool satisfies(const DualGraphDiagram& G, const Biquasile& B, const Coloring& f) {
    if (static_cast<int>(f.size()) != G.region_count) return false;
    for (int v : f)
        if (v < 1 || v > B.order()) return false;
    for (const auto& r : G.crossings) {
        int x = f[r.star_in] - 1, a = f[r.dot_left] - 1, b = f[r.dot_right] - 1, y = f[r.star_out] - 1;
        if (B.star(x, B.dot(a, b)) != y) return false;
    }
    return true;
}

namespace {

// Regions are branched on in descending incidence order. Whenever a record
// has exactly one uncolored role, that role is forced through the divisions.
class Search {
public:
    Search(const DualGraphDiagram& G, const Biquasile& B) : G_(G), B_(B), col_(G.region_count, -1) {
        const int R = G.region_count;
        touching_.assign(R, {});
        std::vector<int> inc(R, 0);
        for (int i = 0; i < static_cast<int>(G.crossings.size()); ++i) {
            const auto& r = G.crossings[i];
            const int roles[4] = {r.star_in, r.dot_left, r.dot_right, r.star_out};
            for (int k = 0; k < 4; ++k) {
                ++inc[roles[k]];
                auto& t = touching_[roles[k]];
                if (t.empty() || t.back() != i) t.push_back(i);
            }
        }
        order_.resize(R);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int u, int v) { return inc[u] > inc[v]; });
    }

    const std::vector<int>& order() const { return order_; }
    int n() const { return B_.order(); }

    // colors region r and propagates; on failure the state is left dirty
    // and the caller rolls back to its mark
    bool assign(int r, int v) {
        col_[r] = v;
        trail_.push_back(r);
        std::size_t head = trail_.size() - 1;
        while (head < trail_.size()) {
            int q = trail_[head++];
            for (int i : touching_[q])
                if (!settle(G_.crossings[i])) return false;
        }
        return true;
    }

    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t m) {
        while (trail_.size() > m) {
            col_[trail_.back()] = -1;
            trail_.pop_back();
        }
    }
    int color(int r) const { return col_[r]; }

    template <class Visit>
    void run(std::size_t k, Visit&& visit) {
        while (k < order_.size() && col_[order_[k]] >= 0) ++k;
        if (k == order_.size()) {
            visit(col_);
            return;
        }
        int r = order_[k];
        for (int v = 0; v < B_.order(); ++v) {
            std::size_t m = mark();
            if (assign(r, v)) run(k + 1, visit);
            undo(m);
        }
    }

private:
    bool settle(const CrossingRecord& r) {
        int x = col_[r.star_in], a = col_[r.dot_left], b = col_[r.dot_right], y = col_[r.star_out];
        int unknown = (x < 0) + (a < 0) + (b < 0) + (y < 0);
        if (unknown == 0) return B_.star(x, B_.dot(a, b)) == y;
        if (unknown != 1) return true;
        if (y < 0) return push(r.star_out, B_.star(x, B_.dot(a, b)));
        if (x < 0) return push(r.star_in, B_.star_rdiv(y, B_.dot(a, b)));
        int t = B_.star_ldiv(x, y);  // a . b
        if (a < 0) return push(r.dot_left, B_.dot_rdiv(t, b));
        return push(r.dot_right, B_.dot_ldiv(a, t));
    }
    bool push(int r, int v) {
        if (col_[r] >= 0) return col_[r] == v;
        col_[r] = v;
        trail_.push_back(r);
        return true;
    }

    const DualGraphDiagram& G_;
    const Biquasile& B_;
    std::vector<int> col_;
    std::vector<int> trail_;
    std::vector<std::vector<int>> touching_;
    std::vector<int> order_;
};

Coloring one_indexed(const std::vector<int>& c) {
    Coloring f(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) f[i] = c[i] + 1;
    return f;
}

// number of leading branch regions to split across tasks
std::size_t split_depth(std::size_t regions, int order, int threads) {
    std::size_t d = 0;
    long long tasks = 1;
    while (d < regions && tasks < 16LL * threads) {
        tasks *= order;
        ++d;
    }
    return d;
}

// replays a fixed value for each of the first d branch regions
template <class Visit>
void run_task(Search& S, std::size_t d, long long code, Visit&& visit) {
    const auto& ord = S.order();
    for (std::size_t i = 0; i < d; ++i) {
        int v = static_cast<int>(code % S.n());
        code /= S.n();
        int r = ord[i];
        if (S.color(r) >= 0) {
            if (S.color(r) != v) return;
            continue;
        }
        if (!S.assign(r, v)) return;
    }
    S.run(d, visit);
}

long long task_count(int order, std::size_t d) {
    long long t = 1;
    for (std::size_t i = 0; i < d; ++i) t *= order;
    return t;
}

}  // namespace

uint64_t count_colorings_serial(const DualGraphDiagram& G, const Biquasile& B) {
    Search S(G, B);
    uint64_t total = 0;
    S.run(0, [&](const std::vector<int>&) { ++total; });
    return total;
}

uint64_t count_colorings(const DualGraphDiagram& G, const Biquasile& B) {
    const int threads = thread_count();
    const std::size_t d = split_depth(G.region_count, B.order(), threads);
    const long long tasks = task_count(B.order(), d);
    uint64_t total = 0;
#pragma omp parallel num_threads(threads) reduction(+ : total)
    {
        Search S(G, B);
#pragma omp for schedule(dynamic)
        for (long long t = 0; t < tasks; ++t) {
            S.undo(0);
            run_task(S, d, t, [&](const std::vector<int>&) { ++total; });
        }
    }
    return total;
}

std::vector<Coloring> enumerate_colorings_serial(const DualGraphDiagram& G, const Biquasile& B) {
    Search S(G, B);
    std::vector<Coloring> out;
    S.run(0, [&](const std::vector<int>& c) { out.push_back(one_indexed(c)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coloring> enumerate_colorings(const DualGraphDiagram& G, const Biquasile& B) {
    const int threads = thread_count();
    const std::size_t d = split_depth(G.region_count, B.order(), threads);
    const long long tasks = task_count(B.order(), d);
    std::vector<std::vector<Coloring>> found(tasks);
#pragma omp parallel num_threads(threads)
    {
        Search S(G, B);
#pragma omp for schedule(dynamic)
        for (long long t = 0; t < tasks; ++t) {
            S.undo(0);
            run_task(S, d, t, [&](const std::vector<int>& c) { found[t].push_back(one_indexed(c)); });
        }
    }
    std::vector<Coloring> out;
    for (auto& v : found)
        for (auto& f : v) out.push_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
}

ModMatrix alexander_coloring_matrix(const DualGraphDiagram& G, const AlexanderParams& p) {
    p.validate();
    const int64_t m = p.modulus;
    ModMatrix M(m, G.crossings.size(), G.region_count);
    const int64_t cx = mod(p.d * p.s % m * p.n_param % m * p.n_param, m);
    for (std::size_t i = 0; i < G.crossings.size(); ++i) {
        const auto& r = G.crossings[i];
        auto add = [&](int col, int64_t v) { M.at(i, col) = mod(M.at(i, col) + v, m); };
        add(r.star_out, 1);
        add(r.star_in, cx);
        add(r.dot_left, -p.n_param * p.d);
        add(r.dot_right, -p.n_param * p.s);
    }
    return M;
}

BigCount count_colorings_alexander(const DualGraphDiagram& G, const AlexanderParams& p) {
    return solve_count(alexander_coloring_matrix(G, p));
}

std::string Presentation::text(bool ascii) const {
    const char* star = ascii ? " * " : " ∗ ";
    const char* dot = ascii ? " . " : " · ";
    std::ostringstream os;
    os << (ascii ? "<" : "⟨");
    for (int g = 0; g < generators; ++g) os << (g ? ", " : "") << 'g' << g + 1;
    os << " |";
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const auto& r = relations[i];
        os << (i ? ", " : " ") << 'g' << r.star_out + 1 << " = g" << r.star_in + 1 << star << "(g" << r.dot_left + 1
           << dot << 'g' << r.dot_right + 1 << ')';
    }
    os << (ascii ? ">" : "⟩");
    return os.str();
}

Presentation presentation(const DualGraphDiagram& G) {
    G.validate();
    return {G.region_count, G.crossings};
}

}  // namespace bqk
