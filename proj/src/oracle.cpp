#include "indtree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "indtree/errors.hpp"
#include "indtree/graph_io.hpp"
#include "indtree/ind_poly.hpp"
#include "indtree/reduction.hpp"

namespace indtree {

Polynomial enumerate_ind_sets(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n > 30)
        throw BudgetError("enumerate_ind_sets: " + std::to_string(n) +
                          " vertices exceeds the 30-vertex budget");

    std::vector<int> labels = g.vertices();
    std::vector<std::uint64_t> nbr_mask(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (int w : g.neighbors(labels[i])) {
            std::size_t j = static_cast<std::size_t>(
                std::lower_bound(labels.begin(), labels.end(), w) - labels.begin());
            nbr_mask[i] |= std::uint64_t(1) << j;
        }

    // Each recursion node extends the current independent set by its smallest
    // admissible vertex, so every independent set is counted exactly once.
    std::vector<std::uint64_t> counts(n + 1, 0);
    struct Rec {
        const std::vector<std::uint64_t>& nbr;
        std::vector<std::uint64_t>& counts;
        void operator()(std::uint64_t candidates, std::uint64_t banned, int size) const {
            counts[size]++;
            std::uint64_t avail = candidates & ~banned;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= avail - 1;
                (*this)(avail, banned | nbr[v], size + 1);
            }
        }
    };
    std::uint64_t all = (std::uint64_t(1) << n) - 1;
    Rec{nbr_mask, counts}(all, 0, 0);

    std::vector<BigInt> coeffs(counts.begin(), counts.end());
    return Polynomial(std::move(coeffs));
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2)
        throw std::invalid_argument("prufer_decode: need n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer_decode: sequence must have length n-2");
    std::vector<int> deg(n, 1);
    for (int a : seq) {
        if (a < 0 || a >= n)
            throw std::invalid_argument("prufer_decode: label out of range");
        ++deg[a];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1)
            leaves.push(v);
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(v);
    for (int a : seq) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, a);
        if (--deg[a] == 1)
            leaves.push(a);
    }
    int u = leaves.top();
    leaves.pop();
    g.add_edge(u, leaves.top());
    return g;
}

const char* tree_shape_name(TreeShape s) {
    switch (s) {
    case TreeShape::uniform_prufer:
        return "uniform_prufer";
    case TreeShape::spider:
        return "spider";
    default:
        return "caterpillar";
    }
}

std::optional<TreeShape> tree_shape_from_name(std::string_view name) {
    if (name == "uniform_prufer")
        return TreeShape::uniform_prufer;
    if (name == "spider")
        return TreeShape::spider;
    if (name == "caterpillar")
        return TreeShape::caterpillar;
    return std::nullopt;
}

namespace {

// rng() % k; std::uniform_int_distribution is not reproducible across
// standard libraries, plain modulo on mt19937_64 output is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    return rng() % k;
}

Graph path_graph(int n) {
    Graph g;
    for (int v = 0; v < n; ++v)
        g.add_vertex(v);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph spider_tree(int n, std::mt19937_64& rng) {
    if (n <= 3)
        return path_graph(n);
    int max_legs = std::min(n - 1, 10);
    int legs = 3 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(max_legs - 2)));
    std::vector<int> leg_len(legs, 1);
    for (int extra = n - 1 - legs; extra > 0; --extra)
        ++leg_len[bounded(rng, legs)];
    Graph g;
    g.add_vertex(0);
    int next = 1;
    for (int j = 0; j < legs; ++j) {
        int prev = 0;
        for (int k = 0; k < leg_len[j]; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph caterpillar_tree(int n, std::mt19937_64& rng) {
    if (n <= 2)
        return path_graph(n);
    int spine = 2 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n - 1)));
    Graph g = path_graph(spine);
    for (int v = spine; v < n; ++v)
        g.add_edge(static_cast<int>(bounded(rng, spine)), v);
    return g;
}

} // namespace

Graph random_tree(const TreeGenSpec& spec) {
    if (spec.n < 1)
        throw std::invalid_argument("random_tree: need n >= 1");
    if (spec.n <= 2)
        return path_graph(spec.n);
    std::mt19937_64 rng(spec.seed);
    switch (spec.shape) {
    case TreeShape::spider:
        return spider_tree(spec.n, rng);
    case TreeShape::caterpillar:
        return caterpillar_tree(spec.n, rng);
    default: {
        std::vector<int> seq(spec.n - 2);
        for (int& a : seq)
            a = static_cast<int>(bounded(rng, spec.n));
        return prufer_decode(seq, spec.n);
    }
    }
}

namespace {

void check_enumeration_n(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("labeled tree enumeration requires 1 <= n <= 8");
}

} // namespace

std::uint64_t labeled_tree_count(int n) {
    check_enumeration_n(n);
    if (n <= 2)
        return 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i)
        count *= static_cast<std::uint64_t>(n);
    return count;
}

Graph labeled_tree_by_index(int n, std::uint64_t index) {
    check_enumeration_n(n);
    if (index >= labeled_tree_count(n))
        throw std::invalid_argument("labeled_tree_by_index: index out of range");
    if (n == 1) {
        Graph g;
        g.add_vertex(0);
        return g;
    }
    if (n == 2)
        return path_graph(2);
    std::vector<int> seq(n - 2);
    for (int i = n - 3; i >= 0; --i) {
        seq[i] = static_cast<int>(index % n);
        index /= n;
    }
    return prufer_decode(seq, n);
}

void all_labeled_trees(int n, const std::function<void(const Graph&)>& fn) {
    std::uint64_t count = labeled_tree_count(n);
    for (std::uint64_t i = 0; i < count; ++i)
        fn(labeled_tree_by_index(n, i));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

TreeGenSpec fuzz_tree_spec(const FuzzOptions& opts, std::uint64_t index) {
    TreeGenSpec spec;
    spec.shape = static_cast<TreeShape>(index % 3);
    std::uint64_t h = splitmix64(opts.seed ^ splitmix64(index));
    spec.n = 1 + static_cast<int>(h % static_cast<std::uint64_t>(std::max(1, opts.max_n)));
    spec.seed = splitmix64(h);
    return spec;
}

namespace {

struct TreeCheck {
    bool ok = true;
    std::string classify_value, tree_dp_value;
    std::optional<std::string> enumeration_value;
};

std::string bigint_str(const BigInt& v) {
    return v.str();
}

TreeCheck check_one_tree(const Graph& g, const TreeValueFn& candidate) {
    TreeCheck res;
    long long claimed = candidate(g);
    BigInt dp = tree_ind_poly(g).eval(-1);
    res.classify_value = std::to_string(claimed);
    res.tree_dp_value = bigint_str(dp);
    res.ok = BigInt(claimed) == dp;
    if (g.vertex_count() <= 30) {
        BigInt brute = enumerate_ind_sets(g).eval(-1);
        res.enumeration_value = bigint_str(brute);
        res.ok = res.ok && brute == dp;
    }
    return res;
}

} // namespace

FuzzReport fuzz_equivalence(const FuzzOptions& opts, const TreeValueFn& candidate) {
    TreeValueFn value_fn = candidate;
    if (!value_fn)
        value_fn = [](const Graph& g) { return static_cast<long long>(classify(g).value); };

    FuzzReport report;
    report.options = opts;
    std::uint64_t count = opts.count;
    std::vector<unsigned char> failed(count, 0);
    std::vector<TreeCheck> failures(count);

    auto run_one = [&](std::uint64_t i) {
        TreeGenSpec spec = fuzz_tree_spec(opts, i);
        TreeCheck res = check_one_tree(random_tree(spec), value_fn);
        if (!res.ok) {
            failed[i] = 1;
            failures[i] = std::move(res);
        }
    };

    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            run_one(static_cast<std::uint64_t>(i));
    } else {
        for (std::uint64_t i = 0; i < count; ++i)
            run_one(i);
    }

    // Deterministic merge by generation index.
    for (std::uint64_t i = 0; i < count; ++i) {
        TreeGenSpec spec = fuzz_tree_spec(opts, i);
        ++report.shape_counts[static_cast<std::size_t>(spec.shape)];
        ++report.checked;
        if (failed[i]) {
            ++report.failed;
            if (!report.counterexample) {
                FuzzCounterexample ce;
                ce.index = i;
                ce.spec = spec;
                ce.edge_list = emit_edge_list(random_tree(spec));
                ce.classify_value = failures[i].classify_value;
                ce.tree_dp_value = failures[i].tree_dp_value;
                ce.enumeration_value = failures[i].enumeration_value;
                report.counterexample = std::move(ce);
            }
        }
    }
    return report;
}

} // namespace indtree
