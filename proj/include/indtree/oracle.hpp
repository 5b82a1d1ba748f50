#ifndef INDTREE_ORACLE_HPP
#define INDTREE_ORACLE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "indtree/graph.hpp"
#include "indtree/polynomial.hpp"

namespace indtree {

// Ground-truth independence polynomial by backtracking enumeration of every
// independent set (the empty set counts toward s_0). Enforced budget of 30
// vertices; beyond that the tree DP is the oracle. Throws BudgetError.
Polynomial enumerate_ind_sets(const Graph& g);

enum class TreeShape { uniform_prufer, spider, caterpillar };

const char* tree_shape_name(TreeShape s);
std::optional<TreeShape> tree_shape_from_name(std::string_view name);

// All randomness flows from `seed` through std::mt19937_64 (values reduced by
// modulo), so identical (n, seed, shape) give identical edge sets on every
// platform and standard library.
struct TreeGenSpec {
    int n = 1;
    std::uint64_t seed = 0;
    TreeShape shape = TreeShape::uniform_prufer;
};

// uniform_prufer: decode a uniform random Prüfer sequence (n <= 2 gives P_n);
// spider: one center with random leg lengths; caterpillar: a random-length
// spine with pendant vertices attached at random spine positions.
Graph random_tree(const TreeGenSpec& spec);

// Decode a Prüfer sequence over labels 0..n-1 (length n-2, n >= 2) into the
// labeled tree it encodes.
Graph prufer_decode(const std::vector<int>& seq, int n);

// n^(n-2) for n >= 3, 1 for n in {1,2}. Requires 1 <= n <= 8.
std::uint64_t labeled_tree_count(int n);

// The index-th labeled tree on n vertices, indices enumerating Prüfer
// sequences as base-n numbers. Requires 1 <= n <= 8.
Graph labeled_tree_by_index(int n, std::uint64_t index);

// Streams every labeled tree on n vertices. Requires 1 <= n <= 8.
void all_labeled_trees(int n, const std::function<void(const Graph&)>& fn);

std::uint64_t splitmix64(std::uint64_t x);

// ---- Equivalence fuzzing ---------------------------------------------------
//
// For each generated tree the harness checks classify(g).value against the
// tree DP evaluated at -1 and, within the enumeration budget, against the
// brute-force count. Results merge deterministically by generation index, so
// the serial reference and the OpenMP sweep produce identical reports.

struct FuzzOptions {
    std::uint64_t count = 100;
    int max_n = 20;
    std::uint64_t seed = 0;
    bool parallel = true; // OpenMP sweep; false runs the serial reference
};

struct FuzzCounterexample {
    std::uint64_t index = 0;
    TreeGenSpec spec;
    std::string edge_list; // offending tree in edge-list format
    std::string classify_value;
    std::string tree_dp_value;
    std::optional<std::string> enumeration_value;
};

struct FuzzReport {
    FuzzOptions options;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::array<std::uint64_t, 3> shape_counts{}; // indexed by TreeShape
    std::optional<FuzzCounterexample> counterexample; // smallest failing index

    bool ok() const { return failed == 0; }
};

// Candidate value function under test; defaults to classify(g).value. Tests
// inject faulty candidates to prove the harness catches them.
using TreeValueFn = std::function<long long(const Graph&)>;

FuzzReport fuzz_equivalence(const FuzzOptions& opts, const TreeValueFn& candidate = {});

// The per-index tree of a fuzz run (shape cycles with the index, n and the
// generator seed derive from the run seed via splitmix64).
TreeGenSpec fuzz_tree_spec(const FuzzOptions& opts, std::uint64_t index);

} // namespace indtree

#endif
