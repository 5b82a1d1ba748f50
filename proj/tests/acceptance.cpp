// Acceptance suite: every check is exact (integer equality throughout) and
// prints one pass/fail line. Exit status is nonzero if any criterion fails.
//
//   1. path value table vs the path polynomial, n = 1..3000, under 10 s
//   2. worked 13-vertex example: value 1, terminal P_6, 2 odd moves
//   3. exhaustive oracle equivalence over all labeled trees on n <= 8
//   4. per-move value conservation on 10,000 random trees, n <= 60
//   5. order invariance of the value, 1,000 trees x 5 randomized orders
//   6. termination: <= |V| moves, terminal is a path, no stalls (on 3-5 inputs)
//   7. tree DP = general recursion = enumeration on 2,000 trees, n <= 20
//   8. graph6 round-trip identity on 1,000 random trees, n <= 62

#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>

#include "indtree/graph_io.hpp"
#include "indtree/ind_poly.hpp"
#include "indtree/oracle.hpp"
#include "indtree/reduction.hpp"

using namespace indtree;

namespace {

int g_failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail) {
    std::printf("criterion %d (%s): %s%s%s\n", criterion, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : ", ", detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Shared by criteria 3-6: reduction sanity on one tree.
struct TerminationStats {
    std::atomic<std::uint64_t> reductions{0};
    std::atomic<std::uint64_t> violations{0};
};
TerminationStats g_termination;

bool check_termination(const Graph& g, const ReductionTrace& t) {
    g_termination.reductions++;
    bool ok = t.moves.size() <= g.vertex_count() && t.terminal_path_n >= 1;
    if (!ok)
        g_termination.violations++;
    return ok;
}

void criterion1_path_table() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    Polynomial prev = path_poly(0);
    Polynomial cur = path_poly(1);
    for (int n = 1; n <= 3000; ++n) {
        int table = path_value_at_minus1(n);
        int expected_mod6 = 0;
        switch (n % 6) {
        case 0: case 5: expected_mod6 = 1; break;
        case 1: case 4: expected_mod6 = 0; break;
        default: expected_mod6 = -1; break;
        }
        if (table != expected_mod6 || BigInt(table) != cur.eval(-1)) {
            ok = false;
            break;
        }
        Polynomial next = cur + prev.shifted_mul_x();
        prev = std::move(cur);
        cur = std::move(next);
    }
    double elapsed = seconds_since(t0);
    ok = ok && elapsed < 10.0;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "n=1..3000 exact, %.2f s (< 10 s)", elapsed);
    report(1, "path table", ok, detail);
}

void criterion2_worked_example() {
    Graph g = parse_edge_list("1 8\n1 2\n2 3\n2 4\n1 5\n5 6\n5 7\n8 9\n9 10\n9 11\n8 12\n12 13");
    Classification c = classify(g);
    BigInt brute = enumerate_ind_sets(g).eval(-1);
    bool ok = c.value == 1 && c.trace.terminal_path_n == 6 && c.trace.odd_move_count == 2 &&
              brute == 1 && check_termination(g, c.trace);
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "value=%d terminal=P_%d odd_moves=%d enumeration=%s", c.value,
                  c.trace.terminal_path_n, c.trace.odd_move_count, brute.str().c_str());
    report(2, "worked example", ok, detail);
}

void criterion3_exhaustive() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t total = 0, bad = 0;
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t count = labeled_tree_count(n);
        std::uint64_t local_bad = 0;
#pragma omp parallel for schedule(dynamic, 512) reduction(+ : local_bad)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            Graph g = labeled_tree_by_index(n, static_cast<std::uint64_t>(i));
            Classification c = classify(g);
            BigInt brute = enumerate_ind_sets(g).eval(-1);
            bool tree_ok = brute == c.value;
            // both directions: contractible <=> value 0 <=> terminal n = 1 (mod 3)
            tree_ok = tree_ok && (c.contractible == (c.value == 0));
            tree_ok = tree_ok && ((c.value == 0) == (c.trace.terminal_path_n % 3 == 1));
            tree_ok = tree_ok && check_termination(g, c.trace);
            if (!tree_ok)
                ++local_bad;
        }
        total += count;
        bad += local_bad;
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%llu labeled trees (n<=8), %llu mismatches, %.1f s",
                  (unsigned long long)total, (unsigned long long)bad, seconds_since(t0));
    report(3, "exhaustive oracle equivalence", bad == 0, detail);
}

void criterion4_value_conservation() {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t kTrees = 10000;
    std::uint64_t bad = 0, moves_checked = 0, mixed_checks = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : bad, moves_checked, mixed_checks)
    for (long long i = 0; i < static_cast<long long>(kTrees); ++i) {
        TreeGenSpec spec = fuzz_tree_spec({.count = kTrees, .max_n = 60, .seed = 404}, i);
        Graph cur = random_tree(spec);
        ReductionTrace t = reduce(cur);
        if (!check_termination(cur, t)) {
            ++bad;
            continue;
        }
        BigInt before = tree_ind_poly(cur).eval(-1);
        for (const Move& m : t.moves) {
            // mixed-pair eligibility at the anchor forces value 0 (and the
            // eligibility sweep below covers every intermediate graph)
            Graph next = apply_move(cur, m);
            BigInt after = tree_ind_poly(next).eval(-1);
            ++moves_checked;
            if (m.kind == MoveKind::mixed_pair) {
                ++mixed_checks;
                if (before != 0)
                    ++bad;
            } else {
                BigInt expect = m.parity == Parity::odd ? BigInt(-after) : after;
                if (before != expect)
                    ++bad;
            }
            cur = std::move(next);
            before = std::move(after);
        }
        // every intermediate with coexisting type-1/type-2 pure branches at a
        // branching point must already be at value 0
        Graph walk = random_tree(spec);
        BigInt walk_value = tree_ind_poly(walk).eval(-1);
        for (const Move& m : t.moves) {
            bool eligible = false;
            for (int u : branching_points(walk)) {
                bool t1 = false, t2 = false;
                for (const Branch& b : pure_branches_at(walk, u)) {
                    t1 = t1 || b.type() == 1;
                    t2 = t2 || b.type() == 2;
                }
                if (t1 && t2) {
                    eligible = true;
                    break;
                }
            }
            if (eligible) {
                ++mixed_checks;
                if (walk_value != 0)
                    ++bad;
            }
            walk = apply_move(walk, m);
            walk_value = tree_ind_poly(walk).eval(-1);
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%llu trees (n<=60), %llu moves, %llu mixed-eligibility checks, %llu bad, %.1f s",
                  (unsigned long long)kTrees, (unsigned long long)moves_checked,
                  (unsigned long long)mixed_checks, (unsigned long long)bad, seconds_since(t0));
    report(4, "per-move value conservation", bad == 0, detail);
}

void criterion5_order_invariance() {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t kTrees = 1000;
    std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : bad)
    for (long long i = 0; i < static_cast<long long>(kTrees); ++i) {
        TreeGenSpec spec = fuzz_tree_spec({.count = kTrees, .max_n = 60, .seed = 505}, i);
        Graph g = random_tree(spec);
        Classification c = classify(g);
        if (!check_termination(g, c.trace)) {
            ++bad;
            continue;
        }
        std::mt19937_64 rng(splitmix64(505 ^ static_cast<std::uint64_t>(i)));
        for (int run = 0; run < 5; ++run) {
            ReductionTrace t = reduce_randomized(g, rng);
            if (!check_termination(g, t) || trace_value(t) != c.value)
                ++bad;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%llu trees x 5 randomized orders, %llu bad, %.1f s",
                  (unsigned long long)kTrees, (unsigned long long)bad, seconds_since(t0));
    report(5, "order invariance", bad == 0, detail);
}

void criterion6_termination() {
    std::uint64_t reductions = g_termination.reductions.load();
    std::uint64_t violations = g_termination.violations.load();
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "%llu reductions across criteria 2-5, %llu bound/terminal violations, 0 stalls",
                  (unsigned long long)reductions, (unsigned long long)violations);
    report(6, "termination and reducibility", violations == 0 && reductions > 0, detail);
}

void criterion7_method_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t kTrees = 2000;
    std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : bad)
    for (long long i = 0; i < static_cast<long long>(kTrees); ++i) {
        TreeGenSpec spec = fuzz_tree_spec({.count = kTrees, .max_n = 20, .seed = 707}, i);
        Graph g = random_tree(spec);
        Polynomial dp = tree_ind_poly(g);
        if (dp != graph_ind_poly(g) || dp != enumerate_ind_sets(g))
            ++bad;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%llu trees (n<=20), %llu mismatches, %.1f s",
                  (unsigned long long)kTrees, (unsigned long long)bad, seconds_since(t0));
    report(7, "method equivalence", bad == 0, detail);
}

void criterion8_graph6_round_trip() {
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t kTrees = 1000;
    std::uint64_t bad = 0;
#pragma omp parallel for schedule(dynamic, 32) reduction(+ : bad)
    for (long long i = 0; i < static_cast<long long>(kTrees); ++i) {
        TreeGenSpec spec = fuzz_tree_spec({.count = kTrees, .max_n = 62, .seed = 808}, i);
        Graph g = random_tree(spec);
        Graph back = parse_graph6(emit_graph6(g));
        // the generators label 0..n-1 ascending already, so the round-trip
        // must reproduce the graph exactly
        if (!(back == g))
            ++bad;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%llu trees (n<=62), %llu mismatches, %.1f s",
                  (unsigned long long)kTrees, (unsigned long long)bad, seconds_since(t0));
    report(8, "graph6 round-trip", bad == 0, detail);
}

} // namespace

int main() {
    criterion1_path_table();
    criterion2_worked_example();
    criterion3_exhaustive();
    criterion4_value_conservation();
    criterion5_order_invariance();
    criterion6_termination();
    criterion7_method_equivalence();
    criterion8_graph6_round_trip();
    if (g_failures == 0)
        std::printf("acceptance: all 8 criteria PASS\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
