// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "tiles/catalog.hpp"
#include "tiles/io.hpp"
#include "tiles/verify.hpp"

using namespace tiles;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, const char* name, bool pass, Clock::time_point t0, const std::string& detail) {
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%2d] %-28s %s (%.2fs)%s%s\n", n, name, pass ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : " ", detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// window comfortably containing stage i of the fibered set
Window stage_window(int i) {
    int64_t hi = edge_len(i) - i - 2;
    return {-static_cast<int64_t>(i) - 3, -static_cast<int64_t>(i) - 3, hi + 6, hi + 6};
}

int64_t brute_min_cut(const BindingGraph& bg) {
    std::vector<Point> v = bg.vertices.sorted();
    size_t n = v.size();
    std::unordered_map<Point, size_t, PointHash> idx;
    for (size_t i = 0; i < n; ++i) idx[v[i]] = i;
    int64_t best = INT64_MAX;
    for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        int64_t cut = 0;
        for (size_t e = 0; e < bg.edges.size(); ++e) {
            size_t a = idx.at(bg.edges[e].first);
            size_t b = idx.at(bg.edges[e].second);
            bool in_a = a > 0 && (mask >> (a - 1)) & 1;
            bool in_b = b > 0 && (mask >> (b - 1)) & 1;
            if (in_a != in_b) cut += bg.weights[e];
        }
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace

// 1. strict self-assembly of the fibered set at stage-4 scale
static void criterion1(const TAS& fib, Configuration& out_result, RunResult& out_run) {
    auto t0 = Clock::now();
    Window w = stage_window(4);
    Assembly fin(fib.tiles, fib.temperature, fib.seed);
    out_run = run(fib, Policy::Lexicographic, w, 0, 1000000, &fin);
    out_result = fin.config();
    bool terminal = out_run.halt == HaltReason::Terminal;
    int64_t unsound = 0;
    for (const auto& [p, t] : out_result.cells)
        if (!in_fibered(p)) ++unsound;
    int64_t missing = 0;
    for (Point p : fibered_stage(4).t)
        if (!out_result.occupied(p)) ++missing;
    report(1, "strict-self-assembly", terminal && unsound == 0 && missing == 0, t0,
           fmt("tiles=%zu unsound=%lld missing-of-stage4=%lld", out_result.size(),
               (long long)unsound, (long long)missing));
}

// 2. directedness: identical domains over policies/seeds; unique terminal
static void criterion2(const TAS& fib, const Configuration& lex_result) {
    auto t0 = Clock::now();
    Window w = stage_window(4);
    bool same = true;
    for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        Configuration r = result_of(fib, run(fib, Policy::SeededRandom, w, seed, 1000000));
        if (!(r == lex_result)) same = false;
    }
    ExploreResult ex = explore_terminals(fib, Window{0, 0, 5, 5}, 4000);
    report(2, "directedness", same && ex.terminals.size() == 1, t0,
           fmt("seeds-identical=%s terminals(6x6)=%zu states=%lld", same ? "yes" : "no",
               ex.terminals.size(), (long long)ex.states));
}

// 3. local determinism at >= 10^4 tiles, plus both fault injections
static void criterion3(const TAS& fib) {
    auto t0 = Clock::now();
    Window w = stage_window(6);
    RunResult r = run(fib, Policy::Lexicographic, w, 0, 4000000);
    bool big_enough = r.steps.size() + 1 >= 10000;
    DeterminismReport rep = check_local_determinism(fib, r, w, 9);

    // duplicate type: condition 2 must fail at that type's sites
    TAS dup = fib;
    TileType copy = dup.tiles[dup.tiles.index_of("cm0")];
    copy.name = "cm0-dup";
    dup.tiles.add(copy);
    Window wd = stage_window(3);
    RunResult rd = run(dup, Policy::Lexicographic, wd, 0, 1000000);
    DeterminismReport rep_dup = check_local_determinism(dup, rd, wd, 6);
    bool dup_caught = !rep_dup.cond2;

    // extra matching glue: condition 1 must fail with a sum of 3
    TAS toy;
    toy.temperature = 2;
    auto make = [](const std::string& name, Glue n, Glue e, Glue s, Glue w2) {
        TileType t;
        t.name = name;
        t.glue(Dir::N) = n;
        t.glue(Dir::E) = e;
        t.glue(Dir::S) = s;
        t.glue(Dir::W) = w2;
        return t;
    };
    toy.tiles.add(make("seed", {"a", 2}, {"b", 2}, {"", 0}, {"", 0}));
    toy.tiles.add(make("up", {"", 0}, {"c", 1}, {"a", 2}, {"", 0}));
    toy.tiles.add(make("right", {"d", 2}, {"", 0}, {"", 0}, {"b", 2}));
    toy.tiles.add(make("corner", {"", 0}, {"", 0}, {"d", 2}, {"c", 1}));
    toy.seed.cells[{0, 0}] = 0;
    RunResult toy_seq;
    toy_seq.window = {-2, -2, 3, 3};
    toy_seq.steps = {{{0, 1}, 1}, {{1, 0}, 2}, {{1, 1}, 3}};
    DeterminismReport rep_toy = check_local_determinism(toy, toy_seq, toy_seq.window, 0);
    bool extra_caught = !rep_toy.cond1;

    report(3, "local-determinism", big_enough && rep.overall && dup_caught && extra_caught, t0,
           fmt("tiles=%zu ld=%s dup-cond2-fails=%s extra-cond1-fails=%s", r.steps.size() + 1,
               rep.overall ? "pass" : "fail", dup_caught ? "yes" : "no", extra_caught ? "yes" : "no"));
}

// 4. weak self-assembly of the standard set over [0,63]^2
static void criterion4() {
    auto t0 = Clock::now();
    CatalogEntry e = xor_weak_set();
    TAS tas = to_tas(e);
    Window w{0, 0, 63, 63};
    Assembly fin(tas.tiles, tas.temperature, tas.seed);
    RunResult r = run(tas, Policy::Lexicographic, w, 0, 10000, &fin);
    bool filled = fin.config().size() == 64 * 64;
    int64_t wrong = 0;
    for (const auto& [p, t] : fin.config().cells)
        if ((e.black.count(tas.tiles[t].name) != 0) != in_standard(p)) ++wrong;
    report(4, "weak-self-assembly", r.halt == HaltReason::Terminal && filled && wrong == 0, t0,
           fmt("tiles=%zu black-mismatches=%lld", fin.config().size(), (long long)wrong));
}

// 5. counting functions: closed forms vs recurrences and materialized sets
static void criterion5() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int i = 0; i <= 16; ++i) {
        CountingTriple a = counting(i), b = counting_by_recurrence(i);
        if (a.l != b.l || a.f != b.f || a.t != b.t) ok = false;
    }
    for (int i = 0; i <= 6; ++i) {
        FiberedStage s = fibered_stage(i);
        CountingTriple c = counting(i);
        if (static_cast<int64_t>(s.t.size()) != c.t) ok = false;
        if (static_cast<int64_t>(s.f.size()) != c.f) ok = false;
    }
    report(5, "counting-functions", ok, t0, "i<=16 closed==recurrence, i<=6 materialized");
}

// 6. bar characterization: axis closures rebuild each stage exactly
static void criterion6() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 0; n <= 4; ++n) {
        PointSet lhs{{0, 0}};
        lhs.unite(theta_axis_closure(Axis::X, n));
        lhs.unite(theta_axis_closure(Axis::Y, n));
        if (!(lhs == fibered_stage(n + 1).t)) ok = false;
    }
    report(6, "bar-characterization", ok, t0, "n<=4 exact set equality");
}

// 7. ruler prefix sums and counter heights
static void criterion7() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 0; n <= 16; ++n) {
        int64_t p = int64_t{1} << (n + 1);
        if (ruler_prefix_sum(p - 1) != p - n - 2) ok = false;
    }
    for (int i = 0; i <= 16; ++i)
        if (!counter_height_identity(i)) ok = false;
    report(7, "ruler-counter-identities", ok, t0, "indices<=16 exact");
}

// 8. dimension estimates
static void criterion8() {
    auto t0 = Clock::now();
    bool ok = true;
    int64_t pow3 = 1;
    for (int n = 1; n <= 12; ++n) {
        pow3 *= 3;
        if (static_cast<int64_t>(standard_stage(n).size()) != pow3) ok = false;
        if (std::abs(zeta_estimate_at('S', n) - std::log2(3.0)) > 1e-12) ok = false;
    }
    double at1000 = zeta_estimate_at('T', 1000);
    if (std::abs(at1000 - std::log2(3.0)) > 0.002) ok = false;
    std::vector<double> est = zeta_estimates('T', 1000);
    for (size_t k = 8; k + 1 < est.size(); ++k)
        if (!(est[k + 1] < est[k])) ok = false;
    report(8, "zeta-dimension", ok, t0, fmt("T(1000)=%.5f", at1000));
}

// 9. finite-tree depth witnesses up to k = 6
static void criterion9() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int k = 0; k <= 6; ++k) {
        SierpinskiWitness wit = sierpinski_witness(k);
        int64_t hi = int64_t{1} << (k + 2);
        PointSet window;
        for (int64_t x = 0; x <= hi; ++x)
            for (int64_t y = 0; y <= hi; ++y)
                if (in_standard({x, y})) window.insert({x, y});
        DSubtree sub = d_subtree(full_grid_graph(window), PointSet{{0, 0}}, wit.root);
        if (!sub.is_tree || !sub.depth || *sub.depth != wit.expected_depth) ok = false;
        if (!(sub.vertices == wit.points)) ok = false;
    }
    report(9, "ftdepth-witnesses", ok, t0, "k<=6 depth==2^k");
}

// 10. frontier <=> stable extension, and exact cuts vs enumeration
static void criterion10() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(20240817);
    int64_t trials = 0, mismatches = 0;
    while (trials < 1000) {
        TAS tas;
        tas.temperature = 2;
        auto glue = [&rng]() -> Glue {
            static const char* colors[] = {"a", "b", "c", "d"};
            int s = static_cast<int>(rng() % 3);
            return s == 0 ? Glue{"", 0} : Glue{colors[rng() % 4], s};
        };
        int n = 3 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) {
            TileType t;
            t.name = "t" + std::to_string(i);
            for (Dir d : kDirs) t.glue(d) = glue();
            tas.tiles.add(t);
        }
        tas.seed.cells[{0, 0}] = 0;
        Assembly a(tas.tiles, tas.temperature, tas.seed);
        for (int step = 0; step < 49; ++step) {
            std::vector<FrontierEntry> f = a.frontier();
            if (f.empty()) break;
            FrontierEntry pick = f[rng() % f.size()];
            a.attach(pick.p, pick.type);
        }
        std::vector<Point> border;
        for (Point p : a.config().domain().sorted())
            for (Dir d : kDirs)
                if (!a.config().occupied(p + delta(d))) border.push_back(p + delta(d));
        if (border.empty()) continue;
        for (int probe = 0; probe < 10; ++probe, ++trials) {
            Point m = border[rng() % border.size()];
            int t = static_cast<int>(rng() % static_cast<uint64_t>(tas.tiles.size()));
            Configuration ext = a.config();
            ext.cells[m] = t;
            bool stable = min_binding_cut(binding_graph_of(ext, tas.tiles)).stable(2);
            if (a.in_frontier(m, t) != stable) ++mismatches;
        }
    }

    int graph_mismatches = 0;
    for (int g = 0; g < 200; ++g) {
        PointSet pts;
        size_t want = 2 + rng() % 11;
        while (pts.size() < want)
            pts.insert({static_cast<int64_t>(rng() % 4), static_cast<int64_t>(rng() % 4)});
        GridGraph gg = full_grid_graph(pts);
        BindingGraph bg;
        bg.vertices = gg.vertices;
        bg.edges = gg.edges;
        for (size_t i = 0; i < gg.edges.size(); ++i) bg.weights.push_back(1 + static_cast<int64_t>(rng() % 3));
        MinCutResult mc = min_binding_cut(bg);
        if (!mc.finite || mc.value != brute_min_cut(bg)) ++graph_mismatches;
    }
    report(10, "frontier-mincut-crosscheck", mismatches == 0 && graph_mismatches == 0, t0,
           fmt("trials=%lld discrepancies=%lld graphs=200 cut-mismatches=%d", (long long)trials,
               (long long)mismatches, graph_mismatches));
}

int main() {
    auto t0 = Clock::now();
    TAS fib = to_tas(fibered_set());
    Configuration c1_result;
    RunResult c1_run;
    criterion1(fib, c1_result, c1_run);
    criterion2(fib, c1_result);
    criterion3(fib);
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s: %d/10 criteria passed (%.1fs total)\n", g_failures == 0 ? "OK" : "FAILED",
                10 - g_failures, secs);
    return g_failures == 0 ? 0 : 1;
}
