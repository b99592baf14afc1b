#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tiles/catalog.hpp"
#include "tiles/verify.hpp"

using namespace tiles;

namespace {

TileType make(const std::string& name, Glue n, Glue e, Glue s, Glue w) {
    TileType t;
    t.name = name;
    t.glue(Dir::N) = n;
    t.glue(Dir::E) = e;
    t.glue(Dir::S) = s;
    t.glue(Dir::W) = w;
    return t;
}

const Glue kNone{"", 0};

// seed -> A above it -> B right of it -> C closing the corner cooperatively
TAS corner_system(int c_south_strength) {
    TAS tas;
    tas.temperature = 2;
    tas.tiles.add(make("seed", {"a", 2}, {"b", 2}, kNone, kNone));
    tas.tiles.add(make("A", kNone, {"c", 1}, {"a", 2}, kNone));
    tas.tiles.add(make("B", {"d", c_south_strength == 2 ? 2 : 1}, kNone, kNone, {"b", 2}));
    tas.tiles.add(make("C", kNone, kNone, {"d", c_south_strength}, {"c", 1}));
    tas.seed.cells[{0, 0}] = 0;
    return tas;
}

RunResult corner_sequence() {
    RunResult r;
    r.window = {-2, -2, 4, 4};
    r.steps = {{{0, 1}, 1}, {{1, 0}, 2}, {{1, 1}, 3}};
    return r;
}

}  // namespace

TEST_CASE("side sets of a small sequence") {
    TAS tas = corner_system(1);
    RunResult seq = corner_sequence();

    SideSets seed_sides = side_sets(tas, seq, {0, 0});
    CHECK(seed_sides.in == std::array<bool, 4>{});  // seeds bind through nothing
    CHECK(seed_sides.out[static_cast<size_t>(Dir::N)]);
    CHECK(seed_sides.out[static_cast<size_t>(Dir::E)]);

    SideSets a_sides = side_sets(tas, seq, {0, 1});
    CHECK(a_sides.in[static_cast<size_t>(Dir::S)]);
    CHECK_FALSE(a_sides.in[static_cast<size_t>(Dir::W)]);

    SideSets c_sides = side_sets(tas, seq, {1, 1});
    CHECK(c_sides.in[static_cast<size_t>(Dir::S)]);
    CHECK(c_sides.in[static_cast<size_t>(Dir::W)]);

    CHECK_THROWS_AS(side_sets(tas, seq, {9, 9}), std::invalid_argument);
}

TEST_CASE("side sets are mutually consistent on a fibered run") {
    TAS tas = to_tas(fibered_set());
    RunResult r = run(tas, Policy::Lexicographic, {-6, -6, 30, 30}, 0, 100000);
    auto sides = side_sets_all(tas, r);
    for (const auto& [p, ss] : sides)
        for (Dir d : kDirs) {
            auto it = sides.find(p + delta(d));
            bool out_here = ss.out[static_cast<size_t>(d)];
            bool in_there = it != sides.end() &&
                            it->second.in[static_cast<size_t>(opposite(d))];
            CHECK(out_here == in_there);
        }
}

TEST_CASE("local determinism of the corner system") {
    TAS tas = corner_system(1);
    DeterminismReport rep = check_local_determinism(tas, corner_sequence(), {-2, -2, 4, 4}, 0);
    CHECK(rep.cond1);
    CHECK(rep.cond2);
    CHECK(rep.cond3);
    CHECK(rep.overall);
}

TEST_CASE("an over-bound tile violates condition 1") {
    // C binds through a strength-2 south bond plus a matching strength-1 west
    TAS tas = corner_system(2);
    DeterminismReport rep = check_local_determinism(tas, corner_sequence(), {-2, -2, 4, 4}, 0);
    CHECK_FALSE(rep.cond1);
    bool found = false;
    for (const LdViolation& v : rep.violations)
        if (v.condition == 1 && v.p == Point{1, 1}) found = true;
    CHECK(found);
}

TEST_CASE("a duplicated type violates condition 2") {
    CatalogEntry base = fibered_set();
    TAS tas = to_tas(base);
    TileType dup = tas.tiles[tas.tiles.index_of("cm0")];
    dup.name = "cm0-dup";
    tas.tiles.add(dup);
    Window w{-6, -6, 40, 40};
    RunResult r = run(tas, Policy::Lexicographic, w, 0, 100000);
    DeterminismReport rep = check_local_determinism(tas, r, w, 6);
    CHECK_FALSE(rep.cond2);
    bool at_cm0_site = false;
    for (const LdViolation& v : rep.violations)
        if (v.condition == 2 && (v.type_name == "cm0" || v.type_name == "cm0-dup")) at_cm0_site = true;
    CHECK(at_cm0_site);
}

TEST_CASE("local determinism of a fibered run, and the directedness it implies") {
    TAS tas = to_tas(fibered_set());
    Window w{-6, -6, 45, 45};
    RunResult r = run(tas, Policy::Lexicographic, w, 0, 100000);
    CHECK(r.halt == HaltReason::Terminal);
    DeterminismReport rep = check_local_determinism(tas, r, w, 6);
    CHECK(rep.overall);
    ExploreResult ex = explore_terminals(tas, Window{0, 0, 4, 4}, 1000);
    CHECK(ex.terminals.size() == 1);
}

TEST_CASE("strict verdicts") {
    TAS fib = to_tas(fibered_set());
    Window w{-6, -6, 50, 50};
    Assembly fin(fib.tiles, fib.temperature, fib.seed);
    RunResult r = run(fib, Policy::Lexicographic, w, 0, 100000, &fin);
    Verdict v = check_strict(fin.config(), target_oracle("fibered"), w, 6, r.halt);
    CHECK(v.pass);
    CHECK(v.to_text() == "STRICT pass sound=0 complete=0\n");

    // the xor system floods the quadrant: unsound against the standard set
    TAS xo = to_tas(xor_weak_set());
    Window xw{0, 0, 15, 15};
    RunResult xr = run(xo, Policy::Lexicographic, xw, 0, 10000);
    Verdict xv = check_strict(result_of(xo, xr), target_oracle("standard"), xw, 0, xr.halt);
    CHECK_FALSE(xv.pass);
    CHECK(xv.unsound > 0);

    // a lone seed against the singleton target
    Configuration lone;
    lone.cells[{0, 0}] = 0;
    Verdict lv = check_strict(lone, [](Point p) { return p == Point{0, 0}; }, {-3, -3, 3, 3}, 0,
                              HaltReason::Terminal);
    CHECK(lv.pass);
}

TEST_CASE("budget-halted runs are inconclusive") {
    TAS xo = to_tas(xor_weak_set());
    RunResult r = run(xo, Policy::Lexicographic, {0, 0, 15, 15}, 0, 5);
    CHECK(r.halt == HaltReason::Budget);
    CHECK_THROWS_AS(check_strict(result_of(xo, r), target_oracle("standard"), r.window, 0, r.halt),
                    std::invalid_argument);
}

TEST_CASE("weak verdicts") {
    CatalogEntry xo = xor_weak_set();
    TAS tas = to_tas(xo);
    Window w{0, 0, 31, 31};
    RunResult r = run(tas, Policy::Lexicographic, w, 0, 10000);
    Configuration res = result_of(tas, r);

    Verdict v = check_weak(res, tas.tiles, xo.black, target_oracle("standard"), w, 0, r.halt);
    CHECK(v.pass);

    // all types black degenerates to a domain comparison
    std::set<std::string> all;
    for (const TileType& t : tas.tiles) all.insert(t.name);
    Verdict v_all = check_weak(res, tas.tiles, all, target_oracle("standard"), w, 0, r.halt);
    Verdict v_strict = check_strict(res, target_oracle("standard"), w, 0, r.halt);
    CHECK(v_all.pass == v_strict.pass);
    CHECK_FALSE(v_all.pass);

    // empty black set against an empty target
    Verdict v_none = check_weak(res, tas.tiles, {}, [](Point) { return false; }, w, 0, r.halt);
    CHECK(v_none.pass);
}

TEST_CASE("strict pass implies weak pass with every type black") {
    TAS fib = to_tas(fibered_set());
    Window w{-6, -6, 40, 40};
    RunResult r = run(fib, Policy::Lexicographic, w, 0, 100000);
    Configuration res = result_of(fib, r);
    REQUIRE(check_strict(res, target_oracle("fibered"), w, 6, r.halt).pass);
    std::set<std::string> all;
    for (const TileType& t : fib.tiles) all.insert(t.name);
    CHECK(check_weak(res, fib.tiles, all, target_oracle("fibered"), w, 6, r.halt).pass);
}

TEST_CASE("report text formats") {
    TAS tas = corner_system(2);
    DeterminismReport rep = check_local_determinism(tas, corner_sequence(), {-2, -2, 4, 4}, 0);
    std::string text = rep.to_text();
    CHECK(text.find("LD-FAIL 1 1 1") != std::string::npos);
    CHECK(text.find("LD fail") != std::string::npos);
}
