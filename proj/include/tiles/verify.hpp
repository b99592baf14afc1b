#pragma once

#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tiles/tam.hpp"

namespace tiles {

struct SideSets {
    std::array<bool, 4> in{};   // directions the tile initially bound through
    std::array<bool, 4> out{};  // directions later tiles bound through
};

// Side sets for every placed point of a sequence, reconstructed by replay.
std::unordered_map<Point, SideSets, PointHash> side_sets_all(const TAS& tas, const RunResult& seq);
SideSets side_sets(const TAS& tas, const RunResult& seq, Point p);  // throws on unplaced point

struct LdViolation {
    int condition = 0;
    Point p;
    std::string type_name;  // competing type for condition 2
};

struct DeterminismReport {
    bool cond1 = false;  // every non-seed tile binds with total strength exactly tau
    bool cond2 = false;  // no competing type fits after removing the tile and its out-neighbours
    bool cond3 = false;  // result is terminal inside the margin-shrunk window
    bool overall = false;
    std::vector<LdViolation> violations;
    std::string to_text() const;
};

DeterminismReport check_local_determinism(const TAS& tas, const RunResult& seq, Window window,
                                          int64_t margin);

struct Verdict {
    bool pass = false;
    int64_t unsound = 0;  // placed points outside the target
    int64_t missing = 0;  // target points inside the shrunk window left empty
    std::string to_text() const;
};

// Soundness over all placements, completeness over the margin-shrunk window.
// Budget-halted runs are rejected as inconclusive.
Verdict check_strict(const Configuration& result, const TargetOracle& target, Window window,
                     int64_t margin, HaltReason halt);

// Points carrying black-labelled types must equal the target within the
// margin-shrunk window.
Verdict check_weak(const Configuration& result, const TileSet& tiles,
                   const std::set<std::string>& black_types, const TargetOracle& target,
                   Window window, int64_t margin, HaltReason halt);

}  // namespace tiles
