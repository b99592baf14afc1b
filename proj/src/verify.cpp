#include "tiles/verify.hpp"

#include <sstream>
#include <stdexcept>

namespace tiles {

namespace {

struct Replay {
    Configuration result;
    std::unordered_map<Point, size_t, PointHash> index;       // insertion index; seed = 0
    std::unordered_map<Point, SideSets, PointHash> sides;
    std::unordered_map<Point, int64_t, PointHash> bind_sum;   // matched strength at insertion
};

Replay replay(const TAS& tas, const RunResult& seq) {
    Replay r;
    for (const auto& [p, t] : tas.seed.cells) {
        r.result.cells[p] = t;
        r.index[p] = 0;
        r.sides[p] = {};
    }
    size_t step_no = 0;
    for (const RunStep& s : seq.steps) {
        ++step_no;
        if (r.result.occupied(s.p)) throw std::invalid_argument("sequence places an occupied point");
        const TileType& t = tas.tiles[s.type];
        SideSets ss;
        int64_t sum = 0;
        for (Dir d : kDirs) {
            auto it = r.result.cells.find(s.p + delta(d));
            if (it == r.result.cells.end()) continue;
            const Glue& mine = t.glue(d);
            const Glue& theirs = tas.tiles[it->second].glue(opposite(d));
            if (mine == theirs && mine.strength > 0) {
                ss.in[static_cast<size_t>(d)] = true;
                sum += mine.strength;
                r.sides[it->first].out[static_cast<size_t>(opposite(d))] = true;
            }
        }
        if (sum < tas.temperature) throw std::invalid_argument("sequence step is not a stable attachment");
        r.result.cells[s.p] = s.type;
        r.index[s.p] = step_no;
        r.sides[s.p] = ss;
        r.bind_sum[s.p] = sum;
    }
    return r;
}

}  // namespace

std::unordered_map<Point, SideSets, PointHash> side_sets_all(const TAS& tas, const RunResult& seq) {
    return replay(tas, seq).sides;
}

SideSets side_sets(const TAS& tas, const RunResult& seq, Point p) {
    auto sides = side_sets_all(tas, seq);
    auto it = sides.find(p);
    if (it == sides.end()) throw std::invalid_argument("side_sets: point was never placed");
    return it->second;
}

std::string DeterminismReport::to_text() const {
    std::ostringstream os;
    for (const LdViolation& v : violations) {
        os << "LD-FAIL " << v.condition << ' ' << v.p.x << ' ' << v.p.y;
        if (!v.type_name.empty()) os << ' ' << v.type_name;
        os << '\n';
    }
    os << "LD " << (overall ? "pass" : "fail") << '\n';
    return os.str();
}

DeterminismReport check_local_determinism(const TAS& tas, const RunResult& seq, Window window,
                                          int64_t margin) {
    Replay r = replay(tas, seq);
    DeterminismReport rep;
    rep.cond1 = rep.cond2 = rep.cond3 = true;

    std::vector<std::pair<Point, int>> cells = r.result.sorted_cells();

    // condition 1: binding sum at insertion is exactly tau
    for (const auto& [p, type] : cells) {
        if (r.index.at(p) == 0) continue;  // seed
        if (r.bind_sum.at(p) != tas.temperature) {
            rep.cond1 = false;
            rep.violations.push_back({1, p, tas.tiles[type].name});
        }
    }

    // condition 2: with the tile and its out-neighbours removed, no other
    // type reaches tau at that point
    for (const auto& [p, type] : cells) {
        if (r.index.at(p) == 0) continue;
        const SideSets& ss = r.sides.at(p);
        auto removed = [&](Point q) {
            if (q == p) return true;
            for (Dir d : kDirs)
                if (ss.out[static_cast<size_t>(d)] && q == p + delta(d)) return true;
            return false;
        };
        for (int t = 0; t < tas.tiles.size(); ++t) {
            if (t == type) continue;
            int64_t sum = 0;
            for (Dir d : kDirs) {
                Point q = p + delta(d);
                if (removed(q)) continue;
                auto it = r.result.cells.find(q);
                if (it == r.result.cells.end()) continue;
                const Glue& mine = tas.tiles[t].glue(d);
                const Glue& theirs = tas.tiles[it->second].glue(opposite(d));
                if (mine == theirs) sum += mine.strength;
            }
            if (sum >= tas.temperature) {
                rep.cond2 = false;
                rep.violations.push_back({2, p, tas.tiles[t].name});
            }
        }
    }

    // condition 3: no attachment possible inside the margin-shrunk window
    Window inner = window.shrunk(margin);
    std::unordered_set<Point, PointHash> checked;
    for (const auto& [p, type] : cells) {
        for (Dir d : kDirs) {
            Point q = p + delta(d);
            if (!inner.contains(q) || r.result.occupied(q) || !checked.insert(q).second) continue;
            for (int t = 0; t < tas.tiles.size(); ++t) {
                int64_t sum = 0;
                for (Dir d2 : kDirs) {
                    auto it = r.result.cells.find(q + delta(d2));
                    if (it == r.result.cells.end()) continue;
                    const Glue& mine = tas.tiles[t].glue(d2);
                    const Glue& theirs = tas.tiles[it->second].glue(opposite(d2));
                    if (mine == theirs) sum += mine.strength;
                }
                if (sum >= tas.temperature) {
                    rep.cond3 = false;
                    rep.violations.push_back({3, q, tas.tiles[t].name});
                }
            }
        }
    }

    rep.overall = rep.cond1 && rep.cond2 && rep.cond3;
    return rep;
}

std::string Verdict::to_text() const {
    std::ostringstream os;
    os << "STRICT " << (pass ? "pass" : "fail") << " sound=" << unsound << " complete=" << missing
       << '\n';
    return os.str();
}

Verdict check_strict(const Configuration& result, const TargetOracle& target, Window window,
                     int64_t margin, HaltReason halt) {
    if (halt == HaltReason::Budget)
        throw std::invalid_argument("check_strict: budget-halted run is inconclusive");
    Verdict v;
    for (const auto& [p, t] : result.cells)
        if (!target(p)) ++v.unsound;
    Window inner = window.shrunk(margin);
    for (int64_t y = inner.y0; y <= inner.y1; ++y)
        for (int64_t x = inner.x0; x <= inner.x1; ++x)
            if (target({x, y}) && !result.occupied({x, y})) ++v.missing;
    v.pass = v.unsound == 0 && v.missing == 0;
    return v;
}

Verdict check_weak(const Configuration& result, const TileSet& tiles,
                   const std::set<std::string>& black_types, const TargetOracle& target,
                   Window window, int64_t margin, HaltReason halt) {
    if (halt == HaltReason::Budget)
        throw std::invalid_argument("check_weak: budget-halted run is inconclusive");
    Verdict v;
    Window inner = window.shrunk(margin);
    for (const auto& [p, t] : result.cells) {
        if (!inner.contains(p)) continue;
        bool black = black_types.count(tiles[t].name) != 0;
        if (black && !target(p)) ++v.unsound;
    }
    for (int64_t y = inner.y0; y <= inner.y1; ++y)
        for (int64_t x = inner.x0; x <= inner.x1; ++x) {
            if (!target({x, y})) continue;
            Point p{x, y};
            bool black = result.occupied(p) && black_types.count(tiles[result.at(p)].name) != 0;
            if (!black) ++v.missing;
        }
    v.pass = v.unsound == 0 && v.missing == 0;
    return v;
}

}  // namespace tiles
