#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tiles/geometry.hpp"

namespace tiles {

struct Glue {
    std::string color;  // empty = null bond
    int strength = 0;
    bool operator==(const Glue&) const = default;
};

struct TileType {
    std::string name;
    std::array<Glue, 4> side{};  // indexed by Dir
    std::string label;

    const Glue& glue(Dir d) const { return side[static_cast<size_t>(d)]; }
    Glue& glue(Dir d) { return side[static_cast<size_t>(d)]; }
};

class TileSet {
  public:
    int add(TileType t);  // throws on duplicate name
    int index_of(const std::string& name) const;  // -1 when absent
    const TileType& operator[](int i) const { return types_[static_cast<size_t>(i)]; }
    int size() const { return static_cast<int>(types_.size()); }
    auto begin() const { return types_.begin(); }
    auto end() const { return types_.end(); }

  private:
    std::vector<TileType> types_;
    std::unordered_map<std::string, int> index_;
};

struct Configuration {
    std::unordered_map<Point, int, PointHash> cells;  // type index per point

    bool occupied(Point p) const { return cells.count(p) != 0; }
    int at(Point p) const;  // throws when empty
    size_t size() const { return cells.size(); }
    PointSet domain() const;
    std::vector<std::pair<Point, int>> sorted_cells() const;
    bool operator==(const Configuration&) const = default;
};

// Bonds form between abutting sides with equal colour, equal strength and
// strength > 0.
bool glues_bond(const Glue& a, const Glue& b);
BindingGraph binding_graph_of(const Configuration& config, const TileSet& tiles);

using TargetOracle = std::function<bool(Point)>;

struct Window {
    int64_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    Window shrunk(int64_t m) const { return {x0 + m, y0 + m, x1 - m, y1 - m}; }
};

struct FrontierEntry {
    Point p;
    int type = 0;
};

// A temperature-tau stable configuration with an incrementally maintained
// frontier. Frontier iteration order is (y, x, type name), which the
// lexicographic run policy relies on.
class Assembly {
  public:
    Assembly(const TileSet& tiles, int temperature, Configuration seed);

    const Configuration& config() const { return config_; }
    const TileSet& tiles() const { return *tiles_; }
    int temperature() const { return temperature_; }

    const std::set<std::pair<std::tuple<int64_t, int64_t, int>, int>>& frontier_keys() const {
        return frontier_;
    }
    std::vector<FrontierEntry> frontier() const;
    std::vector<FrontierEntry> frontier_in(const Window& w) const;
    bool in_frontier(Point p, int type) const;

    // Matched glue strength a tile of `type` would bind with at p.
    int64_t candidate_strength(Point p, int type) const;

    void attach(Point p, int type);  // throws unless (p, type) is in the frontier

    // Full recomputation, used as the oracle for the incremental updates.
    std::vector<FrontierEntry> recompute_frontier_full() const;

  private:
    void refresh_candidates(Point p);

    const TileSet* tiles_;
    int temperature_;
    Configuration config_;
    std::vector<int> name_rank_;  // type index -> rank in name order
    std::set<std::pair<std::tuple<int64_t, int64_t, int>, int>> frontier_;
};

struct TAS {
    TileSet tiles;
    Configuration seed;
    int temperature = 2;
};

enum class Policy { Lexicographic, SeededRandom };

const char* policy_name(Policy p);
std::optional<Policy> policy_from_name(const std::string& s);

enum class HaltReason { Terminal, Budget };

struct RunStep {
    Point p;
    int type = 0;
};

// An assembly sequence from the seed, with the inputs needed to replay it.
struct RunResult {
    uint64_t rng_seed = 0;
    Policy policy = Policy::Lexicographic;
    Window window{};
    std::vector<RunStep> steps;
    HaltReason halt = HaltReason::Terminal;
};

RunResult run(const TAS& tas, Policy policy, Window window, uint64_t rng_seed,
              int64_t max_steps, Assembly* final_assembly = nullptr);

// Replays a sequence step by step (validating each attachment) and returns
// the resulting configuration.
Configuration result_of(const TAS& tas, const RunResult& seq);

struct ExploreResult {
    std::vector<Configuration> terminals;
    int64_t truncated = 0;  // assemblies stopped by the size bound
    int64_t states = 0;
};

// Exhaustive closure over single-tile extensions, deduplicated by
// configuration. Throws when the state count exceeds `state_cap`.
ExploreResult explore_terminals(const TAS& tas, std::optional<Window> window,
                                int64_t size_bound, int64_t state_cap = 500000);

}  // namespace tiles
