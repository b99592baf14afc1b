#include "tiles/tam.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace tiles {

int TileSet::add(TileType t) {
    if (index_.count(t.name)) throw std::invalid_argument("duplicate tile name: " + t.name);
    int idx = static_cast<int>(types_.size());
    index_[t.name] = idx;
    types_.push_back(std::move(t));
    return idx;
}

int TileSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Configuration::at(Point p) const {
    auto it = cells.find(p);
    if (it == cells.end()) throw std::out_of_range("configuration: empty point");
    return it->second;
}

PointSet Configuration::domain() const {
    PointSet s;
    for (const auto& [p, t] : cells) s.insert(p);
    return s;
}

std::vector<std::pair<Point, int>> Configuration::sorted_cells() const {
    std::vector<std::pair<Point, int>> out(cells.begin(), cells.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool glues_bond(const Glue& a, const Glue& b) {
    return a.strength > 0 && a.strength == b.strength && a.color == b.color;
}

BindingGraph binding_graph_of(const Configuration& config, const TileSet& tiles) {
    BindingGraph bg;
    for (const auto& [p, t] : config.cells) {
        if (t < 0 || t >= tiles.size()) throw std::invalid_argument("configuration names unknown type");
        bg.vertices.insert(p);
        for (Dir d : {Dir::E, Dir::N}) {
            Point q = p + delta(d);
            auto it = config.cells.find(q);
            if (it == config.cells.end()) continue;
            const Glue& g1 = tiles[t].glue(d);
            const Glue& g2 = tiles[it->second].glue(opposite(d));
            if (glues_bond(g1, g2)) {
                bg.edges.emplace_back(std::min(p, q), std::max(p, q));
                bg.weights.push_back(g1.strength);
            }
        }
    }
    return bg;
}

Assembly::Assembly(const TileSet& tiles, int temperature, Configuration seed)
    : tiles_(&tiles), temperature_(temperature), config_(std::move(seed)) {
    MinCutResult mc = min_binding_cut(binding_graph_of(config_, tiles));
    if (!mc.stable(temperature_)) throw std::invalid_argument("seed configuration is not stable");

    std::vector<std::pair<std::string, int>> names;
    for (int i = 0; i < tiles.size(); ++i) names.emplace_back(tiles[i].name, i);
    std::sort(names.begin(), names.end());
    name_rank_.assign(names.size(), 0);
    for (size_t r = 0; r < names.size(); ++r) name_rank_[static_cast<size_t>(names[r].second)] = static_cast<int>(r);

    for (const auto& [p, t] : config_.cells)
        for (Dir d : kDirs) refresh_candidates(p + delta(d));
}


int64_t Assembly::candidate_strength(Point p, int type) const {
    int64_t sum = 0;
    const TileType& t = (*tiles_)[type];
    for (Dir d : kDirs) {
        auto it = config_.cells.find(p + delta(d));
        if (it == config_.cells.end()) continue;
        const Glue& mine = t.glue(d);
        const Glue& theirs = (*tiles_)[it->second].glue(opposite(d));
        if (mine == theirs) sum += mine.strength;
    }
    return sum;
}

void Assembly::refresh_candidates(Point p) {
    for (int t = 0; t < tiles_->size(); ++t)
        frontier_.erase({{p.y, p.x, name_rank_[static_cast<size_t>(t)]}, t});
    if (config_.occupied(p)) return;
    for (int t = 0; t < tiles_->size(); ++t)
        if (candidate_strength(p, t) >= temperature_)
            frontier_.insert({{p.y, p.x, name_rank_[static_cast<size_t>(t)]}, t});
}

std::vector<FrontierEntry> Assembly::frontier() const {
    std::vector<FrontierEntry> out;
    out.reserve(frontier_.size());
    for (const auto& [key, t] : frontier_) out.push_back({{std::get<1>(key), std::get<0>(key)}, t});
    return out;
}

std::vector<FrontierEntry> Assembly::frontier_in(const Window& w) const {
    std::vector<FrontierEntry> out;
    for (const auto& [key, t] : frontier_) {
        Point p{std::get<1>(key), std::get<0>(key)};
        if (w.contains(p)) out.push_back({p, t});
    }
    return out;
}

bool Assembly::in_frontier(Point p, int type) const {
    return frontier_.count({{p.y, p.x, name_rank_[static_cast<size_t>(type)]}, type}) != 0;
}

void Assembly::attach(Point p, int type) {
    if (config_.occupied(p)) throw std::invalid_argument("attach: point already occupied");
    if (!in_frontier(p, type)) throw std::invalid_argument("attach: unstable attachment");
    config_.cells[p] = type;
    refresh_candidates(p);  // clears the now-occupied point
    for (Dir d : kDirs) refresh_candidates(p + delta(d));
}

std::vector<FrontierEntry> Assembly::recompute_frontier_full() const {
    std::set<std::pair<std::tuple<int64_t, int64_t, int>, int>> fresh;
    for (const auto& [p, t] : config_.cells) {
        for (Dir d : kDirs) {
            Point q = p + delta(d);
            if (config_.occupied(q)) continue;
            for (int c = 0; c < tiles_->size(); ++c)
                if (candidate_strength(q, c) >= temperature_)
                    fresh.insert({{q.y, q.x, name_rank_[static_cast<size_t>(c)]}, c});
        }
    }
    std::vector<FrontierEntry> out;
    for (const auto& [key, t] : fresh) out.push_back({{std::get<1>(key), std::get<0>(key)}, t});
    return out;
}

const char* policy_name(Policy p) {
    return p == Policy::Lexicographic ? "lex" : "random";
}

std::optional<Policy> policy_from_name(const std::string& s) {
    if (s == "lex" || s == "lexicographic") return Policy::Lexicographic;
    if (s == "random" || s == "seeded-random") return Policy::SeededRandom;
    return std::nullopt;
}

RunResult run(const TAS& tas, Policy policy, Window window, uint64_t rng_seed,
              int64_t max_steps, Assembly* final_assembly) {
    for (const auto& [p, t] : tas.seed.cells)
        if (!window.contains(p)) throw std::invalid_argument("run: seed outside window");

    Assembly assembly(tas.tiles, tas.temperature, tas.seed);
    std::mt19937_64 rng(rng_seed);

    RunResult result;
    result.rng_seed = rng_seed;
    result.policy = policy;
    result.window = window;
    result.halt = HaltReason::Terminal;

    for (int64_t step = 0; step < max_steps; ++step) {
        std::vector<FrontierEntry> inside = assembly.frontier_in(window);
        if (inside.empty()) {
            result.halt = HaltReason::Terminal;
            if (final_assembly) *final_assembly = assembly;
            return result;
        }
        const FrontierEntry& pick = policy == Policy::Lexicographic
            ? inside.front()
            : inside[static_cast<size_t>(rng() % inside.size())];
        assembly.attach(pick.p, pick.type);
        result.steps.push_back({pick.p, pick.type});
    }
    result.halt = assembly.frontier_in(window).empty() ? HaltReason::Terminal : HaltReason::Budget;
    if (final_assembly) *final_assembly = assembly;
    return result;
}

Configuration result_of(const TAS& tas, const RunResult& seq) {
    Assembly assembly(tas.tiles, tas.temperature, tas.seed);
    for (const RunStep& s : seq.steps) assembly.attach(s.p, s.type);
    return assembly.config();
}

namespace {

uint64_t config_hash(const std::vector<std::pair<Point, int>>& cells) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const auto& [p, t] : cells) {
        mix(static_cast<uint64_t>(p.x));
        mix(static_cast<uint64_t>(p.y));
        mix(static_cast<uint64_t>(t));
    }
    return h;
}

}  // namespace

ExploreResult explore_terminals(const TAS& tas, std::optional<Window> window,
                                int64_t size_bound, int64_t state_cap) {
    ExploreResult out;
    std::unordered_set<uint64_t> seen;
    std::unordered_set<uint64_t> terminal_hashes;
    std::vector<Assembly> stack;
    stack.emplace_back(tas.tiles, tas.temperature, tas.seed);
    seen.insert(config_hash(stack.back().config().sorted_cells()));

    while (!stack.empty()) {
        Assembly cur = std::move(stack.back());
        stack.pop_back();
        ++out.states;
        if (out.states > state_cap) throw std::runtime_error("explore_terminals: state bound exceeded");

        std::vector<FrontierEntry> ext = window ? cur.frontier_in(*window) : cur.frontier();
        if (ext.empty()) {
            uint64_t h = config_hash(cur.config().sorted_cells());
            if (terminal_hashes.insert(h).second) out.terminals.push_back(cur.config());
            continue;
        }
        if (static_cast<int64_t>(cur.config().size()) >= size_bound) {
            ++out.truncated;
            continue;
        }
        for (const FrontierEntry& e : ext) {
            Assembly child = cur;
            child.attach(e.p, e.type);
            uint64_t h = config_hash(child.config().sorted_cells());
            if (seen.insert(h).second) stack.push_back(std::move(child));
        }
    }
    return out;
}

}  // namespace tiles
