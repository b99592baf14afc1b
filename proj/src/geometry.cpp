#include "tiles/geometry.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "tiles/sierpinski.hpp"

namespace tiles {

const char* dir_name(Dir d) {
    switch (d) {
        case Dir::N: return "N";
        case Dir::E: return "E";
        case Dir::S: return "S";
        case Dir::W: return "W";
    }
    return "?";
}

std::optional<Dir> dir_from_name(char c) {
    switch (c) {
        case 'N': return Dir::N;
        case 'E': return Dir::E;
        case 'S': return Dir::S;
        case 'W': return Dir::W;
    }
    return std::nullopt;
}

std::vector<Point> PointSet::sorted() const {
    std::vector<Point> out(set_.begin(), set_.end());
    std::sort(out.begin(), out.end());
    return out;
}

Box PointSet::bbox() const {
    if (set_.empty()) return {};
    Box b{std::numeric_limits<int64_t>::max(), std::numeric_limits<int64_t>::max(),
          std::numeric_limits<int64_t>::min(), std::numeric_limits<int64_t>::min()};
    for (Point p : set_) {
        b.x0 = std::min(b.x0, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.x1 = std::max(b.x1, p.x);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

GridGraph full_grid_graph(const PointSet& points) {
    GridGraph g;
    g.vertices = points;
    for (Point p : points) {
        // one direction per axis avoids duplicates
        Point e = p + delta(Dir::E);
        Point n = p + delta(Dir::N);
        if (points.contains(e)) g.edges.emplace_back(p, e);
        if (points.contains(n)) g.edges.emplace_back(p, n);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

MinCutResult min_binding_cut(const BindingGraph& bg) {
    std::vector<Point> verts = bg.vertices.sorted();
    const size_t n = verts.size();
    MinCutResult result;
    if (n < 2) return result;  // no cut exists

    std::unordered_map<Point, int, PointHash> idx;
    for (size_t i = 0; i < n; ++i) idx[verts[i]] = static_cast<int>(i);

    std::vector<std::vector<int64_t>> w(n, std::vector<int64_t>(n, 0));
    for (size_t e = 0; e < bg.edges.size(); ++e) {
        int a = idx.at(bg.edges[e].first);
        int b = idx.at(bg.edges[e].second);
        w[a][b] += bg.weights[e];
        w[b][a] += bg.weights[e];
    }

    // groups[i]: original vertices merged into supervertex i
    std::vector<std::vector<int>> groups(n);
    for (size_t i = 0; i < n; ++i) groups[i] = {static_cast<int>(i)};
    std::vector<bool> merged(n, false);

    int64_t best = std::numeric_limits<int64_t>::max();
    std::vector<int> best_side;

    size_t active = n;
    while (active > 1) {
        // maximum adjacency search
        std::vector<int64_t> conn(n, 0);
        std::vector<bool> added(n, false);
        int prev = -1, last = -1;
        for (size_t step = 0; step < active; ++step) {
            int pick = -1;
            for (size_t v = 0; v < n; ++v) {
                if (merged[v] || added[v]) continue;
                if (pick == -1 || conn[v] > conn[pick]) pick = static_cast<int>(v);
            }
            added[pick] = true;
            prev = last;
            last = pick;
            for (size_t v = 0; v < n; ++v)
                if (!merged[v] && !added[v]) conn[v] += w[pick][v];
        }
        int64_t phase_cut = conn[last];
        if (phase_cut < best) {
            best = phase_cut;
            best_side = groups[last];
        }
        // merge last into prev
        for (size_t v = 0; v < n; ++v) {
            if (merged[v] || static_cast<int>(v) == last || static_cast<int>(v) == prev) continue;
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
        merged[last] = true;
        --active;
    }

    result.finite = true;
    result.value = best;
    std::vector<bool> in_a(n, false);
    for (int v : best_side) in_a[v] = true;
    for (size_t v = 0; v < n; ++v)
        (in_a[v] ? result.witness.side_a : result.witness.side_b).push_back(verts[v]);
    return result;
}

namespace {

std::unordered_map<Point, std::vector<Point>, PointHash> adjacency(const GridGraph& g) {
    std::unordered_map<Point, std::vector<Point>, PointHash> adj;
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

DSubtree d_subtree(const GridGraph& graph, const PointSet& d, Point r) {
    if (d.contains(r)) throw std::invalid_argument("d_subtree: root lies in D");
    if (!graph.vertices.contains(r)) throw std::invalid_argument("d_subtree: root not a vertex");

    auto adj = adjacency(graph);

    // vertices reachable from D with r deleted
    PointSet reached;
    std::deque<Point> queue;
    for (Point p : d) {
        if (!graph.vertices.contains(p)) throw std::invalid_argument("d_subtree: D not a subset of vertices");
        reached.insert(p);
        queue.push_back(p);
    }
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        auto it = adj.find(p);
        if (it == adj.end()) continue;
        for (Point q : it->second) {
            if (q == r || reached.contains(q)) continue;
            reached.insert(q);
            queue.push_back(q);
        }
    }

    DSubtree out;
    for (Point p : graph.vertices)
        if (!reached.contains(p)) out.vertices.insert(p);
    out.vertices.insert(r);

    // induced edge count + connectivity from r
    size_t edge_count = 0;
    for (const auto& [a, b] : graph.edges)
        if (out.vertices.contains(a) && out.vertices.contains(b)) ++edge_count;

    PointSet seen;
    seen.insert(r);
    queue.clear();
    queue.push_back(r);
    int64_t max_dist = 0;
    std::unordered_map<Point, int64_t, PointHash> dist;
    dist[r] = 0;
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        auto it = adj.find(p);
        if (it == adj.end()) continue;
        for (Point q : it->second) {
            if (!out.vertices.contains(q) || seen.contains(q)) continue;
            seen.insert(q);
            dist[q] = dist[p] + 1;
            max_dist = std::max(max_dist, dist[q]);
            queue.push_back(q);
        }
    }

    bool connected = seen.size() == out.vertices.size();
    out.is_tree = connected && edge_count + 1 == out.vertices.size();
    if (out.is_tree) out.depth = max_dist + 1;  // count vertices, not edges
    return out;
}

SierpinskiWitness sierpinski_witness(int k) {
    if (k < 0 || k > 14) throw std::invalid_argument("sierpinski_witness: k out of range");
    SierpinskiWitness w;
    int64_t p2k = int64_t{1} << k;
    w.root = {2 * p2k, p2k};
    w.expected_depth = p2k;
    int64_t hi = 4 * p2k - 1;
    for (int64_t a = 2 * p2k; a <= hi; ++a)
        for (int64_t b = p2k; a + b <= hi; ++b)
            if (in_standard({a, b})) w.points.insert({a, b});
    return w;
}

}  // namespace tiles
