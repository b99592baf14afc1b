#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace tiles {

struct Point {
    int64_t x = 0;
    int64_t y = 0;
    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(int64_t c, Point p) { return {c * p.x, c * p.y}; }
    auto operator<=>(const Point&) const = default;
};

struct PointHash {
    size_t operator()(const Point& p) const noexcept {
        uint64_t h = static_cast<uint64_t>(p.x) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<uint64_t>(p.y) + 0xbf58476d1ce4e5b9ull + (h << 6) + (h >> 2);
        h ^= h >> 31;
        h *= 0x94d049bb133111ebull;
        h ^= h >> 29;
        return static_cast<size_t>(h);
    }
};

// The four unit vectors of the lattice. Negation is an involution.
enum class Dir : uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr std::array<Dir, 4> kDirs{Dir::N, Dir::E, Dir::S, Dir::W};

constexpr Point delta(Dir d) {
    switch (d) {
        case Dir::N: return {0, 1};
        case Dir::E: return {1, 0};
        case Dir::S: return {0, -1};
        case Dir::W: return {-1, 0};
    }
    return {};
}

constexpr Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }

const char* dir_name(Dir d);
std::optional<Dir> dir_from_name(char c);

struct Box {
    int64_t x0 = 0, y0 = 0, x1 = -1, y1 = -1;  // empty when x0 > x1
    bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    bool empty() const { return x0 > x1 || y0 > y1; }
    Box shrunk(int64_t m) const { return {x0 + m, y0 + m, x1 - m, y1 - m}; }
};

// Sparse set of lattice points.
class PointSet {
  public:
    PointSet() = default;
    PointSet(std::initializer_list<Point> pts) : set_(pts) {}

    bool contains(Point p) const { return set_.count(p) != 0; }
    void insert(Point p) { set_.insert(p); }
    size_t size() const { return set_.size(); }
    bool empty() const { return set_.empty(); }

    void unite(const PointSet& other) { set_.insert(other.set_.begin(), other.set_.end()); }

    PointSet translated(Point v) const {
        PointSet out;
        out.set_.reserve(set_.size());
        for (Point p : set_) out.set_.insert(p + v);
        return out;
    }

    // A + c*B, elementwise sums with every point of `other` scaled by c.
    PointSet plus_scaled(int64_t c, const PointSet& other) const {
        PointSet out;
        for (Point p : set_)
            for (Point q : other.set_) out.set_.insert(p + c * q);
        return out;
    }

    std::vector<Point> sorted() const;
    Box bbox() const;

    bool operator==(const PointSet& other) const { return set_ == other.set_; }

    auto begin() const { return set_.begin(); }
    auto end() const { return set_.end(); }

  private:
    std::unordered_set<Point, PointHash> set_;
};

struct GridGraph {
    PointSet vertices;
    std::vector<std::pair<Point, Point>> edges;  // canonical: first < second
};

// Every edge joins lattice neighbours; weights are strictly positive.
struct BindingGraph {
    PointSet vertices;
    std::vector<std::pair<Point, Point>> edges;
    std::vector<int64_t> weights;  // parallel to edges
};

struct Cut {
    std::vector<Point> side_a;
    std::vector<Point> side_b;
};

struct MinCutResult {
    bool finite = false;  // false: no cut exists (fewer than two vertices)
    int64_t value = 0;
    Cut witness;
    bool stable(int tau) const { return !finite || value >= tau; }
};

// Edges are exactly all pairs of points at Manhattan distance 1.
GridGraph full_grid_graph(const PointSet& points);

// Exact global minimum cut (sum of crossing strengths), Stoer-Wagner.
MinCutResult min_binding_cut(const BindingGraph& bg);

struct DSubtree {
    bool is_tree = false;
    PointSet vertices;
    std::optional<int64_t> depth;  // vertices on the longest root-to-leaf branch
};

// All vertices whose every path to D passes through r (computed by deleting r),
// plus r itself; reports whether the induced subgraph is a tree and its depth.
DSubtree d_subtree(const GridGraph& graph, const PointSet& d, Point r);

struct SierpinskiWitness {
    Point root;
    PointSet points;
    int64_t expected_depth = 0;
};

// The finite subtree witness rooted at (2^(k+1), 2^k).
SierpinskiWitness sierpinski_witness(int k);

}  // namespace tiles
