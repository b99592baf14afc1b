#include "tiles/sierpinski.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace tiles {

bool in_standard(Point p) {
    if (p.x < 0 || p.y < 0) return false;
    return (static_cast<uint64_t>(p.x) & static_cast<uint64_t>(p.y)) == 0;
}

PointSet standard_stage(int i) {
    if (i < 0 || i > 20) throw std::invalid_argument("standard_stage: i out of range");
    PointSet v{{1, 0}, {0, 1}};
    PointSet s{{0, 0}};
    for (int k = 0; k < i; ++k) s.unite(s.plus_scaled(int64_t{1} << k, v));
    return s;
}

static int64_t pow_i64(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int64_t edge_len(int i) {
    if (i < -1 || i > 60) throw std::invalid_argument("edge_len: i out of range");
    return 3 * (int64_t{1} << (i + 1)) - 1;
}

CountingTriple counting(int i) {
    if (i < 0 || i > 36) throw std::invalid_argument("counting: i out of range");
    CountingTriple c;
    c.l = edge_len(i);
    c.f = 3 * ((int64_t{1} << (i + 3)) - i - 5);
    int64_t inner = pow_i64(3, i + 3) - (int64_t{1} << (i + 5)) + 2 * int64_t{i} + 11;
    if (inner % 2 != 0) throw std::logic_error("counting: odd intermediate");
    c.t = 3 * (inner / 2);
    return c;
}

CountingTriple counting_by_recurrence(int i) {
    if (i < 0 || i > 36) throw std::invalid_argument("counting_by_recurrence: i out of range");
    CountingTriple c{5, 9, 9};
    for (int k = 0; k < i; ++k) {
        int64_t l_next = 2 * c.l + 1;
        int64_t f_next = c.f + 2 * l_next - 1;
        int64_t t_next = 3 * c.t + 2 * c.f;
        c = {l_next, f_next, t_next};
    }
    return c;
}

int ruler(int64_t j) {
    if (j <= 0) throw std::invalid_argument("ruler: argument must be positive");
    int r = 0;
    while ((j & 1) == 0) {
        j >>= 1;
        ++r;
    }
    return r;
}

namespace {
std::vector<int64_t> g_theta{0, 2};  // 1-based, g_theta[j] = theta(j)
std::mutex g_theta_mutex;
}  // namespace

int64_t theta(int64_t j) {
    if (j <= 0) throw std::invalid_argument("theta: argument must be positive");
    std::lock_guard<std::mutex> lock(g_theta_mutex);
    while (static_cast<int64_t>(g_theta.size()) <= j)
        g_theta.push_back(g_theta.back() + ruler(static_cast<int64_t>(g_theta.size())) + 2);
    return g_theta[j];
}

int64_t ruler_prefix_sum(int64_t n) {
    int64_t s = 0;
    for (int64_t j = 1; j <= n; ++j) s += ruler(j);
    return s;
}

bool counter_height_identity(int i) {
    if (i < 0 || i > 20) throw std::invalid_argument("counter_height_identity: i out of range");
    int64_t p = int64_t{1} << (i + 1);
    int64_t lhs = p;
    for (int64_t j = 1; j < p; ++j) lhs += ruler(j) + 1;
    return lhs == edge_len(i) - i - 2;
}

FiberedStage fibered_stage(int i) {
    if (i < 0 || i > 9) throw std::invalid_argument("fibered_stage: i out of range");
    FiberedStage s;
    s.t = standard_stage(2);
    for (int64_t k = -1; k <= 3; ++k) {
        s.f.insert({-1, k});
        s.f.insert({k, -1});
    }
    PointSet v{{1, 0}, {0, 1}};
    for (int k = 0; k < i; ++k) {
        int64_t l = edge_len(k);
        PointSet tf = s.t;
        tf.unite(s.f);
        s.t.unite(tf.plus_scaled(l, v));
        int64_t l_next = edge_len(k + 1);
        for (int64_t c = -k - 2; c <= l_next - k - 3; ++c) {
            s.f.insert({-k - 2, c});
            s.f.insert({c, -k - 2});
        }
    }
    return s;
}

namespace {

PointSet rect(int64_t x0, int64_t y0, int64_t x1, int64_t y1) {
    PointSet s;
    for (int64_t x = x0; x <= x1; ++x)
        for (int64_t y = y0; y <= y1; ++y) s.insert({x, y});
    return s;
}

}  // namespace

BarDecomposition bars(int i) {
    if (i < -1 || i > 12) throw std::invalid_argument("bars: i out of range");
    BarDecomposition b;
    b.square = rect(-i - 1, -i - 1, 0, 0);
    b.x_bar = rect(1, -i - 1, edge_len(i) - i - 2, 0);
    b.y_bar = rect(-i - 1, 1, 0, edge_len(i) - i - 2);
    return b;
}

PointSet theta_bar_closure(Axis axis, int i) {
    static std::map<std::pair<int, int>, PointSet> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);

    std::vector<std::pair<int, int>> todo{{static_cast<int>(axis), i}};
    // resolve dependencies bottom-up through the cache
    while (!todo.empty()) {
        auto [ax, k] = todo.back();
        if (cache.count({ax, k})) {
            todo.pop_back();
            continue;
        }
        if (k < 0) {
            cache[{ax, k}] = ax == static_cast<int>(Axis::X) ? PointSet{{1, 0}} : PointSet{{0, 1}};
            todo.pop_back();
            continue;
        }
        bool ready = true;
        for (int64_t j = 1; j < (int64_t{1} << (k + 1)); ++j) {
            std::pair<int, int> dep{1 - ax, ruler(j) - 1};
            if (!cache.count(dep)) {
                todo.push_back(dep);
                ready = false;
            }
        }
        if (!ready) continue;
        BarDecomposition b = bars(k);
        PointSet out = ax == static_cast<int>(Axis::X) ? b.x_bar : b.y_bar;
        for (int64_t j = 1; j < (int64_t{1} << (k + 1)); ++j) {
            const PointSet& sub = cache.at({1 - ax, ruler(j) - 1});
            Point shift = ax == static_cast<int>(Axis::X) ? Point{theta(j), 0} : Point{0, theta(j)};
            out.unite(sub.translated(shift));
        }
        cache[{ax, k}] = std::move(out);
        todo.pop_back();
    }
    return cache.at({static_cast<int>(axis), i});
}

PointSet axis_segment(Axis axis, int n) {
    if (n < -1 || n > 12) throw std::invalid_argument("axis_segment: n out of range");
    PointSet out = axis == Axis::X ? PointSet{{1, 0}, {2, 0}, {3, 0}} : PointSet{{0, 1}, {0, 2}, {0, 3}};
    for (int i = 0; i <= n; ++i) {
        BarDecomposition b = bars(i);
        Point shift = axis == Axis::X ? Point{edge_len(i), 0} : Point{0, edge_len(i)};
        out.unite(b.square.translated(shift));
        out.unite((axis == Axis::X ? b.x_bar : b.y_bar).translated(shift));
    }
    return out;
}

PointSet theta_axis_closure(Axis axis, int n) {
    PointSet out = axis_segment(axis, n);
    Axis other = axis == Axis::X ? Axis::Y : Axis::X;
    for (int64_t j = 1; j < (int64_t{1} << (n + 2)); ++j) {
        Point shift = axis == Axis::X ? Point{theta(j), 0} : Point{0, theta(j)};
        out.unite(theta_bar_closure(other, ruler(j) - 1).translated(shift));
    }
    return out;
}

int64_t axis_width_at(int64_t y) {
    if (y < 1) return 0;
    if (y <= 3) return 1;
    for (int i = 0;; ++i) {
        int64_t li = edge_len(i);
        if (y < li - i - 1) return i + 1;                 // below square i: previous band
        if (y <= edge_len(i + 1) - i - 3) return i + 2;   // square i or bar i
    }
}

bool in_y_axis(Point p) {
    if (p.y < 1 || p.x > 0) return false;
    return -p.x < axis_width_at(p.y);
}

bool in_x_axis(Point p) { return in_y_axis({p.y, p.x}); }

namespace {

// extent of a bar closure along its long direction, for band scanning
int64_t closure_shadow(int k) { return k < 0 ? 0 : edge_len(k) - k - 2; }

// Is q in the theta-closure of the bar with the given axis and index?
// X bars span [1, l(i)-i-2] x [-i-1, 0] with subs hanging north at theta
// points; Y bars are the transpose with subs hanging east.
bool in_bar_closure_pt(Axis axis, int i, Point q) {
    if (i < 0) return axis == Axis::X ? q == Point{1, 0} : q == Point{0, 1};
    int64_t len = edge_len(i) - i - 2;
    if (axis == Axis::X) {
        if (q.x >= 1 && q.x <= len && q.y >= -i - 1 && q.y <= 0) return true;
        if (q.y < 1 || q.x < 2) return false;
        for (int64_t j = 1; j < (int64_t{1} << (i + 1)); ++j) {
            int64_t th = theta(j);
            int r = ruler(j);
            if (th - r > q.x) break;
            if (q.x <= th + closure_shadow(r - 1) &&
                in_bar_closure_pt(Axis::Y, r - 1, q - Point{th, 0}))
                return true;
        }
        return false;
    }
    if (q.y >= 1 && q.y <= len && q.x >= -i - 1 && q.x <= 0) return true;
    if (q.x < 1 || q.y < 2) return false;
    for (int64_t j = 1; j < (int64_t{1} << (i + 1)); ++j) {
        int64_t th = theta(j);
        int r = ruler(j);
        if (th - r > q.y) break;
        if (q.y <= th + closure_shadow(r - 1) &&
            in_bar_closure_pt(Axis::X, r - 1, q - Point{0, th}))
            return true;
    }
    return false;
}

}  // namespace

bool in_fibered(Point p) {
    if (p.x == 0 && p.y == 0) return true;
    if (p.x <= 0 && p.y <= 0) return false;
    if (p.x <= 0) return in_y_axis(p);
    if (p.y <= 0) return in_x_axis(p);
    // interior: bars hanging north off the x-axis (bands in x)
    for (int64_t j = 1;; ++j) {
        int64_t th = theta(j);
        int r = ruler(j);
        if (th - r > p.x) break;
        if (p.x <= th + closure_shadow(r - 1) &&
            in_bar_closure_pt(Axis::Y, r - 1, p - Point{th, 0}))
            return true;
    }
    // bars hanging east off the y-axis (bands in y)
    for (int64_t j = 1;; ++j) {
        int64_t th = theta(j);
        int r = ruler(j);
        if (th - r > p.y) break;
        if (p.y <= th + closure_shadow(r - 1) &&
            in_bar_closure_pt(Axis::X, r - 1, p - Point{0, th}))
            return true;
    }
    return false;
}

namespace {

constexpr double kLog2_3 = 1.5849625007211561814537389439478;

double log2_stage_count(int n) {
    // log2 t(n) from the closed form, in log space
    long double a = (n + 3) * static_cast<long double>(kLog2_3);
    long double r1 = exp2l((n + 5) - a);                       // 2^(n+5) / 3^(n+3)
    long double r2 = (2.0L * n + 11.0L) * exp2l(-a);           // (2n+11) / 3^(n+3)
    return static_cast<double>(log2l(1.5L) + a + log2l(1.0L - r1 + r2));
}

double log2_edge_len(int n) {
    return static_cast<double>((n + 1) + log2l(3.0L - exp2l(-(n + 1))));
}

}  // namespace

double zeta_estimate_at(char set, int n) {
    if (n < 1) throw std::invalid_argument("zeta_estimate_at: n must be positive");
    if (set == 'S' || set == 's') return kLog2_3;  // log2(3^n)/n, |S_n| = 3^n exactly
    if (set == 'T' || set == 't') return log2_stage_count(n) / log2_edge_len(n);
    throw std::invalid_argument("zeta_estimate_at: set must be S or T");
}

std::vector<double> zeta_estimates(char set, int n) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) out.push_back(zeta_estimate_at(set, k));
    return out;
}

}  // namespace tiles
