#pragma once

#include <cstdint>
#include <vector>

#include "tiles/geometry.hpp"

namespace tiles {

// Pascal-parity membership: (x,y) with x,y >= 0 and no shared binary 1-bit.
bool in_standard(Point p);

// Exact stage i of the standard set, |result| = 3^i.
PointSet standard_stage(int i);

struct CountingTriple {
    int64_t l = 0;  // edge length
    int64_t f = 0;  // fiber size
    int64_t t = 0;  // stage size
};

// Closed forms; exact, guarded against 64-bit overflow (i <= 36).
CountingTriple counting(int i);
// Same triple by unrolling the recurrences (test oracle).
CountingTriple counting_by_recurrence(int i);

// l(i) = 3*2^(i+1) - 1, defined for i >= -1 (l(-1) = 2).
int64_t edge_len(int i);

// Ruler function: exponent of the largest power of two dividing j.
int ruler(int64_t j);
// Attachment ordinate: theta(1) = 2, theta(j+1) = theta(j) + ruler(j+1) + 2.
int64_t theta(int64_t j);
// Sum of ruler(1..n), evaluated term by term.
int64_t ruler_prefix_sum(int64_t n);
// 2^(i+1) + sum_{j<2^(i+1)} (ruler(j)+1) == l(i) - i - 2, both sides exact.
bool counter_height_identity(int i);

struct FiberedStage {
    PointSet t;  // stage
    PointSet f;  // fiber
};

FiberedStage fibered_stage(int i);

struct BarDecomposition {
    PointSet square;  // [-i-1,0]^2
    PointSet x_bar;   // [1, l(i)-i-2] x [-i-1, 0]
    PointSet y_bar;   // transposed
};

// Defined for i >= -1; at i = -1 the bars are the singletons (1,0)/(0,1).
BarDecomposition bars(int i);

enum class Axis { X, Y };

// theta-closure of a single bar (materialized, memoized).
PointSet theta_bar_closure(Axis axis, int i);
// Initial axis segment: X~_n / Y~_n.
PointSet axis_segment(Axis axis, int n);
// theta-closure of an axis segment.
PointSet theta_axis_closure(Axis axis, int n);

// Membership in the fibered set, decided by axis decomposition and recursion
// into attached bar closures; works at arbitrary coordinates.
bool in_fibered(Point p);
// Membership in the axis staircases of the fibered set.
bool in_y_axis(Point p);
bool in_x_axis(Point p);
// Number of columns of the y-axis at height y >= 1.
int64_t axis_width_at(int64_t y);

// Dimension estimates: 'S' uses log2(3^n)/n, 'T' uses log2 t(n)/log2 l(n)
// evaluated in log space from the closed forms.
std::vector<double> zeta_estimates(char set, int n);
double zeta_estimate_at(char set, int n);

}  // namespace tiles
