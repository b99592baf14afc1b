#pragma once

#include <set>
#include <string>
#include <vector>

#include "tiles/sierpinski.hpp"
#include "tiles/tam.hpp"

namespace tiles {

struct CatalogEntry {
    std::string name;
    TileSet tiles;
    Configuration seed;
    int temperature = 2;
    std::set<std::string> black;  // for weak systems
    std::string target;           // membership oracle reference
};

TAS to_tas(const CatalogEntry& entry);
TargetOracle target_oracle(const std::string& name);  // standard|fibered|y-axis|x-axis

// Winfree-style seven-type XOR system; paints the standard set black while
// tiling the whole quadrant.
CatalogEntry xor_weak_set();

// Width-growing binary counter that strictly self-assembles the y-axis
// staircase; also supplies the vertical bars of the full system.
CatalogEntry y_axis_counter_set();

// Diagonal reflection: directions transposed, colours mapped v<->h with the
// base string reversed ("*1h" <-> "1*v"). An involution, including names.
std::string reflect_color(const std::string& color);
TileType reflect_type(const TileType& t);
CatalogEntry reflect(const CatalogEntry& entry);

// Union of the y system, its reflection and the single corner seed tile.
CatalogEntry fibered_set();

struct GlueAudit {
    Point p;
    Dir side = Dir::E;
    Glue expected;
    Glue actual;   // strength -1 when the point is untiled
    int64_t theta_index = 0;  // 0 for non-theta rows
};

// Compares the exposed boundary glues of a completed axis run against the
// table generated from the ruler/theta functions. Empty result = clean.
std::vector<GlueAudit> glue_contract_audit(const TileSet& tiles, const Configuration& result,
                                           Axis axis, int64_t max_j);

}  // namespace tiles
