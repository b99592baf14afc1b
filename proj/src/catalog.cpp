#include "tiles/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiles {

TAS to_tas(const CatalogEntry& entry) { return {entry.tiles, entry.seed, entry.temperature}; }

TargetOracle target_oracle(const std::string& name) {
    if (name == "standard") return [](Point p) { return in_standard(p); };
    if (name == "fibered") return [](Point p) { return in_fibered(p); };
    if (name == "y-axis") return [](Point p) { return in_y_axis(p); };
    if (name == "x-axis") return [](Point p) { return in_x_axis(p); };
    throw std::invalid_argument("unknown target oracle: " + name);
}

namespace {

TileType make(const std::string& name, Glue n, Glue e, Glue s, Glue w, const std::string& label) {
    TileType t;
    t.name = name;
    t.glue(Dir::N) = std::move(n);
    t.glue(Dir::E) = std::move(e);
    t.glue(Dir::S) = std::move(s);
    t.glue(Dir::W) = std::move(w);
    t.label = label;
    return t;
}

const Glue kNone{"", 0};

}  // namespace

CatalogEntry xor_weak_set() {
    CatalogEntry e;
    e.name = "xor";
    e.temperature = 2;
    e.target = "standard";

    e.tiles.add(make("S", {"gN", 2}, {"gE", 2}, kNone, kNone, "1"));
    e.tiles.add(make("bx", {"b1", 1}, {"gE", 2}, kNone, {"gE", 2}, "1"));
    e.tiles.add(make("by", {"gN", 2}, {"b1", 1}, {"gN", 2}, kNone, "1"));
    e.tiles.add(make("r00", {"b0", 1}, {"b0", 1}, {"b0", 1}, {"b0", 1}, "0"));
    e.tiles.add(make("r01", {"b1", 1}, {"b1", 1}, {"b1", 1}, {"b0", 1}, "1"));
    e.tiles.add(make("r10", {"b1", 1}, {"b1", 1}, {"b0", 1}, {"b1", 1}, "1"));
    e.tiles.add(make("r11", {"b0", 1}, {"b0", 1}, {"b1", 1}, {"b1", 1}, "0"));

    e.seed.cells[{0, 0}] = 0;
    e.black = {"S", "bx", "by", "r01", "r10"};
    return e;
}

CatalogEntry y_axis_counter_set() {
    CatalogEntry e;
    e.name = "y-axis";
    e.temperature = 2;
    e.target = "y-axis";
    TileSet& t = e.tiles;

    // Rows of the counter come in two kinds. A count row increments the value
    // below it: it nucleates at the corner (east) column with strength 2 and
    // ripples the carry westward within the row. It is followed by one copy
    // row per trailing zero of the new value, plus one: a marker walks the
    // trailing block west-to-east, one column per row, visiting the 1 first
    // and finishing at the corner; each copy row nucleates at its marker
    // column. The corner column's east faces expose the boundary contract
    // (strength 2 exactly on the final copy row of each value). When a carry
    // leaves the west edge, the edge tile launches the widening block and the
    // corner stays quiet; a bar seeded from a host window carries the strip
    // edge colour instead, so its final count row is a dead end.

    // width-1 start: values 1 and 2
    t.add(make("ybase", {"go1v", 2}, kNone, {"sv", 2}, kNone, "1"));
    t.add(make("c1w1", {"up1v", 2}, {"*1h", 2}, {"go1v", 2}, kNone, "1"));
    t.add(make("cntw1", {"sqav", 2}, kNone, {"up1v", 2}, kNone, "0"));
    t.add(make("sq1w1", {"exLv", 2}, {"1h", 1}, {"sqav", 2}, {"gmh", 2}, "0"));

    // widening
    t.add(make("msb", {"e1v", 1}, {"gmh", 2}, kNone, kNone, "1"));
    t.add(make("sq1", {"ex0v", 2}, {"mph", 1}, {"sqv", 2}, {"gmh", 2}, "0"));

    // count rows
    t.add(make("cc0", {"cs1v", 2}, kNone, {"in0v", 2}, {"plh", 1}, "1"));
    t.add(make("cc1", {"c0v", 1}, kNone, {"in1v", 2}, {"cah", 1}, "0"));
    t.add(make("cmc1", {"b0v", 1}, {"cah", 1}, {"b1v", 1}, {"cah", 1}, "0"));
    t.add(make("cmc0", {"cs1mv", 2}, {"cah", 1}, {"b0v", 1}, {"plh", 1}, "1"));
    t.add(make("cm0", {"b0v", 1}, {"plh", 1}, {"b0v", 1}, {"plh", 1}, "0"));
    t.add(make("cm1", {"b1v", 1}, {"plh", 1}, {"b1v", 1}, {"plh", 1}, "1"));
    t.add(make("ce1", {"e1v", 1}, {"plh", 1}, {"e1v", 1}, kNone, "1"));
    t.add(make("ceco", {"sqv", 2}, {"cah", 1}, {"e1v", 1}, kNone, "0"));
    t.add(make("cz0", {"z0v", 1}, {"plh", 1}, {"z0v", 1}, kNone, "0"));
    t.add(make("czco", kNone, {"cah", 1}, {"z0v", 1}, kNone, "1"));

    // copy rows
    t.add(make("k1c", {"in1v", 2}, {"*1h", 2}, {"cs1v", 2}, {"plh", 1}, "1"));
    t.add(make("k1m", {"b1v", 1}, {"ynh", 1}, {"cs1mv", 2}, {"plh", 1}, "1"));
    t.add(make("k0m", {"b0v", 1}, {"ynh", 1}, {"ex0v", 2}, {"plh", 1}, "0"));
    t.add(make("pm", {"ex0v", 2}, {"mph", 1}, {"b0v", 1}, {"ynh", 1}, "0"));
    t.add(make("ea", {"b0v", 1}, {"mph", 1}, {"b0v", 1}, {"mph", 1}, "0"));
    t.add(make("kc1h", {"p0v", 1}, {"1h", 1}, {"c0v", 1}, {"mph", 1}, "0"));
    t.add(make("kc0h", {"p0v", 1}, {"0h", 1}, {"p0v", 1}, {"mph", 1}, "0"));
    t.add(make("kp1h", {"exLv", 2}, {"1h", 1}, {"c0v", 1}, {"ynh", 1}, "0"));
    t.add(make("kp0h", {"exLv", 2}, {"0h", 1}, {"p0v", 1}, {"ynh", 1}, "0"));
    t.add(make("klast", {"in0v", 2}, {"*0h", 2}, {"exLv", 2}, {"plh", 1}, "0"));

    // bar seeding off a host window
    t.add(make("basc", {"cs1v", 2}, kNone, {"0*v", 2}, {"bfh", 1}, "1"));
    t.add(make("basf", {"b0v", 1}, {"bfh", 1}, {"0v", 1}, {"bfh", 1}, "0"));
    t.add(make("base", {"z0v", 1}, {"bfh", 1}, {"1v", 1}, kNone, "0"));
    t.add(make("lone", kNone, kNone, {"1*v", 2}, kNone, "1"));

    int seed_type = e.tiles.index_of("ybase");
    e.seed.cells[{0, 1}] = seed_type;
    return e;
}

std::string reflect_color(const std::string& color) {
    if (color.empty()) return color;
    char suffix = color.back();
    if (suffix != 'v' && suffix != 'h')
        throw std::invalid_argument("reflect_color: colour does not follow the v/h convention: " + color);
    std::string base = color.substr(0, color.size() - 1);
    std::reverse(base.begin(), base.end());
    base.push_back(suffix == 'v' ? 'h' : 'v');
    return base;
}

TileType reflect_type(const TileType& t) {
    TileType out;
    if (!t.name.empty() && t.name.back() == '~')
        out.name = t.name.substr(0, t.name.size() - 1);
    else
        out.name = t.name + "~";
    out.label = t.label;
    auto map = [](const Glue& g) { return Glue{reflect_color(g.color), g.strength}; };
    // direction (x,y) maps to (y,x): N<->E, S<->W
    out.glue(Dir::N) = map(t.glue(Dir::E));
    out.glue(Dir::E) = map(t.glue(Dir::N));
    out.glue(Dir::S) = map(t.glue(Dir::W));
    out.glue(Dir::W) = map(t.glue(Dir::S));
    return out;
}

CatalogEntry reflect(const CatalogEntry& entry) {
    CatalogEntry out;
    out.name = !entry.name.empty() && entry.name.back() == '~' ? entry.name.substr(0, entry.name.size() - 1)
                                                               : entry.name + "~";
    if (entry.name == "y-axis") out.name = "x-axis";
    if (entry.name == "x-axis") out.name = "y-axis";
    out.temperature = entry.temperature;
    for (int i = 0; i < entry.tiles.size(); ++i) out.tiles.add(reflect_type(entry.tiles[i]));
    for (const auto& [p, t] : entry.seed.cells) out.seed.cells[{p.y, p.x}] = t;
    for (const std::string& b : entry.black) out.black.insert(reflect_type(entry.tiles[entry.tiles.index_of(b)]).name);
    if (entry.target == "y-axis") out.target = "x-axis";
    else if (entry.target == "x-axis") out.target = "y-axis";
    else out.target = entry.target;
    return out;
}

CatalogEntry fibered_set() {
    CatalogEntry e;
    e.name = "fibered";
    e.temperature = 2;
    e.target = "fibered";

    CatalogEntry y = y_axis_counter_set();
    for (int i = 0; i < y.tiles.size(); ++i) e.tiles.add(y.tiles[i]);
    for (int i = 0; i < y.tiles.size(); ++i) e.tiles.add(reflect_type(y.tiles[i]));
    e.tiles.add(make("seedS", {"sv", 2}, {reflect_color("sv"), 2}, kNone, kNone, "S"));

    e.seed.cells[{0, 0}] = e.tiles.index_of("seedS");
    return e;
}

std::vector<GlueAudit> glue_contract_audit(const TileSet& tiles, const Configuration& result,
                                           Axis axis, int64_t max_j) {
    if (max_j < 1) throw std::invalid_argument("glue_contract_audit: max_j must be positive");
    std::vector<GlueAudit> bad;
    int64_t top = theta(max_j);

    // expected east-face contract on the corner column, by row
    std::vector<Glue> expected(static_cast<size_t>(top) + 1, Glue{"", 0});
    std::vector<int64_t> theta_of(static_cast<size_t>(top) + 1, 0);
    for (int64_t j = 1; j <= max_j; ++j) {
        int64_t th = theta(j);
        int r = ruler(j);
        expected[static_cast<size_t>(th)] = Glue{j % 2 == 1 ? "*1h" : "*0h", 2};
        theta_of[static_cast<size_t>(th)] = j;
        if (r >= 1) {
            expected[static_cast<size_t>(th - r)] = Glue{"1h", 1};
            theta_of[static_cast<size_t>(th - r)] = j;
            for (int64_t y = th - r + 1; y < th; ++y) {
                expected[static_cast<size_t>(y)] = Glue{"0h", 1};
                theta_of[static_cast<size_t>(y)] = j;
            }
        }
    }

    for (int64_t c = 1; c <= top; ++c) {
        Point p = axis == Axis::Y ? Point{0, c} : Point{c, 0};
        Dir side = axis == Axis::Y ? Dir::E : Dir::N;
        Glue want = expected[static_cast<size_t>(c)];
        if (axis == Axis::X && want.strength > 0) want.color = reflect_color(want.color);
        auto it = result.cells.find(p);
        if (it == result.cells.end()) {
            bad.push_back({p, side, want, Glue{"missing", -1}, theta_of[static_cast<size_t>(c)]});
            continue;
        }
        Glue got = tiles[it->second].glue(side);
        bool ok = want.strength == 0 ? got.strength == 0 : got == want;
        if (!ok) bad.push_back({p, side, want, got, theta_of[static_cast<size_t>(c)]});
    }
    return bad;
}

}  // namespace tiles
