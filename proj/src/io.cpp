#include "tiles/io.hpp"

#include <fstream>
#include <sstream>

namespace tiles {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

int64_t parse_int(const std::string& s, int line_no) {
    try {
        size_t pos = 0;
        int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + s + "'");
    }
}

std::string color_out(const std::string& c) { return c.empty() ? "-" : c; }
std::string color_in(const std::string& c) { return c == "-" ? "" : c; }

}  // namespace

TilesetFile parse_tileset(const std::string& text) {
    TilesetFile f;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    bool in_tile = false;
    TileType current;
    std::array<bool, 4> seen{};
    std::vector<std::tuple<int64_t, int64_t, std::string, int>> seeds;  // resolved after tiles

    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (in_tile) {
            if (auto d = dir_from_name(kw.size() == 1 ? kw[0] : '?')) {
                if (tok.size() != 3) throw ParseError(line_no, "expected: N|E|S|W <color> <strength>");
                int64_t str = parse_int(tok[2], line_no);
                if (str < 0) throw ParseError(line_no, "negative glue strength");
                current.glue(*d) = {color_in(tok[1]), static_cast<int>(str)};
                seen[static_cast<size_t>(*d)] = true;
            } else if (kw == "label") {
                current.label = tok.size() > 1 ? tok[1] : "";
            } else if (kw == "end") {
                for (Dir d : kDirs)
                    if (!seen[static_cast<size_t>(d)])
                        throw ParseError(line_no, "tile " + current.name + " missing side " + dir_name(d));
                try {
                    f.tiles.add(current);
                } catch (const std::invalid_argument& ex) {
                    throw ParseError(line_no, ex.what());
                }
                in_tile = false;
            } else {
                throw ParseError(line_no, "unexpected keyword inside tile record: " + kw);
            }
            continue;
        }
        if (kw == "tileset") {
            f.name = tok.size() > 1 ? tok[1] : "";
        } else if (kw == "temperature") {
            if (tok.size() != 2) throw ParseError(line_no, "expected: temperature <int>");
            f.temperature = static_cast<int>(parse_int(tok[1], line_no));
        } else if (kw == "tile") {
            if (tok.size() != 2) throw ParseError(line_no, "expected: tile <name>");
            current = TileType{};
            current.name = tok[1];
            seen = {};
            in_tile = true;
        } else if (kw == "seed") {
            if (tok.size() != 4) throw ParseError(line_no, "expected: seed <x> <y> <type>");
            seeds.emplace_back(parse_int(tok[1], line_no), parse_int(tok[2], line_no), tok[3], line_no);
        } else if (kw == "black") {
            if (tok.size() != 2) throw ParseError(line_no, "expected: black <type>");
            f.black.insert(tok[1]);
        } else {
            throw ParseError(line_no, "unknown keyword: " + kw);
        }
    }
    if (in_tile) throw ParseError(line_no, "unterminated tile record");
    for (const auto& [x, y, type, at_line] : seeds) {
        int idx = f.tiles.index_of(type);
        if (idx < 0) throw ParseError(at_line, "seed names unknown tile: " + type);
        f.seed.cells[{x, y}] = idx;
    }
    for (const std::string& b : f.black)
        if (f.tiles.index_of(b) < 0) throw ParseError(line_no, "black names unknown tile: " + b);
    return f;
}

std::string serialize_tileset(const TilesetFile& f) {
    std::ostringstream os;
    os << "tileset " << f.name << '\n';
    os << "temperature " << f.temperature << '\n';
    for (const TileType& t : f.tiles) {
        os << "tile " << t.name << '\n';
        for (Dir d : kDirs)
            os << "  " << dir_name(d) << ' ' << color_out(t.glue(d).color) << ' ' << t.glue(d).strength
               << '\n';
        if (!t.label.empty()) os << "  label " << t.label << '\n';
        os << "end" << '\n';
    }
    for (const auto& [p, type] : f.seed.sorted_cells())
        os << "seed " << p.x << ' ' << p.y << ' ' << f.tiles[type].name << '\n';
    for (const std::string& b : f.black) os << "black " << b << '\n';
    return os.str();
}

TilesetFile entry_to_file(const CatalogEntry& entry) {
    TilesetFile f;
    f.name = entry.name;
    f.temperature = entry.temperature;
    f.tiles = entry.tiles;
    f.seed = entry.seed;
    f.black = entry.black;
    return f;
}

CatalogEntry entry_from_file(const TilesetFile& f, const std::string& target) {
    CatalogEntry e;
    e.name = f.name;
    e.temperature = f.temperature;
    e.tiles = f.tiles;
    e.seed = f.seed;
    e.black = f.black;
    e.target = target;
    return e;
}

PointSet parse_points(const std::string& text) {
    PointSet out;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw ParseError(line_no, "expected: <x> <y>");
        out.insert({parse_int(tok[0], line_no), parse_int(tok[1], line_no)});
    }
    return out;
}

std::string serialize_points(const PointSet& points) {
    std::ostringstream os;
    for (Point p : points.sorted()) os << p.x << ' ' << p.y << '\n';
    return os.str();
}

std::string serialize_run(const RunResult& run, const TileSet& tiles) {
    std::ostringstream os;
    os << "rng-seed " << run.rng_seed << '\n';
    os << "policy " << policy_name(run.policy) << '\n';
    os << "window " << run.window.x0 << ' ' << run.window.y0 << ' ' << run.window.x1 << ' '
       << run.window.y1 << '\n';
    for (size_t i = 0; i < run.steps.size(); ++i)
        os << "step " << i << ' ' << run.steps[i].p.x << ' ' << run.steps[i].p.y << ' '
           << tiles[run.steps[i].type].name << '\n';
    os << "halt " << (run.halt == HaltReason::Terminal ? "terminal" : "budget") << '\n';
    return os.str();
}

RunResult parse_run(const std::string& text, const TileSet& tiles) {
    RunResult run;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    bool have_halt = false;
    while (std::getline(is, line)) {
        ++line_no;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "rng-seed") {
            if (tok.size() != 2) throw ParseError(line_no, "expected: rng-seed <u64>");
            run.rng_seed = std::stoull(tok[1]);
        } else if (kw == "policy") {
            auto p = policy_from_name(tok.size() > 1 ? tok[1] : "");
            if (!p) throw ParseError(line_no, "unknown policy");
            run.policy = *p;
        } else if (kw == "window") {
            if (tok.size() != 5) throw ParseError(line_no, "expected: window x0 y0 x1 y1");
            run.window = {parse_int(tok[1], line_no), parse_int(tok[2], line_no),
                          parse_int(tok[3], line_no), parse_int(tok[4], line_no)};
        } else if (kw == "step") {
            if (tok.size() != 5) throw ParseError(line_no, "expected: step <i> <x> <y> <type>");
            int idx = tiles.index_of(tok[4]);
            if (idx < 0) throw ParseError(line_no, "step names unknown tile: " + tok[4]);
            run.steps.push_back({{parse_int(tok[2], line_no), parse_int(tok[3], line_no)}, idx});
        } else if (kw == "halt") {
            if (tok.size() != 2 || (tok[1] != "terminal" && tok[1] != "budget"))
                throw ParseError(line_no, "expected: halt terminal|budget");
            run.halt = tok[1] == "terminal" ? HaltReason::Terminal : HaltReason::Budget;
            have_halt = true;
        } else {
            throw ParseError(line_no, "unknown keyword: " + kw);
        }
    }
    if (!have_halt) throw ParseError(line_no, "run log missing halt line");
    return run;
}

namespace {

std::string palette_color(const std::string& key) {
    uint64_t h = 1469598103934665603ull;
    for (char c : key) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%06x", static_cast<unsigned>(h % 0xffffffu));
    return buf;
}

struct CellGrid {
    Box canvas;
    // rows top to bottom for text output
    std::vector<std::vector<char>> glyph;          // '#', '.', 'x'
    std::vector<std::vector<std::string>> color;   // svg fill per filled cell
};

CellGrid make_grid(Box canvas) {
    CellGrid g;
    g.canvas = canvas;
    size_t h = canvas.empty() ? 0 : static_cast<size_t>(canvas.y1 - canvas.y0 + 1);
    size_t w = canvas.empty() ? 0 : static_cast<size_t>(canvas.x1 - canvas.x0 + 1);
    g.glyph.assign(h, std::vector<char>(w, '.'));
    g.color.assign(h, std::vector<std::string>(w));
    return g;
}

void set_cell(CellGrid& g, Point p, char glyph, const std::string& color) {
    if (!g.canvas.contains(p)) return;
    size_t row = static_cast<size_t>(g.canvas.y1 - p.y);
    size_t col = static_cast<size_t>(p.x - g.canvas.x0);
    g.glyph[row][col] = glyph;
    g.color[row][col] = color;
}

std::string emit(const CellGrid& g, const RenderSpec& spec) {
    std::ostringstream os;
    size_t h = g.glyph.size();
    size_t w = h == 0 ? 0 : g.glyph[0].size();
    switch (spec.format) {
        case RenderFormat::Ascii:
            for (const auto& row : g.glyph) {
                os.write(row.data(), static_cast<std::streamsize>(row.size()));
                os << '\n';
            }
            break;
        case RenderFormat::Svg: {
            int c = spec.cell;
            os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * c << "\" height=\""
               << h * c << "\">\n";
            for (size_t r = 0; r < h; ++r)
                for (size_t col = 0; col < w; ++col) {
                    if (g.glyph[r][col] == '.') continue;
                    const std::string fill = g.glyph[r][col] == 'x' ? "#cc0000" : g.color[r][col];
                    os << "<rect x=\"" << col * c << "\" y=\"" << r * c << "\" width=\"" << c
                       << "\" height=\"" << c << "\" fill=\"" << (fill.empty() ? "#000000" : fill)
                       << "\"/>\n";
                }
            os << "</svg>\n";
            break;
        }
        case RenderFormat::Pgm: {
            os << "P2\n" << w << ' ' << h << "\n255\n";
            for (size_t r = 0; r < h; ++r) {
                for (size_t col = 0; col < w; ++col) {
                    if (col) os << ' ';
                    os << (g.glyph[r][col] == '.' ? 255 : g.glyph[r][col] == 'x' ? 128 : 0);
                }
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

}  // namespace

std::string render_points(const PointSet& points, const RenderSpec& spec, std::optional<Box> canvas) {
    CellGrid g = make_grid(canvas.value_or(points.bbox()));
    for (Point p : points.sorted()) set_cell(g, p, '#', "#000000");
    return emit(g, spec);
}

std::string render_config(const Configuration& config, const TileSet& tiles, const RenderSpec& spec,
                          std::optional<Box> canvas) {
    CellGrid g = make_grid(canvas.value_or(config.domain().bbox()));
    for (const auto& [p, t] : config.sorted_cells()) {
        const std::string key = spec.color_by == ColorBy::TypeName ? tiles[t].name : tiles[t].label;
        set_cell(g, p, '#', palette_color(key));
    }
    return emit(g, spec);
}

std::string render_diff(const PointSet& placed, const TargetOracle& target, Box canvas,
                        const RenderSpec& spec) {
    CellGrid g = make_grid(canvas);
    for (int64_t y = canvas.y0; y <= canvas.y1; ++y)
        for (int64_t x = canvas.x0; x <= canvas.x1; ++x) {
            Point p{x, y};
            bool have = placed.contains(p);
            bool want = target(p);
            if (have && want) set_cell(g, p, '#', "#000000");
            else if (have != want) set_cell(g, p, 'x', "#cc0000");
        }
    return emit(g, spec);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace tiles
