#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tiles/catalog.hpp"
#include "tiles/tam.hpp"
#include "tiles/verify.hpp"

namespace tiles {

struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Line-oriented UTF-8 text with '#' comments. A file holds a header, one
// record per tile and optional seed/black records:
//   tileset <name>
//   temperature <int>
//   tile <name> / N|E|S|W <color|-> <strength> / [label <text>] / end
//   seed <x> <y> <type>
//   black <type>
struct TilesetFile {
    std::string name;
    int temperature = 2;
    TileSet tiles;
    Configuration seed;
    std::set<std::string> black;
};

TilesetFile parse_tileset(const std::string& text);
std::string serialize_tileset(const TilesetFile& f);

TilesetFile entry_to_file(const CatalogEntry& entry);
CatalogEntry entry_from_file(const TilesetFile& f, const std::string& target = "");

// One `x y` pair per line.
PointSet parse_points(const std::string& text);
std::string serialize_points(const PointSet& points);

// Run log: rng-seed/policy/window header, one step line per attachment,
// then the halt reason.
std::string serialize_run(const RunResult& run, const TileSet& tiles);
RunResult parse_run(const std::string& text, const TileSet& tiles);

enum class RenderFormat { Ascii, Svg, Pgm };
enum class ColorBy { Label, TypeName, Diff };

struct RenderSpec {
    RenderFormat format = RenderFormat::Ascii;
    int cell = 8;
    ColorBy color_by = ColorBy::Label;
};

std::string render_points(const PointSet& points, const RenderSpec& spec,
                          std::optional<Box> canvas = std::nullopt);
std::string render_config(const Configuration& config, const TileSet& tiles,
                          const RenderSpec& spec, std::optional<Box> canvas = std::nullopt);
// Placed-versus-target comparison over a fixed canvas; mismatches render 'x'.
std::string render_diff(const PointSet& placed, const TargetOracle& target, Box canvas,
                        const RenderSpec& spec);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tiles
