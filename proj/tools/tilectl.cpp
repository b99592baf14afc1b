#include <cinttypes>
#include <random>
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "tiles/catalog.hpp"
#include "tiles/io.hpp"
#include "tiles/sierpinski.hpp"
#include "tiles/verify.hpp"

using namespace tiles;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

TilesetFile load_tileset(const std::string& spec) {
    if (spec == "xor") return entry_to_file(xor_weak_set());
    if (spec == "y-axis") return entry_to_file(y_axis_counter_set());
    if (spec == "x-axis") return entry_to_file(reflect(y_axis_counter_set()));
    if (spec == "fibered") return entry_to_file(fibered_set());
    return parse_tileset(read_file(spec));
}

Window parse_window(const std::string& s) {
    int64_t v[4];
    if (std::sscanf(s.c_str(), "%" SCNd64 ",%" SCNd64 ",%" SCNd64 ",%" SCNd64, &v[0], &v[1], &v[2],
                    &v[3]) != 4)
        throw std::invalid_argument("window must be x0,y0,x1,y1");
    return {v[0], v[1], v[2], v[3]};
}

RenderSpec parse_render_spec(const std::string& format, int cell, const std::string& color_by) {
    RenderSpec spec;
    if (format == "ascii") spec.format = RenderFormat::Ascii;
    else if (format == "svg") spec.format = RenderFormat::Svg;
    else if (format == "pgm") spec.format = RenderFormat::Pgm;
    else throw std::invalid_argument("format must be ascii|svg|pgm");
    spec.cell = cell;
    if (color_by == "label") spec.color_by = ColorBy::Label;
    else if (color_by == "typeName") spec.color_by = ColorBy::TypeName;
    else if (color_by == "membership-diff") spec.color_by = ColorBy::Diff;
    else throw std::invalid_argument("color-by must be label|typeName|membership-diff");
    return spec;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") std::cout << content;
    else write_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tile self-assembly simulator, oracles and verifiers"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a tile system inside a window");
    std::string sim_tileset, sim_window, sim_policy = "lex", sim_log;
    uint64_t sim_seed = 0;
    int64_t sim_max_steps = 1000000;
    sim->add_option("--tileset", sim_tileset, "tile set file or builtin name")->required();
    sim->add_option("--window", sim_window, "x0,y0,x1,y1")->required();
    sim->add_option("--policy", sim_policy, "lex|random");
    sim->add_option("--rng-seed", sim_seed, "PRNG seed for the random policy");
    sim->add_option("--max-steps", sim_max_steps, "attachment budget");
    sim->add_option("--log", sim_log, "run log output path (default stdout)");

    // verify-strict / verify-weak
    auto* vs = app.add_subcommand("verify-strict", "strict self-assembly verdict for a run log");
    std::string vs_run, vs_tileset, vs_target = "fibered";
    int64_t vs_margin = 8;
    vs->add_option("--run", vs_run, "run log path")->required();
    vs->add_option("--tileset", vs_tileset, "tile set used for the run")->required();
    vs->add_option("--target", vs_target, "fibered|standard|y-axis|x-axis");
    vs->add_option("--margin", vs_margin, "window margin for completeness");

    auto* vw = app.add_subcommand("verify-weak", "weak self-assembly verdict for a run log");
    std::string vw_run, vw_tileset, vw_target = "standard";
    int64_t vw_margin = 0;
    vw->add_option("--run", vw_run)->required();
    vw->add_option("--tileset", vw_tileset)->required();
    vw->add_option("--target", vw_target, "fibered|standard|y-axis|x-axis");
    vw->add_option("--margin", vw_margin);

    // check-ld
    auto* ld = app.add_subcommand("check-ld", "local determinism report for a run log");
    std::string ld_run, ld_tileset;
    int64_t ld_margin = 8;
    ld->add_option("--run", ld_run)->required();
    ld->add_option("--tileset", ld_tileset)->required();
    ld->add_option("--margin", ld_margin);

    // oracle
    auto* orc = app.add_subcommand("oracle", "emit exact point sets");
    std::string orc_set = "S", orc_out;
    int orc_stage = 0;
    orc->add_option("--set", orc_set, "S|T|F|theta-x|theta-y|axis-x|axis-y|theta-axis-x|theta-axis-y");
    orc->add_option("--stage", orc_stage, "stage index")->required();
    orc->add_option("--out", orc_out, "points file output (default stdout)");

    // explore
    auto* ex = app.add_subcommand("explore", "exhaustive closure over single-tile extensions");
    std::string ex_tileset, ex_window;
    int64_t ex_bound = 100, ex_cap = 500000;
    ex->add_option("--tileset", ex_tileset)->required();
    ex->add_option("--window", ex_window, "x0,y0,x1,y1")->required();
    ex->add_option("--size-bound", ex_bound);
    ex->add_option("--state-cap", ex_cap);

    // identities
    auto* id = app.add_subcommand("identities", "ruler prefix-sum and counter-height identities");
    int id_max = 16;
    id->add_option("--max-i", id_max);

    // crosscheck
    auto* cc = app.add_subcommand("crosscheck", "frontier vs min-cut stability on random systems");
    int64_t cc_trials = 1000;
    int cc_graphs = 200;
    uint64_t cc_seed = 20240817;
    cc->add_option("--trials", cc_trials);
    cc->add_option("--graphs", cc_graphs);
    cc->add_option("--rng-seed", cc_seed);

    // counts
    auto* cnt = app.add_subcommand("counts", "edge/fiber/stage counting table");
    int cnt_max = 8;
    cnt->add_option("--max-i", cnt_max);

    // ftdepth-witness
    auto* ft = app.add_subcommand("ftdepth-witness", "finite-tree depth witness check");
    int ft_k = 0;
    ft->add_option("--k", ft_k)->required();

    // zeta
    auto* zt = app.add_subcommand("zeta", "dimension estimate");
    std::string zt_set = "S";
    int zt_n = 8;
    zt->add_option("--set", zt_set, "S|T");
    zt->add_option("--n", zt_n);

    // mincut
    auto* mc = app.add_subcommand("mincut", "global minimum cut");
    std::string mc_points, mc_run, mc_tileset;
    int mc_tau = 2;
    mc->add_option("--points", mc_points, "points file; unit-strength grid bonds");
    mc->add_option("--run", mc_run, "run log; uses the binding graph of the result");
    mc->add_option("--tileset", mc_tileset, "tile set for --run");
    mc->add_option("--tau", mc_tau, "stability threshold to report against");

    // render
    auto* rd = app.add_subcommand("render", "render points or a run result");
    std::string rd_points, rd_run, rd_tileset, rd_format = "ascii", rd_out, rd_diff, rd_color = "label";
    std::string rd_window;
    int rd_cell = 8;
    int64_t rd_margin = 0;
    rd->add_option("--points", rd_points);
    rd->add_option("--run", rd_run);
    rd->add_option("--tileset", rd_tileset);
    rd->add_option("--format", rd_format, "ascii|svg|pgm");
    rd->add_option("--cell", rd_cell, "svg cell size");
    rd->add_option("--color-by", rd_color, "label|typeName|membership-diff");
    rd->add_option("--diff", rd_diff, "target oracle for membership-diff");
    rd->add_option("--window", rd_window, "canvas x0,y0,x1,y1 (default bbox)");
    rd->add_option("--margin", rd_margin, "canvas margin for diff mode");
    rd->add_option("--out", rd_out);

    // audit-glues
    auto* ag = app.add_subcommand("audit-glues", "boundary glue contract audit");
    std::string ag_run, ag_tileset, ag_axis = "y";
    int64_t ag_max_j = 31;
    ag->add_option("--run", ag_run)->required();
    ag->add_option("--tileset", ag_tileset)->required();
    ag->add_option("--axis", ag_axis, "y|x");
    ag->add_option("--max-j", ag_max_j);

    // catalog
    auto* cat = app.add_subcommand("catalog", "emit a built-in tile set");
    std::string cat_name = "fibered", cat_out;
    cat->add_option("--name", cat_name, "xor|y-axis|x-axis|fibered");
    cat->add_option("--out", cat_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (sim->parsed()) {
            TilesetFile f = load_tileset(sim_tileset);
            TAS tas{f.tiles, f.seed, f.temperature};
            auto policy = policy_from_name(sim_policy);
            if (!policy) throw std::invalid_argument("unknown policy: " + sim_policy);
            RunResult r = run(tas, *policy, parse_window(sim_window), sim_seed, sim_max_steps);
            emit(sim_log, serialize_run(r, f.tiles));
            return kExitPass;
        }
        if (vs->parsed()) {
            TilesetFile f = load_tileset(vs_tileset);
            TAS tas{f.tiles, f.seed, f.temperature};
            RunResult r = parse_run(read_file(vs_run), f.tiles);
            Verdict v = check_strict(result_of(tas, r), target_oracle(vs_target), r.window, vs_margin,
                                     r.halt);
            std::cout << v.to_text();
            return v.pass ? kExitPass : kExitFail;
        }
        if (vw->parsed()) {
            TilesetFile f = load_tileset(vw_tileset);
            TAS tas{f.tiles, f.seed, f.temperature};
            RunResult r = parse_run(read_file(vw_run), f.tiles);
            Verdict v = check_weak(result_of(tas, r), f.tiles, f.black, target_oracle(vw_target),
                                   r.window, vw_margin, r.halt);
            std::cout << v.to_text();
            return v.pass ? kExitPass : kExitFail;
        }
        if (ld->parsed()) {
            TilesetFile f = load_tileset(ld_tileset);
            TAS tas{f.tiles, f.seed, f.temperature};
            RunResult r = parse_run(read_file(ld_run), f.tiles);
            DeterminismReport rep = check_local_determinism(tas, r, r.window, ld_margin);
            std::cout << rep.to_text();
            return rep.overall ? kExitPass : kExitFail;
        }
        if (orc->parsed()) {
            PointSet pts;
            if (orc_set == "S") pts = standard_stage(orc_stage);
            else if (orc_set == "T") pts = fibered_stage(orc_stage).t;
            else if (orc_set == "F") pts = fibered_stage(orc_stage).f;
            else if (orc_set == "theta-x") pts = theta_bar_closure(Axis::X, orc_stage);
            else if (orc_set == "theta-y") pts = theta_bar_closure(Axis::Y, orc_stage);
            else if (orc_set == "axis-x") pts = axis_segment(Axis::X, orc_stage);
            else if (orc_set == "axis-y") pts = axis_segment(Axis::Y, orc_stage);
            else if (orc_set == "theta-axis-x") pts = theta_axis_closure(Axis::X, orc_stage);
            else if (orc_set == "theta-axis-y") pts = theta_axis_closure(Axis::Y, orc_stage);
            else throw std::invalid_argument("unknown --set: " + orc_set);
            emit(orc_out, serialize_points(pts));
            return kExitPass;
        }
        if (ex->parsed()) {
            TilesetFile f = load_tileset(ex_tileset);
            TAS tas{f.tiles, f.seed, f.temperature};
            ExploreResult res = explore_terminals(tas, parse_window(ex_window), ex_bound, ex_cap);
            std::cout << "terminals " << res.terminals.size() << '\n';
            std::cout << "truncated " << res.truncated << '\n';
            std::cout << "states " << res.states << '\n';
            return kExitPass;
        }
        if (id->parsed()) {
            bool ok = true;
            for (int i = 0; i <= id_max; ++i) {
                int64_t p = int64_t{1} << (i + 1);
                bool prefix = ruler_prefix_sum(p - 1) == p - i - 2;
                bool height = counter_height_identity(i);
                std::cout << i << " prefix-sum " << (prefix ? "ok" : "BAD") << " counter-height "
                          << (height ? "ok" : "BAD") << '\n';
                ok = ok && prefix && height;
            }
            return ok ? kExitPass : kExitFail;
        }
        if (cc->parsed()) {
            std::mt19937_64 rng(cc_seed);
            int64_t trials = 0, mismatches = 0;
            while (trials < cc_trials) {
                TAS tas;
                tas.temperature = 2;
                auto glue = [&rng]() -> Glue {
                    static const char* colors[] = {"a", "b", "c", "d"};
                    int s = static_cast<int>(rng() % 3);
                    return s == 0 ? Glue{"", 0} : Glue{colors[rng() % 4], s};
                };
                int n = 3 + static_cast<int>(rng() % 5);
                for (int i = 0; i < n; ++i) {
                    TileType t;
                    t.name = "t" + std::to_string(i);
                    for (Dir d : kDirs) t.glue(d) = glue();
                    tas.tiles.add(t);
                }
                tas.seed.cells[{0, 0}] = 0;
                Assembly a(tas.tiles, tas.temperature, tas.seed);
                for (int step = 0; step < 49; ++step) {
                    std::vector<FrontierEntry> fr = a.frontier();
                    if (fr.empty()) break;
                    FrontierEntry pick = fr[rng() % fr.size()];
                    a.attach(pick.p, pick.type);
                }
                std::vector<Point> border;
                for (Point p : a.config().domain().sorted())
                    for (Dir d : kDirs)
                        if (!a.config().occupied(p + delta(d))) border.push_back(p + delta(d));
                if (border.empty()) continue;
                for (int probe = 0; probe < 10 && trials < cc_trials; ++probe, ++trials) {
                    Point m = border[rng() % border.size()];
                    int t = static_cast<int>(rng() % static_cast<uint64_t>(tas.tiles.size()));
                    Configuration e2 = a.config();
                    e2.cells[m] = t;
                    bool stable = min_binding_cut(binding_graph_of(e2, tas.tiles)).stable(2);
                    if (a.in_frontier(m, t) != stable) ++mismatches;
                }
            }
            int graph_bad = 0;
            for (int g = 0; g < cc_graphs; ++g) {
                PointSet pts;
                size_t want = 2 + rng() % 11;
                while (pts.size() < want)
                    pts.insert({static_cast<int64_t>(rng() % 4), static_cast<int64_t>(rng() % 4)});
                GridGraph gg = full_grid_graph(pts);
                BindingGraph bg;
                bg.vertices = gg.vertices;
                bg.edges = gg.edges;
                for (size_t i = 0; i < gg.edges.size(); ++i)
                    bg.weights.push_back(1 + static_cast<int64_t>(rng() % 3));
                // enumerate every bipartition
                std::vector<Point> v = bg.vertices.sorted();
                std::unordered_map<Point, size_t, PointHash> idx;
                for (size_t i = 0; i < v.size(); ++i) idx[v[i]] = i;
                int64_t best = INT64_MAX;
                for (uint32_t mask = 1; mask < (1u << (v.size() - 1)); ++mask) {
                    int64_t cut = 0;
                    for (size_t i = 0; i < bg.edges.size(); ++i) {
                        size_t pa = idx.at(bg.edges[i].first), pb = idx.at(bg.edges[i].second);
                        bool ia = pa > 0 && (mask >> (pa - 1)) & 1;
                        bool ib = pb > 0 && (mask >> (pb - 1)) & 1;
                        if (ia != ib) cut += bg.weights[i];
                    }
                    best = std::min(best, cut);
                }
                MinCutResult mc2 = min_binding_cut(bg);
                if (!mc2.finite || mc2.value != best) ++graph_bad;
            }
            std::cout << "frontier-trials " << trials << " discrepancies " << mismatches << '\n';
            std::cout << "graphs " << cc_graphs << " cut-mismatches " << graph_bad << '\n';
            return mismatches == 0 && graph_bad == 0 ? kExitPass : kExitFail;
        }
        if (cnt->parsed()) {
            std::ostringstream os;
            for (int i = 0; i <= cnt_max; ++i) {
                CountingTriple c = counting(i);
                os << i << '\t' << c.l << '\t' << c.f << '\t' << c.t << '\n';
            }
            std::cout << os.str();
            return kExitPass;
        }
        if (ft->parsed()) {
            SierpinskiWitness w = sierpinski_witness(ft_k);
            int64_t hi = int64_t{1} << (ft_k + 2);
            PointSet window_pts;
            for (int64_t x = 0; x <= hi; ++x)
                for (int64_t y = 0; y <= hi; ++y)
                    if (in_standard({x, y})) window_pts.insert({x, y});
            DSubtree sub = d_subtree(full_grid_graph(window_pts), PointSet{{0, 0}}, w.root);
            bool ok = sub.is_tree && sub.depth && *sub.depth == w.expected_depth &&
                      sub.vertices == w.points;
            std::cout << "root " << w.root.x << ' ' << w.root.y << '\n';
            std::cout << "size " << w.points.size() << '\n';
            std::cout << "depth " << (sub.depth ? *sub.depth : -1) << " expected " << w.expected_depth
                      << '\n';
            std::cout << (ok ? "witness pass" : "witness fail") << '\n';
            return ok ? kExitPass : kExitFail;
        }
        if (zt->parsed()) {
            char set = zt_set.empty() ? 'S' : zt_set[0];
            std::vector<double> est = zeta_estimates(set, zt_n);
            for (int k = 1; k <= zt_n; ++k)
                std::printf("%d %.5f\n", k, est[static_cast<size_t>(k - 1)]);
            return kExitPass;
        }
        if (mc->parsed()) {
            BindingGraph bg;
            if (!mc_points.empty()) {
                GridGraph g = full_grid_graph(parse_points(read_file(mc_points)));
                bg.vertices = g.vertices;
                bg.edges = g.edges;
                bg.weights.assign(g.edges.size(), 1);
            } else if (!mc_run.empty()) {
                TilesetFile f = load_tileset(mc_tileset);
                TAS tas{f.tiles, f.seed, f.temperature};
                RunResult r = parse_run(read_file(mc_run), f.tiles);
                bg = binding_graph_of(result_of(tas, r), f.tiles);
            } else {
                throw std::invalid_argument("mincut needs --points or --run");
            }
            MinCutResult res = min_binding_cut(bg);
            if (!res.finite) std::cout << "mincut infinity\n";
            else std::cout << "mincut " << res.value << " sideA " << res.witness.side_a.size() << '\n';
            std::cout << "stable(" << mc_tau << ") " << (res.stable(mc_tau) ? "yes" : "no") << '\n';
            return kExitPass;
        }
        if (rd->parsed()) {
            RenderSpec spec = parse_render_spec(rd_format, rd_cell, rd_color);
            std::optional<Box> canvas;
            if (!rd_window.empty()) {
                Window w = parse_window(rd_window);
                canvas = Box{w.x0, w.y0, w.x1, w.y1};
            }
            std::string content;
            if (spec.color_by == ColorBy::Diff) {
                if (rd_diff.empty()) throw std::invalid_argument("diff mode needs --diff <target>");
                PointSet placed;
                Box box;
                if (!rd_run.empty()) {
                    TilesetFile f = load_tileset(rd_tileset);
                    TAS tas{f.tiles, f.seed, f.temperature};
                    RunResult r = parse_run(read_file(rd_run), f.tiles);
                    placed = result_of(tas, r).domain();
                    box = Box{r.window.x0, r.window.y0, r.window.x1, r.window.y1}.shrunk(rd_margin);
                } else {
                    placed = parse_points(read_file(rd_points));
                    box = canvas.value_or(placed.bbox());
                }
                if (canvas) box = canvas->shrunk(rd_margin);
                content = render_diff(placed, target_oracle(rd_diff), box, spec);
            } else if (!rd_run.empty()) {
                TilesetFile f = load_tileset(rd_tileset);
                TAS tas{f.tiles, f.seed, f.temperature};
                RunResult r = parse_run(read_file(rd_run), f.tiles);
                content = render_config(result_of(tas, r), f.tiles, spec, canvas);
            } else if (!rd_points.empty()) {
                content = render_points(parse_points(read_file(rd_points)), spec, canvas);
            } else {
                throw std::invalid_argument("render needs --points or --run");
            }
            emit(rd_out, content);
            return kExitPass;
        }
        if (ag->parsed()) {
            TilesetFile f = load_tileset(ag_tileset);
            TAS tas{f.tiles, f.seed, f.temperature};
            RunResult r = parse_run(read_file(ag_run), f.tiles);
            Axis axis = ag_axis == "x" ? Axis::X : Axis::Y;
            auto bad = glue_contract_audit(f.tiles, result_of(tas, r), axis, ag_max_j);
            for (const GlueAudit& a : bad)
                std::cout << "AUDIT-FAIL " << a.p.x << ' ' << a.p.y << " theta-index " << a.theta_index
                          << " expected " << (a.expected.color.empty() ? "-" : a.expected.color) << '/'
                          << a.expected.strength << " got "
                          << (a.actual.color.empty() ? "-" : a.actual.color) << '/' << a.actual.strength
                          << '\n';
            std::cout << "AUDIT " << (bad.empty() ? "pass" : "fail") << '\n';
            return bad.empty() ? kExitPass : kExitFail;
        }
        if (cat->parsed()) {
            emit(cat_out, serialize_tileset(load_tileset(cat_name)));
            return kExitPass;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
