// coversplit: command-line front end for the covering-splitter library.
// Verb-noun subcommands build and check the non-2-colorable hypergraphs
// H(k,l), realize them exactly with points and unit disks, generate and
// color shift-chains, and split bounded-multiplicity disk coverings.
// Every randomized command takes an explicit --seed; identical inputs and
// seeds reproduce byte-identical outputs. A run manifest is written next
// to each primary output.

#include "coversplit/chain_search.hpp"
#include "coversplit/coloring.hpp"
#include "coversplit/extension.hpp"
#include "coversplit/json_io.hpp"
#include "coversplit/resample.hpp"
#include "coversplit/svg.hpp"
#include "coversplit/thresholds.hpp"
#include "coversplit/unbounded_cover.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace {

using namespace coversplit;

constexpr const char* kToolVersion = "0.1.0";

// exit codes: 0 ok, 1 failed check/verification, 2 bad arguments,
// 3 capacity guard
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitCapacity = 3;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct ManifestWriter {
    std::string command_line;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    ManifestWriter(int argc, char** argv) {
        for (int i = 0; i < argc; ++i) {
            if (i) command_line += ' ';
            command_line += argv[i];
        }
    }

    void emit() const {
        if (outputs.empty()) return;
        Json m;
        m["schema"] = "manifest.v1";
        m["command_line"] = command_line;
        m["seed"] = seed ? Json(*seed) : Json(nullptr);
        Json hashes = Json::object();
        for (const auto& path : inputs) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                          static_cast<unsigned long long>(fnv1a(read_text_file(path))));
            hashes[path] = buf;
        }
        m["input_hashes"] = std::move(hashes);
        m["output_paths"] = outputs;
        m["tool_version"] = kToolVersion;
        const auto dt = std::chrono::steady_clock::now() - t0;
        m["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        write_text_file(outputs.front() + ".manifest.json", dump_canonical(m));
    }
};

int jobs_from_env_or_flag(int flag_jobs) {
    if (flag_jobs > 0) return flag_jobs;
    if (const char* env = std::getenv("COVER_SPLIT_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

Rational parse_rat_flag(const std::string& s, const char* what) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + ": expected a rational 'N/D', got '" +
                                   s + "'");
    }
}

// ---- hypergraph ----

int cmd_hypergraph_build(int k, int l, const std::string& out, ManifestWriter& mf) {
    auto h = build_hypergraph(k, l);
    auto rep = validate_hypergraph(h);
    if (!rep.ok) {
        for (const auto& f : rep.failures) std::cerr << "invariant failed: " << f << "\n";
        return kExitCheckFailed;
    }
    write_text_file(out, dump_canonical(hypergraph_to_json(h)));
    mf.outputs.push_back(out);
    std::cout << "H(" << k << "," << l << "): " << h.n_vertices << " vertices, "
              << h.red_edges.size() << " red edges, " << h.blue_edges.size()
              << " blue edges -> " << out << "\n";
    return kExitOk;
}

int cmd_hypergraph_check(const std::string& in, bool backtrack, std::uint64_t budget, int jobs,
                         bool expect_unsplittable, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto h = hypergraph_from_json(read_json_file(in));
    ColorabilityResult res;
    if (backtrack) res = is_two_colorable_backtracking(h, budget);
    else res = is_two_colorable_exhaustive(h, jobs);

    switch (res.status) {
        case Colorability::Colorable: {
            std::cout << "COLORABLE\n";
            std::string witness = "witness:";
            for (int v = 0; v < h.n_vertices; ++v)
                witness += res.coloring->at(v) == Color::Red ? " R" : " B";
            std::cerr << witness << "\n";
            return expect_unsplittable ? kExitCheckFailed : kExitOk;
        }
        case Colorability::NotColorable:
            std::cout << "NOT-COLORABLE\n";
            return kExitOk;
        case Colorability::Indeterminate:
        default:
            std::cout << "INDETERMINATE\n";
            std::cerr << "search budget exhausted after " << res.work << " nodes\n";
            return kExitOk;
    }
}

// ---- realize ----

int cmd_realize_build(int k, int l, const std::string& eps, const std::string& out,
                      ManifestWriter& mf) {
    auto r = build_realization(k, l, parse_rat_flag(eps, "--eps"));
    write_text_file(out, dump_canonical(realization_to_json(r)));
    mf.outputs.push_back(out);
    std::cout << "realized H(" << k << "," << l << "): " << r.points.size() << " points, "
              << r.disks.size() << " disks -> " << out << "\n";
    return kExitOk;
}

int cmd_realize_verify(const std::string& in, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto r = realization_from_json(read_json_file(in));
    auto rep = verify_realization(r);
    auto line = [](const char* name, bool ok) {
        std::cout << name << (ok ? " PASS" : " FAIL") << "\n";
    };
    line("1 uniform-counts      ", rep.uniform_counts);
    line("2 incidence-fidelity  ", rep.incidence_fidelity);
    line("3 points-in-box       ", rep.points_in_box);
    line("4 red-centers-in-box  ", rep.red_centers_in_box);
    line("5 blue-centers-in-box ", rep.blue_centers_in_box);
    line("6 exposedness         ", rep.exposed);
    if (!rep.no_boundary_incidence)
        std::cerr << "warning: a point lies exactly on a disk boundary\n";
    for (const auto& w : rep.incidence_witnesses)
        std::cerr << "incidence witness: point " << w.point_id << " disk " << w.disk_id
                  << " expected_inside=" << w.expected_inside << " d2=" << w.sq_distance << "\n";
    for (const auto& w : rep.exposedness_witnesses)
        std::cerr << "exposedness witness: disk " << w.disk_id << (w.top ? " top" : " bottom")
                  << " inside closure of disk " << w.covering_disk << " d2=" << w.sq_distance
                  << "\n";
    return rep.all_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_realize_extend(const std::string& in, int m, const std::string& step,
                       const std::string& pad, const std::string& out, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto r = realization_from_json(read_json_file(in));
    auto e = extend_with_grid(r, m, step.empty() ? Rational(0) : parse_rat_flag(step, "--step"),
                              pad.empty() ? Rational(2) : parse_rat_flag(pad, "--pad"));
    Json j;
    j["schema"] = "extension.v1";
    j["m"] = m;
    j["grid_step"] = format_rational(e.grid_step);
    j["box"] = {{"x0", format_rational(e.bounding_box.x0)},
                {"y0", format_rational(e.bounding_box.y0)},
                {"x1", format_rational(e.bounding_box.x1)},
                {"y1", format_rational(e.bounding_box.y1)}};
    j["extra_points"] = points_to_json(e.extra_points)["points"];
    write_text_file(out, dump_canonical(j));
    mf.outputs.push_back(out);
    std::cout << "extended with " << e.extra_points.size() << " grid points (step "
              << format_rational(e.grid_step) << ") -> " << out << "\n";
    return kExitOk;
}

int cmd_realize_coverage(const std::string& in, int m, const std::string& step,
                         const std::string& probe, const std::string& pad, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto r = realization_from_json(read_json_file(in));
    auto e = extend_with_grid(r, m, step.empty() ? Rational(0) : parse_rat_flag(step, "--step"),
                              pad.empty() ? Rational(2) : parse_rat_flag(pad, "--pad"));
    auto cov = min_disk_coverage(e, m,
                                 probe.empty() ? Rational(0) : parse_rat_flag(probe, "--probe"));
    std::cout << "MIN-COVER " << cov.min_count << " at (" << format_rational(cov.witness.x)
              << ", " << format_rational(cov.witness.y) << ") over " << cov.probes
              << " probes\n";
    return cov.min_count >= m ? kExitOk : kExitCheckFailed;
}

int cmd_realize_svg(const std::string& in, const std::string& out, const std::string& scale,
                    int extend_m, const std::string& step, const std::string& pad,
                    ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto r = realization_from_json(read_json_file(in));
    const Rational sc = scale.empty() ? Rational(200) : parse_rat_flag(scale, "--scale");
    std::string svg;
    if (extend_m > 0) {
        auto e = extend_with_grid(r, extend_m,
                                  step.empty() ? Rational(0) : parse_rat_flag(step, "--step"),
                                  pad.empty() ? Rational(2) : parse_rat_flag(pad, "--pad"));
        svg = svg_extended(e, sc);
    } else {
        svg = svg_realization(r, sc);
    }
    write_text_file(out, svg);
    mf.outputs.push_back(out);
    std::cout << "svg -> " << out << "\n";
    return kExitOk;
}

// ---- chain ----

int cmd_chain_from_points(const std::string& points_path, int m, const std::string& shape,
                          const std::string& scale, const std::string& out,
                          ManifestWriter& mf) {
    mf.inputs.push_back(points_path);
    if (shape != "parabola")
        throw CLI::ValidationError("--shape: only 'parabola' is available");
    auto pts = points_from_json(read_json_file(points_path));
    SweepGenerator g(pts, ParabolaShape{scale.empty() ? Rational(1)
                                                      : parse_rat_flag(scale, "--scale")},
                     m);
    auto c = chain_from_points(g);
    write_text_file(out, dump_canonical(chain_to_json(c)));
    mf.outputs.push_back(out);
    std::cout << "chain on " << c.n << " vertices with " << c.edges.size() << " edges -> "
              << out << "\n";
    return kExitOk;
}

int cmd_chain_check(const std::string& in, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto c = chain_from_json(read_json_file(in));  // structural validity enforced on ingest
    std::cout << "SHIFT-CHAIN valid, n=" << c.n << " m=" << c.m << " edges=" << c.edges.size()
              << "\n";
    auto sp = is_special(c);
    if (sp.special) {
        std::cout << "SPECIAL\n";
    } else {
        std::cout << "NOT-SPECIAL\n";
        std::cerr << "witness pair: edges " << sp.idx_a << " and " << sp.idx_b << "\n";
    }
    return kExitOk;
}

int cmd_chain_color(const std::string& in, const std::string& out, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto c = chain_from_json(read_json_file(in));
    auto col = color_chain(c);
    auto check = validate_chain_coloring(c, col);
    if (!check.valid) {
        std::cerr << "coloring failed validation at edge " << check.witness_edge << "\n";
        return kExitCheckFailed;
    }
    write_text_file(out, dump_canonical(chain_coloring_to_json(col)));
    mf.outputs.push_back(out);
    std::cout << "colored " << c.n << " vertices, " << c.edges.size()
              << " edges bichromatic -> " << out << "\n";
    return kExitOk;
}

int cmd_chain_verify(const std::string& in, const std::string& coloring_path,
                     ManifestWriter& mf) {
    mf.inputs.push_back(in);
    mf.inputs.push_back(coloring_path);
    auto c = chain_from_json(read_json_file(in));
    auto col = chain_coloring_from_json(read_json_file(coloring_path));
    if (col.n() != c.n) {
        std::cerr << "coloring covers " << col.n() << " vertices, chain has " << c.n << "\n";
        return kExitCheckFailed;
    }
    auto check = validate_chain_coloring(c, col);
    if (check.valid) {
        std::cout << "VALID\n";
        return kExitOk;
    }
    std::cout << "INVALID\n";
    std::cerr << "monochromatic edge index " << check.witness_edge << "\n";
    return kExitCheckFailed;
}

int cmd_chain_search(int n, int m, int edges, double budget_seconds, std::uint64_t nodes,
                     std::uint64_t seed, const std::string& out, ManifestWriter& mf) {
    auto res = search_unsplittable_chain(n, m, edges, nodes, budget_seconds, seed);
    if (!res.found) {
        std::cout << "EXHAUSTED-BUDGET after " << res.nodes << " nodes, " << res.restarts
                  << " restarts\n";
        return kExitOk;
    }
    auto cert = certify_unsplittable(*res.found);
    std::cout << "FOUND " << res.found->edges.size() << " triples on " << res.found->n
              << " vertices after " << res.nodes << " nodes\n";
    std::cout << "certificate: shift-chain=" << (cert.is_chain ? "yes" : "no")
              << " special=" << (cert.non_special ? "no" : "yes")
              << " 2-colorable=" << (cert.non_colorable ? "no" : "yes") << "\n";
    if (!out.empty()) {
        write_text_file(out, dump_canonical(chain_to_json(*res.found)));
        mf.outputs.push_back(out);
    }
    return cert.certified() ? kExitOk : kExitCheckFailed;
}

// ---- split ----

int cmd_split_build_cells(const std::string& in, const std::string& out, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto inst = covering_from_json(read_json_file(in));
    auto [h, rep] = build_cell_hypergraph(inst);
    std::cout << "cells: " << h.edges.size() << ", max multiplicity " << max_multiplicity(h)
              << ", min multiplicity " << rep.min_multiplicity
              << (rep.valid ? " (covering valid)" : " (covering INVALID)") << "\n";
    auto degs = edge_intersection_degrees(h);
    int max_deg = 0;
    for (int d : degs) max_deg = std::max(max_deg, d);
    std::cout << "max intersection degree N = " << max_deg << "\n";
    if (!out.empty()) {
        Json j;
        j["schema"] = "cells.v1";
        j["n_disks"] = h.n_disks;
        j["m_target"] = h.m_target;
        Json edges = Json::array();
        for (const auto& e : h.edges)
            edges.push_back({{"disks", e.disk_ids},
                             {"rep_x", format_rational(e.representative.x)},
                             {"rep_y", format_rational(e.representative.y)}});
        j["edges"] = std::move(edges);
        write_text_file(out, dump_canonical(j));
        mf.outputs.push_back(out);
    }
    return rep.valid ? kExitOk : kExitCheckFailed;
}

int cmd_split_thresholds(int k, int m, int d) {
    auto table = make_threshold_table(d, k, m);
    std::cout << "degree threshold k=" << k << " m=" << m << ": "
              << format_rational(table.lll_degree) << " = "
              << rational_to_decimal(table.lll_degree, 4) << "\n";
    std::cout << "unit-ball threshold d=" << d << ": 2^(" << format_rational(table.ball_exponent)
              << "), floor " << table.ball_floor.str() << "\n";
    std::cout << "unit-ball k-color floor: " << table.multicolor_floor.str() << "\n";
    if (table.homothet) {
        std::cout << "planar homothet floor: " << table.homothet->value.str()
                  << (table.homothet->vacuous ? " (vacuous below m=11)" : "") << "\n";
    }
    return kExitOk;
}

int cmd_split_run(const std::string& in, int k, std::uint64_t seed, std::uint64_t rounds,
                  const std::string& out, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto inst = covering_from_json(read_json_file(in));
    auto [h, rep] = build_cell_hypergraph(inst);
    if (!rep.valid)
        std::cerr << "note: covering is not " << inst.m_target
                  << "-fold at every cell (min " << rep.min_multiplicity << ")\n";
    auto res = resample_split(h, k, seed, rounds);
    if (!res.success) {
        std::cout << "FAILED after " << res.rounds << " rounds; " << res.stuck_edges.size()
                  << " edges stuck\n";
        return kExitCheckFailed;
    }
    auto ver = verify_split(h, res.colors, k);
    std::cout << "split into " << k << " classes in " << res.rounds << " resampling rounds; "
              << (ver.valid ? "verified" : "VERIFICATION FAILED") << "\n";
    write_text_file(out, dump_canonical(split_colors_to_json(seed, res.colors)));
    mf.outputs.push_back(out);
    return ver.valid ? kExitOk : kExitCheckFailed;
}

int cmd_split_verify(const std::string& in, const std::string& colors_path, int k,
                     ManifestWriter& mf) {
    mf.inputs.push_back(in);
    mf.inputs.push_back(colors_path);
    auto inst = covering_from_json(read_json_file(in));
    auto [h, rep] = build_cell_hypergraph(inst);
    (void)rep;
    auto colors = split_colors_from_json(read_json_file(colors_path), h.n_disks);
    int kk = k;
    for (int c : colors) kk = std::max(kk, c + 1);
    auto ver = verify_split(h, colors, kk);
    if (ver.valid) {
        std::cout << "OK: every class covers every cell\n";
        return kExitOk;
    }
    std::cout << "FAILED: " << ver.failures.size() << " cell/class gaps\n";
    for (std::size_t i = 0; i < ver.failures.size() && i < 5; ++i)
        std::cerr << "witness cell at (" << format_rational(ver.failures[i].first.x) << ", "
                  << format_rational(ver.failures[i].first.y) << ") missing class "
                  << ver.failures[i].second << "\n";
    return kExitCheckFailed;
}

int cmd_split_shatter(const std::string& in, ManifestWriter& mf) {
    mf.inputs.push_back(in);
    auto inst = covering_from_json(read_json_file(in));
    const int count = dual_shatter_count(inst.disks);
    const int n = static_cast<int>(inst.disks.size());
    const long long eq_bound =
        binomial(n - 1, 2) + binomial(n, 0) + binomial(n, 1) + binomial(n, 2);
    std::cout << count << "\n";
    std::cerr << "bounds: closed-form " << eq_bound << ", n^2-n+2 = " << n * n - n + 2 << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cover-split: non-2-colorable disk systems, shift-chain coloring, and "
                 "covering decomposition"};
    app.require_subcommand(1);
    ManifestWriter mf(argc, argv);

    // hypergraph
    auto* hg = app.add_subcommand("hypergraph", "build and check the recursive family H(k,l)");
    hg->require_subcommand(1);
    int hg_k = 2, hg_l = 2;
    std::string hg_out = "hypergraph.json", hg_in;
    auto* hg_build = hg->add_subcommand("build", "construct H(k,l)");
    hg_build->add_option("--k", hg_k, "red uniformity")->required();
    hg_build->add_option("--l", hg_l, "blue uniformity")->required();
    hg_build->add_option("--out", hg_out, "output path");
    bool hg_backtrack = false, hg_exhaustive = false, hg_expect = false;
    std::uint64_t hg_budget = 1'000'000;
    int hg_jobs = 0;
    auto* hg_check = hg->add_subcommand("check", "decide 2-colorability");
    hg_check->add_option("--in", hg_in, "hypergraph.v1 file")->required();
    hg_check->add_flag("--exhaustive", hg_exhaustive, "full scan (default)");
    hg_check->add_flag("--backtrack", hg_backtrack, "budgeted backtracking");
    hg_check->add_option("--budget", hg_budget, "backtracking node budget");
    hg_check->add_option("--jobs", hg_jobs, "worker count (or COVER_SPLIT_JOBS)");
    hg_check->add_flag("--expect-unsplittable", hg_expect,
                       "exit 1 if a valid coloring is found");

    // realize
    auto* re = app.add_subcommand("realize", "exact point/disk realizations");
    re->require_subcommand(1);
    int re_k = 2, re_l = 2, re_m = 2;
    std::string re_eps = "1/100", re_in, re_out = "realization.json", re_step, re_probe, re_pad,
                re_scale;
    auto* re_build = re->add_subcommand("build", "construct the realization");
    re_build->add_option("--k", re_k)->required();
    re_build->add_option("--l", re_l)->required();
    re_build->add_option("--eps", re_eps, "scale, rational in (0, 1/10)");
    re_build->add_option("--out", re_out);
    auto* re_verify = re->add_subcommand("verify", "check all six properties");
    re_verify->add_option("--in", re_in)->required();
    auto* re_extend = re->add_subcommand("extend", "add uncovered grid points");
    re_extend->add_option("--in", re_in)->required();
    re_extend->add_option("--m", re_m, "target multiplicity")->required();
    re_extend->add_option("--step", re_step, "grid pitch (default 1/(8m))");
    re_extend->add_option("--pad", re_pad, "box padding (default 2)");
    std::string re_ext_out = "extension.json";
    re_extend->add_option("--out", re_ext_out);
    auto* re_cov = re->add_subcommand("coverage", "minimum points per probed unit disk");
    re_cov->add_option("--in", re_in)->required();
    re_cov->add_option("--m", re_m, "required multiplicity")->required();
    re_cov->add_option("--step", re_step, "grid pitch (default 1/(8m))");
    re_cov->add_option("--probe", re_probe, "probe pitch (default step/2)");
    re_cov->add_option("--pad", re_pad, "box padding (default 2)");
    auto* re_svg = re->add_subcommand("svg", "render to SVG");
    re_svg->add_option("--in", re_in)->required();
    std::string re_svg_out = "realization.svg";
    re_svg->add_option("--out", re_svg_out);
    re_svg->add_option("--scale", re_scale, "pixels per unit (default 200)");

    // chain
    auto* ch = app.add_subcommand("chain", "shift-chain generation, coloring, search");
    ch->require_subcommand(1);
    std::string ch_points, ch_in, ch_out = "chain.json", ch_coloring,
                ch_shape = "parabola", ch_scale;
    int ch_m = 3, ch_n = 9, ch_edges = 13;
    double ch_budget = 0;
    std::uint64_t ch_nodes = 10'000'000, ch_seed = 0;
    auto* ch_from = ch->add_subcommand("from-points", "sweep a point set into a chain");
    ch_from->add_option("--points", ch_points, "points.v1 file")->required();
    ch_from->add_option("--m", ch_m, "uniformity")->required();
    ch_from->add_option("--shape", ch_shape, "sweep shape (parabola)");
    ch_from->add_option("--scale", ch_scale, "parabola scale s (default 1)");
    ch_from->add_option("--out", ch_out);
    auto* ch_check = ch->add_subcommand("check", "validate chain structure and specialness");
    ch_check->add_option("--in", ch_in)->required();
    auto* ch_color = ch->add_subcommand("color", "2-color a special chain");
    ch_color->add_option("--in", ch_in)->required();
    std::string ch_col_out = "coloring.json";
    ch_color->add_option("--out", ch_col_out);
    auto* ch_verify = ch->add_subcommand("verify", "check a coloring against a chain");
    ch_verify->add_option("--in", ch_in)->required();
    ch_verify->add_option("--coloring", ch_coloring)->required();
    auto* ch_search = ch->add_subcommand("search", "hunt for a non-2-colorable chain");
    ch_search->add_option("--n", ch_n, "vertex count (3..12)");
    ch_search->add_option("--m", ch_m, "uniformity (3)");
    ch_search->add_option("--edges", ch_edges, "edge budget");
    ch_search->add_option("--budget", ch_budget, "wall-clock seconds (0 = none)");
    ch_search->add_option("--nodes", ch_nodes, "node budget (deterministic)");
    ch_search->add_option("--seed", ch_seed, "rng seed")->required();
    std::string ch_search_out;
    ch_search->add_option("--out", ch_search_out, "write the found chain here");

    // split
    auto* sp = app.add_subcommand("split", "covering decomposition");
    sp->require_subcommand(1);
    std::string sp_in, sp_out = "colors.json", sp_colors, sp_cells_out;
    int sp_k = 2, sp_m = 10, sp_d = 2;
    std::uint64_t sp_seed = 0, sp_rounds = 1'000'000;
    auto* sp_cells = sp->add_subcommand("build-cells", "enumerate arrangement cells");
    sp_cells->add_option("--in", sp_in, "covering.v1 file")->required();
    sp_cells->add_option("--out", sp_cells_out, "optional cells.v1 output");
    auto* sp_thr = sp->add_subcommand("thresholds", "print the splitting thresholds");
    sp_thr->add_option("--k", sp_k, "colors");
    sp_thr->add_option("--m", sp_m, "multiplicity")->required();
    sp_thr->add_option("--d", sp_d, "dimension");
    auto* sp_run = sp->add_subcommand("run", "resample a k-coloring of the disks");
    sp_run->add_option("--in", sp_in)->required();
    sp_run->add_option("--k", sp_k, "classes");
    sp_run->add_option("--seed", sp_seed)->required();
    sp_run->add_option("--rounds", sp_rounds, "resampling cap");
    sp_run->add_option("--out", sp_out);
    auto* sp_verify = sp->add_subcommand("verify", "check a split against its covering");
    sp_verify->add_option("--in", sp_in)->required();
    sp_verify->add_option("--colors", sp_colors)->required();
    sp_verify->add_option("--k", sp_k, "classes");
    auto* sp_shatter = sp->add_subcommand("shatter", "count distinct cells in the plane");
    sp_shatter->add_option("--in", sp_in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        int rc = kExitBadArgs;
        if (hg_build->parsed()) rc = cmd_hypergraph_build(hg_k, hg_l, hg_out, mf);
        else if (hg_check->parsed())
            rc = cmd_hypergraph_check(hg_in, hg_backtrack && !hg_exhaustive, hg_budget,
                                      jobs_from_env_or_flag(hg_jobs), hg_expect, mf);
        else if (re_build->parsed()) rc = cmd_realize_build(re_k, re_l, re_eps, re_out, mf);
        else if (re_verify->parsed()) rc = cmd_realize_verify(re_in, mf);
        else if (re_extend->parsed())
            rc = cmd_realize_extend(re_in, re_m, re_step, re_pad, re_ext_out, mf);
        else if (re_cov->parsed())
            rc = cmd_realize_coverage(re_in, re_m, re_step, re_probe, re_pad, mf);
        else if (re_svg->parsed()) rc = cmd_realize_svg(re_in, re_svg_out, re_scale, mf);
        else if (ch_from->parsed())
            rc = cmd_chain_from_points(ch_points, ch_m, ch_shape, ch_scale, ch_out, mf);
        else if (ch_check->parsed()) rc = cmd_chain_check(ch_in, mf);
        else if (ch_color->parsed()) rc = cmd_chain_color(ch_in, ch_col_out, mf);
        else if (ch_verify->parsed()) rc = cmd_chain_verify(ch_in, ch_coloring, mf);
        else if (ch_search->parsed()) {
            mf.seed = ch_seed;
            rc = cmd_chain_search(ch_n, ch_m, ch_edges, ch_budget, ch_nodes, ch_seed,
                                  ch_search_out, mf);
        } else if (sp_cells->parsed()) rc = cmd_split_build_cells(sp_in, sp_cells_out, mf);
        else if (sp_thr->parsed()) rc = cmd_split_thresholds(sp_k, sp_m, sp_d);
        else if (sp_run->parsed()) {
            mf.seed = sp_seed;
            rc = cmd_split_run(sp_in, sp_k, sp_seed, sp_rounds, sp_out, mf);
        } else if (sp_verify->parsed()) rc = cmd_split_verify(sp_in, sp_colors, sp_k, mf);
        else if (sp_shatter->parsed()) rc = cmd_split_shatter(sp_in, mf);
        mf.emit();
        return rc;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
