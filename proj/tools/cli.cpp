#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "moveable/errors.hpp"
#include "moveable/gallery.hpp"
#include "moveable/replay.hpp"
#include "moveable/scene.hpp"
#include "moveable/svg.hpp"
#include "moveable/trace.hpp"

namespace moveable {

namespace {

namespace fs = std::filesystem;

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInvariant = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

ContainmentPolicy policy_option(const std::string& text) {
    auto p = parse_policy(text);
    if (!p) throw InputError("bad policy '" + text + "' (expected unrestricted, inside or partly:N)");
    return *p;
}

std::string describe(const InputError& e, const std::string& file) {
    std::string msg = file.empty() ? std::string("input") : file;
    if (e.line() > 0) msg += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
    if (!e.path().empty()) msg += " at " + e.path();
    return msg + ": " + e.what();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contour-based moving and resizing of screen objects"};
    app.require_subcommand(1);

    std::string scene_path;
    std::string trace_path;
    std::string out_path;
    std::string report_path;
    std::string svg_dir;
    std::string policy_text;
    bool contours = false;

    auto* replay_cmd = app.add_subcommand("replay", "Replay a mouse trace over a scene");
    replay_cmd->add_option("--scene", scene_path, "Scene JSON file")->required();
    replay_cmd->add_option("--trace", trace_path, "Trace file, JSON lines")->required();
    replay_cmd->add_option("--out", out_path, "Write the final scene here instead of stdout");
    replay_cmd->add_option("--report", report_path, "Write the per-event report (JSON) here");
    replay_cmd->add_option("--svg-dir", svg_dir, "Write before.svg and after.svg into this directory");
    replay_cmd->add_flag("--contours", contours, "Draw contours in SVG output");
    replay_cmd->add_option("--policy", policy_text, "Override the scene's containment policy");

    std::string render_scene;
    std::string render_svg;
    auto* render_cmd = app.add_subcommand("render", "Render a scene to SVG");
    render_cmd->add_option("--scene", render_scene, "Scene JSON file")->required();
    render_cmd->add_option("--svg", render_svg, "Output SVG file (stdout if omitted)");
    render_cmd->add_flag("--contours", contours, "Draw contours");

    bool list = false;
    std::string emit_dir;
    auto* gallery_cmd = app.add_subcommand("gallery", "List or write the built-in demonstration cases");
    gallery_cmd->add_flag("--list", list, "Print the cases");
    gallery_cmd->add_option("--emit", emit_dir, "Write scenes, traces and SVGs into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : kUsage;
    }

    std::string current_file;
    try {
        if (*replay_cmd) {
            current_file = scene_path;
            Scene scene = load_scene(read_file(scene_path));
            if (!policy_text.empty()) scene.policy = policy_option(policy_text);
            current_file = trace_path;
            const auto events = load_trace(read_file(trace_path));
            current_file.clear();
            const ReplayReport report = replay(scene, events);
            const std::string final_text = save_scene(report.final_scene);
            if (out_path.empty()) {
                out << final_text;
            } else {
                write_file(out_path, final_text);
            }
            if (!report_path.empty()) write_file(report_path, report_to_json(report).dump(2) + "\n");
            if (!svg_dir.empty()) {
                fs::create_directories(svg_dir);
                write_file(fs::path(svg_dir) / "before.svg", emit_svg(scene, contours));
                write_file(fs::path(svg_dir) / "after.svg", emit_svg(report.final_scene, contours));
            }
            return 0;
        }
        if (*render_cmd) {
            current_file = render_scene;
            const Scene scene = load_scene(read_file(render_scene));
            const std::string svg = emit_svg(scene, contours);
            if (render_svg.empty()) {
                out << svg;
            } else {
                write_file(render_svg, svg);
            }
            return 0;
        }
        if (*gallery_cmd) {
            const auto cases = gallery_cases();
            if (list || emit_dir.empty()) {
                for (const auto& c : cases) out << case_stem(c) << "  " << c.title << "\n";
            }
            if (!emit_dir.empty()) {
                const fs::path dir(emit_dir);
                fs::create_directories(dir);
                for (const auto& c : cases) {
                    const std::string stem = case_stem(c);
                    write_file(dir / (stem + ".scene.json"), save_scene(c.scene));
                    write_file(dir / (stem + ".trace.jsonl"), save_trace(c.trace));
                    write_file(dir / (stem + ".svg"), emit_svg(c.scene, true));
                }
                const Scene all = combined_gallery();
                write_file(dir / "gallery.scene.json", save_scene(all));
                write_file(dir / "gallery.svg", emit_svg(all, true));
            }
            return 0;
        }
    } catch (const InputError& e) {
        err << "error: " << describe(e, current_file) << "\n";
        return kInput;
    } catch (const InvariantViolation& e) {
        err << "error: " << (current_file.empty() ? "" : current_file + ": ") << e.what() << "\n";
        return kInvariant;
    }
    return kUsage;
}

}  // namespace moveable
