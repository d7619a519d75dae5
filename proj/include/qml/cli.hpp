#pragma once

#include "qml/json_io.hpp"
#include "qml/svg.hpp"
#include "qml/tuning.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace qml {

namespace detail {

inline int write_output(const std::string& text, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(out_path);
    if (!file) {
        err << "cannot open output file: " << out_path << "\n";
        return 1;
    }
    file << text;
    return 0;
}

inline RenderConfig render_config(const std::string& style, long size, const std::string& stroke) {
    RenderConfig cfg;
    cfg.geodesic_style = style == "straight" ? GeodesicStyle::straight : GeodesicStyle::hyperbolic;
    cfg.size_px = size;
    cfg.stroke_by = stroke == "period"       ? StrokeBy::period
                    : stroke == "generation" ? StrokeBy::generation
                                             : StrokeBy::uniform;
    return cfg;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 1 malformed arguments, 2 verification rejection, 3 internal invariant
/// breach.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"quadratic minor lamination toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";
    std::string style = "hyperbolic";
    std::string stroke = "uniform";
    long size_px = 800;

    std::string minor_text, base_text, chord_text, angle_text;
    long depth = 4, max_q = 4, period = 3;
    int generations = 2, levels = 0;
    bool certificate = false;

    auto add_render_opts = [&](CLI::App* cmd) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "svg"}));
        cmd->add_option("--out", out_path);
        cmd->add_option("--size", size_px);
        cmd->add_option("--style", style)->check(CLI::IsMember({"straight", "hyperbolic"}));
        cmd->add_option("--stroke-by", stroke)->check(CLI::IsMember({"uniform", "period", "generation"}));
    };

    CLI::App* lam = app.add_subcommand("lam", "build a minor leaf lamination approximation");
    lam->add_option("--minor", minor_text)->required();
    lam->add_option("--depth", depth)->required();
    add_render_opts(lam);

    CLI::App* qmlnr = app.add_subcommand("qmlnr", "approximate the non-renormalizable sublamination");
    qmlnr->add_option("--max-q", max_q)->required();
    qmlnr->add_option("--generations", generations)->required();
    qmlnr->add_option("--depth", depth)->required();
    add_render_opts(qmlnr);

    CLI::App* qml_cmd = app.add_subcommand("qml", "approximate the full lamination with tuning levels");
    qml_cmd->add_option("--max-q", max_q)->required();
    qml_cmd->add_option("--generations", generations)->required();
    qml_cmd->add_option("--depth", depth)->required();
    qml_cmd->add_option("--levels", levels)->required();
    add_render_opts(qml_cmd);

    CLI::App* verify = app.add_subcommand("verify", "stand-alone minor verification certificate");
    verify->add_option("chord", chord_text)->required();
    verify->add_option("--out", out_path);

    CLI::App* cardioid = app.add_subcommand("cardioid", "edges of the combinatorial main cardioid");
    cardioid->add_option("--max-q", max_q)->required();
    cardioid->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "svg"}));
    cardioid->add_option("--out", out_path);

    CLI::App* offspring_cmd = app.add_subcommand("offspring", "offspring of a minor at a target angle");
    offspring_cmd->add_option("--minor", minor_text)->required();
    offspring_cmd->add_option("--angle", angle_text)->required();
    offspring_cmd->add_flag("--certificate", certificate);
    offspring_cmd->add_option("--out", out_path);

    CLI::App* tune = app.add_subcommand("tune", "tune a chord into the copy behind a periodic minor");
    tune->add_option("--base", base_text)->required();
    tune->add_option("--chord", chord_text)->required();
    tune->add_option("--out", out_path);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive periodic-minor enumeration report");
    oracle_cmd->add_option("--period", period)->required();
    oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    oracle_cmd->add_option("--out", out_path);
    oracle_cmd->preparse_callback([&](std::size_t) { format = "csv"; });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError&) {
        err << "malformed arguments\n";
        return 1;
    }

    try {
        auto verify_or_exit = [&](const Chord& c, MinorRecord& rec) -> int {
            VerifyResult v = verify_minor(c);
            if (auto* r = std::get_if<MinorRecord>(&v)) {
                rec = std::move(*r);
                return 0;
            }
            err << to_json(std::get<SaRejection>(v)).dump(2) << "\n";
            return 2;
        };

        if (lam->parsed()) {
            MinorRecord rec;
            if (int rc = verify_or_exit(Chord::parse(minor_text), rec)) return rc;
            Lamination l = build_lamination(rec, depth);
            std::string text = format == "csv"   ? lamination_csv(l)
                               : format == "svg" ? render_svg(l.leaves, detail::render_config(style, size_px, stroke))
                                                 : to_json(l).dump(2) + "\n";
            return detail::write_output(text, out_path, out, err);
        }
        if (qmlnr->parsed()) {
            QmlNrResult r = qml_nr_approx(max_q, generations, depth);
            std::string text;
            if (format == "csv") {
                text = qmlnr_csv(r);
            } else if (format == "svg") {
                text = render_svg(r.chords(), detail::render_config(style, size_px, stroke));
            } else {
                text = to_json(r).dump(2) + "\n";
            }
            return detail::write_output(text, out_path, out, err);
        }
        if (qml_cmd->parsed()) {
            std::vector<MinorRecord> recs = qml_approx(max_q, generations, depth, levels);
            std::string text;
            if (format == "csv") {
                std::ostringstream os;
                for (const MinorRecord& r : recs)
                    os << r.chord.to_string() << "," << to_string(r.classification) << "\n";
                text = os.str();
            } else if (format == "svg") {
                std::vector<Chord> chords;
                chords.reserve(recs.size());
                for (const MinorRecord& r : recs) chords.push_back(r.chord);
                text = render_svg(chords, detail::render_config(style, size_px, stroke));
            } else {
                json leaves = json::array();
                for (const MinorRecord& r : recs)
                    leaves.push_back({{"chord", r.chord.to_string()},
                                      {"classification", to_string(r.classification)}});
                text = json{{"params",
                             {{"max_q", max_q},
                              {"generations", generations},
                              {"depth", depth},
                              {"levels", levels}}},
                            {"leaves", leaves}}
                           .dump(2) +
                       "\n";
            }
            return detail::write_output(text, out_path, out, err);
        }
        if (verify->parsed()) {
            VerifyResult v = verify_minor(Chord::parse(chord_text));
            int rc = std::holds_alternative<MinorRecord>(v) ? 0 : 2;
            if (int wrc = detail::write_output(to_json(v).dump(2) + "\n", out_path, out, err)) return wrc;
            return rc;
        }
        if (cardioid->parsed()) {
            std::vector<CardioidEdge> edges = cardioid_edges(max_q);
            std::string text;
            if (format == "json") {
                json arr = json::array();
                for (const CardioidEdge& e : edges)
                    arr.push_back({{"rotation", e.rotation_label()},
                                   {"minor", e.minor.chord.to_string()}});
                text = arr.dump(2) + "\n";
            } else {
                std::ostringstream os;
                for (const CardioidEdge& e : edges)
                    os << e.rotation_label() << "\t" << e.minor.chord.to_string() << "\n";
                text = os.str();
            }
            return detail::write_output(text, out_path, out, err);
        }
        if (offspring_cmd->parsed()) {
            MinorRecord rec;
            if (int rc = verify_or_exit(Chord::parse(minor_text), rec)) return rc;
            MinorRecord result = offspring(rec, Angle::parse(angle_text));
            std::string text = result.chord.to_string() + "\n";
            if (certificate) text += to_json(result).dump(2) + "\n";
            return detail::write_output(text, out_path, out, err);
        }
        if (tune->parsed()) {
            MinorRecord base;
            if (int rc = verify_or_exit(Chord::parse(base_text), base)) return rc;
            TuningWords w = tuning_words(base);
            Chord tuned = tune_chord(w, Chord::parse(chord_text));
            VerifyResult v = verify_minor(tuned);
            std::string text = tuned.to_string() + "\n" + to_json(v).dump(2) + "\n";
            if (int wrc = detail::write_output(text, out_path, out, err)) return wrc;
            return std::holds_alternative<MinorRecord>(v) ? 0 : 2;
        }
        if (oracle_cmd->parsed()) {
            EnumerationReport report = enumerate_periodic_minors(period);
            std::string text;
            if (format == "json") {
                json rej = json::array();
                for (const RejectionEntry& r : report.rejected)
                    rej.push_back({{"chord", r.chord.to_string()},
                                   {"violated", to_string(r.violated)},
                                   {"witness", r.witness}});
                json acc = json::array();
                for (const MinorRecord& r : report.accepted) acc.push_back(r.chord.to_string());
                text = json{{"period", report.period_bound},
                            {"candidates_checked", report.candidates_checked},
                            {"accepted", acc},
                            {"rejected", rej}}
                           .dump(2) +
                       "\n";
            } else {
                text = oracle_csv(report);
            }
            return detail::write_output(text, out_path, out, err);
        }
        err << "no subcommand\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal invariant breach: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qml
