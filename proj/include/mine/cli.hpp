#ifndef MINE_CLI_HPP
#define MINE_CLI_HPP

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mine/ap_verify.hpp"
#include "mine/classifier.hpp"
#include "mine/generators.hpp"
#include "mine/io.hpp"
#include "mine/klabel.hpp"
#include "mine/planarize.hpp"
#include "mine/solvers/alpha_expansion.hpp"
#include "mine/solvers/brute_force.hpp"
#include "mine/solvers/elimination.hpp"
#include "mine/solvers/submodular.hpp"
#include "mine/solvers/tree_dp.hpp"
#include "mine/w3sat.hpp"

namespace mine {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitPrecondition = 3, kExitCounterexample = 4 };

namespace cli {

inline InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }

/// The drawing stored with the instance, or the circle layout.
inline Drawing drawing_or_layout(const InstanceFile& f) { return f.drawing ? *f.drawing : circle_layout(f.instance); }

inline SolveResult solve_with(const EnergyInstance& inst, const std::string& method) {
    if (method == "brute") {
        return solve_brute_force(inst, brute_force_limit_from_env());
    }
    if (method == "elim") {
        return solve_elimination(inst);
    }
    if (method == "tree") {
        return solve_tree_dp(inst);
    }
    if (method == "mincut") {
        return solve_submodular_qpbo(inst);
    }
    if (method == "alphaexp") {
        return alpha_expansion(inst).result;
    }
    throw PreconditionError("unknown method '" + method + "'");
}

inline void print_labeling(std::ostream& out, const EnergyInstance& inst, const Labeling& x) {
    out << "labeling";
    for (std::size_t i = 0; i < inst.size(); ++i) {
        out << ' ' << inst.node_id(i) << '=' << x[i];
    }
    out << '\n';
}

inline nlohmann::json report_to_json(const ComplexityReport& r) {
    nlohmann::json j;
    j["verdict"] = to_string(r.verdict);
    j["rule"] = r.rule;
    j["solver"] = r.solver;
    j["guarantee"] = r.guarantee;
    j["structure"] = {{"forest", r.forest},
                      {"drawing_given", r.drawing_given},
                      {"planar_by_drawing", r.planar_by_drawing},
                      {"binary", r.binary},
                      {"uniform_k", r.uniform_k},
                      {"finite", r.finite}};
    if (r.k) {
        j["structure"]["k"] = *r.k;
    }
    j["interactions"] = {{"submodular_binary", r.submodular_binary},
                         {"submodular_lattice", r.submodular_lattice},
                         {"potts", r.potts},
                         {"metric", r.metric}};
    j["undetected"] = r.undetected;
    return j;
}

inline void print_report(std::ostream& out, const ComplexityReport& r) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "verdict " << to_string(r.verdict) << '\n';
    out << "rule " << r.rule << '\n';
    out << "solver " << r.solver << '\n';
    out << "guarantee " << r.guarantee << '\n';
    out << "forest " << yn(r.forest) << '\n';
    out << "planar-by-drawing " << (r.drawing_given ? yn(r.planar_by_drawing) : "n/a") << '\n';
    out << "binary " << yn(r.binary) << '\n';
    out << "uniform-k " << (r.k ? std::to_string(*r.k) : std::string(yn(r.uniform_k))) << '\n';
    out << "finite " << yn(r.finite) << '\n';
    out << "submodular-binary " << yn(r.submodular_binary) << '\n';
    out << "submodular-lattice " << yn(r.submodular_lattice) << '\n';
    out << "potts " << yn(r.potts) << '\n';
    out << "metric " << yn(r.metric) << '\n';
    for (const auto& u : r.undetected) {
        out << "undetected " << u << '\n';
    }
}

/// Straight-line drawing as SVG, crossings marked in red.
inline std::string render_svg(const EnergyInstance& inst, const Drawing& d) {
    const std::vector<Crossing> crossings = list_crossings(inst, d);
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    bool first = true;
    auto to_xy = [](const Point& p) { return std::pair{p.x.convert_to<double>(), p.y.convert_to<double>()}; };
    for (const auto& [id, p] : d) {
        const auto [x, y] = to_xy(p);
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const double size = 600;
    const double margin = 30;
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double scale = (size - 2 * margin) / span;
    auto sx = [&](double x) { return margin + (x - min_x) * scale; };
    auto sy = [&](double y) { return size - margin - (y - min_y) * scale; };

    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
       << size << ' ' << size << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& [key, t] : inst.edges()) {
        const auto [x1, y1] = to_xy(d.at(inst.node_id(key.first)));
        const auto [x2, y2] = to_xy(d.at(inst.node_id(key.second)));
        os << "<line x1=\"" << sx(x1) << "\" y1=\"" << sy(y1) << "\" x2=\"" << sx(x2) << "\" y2=\"" << sy(y2)
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (const auto& c : crossings) {
        const auto [x, y] = to_xy(c.point);
        os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"5\" fill=\"none\" stroke=\"red\"/>\n";
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto [x, y] = to_xy(d.at(inst.node_id(i)));
        const bool binary = inst.label_count(i) == 3 && inst.unary(i)[2].is_infinite();
        os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"4\" fill=\"" << (binary ? "gray" : "steelblue")
           << "\"/>\n";
        os << "<text x=\"" << sx(x) + 5 << "\" y=\"" << sy(y) - 5 << "\" font-size=\"10\">" << inst.node_id(i) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline std::vector<std::filesystem::path> corpus_files(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

inline void print_ap_report(std::ostream& out, const ApReport& rep, const std::vector<std::filesystem::path>& files) {
    for (const auto& info : rep.instances) {
        out << "instance " << files[info.index].filename().string() << " m1* " << info.source_optimum << " m2* "
            << info.target_optimum.to_string() << " solutions " << info.solutions
            << (info.ratio_undefined ? " ratio-undefined" : "") << '\n';
    }
    for (const auto& c : rep.counterexamples) {
        out << "counterexample " << files[c.instance].filename().string() << ' ' << c.check << ": " << c.detail;
        if (c.y) {
            out << " y=";
            for (Label l : *c.y) {
                out << l;
            }
        }
        out << '\n';
    }
    out << "reduction " << rep.reduction << " alpha " << to_fraction_string(rep.alpha) << " instances "
        << rep.instances.size() << " ratio-undefined " << rep.ratio_undefined_count() << " counterexamples "
        << rep.counterexamples.size() << '\n';
    out << (rep.ok() ? "PASS" : "FAIL") << '\n';
}

} // namespace cli

/// Runs the command line with `args` excluding the program name. Output goes
/// to `out`, diagnostics to `err`; the return value is the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pairwise energy minimization: reductions, solvers, classification"};
    app.require_subcommand(1);

    std::string in_path, out_path, trace_path, solution_path, method = "brute", reduction, corpus, family, alpha_text = "1";
    std::size_t k = 3;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    bool json = false;

    auto* reduce = app.add_subcommand("reduce", "apply a forward map");
    reduce->add_option("reduction", reduction, "w3sat-to-qpbo | qpbo-to-klabel | planarize")
        ->required()
        ->check(CLI::IsMember({"w3sat-to-qpbo", "qpbo-to-klabel", "planarize"}));
    reduce->add_option("input", in_path)->required();
    reduce->add_option("output", out_path)->required();
    reduce->add_option("--trace", trace_path, "write the reduction trace (JSON)");
    reduce->add_option("--k", k, "target label count for qpbo-to-klabel");

    auto* sigma = app.add_subcommand("sigma", "map a target solution back to the source");
    sigma->add_option("--trace", trace_path)->required();
    sigma->add_option("--solution", solution_path)->required();
    sigma->add_option("input", in_path, "source file the trace was produced from")->required();
    sigma->add_option("--out", out_path);

    auto* solve = app.add_subcommand("solve", "minimize an instance");
    solve->add_option("--method", method)->check(CLI::IsMember({"brute", "elim", "tree", "mincut", "alphaexp"}));
    solve->add_option("input", in_path)->required();
    solve->add_option("--out", out_path, "write the solution file");

    auto* classify_cmd = app.add_subcommand("classify", "place an instance on the complexity axis");
    classify_cmd->add_option("input", in_path)->required();
    classify_cmd->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify-ap", "check AP-reduction properties on a corpus");
    verify->add_option("--reduction", reduction)
        ->required()
        ->check(CLI::IsMember({"identity", "w3sat-to-qpbo", "qpbo-to-klabel"}));
    verify->add_option("--corpus", corpus)->required()->check(CLI::ExistingDirectory);
    verify->add_option("--alpha", alpha_text, "rational alpha >= 1");
    verify->add_option("--k", k, "target label count for qpbo-to-klabel");

    auto* gen_cmd = app.add_subcommand("gen", "generate seeded instances");
    gen_cmd->add_option("--family", family)->required()->check(CLI::IsMember(gen::families()));
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--count", count);
    gen_cmd->add_option("--out", out_path, "directory for the generated files");

    auto* plot = app.add_subcommand("plot", "draw the straight-line embedding as SVG");
    plot->add_option("input", in_path)->required();
    plot->add_option("--out", out_path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*reduce) {
            if (reduction == "w3sat-to-qpbo") {
                auto [target, trace] = w3sat_to_qpbo(parse_wcnf3(read_file(in_path)));
                write_file(out_path, serialize_instance(target));
                if (!trace_path.empty()) {
                    write_file(trace_path, serialize_trace(trace));
                }
                out << "nodes " << target.size() << " aux " << trace.aux_nodes.size() << " M " << trace.big_m << '\n';
            } else if (reduction == "qpbo-to-klabel") {
                const InstanceFile f = cli::load_instance(in_path);
                auto [target, trace] = qpbo_to_klabel(f.instance, k);
                write_file(out_path, serialize_instance(target));
                if (!trace_path.empty()) {
                    write_file(trace_path, serialize_trace(trace));
                }
                out << "nodes " << target.size() << " k " << k << " M " << trace.big_m << '\n';
            } else {
                const InstanceFile f = cli::load_instance(in_path);
                const Drawing d = cli::drawing_or_layout(f);
                const std::size_t before = list_crossings(f.instance, d).size();
                PlanarizeResult r = planarize(f.instance, d);
                write_file(out_path, serialize_instance(r.instance, &r.drawing));
                if (!trace_path.empty()) {
                    write_file(trace_path, serialize_trace(r.trace));
                }
                out << "crossings " << before << " -> " << list_crossings(r.instance, r.drawing).size() << '\n';
                out << "nodes " << r.instance.size() << " aux " << r.trace.aux_nodes.size() << " per-crossing "
                    << kAuxNodesPerCrossing << " (reference " << kReferenceAuxNodesPerCrossing << ")\n";
            }
            return kExitOk;
        }
        if (*sigma) {
            const ReductionTrace trace = parse_trace(read_file(trace_path));
            std::string text;
            switch (trace.kind) {
                case ReductionKind::W3satToQpbo: {
                    const W3SatTriv s = parse_wcnf3(read_file(in_path));
                    auto [target, rebuilt] = w3sat_to_qpbo(s);
                    const Labeling y = parse_solution(read_file(solution_path), target);
                    const TruthAssignment tau = w3sat_sigma(s, trace, y);
                    text = serialize_assignment(tau) + "measure " + std::to_string(measure(s, tau)) + "\n";
                    break;
                }
                case ReductionKind::QpboToKlabel: {
                    const InstanceFile f = cli::load_instance(in_path);
                    auto [target, rebuilt] = qpbo_to_klabel(f.instance, trace.k);
                    const Labeling y = parse_solution(read_file(solution_path), target);
                    text = serialize_solution(f.instance, klabel_sigma(f.instance, trace, y));
                    break;
                }
                case ReductionKind::Planarize: {
                    const InstanceFile f = cli::load_instance(in_path);
                    const Drawing d = cli::drawing_or_layout(f);
                    PlanarizeResult r = planarize(f.instance, d);
                    const Labeling y = parse_solution(read_file(solution_path), r.instance);
                    text = serialize_solution(f.instance, planar_sigma(f.instance, d, trace, y));
                    break;
                }
                case ReductionKind::Identity: {
                    const InstanceFile f = cli::load_instance(in_path);
                    text = serialize_solution(f.instance, parse_solution(read_file(solution_path), f.instance));
                    break;
                }
            }
            if (out_path.empty()) {
                out << text;
            } else {
                write_file(out_path, text);
            }
            return kExitOk;
        }
        if (*solve) {
            const InstanceFile f = cli::load_instance(in_path);
            const SolveResult r = cli::solve_with(f.instance, method);
            out << "method " << r.method << '\n';
            out << "value " << r.value.to_string() << '\n';
            out << "exact " << (r.exact ? "yes" : "no") << '\n';
            cli::print_labeling(out, f.instance, r.labeling);
            if (!out_path.empty()) {
                write_file(out_path, serialize_solution(f.instance, r.labeling));
            }
            return kExitOk;
        }
        if (*classify_cmd) {
            const InstanceFile f = cli::load_instance(in_path);
            const ComplexityReport r = classify(f.instance, f.drawing ? &*f.drawing : nullptr);
            if (json) {
                out << cli::report_to_json(r).dump(2) << '\n';
            } else {
                cli::print_report(out, r);
            }
            return kExitOk;
        }
        if (*verify) {
            const Rational alpha = io::parse_rational(io::Line{0, {}}, io::Token{alpha_text, 0});
            const auto files = cli::corpus_files(corpus);
            ApReport rep;
            if (reduction == "w3sat-to-qpbo") {
                std::vector<W3SatTriv> sources;
                for (const auto& p : files) {
                    sources.push_back(parse_wcnf3(read_file(p.string())));
                }
                rep = verify_ap_reduction(w3sat_reduction(), alpha, sources, brute_force_limit_from_env());
            } else {
                std::vector<EnergyInstance> sources;
                for (const auto& p : files) {
                    sources.push_back(cli::load_instance(p.string()).instance);
                }
                const auto red = reduction == "identity" ? identity_reduction() : klabel_reduction(k);
                rep = verify_ap_reduction(red, alpha, sources, brute_force_limit_from_env());
            }
            cli::print_ap_report(out, rep, files);
            return rep.ok() ? kExitOk : kExitCounterexample;
        }
        if (*gen_cmd) {
            const std::string ext = family == "w3sat" ? ".wcnf3" : ".mine";
            for (std::size_t i = 0; i < count; ++i) {
                const std::uint64_t s = seed + i;
                const std::string text = gen::generate_family(family, s);
                if (out_path.empty()) {
                    out << text;
                } else {
                    std::filesystem::create_directories(out_path);
                    const auto path = std::filesystem::path(out_path) / (family + "-" + std::to_string(s) + ext);
                    write_file(path.string(), text);
                    out << path.string() << '\n';
                }
            }
            return kExitOk;
        }
        if (*plot) {
            const InstanceFile f = cli::load_instance(in_path);
            const Drawing d = cli::drawing_or_layout(f);
            write_file(out_path, cli::render_svg(f.instance, d));
            out << "crossings " << list_crossings(f.instance, d).size() << '\n';
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace mine

#endif // MINE_CLI_HPP
