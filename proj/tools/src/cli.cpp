#include "mstd/cli.hpp"

#include "mstd/analysis.hpp"
#include "mstd/combinators.hpp"
#include "mstd/constructions.hpp"
#include "mstd/errors.hpp"
#include "mstd/io.hpp"
#include "mstd/montecarlo.hpp"
#include "mstd/sumset.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace mstd {

namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw Error("cannot write '" + path + "'");
    }
}

void emit_set(const PointSet& a, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        write_pts(a, out);
    } else {
        write_pts_file(a, path);
    }
}

int verdict(bool ok) { return ok ? exit_ok : exit_failed; }

std::string join(const std::vector<Coord>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(xs[i]);
    }
    return s + "}";
}

SumDiffSpec parse_spec_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ArgumentError("expected 's,d', got '" + text + "'");
    }
    try {
        std::size_t used_s = 0;
        std::size_t used_d = 0;
        const auto s = std::stoul(text.substr(0, comma), &used_s);
        const auto d = std::stoul(text.substr(comma + 1), &used_d);
        if (used_s != comma || used_d != text.size() - comma - 1) {
            throw ArgumentError("expected 's,d', got '" + text + "'");
        }
        return {static_cast<unsigned>(s), static_cast<unsigned>(d)};
    } catch (const std::logic_error&) {
        throw ArgumentError("expected 's,d', got '" + text + "'");
    }
}

struct Specs {
    unsigned s1 = 0, d1 = 0, s2 = 0, d2 = 0;
};

void add_specs(CLI::App* cmd, Specs& s) {
    cmd->add_option("--s1", s.s1, "sums in the first spec")->required();
    cmd->add_option("--d1", s.d1, "differences in the first spec")->required();
    cmd->add_option("--s2", s.s2, "sums in the second spec")->required();
    cmd->add_option("--d2", s.d2, "differences in the second spec")->required();
}

std::vector<VerificationReport> appendix_suite() {
    std::vector<VerificationReport> out;

    auto gap_report = [&](SumDiffSpec a, SumDiffSpec b, std::int64_t expected) {
        ConstructionParams p;
        p.k = 4;
        p.dims = {136};
        p.spec1 = a;
        p.spec2 = b;
        auto r = verify_generalized(build_1d(p).set, a, b);
        r.label = "1d k=4 n=136 " + r.label + " gap " + (expected > 0 ? "+" : "") + std::to_string(expected);
        r.details["expected_gap"] = expected;
        r.passed = r.passed && r.gap == expected;
        out.push_back(r);
    };
    gap_report({4, 0}, {2, 2}, 1);
    gap_report({2, 2}, {4, 0}, 2);

    const auto a058 = PointSet::of({0, 5, 8});
    for (std::uint64_t k : {8U, 9U}) {
        const bool in = membership_in_kfold(a058, 54, k);
        const bool want = k == 9;
        auto r = make_report("54 in " + std::to_string(k) + "{0,5,8}", Comparison::balance, in ? 1 : 0, want ? 1 : 0);
        out.push_back(r);
    }

    for (auto a : {PointSet::of({0, 1, 3}), PointSet::of({0, 5, 8}), PointSet::of({0, 4, 7, 9})}) {
        const auto profile = nathanson_stabilize(a);
        auto r = right_fringe_check(a, profile.k_threshold);
        r.label = "holes of kA " + join(a.flat()) + " k=" + std::to_string(profile.k_threshold);
        out.push_back(r);
    }

    const auto scan = theoremA1_scan(8, 7, 6);
    std::uint64_t mstd_count = 0;
    for (const auto& s : scan) {
        mstd_count += s.report.passed ? 0 : 1;
    }
    auto r = make_report("family a1<=8 x<=7 m<=6: MSTD sets", Comparison::balance, mstd_count, 0);
    r.details["sets"] = static_cast<std::int64_t>(scan.size());
    out.push_back(r);
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit generalized MSTD constructions and sumset verification", "mstd"};
    app.require_subcommand(1);
    std::function<int()> action;

    // construct
    std::string kind;
    unsigned k = 0;
    std::vector<Coord> n;
    std::vector<Coord> slopes;
    Specs specs;
    bool force = false;
    std::string output;
    auto* construct = app.add_subcommand("construct", "build a set");
    construct->add_option("--kind", kind, "1d, square, rect, para or ddim")
        ->required()
        ->check(CLI::IsMember({"1d", "square", "rect", "para", "ddim"}));
    construct->add_option("--k", k, "level k >= 2")->required();
    construct->add_option("--n", n, "side length(s)")->required();
    add_specs(construct, specs);
    construct->add_option("--slope", slopes, "shear slope(s)");
    construct->add_flag("--force", force, "allow sides below the guaranteed minimum");
    construct->add_option("-o,--output", output, "output .pts file");
    construct->callback([&] {
        action = [&] {
            ConstructionParams p;
            p.k = k;
            p.spec1 = {specs.s1, specs.d1};
            p.spec2 = {specs.s2, specs.d2};
            p.slopes = slopes;
            p.force = force;
            Construction c;
            if (kind == "1d") {
                if (n.size() != 1 || !slopes.empty()) {
                    throw ArgumentError("1d takes one --n and no --slope");
                }
                p.dims = n;
                c = build_1d(p);
            } else if (kind == "square" || kind == "rect" || kind == "para") {
                const std::size_t want = kind == "rect" ? 2 : 1;
                if (kind == "para" ? (n.empty() || n.size() > 2) : n.size() != want) {
                    throw ArgumentError(kind + " takes " + (kind == "rect" ? "two --n" : "one --n"));
                }
                if ((kind == "para") != (slopes.size() == 1) || slopes.size() > 1) {
                    throw ArgumentError(kind == "para" ? "para needs exactly one --slope" : "use --kind para to shear");
                }
                p.dims = n.size() == 1 ? std::vector<Coord>{n[0], n[0]} : n;
                c = build_2d(p);
            } else {
                if (n.size() < 2) {
                    throw ArgumentError("ddim takes one --n per axis, at least two");
                }
                p.dims = n;
                c = build_ddim(p);
            }
            if (!output.empty() && output != "-") {
                out << "points\t" << c.set.size() << "\nmiddle\t" << c.middle_lo << "\n";
            }
            emit_set(c.set, output, out);
            return exit_ok;
        };
    });

    // sumdiff
    unsigned s = 0;
    unsigned d = 0;
    std::string input;
    bool count_only = false;
    auto* sumdiff = app.add_subcommand("sumdiff", "compute sA - dA");
    sumdiff->add_option("--s", s, "number of sums")->required();
    sumdiff->add_option("--d", d, "number of differences")->required();
    sumdiff->add_option("input", input, ".pts file")->required();
    sumdiff->add_option("-o,--output", output, "output .pts file");
    sumdiff->add_flag("--count", count_only, "print |sA - dA| only");
    sumdiff->callback([&] {
        action = [&] {
            const auto a = read_pts_file(input);
            if (count_only) {
                out << sumdiff_size(a, {s, d}) << "\n";
                return exit_ok;
            }
            const auto r = iterated_sumdiff(a, {s, d});
            if (!output.empty() && output != "-") {
                out << "points\t" << r.size() << "\n";
            }
            emit_set(r, output, out);
            return exit_ok;
        };
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "print |A+A| |A-A| and the class");
    classify_cmd->add_option("input", input, ".pts file")->required();
    classify_cmd->callback([&] {
        action = [&] {
            const auto c = classify(read_pts_file(input));
            out << c.sum_size << " " << c.diff_size << " " << to_string(c.verdict) << "\n";
            return exit_ok;
        };
    });

    // verify
    bool balanced = false;
    bool details = false;
    auto* verify = app.add_subcommand("verify", "check |s1A - d1A| > |s2A - d2A|");
    add_specs(verify, specs);
    verify->add_option("input", input, ".pts file")->required();
    verify->add_flag("--balanced", balanced, "check equality instead");
    verify->add_flag("--details", details, "print missing-point counts");
    verify->callback([&] {
        action = [&] {
            const auto a = read_pts_file(input);
            const SumDiffSpec x{specs.s1, specs.d1};
            const SumDiffSpec y{specs.s2, specs.d2};
            const auto r = balanced ? verify_balanced(a, x, y) : verify_generalized(a, x, y);
            out << format_report(r, details);
            return verdict(r.passed);
        };
    });

    // chain
    std::string spec_file;
    bool build = false;
    std::string verify_input;
    unsigned chain_k = 0;
    auto* chain = app.add_subcommand("chain", "build or verify a chain");
    chain->add_option("--spec", spec_file, "chain spec file")->required();
    auto* chain_build = chain->add_flag("--build", build, "build the chain set");
    auto* chain_verify = chain->add_option("--verify", verify_input, ".pts file to verify");
    chain_build->excludes(chain_verify);
    chain->add_option("--k", chain_k, "k for the base (default: top level)");
    chain->add_option("-o,--output", output, "output .pts file");
    chain->callback([&] {
        action = [&] {
            const auto spec = parse_chain_spec(read_text(spec_file));
            if (!verify_input.empty()) {
                const auto reports = verify_chain(read_pts_file(verify_input), spec);
                for (const auto& r : reports) {
                    out << format_report(r);
                }
                return verdict(all_passed(reports));
            }
            if (!build) {
                throw ArgumentError("chain needs --build or --verify");
            }
            const auto c = build_chain(spec, chain_k != 0 ? chain_k : spec.top_level());
            if (!output.empty() && output != "-") {
                out << "points\t" << c.set.size() << "\nm\t" << c.m << "\ncomponents\t" << c.components.size()
                    << "\n";
            }
            emit_set(c.set, output, out);
            return exit_ok;
        };
    });

    // kgen
    unsigned gens = 0;
    std::string check_input;
    auto* kgen = app.add_subcommand("kgen", "k-generational sets");
    kgen->add_option("--k", gens, "number of generations")->required();
    auto* kgen_build = kgen->add_flag("--build", build, "build the set");
    auto* kgen_check = kgen->add_option("--check", check_input, ".pts file to check");
    kgen_build->excludes(kgen_check);
    kgen->add_option("-o,--output", output, "output .pts file");
    kgen->callback([&] {
        action = [&] {
            if (!check_input.empty()) {
                const auto g = check_k_generational(read_pts_file(check_input), gens);
                for (std::size_t c = 0; c < g.size(); ++c) {
                    out << (c + 1) << "\t" << g[c].sum_size << "\t" << g[c].diff_size << "\t"
                        << to_string(g[c].verdict) << "\n";
                }
                return verdict(all_mstd(g));
            }
            if (!build) {
                throw ArgumentError("kgen needs --build or --check");
            }
            const auto c = build_k_generational(gens);
            if (!output.empty() && output != "-") {
                out << "points\t" << c.set.size() << "\nm\t" << c.m << "\n";
            }
            emit_set(c.set, output, out);
            return exit_ok;
        };
    });

    // stabilize
    auto* stabilize = app.add_subcommand("stabilize", "structure of kA for large k");
    stabilize->add_option("input", input, ".pts file")->required();
    stabilize->callback([&] {
        action = [&] {
            const auto p = nathanson_stabilize(read_pts_file(input));
            out << "C\t" << join(p.C) << "\nc\t" << p.c << "\nd\t" << p.d_r << "\nD\t" << join(p.D)
                << "\nk\t" << p.k_threshold << "\n";
            return exit_ok;
        };
    });

    // growth
    std::uint64_t kmax = 0;
    auto* growth = app.add_subcommand("growth", "missing-point growth of kA");
    growth->add_option("input", input, ".pts file")->required();
    growth->add_option("--kmax", kmax, "last k to validate (default N+5)");
    growth->callback([&] {
        action = [&] {
            const auto a = read_pts_file(input);
            unsigned extra = 3;
            if (kmax != 0) {
                const auto n0 = growth_parameters(a).N;
                if (kmax < n0 + 2) {
                    throw ArgumentError("--kmax must be at least N+2 = " + std::to_string(n0 + 2));
                }
                extra = static_cast<unsigned>(kmax - n0 - 2);
            }
            const auto g = growth_profile(a, extra);
            out << "N\t" << g.N << "\nalpha\t" << g.alpha << "\nbeta\t" << g.beta << "\nmissing_columns\t"
                << g.missing_columns << "\nmissing_rows\t" << g.missing_rows << "\n";
            for (std::size_t i = 0; i < g.mu.size(); ++i) {
                out << "k=" << (g.N + i) << "\t" << g.mu[i] << "\t" << g.residuals[i] << "\n";
            }
            return verdict(g.exact());
        };
    });

    // diffdom
    std::uint64_t dk = 0;
    auto* diffdom = app.add_subcommand("diffdom", "check |kA - kA| >= |kA + kA|");
    diffdom->add_option("--k", dk, "k >= N")->required();
    diffdom->add_option("input", input, ".pts file")->required();
    diffdom->callback([&] {
        action = [&] {
            const auto r = diff_dominance_check(read_pts_file(input), dk);
            out << format_report(r);
            return verdict(r.passed);
        };
    });

    // density
    Coord dn = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string predicate = "mstd";
    unsigned workers = 0;
    std::string hits_file;
    auto* density = app.add_subcommand("density", "Monte Carlo density of a predicate");
    density->add_option("--n", dn, "sample subsets of {0..n}")->required();
    density->add_option("--trials", trials, "number of samples")->required();
    density->add_option("--seed", seed, "64-bit seed")->required();
    density->add_option("--predicate", predicate, "mstd or s1,d1>s2,d2");
    density->add_option("--workers", workers, "threads (0 = all cores)");
    density->add_option("--hits", hits_file, "write every hit as 'trial<TAB>elements'");
    density->callback([&] {
        action = [&] {
            DensityPredicate pred;
            if (predicate != "mstd") {
                const auto gt = predicate.find('>');
                if (gt == std::string::npos) {
                    throw ArgumentError("predicate must be 'mstd' or 's1,d1>s2,d2'");
                }
                pred = DensityPredicate::generalized(parse_spec_pair(predicate.substr(0, gt)),
                                                     parse_spec_pair(predicate.substr(gt + 1)));
            }
            std::vector<HitRecord> log;
            const auto e = estimate_density(dn, trials, seed, pred, {workers, hits_file.empty() ? nullptr : &log});
            out << "n\ttrials\thits\tproportion\tci_low\tci_high\tseed\n" << to_string(e) << "\n";
            if (!hits_file.empty()) {
                std::string text;
                for (const auto& h : log) {
                    text += std::to_string(h.trial) + "\t";
                    for (std::size_t i = 0; i < h.elements.size(); ++i) {
                        text += (i ? " " : "") + std::to_string(h.elements[i]);
                    }
                    text += "\n";
                }
                write_text(hits_file, text, out);
            }
            return exit_ok;
        };
    });

    // appendix-check
    auto* appendix = app.add_subcommand("appendix-check", "run the fixed appendix suite");
    appendix->callback([&] {
        action = [&] {
            const auto reports = appendix_suite();
            for (const auto& r : reports) {
                out << format_report(r);
            }
            return verdict(all_passed(reports));
        };
    });

    // render
    auto* render = app.add_subcommand("render", "plain PBM image of a 2D set");
    render->add_option("input", input, ".pts file")->required();
    render->add_option("-o,--output", output, "output .pbm file");
    render->callback([&] {
        action = [&] {
            write_text(output, render_pbm(read_pts_file(input)), out);
            return exit_ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    return action ? action() : exit_usage;
}

} // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return run(argc, argv, out, err);
    } catch (const StructureError& e) {
        err << "mstd: " << e.what() << "\n";
        return exit_failed;
    } catch (const std::exception& e) {
        err << "mstd: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace mstd
