#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "threegap/threegap.hpp"

namespace tg = threegap;

namespace {

/// Writes text to the path, or stdout when the path is empty. Returns the
/// process exit code: 0, or 5 when the sink cannot be written.
int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout.good()) {
            std::cerr << "error: failed writing to stdout\n";
            return 5;
        }
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return 5;
    }
    f << text;
    f.flush();
    if (!f.good()) {
        std::cerr << "error: failed writing to '" << out_path << "'\n";
        return 5;
    }
    return 0;
}

struct VerifyCell {
    tg::CircleConfig cfg;
    tg::VerifyDepth depth = tg::VerifyDepth::Census;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-gap structure of the points {k*alpha}, 0 <= k < n"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "threegap 0.1.0");

    const std::vector<std::string> formats{"json", "csv", "table"};

    std::string gaps_alpha, gaps_format = "table", gaps_out;
    std::uint64_t gaps_n = 0;
    CLI::App* gaps = app.add_subcommand("gaps", "gap census of one configuration");
    gaps->add_option("--alpha", gaps_alpha, "angle specification")->required();
    gaps->add_option("--n", gaps_n, "number of points")->required();
    gaps->add_option("--format", gaps_format, "output format")
        ->check(CLI::IsMember(formats));
    gaps->add_option("--out", gaps_out, "write to file instead of stdout");

    std::string after_alpha, after_format = "table", after_out;
    std::uint64_t after_n = 0;
    std::optional<std::uint64_t> after_m;
    CLI::App* after = app.add_subcommand("after", "successor of a point, or the whole table");
    after->add_option("--alpha", after_alpha, "angle specification")->required();
    after->add_option("--n", after_n, "number of points")->required();
    after->add_option("--m", after_m, "point index; omit for the full table");
    after->add_option("--format", after_format, "output format")
        ->check(CLI::IsMember(formats));
    after->add_option("--out", after_out, "write to file instead of stdout");

    std::vector<std::string> verify_alphas;
    std::string verify_format = "table", verify_out;
    std::uint64_t verify_n = 0, verify_n_min = 2, verify_n_max = 256;
    std::uint64_t verify_max_lemma_n = 4096;
    unsigned verify_jobs = 0;
    bool verify_lemmas = false;
    CLI::App* verify = app.add_subcommand("verify", "check the computed structure against the orbit");
    verify->add_option("--alpha", verify_alphas, "angle specification (repeatable)")
        ->required();
    CLI::Option* verify_n_opt =
        verify->add_option("--n", verify_n, "verify a single point count");
    verify->add_option("--n-min", verify_n_min, "range start (default 2)")
        ->excludes(verify_n_opt);
    verify->add_option("--n-max", verify_n_max, "range end, inclusive (default 256)")
        ->excludes(verify_n_opt);
    verify->add_flag("--lemmas", verify_lemmas, "also check the saturation statements");
    verify->add_option("--max-lemma-n", verify_max_lemma_n,
                       "largest n the saturation checks run at (default 4096)");
    verify->add_option("--jobs", verify_jobs, "worker threads, 0 = all cores");
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember(formats));
    verify->add_option("--out", verify_out, "write to file instead of stdout");

    std::string render_alpha, render_out;
    std::uint64_t render_n = 0;
    unsigned render_size = 512;
    bool render_no_labels = false;
    CLI::App* render = app.add_subcommand("render", "SVG picture of the gap structure");
    render->add_option("--alpha", render_alpha, "angle specification")->required();
    render->add_option("--n", render_n, "number of points")->required();
    render->add_option("--size", render_size, "canvas size in pixels (default 512)");
    render->add_flag("--no-labels", render_no_labels, "omit point index labels");
    render->add_option("--out", render_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gaps->parsed()) {
            const tg::CircleConfig cfg{tg::parse_angle(gaps_alpha), gaps_n};
            const tg::GapReport rep = tg::gap_census(cfg);
            return emit(tg::render_gaps(rep, tg::parse_format(gaps_format)), gaps_out);
        }

        if (after->parsed()) {
            const tg::CircleConfig cfg{tg::parse_angle(after_alpha), after_n};
            const tg::AfterTable table = tg::closed_form_table(cfg);
            const tg::OutputFormat fmt = tg::parse_format(after_format);
            if (after_m) {
                if (*after_m >= after_n) {
                    std::cerr << "error: --m " << *after_m << " is out of range for --n "
                              << after_n << "\n";
                    return 2;
                }
                const std::uint64_t searched = tg::after_inductive(cfg, *after_m);
                if (searched != table.next[*after_m]) {
                    std::cerr << "internal error: closed form gives "
                              << table.next[*after_m] << " but direct search gives "
                              << searched << " for m=" << *after_m << "\n";
                    return 4;
                }
                return emit(tg::render_after_single(cfg.alpha, after_n, table, *after_m, fmt),
                            after_out);
            }
            return emit(tg::render_after_table(cfg.alpha, after_n, table, fmt), after_out);
        }

        if (verify->parsed()) {
            std::uint64_t lo = verify_n_min;
            std::uint64_t hi = verify_n_max;
            if (verify_n_opt->count() > 0) {
                lo = hi = verify_n;
            }
            if (lo > hi) {
                std::cerr << "error: --n-min " << lo << " exceeds --n-max " << hi << "\n";
                return 2;
            }
            std::vector<tg::Angle> angles;
            angles.reserve(verify_alphas.size());
            for (const std::string& s : verify_alphas) {
                angles.push_back(tg::parse_angle(s));
            }
            std::vector<VerifyCell> cells;
            cells.reserve(angles.size() * (hi - lo + 1));
            for (const tg::Angle& a : angles) {
                for (std::uint64_t n = lo; n <= hi; ++n) {
                    const bool deep = verify_lemmas && n <= verify_max_lemma_n;
                    cells.push_back({{a, n},
                                     deep ? tg::VerifyDepth::Lemmas
                                          : tg::VerifyDepth::Census});
                }
            }
            const unsigned jobs = verify_jobs == 0 ? tg::default_jobs() : verify_jobs;
            const std::vector<tg::VerificationReport> reports =
                tg::parallel_map(cells, jobs, [](const VerifyCell& c) {
                    return tg::verify_config(c.cfg, c.depth);
                });
            const int rc = emit(tg::render_verify(reports, tg::parse_format(verify_format)),
                                verify_out);
            if (rc != 0) {
                return rc;
            }
            return tg::summarize(reports).failed == 0 ? 0 : 1;
        }

        if (render->parsed()) {
            if (render_size < 64) {
                std::cerr << "error: --size must be at least 64\n";
                return 2;
            }
            const tg::CircleConfig cfg{tg::parse_angle(render_alpha), render_n};
            tg::RenderStyle style;
            style.size_px = render_size;
            style.label_points = !render_no_labels;
            return emit(tg::render_svg(cfg, style), render_out);
        }
    } catch (const tg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tg::InvalidAngle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tg::RadicandTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tg::TooFewPoints& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tg::PointCollision& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tg::EmptyCircle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
