#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "g2s6/degree.hpp"
#include "g2s6/equator.hpp"
#include "g2s6/suites.hpp"

namespace {

using namespace g2s6;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::optional<double> tol;
    double fd_step = 1e-5;
    std::string out_path;
    std::string format = "text";
};

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Output goes to --out when given, stdout otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw ConfigError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

SuiteConfig make_config(const GlobalOptions& opt) {
    SuiteConfig cfg;
    cfg.samples = opt.samples;
    cfg.seed = opt.seed;
    if (opt.tol) {
        if (*opt.tol <= 0.0) throw ConfigError("tolerance must be positive");
        cfg.tol_algebra = *opt.tol;
        cfg.tol_bundle = *opt.tol;
    }
    cfg.fd_step = opt.fd_step;
    return cfg;
}

int run_verify(const GlobalOptions& opt, const std::string& suite) {
    const SuiteConfig cfg = make_config(opt);
    std::vector<IdentityReport> reports;
    if (suite == "algebra")
        reports.push_back(algebra_suite(cfg));
    else if (suite == "g2")
        reports.push_back(g2_suite(cfg));
    else if (suite == "charts")
        reports.push_back(charts_suite(cfg));
    else if (suite == "transition")
        reports.push_back(transition_suite(cfg));
    else if (suite == "all")
        reports = all_suites(cfg);
    else
        throw ConfigError("unknown suite: " + suite);

    Sink sink(opt.out_path);
    if (opt.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        sink.stream() << (reports.size() == 1 ? to_json(reports[0]) : j).dump(2)
                      << '\n';
    } else if (opt.format == "text") {
        for (const auto& r : reports) r.print(sink.stream());
    } else {
        throw ConfigError("verify supports formats: text, json");
    }

    bool ok = true;
    std::size_t n_checks = 0;
    for (const auto& r : reports) {
        ok = ok && r.all_passed();
        n_checks += r.checks.size();
    }
    if (opt.format == "text")
        sink.stream() << (ok ? "all " : "FAILURES among ") << n_checks
                      << " checks\n";
    return ok ? 0 : 1;
}

EquatorPoint parse_point(const std::vector<double>& reals) {
    return {{reals[0], reals[1]}, {reals[2], reals[3]}, {reals[4], reals[5]}};
}

// Accepts points within 1e-9 of unit directly; normalizes with a warning up
// to 1e-3; rejects beyond that.
EquatorPoint normalize_input(const EquatorPoint& z) {
    const double err = std::abs(z.norm_sq() - 1.0);
    if (err <= 1e-9) return z;
    if (err <= 1e-3) {
        std::cerr << "warning: input norm off by " << err << ", normalizing\n";
        const double n = std::sqrt(z.norm_sq());
        return {z.u / n, z.v / n, z.w / n};
    }
    throw NotUnit("input point is not on S^5: |z|^2 - 1 = " + fmt_double(err));
}

void print_matrix_text(std::ostream& os, const Matrix3c& m) {
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c)
            os << (c ? "  " : "") << "(" << fmt_double(m(r, c).real()) << ", "
               << fmt_double(m(r, c).imag()) << ")";
        os << '\n';
    }
}

void print_matrix_csv_row(std::ostream& os, const Matrix3c& m, bool leading_comma) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (leading_comma || r || c) os << ',';
            os << fmt_double(m(r, c).real()) << ',' << fmt_double(m(r, c).imag());
        }
    os << '\n';
}

int run_theta(const GlobalOptions& opt, const std::vector<double>& coords,
              bool cross_check) {
    const EquatorPoint z = normalize_input(parse_point(coords));
    const SU3Matrix theta = theta_closed_form(z);

    Sink sink(opt.out_path);
    std::ostream& os = sink.stream();
    if (opt.format == "json") {
        nlohmann::json j = {{"z", z.to_json()}, {"theta", theta.to_json()}};
        if (cross_check) {
            const SU3Matrix t12 = transition_t12(embed_equator(z));
            j["chart_transition"] = t12.to_json();
            j["max_difference_to_transposed_transition"] =
                max_abs_diff(theta.matrix(), t12.matrix().transpose());
        }
        os << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        print_matrix_csv_row(os, theta.matrix(), false);
    } else {
        os << "theta(z) =\n";
        print_matrix_text(os, theta.matrix());
        if (cross_check) {
            const SU3Matrix t12 = transition_t12(embed_equator(z));
            os << "chart transition t12(xi_z) =\n";
            print_matrix_text(os, t12.matrix());
            os << "max |theta - t12^T| = "
               << fmt_double(max_abs_diff(theta.matrix(), t12.matrix().transpose()))
               << '\n';
        }
    }
    return 0;
}

int run_sample(const GlobalOptions& opt, std::size_t count) {
    if (count < 1) throw ConfigError("sample: count must be >= 1");
    Rng rng(opt.seed);

    Sink sink(opt.out_path);
    std::ostream& os = sink.stream();
    if (opt.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t s = 0; s < count; ++s) {
            const EquatorPoint z = random_equator_point(rng);
            rows.push_back({{"z", z.to_json()},
                            {"theta", theta_closed_form(z).to_json()}});
        }
        os << rows.dump(2) << '\n';
    } else {
        os << "u_re,u_im,v_re,v_im,w_re,w_im";
        const char* names[3] = {"1", "2", "3"};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                os << ",t" << names[r] << names[c] << "_re,t" << names[r] << names[c]
                   << "_im";
        os << '\n';
        for (std::size_t s = 0; s < count; ++s) {
            const EquatorPoint z = random_equator_point(rng);
            os << fmt_double(z.u.real()) << ',' << fmt_double(z.u.imag()) << ','
               << fmt_double(z.v.real()) << ',' << fmt_double(z.v.imag()) << ','
               << fmt_double(z.w.real()) << ',' << fmt_double(z.w.imag());
            print_matrix_csv_row(os, theta_closed_form(z).matrix(), true);
        }
    }
    return 0;
}

int run_degree(const GlobalOptions& opt, const std::vector<double>& value) {
    EquatorPoint target{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    if (!value.empty()) target = normalize_input(parse_point(value));

    const DegreeReport report = compute_degree(target, opt.fd_step);

    Sink sink(opt.out_path);
    std::ostream& os = sink.stream();
    if (opt.format == "json") {
        nlohmann::json pre = nlohmann::json::array();
        for (const auto& p : report.preimages) {
            pre.push_back({{"point", to_equator_point(p.point).to_json()},
                           {"jacobian_det", p.jacobian_det},
                           {"sign", p.sign}});
        }
        os << nlohmann::json{{"value", target.to_json()},
                             {"preimages", pre},
                             {"degree", report.degree}}
                  .dump(2)
           << '\n';
    } else {
        for (const auto& p : report.preimages) {
            os << "preimage (";
            for (int n = 0; n < 6; ++n) os << (n ? ", " : "") << fmt_double(p.point[n]);
            os << ")  jacobian det " << fmt_double(p.jacobian_det) << "  sign "
               << (p.sign > 0 ? "+" : "-") << '\n';
        }
        os << "degree = " << report.degree << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"octonion algebra, the automorphism group G2 acting on S^6, the "
                 "SU(3) bundle charts and their equatorial transition function"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
    app.add_option("--samples", opt.samples, "sample count for randomized checks")
        ->capture_default_str();
    app.add_option("--tol", opt.tol, "override verification tolerance");
    app.add_option("--fd-step", opt.fd_step, "finite difference step")
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "write output to file");
    app.add_option("--format", opt.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->fallthrough();
    std::string suite = "all";
    verify
        ->add_option("suite", suite, "algebra, g2, charts, transition or all")
        ->check(CLI::IsMember({"algebra", "g2", "charts", "transition", "all"}));

    auto* theta = app.add_subcommand(
        "theta", "evaluate the closed-form transition matrix at a point of S^5");
    theta->fallthrough();
    std::vector<double> coords;
    theta->add_option("coords", coords, "u_re u_im v_re v_im w_re w_im")
        ->expected(6)
        ->required();
    bool cross_check = false;
    theta->add_flag("--cross-check", cross_check,
                    "also compute the chart transition and compare");

    auto* sample = app.add_subcommand(
        "sample", "sample equator points with their transition matrices");
    sample->fallthrough();
    std::size_t count = 0;
    sample->add_option("count", count, "number of samples")->required();

    auto* degree = app.add_subcommand("degree",
                                      "signed preimage count of the first-column "
                                      "projection composed with theta");
    degree->fallthrough();
    std::vector<double> value;
    degree->add_option("--value", value, "regular value as 6 reals")->expected(6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(opt, suite);
        if (theta->parsed()) return run_theta(opt, coords, cross_check);
        if (sample->parsed()) return run_sample(opt, count);
        if (degree->parsed()) return run_degree(opt, value);
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const NotUnit& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 2;
}
