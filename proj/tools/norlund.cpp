// Command-line front end: exact values, asymptotic evaluation, coefficient
// listings, table regeneration, path data and self-checks.  All numerics
// live in the library; this file parses flags and formats results.

#include "norlund/asymp.hpp"
#include "norlund/checks.hpp"
#include "norlund/descent.hpp"
#include "norlund/errors.hpp"
#include "norlund/ratcore.hpp"
#include "norlund/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace norlund;
using Json = nlohmann::ordered_json;

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

enum class Format { Text, Json, Csv };

struct Common {
    int digits = 60;
    double eps = 0.05;
    std::string format;
    std::string out;
    unsigned jobs = default_jobs();

    PrecisionConfig config() const {
        PrecisionConfig cfg;
        cfg.digits = digits;
        cfg.exclusion_eps = eps;
        return cfg;
    }

    Format resolved(Format fallback) const {
        if (format.empty()) {
            return fallback;
        }
        return format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    }
};

// ---------------------------------------------------------------- output

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return quoted + "\"";
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    const auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out << (i ? "," : "") << csv_field(fields[i]);
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
    return out.str();
}

std::string aligned(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& r : rows) {
            width[i] = std::max(width[i], r[i].size());
        }
    }
    std::ostringstream out;
    const auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << fields[i];
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
    return out.str();
}

Json table_json(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    Json list = Json::array();
    for (const auto& r : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < header.size(); ++i) {
            obj[header[i]] = r[i];
        }
        list.push_back(std::move(obj));
    }
    return list;
}

void emit(const Common& common, const std::string& text) {
    if (common.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(common.out, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + common.out + "'");
    }
    file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string rational_string(const Rational& q) { return q.get_str(); }

Json complex_json(const BigComplex& z, int sig) {
    return Json{{"re", z.re.to_scientific(sig)}, {"im", z.im.to_scientific(sig)}};
}

// ---------------------------------------------------------------- commands

struct ExactArgs {
    unsigned n = 0;
    std::string z;
};

int cmd_exact(const ExactArgs& a, const Common& common) {
    const ComplexRational z = parse_complex_rational(a.z);
    const ComplexRational v = eval_exact(a.n, z);
    const int sig = common.digits;
    switch (common.resolved(Format::Text)) {
    case Format::Json:
        emit(common, dump(Json{{"n", a.n},
                               {"z", a.z},
                               {"re", rational_string(v.re)},
                               {"im", rational_string(v.im)},
                               {"decimal", {{"re", to_decimal(v.re, sig)}, {"im", to_decimal(v.im, sig)}}}}));
        break;
    case Format::Csv:
        emit(common, csv({"n", "z", "re", "im", "re_decimal", "im_decimal"},
                         {{std::to_string(a.n), a.z, rational_string(v.re), rational_string(v.im),
                           to_decimal(v.re, sig), to_decimal(v.im, sig)}}));
        break;
    case Format::Text: {
        std::ostringstream out;
        out << "B_" << a.n << "^(" << a.n << ")(" << a.n << "z) at z = " << a.z << "\n";
        out << "  re = " << rational_string(v.re) << "\n";
        out << "  im = " << rational_string(v.im) << "\n";
        out << "  decimal = " << to_decimal(v.re, sig) << (v.im < 0 ? " - " : " + ")
            << to_decimal(abs(v.im), sig) << "i\n";
        emit(common, out.str());
        break;
    }
    }
    return 0;
}

int cmd_poly(unsigned n, const Common& common) {
    const RationalPolynomial p = norlund_polynomial(n);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k <= p.degree(); ++k) {
        rows.push_back({std::to_string(k), rational_string(p[k])});
    }
    switch (common.resolved(Format::Text)) {
    case Format::Json: {
        Json coeffs = Json::array();
        for (const auto& r : rows) {
            coeffs.push_back(r[1]);
        }
        emit(common, dump(Json{{"n", n}, {"coefficients_ascending", coeffs}}));
        break;
    }
    case Format::Csv:
        emit(common, csv({"power", "coefficient"}, rows));
        break;
    case Format::Text: {
        std::ostringstream out;
        out << "B_" << n << "^(" << n << ")(z) =";
        bool first = true;
        for (std::size_t k = 0; k <= p.degree(); ++k) {
            if (p[k] == 0) {
                continue;
            }
            const Rational c = p[k];
            out << (first ? " " : (c < 0 ? " - " : " + ")) << (first && c < 0 ? "-" : "");
            if (k == 0 || abs(c) != 1) {
                out << rational_string(abs(c)) << (k > 0 ? " " : "");
            }
            if (k > 0) {
                out << "z" << (k > 1 ? "^" + std::to_string(k) : "");
            }
            first = false;
        }
        out << "\n";
        emit(common, out.str());
        break;
    }
    }
    return 0;
}

struct AsymArgs {
    unsigned n = 0;
    std::string z;
    std::size_t K = 3;
    bool compare_exact = false;
    std::string force_regime;
};

int cmd_asym(const AsymArgs& a, const Common& common) {
    const PrecisionConfig cfg = common.config();
    const Precision p = cfg.precision();
    const ComplexRational zq = parse_complex_rational(a.z);
    const BigComplex z = zq.to_big(p);
    const AsymptoticResult r = a.force_regime.empty()
                                   ? dispatch(a.n, z, a.K, cfg)
                                   : evaluate_forced(a.n, z, a.K, parse_regime_kind(a.force_regime), cfg);

    std::vector<BigFloat> magnitudes;
    for (const BigComplex& t : r.terms) {
        magnitudes.push_back(abs(r.prefactor * t));
    }
    std::optional<BigFloat> rel;
    if (a.compare_exact) {
        rel = relative_error(eval_exact(a.n, zq), r.value);
    }
    const int sig = std::min(cfg.digits, 30);

    switch (common.resolved(Format::Text)) {
    case Format::Json: {
        Json j{{"n", a.n},
               {"z", a.z},
               {"K", a.K},
               {"regime", r.regime.name()},
               {"value", complex_json(r.value, cfg.digits)},
               {"truncation_k", r.truncation_k},
               {"term_magnitudes", Json::array()},
               {"error_estimate", r.error_estimate.to_scientific(6)}};
        for (const BigFloat& m : magnitudes) {
            j["term_magnitudes"].push_back(m.to_scientific(6));
        }
        if (r.subdominant) {
            j["subdominant"] = complex_json(*r.subdominant, cfg.digits);
        }
        if (rel) {
            j["relative_error"] = rel->to_scientific(6);
        }
        j["warnings"] = r.warnings;
        emit(common, dump(j));
        break;
    }
    case Format::Csv: {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < magnitudes.size(); ++k) {
            rows.push_back({std::to_string(k), magnitudes[k].to_scientific(6)});
        }
        std::string text = csv({"k", "term_magnitude"}, rows);
        text = csv({"n", "z", "K", "regime", "value_re", "value_im", "error_estimate", "relative_error"},
                   {{std::to_string(a.n), a.z, std::to_string(a.K), r.regime.name(), r.value.re.to_scientific(sig),
                     r.value.im.to_scientific(sig), r.error_estimate.to_scientific(6),
                     rel ? rel->to_scientific(6) : ""}}) +
               "\n" + text;
        emit(common, text);
        break;
    }
    case Format::Text: {
        std::ostringstream out;
        out << "regime: " << r.regime.name() << "\n";
        out << "value: " << to_string(r.value, sig) << "\n";
        if (r.subdominant) {
            out << "  of which subdominant: " << to_string(*r.subdominant, sig) << "\n";
        }
        out << "term magnitudes |prefactor * term_k|:\n";
        for (std::size_t k = 0; k < magnitudes.size(); ++k) {
            out << "  k=" << k << "  " << paren_exponent(magnitudes[k], 4) << "\n";
        }
        out << "error estimate: " << paren_exponent(r.error_estimate, 4) << "\n";
        if (rel) {
            out << "relative error vs exact: " << paren_exponent(*rel, 4) << "\n";
        }
        for (const std::string& w : r.warnings) {
            out << "warning: " << w << "\n";
        }
        emit(common, out.str());
        break;
    }
    }
    for (const std::string& w : r.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return 0;
}

struct CoeffsArgs {
    std::string z;
    int saddle = 0;
    std::size_t kmax = 10;
};

int cmd_coeffs(const CoeffsArgs& a, const Common& common) {
    const PrecisionConfig cfg = common.config();
    const Precision p = cfg.precision();
    const SaddleContext ctx = SaddleContext::make(parse_complex_rational(a.z).to_big(p), a.saddle);
    const CoefficientSet c = expansion_coefficients(ctx, a.kmax, true);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k <= a.kmax; ++k) {
        std::string delta;
        if (k >= 1 && k <= 3) {
            const BigComplex closed = closed_form_A(ctx.h, ctx.s, static_cast<int>(k));
            delta = (abs(c.values[k] - closed) / abs(closed)).to_scientific(3);
        }
        rows.push_back({std::to_string(k), c.values[k].re.to_scientific(cfg.digits),
                        c.values[k].im.to_scientific(cfg.digits), delta});
    }
    const std::vector<std::string> header{"k", "re", "im", "closed_form_rel_delta"};
    switch (common.resolved(Format::Json)) {
    case Format::Json: {
        Json list = Json::array();
        for (const auto& r : rows) {
            Json e{{"k", std::stoul(r[0])}, {"re", r[1]}, {"im", r[2]}};
            if (!r[3].empty()) {
                e["closed_form_rel_delta"] = r[3];
            }
            list.push_back(std::move(e));
        }
        emit(common, dump(Json{{"z", a.z},
                               {"saddle", a.saddle},
                               {"s", complex_json(ctx.s, cfg.digits)},
                               {"g0", complex_json(c.g0, cfg.digits)},
                               {"coefficients", list}}));
        break;
    }
    case Format::Csv:
        emit(common, csv(header, rows));
        break;
    case Format::Text: {
        for (auto& r : rows) {
            r[1] = paren_exponent(BigFloat::parse(r[1], p), 11);
            r[2] = paren_exponent(BigFloat::parse(r[2], p), 11);
        }
        emit(common, "A_k at z = " + a.z + ", saddle " + std::to_string(a.saddle) + "\n" + aligned(header, rows));
        break;
    }
    }
    return 0;
}

int cmd_table(int id, const Common& common) {
    const Format format = common.resolved(Format::Text);
    const TextTable t = render_table(id, common.jobs, common.config(), format == Format::Text);
    switch (format) {
    case Format::Json:
        emit(common, dump(Json{{"table", id}, {"title", t.title}, {"rows", table_json(t.columns, t.rows)}}));
        break;
    case Format::Csv:
        emit(common, csv(t.columns, t.rows));
        break;
    case Format::Text:
        emit(common, t.title + "\n" + aligned(t.columns, t.rows));
        break;
    }
    return 0;
}

struct PathsArgs {
    std::string z;
    std::optional<int> saddle;
    double step = 1e-2;
    double max_len = 50.0;
};

int cmd_paths(const PathsArgs& a, const Common& common) {
    const Precision p = Precision::digits(30);
    const ComplexRational zq = parse_complex_rational(a.z);
    std::vector<int> saddles;
    if (a.saddle) {
        saddles = {*a.saddle};
    } else if (zq.is_real() && zq.re > 0 && zq.re < 1) {
        saddles = {0, -1};  // conjugate pair on the unit interval
    } else if (!zq.is_real() && zq.re <= 1) {
        saddles = {0, 1};  // dominant and subdominant saddles
    } else {
        saddles = {0};
    }
    TraceOptions opts;
    opts.step = a.step;
    opts.max_len = a.max_len;
    std::vector<PathPolyline> paths;
    for (int k : saddles) {
        std::vector<PathPolyline> more = trace_paths(zq.to_big(p), k, opts);
        paths.insert(paths.end(), more.begin(), more.end());
    }
    switch (common.resolved(Format::Csv)) {
    case Format::Json: {
        Json list = Json::array();
        for (const PathPolyline& path : paths) {
            Json pts = Json::array();
            for (const PathPoint& pt : path.points) {
                pts.push_back({pt.xi, pt.eta, pt.re_psi});
            }
            list.push_back(Json{{"saddle", path.saddle.k_index},
                                {"branch_label", to_string(path.label)},
                                {"termination", to_string(path.stop)},
                                {"points", pts}});
        }
        emit(common, dump(Json{{"z", a.z}, {"paths", list}}));
        break;
    }
    case Format::Csv: {
        std::ostringstream out;
        write_paths_csv(out, paths);
        emit(common, out.str());
        break;
    }
    case Format::Text: {
        std::ostringstream out;
        for (const PathPolyline& path : paths) {
            const PathPoint& end = path.points.back();
            out << "saddle " << path.saddle.k_index << " " << to_string(path.label) << ": " << path.points.size()
                << " points, ends at " << end.xi << (end.eta < 0 ? " - " : " + ") << std::abs(end.eta) << "i ("
                << to_string(path.stop) << ")\n";
        }
        emit(common, out.str());
        break;
    }
    }
    return 0;
}

int cmd_check(const std::string& suite, const Common& common) {
    const CheckReport report = run_checks(suite, common.jobs, common.config());
    switch (common.resolved(Format::Text)) {
    case Format::Json: {
        Json items = Json::array();
        for (const CheckItem& i : report.items) {
            items.push_back(Json{{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
        }
        emit(common, dump(Json{{"suite", report.suite},
                               {"passed", report.passed()},
                               {"failed", report.failed()},
                               {"items", items}}));
        break;
    }
    case Format::Csv: {
        std::vector<std::vector<std::string>> rows;
        for (const CheckItem& i : report.items) {
            rows.push_back({i.name, i.passed ? "pass" : "FAIL", i.detail});
        }
        emit(common, csv({"check", "status", "detail"}, rows));
        break;
    }
    case Format::Text: {
        std::ostringstream out;
        for (const CheckItem& i : report.items) {
            out << (i.passed ? "[pass] " : "[FAIL] ") << i.name;
            if (!i.detail.empty()) {
                out << "  (" << i.detail << ")";
            }
            out << "\n";
        }
        out << report.passed() << " passed, " << report.failed() << " failed\n";
        emit(common, out.str());
        break;
    }
    }
    return report.ok() ? 0 : kExitCheckFailure;
}

void add_common(CLI::App* cmd, Common& common, bool with_jobs) {
    cmd->add_option("--prec", common.digits, "working precision in decimal digits")
        ->check(CLI::Range(30, 100000))
        ->capture_default_str();
    cmd->add_option("--eps", common.eps, "exclusion band around [0,1]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", common.out, "write output to FILE instead of stdout");
    if (with_jobs) {
        cmd->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and asymptotic evaluation of the Norlund polynomials B_n^(n)(nz)"};
    app.require_subcommand(1);
    Common common;

    ExactArgs exact;
    CLI::App* exact_cmd = app.add_subcommand("exact", "exact rational value of B_n^(n)(nz)");
    exact_cmd->add_option("--n", exact.n, "order n")->required();
    exact_cmd->add_option("--z", exact.z, "argument re[,im], exact rationals such as 2/3,1/4")->required();
    add_common(exact_cmd, common, false);

    unsigned poly_n = 0;
    CLI::App* poly_cmd = app.add_subcommand("poly", "coefficients of B_n^(n)(z)");
    poly_cmd->add_option("--n", poly_n, "order n")->required();
    add_common(poly_cmd, common, false);

    AsymArgs asym;
    CLI::App* asym_cmd = app.add_subcommand("asym", "large-n expansion with regime dispatch");
    asym_cmd->add_option("--n", asym.n, "order n")->required()->check(CLI::PositiveNumber);
    asym_cmd->add_option("--z", asym.z, "argument re[,im]")->required();
    asym_cmd->add_option("--K", asym.K, "truncation index")->capture_default_str();
    asym_cmd->add_flag("--compare-exact", asym.compare_exact, "also report the true relative error");
    asym_cmd->add_option("--force-regime", asym.force_regime, "evaluate one regime's formula as given")
        ->check(CLI::IsMember({"RealGreaterOne", "RealUnitInterval", "RealHalf", "ComplexWithS1", "ComplexS0Only",
                               "StokesLine"}));
    add_common(asym_cmd, common, false);

    CoeffsArgs coeffs;
    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "expansion coefficients A_0..A_kmax at a saddle");
    coeffs_cmd->add_option("--z", coeffs.z, "argument re[,im]")->required();
    coeffs_cmd->add_option("--saddle", coeffs.saddle, "saddle index k")->capture_default_str();
    coeffs_cmd->add_option("--kmax", coeffs.kmax, "highest k")->capture_default_str();
    add_common(coeffs_cmd, common, false);

    int table_id = 0;
    CLI::App* table_cmd = app.add_subcommand("table", "regenerate a reference table next to the published values");
    table_cmd->add_option("--id", table_id, "table number")->required()->check(CLI::Range(1, 4));
    add_common(table_cmd, common, true);

    PathsArgs paths;
    CLI::App* paths_cmd = app.add_subcommand("paths", "steepest descent and ascent paths as polylines");
    paths_cmd->add_option("--z", paths.z, "argument re[,im]")->required();
    paths_cmd->add_option("--saddle", paths.saddle, "single saddle index (default: the relevant saddles)");
    paths_cmd->add_option("--step", paths.step, "arc-length step")->check(CLI::PositiveNumber)->capture_default_str();
    paths_cmd->add_option("--max-len", paths.max_len, "maximum arc length per branch")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(paths_cmd, common, false);

    std::string suite = "all";
    CLI::App* check_cmd = app.add_subcommand("check", "run invariant suites; exit 1 on any failure");
    check_cmd->add_option("--suite", suite, "suite")->check(CLI::IsMember(check_suites()))->capture_default_str();
    add_common(check_cmd, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*exact_cmd) {
            return cmd_exact(exact, common);
        }
        if (*poly_cmd) {
            return cmd_poly(poly_n, common);
        }
        if (*asym_cmd) {
            return cmd_asym(asym, common);
        }
        if (*coeffs_cmd) {
            return cmd_coeffs(coeffs, common);
        }
        if (*table_cmd) {
            return cmd_table(table_id, common);
        }
        if (*paths_cmd) {
            return cmd_paths(paths, common);
        }
        if (*check_cmd) {
            return cmd_check(suite, common);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
