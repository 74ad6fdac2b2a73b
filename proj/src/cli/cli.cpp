#include "starrad/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "starrad/errors.hpp"
#include "starrad/radius.hpp"
#include "starrad/series.hpp"
#include "starrad/verification.hpp"

namespace starrad::cli {

namespace {

using nlohmann::json;

enum class Format { Csv, Json, Plain };

const std::map<std::string, Format> format_names{
    {"csv", Format::Csv}, {"json", Format::Json}, {"plain", Format::Plain}};

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParameter:
    case ErrorKind::InvalidQuery:
    case ErrorKind::PreconditionViolated:
        return ParameterError;
    default:
        return ConvergenceFailure;
    }
}

// Settings shared by every subcommand; STARRAD_TOL overrides rel_tol.
SeriesConfig series_config()
{
    SeriesConfig cfg;
    if (const char* tol = std::getenv("STARRAD_TOL"); tol && *tol) {
        char* end = nullptr;
        const double v = std::strtod(tol, &end);
        if (end == tol || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
            raise(ErrorKind::InvalidParameter, std::string("STARRAD_TOL is not a positive number: ") + tol);
        cfg.rel_tol = v;
    }
    cfg.validate();
    return cfg;
}

int report_error(const Error& e, Format format, std::ostream& out, std::ostream& err)
{
    if (format == Format::Json) {
        json j;
        j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
        out << j.dump(2) << '\n';
    } else {
        err << "error: " << e.what() << '\n';
    }
    return exit_code_for(e.kind());
}

std::string timestamp_utc()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void print_plain(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields)
{
    for (const auto& [k, v] : fields) out << k << " = " << v << '\n';
}

void print_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
    out << '\n';
}

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string function;
    double mu = 0.0, nu = 0.0, mu_raw = 0.0, nu_raw = 0.0, c = 0.0, d = 0.0, z = 0.0;
    CLI::Option *mu_opt = nullptr, *nu_opt = nullptr, *mu_raw_opt = nullptr, *nu_raw_opt = nullptr;
    CLI::Option *c_opt = nullptr, *d_opt = nullptr;
    Format format = Format::Plain;
};

void require(const CLI::Option* opt, const std::string& function)
{
    if (opt->count() == 0)
        raise(ErrorKind::InvalidParameter, function + " needs " + opt->get_name());
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err)
{
    try {
        const SeriesConfig cfg = series_config();
        SeriesValue v;
        if (a.function == "lommel_s") {
            if (a.mu_opt->count()) {
                v = lommel_s(LommelOrder::specialized(a.mu), a.z, cfg);
            } else {
                require(a.mu_raw_opt, a.function);
                require(a.nu_raw_opt, a.function);
                v = lommel_s(LommelOrder::general(a.mu_raw, a.nu_raw), a.z, cfg);
            }
        } else if (a.function == "struve_H") {
            require(a.nu_opt, a.function);
            v = struve_H(StruveOrder(a.nu), a.z, cfg);
        } else if (a.function == "phi0" || a.function == "phi1") {
            require(a.mu_opt, a.function);
            v = phi_k(a.mu, a.function == "phi0" ? 0 : 1, a.z, cfg);
        } else if (a.function == "psi_mu") {
            require(a.mu_opt, a.function);
            require(a.c_opt, a.function);
            v = lommel_num(a.mu, a.c, a.z, cfg);
        } else if (a.function == "phi_nu") {
            require(a.nu_opt, a.function);
            require(a.d_opt, a.function);
            v = struve_num(a.nu, a.d, a.z, cfg);
        } else {
            raise(ErrorKind::InvalidParameter, "unknown function " + a.function);
        }

        switch (a.format) {
        case Format::Json: {
            json j{{"function", a.function}, {"value", v.value}, {"err_bound", v.err_bound},
                   {"terms_used", v.terms_used}, {"z", a.z}};
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            print_csv(out, {{"function", a.function},
                            {"z", num(a.z)},
                            {"value", num(v.value)},
                            {"err_bound", num(v.err_bound)},
                            {"terms_used", std::to_string(v.terms_used)}});
            break;
        case Format::Plain:
            print_plain(out, {{"value", num(v.value)},
                              {"err_bound", num(v.err_bound)},
                              {"terms_used", std::to_string(v.terms_used)}});
            break;
        }
        return Ok;
    } catch (const Error& e) {
        return report_error(e, a.format, out, err);
    }
}

// ---------------------------------------------------------------------------

struct RadiusArgs {
    std::string family;
    double mu = 0.0, nu = 0.0, alpha = 0.0;
    CLI::Option *mu_opt = nullptr, *nu_opt = nullptr;
    bool certify = true;
    bool diagnostic = false;
    Format format = Format::Plain;
};

FunctionFamily family_or_throw(const std::string& name)
{
    const auto f = parse_family(name);
    if (!f) raise(ErrorKind::InvalidQuery, "unknown family '" + name + "' (expected f, g, h, u, v or w)");
    return *f;
}

json radius_json(FunctionFamily family, double param, double alpha, const RadiusResult& r)
{
    return json{{"family", short_name(family)},
                {"param", param},
                {"alpha", alpha},
                {"radius", r.radius},
                {"equation_root", r.equation_root},
                {"equation_constant", r.equation_constant},
                {"regime", to_string(r.regime)},
                {"residual", r.residual},
                {"residual_scale", r.residual_scale},
                {"first_zero", r.first_zero},
                {"certified", r.certified},
                {"inner_min", r.inner_min},
                {"outer_min", r.outer_min},
                {"proof_derived", r.proof_derived}};
}

int cmd_radius(const RadiusArgs& a, std::ostream& out, std::ostream& err)
{
    try {
        const FunctionFamily family = family_or_throw(a.family);
        const CLI::Option* want = is_lommel(family) ? a.mu_opt : a.nu_opt;
        const CLI::Option* other = is_lommel(family) ? a.nu_opt : a.mu_opt;
        if (want->count() == 0 || other->count() != 0)
            raise(ErrorKind::InvalidQuery, std::string("family ") + a.family + " takes " +
                                               (is_lommel(family) ? "--mu" : "--nu"));
        const double param = is_lommel(family) ? a.mu : a.nu;
        RadiusConfig cfg;
        cfg.series = series_config();
        cfg.certify = a.certify;
        const RadiusQuery query{family, param, a.alpha,
                                a.diagnostic ? ParameterMode::Diagnostic : ParameterMode::Strict};
        const RadiusResult r = radius_of_starlikeness(query, cfg);

        switch (a.format) {
        case Format::Json: out << radius_json(family, param, a.alpha, r).dump(2) << '\n'; break;
        case Format::Csv:
        case Format::Plain: {
            const std::vector<std::pair<std::string, std::string>> fields{
                {"family", short_name(family)},
                {"param", num(param)},
                {"alpha", num(a.alpha)},
                {"radius", num(r.radius)},
                {"equation_root", num(r.equation_root)},
                {"regime", to_string(r.regime)},
                {"residual", num(r.residual)},
                {"certified", r.certified ? "true" : "false"}};
            if (a.format == Format::Csv)
                print_csv(out, fields);
            else
                print_plain(out, fields);
            break;
        }
        }
        if (a.certify && !r.certified) {
            err << "warning: boundary check did not certify the radius (inner min " << num(r.inner_min)
                << ", outer min " << num(r.outer_min) << ")\n";
            return Uncertified;
        }
        return Ok;
    } catch (const Error& e) {
        return report_error(e, a.format, out, err);
    }
}

// ---------------------------------------------------------------------------

struct TableArgs {
    std::string family;
    std::string mu, nu, alpha;
    std::string output;
    bool diagnostic = false;
    Format format = Format::Csv;
};

const char* row_status(const TableRow& row)
{
    if (row.result) return row.result->certified ? "ok" : "uncertified";
    return row.error_kind == ErrorKind::InvalidQuery ? "invalid" : "failed";
}

std::string table_csv(const std::vector<TableRow>& rows)
{
    std::ostringstream os;
    os << "family,param,alpha,radius,equation_root,regime,residual,certified\n";
    for (const TableRow& row : rows) {
        os << short_name(row.family) << ',' << num(row.param) << ',' << num(row.alpha) << ',';
        if (row.result) {
            const RadiusResult& r = *row.result;
            os << num(r.radius) << ',' << num(r.equation_root) << ',' << to_string(r.regime) << ','
               << num(r.residual) << ',' << (r.certified ? "true" : "false") << '\n';
        } else {
            os << ",," << row_status(row) << ",,false\n";
        }
    }
    return os.str();
}

json table_json(const std::vector<TableRow>& rows)
{
    json arr = json::array();
    for (const TableRow& row : rows) {
        if (row.result) {
            json j = radius_json(row.family, row.param, row.alpha, *row.result);
            j["status"] = row_status(row);
            arr.push_back(std::move(j));
        } else {
            arr.push_back({{"family", short_name(row.family)},
                           {"param", row.param},
                           {"alpha", row.alpha},
                           {"status", row_status(row)},
                           {"error", row.error}});
        }
    }
    return arr;
}

int cmd_table(const TableArgs& a, const std::vector<std::string>& command_line, std::ostream& out,
              std::ostream& err)
{
    try {
        const FunctionFamily family = family_or_throw(a.family);
        const std::string& range = is_lommel(family) ? a.mu : a.nu;
        const std::string& other = is_lommel(family) ? a.nu : a.mu;
        if (range.empty() || !other.empty())
            raise(ErrorKind::InvalidQuery, std::string("family ") + a.family + " takes " +
                                               (is_lommel(family) ? "--mu" : "--nu") + " start:stop:count");
        const std::vector<double> params = parse_range(range);
        const std::vector<double> alphas = parse_range(a.alpha);
        RadiusConfig cfg;
        cfg.series = series_config();
        const auto rows = radius_table(family, params, alphas, cfg,
                                       a.diagnostic ? ParameterMode::Diagnostic : ParameterMode::Strict);

        const std::string data = a.format == Format::Json ? table_json(rows).dump(2) + "\n" : table_csv(rows);

        json manifest;
        manifest["tool"] = "starrad";
        manifest["version"] = tool_version;
        manifest["command_line"] = command_line;
        manifest["timestamp"] = timestamp_utc();
        manifest["csv_schema_version"] = csv_schema_version;
        manifest["columns"] = {"family", "param", "alpha", "radius", "equation_root", "regime", "residual",
                               "certified"};
        manifest["tolerances"] = {{"rel_tol", cfg.series.rel_tol},
                                  {"abs_tol", cfg.series.abs_tol},
                                  {"max_terms", cfg.series.max_terms},
                                  {"root_tol", cfg.scan.root_tol},
                                  {"scan_step", cfg.scan.initial_step},
                                  {"max_radius", cfg.scan.max_radius},
                                  {"certify_offset", cfg.certify_offset},
                                  {"certify_samples", cfg.certify_samples}};
        json status = json::array();
        for (const TableRow& row : rows) {
            json s{{"param", row.param}, {"alpha", row.alpha}, {"status", row_status(row)}};
            if (!row.error.empty()) s["error"] = row.error;
            status.push_back(std::move(s));
        }
        manifest["rows"] = std::move(status);

        if (a.output.empty()) {
            out << data;
            err << manifest.dump(2) << '\n';
        } else {
            std::ofstream file(a.output, std::ios::binary);
            std::ofstream side(a.output + ".manifest.json", std::ios::binary);
            if (!file || !side) raise(ErrorKind::InvalidParameter, "cannot write " + a.output);
            file << data;
            side << manifest.dump(2) << '\n';
            out << "wrote " << rows.size() << " rows to " << a.output << '\n';
        }
        return Ok;
    } catch (const Error& e) {
        return report_error(e, a.format, out, err);
    }
}

// ---------------------------------------------------------------------------

struct ZerosArgs {
    std::string function;
    double mu = 0.0, nu = 0.0;
    CLI::Option *mu_opt = nullptr, *nu_opt = nullptr;
    int count = 1;
    Format format = Format::Plain;
};

int cmd_zeros(const ZerosArgs& a, std::ostream& out, std::ostream& err)
{
    try {
        if (a.count < 1) raise(ErrorKind::InvalidParameter, "--count must be at least 1");
        const SeriesConfig cfg = series_config();
        std::optional<EvenSeries> series;
        double param = 0.0;
        bool mu_in_unit = false;
        if (a.function == "phi0" || a.function == "phi1") {
            require(a.mu_opt, a.function);
            param = a.mu;
            const int k = a.function == "phi0" ? 0 : 1;
            if (!(a.mu > -1.0 && a.mu < 1.0) || (k == 1 && a.mu == 0.0) || (k == 0 && a.mu == 0.0))
                raise(ErrorKind::InvalidParameter, "mu must lie in (-1,1) without 0");
            series = EvenSeries::phi(a.mu, k);
            mu_in_unit = a.mu > 0.0;
        } else if (a.function == "struve-H") {
            require(a.nu_opt, a.function);
            param = a.nu;
            series = EvenSeries::struve_kernel(StruveOrder(a.nu).nu());
        } else {
            raise(ErrorKind::InvalidParameter, "unknown function " + a.function + " (phi0, phi1, struve-H)");
        }
        const std::vector<double> zeros = series_zeros(*series, a.count, cfg);

        constexpr double pi = std::numbers::pi;
        json arr = json::array();
        std::ostringstream text;
        if (a.format == Format::Csv) text << "n,zero,bound,in_bound\n";
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            const int n = static_cast<int>(i) + 1;
            const double z = zeros[i];
            std::string bound = "none";
            std::optional<bool> ok;
            if (a.function == "phi0" && mu_in_unit) {
                bound = "(" + std::to_string(n) + "pi," + std::to_string(n + 1) + "pi)";
                ok = z > n * pi && z < (n + 1) * pi;
            } else if (a.function == "phi1" && mu_in_unit) {
                bound = n == 1 ? ">pi/2" : ">previous";
                ok = n == 1 ? z > pi / 2.0 : z > zeros[i - 1];
            } else if (a.function == "struve-H") {
                bound = n == 1 ? ">1" : ">previous";
                ok = n == 1 ? z > 1.0 : z > zeros[i - 1];
            }
            const std::string flag = ok ? (*ok ? "true" : "false") : "n/a";
            if (a.format == Format::Json) {
                json j{{"n", n}, {"zero", z}, {"bound", bound}};
                j["in_bound"] = ok ? json(*ok) : json(nullptr);
                arr.push_back(std::move(j));
            } else if (a.format == Format::Csv) {
                text << n << ',' << num(z) << ',' << bound << ',' << flag << '\n';
            } else {
                text << n << ' ' << num(z) << "  bound " << bound << "  in_bound " << flag << '\n';
            }
        }
        if (a.format == Format::Json) {
            json j{{"function", a.function}, {"param", param}, {"zeros", std::move(arr)}};
            out << j.dump(2) << '\n';
        } else {
            out << text.str();
        }
        return Ok;
    } catch (const Error& e) {
        return report_error(e, a.format, out, err);
    }
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    Format format = Format::Plain;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    try {
        const auto suite = parse_suite(a.suite);
        if (!suite) raise(ErrorKind::InvalidParameter, "unknown suite " + a.suite);
        const auto reports = run_suite(*suite, series_config());
        int failed = 0;
        json arr = json::array();
        std::ostringstream text;
        if (a.format == Format::Csv) text << "check_name,measured,tolerance,passed,context\n";
        for (const auto& r : reports) {
            if (!r.passed) ++failed;
            if (a.format == Format::Json) {
                arr.push_back({{"check_name", r.check_name},
                               {"measured", r.measured},
                               {"tolerance", r.tolerance},
                               {"passed", r.passed},
                               {"context", r.context}});
            } else if (a.format == Format::Csv) {
                text << r.check_name << ',' << num(r.measured) << ',' << num(r.tolerance) << ','
                     << (r.passed ? "true" : "false") << ",\"" << r.context << "\"\n";
            } else {
                text << (r.passed ? "PASS " : "FAIL ") << r.check_name << "  measured " << num(r.measured)
                     << "  tolerance " << num(r.tolerance) << "  [" << r.context << "]\n";
            }
        }
        if (a.format == Format::Json)
            out << arr.dump(2) << '\n';
        else
            out << text.str();
        if (a.format == Format::Plain)
            out << reports.size() - failed << " of " << reports.size() << " checks passed\n";
        return failed ? VerificationFailed : Ok;
    } catch (const Error& e) {
        return report_error(e, a.format, out, err);
    }
}

void add_format(CLI::App* sub, Format& target)
{
    sub->add_option("--format", target, "Output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
}

}  // namespace

std::vector<double> parse_range(const std::string& spec)
{
    const auto to_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v))
            raise(ErrorKind::InvalidParameter, "bad number '" + s + "' in range '" + spec + "'");
        return v;
    };
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() == 1) return {to_double(parts[0])};
    if (parts.size() != 3) raise(ErrorKind::InvalidParameter, "range must be start:stop:count, got '" + spec + "'");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double count = to_double(parts[2]);
    if (count < 1 || count != std::floor(count) || count > 100000)
        raise(ErrorKind::InvalidParameter, "range count must be a positive integer");
    const int n = static_cast<int>(count);
    if (n == 1) return {start};
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? stop : start + (stop - start) * i / (n - 1));
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Radii of starlikeness for normalized Lommel and Struve functions", "starrad"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate a series-backed function");
    eval->add_option("function", ev.function, "lommel_s, struve_H, phi0, phi1, psi_mu or phi_nu")->required();
    ev.mu_opt = eval->add_option("--mu", ev.mu);
    ev.nu_opt = eval->add_option("--nu", ev.nu);
    ev.mu_raw_opt = eval->add_option("--mu-raw", ev.mu_raw);
    ev.nu_raw_opt = eval->add_option("--nu-raw", ev.nu_raw);
    ev.c_opt = eval->add_option("--c", ev.c);
    ev.d_opt = eval->add_option("--d", ev.d);
    eval->add_option("--z", ev.z)->required();
    add_format(eval, ev.format);

    RadiusArgs ra;
    auto* radius = app.add_subcommand("radius", "Radius of starlikeness of order alpha");
    radius->add_option("--family", ra.family, "f, g, h, u, v or w")->required();
    ra.mu_opt = radius->add_option("--mu", ra.mu);
    ra.nu_opt = radius->add_option("--nu", ra.nu);
    radius->add_option("--alpha", ra.alpha, "Order in [0,1)");
    radius->add_flag("--certify,!--no-certify", ra.certify, "Run the boundary check (default on)");
    radius->add_flag("--diagnostic", ra.diagnostic, "Admit boundary parameters mu = 0, |nu| = 1/2");
    add_format(radius, ra.format);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Tabulate radii over parameter grids");
    table->add_option("--family", ta.family)->required();
    table->add_option("--mu", ta.mu, "start:stop:count");
    table->add_option("--nu", ta.nu, "start:stop:count");
    table->add_option("--alpha", ta.alpha, "start:stop:count")->required();
    table->add_option("--output", ta.output, "CSV path; a .manifest.json sidecar is written next to it");
    table->add_flag("--diagnostic", ta.diagnostic);
    add_format(table, ta.format);

    ZerosArgs za;
    auto* zeros = app.add_subcommand("zeros", "First positive zeros of phi0, phi1 or the Struve kernel");
    zeros->add_option("--function", za.function, "phi0, phi1 or struve-H")->required();
    za.mu_opt = zeros->add_option("--mu", za.mu);
    za.nu_opt = zeros->add_option("--nu", za.nu);
    zeros->add_option("--count", za.count)->required();
    add_format(zeros, za.format);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--suite", va.suite, "series, jensen, integrals, ode, bounds, radii or all");
    add_format(verify, va.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            if (dynamic_cast<const CLI::CallForVersion*>(&e))
                out << tool_version << '\n';
            else
                out << app.help();
            return Ok;
        }
        err << "error: " << e.what() << '\n';
        return ParameterError;
    }

    std::vector<std::string> command_line(argv, argv + argc);
    try {
        if (eval->parsed()) return cmd_eval(ev, out, err);
        if (radius->parsed()) return cmd_radius(ra, out, err);
        if (table->parsed()) return cmd_table(ta, command_line, out, err);
        if (zeros->parsed()) return cmd_zeros(za, out, err);
        if (verify->parsed()) return cmd_verify(va, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ConvergenceFailure;
    }
    return ParameterError;
}

}  // namespace starrad::cli
