#include "recgrow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "recgrow/cache.hpp"
#include "recgrow/errors.hpp"
#include "recgrow/generalized_recurrence.hpp"
#include "recgrow/growth_analysis.hpp"
#include "recgrow/matrix_recurrence.hpp"
#include "recgrow/ns_term_model.hpp"
#include "recgrow/theorem_bounds.hpp"

namespace recgrow::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;

struct RunConfig {
    std::string a;
    std::string b;
    std::string d0 = "1";
    std::size_t n = 0;
    std::optional<std::size_t> n_override;
    std::size_t k = 1;
    std::size_t kmax = 1;
    std::size_t lmin = 1;
    std::size_t lmax = 1;
    std::size_t l = 1;
    std::optional<std::size_t> from;
    double rtol = 1e-15;
    unsigned digits = 40;
    std::optional<std::size_t> cap;
    std::string format = "table";
    std::string cache_dir;
    std::string file;
    unsigned d = 3;
    std::uint64_t bytes = 1;
    std::string budget;
    unsigned bits = kDefaultEnvelopeBits;
};

struct Report {
    explicit Report(std::string cmd) : command(std::move(cmd)) {}

    std::string command;
    json params = json::object();
    json results = json::object();
    json discrepancies = json::array();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

std::string bool_str(bool v) { return v ? "true" : "false"; }

Rational pow10(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
    return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

// Upward-rounded scientific notation for a nonnegative rational.
std::string to_scientific_up(const Rational& x, unsigned significant) {
    if (x <= 0) {
        return "0";
    }
    long e = static_cast<long>(std::floor(static_cast<double>(floor_log2(x)) * std::log10(2.0)));
    while (pow10(e) > x) {
        --e;
    }
    while (pow10(e + 1) <= x) {
        ++e;
    }
    std::string mantissa = to_decimal(x / pow10(e), significant - 1, Rounding::Up);
    if (mantissa.rfind("10", 0) == 0) {
        ++e;
        mantissa = to_decimal(x / pow10(e), significant - 1, Rounding::Up);
    }
    return mantissa + "e" + std::to_string(e);
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

void render(const Report& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        json doc;
        doc["schema_version"] = kReportSchemaVersion;
        doc["command"] = report.command;
        doc["params"] = report.params;
        doc["results"] = report.results;
        doc["discrepancies"] = report.discrepancies;
        out << doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < report.header.size(); ++i) {
            out << (i ? "," : "") << csv_cell(report.header[i]);
        }
        out << '\n';
        for (const auto& row : report.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << csv_cell(row[i]);
            }
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> widths(report.header.size(), 0);
    for (std::size_t i = 0; i < widths.size(); ++i) {
        widths[i] = report.header[i].size();
        for (const auto& row : report.rows) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) {
                line += "  ";
            }
            line += row[i];
            if (i + 1 < row.size()) {
                line.append(widths[i] - row[i].size(), ' ');
            }
        }
        out << line << '\n';
    };
    print_row(report.header);
    std::vector<std::string> rule;
    for (auto w : widths) {
        rule.emplace_back(w, '-');
    }
    print_row(rule);
    for (const auto& row : report.rows) {
        print_row(row);
    }
    for (const auto& note : report.notes) {
        out << note << '\n';
    }
}

Params parse_params(const RunConfig& cfg) {
    return Params{parse_rational(cfg.a), parse_rational(cfg.b), parse_rational(cfg.d0)};
}

json params_json(const Params& p) {
    return json{{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"d0", to_string(p.d0)}};
}

EvalLimits limits_of(const RunConfig& cfg) {
    EvalLimits limits;
    if (cfg.cap) {
        limits.max_index = *cfg.cap;
    }
    return limits;
}

// Evaluates D(0..n), going through the sequence cache when one is configured.
SequenceTable load_table(const Params& params, std::size_t n, const RunConfig& cfg,
                         std::ostream& err) {
    const EvalLimits limits = limits_of(cfg);
    std::optional<std::filesystem::path> dir;
    if (!cfg.cache_dir.empty()) {
        dir = std::filesystem::path(cfg.cache_dir);
    } else {
        dir = cache_dir_from_env();
    }
    if (!dir) {
        return evaluate(params, n, limits);
    }
    if (const auto report = validate_params(params); !report.ok()) {
        throw InvalidParams(report.summary());
    }
    if (n > limits.max_index) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds index cap " +
                          std::to_string(limits.max_index));
    }
    const auto path = cache_file_for(*dir, params);
    if (std::filesystem::exists(path)) {
        try {
            SequenceTable cached = read_cache(path);
            if (cached.params() == params && cached.size() > n) {
                const auto v = cached.values();
                return SequenceTable(params, std::vector<Rational>(v.begin(), v.begin() + n + 1));
            }
        } catch (const CacheCorrupted& e) {
            err << "warning: ignoring cache entry: " << e.what() << '\n';
        }
    }
    SequenceTable table = evaluate(params, n, limits);
    write_cache(table, path);
    return table;
}

void add_printed_table(Report& report, const SequenceTable& table) {
    for (const auto& pv : printed_table_discrepancies(table)) {
        report.discrepancies.push_back({{"n", pv.n},
                                        {"printed", pv.printed},
                                        {"recomputed", to_string(pv.recomputed)},
                                        {"matches", pv.matches}});
        if (!pv.matches) {
            report.notes.push_back("note: printed D(" + std::to_string(pv.n) + ") = " +
                                   pv.printed + " disagrees with recomputed " +
                                   to_string(pv.recomputed));
        }
    }
}

Report cmd_eval(const RunConfig& cfg, std::ostream& err) {
    const Params params = parse_params(cfg);
    const SequenceTable table = load_table(params, cfg.n, cfg, err);
    Report r{"eval"};
    r.params = params_json(params);
    r.params["n"] = cfg.n;
    json values = json::array();
    r.header = {"n", "D(n)"};
    for (std::size_t n = 0; n < table.size(); ++n) {
        values.push_back(to_string(table[n]));
        r.rows.push_back({std::to_string(n), to_string(table[n])});
    }
    r.results["values"] = values;
    r.results["monotone"] = is_monotone(table);
    r.results["recursion_exact"] = table.satisfies_recursion();
    add_printed_table(r, table);
    return r;
}

Report cmd_bounds(const RunConfig& cfg, std::ostream& err) {
    const Params params = parse_params(cfg);
    const SequenceTable table = load_table(params, cfg.kmax + cfg.lmax, cfg, err);
    const auto certs = certify(table, cfg.kmax, cfg.lmax);
    Report r{"bounds"};
    r.params = params_json(params);
    r.params["kmax"] = cfg.kmax;
    r.params["lmax"] = cfg.lmax;
    r.header = {"k", "l", "q_l", "lower", "actual", "upper", "ratio", "holds"};
    json list = json::array();
    bool all_hold = true;
    for (const auto& c : certs) {
        json item{{"k", c.k},
                  {"l", c.l},
                  {"q_l", to_string(c.q_l)},
                  {"lower", to_string(c.lower)},
                  {"upper", to_string(c.upper)},
                  {"actual", to_string(c.actual)},
                  {"ratio", to_string(c.ratio)},
                  {"holds", c.holds}};
        if (c.integer_envelope) {
            item["integer_lower"] = to_string(c.integer_envelope->first);
            item["integer_upper"] = to_string(c.integer_envelope->second);
        }
        list.push_back(std::move(item));
        all_hold = all_hold && c.holds;
        r.rows.push_back({std::to_string(c.k), std::to_string(c.l), to_string(c.q_l),
                          to_string(c.lower), to_string(c.actual), to_string(c.upper),
                          to_string(c.ratio), bool_str(c.holds)});
    }
    r.results["certificates"] = list;
    r.results["all_hold"] = all_hold;
    return r;
}

Report cmd_converge(const RunConfig& cfg, std::ostream& err) {
    const Params params = parse_params(cfg);
    const SequenceTable table = load_table(params, cfg.k + cfg.lmax, cfg, err);
    const auto profile = convergence_profile(table, cfg.k, cfg.lmin, cfg.lmax);
    Report r{"converge"};
    r.params = params_json(params);
    r.params["k"] = cfg.k;
    r.params["lmin"] = cfg.lmin;
    r.params["lmax"] = cfg.lmax;
    r.header = {"l", "ratio_minus_1", "gap", "within"};
    json rows = json::array();
    for (const auto& row : profile.rows) {
        const bool within = row.ratio_excess >= 0 && row.ratio_excess <= row.gap;
        rows.push_back({{"l", row.l},
                        {"ratio_minus_1", to_string(row.ratio_excess)},
                        {"gap", to_string(row.gap)},
                        {"within", within}});
        r.rows.push_back({std::to_string(row.l), to_string(row.ratio_excess), to_string(row.gap),
                          bool_str(within)});
    }
    r.results["rows"] = rows;
    return r;
}

Report cmd_growth(const RunConfig& cfg, std::ostream& err) {
    const Params params = parse_params(cfg);
    const std::size_t first = cfg.from.value_or(cfg.l);
    if (first == 0 || first > cfg.l) {
        throw DomainError("need 1 <= from <= l");
    }
    const SequenceTable table = load_table(params, cfg.l, cfg, err);
    Report r{"growth"};
    r.params = params_json(params);
    r.params["l"] = cfg.l;
    r.params["from"] = first;
    r.params["rtol"] = cfg.rtol;
    r.params["digits"] = cfg.digits;
    r.header = {"l", "c_lo", "c_hi", "width", "log_log_index"};
    json list = json::array();
    for (std::size_t l = first; l <= cfg.l; ++l) {
        const GrowthEnclosure enc = growth_enclosure(table, l, cfg.rtol);
        const std::string lo = to_decimal(enc.c_lo.value, cfg.digits, Rounding::Down);
        const std::string hi = to_decimal(enc.c_hi.value, cfg.digits, Rounding::Up);
        const bool certified = certify_enclosure(table, l, parse_decimal(lo), parse_decimal(hi));
        json index = nullptr;
        std::string index_text = "-";
        if (params.b * table[l] > 1) {
            const Approximation idx = log_log_index(table, l, cfg.rtol);
            index_text = to_decimal(idx.value, std::min(cfg.digits, 30u), Rounding::Down);
            index = index_text;
        }
        list.push_back({{"l", l},
                        {"c_lo", lo},
                        {"c_hi", hi},
                        {"c_lo_error", to_scientific_up(enc.c_lo.error, 3)},
                        {"c_hi_error", to_scientific_up(enc.c_hi.error, 3)},
                        {"width", to_scientific_up(enc.width(), 6)},
                        {"precision_bits", enc.precision_bits},
                        {"certified", certified},
                        {"log_log_index", index}});
        r.rows.push_back({std::to_string(l), lo, hi, to_scientific_up(enc.width(), 6), index_text});
    }
    r.results["enclosures"] = list;
    return r;
}

Report cmd_benchmark(const RunConfig& cfg, std::ostream&) {
    const Params params = parse_params(cfg);
    const auto rows = compare_to_benchmark(params, cfg.n, limits_of(cfg));
    Report r{"benchmark"};
    r.params = params_json(params);
    r.params["n"] = cfg.n;
    r.header = {"n", "D(n)", "benchmark", "dominates"};
    json list = json::array();
    bool all = true;
    for (const auto& row : rows) {
        list.push_back({{"n", row.n},
                        {"value", to_string(row.value)},
                        {"benchmark", to_string(row.benchmark)},
                        {"dominates", row.dominates}});
        all = all && row.dominates;
        r.rows.push_back({std::to_string(row.n), to_string(row.value), to_string(row.benchmark),
                          bool_str(row.dominates)});
    }
    r.results["rows"] = list;
    r.results["all_dominate"] = all;
    return r;
}

json read_json_file(const std::string& path) {
    if (path.empty()) {
        throw ParseError("--file is required");
    }
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

Rational rational_field(const json& v) {
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(Integer(std::to_string(v.get<long long>()), 10));
    }
    throw ParseError("expected a rational string, got " + v.dump());
}

std::vector<Rational> rational_list(const json& v) {
    std::vector<Rational> out;
    for (const auto& item : v) {
        out.push_back(rational_field(item));
    }
    return out;
}

Matrix matrix_field(const json& doc, const char* name) {
    if (!doc.contains(name) || !doc.at(name).is_array()) {
        throw ParseError(std::string("matrix '") + name + "' missing or not an array");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : doc.at(name)) {
        rows.push_back(rational_list(row));
    }
    return Matrix::from_rows(rows);
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(to_string(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_text(const Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            s += (j ? " " : "") + to_string(m(i, j));
        }
    }
    return s;
}

struct GeneralOutcome {
    Report report;
    bool sandwich_ok = true;
};

GeneralOutcome cmd_general(const RunConfig& cfg, std::ostream&) {
    const json doc = read_json_file(cfg.file);
    PowerNonlinearity pn;
    try {
        pn.c1 = rational_field(doc.at("c1"));
        pn.c2 = rational_field(doc.at("c2"));
        pn.delta = rational_field(doc.at("delta"));
        const json& fam = doc.at("family");
        pn.family.power = fam.at("power").get<unsigned>();
        pn.family.alpha = rational_list(fam.at("alpha"));
        pn.family.beta = rational_list(fam.at("beta"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad nonlinearity document: ") + e.what());
    }
    const Rational d0 = doc.contains("d0") ? rational_field(doc.at("d0")) : Rational(1);
    const std::size_t n = cfg.n_override.value_or(doc.value("n", std::size_t{0}));

    const EnvelopePair env = envelope(pn, d0, n, cfg.bits, limits_of(cfg));
    std::vector<Rational> samples;
    if (doc.contains("z_samples")) {
        samples = rational_list(doc.at("z_samples"));
    } else {
        for (const auto& v : env.actual) {
            if (v >= 1) {
                samples.push_back(v);
            }
        }
    }
    const std::size_t last_step = n == 0 ? 0 : n - 1;
    const ValidationReport sandwich = verify_sandwich(pn, samples, 0, last_step);

    GeneralOutcome outcome{Report{"general"}, sandwich.ok()};
    Report& r = outcome.report;
    r.params = {{"c1", to_string(pn.c1)},
                {"c2", to_string(pn.c2)},
                {"delta", to_string(pn.delta)},
                {"power", pn.family.power},
                {"d0", to_string(d0)},
                {"n", n}};
    json violations = json::array();
    for (const auto& v : sandwich.violations) {
        json w = json::object();
        for (const auto& [name, value] : v.witnesses) {
            w[name] = to_string(value);
        }
        violations.push_back({{"condition", v.condition}, {"witnesses", w}});
        r.notes.push_back("sandwich violation: " + v.condition);
    }
    r.results["sandwich"] = {{"ok", sandwich.ok()}, {"violations", violations}};
    r.results["exact"] = env.exact;
    json lower = json::array();
    json upper = json::array();
    json actual = json::array();
    bool contained = true;
    r.header = {"n", "lower", "actual", "upper", "contained"};
    for (std::size_t i = 0; i < env.actual.size(); ++i) {
        const bool in = env.lower[i] <= env.actual[i] && env.actual[i] <= env.upper[i];
        contained = contained && in;
        lower.push_back(to_string(env.lower[i]));
        upper.push_back(to_string(env.upper[i]));
        actual.push_back(to_string(env.actual[i]));
        r.rows.push_back({std::to_string(i), to_string(env.lower[i]), to_string(env.actual[i]),
                          to_string(env.upper[i]), bool_str(in)});
    }
    r.results["lower"] = lower;
    r.results["actual"] = actual;
    r.results["upper"] = upper;
    r.results["contained"] = contained;
    return outcome;
}

Report cmd_matrix(const RunConfig& cfg, std::ostream&) {
    const json doc = read_json_file(cfg.file);
    MatrixParams mp{matrix_field(doc, "A"), matrix_field(doc, "B"), matrix_field(doc, "D0")};
    const std::size_t n = cfg.n_override.value_or(doc.value("n", std::size_t{0}));
    const std::size_t cap = cfg.cap.value_or(kDefaultMatrixIndexCap);
    const auto seq = evaluate_matrix(mp, n, cap);
    const SequenceTable env = scalar_envelope(mp, n, cap);

    Report r{"matrix"};
    r.params = {{"A", matrix_json(mp.a)}, {"B", matrix_json(mp.b)}, {"D0", matrix_json(mp.d0)},
                {"n", n}};
    r.header = {"n", "norm", "envelope", "within", "matrix"};
    json steps = json::array();
    bool monotone = true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Rational norm = seq[i].max_row_sum();
        const bool within = norm <= env[i];
        if (i > 0) {
            monotone = monotone && seq[i].dominates(seq[i - 1]);
        }
        steps.push_back({{"n", i},
                         {"matrix", matrix_json(seq[i])},
                         {"norm", to_string(norm)},
                         {"envelope", to_string(env[i])},
                         {"within", within}});
        r.rows.push_back({std::to_string(i), to_string(norm), to_string(env[i]), bool_str(within),
                          matrix_text(seq[i])});
    }
    r.results["steps"] = steps;
    r.results["entrywise_monotone"] = monotone;
    return r;
}

Report cmd_ns(const RunConfig& cfg, std::ostream& err) {
    const Params params = ns_params(cfg.d);
    const SequenceTable table = load_table(params, cfg.n, cfg, err);
    std::optional<Integer> budget;
    if (!cfg.budget.empty()) {
        const Rational b = parse_rational(cfg.budget);
        if (!is_integer(b) || b < 0) {
            throw ParseError("--budget must be a nonnegative integer");
        }
        budget = b.get_num();
    }
    const CostProjection proj =
        cost_projection(NsModel{cfg.d, cfg.n, cfg.bytes}, budget, limits_of(cfg));

    Report r{"ns"};
    r.params = {{"d", cfg.d}, {"n", cfg.n}, {"bytes_per_term", cfg.bytes}};
    if (budget) {
        r.params["budget"] = to_string(*budget);
    }
    const Integer d2 = Integer(cfg.d) * cfg.d;
    r.header = {"n", "terms", "summands", "bytes", "over_budget"};
    json rows = json::array();
    for (const auto& row : proj.rows) {
        const Integer summands = d2 * row.terms * row.terms;
        const bool over = budget && row.bytes > *budget;
        rows.push_back({{"n", row.n},
                        {"terms", to_string(row.terms)},
                        {"summands", to_string(summands)},
                        {"bytes", to_string(row.bytes)},
                        {"over_budget", over}});
        r.rows.push_back({std::to_string(row.n), to_string(row.terms), to_string(summands),
                          to_string(row.bytes), bool_str(over)});
    }
    r.results["rows"] = rows;
    r.results["first_over_budget"] =
        proj.first_over_budget ? json(*proj.first_over_budget) : json(nullptr);
    if (proj.first_over_budget) {
        r.notes.push_back("first n over budget: " + std::to_string(*proj.first_over_budget));
    }
    add_printed_table(r, table);
    return r;
}

void add_scalar_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--a", cfg.a, "additive constant a (p/q or integer)")->required();
    sub->add_option("--b", cfg.b, "quadratic coefficient b (p/q or integer)")->required();
    sub->add_option("--d0", cfg.d0, "seed D(0)")->capture_default_str();
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--cap", cfg.cap, "override the index cap");
    sub->add_option("--cache-dir", cfg.cache_dir,
                    "sequence cache directory (default: $RECGROW_CACHE_DIR)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact evaluation and growth certificates for D(n+1) = a + b D(n)^2", "recgrow"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate D(0..n) exactly");
    add_scalar_options(eval, cfg);
    eval->add_option("--n", cfg.n, "last index")->required();

    auto* bounds = app.add_subcommand("bounds", "certify the two-sided bounds over (k, l)");
    add_scalar_options(bounds, cfg);
    bounds->add_option("--kmax", cfg.kmax)->required()->check(CLI::Range(1u, 1000000u));
    bounds->add_option("--lmax", cfg.lmax)->required()->check(CLI::Range(1u, 1000000u));

    auto* converge = app.add_subcommand("converge", "ratio - 1 against its shrinking envelope");
    add_scalar_options(converge, cfg);
    converge->add_option("--k", cfg.k)->required()->check(CLI::Range(1u, 1000000u));
    converge->add_option("--lmin", cfg.lmin)->capture_default_str();
    converge->add_option("--lmax", cfg.lmax)->required();

    auto* growth = app.add_subcommand("growth", "certified enclosure of the growth constant");
    add_scalar_options(growth, cfg);
    growth->add_option("--l", cfg.l, "witness index")->required()->check(CLI::Range(1u, 1000000u));
    growth->add_option("--from", cfg.from, "first witness index of a range ending at --l");
    growth->add_option("--rtol", cfg.rtol, "relative tolerance (>= 1e-30)")->capture_default_str();
    growth->add_option("--digits", cfg.digits, "fractional digits printed")->capture_default_str();

    auto* bench = app.add_subcommand("benchmark", "compare D(n) with 2^(2^(n-1))");
    add_scalar_options(bench, cfg);
    bench->add_option("--n", cfg.n)->required();

    auto* general = app.add_subcommand("general", "envelopes for a power-type nonlinearity");
    general->add_option("--file", cfg.file, "nonlinearity JSON document")->required();
    general->add_option("--n", cfg.n_override, "last index (overrides the document)");
    general->add_option("--bits", cfg.bits, "root precision for non-integer delta")
        ->capture_default_str();

    auto* matrix = app.add_subcommand("matrix", "matrix recursion D(n+1) = A + B D(n)^2");
    matrix->add_option("--file", cfg.file, "matrix JSON document")->required();
    matrix->add_option("--n", cfg.n_override, "last index (overrides the document)");

    auto* ns = app.add_subcommand("ns", "Navier-Stokes Picard term counts");
    ns->add_option("--d", cfg.d, "spatial dimension")->capture_default_str()->check(
        CLI::Range(1u, 1000000u));
    ns->add_option("--n", cfg.n, "last iteration")->required();
    ns->add_option("--bytes", cfg.bytes, "bytes per term")->capture_default_str();
    ns->add_option("--budget", cfg.budget, "memory budget in bytes");

    for (auto* sub : {eval, bounds, converge, growth, bench, general, matrix, ns}) {
        add_common_options(sub, cfg);
    }

    std::vector<std::string> argv_store{"recgrow"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        std::optional<Report> report;
        int code = kOk;
        if (eval->parsed()) {
            report = cmd_eval(cfg, err);
        } else if (bounds->parsed()) {
            report = cmd_bounds(cfg, err);
        } else if (converge->parsed()) {
            report = cmd_converge(cfg, err);
        } else if (growth->parsed()) {
            report = cmd_growth(cfg, err);
        } else if (bench->parsed()) {
            report = cmd_benchmark(cfg, err);
        } else if (general->parsed()) {
            auto outcome = cmd_general(cfg, err);
            if (!outcome.sandwich_ok) {
                err << "invalid parameters: claimed constants do not bound F\n";
                code = kInvalidParams;
            }
            report = std::move(outcome.report);
        } else if (matrix->parsed()) {
            report = cmd_matrix(cfg, err);
        } else {
            report = cmd_ns(cfg, err);
        }
        render(*report, cfg.format, out);
        return code;
    } catch (const InvalidParams& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParams;
    } catch (const DomainError& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParams;
    } catch (const DimensionMismatch& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kInvalidParams;
    } catch (const CapExceeded& e) {
        err << "limit exceeded: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const ToleranceUnachievable& e) {
        err << "tolerance unachievable: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace recgrow::cli
