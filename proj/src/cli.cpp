#include "cyhull/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "cyhull/cyclic.hpp"
#include "cyhull/oracle.hpp"
#include "cyhull/trace.hpp"
#include "cyhull/verify.hpp"

namespace cyhull::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr uint64_t kMaxQ = 1ull << 12;
constexpr size_t kMaxClassifyLeaders = 24;
constexpr uint64_t kMaxTraceField = 1ull << 16;
constexpr uint64_t kPairSamples = 500;
constexpr uint64_t kRandomSpecs = 1000;
constexpr uint64_t kSuiteSeed = 0x5eed5eedULL;

enum class Format { table, json_fmt, csv };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "json") return Format::json_fmt;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "must be one of table, json, csv");
}

// csv field quoting per RFC 4180
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_u64(const std::vector<uint64_t>& v, const char* sep = ",") {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

std::vector<uint64_t> set_to_vec(const std::set<uint64_t>& s) {
    return {s.begin(), s.end()};
}

json poly_json(const Polynomial& f) {
    json a = json::array();
    if (f.is_zero()) {
        a.push_back(0);
        return a;
    }
    for (uint64_t c : f.codes()) a.push_back(c);
    return a;
}

// plain left-aligned text table
void print_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            os << std::left << std::setw(static_cast<int>(width[i])) << row[i];
            os << (i + 1 == row.size() ? "\n" : "  ");
        }
    };
    line(header);
    for (const auto& row : rows) line(row);
}

void print_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_field(row[i]);
        }
        os << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
}

struct OutputTarget {
    std::ostream* os;
    std::ofstream file;

    explicit OutputTarget(std::ostream& fallback, const std::string& path) {
        if (path.empty()) {
            os = &fallback;
        } else {
            file.open(path);
            if (!file) throw Error("cannot open output file " + path);
            os = &file;
        }
    }
};

struct CommonOpts {
    uint64_t q = 0;
    uint64_t n = 0;
    std::string format = "table";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_n = true) {
    cmd->add_option("--q", o.q, "field size (prime power <= 4096)")->required();
    if (with_n) cmd->add_option("--n", o.n, "code length, gcd(n, q) = 1")->required();
    cmd->add_option("--format", o.format, "output format: table, json, csv")
        ->default_val("table");
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

CyclicSystem make_system(uint64_t q, uint64_t n) {
    if (q < 2 || q > kMaxQ)
        throw Error("q must be a prime power in [2, " + std::to_string(kMaxQ) + "]");
    return CyclicSystem::from_q(q, n);
}

// ---------------------------------------------------------------- factor

int cmd_factor(const CommonOpts& o, std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    const CyclicSystem sys = make_system(o.q, o.n);
    const Format fmt = parse_format(o.format);

    if (fmt == Format::json_fmt) {
        json j;
        j["q"] = sys.q();
        j["n"] = sys.n();
        j["factors"] = json::array();
        for (const auto& [leader, f] : sys.factor_xn_minus_1()) {
            json e;
            e["leader"] = leader;
            e["coset"] = sys.cosets().coset(leader).elements;
            e["delta"] = sys.cosets().coset_size(leader);
            e["coeffs"] = poly_json(f);
            e["poly"] = to_pretty_string(f);
            e["self_reciprocal"] = is_self_reciprocal(f);
            j["factors"].push_back(std::move(e));
        }
        *target.os << j.dump(2) << '\n';
        return 0;
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& [leader, f] : sys.factor_xn_minus_1()) {
        rows.push_back({std::to_string(leader),
                        join_u64(sys.cosets().coset(leader).elements),
                        std::to_string(sys.cosets().coset_size(leader)), to_codes_string(f),
                        to_pretty_string(f), is_self_reciprocal(f) ? "true" : "false"});
    }
    const std::vector<std::string> header{"leader", "coset",  "delta",
                                          "coeffs", "factor", "self_reciprocal"};
    if (fmt == Format::csv)
        print_csv(*target.os, header, rows);
    else
        print_table(*target.os, header, rows);
    return 0;
}

// ---------------------------------------------------------------- cosets

int cmd_cosets(const CommonOpts& o, std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    if (o.q < 2) throw Error("q must be at least 2");
    const CosetTable table(o.q, o.n);
    const Format fmt = parse_format(o.format);

    if (fmt == Format::json_fmt) {
        json j;
        j["q"] = table.q();
        j["n"] = table.n();
        j["cosets"] = json::array();
        for (uint64_t leader : table.leaders()) {
            json e;
            e["leader"] = leader;
            e["elements"] = table.coset(leader).elements;
            e["delta"] = table.coset_size(leader);
            e["neg_pair"] = table.neg_pair(leader);
            j["cosets"].push_back(std::move(e));
        }
        *target.os << j.dump(2) << '\n';
        return 0;
    }

    std::vector<std::vector<std::string>> rows;
    for (uint64_t leader : table.leaders())
        rows.push_back({std::to_string(leader), join_u64(table.coset(leader).elements),
                        std::to_string(table.coset_size(leader)),
                        std::to_string(table.neg_pair(leader))});
    const std::vector<std::string> header{"leader", "elements", "delta", "neg_pair"};
    if (fmt == Format::csv)
        print_csv(*target.os, header, rows);
    else
        print_table(*target.os, header, rows);
    return 0;
}

// ---------------------------------------------------------------- classify

struct ClassificationRecord {
    std::string generator;
    uint64_t dim = 0;
    std::vector<uint64_t> bz_dual;
    uint64_t hull_dim = 0;
    bool lcd = false;
    bool one_dim_hull = false;
};

ClassificationRecord classify_one(const CyclicSystem& sys, uint64_t mask) {
    const auto& leaders = sys.cosets().leaders();
    std::set<uint64_t> gens;
    for (size_t i = 0; i < leaders.size(); ++i)
        if (mask & (1ull << i)) gens.insert(leaders[i]);
    const CyclicCode c = sys.code_from_generator_leaders(gens);
    ClassificationRecord r;
    r.generator = to_codes_string(c.generator());
    r.dim = c.dimension();
    r.bz_dual = set_to_vec(sys.basic_dual_zero(c).leaders);
    r.hull_dim = sys.hull_dimension(c);
    r.lcd = r.hull_dim == 0;
    r.one_dim_hull = r.hull_dim == 1;
    return r;
}

int cmd_classify(const CommonOpts& o, int64_t hull_filter, bool lcd_only, unsigned jobs,
                 std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    const CyclicSystem sys = make_system(o.q, o.n);
    const size_t t = sys.cosets().leaders().size();
    if (t > kMaxClassifyLeaders)
        throw Error("classification needs 2^" + std::to_string(t) +
                    " codes; the enumeration bound is t <= " +
                    std::to_string(kMaxClassifyLeaders) +
                    " coset leaders (pick a smaller n or q)");
    const uint64_t total = 1ull << t;
    if (jobs == 0) jobs = 1;
    const Format fmt = parse_format(o.format);

    auto keep = [&](const ClassificationRecord& r) {
        if (lcd_only && !r.lcd) return false;
        if (hull_filter >= 0 && r.hull_dim != static_cast<uint64_t>(hull_filter)) return false;
        return true;
    };

    const std::vector<std::string> header{"generator", "dim",  "bz_dual",
                                          "hull_dim",  "lcd", "one_dim_hull"};
    json jout;
    std::vector<std::vector<std::string>> table_rows;
    if (fmt == Format::json_fmt) {
        jout["q"] = sys.q();
        jout["n"] = sys.n();
        jout["records"] = json::array();
    } else if (fmt == Format::csv) {
        print_csv(*target.os, header, {});
    }

    auto emit = [&](const ClassificationRecord& r) {
        if (!keep(r)) return;
        if (fmt == Format::json_fmt) {
            json e;
            e["generator"] = json::parse("[" + r.generator + "]");
            e["dim"] = r.dim;
            e["bz_dual"] = r.bz_dual;
            e["hull_dim"] = r.hull_dim;
            e["lcd"] = r.lcd;
            e["one_dim_hull"] = r.one_dim_hull;
            jout["records"].push_back(std::move(e));
            return;
        }
        std::vector<std::string> row{r.generator,
                                     std::to_string(r.dim),
                                     join_u64(r.bz_dual),
                                     std::to_string(r.hull_dim),
                                     r.lcd ? "true" : "false",
                                     r.one_dim_hull ? "true" : "false"};
        if (fmt == Format::csv) {
            std::ostringstream line;
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) line << ',';
                line << csv_field(row[i]);
            }
            *target.os << line.str() << '\n';
        } else {
            table_rows.push_back(std::move(row));
        }
    };

    // canonical order regardless of worker count: process block by block,
    // workers fill disjoint slots, emission is sequential
    const uint64_t block = 4096;
    for (uint64_t start = 0; start < total; start += block) {
        const uint64_t end = std::min(start + block, total);
        std::vector<ClassificationRecord> records(end - start);
        if (jobs == 1) {
            for (uint64_t mask = start; mask < end; ++mask)
                records[mask - start] = classify_one(sys, mask);
        } else {
            std::vector<std::thread> workers;
            const uint64_t chunk = (end - start + jobs - 1) / jobs;
            for (unsigned w = 0; w < jobs; ++w) {
                const uint64_t lo = start + w * chunk;
                const uint64_t hi = std::min(lo + chunk, end);
                if (lo >= hi) break;
                workers.emplace_back([&, lo, hi] {
                    for (uint64_t mask = lo; mask < hi; ++mask)
                        records[mask - start] = classify_one(sys, mask);
                });
            }
            for (auto& th : workers) th.join();
        }
        for (const auto& r : records) emit(r);
    }

    if (fmt == Format::json_fmt)
        *target.os << jout.dump(2) << '\n';
    else if (fmt == Format::table)
        print_table(*target.os, header, table_rows);
    return 0;
}

// ---------------------------------------------------------------- hull

json hull_report(const CyclicSystem& sys, const CyclicCode& c) {
    json j;
    j["q"] = sys.q();
    j["n"] = sys.n();
    j["generator"] = poly_json(c.generator());
    j["dim"] = c.dimension();
    j["bz_dual"] = set_to_vec(sys.basic_dual_zero(c).leaders);
    j["hull_dim"] = sys.hull_dimension(c);
    j["lcd"] = sys.is_lcd(c);
    j["hull_generator"] = poly_json(sys.hull_generator(c));
    j["oracle_hull_dim"] = oracle::hull_dim(c.generator(), sys.n());
    j["agree"] = j["hull_dim"] == j["oracle_hull_dim"];
    return j;
}

void emit_report(const json& j, Format fmt, std::ostream& os) {
    if (fmt == Format::json_fmt) {
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::string> header, row;
    for (const auto& [key, value] : j.items()) {
        header.push_back(key);
        row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    if (fmt == Format::csv)
        print_csv(os, header, {row});
    else
        print_table(os, header, {row});
}

int cmd_hull(const CommonOpts& o, const std::string& gen_text, std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    const CyclicSystem sys = make_system(o.q, o.n);
    const CyclicCode c = sys.code_from_generator(poly_from_codes_string(sys.fq(), gen_text));
    const json j = hull_report(sys, c);
    emit_report(j, parse_format(o.format), *target.os);
    return j["agree"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------- lcp

int cmd_lcp(const CommonOpts& o, const std::string& gen_c_text, const std::string& gen_d_text,
            std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    const CyclicSystem sys = make_system(o.q, o.n);
    const CyclicCode c = sys.code_from_generator(poly_from_codes_string(sys.fq(), gen_c_text));
    const CyclicCode d = sys.code_from_generator(poly_from_codes_string(sys.fq(), gen_d_text));
    const bool formula = sys.is_lcp(c, d);
    const auto gc = oracle::generator_matrix(c.generator(), sys.n());
    const auto gd = oracle::generator_matrix(d.generator(), sys.n());
    const bool by_oracle = c.dimension() + d.dimension() == sys.n() &&
                           oracle::intersect_dim(gc, gd) == 0;
    const bool product_identity = c.generator() * d.generator() == sys.xn_minus_1();

    json j;
    j["q"] = sys.q();
    j["n"] = sys.n();
    j["generator_c"] = poly_json(c.generator());
    j["generator_d"] = poly_json(d.generator());
    j["dim_c"] = c.dimension();
    j["dim_d"] = d.dimension();
    j["lcp"] = formula;
    j["oracle_lcp"] = by_oracle;
    j["product_is_xn_minus_1"] = product_identity;
    j["agree"] = formula == by_oracle && formula == product_identity;
    emit_report(j, parse_format(o.format), *target.os);
    return j["agree"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------- intersect

int cmd_intersect(const CommonOpts& o, const std::string& gen_c_text,
                  const std::string& gen_d_text, std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    const CyclicSystem sys = make_system(o.q, o.n);
    const CyclicCode c = sys.code_from_generator(poly_from_codes_string(sys.fq(), gen_c_text));
    const CyclicCode d = sys.code_from_generator(poly_from_codes_string(sys.fq(), gen_d_text));
    const uint64_t formula = sys.intersection_dimension(c, d);
    const CyclicCode inter = sys.intersection_code(c, d);
    const auto gc = oracle::generator_matrix(c.generator(), sys.n());
    const auto gd = oracle::generator_matrix(d.generator(), sys.n());
    const auto by_oracle = static_cast<uint64_t>(oracle::intersect_dim(gc, gd));

    json j;
    j["q"] = sys.q();
    j["n"] = sys.n();
    j["generator_c"] = poly_json(c.generator());
    j["generator_d"] = poly_json(d.generator());
    j["intersection_dim"] = formula;
    j["oracle_dim"] = by_oracle;
    j["intersection_generator"] = poly_json(inter.generator());
    j["agree"] = formula == by_oracle && inter.dimension() == formula;
    emit_report(j, parse_format(o.format), *target.os);
    return j["agree"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------- verify / trace-check

json suites_json(const std::vector<SuiteResult>& suites) {
    json arr = json::array();
    for (const auto& s : suites) {
        json e;
        e["name"] = s.name;
        e["pass"] = s.pass;
        e["fail"] = s.fail;
        if (!s.note.empty()) e["note"] = s.note;
        if (s.fail > 0) e["counterexample"] = s.counterexample;
        arr.push_back(std::move(e));
    }
    return arr;
}

void emit_suites(const std::vector<SuiteResult>& suites, Format fmt, const json& head,
                 std::ostream& os) {
    if (fmt == Format::json_fmt) {
        json j = head;
        j["suites"] = suites_json(suites);
        j["all_pass"] = all_pass(suites);
        os << j.dump(2) << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : suites)
        rows.push_back({s.name, std::to_string(s.pass), std::to_string(s.fail),
                        s.fail > 0 ? s.counterexample : s.note});
    const std::vector<std::string> header{"suite", "pass", "fail", "detail"};
    if (fmt == Format::csv)
        print_csv(os, header, rows);
    else
        print_table(os, header, rows);
    if (fmt == Format::table)
        os << (all_pass(suites) ? "all suites passed\n" : "FAILURES present\n");
}

uint64_t qm_length(uint64_t q, uint64_t m) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < m; ++i) {
        v *= q;
        if (v > kMaxTraceField)
            throw Error("q^m exceeds the trace-suite bound 2^16");
    }
    return v - 1;
}

int cmd_trace_check(uint64_t q, uint64_t m, const CommonOpts& o, std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    if (q < 2 || q > kMaxQ) throw Error("q must be a prime power in [2, 4096]");
    if (m < 1) throw Error("m must be positive");
    const CyclicSystem sys = make_system(q, qm_length(q, m));
    auto suites = run_trace_suites(sys, kRandomSpecs, kSuiteSeed);
    // this command reports the representation suites only
    std::vector<SuiteResult> wanted;
    for (auto& s : suites)
        if (s.name == "trace_row_space" || s.name == "vanishing_criterion_vs_direct")
            wanted.push_back(std::move(s));
    json head;
    head["q"] = q;
    head["m"] = m;
    head["n"] = sys.n();
    emit_suites(wanted, parse_format(o.format), head, *target.os);
    return all_pass(wanted) ? 0 : 1;
}

int cmd_verify(uint64_t q, uint64_t n, uint64_t m, const CommonOpts& o,
               std::ostream& out_stream) {
    OutputTarget target(out_stream, o.out_path);
    if (q < 2 || q > kMaxQ) throw Error("q must be a prime power in [2, 4096]");
    if ((n == 0) == (m == 0)) throw Error("verify needs exactly one of --n or --m");
    json head;
    head["q"] = q;
    std::vector<SuiteResult> suites;
    if (m > 0) {
        const CyclicSystem sys = make_system(q, qm_length(q, m));
        head["m"] = m;
        head["n"] = sys.n();
        suites = run_trace_suites(sys, kRandomSpecs, kSuiteSeed);
    } else {
        const CyclicSystem sys = make_system(q, n);
        head["n"] = n;
        suites = run_code_suites(sys, kPairSamples, kSuiteSeed);
    }
    emit_suites(suites, parse_format(o.format), head, *target.os);
    return all_pass(suites) ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclic-code toolkit: factorization, hulls, LCD/LCP classification,\n"
                 "trace representations, and a brute-force verification oracle"};
    app.require_subcommand(1);
    int status = 0;

    CommonOpts factor_opts;
    auto* factor = app.add_subcommand("factor", "factor x^n - 1 over F_q by cyclotomic coset");
    add_common(factor, factor_opts);
    factor->callback([&] { status = cmd_factor(factor_opts, out); });

    CommonOpts cosets_opts;
    auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets modulo n");
    add_common(cosets, cosets_opts);
    cosets->callback([&] { status = cmd_cosets(cosets_opts, out); });

    CommonOpts classify_opts;
    int64_t hull_filter = -1;
    bool lcd_only = false;
    unsigned jobs = 1;
    auto* classify =
        app.add_subcommand("classify", "enumerate all cyclic codes of length n over F_q");
    add_common(classify, classify_opts);
    classify->add_option("--hull-dim", hull_filter, "keep only codes with this hull dimension")
        ->check(CLI::NonNegativeNumber);
    classify->add_flag("--lcd-only", lcd_only, "keep only LCD codes");
    classify->add_option("--jobs", jobs, "worker threads for the enumeration")->default_val(1);
    classify->callback(
        [&] { status = cmd_classify(classify_opts, hull_filter, lcd_only, jobs, out); });

    CommonOpts hull_opts;
    std::string gen_text;
    auto* hull = app.add_subcommand("hull", "hull dimension of one cyclic code, with oracle check");
    add_common(hull, hull_opts);
    hull->add_option("--gen", gen_text, "generator polynomial, comma-separated codes low-to-high")
        ->required();
    hull->callback([&] { status = cmd_hull(hull_opts, gen_text, out); });

    CommonOpts lcp_opts;
    std::string gen_c_text, gen_d_text;
    auto* lcp = app.add_subcommand("lcp", "test whether (C, D) is a linear complementary pair");
    add_common(lcp, lcp_opts);
    lcp->add_option("--gen-c", gen_c_text, "generator of C")->required();
    lcp->add_option("--gen-d", gen_d_text, "generator of D")->required();
    lcp->callback([&] { status = cmd_lcp(lcp_opts, gen_c_text, gen_d_text, out); });

    CommonOpts intersect_opts;
    std::string igen_c_text, igen_d_text;
    auto* intersect = app.add_subcommand("intersect", "dimension and generator of C intersect D");
    add_common(intersect, intersect_opts);
    intersect->add_option("--gen-c", igen_c_text, "generator of C")->required();
    intersect->add_option("--gen-d", igen_d_text, "generator of D")->required();
    intersect->callback([&] { status = cmd_intersect(intersect_opts, igen_c_text, igen_d_text, out); });

    CommonOpts trace_opts;
    uint64_t trace_q = 0, trace_m = 0;
    auto* trace_check =
        app.add_subcommand("trace-check", "trace representation suites for n = q^m - 1");
    trace_check->add_option("--q", trace_q, "field size (prime power)")->required();
    trace_check->add_option("--m", trace_m, "extension degree; the length is q^m - 1")->required();
    trace_check->add_option("--format", trace_opts.format, "output format: table, json, csv")
        ->default_val("table");
    trace_check->add_option("--out", trace_opts.out_path, "write output to a file");
    trace_check->callback([&] { status = cmd_trace_check(trace_q, trace_m, trace_opts, out); });

    CommonOpts verify_opts;
    uint64_t verify_q = 0, verify_n = 0, verify_m = 0;
    auto* verify = app.add_subcommand(
        "verify", "run the property suites for (q, n), or for length q^m - 1 with --m");
    verify->add_option("--q", verify_q, "field size (prime power)")->required();
    verify->add_option("--n", verify_n, "code length (code suites)");
    verify->add_option("--m", verify_m, "extension degree (trace suites, n = q^m - 1)");
    verify->add_option("--format", verify_opts.format, "output format: table, json, csv")
        ->default_val("table");
    verify->add_option("--out", verify_opts.out_path, "write output to a file");
    verify->callback(
        [&] { status = cmd_verify(verify_q, verify_n, verify_m, verify_opts, out); });

    std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back to front
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}

}  // namespace cyhull::cli
