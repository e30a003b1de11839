// Command-line front end: polynomial dumps, verification reports and
// root-pairing tables across ranges of n.  Exit codes: 0 all checks pass,
// 1 a mathematical check failed, 2 usage or infrastructure error.

#include <muttjeff/checks.hpp>
#include <muttjeff/pairing.hpp>
#include <muttjeff/serialize.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mj = muttjeff;
using mj::json;

namespace {

struct NRange {
    int from = 0, to = 0;
};

NRange resolve_range(std::optional<int> n, const std::string& range_str, int min_from) {
    if (n && !range_str.empty())
        throw CLI::ValidationError("--n and --n-range are mutually exclusive");
    if (n) return {*n, *n};
    if (range_str.empty()) throw CLI::ValidationError("one of --n or --n-range is required");
    auto dots = range_str.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--n-range must look like A..B");
    NRange r{std::stoi(range_str.substr(0, dots)), std::stoi(range_str.substr(dots + 2))};
    if (r.from > r.to || r.from < min_from)
        throw CLI::ValidationError("invalid range " + range_str);
    return r;
}

json verify_one(int n, const std::set<std::string>& subset, bool timings) {
    json checks = json::object();
    bool all = true;
    for (const auto& def : mj::check_registry()) {
        if (!subset.empty() && !subset.count(def.name)) continue;
        auto start = std::chrono::steady_clock::now();
        mj::CheckResult res;
        if (n < def.min_n) {
            res.name = def.name;
            res.pass = true;
            res.applicable = false;
            res.details = "not applicable below n=" + std::to_string(def.min_n);
        } else {
            res = def.run(n);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        all = all && res.pass;
        json entry{{"pass", res.pass}, {"details", res.details}};
        if (!res.applicable) entry["applicable"] = false;
        if (!res.values.empty()) entry["values"] = res.values;
        if (timings) entry["elapsed_ms"] = ms;
        checks[res.name] = std::move(entry);
    }
    return json{{"n", n}, {"pass", all}, {"checks", std::move(checks)}};
}

/// Fan per-n jobs out over up to `jobs` workers; emission stays ordered by n.
template <class F>
std::vector<json> run_over_range(NRange r, unsigned jobs, F&& f) {
    std::vector<json> out(static_cast<std::size_t>(r.to - r.from + 1));
    if (jobs <= 1) {
        for (int n = r.from; n <= r.to; ++n) out[static_cast<std::size_t>(n - r.from)] = f(n);
        return out;
    }
    std::vector<std::future<void>> workers;
    std::atomic<int> next{r.from};
    for (unsigned w = 0; w < jobs; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
            for (int n = next.fetch_add(1); n <= r.to; n = next.fetch_add(1))
                out[static_cast<std::size_t>(n - r.from)] = f(n);
        }));
    for (auto& w : workers) w.get();
    return out;
}

int cmd_gen(const std::string& kind, int n) {
    json out{{"kind", kind}, {"n", n}};
    if (kind == "T") out["coeffs"] = mj::poly_to_json(mj::cheb_t(n));
    else if (kind == "U") out["coeffs"] = mj::poly_to_json(mj::cheb_u(n));
    else if (kind == "mutt-raw") out["coeffs"] = mj::poly_to_json(mj::mutt_raw(n));
    else if (kind == "mutt-prim") out["coeffs"] = mj::poly_to_json(mj::mutt_prim(n));
    else if (kind == "jeff") out["coeffs"] = mj::poly_to_json(mj::jeff(n));
    else if (kind == "uprime-sqrt") out["coeffs"] = mj::poly_to_json(mj::uprime_sqrt(n));
    else if (kind == "su") out["zcoeffs"] = mj::bivar_to_json(mj::transform_su(n));
    else throw CLI::ValidationError("unknown kind " + kind);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_verify(NRange r, const std::set<std::string>& subset, unsigned jobs, bool timings,
               std::vector<json>* sink = nullptr) {
    bool all = true;
    auto lines = run_over_range(r, jobs, [&](int n) { return verify_one(n, subset, timings); });
    for (auto& line : lines) {
        all = all && line["pass"].get<bool>();
        if (sink) sink->push_back(std::move(line));
        else std::cout << line.dump() << "\n";
    }
    return all ? 0 : 1;
}

int cmd_pair(NRange r, const mj::BigRat& width, unsigned jobs, std::vector<json>* sink = nullptr) {
    bool ok = true;
    auto lines = run_over_range(r, jobs, [&](int n) {
        return mj::pairing_to_json(mj::pair_roots(n, width));
    });
    for (int n = r.from; n <= r.to; ++n) {
        json& line = lines[static_cast<std::size_t>(n - r.from)];
        if (n >= 6 && !line["all_in_window"].get<bool>()) ok = false;
        if (sink) sink->push_back(std::move(line));
        else std::cout << line.dump() << "\n";
    }
    return ok ? 0 : 1;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int cmd_report(NRange r, const std::string& format, const std::string& out_path, unsigned jobs) {
    std::vector<json> verify_lines, pair_lines;
    int rc1 = cmd_verify(r, {}, jobs, false, &verify_lines);
    NRange pr{std::max(r.from, 2), r.to};
    int rc2 = pr.from <= pr.to ? cmd_pair(pr, 0, jobs, &pair_lines) : 0;

    std::ostringstream body;
    if (format == "csv") {
        body << "n,check,pass,value\n";
        for (const auto& line : verify_lines) {
            int n = line["n"].get<int>();
            for (const auto& [name, entry] : line["checks"].items()) {
                std::string value = entry.contains("values") && entry["values"].contains("disc_factored")
                                        ? entry["values"]["disc_factored"].get<std::string>()
                                        : entry["details"].get<std::string>();
                body << n << "," << name << "," << (entry["pass"].get<bool>() ? "true" : "false")
                     << "," << csv_escape(value) << "\n";
            }
        }
        for (const auto& line : pair_lines) {
            int n = line["n"].get<int>();
            body << n << ",pairing," << (line["all_in_window"].get<bool>() ? "true" : "false")
                 << "," << line["pairs"].size() << " pairs\n";
        }
    } else {
        json doc{{"verify", verify_lines}, {"pair", pair_lines}};
        body << doc.dump(2) << "\n";
    }

    std::filesystem::path target(out_path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) {
            std::cerr << "cannot write " << tmp << "\n";
            return 2;
        }
        f << body.str();
    }
    std::filesystem::rename(tmp, target);
    return rc1 != 0 || rc2 != 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for Chebyshev-derived Mutt and Jeff polynomials"};
    app.require_subcommand(1);

    std::optional<int> n_opt;
    std::string range_str, kind, checks_str, width_str, format = "json", out_path;
    unsigned jobs = 1;
    bool timings = false;

    auto* gen = app.add_subcommand("gen", "print one polynomial as JSON");
    gen->add_option("--kind", kind, "T|U|mutt-raw|mutt-prim|jeff|uprime-sqrt|su")->required();
    gen->add_option("--n", n_opt, "index n")->required();

    auto* verify = app.add_subcommand("verify", "run the verification checks, one JSON line per n");
    verify->add_option("--n", n_opt);
    verify->add_option("--n-range", range_str, "inclusive range A..B");
    verify->add_option("--checks", checks_str, "comma-separated subset of check names");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_flag("--timings", timings, "include elapsed_ms (breaks byte-for-byte determinism)");

    auto* pair = app.add_subcommand("pair", "root pairing reports, one JSON line per n");
    pair->add_option("--n", n_opt);
    pair->add_option("--n-range", range_str);
    pair->add_option("--width", width_str, "refinement width as num/den");
    pair->add_option("--jobs", jobs);

    auto* report = app.add_subcommand("report", "aggregate verify + pair results into a file");
    report->add_option("--n-range", range_str)->required();
    report->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--out", out_path)->required();
    report->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            int min_n = (kind == "T" || kind == "U") ? 0 : 1;
            if (!n_opt || *n_opt < min_n) throw CLI::ValidationError("invalid n for kind " + kind);
            return cmd_gen(kind, *n_opt);
        }
        if (verify->parsed()) {
            std::set<std::string> subset;
            std::stringstream ss(checks_str);
            for (std::string item; std::getline(ss, item, ',');)
                if (!item.empty()) subset.insert(item);
            for (const auto& name : subset) {
                bool known = false;
                for (const auto& def : mj::check_registry()) known = known || def.name == name;
                if (!known) throw CLI::ValidationError("unknown check " + name);
            }
            return cmd_verify(resolve_range(n_opt, range_str, 1), subset, jobs, timings);
        }
        if (pair->parsed()) {
            mj::BigRat width = width_str.empty() ? mj::BigRat(0) : mj::parse_rat(width_str);
            return cmd_pair(resolve_range(n_opt, range_str, 2), width, jobs);
        }
        if (report->parsed())
            return cmd_report(resolve_range(n_opt, range_str, 1), format, out_path, jobs);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
