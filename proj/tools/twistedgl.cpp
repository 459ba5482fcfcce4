#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace tgl;
using namespace tgl::cli;

constexpr const char* kCacheEnv = "TWISTEDGL_CACHE";

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::BudgetExceeded: return kBudget;
        case ErrorKind::Parse:
        case ErrorKind::NotPrime:
        case ErrorKind::BadDegree:
        case ErrorKind::OutOfRange:
        case ErrorKind::FieldTooLarge:
        case ErrorKind::Unsupported:
        case ErrorKind::CharTwo: return kUsage;
        default: return kMismatch;
    }
}

void print_error(const std::string& kind, const std::string& message) {
    std::cerr << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

struct Args {
    std::string format = "human";
    std::string cache;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    std::string stat;
    std::uint64_t q = 0;
    int n = 0;
    int terms = 0;
    std::vector<std::uint64_t> qs;
    std::string table;
    std::string tag;
    std::vector<std::string> rest;
};

Format parse_format(const std::string& f) {
    if (f == "json") return Format::Json;
    if (f == "csv") return Format::Csv;
    return Format::Human;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact point counts against cohomology for squarefree polynomials and maximal tori over finite fields"};
    app.require_subcommand(1);
    Args a;
    app.add_option("--format", a.format, "output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--cache", a.cache, std::string("multiplicity cache file (overrides $") + kCacheEnv + ")");
    app.add_option("--budget", a.budget, "maximum number of enumerated objects")->check(CLI::PositiveNumber);
    app.add_option("--jobs", a.jobs, "worker threads for enumeration")->check(CLI::Range(1u, 256u));

    auto* table_a = app.add_subcommand("table-a", "both columns of Table A at one (q, n)");
    table_a->add_option("q,--q", a.q, "field order")->required();
    table_a->add_option("n,--n", a.n, "degree / rank")->required();

    auto* verify = app.add_subcommand("verify-gl", "compare the twisted point count with the cohomology side");
    verify->add_option("stat,--stat", a.stat, "statistic")->required();
    verify->add_option("q,--q", a.q, "field order")->required();
    verify->add_option("n,--n", a.n, "degree")->required();

    auto* fit = app.add_subcommand("fit", "recover multiplicities from point counts over several fields");
    fit->add_option("stat,--stat", a.stat, "statistic")->required();
    fit->add_option("n,--n", a.n, "degree")->required();
    fit->add_option("qs,--qs", a.qs, "comma-separated field orders")->required()->delimiter(',');

    auto* stable = app.add_subcommand("stable", "stable multiplicities a_1..a_I");
    stable->add_option("stat,--stat", a.stat, "statistic")->required();
    stable->add_option("terms,--terms", a.terms, "number of coefficients I")->required();

    auto* tori = app.add_subcommand("tori", "sum of a statistic over maximal tori of GL_n(F_q)");
    tori->add_option("stat,--stat", a.stat, "statistic")->required();
    tori->add_option("q,--q", a.q, "field order")->required();
    tori->add_option("n,--n", a.n, "rank")->required();

    auto* factor = app.add_subcommand("factor-stats", "factorization statistics by brute force");
    factor->add_option("q,--q", a.q, "field order")->required();
    factor->add_option("n,--n", a.n, "degree")->required();

    auto* dump = app.add_subcommand("dump", "dump a table: ls N | graded N | series TAG N");
    dump->add_option("table", a.table, "ls, graded or series")->required()->check(CLI::IsMember({"ls", "graded", "series"}));
    dump->add_option("args", a.rest, "N, or TAG N for series")->expected(0, 2);
    dump->add_option("--tag", a.tag, "series tag (x1, x2, binomx1_2, quad)");
    dump->add_option("--n", a.n, "size or truncation order");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("Usage", e.what());
        return kUsage;
    }

    if (dump->parsed()) {
        auto extras = a.rest;
        if (a.table == "series" && a.tag.empty() && !extras.empty()) {
            a.tag = extras.front();
            extras.erase(extras.begin());
        }
        if (!extras.empty()) {
            try {
                a.n = std::stoi(extras.front());
            } catch (const std::exception&) {
                print_error("Usage", "bad size '" + extras.front() + "'");
                return kUsage;
            }
        }
        if (a.n <= 0) {
            print_error("Usage", "dump needs a positive size");
            return kUsage;
        }
    }

    std::string cache_path = a.cache;
    if (cache_path.empty())
        if (const char* env = std::getenv(kCacheEnv)) cache_path = env;

    try {
        Session s;
        s.opt.jobs = a.jobs;
        s.opt.budget = a.budget;
        if (!cache_path.empty()) s.cache = MultiplicityTable::load(cache_path);

        Report r;
        if (table_a->parsed()) r = cmd_table_a(s, a.q, a.n);
        else if (verify->parsed()) r = cmd_verify_gl(s, parse_statistic(a.stat), a.q, a.n);
        else if (fit->parsed()) r = cmd_fit(s, parse_statistic(a.stat), a.n, a.qs);
        else if (stable->parsed()) r = cmd_stable(s, parse_statistic(a.stat), a.terms);
        else if (tori->parsed()) r = cmd_tori(s, parse_statistic(a.stat), a.q, a.n);
        else if (factor->parsed()) r = cmd_factor_stats(s, a.q, a.n);
        else r = cmd_dump(s, a.table, a.n, a.tag);

        if (!cache_path.empty()) s.cache.save(cache_path);
        std::cout << render(r, parse_format(a.format));
        return r.ok ? kOk : kMismatch;
    } catch (const Error& e) {
        print_error(std::string(to_string(e.kind())), e.what());
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        print_error("Internal", e.what());
        return kMismatch;
    }
}
