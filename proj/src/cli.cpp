#include "orturan/cli.hpp"

#include "orturan/canon.hpp"
#include "orturan/containment.hpp"
#include "orturan/extremal.hpp"
#include "orturan/homomorphism.hpp"
#include "orturan/regularize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace orturan {

namespace {

    std::string readFile(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    OrientedGraph loadGraph(const std::string& path)
    {
        return decode(readFile(path));
    }

    // A file path if one exists, otherwise a named pattern.
    PatternSpec resolvePattern(const std::string& arg)
    {
        if (std::filesystem::is_regular_file(arg))
            return PatternSpec::customGraph(loadGraph(arg));
        return PatternSpec::parse(arg);
    }

    UndirectedGraph loadHost(const std::string& path)
    {
        const auto text = readFile(path);
        std::istringstream in(text);
        std::string first;
        in >> first;
        if (first == "undirected")
            return decodeUndirected(text);
        return underlying(decode(text));
    }

    int exitFor(ErrorKind kind)
    {
        switch (kind) {
        case ErrorKind::TooLarge: return exit_cap;
        case ErrorKind::BudgetExceeded: return exit_budget;
        default: return exit_input;
        }
    }

    struct Options {
        std::string file;
        Vertex n = 0;
        std::optional<Vertex> nMin;
        std::string pattern;
        std::string patternFile;
        bool verify = false;
        bool json = false;
        unsigned jobs = 1;
        std::optional<std::uint64_t> budgetNodes;
        std::optional<double> budgetSeconds;
        bool lowerBound = false;

        std::string construction;
        unsigned p = 0, q = 0, r = 2;
        std::optional<unsigned> dSize;

        std::string host;
        std::uint64_t seed = 0;
        std::optional<std::size_t> t;
        std::size_t maxRetries = 1024;
        std::size_t maxAttempts = 64;

        Vertex k = 0;
    };

    int runCompress(const Options& o, std::ostream& out)
    {
        const auto f = loadGraph(o.file);
        const auto z = compressibility(f);
        if (o.json) {
            nlohmann::json j;
            j["z"] = z.infinite() ? nlohmann::json("infinite") : nlohmann::json(*z.value);
            j["witness"] = z.witness ? nlohmann::json(codeOf(*z.witness).str()) : nlohmann::json(nullptr);
            out << j.dump(2) << "\n";
            return exit_ok;
        }
        out << "z = " << z.str() << "\n";
        if (z.witness)
            out << "# tournament on " << z.witness->n() << " vertices receiving no homomorphism\n"
                << encode(*z.witness);
        return exit_ok;
    }

    int runExo(const Options& o, std::ostream& out)
    {
        PatternSpec spec;
        if (!o.patternFile.empty())
            spec = PatternSpec::customGraph(loadGraph(o.patternFile));
        else if (!o.pattern.empty())
            spec = resolvePattern(o.pattern);
        else
            throw Error(ErrorKind::InvalidArgument, "exo needs --pattern or --pattern-file");

        OracleOptions options;
        options.jobs = o.jobs;
        options.nodeBudget = o.budgetNodes;
        options.secondsBudget = o.budgetSeconds;
        options.lowerBoundMode = o.lowerBound;

        try {
            if (o.verify) {
                const auto report = verifyAgainstFormula(spec, o.nMin.value_or(o.n), o.n, options);
                if (o.json)
                    out << report.json().dump(2) << "\n";
                else
                    out << report.table();
                return report.ok() ? exit_ok : exit_negative;
            }
            const auto rec = oracleExo(o.n, spec, options);
            if (o.json) {
                out << toJson(rec).dump(2) << "\n";
                return exit_ok;
            }
            out << "n  pattern  value  formula  status\n";
            out << rec.n << "  " << spec.name() << "  " << rec.value << "  "
                << (rec.formulaValue ? std::to_string(*rec.formulaValue) : "-") << "  "
                << (rec.matchesFormula ? (*rec.matchesFormula ? "MATCH"
                                          : rec.value > *rec.formulaValue ? "ORACLE_HIGHER"
                                                                          : "ORACLE_LOWER")
                                       : "-")
                << "\n";
            out << "witness " << rec.witnessCode.str() << "\n" << encode(rec.witness);
            return exit_ok;
        } catch (const BudgetExceeded& e) {
            const auto& best = e.bestSoFar();
            if (o.json) {
                auto j = toJson(best);
                j["budgetExceeded"] = true;
                out << j.dump(2) << "\n";
            } else {
                out << "budget exhausted at n = " << best.n << "; lower bound " << best.value << "\n";
            }
            return exit_budget;
        }
    }

    int runConstruct(const Options& o, std::ostream& out)
    {
        ConstructionParams params;
        params.p = o.p;
        params.q = o.q;
        params.r = o.r;
        params.dSize = o.dSize;
        const auto c = parseConstruction(o.construction);
        out << encode(buildConstruction(c, o.n, params));
        return exit_ok;
    }

    int runEmbed(const Options& o, std::ostream& out)
    {
        const auto host = loadGraph(o.host);
        const auto pattern = bipartitePattern(loadGraph(o.patternFile.empty() ? o.pattern : o.patternFile));
        PipelineOptions options;
        options.tOverride = o.t;
        options.maxRetries = o.maxRetries;
        options.maxAttempts = o.maxAttempts;
        const auto report = faksPipeline(host, pattern, o.r, o.seed, options);
        out << report.json().dump(2) << "\n";
        return report.embedding ? exit_ok : exit_negative;
    }

    int printCheck(const UniversalCheck& check, bool json, std::ostream& out)
    {
        if (json) {
            nlohmann::json j;
            j["holds"] = check.holds;
            j["counterexample"] =
                check.counterexample ? nlohmann::json(encode(*check.counterexample)) : nlohmann::json(nullptr);
            out << j.dump(2) << "\n";
        } else {
            out << (check.holds ? "true" : "false") << "\n";
            if (check.counterexample)
                out << "# counterexample\n" << encode(*check.counterexample);
        }
        return check.holds ? exit_ok : exit_negative;
    }

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Oriented Turán numbers, compressibility and bipartite embeddings", "orturan"};
    app.require_subcommand(1);
    Options o;

    auto* compress = app.add_subcommand("compress", "Compressibility z(F) of a pattern file");
    compress->add_option("file", o.file, "Pattern in .og format")->required();
    compress->add_flag("--json", o.json);

    auto* exo = app.add_subcommand("exo", "Exact oriented Turán number by exhaustive search");
    exo->add_option("--n", o.n, "Vertex count")->required();
    exo->add_option("--n-min", o.nMin, "First n of a --verify-formula sweep (default: --n)");
    exo->add_option("--pattern", o.pattern, "Named pattern or .og file");
    exo->add_option("--pattern-file", o.patternFile, "Pattern in .og format");
    exo->add_flag("--verify-formula", o.verify, "Compare against the closed form");
    exo->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    exo->add_option("--budget-nodes", o.budgetNodes, "Search node budget");
    exo->add_option("--budget-seconds", o.budgetSeconds, "Wall-clock budget");
    exo->add_flag("--lower-bound", o.lowerBound, "Allow 7 < n <= 10");
    exo->add_flag("--json", o.json);

    auto* construct = app.add_subcommand("construct", "Print an extremal construction as .og");
    construct->add_option("name", o.construction, "turan | cyclepower | star | thm32 | prop26 | prop27")->required();
    construct->add_option("--n", o.n, "Vertex count")->required();
    construct->add_option("--p", o.p, "Star in-degree");
    construct->add_option("--q", o.q, "Star out-degree");
    construct->add_option("--r", o.r, "Number of parts");
    construct->add_option("--d", o.dSize, "Size of the part D");

    auto* embed = app.add_subcommand("embed", "Embedding pipeline for an antidirected pattern");
    embed->add_option("--host", o.host, "Host in .og format")->required();
    embed->add_option("--pattern", o.pattern, "Antidirected pattern in .og format")->required();
    embed->add_option("--r", o.r, "Bound on A-side out-degrees")->required();
    embed->add_option("--seed", o.seed, "RNG seed")->required();
    embed->add_option("--t", o.t, "Bucket parameter override");
    embed->add_option("--max-retries", o.maxRetries);
    embed->add_option("--max-attempts", o.maxAttempts);

    auto* check = app.add_subcommand("check-hypothesis", "Universal containment checks");
    check->require_subcommand(1);
    auto* tournaments = check->add_subcommand("all-tournaments", "Every tournament on k vertices contains F");
    tournaments->add_option("--k", o.k)->required();
    tournaments->add_option("--pattern", o.pattern)->required();
    tournaments->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    tournaments->add_flag("--json", o.json);
    auto* orientations = check->add_subcommand("all-orientations", "Every orientation of a host contains F");
    orientations->add_option("--host", o.host)->required();
    orientations->add_option("--pattern", o.pattern)->required();
    orientations->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    orientations->add_flag("--json", o.json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        if (compress->parsed())
            return runCompress(o, out);
        if (exo->parsed())
            return runExo(o, out);
        if (construct->parsed())
            return runConstruct(o, out);
        if (embed->parsed())
            return runEmbed(o, out);
        if (tournaments->parsed())
            return printCheck(allTournamentsContain(o.k, resolvePattern(o.pattern).graph(), o.jobs), o.json, out);
        if (orientations->parsed())
            return printCheck(allOrientationsContain(loadHost(o.host), resolvePattern(o.pattern).graph(), o.jobs),
                              o.json, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exitFor(e.kind());
    }
    return exit_input;
}

} // namespace orturan
