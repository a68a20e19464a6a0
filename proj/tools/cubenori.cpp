// Command-line driver: cohomology of corpus pairs, verification suites and
// corpus generation.

#include "cubenori/cohomology.hpp"
#include "cubenori/corpus.hpp"
#include "cubenori/errors.hpp"
#include "cubenori/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace cubenori;

constexpr int exit_failures = 1;
constexpr int exit_invalid = 2;

std::pair<int, int> parse_window(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CorpusError("window must look like LO:HI, got " + text);
    try {
        std::size_t used_lo = 0, used_hi = 0;
        const std::string lo_text = text.substr(0, colon), hi_text = text.substr(colon + 1);
        const int lo = std::stoi(lo_text, &used_lo);
        const int hi = std::stoi(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo > hi)
            throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw CorpusError("bad window " + text);
    }
}

Corpus open_corpus(const std::string& path)
{
    return path.empty() ? builtin_corpus() : Corpus::load(path);
}

void write_json(const std::string& path, const nlohmann::json& j)
{
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw CorpusError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cubical cohomology checks"};
    app.require_subcommand(1);

    std::string corpus_path, pair_name, window_text, suite = "all", json_path;
    long modulus = 0;
    std::uint64_t seed = 0;
    bool seeded = false;
    GeneratorBounds bounds;

    auto* cohomology = app.add_subcommand("cohomology", "Print H^n of a corpus pair");
    cohomology->add_option("--corpus", corpus_path, "Corpus JSON (builtin corpus when omitted)");
    cohomology->add_option("--pair", pair_name, "Pair name")->required();
    cohomology->add_option("--window", window_text, "Degrees LO:HI (default 0:dim)");
    cohomology->add_option("--modulus", modulus, "Reduce coefficients mod M")->check(CLI::Range(2L, 1L << 30));

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--corpus", corpus_path, "Corpus JSON (builtin corpus when omitted)");
    std::vector<std::string> selectors = suite_names();
    selectors.push_back("all");
    verify->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(selectors));
    verify->add_option("--window", window_text, "Degrees LO:HI for every instance");
    verify->add_option("--modulus", modulus, "Coefficients of the logic suite (default 2)")
        ->check(CLI::Range(2L, 1L << 20));
    verify->add_option("--seed", seed, "Verify a generated corpus with this seed instead")
        ->each([&](const std::string&) { seeded = true; });
    verify->add_option("--max-cubes", bounds.max_cubes, "Size bound of generated complexes");
    verify->add_option("--json", json_path, "Write the JSON report here");

    auto* generate = app.add_subcommand("generate", "Write a pseudo-random corpus");
    generate->add_option("--seed", seed, "Generator seed");
    generate->add_option("--max-cubes", bounds.max_cubes, "Largest complex (0 gives an empty corpus)");
    generate->add_option("--complexes", bounds.complexes, "Number of complexes");
    generate->add_option("--triples", bounds.triples_per_complex, "Triples per complex");
    generate->add_option("--covers", bounds.covers_per_complex, "Covers per complex");
    generate->add_option("--maps", bounds.maps_per_complex, "Maps per complex");
    generate->add_option("--json", json_path, "Output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid;
    }

    try {
        if (*cohomology) {
            const Corpus corpus = open_corpus(corpus_path);
            const auto it = corpus.pairs.find(pair_name);
            if (it == corpus.pairs.end())
                throw CorpusError("unknown pair " + pair_name);
            const PairCohomology h(it->second, modulus);
            const auto [lo, hi] =
                window_text.empty() ? std::make_pair(0, it->second.total().dimension()) : parse_window(window_text);
            for (int n = lo; n <= hi; ++n)
                std::cout << "H^" << n << " = " << h.group(n).describe() << '\n';
            return 0;
        }
        if (*verify) {
            SuiteOptions options;
            if (!window_text.empty())
                options.window = parse_window(window_text);
            if (modulus != 0)
                options.modulus = modulus;
            const Corpus corpus =
                seeded ? Corpus::from_json(generate_corpus(seed, bounds)) : open_corpus(corpus_path);
            const std::vector<SuiteReport> reports = run_suites(suite, corpus, options);
            if (!json_path.empty())
                write_json(json_path, reports_to_json(reports));
            std::cout << human_summary(reports);
            for (const SuiteReport& r : reports)
                if (!r.ok())
                    return exit_failures;
            return 0;
        }
        write_json(json_path, generate_corpus(seed, bounds));
        return 0;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_invalid;
    }
}
