#pragma once

#include "cubenori/cellular.hpp"
#include "cubenori/logic.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace cubenori {

/**
 * Named test material, read from and written to JSON:
 *
 *     {
 *       "schema": "cubenori.corpus", "version": 1,
 *       "complexes":   { name: {"ambient": d, "cubes": [cube, ...]} },
 *       "pairs":       { name: {"total": complex, "sub": complex} },
 *       "maps":        { name: {"source": pair, "target": pair, "rules": [rule, ...]} },
 *       "triples":     { name: {"x": complex, "y": complex, "z": complex} },
 *       "filtrations": { name: {"space": complex, "levels": [complex, ...]} },
 *       "covers":      { name: {"x": complex, "y": complex, "z": complex} },
 *       "sequent_files": { name: {"text": "...", "model": model} }
 *     }
 *
 * A cube is a list of [lo, hi] intervals. "cubes" must be face closed.
 * "sub" may be omitted for an absolute pair. A rule is {"constant": c},
 * {"source": i, "scale": s, "offset": o} or {"source": i, "origin": o,
 * "values": [...]}. A sequent file model is {"kind": "excision", "cover": c,
 * "degree": n} or {"kind": "junction", "triple": t, "degree": n, "at":
 * "whole" | "inner" | "outer"}; its components are those of excision_model and
 * exactness_model. Every section is optional.
 */
class Corpus
{
public:
    struct SequentSource
    {
        std::string text;
        nlohmann::json model;
    };

    Corpus() = default;

    /// Throws CorpusError for schema problems and dangling names, and the
    /// cube-site errors (NotFaceClosed, NotASubcomplex, ...) for invalid data.
    static Corpus from_json(const nlohmann::json& j);
    static Corpus load(const std::string& path);
    const nlohmann::json& to_json() const noexcept { return source_; }

    std::map<std::string, CubicalComplex> complexes;
    std::map<std::string, SubcomplexPair> pairs;
    std::map<std::string, PairMap> maps;
    std::map<std::string, Triple> triples;
    std::map<std::string, Filtration> filtrations;
    std::map<std::string, Cover> covers;
    std::map<std::string, SequentSource> sequent_files;

    /// Components of a sequent file model reduced mod m.
    FiniteModel sequent_model(const std::string& name, const Integer& modulus) const;

private:
    nlohmann::json source_;
};

inline constexpr const char* corpus_schema = "cubenori.corpus";
inline constexpr int corpus_version = 1;

nlohmann::json cube_to_json(const Cube& c);
nlohmann::json complex_to_json(const CubicalComplex& x);

/// Small hand-built corpus exercising every suite.
Corpus builtin_corpus();

struct GeneratorBounds
{
    /// Largest complex; 0 gives an empty corpus.
    std::size_t max_cubes = 20;
    std::size_t complexes = 6;
    std::size_t triples_per_complex = 2;
    std::size_t covers_per_complex = 1;
    std::size_t maps_per_complex = 1;
};

/**
 * Pseudo-random corpus from mt19937_64: random face-closed subsets of small
 * boxes, with derived subcomplex triples, covers, skeleton filtrations and
 * coordinate maps into boxes. The output depends only on seed and bounds.
 */
nlohmann::json generate_corpus(std::uint64_t seed, const GeneratorBounds& bounds);

} // namespace cubenori
