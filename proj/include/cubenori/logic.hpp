#pragma once

#include "cubenori/abelian_group.hpp"
#include "cubenori/cubes.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cubenori {

/**
 * Regular sequents over abelian-group sorts.
 *
 * Grammar (ASCII alternatives in brackets):
 *
 *     sequent  ::= top turnstile context formula [ arrow formula ]
 *     top      ::= "⊤" ["T" | "true"]
 *     turnstile::= "⊢_" ["|-_"]   or "⊢" ["|-"] for an empty context
 *     context  ::= "{" [binder {"," binder}] "}" | binder {"," binder}
 *     binder   ::= name [":" sort]
 *     formula  ::= part {"∧" ["&"] part}
 *     part     ::= "⊤" | term "=" term | "(" formula ")"
 *                | "(" "∃" binders ")" formula | "∃" binders "." formula
 *                  ["exists" for "∃"]
 *     term     ::= atom {"+" atom}
 *     atom     ::= "*" | "0" | name "(" term ")" | name | "(" term ")"
 *
 * Without an arrow the antecedent is ⊤. A quantifier body extends as far to
 * the right as possible. Names start with a letter (or any non-ASCII code
 * point other than the reserved symbols) and may contain letters, digits,
 * "_" and "'". The constant * (or 0) is the zero of whatever sort the
 * context forces. Error positions are byte offsets.
 */

struct SymbolType
{
    std::string source;
    std::string target;
};

class Signature
{
public:
    void add_sort(const std::string& name);
    /// Throws SortError when a sort is undeclared.
    void add_symbol(const std::string& name, const std::string& source, const std::string& target);

    bool has_sort(const std::string& name) const { return sorts_.count(name) != 0; }
    /// nullptr when the symbol is not declared.
    const SymbolType* symbol(const std::string& name) const;

    const std::vector<std::string>& sorts() const noexcept { return sort_order_; }
    const std::map<std::string, SymbolType>& symbols() const noexcept { return symbols_; }

private:
    std::map<std::string, bool> sorts_;
    std::vector<std::string> sort_order_;
    std::map<std::string, SymbolType> symbols_;
};

struct Binder
{
    std::string name;
    std::string sort;
    std::size_t position = 0;
};

struct Term
{
    enum class Kind { variable, zero, apply, sum };

    Kind kind = Kind::zero;
    std::string name;        ///< variable or symbol name
    std::vector<Term> args;  ///< one argument for apply, summands for sum
    std::string sort;        ///< filled in by sort checking
    std::size_t slot = 0;    ///< binder slot of a variable
    std::size_t position = 0;
};

struct Formula
{
    enum class Kind { truth, equation, conjunction, exists };

    Kind kind = Kind::truth;
    std::vector<Term> terms;      ///< the two sides of an equation
    std::vector<Formula> parts;   ///< conjuncts, or the body of exists
    std::vector<Binder> binders;  ///< exists binders
    std::vector<std::size_t> slots;
    std::size_t position = 0;
};

/// ⊤ ⊢_context antecedent → consequent, sort checked against a signature.
struct RegularSequent
{
    std::vector<Binder> context;
    std::vector<std::size_t> context_slots;
    Formula antecedent;
    Formula consequent;
    /// Sort of every binder slot (context and quantifiers).
    std::vector<std::string> slot_sorts;

    /// Canonical text with every binder typed.
    std::string to_string() const;
};

/// Throws SyntaxError, SortError, or UnboundSymbol for undeclared function symbols.
RegularSequent parse_sequent(const std::string& text, const Signature& signature);

/// Sorts interpreted by finite groups and symbols by homomorphisms.
class FiniteModel
{
public:
    /// Throws SortError unless the group is finite.
    void add_sort(const std::string& name, const FgAbGroup& carrier);
    /// Throws SortError when the map does not run between the two carriers.
    void add_symbol(const std::string& name, const GroupHom& map, const std::string& source, const std::string& target);

    const Signature& signature() const noexcept { return signature_; }
    /// Throws UnboundSymbol for unknown names.
    const FgAbGroup& carrier(const std::string& sort) const;
    const GroupHom& function(const std::string& symbol) const;

private:
    Signature signature_;
    std::map<std::string, FgAbGroup> carriers_;
    std::map<std::string, GroupHom> functions_;
};

/**
 * Truth of the sequent by exhaustive search: for every assignment of the
 * context satisfying the antecedent, the consequent holds. Throws
 * UnboundSymbol when a sort or symbol has no interpretation and
 * SearchTooLarge when the search visits more than search_limit assignments
 * in total, counting every quantifier block.
 */
bool evaluate(const RegularSequent& seq, const FiniteModel& m, std::uint64_t search_limit = 1ull << 24);

/// Parses against the model's signature, then evaluates.
bool evaluate(const std::string& text, const FiniteModel& m, std::uint64_t search_limit = 1ull << 24);

/**
 * Sequent file: one sequent per line after a preamble of bindings
 *
 *     sort NAME = COMPONENT
 *     symbol NAME : SORT -> SORT = COMPONENT
 *
 * where COMPONENT names a sort or symbol of a model. Blank lines and lines
 * starting with '#' are ignored. Bindings after the first sequent are a
 * SyntaxError.
 */
struct SequentFile
{
    struct SortBinding
    {
        std::string name;
        std::string component;
    };
    struct SymbolBinding
    {
        std::string name;
        std::string source;
        std::string target;
        std::string component;
    };

    std::vector<SortBinding> sorts;
    std::vector<SymbolBinding> symbols;
    std::vector<std::string> sequents;
    std::vector<std::size_t> sequent_offsets;
};

SequentFile parse_sequent_file(const std::string& text);

/// The model seen through the file's bindings.
FiniteModel bind(const SequentFile& file, const FiniteModel& components);

/// One verdict per sequent; syntax errors are reported with file offsets.
std::vector<bool> evaluate_file(const SequentFile& file, const FiniteModel& components,
                                std::uint64_t search_limit = 1ull << 24);

// models built from cohomology

/// Exactness of A -g-> B -f-> C at B as two sequents in sorts A, B, C.
extern const char* const exactness_kernel_sequent;  // f(y) = * implies y in the image of g
extern const char* const exactness_complex_sequent; // f(g(x)) = *

/// Sorts "A", "B", "C" and symbols "g", "f". Throws SortError for infinite groups.
FiniteModel exactness_model(const GroupHom& f, const GroupHom& g);
/// Both exactness sequents in exactness_model(f, g).
bool exactness_sequents(const GroupHom& f, const GroupHom& g, std::uint64_t search_limit = 1ull << 24);

/// A junction A -g-> B -f-> C of a long exact sequence.
struct ExactnessInstance
{
    std::string label;
    GroupHom g;
    GroupHom f;
};

/// All junctions of the Z/m long exact sequence of a triple for degrees in [lo, hi].
std::vector<ExactnessInstance> les_instances(const Triple& t, const Integer& modulus, int lo, int hi);

/// The same junction with f replaced by zero; used as a counter-model.
ExactnessInstance corrupt(const ExactnessInstance& e);

extern const char* const excision_injectivity_sequent;
extern const char* const excision_surjectivity_sequent;

/**
 * Sorts "whole" = H^n(X, Z; Z/m), "piece" = H^n(Y, Y n Z; Z/m) and the
 * restriction "exc". A corrupted model composes exc with the projection that
 * kills the first generator of the target.
 */
FiniteModel excision_model(const Cover& c, int n, const Integer& modulus, bool corrupted = false);

struct ExcisionVerdict
{
    bool injective = false;          ///< first sequent
    bool surjective = false;         ///< second sequent
    bool matrix_injective = false;   ///< same map, matrix level
    bool matrix_surjective = false;

    bool agrees() const { return injective == matrix_injective && surjective == matrix_surjective; }
};

ExcisionVerdict excision_sequents(const Cover& c, int n, const Integer& modulus, bool corrupted = false,
                                  std::uint64_t search_limit = 1ull << 24);

/**
 * Sorts "h" = H^n(P x Q; Z/m) and "t0".."tn" with t_i = H^i(P) (x) H^{n-i}(Q),
 * symbols "k0".."kn" interpreting the external products, and the sequent
 *
 *     ⊤ ⊢_{y:h} y = y → (∃x0:t0, ..., xn:tn) k0(x0) + ... + kn(xn) = y
 */
struct KunnethSentence
{
    FiniteModel model;
    std::string sequent;
    /// Surjectivity of the summed external product, from its cokernel.
    bool matrix_surjective = false;
};

KunnethSentence strong_kunneth_model(const SubcomplexPair& p, const SubcomplexPair& q, int n, const Integer& modulus);

struct KunnethVerdict
{
    bool sequent = false;
    bool matrix_surjective = false;

    bool agrees() const { return sequent == matrix_surjective; }
};

KunnethVerdict strong_kunneth_sequent(const SubcomplexPair& p, const SubcomplexPair& q, int n,
                                      const Integer& modulus, std::uint64_t search_limit = 1ull << 24);

} // namespace cubenori
