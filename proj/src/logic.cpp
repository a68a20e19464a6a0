#include "cubenori/logic.hpp"

#include "cubenori/cohomology.hpp"
#include "cubenori/errors.hpp"
#include "cubenori/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

namespace cubenori {

// ---------------------------------------------------------------------------
// signatures

void Signature::add_sort(const std::string& name)
{
    if (sorts_.emplace(name, true).second)
        sort_order_.push_back(name);
}

void Signature::add_symbol(const std::string& name, const std::string& source, const std::string& target)
{
    if (!has_sort(source))
        throw SortError("symbol " + name + ": undeclared sort " + source);
    if (!has_sort(target))
        throw SortError("symbol " + name + ": undeclared sort " + target);
    symbols_[name] = SymbolType{source, target};
}

const SymbolType* Signature::symbol(const std::string& name) const
{
    const auto it = symbols_.find(name);
    return it == symbols_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// lexer

namespace {

enum class Tok {
    top, turnstile, arrow, conj, exists, lparen, rparen, lbrace, rbrace,
    comma, colon, equals, plus, star, zero, dot, name, end
};

struct Token
{
    Tok kind = Tok::end;
    std::string text;
    std::size_t position = 0;
    bool underscore = false; ///< turnstile followed by "_"
};

const std::string top_symbol = "\xE2\x8A\xA4";
const std::string turnstile_symbol = "\xE2\x8A\xA2";
const std::string arrow_symbol = "\xE2\x86\x92";
const std::string conj_symbol = "\xE2\x88\xA7";
const std::string exists_symbol = "\xE2\x88\x83";

std::size_t utf8_length(unsigned char lead)
{
    if (lead < 0x80)
        return 1;
    if ((lead >> 5) == 0x6)
        return 2;
    if ((lead >> 4) == 0xE)
        return 3;
    if ((lead >> 3) == 0x1E)
        return 4;
    return 1;
}

bool is_name_start(const std::string& s, std::size_t i)
{
    const auto c = static_cast<unsigned char>(s[i]);
    return std::isalpha(c) || c >= 0x80;
}

bool is_name_char(const std::string& s, std::size_t i)
{
    const auto c = static_cast<unsigned char>(s[i]);
    return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

bool reserved_at(const std::string& s, std::size_t i)
{
    for (const std::string* r : {&top_symbol, &turnstile_symbol, &arrow_symbol, &conj_symbol, &exists_symbol})
        if (s.compare(i, r->size(), *r) == 0)
            return true;
    return false;
}

std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t len, bool underscore = false) {
        out.push_back(Token{k, s.substr(i, len), i, underscore});
        i += len;
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        if (s.compare(i, top_symbol.size(), top_symbol) == 0) {
            push(Tok::top, top_symbol.size());
        } else if (s.compare(i, turnstile_symbol.size(), turnstile_symbol) == 0 || s.compare(i, 2, "|-") == 0) {
            const std::size_t len = s[i] == '|' ? 2 : turnstile_symbol.size();
            const bool underscore = i + len < s.size() && s[i + len] == '_';
            push(Tok::turnstile, len + (underscore ? 1 : 0), underscore);
        } else if (s.compare(i, arrow_symbol.size(), arrow_symbol) == 0) {
            push(Tok::arrow, arrow_symbol.size());
        } else if (s.compare(i, 2, "->") == 0) {
            push(Tok::arrow, 2);
        } else if (s.compare(i, conj_symbol.size(), conj_symbol) == 0) {
            push(Tok::conj, conj_symbol.size());
        } else if (s.compare(i, exists_symbol.size(), exists_symbol) == 0) {
            push(Tok::exists, exists_symbol.size());
        } else if (c == '&') {
            push(Tok::conj, 1);
        } else if (c == '(') {
            push(Tok::lparen, 1);
        } else if (c == ')') {
            push(Tok::rparen, 1);
        } else if (c == '{') {
            push(Tok::lbrace, 1);
        } else if (c == '}') {
            push(Tok::rbrace, 1);
        } else if (c == ',') {
            push(Tok::comma, 1);
        } else if (c == ':') {
            push(Tok::colon, 1);
        } else if (c == '=') {
            push(Tok::equals, 1);
        } else if (c == '+') {
            push(Tok::plus, 1);
        } else if (c == '*') {
            push(Tok::star, 1);
        } else if (c == '.') {
            push(Tok::dot, 1);
        } else if (c == '0' && !(i + 1 < s.size() && is_name_char(s, i + 1))) {
            push(Tok::zero, 1);
        } else if (is_name_start(s, i)) {
            std::size_t j = i;
            while (j < s.size() && is_name_char(s, j) && !reserved_at(s, j))
                j += utf8_length(static_cast<unsigned char>(s[j]));
            const std::string word = s.substr(i, j - i);
            if (word == "exists")
                push(Tok::exists, j - i);
            else if (word == "true")
                push(Tok::top, j - i);
            else
                push(Tok::name, j - i);
        } else {
            throw SyntaxError("unexpected character '" + s.substr(i, utf8_length(static_cast<unsigned char>(c))) + "'",
                              i);
        }
    }
    out.push_back(Token{Tok::end, "", s.size(), false});
    return out;
}

// ---------------------------------------------------------------------------
// parser

class Parser
{
public:
    Parser(const std::string& text, const Signature& sig) : tokens_(tokenize(text)), sig_(sig) {}

    RegularSequent sequent()
    {
        RegularSequent seq;
        const Token& first = peek();
        if (!(first.kind == Tok::top || (first.kind == Tok::name && first.text == "T")))
            throw SyntaxError("expected ⊤", first.position);
        ++pos_;
        const Token& ts = expect(Tok::turnstile, "expected ⊢");
        if (ts.underscore) {
            if (peek().kind == Tok::lbrace) {
                ++pos_;
                if (peek().kind != Tok::rbrace)
                    seq.context = binders();
                expect(Tok::rbrace, "expected }");
            } else {
                seq.context = binders();
            }
        }
        for (const Binder& b : seq.context) {
            const std::size_t slot = new_slot(b);
            seq.context_slots.push_back(slot);
            scope_.emplace_back(b.name, slot);
        }

        Formula first_formula = formula();
        if (peek().kind == Tok::arrow) {
            ++pos_;
            seq.antecedent = std::move(first_formula);
            seq.consequent = formula();
        } else {
            seq.antecedent = Formula{};
            seq.antecedent.position = first.position;
            seq.consequent = std::move(first_formula);
        }
        if (peek().kind != Tok::end)
            throw SyntaxError("unexpected '" + peek().text + "'", peek().position);
        seq.slot_sorts = slot_sorts_;
        return seq;
    }

    std::vector<std::size_t> slot_positions() const { return slot_positions_; }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }

    const Token& expect(Tok kind, const char* message)
    {
        if (peek().kind != kind)
            throw SyntaxError(message, peek().position);
        return tokens_[pos_++];
    }

    std::size_t new_slot(const Binder& b)
    {
        if (!b.sort.empty() && !sig_.has_sort(b.sort))
            throw SortError("undeclared sort " + b.sort + " at " + std::to_string(b.position));
        slot_sorts_.push_back(b.sort);
        slot_positions_.push_back(b.position);
        return slot_sorts_.size() - 1;
    }

    std::vector<Binder> binders()
    {
        std::vector<Binder> out;
        for (;;) {
            const Token& n = expect(Tok::name, "expected variable name");
            Binder b{n.text, "", n.position};
            if (peek().kind == Tok::colon) {
                ++pos_;
                b.sort = expect(Tok::name, "expected sort name").text;
            }
            out.push_back(b);
            if (peek().kind != Tok::comma)
                return out;
            ++pos_;
        }
    }

    Formula formula()
    {
        const std::size_t start = peek().position;
        std::vector<Formula> parts;
        parts.push_back(part());
        while (peek().kind == Tok::conj) {
            ++pos_;
            parts.push_back(part());
        }
        if (parts.size() == 1)
            return std::move(parts.front());
        Formula f;
        f.kind = Formula::Kind::conjunction;
        f.parts = std::move(parts);
        f.position = start;
        return f;
    }

    Formula exists_body(std::vector<Binder> bs, std::size_t position)
    {
        Formula f;
        f.kind = Formula::Kind::exists;
        f.position = position;
        const std::size_t saved = scope_.size();
        for (const Binder& b : bs) {
            const std::size_t slot = new_slot(b);
            f.slots.push_back(slot);
            scope_.emplace_back(b.name, slot);
        }
        f.binders = std::move(bs);
        f.parts.push_back(formula());
        scope_.resize(saved);
        return f;
    }

    Formula part()
    {
        const Token& t = peek();
        if (t.kind == Tok::top) {
            ++pos_;
            Formula f;
            f.position = t.position;
            return f;
        }
        if (t.kind == Tok::exists) {
            ++pos_;
            std::vector<Binder> bs = binders();
            expect(Tok::dot, "expected '.' after quantified variables");
            return exists_body(std::move(bs), t.position);
        }
        if (t.kind == Tok::lparen && peek(1).kind == Tok::exists) {
            pos_ += 2;
            std::vector<Binder> bs = binders();
            expect(Tok::rparen, "expected ')' after quantified variables");
            return exists_body(std::move(bs), t.position);
        }
        if (t.kind == Tok::lparen) {
            // an equation whose left side is parenthesized, or a parenthesized formula
            const std::size_t saved = pos_;
            try {
                return equation();
            } catch (const SyntaxError&) {
                pos_ = saved;
            }
            ++pos_;
            Formula inner = formula();
            expect(Tok::rparen, "expected ')'");
            return inner;
        }
        return equation();
    }

    Formula equation()
    {
        Formula f;
        f.kind = Formula::Kind::equation;
        f.position = peek().position;
        f.terms.push_back(term());
        expect(Tok::equals, "expected '='");
        f.terms.push_back(term());
        return f;
    }

    Term term()
    {
        const std::size_t start = peek().position;
        std::vector<Term> summands;
        summands.push_back(atom());
        while (peek().kind == Tok::plus) {
            ++pos_;
            summands.push_back(atom());
        }
        if (summands.size() == 1)
            return std::move(summands.front());
        Term t;
        t.kind = Term::Kind::sum;
        t.args = std::move(summands);
        t.position = start;
        return t;
    }

    Term atom()
    {
        const Token& t = peek();
        Term out;
        out.position = t.position;
        if (t.kind == Tok::star || t.kind == Tok::zero) {
            ++pos_;
            out.kind = Term::Kind::zero;
            return out;
        }
        if (t.kind == Tok::lparen) {
            ++pos_;
            Term inner = term();
            expect(Tok::rparen, "expected ')'");
            return inner;
        }
        if (t.kind != Tok::name)
            throw SyntaxError("expected a term", t.position);
        ++pos_;
        if (peek().kind == Tok::lparen) {
            if (!sig_.symbol(t.text))
                throw UnboundSymbol("function symbol " + t.text + " at " + std::to_string(t.position));
            ++pos_;
            out.kind = Term::Kind::apply;
            out.name = t.text;
            out.args.push_back(term());
            expect(Tok::rparen, "expected ')'");
            return out;
        }
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
            if (it->first == t.text) {
                out.kind = Term::Kind::variable;
                out.name = t.text;
                out.slot = it->second;
                return out;
            }
        }
        throw SortError("unbound variable " + t.text + " at " + std::to_string(t.position));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Signature& sig_;
    std::vector<std::pair<std::string, std::size_t>> scope_;
    std::vector<std::string> slot_sorts_;
    std::vector<std::size_t> slot_positions_;
};

// ---------------------------------------------------------------------------
// sort inference

class SortChecker
{
public:
    SortChecker(const Signature& sig, std::vector<std::string>& slots) : sig_(sig), slots_(slots) {}

    bool changed = false;

    void formula(Formula& f)
    {
        switch (f.kind) {
        case Formula::Kind::truth:
            return;
        case Formula::Kind::equation: {
            const std::string a = term(f.terms[0], "");
            const std::string b = term(f.terms[1], a);
            if (a.empty() && !b.empty())
                term(f.terms[0], b);
            return;
        }
        case Formula::Kind::conjunction:
        case Formula::Kind::exists:
            for (Formula& p : f.parts)
                formula(p);
            return;
        }
    }

    void require(const Formula& f) const
    {
        for (const Term& t : f.terms)
            require(t);
        for (const Formula& p : f.parts)
            require(p);
    }

    void require(const Term& t) const
    {
        if (t.kind == Term::Kind::variable ? slots_[t.slot].empty() : t.sort.empty())
            throw SortError("cannot determine the sort of " + (t.name.empty() ? std::string("*") : t.name) + " at " +
                            std::to_string(t.position));
        for (const Term& a : t.args)
            require(a);
    }

private:
    std::string unify(const std::string& have, const std::string& expected, const Term& t)
    {
        if (!have.empty() && !expected.empty() && have != expected)
            throw SortError("expected sort " + expected + " but found " + have + " at " + std::to_string(t.position));
        return have.empty() ? expected : have;
    }

    std::string term(Term& t, const std::string& expected)
    {
        switch (t.kind) {
        case Term::Kind::variable: {
            std::string& s = slots_[t.slot];
            const std::string r = unify(s, expected, t);
            if (s != r) {
                s = r;
                changed = true;
            }
            t.sort = s;
            return s;
        }
        case Term::Kind::zero: {
            const std::string r = unify(t.sort, expected, t);
            if (t.sort != r) {
                t.sort = r;
                changed = true;
            }
            return t.sort;
        }
        case Term::Kind::apply: {
            const SymbolType* type = sig_.symbol(t.name);
            if (!type)
                throw UnboundSymbol("function symbol " + t.name);
            term(t.args[0], type->source);
            t.sort = unify(type->target, expected, t);
            return t.sort;
        }
        case Term::Kind::sum: {
            std::string s = unify(t.sort, expected, t);
            for (Term& a : t.args)
                s = unify(term(a, s), s, a);
            for (Term& a : t.args)
                term(a, s);
            if (t.sort != s) {
                t.sort = s;
                changed = true;
            }
            return s;
        }
        }
        return {};
    }

    const Signature& sig_;
    std::vector<std::string>& slots_;
};

// ---------------------------------------------------------------------------
// printing

void print_term(std::ostream& os, const Term& t, bool nested)
{
    switch (t.kind) {
    case Term::Kind::variable:
        os << t.name;
        return;
    case Term::Kind::zero:
        os << '*';
        return;
    case Term::Kind::apply:
        os << t.name << '(';
        print_term(os, t.args[0], false);
        os << ')';
        return;
    case Term::Kind::sum:
        if (nested)
            os << '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i)
                os << " + ";
            print_term(os, t.args[i], true);
        }
        if (nested)
            os << ')';
        return;
    }
}

void print_binders(std::ostream& os, const std::vector<Binder>& bs, const std::vector<std::size_t>& slots,
                   const std::vector<std::string>& sorts)
{
    for (std::size_t i = 0; i < bs.size(); ++i)
        os << (i ? ", " : "") << bs[i].name << ':' << sorts[slots[i]];
}

void print_formula(std::ostream& os, const Formula& f, const std::vector<std::string>& sorts, bool closed)
{
    switch (f.kind) {
    case Formula::Kind::truth:
        os << top_symbol;
        return;
    case Formula::Kind::equation:
        print_term(os, f.terms[0], false);
        os << " = ";
        print_term(os, f.terms[1], false);
        return;
    case Formula::Kind::conjunction:
        if (closed)
            os << '(';
        for (std::size_t i = 0; i < f.parts.size(); ++i) {
            if (i)
                os << ' ' << conj_symbol << ' ';
            print_formula(os, f.parts[i], sorts, true);
        }
        if (closed)
            os << ')';
        return;
    case Formula::Kind::exists:
        if (closed)
            os << '(';
        os << '(' << exists_symbol;
        print_binders(os, f.binders, f.slots, sorts);
        os << ") ";
        print_formula(os, f.parts[0], sorts, false);
        if (closed)
            os << ')';
        return;
    }
}

} // namespace

std::string RegularSequent::to_string() const
{
    std::ostringstream os;
    os << top_symbol << ' ' << turnstile_symbol << "_{";
    print_binders(os, context, context_slots, slot_sorts);
    os << "} ";
    print_formula(os, antecedent, slot_sorts, false);
    os << ' ' << arrow_symbol << ' ';
    print_formula(os, consequent, slot_sorts, false);
    return os.str();
}

RegularSequent parse_sequent(const std::string& text, const Signature& signature)
{
    Parser parser(text, signature);
    RegularSequent seq = parser.sequent();
    SortChecker checker(signature, seq.slot_sorts);
    do {
        checker.changed = false;
        checker.formula(seq.antecedent);
        checker.formula(seq.consequent);
    } while (checker.changed);
    const std::vector<std::size_t> positions = parser.slot_positions();
    for (std::size_t s = 0; s < seq.slot_sorts.size(); ++s)
        if (seq.slot_sorts[s].empty())
            throw SortError("cannot determine the sort of the variable at " + std::to_string(positions[s]));
    checker.require(seq.antecedent);
    checker.require(seq.consequent);
    return seq;
}

// ---------------------------------------------------------------------------
// finite models

void FiniteModel::add_sort(const std::string& name, const FgAbGroup& carrier)
{
    if (!carrier.is_finite())
        throw SortError("sort " + name + " needs a finite carrier, got " + carrier.describe());
    signature_.add_sort(name);
    carriers_.insert_or_assign(name, carrier);
}

void FiniteModel::add_symbol(const std::string& name, const GroupHom& map, const std::string& source,
                             const std::string& target)
{
    signature_.add_symbol(name, source, target);
    if (!map.source().same_presentation(carrier(source)) || !map.target().same_presentation(carrier(target)))
        throw SortError("symbol " + name + " does not run from " + source + " to " + target);
    functions_.insert_or_assign(name, map);
}

const FgAbGroup& FiniteModel::carrier(const std::string& sort) const
{
    const auto it = carriers_.find(sort);
    if (it == carriers_.end())
        throw UnboundSymbol("no carrier for sort " + sort);
    return it->second;
}

const GroupHom& FiniteModel::function(const std::string& symbol) const
{
    const auto it = functions_.find(symbol);
    if (it == functions_.end())
        throw UnboundSymbol("no interpretation for symbol " + symbol);
    return it->second;
}

namespace {

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b, std::uint64_t limit, const std::string& what)
{
    if (b != 0 && a > limit / b)
        throw SearchTooLarge(what + " exceeds " + std::to_string(limit) + " assignments");
    return a * b;
}

/// Elements of a finite group indexed in mixed radix over its normal orders.
struct Carrier
{
    std::vector<std::uint64_t> orders;
    std::uint64_t size = 1;

    Carrier(const FgAbGroup& g, std::uint64_t limit, const std::string& name)
    {
        for (const Integer& d : g.normal_orders()) {
            if (!d.fits_ulong_p())
                throw SearchTooLarge("carrier of " + name + " is too large");
            orders.push_back(d.get_ui());
            size = checked_product(size, orders.back(), limit, "carrier of " + name);
        }
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t out = 0, stride = 1;
        for (const std::uint64_t d : orders) {
            out += ((a % d + b % d) % d) * stride;
            a /= d;
            b /= d;
            stride *= d;
        }
        return out;
    }

    IntVector decode(std::uint64_t x) const
    {
        IntVector v(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            v[i] = Integer(static_cast<unsigned long>(x % orders[i]));
            x /= orders[i];
        }
        return v;
    }

    std::uint64_t encode(const IntVector& v) const
    {
        std::uint64_t out = 0, stride = 1;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            out += v[i].get_ui() * stride;
            stride *= orders[i];
        }
        return out;
    }
};

class Evaluator
{
public:
    Evaluator(const RegularSequent& seq, const FiniteModel& m, std::uint64_t limit)
        : seq_(seq), model_(m), limit_(limit), env_(seq.slot_sorts.size(), 0)
    {
    }

    bool run()
    {
        return for_all(seq_.context_slots, [&] { return !formula(seq_.antecedent) || formula(seq_.consequent); });
    }

private:
    const Carrier& carrier(const std::string& sort)
    {
        auto it = carriers_.find(sort);
        if (it == carriers_.end())
            it = carriers_.emplace(sort, Carrier(model_.carrier(sort), limit_, sort)).first;
        return it->second;
    }

    const std::vector<std::uint64_t>& table(const std::string& symbol)
    {
        auto it = tables_.find(symbol);
        if (it != tables_.end())
            return it->second;
        const GroupHom& f = model_.function(symbol);
        const SymbolType& type = *model_.signature().symbol(symbol);
        const Carrier& src = carrier(type.source);
        const Carrier& dst = carrier(type.target);
        std::vector<std::uint64_t> values(src.size);
        for (std::uint64_t x = 0; x < src.size; ++x)
            values[x] = dst.encode(f.target().to_normal(f.apply(f.source().from_normal(src.decode(x)))));
        return tables_.emplace(symbol, std::move(values)).first->second;
    }

    std::uint64_t term(const Term& t)
    {
        switch (t.kind) {
        case Term::Kind::variable:
            return env_[t.slot];
        case Term::Kind::zero:
            return 0;
        case Term::Kind::apply:
            return table(t.name)[term(t.args[0])];
        case Term::Kind::sum: {
            const Carrier& c = carrier(t.sort);
            std::uint64_t acc = 0;
            for (const Term& a : t.args)
                acc = c.add(acc, term(a));
            return acc;
        }
        }
        return 0;
    }

    bool formula(const Formula& f)
    {
        switch (f.kind) {
        case Formula::Kind::truth:
            return true;
        case Formula::Kind::equation:
            return term(f.terms[0]) == term(f.terms[1]);
        case Formula::Kind::conjunction:
            for (const Formula& p : f.parts)
                if (!formula(p))
                    return false;
            return true;
        case Formula::Kind::exists:
            return !for_all(f.slots, [&] { return !formula(f.parts[0]); });
        }
        return false;
    }

    /// Whether body() holds for every assignment of the slots.
    bool for_all(const std::vector<std::size_t>& slots, const std::function<bool()>& body)
    {
        std::uint64_t total = 1;
        std::vector<std::uint64_t> sizes;
        for (const std::size_t s : slots) {
            sizes.push_back(carrier(seq_.slot_sorts[s]).size);
            total = checked_product(total, sizes.back(), limit_, "quantifier block");
        }
        for (std::uint64_t k = 0; k < total; ++k) {
            std::uint64_t rest = k;
            for (std::size_t i = 0; i < slots.size(); ++i) {
                env_[slots[i]] = rest % sizes[i];
                rest /= sizes[i];
            }
            if (++steps_ > limit_)
                throw SearchTooLarge("search visited more than " + std::to_string(limit_) + " assignments");
            if (!body())
                return false;
        }
        return true;
    }

    const RegularSequent& seq_;
    const FiniteModel& model_;
    std::uint64_t limit_;
    std::uint64_t steps_ = 0;
    std::vector<std::uint64_t> env_;
    std::map<std::string, Carrier> carriers_;
    std::map<std::string, std::vector<std::uint64_t>> tables_;
};

} // namespace

bool evaluate(const RegularSequent& seq, const FiniteModel& m, std::uint64_t search_limit)
{
    return Evaluator(seq, m, search_limit).run();
}

bool evaluate(const std::string& text, const FiniteModel& m, std::uint64_t search_limit)
{
    return evaluate(parse_sequent(text, m.signature()), m, search_limit);
}

// ---------------------------------------------------------------------------
// sequent files

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_plain_name(const std::string& s)
{
    if (s.empty() || !is_name_start(s, 0))
        return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!is_name_char(s, i))
            return false;
    return true;
}

} // namespace

SequentFile parse_sequent_file(const std::string& text)
{
    SequentFile file;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string::npos)
            end = text.size();
        const std::string raw = text.substr(offset, end - offset);
        const std::string line = trim(raw);
        const std::size_t line_offset = offset + std::min(raw.find_first_not_of(" \t\r"), raw.size());
        offset = end + 1;
        if (line.empty() || line[0] == '#')
            continue;

        const bool is_sort = line.rfind("sort ", 0) == 0;
        const bool is_symbol = line.rfind("symbol ", 0) == 0;
        if (!is_sort && !is_symbol) {
            file.sequents.push_back(line);
            file.sequent_offsets.push_back(line_offset);
            continue;
        }
        if (!file.sequents.empty())
            throw SyntaxError("binding after the first sequent", line_offset);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SyntaxError("binding without '='", line_offset);
        const std::string component = trim(line.substr(eq + 1));
        const std::string head = trim(line.substr(is_sort ? 5 : 7, eq - (is_sort ? 5 : 7)));
        if (component.empty())
            throw SyntaxError("binding without a component", line_offset + eq);
        if (is_sort) {
            if (!is_plain_name(head))
                throw SyntaxError("bad sort name '" + head + "'", line_offset);
            file.sorts.push_back({head, component});
            continue;
        }
        const auto colon = head.find(':');
        const auto arrow = head.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
            throw SyntaxError("symbol binding needs 'name : A -> B'", line_offset);
        SequentFile::SymbolBinding b{trim(head.substr(0, colon)), trim(head.substr(colon + 1, arrow - colon - 1)),
                                     trim(head.substr(arrow + 2)), component};
        if (!is_plain_name(b.name) || !is_plain_name(b.source) || !is_plain_name(b.target))
            throw SyntaxError("bad symbol binding", line_offset);
        file.symbols.push_back(std::move(b));
    }
    return file;
}

FiniteModel bind(const SequentFile& file, const FiniteModel& components)
{
    FiniteModel m;
    for (const auto& s : file.sorts)
        m.add_sort(s.name, components.carrier(s.component));
    for (const auto& s : file.symbols)
        m.add_symbol(s.name, components.function(s.component), s.source, s.target);
    return m;
}

std::vector<bool> evaluate_file(const SequentFile& file, const FiniteModel& components, std::uint64_t search_limit)
{
    const FiniteModel m = bind(file, components);
    std::vector<bool> out;
    for (std::size_t i = 0; i < file.sequents.size(); ++i) {
        RegularSequent seq;
        try {
            seq = parse_sequent(file.sequents[i], m.signature());
        } catch (const SyntaxError& e) {
            throw SyntaxError(e.what(), file.sequent_offsets[i] + e.position());
        }
        out.push_back(evaluate(seq, m, search_limit));
    }
    return out;
}

// ---------------------------------------------------------------------------
// cohomology models

const char* const exactness_kernel_sequent = "⊤ ⊢_y f(y) = * → (∃x) g(x) = y";
const char* const exactness_complex_sequent = "⊤ ⊢_x f(g(x)) = *";
const char* const excision_injectivity_sequent = "⊤ ⊢_x exc(x) = * → x = *";
const char* const excision_surjectivity_sequent = "⊤ ⊢_{y:piece} ⊤ → (∃x) exc(x) = y";

FiniteModel exactness_model(const GroupHom& f, const GroupHom& g)
{
    if (!g.target().same_presentation(f.source()))
        throw CompositionMismatch("exactness_model: g does not land in the source of f");
    FiniteModel m;
    m.add_sort("A", g.source());
    m.add_sort("B", g.target());
    m.add_sort("C", f.target());
    m.add_symbol("g", g, "A", "B");
    m.add_symbol("f", f, "B", "C");
    return m;
}

bool exactness_sequents(const GroupHom& f, const GroupHom& g, std::uint64_t search_limit)
{
    const FiniteModel m = exactness_model(f, g);
    return evaluate(exactness_kernel_sequent, m, search_limit) && evaluate(exactness_complex_sequent, m, search_limit);
}

std::vector<ExactnessInstance> les_instances(const Triple& t, const Integer& modulus, int lo, int hi)
{
    const TripleSequence s(t, modulus);
    std::vector<ExactnessInstance> out;
    for (int n = lo; n <= hi; ++n) {
        const std::string d = std::to_string(n);
        out.push_back({"H^" + d + "(X,Z)", s.to_whole(n), s.to_inner(n)});
        out.push_back({"H^" + d + "(Y,Z)", s.to_inner(n), s.connecting(n)});
        out.push_back({"H^" + std::to_string(n + 1) + "(X,Y)", s.connecting(n), s.to_whole(n + 1)});
    }
    return out;
}

ExactnessInstance corrupt(const ExactnessInstance& e)
{
    return {e.label + " corrupted", e.g, GroupHom::zero(e.f.source(), e.f.target())};
}

namespace {

/// f followed by the projection killing the first normal generator of its target.
GroupHom drop_first_generator(const GroupHom& f)
{
    if (f.target().normal_dimension() == 0)
        return f;
    IntMatrix n = f.normal_matrix();
    for (std::size_t j = 0; j < n.cols(); ++j)
        n(0, j) = 0;
    return GroupHom(f.source(), f.target(), f.target().normal_lift() * n * f.source().normal_projection());
}

} // namespace

FiniteModel excision_model(const Cover& c, int n, const Integer& modulus, bool corrupted)
{
    const SubcomplexPair xz(c.x(), c.z());
    const SubcomplexPair yw(c.y(), c.overlap());
    const PairCohomology hxz(xz, modulus), hyw(yw, modulus);
    GroupHom exc = pullback(PairMap::inclusion(yw, xz), n, hxz, hyw);
    if (corrupted)
        exc = drop_first_generator(exc);
    FiniteModel m;
    m.add_sort("whole", exc.source());
    m.add_sort("piece", exc.target());
    m.add_symbol("exc", exc, "whole", "piece");
    return m;
}

ExcisionVerdict excision_sequents(const Cover& c, int n, const Integer& modulus, bool corrupted,
                                  std::uint64_t search_limit)
{
    const FiniteModel m = excision_model(c, n, modulus, corrupted);
    const GroupHom& exc = m.function("exc");
    ExcisionVerdict v;
    v.injective = evaluate(excision_injectivity_sequent, m, search_limit);
    v.surjective = evaluate(excision_surjectivity_sequent, m, search_limit);
    v.matrix_injective = exc.is_injective();
    v.matrix_surjective = exc.is_surjective();
    return v;
}

KunnethSentence strong_kunneth_model(const SubcomplexPair& p, const SubcomplexPair& q, int n, const Integer& modulus)
{
    if (n < 0)
        throw std::invalid_argument("strong_kunneth_model: negative degree");
    const PairCohomology hp(p, modulus), hq(q, modulus), hpq(pair_product(p, q), modulus);
    KunnethSentence out;
    out.model.add_sort("h", hpq.group(n));
    std::optional<GroupHom> sum;
    std::string binders, summands;
    for (int i = 0; i <= n; ++i) {
        const ExternalProduct e = cross_product(hp, hq, hpq, i, n - i);
        const std::string k = std::to_string(i);
        out.model.add_sort("t" + k, e.source.product);
        out.model.add_symbol("k" + k, e.map, "t" + k, "h");
        sum = sum ? copairing(*sum, e.map) : e.map;
        binders += (i ? ", x" : "x") + k + ":t" + k;
        summands += (i ? " + k" : "k") + k + "(x" + k + ")";
    }
    out.sequent = "⊤ ⊢_{y:h} y = y → (∃" + binders + ") " + summands + " = y";
    out.matrix_surjective = sum->is_surjective();
    return out;
}

KunnethVerdict strong_kunneth_sequent(const SubcomplexPair& p, const SubcomplexPair& q, int n, const Integer& modulus,
                                      std::uint64_t search_limit)
{
    const KunnethSentence s = strong_kunneth_model(p, q, n, modulus);
    return {evaluate(s.sequent, s.model, search_limit), s.matrix_surjective};
}

} // namespace cubenori
