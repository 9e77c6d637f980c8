#ifndef GRMOD_PARSER_HPP
#define GRMOD_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grmod/bracket.hpp"

namespace grmod {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                             ": " + msg),
          line(l),
          column(c) {}
};

// Field-independent syntax tree of a .gpa file.  Polynomial expressions stay
// symbolic until materialized over a concrete coefficient field.
namespace gpa {

struct Expr {
    enum class Kind { number, symbol, add, sub, neg, mul, pow };
    Kind kind;
    long long number = 0;
    std::string symbol;           // variable or basis symbol e_i_j
    std::vector<Expr> args;
    unsigned exponent = 0;
    int line = 0, column = 0;
};

struct ElementDecl {
    std::string name;
    std::string module;
    Expr expr;
};

struct Document {
    bool prime = false;
    std::uint64_t p = 0;
    std::vector<std::string> variables;
    std::vector<unsigned> weights;
    std::vector<std::pair<std::string, Expr>> relations;
    std::vector<std::pair<std::string, std::string>> dependents; // (var, relation)
    std::string bracket_module_name;
    long bracket_shift = -1;
    bool has_bracket_module = false;
    std::vector<ElementDecl> elements;
};

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) {}

    struct Token {
        enum class Kind { ident, number, plus, minus, star, caret, lparen, rparen, equals, end };
        Kind kind;
        std::string text;
        long long value = 0;
        int column = 0;
    };

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size() || text_[pos_] == '#')
            return {Token::Kind::end, "", 0, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string digits = text_.substr(start, pos_ - start);
            if (digits.size() > 18)
                throw ParseError(line_, col, "numeric literal too large");
            return {Token::Kind::number, digits, std::stoll(digits), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::ident, text_.substr(start, pos_ - start), 0, col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Kind::plus, "+", 0, col};
            case '-': return {Token::Kind::minus, "-", 0, col};
            case '*': return {Token::Kind::star, "*", 0, col};
            case '^': return {Token::Kind::caret, "^", 0, col};
            case '(': return {Token::Kind::lparen, "(", 0, col};
            case ')': return {Token::Kind::rparen, ")", 0, col};
            case '=': return {Token::Kind::equals, "=", 0, col};
            default:
                throw ParseError(line_, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    const std::string& text_;
    int line_;
    std::size_t pos_ = 0;
};

// expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
// factor := ['-'] atom ['^' number] ; atom := number | ident | '(' expr ')'
class ExprParser {
public:
    ExprParser(Lexer lex, int line) : lex_(std::move(lex)), line_(line) { advance(); }

    Expr parse() {
        Expr e = parse_sum();
        expect_end();
        return e;
    }

private:
    using Token = Lexer::Token;

    void advance() { tok_ = lex_.next(); }

    void expect_end() {
        if (tok_.kind != Token::Kind::end)
            throw ParseError(line_, tok_.column, "unexpected trailing input '" + tok_.text + "'");
    }

    Expr parse_sum() {
        Expr e = parse_term();
        while (tok_.kind == Token::Kind::plus || tok_.kind == Token::Kind::minus) {
            bool sub = tok_.kind == Token::Kind::minus;
            int col = tok_.column;
            advance();
            Expr rhs = parse_term();
            Expr parent;
            parent.kind = sub ? Expr::Kind::sub : Expr::Kind::add;
            parent.line = line_;
            parent.column = col;
            parent.args = {std::move(e), std::move(rhs)};
            e = std::move(parent);
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_factor();
        while (tok_.kind == Token::Kind::star) {
            int col = tok_.column;
            advance();
            Expr rhs = parse_factor();
            Expr parent;
            parent.kind = Expr::Kind::mul;
            parent.line = line_;
            parent.column = col;
            parent.args = {std::move(e), std::move(rhs)};
            e = std::move(parent);
        }
        // implicit multiplication is disallowed: a second atom here is a
        // syntax error surfaced by the caller's expect_end / operator checks
        if (tok_.kind == Token::Kind::ident || tok_.kind == Token::Kind::number ||
            tok_.kind == Token::Kind::lparen)
            throw ParseError(line_, tok_.column, "missing operator before '" + tok_.text + "'");
        return e;
    }

    Expr parse_factor() {
        if (tok_.kind == Token::Kind::minus) {
            int col = tok_.column;
            advance();
            Expr inner = parse_factor();
            Expr e;
            e.kind = Expr::Kind::neg;
            e.line = line_;
            e.column = col;
            e.args = {std::move(inner)};
            return e;
        }
        Expr e = parse_atom();
        if (tok_.kind == Token::Kind::caret) {
            int col = tok_.column;
            advance();
            if (tok_.kind != Token::Kind::number)
                throw ParseError(line_, tok_.column, "expected integer exponent after '^'");
            if (tok_.value < 0 || tok_.value > 64)
                throw ParseError(line_, tok_.column, "exponent out of range");
            Expr p;
            p.kind = Expr::Kind::pow;
            p.line = line_;
            p.column = col;
            p.exponent = static_cast<unsigned>(tok_.value);
            p.args = {std::move(e)};
            advance();
            e = std::move(p);
        }
        return e;
    }

    Expr parse_atom() {
        if (tok_.kind == Token::Kind::number) {
            Expr e;
            e.kind = Expr::Kind::number;
            e.number = tok_.value;
            e.line = line_;
            e.column = tok_.column;
            advance();
            return e;
        }
        if (tok_.kind == Token::Kind::ident) {
            Expr e;
            e.kind = Expr::Kind::symbol;
            e.symbol = tok_.text;
            e.line = line_;
            e.column = tok_.column;
            advance();
            return e;
        }
        if (tok_.kind == Token::Kind::lparen) {
            advance();
            Expr e = parse_sum();
            if (tok_.kind != Token::Kind::rparen)
                throw ParseError(line_, tok_.column, "expected ')'");
            advance();
            return e;
        }
        throw ParseError(line_, tok_.column, "expected a number, name, or '('");
    }

    Lexer lex_;
    int line_;
    Token tok_;
};

} // namespace gpa

// A parsed and validated input file, still field-independent; materialize<K>
// instantiates it over a concrete coefficient type.
struct PresentationFile {
    gpa::Document doc;

    CoefficientField field() const {
        return doc.prime ? CoefficientField::prime_field(doc.p) : CoefficientField::rationals();
    }
};

namespace gpa {

inline std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string word;
    while (ss >> word) {
        if (word[0] == '#') break;
        out.push_back(word);
    }
    return out;
}

} // namespace gpa

inline PresentationFile parse_input(const std::string& text) {
    gpa::Document doc;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    bool field_seen = false;
    while (std::getline(stream, line)) {
        ++lineno;
        std::string code = line.substr(0, line.find('#'));
        auto words = gpa::split_words(code);
        if (words.empty()) continue;
        const std::string& head = words[0];
        if (head == "field") {
            if (field_seen) throw ParseError(lineno, 1, "duplicate field declaration");
            field_seen = true;
            if (words.size() == 2 && words[1] == "QQ") {
                doc.prime = false;
            } else if (words.size() == 3 && words[1] == "Fp") {
                doc.prime = true;
                try {
                    doc.p = std::stoull(words[2]);
                } catch (const std::exception&) {
                    throw ParseError(lineno, 1, "invalid prime '" + words[2] + "'");
                }
            } else {
                throw ParseError(lineno, 1, "expected 'field QQ' or 'field Fp <prime>'");
            }
        } else if (head == "ring") {
            if (!doc.variables.empty()) throw ParseError(lineno, 1, "duplicate ring declaration");
            std::size_t k = 1;
            while (k < words.size() && words[k] != "weights") {
                for (const auto& v : doc.variables)
                    if (v == words[k]) throw ParseError(lineno, 1, "duplicate variable");
                doc.variables.push_back(words[k]);
                ++k;
            }
            if (k >= words.size()) throw ParseError(lineno, 1, "expected 'weights'");
            ++k;
            for (; k < words.size(); ++k) {
                long w;
                try {
                    w = std::stol(words[k]);
                } catch (const std::exception&) {
                    throw ParseError(lineno, 1, "invalid weight '" + words[k] + "'");
                }
                if (w <= 0) throw ParseError(lineno, 1, "weights must be positive");
                doc.weights.push_back(static_cast<unsigned>(w));
            }
            if (doc.variables.empty()) throw ParseError(lineno, 1, "ring needs variables");
            if (doc.variables.size() != doc.weights.size())
                throw ParseError(lineno, 1, "one weight per variable required");
        } else if (head == "relation") {
            auto eq = code.find('=');
            if (words.size() < 2 || eq == std::string::npos)
                throw ParseError(lineno, 1, "expected 'relation <name> = <expr>'");
            for (const auto& [n, e] : doc.relations)
                if (n == words[1]) throw ParseError(lineno, 1, "duplicate relation name");
            std::string rhs = code.substr(eq + 1);
            gpa::ExprParser parser(gpa::Lexer(rhs, lineno), lineno);
            doc.relations.emplace_back(words[1], parser.parse());
        } else if (head == "dependent") {
            if (words.size() != 4 || words[2] != "via")
                throw ParseError(lineno, 1, "expected 'dependent <var> via <relation>'");
            doc.dependents.emplace_back(words[1], words[3]);
        } else if (head == "bracket-module") {
            if (words.size() != 4 || words[2] != "shift")
                throw ParseError(lineno, 1, "expected 'bracket-module <name> shift <int>'");
            if (doc.has_bracket_module)
                throw ParseError(lineno, 1, "duplicate bracket-module declaration");
            doc.has_bracket_module = true;
            doc.bracket_module_name = words[1];
            try {
                doc.bracket_shift = std::stol(words[3]);
            } catch (const std::exception&) {
                throw ParseError(lineno, 1, "invalid shift '" + words[3] + "'");
            }
        } else if (head == "element") {
            auto eq = code.find('=');
            if (words.size() < 4 || words[2] != "in" || eq == std::string::npos)
                throw ParseError(lineno, 1, "expected 'element <name> in <module> = <expr>'");
            for (const auto& e : doc.elements)
                if (e.name == words[1]) throw ParseError(lineno, 1, "duplicate element name");
            std::string rhs = code.substr(eq + 1);
            gpa::ExprParser parser(gpa::Lexer(rhs, lineno), lineno);
            doc.elements.push_back({words[1], words[3], parser.parse()});
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + head + "'");
        }
    }
    if (!field_seen) throw ParseError(lineno + 1, 1, "missing field declaration");
    if (doc.variables.empty()) throw ParseError(lineno + 1, 1, "missing ring declaration");
    for (const auto& [var, rel] : doc.dependents) {
        bool var_ok = false, rel_ok = false;
        for (const auto& v : doc.variables) var_ok = var_ok || v == var;
        for (const auto& [n, e] : doc.relations) rel_ok = rel_ok || n == rel;
        if (!var_ok) throw ParseError(lineno + 1, 1, "unknown identifier '" + var + "'");
        if (!rel_ok) throw ParseError(lineno + 1, 1, "unknown identifier '" + rel + "'");
    }
    return PresentationFile{std::move(doc)};
}

// Instantiated contents of a presentation file over one coefficient type.
template <class K>
struct MaterializedFile {
    AlgebraPresentation<K> algebra;
    std::optional<BracketModulePresentation<K>> bracket;
    std::map<std::string, ModuleElement<K>> elements;
};

namespace gpa {

template <class K>
Polynomial<K> eval_poly(const Expr& e, const RingPtr& ring) {
    switch (e.kind) {
        case Expr::Kind::number:
            return Polynomial<K>::constant(ring, static_cast<long>(e.number));
        case Expr::Kind::symbol: {
            for (std::size_t v = 0; v < ring->nvars(); ++v)
                if (ring->variable_names[v] == e.symbol)
                    return Polynomial<K>::variable(ring, v);
            throw ParseError(e.line, e.column, "unknown identifier '" + e.symbol + "'");
        }
        case Expr::Kind::add:
            return eval_poly<K>(e.args[0], ring) + eval_poly<K>(e.args[1], ring);
        case Expr::Kind::sub:
            return eval_poly<K>(e.args[0], ring) - eval_poly<K>(e.args[1], ring);
        case Expr::Kind::neg:
            return eval_poly<K>(e.args[0], ring).scaled(-1L);
        case Expr::Kind::mul:
            return eval_poly<K>(e.args[0], ring) * eval_poly<K>(e.args[1], ring);
        case Expr::Kind::pow:
            return eval_poly<K>(e.args[0], ring).pow(e.exponent);
    }
    throw std::logic_error("eval_poly: bad expression kind");
}

// basis symbols e_<i>_<j> with 1-based indices i<j
inline std::optional<std::pair<std::size_t, std::size_t>> basis_symbol(const std::string& s) {
    if (s.size() < 5 || s[0] != 'e' || s[1] != '_') return std::nullopt;
    auto second = s.find('_', 2);
    if (second == std::string::npos || second + 1 >= s.size()) return std::nullopt;
    std::string a = s.substr(2, second - 2), b = s.substr(second + 1);
    for (char c : a)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    for (char c : b)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::make_pair(static_cast<std::size_t>(std::stoul(a)),
                          static_cast<std::size_t>(std::stoul(b)));
}

template <class K>
ModuleElement<K> eval_element(const Expr& e, const FreeModulePtr& F, std::size_t m) {
    switch (e.kind) {
        case Expr::Kind::symbol: {
            auto ij = basis_symbol(e.symbol);
            if (!ij) throw ParseError(e.line, e.column, "unknown identifier '" + e.symbol + "'");
            auto [i, j] = *ij;
            if (i < 1 || j <= i || j > m)
                throw ParseError(e.line, e.column, "basis indices out of range");
            return ModuleElement<K>::basis_vector(F, bracket_slot(i - 1, j - 1, m));
        }
        case Expr::Kind::add:
            return eval_element<K>(e.args[0], F, m) + eval_element<K>(e.args[1], F, m);
        case Expr::Kind::sub:
            return eval_element<K>(e.args[0], F, m) - eval_element<K>(e.args[1], F, m);
        case Expr::Kind::neg:
            return eval_element<K>(e.args[0], F, m).scaled(FieldOps<K>::from_int(-1, F->ring->field));
        case Expr::Kind::mul: {
            // exactly one side may involve basis symbols
            auto involves_basis = [](const Expr& x, auto&& self) -> bool {
                if (x.kind == Expr::Kind::symbol) return basis_symbol(x.symbol).has_value();
                for (const auto& a : x.args)
                    if (self(a, self)) return true;
                return false;
            };
            bool lb = involves_basis(e.args[0], involves_basis);
            bool rb = involves_basis(e.args[1], involves_basis);
            if (lb == rb)
                throw ParseError(e.line, e.column,
                                 "products must be scalar * module element");
            const Expr& scalar = lb ? e.args[1] : e.args[0];
            const Expr& vector = lb ? e.args[0] : e.args[1];
            return eval_poly<K>(scalar, F->ring) * eval_element<K>(vector, F, m);
        }
        default:
            throw ParseError(e.line, e.column, "expression is not a module element");
    }
}

} // namespace gpa

template <class K>
MaterializedFile<K> materialize(const PresentationFile& file) {
    const gpa::Document& doc = file.doc;
    RingPtr ring = make_ring(doc.variables, doc.weights, file.field());

    MaterializedFile<K> out;
    std::vector<Polynomial<K>> relations;
    std::vector<std::string> names;
    for (const auto& [name, expr] : doc.relations) {
        auto p = gpa::eval_poly<K>(expr, ring);
        if (p.is_zero() || !p.is_isobaric())
            throw ParseError(expr.line, expr.column, "relation not isobaric");
        relations.push_back(std::move(p));
        names.push_back(name);
    }
    std::vector<std::pair<std::size_t, std::size_t>> dependent;
    for (const auto& [var, rel] : doc.dependents) {
        std::size_t vi = 0, ri = 0;
        for (std::size_t v = 0; v < doc.variables.size(); ++v)
            if (doc.variables[v] == var) vi = v;
        for (std::size_t r = 0; r < names.size(); ++r)
            if (names[r] == rel) ri = r;
        dependent.emplace_back(vi, ri);
    }
    out.algebra = AlgebraPresentation<K>{ring, std::move(relations), std::move(names),
                                         std::move(dependent)};
    out.algebra.validate();

    if (doc.has_bracket_module) {
        out.bracket = build_nprime(out.algebra, doc.bracket_shift);
        std::size_t m = ring->nvars();
        for (const auto& el : doc.elements) {
            if (el.module != doc.bracket_module_name)
                throw ParseError(1, 1, "unknown identifier '" + el.module + "'");
            out.elements.emplace(
                el.name, gpa::eval_element<K>(el.expr, out.bracket->presentation.free, m));
        }
    } else if (!doc.elements.empty()) {
        throw ParseError(1, 1, "element declared without a bracket-module");
    }
    return out;
}

// Canonical text form; parse(serialize(x)) reproduces serialize(x) exactly.
template <class K>
std::string serialize(const PresentationFile& file, const MaterializedFile<K>& mat) {
    std::ostringstream os;
    const gpa::Document& doc = file.doc;
    if (doc.prime)
        os << "field Fp " << doc.p << "\n";
    else
        os << "field QQ\n";
    os << "ring";
    for (const auto& v : doc.variables) os << " " << v;
    os << " weights";
    for (unsigned w : doc.weights) os << " " << w;
    os << "\n";
    for (std::size_t r = 0; r < mat.algebra.relations.size(); ++r)
        os << "relation " << mat.algebra.relation_names[r] << " = "
           << mat.algebra.relations[r].str() << "\n";
    for (const auto& [vi, ri] : mat.algebra.dependent)
        os << "dependent " << doc.variables[vi] << " via " << mat.algebra.relation_names[ri]
           << "\n";
    if (doc.has_bracket_module) {
        os << "bracket-module " << doc.bracket_module_name << " shift " << doc.bracket_shift
           << "\n";
        std::size_t m = doc.variables.size();
        for (const auto& el : doc.elements) {
            auto it = mat.elements.find(el.name);
            os << "element " << el.name << " in " << doc.bracket_module_name << " =";
            bool any = false;
            for (std::size_t s = 0; s < mat.bracket->presentation.free->rank; ++s) {
                auto c = it->second.component(s);
                if (c.is_zero()) continue;
                auto [i, j] = bracket_slot_pair(s, m);
                if (any) os << " +";
                os << " (" << c.str() << ") * e_" << (i + 1) << "_" << (j + 1);
                any = true;
            }
            if (!any) os << " 0 * e_1_2";
            os << "\n";
        }
    }
    return os.str();
}

} // namespace grmod

#endif
