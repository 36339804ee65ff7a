#include "nicety/map_io.hpp"

#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace nicety {

namespace {

enum class Tok { newline, ident, natural, plus, minus, star, caret, slash, lparen, rparen,
                 equals, colon, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blanks();
        const int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::end, "", line, col};
        const char c = src_[pos_];
        if (c == '\n') {
            advance();
            return {Tok::newline, "\n", line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                text += src_[pos_];
                advance();
            }
            return {Tok::natural, text, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                text += src_[pos_];
                advance();
            }
            return {Tok::ident, text, line, col};
        }
        advance();
        switch (c) {
        case '+': return {Tok::plus, "+", line, col};
        case '-': return {Tok::minus, "-", line, col};
        case '*': return {Tok::star, "*", line, col};
        case '^': return {Tok::caret, "^", line, col};
        case '/': return {Tok::slash, "/", line, col};
        case '(': return {Tok::lparen, "(", line, col};
        case ')': return {Tok::rparen, ")", line, col};
        case '=': return {Tok::equals, "=", line, col};
        case ':': return {Tok::colon, ":", line, col};
        default:
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blanks() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, const Limits& lim) : lex_(src), lim_(lim) { shift(); }

    ParsedMap run() {
        parse_header();
        std::vector<std::string> targets;
        std::vector<Polynomial> comps;
        skip_newlines();
        while (cur_.kind != Tok::end) {
            expect(Tok::ident, "assignment target");
            targets.push_back(cur_.text);
            shift();
            expect(Tok::equals, "'='");
            shift();
            comps.push_back(parse_expr());
            if (cur_.kind != Tok::newline && cur_.kind != Tok::end)
                throw ParseError(cur_.line, cur_.column,
                                 "unexpected '" + cur_.text + "' after expression");
            skip_newlines();
        }
        if (comps.empty())
            throw ParseError(cur_.line, cur_.column, "map has no assignments");
        return ParsedMap{std::move(names_), std::move(targets),
                         PolyMap(names_size_, std::move(comps))};
    }

private:
    void shift() { cur_ = lex_.next(); }

    void expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError(cur_.line, cur_.column,
                             "expected " + what + ", found '" +
                                 (cur_.kind == Tok::end       ? "end of input"
                                  : cur_.kind == Tok::newline ? "end of line"
                                                              : cur_.text) +
                                 "'");
    }

    void skip_newlines() {
        while (cur_.kind == Tok::newline) shift();
    }

    void parse_header() {
        skip_newlines();
        expect(Tok::ident, "'vars:' header");
        if (cur_.text != "vars")
            throw ParseError(cur_.line, cur_.column, "expected 'vars:' header");
        shift();
        expect(Tok::colon, "':' after 'vars'");
        shift();
        while (cur_.kind == Tok::ident) {
            if (index_.count(cur_.text))
                throw ParseError(cur_.line, cur_.column,
                                 "duplicate variable name '" + cur_.text + "'");
            index_[cur_.text] = names_.size();
            names_.push_back(cur_.text);
            shift();
        }
        if (names_.empty())
            throw ParseError(cur_.line, cur_.column, "header declares no variables");
        if (cur_.kind != Tok::newline && cur_.kind != Tok::end)
            throw ParseError(cur_.line, cur_.column, "unexpected '" + cur_.text + "' in header");
        names_size_ = names_.size();
    }

    Polynomial parse_expr() {
        bool neg = false;
        if (cur_.kind == Tok::minus) {
            neg = true;
            shift();
        }
        Polynomial acc = parse_term();
        if (neg) acc = negate(acc);
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const bool minus = cur_.kind == Tok::minus;
            shift();
            Polynomial t = parse_term();
            acc = minus ? sub(acc, t) : add(acc, t);
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (cur_.kind == Tok::star) {
            shift();
            acc = mul(acc, parse_factor(), lim_);
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (cur_.kind == Tok::caret) {
            shift();
            if (cur_.kind != Tok::natural)
                throw ParseError(cur_.line, cur_.column,
                                 "exponent must be a non-negative integer literal");
            base = pow(base, parse_exponent(), lim_);
            shift();
        }
        return base;
    }

    std::uint32_t parse_exponent() {
        unsigned long long v = 0;
        for (char c : cur_.text) {
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > std::numeric_limits<std::uint32_t>::max())
                throw ParseError(cur_.line, cur_.column, "exponent literal too large");
        }
        return static_cast<std::uint32_t>(v);
    }

    Polynomial parse_base() {
        if (cur_.kind == Tok::natural) {
            mpz_class num(cur_.text, 10);
            shift();
            if (cur_.kind == Tok::slash) {
                shift();
                if (cur_.kind != Tok::natural)
                    throw ParseError(cur_.line, cur_.column,
                                     "denominator must be a positive integer literal");
                mpz_class den(cur_.text, 10);
                if (den == 0)
                    throw ParseError(cur_.line, cur_.column, "zero denominator");
                shift();
                mpq_class q(num, den);
                q.canonicalize();
                return Polynomial::constant(names_size_, Rational(std::move(q)));
            }
            return Polynomial::constant(names_size_, Rational(std::move(num)));
        }
        if (cur_.kind == Tok::ident) {
            auto it = index_.find(cur_.text);
            if (it == index_.end())
                throw ParseError(cur_.line, cur_.column,
                                 "unknown identifier '" + cur_.text + "'");
            shift();
            return Polynomial::variable(names_size_, it->second);
        }
        if (cur_.kind == Tok::lparen) {
            shift();
            Polynomial inner = parse_expr();
            expect(Tok::rparen, "')'");
            shift();
            return inner;
        }
        throw ParseError(cur_.line, cur_.column,
                         "expected a rational literal, identifier or '(' expression ')'");
    }

    Lexer lex_;
    Limits lim_;
    Token cur_{};
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
    std::size_t names_size_ = 0;
};

void render_term(std::ostringstream& os, const Term& t,
                 const std::vector<std::string>& names) {
    const Rational c = t.coef.abs();
    const bool coef_visible = !c.is_one() || t.mono.is_constant();
    bool need_star = false;
    if (coef_visible) {
        os << c.str();
        need_star = true;
    }
    for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
        const auto e = t.mono.exp(v);
        if (e == 0) continue;
        if (need_star) os << '*';
        os << names[v];
        if (e > 1) os << '^' << e;
        need_star = true;
    }
}

} // namespace

ParsedMap parse_map(std::string_view text, const Limits& lim) {
    return Parser(text, lim).run();
}

std::string render_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
    if (p.nvars() != names.size())
        throw DimensionError("render: name count differs from variable count");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const auto terms = p.terms();
    for (std::size_t i = terms.size(); i-- > 0;) {
        const Term& t = terms[i];
        if (i + 1 == terms.size()) {
            if (t.coef.sign() < 0) os << '-';
        } else {
            os << (t.coef.sign() < 0 ? " - " : " + ");
        }
        render_term(os, t, names);
    }
    return os.str();
}

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string render_map(const PolyMap& f, const std::vector<std::string>& names) {
    if (names.size() != f.domain_dim())
        throw DimensionError("render_map: name count differs from domain dimension");
    std::ostringstream os;
    os << "vars:";
    for (const auto& n : names) os << ' ' << n;
    os << '\n';
    for (std::size_t i = 0; i < f.codomain_dim(); ++i)
        os << 'F' << (i + 1) << " = " << render_polynomial(f.component(i), names) << '\n';
    return os.str();
}

RatMatrix parse_matrix(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed matrix JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw DomainError("matrix JSON must be an object with rows, cols and entries");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw DomainError("matrix rows/cols must be positive integers");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0) throw DomainError("matrix rows/cols must be positive");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw DomainError("matrix entries must be an array of " + std::to_string(rows) + " rows");
    std::vector<Rational> flat;
    flat.reserve(rows * cols);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols)
            throw DomainError("matrix row must have " + std::to_string(cols) + " entries");
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw DomainError("matrix entries must be strings like \"a\" or \"a/b\"");
            flat.push_back(Rational::parse(cell.get<std::string>()));
        }
    }
    return RatMatrix(rows, cols, std::move(flat));
}

std::string render_matrix(const RatMatrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace nicety
