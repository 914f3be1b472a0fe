#include "spingate/hamfile.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>

#include "spingate/errors.hpp"

namespace spingate {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    double number = 0.0;
    std::string text;
    std::size_t line = 0;
    std::size_t col = 0;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Tokenizes one line; '#' starts a comment. The trailing End token carries
// the position just past the last character.
std::vector<Token> lex_line(std::string_view text, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        const std::size_t col = i + 1;
        switch (c) {
            case '+': out.push_back({Tok::Plus, 0, "+", line_no, col}); ++i; continue;
            case '-': out.push_back({Tok::Minus, 0, "-", line_no, col}); ++i; continue;
            case '*': out.push_back({Tok::Star, 0, "*", line_no, col}); ++i; continue;
            case '/': out.push_back({Tok::Slash, 0, "/", line_no, col}); ++i; continue;
            case '(': out.push_back({Tok::LParen, 0, "(", line_no, col}); ++i; continue;
            case ')': out.push_back({Tok::RParen, 0, ")", line_no, col}); ++i; continue;
            default: break;
        }
        if (digit(c)) {
            const std::size_t start = i;
            while (i < text.size() && digit(text[i])) ++i;
            if (i < text.size() && text[i] == '.') {
                ++i;
                if (i >= text.size() || !digit(text[i]))
                    throw parse_error("digit expected after decimal point", line_no, i + 1);
                while (i < text.size() && digit(text[i])) ++i;
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                ++i;
                if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
                if (i >= text.size() || !digit(text[i]))
                    throw parse_error("digit expected in exponent", line_no, i + 1);
                while (i < text.size() && digit(text[i])) ++i;
            }
            const std::string_view slice = text.substr(start, i - start);
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(slice.data(), slice.data() + slice.size(), value);
            if (ec != std::errc{} || ptr != slice.data() + slice.size())
                throw parse_error("malformed number '" + std::string(slice) + "'", line_no, col);
            out.push_back({Tok::Number, value, std::string(slice), line_no, col});
            continue;
        }
        if (ident_start(c)) {
            const std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) ++i;
            out.push_back(
                {Tok::Ident, 0, std::string(text.substr(start, i - start)), line_no, col});
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_no, col);
    }
    out.push_back({Tok::End, 0, "", line_no, text.size() + 1});
    return out;
}

// expr  := term (('+' | '-') term)*
// term  := unary (('*' | '/') unary)*
// unary := '-'? atom
// atom  := number | 'pi' | 'sqrt' '(' expr ')' | '(' expr ')'
class ExpressionParser {
public:
    explicit ExpressionParser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    double parse_expr() {
        double value = parse_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = advance();
            const double rhs = parse_term();
            value = (op.kind == Tok::Plus) ? value + rhs : value - rhs;
        }
        return value;
    }

    const Token& peek() const { return tokens_[pos_]; }
    std::size_t position() const { return pos_; }

private:
    double parse_term() {
        double value = parse_unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token op = advance();
            const double rhs = parse_unary();
            if (op.kind == Tok::Star) {
                value *= rhs;
            } else {
                if (rhs == 0.0) throw parse_error("division by zero", op.line, op.col);
                value /= rhs;
            }
        }
        return value;
    }

    double parse_unary() {
        if (peek().kind == Tok::Minus) {
            advance();
            return -parse_atom();
        }
        return parse_atom();
    }

    double parse_atom() {
        const Token& tk = peek();
        switch (tk.kind) {
            case Tok::Number:
                return advance().number;
            case Tok::Ident:
                if (tk.text == "pi") {
                    advance();
                    return std::numbers::pi;
                }
                if (tk.text == "sqrt") {
                    advance();
                    expect(Tok::LParen, "'(' after sqrt");
                    const double inner = parse_expr();
                    expect(Tok::RParen, "')'");
                    return std::sqrt(inner);
                }
                throw parse_error("unknown name '" + tk.text + "' in expression", tk.line, tk.col);
            case Tok::LParen: {
                advance();
                const double inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                throw parse_error("expected number, 'pi', 'sqrt' or '('", tk.line, tk.col);
        }
    }

    Token advance() { return tokens_[pos_++]; }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            throw parse_error(std::string("expected ") + what, peek().line, peek().col);
        ++pos_;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            std::string_view line = text.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.push_back(line);
            start = i + 1;
        }
    }
    return lines;
}

PauliLabel axis_label(char c) {
    switch (c) {
        case 'x': return PauliLabel::X;
        case 'y': return PauliLabel::Y;
        case 'z': return PauliLabel::Z;
        default: return PauliLabel::I;
    }
}

std::string shortest_decimal(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

}  // namespace

double parse_expression(std::string_view text) {
    const std::vector<Token> tokens = lex_line(text, 1);
    ExpressionParser parser(tokens);
    const double value = parser.parse_expr();
    if (parser.peek().kind != Tok::End)
        throw parse_error("unexpected trailing input", parser.peek().line, parser.peek().col);
    return value;
}

HamFileDocument parse_file(std::string_view text) {
    std::vector<std::string> header_names;
    bool seen_header = false;
    bool seen_terms = false;

    std::vector<PauliTerm> terms;
    std::vector<TermLocation> locations;

    // System is pinned by the header, or defaults to A B C at the first term.
    std::optional<SpinSystem> system;
    auto the_system = [&]() -> const SpinSystem& {
        if (!system) system.emplace(std::vector<std::string>{"A", "B", "C"});
        return *system;
    };

    const std::vector<std::string_view> lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t line_no = li + 1;
        const std::vector<Token> tokens = lex_line(lines[li], line_no);
        if (tokens.front().kind == Tok::End) continue;

        if (tokens.front().kind == Tok::Ident && tokens.front().text == "spins") {
            if (seen_terms)
                throw parse_error("'spins' header must precede all terms", line_no,
                                  tokens.front().col);
            if (seen_header)
                throw parse_error("duplicate 'spins' header", line_no, tokens.front().col);
            for (std::size_t t = 1; t + 1 < tokens.size(); ++t) {
                if (tokens[t].kind != Tok::Ident)
                    throw parse_error("expected site name", tokens[t].line, tokens[t].col);
                for (const std::string& prev : header_names)
                    if (prev == tokens[t].text)
                        throw parse_error("duplicate site name '" + tokens[t].text + "'",
                                          tokens[t].line, tokens[t].col);
                header_names.push_back(tokens[t].text);
            }
            if (header_names.empty())
                throw parse_error("'spins' header needs at least one site name", line_no,
                                  tokens.front().col);
            seen_header = true;
            system.emplace(header_names);
            continue;
        }

        // Term line: coefficient expression, then factors.
        const Token first = tokens.front();
        ExpressionParser parser(tokens);
        const double coefficient = parser.parse_expr();
        if (!std::isfinite(coefficient))
            throw parse_error("coefficient does not evaluate to a finite number", first.line,
                              first.col);

        std::vector<PauliFactor> factors;
        std::size_t pos = parser.position();
        while (tokens[pos].kind != Tok::End) {
            const Token& tk = tokens[pos];
            if (tk.kind != Tok::Ident)
                throw parse_error("expected factor (axis letter + site name)", tk.line, tk.col);
            const PauliLabel label = axis_label(tk.text[0]);
            if (label == PauliLabel::I || tk.text.size() < 2)
                throw parse_error("factor '" + tk.text +
                                      "' must be x, y, or z followed by a site name",
                                  tk.line, tk.col);
            const std::string site_name = tk.text.substr(1);
            const auto site = the_system().site_index(site_name);
            if (!site)
                throw parse_error("unknown site '" + site_name + "'", tk.line, tk.col);
            for (const PauliFactor& f : factors)
                if (f.site == *site)
                    throw parse_error("duplicate site '" + site_name + "' in term", tk.line,
                                      tk.col);
            factors.push_back({*site, label});
            ++pos;
        }
        if (factors.empty())
            throw parse_error("term requires at least one factor", tokens[pos].line,
                              tokens[pos].col);

        seen_terms = true;
        terms.emplace_back(coefficient, std::move(factors));
        locations.push_back({first.line, first.col});
    }

    return HamFileDocument{the_system(), std::move(terms), std::move(locations)};
}

std::string write_file(const HamFileDocument& doc) {
    std::string out = "spins";
    for (std::size_t s = 0; s < doc.system.site_count(); ++s) {
        out += ' ';
        out += doc.system.site_name(s);
    }
    out += '\n';
    for (const PauliTerm& term : doc.terms) {
        out += shortest_decimal(term.coefficient());
        for (const PauliFactor& f : term.factors()) {
            out += ' ';
            out += static_cast<char>(std::tolower(pauli_char(f.label)));
            out += doc.system.site_name(f.site);
        }
        out += '\n';
    }
    return out;
}

}  // namespace spingate
