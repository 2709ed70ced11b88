#include "gincalc/ideal_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "gincalc/errors.hpp"

namespace gincalc {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, end };
    Kind kind;
    std::string text;
    int column;  // 1-based
};

class LineLexer {
public:
    LineLexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) {}

    Token next() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        const int col = static_cast<int>(pos_) + 1;
        if (pos_ >= line_.size() || line_[pos_] == '#')
            return {Token::Kind::end, "", col};
        const char c = line_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
                ++pos_;
            return {Token::Kind::number, line_.substr(start, pos_ - start), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::ident, line_.substr(start, pos_ - start), col};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Kind::plus, "+", col};
            case '-': return {Token::Kind::minus, "-", col};
            case '*': return {Token::Kind::star, "*", col};
            case '/': return {Token::Kind::slash, "/", col};
            case '^': return {Token::Kind::caret, "^", col};
            default:
                throw ParseError(line_no_, col, std::string("unexpected character '") + c + "'");
        }
    }

private:
    const std::string& line_;
    int line_no_;
    size_t pos_ = 0;
};

class PolyParser {
public:
    PolyParser(const std::string& line, int line_no, const RingPtr& ring,
               const std::map<std::string, int>& var_index)
        : lexer_(line, line_no), line_no_(line_no), ring_(ring), var_index_(var_index) {
        advance();
    }

    Polynomial parse() {
        std::vector<Term> terms;
        bool negative = false;
        if (accept(Token::Kind::minus)) {
            negative = true;
        } else {
            accept(Token::Kind::plus);
        }
        terms.push_back(parse_term(negative));
        while (cur_.kind != Token::Kind::end) {
            if (accept(Token::Kind::plus)) {
                terms.push_back(parse_term(false));
            } else if (accept(Token::Kind::minus)) {
                terms.push_back(parse_term(true));
            } else {
                throw ParseError(line_no_, cur_.column,
                                 "expected '+' or '-' between terms, got '" + cur_.text + "'");
            }
        }
        Polynomial p(ring_, std::move(terms));
        if (p.is_zero())
            throw ParseError(line_no_, 1, "polynomial line simplifies to zero");
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    bool accept(Token::Kind k) {
        if (cur_.kind != k) return false;
        advance();
        return true;
    }

    Term parse_term(bool negative) {
        Coeff coeff = Coeff::integer(negative ? -1 : 1, ring_->characteristic());
        std::vector<int> exps(ring_->nvars(), 0);
        bool have_factor = false;
        while (true) {
            if (cur_.kind == Token::Kind::number) {
                std::string lit = cur_.text;
                advance();
                if (accept(Token::Kind::slash)) {
                    if (cur_.kind != Token::Kind::number)
                        throw ParseError(line_no_, cur_.column, "expected denominator");
                    if (cur_.text == "0")
                        throw ParseError(line_no_, cur_.column, "zero denominator");
                    lit += "/" + cur_.text;
                    advance();
                }
                coeff = coeff * Coeff::from_string(lit, ring_->characteristic());
            } else if (cur_.kind == Token::Kind::ident) {
                auto it = var_index_.find(cur_.text);
                if (it == var_index_.end())
                    throw ParseError(line_no_, cur_.column,
                                     "undeclared variable '" + cur_.text + "'");
                const int var = it->second;
                advance();
                int power = 1;
                if (accept(Token::Kind::caret)) {
                    if (cur_.kind != Token::Kind::number)
                        throw ParseError(line_no_, cur_.column, "expected integer exponent");
                    power = std::stoi(cur_.text);
                    advance();
                }
                exps[var - 1] += power;
            } else {
                throw ParseError(line_no_, cur_.column,
                                 cur_.kind == Token::Kind::end
                                     ? "expected a coefficient or variable"
                                     : "unexpected token '" + cur_.text + "'");
            }
            have_factor = true;
            if (!accept(Token::Kind::star)) break;
        }
        if (!have_factor)
            throw ParseError(line_no_, cur_.column, "empty term");
        return {Monomial(std::move(exps)), std::move(coeff)};
    }

    LineLexer lexer_;
    Token cur_{Token::Kind::end, "", 1};
    int line_no_;
    const RingPtr& ring_;
    const std::map<std::string, int>& var_index_;
};

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

RingPtr parse_ring_line(const std::string& line, int line_no) {
    std::istringstream is(line);
    std::string keyword;
    is >> keyword;
    if (keyword != "ring")
        throw ParseError(line_no, 1, "expected 'ring CHAR x1 x2 ...' declaration");
    long characteristic = -1;
    if (!(is >> characteristic) || characteristic < 0)
        throw ParseError(line_no, 1, "expected characteristic (0 or a prime)");
    std::vector<std::string> names;
    std::string name;
    while (is >> name) names.push_back(name);
    if (names.empty()) throw ParseError(line_no, 1, "ring declares no variables");
    try {
        return make_ring(std::move(names), static_cast<unsigned long>(characteristic));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, 1, e.what());
    }
}

}  // namespace

IdealFile parse_ideal(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    IdealFile file;
    std::map<std::string, int> var_index;
    while (std::getline(is, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        if (!file.ring) {
            file.ring = parse_ring_line(body, line_no);
            for (int i = 1; i <= file.ring->nvars(); ++i)
                var_index[file.ring->var_name(i)] = i;
            continue;
        }
        file.polys.push_back(PolyParser(body, line_no, file.ring, var_index).parse());
    }
    if (!file.ring) throw ParseError(line_no + 1, 1, "missing ring declaration");
    return file;
}

std::string write_ideal(const IdealFile& file) {
    std::ostringstream os;
    os << "ring " << file.ring->characteristic();
    for (const auto& name : file.ring->var_names()) os << " " << name;
    os << "\n";
    for (const auto& p : file.polys) os << p.str() << "\n";
    return os.str();
}

MonomialIdeal as_monomial_ideal(const IdealFile& file) {
    std::vector<Monomial> gens;
    gens.reserve(file.polys.size());
    for (const auto& p : file.polys) {
        if (p.num_terms() != 1)
            throw std::invalid_argument(
                "monomial-ideal input requires one monomial per line, got '" + p.str() + "'");
        gens.push_back(p.terms().front().mono);
    }
    return MonomialIdeal(file.ring, std::move(gens));
}

}  // namespace gincalc
