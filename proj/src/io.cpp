#include <wuritt/io.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wuritt {

namespace {

// ---------------------------------------------------------------- lexer ---

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int column;  // 1-based
};

const char* tokName(Tok t) {
    switch (t) {
        case Tok::Int: return "number";
        case Tok::Ident: return "variable";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Slash: return "'/'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of expression";
    }
    return "?";
}

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identCont(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& text, int line, int columnOffset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        int col = static_cast<int>(i) + 1 + columnOffset;
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Int, text.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (identStart(c)) {
            std::size_t j = i;
            while (j < text.size() && identCont(text[j])) ++j;
            out.push_back({Tok::Ident, text.substr(i, j - i), col});
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), col});
        ++i;
    }
    out.push_back({Tok::End, "", static_cast<int>(text.size()) + 1 + columnOffset});
    return out;
}

// ------------------------------------------------- expression parser ------

class ExprParser {
public:
    ExprParser(std::vector<Token> tokens, int line, const Field& field, const VarOrderPtr& order)
        : m_tokens(std::move(tokens)), m_line(line), m_field(field), m_order(order) {}

    Polynomial parse() {
        Polynomial p = parseSum();
        if (peek().kind != Tok::End)
            fail("unexpected " + describe(peek()), {"'+'", "'-'", "'*'", "'^'", "end of expression"});
        return p;
    }

private:
    const Token& peek() const { return m_tokens[m_pos]; }
    Token next() { return m_tokens[m_pos++]; }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
        throw ParseError(m_line, peek().column, msg, std::move(expected));
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::Int) return "number '" + t.text + "'";
        if (t.kind == Tok::Ident) return "identifier '" + t.text + "'";
        return std::string(tokName(t.kind));
    }

    Polynomial parseSum() {
        Polynomial acc = parseProduct();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Tok op = next().kind;
            Polynomial rhs = parseProduct();
            acc = op == Tok::Plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Polynomial parseProduct() {
        Polynomial acc = parseUnary();
        while (peek().kind == Tok::Star) {
            next();
            acc = acc * parseUnary();
        }
        return acc;
    }

    Polynomial parseUnary() {
        if (peek().kind == Tok::Minus) {
            next();
            return -parseUnary();
        }
        return parsePower();
    }

    Polynomial parsePower() {
        Polynomial base = parsePrimary();
        if (peek().kind != Tok::Caret) return base;
        next();
        if (peek().kind != Tok::Int) fail("exponent must be a natural number", {"number"});
        Token e = next();
        unsigned long long v = 0;
        for (char c : e.text) {
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > kMaxExponent)
                throw ParseError(m_line, e.column, "exponent too large");
        }
        if (peek().kind == Tok::Caret)
            fail("chained '^' needs parentheses");
        return base.pow(static_cast<std::uint32_t>(v));
    }

    Polynomial parsePrimary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::LParen: {
                next();
                Polynomial p = parseSum();
                if (peek().kind != Tok::RParen) fail("unbalanced parenthesis", {"')'"});
                next();
                return p;
            }
            case Tok::Int: {
                Token numTok = next();
                mpz_class num(numTok.text, 10);
                if (peek().kind == Tok::Slash) {
                    Token slash = next();
                    if (m_field.isPrimeField())
                        throw ParseError(m_line, slash.column,
                                         "rational literal not allowed over " + m_field.name());
                    if (peek().kind != Tok::Int)
                        fail("expected denominator after '/'", {"number"});
                    Token denTok = next();
                    mpz_class den(denTok.text, 10);
                    if (den == 0)
                        throw ParseError(m_line, denTok.column, "zero denominator");
                    return Polynomial::constant(m_field, m_order, Coeff::rational(num, den));
                }
                return Polynomial::constant(m_field, m_order, Coeff::fromInteger(m_field, num));
            }
            case Tok::Ident: {
                Token id = next();
                auto idx = m_order->indexOf(id.text);
                if (!idx)
                    throw ParseError(m_line, id.column, "unknown variable '" + id.text + "'");
                return Polynomial::variable(m_field, m_order, *idx);
            }
            default:
                fail("expected expression, found " + describe(t),
                     {"number", "variable", "'('", "'-'"});
        }
    }

    std::vector<Token> m_tokens;
    std::size_t m_pos = 0;
    int m_line;
    Field m_field;
    VarOrderPtr m_order;
};

// ---------------------------------------------------- system file ---------

struct Line {
    int number;        // 1-based
    std::string text;  // comment stripped, untrimmed
};

std::vector<Line> splitLines(const std::string& text) {
    std::vector<Line> out;
    int number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(start, end == std::string::npos ? end : end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        out.push_back({number++, std::move(line)});
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

bool isBlank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c == ' ' || c == '\t'; });
}

// returns the offset just past `key` if the line starts with it (after ws)
std::optional<std::size_t> matchKey(const std::string& line, const std::string& key) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (line.compare(i, key.size(), key) == 0) return i + key.size();
    return std::nullopt;
}

}  // namespace

Polynomial parseExpression(const std::string& text, const Field& field, const VarOrderPtr& order,
                           int line) {
    if (isBlank(text)) throw ParseError(line, 1, "empty expression");
    return ExprParser(lex(text, line, 0), line, field, order).parse();
}

namespace {

Polynomial parseExpressionAt(const std::string& text, int line, int columnOffset,
                             const Field& field, const VarOrderPtr& order) {
    if (isBlank(text))
        throw ParseError(line, columnOffset + 1, "empty expression");
    return ExprParser(lex(text, line, columnOffset), line, field, order).parse();
}

}  // namespace

SystemFile parseSystem(const std::string& text) {
    std::vector<Line> lines = splitLines(text);
    std::size_t i = 0;
    auto skipBlank = [&] {
        while (i < lines.size() && isBlank(lines[i].text)) ++i;
    };
    int eofLine = lines.empty() ? 1 : lines.back().number;

    // vars:
    skipBlank();
    if (i == lines.size())
        throw ParseError(eofLine, 1, "missing 'vars:' line", {"vars:"});
    auto varsAt = matchKey(lines[i].text, "vars:");
    if (!varsAt)
        throw ParseError(lines[i].number, 1, "expected 'vars:' line", {"vars:"});
    std::vector<std::string> names;
    {
        const std::string& rest = lines[i].text;
        std::size_t j = *varsAt;
        while (j < rest.size()) {
            if (rest[j] == ' ' || rest[j] == '\t') {
                ++j;
                continue;
            }
            if (!identStart(rest[j]))
                throw ParseError(lines[i].number, static_cast<int>(j) + 1,
                                 "invalid variable name");
            std::size_t k = j;
            while (k < rest.size() && identCont(rest[k])) ++k;
            std::string name = rest.substr(j, k - j);
            if (std::find(names.begin(), names.end(), name) != names.end())
                throw ParseError(lines[i].number, static_cast<int>(j) + 1,
                                 "duplicate variable '" + name + "'");
            names.push_back(std::move(name));
            j = k;
        }
        ++i;
    }

    // field:
    skipBlank();
    if (i == lines.size())
        throw ParseError(eofLine, 1, "missing 'field:' line", {"field:"});
    auto fieldAt = matchKey(lines[i].text, "field:");
    if (!fieldAt)
        throw ParseError(lines[i].number, 1, "expected 'field:' line", {"field:"});
    SystemFile sys;
    {
        const std::string& rest = lines[i].text;
        std::size_t j = *fieldAt;
        while (j < rest.size() && (rest[j] == ' ' || rest[j] == '\t')) ++j;
        if (rest.compare(j, 2, "QQ") == 0 && isBlank(rest.substr(j + 2))) {
            sys.field = Field::rationals();
        } else if (rest.compare(j, 2, "GF") == 0) {
            std::size_t k = j + 2;
            while (k < rest.size() && (rest[k] == ' ' || rest[k] == '\t')) ++k;
            std::size_t numStart = k;
            while (k < rest.size() && std::isdigit(static_cast<unsigned char>(rest[k]))) ++k;
            if (numStart == k || !isBlank(rest.substr(k)))
                throw ParseError(lines[i].number, static_cast<int>(numStart) + 1,
                                 "expected a prime modulus after 'GF'", {"number"});
            unsigned long long p = 0;
            for (std::size_t t = numStart; t < k; ++t) {
                p = p * 10 + static_cast<unsigned>(rest[t] - '0');
                if (p >= (1ull << 31))
                    throw ParseError(lines[i].number, static_cast<int>(numStart) + 1,
                                     "modulus must be < 2^31");
            }
            if (!isPrime(static_cast<std::uint32_t>(p)))
                throw ParseError(lines[i].number, static_cast<int>(numStart) + 1,
                                 "modulus " + std::to_string(p) + " is not prime");
            sys.field = Field::primeField(static_cast<std::uint32_t>(p));
        } else {
            throw ParseError(lines[i].number, static_cast<int>(j) + 1,
                             "unknown field", {"QQ", "GF <p>"});
        }
        ++i;
    }
    sys.order = makeVarOrder(std::move(names));

    // polys:
    skipBlank();
    if (i == lines.size())
        throw ParseError(eofLine, 1, "missing 'polys:' line", {"polys:"});
    auto polysAt = matchKey(lines[i].text, "polys:");
    if (!polysAt || !isBlank(lines[i].text.substr(*polysAt)))
        throw ParseError(lines[i].number, 1, "expected 'polys:' line", {"polys:"});
    ++i;

    bool sawConclusion = false;
    for (; i < lines.size(); ++i) {
        if (isBlank(lines[i].text)) continue;
        if (auto conclAt = matchKey(lines[i].text, "conclusion:")) {
            if (sawConclusion)
                throw ParseError(lines[i].number, 1, "duplicate 'conclusion:' line");
            sys.conclusion = parseExpressionAt(lines[i].text.substr(*conclAt), lines[i].number,
                                               static_cast<int>(*conclAt), sys.field, sys.order);
            sawConclusion = true;
            continue;
        }
        if (sawConclusion)
            throw ParseError(lines[i].number, 1, "unexpected content after 'conclusion:'");
        sys.polys.push_back(
            parseExpressionAt(lines[i].text, lines[i].number, 0, sys.field, sys.order));
    }
    return sys;
}

// ---------------------------------------------------------- rendering -----

std::string renderPolynomial(const Polynomial& p) {
    if (p.isZero()) return "0";
    const VarOrder& order = *p.order();
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        std::string cs = coeff.str();
        bool negative = !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        std::string monoStr;
        for (const auto& [var, exp] : mono.exponents()) {
            if (!monoStr.empty()) monoStr += "*";
            monoStr += order.name(var);
            if (exp != 1) monoStr += "^" + std::to_string(exp);
        }
        std::string term;
        if (monoStr.empty())
            term = mag;
        else if (mag == "1")
            term = monoStr;
        else
            term = mag + "*" + monoStr;
        if (first) {
            out = (negative ? "-" : "") + term;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + term;
        }
    }
    return out;
}

Json rankJson(const RankKey& rank, const VarOrder& order) {
    Json j;
    j["var"] = rank.mainVar ? Json(order.name(*rank.mainVar)) : Json(nullptr);
    j["deg"] = rank.mainDeg;
    return j;
}

Json polyListJson(const std::vector<Polynomial>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(renderPolynomial(p));
    return arr;
}

Json pointJson(const Point& z) {
    Json arr = Json::array();
    for (auto v : z) arr.push_back(v);
    return arr;
}

Json resultHeader(const std::string& command, const Field& field, const VarOrder& order) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["field"] = field.name();
    j["vars"] = Json(order.names());
    return j;
}

Json serializePseudo(const std::string& command, const Polynomial& g, const Polynomial& f,
                     const PseudoResult& res) {
    Json j = resultHeader(command, g.field(), *g.order());
    j["dividend"] = renderPolynomial(g);
    j["divisor"] = renderPolynomial(f);
    j["exponent"] = res.exponent;
    j["quotient"] = renderPolynomial(res.quotient);
    j["remainder"] = renderPolynomial(res.remainder);
    j["identity_checked"] = checkIdentity(g, f, res);
    j["remainder_reduced"] = reducedTo(res.remainder, f);
    return j;
}

Json serializeSetPseudo(const std::string& command, const Polynomial& g, const TriangularSet& s,
                        const SetPseudoResult& res) {
    Json j = resultHeader(command, g.field(), *g.order());
    j["dividend"] = renderPolynomial(g);
    j["set"] = polyListJson(s.members());
    j["exponents"] = Json(res.exponents);
    j["quotients"] = polyListJson(res.quotients);
    j["remainder"] = renderPolynomial(res.remainder);
    j["identity_checked"] = checkSetIdentity(g, s, res);
    j["remainder_reduced"] = reducedToSet(res.remainder, s);
    return j;
}

namespace {

Json triangularSetJson(const TriangularSet& s) {
    Json j;
    j["members"] = polyListJson(s.members());
    Json ranks = Json::array();
    for (const auto& p : s.members()) ranks.push_back(rankJson(p.rank(), *s.order()));
    j["ranks"] = ranks;
    return j;
}

}  // namespace

Json serializeBasicSet(const TriangularSet& bs) {
    Json j = resultHeader("basicset", bs.field(), *bs.order());
    j.update(triangularSetJson(bs));
    return j;
}

Json serializeCharset(const TriangularSet& cs, const CharsetTrace& trace, bool includeTrace,
                      const std::vector<Polynomial>& inputs) {
    Json j = resultHeader("charset", cs.field(), *cs.order());
    j.update(triangularSetJson(cs));
    Json initials = Json::array();
    for (const auto& p : cs.members()) initials.push_back(renderPolynomial(p.initial()));
    j["initials"] = initials;
    j["initial_product"] = renderPolynomial(initialProd(cs));
    bool remaindersZero = true;
    for (const auto& p : inputs)
        if (!setRemainder(p, cs).isZero()) remaindersZero = false;
    j["remainders_zero"] = remaindersZero;
    j["iteration_count"] = trace.iterations.size();
    if (includeTrace) {
        Json iters = Json::array();
        for (const auto& it : trace.iterations) {
            Json e;
            e["basic_set"] = polyListJson(it.basicSet.members());
            e["nonzero_remainders"] = it.nonzeroRemainderCount;
            iters.push_back(std::move(e));
        }
        j["iterations"] = iters;
    }
    return j;
}

Json serializeDecomposition(const ZeroDecomposition& zd, const std::vector<Polynomial>& inputs,
                            bool pruned) {
    Json j;
    if (!zd.components.empty()) {
        const TriangularSet& first = zd.components.front().set;
        j = resultHeader("zdecomp", first.field(), *first.order());
    } else {
        j["schema"] = kSchemaVersion;
        j["command"] = "zdecomp";
    }
    j["pruned"] = pruned;
    j["component_count"] = zd.components.size();
    Json comps = Json::array();
    for (const auto& comp : zd.components) {
        Json c = triangularSetJson(comp.set);
        Json initials = Json::array();
        for (const auto& p : comp.set.members()) initials.push_back(renderPolynomial(p.initial()));
        c["initials"] = initials;
        c["initial_product"] = renderPolynomial(initialProd(comp.set));
        c["provenance"] = polyListJson(comp.adjoinedInitials);
        c["contradictory"] = comp.set.containsNonzeroConstant();
        bool remaindersZero = true;
        for (const auto& p : inputs)
            if (!setRemainder(p, comp.set).isZero()) remaindersZero = false;
        c["remainders_zero"] = remaindersZero;
        comps.push_back(std::move(c));
    }
    j["components"] = comps;
    return j;
}

Json serializeProof(const GeometricProof& proof, const Polynomial& conclusion) {
    Json j = resultHeader("prove", proof.charset.field(), *proof.charset.order());
    j["conclusion"] = renderPolynomial(conclusion);
    j["charset"] = polyListJson(proof.charset.members());
    j["proved_generically"] = proof.provedGenerically;
    j["nondegeneracy_conditions"] = polyListJson(proof.nondegeneracyConditions);
    Json w;
    w["exponents"] = Json(proof.witness.exponents);
    w["quotients"] = polyListJson(proof.witness.quotients);
    w["remainder"] = renderPolynomial(proof.witness.remainder);
    w["identity_checked"] = checkSetIdentity(conclusion, proof.charset, proof.witness);
    j["witness"] = w;
    return j;
}

namespace {

void dumpText(const Json& j, std::ostringstream& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty())) {
                out << pad << key << ":\n";
                dumpText(value, out, indent + 1);
            } else if (value.is_array()) {
                out << pad << key << ": []\n";
            } else if (value.is_string()) {
                out << pad << key << ": " << value.get<std::string>() << "\n";
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                dumpText(value, out, indent + 1);
            } else if (value.is_string()) {
                out << pad << "- " << value.get<std::string>() << "\n";
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    }
}

}  // namespace

std::string renderResultText(const Json& j) {
    std::ostringstream out;
    dumpText(j, out, 0);
    return out.str();
}

}  // namespace wuritt
