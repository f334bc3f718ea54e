#include "qnull/textio.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qnull {

namespace {

std::string render_diagnostic(const SourcePosition& pos, const std::string& message, const std::string& expected) {
    std::string out = "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message;
    if (!expected.empty()) out += " (expected " + expected + ")";
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

constexpr unsigned kMaxExponent = 4096;

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars, std::size_t line_base = 1)
        : text_(text), vars_(vars), line_base_(line_base) {
        names_ = vars;
        names_.insert(names_.end(), {"i", "j", "k"});
        advance();
    }

    Polynomial parse_all() {
        Polynomial p = parse_expr();
        if (tok_.kind != Tok::end) fail(tok_.offset, "unexpected '" + tok_.text + "'", "an operator or end of input");
        return p;
    }

    // expr that must be followed by ',' or end; used for point and scalar lists.
    Polynomial parse_list_item() { return parse_expr(); }
    bool at_comma() const { return tok_.kind == Tok::comma; }
    bool at_end() const { return tok_.kind == Tok::end; }
    void skip_comma() { advance(); }
    std::size_t offset() const { return tok_.offset; }

    [[noreturn]] void fail(std::size_t offset, const std::string& message, const std::string& expected = {}) const {
        throw ParseDiagnostic(position(offset), message, expected);
    }

    SourcePosition position(std::size_t offset) const {
        if (!text_.empty()) offset = std::min(offset, text_.size() - 1);
        else offset = 0;
        SourcePosition pos{line_base_, 1};
        for (std::size_t c = 0; c < offset; ++c) {
            if (text_[c] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
        return pos;
    }

private:
    std::size_t nvars() const { return vars_.size(); }

    void advance() {
        std::size_t p = pos_;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        if (p >= text_.size()) {
            tok_ = {Tok::end, "end of input", text_.size()};
            pos_ = p;
            return;
        }
        char c = text_[p];
        auto single = [&](Tok kind) {
            tok_ = {kind, std::string(1, c), p};
            pos_ = p + 1;
        };
        switch (c) {
            case '+': return single(Tok::plus);
            case '-': return single(Tok::minus);
            case '*': return single(Tok::star);
            case '/': return single(Tok::slash);
            case '^': return single(Tok::caret);
            case '(': return single(Tok::lparen);
            case ')': return single(Tok::rparen);
            case ',': return single(Tok::comma);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t e = p;
            while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
            if (e < text_.size() && text_[e] == '.')
                throw ParseDiagnostic(position(e), "decimal literals are not accepted", "a rational p/q");
            tok_ = {Tok::number, std::string(text_.substr(p, e - p)), p};
            pos_ = e;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t e = p;
            while (e < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[e])) || text_[e] == '_')) ++e;
            tok_ = {Tok::ident, std::string(text_.substr(p, e - p)), p};
            pos_ = e;
            return;
        }
        throw ParseDiagnostic(position(p), std::string("unexpected character '") + c + "'",
                              "a number, variable, i, j, k, operator or parenthesis");
    }

    Polynomial parse_expr() {
        bool negate = false;
        if (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            negate = tok_.kind == Tok::minus;
            advance();
        }
        Polynomial acc = parse_term();
        if (negate) acc = -std::move(acc);
        while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
            bool minus = tok_.kind == Tok::minus;
            advance();
            Polynomial t = parse_term();
            if (minus) acc -= t;
            else acc += t;
        }
        return acc;
    }

    bool starts_factor() const {
        return tok_.kind == Tok::number || tok_.kind == Tok::ident || tok_.kind == Tok::lparen;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            if (tok_.kind == Tok::star) {
                advance();
                acc = acc * parse_factor();
            } else if (starts_factor()) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        // A split identifier yields several atoms; an exponent binds to the last.
        std::vector<Polynomial> atoms = parse_atom();
        if (tok_.kind == Tok::caret) {
            advance();
            if (tok_.kind != Tok::number) fail(tok_.offset, "expected exponent after '^'", "a natural number");
            if (tok_.text.size() > 6 || std::stoul(tok_.text) > kMaxExponent)
                fail(tok_.offset, "exponent too large", "at most " + std::to_string(kMaxExponent));
            unsigned long e = std::stoul(tok_.text);
            advance();
            atoms.back() = atoms.back().pow(static_cast<unsigned>(e));
        }
        Polynomial acc = std::move(atoms.front());
        for (std::size_t a = 1; a < atoms.size(); ++a) acc = acc * atoms[a];
        return acc;
    }

    std::vector<Polynomial> parse_atom() {
        switch (tok_.kind) {
            case Tok::number: return {Polynomial::constant(nvars(), parse_rational())};
            case Tok::ident: return split_identifier();
            case Tok::lparen: {
                std::size_t open = tok_.offset;
                advance();
                Polynomial inner = parse_expr();
                if (tok_.kind != Tok::rparen)
                    fail(tok_.kind == Tok::end ? open : tok_.offset, "unbalanced parenthesis", "')'");
                advance();
                return {std::move(inner)};
            }
            default:
                fail(tok_.offset, "unexpected '" + tok_.text + "'",
                     "a number, variable, i, j, k or '('");
        }
    }

    Rational parse_rational() {
        Integer num(tok_.text);
        advance();
        if (tok_.kind != Tok::slash) return Rational(num);
        std::size_t slash = tok_.offset;
        advance();
        if (tok_.kind != Tok::number) fail(tok_.offset, "expected denominator after '/'", "a natural number");
        Integer den(tok_.text);
        if (den == 0) throw ZeroDenominator(position(slash));
        advance();
        return make_rational(num, den);
    }

    std::vector<Polynomial> split_identifier() {
        const std::string word = tok_.text;
        const std::size_t start = tok_.offset;
        advance();
        std::vector<Polynomial> atoms;
        std::size_t p = 0;
        while (p < word.size()) {
            const std::string* best = nullptr;
            for (const std::string& name : names_)
                if (word.compare(p, name.size(), name) == 0 && (!best || name.size() > best->size())) best = &name;
            if (!best) {
                std::size_t e = p;
                while (e < word.size() && !std::isdigit(static_cast<unsigned char>(word[e]))) ++e;
                throw UnknownVariable(position(start + p), word.substr(p, std::max<std::size_t>(e - p, 1)));
            }
            atoms.push_back(atom_for(*best));
            p += best->size();
        }
        return atoms;
    }

    Polynomial atom_for(const std::string& name) const {
        if (name == "i") return Polynomial::constant(nvars(), Quaternion::i());
        if (name == "j") return Polynomial::constant(nvars(), Quaternion::j());
        if (name == "k") return Polynomial::constant(nvars(), Quaternion::k());
        auto it = std::find(vars_.begin(), vars_.end(), name);
        return Polynomial::variable(nvars(), static_cast<std::size_t>(it - vars_.begin()));
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::vector<std::string> names_;
    std::size_t line_base_;
    std::size_t pos_ = 0;
    Token tok_{Tok::end, "", 0};
};

Quaternion constant_value(const Polynomial& p, const Parser& parser, std::size_t offset) {
    if (!p.is_constant()) parser.fail(offset, "expected a constant quaternion", "no variables");
    return p.is_zero() ? Quaternion() : p.terms().begin()->second;
}

std::vector<Quaternion> parse_constant_list(std::string_view text) {
    static const std::vector<std::string> no_vars;
    Parser parser(text, no_vars);
    std::vector<Quaternion> out;
    if (parser.at_end()) return out;
    for (;;) {
        std::size_t at = parser.offset();
        out.push_back(constant_value(parser.parse_list_item(), parser, at));
        if (parser.at_end()) return out;
        if (!parser.at_comma()) parser.fail(parser.offset(), "unexpected token in list", "',' or end of input");
        parser.skip_comma();
    }
}

}  // namespace

ParseDiagnostic::ParseDiagnostic(SourcePosition pos, std::string message, std::string expected)
    : Error(render_diagnostic(pos, message, expected)),
      pos_(pos), message_(std::move(message)), expected_(std::move(expected)) {}

void validate_variable_names(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const std::string& n : names) {
        if (!is_identifier(n)) throw Error("invalid variable name '" + n + "'");
        if (n == "i" || n == "j" || n == "k") throw Error("'" + n + "' is reserved for a quaternion unit");
        if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
    }
}

std::string fresh_variable_name(const std::vector<std::string>& names) {
    auto taken = [&](const std::string& s) { return std::find(names.begin(), names.end(), s) != names.end(); };
    if (!taken("y")) return "y";
    for (std::size_t s = 0;; ++s) {
        std::string candidate = "y" + std::to_string(s);
        if (!taken(candidate)) return candidate;
    }
}

Polynomial parse_poly(const ExpressionSource& src) {
    validate_variable_names(src.variables);
    return Parser(src.text, src.variables).parse_all();
}

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& variables) {
    return parse_poly(ExpressionSource{text, variables});
}

Quaternion parse_quaternion(std::string_view text) {
    static const std::vector<std::string> no_vars;
    Parser parser(text, no_vars);
    Polynomial p = parser.parse_all();
    return constant_value(p, parser, 0);
}

std::vector<Polynomial> parse_ideal(std::string_view text, const std::vector<std::string>& variables) {
    validate_variable_names(variables);
    std::vector<Polynomial> gens;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool blank = std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!blank) gens.push_back(Parser(line, variables, line_no).parse_all());
        if (end == text.size()) break;
        start = end + 1;
    }
    return gens;
}

CommutingPoint parse_point(std::string_view text) { return CommutingPoint(parse_constant_list(text)); }

std::vector<Quaternion> parse_scalar_list(std::string_view text) { return parse_constant_list(text); }

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t v = 0; v < m.nvars(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.at(v);
        if (m[v] > 1) out += '^' + std::to_string(m[v]);
    }
    return out;
}

// Positive rationals print bare; every other coefficient is parenthesized.
std::string term_text(const Monomial& m, const Quaternion& c, const std::vector<std::string>& vars) {
    std::string mono = monomial_text(m, vars);
    if (c.is_real() && sgn(c.w()) > 0) {
        if (mono.empty()) return c.w().get_str();
        if (c.is_one()) return mono;
        return c.w().get_str() + "*" + mono;
    }
    std::string coef = "(" + to_string(c) + ")";
    return mono.empty() ? coef : coef + "*" + mono;
}

}  // namespace

std::string print_poly(const Polynomial& f, const std::vector<std::string>& variables, const MonomialOrder& order) {
    if (variables.size() != f.nvars()) throw VariableCountMismatch(f.nvars(), variables.size());
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.sorted_terms(order)) {
        std::string t = term_text(m, c, variables);
        out += out.empty() ? t : " + " + t;
    }
    return out;
}

std::string print_poly(const Polynomial& f, const std::vector<std::string>& variables) {
    return print_poly(f, variables, MonomialOrder::degrevlex(f.nvars()));
}

std::string write_certificate(const CertificateDocument& doc) {
    using json = nlohmann::ordered_json;
    const Certificate& cert = doc.certificate;
    const MonomialOrder order(doc.order, doc.variables.size());
    std::vector<std::string> extended = doc.variables;
    extended.push_back(doc.extra_variable);
    auto poly = [&](const Polynomial& p) { return print_poly(p, doc.variables, order); };

    json j;
    j["format"] = "qnull-certificate/1";
    j["variables"] = doc.variables;
    j["extra_variable"] = doc.extra_variable;
    j["order"] = std::string(to_string(doc.order));
    j["generators"] = json::array();
    for (const Polynomial& g : cert.generators) j["generators"].push_back(poly(g));
    j["F"] = poly(cert.F);
    j["scalar"] = to_string(cert.scalar);
    j["N"] = cert.N;
    j["G"] = json::array();
    for (const Polynomial& g : cert.G) j["G"].push_back(poly(g));
    j["G_cofactors"] = json::array();
    for (const auto& row : cert.G_cofactors) {
        json r = json::array();
        for (const Polynomial& c : row) r.push_back(poly(c));
        j["G_cofactors"].push_back(std::move(r));
    }
    j["H"] = print_poly(cert.H, extended, order.extended());
    j["verified"] = cert.verified;
    return j.dump(2) + "\n";
}

CertificateDocument read_certificate(std::string_view text) {
    using json = nlohmann::ordered_json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("certificate document is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "qnull-certificate/1")
            throw Error("unsupported certificate format '" + j.at("format").get<std::string>() + "'");
        CertificateDocument doc;
        doc.variables = j.at("variables").get<std::vector<std::string>>();
        doc.extra_variable = j.at("extra_variable").get<std::string>();
        auto kind = parse_order_kind(j.at("order").get<std::string>());
        if (!kind) throw Error("unknown monomial order in certificate");
        doc.order = *kind;
        std::vector<std::string> extended = doc.variables;
        extended.push_back(doc.extra_variable);
        validate_variable_names(extended);

        Certificate& cert = doc.certificate;
        auto poly = [&](const json& s) { return parse_poly(s.get<std::string>(), doc.variables); };
        for (const json& g : j.at("generators")) cert.generators.push_back(poly(g));
        cert.F = poly(j.at("F"));
        cert.scalar = parse_quaternion(j.at("scalar").get<std::string>());
        cert.N = j.at("N").get<unsigned>();
        for (const json& g : j.at("G")) cert.G.push_back(poly(g));
        for (const json& row : j.at("G_cofactors")) {
            std::vector<Polynomial> r;
            for (const json& c : row) r.push_back(poly(c));
            cert.G_cofactors.push_back(std::move(r));
        }
        cert.H = parse_poly(j.at("H").get<std::string>(), extended);
        cert.verified = j.at("verified").get<bool>();
        return doc;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed certificate document: ") + e.what());
    }
}

}  // namespace qnull
