#pragma once

#include "qnull/errors.hpp"
#include "qnull/monomial.hpp"
#include "qnull/nullstellensatz.hpp"
#include "qnull/point.hpp"
#include "qnull/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qnull {

/// 1-based location inside the parsed source.
struct SourcePosition {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Syntax error with the position it was detected at and a summary of what
/// the parser would have accepted there.
class ParseDiagnostic : public Error {
public:
    ParseDiagnostic(SourcePosition pos, std::string message, std::string expected = {});

    const SourcePosition& position() const noexcept { return pos_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    SourcePosition pos_;
    std::string message_;
    std::string expected_;
};

class UnknownVariable : public ParseDiagnostic {
public:
    UnknownVariable(SourcePosition pos, const std::string& name)
        : ParseDiagnostic(pos, "unknown variable '" + name + "'", "a declared variable, i, j or k") {}
};

class ZeroDenominator : public ParseDiagnostic {
public:
    explicit ZeroDenominator(SourcePosition pos) : ParseDiagnostic(pos, "zero denominator in rational literal") {}
};

/// Text plus the ordered variable names it may use.
struct ExpressionSource {
    std::string_view text;
    std::vector<std::string> variables;
};

/// Variable names must be distinct identifiers other than i, j and k.
void validate_variable_names(const std::vector<std::string>& names);

/// First of y, y0, y1, ... not already used.
std::string fresh_variable_name(const std::vector<std::string>& names);

/// Parses
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := atom ['^' nat]
///   atom   := rational | 'i' | 'j' | 'k' | variable | '(' expr ')'
/// keeping the order of factors. A run of letters such as "jx" is split into
/// the longest known names, so "2jx^2" reads as 2 * j * x^2.
Polynomial parse_poly(const ExpressionSource& src);
Polynomial parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// A constant expression such as "1/2 + 3i - 4/7k" or "(3i + 4j)*1/5".
Quaternion parse_quaternion(std::string_view text);

/// One generator per line; '#' starts a comment; blank lines are skipped.
std::vector<Polynomial> parse_ideal(std::string_view text, const std::vector<std::string>& variables);

/// Comma-separated quaternion literals. Throws NonCommutingPoint.
CommutingPoint parse_point(std::string_view text);

/// Comma-separated quaternion literals.
std::vector<Quaternion> parse_scalar_list(std::string_view text);

/// Canonical text: terms in descending order, each coefficient that is not a
/// positive rational wrapped in parentheses, unit coefficients omitted.
std::string print_poly(const Polynomial& f, const std::vector<std::string>& variables,
                       const MonomialOrder& order);
std::string print_poly(const Polynomial& f, const std::vector<std::string>& variables);

/// Everything needed to re-read and re-verify a certificate.
struct CertificateDocument {
    std::vector<std::string> variables;
    std::string extra_variable;
    OrderKind order = OrderKind::degrevlex;
    Certificate certificate;
};

/// JSON document with a fixed field order.
std::string write_certificate(const CertificateDocument& doc);
/// Inverse of write_certificate. Throws Error on malformed documents.
CertificateDocument read_certificate(std::string_view text);

}  // namespace qnull
