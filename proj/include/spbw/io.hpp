#ifndef SPBW_IO_HPP
#define SPBW_IO_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spbw/presentation.hpp"
#include "spbw/rational.hpp"
#include "spbw/skew_element.hpp"

namespace spbw {

/// Prints f with terms in descending deglex order and coefficients on the
/// left, e.g. "4*x*y^2 + 3*y" or "(t + 1)*H - t".
std::string to_string(const SkewElement& f, const Presentation& p);

using ParamTable = std::map<std::string, Rational>;

/// Parses a polynomial over the coefficient ring of p. Identifiers are ring
/// generators or params. `line` is only used for error positions.
CommPoly parse_poly(std::string_view text, const Presentation& p, const ParamTable& params = {}, int line = 1);

/// Parses and multiplies out an element expression over p (variables,
/// ring generators, params, + - * ^ and parentheses).
SkewElement parse_element(std::string_view text, const Presentation& p, const ParamTable& params = {},
                          int line = 1);

/// Reads the line-oriented presentation format:
///   algebra <name>
///   coeff field rational | coeff poly rational <gens...>
///   vars <v1> <v2> ...
///   param <p> = <rational>
///   grade <gen> = <n>
///   sigma <var>: <gen> -> <poly>      (likewise sigma_inv, delta)
///   rel <vj> <vi> = <coeff> * <vi> <vj> [+ <tail>]
/// with '#' starting a comment. Throws ParseError with line and column.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation: parse_presentation(print_presentation(p)) == p.
std::string print_presentation(const Presentation& p);

/// Structured text report: "[section]" headers followed by "key: value" lines.
class Report {
public:
    void section(std::string name);
    void add(std::string key, std::string value);
    std::string render() const;

private:
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> sections_;
};

}  // namespace spbw

#endif  // SPBW_IO_HPP
