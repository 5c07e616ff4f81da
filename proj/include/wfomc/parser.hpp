#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "wfomc/problem.hpp"

namespace wfomc {

/// Syntax or validation error in a problem file, annotated with a 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses a problem file:
///
///   predicate R/2 weight 1 -1
///   axiom acyclic(R, Src, _)
///   sentence forall x. exists y. R(x,y) | Src(x)
///   constraint |Src| + |R| >= 2
///
/// '#' starts a comment. Binding strength from loosest: <->, -> (right-assoc), |, &,
/// then the prefix operators. A quantifier written with a dot ("forall x. phi")
/// scopes as far right as possible; without the dot it is a prefix operator like
/// '~', so "exists x U(x) & V(x)" is (exists x U(x)) & V(x) and is rejected.
Problem parse(std::string_view text);

}  // namespace wfomc
