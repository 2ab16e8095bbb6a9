#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hkas/info_theory.hpp"
#include "hkas/scheme.hpp"

namespace hkas {

/// Parsed form of H(L), H(L | L), I(L ; L) or I(L ; L | L), where each L is
/// a comma-separated list of "K:<class>" / "S:<class>" names.
struct EntropyExpr {
  enum class Kind { Entropy, MutualInformation };

  Kind kind = Kind::Entropy;
  std::vector<VarId> first;
  std::vector<VarId> second;  // mutual information only
  std::vector<VarId> given;   // empty when unconditioned

  /// Canonical text without whitespace, e.g. "H(K:a|S:b,S:c)".
  std::string to_string() const;
};

/// Grammar (whitespace-insensitive):
///   expr := 'H(' list ('|' list)? ')' | 'I(' list ';' list ('|' list)? ')'
///   list := var (',' var)*
///   var  := ('K' | 'S') ':' label
/// Throws hkas::SyntaxError with the offending position.
EntropyExpr parse_entropy_expr(std::string_view text);

/// Value in bits against the scheme's distribution. Throws UnknownClass for
/// classes outside the scheme's graph.
double evaluate(const EntropyExpr& expr, const Scheme& s);

}  // namespace hkas
