#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "conezeta/exact/cyclo.hpp"
#include "conezeta/exact/root_of_unity.hpp"

namespace conezeta {

/// dx/x (zero) or dx/(1 - e x).
struct Letter {
  bool zero = true;
  RootOfUnity root;

  static Letter omega0() { return {}; }
  static Letter omega(const RootOfUnity& e) { return {false, e}; }
  bool is_omega1() const { return !zero && root.is_one(); }

  auto operator<=>(const Letter&) const = default;
};

/// Outermost letter first: (w1 w2 ... wk)(y) = int_0^y w1(t) (w2 ... wk)(t).
using Word = std::vector<Letter>;
using WordCombination = std::map<Word, CycloNumber>;

std::string to_string(const Letter& l);
std::string to_string(const Word& w);

/// Shuffle product with multiplicities.
std::map<Word, long> shuffle(const Word& a, const Word& b);

/// Word (dx/x)^{k1-1} dx/(1-e1 x) ... from blocks.
Word word_from_blocks(const std::vector<int>& k, const std::vector<RootOfUnity>& e);

/// Series sum over a in (N^x)^m of prod roots_j^{a_j} / (a_1^{k_1} (a_1+a_2)^{k_2} ...).
struct MZVSymbol {
  std::vector<int> k;
  std::vector<RootOfUnity> roots;

  std::int64_t modulus() const;
  int weight() const;
  bool convergent() const;
  auto operator<=>(const MZVSymbol&) const = default;
};

std::string to_string(const MZVSymbol& s);

using ZExpression = std::map<MZVSymbol, CycloNumber>;

void add_to(ZExpression& z, const MZVSymbol& s, const CycloNumber& c);
std::string to_string(const ZExpression& z);

struct SymbolTerm {
  MZVSymbol symbol;
  CycloNumber coefficient;
};

/// Value at 1 of a word convergent at both ends, as coefficient * symbol.
/// Throws std::invalid_argument for words starting with omega_1 or ending with omega_0.
SymbolTerm mzv_symbol_from_word(const Word& w);

}  // namespace conezeta
