#include "conezeta/polylog/word.hpp"

#include <numeric>
#include <stdexcept>

namespace conezeta {

std::string to_string(const Letter& l) { return l.zero ? "w0" : "w[" + to_string(l.root) + "]"; }

std::string to_string(const Word& w) {
  if (w.empty()) return "()";
  std::string s;
  for (const auto& l : w) s += (s.empty() ? "" : " ") + to_string(l);
  return s;
}

namespace {

void shuffle_rec(const Word& a, std::size_t i, const Word& b, std::size_t j, Word& cur, std::map<Word, long>& out) {
  if (i == a.size() && j == b.size()) {
    ++out[cur];
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    shuffle_rec(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    shuffle_rec(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::map<Word, long> shuffle(const Word& a, const Word& b) {
  std::map<Word, long> out;
  Word cur;
  shuffle_rec(a, 0, b, 0, cur, out);
  return out;
}

Word word_from_blocks(const std::vector<int>& k, const std::vector<RootOfUnity>& e) {
  if (k.size() != e.size()) throw std::invalid_argument("word_from_blocks: length mismatch");
  Word w;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1) throw std::invalid_argument("word_from_blocks: k < 1");
    for (int j = 1; j < k[i]; ++j) w.push_back(Letter::omega0());
    w.push_back(Letter::omega(e[i]));
  }
  return w;
}

std::int64_t MZVSymbol::modulus() const {
  std::int64_t n = 1;
  for (const auto& r : roots) n = std::lcm(n, r.order());
  return n;
}

int MZVSymbol::weight() const { return std::accumulate(k.begin(), k.end(), 0); }

bool MZVSymbol::convergent() const {
  if (k.empty()) return true;
  return !(k.back() == 1 && roots.back().is_one());
}

std::string to_string(const MZVSymbol& s) {
  std::string out = "zeta(";
  for (std::size_t i = 0; i < s.k.size(); ++i) out += (i ? "," : "") + std::to_string(s.k[i]);
  out += "; ";
  for (std::size_t i = 0; i < s.roots.size(); ++i) out += (i ? "," : "") + to_string(s.roots[i]);
  return out + ")";
}

void add_to(ZExpression& z, const MZVSymbol& s, const CycloNumber& c) {
  auto it = z.find(s);
  if (it == z.end()) {
    if (!c.is_zero()) z.emplace(s, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) z.erase(it);
}

std::string to_string(const ZExpression& z) {
  if (z.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : z) out += (out.empty() ? "" : " + ") + ("(" + to_string(c) + ")*" + to_string(s));
  return out;
}

SymbolTerm mzv_symbol_from_word(const Word& w) {
  if (w.empty()) return {{}, CycloNumber(1)};
  if (w.front().is_omega1()) throw std::invalid_argument("mzv_symbol_from_word: divergent at 1");
  if (w.back().zero) throw std::invalid_argument("mzv_symbol_from_word: divergent at 0");
  std::vector<int> k;
  std::vector<RootOfUnity> e;
  int run = 1;
  for (const auto& l : w) {
    if (l.zero) {
      ++run;
      continue;
    }
    k.push_back(run);
    e.push_back(l.root);
    run = 1;
  }
  // innermost block becomes a_1
  SymbolTerm out{{{k.rbegin(), k.rend()}, {e.rbegin(), e.rend()}}, CycloNumber(1)};
  RootOfUnity prod;
  for (const auto& r : e) prod = prod * r;
  out.coefficient = CycloNumber(prod.inverse());
  return out;
}

}  // namespace conezeta
