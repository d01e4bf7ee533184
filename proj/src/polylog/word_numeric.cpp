#include "conezeta/polylog/word_numeric.hpp"

namespace conezeta {

std::complex<double> word_value_series(const Word& w, double y, double eps) {
  using namespace word_numeric_detail;
  if (!(y >= 0 && y < 1)) throw std::invalid_argument("word_value_series: y outside [0, 1)");
  if (w.empty()) return 1.0;
  if (w.back().zero) throw std::invalid_argument("word_value_series: word ends with dx/x");
  int terms = 1;
  double tail = y / (1 - y);
  while (tail > eps && terms < 1000000) {
    tail *= y;
    ++terms;
  }
  std::vector<Kern<double>> ks;
  for (const auto& l : w)
    ks.push_back(l.zero ? Kern<double>{true, {}, {}} : Kern<double>{false, 1.0, root_value<double>(l.root)});
  return suffix_values<double>(ks, y, terms)[0];
}

}  // namespace conezeta
