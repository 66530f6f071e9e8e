#include "seifert/bands/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "seifert/bands/surface.hpp"
#include "seifert/detail/cursor.hpp"

namespace seifert::bands {

BandWord::BandWord(int strands, std::vector<BandGenerator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("band word needs at least one strand");
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const auto& g = letters_[k];
    if (!(1 <= g.i && g.i < g.j && g.j <= strands_)) {
      throw std::invalid_argument("letter " + std::to_string(k + 1) + " a(" + std::to_string(g.i) +
                                  "," + std::to_string(g.j) + ") is not a band on " +
                                  std::to_string(strands_) + " strands");
    }
  }
}

BandWord BandWord::parse(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect_word("strands");
  cur.expect('=');
  const auto line = cur.line();
  const auto column = cur.column();
  const long long n = cur.number();
  if (n < 1) throw ParseError(line, column, "strand count must be positive");
  cur.expect(';');

  std::vector<BandGenerator> letters;
  while (!cur.done()) {
    const auto l = cur.line();
    const auto c = cur.column();
    cur.expect('a');
    cur.expect('(');
    const long long i = cur.number();
    cur.expect(',');
    const long long j = cur.number();
    cur.expect(')');
    if (!(1 <= i && i < j && j <= n)) {
      throw ParseError(l, c, "a(" + std::to_string(i) + "," + std::to_string(j) +
                                 ") needs 1 <= i < j <= " + std::to_string(n));
    }
    letters.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  return BandWord(static_cast<int>(n), std::move(letters));
}

BandWord BandWord::torus(int k) {
  if (k < 0) throw std::invalid_argument("torus word needs k >= 0");
  return BandWord(2, std::vector<BandGenerator>(static_cast<std::size_t>(k), BandGenerator{1, 2}));
}

std::string BandWord::to_string() const {
  std::ostringstream os;
  os << "strands=" << strands_ << ";";
  for (const auto& g : letters_) os << " a(" << g.i << "," << g.j << ")";
  return os.str();
}

BandWord BandWord::rotated(std::size_t shift) const {
  auto letters = letters_;
  if (!letters.empty())
    std::rotate(letters.begin(), letters.begin() + static_cast<long>(shift % letters.size()),
                letters.end());
  return BandWord(strands_, std::move(letters));
}

std::ostream& operator<<(std::ostream& os, const BandWord& w) { return os << w.to_string(); }

std::vector<int> underlying_permutation(const BandWord& w) {
  std::vector<int> image(static_cast<std::size_t>(w.strands()));
  std::iota(image.begin(), image.end(), 1);
  for (const auto& g : w.letters()) {
    for (auto& p : image) {
      if (p == g.i)
        p = g.j;
      else if (p == g.j)
        p = g.i;
    }
  }
  return image;
}

int boundary_components(const BandWord& w) {
  const auto image = underlying_permutation(w);
  std::vector<bool> seen(image.size(), false);
  int cycles = 0;
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t p = k; !seen[p]; p = static_cast<std::size_t>(image[p] - 1)) seen[p] = true;
  }
  return cycles;
}

int euler_characteristic(const BandWord& w) {
  return w.strands() - static_cast<int>(w.size());
}

int genus(const BandWord& w) {
  if (make_spine(w).components() != 1)
    throw std::domain_error("genus: the spine is disconnected");
  const int twice = 2 - euler_characteristic(w) - boundary_components(w);
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("genus: 2 - chi - b = " + std::to_string(twice) +
                           " is not a nonnegative even number");
  return twice / 2;
}

}  // namespace seifert::bands
