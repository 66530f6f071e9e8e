#ifndef SEIFERT_BANDS_WORD_HPP
#define SEIFERT_BANDS_WORD_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace seifert::bands {

/// Band generator a(i, j): the conjugate of sigma_i that joins strands i and j,
/// 1 <= i < j.
struct BandGenerator {
  int i = 1;
  int j = 2;

  bool operator==(const BandGenerator&) const = default;
};

/// Positive word in band generators on a fixed number of strands.
class BandWord {
 public:
  BandWord() = default;
  /// Throws std::invalid_argument if a letter is out of range.
  BandWord(int strands, std::vector<BandGenerator> letters);

  /// Text form `strands=<n>; a(1,2) a(1,3) ...`. Throws seifert::ParseError.
  static BandWord parse(std::string_view text);

  /// The word a(1,2)^k on two strands.
  static BandWord torus(int k);

  int strands() const { return strands_; }
  const std::vector<BandGenerator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  std::string to_string() const;
  BandWord rotated(std::size_t shift) const;

  bool operator==(const BandWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<BandGenerator> letters_;
};

std::ostream& operator<<(std::ostream& os, const BandWord& w);

/// 1-based permutation: result[k - 1] is where strand k ends up after the
/// transpositions (i j) of the letters are applied in word order.
std::vector<int> underlying_permutation(const BandWord& w);

/// Cycle count of the underlying permutation, i.e. components of the closure.
int boundary_components(const BandWord& w);

int euler_characteristic(const BandWord& w);

/// (2 - chi - b) / 2. Throws std::domain_error for a disconnected spine and
/// std::logic_error if the formula is not a nonnegative integer.
int genus(const BandWord& w);

}  // namespace seifert::bands

#endif  // SEIFERT_BANDS_WORD_HPP
