#ifndef SEIFERT_LEGENDRIAN_FRONT_HPP
#define SEIFERT_LEGENDRIAN_FRONT_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seifert::legendrian {

enum class EventKind { LeftCusp, RightCusp, Crossing };

/// One event of a front, scanned left to right. Positions are 0-based from
/// the bottom. A left cusp at p creates strands p and p + 1 (p may equal the
/// live count); a right cusp at p joins strands p and p + 1; a crossing at p
/// exchanges them. The over strand of a crossing is the one of more negative
/// slope, i.e. the one running from p + 1 down to p.
struct FrontEvent {
  EventKind kind = EventKind::Crossing;
  int position = 0;
  int sign = 1;  // crossings only

  static FrontEvent left(int p) { return {EventKind::LeftCusp, p, 0}; }
  static FrontEvent right(int p) { return {EventKind::RightCusp, p, 0}; }
  static FrontEvent cross(int p, int s) { return {EventKind::Crossing, p, s}; }

  bool operator==(const FrontEvent&) const = default;
};

/// Raised for event words that do not describe a closed front, or whose
/// stored crossing signs contradict the traced orientation of a knot.
class InvalidFront : public std::invalid_argument {
 public:
  InvalidFront(std::size_t event, const std::string& what);
  /// 0-based index of the offending event; the event count for end-of-word
  /// problems.
  std::size_t event() const { return event_; }

 private:
  std::size_t event_;
};

/// Validated front. Construction checks the strand scan; for single-component
/// fronts it also checks every stored crossing sign against the traced one.
class FrontDiagram {
 public:
  FrontDiagram() = default;
  explicit FrontDiagram(std::vector<FrontEvent> events);

  /// Tokens `L<p>`, `R<p>`, `X<p>:+`, `X<p>:-`. Throws seifert::ParseError
  /// for bad syntax and InvalidFront for a bad event word.
  static FrontDiagram parse(std::string_view text);

  const std::vector<FrontEvent>& events() const { return events_; }
  int max_strands() const { return max_strands_; }
  std::size_t size() const { return events_.size(); }
  int components() const { return components_; }

  std::string to_string() const;

  bool operator==(const FrontDiagram& o) const { return events_ == o.events_; }

 private:
  std::vector<FrontEvent> events_;
  int max_strands_ = 0;
  int components_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FrontDiagram& f);

/// Strand-count scan only. Throws InvalidFront.
void validate_events(const std::vector<FrontEvent>& events);

struct CuspCount {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t total() const { return left + right; }
};

CuspCount cusps(const FrontDiagram& f);
std::size_t crossing_count(const FrontDiagram& f);
int writhe(const FrontDiagram& f);

/// writhe - cusps / 2. Throws std::domain_error unless f is a knot.
int thurston_bennequin(const FrontDiagram& f);

/// Orientation of each crossing strand from tracing the front. Entry k
/// belongs to event k and is 0 for cusps; for crossings it is the sign of
/// the oriented crossing, +1 when both strands run in the same x-direction.
/// Components are oriented independently, each starting rightward along the
/// lower branch of its first left cusp.
std::vector<int> traced_crossing_signs(const FrontDiagram& f);

/// Standard front of the Legendrian (2, 2n+1) torus knot: two stacked eyes
/// whose inner strands cross 2n+1 times, `L0 L2 X1:+ ... R2 R0`. Throws
/// std::invalid_argument for n < 1.
FrontDiagram family_front(int n);

/// The two-cusp unknot `L0 R0`.
FrontDiagram unknot_front();

/// Exchanges events k and k + 1 when they act on disjoint strands, adjusting
/// positions; nullopt when they interact. A right cusp followed by a left
/// cusp in the gap it leaves counts as interacting.
std::optional<FrontDiagram> commute(const FrontDiagram& f, std::size_t k);

}  // namespace seifert::legendrian

#endif  // SEIFERT_LEGENDRIAN_FRONT_HPP
