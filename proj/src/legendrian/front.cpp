#include "seifert/legendrian/front.hpp"

#include <algorithm>
#include <sstream>

#include "seifert/detail/cursor.hpp"
#include "trace.hpp"

namespace seifert::legendrian {

InvalidFront::InvalidFront(std::size_t event, const std::string& what)
    : std::invalid_argument("event " + std::to_string(event + 1) + ": " + what), event_(event) {}

void validate_events(const std::vector<FrontEvent>& events) {
  int live = 0;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    const int p = e.position;
    switch (e.kind) {
      case EventKind::LeftCusp:
        if (p < 0 || p > live)
          throw InvalidFront(k, "left cusp at " + std::to_string(p) + " outside 0.." + std::to_string(live));
        live += 2;
        break;
      case EventKind::RightCusp:
      case EventKind::Crossing:
        if (p < 0 || p + 1 >= live)
          throw InvalidFront(k, std::string(e.kind == EventKind::Crossing ? "crossing" : "right cusp") +
                                    " at " + std::to_string(p) + " needs strands " + std::to_string(p) +
                                    " and " + std::to_string(p + 1) + " but " + std::to_string(live) +
                                    " are live");
        if (e.kind == EventKind::RightCusp)
          live -= 2;
        else if (e.sign != 1 && e.sign != -1)
          throw InvalidFront(k, "crossing sign must be + or -");
        break;
    }
  }
  if (live != 0)
    throw InvalidFront(events.size(), std::to_string(live) + " strands left open; cusps are unbalanced");
}

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events) : events_(std::move(events)) {
  validate_events(events_);
  int live = 0;
  for (const auto& e : events_) {
    if (e.kind == EventKind::LeftCusp) live += 2;
    if (e.kind == EventKind::RightCusp) live -= 2;
    max_strands_ = std::max(max_strands_, live);
  }
  const auto trace = detail::trace(events_);
  components_ = trace.components;
  if (components_ != 1) return;
  for (std::size_t k = 0; k < events_.size(); ++k) {
    const auto& e = events_[k];
    if (e.kind != EventKind::Crossing) continue;
    const int traced = trace.crossing_sign(k);
    if (traced != e.sign)
      throw InvalidFront(k, std::string("stored sign ") + (e.sign > 0 ? '+' : '-') +
                                " disagrees with the traced orientation (" + (traced > 0 ? '+' : '-') +
                                ")");
  }
}

FrontDiagram FrontDiagram::parse(std::string_view text) {
  seifert::detail::Cursor cur(text);
  std::vector<FrontEvent> events;
  while (!cur.done()) {
    const char c = cur.peek();
    if (c != 'L' && c != 'R' && c != 'X') cur.fail(std::string("expected L, R or X, found '") + c + "'");
    cur.advance();
    const int p = static_cast<int>(cur.number());
    if (c == 'L') {
      events.push_back(FrontEvent::left(p));
    } else if (c == 'R') {
      events.push_back(FrontEvent::right(p));
    } else {
      cur.expect(':');
      if (cur.accept('+'))
        events.push_back(FrontEvent::cross(p, 1));
      else if (cur.accept('-'))
        events.push_back(FrontEvent::cross(p, -1));
      else
        cur.fail("expected '+' or '-' after ':'");
    }
  }
  return FrontDiagram(std::move(events));
}

std::string FrontDiagram::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < events_.size(); ++k) {
    const auto& e = events_[k];
    if (k) os << ' ';
    switch (e.kind) {
      case EventKind::LeftCusp: os << 'L' << e.position; break;
      case EventKind::RightCusp: os << 'R' << e.position; break;
      case EventKind::Crossing: os << 'X' << e.position << ':' << (e.sign > 0 ? '+' : '-'); break;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FrontDiagram& f) { return os << f.to_string(); }

CuspCount cusps(const FrontDiagram& f) {
  CuspCount c;
  for (const auto& e : f.events()) {
    if (e.kind == EventKind::LeftCusp) ++c.left;
    if (e.kind == EventKind::RightCusp) ++c.right;
  }
  return c;
}

std::size_t crossing_count(const FrontDiagram& f) {
  return static_cast<std::size_t>(std::count_if(f.events().begin(), f.events().end(),
                                                [](const FrontEvent& e) { return e.kind == EventKind::Crossing; }));
}

int writhe(const FrontDiagram& f) {
  int w = 0;
  for (const auto& e : f.events())
    if (e.kind == EventKind::Crossing) w += e.sign;
  return w;
}

int thurston_bennequin(const FrontDiagram& f) {
  if (f.components() != 1)
    throw std::domain_error("thurston_bennequin: front has " + std::to_string(f.components()) +
                            " components, expected a knot");
  return writhe(f) - static_cast<int>(cusps(f).total() / 2);
}

std::vector<int> traced_crossing_signs(const FrontDiagram& f) {
  const auto trace = detail::trace(f.events());
  std::vector<int> out(f.size(), 0);
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f.events()[k].kind == EventKind::Crossing) out[k] = trace.crossing_sign(k);
  return out;
}

FrontDiagram family_front(int n) {
  if (n < 1) throw std::invalid_argument("family_front: n must be at least 1");
  std::vector<FrontEvent> events{FrontEvent::left(0), FrontEvent::left(2)};
  for (int k = 0; k < 2 * n + 1; ++k) events.push_back(FrontEvent::cross(1, 1));
  events.push_back(FrontEvent::right(2));
  events.push_back(FrontEvent::right(0));
  return FrontDiagram(std::move(events));
}

FrontDiagram unknot_front() { return FrontDiagram({FrontEvent::left(0), FrontEvent::right(0)}); }

namespace {

int net(const FrontEvent& e) {
  if (e.kind == EventKind::LeftCusp) return 2;
  if (e.kind == EventKind::RightCusp) return -2;
  return 0;
}

// Footprints on the doubled line: strand s sits at 2s + 1, the gap below it
// at 2s.
std::pair<int, int> input_span(const FrontEvent& e) {
  const int p = e.position;
  if (e.kind == EventKind::LeftCusp) return {2 * p, 2 * p};
  return {2 * p + 1, 2 * p + 3};
}

std::pair<int, int> output_span(const FrontEvent& e) {
  const int p = e.position;
  if (e.kind == EventKind::RightCusp) return {2 * p, 2 * p};
  return {2 * p + 1, 2 * p + 3};
}

}  // namespace

std::optional<FrontDiagram> commute(const FrontDiagram& f, std::size_t k) {
  if (k + 1 >= f.size()) return std::nullopt;
  FrontEvent first = f.events()[k];
  FrontEvent second = f.events()[k + 1];
  const auto [lo1, hi1] = output_span(first);
  const auto [lo2, hi2] = input_span(second);
  if (hi2 < lo1) {
    first.position += net(second);
  } else if (lo2 > hi1) {
    second.position -= net(first);
  } else {
    return std::nullopt;
  }
  auto events = f.events();
  events[k] = second;
  events[k + 1] = first;
  try {
    return FrontDiagram(std::move(events));
  } catch (const InvalidFront&) {
    return std::nullopt;
  }
}

}  // namespace seifert::legendrian
