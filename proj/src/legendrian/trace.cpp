#include "trace.hpp"

#include <stdexcept>

namespace seifert::legendrian::detail {

namespace {

// A point on the front: the strand at `pos` in slice `slice` (the gap after
// `slice` events), travelling in direction `dir`.
struct Walker {
  std::size_t slice;
  int pos;
  int dir;

  bool operator==(const Walker&) const = default;
};

}  // namespace

Trace trace(const std::vector<FrontEvent>& events) {
  const std::size_t n = events.size();
  Trace t;
  t.falling.assign(n, 0);
  t.rising.assign(n, 0);
  t.cusp_entry.assign(n, 0);
  std::vector<bool> seen(n, false);
  const std::size_t budget = 4 * (n + 1) * (n + 2);

  for (std::size_t start = 0; start < n; ++start) {
    if (events[start].kind != EventKind::LeftCusp || seen[start]) continue;
    seen[start] = true;
    ++t.components;
    const Walker origin{start + 1, events[start].position, +1};
    Walker w = origin;
    std::size_t steps = 0;
    do {
      if (++steps > budget) throw std::logic_error("front trace did not close up");
      if (w.dir > 0) {
        const std::size_t k = w.slice;
        const auto& e = events.at(k);
        const int q = e.position;
        switch (e.kind) {
          case EventKind::LeftCusp:
            w = {k + 1, w.pos >= q ? w.pos + 2 : w.pos, +1};
            break;
          case EventKind::Crossing:
            if (w.pos == q) {
              t.rising[k] = +1;
              w = {k + 1, q + 1, +1};
            } else if (w.pos == q + 1) {
              t.falling[k] = +1;
              w = {k + 1, q, +1};
            } else {
              w = {k + 1, w.pos, +1};
            }
            break;
          case EventKind::RightCusp:
            if (w.pos == q) {
              t.cusp_entry[k] = -1;
              w = {k, q + 1, -1};
            } else if (w.pos == q + 1) {
              t.cusp_entry[k] = +1;
              w = {k, q, -1};
            } else {
              w = {k + 1, w.pos > q + 1 ? w.pos - 2 : w.pos, +1};
            }
            break;
        }
      } else {
        const std::size_t k = w.slice - 1;
        const auto& e = events.at(k);
        const int q = e.position;
        switch (e.kind) {
          case EventKind::LeftCusp:
            if (w.pos == q || w.pos == q + 1) {
              seen[k] = true;
              w = {k + 1, w.pos == q ? q + 1 : q, +1};
            } else {
              w = {k, w.pos > q + 1 ? w.pos - 2 : w.pos, -1};
            }
            break;
          case EventKind::Crossing:
            if (w.pos == q + 1) {
              t.rising[k] = -1;
              w = {k, q, -1};
            } else if (w.pos == q) {
              t.falling[k] = -1;
              w = {k, q + 1, -1};
            } else {
              w = {k, w.pos, -1};
            }
            break;
          case EventKind::RightCusp:
            w = {k, w.pos >= q ? w.pos + 2 : w.pos, -1};
            break;
        }
      }
    } while (!(w == origin));
  }
  return t;
}

}  // namespace seifert::legendrian::detail
