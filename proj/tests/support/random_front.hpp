#ifndef SEIFERT_TESTS_RANDOM_FRONT_HPP
#define SEIFERT_TESTS_RANDOM_FRONT_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "seifert/legendrian/front.hpp"

namespace oracle {

using seifert::legendrian::EventKind;
using seifert::legendrian::FrontEvent;

struct FrontTrace {
  int components = 0;
  std::vector<int> signs;  // per event; 0 for cusps
};

// Builds the front as an explicit graph on (slice, position) nodes, walks each
// cycle, and reads crossing signs from the geometric cross product: the over
// strand runs along d_f (1, -1), the under strand along d_r (1, 1).
inline FrontTrace trace_front(const std::vector<FrontEvent>& events) {
  using Node = std::pair<int, int>;
  std::map<Node, std::vector<Node>> adj;
  const auto link = [&](Node a, Node b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  int live = 0;
  for (int k = 0; k < static_cast<int>(events.size()); ++k) {
    const auto& e = events[static_cast<std::size_t>(k)];
    const int q = e.position;
    switch (e.kind) {
      case EventKind::LeftCusp:
        for (int p = 0; p < live; ++p) link({k, p}, {k + 1, p < q ? p : p + 2});
        link({k + 1, q}, {k + 1, q + 1});
        live += 2;
        break;
      case EventKind::RightCusp:
        for (int p = 0; p < live; ++p)
          if (p != q && p != q + 1) link({k, p}, {k + 1, p < q ? p : p - 2});
        link({k, q}, {k, q + 1});
        live -= 2;
        break;
      case EventKind::Crossing:
        for (int p = 0; p < live; ++p) link({k, p}, {k + 1, p == q ? q + 1 : (p == q + 1 ? q : p)});
        break;
    }
  }

  FrontTrace out;
  out.signs.assign(events.size(), 0);
  std::map<std::pair<Node, Node>, int> step_dir;  // oriented step -> +1 right, -1 left
  std::map<Node, bool> seen;
  for (const auto& [start, nbrs] : adj) {
    if (seen[start]) continue;
    ++out.components;
    Node prev = start;
    Node cur = nbrs[0];
    seen[start] = true;
    step_dir[{prev, cur}] = cur.first > prev.first ? 1 : (cur.first < prev.first ? -1 : 0);
    while (cur != start) {
      seen[cur] = true;
      const auto& n = adj[cur];
      const Node next = n[0] == prev ? n[1] : n[0];
      step_dir[{cur, next}] = next.first > cur.first ? 1 : (next.first < cur.first ? -1 : 0);
      prev = cur;
      cur = next;
    }
  }
  // a sits in slice k and b in slice k + 1: traversing a -> b runs rightward.
  const auto direction = [&](Node a, Node b) { return step_dir.count({a, b}) ? 1 : -1; };
  for (int k = 0; k < static_cast<int>(events.size()); ++k) {
    const auto& e = events[static_cast<std::size_t>(k)];
    if (e.kind != EventKind::Crossing) continue;
    const int q = e.position;
    const int df = direction({k, q + 1}, {k + 1, q});
    const int dr = direction({k, q}, {k + 1, q + 1});
    const int ox = df, oy = -df, ux = dr, uy = dr;
    const int cross = ox * uy - oy * ux;
    out.signs[static_cast<std::size_t>(k)] = cross > 0 ? 1 : -1;
  }
  return out;
}

// A random valid event word with at most max_events events. Knot-only words
// get their crossing signs from trace_front; otherwise signs are random.
inline std::vector<FrontEvent> random_front(std::mt19937_64& rng, int max_events, bool knot_only) {
  for (;;) {
    std::vector<FrontEvent> ev;
    int live = 0;
    for (;;) {
      const int room = max_events - static_cast<int>(ev.size());
      const int must_close = live / 2;
      if (live == 0 && !ev.empty() && (room < 2 || rng() % 3 == 0)) break;
      if (live == 0 && room < 2) break;
      std::vector<EventKind> options;
      if (room - 1 >= must_close + 1) options.push_back(EventKind::LeftCusp);
      if (live >= 2) options.push_back(EventKind::RightCusp);
      if (live >= 2 && room - 1 >= must_close) options.push_back(EventKind::Crossing);
      const auto kind = options[rng() % options.size()];
      if (kind == EventKind::LeftCusp) {
        ev.push_back(FrontEvent::left(static_cast<int>(rng() % static_cast<unsigned>(live + 1))));
        live += 2;
      } else if (kind == EventKind::RightCusp) {
        ev.push_back(FrontEvent::right(static_cast<int>(rng() % static_cast<unsigned>(live - 1))));
        live -= 2;
      } else {
        ev.push_back(FrontEvent::cross(static_cast<int>(rng() % static_cast<unsigned>(live - 1)), rng() % 2 ? 1 : -1));
      }
    }
    if (ev.empty()) continue;
    const auto t = trace_front(ev);
    if (knot_only && t.components != 1) continue;
    if (t.components == 1)
      for (std::size_t k = 0; k < ev.size(); ++k)
        if (ev[k].kind == EventKind::Crossing) ev[k].sign = t.signs[k];
    return ev;
  }
}

}  // namespace oracle

#endif  // SEIFERT_TESTS_RANDOM_FRONT_HPP
