#include "knotsym/reduce.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "knotsym/cycles.hpp"
#include "knotsym/moves.hpp"

namespace knotsym {

namespace {

std::string gon_descriptor(const GonWitness& gon) {
  switch (gon.kind) {
    case GonKind::OneGon:
      return "r1-:" + std::to_string(gon.arcs[0].base);
    case GonKind::TwoGon:
      return "r2-:" + std::to_string(gon.arcs[0].base) + "," +
             std::to_string(gon.arcs[1].base);
    case GonKind::ThreeGon:
      return "r3:" + std::to_string(gon.crossings[0].over) + "," +
             std::to_string(gon.crossings[0].under);
  }
  return "?";
}

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap)
    throw Error(Errc::ClosureLimitExceeded,
                "closure exceeded " + std::to_string(cap) + " symbols");
}

}  // namespace

Symbol reduce_once(const Symbol& a) {
  ReductionTrace trace;
  return reduce_once(a, trace);
}

Symbol reduce_once(const Symbol& a, ReductionTrace& trace) {
  Symbol cur = a;
  for (;;) {
    auto ones = find_one_gons(cur);
    if (!ones.empty()) {
      Symbol next = apply_omega1_minus(cur, ones.front());
      trace.steps.push_back({gon_descriptor(ones.front()), next});
      cur = std::move(next);
      continue;
    }
    auto twos = find_two_gons(cur);
    if (!twos.empty()) {
      Symbol next = apply_omega2_minus(cur, twos.front());
      trace.steps.push_back({gon_descriptor(twos.front()), next});
      cur = std::move(next);
      continue;
    }
    return cur;
  }
}

bool ReducedSet::contains(const Symbol& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

// Worklist closure of the reduction endpoint under base changes and
// triangle exchanges. A neutral image can expose a fresh 1- or 2-gon even
// though its source had none (the exchange may re-pair a crossing into a
// deletable pattern), so any such symbol is reduced further and its own
// closure explored; the members of least order form the reduced set.
ReducedSet reduced_set(const Symbol& a, std::size_t closure_cap) {
  std::set<Symbol> visited;
  std::set<Symbol> settled;  // momentarily reduced symbols seen
  std::deque<Symbol> work{reduce_once(a)};
  while (!work.empty()) {
    Symbol cur = std::move(work.front());
    work.pop_front();
    if (!visited.insert(cur).second) continue;
    check_cap(visited.size(), closure_cap);
    if (!find_one_gons(cur).empty() || !find_two_gons(cur).empty()) {
      work.push_back(reduce_once(cur));
      continue;
    }
    settled.insert(cur);
    const int labels = 2 * cur.order();
    for (int base = 1; base <= labels; ++base)
      work.push_back(apply_beta(cur, base));
    for (const GonWitness& gon : find_three_gons(cur))
      work.push_back(apply_omega3(cur, gon));
  }
  ReducedSet out;
  out.order = settled.begin()->order();
  for (const Symbol& s : settled) out.order = std::min(out.order, s.order());
  for (const Symbol& s : settled)
    if (s.order() == out.order) out.members.push_back(s);
  return out;
}

int crossing_number(const Symbol& a) { return reduced_set(a).order; }

bool knots_equal(const Symbol& a, const Symbol& b, std::size_t closure_cap) {
  return reduced_set(a, closure_cap) == reduced_set(b, closure_cap);
}

std::vector<MoveResult> enumerate_moves(const Symbol& a, int max_order) {
  std::vector<MoveResult> out;
  const int n = a.order();
  const int labels = 2 * n;

  for (int base = 1; base <= labels; ++base)
    out.push_back({"beta:" + std::to_string(base), apply_beta(a, base)});
  for (const GonWitness& gon : find_three_gons(a))
    out.push_back({gon_descriptor(gon), apply_omega3(a, gon)});
  for (const GonWitness& gon : find_one_gons(a))
    out.push_back({gon_descriptor(gon), apply_omega1_minus(a, gon)});
  for (const GonWitness& gon : find_two_gons(a))
    out.push_back({gon_descriptor(gon), apply_omega2_minus(a, gon)});

  auto theta_phi = [](auto&& body) {
    for (int theta : {+1, -1})
      for (Orientation phi : {Orientation::Alpha, Orientation::Delta})
        body(theta, phi);
  };
  auto move_name = [](const char* head, std::string args, int theta,
                      Orientation phi) {
    return std::string(head) + args + "," + (theta > 0 ? "+1" : "-1") + "," +
           to_string(phi);
  };

  if (n + 1 <= max_order) {
    if (n == 0) {
      theta_phi([&](int theta, Orientation phi) {
        out.push_back({move_name("r1+:", "0", theta, phi),
                       apply_omega1_plus(a, 0, theta, phi)});
      });
    } else {
      for (int base = 1; base <= labels; ++base)
        theta_phi([&](int theta, Orientation phi) {
          out.push_back({move_name("r1+:", std::to_string(base), theta, phi),
                         apply_omega1_plus(a, base, theta, phi)});
        });
    }
  }
  if (n + 2 <= max_order) {
    if (n == 0) {
      theta_phi([&](int theta, Orientation phi) {
        out.push_back({move_name("r2+:", "0,0", theta, phi),
                       apply_omega2_plus(a, MainArc{0, +1}, MainArc{0, +1},
                                         theta, phi)});
      });
    } else {
      for (int b1 = 1; b1 <= labels; ++b1)
        for (int b2 = b1; b2 <= labels; ++b2) {
          for (Orientation phi :
               slide_orientations(a, MainArc{b1, +1}, MainArc{b2, +1})) {
            for (int theta : {+1, -1})
              out.push_back(
                  {move_name("r2+:",
                             std::to_string(b1) + "," + std::to_string(b2),
                             theta, phi),
                   apply_omega2_plus(a, MainArc{b1, +1}, MainArc{b2, +1},
                                     theta, phi)});
          }
        }
    }
  }
  return out;
}

std::vector<Symbol> bfs_oracle(const Symbol& a, int order_cap,
                               std::size_t closure_cap) {
  if (a.order() > order_cap)
    throw std::invalid_argument("seed order exceeds the order cap");
  std::set<Symbol> seen{a};
  std::deque<Symbol> work{a};
  while (!work.empty()) {
    Symbol cur = std::move(work.front());
    work.pop_front();
    for (MoveResult& mr : enumerate_moves(cur, order_cap)) {
      if (seen.insert(mr.result).second) {
        check_cap(seen.size(), closure_cap);
        work.push_back(std::move(mr.result));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Symbol> min_order_stratum(const std::vector<Symbol>& symbols) {
  int least = std::numeric_limits<int>::max();
  for (const Symbol& s : symbols) least = std::min(least, s.order());
  std::vector<Symbol> out;
  for (const Symbol& s : symbols)
    if (s.order() == least) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace knotsym
