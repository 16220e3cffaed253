#include "knotsym/cycles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace knotsym {

const char* to_string(Orientation phi) {
  return phi == Orientation::Alpha ? "alpha" : "delta";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "alpha" || text == "a") return Orientation::Alpha;
  if (text == "delta" || text == "d") return Orientation::Delta;
  throw Error(Errc::SyntaxError,
              "orientation must be alpha or delta, got: " + std::string(text));
}

Cycle Cycle::normalized() const {
  if (arcs.size() <= 1) return *this;
  std::size_t best = 0;
  for (std::size_t i = 1; i < arcs.size(); ++i)
    if (arcs[i] < arcs[best]) best = i;
  Cycle out;
  out.orientation = orientation;
  out.arcs.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i)
    out.arcs.push_back(arcs[(best + i) % arcs.size()]);
  return out;
}

bool Cycle::contains(const MainArc& arc) const {
  return std::find(arcs.begin(), arcs.end(), arc) != arcs.end();
}

std::string to_string(const Cycle& c) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    if (i) out << ' ';
    out << to_string(c.arcs[i]);
  }
  out << ']';
  return out.str();
}

namespace {

void require_arc(const Symbol& a, const MainArc& f) {
  if (a.empty())
    throw Error(Errc::EmptySymbol, "the empty symbol has no arcs");
  if (!a.ring().contains(f.base) ||
      (f.orientation != 1 && f.orientation != -1))
    throw std::invalid_argument("not a main arc: base " +
                                std::to_string(f.base));
}

}  // namespace

MainArc turn(const Symbol& a, const MainArc& f, Orientation phi) {
  require_arc(a, f);
  const LabelRing ring = a.ring();
  const int t = f.last(ring);
  const int y = a.partner(t);
  const int product = orientation_sign(phi) * f.orientation *
                      a.crossing_of(t).sign * a.height(y);
  // step from y to the next arc's far endpoint
  if (product < 0) return MainArc{y, +1};
  return MainArc{ring.pred(y), -1};
}

Cycle cycle(const Symbol& a, const MainArc& f, Orientation phi) {
  require_arc(a, f);
  Cycle out;
  out.orientation = phi;
  const std::size_t arc_count = 4 * static_cast<std::size_t>(a.order());
  MainArc cur = f;
  do {
    out.arcs.push_back(cur);
    cur = turn(a, cur, phi);
    if (out.arcs.size() > arc_count)
      throw std::logic_error("turn iteration failed to close");
  } while (!(cur == f));
  return out;
}

CycleSense cycle_sense(const Symbol& a, const MainArc& e1, const MainArc& e2) {
  require_arc(a, e1);
  require_arc(a, e2);
  if (e1.orientation != +1 || e2.orientation != +1)
    throw std::invalid_argument("cycle_sense compares basic arcs only");
  const Cycle ca = cycle(a, e1, Orientation::Alpha);
  const Cycle cd = cycle(a, e1, Orientation::Delta);
  const bool same = ca.contains(e2) || cd.contains(e2);
  const bool opposite = ca.contains(e2.negated()) || cd.contains(e2.negated());
  if (same && opposite)
    throw std::logic_error("cycle sense ill-defined for " + to_string(e1) +
                           " vs " + to_string(e2));
  if (same) return CycleSense::Same;
  if (opposite) return CycleSense::Opposite;
  return CycleSense::Incomparable;
}

std::vector<Cycle> all_cycles(const Symbol& a) {
  if (a.empty())
    throw Error(Errc::EmptySymbol, "the empty symbol has no arcs");
  std::vector<Cycle> out;
  const int labels = 2 * a.order();
  for (Orientation phi : {Orientation::Alpha, Orientation::Delta}) {
    std::vector<bool> covered(2 * labels, false);
    auto index = [&](const MainArc& f) {
      return 2 * (f.base - 1) + (f.orientation > 0 ? 0 : 1);
    };
    for (int base = 1; base <= labels; ++base) {
      for (int orient : {+1, -1}) {
        MainArc seed{base, orient};
        if (covered[index(seed)]) continue;
        Cycle c = cycle(a, seed, phi);
        for (const MainArc& arc : c.arcs) covered[index(arc)] = true;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace knotsym
