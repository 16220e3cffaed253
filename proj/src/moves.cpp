#include "knotsym/moves.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace knotsym {

namespace {

void require_theta(int theta) {
  if (theta != 1 && theta != -1)
    throw std::invalid_argument("theta must be +1 or -1");
}

bool is_one_gon_base(const Symbol& a, int base) {
  return a.partner(base) == a.ring().succ(base);
}

// label map after deleting the sorted label set `gone`: w drops by the
// number of deleted labels below it
int compress_label(int x, const std::vector<int>& gone) {
  int below = static_cast<int>(
      std::lower_bound(gone.begin(), gone.end(), x) - gone.begin());
  return x - below;
}

Symbol delete_crossings(const Symbol& a, const std::vector<Crossing>& victims) {
  std::vector<int> gone;
  for (const Crossing& c : victims) {
    gone.push_back(c.over);
    gone.push_back(c.under);
  }
  std::sort(gone.begin(), gone.end());
  std::vector<Crossing> out;
  for (const Crossing& c : a.crossings()) {
    if (std::find(victims.begin(), victims.end(), c) != victims.end())
      continue;
    out.push_back(Crossing{compress_label(c.over, gone),
                           compress_label(c.under, gone), c.sign});
  }
  return Symbol::validate(out);
}

GonWitness make_one_gon(const Symbol& a, int base) {
  GonWitness w;
  w.kind = GonKind::OneGon;
  w.arcs = {MainArc{base, +1}};
  w.crossings = {a.crossing_of(base)};
  return w;
}

GonWitness make_two_gon(const Symbol& a, int lo, int hi) {
  GonWitness w;
  w.kind = GonKind::TwoGon;
  w.arcs = {MainArc{lo, +1}, MainArc{hi, +1}};
  w.crossings = {a.crossing_of(lo), a.crossing_of(a.ring().succ(lo))};
  std::sort(w.crossings.begin(), w.crossings.end());
  if (a.height(lo) > 0) {
    w.top = lo;
    w.bottom = hi;
  } else {
    w.top = hi;
    w.bottom = lo;
  }
  return w;
}

// The single crossing joining an endpoint of arc u to an endpoint of arc
// v, as (endpoint of u, endpoint of v); empty when there is none or more
// than one.
std::optional<std::pair<int, int>> arc_link(const Symbol& a, int u, int v) {
  const LabelRing ring = a.ring();
  std::vector<std::pair<int, int>> found;
  for (int x : {u, ring.succ(u)}) {
    int y = a.partner(x);
    if (y == v || y == ring.succ(v)) found.emplace_back(x, y);
  }
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

}  // namespace

std::vector<GonWitness> find_one_gons(const Symbol& a) {
  std::vector<GonWitness> out;
  const int labels = 2 * a.order();
  std::vector<char> used(labels + 1, 0);
  for (int base = 1; base <= labels; ++base) {
    if (used[base]) continue;
    if (!is_one_gon_base(a, base)) continue;
    used[base] = used[a.ring().succ(base)] = 1;
    out.push_back(make_one_gon(a, base));
  }
  return out;
}

std::optional<GonWitness> one_gon_at(const Symbol& a, int base) {
  if (a.empty() || !a.ring().contains(base)) return std::nullopt;
  if (!is_one_gon_base(a, base)) return std::nullopt;
  return make_one_gon(a, base);
}

std::optional<GonWitness> two_gon_at(const Symbol& a, int base1, int base2) {
  const LabelRing ring = a.ring();
  if (a.empty() || !ring.contains(base1) || !ring.contains(base2))
    return std::nullopt;
  int lo = std::min(base1, base2), hi = std::max(base1, base2);
  if (lo == hi) return std::nullopt;
  if (is_one_gon_base(a, lo) || is_one_gon_base(a, hi)) return std::nullopt;
  const int lo2 = ring.succ(lo), hi2 = ring.succ(hi);
  const bool straight = a.partner(lo) == hi && a.partner(lo2) == hi2;
  const bool crossed = a.partner(lo) == hi2 && a.partner(lo2) == hi;
  if (!straight && !crossed) return std::nullopt;
  if (a.height(lo) != a.height(lo2)) return std::nullopt;
  // a deletable pair cancels in writhe; a same-sign pair is a clasp, and
  // removing it changes the knot
  if (a.crossing_of(lo).sign == a.crossing_of(lo2).sign) return std::nullopt;
  return make_two_gon(a, lo, hi);
}

std::vector<GonWitness> find_two_gons(const Symbol& a) {
  std::vector<GonWitness> out;
  const int labels = 2 * a.order();
  for (int lo = 1; lo <= labels; ++lo)
    for (int hi = lo + 1; hi <= labels; ++hi)
      if (auto w = two_gon_at(a, lo, hi)) out.push_back(*w);
  return out;
}

namespace {

// The three arcs must bound a room: some length-3 cycle runs through
// exactly them. Triples that merely pair up crossing-wise sit on no room
// and sliding across them would tear the diagram.
bool triangle_is_room(const Symbol& a, const std::array<int, 3>& bases) {
  std::set<int> want(bases.begin(), bases.end());
  for (int orient : {+1, -1}) {
    for (Orientation phi : {Orientation::Alpha, Orientation::Delta}) {
      Cycle c = cycle(a, MainArc{bases[0], orient}, phi);
      if (c.arcs.size() != 3) continue;
      std::set<int> got;
      for (const MainArc& arc : c.arcs) got.insert(arc.base);
      if (got == want) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<GonWitness> three_gon_at(const Symbol& a, int base1, int base2,
                                       int base3) {
  const LabelRing ring = a.ring();
  if (a.empty()) return std::nullopt;
  std::array<int, 3> b{base1, base2, base3};
  std::sort(b.begin(), b.end());
  if (!ring.contains(b[0]) || !ring.contains(b[2])) return std::nullopt;
  if (b[0] == b[1] || b[1] == b[2]) return std::nullopt;
  for (int u : b)
    if (is_one_gon_base(a, u)) return std::nullopt;

  auto l01 = arc_link(a, b[0], b[1]);
  auto l02 = arc_link(a, b[0], b[2]);
  auto l12 = arc_link(a, b[1], b[2]);
  if (!l01 || !l02 || !l12) return std::nullopt;
  // each arc must spend its two endpoints on two different crossings
  if (l01->first == l02->first) return std::nullopt;
  if (l01->second == l12->first) return std::nullopt;
  if (l02->second == l12->second) return std::nullopt;

  GonWitness w;
  w.kind = GonKind::ThreeGon;
  w.arcs = {MainArc{b[0], +1}, MainArc{b[1], +1}, MainArc{b[2], +1}};
  w.crossings = {a.crossing_of(l01->first), a.crossing_of(l02->first),
                 a.crossing_of(l12->first)};
  std::sort(w.crossings.begin(), w.crossings.end());
  if (w.crossings[0] == w.crossings[1] || w.crossings[1] == w.crossings[2])
    return std::nullopt;

  int tops = 0, mids = 0, bots = 0;
  for (int u : b) {
    int h = a.height(u) + a.height(ring.succ(u));
    if (h == 2) {
      w.top = u;
      ++tops;
    } else if (h == -2) {
      w.bottom = u;
      ++bots;
    } else {
      w.middle = u;
      ++mids;
    }
  }
  if (tops != 1 || mids != 1 || bots != 1) return std::nullopt;
  if (!triangle_is_room(a, b)) return std::nullopt;
  return w;
}

std::vector<GonWitness> find_three_gons(const Symbol& a) {
  std::vector<GonWitness> out;
  const int labels = 2 * a.order();
  for (int x = 1; x <= labels; ++x)
    for (int y = x + 1; y <= labels; ++y)
      for (int z = y + 1; z <= labels; ++z)
        if (auto w = three_gon_at(a, x, y, z)) out.push_back(*w);
  return out;
}

Symbol apply_beta(const Symbol& a, int new_base) {
  if (a.empty()) {
    if (new_base != 0)
      throw Error(Errc::LabelOutOfRange,
                  "the empty symbol only admits the trivial relabeling");
    return a;
  }
  const LabelRing ring = a.ring();
  if (!ring.contains(new_base))
    throw Error(Errc::LabelOutOfRange,
                "base " + std::to_string(new_base) + " outside 1.." +
                    std::to_string(ring.modulus));
  const int shift = new_base - 1;
  std::vector<Crossing> out;
  out.reserve(a.crossings().size());
  for (const Crossing& c : a.crossings())
    out.push_back(Crossing{ring.wrap(c.over + shift), ring.wrap(c.under + shift),
                           c.sign});
  return Symbol::validate(out);
}

Symbol apply_iso(const Symbol& a) { return a; }

Symbol apply_omega1_plus(const Symbol& a, int arc_base, int theta,
                         Orientation phi) {
  require_theta(theta);
  if (a.empty()) {
    if (arc_base != 0)
      throw Error(Errc::NoSuchArc, "the empty symbol has no arcs");
  } else if (!a.ring().contains(arc_base)) {
    throw Error(Errc::NoSuchArc, "no basic arc with base " +
                                     std::to_string(arc_base));
  }
  const int k = arc_base;
  std::vector<Crossing> out;
  out.reserve(a.crossings().size() + 1);
  auto lift = [&](int x) { return x <= k ? x : x + 2; };
  for (const Crossing& c : a.crossings())
    out.push_back(Crossing{lift(c.over), lift(c.under), c.sign});
  const int pi = orientation_sign(phi);
  if (theta > 0)
    out.push_back(Crossing{k + 2, k + 1, pi * theta});
  else
    out.push_back(Crossing{k + 1, k + 2, pi * theta});
  return Symbol::validate(out);
}

Symbol apply_omega1_minus(const Symbol& a, const GonWitness& gon) {
  if (gon.kind != GonKind::OneGon || gon.arcs.size() != 1)
    throw Error(Errc::NotAOneGon, "witness is not a 1-gon");
  auto actual = one_gon_at(a, gon.arcs[0].base);
  if (!actual || actual->crossings != gon.crossings)
    throw Error(Errc::NotAOneGon,
                "arc " + to_string(gon.arcs[0]) + " is not a 1-gon here");
  return delete_crossings(a, actual->crossings);
}

std::vector<Orientation> slide_orientations(const Symbol& a, const MainArc& e1,
                                            const MainArc& e2) {
  if (a.empty())
    return {Orientation::Alpha, Orientation::Delta};
  const MainArc lo{std::min(e1.base, e2.base), +1};
  const MainArc hi{std::max(e1.base, e2.base), +1};
  std::vector<Orientation> out;
  for (Orientation phi : {Orientation::Alpha, Orientation::Delta}) {
    Cycle room = cycle(a, lo, negated(phi));
    if (room.contains(hi) || room.contains(hi.negated())) out.push_back(phi);
  }
  return out;
}

Symbol apply_omega2_plus(const Symbol& a, const MainArc& e1, const MainArc& e2,
                         int theta, Orientation phi) {
  require_theta(theta);
  const int pi = orientation_sign(phi);
  int aa, bb, rho;
  if (a.empty()) {
    if (e1.base != 0 || e2.base != 0)
      throw Error(Errc::NoSuchArc, "the empty symbol has no arcs");
    aa = bb = 0;
    rho = +1;
  } else {
    if (!a.ring().contains(e1.base) || !a.ring().contains(e2.base))
      throw Error(Errc::NoSuchArc, "no such basic arc");
    if (e1.orientation != +1 || e2.orientation != +1)
      throw std::invalid_argument("the slide takes basic arcs");
    aa = e1.base;
    bb = e2.base;
    if (aa > bb) {
      std::swap(aa, bb);
      theta = -theta;  // placement is antisymmetric in the arc order
    }
    CycleSense sense = cycle_sense(a, MainArc{aa, +1}, MainArc{bb, +1});
    if (sense == CycleSense::Incomparable)
      throw Error(Errc::ArcsNotComparable,
                  "arcs " + std::to_string(aa) + " and " + std::to_string(bb) +
                      " share no cycle either way");
    rho = sense == CycleSense::Same ? +1 : -1;
    // the slide crosses a room both arcs bound; phi names that room's
    // orientation, so only matching choices are moves
    Cycle room = cycle(a, MainArc{aa, +1}, negated(phi));
    if (!room.contains(MainArc{bb, +1}) &&
        !room.contains(MainArc{bb, -1}))
      throw Error(Errc::ArcsNotComparable,
                  "arcs " + std::to_string(aa) + " and " + std::to_string(bb) +
                      " bound no common room of orientation " +
                      std::string(to_string(phi)));
  }
  std::vector<Crossing> out;
  out.reserve(a.crossings().size() + 2);
  auto lift = [&](int x) {
    if (x <= aa) return x;
    if (aa < bb && x <= bb) return x + 2;
    return x + 4;
  };
  for (const Crossing& c : a.crossings())
    out.push_back(Crossing{lift(c.over), lift(c.under), c.sign});
  const int far1 = bb + (7 + rho) / 2;
  const int far2 = bb + (7 - rho) / 2;
  if (theta > 0) {
    out.push_back(Crossing{far1, aa + 1, pi * theta * rho});
    out.push_back(Crossing{far2, aa + 2, -pi * theta * rho});
  } else {
    out.push_back(Crossing{aa + 1, far1, pi * theta * rho});
    out.push_back(Crossing{aa + 2, far2, -pi * theta * rho});
  }
  return Symbol::validate(out);
}

Symbol apply_omega2_minus(const Symbol& a, const GonWitness& gon) {
  if (gon.kind != GonKind::TwoGon || gon.arcs.size() != 2)
    throw Error(Errc::NotATwoGon, "witness is not a 2-gon");
  auto actual = two_gon_at(a, gon.arcs[0].base, gon.arcs[1].base);
  if (!actual || actual->crossings != gon.crossings)
    throw Error(Errc::NotATwoGon,
                "arcs " + to_string(gon.arcs[0]) + ", " +
                    to_string(gon.arcs[1]) + " form no 2-gon here");
  return delete_crossings(a, actual->crossings);
}

Symbol apply_omega3(const Symbol& a, const GonWitness& gon) {
  if (gon.kind != GonKind::ThreeGon || gon.arcs.size() != 3)
    throw Error(Errc::NotAThreeGon, "witness is not a 3-gon");
  auto actual = three_gon_at(a, gon.arcs[0].base, gon.arcs[1].base,
                             gon.arcs[2].base);
  if (!actual || actual->crossings != gon.crossings)
    throw Error(Errc::NotAThreeGon, "arcs form no 3-gon here");

  const LabelRing ring = a.ring();
  std::vector<int> companion(ring.modulus + 1, 0);
  for (const MainArc& arc : actual->arcs) {
    int u = arc.base, v = ring.succ(arc.base);
    companion[u] = v;
    companion[v] = u;
  }
  std::vector<Crossing> out;
  out.reserve(a.crossings().size());
  for (const Crossing& c : a.crossings()) {
    if (std::find(actual->crossings.begin(), actual->crossings.end(), c) !=
        actual->crossings.end())
      out.push_back(Crossing{companion[c.over], companion[c.under], c.sign});
    else
      out.push_back(c);
  }
  return Symbol::validate(out);
}

}  // namespace knotsym
