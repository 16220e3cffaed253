#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "corpus.hpp"
#include "knotsym/moves.hpp"
#include "knotsym/reduce.hpp"

using namespace knotsym;
using knotsym::testing::trefoil_right;

namespace {

// Literal scan for arc triples satisfying the triangle conditions, kept
// independent of the detection code: try every ordered six-tuple of
// endpoint assignments, then confirm the triple bounds a room by walking
// the cycles through the first arc.
bool triple_bounds_room(const Symbol& s, int a1, int a2, int a3) {
  std::set<int> want{a1, a2, a3};
  for (int orient : {+1, -1})
    for (Orientation phi : {Orientation::Alpha, Orientation::Delta}) {
      Cycle c = cycle(s, MainArc{a1, orient}, phi);
      if (c.arcs.size() != 3) continue;
      std::set<int> got;
      for (const MainArc& arc : c.arcs) got.insert(arc.base);
      if (got == want) return true;
    }
  return false;
}

bool has_three_gon_brute(const Symbol& s) {
  const LabelRing ring = s.ring();
  const int labels = ring.modulus;
  for (int a1 = 1; a1 <= labels; ++a1)
    for (int a2 = 1; a2 <= labels; ++a2)
      for (int a3 = 1; a3 <= labels; ++a3) {
        if (a1 == a2 || a2 == a3 || a1 == a3) continue;
        // endpoints in either order per arc
        for (int o1 : {0, 1})
          for (int o2 : {0, 1})
            for (int o3 : {0, 1}) {
              int alpha = o1 ? ring.succ(a1) : a1;
              int beta = o1 ? a1 : ring.succ(a1);
              int gamma = o2 ? ring.succ(a2) : a2;
              int delta = o2 ? a2 : ring.succ(a2);
              int eps = o3 ? ring.succ(a3) : a3;
              int zeta = o3 ? a3 : ring.succ(a3);
              if (s.partner(alpha) != gamma) continue;
              if (s.partner(beta) != eps) continue;
              if (s.partner(delta) != zeta) continue;
              // none of the arcs a 1-gon, no pair a 2-gon
              bool bad = false;
              for (int u : {a1, a2, a3})
                if (s.partner(u) == ring.succ(u)) bad = true;
              if (bad) continue;
              if (two_gon_at(s, a1, a2) || two_gon_at(s, a1, a3) ||
                  two_gon_at(s, a2, a3))
                continue;
              int tops = 0, bots = 0, mids = 0;
              for (int u : {a1, a2, a3}) {
                int h = s.height(u) + s.height(ring.succ(u));
                if (h == 2) ++tops;
                else if (h == -2) ++bots;
                else ++mids;
              }
              if (tops == 1 && bots == 1 && mids == 1 &&
                  triple_bounds_room(s, a1, a2, a3))
                return true;
            }
      }
  return false;
}

}  // namespace

TEST_CASE("one-gon detection") {
  auto gons = find_one_gons(parse_symbol("(1,2)+"));
  REQUIRE(gons.size() == 1);
  CHECK(gons[0].arcs == std::vector<MainArc>{MainArc{1, +1}});

  CHECK(find_one_gons(trefoil_right()).empty());
  CHECK(find_one_gons(Symbol{}).empty());

  // two kinks added onto nothing leave two separate 1-gons
  Symbol two = apply_omega1_plus(apply_omega1_plus(Symbol{}, 0, +1,
                                                   Orientation::Alpha),
                                 2, -1, Orientation::Alpha);
  auto both = find_one_gons(two);
  REQUIRE(both.size() == 2);
  CHECK(both[0].arcs[0].base == 1);
  CHECK(both[1].arcs[0].base == 3);
}

TEST_CASE("two-gon detection") {
  auto gons = find_two_gons(parse_symbol("(4,1)+ (3,2)-"));
  REQUIRE(gons.size() == 1);
  CHECK(gons[0].arcs == std::vector<MainArc>{MainArc{1, +1}, MainArc{3, +1}});
  CHECK(gons[0].bottom == 1);
  CHECK(gons[0].top == 3);

  auto top_first = find_two_gons(parse_symbol("(1,3)+ (2,4)-"));
  REQUIRE(top_first.size() == 1);
  CHECK(top_first[0].top == 1);
  CHECK(top_first[0].bottom == 3);

  // the same pairing with equal signs is a clasp, not a deletable pair
  CHECK(find_two_gons(parse_symbol("(1,3)+ (2,4)+")).empty());

  CHECK(find_two_gons(trefoil_right()).empty());
}

TEST_CASE("three-gon detection matches the brute-force scan") {
  CHECK(find_three_gons(trefoil_right()).empty());
  CHECK(find_three_gons(Symbol{}).empty());
  CHECK_FALSE(has_three_gon_brute(trefoil_right()));

  // search a slide+kink neighborhood of the trefoil for triangles and
  // check the two detectors agree everywhere
  int found = 0;
  for (const MoveResult& slide : enumerate_moves(trefoil_right(), 5)) {
    if (slide.move.rfind("r2+", 0) != 0) continue;
    for (const MoveResult& kink : enumerate_moves(slide.result, 6)) {
      if (kink.move.rfind("r1+", 0) != 0) continue;
      const Symbol& s = kink.result;
      bool brute = has_three_gon_brute(s);
      CHECK(brute == !find_three_gons(s).empty());
      if (brute) ++found;
    }
  }
  CHECK(found > 0);
}

TEST_CASE("change of base") {
  Symbol tre = trefoil_right();
  CHECK(apply_beta(tre, 2) == parse_symbol("(2,5)+ (6,3)+ (4,1)+"));
  CHECK(apply_beta(tre, 1) == tre);
  CHECK(apply_beta(tre, 4) == apply_beta(tre, 2));
  CHECK(apply_beta(Symbol{}, 0) == Symbol{});
  CHECK_THROWS_AS(apply_beta(tre, 7), Error);
  CHECK_THROWS_AS(apply_beta(Symbol{}, 1), Error);

  // composing shifts adds them up
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Symbol s = knotsym::testing::random_numbered_symbol(rng, 1 + trial % 6);
    const int m = s.ring().modulus;
    int a = 1 + static_cast<int>(rng() % m);
    int b = 1 + static_cast<int>(rng() % m);
    int sum = (a + b - 2) % m + 1;
    CHECK(apply_beta(apply_beta(s, a), b) == apply_beta(s, sum));
    CHECK(apply_beta(s, 1) == s);
  }
}

TEST_CASE("isotopy move is the identity") {
  CHECK(apply_iso(Symbol{}) == Symbol{});
  CHECK(apply_iso(trefoil_right()) == trefoil_right());
}

TEST_CASE("kink insertion") {
  CHECK(apply_omega1_plus(Symbol{}, 0, -1, Orientation::Alpha) ==
        parse_symbol("(1,2)-"));
  CHECK(apply_omega1_plus(Symbol{}, 0, +1, Orientation::Alpha) ==
        parse_symbol("(2,1)+"));
  CHECK(apply_omega1_plus(trefoil_right(), 1, +1, Orientation::Alpha) ==
        parse_symbol("(1,6)+ (7,4)+ (5,8)+ (3,2)+"));
  CHECK_THROWS_AS(apply_omega1_plus(Symbol{}, 1, +1, Orientation::Alpha),
                  Error);
  CHECK_THROWS_AS(apply_omega1_plus(trefoil_right(), 0, +1, Orientation::Alpha),
                  Error);
  CHECK_THROWS_AS(apply_omega1_plus(trefoil_right(), 9, +1, Orientation::Alpha),
                  Error);
}

TEST_CASE("kink removal") {
  Symbol one = parse_symbol("(1,2)-");
  auto gon = one_gon_at(one, 1);
  REQUIRE(gon);
  CHECK(apply_omega1_minus(one, *gon) == Symbol{});

  Symbol four = parse_symbol("(1,6)+ (7,4)+ (5,8)+ (3,2)+");
  auto gon2 = one_gon_at(four, 2);
  REQUIRE(gon2);
  CHECK(apply_omega1_minus(four, *gon2) == trefoil_right());

  Symbol pair = parse_symbol("(2,3)- (4,1)+");
  auto gon3 = one_gon_at(pair, 2);
  REQUIRE(gon3);
  CHECK(apply_omega1_minus(pair, *gon3) == parse_symbol("(2,1)+"));

  // stale or wrong witnesses are refused
  CHECK_FALSE(one_gon_at(trefoil_right(), 1));
  CHECK_THROWS_AS(apply_omega1_minus(trefoil_right(), *gon), Error);
}

TEST_CASE("slide insertion") {
  CHECK(apply_omega2_plus(Symbol{}, {0, +1}, {0, +1}, +1, Orientation::Alpha) ==
        parse_symbol("(4,1)+ (3,2)-"));
  CHECK(apply_omega2_plus(Symbol{}, {0, +1}, {0, +1}, -1, Orientation::Delta) ==
        parse_symbol("(1,4)+ (2,3)-"));

  Symbol tre = trefoil_right();
  CHECK(cycle_sense(tre, {1, +1}, {3, +1}) == CycleSense::Same);
  CHECK(slide_orientations(tre, {1, +1}, {3, +1}) ==
        std::vector<Orientation>{Orientation::Alpha});
  Symbol widened =
      apply_omega2_plus(tre, {1, +1}, {3, +1}, +1, Orientation::Alpha);
  CHECK(widened.order() == 5);
  auto gon = two_gon_at(widened, 2, 6);
  REQUIRE(gon);
  CHECK(apply_omega2_minus(widened, *gon) == tre);

  // arcs sharing no cycle either way cannot be slid across each other
  CHECK(cycle_sense(tre, {1, +1}, {2, +1}) == CycleSense::Incomparable);
  CHECK(slide_orientations(tre, {1, +1}, {2, +1}).empty());
  CHECK_THROWS_AS(apply_omega2_plus(tre, {1, +1}, {2, +1}, +1,
                                    Orientation::Alpha),
                  Error);
  // comparable arcs still only slide across a room they both bound
  CHECK_THROWS_AS(apply_omega2_plus(tre, {1, +1}, {3, +1}, +1,
                                    Orientation::Delta),
                  Error);
}

TEST_CASE("slide insertion normalizes the arc order") {
  Symbol tre = trefoil_right();
  int slides = 0;
  for (int b1 = 1; b1 <= 6; ++b1)
    for (int b2 = b1 + 1; b2 <= 6; ++b2)
      for (int theta : {+1, -1})
        for (Orientation phi : slide_orientations(tre, {b1, +1}, {b2, +1})) {
          CHECK(apply_omega2_plus(tre, {b1, +1}, {b2, +1}, theta, phi) ==
                apply_omega2_plus(tre, {b2, +1}, {b1, +1}, -theta, phi));
          ++slides;
        }
  CHECK(slides > 0);
}

TEST_CASE("slide removal") {
  Symbol pair = parse_symbol("(4,1)+ (3,2)-");
  auto gon = two_gon_at(pair, 1, 3);
  REQUIRE(gon);
  CHECK(apply_omega2_minus(pair, *gon) == Symbol{});

  CHECK_FALSE(two_gon_at(trefoil_right(), 1, 3));
  CHECK_THROWS_AS(apply_omega2_minus(trefoil_right(), *gon), Error);
}

TEST_CASE("triangle exchange") {
  // no triangle in the trefoil
  GonWitness fake;
  fake.kind = GonKind::ThreeGon;
  fake.arcs = {MainArc{1, +1}, MainArc{3, +1}, MainArc{5, +1}};
  CHECK_THROWS_AS(apply_omega3(trefoil_right(), fake), Error);

  // build a symbol with a triangle, then exercise the exchange
  int exercised = 0;
  for (const MoveResult& slide : enumerate_moves(trefoil_right(), 5)) {
    if (slide.move.rfind("r2+", 0) != 0) continue;
    for (const MoveResult& kink : enumerate_moves(slide.result, 6)) {
      if (kink.move.rfind("r1+", 0) != 0) continue;
      const Symbol& s = kink.result;
      for (const GonWitness& gon : find_three_gons(s)) {
        ++exercised;
        Symbol swapped = apply_omega3(s, gon);
        CHECK(swapped.order() == s.order());
        CHECK(swapped != s);
        // applying the exchange twice restores the symbol
        auto again = three_gon_at(swapped, gon.arcs[0].base, gon.arcs[1].base,
                                  gon.arcs[2].base);
        REQUIRE(again);
        CHECK(apply_omega3(swapped, *again) == s);

        const LabelRing ring = s.ring();
        std::map<int, int> companion;
        for (const MainArc& arc : gon.arcs) {
          companion[arc.base] = ring.succ(arc.base);
          companion[ring.succ(arc.base)] = arc.base;
        }
        // every consumed crossing is re-paired onto the companions with
        // its sign and slots intact; everything else stays put
        for (const Crossing& c : s.crossings()) {
          bool consumed = std::find(gon.crossings.begin(), gon.crossings.end(),
                                    c) != gon.crossings.end();
          Crossing expect =
              consumed ? Crossing{companion.at(c.over), companion.at(c.under),
                                  c.sign}
                       : c;
          CHECK(std::find(swapped.crossings().begin(),
                          swapped.crossings().end(),
                          expect) != swapped.crossings().end());
        }
        // so each companion inherits its partner's height
        for (const auto& [label, other] : companion)
          CHECK(swapped.height(other) == s.height(label));
      }
      if (exercised > 8) break;
    }
    if (exercised > 8) break;
  }
  CHECK(exercised > 0);
}

TEST_CASE("order arithmetic across all moves") {
  auto corpus = knotsym::testing::random_walk_corpus(0xBEEF, 8, 10, 7);
  for (const Symbol& s : corpus) {
    for (const MoveResult& mr : enumerate_moves(s, s.order() + 2)) {
      int delta = mr.result.order() - s.order();
      if (mr.move.rfind("beta", 0) == 0 || mr.move.rfind("r3", 0) == 0)
        CHECK(delta == 0);
      else if (mr.move.rfind("r1+", 0) == 0)
        CHECK(delta == +1);
      else if (mr.move.rfind("r1-", 0) == 0)
        CHECK(delta == -1);
      else if (mr.move.rfind("r2+", 0) == 0)
        CHECK(delta == +2);
      else if (mr.move.rfind("r2-", 0) == 0)
        CHECK(delta == -2);
      else
        FAIL("unclassified move " << mr.move);
    }
  }
}

TEST_CASE("positive moves leave a gon that undoes them") {
  std::mt19937 rng(0x5EED);
  for (const Symbol& start : {Symbol{}, trefoil_right()}) {
    Symbol cur = start;
    for (int step = 0; step < 400; ++step) {
      const int n = cur.order();
      bool kink = n >= 7 ? true : (rng() % 2 == 0);
      int theta = rng() % 2 ? +1 : -1;
      Orientation phi = rng() % 2 ? Orientation::Alpha : Orientation::Delta;
      if (n == 0) {
        Symbol grown = apply_omega1_plus(cur, 0, theta, phi);
        auto gon = one_gon_at(grown, 1);
        REQUIRE(gon);
        CHECK(apply_omega1_minus(grown, *gon) == cur);
        cur = grown;
        continue;
      }
      if (kink || n >= 7) {
        int base = 1 + static_cast<int>(rng() % (2 * n));
        Symbol grown = apply_omega1_plus(cur, base, theta, phi);
        auto gon = one_gon_at(grown, base + 1);
        REQUIRE(gon);
        CHECK(apply_omega1_minus(grown, *gon) == cur);
        cur = grown;
      } else {
        int b1 = 1 + static_cast<int>(rng() % (2 * n));
        int b2 = 1 + static_cast<int>(rng() % (2 * n));
        auto phis = slide_orientations(cur, {b1, +1}, {b2, +1});
        if (phis.empty()) continue;
        Orientation room = phis[rng() % phis.size()];
        Symbol grown = apply_omega2_plus(cur, {b1, +1}, {b2, +1}, theta, room);
        int a = std::min(b1, b2), b = std::max(b1, b2);
        auto gon = two_gon_at(grown, a + 1, b + 3);
        REQUIRE(gon);
        CHECK(apply_omega2_minus(grown, *gon) == cur);
        cur = grown;
      }
      if (cur.order() > 8) cur = start;
    }
  }
}

TEST_CASE("disjoint gons survive a move on the other one") {
  auto corpus = knotsym::testing::random_walk_corpus(0xD15, 10, 12, 8);
  auto shares_crossing = [](const GonWitness& x, const GonWitness& y) {
    for (const Crossing& c : x.crossings)
      if (std::find(y.crossings.begin(), y.crossings.end(), c) !=
          y.crossings.end())
        return true;
    return false;
  };
  int checked = 0;
  for (const Symbol& s : corpus) {
    std::vector<GonWitness> gons;
    for (auto& g : find_one_gons(s)) gons.push_back(g);
    for (auto& g : find_two_gons(s)) gons.push_back(g);
    for (auto& g : find_three_gons(s)) gons.push_back(g);
    if (gons.size() < 2) continue;
    for (std::size_t i = 0; i < gons.size(); ++i)
      for (std::size_t j = 0; j < gons.size(); ++j) {
        if (i == j || shares_crossing(gons[i], gons[j])) continue;
        // apply the move on gon i; gon j's arcs must survive relabeled
        const GonWitness &x = gons[i], &y = gons[j];
        Symbol after;
        std::vector<int> gone;
        if (x.kind == GonKind::ThreeGon) {
          after = apply_omega3(s, x);
        } else {
          after = x.kind == GonKind::OneGon ? apply_omega1_minus(s, x)
                                            : apply_omega2_minus(s, x);
          for (const Crossing& c : x.crossings) {
            gone.push_back(c.over);
            gone.push_back(c.under);
          }
          std::sort(gone.begin(), gone.end());
        }
        auto mapped = [&](int label) {
          int below = static_cast<int>(
              std::lower_bound(gone.begin(), gone.end(), label) -
              gone.begin());
          return label - below;
        };
        std::vector<int> bases;
        for (const MainArc& arc : y.arcs) bases.push_back(mapped(arc.base));
        ++checked;
        bool inherited = false;
        if (y.kind == GonKind::OneGon)
          inherited = one_gon_at(after, bases[0]).has_value();
        else if (y.kind == GonKind::TwoGon)
          inherited = two_gon_at(after, bases[0], bases[1]).has_value();
        else
          inherited =
              three_gon_at(after, bases[0], bases[1], bases[2]).has_value();
        CHECK(inherited);
      }
  }
  CHECK(checked > 20);
}

TEST_CASE("every move output is a valid symbol") {
  auto corpus = knotsym::testing::random_walk_corpus(0xA11, 8, 10, 7);
  for (const Symbol& s : corpus) {
    for (const MoveResult& mr : enumerate_moves(s, s.order() + 2)) {
      // validate() is re-run on reconstruction; equality means the result
      // round-trips the partition checks
      CHECK(Symbol::validate(mr.result.crossings()) == mr.result);
    }
  }
}
