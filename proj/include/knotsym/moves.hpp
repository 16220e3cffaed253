#pragma once

#include <optional>
#include <vector>

#include "knotsym/cycles.hpp"
#include "knotsym/symbol.hpp"

namespace knotsym {

enum class GonKind { OneGon, TwoGon, ThreeGon };

/// Evidence of a 1-, 2- or 3-gon inside a symbol: the basic arcs involved
/// (ascending by base), the crossings they consume, and the height roles.
/// TwoGon fills top/bottom; ThreeGon fills top/middle/bottom.
struct GonWitness {
  GonKind kind = GonKind::OneGon;
  std::vector<MainArc> arcs;
  std::vector<Crossing> crossings;
  int top = 0;
  int middle = 0;
  int bottom = 0;

  friend bool operator==(const GonWitness&, const GonWitness&) = default;
};

/// All arcs a with (a : succ(a)) a crossing, ascending by a. At order 1
/// both arcs close over the single crossing; only the smaller base is
/// reported so each 1-gon crossing appears once.
std::vector<GonWitness> find_one_gons(const Symbol& a);

/// All unordered pairs of distinct basic arcs a(a+1), b(b+1), neither a
/// 1-gon, whose endpoints pair up as crossings (a:b),(a+1:b+1) or
/// (a:b+1),(a+1:b) of opposite signs, with the heights of a and a+1 equal.
/// The arc whose endpoints sit at height +1 is the top one.
std::vector<GonWitness> find_two_gons(const Symbol& a);

/// All triples of basic arcs pairwise joined by exactly one crossing, the
/// six endpoints distinct, with one arc over both others, one under both,
/// one in between, and the triple bounding a room (a three-arc cycle).
std::vector<GonWitness> find_three_gons(const Symbol& a);

/// Witness lookups for a gon at known arc bases; empty when none is there.
std::optional<GonWitness> one_gon_at(const Symbol& a, int base);
std::optional<GonWitness> two_gon_at(const Symbol& a, int base1, int base2);
std::optional<GonWitness> three_gon_at(const Symbol& a, int base1, int base2,
                                       int base3);

/// Change of base: every label x becomes ((x + a - 2) mod 2n) + 1, taking
/// label 1 to label a. Signs and order are unchanged. On the empty symbol
/// only a = 0 is accepted and the move is trivial.
Symbol apply_beta(const Symbol& a, int new_base);

/// The algebraic isotopy move: the identity.
Symbol apply_iso(const Symbol& a);

/// Adds a kink on the basic arc with the given base (or on the empty
/// symbol when arc_base = 0): labels above the base shift up by two and a
/// new crossing appears on labels base+1, base+2, twisted over (theta = +1)
/// or under (theta = -1), with sign pi_phi * theta.
Symbol apply_omega1_plus(const Symbol& a, int arc_base, int theta,
                         Orientation phi);

/// Removes a 1-gon's crossing; surviving labels compress by natural order.
Symbol apply_omega1_minus(const Symbol& a, const GonWitness& gon);

/// The room orientations across which e1 can slide onto e2: phi qualifies
/// exactly when the negated(phi)-cycle of e1 carries e2 or its reverse.
/// Empty when the arcs share no cycle; both orientations on the empty
/// symbol.
std::vector<Orientation> slide_orientations(const Symbol& a, const MainArc& e1,
                                            const MainArc& e2);

/// Slides one arc across a shared room onto another, adding two crossings
/// of opposite signs; theta picks which arc ends up on top and phi names
/// the room per slide_orientations. Arcs may be given in either order:
/// the pair is normalized to ascending bases, flipping theta when the
/// arcs swap. On the empty symbol pass two zero arcs.
Symbol apply_omega2_plus(const Symbol& a, const MainArc& e1, const MainArc& e2,
                         int theta, Orientation phi);

/// Removes both crossings of a 2-gon; surviving labels compress by natural
/// order.
Symbol apply_omega2_minus(const Symbol& a, const GonWitness& gon);

/// Slides the middle arc of a 3-gon across the opposite crossing: in each
/// of the three crossings every label is replaced by the other endpoint of
/// its arc, keeping slots and signs. An involution on the 3-gon.
Symbol apply_omega3(const Symbol& a, const GonWitness& gon);

}  // namespace knotsym
