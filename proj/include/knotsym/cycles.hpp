#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knotsym/symbol.hpp"

namespace knotsym {

/// Walking orientation at a crossing: alpha turns positively (left), delta
/// negatively (right).
enum class Orientation { Alpha, Delta };

constexpr int orientation_sign(Orientation phi) {
  return phi == Orientation::Alpha ? +1 : -1;
}
constexpr Orientation negated(Orientation phi) {
  return phi == Orientation::Alpha ? Orientation::Delta : Orientation::Alpha;
}

const char* to_string(Orientation phi);  // "alpha" / "delta"
Orientation parse_orientation(std::string_view text);

/// A cycle: the finite list of distinct main arcs closed under the
/// phi-turn, kept in traversal order beginning at the seed arc. Two cycles
/// are the same cyclic object when some rotation matches; normalized()
/// rotates to the lexicographically least arc.
struct Cycle {
  std::vector<MainArc> arcs;
  Orientation orientation = Orientation::Alpha;

  Cycle normalized() const;
  bool contains(const MainArc& arc) const;

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.orientation == b.orientation &&
           a.normalized().arcs == b.normalized().arcs;
  }
};

std::string to_string(const Cycle& c);  // "[15+ 11+ 3+ 13+ 5+]"

/// The arc that follows f when walking with orientation phi: with t the
/// last endpoint of f, y the partner of t and d the crossing of t, the next
/// arc starts at y and ends at y - pi_phi * pi_f * pi_d * v_y.
MainArc turn(const Symbol& a, const MainArc& f, Orientation phi);

/// Iterates the phi-turn from f until it closes. The result is the same
/// cyclic arc set whichever member arc seeds it.
Cycle cycle(const Symbol& a, const MainArc& f, Orientation phi);

enum class CycleSense {
  Same,          // +1: some cycle contains both arcs
  Opposite,      // -1: some cycle contains e1 and the reverse of e2
  Incomparable,  // neither
};

/// Compares the cycle senses of two basic arcs. Symmetric in its arguments.
CycleSense cycle_sense(const Symbol& a, const MainArc& e1, const MainArc& e2);

/// Every distinct cycle of the symbol, alpha family first, seeded in
/// ascending arc order. Each main arc appears in exactly one alpha-cycle
/// and one delta-cycle.
std::vector<Cycle> all_cycles(const Symbol& a);

}  // namespace knotsym
