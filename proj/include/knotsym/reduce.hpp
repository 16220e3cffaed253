#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "knotsym/symbol.hpp"

namespace knotsym {

/// Safety cap on closure sizes. Desk-scale knots stay orders of magnitude
/// below; hitting the cap signals a pathological input and raises
/// ClosureLimitExceeded instead of running away.
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

struct ReductionStep {
  std::string move;  // "r1-:2", "r2-:1,3", ...
  Symbol result;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// Repeatedly applies the first available order-decreasing move (1-gons
/// before 2-gons, ascending base) until none is left. The identity on
/// already-reduced symbols.
Symbol reduce_once(const Symbol& a);
Symbol reduce_once(const Symbol& a, ReductionTrace& trace);

/// The complete set of minimum-order symbols equivalent to the input, all
/// of one order, closed under every change of base and every 3-gon
/// exchange.
struct ReducedSet {
  int order = 0;
  std::vector<Symbol> members;  // sorted canonical forms

  bool contains(const Symbol& s) const;
  friend bool operator==(const ReducedSet&, const ReducedSet&) = default;
};

ReducedSet reduced_set(const Symbol& a,
                       std::size_t closure_cap = kDefaultClosureCap);

/// The order after full reduction: the crossing number of the knot the
/// symbol encodes.
int crossing_number(const Symbol& a);

/// True exactly when the two symbols encode the same oriented knot, i.e.
/// when their reduced sets coincide.
bool knots_equal(const Symbol& a, const Symbol& b,
                 std::size_t closure_cap = kDefaultClosureCap);

struct MoveResult {
  std::string move;
  Symbol result;
};

/// Every move applicable to the symbol whose result stays within
/// max_order: all base changes, 3-gon exchanges and deletions, plus every
/// kink/slide insertion (each twist, orientation and arc choice).
std::vector<MoveResult> enumerate_moves(const Symbol& a, int max_order);

/// Exhaustive breadth-first closure: every symbol reachable from the seed
/// by move sequences that never exceed order_cap. Exponential; meant for
/// validating the reducer, not for users.
std::vector<Symbol> bfs_oracle(const Symbol& a, int order_cap,
                               std::size_t closure_cap = kDefaultClosureCap);

/// The members of least order within a reachable set.
std::vector<Symbol> min_order_stratum(const std::vector<Symbol>& symbols);

}  // namespace knotsym
