#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotsym {

// Error codes shared across the library. The CLI prints the code name on
// stderr and exits 1 on any of these.
enum class Errc {
  DuplicateLabel,
  MissingLabel,
  LabelOutOfRange,
  SelfPairedLabel,
  EmptySymbol,
  NoSuchArc,
  ArcsNotComparable,
  NotAOneGon,
  NotATwoGon,
  NotAThreeGon,
  ClosureLimitExceeded,
  UnbalancedCrossing,
  SignMismatch,
  SyntaxError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

/// The cyclic label set {1, ..., 2n}: succ(2n) = 1, pred(1) = 2n, and the
/// only consecutive pairs are (x, succ(x)).
struct LabelRing {
  int modulus = 0;  // 2n

  bool contains(int x) const { return x >= 1 && x <= modulus; }
  int succ(int x) const { return x == modulus ? 1 : x + 1; }
  int pred(int x) const { return x == 1 ? modulus : x - 1; }
  bool consecutive(int x, int y) const { return succ(x) == y; }

  /// Reduces an arbitrary integer into {1, ..., 2n}.
  int wrap(long long v) const {
    long long m = ((v - 1) % modulus + modulus) % modulus;
    return static_cast<int>(m + 1);
  }
};

/// One crossing: the label assigned on the over-pass, the label assigned on
/// the under-pass, and the sign (+1 when the under strand leaves to the
/// left of the over strand, -1 otherwise).
struct Crossing {
  int over = 0;
  int under = 0;
  int sign = 0;  // +1 or -1

  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// A basic arc base -> succ(base) when orientation = +1, or the same arc
/// walked backwards when orientation = -1. At order 1 the two arcs between
/// the labels share both endpoints and only the orientation flag
/// disambiguates, so arcs are never reduced to endpoint pairs.
struct MainArc {
  int base = 0;
  int orientation = +1;

  MainArc negated() const { return {base, -orientation}; }
  int first(const LabelRing& ring) const {
    return orientation > 0 ? base : ring.succ(base);
  }
  int last(const LabelRing& ring) const {
    return orientation > 0 ? ring.succ(base) : base;
  }

  friend bool operator==(const MainArc&, const MainArc&) = default;
};

// Arc ordering: ascending base, basic (+) before reversed (-).
inline bool operator<(const MainArc& a, const MainArc& b) {
  if (a.base != b.base) return a.base < b.base;
  return a.orientation > b.orientation;
}

std::string to_string(const MainArc& arc);       // "15+", "10-"
MainArc parse_arc(std::string_view text);

/// A symbol: n signed ordered label pairs whose labels partition
/// {1, ..., 2n}. Crossings are stored sorted by over label, so the stored
/// sequence is the canonical form and equality is plain structural
/// equality. The empty symbol has order 0.
class Symbol {
 public:
  Symbol() = default;

  /// Checks the partition condition and builds the symbol.
  /// Throws Error with DuplicateLabel, MissingLabel, LabelOutOfRange or
  /// SelfPairedLabel on bad input.
  static Symbol validate(const std::vector<Crossing>& raw);

  int order() const { return static_cast<int>(crossings_.size()); }
  bool empty() const { return crossings_.empty(); }
  LabelRing ring() const { return LabelRing{2 * order()}; }

  /// Crossings in canonical order (ascending over label).
  const std::vector<Crossing>& crossings() const { return crossings_; }

  /// +1 if the label is met on the over-pass of its crossing, -1 if on the
  /// under-pass.
  int height(int label) const;

  /// The other label of the crossing containing `label`. An involution
  /// without fixed points.
  int partner(int label) const;

  const Crossing& crossing_of(int label) const;

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.crossings_ == b.crossings_;
  }
  friend auto operator<=>(const Symbol& a, const Symbol& b) {
    return a.crossings_ <=> b.crossings_;
  }

 private:
  void check_label(int label) const;

  std::vector<Crossing> crossings_;
  // label -> 2 * crossing index + (0 over / 1 under); slot_[0] unused
  std::vector<int> slot_;
};

/// The deterministic total ordering of the crossings. Two symbols are equal
/// exactly when their canonical forms are identical.
inline const std::vector<Crossing>& canonical_form(const Symbol& a) {
  return a.crossings();
}

inline bool symbol_equal(const Symbol& a, const Symbol& b) { return a == b; }

/// Text grammar: whitespace-separated crossings "(o,u)+" / "(o,u)-".
/// Empty input denotes the empty symbol. serialize_symbol emits canonical
/// order, and parse_symbol(serialize_symbol(a)) == a.
Symbol parse_symbol(std::string_view text);
std::string serialize_symbol(const Symbol& a);

}  // namespace knotsym
