#include "knotsym/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace knotsym {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::MissingLabel: return "MissingLabel";
    case Errc::LabelOutOfRange: return "LabelOutOfRange";
    case Errc::SelfPairedLabel: return "SelfPairedLabel";
    case Errc::EmptySymbol: return "EmptySymbol";
    case Errc::NoSuchArc: return "NoSuchArc";
    case Errc::ArcsNotComparable: return "ArcsNotComparable";
    case Errc::NotAOneGon: return "NotAOneGon";
    case Errc::NotATwoGon: return "NotATwoGon";
    case Errc::NotAThreeGon: return "NotAThreeGon";
    case Errc::ClosureLimitExceeded: return "ClosureLimitExceeded";
    case Errc::UnbalancedCrossing: return "UnbalancedCrossing";
    case Errc::SignMismatch: return "SignMismatch";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "UnknownError";
}

std::string to_string(const MainArc& arc) {
  return std::to_string(arc.base) + (arc.orientation > 0 ? "+" : "-");
}

MainArc parse_arc(std::string_view text) {
  if (text.size() < 2)
    throw Error(Errc::SyntaxError, "arc must look like \"15+\" or \"10-\"");
  char tail = text.back();
  int orient = tail == '+' ? +1 : tail == '-' ? -1 : 0;
  if (orient == 0)
    throw Error(Errc::SyntaxError, "arc must end in '+' or '-'");
  int base = 0;
  auto digits = text.substr(0, text.size() - 1);
  auto res = std::from_chars(digits.data(), digits.data() + digits.size(), base);
  if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size())
    throw Error(Errc::SyntaxError, "bad arc base: " + std::string(text));
  return MainArc{base, orient};
}

Symbol Symbol::validate(const std::vector<Crossing>& raw) {
  Symbol symbol;
  const int n = static_cast<int>(raw.size());
  const int labels = 2 * n;
  for (const Crossing& c : raw) {
    if (c.sign != 1 && c.sign != -1)
      throw Error(Errc::SyntaxError, "crossing sign must be +1 or -1");
    if (c.over < 1 || c.over > labels || c.under < 1 || c.under > labels)
      throw Error(Errc::LabelOutOfRange,
                  "label outside 1.." + std::to_string(labels));
    if (c.over == c.under)
      throw Error(Errc::SelfPairedLabel,
                  "label " + std::to_string(c.over) + " paired with itself");
  }
  std::vector<int> count(labels + 1, 0);
  for (const Crossing& c : raw) {
    ++count[c.over];
    ++count[c.under];
  }
  for (int x = 1; x <= labels; ++x) {
    if (count[x] > 1)
      throw Error(Errc::DuplicateLabel,
                  "label " + std::to_string(x) + " appears twice");
  }
  for (int x = 1; x <= labels; ++x) {
    if (count[x] == 0)
      throw Error(Errc::MissingLabel,
                  "label " + std::to_string(x) + " never appears");
  }
  symbol.crossings_ = raw;
  std::sort(symbol.crossings_.begin(), symbol.crossings_.end());
  symbol.slot_.assign(labels + 1, -1);
  for (int i = 0; i < n; ++i) {
    symbol.slot_[symbol.crossings_[i].over] = 2 * i;
    symbol.slot_[symbol.crossings_[i].under] = 2 * i + 1;
  }
  return symbol;
}

void Symbol::check_label(int label) const {
  if (label < 1 || label > 2 * order())
    throw Error(Errc::LabelOutOfRange,
                "label " + std::to_string(label) + " outside 1.." +
                    std::to_string(2 * order()));
}

int Symbol::height(int label) const {
  check_label(label);
  return slot_[label] % 2 == 0 ? +1 : -1;
}

int Symbol::partner(int label) const {
  const Crossing& c = crossing_of(label);
  return c.over == label ? c.under : c.over;
}

const Crossing& Symbol::crossing_of(int label) const {
  check_label(label);
  return crossings_[slot_[label] / 2];
}

namespace {

Crossing parse_crossing_token(std::string_view tok) {
  // "(o,u)+" with no internal whitespace
  auto fail = [&] {
    throw Error(Errc::SyntaxError, "bad crossing token: " + std::string(tok));
  };
  if (tok.size() < 6 || tok.front() != '(') fail();
  char sign_ch = tok.back();
  int sign = sign_ch == '+' ? +1 : sign_ch == '-' ? -1 : 0;
  if (sign == 0 || tok[tok.size() - 2] != ')') fail();
  std::string_view body = tok.substr(1, tok.size() - 3);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) fail();
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty())
      fail();
    return v;
  };
  int over = parse_int(body.substr(0, comma));
  int under = parse_int(body.substr(comma + 1));
  return Crossing{over, under, sign};
}

}  // namespace

Symbol parse_symbol(std::string_view text) {
  std::vector<Crossing> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    raw.push_back(parse_crossing_token(text.substr(i, j - i)));
    i = j;
  }
  return Symbol::validate(raw);
}

std::string serialize_symbol(const Symbol& a) {
  std::ostringstream out;
  bool first = true;
  for (const Crossing& c : a.crossings()) {
    if (!first) out << ' ';
    first = false;
    out << '(' << c.over << ',' << c.under << ')' << (c.sign > 0 ? '+' : '-');
  }
  return out.str();
}

}  // namespace knotsym
