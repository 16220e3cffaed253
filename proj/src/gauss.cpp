#include "knotsym/gauss.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace knotsym {

GaussCode parse_gauss(std::string_view text) {
  GaussCode code;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    if (tok.size() < 3)
      throw Error(Errc::SyntaxError, "bad Gauss token: " + std::string(tok));
    GaussToken t;
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if (head == 'O')
      t.pass = Pass::Over;
    else if (head == 'U')
      t.pass = Pass::Under;
    else
      throw Error(Errc::SyntaxError,
                  "Gauss token must start with O or U: " + std::string(tok));
    char tail = tok.back();
    t.sign = tail == '+' ? +1 : tail == '-' ? -1 : 0;
    if (t.sign == 0)
      throw Error(Errc::SyntaxError,
                  "Gauss token must end in + or -: " + std::string(tok));
    std::string_view digits = tok.substr(1, tok.size() - 2);
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(),
                               t.crossing_id);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size() ||
        t.crossing_id < 1)
      throw Error(Errc::SyntaxError,
                  "bad crossing id in Gauss token: " + std::string(tok));
    code.tokens.push_back(t);
  }
  return code;
}

Symbol from_gauss(const GaussCode& code) {
  struct Visit {
    int over_pos = 0;
    int under_pos = 0;
    int sign = 0;
  };
  std::map<int, Visit> visits;
  int pos = 0;
  for (const GaussToken& t : code.tokens) {
    ++pos;
    Visit& v = visits[t.crossing_id];
    int& slot = t.pass == Pass::Over ? v.over_pos : v.under_pos;
    if (slot != 0)
      throw Error(Errc::UnbalancedCrossing,
                  "crossing " + std::to_string(t.crossing_id) + " passed " +
                      (t.pass == Pass::Over ? "over" : "under") + " twice");
    slot = pos;
    if (v.sign == 0)
      v.sign = t.sign;
    else if (v.sign != t.sign)
      throw Error(Errc::SignMismatch,
                  "crossing " + std::to_string(t.crossing_id) +
                      " carries both signs");
  }
  std::vector<Crossing> raw;
  raw.reserve(visits.size());
  for (const auto& [id, v] : visits) {
    if (v.over_pos == 0 || v.under_pos == 0)
      throw Error(Errc::UnbalancedCrossing,
                  "crossing " + std::to_string(id) + " appears only once");
    raw.push_back(Crossing{v.over_pos, v.under_pos, v.sign});
  }
  return Symbol::validate(raw);
}

}  // namespace knotsym
