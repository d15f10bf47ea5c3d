#include <algorithm>
#include <charconv>

#include "curvelab/error.hpp"
#include "curvelab/ideal.hpp"

namespace curvelab {

namespace {

constexpr std::string_view kCup = "∪";
constexpr std::string_view kInf = "∞";

bool consume(std::string_view& text, std::string_view token) {
  if (text.substr(0, token.size()) != token) return false;
  text.remove_prefix(token.size());
  return true;
}

Int consume_int(std::string_view& text, std::string_view original) {
  Int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{}) throw Error(Errc::ParseError, "expected integer in '" + std::string(original) + "'");
  text.remove_prefix(static_cast<std::size_t>(end - text.data()));
  return value;
}

}  // namespace

std::string to_text(const RelativeIdeal& e) {
  const Int t = e.tail_start();
  std::string listed;
  for (Int z : e.window_members()) {
    if (z >= t) break;
    if (!listed.empty()) listed += ',';
    listed += std::to_string(z);
  }
  std::string tail = "[" + std::to_string(t) + "," + std::string(kInf) + ")";
  if (listed.empty()) return tail;
  return "{" + listed + "}" + std::string(kCup) + tail;
}

RelativeIdeal parse_ideal(const NumericalSemigroup& s, std::string_view original) {
  std::string compact;
  for (char c : original) {
    if (c != ' ') compact += c;
  }
  std::string_view text = compact;
  std::vector<Int> listed;
  if (consume(text, "{")) {
    if (!consume(text, "}")) {
      do {
        listed.push_back(consume_int(text, original));
      } while (consume(text, ","));
      if (!consume(text, "}")) throw Error(Errc::ParseError, "unterminated member list in '" + std::string(original) + "'");
    }
    if (!consume(text, kCup) && !consume(text, "U")) {
      throw Error(Errc::ParseError, "expected union sign in '" + std::string(original) + "'");
    }
  }
  if (!consume(text, "[")) throw Error(Errc::ParseError, "expected tail '[t,inf)' in '" + std::string(original) + "'");
  const Int t = consume_int(text, original);
  if (!consume(text, ",") || !(consume(text, kInf) || consume(text, "inf")) || !consume(text, ")") || !text.empty()) {
    throw Error(Errc::ParseError, "malformed tail in '" + std::string(original) + "'");
  }
  std::sort(listed.begin(), listed.end());
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  if (!listed.empty() && listed.back() >= t) {
    throw Error(Errc::ParseError, "listed member not below tail start in '" + std::string(original) + "'");
  }
  auto member = [&](Int z) { return z >= t || std::binary_search(listed.begin(), listed.end(), z); };
  for (Int x : listed) {
    for (Int n : s.minimal_generators()) {
      if (!member(x + n)) {
        throw Error(Errc::ParseError, "'" + std::string(original) + "' is not closed under adding <" + s.to_string() + ">");
      }
    }
  }
  const Int lo = listed.empty() ? t : listed.front();
  return RelativeIdeal::from_predicate(s, lo, member);
}

}  // namespace curvelab
