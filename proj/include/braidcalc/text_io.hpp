#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "braidcalc/word.hpp"

namespace braidcalc {

// Lexical failure in the word grammar; position is the 1-based character
// offset of the offending input character.
class parse_error : public std::runtime_error {
 public:
  std::size_t position;
  parse_error(std::size_t pos, const std::string& what)
      : std::runtime_error("char " + std::to_string(pos) + ": " + what), position(pos) {}
};

// Grammar: word := token*, token := ("a" | "s" | "S") digits ["^-1"], tokens
// separated by whitespace; empty input is the identity.  Index range checks
// are deferred to context binding.
inline std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  const std::size_t end = text.size();
  auto at = [&](std::size_t j) { return static_cast<unsigned char>(text[j]); };
  while (i < end) {
    if (std::isspace(at(i))) {
      ++i;
      continue;
    }
    Kind kind;
    switch (text[i]) {
      case 'a': kind = Kind::loop; break;
      case 's': kind = Kind::moving_crossing; break;
      case 'S': kind = Kind::fixed_crossing; break;
      default:
        throw parse_error(i + 1, std::string("expected 'a', 's', or 'S', got '") + text[i] + "'");
    }
    ++i;
    if (i >= end || !std::isdigit(at(i)))
      throw parse_error(i + 1, "expected an index after the generator letter");
    std::size_t start = i;
    while (i < end && std::isdigit(at(i))) ++i;
    if (i - start > 9) throw parse_error(start + 1, "index too large");
    int index = std::stoi(std::string(text.substr(start, i - start)));
    int sign = 1;
    if (i < end && text[i] == '^') {
      if (i + 2 >= end || text[i + 1] != '-' || text[i + 2] != '1')
        throw parse_error(i + 1, "expected '^-1'");
      sign = -1;
      i += 3;
      if (i < end && std::isdigit(at(i))) throw parse_error(i + 1, "expected '^-1'");
    }
    out.push_back({kind, index, sign});
  }
  return out;
}

inline MixedWord parse_word(std::string_view text, int m, int n) {
  return word_of(m, n, parse_letters(text));
}

inline std::string print_letters(const std::vector<Letter>& letters) {
  std::string out;
  for (const Letter& x : letters) {
    if (!out.empty()) out += ' ';
    switch (x.kind) {
      case Kind::loop: out += 'a'; break;
      case Kind::moving_crossing: out += 's'; break;
      case Kind::fixed_crossing: out += 'S'; break;
    }
    out += std::to_string(x.index);
    if (x.sign < 0) out += "^-1";
  }
  return out;
}

inline std::string print_word(const MixedWord& w) { return print_letters(w.letters); }

inline std::string presentation_to_json_text(const SurgeryPresentation& pres) {
  nlohmann::json doc;
  doc["m"] = pres.m;
  doc["fixed_word"] = print_word(pres.fixed_word);
  doc["components"] = nlohmann::json::array();
  for (const SurgeryComponent& comp : pres.components) {
    nlohmann::json c;
    c["strands"] = comp.strands;
    c["framing"] = {{"p", comp.framing.p}, {"q", comp.framing.q}};
    doc["components"].push_back(std::move(c));
  }
  return doc.dump(2) + "\n";
}

inline SurgeryPresentation presentation_from_json_text(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text);
  SurgeryPresentation pres;
  pres.m = doc.at("m").get<int>();
  pres.fixed_word = word_of(pres.m, 0, parse_letters(doc.at("fixed_word").get<std::string>()));
  for (const nlohmann::json& c : doc.at("components")) {
    SurgeryComponent comp;
    comp.strands = c.at("strands").get<std::vector<int>>();
    comp.framing.p = c.at("framing").at("p").get<int>();
    comp.framing.q = c.at("framing").at("q").get<int>();
    pres.components.push_back(std::move(comp));
  }
  validate(pres);
  return pres;
}

}  // namespace braidcalc
