#include "textio.hpp"

#include <cctype>
#include <sstream>

namespace permlat {

std::vector<TokenLine> tokenize_lines(const std::string& text) {
  std::vector<TokenLine> result;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);

    TokenLine line;
    line.number = number;
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) {
        line.tokens.push_back(cur);
        cur.clear();
      }
    };
    for (char c : raw) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == ',' || c == ':') {
        flush();
        line.tokens.push_back(std::string(1, c));
      } else {
        cur += c;
      }
    }
    flush();
    if (!line.tokens.empty()) result.push_back(std::move(line));
  }
  return result;
}

std::vector<std::vector<std::string>> split_on_commas(
    const std::vector<std::string>& tokens) {
  std::vector<std::vector<std::string>> groups(1);
  for (const auto& t : tokens) {
    if (t == ",") {
      groups.emplace_back();
    } else {
      groups.back().push_back(t);
    }
  }
  return groups;
}

}  // namespace permlat
