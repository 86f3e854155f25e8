#pragma once

#include <string>
#include <vector>

namespace permlat {

struct TokenLine {
  int number = 0;  // 1-based line number in the source text
  std::vector<std::string> tokens;
};

// Splits text into whitespace-delimited tokens per line. '#' starts a
// comment; ',' and ':' become their own tokens. Blank lines are dropped.
std::vector<TokenLine> tokenize_lines(const std::string& text);

// Splits groups of tokens on "," separators.
std::vector<std::vector<std::string>> split_on_commas(
    const std::vector<std::string>& tokens);

}  // namespace permlat
