#include "nsphere/word.hpp"

#include <algorithm>
#include <charconv>

#include "nsphere/errors.hpp"

namespace nsphere {

void Word::check_alphabet(int n) const {
  for (int l : letters) {
    if (l < 1 || l > n) {
      throw InvalidInput("letter " + std::to_string(l) + " outside {1.." + std::to_string(n) +
                         "}");
    }
  }
}

Word Word::reversed() const { return Word(std::vector<int>(letters.rbegin(), letters.rend())); }

Word Word::rotated(std::size_t shift) const {
  Word out = *this;
  if (!out.empty()) std::rotate(out.letters.begin(), out.letters.begin() + shift % size(), out.letters.end());
  return out;
}

Word Word::relabeled(std::span<const int> permutation) const {
  Word out = *this;
  for (int& l : out.letters) l = permutation[static_cast<std::size_t>(l - 1)];
  return out;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw InvalidInput("bad word '" + std::string(text) + "': expected comma-separated indices");
    }
    if (value < 1) throw InvalidInput("word letters are 1-based; got " + std::to_string(value));
    out.letters.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Word constant_word(std::size_t length, int letter) {
  return Word(std::vector<int>(length, letter));
}

std::vector<Word> words_of_length(int n, std::size_t length) {
  std::vector<Word> out;
  std::vector<int> current(length, 1);
  while (true) {
    out.emplace_back(current);
    // Odometer increment, last letter fastest.
    std::size_t i = length;
    while (i > 0 && current[i - 1] == n) current[--i] = 1;
    if (i == 0) break;
    ++current[i - 1];
  }
  return out;
}

std::vector<Word> words_up_to(int n, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto level = words_of_length(n, len);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace nsphere
