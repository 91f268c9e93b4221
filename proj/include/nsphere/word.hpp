#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nsphere {

/// Monomial x_{i1} ... x_{ik} as its 1-based index sequence. The empty
/// word is the unit.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  std::span<const int> span() const { return letters; }

  /// Throws InvalidInput unless every letter lies in {1..n}.
  void check_alphabet(int n) const;

  Word reversed() const;
  Word rotated(std::size_t shift) const;
  Word relabeled(std::span<const int> permutation) const;

  /// "1,2,2,1"; the empty word prints as "".
  std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Parses "1,2,2,1". Empty text is the empty word. Throws InvalidInput.
Word parse_word(std::string_view text);

Word constant_word(std::size_t length, int letter);

/// All n^length words of the given length, lexicographic.
std::vector<Word> words_of_length(int n, std::size_t length);

/// All words of length <= max_len: by length, then lexicographic.
std::vector<Word> words_up_to(int n, std::size_t max_len);

}  // namespace nsphere
