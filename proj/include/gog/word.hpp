#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gog {

// A generator of the ambient free group or its inverse.
struct Letter {
  int generator = 0;
  int sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {generator, -sign}; }
  auto operator<=>(const Letter&) const = default;
};

// Name of a generator: 'a'..'z' for the first 26, "{k}" beyond.
std::string generator_name(int generator);

// A freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;
  // Freely reduces `letters`.
  explicit Word(const std::vector<Letter>& letters);

  static Word generator(int generator, int sign = 1);

  // Lowercase letters are generators, uppercase their inverses. A letter may
  // be followed by "^-1" to invert it; "1" or "e" alone denotes the identity.
  // Throws ParseError.
  static Word parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  // Largest generator index used, -1 for the identity.
  int max_generator() const;
  bool is_cyclically_reduced() const;
  // Number of letters cancelled when forming (*this) * other.
  std::size_t cancellation_with(const Word& other) const;

  std::string to_string() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Splits on commas and whitespace; empty pieces are ignored.
std::vector<Word> parse_word_list(std::string_view text);
std::string to_string(std::span<const Word> words);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Every freely reduced word of length <= max_length over `rank` generators,
// grouped by length.
std::vector<Word> ball(int rank, int max_length);

}  // namespace gog
