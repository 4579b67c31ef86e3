#include "gog/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gog/errors.hpp"

namespace gog {

std::string generator_name(int generator) {
  if (generator >= 0 && generator < 26) return std::string(1, char('a' + generator));
  return "{" + std::to_string(generator) + "}";
}

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(int generator, int sign) {
  Word w;
  w.letters_.push_back({generator, sign});
  return w;
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto trimmed_is = [&](std::string_view s) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    return b != std::string_view::npos && text.substr(b, e - b + 1) == s;
  };
  if (trimmed_is("1") || trimmed_is("e")) return Word();
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Letter l;
    if (c >= 'a' && c <= 'z') {
      l = {c - 'a', 1};
      ++i;
    } else if (c >= 'A' && c <= 'Z') {
      l = {c - 'A', -1};
      ++i;
    } else if (c == '{') {
      std::size_t close = text.find('}', i);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated generator index in '" + std::string(text) + "'");
      }
      std::string digits(text.substr(i + 1, close - i - 1));
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                         [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        throw ParseError("bad generator index '{" + digits + "}'");
      }
      l = {std::stoi(digits), 1};
      i = close + 1;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in word '" +
                       std::string(text) + "'");
    }
    if (text.substr(i, 3) == "^-1") {
      l = l.inverse();
      i += 3;
    }
    letters.push_back(l);
  }
  return Word(letters);
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

std::size_t Word::cancellation_with(const Word& other) const {
  std::size_t c = 0;
  while (c < letters_.size() && c < other.letters_.size() &&
         letters_[letters_.size() - 1 - c] == other.letters_[c].inverse()) {
    ++c;
  }
  return c;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (l.generator < 26) {
      out += char((l.sign > 0 ? 'a' : 'A') + l.generator);
    } else {
      out += generator_name(l.generator);
      if (l.sign < 0) out += "^-1";
    }
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::size_t c = lhs.cancellation_with(rhs);
  Word w;
  w.letters_.reserve(lhs.length() + rhs.length() - 2 * c);
  w.letters_.insert(w.letters_.end(), lhs.letters_.begin(), lhs.letters_.end() - c);
  w.letters_.insert(w.letters_.end(), rhs.letters_.begin() + c, rhs.letters_.end());
  return w;
}

std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> words;
  std::string piece;
  auto flush = [&] {
    if (!piece.empty()) words.push_back(Word::parse(piece));
    piece.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      piece += c;
    }
  }
  flush();
  return words;
}

std::string to_string(std::span<const Word> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i].to_string();
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const Letter& l : w.letters()) {
    h ^= static_cast<std::size_t>(l.generator * 2 + (l.sign > 0 ? 0 : 1) + 1);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<Word> ball(int rank, int max_length) {
  std::vector<Word> out{Word()};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int g = 0; g < rank; ++g) {
        for (int s : {1, -1}) {
          Letter l{g, s};
          const Word& w = out[i];
          if (!w.is_identity() && w[w.length() - 1] == l.inverse()) continue;
          out.push_back(w * Word::generator(g, s));
        }
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace gog
