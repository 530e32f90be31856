#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpg/rng.hpp"

namespace mpg {

// Fixed-length binary genome. Length is set at construction and never
// changes.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length)
      : len_(length), words_((length + 63) / 64, 0) {}

  static BitString random(std::size_t length, Rng& rng) {
    BitString s(length);
    for (auto& w : s.words_) w = rng.next_u64();
    s.mask_tail();
    return s;
  }

  static BitString parse(std::string_view text) {
    BitString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        s.set(i, true);
      } else if (text[i] != '0') {
        throw std::invalid_argument("BitString::parse: expected '0' or '1'");
      }
    }
    return s;
  }

  std::size_t length() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t hamming(const BitString& other) const {
    if (other.len_ != len_) {
      throw std::invalid_argument("BitString::hamming: length mismatch");
    }
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      d += static_cast<std::size_t>(std::popcount(words_[w] ^ other.words_[w]));
    }
    return d;
  }

  std::string str() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
      if (get(i)) out[i] = '1';
    }
    return out;
  }

  friend bool operator==(const BitString&, const BitString&) = default;

  // Raw 64-bit words, low bit first. Bits beyond length() are zero and must
  // stay zero.
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }
  std::uint64_t tail_mask() const {
    return (len_ & 63) ? ~std::uint64_t{0} >> (64 - (len_ & 63))
                       : ~std::uint64_t{0};
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ len_;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

 private:
  void mask_tail() {
    if (len_ & 63) {
      words_.back() &= ~std::uint64_t{0} >> (64 - (len_ & 63));
    }
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitStringHash {
  std::size_t operator()(const BitString& s) const {
    return static_cast<std::size_t>(s.hash());
  }
};

}  // namespace mpg
