#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oraclid {

// Fixed-length bit string, word-packed. Position i is the i-th character of
// the string form, so to_string() round-trips with from_string().
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(size_t size, bool fill = false) : size_(size), words_((size + 63) / 64, 0) {
    if (fill) {
      for (auto& w : words_) w = ~0ull;
      trim();
    }
  }

  static BitVec from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i, true);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("BitVec::from_string: expected only '0'/'1'");
      }
    }
    return v;
  }

  size_t size() const { return size_; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ull; }

  void set(size_t i, bool v) {
    uint64_t bit = 1ull << (i & 63);
    if (v)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }

  void flip(size_t i) { words_[i >> 6] ^= 1ull << (i & 63); }

  size_t count_ones() const {
    size_t c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  void xor_with(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec::xor_with: size mismatch");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  uint64_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  // Bits past size_ stay zero so equality can compare raw words.
  void trim() {
    size_t rem = size_ & 63;
    if (rem && !words_.empty()) words_.back() &= (1ull << rem) - 1;
  }

  size_t size_ = 0;
  std::vector<uint64_t> words_;
};

struct BitVecHash {
  size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace oraclid
