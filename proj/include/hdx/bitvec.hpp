#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdx {

// Fixed-length bit vector over F2, packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // a with the bits of b removed
  friend BitVec and_not(BitVec a, const BitVec& b) {
    for (std::size_t i = 0; i < a.w_.size(); ++i) a.w_[i] &= ~b.w_[i];
    return a;
  }
  bool intersects(const BitVec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Order as a 0/1 string read from bit 0 upward; -1, 0, +1.
  int compare_lex(const BitVec& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t d = w_[i] ^ o.w_[i];
      if (d) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(d));
        return ((w_[i] >> b) & 1u) ? 1 : -1;
      }
    }
    return 0;
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
        f(i * 64 + b);
        w &= w - 1;
      }
    }
  }

  // Bytes little-endian in bit order: bit i lives in byte i/8, position i%8.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::size_t nbytes = (n_ + 7) / 8;
    std::string s(nbytes * 2, '0');
    for (std::size_t b = 0; b < nbytes; ++b) {
      unsigned byte = static_cast<unsigned>((w_[b >> 3] >> ((b & 7) * 8)) & 0xff);
      s[2 * b] = digits[byte >> 4];
      s[2 * b + 1] = digits[byte & 0xf];
    }
    return s;
  }

  static BitVec from_hex(std::size_t nbits, const std::string& hex) {
    std::size_t nbytes = (nbits + 7) / 8;
    if (hex.size() != nbytes * 2) throw std::invalid_argument("bitvec hex: wrong length");
    BitVec v(nbits);
    for (std::size_t b = 0; b < nbytes; ++b) {
      unsigned byte = 0;
      for (int h = 0; h < 2; ++h) {
        char c = hex[2 * b + static_cast<std::size_t>(h)];
        unsigned nib = 0;
        if (c >= '0' && c <= '9')
          nib = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
          nib = static_cast<unsigned>(c - 'a') + 10;
        else
          throw std::invalid_argument("bitvec hex: bad digit");
        byte = (byte << 4) | nib;
      }
      v.w_[b >> 3] |= static_cast<std::uint64_t>(byte) << ((b & 7) * 8);
    }
    // padding bits must be zero
    if (nbits % 64 != 0 && !v.w_.empty()) {
      std::uint64_t mask = (~std::uint64_t{0}) << (nbits % 64);
      std::size_t last = (nbits - 1) >> 6;
      if (nbits % 64 && (v.w_[last] & ((nbits % 64) ? mask : 0)))
        throw std::invalid_argument("bitvec hex: nonzero padding bits");
    }
    return v;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace hdx
