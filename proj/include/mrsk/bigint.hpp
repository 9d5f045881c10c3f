#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mrsk {

// Signed arbitrary-precision integer, base 1e9 limbs, little-endian.
// Just enough arithmetic for exact transition-matrix determinants.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) = default;
  bool equals(long long v) const { return *this == BigInt(v); }

  std::string str() const;

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;
  // |a| vs |b|
  static int cmp_abs(const BigInt& a, const BigInt& b);
  static std::vector<std::uint32_t> add_abs(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_abs(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();

  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // empty means zero
};

}  // namespace mrsk
