#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symcan {

// Arbitrary-precision unsigned integer, just big enough for group orders:
// products of factorials and orbit sizes. Limbs are base 10^9 so decimal
// rendering is a straight dump.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(std::uint64_t value);

  static BigUint factorial(int k);

  BigUint& operator*=(std::uint64_t factor);
  BigUint& mul_factorial(int k);  // multiply by k!
  BigUint& mul_pow2(int k);       // multiply by 2^k

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
  bool fits_u64() const;
  std::uint64_t as_u64() const;  // throws std::overflow_error if too large

  std::string to_string() const;

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator==(const BigUint& a, std::uint64_t b) { return a == BigUint(b); }
  friend bool operator<(const BigUint& a, const BigUint& b);

 private:
  static constexpr std::uint64_t kBase = 1000000000;
  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zero limb (except value 0)
};

}  // namespace symcan
