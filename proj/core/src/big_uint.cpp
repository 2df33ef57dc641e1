#include "symcan/big_uint.hpp"

#include <stdexcept>

namespace symcan {

BigUint::BigUint(std::uint64_t value) {
  if (value == 0) {
    limbs_.push_back(0);
    return;
  }
  while (value > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
    value /= kBase;
  }
}

BigUint BigUint::factorial(int k) {
  BigUint r(1);
  r.mul_factorial(k);
  return r;
}

BigUint& BigUint::operator*=(std::uint64_t factor) {
  if (factor == 0 || is_zero()) {
    limbs_.assign(1, 0);
    return *this;
  }
  unsigned __int128 carry = 0;
  for (std::uint32_t& limb : limbs_) {
    unsigned __int128 acc = static_cast<unsigned __int128>(limb) * factor + carry;
    limb = static_cast<std::uint32_t>(acc % kBase);
    carry = acc / kBase;
  }
  while (carry > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  return *this;
}

BigUint& BigUint::mul_factorial(int k) {
  for (std::uint64_t i = 2; i <= static_cast<std::uint64_t>(k); ++i) *this *= i;
  return *this;
}

BigUint& BigUint::mul_pow2(int k) {
  for (int i = 0; i < k; ++i) *this *= 2;
  return *this;
}

bool BigUint::fits_u64() const {
  // 3 limbs cover up to ~10^27; check via reconstruction with overflow guard.
  if (limbs_.size() > 3) return false;
  unsigned __int128 v = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
  return v <= static_cast<unsigned __int128>(UINT64_MAX);
}

std::uint64_t BigUint::as_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint::as_u64: value exceeds 64 bits");
  std::uint64_t v = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
  return v;
}

std::string BigUint::to_string() const {
  std::string out = std::to_string(limbs_.back());
  for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
    std::string part = std::to_string(*it);
    out.append(9 - part.size(), '0');
    out += part;
  }
  return out;
}

bool operator<(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
  }
  return false;
}

}  // namespace symcan
