#include "mrsk/bigint.hpp"

#include <algorithm>
#include <sstream>

namespace mrsk {

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  unsigned long long u = negative_ ? -static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
  while (u) {
    limbs_.push_back(static_cast<std::uint32_t>(u % kBase));
    u /= kBase;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    std::uint64_t v = carry;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v += b[i];
    out.push_back(static_cast<std::uint32_t>(v % kBase));
    carry = v / kBase;
  }
  return out;
}

std::vector<std::uint32_t> BigInt::sub_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(out[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    borrow = 0;
    if (v < 0) {
      v += kBase;
      borrow = 1;
    }
    out[i] = static_cast<std::uint32_t>(v);
  }
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (negative_ == o.negative_) {
    limbs_ = add_abs(limbs_, o.limbs_);
  } else {
    int c = cmp_abs(*this, o);
    if (c == 0) {
      limbs_.clear();
      negative_ = false;
      return *this;
    }
    if (c > 0) {
      limbs_ = sub_abs(limbs_, o.limbs_);
    } else {
      limbs_ = sub_abs(o.limbs_, limbs_);
      negative_ = o.negative_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (is_zero() || o.is_zero()) {
    limbs_.clear();
    negative_ = false;
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size() || carry; ++j) {
      std::uint64_t v = out[i + j] + carry;
      if (j < o.limbs_.size())
        v += static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
      out[i + j] = static_cast<std::uint32_t>(v % kBase);
      carry = v / kBase;
    }
  }
  limbs_ = std::move(out);
  negative_ = negative_ != o.negative_;
  trim();
  return *this;
}

std::string BigInt::str() const {
  if (limbs_.empty()) return "0";
  std::ostringstream os;
  if (negative_) os << '-';
  os << limbs_.back();
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    os << std::string(9 - part.size(), '0') << part;
  }
  return os.str();
}

}  // namespace mrsk
