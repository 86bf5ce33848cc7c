#include "vdc/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vdc {

using u64 = uint64_t;
using u128 = unsigned __int128;

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  neg_ = v < 0;
  // avoid UB on LLONG_MIN
  u64 mag = neg_ ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
  limbs_.push_back(mag);
}

BigInt::BigInt(unsigned long long v) {
  if (v != 0) limbs_.push_back(v);
}

size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + (64 - __builtin_clzll(limbs_.back()));
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_)
    return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = BigInt::cmp_mag(a, b);
  if (a.neg_) c = -c;
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

static void add_mag_impl(std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  u128 carry = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    u128 s = carry + a[i] + (i < b.size() ? b[i] : 0);
    a[i] = static_cast<u64>(s);
    carry = s >> 64;
    if (carry == 0 && i >= b.size()) return;
  }
  if (carry) a.push_back(static_cast<u64>(carry));
}

static void sub_mag_impl(std::vector<u64>& a, const std::vector<u64>& b) {
  // requires |a| >= |b|
  u128 borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    u128 sub = borrow + (i < b.size() ? b[i] : 0);
    if (a[i] >= sub) {
      a[i] = static_cast<u64>(a[i] - sub);
      borrow = 0;
      if (i >= b.size()) break;
    } else {
      a[i] = static_cast<u64>((u128(1) << 64) + a[i] - sub);
      borrow = 1;
    }
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (neg_ == o.neg_) {
    add_mag_impl(limbs_, o.limbs_);
  } else {
    int c = cmp_mag(*this, o);
    if (c == 0) {
      limbs_.clear();
      neg_ = false;
    } else if (c > 0) {
      sub_mag_impl(limbs_, o.limbs_);
    } else {
      std::vector<u64> tmp = o.limbs_;
      sub_mag_impl(tmp, limbs_);
      limbs_ = std::move(tmp);
      neg_ = o.neg_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
  BigInt t = o;
  if (!t.limbs_.empty()) t.neg_ = !t.neg_;
  return *this += t;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.neg_ = !r.neg_;
  return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.is_zero() || b.is_zero()) return r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    u64 carry = 0;
    u64 ai = a.limbs_[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      u128 cur = static_cast<u128>(ai) * b.limbs_[j] + r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      u128 cur = static_cast<u128>(r.limbs_[k]) + carry;
      r.limbs_[k] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
      ++k;
    }
  }
  r.neg_ = a.neg_ != b.neg_;
  r.trim();
  return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  *this = *this * o;
  return *this;
}

BigInt& BigInt::operator<<=(unsigned s) {
  if (is_zero() || s == 0) return *this;
  unsigned limb_shift = s / 64, bit_shift = s % 64;
  size_t old = limbs_.size();
  limbs_.resize(old + limb_shift + (bit_shift ? 1 : 0), 0);
  for (size_t i = old; i-- > 0;) {
    u64 v = limbs_[i];
    limbs_[i] = 0;
    if (bit_shift) {
      limbs_[i + limb_shift + 1] |= (bit_shift ? (v >> (64 - bit_shift)) : 0);
      limbs_[i + limb_shift] |= v << bit_shift;
    } else {
      limbs_[i + limb_shift] = v;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator>>=(unsigned s) {
  if (is_zero() || s == 0) return *this;
  unsigned limb_shift = s / 64, bit_shift = s % 64;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    neg_ = false;
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
  if (bit_shift) {
    for (size_t i = 0; i < limbs_.size(); ++i) {
      u64 hi = (i + 1 < limbs_.size()) ? limbs_[i + 1] : 0;
      limbs_[i] = (limbs_[i] >> bit_shift) | (hi << (64 - bit_shift));
    }
  }
  trim();
  return *this;
}

// Knuth algorithm D on 64-bit limbs.
void BigInt::divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    r = a;
    r.neg_ = false;
    q = BigInt();
    return;
  }
  if (b.limbs_.size() == 1) {
    u64 d = b.limbs_[0];
    std::vector<u64> qs(a.limbs_.size());
    u128 rem = 0;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      u128 cur = (rem << 64) | a.limbs_[i];
      qs[i] = static_cast<u64>(cur / d);
      rem = cur % d;
    }
    q = BigInt();
    q.limbs_ = std::move(qs);
    q.trim();
    r = BigInt(static_cast<unsigned long long>(rem));
    return;
  }

  size_t n = b.limbs_.size();
  size_t m = a.limbs_.size() - n;
  unsigned shift = __builtin_clzll(b.limbs_.back());

  std::vector<u64> u(a.limbs_.size() + 1, 0), v(n);
  // normalized copies
  for (size_t i = 0; i < a.limbs_.size(); ++i) u[i] = a.limbs_[i];
  if (shift) {
    u[a.limbs_.size()] = u[a.limbs_.size() - 1] >> (64 - shift);
    for (size_t i = a.limbs_.size(); i-- > 1;)
      u[i] = (u[i] << shift) | (u[i - 1] >> (64 - shift));
    u[0] <<= shift;
    for (size_t i = n; i-- > 1;)
      v[i] = (b.limbs_[i] << shift) | (b.limbs_[i - 1] >> (64 - shift));
    v[0] = b.limbs_[0] << shift;
  } else {
    v = b.limbs_;
  }

  std::vector<u64> qs(m + 1, 0);
  const u64 vhi = v[n - 1], vlo = v[n - 2];
  for (size_t j = m + 1; j-- > 0;) {
    u128 num = (static_cast<u128>(u[j + n]) << 64) | u[j + n - 1];
    u128 qhat = num / vhi;
    u128 rhat = num % vhi;
    while (qhat >= (u128(1) << 64) ||
           qhat * vlo > ((rhat << 64) | u[j + n - 2])) {
      --qhat;
      rhat += vhi;
      if (rhat >= (u128(1) << 64)) break;
    }
    // multiply and subtract
    u128 borrow = 0, carry = 0;
    for (size_t i = 0; i < n; ++i) {
      u128 p = qhat * v[i] + carry;
      carry = p >> 64;
      u64 plo = static_cast<u64>(p);
      u128 sub = static_cast<u128>(plo) + borrow;
      if (u[j + i] >= sub) {
        u[j + i] -= static_cast<u64>(sub);
        borrow = 0;
      } else {
        u[j + i] = static_cast<u64>((u128(1) << 64) + u[j + i] - sub);
        borrow = 1;
      }
    }
    u128 sub = carry + borrow;
    if (u[j + n] >= sub) {
      u[j + n] -= static_cast<u64>(sub);
      borrow = 0;
    } else {
      u[j + n] = static_cast<u64>((u128(1) << 64) + u[j + n] - sub);
      borrow = 1;
    }
    if (borrow) {
      // qhat was one too large; add v back
      --qhat;
      u128 c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        u128 s = static_cast<u128>(u[j + i]) + v[i] + c2;
        u[j + i] = static_cast<u64>(s);
        c2 = s >> 64;
      }
      u[j + n] += static_cast<u64>(c2);
    }
    qs[j] = static_cast<u64>(qhat);
  }

  q = BigInt();
  q.limbs_ = std::move(qs);
  q.trim();
  r = BigInt();
  r.limbs_.assign(u.begin(), u.begin() + n);
  if (shift) {
    for (size_t i = 0; i + 1 < n; ++i)
      r.limbs_[i] = (r.limbs_[i] >> shift) | (r.limbs_[i + 1] << (64 - shift));
    r.limbs_[n - 1] >>= shift;
  }
  r.trim();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  divmod_mag(a, b, q, r);
  q.neg_ = !q.is_zero() && (a.neg_ != b.neg_);
  r.neg_ = !r.is_zero() && a.neg_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt& BigInt::operator/=(const BigInt& o) { return *this = *this / o; }
BigInt& BigInt::operator%=(const BigInt& o) { return *this = *this % o; }

uint64_t BigInt::mag_mod_u64(uint64_t m) const {
  if (m == 0) throw std::domain_error("BigInt: modulo zero");
  u128 rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 64) | limbs_[i]) % m;
  return static_cast<u64>(rem);
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m.signum() <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  BigInt r = a % m;
  if (r.negative()) r += m;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt BigInt::pow(uint64_t e) const {
  BigInt base = *this, result = 1;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

BigInt gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt g = gcd(a, b);
  return (a.abs() / g) * b.abs();
}

BigInt isqrt(const BigInt& a) {
  if (a.negative()) throw std::domain_error("isqrt: negative argument");
  if (a.is_zero()) return BigInt();
  size_t bl = a.bit_length();
  BigInt x = BigInt(1) << static_cast<unsigned>(bl / 2 + 1);
  // Newton iteration, monotone decreasing once above the root
  while (true) {
    BigInt y = (x + a / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

double BigInt::to_double() const {
  if (limbs_.empty()) return 0.0;
  size_t bl = bit_length();
  if (bl > 1024) return neg_ ? -INFINITY : INFINITY;
  double r = 0.0;
  for (size_t i = limbs_.size(); i-- > 0;) r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
  return neg_ ? -r : r;
}

double BigInt::log2_mag() const {
  if (limbs_.empty()) throw std::domain_error("log of zero");
  size_t bl = bit_length();
  // top 64 bits of the magnitude
  BigInt t = *this;
  t.neg_ = false;
  if (bl > 64) t >>= static_cast<unsigned>(bl - 64);
  double mant = static_cast<double>(t.limbs_[0]);
  return std::log2(mant) + static_cast<double>(bl > 64 ? bl - 64 : 0);
}

double BigInt::log_natural() const { return log2_mag() * 0.6931471805599453094; }

BigInt BigInt::from_string(std::string_view dec) {
  BigInt r;
  bool neg = false;
  size_t i = 0;
  if (i < dec.size() && (dec[i] == '+' || dec[i] == '-')) {
    neg = dec[i] == '-';
    ++i;
  }
  if (i >= dec.size()) throw std::invalid_argument("BigInt: empty numeral");
  const u64 chunk_base = 10000000000000000000ull;  // 10^19
  size_t pos = i;
  // leading chunk may be short
  size_t first_len = (dec.size() - i) % 19;
  if (first_len == 0) first_len = 19;
  auto parse_chunk = [&](size_t b, size_t len) {
    u64 v = 0;
    for (size_t k = b; k < b + len; ++k) {
      if (dec[k] < '0' || dec[k] > '9')
        throw std::invalid_argument("BigInt: bad digit");
      v = v * 10 + static_cast<u64>(dec[k] - '0');
    }
    return v;
  };
  r = BigInt(static_cast<unsigned long long>(parse_chunk(pos, first_len)));
  pos += first_len;
  while (pos < dec.size()) {
    r *= BigInt(static_cast<unsigned long long>(chunk_base));
    r += BigInt(static_cast<unsigned long long>(parse_chunk(pos, 19)));
    pos += 19;
  }
  if (neg && !r.is_zero()) r.neg_ = true;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<u64> chunks;
  BigInt t = *this;
  t.neg_ = false;
  const BigInt base(static_cast<unsigned long long>(10000000000000000000ull));
  while (!t.is_zero()) {
    BigInt q, r;
    divmod(t, base, q, r);
    chunks.push_back(r.is_zero() ? 0 : r.limbs_[0]);
    t = std::move(q);
  }
  std::string s;
  if (neg_) s.push_back('-');
  char buf[32];
  snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(chunks.back()));
  s += buf;
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(chunks[i]));
    s += buf;
  }
  return s;
}

std::string BigInt::to_hex_mag() const {
  if (is_zero()) return "0";
  char buf[20];
  std::string s;
  snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(limbs_.back()));
  s += buf;
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(limbs_[i]));
    s += buf;
  }
  return s;
}

size_t BigInt::digit_count() const {
  if (is_zero()) return 1;
  return to_string().size() - (neg_ ? 1 : 0);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
  return os << v.to_string();
}

}  // namespace vdc
