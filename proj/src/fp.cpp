#include "dhyp/fp.hpp"

#include <stdexcept>

namespace dhyp {

namespace {
constexpr std::uint64_t kMaxModulus = 1ULL << 31;
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

std::uint64_t find_prime(int n, bool need_root) {
  if (n < 2) throw std::domain_error("find_prime: n must be >= 2");
  for (std::uint64_t p = static_cast<std::uint64_t>(n) + 1;; ++p) {
    if (!is_prime(p)) continue;
    if (need_root && (p - 1) % static_cast<std::uint64_t>(n) != 0) continue;
    return p;
  }
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  a %= p;
  std::uint64_t acc = 1 % p;
  while (e) {
    if (e & 1) acc = acc * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return acc;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inv: division by zero");
  return mod_pow(a, p - 2, p);
}

std::uint64_t primitive_root_of_unity(std::uint64_t p, int n) {
  if (n < 1) throw std::domain_error("primitive_root_of_unity: n must be positive");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  if ((p - 1) % un != 0) {
    throw std::domain_error("primitive_root_of_unity: n does not divide p - 1");
  }
  for (std::uint64_t g = 1; g < p; ++g) {
    if (mod_pow(g, un, p) != 1) continue;
    bool primitive = true;
    for (int k = 1; k < n; ++k) {
      if (mod_pow(g, static_cast<std::uint64_t>(k), p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("primitive_root_of_unity: no root found");  // unreachable
}

FieldCtx::FieldCtx(std::uint64_t p, int n) : p_(p), n_(n) {
  if (p >= kMaxModulus) throw std::domain_error("FieldCtx: modulus too large");
  if (!is_prime(p)) throw std::domain_error("FieldCtx: p is not prime");
  if (static_cast<std::uint64_t>(n) >= p) throw std::domain_error("FieldCtx: requires p > n");
  if (n < 1) throw std::domain_error("FieldCtx: n must be positive");
}

FieldCtx::FieldCtx(std::uint64_t p, int n, std::uint64_t q) : FieldCtx(p, n) {
  q %= p;
  if (mod_pow(q, static_cast<std::uint64_t>(n), p) != 1) {
    throw std::domain_error("FieldCtx: q^n != 1");
  }
  for (int k = 1; k < n; ++k) {
    if (mod_pow(q, static_cast<std::uint64_t>(k), p) == 1) {
      throw std::domain_error("FieldCtx: q has order smaller than n");
    }
  }
  q_ = q;
}

std::uint64_t FieldCtx::q() const {
  if (!q_) throw std::domain_error("FieldCtx: no root of unity set");
  return *q_;
}

std::uint64_t FieldCtx::reduce(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t FieldCtx::add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
std::uint64_t FieldCtx::sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b % p_) % p_; }
std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const { return a % p_ * (b % p_) % p_; }
std::uint64_t FieldCtx::neg(std::uint64_t a) const { return (p_ - a % p_) % p_; }
std::uint64_t FieldCtx::inv(std::uint64_t a) const { return mod_inv(a, p_); }
std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const { return mod_pow(a, e, p_); }

std::uint64_t FieldCtx::qpow(long long e) const {
  long long m = e % n_;
  if (m < 0) m += n_;
  return mod_pow(q(), static_cast<std::uint64_t>(m), p_);
}

}  // namespace dhyp
