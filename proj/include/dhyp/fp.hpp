#pragma once

#include <cstdint>
#include <optional>

namespace dhyp {

// Prime-field arithmetic on canonical residues in [0, p).
// Moduli are restricted to p < 2^31 so products fit in uint64_t.

bool is_prime(std::uint64_t m);

// Smallest prime p > n; additionally p = 1 (mod n) when need_root is set.
std::uint64_t find_prime(int n, bool need_root);

// Smallest residue of multiplicative order exactly n in F_p.
// Throws std::domain_error unless n divides p - 1.
std::uint64_t primitive_root_of_unity(std::uint64_t p, int n);

// A prime field F_p tied to a matrix size n, optionally carrying a
// distinguished primitive n-th root of unity q.
// Invariants: p prime, p > n; if q is set, q has order exactly n (so n | p-1
// and q != 1 for n >= 2).
class FieldCtx {
public:
  FieldCtx(std::uint64_t p, int n);
  FieldCtx(std::uint64_t p, int n, std::uint64_t q);

  std::uint64_t p() const { return p_; }
  int n() const { return n_; }
  bool has_root() const { return q_.has_value(); }
  std::uint64_t q() const;  // throws if no root was set

  std::uint64_t reduce(long long v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws on a == 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // q^e with e an arbitrary integer, reduced mod n first (q has order n).
  std::uint64_t qpow(long long e) const;

private:
  std::uint64_t p_;
  int n_;
  std::optional<std::uint64_t> q_;
};

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace dhyp
