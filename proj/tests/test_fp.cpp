#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "dhyp/fp.hpp"
#include "dhyp/rng.hpp"

using namespace dhyp;

TEST_CASE("primality on small inputs and the 31-bit boundary") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(5));
  CHECK(is_prime(7));
  CHECK(is_prime(2147483647ULL));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(2147483649ULL));
}

TEST_CASE("smallest prime exceeding n") {
  CHECK(find_prime(2, false) == 3);
  CHECK(find_prime(3, false) == 5);
  CHECK(find_prime(4, false) == 5);
  CHECK(find_prime(5, false) == 7);
}

TEST_CASE("smallest prime exceeding n with p = 1 mod n") {
  CHECK(find_prime(2, true) == 3);
  CHECK(find_prime(3, true) == 7);
  CHECK(find_prime(4, true) == 5);
  CHECK(find_prime(5, true) == 11);
  CHECK(find_prime(6, true) == 7);
  CHECK(find_prime(7, true) == 29);
  CHECK(find_prime(8, true) == 17);
}

TEST_CASE("primitive roots of unity are the smallest residue of exact order n") {
  CHECK(primitive_root_of_unity(3, 2) == 2);
  CHECK(primitive_root_of_unity(7, 3) == 2);
  CHECK(primitive_root_of_unity(5, 4) == 2);
  CHECK(primitive_root_of_unity(11, 5) == 3);
  CHECK(primitive_root_of_unity(7, 6) == 3);
  CHECK(primitive_root_of_unity(29, 7) == 7);
  CHECK(primitive_root_of_unity(17, 8) == 2);
}

TEST_CASE("primitive root agrees with exhaustive order search") {
  const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 29, 31};
  for (std::uint64_t p : primes) {
    for (int n = 2; n < 9; ++n) {
      if ((p - 1) % static_cast<std::uint64_t>(n) != 0) {
        CHECK_THROWS_AS(primitive_root_of_unity(p, n), std::domain_error);
        continue;
      }
      std::uint64_t expected = 0;
      for (std::uint64_t g = 2; g < p && !expected; ++g) {
        std::uint64_t acc = g;
        int order = 1;
        while (acc != 1) {
          acc = acc * g % p;
          ++order;
        }
        if (order == n) expected = g;
      }
      CHECK(primitive_root_of_unity(p, n) == expected);
    }
  }
}

TEST_CASE("field context validates its invariants") {
  CHECK_THROWS_AS(FieldCtx(4, 2), std::domain_error);        // not prime
  CHECK_THROWS_AS(FieldCtx(3, 3), std::domain_error);        // p <= n
  CHECK_THROWS_AS(FieldCtx(2147483659ULL, 2), std::domain_error);  // >= 2^31
  CHECK_THROWS_AS(FieldCtx(7, 3, 3), std::domain_error);     // 3 has order 6, not 3
  CHECK_THROWS_AS(FieldCtx(5, 3, 2), std::domain_error);     // 3 does not divide 4
  CHECK_NOTHROW(FieldCtx(7, 3, 2));
  CHECK_NOTHROW(FieldCtx(7, 3));
}

TEST_CASE("arithmetic mod 7") {
  FieldCtx f(7, 3);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(4, 5) == 6);
  CHECK(f.neg(3) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-7) == 0);
  CHECK(f.reduce(15) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("every nonzero element has a working inverse") {
  FieldCtx f(101, 4);
  for (std::uint64_t a = 1; a < 101; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("pow matches repeated multiplication") {
  FieldCtx f(13, 3);
  for (std::uint64_t a = 0; a < 13; ++a) {
    std::uint64_t acc = 1;
    for (std::uint64_t e = 0; e < 30; ++e) {
      CHECK(f.pow(a, e) == acc);
      acc = f.mul(acc, a);
    }
  }
}

TEST_CASE("root powers reduce the exponent mod n") {
  FieldCtx f(7, 3, 2);
  CHECK(f.q() == 2);
  CHECK(f.qpow(0) == 1);
  CHECK(f.qpow(1) == 2);
  CHECK(f.qpow(2) == 4);
  CHECK(f.qpow(3) == 1);
  CHECK(f.qpow(-1) == 4);
  CHECK(f.qpow(-2) == 2);
  for (long long e = -20; e <= 20; ++e) {
    long long red = ((e % 3) + 3) % 3;
    CHECK(f.qpow(e) == f.pow(2, static_cast<std::uint64_t>(red)));
  }
  FieldCtx g(7, 3);
  CHECK_FALSE(g.has_root());
  CHECK_THROWS_AS(g.q(), std::domain_error);
}

TEST_CASE("deterministic generator matches the reference stream") {
  SplitMix64 r0(0);
  CHECK(r0.next() == 0xE220A8397B1DCDAFULL);
  CHECK(r0.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(r0.next() == 0x06C45D188009454FULL);
  SplitMix64 r42(42);
  CHECK(r42.next() == 0xBDD732262FEB6E95ULL);
  CHECK(r42.next() == 0x28EFE333B266F103ULL);
  CHECK(r42.next() == 0x47526757130F9F52ULL);
}

TEST_CASE("bounded sampling stays in range and is seed-stable") {
  SplitMix64 a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t va = a.below(13);
    CHECK(va < 13);
    CHECK(va == b.below(13));
  }
}
