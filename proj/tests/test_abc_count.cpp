#include <catch2/catch.hpp>

#include <sstream>

#include "abclab/abc_count.hpp"
#include "oracles.hpp"

using namespace abclab;

namespace {
const Rational kOne = make_rational(1, 1);
const Rational kHalf = make_rational(1, 2);
}  // namespace

TEST_CASE("rational parsing and validation") {
  CHECK(parse_rational("1/2") == kHalf);
  CHECK(parse_rational("2/4") == kHalf);
  CHECK(parse_rational("3") == make_rational(3, 1));
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

  CHECK_THROWS_AS(validate_params(AbcParams{make_rational(0, 1), kOne, kOne, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_params(AbcParams{make_rational(3, 2), kOne, kOne, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_params(AbcParams{kOne, kOne, kOne, 0}), std::invalid_argument);
}

TEST_CASE("dyadic keys partition") {
  CHECK(dyadic_key(1) == 0);
  CHECK(dyadic_key(2) == 1);
  CHECK(dyadic_key(3) == 1);
  CHECK(dyadic_key(4) == 2);
  CHECK(dyadic_key(1023) == 9);
  CHECK(dyadic_key(1024) == 10);
  CHECK_THROWS_AS(dyadic_key(0), std::invalid_argument);
}

TEST_CASE("triple validity hits the exact boundary") {
  SpfSieve sieve = build_sieve(100);
  AbcParams p{kOne, kOne, kHalf, 9};
  CHECK(is_valid_triple({1, 8, -9}, p, sieve));  // r(9)^2 = 9 <= 9, boundary equality
  AbcParams p3{kOne, kOne, kHalf, 3};
  CHECK_FALSE(is_valid_triple({1, 2, -3}, p3, sieve));  // r(3)^2 = 9 > 3
  AbcParams any{kOne, kOne, kOne, 10};
  CHECK_FALSE(is_valid_triple({2, 4, -6}, any, sieve));  // gcd 2
  CHECK_FALSE(is_valid_triple({1, 1, -3}, any, sieve));  // sum != 0
  CHECK_FALSE(is_valid_triple({0, 3, -3}, any, sieve));  // zero entry
  CHECK_FALSE(is_valid_triple({4, 8, -12}, AbcParams{kOne, kOne, kOne, 5}, sieve));
}

TEST_CASE("exact counts at tiny sizes") {
  SpfSieve sieve = build_sieve(64);
  CHECK(count_exact(AbcParams{kOne, kOne, kOne, 2}, sieve) == 6);
  CHECK(count_exact(AbcParams{kOne, kOne, kOne, 3}, sieve) == 18);
  CHECK(count_exact(AbcParams{kHalf, kHalf, kHalf, 2}, sieve) == 0);
  CHECK_THROWS_AS(count_exact(AbcParams{kOne, kOne, kOne, 100}, sieve), std::out_of_range);
}

TEST_CASE("orbit expansion equals the ordered grid scan") {
  SpfSieve sieve = build_sieve(64);
  std::vector<AbcParams> grid = {
      {kOne, kOne, kOne, 0},
      {kOne, kOne, kHalf, 0},
      {kHalf, kHalf, kHalf, 0},
      {make_rational(2, 3), kOne, make_rational(3, 4), 0},
  };
  for (AbcParams p : grid) {
    for (long long n : {1, 2, 3, 5, 9, 16, 25, 40}) {
      p.n = n;
      REQUIRE(count_exact(p, sieve) == oracle::abc_count_brute(p));
    }
  }
}

TEST_CASE("counts are monotone in N and in each exponent") {
  SpfSieve sieve = build_sieve(64);
  unsigned long long prev = 0;
  for (long long n = 1; n <= 50; ++n) {
    unsigned long long cur = count_exact(AbcParams{kOne, kOne, kHalf, n}, sieve);
    REQUIRE(cur >= prev);
    prev = cur;
  }
  std::vector<Rational> ladder = {kHalf, make_rational(2, 3), make_rational(3, 4), kOne};
  for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
    REQUIRE(count_exact(AbcParams{ladder[i], kOne, kHalf, 48}, sieve) <=
            count_exact(AbcParams{ladder[i + 1], kOne, kHalf, 48}, sieve));
    REQUIRE(count_exact(AbcParams{kOne, ladder[i], kHalf, 48}, sieve) <=
            count_exact(AbcParams{kOne, ladder[i + 1], kHalf, 48}, sieve));
    REQUIRE(count_exact(AbcParams{kOne, kHalf, ladder[i], 48}, sieve) <=
            count_exact(AbcParams{kOne, kHalf, ladder[i + 1], 48}, sieve));
  }
}

TEST_CASE("sharding does not change the count") {
  SpfSieve sieve = build_sieve(256);
  AbcParams p{kOne, kOne, kHalf, 200};
  unsigned long long c1 = count_exact(p, sieve, {}, 1);
  CHECK(count_exact(p, sieve, {}, 2) == c1);
  CHECK(count_exact(p, sieve, {}, 5) == c1);
}

TEST_CASE("emission path and counting path agree") {
  SpfSieve sieve = build_sieve(256);
  for (const AbcParams& p : {AbcParams{kOne, kOne, kOne, 100},
                             AbcParams{kOne, kOne, kHalf, 250},
                             AbcParams{kHalf, make_rational(2, 3), kHalf, 250}}) {
    unsigned long long emitted = 0;
    unsigned long long via_sink =
        count_exact(p, sieve, [&](const Triple&) { ++emitted; });
    REQUIRE(via_sink == emitted);
    REQUIRE(via_sink == count_exact(p, sieve));
  }
}

TEST_CASE("emitted solutions satisfy every invariant and are deterministic") {
  SpfSieve sieve = build_sieve(64);
  AbcParams p{kOne, kOne, kHalf, 40};
  std::vector<Triple> first, second;
  unsigned long long count =
      count_exact(p, sieve, [&](const Triple& t) { first.push_back(t); });
  count_exact(p, sieve, [&](const Triple& t) { second.push_back(t); });
  CHECK(first.size() == count);
  CHECK(first == second);
  for (const Triple& t : first) {
    REQUIRE(t.A + t.B + t.C == 0);
    REQUIRE((t.A != 0 && t.B != 0 && t.C != 0));
    auto mag = [](long long v) { return v < 0 ? -v : v; };
    REQUIRE(std::gcd(mag(t.A), mag(t.B)) == 1);  // pairwise given the zero sum
    REQUIRE(std::gcd(mag(t.B), mag(t.C)) == 1);
    REQUIRE(std::gcd(mag(t.A), mag(t.C)) == 1);
    REQUIRE(mag(t.A) <= p.n);
    REQUIRE(mag(t.B) <= p.n);
    REQUIRE(mag(t.C) <= p.n);
    REQUIRE(is_valid_triple(t, p, sieve));
  }
}

TEST_CASE("triple CSV format") {
  SpfSieve sieve = build_sieve(16);
  AbcParams p{kOne, kOne, kOne, 2};
  std::vector<Triple> triples;
  count_exact(p, sieve, [&](const Triple& t) { triples.push_back(t); });
  std::ostringstream out;
  write_triples_csv(out, triples, sieve);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "A,B,C,r_A,r_B,r_C");
  std::size_t rows = 0;
  bool saw = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line == "1,1,-2,1,1,2") saw = true;
  }
  CHECK(rows == 6);
  CHECK(saw);
}

TEST_CASE("bucket reports partition the count") {
  SpfSieve sieve = build_sieve(1024);
  AbcParams tiny{kOne, kOne, kOne, 2};
  BucketReport rep = bucket_report(tiny, BucketKeyKind::V, sieve);
  REQUIRE(rep.buckets.size() == 1);  // v = 1 for 1, 1, 2
  BucketKey key = rep.buckets.begin()->first;
  CHECK(key == BucketKey{0, -1, 0, -1, 0, -1});
  CHECK(rep.buckets.begin()->second == 6);
  CHECK(rep.total == 6);
  CHECK(bucket_key_to_string(BucketKeyKind::V, key) == "0,0,0");

  BucketReport empty = bucket_report(AbcParams{kHalf, kHalf, kHalf, 2}, BucketKeyKind::V, sieve);
  CHECK(empty.buckets.empty());
  CHECK(empty.total == 0);

  for (BucketKeyKind kind :
       {BucketKeyKind::V, BucketKeyKind::S, BucketKeyKind::T, BucketKeyKind::ST}) {
    AbcParams p{kOne, kOne, kHalf, 256};
    BucketReport r = bucket_report(p, kind, sieve);
    unsigned long long total = 0;
    for (const auto& [k, c] : r.buckets) total += static_cast<unsigned long long>(c);
    REQUIRE(total == r.total);
    REQUIRE(r.total == count_exact(p, sieve));
  }
}

TEST_CASE("bucket bound expressions") {
  AbcParams p{kOne, kOne, kOne, 16};
  BucketKey v_key{1, -1, 2, -1, 0, -1};
  auto vb = bucket_bound(BucketKeyKind::V, p, v_key);
  REQUIRE(vb.has_value());
  CHECK(*vb == Approx(16.0 * 16.0 + 2.0 * 4.0 * 1.0));  // N^2 + v products

  BucketKey st_key{1, 0, 0, 1, 1, 1};  // S lower: 2,1,2 ; T lower: 1,2,2
  auto stb = bucket_bound(BucketKeyKind::ST, p, st_key);
  REQUIRE(stb.has_value());
  CHECK(*stb == Approx(4.0 + std::sqrt(4.0 * 4.0)));

  CHECK_FALSE(bucket_bound(BucketKeyKind::S, p, v_key).has_value());
  CHECK_FALSE(bucket_bound(BucketKeyKind::T, p, v_key).has_value());

  CHECK(parse_bucket_kind("v") == BucketKeyKind::V);
  CHECK(parse_bucket_kind("st") == BucketKeyKind::ST);
  CHECK_THROWS_AS(parse_bucket_kind("vst"), std::invalid_argument);
}

TEST_CASE("linear fits") {
  LinearFit exact = linear_fit({{0, 1}, {1, 4}, {2, 7}, {3, 10}});
  CHECK(exact.slope == Approx(3.0));
  CHECK(exact.intercept == Approx(1.0));
  for (double r : exact.residuals) CHECK(r == Approx(0.0).margin(1e-12));

  LinearFit flat = linear_fit({{1, 5}, {2, 5}, {3, 5}});
  CHECK(flat.slope == Approx(0.0).margin(1e-12));

  CHECK_THROWS_AS(linear_fit({{1, 1}}), std::domain_error);
  CHECK_THROWS_AS(linear_fit({{1, 1}, {1, 2}}), std::domain_error);
}

TEST_CASE("exponent fit at the unconstrained corner") {
  SpfSieve sieve = build_sieve(1 << 12);
  ExponentFit fit = exponent_fit(kOne, kOne, kOne, 6, 12, sieve);
  CHECK(fit.slope == Approx(2.0).margin(0.2));
  CHECK(fit.zero_ks.empty());
  CHECK(fit.counts.size() == 7);
  CHECK(fit.residuals.size() == 7);

  // N = 2 and N = 4 hold no solutions with all exponents 1/2
  CHECK_THROWS_AS(exponent_fit(kHalf, kHalf, kHalf, 1, 2, sieve), std::domain_error);
  CHECK_THROWS_AS(exponent_fit(kOne, kOne, kOne, 6, 6, sieve), std::invalid_argument);
  CHECK_THROWS_AS(exponent_fit(kOne, kOne, kOne, 2, 30, sieve), std::out_of_range);
}
