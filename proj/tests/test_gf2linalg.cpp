#include <doctest.h>

#include <random>
#include <set>

#include "cuplen/error.hpp"
#include "cuplen/gf2linalg.hpp"

using namespace cuplen;

namespace {

BitVector B(const char* s) { return BitVector::from_string(s); }

BitVector random_vector(std::mt19937_64& rng, std::size_t width) {
  BitVector v(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (rng() & 1U) v.set(j);
  }
  return v;
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t width) {
  BitMatrix m(width);
  for (std::size_t i = 0; i < rows; ++i) m.add_row(random_vector(rng, width));
  return m;
}

// Row reduction on plain bytes, for comparison with the packed code.
std::size_t naive_rank(const BitMatrix& m) {
  std::vector<std::vector<int>> a;
  for (const auto& r : m.rows()) {
    std::vector<int> row(m.width());
    for (std::size_t j = 0; j < m.width(); ++j) row[j] = r.test(j);
    a.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.width(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p >= a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c]) {
        for (std::size_t j = c; j < m.width(); ++j) a[i][j] ^= a[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("bit vectors") {
  BitVector v(130);
  CHECK(v.none());
  v.set(0);
  v.set(64);
  v.set(129);
  CHECK(v.count() == 3);
  CHECK(v.first_set() == 0);
  CHECK(v.next_set(1) == 64);
  CHECK(v.next_set(65) == 129);
  CHECK(v.next_set(130) == 130);
  v.flip(64);
  CHECK_FALSE(v.test(64));
  v.reset(0);
  CHECK(v.first_set() == 129);
  CHECK(B("1011").to_string() == "1011");
  CHECK((B("1100") ^= B("0110")) == B("1010"));
  CHECK_THROWS_AS(B("10x"), InvalidArgument);
  BitVector a(3);
  CHECK_THROWS_AS(a ^= B("1111"), InvalidArgument);
  std::vector<std::size_t> seen;
  for_each_set_bit(B("0100000001"), [&](std::size_t i) { seen.push_back(i); });
  CHECK(seen == std::vector<std::size_t>{1, 9});
}

TEST_CASE("matrix-vector product") {
  BitMatrix m(3, {B("110"), B("011")});
  CHECK(m.apply(B("111")) == B("00"));
  CHECK(m.apply(B("100")) == B("10"));
  CHECK_THROWS_AS(m.add_row(B("11")), InvalidArgument);
}

TEST_CASE("echelonize by hand") {
  const EchelonBasis e = echelonize(BitMatrix(3, {B("110"), B("011")}));
  CHECK(e.rows() == std::vector<BitVector>{B("101"), B("011")});
  CHECK(e.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(echelonize(BitMatrix(4)).rank() == 0);
  CHECK(echelonize(BitMatrix(4, {B("0000"), B("0000")})).rank() == 0);
  CHECK(rank(BitMatrix(3, {B("110"), B("011"), B("101")})) == 2);
}

TEST_CASE("the validating constructor") {
  CHECK_NOTHROW(EchelonBasis(3, {B("101"), B("011")}));
  CHECK_THROWS_AS(EchelonBasis(3, {B("011"), B("101")}), InvalidArgument);
  CHECK_THROWS_AS(EchelonBasis(3, {B("111"), B("011")}), InvalidArgument);
  CHECK_THROWS_AS(EchelonBasis(3, {B("000")}), InvalidArgument);
}

TEST_CASE("reduce") {
  const EchelonBasis e = echelonize(BitMatrix(4, {B("1100"), B("0011")}));
  CHECK(reduce(B("1100"), e).none());
  CHECK(reduce(BitVector(4), e).none());
  CHECK(in_span(B("1111"), e));
  CHECK_FALSE(in_span(B("1000"), e));
  CHECK(reduce(B("1000"), e) == B("0100"));
  CHECK_THROWS_AS(reduce(B("10"), e), InvalidArgument);
}

TEST_CASE("membership agrees with span enumeration at rank <= 12") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t width = 1 + rng() % 150;
    const std::size_t rows = rng() % 13;
    const BitMatrix m = random_matrix(rng, rows, width);
    std::set<std::string> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows); ++mask) {
      BitVector v(width);
      for (std::size_t i = 0; i < rows; ++i) {
        if ((mask >> i) & 1U) v ^= m.rows()[i];
      }
      span.insert(v.to_string());
    }
    const EchelonBasis e = echelonize(m);
    CHECK(e.rank() <= rows);
    for (const auto& s : span) CHECK(in_span(B(s.c_str()), e));
    for (int q = 0; q < 8; ++q) {
      const BitVector v = random_vector(rng, width);
      CHECK(in_span(v, e) == (span.count(v.to_string()) == 1));
    }
  }
}

TEST_CASE("rank agrees with naive elimination") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 120;
    const std::size_t width = 1 + rng() % 200;
    BitMatrix m = random_matrix(rng, rows, width);
    // duplicate some rows so the rank is deficient
    for (std::size_t i = 0; i < rows / 3; ++i) m.add_row(m.rows()[rng() % rows]);
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("echelon form: invariants, idempotence, kernel") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t width = 1 + rng() % 140;
    const BitMatrix m = random_matrix(rng, rng() % 160, width);
    const EchelonBasis e = echelonize(m);
    CHECK_NOTHROW(EchelonBasis(width, e.rows()));
    CHECK(echelonize(BitMatrix(width, e.rows())).rows() == e.rows());
    for (const auto& r : m.rows()) CHECK(in_span(r, e));
    const auto ker = kernel_basis(m);
    CHECK(e.rank() + ker.size() == width);
    for (const auto& v : ker) CHECK(m.apply(v).none());
    CHECK(rank(BitMatrix(width, ker)) == ker.size());
  }
}
