#include "cuplen/gf2linalg.hpp"

#include <algorithm>
#include <utility>

#include "cuplen/error.hpp"

namespace cuplen {

namespace {

void check_width(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw InvalidArgument("bit vector width " + std::to_string(got) + " does not match " +
                          std::to_string(expected));
  }
}

}  // namespace

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InvalidArgument("bit strings may only contain 0 and 1");
    }
  }
  return v;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::first_set() const { return next_set(0); }

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= width_) return width_;
  std::size_t k = from / kWordBits;
  Word w = words_[k] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++k == words_.size()) return width_;
    w = words_[k];
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_width(width_, other.width_);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

void BitVector::xor_from(const BitVector& other, std::size_t first_word) {
  for (std::size_t k = first_word; k < words_.size(); ++k) words_[k] ^= other.words_[k];
}

std::string BitVector::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t width, std::vector<BitVector> rows) : width_(width), rows_(std::move(rows)) {
  for (const auto& r : rows_) check_width(width_, r.width());
}

void BitMatrix::add_row(BitVector row) {
  check_width(width_, row.width());
  rows_.push_back(std::move(row));
}

BitVector BitMatrix::apply(const BitVector& v) const {
  check_width(width_, v.width());
  BitVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t parity = 0;
    for (std::size_t k = 0; k < v.word_count(); ++k) {
      parity += static_cast<std::size_t>(std::popcount(rows_[i].words()[k] & v.words()[k]));
    }
    if (parity & 1U) out.set(i);
  }
  return out;
}

EchelonBasis::EchelonBasis(std::size_t width, std::vector<BitVector> rows) : width_(width), rows_(std::move(rows)) {
  pivots_.reserve(rows_.size());
  for (const auto& r : rows_) {
    check_width(width_, r.width());
    std::size_t p = r.first_set();
    if (p == width_) throw InvalidArgument("echelon rows must be nonzero");
    if (!pivots_.empty() && p <= pivots_.back()) throw InvalidArgument("echelon pivots must increase");
    pivots_.push_back(p);
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (i != j && rows_[j].test(pivots_[i])) throw InvalidArgument("echelon rows are not reduced");
    }
  }
}

EchelonBasis echelonize(const BitMatrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.row_count());
  for (const auto& r : m.rows()) {
    if (r.any()) rows.push_back(r);
  }
  const std::size_t width = m.width();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::size_t word = col / BitVector::kWordBits;
    const BitVector& p = rows[rank];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].test(col)) rows[i].xor_from(p, word);
    }
    ++rank;
  }
  rows.resize(rank);
  EchelonBasis out(width);
  out.pivots_.reserve(rank);
  for (const auto& r : rows) out.pivots_.push_back(r.first_set());
  out.rows_ = std::move(rows);
  return out;
}

BitVector reduce(BitVector v, const EchelonBasis& b) {
  check_width(b.width(), v.width());
  const auto& rows = b.rows();
  const auto& pivots = b.pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (v.test(pivots[i])) v.xor_from(rows[i], pivots[i] / BitVector::kWordBits);
  }
  return v;
}

bool in_span(const BitVector& v, const EchelonBasis& b) { return reduce(v, b).none(); }

std::size_t rank(const BitMatrix& m) { return echelonize(m).rank(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  const EchelonBasis e = echelonize(m);
  const std::size_t width = m.width();
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : e.pivots()) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    BitVector x(width);
    x.set(free);
    // Row i reads x[pivot_i] + sum_{free cols c} row_i[c] x[c] = 0.
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (e.rows()[i].test(free)) x.set(e.pivots()[i]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace cuplen
