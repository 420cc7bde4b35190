#ifndef CUPLEN_GF2LINALG_HPP
#define CUPLEN_GF2LINALG_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cuplen {

/// Fixed-width vector over GF(2), packed into 64-bit words. Bits past
/// `width` in the last word are always zero.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t width) : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}

  /// Parses a string of '0'/'1' characters, column 0 first.
  static BitVector from_string(const std::string& bits);

  std::size_t width() const { return width_; }
  std::size_t word_count() const { return words_.size(); }
  const Word* words() const { return words_.data(); }
  Word* words() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit, or width() if none.
  std::size_t first_set() const;
  /// Index of the lowest set bit at or after `from`, or width() if none.
  std::size_t next_set(std::size_t from) const;

  /// Word-wise XOR; widths must match.
  BitVector& operator^=(const BitVector& other);
  /// XOR of other's words starting at word `first_word`.
  void xor_from(const BitVector& other, std::size_t first_word);

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<Word> words_;
};

/// Calls f(i) for every set bit i in increasing order.
template <typename F>
void for_each_set_bit(const BitVector& v, F&& f) {
  const auto* w = v.words();
  for (std::size_t k = 0; k < v.word_count(); ++k) {
    auto word = w[k];
    while (word != 0) {
      f(k * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

/// Rows of equal width.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t width) : width_(width) {}
  BitMatrix(std::size_t width, std::vector<BitVector> rows);

  std::size_t width() const { return width_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }

  void add_row(BitVector row);
  /// Matrix-vector product over GF(2): bit i of the result is <row_i, v>.
  BitVector apply(const BitVector& v) const;

 private:
  std::size_t width_;
  std::vector<BitVector> rows_;
};

class EchelonBasis;
EchelonBasis echelonize(const BitMatrix& m);

/// Reduced row-echelon basis of a row space: pivots strictly increasing and
/// each pivot column nonzero only in its own row.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}
  /// Takes rows already in reduced echelon form; throws InvalidArgument if
  /// they are not.
  EchelonBasis(std::size_t width, std::vector<BitVector> rows);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  friend EchelonBasis echelonize(const BitMatrix& m);

  std::size_t width_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Gauss-Jordan elimination with word-wise XOR. Columns are swept left to
/// right; the pivot of each column is the first remaining row with a 1 there.
EchelonBasis echelonize(const BitMatrix& m);

/// Normal form of v modulo the row space of b; zero iff v is in the span.
BitVector reduce(BitVector v, const EchelonBasis& b);
bool in_span(const BitVector& v, const EchelonBasis& b);

std::size_t rank(const BitMatrix& m);

/// Basis of {x : m x = 0}, one vector per non-pivot column.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

}  // namespace cuplen

#endif  // CUPLEN_GF2LINALG_HPP
