// Dense matrices over Z_q with entries kept as canonical representatives in
// (-q/2, q/2]. The schemes use odd prime q up to 2^62; the type itself
// accepts any modulus >= 2 (the gadget layer is exercised at round moduli
// too). All arithmetic reduces through 128-bit intermediates, so products of
// canonical entries never overflow.
//
// Small-norm integer matrices (trapdoors, preimages, evaluation matrices)
// use the same type: as long as no intermediate leaves (-q/2, q/2], the
// canonical representative IS the integer, so mod-q algebra and integer
// algebra coincide. Norm bounds in the callers guarantee exactly that.
#pragma once

#include <cstdint>
#include <vector>

#include "skl/rng.hpp"

namespace skl {

using int128 = __int128;

// Reduce v to the canonical representative in (-q/2, q/2].
int64_t canonical_mod(int128 v, int64_t q);

class ZqMatrix {
 public:
  ZqMatrix() = default;
  ZqMatrix(size_t rows, size_t cols, int64_t q);

  static ZqMatrix uniform(size_t rows, size_t cols, int64_t q, Rng& rng);
  static ZqMatrix identity(size_t n, int64_t q);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  int64_t modulus() const { return q_; }

  int64_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  void set(size_t r, size_t c, int64_t v);

  ZqMatrix operator+(const ZqMatrix& o) const;
  ZqMatrix operator-(const ZqMatrix& o) const;
  ZqMatrix operator*(const ZqMatrix& o) const;
  ZqMatrix scaled(int64_t s) const;
  ZqMatrix negated() const;
  ZqMatrix transpose() const;

  ZqMatrix hstack(const ZqMatrix& o) const;
  ZqMatrix vstack(const ZqMatrix& o) const;
  ZqMatrix block(size_t r0, size_t c0, size_t rows, size_t cols) const;
  void set_block(size_t r0, size_t c0, const ZqMatrix& o);
  ZqMatrix column(size_t c) const { return block(0, c, rows_, 1); }

  bool operator==(const ZqMatrix& o) const;
  bool operator!=(const ZqMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  // Largest |entry|; 0 for an empty matrix.
  int64_t linf() const;

  std::vector<uint8_t> encode() const;
  static ZqMatrix decode(const std::vector<uint8_t>& bytes);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  int64_t q_ = 1;
  std::vector<int64_t> a_;  // row-major
};

}  // namespace skl
