#include "skl/lattice/zq.hpp"

#include <stdexcept>

#include "skl/encode.hpp"

namespace skl {

int64_t canonical_mod(int128 v, int64_t q) {
  // Canonical range (-q/2, q/2]: for odd q the symmetric interval, for even q
  // the upper endpoint q/2 is included.
  int64_t r = static_cast<int64_t>(v % q);
  if (r > q / 2) r -= q;
  if (r < -((q - 1) / 2)) r += q;
  return r;
}

ZqMatrix::ZqMatrix(size_t rows, size_t cols, int64_t q) : rows_(rows), cols_(cols), q_(q), a_(rows * cols, 0) {
  if (q < 2) throw std::invalid_argument("modulus must be >= 2");
}

ZqMatrix ZqMatrix::uniform(size_t rows, size_t cols, int64_t q, Rng& rng) {
  ZqMatrix m(rows, cols, q);
  for (auto& v : m.a_) v = canonical_mod(static_cast<int128>(rng.below(static_cast<uint64_t>(q))), q);
  return m;
}

ZqMatrix ZqMatrix::identity(size_t n, int64_t q) {
  ZqMatrix m(n, n, q);
  for (size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

void ZqMatrix::set(size_t r, size_t c, int64_t v) { a_[r * cols_ + c] = canonical_mod(v, q_); }

ZqMatrix ZqMatrix::operator+(const ZqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || q_ != o.q_) throw std::invalid_argument("matrix shape/modulus mismatch");
  ZqMatrix out(rows_, cols_, q_);
  for (size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = canonical_mod(static_cast<int128>(a_[i]) + o.a_[i], q_);
  return out;
}

ZqMatrix ZqMatrix::operator-(const ZqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || q_ != o.q_) throw std::invalid_argument("matrix shape/modulus mismatch");
  ZqMatrix out(rows_, cols_, q_);
  for (size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = canonical_mod(static_cast<int128>(a_[i]) - o.a_[i], q_);
  return out;
}

ZqMatrix ZqMatrix::operator*(const ZqMatrix& o) const {
  if (cols_ != o.rows_ || q_ != o.q_) throw std::invalid_argument("matrix shape/modulus mismatch");
  ZqMatrix out(rows_, o.cols_, q_);
  // Each product of canonical entries is < q^2 <= 2^124; terms are reduced
  // before accumulation, so the running sum stays below cols * q/2 < 2^127.
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < o.cols_; ++j) {
      int128 acc = 0;
      const int64_t* lhs = a_.data() + i * cols_;
      for (size_t t = 0; t < cols_; ++t) acc += static_cast<int128>(lhs[t]) * o.a_[t * o.cols_ + j] % q_;
      out.a_[i * o.cols_ + j] = canonical_mod(acc, q_);
    }
  }
  return out;
}

ZqMatrix ZqMatrix::scaled(int64_t s) const {
  ZqMatrix out(rows_, cols_, q_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = canonical_mod(static_cast<int128>(a_[i]) * s, q_);
  return out;
}

ZqMatrix ZqMatrix::negated() const {
  ZqMatrix out(rows_, cols_, q_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = canonical_mod(-static_cast<int128>(a_[i]), q_);
  return out;
}

ZqMatrix ZqMatrix::transpose() const {
  ZqMatrix out(cols_, rows_, q_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = a_[i * cols_ + j];
  return out;
}

ZqMatrix ZqMatrix::hstack(const ZqMatrix& o) const {
  if (rows_ != o.rows_ || q_ != o.q_) throw std::invalid_argument("hstack shape/modulus mismatch");
  ZqMatrix out(rows_, cols_ + o.cols_, q_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, o);
  return out;
}

ZqMatrix ZqMatrix::vstack(const ZqMatrix& o) const {
  if (cols_ != o.cols_ || q_ != o.q_) throw std::invalid_argument("vstack shape/modulus mismatch");
  ZqMatrix out(rows_ + o.rows_, cols_, q_);
  out.set_block(0, 0, *this);
  out.set_block(rows_, 0, o);
  return out;
}

ZqMatrix ZqMatrix::block(size_t r0, size_t c0, size_t rows, size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("block out of range");
  ZqMatrix out(rows, cols, q_);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) out.a_[i * cols + j] = a_[(r0 + i) * cols_ + (c0 + j)];
  return out;
}

void ZqMatrix::set_block(size_t r0, size_t c0, const ZqMatrix& o) {
  if (r0 + o.rows_ > rows_ || c0 + o.cols_ > cols_) throw std::out_of_range("block out of range");
  if (o.q_ != q_) throw std::invalid_argument("set_block modulus mismatch");
  for (size_t i = 0; i < o.rows_; ++i)
    for (size_t j = 0; j < o.cols_; ++j) a_[(r0 + i) * cols_ + (c0 + j)] = o.a_[i * o.cols_ + j];
}

bool ZqMatrix::operator==(const ZqMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && q_ == o.q_ && a_ == o.a_;
}

bool ZqMatrix::is_zero() const {
  for (int64_t v : a_)
    if (v != 0) return false;
  return true;
}

int64_t ZqMatrix::linf() const {
  int64_t best = 0;
  for (int64_t v : a_) {
    const int64_t mag = v < 0 ? -v : v;
    if (mag > best) best = mag;
  }
  return best;
}

std::vector<uint8_t> ZqMatrix::encode() const {
  enc::Writer w(enc::Tag::zq_matrix);
  w.u64(rows_);
  w.u64(cols_);
  w.i64(q_);
  for (int64_t v : a_) w.i64(v);
  return w.take();
}

ZqMatrix ZqMatrix::decode(const std::vector<uint8_t>& bytes) {
  enc::Reader r(bytes, enc::Tag::zq_matrix);
  const uint64_t rows = r.u64();
  const uint64_t cols = r.u64();
  const int64_t q = r.i64();
  if (q < 2) throw DecodeError("matrix modulus invalid");
  if (rows == 0 || cols == 0 || rows > (1u << 20) || cols > (1u << 20) || rows * cols > (1u << 26))
    throw DecodeError("matrix dimensions out of range");
  ZqMatrix m(rows, cols, q);
  for (auto& v : m.a_) v = canonical_mod(r.i64(), q);
  r.expect_end();
  return m;
}

}  // namespace skl
