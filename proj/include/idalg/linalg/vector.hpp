#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idalg/linalg/gauss.hpp"

namespace idalg {

/// Sparse vector over Q(i) with a fixed ambient dimension.  Entries are kept
/// sorted by index and never store an explicit zero, so two vectors are equal
/// iff their entry lists are identical.
class Vector {
 public:
  struct Entry {
    std::uint32_t index;
    GaussScalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Vector() = default;
  explicit Vector(std::size_t dim) : dim_(dim) {}

  static Vector unit(std::size_t dim, std::size_t index, GaussScalar value = GaussScalar(1));
  static Vector from_dense(std::span<const GaussScalar> values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::span<const Entry> entries() const noexcept { return entries_; }

  /// Appends an entry; indices must be strictly increasing.  Zero values are dropped.
  void push_back(std::uint32_t index, GaussScalar value);

  GaussScalar at(std::size_t index) const;
  std::vector<GaussScalar> to_dense() const;
  bool is_real() const;

  /// Index of the first nonzero entry; requires !is_zero().
  std::uint32_t leading_index() const { return entries_.front().index; }

  Vector scaled(const GaussScalar& c) const;
  /// Positive rational multiple with coprime Gaussian-integer entries.
  Vector primitive() const;
  /// this + c * other
  Vector axpy(const GaussScalar& c, const Vector& other) const;

  friend Vector operator+(const Vector& a, const Vector& b) { return a.axpy(GaussScalar(1), b); }
  friend Vector operator-(const Vector& a, const Vector& b) { return a.axpy(GaussScalar(-1), b); }
  friend Vector operator*(const GaussScalar& c, const Vector& v) { return v.scaled(c); }

  friend bool operator==(const Vector& a, const Vector& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Bilinear (not Hermitian) pairing sum_k a_k b_k.
GaussScalar dot(const Vector& a, const Vector& b);

/// Dense scratch space for accumulating sparse linear combinations.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim);

  std::size_t dim() const noexcept { return values_.size(); }
  void add(std::uint32_t index, const GaussScalar& value);
  void add_scaled(const Vector& v, const GaussScalar& c);
  void add_vector(const Vector& v);
  const GaussScalar& get(std::uint32_t index) const { return values_[index]; }

  /// Returns the accumulated vector and resets the scratch space.
  Vector take();

 private:
  std::vector<GaussScalar> values_;
  std::vector<std::uint32_t> touched_;
  std::vector<char> used_;
};

}  // namespace idalg
