#include <cstdlib>
#include "idalg/linalg/vector.hpp"

#include <algorithm>

#include "idalg/error.hpp"

namespace idalg {

Vector Vector::unit(std::size_t dim, std::size_t index, GaussScalar value) {
  if (index >= dim) throw Error(Errc::DimensionMismatch, "unit vector index out of range");
  Vector v(dim);
  v.push_back(static_cast<std::uint32_t>(index), std::move(value));
  return v;
}

Vector Vector::from_dense(std::span<const GaussScalar> values) {
  Vector v(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!values[k].is_zero()) v.entries_.push_back({static_cast<std::uint32_t>(k), values[k]});
  }
  return v;
}

void Vector::push_back(std::uint32_t index, GaussScalar value) {
  if (index >= dim_ || (!entries_.empty() && entries_.back().index >= index)) {
    throw Error(Errc::DimensionMismatch, "vector entries must be in range and increasing");
  }
  if (!value.is_zero()) entries_.push_back({index, std::move(value)});
}

GaussScalar Vector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return {};
}

std::vector<GaussScalar> Vector::to_dense() const {
  std::vector<GaussScalar> out(dim_);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

bool Vector::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.value.is_real(); });
}

Vector Vector::scaled(const GaussScalar& c) const {
  Vector out(dim_);
  if (c.is_zero()) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, e.value * c});
  return out;
}

Vector Vector::primitive() const {
  if (entries_.empty()) return *this;
  mpz_class l = 1, g = 0;
  bool small = true;
  for (const auto& e : entries_) {
    for (const Rational* x : {&e.value.re(), &e.value.im()}) {
      if (x->is_zero()) continue;
      if (!x->is_integer() || !x->is_small() || std::abs(x->small_num()) != 1) small = false;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x->denominator().get_mpz_t());
    }
  }
  if (small) return *this;
  for (const auto& e : entries_) {
    for (const Rational* x : {&e.value.re(), &e.value.im()}) {
      if (x->is_zero()) continue;
      mpz_class v = x->numerator() * (l / x->denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  }
  const Rational factor(l, g);
  if (factor.is_one()) return *this;
  return scaled(GaussScalar(factor));
}

Vector Vector::axpy(const GaussScalar& c, const Vector& other) const {
  if (other.dim_ != dim_) throw Error(Errc::DimensionMismatch, "axpy on vectors of different dimension");
  if (c.is_zero() || other.is_zero()) return *this;
  Vector out(dim_);
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->index < a->index) {
      out.entries_.push_back({b->index, c * b->value});
      ++b;
    } else {
      GaussScalar s = a->value + c * b->value;
      if (!s.is_zero()) out.entries_.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  return out;
}

GaussScalar dot(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "dot of vectors of different dimension");
  GaussScalar sum;
  auto x = a.entries().begin();
  auto y = b.entries().begin();
  while (x != a.entries().end() && y != b.entries().end()) {
    if (x->index < y->index) {
      ++x;
    } else if (y->index < x->index) {
      ++y;
    } else {
      sum += x->value * y->value;
      ++x;
      ++y;
    }
  }
  return sum;
}

Accumulator::Accumulator(std::size_t dim) : values_(dim), used_(dim, 0) {}

void Accumulator::add(std::uint32_t index, const GaussScalar& value) {
  if (value.is_zero()) return;
  if (!used_[index]) {
    used_[index] = 1;
    touched_.push_back(index);
    values_[index] = value;
  } else {
    values_[index] += value;
  }
}

void Accumulator::add_scaled(const Vector& v, const GaussScalar& c) {
  if (c.is_zero()) return;
  if (c.is_one()) {
    add_vector(v);
    return;
  }
  for (const auto& e : v.entries()) add(e.index, e.value * c);
}

void Accumulator::add_vector(const Vector& v) {
  for (const auto& e : v.entries()) add(e.index, e.value);
}

Vector Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  Vector out(values_.size());
  for (std::uint32_t idx : touched_) {
    if (!values_[idx].is_zero()) out.push_back(idx, std::move(values_[idx]));
    values_[idx] = GaussScalar();
    used_[idx] = 0;
  }
  touched_.clear();
  return out;
}

}  // namespace idalg
