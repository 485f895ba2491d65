#include "galcoh/cochain.hpp"

#include "galcoh/error.hpp"

namespace galcoh {

Cochain::Cochain(GModulePtr module, int degree) : module_(std::move(module)), degree_(degree) {
  if (!module_) throw InvalidInput("cochain needs a module");
  if (degree_ < 0) throw InvalidInput("cochain degree must be nonnegative");
  count_ = TupleIndexer(module_->group().size(), degree_).count();
  flat_.assign(count_ * module_->rank(), Int(0));
}

Cochain Cochain::from_flat(GModulePtr module, int degree, std::vector<Int> flat) {
  Cochain c(std::move(module), degree);
  if (flat.size() != c.flat_.size()) throw InvalidInput("flat cochain data has wrong length");
  c.flat_ = std::move(flat);
  c.reduce();
  return c;
}

void Cochain::reduce() {
  const auto& f = module_->coefficients().invariant_factors();
  const std::size_t r = module_->rank();
  for (std::size_t t = 0; t < count_; ++t)
    for (std::size_t i = 0; i < r; ++i)
      if (f[i] != 0) {
        Int& x = flat_[t * r + i];
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), f[i].get_mpz_t());
      }
}

std::vector<Int> Cochain::value(const std::vector<int>& tuple) const {
  return value_at(TupleIndexer(module_->group().size(), degree_).index(tuple));
}

std::vector<Int> Cochain::value_at(std::size_t tuple_index) const {
  const std::size_t r = module_->rank();
  std::vector<Int> v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = flat_[tuple_index * r + i];
  return v;
}

void Cochain::set_value(const std::vector<int>& tuple, const std::vector<Int>& v) {
  set_value_at(TupleIndexer(module_->group().size(), degree_).index(tuple), v);
}

void Cochain::set_value_at(std::size_t tuple_index, const std::vector<Int>& v) {
  const std::size_t r = module_->rank();
  if (v.size() != r) throw InvalidInput("value has wrong number of coordinates");
  std::vector<Int> red = module_->coefficients().reduce(v);
  for (std::size_t i = 0; i < r; ++i) flat_[tuple_index * r + i] = red[i];
}

bool Cochain::same_shape(const Cochain& o) const {
  if (degree_ != o.degree_) return false;
  return module_ == o.module_ || module_->structurally_equal(*o.module_);
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (!same_shape(o)) throw InvalidInput("cochain shapes differ");
  Cochain r(module_, degree_);
  for (std::size_t i = 0; i < flat_.size(); ++i) r.flat_[i] = flat_[i] + o.flat_[i];
  r.reduce();
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  if (!same_shape(o)) throw InvalidInput("cochain shapes differ");
  Cochain r(module_, degree_);
  for (std::size_t i = 0; i < flat_.size(); ++i) r.flat_[i] = flat_[i] - o.flat_[i];
  r.reduce();
  return r;
}

Cochain Cochain::operator-() const {
  Cochain r(module_, degree_);
  for (std::size_t i = 0; i < flat_.size(); ++i) r.flat_[i] = -flat_[i];
  r.reduce();
  return r;
}

Cochain Cochain::scaled(const Int& k) const {
  Cochain r(module_, degree_);
  for (std::size_t i = 0; i < flat_.size(); ++i) r.flat_[i] = k * flat_[i];
  r.reduce();
  return r;
}

bool Cochain::is_zero() const {
  for (const Int& x : flat_)
    if (x != 0) return false;
  return true;
}

bool Cochain::operator==(const Cochain& o) const {
  return same_shape(o) && flat_ == o.flat_;
}

}  // namespace galcoh
