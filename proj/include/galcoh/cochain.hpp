#pragma once

#include <vector>

#include "galcoh/gmodule.hpp"

namespace galcoh {

/* Inhomogeneous n-cochain: a dense table G^n -> M.  Values are stored in
 * one flat vector, tuple-major (lexicographic tuple order, first component
 * most significant) with the module coordinates innermost, always reduced
 * modulo the invariant factors. */
class Cochain {
 public:
  Cochain(GModulePtr module, int degree);  // zero cochain
  static Cochain from_flat(GModulePtr module, int degree, std::vector<Int> flat);

  int degree() const { return degree_; }
  const GModulePtr& module() const { return module_; }
  std::size_t tuple_count() const { return count_; }
  const std::vector<Int>& flat() const { return flat_; }

  std::vector<Int> value(const std::vector<int>& tuple) const;
  std::vector<Int> value_at(std::size_t tuple_index) const;
  void set_value(const std::vector<int>& tuple, const std::vector<Int>& v);
  void set_value_at(std::size_t tuple_index, const std::vector<Int>& v);

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  Cochain scaled(const Int& k) const;

  bool is_zero() const;
  bool operator==(const Cochain& o) const;

  /* Shared module pointer or structurally equal module, same degree. */
  bool same_shape(const Cochain& o) const;

 private:
  GModulePtr module_;
  int degree_ = 0;
  std::size_t count_ = 0;  // |G|^degree
  std::vector<Int> flat_;  // count_ * rank entries

  void reduce();
};

}  // namespace galcoh
