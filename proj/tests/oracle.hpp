#pragma once

/* Brute-force group cohomology over tiny coefficient modules, used as an
 * oracle against the normal-form implementation.  Deliberately built on its
 * own flat data model (value codes, lookup tables, odometer enumeration)
 * rather than the library types, so the two paths share no algebra code.
 *
 * Full mode enumerates every cochain table.  Normalized mode enumerates
 * only tables supported on identity-free tuples; the two modes are
 * cross-checked against each other wherever full enumeration is feasible,
 * and the coboundary of every enumerated table is verified to stay
 * supported on identity-free tuples. */

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "galcoh/gmodule.hpp"

namespace brute {

struct Module {
  const galcoh::FiniteGroup* group = nullptr;
  long msize = 1;                       // number of module elements
  std::vector<long> moduli;             // invariant factors, all finite
  std::vector<std::vector<long>> act;   // act[g][v]
  std::vector<std::vector<long>> add;   // add[a][b]
  std::vector<long> neg;

  explicit Module(const galcoh::GModule& m) : group(&m.group()) {
    for (const auto& f : m.coefficients().invariant_factors()) {
      if (f == 0) throw std::runtime_error("oracle needs a finite module");
      moduli.push_back(f.get_si());
      msize *= moduli.back();
    }
    auto decode = [&](long v) {
      std::vector<long> c(moduli.size());
      for (std::size_t i = moduli.size(); i-- > 0;) {
        c[i] = v % moduli[i];
        v /= moduli[i];
      }
      return c;
    };
    auto encode = [&](const std::vector<long>& c) {
      long v = 0;
      for (std::size_t i = 0; i < moduli.size(); ++i) v = v * moduli[i] + c[i] % moduli[i];
      return v;
    };
    act.assign(group->size(), std::vector<long>(msize));
    for (int g = 0; g < group->size(); ++g)
      for (long v = 0; v < msize; ++v) {
        std::vector<long> c = decode(v);
        std::vector<long> r(moduli.size(), 0);
        for (std::size_t i = 0; i < moduli.size(); ++i) {
          long s = 0;
          for (std::size_t j = 0; j < moduli.size(); ++j)
            s += m.action(g).at(i, j).get_si() % moduli[i] * c[j];
          r[i] = ((s % moduli[i]) + moduli[i]) % moduli[i];
        }
        act[g][v] = encode(r);
      }
    add.assign(msize, std::vector<long>(msize));
    neg.assign(msize, 0);
    for (long a = 0; a < msize; ++a) {
      std::vector<long> ca = decode(a);
      std::vector<long> cn(moduli.size());
      for (std::size_t i = 0; i < moduli.size(); ++i) cn[i] = (moduli[i] - ca[i]) % moduli[i];
      neg[a] = encode(cn);
      for (long b = 0; b < msize; ++b) {
        std::vector<long> cb = decode(b);
        std::vector<long> cs(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) cs[i] = (ca[i] + cb[i]) % moduli[i];
        add[a][b] = encode(cs);
      }
    }
  }
};

/* Positions a degree-n table is supported on: all tuples, or the
 * identity-free ones. */
struct Support {
  int gsize = 1, arity = 0;
  bool normalized = false;
  std::size_t count = 1;

  Support(int gsize_, int arity_, bool normalized_)
      : gsize(gsize_), arity(arity_), normalized(normalized_) {
    int base = normalized ? gsize - 1 : gsize;
    count = 1;
    for (int i = 0; i < arity; ++i) count *= static_cast<std::size_t>(base);
  }

  /* Index of a full tuple within the support, or -1 when the tuple is
   * outside it (identity argument in normalized mode; value is 0 there). */
  long index(const std::vector<int>& t) const {
    long idx = 0;
    for (int g : t) {
      if (normalized) {
        if (g == 0) return -1;
        idx = idx * (gsize - 1) + (g - 1);
      } else {
        idx = idx * gsize + g;
      }
    }
    return idx;
  }
};

using Table = std::vector<int>;  // value code per support position

inline long eval(const Table& c, const Support& s, const std::vector<int>& t) {
  long i = s.index(t);
  return i < 0 ? 0 : c[i];
}

/* d(c) at one (arity+1)-tuple. */
inline long coboundary_at(const Module& m, const Table& c, const Support& s,
                          const std::vector<int>& t) {
  const int n = s.arity;
  std::vector<int> sub(t.begin() + 1, t.end());
  long acc = m.act[t[0]][eval(c, s, sub)];
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < n; ++k)
      sub[k] = k < i - 1 ? t[k] : (k == i - 1 ? m.group->mul(t[i - 1], t[i]) : t[k + 1]);
    long v = eval(c, s, sub);
    acc = m.add[acc][i % 2 ? m.neg[v] : v];
  }
  sub.assign(t.begin(), t.end() - 1);
  long v = eval(c, s, sub);
  acc = m.add[acc][(n + 1) % 2 ? m.neg[v] : v];
  return acc;
}

inline std::vector<std::vector<int>> all_tuples(int gsize, int arity) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(arity, 0);
  for (;;) {
    out.push_back(t);
    int i = arity - 1;
    for (; i >= 0; --i) {
      if (++t[i] < gsize) break;
      t[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

inline std::string key(const Table& t) {
  std::string s(t.size(), '\0');
  for (std::size_t i = 0; i < t.size(); ++i) s[i] = static_cast<char>(t[i]);
  return s;
}

struct Cohomology {
  long class_count = 0;
  std::map<long, long> order_histogram;  // order of class -> number of classes
};

inline Cohomology cohomology(const galcoh::GModule& gm, int degree, bool normalized) {
  Module m(gm);
  const int gsize = m.group->size();
  Support sup(gsize, degree, normalized);
  auto checks = all_tuples(gsize, degree + 1);

  /* Coboundaries: image of every table one degree down. */
  std::unordered_set<std::string> bset;
  Support sub_sup(gsize, degree - 1 < 0 ? 0 : degree - 1, normalized);
  auto deg_tuples = all_tuples(gsize, degree);
  if (degree == 0) {
    bset.insert(key(Table(sup.count, 0)));
  } else {
    Table tau(sub_sup.count, 0);
    for (;;) {
      Table img(sup.count, 0);
      for (const auto& t : deg_tuples) {
        long v = coboundary_at(m, tau, sub_sup, t);
        long i = sup.index(t);
        if (i < 0) {
          if (v != 0)
            throw std::runtime_error("coboundary left the identity-free support");
        } else {
          img[i] = static_cast<int>(v);
        }
      }
      bset.insert(key(img));
      std::size_t i = 0;
      for (; i < tau.size(); ++i) {
        if (++tau[i] < m.msize) break;
        tau[i] = 0;
      }
      if (i == tau.size()) break;
    }
  }

  /* Cocycles, with the class order read off against the coboundary set. */
  Cohomology out;
  std::map<long, long> element_histogram;
  long zcount = 0;
  Table z(sup.count, 0);
  for (;;) {
    bool ok = true;
    for (const auto& t : checks)
      if (coboundary_at(m, z, sup, t) != 0) {
        ok = false;
        break;
      }
    if (ok) {
      ++zcount;
      Table acc = z;
      long ord = 1;
      while (!bset.count(key(acc))) {
        ++ord;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = static_cast<int>(m.add[acc[i]][z[i]]);
      }
      element_histogram[ord] += 1;
    }
    std::size_t i = 0;
    for (; i < z.size(); ++i) {
      if (++z[i] < m.msize) break;
      z[i] = 0;
    }
    if (i == z.size()) break;
  }

  const long bsize = static_cast<long>(bset.size());
  if (zcount % bsize != 0) throw std::runtime_error("coboundaries do not partition the cocycles");
  out.class_count = zcount / bsize;
  for (auto& [ord, cnt] : element_histogram) {
    if (cnt % bsize != 0) throw std::runtime_error("order histogram is not coset-constant");
    out.order_histogram[ord] = cnt / bsize;
  }
  return out;
}

/* Whether enumerating every cochain of this degree and the one below stays
 * within `limit` tables per level. */
inline bool feasible(const galcoh::GModule& gm, int degree, bool normalized,
                     double limit = 300000.0) {
  double msize = 1;
  for (const auto& f : gm.coefficients().invariant_factors()) msize *= f.get_d();
  double base = gm.group().size() - (normalized ? 1 : 0);
  double t_n = std::pow(base, degree);
  double t_prev = degree ? std::pow(base, degree - 1) : 0;
  return std::pow(msize, t_n) <= limit && std::pow(msize, t_prev) <= limit;
}

/* Element-order histogram of the finite abelian group with the given
 * invariant factors, for comparing against the oracle's class data. */
inline std::map<long, long> histogram_of_factors(const std::vector<galcoh::Int>& factors) {
  std::map<long, long> h;
  std::vector<long> idx(factors.size(), 0);
  for (;;) {
    long ord = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      long f = factors[i].get_si();
      ord = std::lcm(ord, f / std::gcd(idx[i], f));
    }
    h[ord] += 1;
    std::size_t i = 0;
    for (; i < factors.size(); ++i) {
      if (++idx[i] < factors[i].get_si()) break;
      idx[i] = 0;
    }
    if (i == factors.size()) break;
  }
  return h;
}

}  // namespace brute
