#pragma once

#include "braidcalc/word.hpp"

namespace braidcalc {

// Delta^delta_power followed by left-weighted permutation-braid factors; equal
// braids produce identical forms, so == decides the word problem.
struct CanonicalForm {
  int strands = 1;
  long long delta_power = 0;
  std::vector<Perm> factors;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline bool is_trivial(const CanonicalForm& f) { return f.delta_power == 0 && f.factors.empty(); }

namespace detail {

inline Perm rev_perm(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 1; i <= n; ++i) p.img[i - 1] = n + 1 - i;
  return p;
}

inline bool is_rev(const Perm& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    if (p.of(i) != n + 1 - i) return false;
  return true;
}

inline Perm transposition(int n, int t) {
  Perm p = Perm::identity(n);
  std::swap(p.img[t - 1], p.img[t]);
  return p;
}

inline Perm tau_conj(const Perm& p) {
  const int n = p.size();
  Perm out;
  out.img.resize(n);
  for (int i = 1; i <= n; ++i) out.img[i - 1] = n + 1 - p.of(n + 1 - i);
  return out;
}

// Starting set of a permutation braid: descents of the inverse permutation.
// Finishing set: descents of the permutation itself.  Shifts every generator
// in S(b)\F(a) from the front of b to the back of a; the pair is left-weighted
// exactly when that set is empty.
inline bool left_weight_pair(Perm& a, Perm& b) {
  const int n = a.size();
  Perm ib = inverse(b);
  bool moved = false;
  for (;;) {
    int t = 0;
    for (int c = 1; c < n; ++c) {
      if (ib.of(c) > ib.of(c + 1) && a.of(c) < a.of(c + 1)) {
        t = c;
        break;
      }
    }
    if (!t) return moved;
    moved = true;
    std::swap(a.img[t - 1], a.img[t]);
    const int pa = ib.of(t), pb = ib.of(t + 1);
    b.img[pa - 1] = t + 1;
    b.img[pb - 1] = t;
    std::swap(ib.img[t - 1], ib.img[t]);
  }
}

}  // namespace detail

inline CanonicalForm normal_form(const ArtinWord& w) {
  validate(w);
  const int n = w.strands;
  CanonicalForm out{n, 0, {}};
  if (n == 1) return out;
  std::vector<Perm>& fs = out.factors;

  auto tau_prefix = [&](size_t count) {
    for (size_t i = 0; i < count; ++i) fs[i] = detail::tau_conj(fs[i]);
  };
  auto absorb_half_twist = [&](size_t j) {
    out.delta_power += 1;
    tau_prefix(j);
    fs.erase(fs.begin() + j);
  };
  auto settle_last = [&] {
    size_t j = fs.size() - 1;
    while (j > 0) {
      bool moved = detail::left_weight_pair(fs[j - 1], fs[j]);
      bool structural = false;
      if (is_identity(fs[j])) {
        fs.erase(fs.begin() + j);
        structural = true;
      }
      if (detail::is_rev(fs[j - 1])) {
        absorb_half_twist(j - 1);
        structural = true;
      }
      if (!moved && !structural) break;
      if (j > fs.size()) j = fs.size();
      if (j == 0) break;
      --j;
    }
  };

  for (const ArtinLetter& x : w.letters) {
    Perm c;
    if (x.sign > 0) {
      c = detail::transposition(n, x.index);
    } else {
      out.delta_power -= 1;
      tau_prefix(fs.size());
      c = compose(detail::rev_perm(n), detail::transposition(n, x.index));
    }
    if (is_identity(c)) continue;
    if (detail::is_rev(c)) {
      out.delta_power += 1;
      tau_prefix(fs.size());
      continue;
    }
    fs.push_back(std::move(c));
    settle_last();
  }

  // the factor list is the normal form exactly when every adjacent pair is
  // left-weighted and no factor is trivial or the half twist; sweep until so
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = fs.size(); j-- > 1;) {
      if (j >= fs.size()) continue;
      if (detail::left_weight_pair(fs[j - 1], fs[j])) changed = true;
      if (is_identity(fs[j])) {
        fs.erase(fs.begin() + j);
        changed = true;
      }
      if (detail::is_rev(fs[j - 1])) {
        absorb_half_twist(j - 1);
        changed = true;
      }
    }
  }
  return out;
}

inline Perm permutation_of(const CanonicalForm& f) {
  Perm p = Perm::identity(f.strands);
  if (f.delta_power % 2 != 0) p = detail::rev_perm(f.strands);
  for (const Perm& factor : f.factors) p = compose(p, factor);
  return p;
}

}  // namespace braidcalc
