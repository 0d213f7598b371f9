#pragma once

#include "braidcalc/garside.hpp"
#include "braidcalc/word.hpp"

namespace braidcalc {

// Parted picture on m+n strands: fixed strands occupy positions 1..m, moving
// strands m+1..m+n.  Generator g_t positive means the strand at position t+1
// crosses over the strand at position t.  The loop a_i sends the first moving
// strand over the fixed strands m..i+1, around fixed strand i, and back.
inline ArtinWord embed(const MixedWord& w) {
  validate(w);
  ArtinWord out{w.m + w.n, {}};
  for (const Letter& x : w.letters) {
    switch (x.kind) {
      case Kind::fixed_crossing:
        out.letters.push_back({x.index, x.sign});
        break;
      case Kind::moving_crossing:
        out.letters.push_back({w.m + x.index, x.sign});
        break;
      case Kind::loop: {
        for (int t = w.m; t > x.index; --t) out.letters.push_back({t, 1});
        out.letters.push_back({x.index, x.sign});
        out.letters.push_back({x.index, x.sign});
        for (int t = x.index + 1; t <= w.m; ++t) out.letters.push_back({t, -1});
        break;
      }
    }
  }
  return out;
}

// Rewrites an ambient word whose permutation preserves {1..m} into the mixed
// alphabet.  Walks the letters top to bottom tracking which positions hold
// fixed strands; crossings in the canonical parting sense (moving over fixed)
// are absorbed into the bookkeeping, counter-sense crossings become conjugated
// loops, and same-family crossings become sigma/Sigma letters.
inline MixedWord artin_to_mixed(const ArtinWord& w, int m, int n) {
  validate(w);
  if (w.strands != m + n) throw std::invalid_argument("strand count does not match context");
  {
    Perm p = permutation_of(w);
    for (int i = 1; i <= m; ++i)
      if (p.of(i) > m) throw std::invalid_argument("not a mixed braid: fixed block not preserved");
  }

  std::vector<bool> fixed_at(w.strands + 1, false);
  for (int i = 1; i <= m; ++i) fixed_at[i] = true;
  auto fixed_before = [&](int pos) {
    int count = 0;
    for (int p = 1; p < pos; ++p) count += fixed_at[p];
    return count;
  };

  MixedWord out{m, n, {}};
  // A counter-sense clasp between fixed strand of rank r and the j-th moving
  // strand rewrites as a_r conjugated under the j-1 moving strands to its left.
  auto emit_loop = [&](int r, int j, int sign) {
    for (const Letter& x : sigma_asc(1, j - 1, -1)) out.letters.push_back(x);
    out.letters.push_back(loop_gen(r, sign));
    for (const Letter& x : sigma_asc(1, j - 1)) out.letters.push_back(x);
  };

  for (const ArtinLetter& x : w.letters) {
    const int t = x.index;
    const bool left_fixed = fixed_at[t];
    const bool right_fixed = fixed_at[t + 1];
    if (!left_fixed && !right_fixed) {
      out.letters.push_back(sigma(t - fixed_before(t), x.sign));
    } else if (left_fixed && right_fixed) {
      out.letters.push_back(Sigma(fixed_before(t) + 1, x.sign));
    } else if (left_fixed) {
      const int r = fixed_before(t) + 1;
      if (x.sign < 0) emit_loop(r, t - (r - 1), -1);
      fixed_at[t] = false;
      fixed_at[t + 1] = true;
    } else {
      const int r = fixed_before(t + 1) + 1;
      if (x.sign > 0) emit_loop(r, t + 1 - r, 1);
      fixed_at[t + 1] = false;
      fixed_at[t] = true;
    }
  }
  return free_reduce(out);
}

}  // namespace braidcalc
