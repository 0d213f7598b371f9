#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcalc {

enum class Kind : unsigned char { fixed_crossing, moving_crossing, loop };

struct Letter {
  Kind kind;
  int index;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter Sigma(int k, int sign = 1) { return {Kind::fixed_crossing, k, sign}; }
inline Letter sigma(int j, int sign = 1) { return {Kind::moving_crossing, j, sign}; }
inline Letter loop_gen(int i, int sign = 1) { return {Kind::loop, i, sign}; }

inline Letter inv(Letter x) { return {x.kind, x.index, -x.sign}; }

struct MixedWord {
  int m = 0;
  int n = 0;
  std::vector<Letter> letters;
  friend bool operator==(const MixedWord&, const MixedWord&) = default;
};

struct ArtinLetter {
  int index;
  int sign;
  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

struct ArtinWord {
  int strands = 1;
  std::vector<ArtinLetter> letters;
  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;
};

inline void validate(const Letter& x, int m, int n) {
  if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("letter sign must be +-1");
  switch (x.kind) {
    case Kind::fixed_crossing:
      if (x.index < 1 || x.index > m - 1)
        throw std::invalid_argument("fixed crossing index " + std::to_string(x.index) +
                                    " out of range for m=" + std::to_string(m));
      break;
    case Kind::moving_crossing:
      if (x.index < 1 || x.index > n - 1)
        throw std::invalid_argument("moving crossing index " + std::to_string(x.index) +
                                    " out of range for n=" + std::to_string(n));
      break;
    case Kind::loop:
      if (x.index < 1 || x.index > m)
        throw std::invalid_argument("loop index " + std::to_string(x.index) +
                                    " out of range for m=" + std::to_string(m));
      if (n < 1) throw std::invalid_argument("loop letter requires a moving strand");
      break;
  }
}

inline void validate(const MixedWord& w) {
  if (w.m < 0 || w.n < 0) throw std::invalid_argument("negative strand count");
  for (const Letter& x : w.letters) validate(x, w.m, w.n);
}

inline void validate(const ArtinWord& w) {
  if (w.strands < 1) throw std::invalid_argument("strand count must be positive");
  for (const ArtinLetter& x : w.letters) {
    if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (x.index < 1 || x.index > w.strands - 1)
      throw std::invalid_argument("generator index " + std::to_string(x.index) +
                                  " out of range for " + std::to_string(w.strands) + " strands");
  }
}

inline MixedWord word_of(int m, int n, std::vector<Letter> letters) {
  MixedWord w{m, n, std::move(letters)};
  validate(w);
  return w;
}

inline void check_context(const MixedWord& u, const MixedWord& v) {
  if (u.m != v.m || u.n != v.n) throw std::invalid_argument("context mismatch");
}

inline MixedWord operator*(const MixedWord& u, const MixedWord& v) {
  check_context(u, v);
  MixedWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

inline ArtinWord operator*(const ArtinWord& u, const ArtinWord& v) {
  if (u.strands != v.strands) throw std::invalid_argument("strand count mismatch");
  ArtinWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

inline MixedWord in_context(const MixedWord& w, int m, int n) {
  MixedWord out{m, n, w.letters};
  validate(out);
  return out;
}

inline MixedWord invert(const MixedWord& w) {
  MixedWord out{w.m, w.n, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(inv(*it));
  return out;
}

inline ArtinWord invert(const ArtinWord& w) {
  ArtinWord out{w.strands, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->index, -it->sign});
  return out;
}

namespace detail {

inline bool cancels(const Letter& u, const Letter& v) {
  return u.kind == v.kind && u.index == v.index && u.sign == -v.sign;
}

inline bool cancels(const ArtinLetter& u, const ArtinLetter& v) {
  return u.index == v.index && u.sign == -v.sign;
}

template <class L>
std::vector<L> reduce_letters(const std::vector<L>& in) {
  std::vector<L> stack;
  stack.reserve(in.size());
  for (const L& x : in) {
    if (!stack.empty() && cancels(stack.back(), x))
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return stack;
}

}  // namespace detail

inline MixedWord free_reduce(const MixedWord& w) {
  return {w.m, w.n, detail::reduce_letters(w.letters)};
}

inline ArtinWord free_reduce(const ArtinWord& w) {
  return {w.strands, detail::reduce_letters(w.letters)};
}

template <class W>
W word_pow(const W& w, int p) {
  W base = p >= 0 ? w : invert(w);
  W out = base;
  out.letters.clear();
  for (int i = 0; i < std::abs(p); ++i) out = out * base;
  return out;
}

// sigma_k sigma_{k+1} .. sigma_r; empty unless 1 <= k <= r.
inline std::vector<Letter> sigma_asc(int k, int r, int sign = 1) {
  std::vector<Letter> out;
  if (k < 1 || r < 1 || k > r) return out;
  if (sign >= 0)
    for (int j = k; j <= r; ++j) out.push_back(sigma(j));
  else
    for (int j = r; j >= k; --j) out.push_back(sigma(j, -1));
  return out;
}

// sigma_k sigma_{k-1} .. sigma_r; empty unless k >= r >= 1.
inline std::vector<Letter> sigma_desc(int k, int r, int sign = 1) {
  std::vector<Letter> out;
  if (k < 1 || r < 1 || k < r) return out;
  if (sign >= 0)
    for (int j = k; j >= r; --j) out.push_back(sigma(j));
  else
    for (int j = r; j <= k; ++j) out.push_back(sigma(j, -1));
  return out;
}

inline MixedWord lambda_word(int k, int r, int m, int n) {
  std::vector<Letter> letters = k <= r ? sigma_asc(k, r) : sigma_desc(k, r);
  return word_of(m, n, std::move(letters));
}

struct Perm {
  std::vector<int> img;  // img[i-1] = image of strand i, values 1-based

  static Perm identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
  }
  int size() const { return static_cast<int>(img.size()); }
  int of(int i) const { return img[i - 1]; }
  friend bool operator==(const Perm&, const Perm&) = default;
};

inline bool is_identity(const Perm& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p.of(i) != i) return false;
  return true;
}

// (f after g)(i) = f(g(i))
inline Perm compose(const Perm& f, const Perm& g) {
  Perm out;
  out.img.resize(g.size());
  for (int i = 1; i <= g.size(); ++i) out.img[i - 1] = f.of(g.of(i));
  return out;
}

inline Perm inverse(const Perm& p) {
  Perm out;
  out.img.resize(p.size());
  for (int i = 1; i <= p.size(); ++i) out.img[p.of(i) - 1] = i;
  return out;
}

namespace detail {

// transpositions composed with the first letter outermost: the result maps each
// bottom position to the label of the strand arriving there
template <class F>
Perm permutation_from(int strands, int count, F&& swap_position_of) {
  std::vector<int> occupant(strands);
  std::iota(occupant.begin(), occupant.end(), 1);
  for (int idx = 0; idx < count; ++idx) {
    int t = swap_position_of(idx);
    if (t >= 1 && t < strands) std::swap(occupant[t - 1], occupant[t]);
  }
  Perm p;
  p.img = std::move(occupant);
  return p;
}

}  // namespace detail

inline Perm permutation_of(const ArtinWord& w) {
  return detail::permutation_from(w.strands, static_cast<int>(w.letters.size()),
                                  [&](int i) { return w.letters[i].index; });
}

inline Perm permutation_of(const MixedWord& w) {
  return detail::permutation_from(w.m + w.n, static_cast<int>(w.letters.size()), [&](int i) {
    const Letter& x = w.letters[i];
    switch (x.kind) {
      case Kind::fixed_crossing: return x.index;
      case Kind::moving_crossing: return w.m + x.index;
      case Kind::loop: return 0;
    }
    return 0;
  });
}

// a Sigma-free word keeps every fixed strand in place
inline bool fixes_fixed_strands(const Perm& p, int m) {
  for (int i = 1; i <= m; ++i)
    if (p.of(i) != i) return false;
  return true;
}

struct ExponentSums {
  std::vector<long long> loops;  // per loop index, size m
  long long moving = 0;
  long long fixed = 0;
  friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

inline ExponentSums exponent_sums(const MixedWord& w) {
  ExponentSums s;
  s.loops.assign(w.m, 0);
  for (const Letter& x : w.letters) {
    switch (x.kind) {
      case Kind::fixed_crossing: s.fixed += x.sign; break;
      case Kind::moving_crossing: s.moving += x.sign; break;
      case Kind::loop: s.loops[x.index - 1] += x.sign; break;
    }
  }
  return s;
}

struct Framing {
  int p = 0;
  int q = 1;
  friend bool operator==(const Framing&, const Framing&) = default;
};

inline Framing make_framing(int p, int q) {
  if (q == 0) throw std::invalid_argument("framing denominator must be nonzero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (std::gcd(std::abs(p), q) != 1)
    throw std::invalid_argument("framing " + std::to_string(p) + "/" + std::to_string(q) +
                                " is not reduced");
  return {p, q};
}

struct SurgeryComponent {
  std::vector<int> strands;  // increasing
  Framing framing;
  friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

struct SurgeryPresentation {
  int m = 0;
  MixedWord fixed_word;  // fixed crossings only, context (m, 0)
  std::vector<SurgeryComponent> components;
  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;
};

inline void validate(const SurgeryPresentation& pres) {
  if (pres.m < 1) throw std::invalid_argument("presentation needs at least one fixed strand");
  if (pres.fixed_word.m != pres.m)
    throw std::invalid_argument("fixed word context does not match presentation");
  validate(pres.fixed_word);
  for (const Letter& x : pres.fixed_word.letters)
    if (x.kind != Kind::fixed_crossing)
      throw std::invalid_argument("fixed word may contain fixed crossings only");

  std::vector<int> seen(pres.m, 0);
  for (const SurgeryComponent& comp : pres.components) {
    if (comp.strands.empty()) throw std::invalid_argument("empty surgery component");
    if (!std::is_sorted(comp.strands.begin(), comp.strands.end()))
      throw std::invalid_argument("component strands must be listed in increasing order");
    for (int s : comp.strands) {
      if (s < 1 || s > pres.m) throw std::invalid_argument("component strand out of range");
      if (seen[s - 1]++) throw std::invalid_argument("component strands must be disjoint");
    }
    Framing check = make_framing(comp.framing.p, comp.framing.q);
    if (!(check == comp.framing)) throw std::invalid_argument("framing not normalized");
  }
  for (int i = 1; i <= pres.m; ++i)
    if (!seen[i - 1])
      throw std::invalid_argument("strand " + std::to_string(i) + " belongs to no component");

  // each component must be one closure orbit of the fixed braid
  Perm p = permutation_of(pres.fixed_word);
  for (const SurgeryComponent& comp : pres.components) {
    std::vector<int> orbit;
    int start = comp.strands.front();
    int cur = start;
    do {
      orbit.push_back(cur);
      cur = p.of(cur);
    } while (cur != start);
    std::sort(orbit.begin(), orbit.end());
    if (orbit != comp.strands)
      throw std::invalid_argument("component strands do not form a closure orbit");
  }
}

}  // namespace braidcalc
