#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidcalc/combing.hpp"
#include "braidcalc/embedding.hpp"
#include "braidcalc/word.hpp"

namespace braidcalc {

struct BandMoveOutput {
  MixedWord d;
  MixedWord c;
  MixedWord beta_prime;
  MixedWord comb_word;
  int new_n = 0;
};

enum class LMoveKind { over, under };

namespace detail {

inline void append(std::vector<Letter>& out, const std::vector<Letter>& w) {
  out.insert(out.end(), w.begin(), w.end());
}

inline void append_inverse(std::vector<Letter>& out, const std::vector<Letter>& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
}

inline const SurgeryComponent& component_in(const SurgeryPresentation& pres,
                                            const SurgeryComponent& comp) {
  for (const SurgeryComponent& c : pres.components)
    if (c.strands == comp.strands) return c;
  throw std::invalid_argument("component not in presentation");
}

// Opening conjugator of the substitution rows: carries the full cable from the
// top moving positions down past the old strands and the first r-1 sub-cables.
inline std::vector<Letter> band_opener(int r, int k, int q, int n) {
  std::vector<Letter> out;
  append(out, sigma_desc(n - 1, 1, -1));
  append(out, sigma_asc(n, n + k * q - 1));
  append(out, sigma_desc(n + k * q - 1, n + (r - 1) * q));
  append(out, sigma_asc(n, n + (r - 1) * q - 1, -1));
  append(out, sigma_desc(n - 1, 1));
  return out;
}

// Closing word attached to the c-th component loop; reduces to nothing at c = k.
inline std::vector<Letter> band_tail(int c, int k, int q, int n) {
  std::vector<Letter> out;
  append(out, sigma_desc(n - 1, 1, -1));
  append(out, sigma_asc(n, n + c * q - 1));
  append(out, sigma_desc(n + k * q - 1, n + c * q, -1));
  append(out, sigma_asc(n, n + k * q - 1, -1));
  append(out, sigma_desc(n - 1, 1));
  return out;
}

}  // namespace detail

inline MixedWord torus_word_d(const SurgeryPresentation& pres, const SurgeryComponent& comp,
                              int n) {
  validate(pres);
  if (n < 0) throw std::invalid_argument("negative strand count");
  const SurgeryComponent& cc = detail::component_in(pres, comp);
  const int k = static_cast<int>(cc.strands.size());
  const int q = cc.framing.q;
  std::vector<Letter> bracket;
  detail::append(bracket, sigma_desc(n + k * q - 1, n + (k - 1) * q + 1));
  detail::append(bracket, sigma_asc(n + 1, n + (k - 1) * q, -1));
  detail::append(bracket, sigma_desc(n, 1));
  bracket.push_back(loop_gen(cc.strands.back()));
  detail::append(bracket, sigma_desc(n, 1, -1));
  detail::append(bracket, sigma_asc(n + 1, n + (k - 1) * q));
  return free_reduce(word_pow(word_of(pres.m, n + k * q, std::move(bracket)), cc.framing.p));
}

inline MixedWord crossing_word_c(int k, int q, int n, int sign, int m) {
  if (k < 1 || q < 1) throw std::invalid_argument("crossing word needs k, q >= 1");
  if (n < 0) throw std::invalid_argument("negative strand count");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  std::vector<Letter> out;
  if (n + k * q >= 2) {
    detail::append(out, sigma_asc(n, n + k * q - 2));
    out.push_back(sigma(n + k * q - 1, sign));
    detail::append(out, sigma_asc(n, n + k * q - 2, -1));
  }
  return free_reduce(word_of(m, n + k * q, std::move(out)));
}

inline MixedWord substitute_beta(const MixedWord& beta, const SurgeryComponent& comp, int q) {
  validate(beta);
  if (q < 1) throw std::invalid_argument("cable width must be positive");
  const int k = static_cast<int>(comp.strands.size());
  if (k < 1 || !std::is_sorted(comp.strands.begin(), comp.strands.end()) ||
      comp.strands.front() < 1 || comp.strands.back() > beta.m)
    throw std::invalid_argument("component strands out of range");
  const int n = beta.n;
  MixedWord out{beta.m, n + k * q, {}};
  for (const Letter& x : beta.letters) {
    if (x.kind == Kind::fixed_crossing)
      throw std::invalid_argument("substitution needs an S-free word");
    if (x.kind == Kind::moving_crossing) {
      out.letters.push_back(x);
      continue;
    }
    int below = 0;
    bool on_component = false;
    for (int s : comp.strands) {
      if (s < x.index) ++below;
      if (s == x.index) on_component = true;
    }
    const int r = below + 1;
    if (!on_component) {
      detail::append(out.letters, detail::band_opener(r, k, q, n));
      out.letters.push_back(x);
      detail::append_inverse(out.letters, detail::band_opener(r, k, q, n));
    } else if (x.sign > 0) {
      detail::append(out.letters, detail::band_opener(r, k, q, n));
      out.letters.push_back(x);
      detail::append(out.letters, detail::band_tail(r, k, q, n));
    } else {
      detail::append_inverse(out.letters, detail::band_tail(r, k, q, n));
      out.letters.push_back(x);
      detail::append_inverse(out.letters, detail::band_opener(r, k, q, n));
    }
  }
  return free_reduce(out);
}

inline MixedWord cable_loop(int q, int j, int sign, int base_position, int m) {
  if (q < 1) throw std::invalid_argument("cable width must be positive");
  if (base_position < 0) throw std::invalid_argument("negative base position");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  std::vector<Letter> out;
  for (int i = 0; i < q; ++i) {
    if (sign > 0) {
      detail::append(out, sigma_desc(base_position + i, 1));
      out.push_back(loop_gen(j));
      detail::append(out, sigma_desc(base_position + i, 1, -1));
    } else {
      detail::append(out, sigma_asc(1, base_position + i, -1));
      out.push_back(loop_gen(j, -1));
      detail::append(out, sigma_asc(1, base_position + i));
    }
  }
  return free_reduce(word_of(m, base_position + q, std::move(out)));
}

inline ArtinWord geometric_cable_braid(const SurgeryPresentation& pres,
                                       const SurgeryComponent& comp, int q) {
  validate(pres);
  const SurgeryComponent& cc = detail::component_in(pres, comp);
  if (q < 1) throw std::invalid_argument("cable width must be positive");
  const int m = pres.m;
  const int k = static_cast<int>(cc.strands.size());
  const int N = m + k * q;
  auto on_component = [&](int label) {
    return std::binary_search(cc.strands.begin(), cc.strands.end(), label);
  };
  auto block_size = [&](int label) { return on_component(label) ? 1 + q : 1; };

  // Parting: each companion walks left over the fixed strands above its
  // surgery strand, deepest companion first.
  ArtinWord walk{N, {}};
  for (int c = 1; c <= k; ++c) {
    const int sc = cc.strands[c - 1];
    for (int u = 1; u <= q; ++u) {
      const int from = m + (c - 1) * q + u;
      const int to = sc + (c - 1) * q + u;
      for (int t = from - 1; t >= to; --t) walk.letters.push_back({t, 1});
    }
  }

  ArtinWord mid{N, {}};
  std::vector<int> cur(m + 1);
  for (int i = 1; i <= m; ++i) cur[i] = i;
  auto block_cross = [](int base, int lhs, int rhs, std::vector<ArtinLetter>& out) {
    for (int i = 0; i < rhs; ++i)
      for (int t = base + lhs + i - 1; t >= base + i; --t) out.push_back({t, 1});
  };
  for (const Letter& x : pres.fixed_word.letters) {
    const int t = x.index;
    int base = 1;
    for (int pos = 1; pos < t; ++pos) base += block_size(cur[pos]);
    const int b1 = block_size(cur[t]);
    const int b2 = block_size(cur[t + 1]);
    if (x.sign > 0) {
      block_cross(base, b1, b2, mid.letters);
    } else {
      std::vector<ArtinLetter> fwd;
      block_cross(base, b2, b1, fwd);
      for (auto it = fwd.rbegin(); it != fwd.rend(); ++it)
        mid.letters.push_back({it->index, -it->sign});
    }
    std::swap(cur[t], cur[t + 1]);
  }

  return free_reduce(walk * mid * invert(walk));
}

inline MixedWord comb_cables(const SurgeryPresentation& pres, const SurgeryComponent& comp,
                             int q, int n, long long step_budget = default_step_budget) {
  validate(pres);
  const SurgeryComponent& cc = detail::component_in(pres, comp);
  if (q < 1) throw std::invalid_argument("cable width must be positive");
  if (n < 0) throw std::invalid_argument("negative strand count");
  const int m = pres.m;
  const int k = static_cast<int>(cc.strands.size());
  MixedWord alg = comb(artin_to_mixed(geometric_cable_braid(pres, cc, 1), m, k),
                       step_budget).algebraic;

  // Expand the single-companion combing to q-cables seated after the n old
  // moving strands: crossings become block crossings, loops become cable loops.
  MixedWord out{m, n + k * q, {}};
  for (const Letter& x : alg.letters) {
    if (x.kind == Kind::moving_crossing) {
      const int c = x.index;
      std::vector<Letter> block;
      for (int i = 0; i < q; ++i)
        detail::append(block, sigma_desc(n + c * q + i, n + (c - 1) * q + 1 + i));
      if (x.sign > 0) detail::append(out.letters, block);
      else detail::append_inverse(out.letters, block);
    } else {
      for (int step = 0; step < q; ++step) {
        const int i = x.sign > 0 ? step : q - 1 - step;
        detail::append(out.letters, sigma_desc(n + i, 1));
        out.letters.push_back(loop_gen(x.index, x.sign));
        detail::append(out.letters, sigma_desc(n + i, 1, -1));
      }
    }
  }
  return free_reduce(out);
}

inline BandMoveOutput band_move(const MixedWord& beta, const SurgeryPresentation& pres,
                                int component_index, int sign,
                                long long step_budget = default_step_budget) {
  validate(pres);
  validate(beta);
  if (beta.m != pres.m) throw std::invalid_argument("context mismatch");
  for (const Letter& x : beta.letters)
    if (x.kind == Kind::fixed_crossing)
      throw std::invalid_argument("band move needs an S-free word");
  if (component_index < 1 ||
      component_index > static_cast<int>(pres.components.size()))
    throw std::invalid_argument("component not in presentation");
  const SurgeryComponent& comp = pres.components[component_index - 1];
  const int k = static_cast<int>(comp.strands.size());
  const int q = comp.framing.q;
  const int n = beta.n;
  BandMoveOutput out;
  out.d = torus_word_d(pres, comp, n);
  out.c = crossing_word_c(k, q, n, sign, pres.m);
  out.beta_prime = substitute_beta(beta, comp, q);
  out.comb_word = comb_cables(pres, comp, q, n, step_budget);
  out.new_n = n + k * q;
  return out;
}

inline MixedWord l_move(const MixedWord& alpha1, const MixedWord& alpha2, int i, int sign,
                        LMoveKind kind) {
  check_context(alpha1, alpha2);
  validate(alpha1);
  validate(alpha2);
  const int n = alpha1.n;
  if (i < 1 || i > n + 1) throw std::invalid_argument("insertion index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  for (const MixedWord* w : {&alpha1, &alpha2})
    for (const Letter& x : w->letters)
      if (x.kind == Kind::fixed_crossing)
        throw std::invalid_argument("L-move needs S-free words");
  if (n == 0) {
    std::vector<Letter> flat = alpha1.letters;
    detail::append(flat, alpha2.letters);
    return free_reduce(word_of(alpha1.m, 1, std::move(flat)));
  }
  // The outer run walks the new strand from position i to n+1 and back, so the
  // alpha words enter verbatim; the inner run carries it to the sigma_n crossing.
  std::vector<Letter> out;
  if (kind == LMoveKind::over) {
    detail::append(out, sigma_desc(n, i, -1));
    detail::append(out, alpha1.letters);
    detail::append(out, sigma_desc(n - 1, i, -1));
    out.push_back(sigma(n, sign));
    detail::append(out, sigma_desc(n - 1, i));
    detail::append(out, alpha2.letters);
    detail::append(out, sigma_desc(n, i));
  } else {
    detail::append(out, sigma_asc(i, n));
    detail::append(out, alpha1.letters);
    detail::append(out, sigma_asc(i, n - 1));
    out.push_back(sigma(n, sign));
    detail::append(out, sigma_asc(i, n - 1, -1));
    detail::append(out, alpha2.letters);
    detail::append(out, sigma_asc(i, n, -1));
  }
  return free_reduce(word_of(alpha1.m, n + 1, std::move(out)));
}

inline MixedWord m_move(const MixedWord& beta1, const MixedWord& beta2, int sign) {
  check_context(beta1, beta2);
  validate(beta1);
  validate(beta2);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const int n = beta1.n;
  std::vector<Letter> out = beta1.letters;
  if (n >= 1) out.push_back(sigma(n, sign));
  detail::append(out, beta2.letters);
  return free_reduce(word_of(beta1.m, n + 1, std::move(out)));
}

inline MixedWord m_conjugate(const MixedWord& beta, int j, int sign) {
  validate(beta);
  if (j < 1 || j > beta.n - 1) throw std::invalid_argument("crossing index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  MixedWord out{beta.m, beta.n, {}};
  out.letters.reserve(beta.letters.size() + 2);
  out.letters.push_back(sigma(j, -sign));
  detail::append(out.letters, beta.letters);
  out.letters.push_back(sigma(j, sign));
  return free_reduce(out);
}

inline MixedWord t_loop(int k, int n, int m) {
  if (k < 1 || k > m) throw std::invalid_argument("loop index out of range");
  if (n < 0) throw std::invalid_argument("negative strand count");
  std::vector<Letter> out;
  detail::append(out, sigma_desc(n, 1));
  out.push_back(loop_gen(k));
  detail::append(out, sigma_desc(n, 1, -1));
  return word_of(m, n + 1, std::move(out));
}

// Independent oracle for the torus word: q parallel strands wind p times
// around the single fixed strand, then part back over the n old strands.
inline ArtinWord geometric_torus_cable(int p, int q, int n) {
  if (q < 1 || n < 0) throw std::invalid_argument("invalid cable parameters");
  const int N = 1 + q + n;
  ArtinWord winding{N, {}};
  for (int t = q; t >= 2; --t) winding.letters.push_back({t, 1});
  winding.letters.push_back({1, 1});
  winding.letters.push_back({1, 1});
  ArtinWord part{N, {}};
  for (int c = q; c >= 1; --c)
    for (int u = 1 + c; u <= n + c; ++u) part.letters.push_back({u, -1});
  return free_reduce(invert(part) * word_pow(winding, p) * part);
}

}  // namespace braidcalc
