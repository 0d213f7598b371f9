#pragma once

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidcalc/band_moves.hpp"
#include "braidcalc/combing.hpp"
#include "braidcalc/word.hpp"

namespace braidcalc {

enum class PresetFamily { lens, homology_sphere, seifert, torus_knot };

struct PresetMoveSet {
  PresetFamily family = PresetFamily::lens;
  SurgeryPresentation presentation;
};

inline PresetMoveSet lens_space(int p, int q) {
  PresetMoveSet set;
  set.family = PresetFamily::lens;
  set.presentation.m = 1;
  set.presentation.fixed_word = word_of(1, 0, {});
  set.presentation.components = {SurgeryComponent{{1}, make_framing(p, q)}};
  validate(set.presentation);
  return set;
}

inline PresetMoveSet trefoil_homology_sphere(int q) {
  if (q == 0) throw std::invalid_argument("surgery coefficient 1/q needs q nonzero");
  PresetMoveSet set;
  set.family = PresetFamily::homology_sphere;
  set.presentation.m = 2;
  set.presentation.fixed_word = word_of(2, 0, {Sigma(1), Sigma(1), Sigma(1)});
  set.presentation.components = {SurgeryComponent{{1, 2}, make_framing(1, q)}};
  validate(set.presentation);
  return set;
}

// Chain of unknots: strand i clasps strand i+1, the last strand is 0-framed.
inline PresetMoveSet seifert_manifold(const std::vector<Framing>& framings) {
  PresetMoveSet set;
  set.family = PresetFamily::seifert;
  const int m = static_cast<int>(framings.size()) + 1;
  set.presentation.m = m;
  std::vector<Letter> chain;
  for (int i = 1; i <= m - 1; ++i) {
    chain.push_back(Sigma(i));
    chain.push_back(Sigma(i));
  }
  set.presentation.fixed_word = word_of(m, 0, std::move(chain));
  for (int i = 1; i <= m - 1; ++i)
    set.presentation.components.push_back(
        SurgeryComponent{{i}, make_framing(framings[i - 1].p, framings[i - 1].q)});
  set.presentation.components.push_back(SurgeryComponent{{m}, make_framing(0, 1)});
  validate(set.presentation);
  return set;
}

inline PresetMoveSet torus_knot_surgery(int mt, int r, int p, int q) {
  if (mt < 1) throw std::invalid_argument("torus braid needs at least one strand");
  if (std::gcd(mt, std::abs(r)) != 1)
    throw std::invalid_argument("torus parameters must be coprime");
  PresetMoveSet set;
  set.family = PresetFamily::torus_knot;
  set.presentation.m = mt;
  std::vector<Letter> round;
  for (int i = 1; i <= mt - 1; ++i) round.push_back(Sigma(i));
  set.presentation.fixed_word = word_pow(word_of(mt, 0, std::move(round)), r);
  std::vector<int> strands(mt);
  std::iota(strands.begin(), strands.end(), 1);
  set.presentation.components = {SurgeryComponent{std::move(strands), make_framing(p, q)}};
  validate(set.presentation);
  return set;
}

inline MixedWord preset_m_move(const PresetMoveSet& set, const MixedWord& beta, int sign) {
  if (beta.m != set.presentation.m) throw std::invalid_argument("context mismatch");
  return m_move(beta, word_of(beta.m, beta.n, {}), sign);
}

inline MixedWord preset_m_conjugate(const PresetMoveSet& set, const MixedWord& beta, int j,
                                    int sign) {
  if (beta.m != set.presentation.m) throw std::invalid_argument("context mismatch");
  return m_conjugate(beta, j, sign);
}

// Combing of the loop around fixed strand i through the surgery braid: the
// algebraic word rho with (fixed braid) a_i = rho (fixed braid).
inline MixedWord loop_rho(const SurgeryPresentation& pres, int i, int n,
                          long long step_budget = default_step_budget) {
  validate(pres);
  if (i < 1 || i > pres.m) throw std::invalid_argument("loop index out of range");
  if (n < 1) throw std::invalid_argument("loop letter requires a moving strand");
  std::vector<Letter> w = pres.fixed_word.letters;
  w.push_back(loop_gen(i));
  return comb(word_of(pres.m, n, std::move(w)), step_budget).algebraic;
}

inline MixedWord preset_loop_conjugate(const PresetMoveSet& set, const MixedWord& beta, int i,
                                       int sign, long long step_budget = default_step_budget) {
  validate(beta);
  if (beta.m != set.presentation.m) throw std::invalid_argument("context mismatch");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  MixedWord rho = loop_rho(set.presentation, i, beta.n, step_budget);
  MixedWord out{beta.m, beta.n, {}};
  out.letters.push_back(loop_gen(i, -sign));
  detail::append(out.letters, beta.letters);
  if (sign > 0)
    detail::append(out.letters, rho.letters);
  else
    detail::append_inverse(out.letters, rho.letters);
  return free_reduce(out);
}

namespace detail {

inline void require_s_free(const MixedWord& beta, const char* what) {
  for (const Letter& x : beta.letters)
    if (x.kind == Kind::fixed_crossing) throw std::invalid_argument(what);
}

// The winding word of a band move on a one-strand component: each pass takes
// one cable strand below the old moving strands, around the fixed strand, and
// back, then rotates the cable.
inline MixedWord one_strand_winding(int j, int p, int q, int n, int m) {
  std::vector<Letter> bracket;
  append(bracket, sigma_desc(n + q - 1, 1));
  bracket.push_back(loop_gen(j));
  append(bracket, sigma_desc(n, 1, -1));
  return free_reduce(word_pow(word_of(m, n + q, std::move(bracket)), p));
}

// The crossing between the last cable strand and its neighbour, walked down to
// sit next to the old strands.
inline MixedWord crossing_conjugate(int low, int crossing, int sign, int n_new, int m) {
  std::vector<Letter> out;
  if (n_new >= 2) {
    append(out, sigma_asc(low, crossing - 1));
    out.push_back(sigma(crossing, sign));
    append(out, sigma_asc(low, crossing - 1, -1));
  }
  return free_reduce(word_of(m, n_new, std::move(out)));
}

}  // namespace detail

// Closed-form combing of the two q-cables through the trefoil braid, as an
// eleven-block product of conjugated loops and a final cable shuffle.
inline MixedWord trefoil_comb_word(int q, int n) {
  if (q < 1 || n < 0) throw std::invalid_argument("invalid cable parameters");
  std::vector<Letter> w;
  auto loop_block = [&](int top, int j, int sign) {
    detail::append(w, sigma_desc(top, 1));
    w.push_back(loop_gen(j, sign));
    detail::append(w, sigma_desc(top, 1, -1));
  };
  for (int i = 0; i < q; ++i) loop_block(n + i, 2, 1);
  for (int i = 0; i < q; ++i) loop_block(n + 2 * q - 1 - i, 2, -1);
  for (int i = 0; i < q; ++i) loop_block(n + q + i, 1, 1);
  for (int i = 0; i < q; ++i) {
    detail::append(w, sigma_desc(n + q + i, 1));
    w.push_back(loop_gen(2));
    detail::append(w, sigma_desc(n, 1, -1));
    detail::append(w, sigma_asc(n + 1, n + q));
    if (i >= 1) detail::append(w, sigma_desc(n + q + i, n + q + 1, -1));
  }
  for (int i = 0; i < q; ++i) loop_block(n + q - 1 - i, 2, -1);
  for (int i = 0; i < q; ++i) loop_block(n + q - 1 - i, 1, -1);
  for (int i = 0; i < q; ++i) loop_block(n + i, 2, 1);
  for (int i = 0; i < q; ++i) loop_block(n + i, 1, 1);
  for (int i = 0; i < q; ++i) loop_block(n + i, 2, 1);
  for (int i = 0; i < q; ++i) detail::append(w, sigma_desc(n + q + i, n + 1 + i));
  return free_reduce(word_of(2, n + 2 * q, std::move(w)));
}

namespace detail {

inline MixedWord lens_substitute(const MixedWord& beta, int q) {
  const int n = beta.n;
  std::vector<Letter> head;
  append(head, sigma_desc(n - 1, 1, -1));
  append(head, sigma_asc(n, n + q - 1));
  append(head, sigma_desc(n + q - 1, 1));
  MixedWord out{beta.m, n + q, {}};
  for (const Letter& x : beta.letters) {
    if (x.kind == Kind::moving_crossing) {
      out.letters.push_back(x);
    } else if (x.sign > 0) {
      append(out.letters, head);
      out.letters.push_back(x);
    } else {
      out.letters.push_back(x);
      append_inverse(out.letters, head);
    }
  }
  return free_reduce(out);
}

// Substitution rows for a full-cable component of k strands: strand j dives
// with the whole cable, past the old strands and the first j-1 sub-cables.
inline MixedWord cable_substitute(const MixedWord& beta, int k, int q) {
  const int n = beta.n;
  auto head = [&](int j) {
    std::vector<Letter> w;
    append(w, sigma_desc(n - 1, 1, -1));
    append(w, sigma_asc(n, n + k * q - 1));
    append(w, sigma_desc(n + k * q - 1, n + (j - 1) * q));
    append(w, sigma_asc(n, n + (j - 1) * q - 1, -1));
    append(w, sigma_desc(n - 1, 1));
    return w;
  };
  auto tail = [&](int j) {
    std::vector<Letter> w;
    append(w, sigma_desc(n - 1, 1, -1));
    append(w, sigma_asc(n, n + j * q - 1));
    append(w, sigma_desc(n + k * q - 1, n + j * q, -1));
    append(w, sigma_asc(n, n + k * q - 1, -1));
    append(w, sigma_desc(n - 1, 1));
    return w;
  };
  MixedWord out{beta.m, n + k * q, {}};
  for (const Letter& x : beta.letters) {
    if (x.kind == Kind::moving_crossing) {
      out.letters.push_back(x);
      continue;
    }
    const int j = x.index;
    if (x.sign > 0) {
      append(out.letters, head(j));
      out.letters.push_back(x);
      append(out.letters, tail(j));
    } else {
      append_inverse(out.letters, tail(j));
      out.letters.push_back(x);
      append_inverse(out.letters, head(j));
    }
  }
  return free_reduce(out);
}

inline MixedWord seifert_substitute(const MixedWord& beta, int j, int q) {
  const int n = beta.n;
  std::vector<Letter> conj;
  append(conj, sigma_desc(n - 1, 1, -1));
  append(conj, sigma_asc(n, n + q - 1));
  append(conj, sigma_desc(n + q - 1, 1));
  MixedWord out{beta.m, n + q, {}};
  for (const Letter& x : beta.letters) {
    if (x.kind == Kind::moving_crossing || x.index > j) {
      out.letters.push_back(x);
    } else if (x.index < j) {
      append(out.letters, conj);
      out.letters.push_back(x);
      append_inverse(out.letters, conj);
    } else if (x.sign > 0) {
      append(out.letters, conj);
      out.letters.push_back(x);
    } else {
      out.letters.push_back(x);
      append_inverse(out.letters, conj);
    }
  }
  return free_reduce(out);
}

inline MixedWord seifert_zero_substitute(const MixedWord& beta) {
  const int n = beta.n;
  const int m = beta.m;
  std::vector<Letter> head;
  append(head, sigma_desc(n - 1, 1, -1));
  head.push_back(sigma(n));
  head.push_back(sigma(n));
  append(head, sigma_desc(n - 1, 1));
  std::vector<Letter> tail;
  append(tail, sigma_desc(n, 1, -1));
  tail.push_back(sigma(n, -1));
  append(tail, sigma_desc(n - 1, 1));
  MixedWord out{m, n + 1, {}};
  for (const Letter& x : beta.letters) {
    if (x.kind == Kind::moving_crossing) {
      out.letters.push_back(x);
    } else if (x.index < m) {
      append(out.letters, head);
      out.letters.push_back(x);
      append(out.letters, tail);
    } else if (x.sign > 0) {
      append(out.letters, head);
      out.letters.push_back(x);
    } else {
      out.letters.push_back(x);
      append_inverse(out.letters, head);
    }
  }
  return free_reduce(out);
}

}  // namespace detail

inline BandMoveOutput preset_band_move(const PresetMoveSet& set, const MixedWord& beta,
                                       int component_index, int sign,
                                       long long step_budget = default_step_budget) {
  const SurgeryPresentation& pres = set.presentation;
  validate(pres);
  validate(beta);
  if (beta.m != pres.m) throw std::invalid_argument("context mismatch");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  detail::require_s_free(beta, "band move needs an S-free word");
  if (component_index < 1 || component_index > static_cast<int>(pres.components.size()))
    throw std::invalid_argument("component not in presentation");
  const SurgeryComponent& comp = pres.components[component_index - 1];
  const int n = beta.n;
  const int p = comp.framing.p;
  const int q = comp.framing.q;
  const int m = pres.m;
  BandMoveOutput out;
  switch (set.family) {
    case PresetFamily::lens: {
      out.d = detail::one_strand_winding(1, p, q, n, m);
      out.c = detail::crossing_conjugate(n, n + q - 1, sign, n + q, m);
      out.beta_prime = detail::lens_substitute(beta, q);
      out.comb_word = word_of(m, n + q, {});
      out.new_n = n + q;
      break;
    }
    case PresetFamily::homology_sphere: {
      if (comp.strands.size() != 2)
        throw std::invalid_argument("move set expects a two-strand component");
      std::vector<Letter> bracket;
      detail::append(bracket, sigma_desc(n + 2 * q - 1, n + q + 1));
      detail::append(bracket, sigma_asc(n + 1, n + q, -1));
      detail::append(bracket, sigma_desc(n, 1));
      bracket.push_back(loop_gen(2));
      detail::append(bracket, sigma_desc(n, 1, -1));
      detail::append(bracket, sigma_asc(n + 1, n + q));
      out.d = free_reduce(word_pow(word_of(m, n + 2 * q, std::move(bracket)), p));
      out.c = detail::crossing_conjugate(n, n + 2 * q - 1, sign, n + 2 * q, m);
      out.beta_prime = detail::cable_substitute(beta, 2, q);
      out.comb_word = trefoil_comb_word(q, n);
      out.new_n = n + 2 * q;
      break;
    }
    case PresetFamily::seifert: {
      if (comp.strands.size() != 1)
        throw std::invalid_argument("move set expects one-strand components");
      const int j = comp.strands.front();
      if (p == 0 && q == 1) {
        out.d = word_of(m, n + 1, {});
        out.c = detail::crossing_conjugate(n, n, sign, n + 1, m);
        out.beta_prime = detail::seifert_zero_substitute(beta);
      } else {
        out.d = detail::one_strand_winding(j, p, q, n, m);
        out.c = detail::crossing_conjugate(n, n + q - 1, sign, n + q, m);
        out.beta_prime = detail::seifert_substitute(beta, j, q);
      }
      out.comb_word = comb_cables(pres, comp, q, n, step_budget);
      out.new_n = n + q;
      break;
    }
    case PresetFamily::torus_knot: {
      const int k = static_cast<int>(comp.strands.size());
      if (k != m) throw std::invalid_argument("move set expects a full-cable component");
      std::vector<Letter> bracket;
      detail::append(bracket, sigma_desc(n + k * q - 1, n + (k - 1) * q + 1));
      detail::append(bracket, sigma_asc(n + 1, n + (k - 1) * q, -1));
      detail::append(bracket, sigma_desc(n, 1));
      bracket.push_back(loop_gen(m));
      detail::append(bracket, sigma_desc(n, 1, -1));
      detail::append(bracket, sigma_asc(n + 1, n + (k - 1) * q));
      out.d = free_reduce(word_pow(word_of(m, n + k * q, std::move(bracket)), p));
      out.c = detail::crossing_conjugate(n, n + k * q - 1, sign, n + k * q, m);
      out.beta_prime = detail::cable_substitute(beta, k, q);
      out.comb_word = comb_cables(pres, comp, q, n, step_budget);
      out.new_n = n + k * q;
      break;
    }
  }
  return out;
}

}  // namespace braidcalc
