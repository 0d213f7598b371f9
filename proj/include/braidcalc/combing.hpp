#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "braidcalc/word.hpp"

namespace braidcalc {

struct CombResult {
  MixedWord algebraic;
  MixedWord coset;
};

class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(long long budget)
      : std::runtime_error("combing exceeded step budget of " + std::to_string(budget)) {}
};

inline constexpr long long default_step_budget = 50'000'000;

namespace detail {

// Appends with cancellation so the accumulated word stays freely reduced.
inline void push_reduced(std::vector<Letter>& out, const Letter& x) {
  if (!out.empty() && cancels(out.back(), x)) out.pop_back();
  else out.push_back(x);
}

// Rewrites S_k^e * x as X' * S_k^e for a single non-fixed letter x.
inline void push_through_fixed(int k, int e, const Letter& x, std::vector<Letter>& out) {
  if (x.kind != Kind::loop || (x.index != k && x.index != k + 1)) {
    push_reduced(out, x);
    return;
  }
  if (e > 0) {
    if (x.index == k) {
      push_reduced(out, loop_gen(k + 1, x.sign));
    } else {
      push_reduced(out, loop_gen(k + 1, -1));
      push_reduced(out, loop_gen(k, x.sign));
      push_reduced(out, loop_gen(k + 1));
    }
  } else {
    if (x.index == k) {
      push_reduced(out, loop_gen(k));
      push_reduced(out, loop_gen(k + 1, x.sign));
      push_reduced(out, loop_gen(k, -1));
    } else {
      push_reduced(out, loop_gen(k, x.sign));
    }
  }
}

}  // namespace detail

// Splits w into an equivalent product (algebraic, S-free) * (coset, the
// S-subsequence of w verbatim).  Each non-fixed letter of w is carried
// leftward through the fixed letters read so far, rightmost first.
inline CombResult comb(const MixedWord& w, long long step_budget = default_step_budget) {
  validate(w);
  std::vector<Letter> coset;
  std::vector<Letter> algebraic;
  long long steps = 0;
  std::vector<Letter> pending, next;
  for (const Letter& x : w.letters) {
    if (x.kind == Kind::fixed_crossing) {
      coset.push_back(x);
      continue;
    }
    pending.assign(1, x);
    for (auto it = coset.rbegin(); it != coset.rend(); ++it) {
      next.clear();
      for (const Letter& y : pending) {
        if (++steps > step_budget) throw budget_exceeded(step_budget);
        detail::push_through_fixed(it->index, it->sign, y, next);
      }
      std::swap(pending, next);
    }
    for (const Letter& y : pending) detail::push_reduced(algebraic, y);
  }
  return {MixedWord{w.m, w.n, std::move(algebraic)}, MixedWord{w.m, w.n, std::move(coset)}};
}

// Combing of the loop a_i through the fixed word B: the a-word r with
// B * a_i = r * B.
inline MixedWord rho(int i, const MixedWord& B,
                     long long step_budget = default_step_budget) {
  validate(B);
  if (i < 1 || i > B.m) throw std::invalid_argument("rho: loop index out of range");
  for (const Letter& x : B.letters)
    if (x.kind != Kind::fixed_crossing)
      throw std::invalid_argument("rho: B must contain fixed crossings only");
  MixedWord w{B.m, std::max(B.n, 1), B.letters};
  w.letters.push_back(loop_gen(i));
  return comb(w, step_budget).algebraic;
}

// The loop conjugation move through B: beta -> a_i^{-s} * beta * rho_i^{s}.
inline MixedWord combed_loop_conjugate(const MixedWord& beta, int i, int sign,
                                       const MixedWord& B,
                                       long long step_budget = default_step_budget) {
  validate(beta);
  if (sign != 1 && sign != -1) throw std::invalid_argument("combed_loop_conjugate: sign must be +-1");
  for (const Letter& x : beta.letters)
    if (x.kind == Kind::fixed_crossing)
      throw std::invalid_argument("combed_loop_conjugate: beta must be S-free");
  MixedWord r = rho(i, B, step_budget);
  MixedWord out{beta.m, beta.n, {}};
  out.letters.reserve(beta.letters.size() + r.letters.size() + 1);
  out.letters.push_back(loop_gen(i, -sign));
  for (const Letter& x : beta.letters) out.letters.push_back(x);
  if (sign > 0) {
    for (const Letter& x : r.letters) out.letters.push_back(x);
  } else {
    for (auto it = r.letters.rbegin(); it != r.letters.rend(); ++it)
      out.letters.push_back(inv(*it));
  }
  return free_reduce(out);
}

}  // namespace braidcalc
