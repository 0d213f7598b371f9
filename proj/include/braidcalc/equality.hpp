#pragma once

#include "braidcalc/embedding.hpp"
#include "braidcalc/garside.hpp"
#include "braidcalc/word.hpp"

namespace braidcalc {

namespace detail {

inline bool has_fixed_crossing(const MixedWord& w) {
  for (const Letter& x : w.letters)
    if (x.kind == Kind::fixed_crossing) return true;
  return false;
}

// total ambient exponent: each loop letter embeds with exponent sum 2·sign
inline long long ambient_exponent(const ExponentSums& s) {
  long long total = s.fixed + s.moving;
  for (long long l : s.loops) total += 2 * l;
  return total;
}

}  // namespace detail

// Ambient-normal-form equality with cheap sound rejects in front: the strand
// permutation always separates unequal words; abelianized tallies separate
// more.  For Sigma-free words the per-index loop tallies and the sigma total
// are each invariant; once fixed crossings participate only the total ambient
// exponent survives (combing shifts loop indices).
inline bool equal(const MixedWord& u, const MixedWord& v) {
  check_context(u, v);
  validate(u);
  validate(v);
  if (!(permutation_of(u) == permutation_of(v))) return false;

  ExponentSums su = exponent_sums(u);
  ExponentSums sv = exponent_sums(v);
  if (detail::ambient_exponent(su) != detail::ambient_exponent(sv)) return false;
  if (!detail::has_fixed_crossing(u) && !detail::has_fixed_crossing(v) && !(su == sv)) return false;

  return normal_form(embed(u)) == normal_form(embed(v));
}

inline bool equal(const ArtinWord& u, const ArtinWord& v) {
  if (u.strands != v.strands) throw std::invalid_argument("strand count mismatch");
  if (!(permutation_of(u) == permutation_of(v))) return false;
  return normal_form(u) == normal_form(v);
}

}  // namespace braidcalc
