#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "braidcalc/band_moves.hpp"
#include "braidcalc/embedding.hpp"
#include "braidcalc/equality.hpp"
#include "braidcalc/word.hpp"

using namespace braidcalc;

namespace {

SurgeryPresentation lens_presentation(int p, int q) {
  SurgeryPresentation pres;
  pres.m = 1;
  pres.fixed_word = word_of(1, 0, {});
  pres.components = {SurgeryComponent{{1}, make_framing(p, q)}};
  validate(pres);
  return pres;
}

SurgeryPresentation trefoil_presentation(int q) {
  SurgeryPresentation pres;
  pres.m = 2;
  pres.fixed_word = word_of(2, 0, {Sigma(1), Sigma(1), Sigma(1)});
  pres.components = {SurgeryComponent{{1, 2}, make_framing(1, q)}};
  validate(pres);
  return pres;
}

std::vector<Letter> cat(std::initializer_list<std::vector<Letter>> parts) {
  std::vector<Letter> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Letter> one(Letter x) { return {x}; }

// Hand-expanded combed word for the q-cabled trefoil surgery braid over n
// extra strands, written as the eleven-block product it combs out to.
MixedWord trefoil_comb_product(int q, int n) {
  std::vector<Letter> w;
  auto loop_block = [&](int top, int j, int sign) {
    auto down = sigma_desc(top, 1);
    w.insert(w.end(), down.begin(), down.end());
    w.push_back(loop_gen(j, sign));
    auto back = sigma_desc(top, 1, -1);
    w.insert(w.end(), back.begin(), back.end());
  };
  for (int i = 0; i < q; ++i) loop_block(n + i, 2, 1);
  for (int i = 0; i < q; ++i) loop_block(n + 2 * q - 1 - i, 2, -1);
  for (int i = 0; i < q; ++i) loop_block(n + q + i, 1, 1);
  for (int i = 0; i < q; ++i) {
    auto part = cat({sigma_desc(n + q + i, 1), one(loop_gen(2)), sigma_desc(n, 1, -1),
                     sigma_asc(n + 1, n + q)});
    w.insert(w.end(), part.begin(), part.end());
    if (i >= 1) {
      auto undo = sigma_desc(n + q + i, n + q + 1, -1);
      w.insert(w.end(), undo.begin(), undo.end());
    }
  }
  for (int i = 0; i < q; ++i) loop_block(n + q - 1 - i, 2, -1);
  for (int i = 0; i < q; ++i) loop_block(n + q - 1 - i, 1, -1);
  for (int i = 0; i < q; ++i) loop_block(n + i, 2, 1);
  for (int i = 0; i < q; ++i) loop_block(n + i, 1, 1);
  for (int i = 0; i < q; ++i) loop_block(n + i, 2, 1);
  for (int i = 0; i < q; ++i) {
    auto run = sigma_desc(n + q + i, n + 1 + i);
    w.insert(w.end(), run.begin(), run.end());
  }
  return free_reduce(word_of(2, n + 2 * q, std::move(w)));
}

int cycle_count(const Perm& p) {
  int n = p.size();
  std::vector<char> seen(n + 1, 0);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p.of(j)) seen[j] = 1;
  }
  return cycles;
}

// Pairwise linking numbers (doubled) between distinct closure components,
// as a sorted multiset, plus the component count.  A strand insertion move
// must leave both untouched.
std::multiset<int> linking_profile(const ArtinWord& w, int* comp_count) {
  int N = w.strands;
  std::vector<int> pos(N + 1), parent(N + 1);
  for (int i = 1; i <= N; ++i) {
    pos[i] = i;
    parent[i] = i;
  }
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  struct Crossing {
    int u, v, s;
  };
  std::vector<Crossing> crossings;
  std::vector<int> occupant(N + 1);
  for (int i = 1; i <= N; ++i) occupant[i] = i;
  for (const ArtinLetter& x : w.letters) {
    int a = occupant[x.index], b = occupant[x.index + 1];
    crossings.push_back({a, b, x.sign});
    std::swap(occupant[x.index], occupant[x.index + 1]);
  }
  for (int p = 1; p <= N; ++p) {
    int a = find(occupant[p]), b = find(p);
    if (a != b) parent[a] = b;
  }
  *comp_count = 0;
  for (int i = 1; i <= N; ++i)
    if (find(i) == i) ++*comp_count;
  std::map<std::pair<int, int>, int> lk;
  for (const Crossing& c : crossings) {
    int a = find(c.u), b = find(c.v);
    if (a == b) continue;
    lk[{std::min(a, b), std::max(a, b)}] += c.s;
  }
  std::multiset<int> profile;
  for (const auto& [key, v] : lk)
    if (v != 0) profile.insert(v);
  return profile;
}

MixedWord random_sfree_word(std::mt19937& rng, int m, int n, int len) {
  std::uniform_int_distribution<int> kind(0, n >= 2 ? 1 : 0);
  std::uniform_int_distribution<int> loop_idx(1, m);
  std::uniform_int_distribution<int> cross_idx(1, std::max(1, n - 1));
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  for (int i = 0; i < len; ++i) {
    int s = coin(rng) ? 1 : -1;
    if (kind(rng) == 0)
      letters.push_back(loop_gen(loop_idx(rng), s));
    else
      letters.push_back(sigma(cross_idx(rng), s));
  }
  return word_of(m, n, std::move(letters));
}

}  // namespace

TEST_CASE("torus word of a surgery component") {
  SECTION("single strand collapses to a conjugated loop power") {
    auto pres = lens_presentation(2, 3);
    MixedWord d = torus_word_d(pres, pres.components[0], 1);
    std::vector<Letter> once =
        cat({sigma_desc(3, 1), one(loop_gen(1)), sigma_desc(1, 1, -1)});
    std::vector<Letter> twice = once;
    twice.insert(twice.end(), once.begin(), once.end());
    CHECK(d.letters == free_reduce(word_of(1, 4, twice)).letters);
    CHECK(d.m == 1);
    CHECK(d.n == 4);
  }

  SECTION("zero framing numerator gives the empty word") {
    auto pres = lens_presentation(0, 1);
    MixedWord d = torus_word_d(pres, pres.components[0], 2);
    CHECK(d.letters.empty());
    CHECK(d.n == 3);
  }

  SECTION("negative numerator inverts the winding") {
    auto plus = torus_word_d(lens_presentation(2, 3), SurgeryComponent{{1}, make_framing(2, 3)}, 1);
    auto minus =
        torus_word_d(lens_presentation(-2, 3), SurgeryComponent{{1}, make_framing(-2, 3)}, 1);
    CHECK(minus.letters == free_reduce(invert(plus)).letters);
  }

  SECTION("two-strand component winds through both sub-cables") {
    auto pres = trefoil_presentation(1);
    MixedWord d = torus_word_d(pres, pres.components[0], 0);
    // k = 2, q = 1, p = 1, n = 0: sigma_1^{-1} a_2 sigma_1
    std::vector<Letter> expect = {sigma(1, -1), loop_gen(2), sigma(1)};
    CHECK(d.letters == expect);
  }

  SECTION("unknown component throws") {
    auto pres = lens_presentation(1, 1);
    CHECK_THROWS_AS(torus_word_d(pres, SurgeryComponent{{2}, make_framing(1, 1)}, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("crossing word of the cable") {
  SECTION("width one cable crosses once") {
    MixedWord c = crossing_word_c(1, 1, 2, 1, 1);
    CHECK(c.letters == std::vector<Letter>{sigma(2)});
    MixedWord cneg = crossing_word_c(1, 1, 2, -1, 1);
    CHECK(cneg.letters == std::vector<Letter>{sigma(2, -1)});
  }

  SECTION("single new strand with no old strands is degenerate") {
    MixedWord c = crossing_word_c(1, 1, 0, 1, 1);
    CHECK(c.letters.empty());
  }

  SECTION("wide cable conjugates the top crossing down") {
    MixedWord c = crossing_word_c(1, 3, 1, 1, 1);
    std::vector<Letter> expect = {sigma(1), sigma(2), sigma(3), sigma(2, -1), sigma(1, -1)};
    CHECK(c.letters == expect);
  }

  SECTION("opposite signs cancel") {
    for (int q = 1; q <= 3; ++q) {
      MixedWord pos = crossing_word_c(2, q, 1, 1, 2);
      MixedWord neg = crossing_word_c(2, q, 1, -1, 2);
      CHECK(free_reduce(pos * neg).letters.empty());
    }
  }

  SECTION("full conjugator form is the same element") {
    for (int q = 1; q <= 4; ++q) {
      for (int sign : {1, -1}) {
        int n = 1, k = 1, m = 1;
        MixedWord c = crossing_word_c(k, q, n, sign, m);
        std::vector<Letter> alt =
            cat({sigma_asc(n, n + k * q - 1), one(sigma(n + k * q - 1, sign)),
                 sigma_asc(n, n + k * q - 1, -1)});
        CHECK(equal(c, free_reduce(word_of(m, n + k * q, alt))));
      }
    }
  }
}

TEST_CASE("loop substitution under cabling") {
  SECTION("crossings and loops above the component pass through") {
    SurgeryComponent comp{{1}, make_framing(1, 2)};
    MixedWord beta = word_of(2, 2, {sigma(1), loop_gen(2, -1), sigma(1, -1)});
    MixedWord out = substitute_beta(beta, comp, 2);
    CHECK(out.m == 2);
    CHECK(out.n == 4);
    CHECK(out.letters == beta.letters);
  }

  SECTION("crossing-only words are unchanged") {
    SurgeryComponent comp{{1, 2}, make_framing(1, 1)};
    MixedWord beta = word_of(2, 3, {sigma(2), sigma(1, -1), sigma(2)});
    CHECK(substitute_beta(beta, comp, 3).letters == beta.letters);
  }

  SECTION("single-strand component, loop on the component") {
    SurgeryComponent comp{{1}, make_framing(1, 2)};
    MixedWord beta = word_of(1, 1, {loop_gen(1)});
    MixedWord out = substitute_beta(beta, comp, 2);
    // opening conjugator at q = 2, n = 1: s1 s2 s2 s1; closing word is empty
    std::vector<Letter> expect = {sigma(1), sigma(2), sigma(2), sigma(1), loop_gen(1)};
    CHECK(out.letters == expect);
  }

  SECTION("two-strand component rows") {
    SurgeryComponent comp{{1, 2}, make_framing(1, 1)};
    MixedWord a1 = word_of(2, 1, {loop_gen(1)});
    MixedWord a2 = word_of(2, 1, {loop_gen(2)});
    std::vector<Letter> h1 = {sigma(1), sigma(2), sigma(2), sigma(1)};
    std::vector<Letter> t1 = {sigma(1), sigma(2, -1), sigma(2, -1), sigma(1, -1)};
    std::vector<Letter> h2 = {sigma(1), sigma(2), sigma(2), sigma(1, -1)};
    CHECK(substitute_beta(a1, comp, 1).letters ==
          cat({h1, one(loop_gen(1)), t1}));
    CHECK(substitute_beta(a2, comp, 1).letters == cat({h2, one(loop_gen(2))}));
  }

  SECTION("negative rows are the formal inverses of positive rows") {
    std::mt19937 rng(414);
    SurgeryComponent comp{{1, 3}, make_framing(1, 2)};
    for (int trial = 0; trial < 20; ++trial) {
      MixedWord beta = random_sfree_word(rng, 3, 2, 8);
      MixedWord pos = substitute_beta(beta, comp, 2);
      MixedWord neg = substitute_beta(free_reduce(invert(beta)), comp, 2);
      CHECK(neg.letters == free_reduce(invert(pos)).letters);
    }
  }

  SECTION("words with fixed crossings are rejected") {
    SurgeryComponent comp{{1}, make_framing(1, 1)};
    MixedWord beta{1, 1, {Sigma(1)}};
    CHECK_THROWS_AS(substitute_beta(beta, comp, 1), std::invalid_argument);
  }
}

TEST_CASE("cable loops") {
  SECTION("width one at the bottom is a bare loop") {
    CHECK(cable_loop(1, 2, 1, 0, 3).letters == std::vector<Letter>{loop_gen(2)});
    CHECK(cable_loop(1, 2, -1, 0, 3).letters == std::vector<Letter>{loop_gen(2, -1)});
  }

  SECTION("width two walks each cable strand around the loop") {
    MixedWord w = cable_loop(2, 1, 1, 0, 1);
    std::vector<Letter> expect = {loop_gen(1), sigma(1), loop_gen(1), sigma(1, -1)};
    CHECK(w.letters == expect);
  }

  SECTION("descending and ascending forms agree") {
    for (int q = 1; q <= 4; ++q) {
      for (int sign : {1, -1}) {
        MixedWord lhs = cable_loop(q, 1, sign, 0, 2);
        std::vector<Letter> alt;
        for (int i = 0; i < q; ++i) {
          int top = q - 1 - i;
          if (sign > 0) {
            auto part = cat({sigma_asc(1, top, -1), one(loop_gen(1)), sigma_asc(1, top)});
            alt.insert(alt.end(), part.begin(), part.end());
          } else {
            auto part =
                cat({sigma_desc(top, 1), one(loop_gen(1, -1)), sigma_desc(top, 1, -1)});
            alt.insert(alt.end(), part.begin(), part.end());
          }
        }
        CHECK(equal(lhs, free_reduce(word_of(2, q, alt))));
      }
    }
  }

  SECTION("negative form is the inverse of the positive ascending form") {
    for (int q = 1; q <= 3; ++q) {
      MixedWord neg = cable_loop(q, 1, -1, 0, 1);
      std::vector<Letter> pos_alt;
      for (int i = 0; i < q; ++i) {
        int top = q - 1 - i;
        auto part = cat({sigma_asc(1, top, -1), one(loop_gen(1)), sigma_asc(1, top)});
        pos_alt.insert(pos_alt.end(), part.begin(), part.end());
      }
      CHECK(neg.letters == free_reduce(invert(word_of(1, q, pos_alt))).letters);
    }
  }

  SECTION("raised base conjugates under the old strands") {
    MixedWord w = cable_loop(1, 1, 1, 2, 1);
    std::vector<Letter> expect = {sigma(2), sigma(1), loop_gen(1), sigma(1, -1), sigma(2, -1)};
    CHECK(w.letters == expect);
  }
}

TEST_CASE("geometric cable of a surgery braid") {
  SECTION("empty surgery braid cables to the identity") {
    auto pres = lens_presentation(1, 2);
    ArtinWord cab = geometric_cable_braid(pres, pres.components[0], 3);
    CHECK(cab.strands == 4);
    CHECK(cab.letters.empty());
  }

  SECTION("one crossing with companions on both strands") {
    SurgeryPresentation pres;
    pres.m = 2;
    pres.fixed_word = word_of(2, 0, {Sigma(1)});
    pres.components = {SurgeryComponent{{1, 2}, make_framing(1, 1)}};
    validate(pres);
    ArtinWord cab = geometric_cable_braid(pres, pres.components[0], 1);
    std::vector<ArtinLetter> expect = {{2, 1}, {2, 1}, {1, 1}, {3, 1}};
    CHECK(cab.strands == 4);
    CHECK(cab.letters == expect);
    Perm p = permutation_of(cab);
    CHECK(p.img == std::vector<int>{2, 1, 4, 3});
  }

  SECTION("inverse crossings cable to inverse braids") {
    SurgeryPresentation up;
    up.m = 2;
    up.fixed_word = word_of(2, 0, {Sigma(1)});
    up.components = {SurgeryComponent{{1, 2}, make_framing(1, 1)}};
    SurgeryPresentation down = up;
    down.fixed_word = word_of(2, 0, {Sigma(1, -1)});
    for (int q = 1; q <= 3; ++q) {
      ArtinWord a = geometric_cable_braid(up, up.components[0], q);
      ArtinWord b = geometric_cable_braid(down, down.components[0], q);
      CHECK(free_reduce(a * b).letters.empty());
    }
  }

  SECTION("widening the cable preserves the block permutation") {
    auto pres = trefoil_presentation(1);
    for (int q = 1; q <= 3; ++q) {
      ArtinWord cab = geometric_cable_braid(pres, pres.components[0], q);
      Perm p = permutation_of(cab);
      // companions sit first, then the cable strands grouped per old strand
      CHECK(p.of(1) == 2);
      CHECK(p.of(2) == 1);
      for (int u = 1; u <= q; ++u) {
        CHECK(p.of(2 + u) == 2 + q + u);
        CHECK(p.of(2 + q + u) == 2 + u);
      }
    }
  }
}

TEST_CASE("combing the cabled surgery braid") {
  SECTION("surgery braid with no crossings combs to nothing") {
    auto pres = lens_presentation(3, 2);
    MixedWord w = comb_cables(pres, pres.components[0], 2, 1);
    CHECK(w.letters.empty());
    CHECK(w.m == 1);
    CHECK(w.n == 3);
  }

  SECTION("trefoil cable matches the hand-combed product") {
    for (int q = 1; q <= 2; ++q) {
      auto pres = trefoil_presentation(q);
      for (int n = 0; n <= 2; ++n) {
        MixedWord mine = comb_cables(pres, pres.components[0], q, n);
        MixedWord hand = trefoil_comb_product(q, n);
        CHECK(mine.m == hand.m);
        CHECK(mine.n == hand.n);
        for (const Letter& x : mine.letters) CHECK(x.kind != Kind::fixed_crossing);
        CHECK(equal(mine, hand));
      }
    }
  }
}

TEST_CASE("band move assembly") {
  SECTION("surgery on the unknot with empty pattern") {
    auto pres = lens_presentation(2, 3);
    MixedWord beta = word_of(1, 1, {});
    BandMoveOutput out = band_move(beta, pres, 1, 1);
    CHECK(out.new_n == 4);
    CHECK(out.beta_prime.letters.empty());
    CHECK(out.comb_word.letters.empty());
    CHECK(out.d.letters == torus_word_d(pres, pres.components[0], 1).letters);
    CHECK(out.c.letters == crossing_word_c(1, 3, 1, 1, 1).letters);
  }

  SECTION("zero-framed component contributes no winding") {
    auto pres = lens_presentation(0, 1);
    MixedWord beta = word_of(1, 2, {loop_gen(1), sigma(1)});
    BandMoveOutput out = band_move(beta, pres, 1, -1);
    CHECK(out.d.letters.empty());
    CHECK(out.c.letters == std::vector<Letter>{sigma(2, -1)});
    CHECK(out.new_n == 3);
  }

  SECTION("component index out of range throws") {
    auto pres = lens_presentation(1, 1);
    MixedWord beta = word_of(1, 1, {});
    CHECK_THROWS_AS(band_move(beta, pres, 2, 1), std::invalid_argument);
  }

  SECTION("wide cable on a two-strand component grows the context") {
    SurgeryPresentation pres;
    pres.m = 2;
    pres.fixed_word = word_of(2, 0, {Sigma(1), Sigma(1), Sigma(1)});
    pres.components = {SurgeryComponent{{1, 2}, make_framing(1, 3)}};
    MixedWord beta = word_of(2, 1, {loop_gen(1)});
    BandMoveOutput out = band_move(beta, pres, 1, 1);
    CHECK(out.new_n == 7);
    CHECK(out.beta_prime.n == 7);
    CHECK(out.comb_word.n == 7);
    CHECK(out.d.n == 7);
  }
}

TEST_CASE("stabilization moves") {
  SECTION("inserting at the top is plain stabilization") {
    MixedWord a1 = word_of(2, 2, {loop_gen(1), sigma(1)});
    MixedWord a2 = word_of(2, 2, {sigma(1, -1), loop_gen(2, -1)});
    for (int sign : {1, -1}) {
      for (LMoveKind kind : {LMoveKind::over, LMoveKind::under}) {
        MixedWord got = l_move(a1, a2, 3, sign, kind);
        std::vector<Letter> expect =
            cat({a1.letters, one(sigma(2, sign)), a2.letters});
        CHECK(got.letters == free_reduce(word_of(2, 3, expect)).letters);
      }
    }
  }

  SECTION("insertion preserves closure components and linking") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
      int m = 1 + trial % 2, n = 2 + trial % 3;
      MixedWord a1 = random_sfree_word(rng, m, n, 6);
      MixedWord a2 = random_sfree_word(rng, m, n, 6);
      int i = 1 + trial % (n + 1);
      int sign = trial % 2 ? 1 : -1;
      LMoveKind kind = trial % 3 ? LMoveKind::over : LMoveKind::under;
      int cc_base, cc_moved, cc_stab;
      auto base = linking_profile(embed(free_reduce(a1 * a2)), &cc_base);
      auto moved = linking_profile(embed(l_move(a1, a2, i, sign, kind)), &cc_moved);
      auto stab = linking_profile(embed(m_move(a1, a2, sign)), &cc_stab);
      CHECK(cc_moved == cc_base);
      CHECK(moved == base);
      CHECK(cc_stab == cc_base);
      CHECK(stab == base);
    }
  }

  SECTION("degenerate context concatenates") {
    MixedWord empty = word_of(2, 0, {});
    CHECK(l_move(empty, empty, 1, 1, LMoveKind::over).letters.empty());
    CHECK(m_move(empty, empty, -1).letters.empty());
    CHECK(m_move(empty, empty, 1).n == 1);
  }

  SECTION("crossing conjugation undoes itself") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
      MixedWord beta = random_sfree_word(rng, 2, 4, 10);
      int j = 1 + trial % 3;
      int sign = trial % 2 ? 1 : -1;
      MixedWord back = m_conjugate(m_conjugate(beta, j, sign), j, -sign);
      CHECK(back.letters == free_reduce(beta).letters);
    }
  }

  SECTION("threaded loop shape and sums") {
    MixedWord t = t_loop(2, 2, 3);
    std::vector<Letter> expect = {sigma(2),      sigma(1),      loop_gen(2),
                                  sigma(1, -1), sigma(2, -1)};
    CHECK(t.letters == expect);
    CHECK(t.n == 3);
    ExponentSums s = exponent_sums(t);
    CHECK(s.loops == std::vector<long long>{0, 1, 0});
    CHECK(s.moving == 0);
    CHECK(t_loop(1, 0, 1).letters == std::vector<Letter>{loop_gen(1)});
  }
}

TEST_CASE("torus word matches the drawn cable") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 3}}) {
    auto pres = lens_presentation(p, q);
    for (int n = 0; n <= 2; ++n) {
      MixedWord d = torus_word_d(pres, pres.components[0], n);
      ArtinWord drawn = geometric_torus_cable(p, q, n);
      CHECK(embed(d).strands == drawn.strands);
      CHECK(equal(embed(d), drawn));
    }
  }
}

TEST_CASE("two-cable loop identities") {
  // the cabled loop of a two-cable written two ways, over two old strands
  MixedWord lhs = word_of(
      2, 2,
      cat({one(loop_gen(2, -1)), one(sigma(1, -1)), one(loop_gen(2, -1)), one(sigma(1)),
           one(loop_gen(1)), one(sigma(1)), one(loop_gen(1)), one(sigma(1, -1)),
           one(loop_gen(2)), one(sigma(1)), one(loop_gen(2)), one(sigma(1, -1))}));
  MixedWord rhs = word_of(
      2, 2,
      cat({one(loop_gen(2, -1)), one(loop_gen(1)), one(loop_gen(2)), one(sigma(1)),
           one(loop_gen(2, -1)), one(loop_gen(1)), one(loop_gen(2)), one(sigma(1, -1))}));
  CHECK(equal(lhs, rhs));

  MixedWord rel_l = word_of(2, 2, {sigma(1), loop_gen(2), sigma(1), loop_gen(2)});
  MixedWord rel_r = word_of(2, 2, {loop_gen(2), sigma(1), loop_gen(2), sigma(1)});
  CHECK(equal(rel_l, rel_r));
}
