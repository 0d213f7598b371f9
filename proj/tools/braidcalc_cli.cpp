#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braidcalc/band_moves.hpp"
#include "braidcalc/combing.hpp"
#include "braidcalc/equality.hpp"
#include "braidcalc/presets.hpp"
#include "braidcalc/render.hpp"
#include "braidcalc/text_io.hpp"

namespace {

using namespace braidcalc;

long long step_budget_from_env() {
  const char* text = std::getenv("BRAIDCALC_STEP_BUDGET");
  if (text == nullptr || *text == '\0') return default_step_budget;
  char* end = nullptr;
  long long value = std::strtoll(text, &end, 10);
  if (end == nullptr || *end != '\0' || value <= 0)
    throw std::invalid_argument("BRAIDCALC_STEP_BUDGET must be a positive integer");
  return value;
}

std::string labeled(const char* label, const MixedWord& w) {
  std::string text = print_word(w);
  std::string out = label;
  out += ':';
  if (!text.empty()) {
    out += ' ';
    out += text;
  }
  return out;
}

int run_normalize(const std::string& text, int m, int n) {
  MixedWord w = parse_word(text, m, n);
  CanonicalForm nf = normal_form(embed(w));
  std::cout << "ambient strands: " << nf.strands << "\n";
  std::cout << "delta power: " << nf.delta_power << "\n";
  std::cout << "factors: " << nf.factors.size() << "\n";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    std::cout << "factor " << i + 1 << ":";
    for (int s = 1; s <= nf.factors[i].size(); ++s) std::cout << ' ' << nf.factors[i].of(s);
    std::cout << "\n";
  }
  std::cout << "trivial: " << (is_trivial(nf) ? "yes" : "no") << "\n";
  return 0;
}

int run_equal(const std::string& t1, const std::string& t2, int m, int n) {
  bool verdict = equal(parse_word(t1, m, n), parse_word(t2, m, n));
  std::cout << (verdict ? "equal" : "not equal") << "\n";
  return verdict ? 0 : 1;
}

int run_comb(const std::string& text, int m, int n, long long budget) {
  CombResult split = comb(parse_word(text, m, n), budget);
  std::cout << labeled("algebraic", split.algebraic) << "\n";
  std::cout << labeled("coset", split.coset) << "\n";
  return 0;
}

SurgeryPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read presentation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return presentation_from_json_text(buf.str());
}

int run_bandmove(const std::string& pres_path, int component, const std::string& sign_text,
                 const std::string& beta_text, int n, long long budget) {
  SurgeryPresentation pres = load_presentation(pres_path);
  MixedWord beta = parse_word(beta_text, pres.m, n);
  int sign = sign_text == "+" ? 1 : -1;
  BandMoveOutput out = band_move(beta, pres, component, sign, budget);
  std::cout << labeled("d", out.d) << "\n";
  std::cout << labeled("c", out.c) << "\n";
  std::cout << labeled("beta'", out.beta_prime) << "\n";
  std::cout << labeled("comb", out.comb_word) << "\n";
  std::cout << "new n: " << out.new_n << "\n";
  return 0;
}

Framing parse_framing_text(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("framing must look like p/q: " + text);
  std::size_t used_p = 0, used_q = 0;
  int p = std::stoi(text.substr(0, slash), &used_p);
  int q = std::stoi(text.substr(slash + 1), &used_q);
  if (used_p != slash || used_q != text.size() - slash - 1)
    throw std::invalid_argument("framing must look like p/q: " + text);
  return make_framing(p, q);
}

int write_presentation(const SurgeryPresentation& pres, const std::string& out_path) {
  std::string text = presentation_to_json_text(pres);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << text;
  return 0;
}

int run_render(const std::string& text, int m, int n, const std::string& svg_path) {
  MixedWord w = parse_word(text, m, n);
  std::cout << render_ascii(w);
  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) throw std::invalid_argument("cannot write file: " + svg_path);
    out << render_svg(w);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed braid word calculator"};
  app.require_subcommand(1);

  std::string word1, word2, pres_path, sign_text = "+", beta_text, out_path, svg_path;
  int m = 1, n = 1, component = 1, p = 0, q = 1, torus_strands = 2, torus_power = 1;
  std::vector<std::string> framing_texts;

  auto add_context = [&](CLI::App* cmd) {
    cmd->add_option("--m", m, "fixed strand count")->required();
    cmd->add_option("--n", n, "moving strand count")->required();
  };

  CLI::App* normalize = app.add_subcommand("normalize", "print the ambient canonical form");
  normalize->add_option("word", word1)->required();
  add_context(normalize);

  CLI::App* equal_cmd = app.add_subcommand("equal", "decide equality of two words");
  equal_cmd->add_option("word1", word1)->required();
  equal_cmd->add_option("word2", word2)->required();
  add_context(equal_cmd);

  CLI::App* comb_cmd = app.add_subcommand("comb", "split into algebraic and coset parts");
  comb_cmd->add_option("word", word1)->required();
  add_context(comb_cmd);

  CLI::App* bandmove = app.add_subcommand("bandmove", "band move along a surgery component");
  bandmove->add_option("--pres", pres_path, "presentation file")->required();
  bandmove->add_option("--component", component, "component index (1-based)")->required();
  bandmove->add_option("--sign", sign_text, "twist sign")
      ->check(CLI::IsMember({"+", "-"}))
      ->required();
  bandmove->add_option("--beta", beta_text, "input word")->required();
  bandmove->add_option("--n", n, "moving strand count")->required();

  CLI::App* preset = app.add_subcommand("preset", "write a surgery presentation");
  preset->require_subcommand(1);
  CLI::App* lens = preset->add_subcommand("lens", "rational surgery on the unknot");
  lens->add_option("--p", p)->required();
  lens->add_option("--q", q)->required();
  CLI::App* trefoil = preset->add_subcommand("trefoil", "1/q surgery on the trefoil");
  trefoil->add_option("--q", q)->required();
  CLI::App* seifert = preset->add_subcommand("seifert", "chain-link Seifert presentation");
  seifert->add_option("--framing", framing_texts, "p/q framing, repeat per component");
  CLI::App* torus = preset->add_subcommand("torus", "p/q surgery on a torus knot");
  torus->add_option("--strands", torus_strands, "torus braid strand count")->required();
  torus->add_option("--power", torus_power, "torus braid power")->required();
  torus->add_option("--p", p)->required();
  torus->add_option("--q", q)->required();
  for (CLI::App* cmd : {lens, trefoil, seifert, torus})
    cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* render = app.add_subcommand("render", "draw a strand diagram");
  render->add_option("word", word1)->required();
  add_context(render);
  render->add_option("--svg", svg_path, "also write an SVG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    long long budget = step_budget_from_env();
    if (*normalize) return run_normalize(word1, m, n);
    if (*equal_cmd) return run_equal(word1, word2, m, n);
    if (*comb_cmd) return run_comb(word1, m, n, budget);
    if (*bandmove) return run_bandmove(pres_path, component, sign_text, beta_text, n, budget);
    if (*preset) {
      if (*lens) return write_presentation(lens_space(p, q).presentation, out_path);
      if (*trefoil) return write_presentation(trefoil_homology_sphere(q).presentation, out_path);
      if (*seifert) {
        std::vector<Framing> framings;
        for (const std::string& text : framing_texts) framings.push_back(parse_framing_text(text));
        return write_presentation(seifert_manifold(framings).presentation, out_path);
      }
      return write_presentation(torus_knot_surgery(torus_strands, torus_power, p, q).presentation,
                                out_path);
    }
    return run_render(word1, m, n, svg_path);
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
