#pragma once

#include <string>
#include <vector>

#include "braidcalc/text_io.hpp"
#include "braidcalc/word.hpp"

namespace braidcalc {

namespace detail {

constexpr int ascii_margin = 8;
constexpr int ascii_col_w = 4;

inline int ascii_x(int strand) { return ascii_margin + 2 + ascii_col_w * (strand - 1); }

inline void put(std::vector<std::string>& rows, int r, int x, char c) { rows[r][x] = c; }

inline void put_text(std::vector<std::string>& rows, int r, int x, const std::string& s) {
  for (std::size_t i = 0; i < s.size() && x + i < rows[r].size(); ++i) rows[r][x + i] = s[i];
}

}  // namespace detail

// Strand diagram read top to bottom, one three-row band per letter, fixed
// strands left of moving strands.  Each crossing renders exactly one "\ /"
// top so crossings are countable; loops render as a run of dashes around the
// fixed strand, passing in front on top and behind below for positive sign,
// the reverse for negative.
inline std::string render_ascii(const MixedWord& w) {
  validate(w);
  using namespace detail;
  const int strands = w.m + w.n;
  const int width = ascii_x(strands) + 2;
  const int len = static_cast<int>(w.letters.size());
  std::vector<std::string> rows(2 + 3 * len, std::string(width, ' '));

  for (int s = 1; s <= strands; ++s) {
    bool fixed = s <= w.m;
    put_text(rows, 0, ascii_x(s),
             (fixed ? "f" : "m") + std::to_string(fixed ? s : s - w.m));
    put(rows, 1, ascii_x(s), '|');
  }

  for (int l = 0; l < len; ++l) {
    const Letter& x = w.letters[l];
    const int r0 = 2 + 3 * l;
    for (int s = 1; s <= strands; ++s)
      for (int r = r0; r < r0 + 3; ++r) put(rows, r, ascii_x(s), '|');
    put_text(rows, r0 + 1, 0, print_letters({x}));

    if (x.kind == Kind::loop) {
      const int xi = ascii_x(x.index);
      const int xp = ascii_x(w.m + 1);
      for (int c = xi - 1; c < xp; ++c) {
        put(rows, r0, c, '-');
        put(rows, r0 + 2, c, '-');
      }
      put(rows, r0, xi - 2, ',');
      put(rows, r0, xp, '\'');
      put(rows, r0 + 1, xi - 2, '|');
      put(rows, r0 + 1, xp, ' ');
      put(rows, r0 + 2, xi - 2, '\'');
      put(rows, r0 + 2, xp, ',');
      put(rows, x.sign > 0 ? r0 + 2 : r0, xi, '|');
    } else {
      const int a = x.kind == Kind::fixed_crossing ? x.index : w.m + x.index;
      const int xa = ascii_x(a);
      const int xb = ascii_x(a + 1);
      put(rows, r0, xa, ' ');
      put(rows, r0, xb, ' ');
      put(rows, r0 + 2, xa, ' ');
      put(rows, r0 + 2, xb, ' ');
      put(rows, r0, xa + 1, '\\');
      put(rows, r0, xb - 1, '/');
      put(rows, r0 + 1, xa, ' ');
      put(rows, r0 + 1, xb, ' ');
      put(rows, r0 + 1, xa + 2, x.sign > 0 ? '\\' : '/');
      put(rows, r0 + 2, xa + 1, '/');
      put(rows, r0 + 2, xb - 1, '\\');
    }
  }

  std::string out;
  for (std::string& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

namespace detail {

constexpr int svg_x0 = 24;
constexpr int svg_col_w = 30;
constexpr int svg_top = 28;
constexpr int svg_band = 36;

inline int svg_x(int strand) { return svg_x0 + svg_col_w * (strand - 1); }

inline void svg_line(std::string& out, int x1, int y1, int x2, int y2, const char* color) {
  out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
         std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
}

}  // namespace detail

// Fixed geometry so regenerated documents are byte-identical.
inline std::string render_svg(const MixedWord& w) {
  validate(w);
  using namespace detail;
  const int strands = w.m + w.n;
  const int len = static_cast<int>(w.letters.size());
  const int width = svg_x(strands) + svg_x0;
  const int height = svg_top + svg_band * len + 20;
  const char* fixed_color = "#555555";
  const char* moving_color = "#1a6fc4";
  auto color_of = [&](int strand) { return strand <= w.m ? fixed_color : moving_color; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                    "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
                    std::to_string(width) + " " + std::to_string(height) + "\">\n";
  for (int s = 1; s <= strands; ++s) {
    bool fixed = s <= w.m;
    out += "<text x=\"" + std::to_string(svg_x(s)) +
           "\" y=\"16\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
           (fixed ? "f" : "m") + std::to_string(fixed ? s : s - w.m) + "</text>\n";
  }

  for (int l = 0; l < len; ++l) {
    const Letter& x = w.letters[l];
    const int y0 = svg_top + svg_band * l;
    const int y1 = y0 + svg_band;
    const int ym = y0 + svg_band / 2;

    int skip_lo = 0, skip_hi = -1;
    if (x.kind != Kind::loop) {
      skip_lo = x.kind == Kind::fixed_crossing ? x.index : w.m + x.index;
      skip_hi = skip_lo + 1;
    } else {
      skip_lo = skip_hi = w.m + 1;
    }
    for (int s = 1; s <= strands; ++s)
      if (s < skip_lo || s > skip_hi) svg_line(out, svg_x(s), y0, svg_x(s), y1, color_of(s));

    if (x.kind == Kind::loop) {
      const int xi = svg_x(x.index);
      const int xp = svg_x(w.m + 1);
      const int xl = xi - 10;
      const int yt = y0 + 8;
      const int yb = y1 - 8;
      svg_line(out, svg_x(x.index), y0, svg_x(x.index), y1, color_of(x.index));
      svg_line(out, xp, y0, xp, yt, moving_color);
      svg_line(out, xp, yb, xp, y1, moving_color);
      svg_line(out, xl, yt, xl, yb, moving_color);
      if (x.sign > 0) {
        svg_line(out, xl, yt, xp, yt, moving_color);
        svg_line(out, xl, yb, xi - 6, yb, moving_color);
        svg_line(out, xi + 6, yb, xp, yb, moving_color);
      } else {
        svg_line(out, xl, yt, xi - 6, yt, moving_color);
        svg_line(out, xi + 6, yt, xp, yt, moving_color);
        svg_line(out, xl, yb, xp, yb, moving_color);
      }
    } else {
      const int xa = svg_x(skip_lo);
      const int xb = svg_x(skip_hi);
      const int xm = (xa + xb) / 2;
      const char* ca = color_of(skip_lo);
      const char* cb = color_of(skip_hi);
      if (x.sign > 0) {
        svg_line(out, xb, y0, xm + 6, ym - 6, cb);
        svg_line(out, xm - 6, ym + 6, xa, y1, cb);
        svg_line(out, xa, y0, xb, y1, ca);
      } else {
        svg_line(out, xa, y0, xm - 6, ym - 6, ca);
        svg_line(out, xm + 6, ym + 6, xb, y1, ca);
        svg_line(out, xb, y0, xa, y1, cb);
      }
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace braidcalc
