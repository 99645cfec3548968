#include "sbs/stemmer.hpp"

#include <array>
#include <span>

#include "sbs/error.hpp"
#include "sbs/unicode.hpp"

namespace sbs {
namespace {

struct Among {
  std::u32string_view s;
  int result;
};

// Cursor machine with the semantics of the Snowball runtime: a string, a
// cursor, forward/backward limits and a [bra, ket) slice.
class SnowballEnv {
 public:
  explicit SnowballEnv(std::u32string word) : cur_(std::move(word)) {
    c = 0;
    l = static_cast<int>(cur_.size());
    lb = 0;
    bra = c;
    ket = l;
  }

  std::u32string take() { return std::move(cur_); }

  char32_t at(int i) const { return cur_[static_cast<std::size_t>(i)]; }
  bool char_is(char32_t ch) const { return c < l && at(c) == ch; }
  bool char_before_is(char32_t ch) const { return c > lb && at(c - 1) == ch; }

  static bool in(std::u32string_view g, char32_t ch) { return g.find(ch) != std::u32string_view::npos; }

  bool in_grouping(std::u32string_view g) {
    if (c >= l || !in(g, at(c))) return false;
    ++c;
    return true;
  }
  bool out_grouping(std::u32string_view g) {
    if (c >= l || in(g, at(c))) return false;
    ++c;
    return true;
  }
  bool in_grouping_b(std::u32string_view g) {
    if (c <= lb || !in(g, at(c - 1))) return false;
    --c;
    return true;
  }
  bool out_grouping_b(std::u32string_view g) {
    if (c <= lb || in(g, at(c - 1))) return false;
    --c;
    return true;
  }
  // Advance to the first character outside / inside the grouping.
  bool go_in_grouping(std::u32string_view g) {
    for (; c < l; ++c)
      if (!in(g, at(c))) return true;
    return false;
  }
  bool go_out_grouping(std::u32string_view g) {
    for (; c < l; ++c)
      if (in(g, at(c))) return true;
    return false;
  }
  bool go_out_grouping_b(std::u32string_view g) {
    for (; c > lb; --c)
      if (in(g, at(c - 1))) return true;
    return false;
  }

  bool eq_s(std::u32string_view s) {
    const int n = static_cast<int>(s.size());
    if (l - c < n || std::u32string_view(cur_).substr(static_cast<std::size_t>(c), s.size()) != s) return false;
    c += n;
    return true;
  }
  bool eq_s_b(std::u32string_view s) {
    const int n = static_cast<int>(s.size());
    if (c - lb < n || std::u32string_view(cur_).substr(static_cast<std::size_t>(c - n), s.size()) != s)
      return false;
    c -= n;
    return true;
  }

  // Longest entry matching at the cursor; 0 when nothing matches.
  int find_among(std::span<const Among> v) {
    const Among* best = nullptr;
    for (const auto& a : v) {
      const int n = static_cast<int>(a.s.size());
      if (l - c < n) continue;
      if (std::u32string_view(cur_).substr(static_cast<std::size_t>(c), a.s.size()) != a.s) continue;
      if (!best || a.s.size() > best->s.size()) best = &a;
    }
    if (!best) return 0;
    c += static_cast<int>(best->s.size());
    return best->result;
  }
  int find_among_b(std::span<const Among> v) {
    const Among* best = nullptr;
    for (const auto& a : v) {
      const int n = static_cast<int>(a.s.size());
      if (c - lb < n) continue;
      if (std::u32string_view(cur_).substr(static_cast<std::size_t>(c - n), a.s.size()) != a.s) continue;
      if (!best || a.s.size() > best->s.size()) best = &a;
    }
    if (!best) return 0;
    c -= static_cast<int>(best->s.size());
    return best->result;
  }

  void slice_from(std::u32string_view s) {
    const int adjustment = static_cast<int>(s.size()) - (ket - bra);
    cur_.replace(static_cast<std::size_t>(bra), static_cast<std::size_t>(ket - bra), s);
    l += adjustment;
    if (c >= ket)
      c += adjustment;
    else if (c > bra)
      c = bra;
    ket = bra + static_cast<int>(s.size());
  }
  void slice_del() { slice_from(U""); }

  int c, l, lb, bra, ket;

 private:
  std::u32string cur_;
};

// ---------------------------------------------------------------- English

namespace english {

constexpr std::u32string_view g_v = U"aeiouy";
constexpr std::u32string_view g_v_WXY = U"aeiouywxY";
constexpr std::u32string_view g_valid_LI = U"cdeghkmnrt";
constexpr std::u32string_view g_aeo = U"aeo";

constexpr std::array<Among, 9> a_0{{{U"arsen", -1}, {U"commun", -1}, {U"emerg", -1}, {U"gener", -1},
                                    {U"inter", -1}, {U"later", -1}, {U"organ", -1}, {U"past", -1},
                                    {U"univers", -1}}};
constexpr std::array<Among, 3> a_1{{{U"'", 1}, {U"'s'", 1}, {U"'s", 1}}};
constexpr std::array<Among, 6> a_2{
    {{U"ied", 2}, {U"s", 3}, {U"ies", 2}, {U"sses", 1}, {U"ss", -1}, {U"us", -1}}};
constexpr std::array<Among, 3> a_3{{{U"succ", 1}, {U"proc", 1}, {U"exc", 1}}};
constexpr std::array<Among, 7> a_4{{{U"even", 2}, {U"cann", 2}, {U"inn", 2}, {U"earr", 2}, {U"herr", 2},
                                    {U"out", 2}, {U"y", 1}}};
constexpr std::array<Among, 7> a_5{{{U"", -1}, {U"ed", 2}, {U"eed", 1}, {U"ing", 3}, {U"edly", 2},
                                    {U"eedly", 1}, {U"ingly", 2}}};
constexpr std::array<Among, 13> a_6{{{U"", 3}, {U"bb", 2}, {U"dd", 2}, {U"ff", 2}, {U"gg", 2}, {U"bl", 1},
                                     {U"mm", 2}, {U"nn", 2}, {U"pp", 2}, {U"rr", 2}, {U"at", 1}, {U"tt", 2},
                                     {U"iz", 1}}};
constexpr std::array<Among, 25> a_7{{{U"anci", 3},    {U"enci", 2},   {U"ogi", 14},    {U"li", 16},
                                     {U"bli", 12},    {U"abli", 4},   {U"alli", 8},    {U"fulli", 9},
                                     {U"lessli", 15}, {U"ousli", 10}, {U"entli", 5},   {U"aliti", 8},
                                     {U"biliti", 12}, {U"iviti", 11}, {U"tional", 1},  {U"ational", 7},
                                     {U"alism", 8},   {U"ation", 7},  {U"ization", 6}, {U"izer", 6},
                                     {U"ator", 7},    {U"iveness", 11}, {U"fulness", 9}, {U"ousness", 10},
                                     {U"ogist", 13}}};
constexpr std::array<Among, 9> a_8{{{U"icate", 4}, {U"ative", 6}, {U"alize", 3}, {U"iciti", 4}, {U"ical", 4},
                                    {U"tional", 1}, {U"ational", 2}, {U"ful", 5}, {U"ness", 5}}};
constexpr std::array<Among, 18> a_9{{{U"ic", 1},  {U"ance", 1}, {U"ence", 1}, {U"able", 1}, {U"ible", 1},
                                     {U"ate", 1}, {U"ive", 1},  {U"ize", 1},  {U"iti", 1},  {U"al", 1},
                                     {U"ism", 1}, {U"ion", 2},  {U"er", 1},   {U"ous", 1},  {U"ant", 1},
                                     {U"ent", 1}, {U"ment", 1}, {U"ement", 1}}};
constexpr std::array<Among, 2> a_10{{{U"e", 1}, {U"l", 2}}};
constexpr std::array<Among, 15> a_11{{{U"andes", -1}, {U"atlas", -1}, {U"bias", -1}, {U"cosmos", -1},
                                      {U"early", 6},  {U"gently", 4}, {U"howe", -1}, {U"idly", 3},
                                      {U"news", -1},  {U"only", 7},   {U"singly", 8}, {U"skies", 2},
                                      {U"skis", 1},   {U"sky", -1},   {U"ugly", 5}}};
constexpr std::array<std::u32string_view, 8> as_11{U"ski", U"sky", U"idl", U"gentl",
                                                    U"ugli", U"earli", U"onli", U"singl"};

class Stemmer {
 public:
  explicit Stemmer(SnowballEnv& z) : z(z) {}

  void run() {
    if (exception1()) return;
    z.c = 0;
    if (z.c + 3 > z.l) return;
    prelude();
    z.c = 0;
    mark_regions();
    z.lb = z.c;
    z.c = z.l;
    step_1a();
    z.c = z.l;
    step_1b();
    z.c = z.l;
    step_1c();
    z.c = z.l;
    step_2();
    z.c = z.l;
    step_3();
    z.c = z.l;
    step_4();
    z.c = z.l;
    step_5();
    z.c = z.lb;
    postlude();
  }

 private:
  bool r1() const { return p1 <= z.c; }
  bool r2() const { return p2 <= z.c; }

  void prelude() {
    y_found = false;
    const int v1 = z.c;
    z.bra = z.c;
    if (z.char_is(U'\'')) {
      ++z.c;
      z.ket = z.c;
      z.slice_del();
    }
    z.c = v1;
    if (z.char_is(U'y')) {
      z.bra = z.c;
      ++z.c;
      z.ket = z.c;
      z.slice_from(U"Y");
      y_found = true;
    }
    z.c = v1;
    // Every 'y' following a vowel becomes 'Y'.
    while (true) {
      const int v4 = z.c;
      bool found = false;
      while (true) {
        const int v5 = z.c;
        if (z.in_grouping(g_v)) {
          z.bra = z.c;
          if (z.char_is(U'y')) {
            ++z.c;
            z.ket = z.c;
            z.c = v5;
            found = true;
            break;
          }
        }
        z.c = v5;
        if (z.c >= z.l) break;
        ++z.c;
      }
      if (!found) {
        z.c = v4;
        break;
      }
      z.slice_from(U"Y");
      y_found = true;
    }
    z.c = v1;
  }

  void mark_regions() {
    p1 = z.l;
    p2 = z.l;
    const int v1 = z.c;
    [&] {
      if (z.find_among(a_0) == 0) {
        z.c = v1;
        if (!z.go_out_grouping(g_v)) return;
        ++z.c;
        if (!z.go_in_grouping(g_v)) return;
        ++z.c;
      }
      p1 = z.c;
      if (!z.go_out_grouping(g_v)) return;
      ++z.c;
      if (!z.go_in_grouping(g_v)) return;
      ++z.c;
      p2 = z.c;
    }();
    z.c = v1;
  }

  bool shortv() {
    const int v1 = z.l - z.c;
    if (z.out_grouping_b(g_v_WXY) && z.in_grouping_b(g_v) && z.out_grouping_b(g_v)) return true;
    z.c = z.l - v1;
    if (z.out_grouping_b(g_v) && z.in_grouping_b(g_v) && z.c <= z.lb) return true;
    z.c = z.l - v1;
    return z.eq_s_b(U"past");
  }

  bool step_1a() {
    const int v1 = z.l - z.c;
    z.ket = z.c;
    if (z.find_among_b(a_1) == 0) {
      z.c = z.l - v1;
    } else {
      z.bra = z.c;
      z.slice_del();
    }
    z.ket = z.c;
    const int among_var = z.find_among_b(a_2);
    if (among_var == 0) return false;
    z.bra = z.c;
    switch (among_var) {
      case 1:
        z.slice_from(U"ss");
        break;
      case 2: {
        const int v2 = z.l - z.c;
        if (z.c - 2 < z.lb) {
          z.c = z.l - v2;
          z.slice_from(U"ie");
        } else {
          z.c -= 2;
          z.slice_from(U"i");
        }
        break;
      }
      case 3:
        if (z.c <= z.lb) return false;
        --z.c;
        if (!z.go_out_grouping_b(g_v)) return false;
        --z.c;
        z.slice_del();
        break;
      default:
        break;
    }
    return true;
  }

  bool step_1b() {
    z.ket = z.c;
    int among_var = z.find_among_b(a_5);
    z.bra = z.c;
    const int v1 = z.l - z.c;
    bool delete_suffix = false;
    if (among_var == 1) {
      const int v2 = z.l - z.c;
      if (r1()) {
        const int v3 = z.l - z.c;
        if (!(z.find_among_b(a_3) != 0 && z.c <= z.lb)) {
          z.c = z.l - v3;
          z.slice_from(U"ee");
        }
      }
      z.c = z.l - v2;
    } else if (among_var == 2) {
      delete_suffix = true;
    } else if (among_var == 3) {
      among_var = z.find_among_b(a_4);
      if (among_var == 0) {
        delete_suffix = true;
      } else if (among_var == 1) {
        const int v4 = z.l - z.c;
        if (!z.out_grouping_b(g_v) || z.c > z.lb) {
          delete_suffix = true;
        } else {
          z.c = z.l - v4;
          z.bra = z.c;
          z.slice_from(U"ie");
        }
      } else if (z.c > z.lb) {
        delete_suffix = true;
      }
    }
    if (!delete_suffix) return true;

    z.c = z.l - v1;
    const int v5 = z.l - z.c;
    if (!z.go_out_grouping_b(g_v)) return false;
    --z.c;
    z.c = z.l - v5;
    z.slice_del();
    z.ket = z.c;
    z.bra = z.c;
    const int v6 = z.l - z.c;
    among_var = z.find_among_b(a_6);
    if (among_var == 1) {
      z.slice_from(U"e");
      return false;
    }
    if (among_var == 2) {
      const int v7 = z.l - z.c;
      if (z.in_grouping_b(g_aeo) && z.c <= z.lb) return false;
      z.c = z.l - v7;
    } else {
      if (z.c != p1) return false;
      const int v8 = z.l - z.c;
      if (!shortv()) return false;
      z.c = z.l - v8;
      z.slice_from(U"e");
      return false;
    }
    z.c = z.l - v6;
    z.ket = z.c;
    if (z.c <= z.lb) return false;
    --z.c;
    z.bra = z.c;
    z.slice_del();
    return true;
  }

  bool step_1c() {
    z.ket = z.c;
    if (z.char_before_is(U'y') || z.char_before_is(U'Y'))
      --z.c;
    else
      return false;
    z.bra = z.c;
    if (!z.out_grouping_b(g_v)) return false;
    if (z.c <= z.lb) return false;
    z.slice_from(U"i");
    return true;
  }

  bool step_2() {
    z.ket = z.c;
    const int among_var = z.find_among_b(a_7);
    if (among_var == 0) return false;
    z.bra = z.c;
    if (!r1()) return false;
    static constexpr std::array<std::u32string_view, 16> kReplacement{
        U"", U"tion", U"ence", U"ance", U"able", U"ent", U"ize", U"ate",
        U"al", U"ful", U"ous", U"ive", U"ble", U"og", U"og", U"less"};
    if (among_var == 14) {
      if (!z.char_before_is(U'l')) return false;
      --z.c;
      z.slice_from(U"og");
    } else if (among_var == 16) {
      if (!z.in_grouping_b(g_valid_LI)) return false;
      z.slice_del();
    } else {
      z.slice_from(kReplacement[static_cast<std::size_t>(among_var)]);
    }
    return true;
  }

  bool step_3() {
    z.ket = z.c;
    const int among_var = z.find_among_b(a_8);
    if (among_var == 0) return false;
    z.bra = z.c;
    if (!r1()) return false;
    switch (among_var) {
      case 1: z.slice_from(U"tion"); break;
      case 2: z.slice_from(U"ate"); break;
      case 3: z.slice_from(U"al"); break;
      case 4: z.slice_from(U"ic"); break;
      case 5: z.slice_del(); break;
      default:
        if (!r2()) return false;
        z.slice_del();
    }
    return true;
  }

  bool step_4() {
    z.ket = z.c;
    const int among_var = z.find_among_b(a_9);
    if (among_var == 0) return false;
    z.bra = z.c;
    if (!r2()) return false;
    if (among_var == 1) {
      z.slice_del();
    } else {
      if (!(z.char_before_is(U's') || z.char_before_is(U't'))) return false;
      --z.c;
      z.slice_del();
    }
    return true;
  }

  bool step_5() {
    z.ket = z.c;
    const int among_var = z.find_among_b(a_10);
    if (among_var == 0) return false;
    z.bra = z.c;
    if (among_var == 1) {
      if (!r2()) {
        if (!r1()) return false;
        const int v1 = z.l - z.c;
        if (shortv()) return false;
        z.c = z.l - v1;
      }
      z.slice_del();
    } else {
      if (!r2()) return false;
      if (!z.char_before_is(U'l')) return false;
      --z.c;
      z.slice_del();
    }
    return true;
  }

  bool exception1() {
    z.bra = z.c;
    const int among_var = z.find_among(a_11);
    if (among_var == 0) return false;
    z.ket = z.c;
    if (z.c < z.l) return false;
    if (among_var > 0) z.slice_from(as_11[static_cast<std::size_t>(among_var - 1)]);
    return true;
  }

  void postlude() {
    if (!y_found) return;
    while (true) {
      const int v1 = z.c;
      bool found = false;
      while (true) {
        const int v2 = z.c;
        z.bra = z.c;
        if (z.char_is(U'Y')) {
          ++z.c;
          z.ket = z.c;
          z.c = v2;
          found = true;
          break;
        }
        z.c = v2;
        if (z.c >= z.l) break;
        ++z.c;
      }
      if (!found) {
        z.c = v1;
        break;
      }
      z.slice_from(U"y");
    }
  }

  SnowballEnv& z;
  bool y_found = false;
  int p1 = 0;
  int p2 = 0;
};

}  // namespace english

// ---------------------------------------------------------------- Italian

namespace italian {

constexpr std::u32string_view g_v = U"aeiouàèìòù";
constexpr std::u32string_view g_AEIO = U"aeioàèìò";
constexpr std::u32string_view g_CG = U"cg";

constexpr std::array<Among, 16> a_0{{{U"all'", -1}, {U"d'", -1}, {U"dall'", -1}, {U"dell'", -1},
                                     {U"gl'", -1}, {U"l'", -1}, {U"m'", -1}, {U"nell'", -1},
                                     {U"quell'", -1}, {U"quest'", -1}, {U"s'", -1}, {U"sull'", -1},
                                     {U"t'", -1}, {U"tutt'", -1}, {U"un'", -1}, {U"v'", -1}}};
constexpr std::array<Among, 7> a_1{
    {{U"", 7}, {U"qu", 6}, {U"á", 1}, {U"é", 2}, {U"í", 3}, {U"ó", 4}, {U"ú", 5}}};
constexpr std::array<Among, 3> a_2{{{U"", 3}, {U"I", 1}, {U"U", 2}}};
constexpr std::array<Among, 37> a_3{{
    {U"la", -1},     {U"cela", -1},   {U"gliela", -1}, {U"mela", -1},   {U"tela", -1},   {U"vela", -1},
    {U"le", -1},     {U"cele", -1},   {U"gliele", -1}, {U"mele", -1},   {U"tele", -1},   {U"vele", -1},
    {U"ne", -1},     {U"cene", -1},   {U"gliene", -1}, {U"mene", -1},   {U"sene", -1},   {U"tene", -1},
    {U"vene", -1},   {U"ci", -1},     {U"li", -1},     {U"celi", -1},   {U"glieli", -1}, {U"meli", -1},
    {U"teli", -1},   {U"veli", -1},   {U"gli", -1},    {U"mi", -1},     {U"si", -1},     {U"ti", -1},
    {U"vi", -1},     {U"lo", -1},     {U"celo", -1},   {U"glielo", -1}, {U"melo", -1},   {U"telo", -1},
    {U"velo", -1},
}};
constexpr std::array<Among, 5> a_4{{{U"ando", 1}, {U"endo", 1}, {U"ar", 2}, {U"er", 2}, {U"ir", 2}}};
constexpr std::array<Among, 4> a_5{{{U"ic", -1}, {U"abil", -1}, {U"os", -1}, {U"iv", 1}}};
constexpr std::array<Among, 3> a_6{{{U"ic", 1}, {U"abil", 1}, {U"iv", 1}}};
constexpr std::array<Among, 51> a_7{{
    {U"ica", 1},    {U"logia", 3},  {U"osa", 1},    {U"ista", 1},   {U"iva", 9},    {U"anza", 1},
    {U"enza", 5},   {U"ice", 1},    {U"atrice", 1}, {U"iche", 1},   {U"logie", 3},  {U"abile", 1},
    {U"ibile", 1},  {U"usione", 4}, {U"azione", 2}, {U"uzione", 4}, {U"atore", 2},  {U"ose", 1},
    {U"ante", 1},   {U"mente", 1},  {U"amente", 7}, {U"iste", 1},   {U"ive", 9},    {U"anze", 1},
    {U"enze", 5},   {U"ici", 1},    {U"atrici", 1}, {U"ichi", 1},   {U"abili", 1},  {U"ibili", 1},
    {U"ismi", 1},   {U"usioni", 4}, {U"azioni", 2}, {U"uzioni", 4}, {U"atori", 2},  {U"osi", 1},
    {U"anti", 1},   {U"amenti", 6}, {U"imenti", 6}, {U"isti", 1},   {U"ivi", 9},    {U"ico", 1},
    {U"ismo", 1},   {U"oso", 1},    {U"amento", 6}, {U"imento", 6}, {U"ivo", 9},    {U"ità", 8},
    {U"istà", 1},   {U"istè", 1},   {U"istì", 1},
}};
constexpr std::array<Among, 87> a_8{{
    {U"isca", 1},   {U"enda", 1},   {U"ata", 1},      {U"ita", 1},      {U"uta", 1},    {U"ava", 1},
    {U"eva", 1},    {U"iva", 1},    {U"erebbe", 1},   {U"irebbe", 1},   {U"isce", 1},   {U"ende", 1},
    {U"are", 1},    {U"ere", 1},    {U"ire", 1},      {U"asse", 1},     {U"ate", 1},    {U"avate", 1},
    {U"evate", 1},  {U"ivate", 1},  {U"ete", 1},      {U"erete", 1},    {U"irete", 1},  {U"ite", 1},
    {U"ereste", 1}, {U"ireste", 1}, {U"ute", 1},      {U"erai", 1},     {U"irai", 1},   {U"isci", 1},
    {U"endi", 1},   {U"erei", 1},   {U"irei", 1},     {U"assi", 1},     {U"ati", 1},    {U"iti", 1},
    {U"eresti", 1}, {U"iresti", 1}, {U"uti", 1},      {U"avi", 1},      {U"evi", 1},    {U"ivi", 1},
    {U"isco", 1},   {U"ando", 1},   {U"endo", 1},     {U"Yamo", 1},     {U"iamo", 1},   {U"avamo", 1},
    {U"evamo", 1},  {U"ivamo", 1},  {U"eremo", 1},    {U"iremo", 1},    {U"assimo", 1}, {U"ammo", 1},
    {U"emmo", 1},   {U"eremmo", 1}, {U"iremmo", 1},   {U"immo", 1},     {U"ano", 1},    {U"iscano", 1},
    {U"avano", 1},  {U"evano", 1},  {U"ivano", 1},    {U"eranno", 1},   {U"iranno", 1}, {U"ono", 1},
    {U"iscono", 1}, {U"arono", 1},  {U"erono", 1},    {U"irono", 1},    {U"erebbero", 1}, {U"irebbero", 1},
    {U"assero", 1}, {U"essero", 1}, {U"issero", 1},   {U"ato", 1},      {U"ito", 1},    {U"uto", 1},
    {U"avo", 1},    {U"evo", 1},    {U"ivo", 1},      {U"ar", 1},       {U"ir", 1},     {U"erà", 1},
    {U"irà", 1},    {U"erò", 1},    {U"irò", 1},
}};

class Stemmer {
 public:
  explicit Stemmer(SnowballEnv& z) : z(z) {}

  void run() {
    z.c = 0;
    elisions();
    z.c = 0;
    prelude();
    z.c = 0;
    mark_regions();
    z.lb = z.c;
    z.c = z.l;
    attached_pronoun();
    z.c = z.l;
    if (!standard_suffix()) {
      z.c = z.l;
      verb_suffix();
    }
    z.c = z.l;
    vowel_suffix();
    z.c = z.lb;
    postlude();
  }

 private:
  bool rv() const { return pv <= z.c; }
  bool r2() const { return p2 <= z.c; }

  bool elisions() {
    z.bra = z.c;
    if (z.find_among(a_0) == 0) return false;
    z.ket = z.c;
    if (z.c >= z.l) return false;
    z.slice_del();
    return true;
  }

  void prelude() {
    const int v1 = z.c;
    while (true) {
      z.bra = z.c;
      const int among_var = z.find_among(a_1);
      z.ket = z.c;
      static constexpr std::array<std::u32string_view, 7> kReplacement{U"", U"à", U"è", U"ì",
                                                                       U"ò", U"ù", U"qU"};
      if (among_var >= 1 && among_var <= 6) {
        z.slice_from(kReplacement[static_cast<std::size_t>(among_var)]);
        continue;
      }
      if (z.c >= z.l) break;
      ++z.c;
    }
    z.c = v1;
    // u or i between vowels become U or I.
    while (true) {
      const int v3 = z.c;
      bool found = false;
      while (true) {
        const int v4 = z.c;
        if (z.in_grouping(g_v)) {
          z.bra = z.c;
          const int v5 = z.c;
          if (z.char_is(U'u')) {
            ++z.c;
            z.ket = z.c;
            if (z.in_grouping(g_v)) {
              z.slice_from(U"U");
              z.c = v4;
              found = true;
              break;
            }
          }
          z.c = v5;
          if (z.char_is(U'i')) {
            ++z.c;
            z.ket = z.c;
            if (z.in_grouping(g_v)) {
              z.slice_from(U"I");
              z.c = v4;
              found = true;
              break;
            }
          }
        }
        z.c = v4;
        if (z.c >= z.l) break;
        ++z.c;
      }
      if (!found) {
        z.c = v3;
        break;
      }
    }
  }

  void mark_regions() {
    pv = p1 = p2 = z.l;
    const int v1 = z.c;
    const bool rv_found = [&] {
      const int v2 = z.c;
      if (z.in_grouping(g_v)) {
        const int v3 = z.c;
        if (z.out_grouping(g_v) && z.go_out_grouping(g_v)) {
          ++z.c;
          return true;
        }
        z.c = v3;
        if (z.in_grouping(g_v) && z.go_in_grouping(g_v)) {
          ++z.c;
          return true;
        }
      }
      z.c = v2;
      if (z.eq_s(U"divan")) return true;
      z.c = v2;
      if (!z.out_grouping(g_v)) return false;
      const int v4 = z.c;
      if (z.out_grouping(g_v) && z.go_out_grouping(g_v)) {
        ++z.c;
        return true;
      }
      z.c = v4;
      if (!z.in_grouping(g_v)) return false;
      if (z.c >= z.l) return false;
      ++z.c;
      return true;
    }();
    if (rv_found) pv = z.c;
    z.c = v1;
    [&] {
      if (!z.go_out_grouping(g_v)) return;
      ++z.c;
      if (!z.go_in_grouping(g_v)) return;
      ++z.c;
      p1 = z.c;
      if (!z.go_out_grouping(g_v)) return;
      ++z.c;
      if (!z.go_in_grouping(g_v)) return;
      ++z.c;
      p2 = z.c;
    }();
    z.c = v1;
  }

  void postlude() {
    while (true) {
      z.bra = z.c;
      const int among_var = z.find_among(a_2);
      z.ket = z.c;
      if (among_var == 1) {
        z.slice_from(U"i");
      } else if (among_var == 2) {
        z.slice_from(U"u");
      } else {
        if (z.c >= z.l) break;
        ++z.c;
      }
    }
  }

  bool attached_pronoun() {
    z.ket = z.c;
    if (z.find_among_b(a_3) == 0) return false;
    z.bra = z.c;
    const int among_var = z.find_among_b(a_4);
    if (among_var == 0) return false;
    if (!rv()) return false;
    if (among_var == 1)
      z.slice_del();
    else
      z.slice_from(U"e");
    return true;
  }

  // Optionally deletes `suffix` when it ends at the cursor inside R2.
  void try_delete_r2(std::u32string_view suffix) {
    const int v = z.l - z.c;
    z.ket = z.c;
    if (!z.eq_s_b(suffix)) {
      z.c = z.l - v;
      return;
    }
    z.bra = z.c;
    if (!r2()) {
      z.c = z.l - v;
      return;
    }
    z.slice_del();
  }

  bool standard_suffix() {
    z.ket = z.c;
    int among_var = z.find_among_b(a_7);
    if (among_var == 0) return false;
    z.bra = z.c;
    switch (among_var) {
      case 1:
        if (!r2()) return false;
        z.slice_del();
        break;
      case 2:
        if (!r2()) return false;
        z.slice_del();
        try_delete_r2(U"ic");
        break;
      case 3:
        if (!r2()) return false;
        z.slice_from(U"log");
        break;
      case 4:
        if (!r2()) return false;
        z.slice_from(U"u");
        break;
      case 5:
        if (!r2()) return false;
        z.slice_from(U"ente");
        break;
      case 6:
        if (!rv()) return false;
        z.slice_del();
        break;
      case 7: {
        if (p1 > z.c) return false;
        z.slice_del();
        const int v2 = z.l - z.c;
        z.ket = z.c;
        among_var = z.find_among_b(a_5);
        if (among_var == 0) {
          z.c = z.l - v2;
          break;
        }
        z.bra = z.c;
        if (!r2()) {
          z.c = z.l - v2;
          break;
        }
        z.slice_del();
        if (among_var == 1) {
          z.ket = z.c;
          if (!z.eq_s_b(U"at")) {
            z.c = z.l - v2;
            break;
          }
          z.bra = z.c;
          if (!r2()) {
            z.c = z.l - v2;
            break;
          }
          z.slice_del();
        }
        break;
      }
      case 8: {
        if (!r2()) return false;
        z.slice_del();
        const int v3 = z.l - z.c;
        z.ket = z.c;
        if (z.find_among_b(a_6) == 0) {
          z.c = z.l - v3;
          break;
        }
        z.bra = z.c;
        if (!r2()) {
          z.c = z.l - v3;
          break;
        }
        z.slice_del();
        break;
      }
      default: {
        if (!r2()) return false;
        z.slice_del();
        const int v4 = z.l - z.c;
        z.ket = z.c;
        if (!z.eq_s_b(U"at")) {
          z.c = z.l - v4;
          break;
        }
        z.bra = z.c;
        if (!r2()) {
          z.c = z.l - v4;
          break;
        }
        z.slice_del();
        z.ket = z.c;
        if (!z.eq_s_b(U"ic")) {
          z.c = z.l - v4;
          break;
        }
        z.bra = z.c;
        if (!r2()) {
          z.c = z.l - v4;
          break;
        }
        z.slice_del();
        break;
      }
    }
    return true;
  }

  bool verb_suffix() {
    if (z.c < pv) return false;
    const int saved_lb = z.lb;
    z.lb = pv;
    z.ket = z.c;
    if (z.find_among_b(a_8) == 0) {
      z.lb = saved_lb;
      return false;
    }
    z.bra = z.c;
    z.slice_del();
    z.lb = saved_lb;
    return true;
  }

  void vowel_suffix() {
    const int v1 = z.l - z.c;
    [&] {
      z.ket = z.c;
      if (!z.in_grouping_b(g_AEIO)) {
        z.c = z.l - v1;
        return;
      }
      z.bra = z.c;
      if (!rv()) {
        z.c = z.l - v1;
        return;
      }
      z.slice_del();
      z.ket = z.c;
      if (!z.char_before_is(U'i')) {
        z.c = z.l - v1;
        return;
      }
      --z.c;
      z.bra = z.c;
      if (!rv()) {
        z.c = z.l - v1;
        return;
      }
      z.slice_del();
    }();
    const int v2 = z.l - z.c;
    z.ket = z.c;
    if (!z.char_before_is(U'h')) {
      z.c = z.l - v2;
      return;
    }
    --z.c;
    z.bra = z.c;
    if (!z.in_grouping_b(g_CG) || !rv()) {
      z.c = z.l - v2;
      return;
    }
    z.slice_del();
  }

  SnowballEnv& z;
  int pv = 0;
  int p1 = 0;
  int p2 = 0;
};

}  // namespace italian

}  // namespace

Stemmer Stemmer::create(std::string_view language) {
  if (language == "english" || language == "en") return Stemmer(Algorithm::english, "english");
  if (language == "italian" || language == "it") return Stemmer(Algorithm::italian, "italian");
  throw ConfigError("unsupported stemmer language '" + std::string(language) + "'");
}

std::vector<std::string> Stemmer::supported_languages() { return {"english", "italian"}; }

std::string Stemmer::stem(std::string_view word) const {
  SnowballEnv env(unicode::decode(word));
  switch (algorithm_) {
    case Algorithm::english:
      english::Stemmer(env).run();
      break;
    case Algorithm::italian:
      italian::Stemmer(env).run();
      break;
  }
  return unicode::encode(env.take());
}

}  // namespace sbs
