#include "lpres/presfmt.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace lpres {

ParseError::ParseError(SourceSpan span, std::string expected, std::string found)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": expected " +
            expected + ", found " + found),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

struct Line {
  int number = 0;
  std::string text;
};

struct Section {
  std::string name;
  SourceSpan span;
  std::vector<Line> lines;
};

bool is_ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }
bool is_ident_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
}
bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

class Cursor {
 public:
  explicit Cursor(const Line& line, std::size_t pos = 0) : line_(&line), pos_(pos) {}

  void skip_ws() {
    while (pos_ < text().size() && std::isspace(static_cast<unsigned char>(text()[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text().size();
  }
  char peek() {
    skip_ws();
    return pos_ < text().size() ? text()[pos_] : '\0';
  }
  SourceSpan span() {
    skip_ws();
    return {line_->number, static_cast<int>(pos_) + 1};
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text().substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail(quoted(tok));
  }

  /// Text of the token at the cursor, for diagnostics.
  std::string lexeme() {
    skip_ws();
    if (pos_ >= text().size()) return "end of line";
    std::size_t end = pos_;
    const char ch = text()[pos_];
    if (is_ident_char(ch) || ch == '-') {
      ++end;
      while (end < text().size() && (is_ident_char(text()[end]) || text()[end] == '@' ||
                                     (text()[end] == '-' && text()[end - 1] == '@')))
        ++end;
    } else {
      ++end;
    }
    return quoted(text().substr(pos_, end - pos_));
  }

  [[noreturn]] void fail(const std::string& expected) {
    const auto sp = span();
    throw ParseError(sp, expected, lexeme());
  }

  std::int64_t integer(const std::string& what = "integer") {
    skip_ws();
    const auto start = pos_;
    std::size_t end = pos_;
    if (end < text().size() && text()[end] == '-') ++end;
    if (end >= text().size() || !is_digit(text()[end])) fail(what);
    while (end < text().size() && is_digit(text()[end])) ++end;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text().data() + start, text().data() + end, value);
    if (ec != std::errc() || ptr != text().data() + end) fail("integer in 64-bit range");
    pos_ = end;
    return value;
  }

  /// A bare name: letter { letter | digit | '_' }.
  std::string name(const std::string& what = "identifier") {
    skip_ws();
    if (pos_ >= text().size() || !is_ident_start(text()[pos_])) fail(what);
    const auto start = pos_;
    while (pos_ < text().size() && is_ident_char(text()[pos_])) ++pos_;
    return std::string(text().substr(start, pos_ - start));
  }

  Generator generator(const std::string& what = "generator") {
    std::string n = name(what);
    if (pos_ < text().size() && text()[pos_] == '@') {
      ++pos_;
      if (pos_ >= text().size() || !(is_digit(text()[pos_]) || text()[pos_] == '-'))
        fail("integer level after '@'");
      return Generator(std::move(n), integer("integer level after '@'"));
    }
    return Generator(std::move(n));
  }

  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  std::string_view text() const { return line_->text; }

 private:
  const Line* line_;
  std::size_t pos_;
};

using Resolver = std::function<void(const Generator&, SourceSpan)>;

class WordParser {
 public:
  WordParser(Cursor& c, const Resolver& resolve) : c_(c), resolve_(resolve) {}

  Word word() {
    if (!term_start()) c_.fail("word");
    Word w = term();
    for (;;) {
      if (c_.accept("*")) {
        if (!term_start()) c_.fail("term after '*'");
        w.append(term());
      } else if (term_start()) {
        w.append(term());
      } else {
        break;
      }
    }
    return w;
  }

 private:
  bool term_start() {
    const char ch = c_.peek();
    return is_ident_start(ch) || ch == '(' || ch == '[' || is_digit(ch);
  }

  Word term() {
    Word x = atom();
    while (c_.accept("^")) {
      const char ch = c_.peek();
      if (ch == '-' || is_digit(ch)) {
        x = power(x, c_.integer("exponent"));
      } else if (is_ident_start(ch) || ch == '(' || ch == '[') {
        Word y = atom();
        Word r = invert(y);
        r.append(x);
        r.append(y);
        x = std::move(r);
      } else {
        c_.fail("exponent or conjugating atom after '^'");
      }
    }
    return x;
  }

  Word atom() {
    const char ch = c_.peek();
    if (is_ident_start(ch)) {
      const auto sp = c_.span();
      Generator g = c_.generator();
      resolve_(g, sp);
      return Word::of(g);
    }
    if (c_.accept("(")) {
      Word w = word();
      c_.expect(")");
      return w;
    }
    if (c_.accept("[")) {
      Word u = word();
      c_.expect(",");
      Word v = word();
      c_.expect("]");
      Word r = invert(u);
      r.append(invert(v));
      r.append(u);
      r.append(v);
      return r;
    }
    if (is_digit(ch)) {
      const auto sp = c_.span();
      const auto before = c_.lexeme();
      if (c_.integer() != 1) throw ParseError(sp, "generator, '(', '[' or '1'", before);
      return {};
    }
    c_.fail("generator, '(', '[' or '1'");
  }

  Cursor& c_;
  const Resolver& resolve_;
};

Resolver alphabet_resolver(const std::set<Generator>& alphabet) {
  return [&alphabet](const Generator& g, SourceSpan sp) {
    if (!alphabet.count(g)) throw ParseError(sp, "declared generator", quoted(to_string(g)));
  };
}

const Resolver& accept_any() {
  static const Resolver r = [](const Generator&, SourceSpan) {};
  return r;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 1;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = i;
    while (j < text.size() && text[j] != '\n' && text[j] != '\r') ++j;
    std::string body(text.substr(i, j - i));
    if (auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
    out.push_back({number++, std::move(body)});
    if (j >= text.size()) break;
    if (text[j] == '\r' && j + 1 < text.size() && text[j + 1] == '\n') ++j;
    i = j + 1;
  }
  return out;
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> out;
  int last_line = 1;
  for (auto& line : split_lines(text)) {
    last_line = line.number;
    Cursor c(line);
    if (c.at_end()) continue;
    if (c.peek() == '[') {
      const auto sp = c.span();
      c.accept("[");
      c.skip_ws();
      std::string name;
      while (c.pos() < c.text().size() &&
             (is_ident_char(c.text()[c.pos()]) || c.text()[c.pos()] == '-')) {
        name.push_back(c.text()[c.pos()]);
        c.advance();
      }
      if (name.empty()) c.fail("section name");
      c.expect("]");
      if (!c.at_end()) c.fail("end of line after section header");
      out.push_back({std::move(name), sp, {}});
      continue;
    }
    if (out.empty()) c.fail("section header");
    out.back().lines.push_back(std::move(line));
  }
  if (out.empty()) throw ParseError({last_line, 1}, "section header", "end of input");
  return out;
}

const Section& find_section(const std::vector<Section>& sections, const std::string& name) {
  static const std::set<std::string> known = {"group", "lpres", "certs", "map", "dyadic",
                                              "lpres-expansion"};
  for (const auto& s : sections) {
    if (!known.count(s.name)) throw ParseError(s.span, "known section name", quoted(s.name));
  }
  for (const auto& s : sections)
    if (s.name == name) return s;
  throw ParseError(sections.front().span, "section header [" + name + "]",
                   quoted("[" + sections.front().name + "]"));
}

std::vector<std::pair<Generator, SourceSpan>> parse_generator_list(Cursor& c) {
  std::vector<std::pair<Generator, SourceSpan>> out;
  while (!c.at_end()) {
    const auto sp = c.span();
    out.emplace_back(c.generator(), sp);
    if (!c.accept(",") && !c.at_end() && !is_ident_start(c.peek())) c.fail("',' or generator");
  }
  return out;
}

std::vector<Word> parse_word_list(Cursor& c, const Resolver& resolve) {
  std::vector<Word> out;
  if (c.at_end()) return out;
  WordParser p(c, resolve);
  for (;;) {
    out.push_back(p.word());
    if (c.accept(";")) continue;
    if (c.at_end()) break;
    c.fail("';' or end of line");
  }
  return out;
}

Word parse_single_word(Cursor& c, const Resolver& resolve) {
  WordParser p(c, resolve);
  Word w = p.word();
  if (!c.at_end()) c.fail("end of line");
  return w;
}

std::vector<Generator> declare_generators(const Section& sec, std::set<Generator>& alphabet) {
  std::vector<Generator> gens;
  for (const auto& line : sec.lines) {
    Cursor c(line);
    if (c.name("key") != "gens") continue;
    c.expect("=");
    for (auto& [g, sp] : parse_generator_list(c)) {
      if (!alphabet.insert(g).second)
        throw ParseError(sp, "new generator name", "duplicate " + quoted(to_string(g)));
      gens.push_back(g);
    }
  }
  return gens;
}

}  // namespace

Word parse_word(std::string_view text, const std::set<Generator>& alphabet) {
  if (text.find('\n') != std::string_view::npos || text.find('\r') != std::string_view::npos)
    throw ParseError({1, static_cast<int>(std::min(text.find('\n'), text.find('\r'))) + 1},
                     "single-line word", "line break");
  Line line{1, std::string(text)};
  Cursor c(line);
  const auto resolve = alphabet_resolver(alphabet);
  return parse_single_word(c, resolve);
}

std::vector<std::string> section_names(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& s : split_sections(text)) out.push_back(s.name);
  return out;
}

FinitePresentation parse_presentation(std::string_view text) {
  const auto sections = split_sections(text);
  const auto& sec = find_section(sections, "group");
  FinitePresentation p;
  std::set<Generator> alphabet;
  p.generators = declare_generators(sec, alphabet);
  const auto resolve = alphabet_resolver(alphabet);

  for (const auto& line : sec.lines) {
    Cursor c(line);
    const auto key_span = c.span();
    const auto key = c.name("key");
    if (key == "gens") continue;
    if (key == "rels") {
      c.expect("=");
      for (auto& w : parse_word_list(c, resolve)) p.relators.push_back(std::move(w));
    } else if (key == "deg") {
      c.expect("=");
      if (!p.degree) p.degree.emplace();
      while (!c.at_end()) {
        const auto sp = c.span();
        Generator g = c.generator();
        if (!alphabet.count(g))
          throw ParseError(sp, "declared generator for degree", quoted(to_string(g)));
        c.expect(":");
        const auto d = c.integer("degree");
        if (!p.degree->emplace(g, d).second)
          throw ParseError(sp, "one degree per generator", "second degree for " + quoted(g.name));
        if (!c.accept(",") && !c.at_end()) c.fail("',' or end of line");
      }
    } else {
      throw ParseError(key_span, "'gens', 'deg' or 'rels'", quoted(key));
    }
  }
  if (p.degree) {
    for (const auto& g : p.generators) p.degree->emplace(g, 0);
  }
  return p;
}

LPresentation parse_lpres(std::string_view text) {
  const auto sections = split_sections(text);
  const auto& sec = find_section(sections, "lpres");
  LPresentation lp;
  std::set<Generator> alphabet;
  lp.generators = declare_generators(sec, alphabet);
  const auto resolve = alphabet_resolver(alphabet);

  for (const auto& line : sec.lines) {
    Cursor c(line);
    const auto key_span = c.span();
    const auto key = c.name("key");
    if (key == "gens") continue;
    if (key == "fixed" || key == "seeds") {
      c.expect("=");
      auto& dst = key == "fixed" ? lp.fixed : lp.seeds;
      for (auto& w : parse_word_list(c, resolve)) dst.push_back(std::move(w));
    } else if (key == "endo") {
      const auto name_span = c.span();
      std::string name = c.name("endomorphism name");
      for (const auto& e : lp.endos)
        if (e.name == name)
          throw ParseError(name_span, "new endomorphism name", "duplicate " + quoted(name));
      c.expect("=");
      std::map<Generator, Word> images;
      WordParser wp(c, resolve);
      while (!c.at_end()) {
        const auto sp = c.span();
        Generator g = c.generator();
        if (!alphabet.count(g))
          throw ParseError(sp, "declared generator", quoted(to_string(g)));
        if (images.count(g))
          throw ParseError(sp, "one image per generator", "second image for " + quoted(to_string(g)));
        c.expect("->");
        images.emplace(g, wp.word());
        if (!c.accept(",") && !c.at_end()) c.fail("',' or end of line");
      }
      for (const auto& g : lp.generators) {
        if (!images.count(g))
          throw ParseError(name_span, "image for generator " + quoted(to_string(g)) + " in " +
                                          quoted(name),
                           "end of line");
      }
      lp.endos.push_back({std::move(name), FreeEndomorphism(lp.generators, std::move(images))});
    } else {
      throw ParseError(key_span, "'gens', 'fixed', 'seeds' or 'endo'", quoted(key));
    }
  }
  return lp;
}

CertificateSet parse_certs(std::string_view text) {
  const auto sections = split_sections(text);
  const auto& sec = find_section(sections, "certs");

  CertificateSet certs;
  std::optional<std::int64_t> bound;
  bool declared = false;
  struct Row {
    bool up;
    std::string base;
    SourceSpan span;
    const Line* line;
    std::size_t value_pos;
  };
  std::vector<Row> rows;

  for (const auto& line : sec.lines) {
    Cursor c(line);
    const auto key_span = c.span();
    const auto key = c.name("key");
    if (key == "gens") {
      c.expect("=");
      for (auto& [g, sp] : parse_generator_list(c)) {
        if (g.indexed()) throw ParseError(sp, "base generator name", quoted(to_string(g)));
        if (std::find(certs.window.base.begin(), certs.window.base.end(), g.name) !=
            certs.window.base.end())
          throw ParseError(sp, "new generator name", "duplicate " + quoted(g.name));
        certs.window.base.push_back(g.name);
      }
      declared = true;
    } else if (key == "N") {
      c.expect("=");
      const auto sp = c.span();
      const auto n = c.integer("window bound");
      if (n < 0) throw ParseError(sp, "non-negative window bound", std::to_string(n));
      if (bound) throw ParseError(key_span, "a single 'N' line", "second 'N'");
      if (!c.at_end()) c.fail("end of line");
      bound = n;
    } else if (key == "up" || key == "down") {
      const auto sp = c.span();
      std::string base = c.name("base generator");
      c.expect("=");
      rows.push_back({key == "up", std::move(base), sp, &line, c.pos()});
    } else {
      throw ParseError(key_span, "'gens', 'N', 'up' or 'down'", quoted(key));
    }
  }
  if (!bound) throw ParseError(sec.span, "'N = <bound>' line", "end of section");
  certs.window.bound = *bound;
  if (!declared) {
    for (const auto& r : rows)
      if (std::find(certs.window.base.begin(), certs.window.base.end(), r.base) ==
          certs.window.base.end())
        certs.window.base.push_back(r.base);
  }

  const auto n = *bound;
  const std::set<std::string> base(certs.window.base.begin(), certs.window.base.end());
  const Resolver resolve = [&](const Generator& g, SourceSpan sp) {
    if (!g.indexed() || !base.count(g.name))
      throw ParseError(sp, "window generator", quoted(to_string(g)));
    if (*g.level < -n || *g.level > n)
      throw ParseError(sp, "level within [" + std::to_string(-n) + ", " + std::to_string(n) + "]",
                       quoted(to_string(g)));
  };
  for (const auto& r : rows) {
    if (!base.count(r.base)) throw ParseError(r.span, "declared base generator", quoted(r.base));
    auto& dst = r.up ? certs.up : certs.down;
    if (dst.count(r.base))
      throw ParseError(r.span, "one '" + std::string(r.up ? "up" : "down") + "' row per generator",
                       "second row for " + quoted(r.base));
    Cursor c(*r.line, r.value_pos);
    dst.emplace(r.base, parse_single_word(c, resolve));
  }
  for (const auto& b : certs.window.base) {
    if (!certs.up.count(b)) throw ParseError(sec.span, "'up " + b + " = <word>' row", "end of section");
    if (!certs.down.count(b))
      throw ParseError(sec.span, "'down " + b + " = <word>' row", "end of section");
  }
  return certs;
}

PullbackSpec parse_pullback(std::string_view text) {
  const auto sections = split_sections(text);
  const auto& sec = find_section(sections, "map");
  PullbackSpec spec;
  for (const auto& line : sec.lines) {
    Cursor c(line);
    const auto key_span = c.span();
    const auto key = c.name("key or generator");
    if (key == "stable") {
      c.expect("=");
      if (spec.stable) throw ParseError(key_span, "a single 'stable' line", "second 'stable'");
      spec.stable = parse_single_word(c, accept_any());
      continue;
    }
    if (c.accept("@")) {
      if (c.name("'i'") != "i") throw ParseError(key_span, "pattern 'name@i'", quoted(key));
      c.expect("=");
      if (spec.indexed.count(key))
        throw ParseError(key_span, "one rule per pattern", "second rule for " + quoted(key + "@i"));
      spec.indexed.emplace(key, parse_single_word(c, accept_any()));
    } else {
      c.expect("=");
      if (spec.plain.count(Generator(key)))
        throw ParseError(key_span, "one rule per generator", "second rule for " + quoted(key));
      spec.plain.emplace(Generator(key), parse_single_word(c, accept_any()));
    }
  }
  return spec;
}

namespace {

Dyadic parse_dyadic(Cursor& c) {
  const auto num = c.integer("dyadic rational");
  if (!c.accept("/")) return Dyadic(mpz_class(static_cast<long>(num)), 0);
  const auto den_span = c.span();
  auto den = c.integer("power-of-two denominator");
  if (den <= 0 || (den & (den - 1)) != 0)
    throw ParseError(den_span, "power-of-two denominator", std::to_string(den));
  std::int64_t e = 0;
  while (den > 1) {
    den >>= 1;
    --e;
  }
  return Dyadic(mpz_class(static_cast<long>(num)), e);
}

}  // namespace

AffineImages parse_affine_images(std::string_view text) {
  const auto sections = split_sections(text);
  const auto& sec = find_section(sections, "dyadic");
  AffineImages images;
  std::optional<std::size_t> factors;
  for (const auto& line : sec.lines) {
    Cursor c(line);
    const auto sp = c.span();
    Generator g = c.generator();
    c.expect("=");
    std::vector<AffineMap> maps;
    while (!c.at_end()) {
      c.expect("(");
      AffineMap m;
      m.k = c.integer("multiplier exponent");
      c.expect(",");
      m.q = parse_dyadic(c);
      c.expect(")");
      maps.push_back(std::move(m));
      if (!c.accept(",") && !c.at_end()) c.fail("',' or end of line");
    }
    if (maps.empty()) throw ParseError(c.span(), "'(k, q)' pair", "end of line");
    if (factors && *factors != maps.size())
      throw ParseError(sp, std::to_string(*factors) + " factors", std::to_string(maps.size()));
    factors = maps.size();
    if (!images.emplace(g, std::move(maps)).second)
      throw ParseError(sp, "one image per generator", "second image for " + quoted(to_string(g)));
  }
  return images;
}

// ---------------------------------------------------------------------------

std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i) * ls[i].sign;
    if (!out.empty()) out += '*';
    out += to_string(ls[i].gen);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

namespace {

std::string join_generators(const std::vector<Generator>& gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ", ";
    out += to_string(g);
  }
  return out;
}

std::string key_line(const std::string& key, const std::string& value) {
  return value.empty() ? key + " =\n" : key + " = " + value + "\n";
}

}  // namespace

std::string print_presentation(const FinitePresentation& p) {
  std::string out = "[group]\n";
  out += key_line("gens", join_generators(p.generators));
  if (p.degree) {
    std::string deg;
    for (const auto& g : p.generators) {
      auto it = p.degree->find(g);
      if (!deg.empty()) deg += ", ";
      deg += to_string(g) + ":" + std::to_string(it == p.degree->end() ? 0 : it->second);
    }
    out += key_line("deg", deg);
  }
  for (const auto& r : p.relators) out += key_line("rels", print_word(r));
  return out;
}

std::string print_lpres(const LPresentation& lp) {
  std::string out = "[lpres]\n";
  out += key_line("gens", join_generators(lp.generators));
  for (const auto& q : lp.fixed) out += key_line("fixed", print_word(q));
  for (const auto& r : lp.seeds) out += key_line("seeds", print_word(r));
  for (const auto& e : lp.endos) {
    std::string body;
    for (const auto& g : lp.generators) {
      if (!body.empty()) body += ", ";
      body += to_string(g) + " -> " + print_word(e.map.image(g));
    }
    out += key_line("endo " + e.name, body);
  }
  return out;
}

std::string print_certs(const CertificateSet& c) {
  std::string out = "[certs]\n";
  std::string base;
  for (const auto& b : c.window.base) base += (base.empty() ? "" : ", ") + b;
  out += key_line("gens", base);
  out += "N = " + std::to_string(c.window.bound) + "\n";
  for (const auto& b : c.window.base) {
    if (auto it = c.up.find(b); it != c.up.end()) out += key_line("up " + b, print_word(it->second));
    if (auto it = c.down.find(b); it != c.down.end())
      out += key_line("down " + b, print_word(it->second));
  }
  return out;
}

std::string print_pullback(const PullbackSpec& spec) {
  std::string out = "[map]\n";
  if (spec.stable) out += "stable = " + print_word(*spec.stable) + "\n";
  for (const auto& [name, w] : spec.indexed) out += key_line(name + "@i", print_word(w));
  for (const auto& [g, w] : spec.plain) out += key_line(to_string(g), print_word(w));
  return out;
}

std::string print_affine_images(const AffineImages& images) {
  std::string out = "[dyadic]\n";
  for (const auto& [g, maps] : images) {
    std::string body;
    for (const auto& m : maps) {
      if (!body.empty()) body += ", ";
      body += "(" + std::to_string(m.k) + ", " + m.q.str() + ")";
    }
    out += key_line(to_string(g), body);
  }
  return out;
}

std::string print_expansion(const ExpansionReport& report) {
  std::ostringstream out;
  out << "[lpres-expansion]\n";
  out << key_line("gens", join_generators(report.generators));
  out << "depth = " << report.depth << "\n";
  out << "dedup = " << (report.dedup == Dedup::exact ? "exact" : "cyclic") << "\n";
  for (const auto& c : report.counts)
    out << "# depth " << c.depth << ": " << c.generated << " generated, " << c.kept << " kept\n";
  for (const auto& r : report.relators) out << print_word(r) << "\n";
  return out.str();
}

}  // namespace lpres
