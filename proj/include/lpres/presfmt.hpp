#pragma once

// Text formats for presentations, L-presentations, certificates, pullback
// maps and expansion reports.
//
// Word grammar (whitespace between tokens is insignificant):
//
//   word  := term { ["*"] term }
//   term  := atom { "^" (int | atom) }
//   atom  := ident | "(" word ")" | "[" word "," word "]" | "1"
//   ident := letter { letter | digit | "_" } [ "@" int ]
//   int   := ["-"] digit { digit }
//
// x^n is a power, x^y is y^-1*x*y, [x,y] is x^-1*y^-1*x*y and "1" is the
// identity. a^t^u reads as (a^t)^u.
//
// Documents are line oriented. A line `[name]` opens a section, `#` starts
// a comment, every other line is `key = value`:
//
//   [group]   gens = a, t        deg = a:0, t:1     rels = w; w; ...
//   [lpres]   gens = ...         fixed = w; ...     seeds = w; ...
//             endo sigma = a -> a*c*a, b -> d, ...
//   [certs]   gens = a           N = 1              up a = w   down a = w
//   [map]     stable = t         a@i = w            z = w
//   [dyadic]  a = (0, 1), (0, 0)

#include <functional>
#include <set>
#include <string>
#include <string_view>

#include "lpres/dyadic.hpp"
#include "lpres/freegroup.hpp"
#include "lpres/presentation.hpp"
#include "lpres/pullback.hpp"
#include "lpres/window.hpp"

namespace lpres {

struct SourceSpan {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found);

  const SourceSpan& span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

/// Parses a word over `alphabet`; identifiers outside it are rejected.
Word parse_word(std::string_view text, const std::set<Generator>& alphabet);

FinitePresentation parse_presentation(std::string_view text);
LPresentation parse_lpres(std::string_view text);
CertificateSet parse_certs(std::string_view text);
PullbackSpec parse_pullback(std::string_view text);
/// Reads the `[dyadic]` section.
AffineImages parse_affine_images(std::string_view text);

/// Names of the sections in a document, in order of appearance.
std::vector<std::string> section_names(std::string_view text);

std::string print_word(const Word& w);
std::string print_presentation(const FinitePresentation& p);
std::string print_lpres(const LPresentation& lp);
std::string print_certs(const CertificateSet& c);
std::string print_pullback(const PullbackSpec& spec);
std::string print_affine_images(const AffineImages& images);
std::string print_expansion(const ExpansionReport& report);

}  // namespace lpres
