// lpres: expand, derive, verify and embed finite L-presentations.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 input or
// parse error, 3 precondition violation.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lpres/derive.hpp"
#include "lpres/fixtures.hpp"
#include "lpres/oracles.hpp"
#include "lpres/presentation.hpp"
#include "lpres/presfmt.hpp"

namespace {

using namespace lpres;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kPrecondition = 3 };

// Input errors carrying the file name they came from.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot read file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw InputError{*path + ": cannot write file"};
  out << text;
}

// Parses with the file name prefixed to any diagnostic.
template <class Fn>
auto parse_file(const std::string& path, Fn&& fn) {
  const auto text = read_file(path);
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw InputError{path + ":" + e.what()};
  }
}

Dedup dedup_from(const std::string& s) { return s == "cyclic" ? Dedup::cyclic : Dedup::exact; }

int cmd_parse(const std::string& file) {
  const auto text = read_file(file);
  try {
    const auto names = section_names(text);
    const auto& kind = names.front();
    if (kind == "group") {
      std::cout << print_presentation(parse_presentation(text));
    } else if (kind == "lpres") {
      std::cout << print_lpres(parse_lpres(text));
    } else if (kind == "certs") {
      std::cout << print_certs(parse_certs(text));
    } else if (kind == "map" || kind == "dyadic") {
      bool has_map = false, has_dyadic = false;
      for (const auto& n : names) {
        has_map |= n == "map";
        has_dyadic |= n == "dyadic";
      }
      if (has_map) std::cout << print_pullback(parse_pullback(text));
      if (has_dyadic) std::cout << print_affine_images(parse_affine_images(text));
    } else {
      throw InputError{file + ": section [" + kind + "] cannot be reprinted"};
    }
  } catch (const ParseError& e) {
    throw InputError{file + ":" + e.what()};
  }
  return kOk;
}

struct ExpandArgs {
  std::string file;
  std::size_t depth = 0;
  std::string dedup = "exact";
  std::optional<std::string> out;
  unsigned jobs = 1;
};

int cmd_expand(const ExpandArgs& a) {
  const auto lp = parse_file(a.file, [](const std::string& t) { return parse_lpres(t); });
  write_output(a.out, print_expansion(expand(lp, a.depth, dedup_from(a.dedup), a.jobs)));
  return kOk;
}

struct DeriveArgs {
  std::string file;
  std::string t;
  std::optional<std::string> certs;
  std::optional<std::int64_t> bound;
  std::optional<std::string> out;
  std::optional<std::string> map_out;
};

int cmd_derive(const DeriveArgs& a) {
  const auto text = read_file(a.file);
  FinitePresentation p;
  try {
    p = parse_presentation(text);
  } catch (const ParseError& e) {
    throw InputError{a.file + ":" + e.what()};
  }
  if (!a.certs) {
    const auto np = neumann_normalize(p, Generator(a.t));
    std::vector<Word> seeds;
    for (const auto& r : np.relators) seeds.push_back(rs_rewrite(r, np));
    throw PreconditionError(
        "certificates required (--certs FILE): words for a@(N+1) and a@-(N+1) over the window; "
        "the rewritten relators need N >= " +
        std::to_string(window_bound(seeds)));
  }
  const auto certs = parse_file(*a.certs, [](const std::string& t) { return parse_certs(t); });
  const auto d = derive_lpres(p, Generator(a.t), certs, a.bound);
  write_output(a.out, provenance_comment(d, text) + print_lpres(d.lp));
  if (a.map_out) write_output(a.map_out, print_pullback(derived_pullback(d.source)));
  return kOk;
}

struct VerifyArgs {
  std::string file;
  std::string oracle;
  std::size_t depth = 0;
  std::optional<std::string> pullback;
  std::optional<std::string> images;
  std::optional<std::string> group;
  std::string dedup = "exact";
  unsigned jobs = 1;
};

bool has_section(const std::string& text, const std::string& name) {
  for (const auto& n : section_names(text))
    if (n == name) return true;
  return false;
}

int cmd_verify(const VerifyArgs& a) {
  const auto lp = parse_file(a.file, [](const std::string& t) { return parse_lpres(t); });
  std::optional<PullbackSpec> pull;
  if (a.pullback)
    pull = parse_file(*a.pullback, [](const std::string& t) { return parse_pullback(t); });

  Oracle oracle;
  if (a.oracle == "grigorchuk") {
    oracle = grigorchuk_oracle();
  } else if (a.oracle == "dyadic") {
    const auto source = a.images ? a.images : a.pullback;
    if (!source) throw PreconditionError("dyadic oracle needs a [dyadic] section (--images or --pullback)");
    const auto images = parse_file(*source, [&](const std::string& t) {
      if (!has_section(t, "dyadic"))
        throw PreconditionError(*source + " has no [dyadic] section of affine images");
      return parse_affine_images(t);
    });
    oracle = dyadic_oracle(images);
  } else {
    FinitePresentation reference =
        a.group ? parse_file(*a.group, [](const std::string& t) { return parse_presentation(t); })
                : truncate(lp);
    oracle = abelian_oracle(reference);
  }
  const auto report =
      verify_lpres(lp, a.depth, oracle, pull ? &*pull : nullptr, dedup_from(a.dedup), a.jobs);
  std::cout << print_report(report);
  return report.verified() ? kOk : kVerifyFailed;
}

int cmd_hnn(const std::string& file, const std::optional<std::string>& out) {
  const auto lp = parse_file(file, [](const std::string& t) { return parse_lpres(t); });
  write_output(out, print_presentation(hnn_embed(lp)));
  return kOk;
}

int cmd_demo(const std::string& name, const std::string& dir) {
  const auto files = fixtures::demo_files(name);
  if (files.empty()) throw InputError{"unknown demo '" + name + "' (expected lysenok, remark3 or z2)"};
  for (const auto& f : files) {
    const auto path = (std::filesystem::path(dir) / f.name).string();
    write_output(path, f.text);
    std::cout << "wrote " << path << "\n";
  }
  std::cout << "\n" << fixtures::demo_commands(name);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite L-presentations: expansion, kernel derivation, verification, HNN embedding"};
  app.require_subcommand(1);

  std::string parse_file_arg;
  auto* parse = app.add_subcommand("parse", "Parse a document and print its canonical form");
  parse->add_option("file", parse_file_arg, "Input document")->required();

  ExpandArgs ex;
  auto* expand_cmd = app.add_subcommand("expand", "Expand an L-presentation to a given depth");
  expand_cmd->add_option("file", ex.file, "[lpres] document")->required();
  expand_cmd->add_option("--depth", ex.depth, "Maximal composition length in the endomorphism monoid");
  expand_cmd->add_option("--dedup", ex.dedup, "exact or cyclic")->check(CLI::IsMember({"exact", "cyclic"}));
  expand_cmd->add_option("--out", ex.out, "Output file (default: standard output)");
  expand_cmd->add_option("--jobs", ex.jobs, "Worker threads")->check(CLI::PositiveNumber);

  DeriveArgs dv;
  auto* derive = app.add_subcommand("derive", "Derive the kernel L-presentation of a group mapping onto Z");
  derive->add_option("file", dv.file, "[group] document with a degree map")->required();
  derive->add_option("--t", dv.t, "Generator of degree +-1")->required();
  derive->add_option("--certs", dv.certs, "[certs] document");
  derive->add_option("--N", dv.bound, "Window bound; must match the certificates")->check(CLI::NonNegativeNumber);
  derive->add_option("--out", dv.out, "Output file (default: standard output)");
  derive->add_option("--map-out", dv.map_out, "Also write the pullback [map] to this file");

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Check expansion relators against an exact oracle");
  verify->add_option("file", vf.file, "[lpres] document")->required();
  verify->add_option("--oracle", vf.oracle, "grigorchuk, dyadic or abelian")
      ->required()
      ->check(CLI::IsMember({"grigorchuk", "dyadic", "abelian"}));
  verify->add_option("--depth", vf.depth, "Expansion depth");
  verify->add_option("--pullback", vf.pullback, "[map] document applied before the oracle");
  verify->add_option("--images", vf.images, "[dyadic] affine images (default: the pullback file)");
  verify->add_option("--group", vf.group, "[group] reference for the abelian oracle (default: depth-0 relators)");
  verify->add_option("--dedup", vf.dedup, "exact or cyclic")->check(CLI::IsMember({"exact", "cyclic"}));
  verify->add_option("--jobs", vf.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string hnn_file;
  std::optional<std::string> hnn_out;
  auto* hnn = app.add_subcommand("hnn", "Embed an ascending L-presentation into a finite HNN extension");
  hnn->add_option("file", hnn_file, "[lpres] document")->required();
  hnn->add_option("--out", hnn_out, "Output file (default: standard output)");

  std::string demo_name, demo_dir = ".";
  auto* demo = app.add_subcommand("demo", "Write a built-in fixture: lysenok, remark3 or z2");
  demo->add_option("name", demo_name, "Fixture name")->required();
  demo->add_option("--dir", demo_dir, "Target directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*parse) return cmd_parse(parse_file_arg);
    if (*expand_cmd) return cmd_expand(ex);
    if (*derive) return cmd_derive(dv);
    if (*verify) return cmd_verify(vf);
    if (*hnn) return cmd_hnn(hnn_file, hnn_out);
    if (*demo) return cmd_demo(demo_name, demo_dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kInputError;
}
