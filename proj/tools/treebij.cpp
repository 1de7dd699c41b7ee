#include <cstdint>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "treebij/convert.hpp"
#include "treebij/enumeration.hpp"
#include "treebij/render.hpp"
#include "treebij/text.hpp"
#include "treebij/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const CLI::Option* opt, const std::string& value) {
  if (opt->count() == 0 || value == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  return value;
}

treebij::Kind parse_kind(const std::string& name) {
  auto kind = treebij::kind_from_string(name);
  if (!kind) {
    throw CLI::ValidationError("kind must be one of word, partition, port, phylo; got '" +
                               name + "'");
  }
  return *kind;
}

int run_convert(const std::string& from, const std::string& to,
                const std::string& input) {
  std::cout << treebij::convert_text(parse_kind(from), parse_kind(to), input)
            << '\n';
  return kExitOk;
}

int run_enumerate(const std::string& kind_name, int n, bool force) {
  const treebij::Kind kind = parse_kind(kind_name);
  if (n > 10 && !force) {
    std::cerr << "enumerate: n = " << n
              << " exceeds the guard (10); pass --force to override\n";
    return kExitUsage;
  }
  treebij::WordEnumerator stream(n);
  while (auto w = stream.next()) {
    std::cout << treebij::convert_text(treebij::Kind::word, kind,
                                       treebij::format_word(*w))
              << '\n';
  }
  return kExitOk;
}

int run_verify(int n_max, bool force) {
  if (n_max > 7 && !force) {
    std::cerr << "verify: --n-max " << n_max
              << " exceeds the guard (7); pass --force to override\n";
    return kExitUsage;
  }
  const treebij::VerifyReport report = treebij::verify_bijections(n_max);
  for (const std::string& line : report.lines) {
    std::cout << line << '\n';
  }
  if (!report.ok) {
    std::cout << "verify: FAILED\n";
    std::cerr << report.failure << '\n';
    return kExitVerifyFailed;
  }
  std::cout << "verify: all checks passed for n <= " << n_max << '\n';
  return kExitOk;
}

int run_render(const std::string& kind_name, const std::string& format,
               bool stanley_labels, const std::string& input) {
  const treebij::Kind kind = parse_kind(kind_name);
  if (kind != treebij::Kind::port && kind != treebij::Kind::phylo) {
    throw CLI::ValidationError("render supports --kind port or phylo");
  }
  if (stanley_labels && kind != treebij::Kind::phylo) {
    throw CLI::ValidationError("--stanley-labels is only valid with --kind phylo");
  }
  std::string out;
  if (kind == treebij::Kind::port) {
    const treebij::Port t = treebij::parse_port(input);
    out = format == "dot" ? treebij::render_port_dot(t)
                          : treebij::render_port_ascii(t);
  } else {
    const treebij::PhyloTree t = treebij::parse_phylo(input);
    out = format == "dot" ? treebij::render_phylo_dot(t, stanley_labels)
                          : treebij::render_phylo_ascii(t, stanley_labels);
  }
  std::cout << out;
  return kExitOk;
}

treebij::BigInt parse_rank_value(const std::string& text) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw CLI::ValidationError("--rank must be a nonnegative decimal integer, got '" +
                               text + "'");
  }
  return treebij::BigInt(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bijections among trapezoidal words, plane-oriented recursive "
               "trees, 2-partitions and phylogenetic trees"};
  app.require_subcommand(1);

  std::string from_kind, to_kind, kind_name, input_text, word_text, rank_text;
  std::string format;
  int n = 0, n_max = 1;
  std::uint64_t seed = 0;
  int count = 1;
  bool force = false, stanley_labels = false;

  CLI::App* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("--from", from_kind, "Source kind")->required();
  convert->add_option("--to", to_kind, "Target kind")->required();
  CLI::Option* convert_input =
      convert->add_option("--input", input_text, "Input text ('-' reads stdin)");

  CLI::App* enumerate = app.add_subcommand("enumerate", "List all objects of a kind");
  enumerate->add_option("--kind", kind_name, "Object kind")->required();
  enumerate->add_option("--n", n, "Size parameter")->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--force", force, "Override the size guard");

  CLI::App* count_cmd = app.add_subcommand("count", "Number of objects of size n");
  count_cmd->add_option("--n", n, "Size parameter")->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* rank_cmd = app.add_subcommand("rank", "Lexicographic rank of a word");
  rank_cmd->add_option("--word", word_text, "Trapezoidal word text")->required();

  CLI::App* unrank_cmd = app.add_subcommand("unrank", "Word of a given rank");
  unrank_cmd->add_option("--rank", rank_text, "Rank (decimal)")->required();
  unrank_cmd->add_option("--n", n, "Word length")->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* sample = app.add_subcommand("sample", "Uniform random words");
  sample->add_option("--n", n, "Word length")->required()
      ->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed, "Seed of the first sample")->required();
  sample->add_option("--count", count, "Number of samples (seeds seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "Exhaustive bijectivity check");
  verify->add_option("--n-max", n_max, "Largest size to check")->required()
      ->check(CLI::Range(1, 1 << 20));
  verify->add_flag("--force", force, "Override the size guard");

  CLI::App* render = app.add_subcommand("render", "Emit DOT or ASCII for a tree");
  render->add_option("--kind", kind_name, "port or phylo")->required();
  render->add_option("--format", format, "dot or ascii")->required()
      ->check(CLI::IsMember({"dot", "ascii"}));
  render->add_flag("--stanley-labels", stanley_labels,
                   "Show construction-order labels on internal nodes");
  CLI::Option* render_input =
      render->add_option("--input", input_text, "Input text ('-' reads stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (convert->parsed()) {
      return run_convert(from_kind, to_kind,
                         read_input(convert_input, input_text));
    }
    if (enumerate->parsed()) {
      return run_enumerate(kind_name, n, force);
    }
    if (count_cmd->parsed()) {
      std::cout << treebij::count_objects(n).str() << '\n';
      return kExitOk;
    }
    if (rank_cmd->parsed()) {
      std::cout << treebij::rank(treebij::parse_word(word_text)).str() << '\n';
      return kExitOk;
    }
    if (unrank_cmd->parsed()) {
      std::cout << treebij::format_word(
                       treebij::unrank(parse_rank_value(rank_text), n))
                << '\n';
      return kExitOk;
    }
    if (sample->parsed()) {
      for (int i = 0; i < count; ++i) {
        std::cout << treebij::format_word(
                         treebij::sample_word(n, seed + static_cast<std::uint64_t>(i)))
                  << '\n';
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      return run_verify(n_max, force);
    }
    if (render->parsed()) {
      return run_render(kind_name, format, stanley_labels,
                        read_input(render_input, input_text));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const treebij::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const treebij::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
