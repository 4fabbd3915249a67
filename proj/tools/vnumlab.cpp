// Command line front end: vnumlab <command> [document.json] [flags]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "vnumlab/commands.hpp"
#include "vnumlab/errors.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vnumlab::Error("io-error", "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& bytes, const std::optional<std::string>& out) {
  if (!out || *out == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream file(*out, std::ios::binary | std::ios::trunc);
  if (!file) throw vnumlab::Error("io-error", "cannot write " + *out);
  file << bytes;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace vnumlab;
  CLI::App app{"Monomial subquotients: associated primes, v-numbers and filtration invariants"};

  std::string command;
  std::string document;
  std::optional<int> n_max;
  std::optional<int> window;
  std::optional<int> s_max;
  std::optional<std::int64_t> degree_bound;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> cache_dir;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("document", document, "Problem document (JSON); '-' reads standard input");
  app.add_option("--n-max", n_max, "Largest n of a family run")->check(CLI::Range(4, 100000));
  app.add_option("--window", window, "Tail length required for a stabilized fit")->check(CLI::Range(2, 1000));
  app.add_option("--s-max", s_max, "Largest exponent tried by the radical probe")->check(CLI::Range(1, 1000));
  app.add_option("--degree-bound", degree_bound, "Degree bound of the brute-force oracles");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out, "Output file (default: standard output)");
  app.add_option("--cache-dir", cache_dir, "Directory for cached family series (env VNUMLAB_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParseError;
  }

  try {
    CommandResult result;
    std::string fmt = format.value_or("json");
    std::optional<std::string> out_path = out;
    if (command == "verify-golden") {
      result = run_verify_golden();
    } else {
      if (document.empty()) throw ParseError("missing-document", "command " + command + " needs a document");
      ProblemDocument doc = parse_input(read_all(document));
      if (n_max && doc.family) doc.family->n_max = *n_max;
      if (window) doc.options.window = *window;
      if (s_max) doc.options.s_max = *s_max;
      if (degree_bound) doc.options.degree_bound = *degree_bound;
      if (format) doc.options.format = *format;
      if (out) doc.options.out = *out;
      fmt = doc.options.format;
      out_path = doc.options.out;

      RunOptions run;
      if (cache_dir) {
        run.cache_dir = *cache_dir;
      } else if (const char* env = std::getenv("VNUMLAB_CACHE_DIR"); env && *env) {
        run.cache_dir = env;
      }
      result = run_command(doc, command, run);
    }
    write_output(render(result, fmt), out_path);
    return result.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}
