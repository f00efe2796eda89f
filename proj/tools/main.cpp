// Command-line front end over the C API.

#include "arconv/arconv.h"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(arconv_status s) {
  switch (s) {
    case ARCONV_OK: return kOk;
    case ARCONV_ERR_NOT_A_UNIT:
    case ARCONV_ERR_NOT_INVERTIBLE:
    case ARCONV_ERR_ROOT: return kDomain;
    default: return kUsage;
  }
}

struct ApiError {
  arconv_status status;
};

void check(arconv_status s) {
  if (s != ARCONV_OK) throw ApiError{s};
}

struct StringDeleter {
  void operator()(char* s) const { arconv_string_free(s); }
};
struct SeqDeleter {
  void operator()(arconv_seq* s) const { arconv_seq_free(s); }
};
struct ParamsDeleter {
  void operator()(arconv_params* p) const { arconv_params_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;
using SeqPtr = std::unique_ptr<arconv_seq, SeqDeleter>;
using ParamsPtr = std::unique_ptr<arconv_params, ParamsDeleter>;

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t max_depth() {
  const char* env = std::getenv("TOOL_MAX_DEPTH");
  if (!env || !*env) return 256;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string("TOOL_MAX_DEPTH is not a number: ") + env);
  return v;
}

void check_depth(long depth) {
  if (depth < 0) throw UsageError("--depth must be >= 0");
  if (static_cast<std::size_t>(depth) > max_depth())
    throw UsageError("--depth " + std::to_string(depth) + " exceeds TOOL_MAX_DEPTH=" + std::to_string(max_depth()));
}

/// Options shared by the commands that take identity or generator parameters.
struct ParamOptions {
  std::map<std::string, std::string> values;

  void attach(CLI::App* cmd, const std::vector<std::string>& names) {
    static const std::map<std::string, std::string> help = {
        {"p", "numerator of a rational power"},
        {"q", "denominator of a rational power"},
        {"m", "root index or first index"},
        {"n", "second index or bound"},
        {"k", "exponent"},
        {"x", "NUM/DEN, or x for the indeterminate"},
        {"a", "first scale parameter"},
        {"b", "second scale parameter"},
        {"c", "shift parameter (omit for polynomial mode)"},
        {"r", "power for the higher-order variants"},
        {"alpha", "exponent deficit"},
        {"seed", "random seed"},
        {"f", "test sequence: bernoulli, constructed or random"},
        {"samples", "number of random samples"},
    };
    for (const auto& n : names) cmd->add_option("--" + n, values[n], help.at(n));
  }

  ParamsPtr build(const CLI::App* cmd) const {
    ParamsPtr p(arconv_params_new());
    if (!p) throw ApiError{ARCONV_ERR_INTERNAL};
    for (const auto& [k, v] : values)
      if (cmd->count("--" + k) > 0) check(arconv_params_set(p.get(), k.c_str(), v.c_str()));
    return p;
  }
};

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write " + path);
  }
};

arconv_format format_of(const std::string& format, const std::string& part) {
  if (format == "json") return ARCONV_FORMAT_JSON;
  if (format == "csv") return ARCONV_FORMAT_CSV;
  return part == "denominator" ? ARCONV_FORMAT_BFILE_DENOMINATOR : ARCONV_FORMAT_BFILE_NUMERATOR;
}

std::string serialize(const arconv_seq* s, arconv_format f) {
  char* text = nullptr;
  check(arconv_seq_serialize(s, f, &text));
  return take(text);
}

SeqPtr load_seq(const std::string& path) {
  std::string text = read_input(path);
  arconv_seq* s = nullptr;
  check(arconv_seq_from_json(text.c_str(), &s));
  return SeqPtr(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic on truncated sequences under the binomial convolution"};
  app.require_subcommand(1);

  long depth = 12;
  std::string format = "json";
  std::string part = "numerator";
  Output output;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv or bfile")->check(CLI::IsMember({"json", "csv", "bfile"}));
    cmd->add_option("--part", part, "b-file part: numerator or denominator")
        ->check(CLI::IsMember({"numerator", "denominator"}));
    cmd->add_option("-o,--output", output.path, "output file (default stdout)");
  };

  // gen
  std::string gen_name;
  ParamOptions gen_params;
  CLI::App* gen = app.add_subcommand("gen", "generate a named sequence");
  gen->add_option("name", gen_name, "generator name")->required();
  gen->add_option("--depth", depth, "truncation depth K");
  gen_params.attach(gen, {"p", "q", "m", "n", "x"});
  add_format(gen);

  // op
  std::string op_name;
  std::vector<std::string> op_files;
  ParamOptions op_params;
  CLI::App* op = app.add_subcommand("op", "apply an operation to sequence JSON files");
  op->add_option("operation", op_name,
                 "bullet, cauchy, invert, root, pow, transform, invert-transform or decompose")
      ->required();
  op->add_option("files", op_files, "input sequence JSON files (- for stdin)")->required();
  op_params.attach(op, {"p", "q", "m"});
  add_format(op);

  // verify
  std::string verify_name;
  bool verify_list = false;
  std::optional<long> verify_depth;
  ParamOptions verify_params;
  CLI::App* verify = app.add_subcommand("verify", "check a named identity and print a JSON report");
  verify->add_option("name", verify_name, "identity name");
  verify->add_flag("--list", verify_list, "list identity names");
  verify->add_option("--depth", verify_depth, "truncation depth (default depends on the identity)");
  verify_params.attach(verify, {"p", "q", "m", "n", "k", "x", "a", "b", "c", "r", "alpha", "seed", "f", "samples"});
  verify->add_option("-o,--output", output.path, "output file (default stdout)");

  // table1
  std::string table_format = "text";
  CLI::App* table = app.add_subcommand("table1", "roots of the Bernoulli numbers next to the published table");
  table->add_option("--format", table_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  table->add_option("-o,--output", output.path, "output file (default stdout)");

  // oeis-compare
  std::string cmp_seq, cmp_bfile;
  CLI::App* cmp = app.add_subcommand("oeis-compare", "compare numerators or denominators with a b-file");
  cmp->add_option("sequence", cmp_seq, "sequence JSON file")->required();
  cmp->add_option("bfile", cmp_bfile, "b-file")->required();
  cmp->add_option("--part", part, "numerator or denominator")->check(CLI::IsMember({"numerator", "denominator"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      check_depth(depth);
      ParamsPtr p = gen_params.build(gen);
      arconv_seq* s = nullptr;
      check(arconv_gen(gen_name.c_str(), p.get(), static_cast<std::size_t>(depth), &s));
      SeqPtr seq(s);
      output.write(serialize(seq.get(), format_of(format, part)));
      return kOk;
    }

    if (*op) {
      std::vector<SeqPtr> inputs;
      std::vector<const arconv_seq*> raw;
      for (const auto& f : op_files) {
        inputs.push_back(load_seq(f));
        check_depth(static_cast<long>(arconv_seq_depth(inputs.back().get())));
        raw.push_back(inputs.back().get());
      }
      ParamsPtr p = op_params.build(op);
      arconv_seq* outs[ARCONV_MAX_OUTPUTS] = {};
      std::size_t n_out = 0;
      arconv_status st = arconv_op(op_name.c_str(), raw.data(), raw.size(), p.get(), outs, &n_out);
      std::vector<SeqPtr> results;
      for (std::size_t i = 0; i < n_out; ++i) results.emplace_back(outs[i]);
      check(st);
      std::string text;
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (i > 0 && format != "json") text += "\n";
        text += serialize(results[i].get(), format_of(format, part));
      }
      output.write(text);
      return kOk;
    }

    if (*verify) {
      if (verify_list) {
        char* names = nullptr;
        check(arconv_identity_names(&names));
        output.write(take(names));
        return kOk;
      }
      if (verify_name.empty()) throw UsageError("verify needs an identity name (or --list)");
      if (verify_depth) check_depth(*verify_depth);
      ParamsPtr p = verify_params.build(verify);
      int pass = 0;
      char* report = nullptr;
      check(arconv_verify(verify_name.c_str(), p.get(), verify_depth.value_or(-1), &pass, &report));
      output.write(take(report));
      return pass ? kOk : kFail;
    }

    if (*table) {
      char* text = nullptr;
      int all_agree = 0;
      check(arconv_table1(table_format == "json", &all_agree, &text));
      output.write(take(text));
      return kOk;
    }

    if (*cmp) {
      SeqPtr seq = load_seq(cmp_seq);
      std::string bfile = read_input(cmp_bfile);
      arconv_compare_result result{};
      char* report = nullptr;
      check(arconv_oeis_compare(seq.get(), bfile.c_str(), part == "numerator" ? 0 : 1, &result, &report));
      std::cout << take(report);
      switch (result) {
        case ARCONV_COMPARE_AGREE: return kOk;
        case ARCONV_COMPARE_MISMATCH: return kFail;
        case ARCONV_COMPARE_NO_OVERLAP: return kUsage;
      }
    }
  } catch (const ApiError& e) {
    std::cerr << "error: " << arconv_last_error() << '\n';
    return exit_for(e.status);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
