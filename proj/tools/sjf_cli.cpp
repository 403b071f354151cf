// Copyright 2026 The sjf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C API. Exit status: 0 on success, 1 on a
// computational error or a failed check, 2 on a usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sjf/sjf.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CorpusDeleter {
  void operator()(sjf_corpus* c) const { sjf_corpus_free(c); }
};
using CorpusPtr = std::unique_ptr<sjf_corpus, CorpusDeleter>;

// Raised after a failing C call; carries the exit status.
struct Failure {
  int code;
};

void check(sjf_status s) {
  if (s == SJF_OK) return;
  std::fprintf(stderr, "error: %s: %s\n", sjf_status_name(s), sjf_last_error());
  throw Failure{s == SJF_E_USAGE ? kExitUsage : kExitFailure};
}

CorpusPtr load(const std::string& path) {
  sjf_corpus* c = nullptr;
  check(sjf_corpus_load(path.c_str(), &c));
  return CorpusPtr(c);
}

void emit_text(char* text, const std::string& out_path) {
  std::string s = text;
  sjf_string_free(text);
  if (out_path.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot write '%s'\n", out_path.c_str());
    throw Failure{kExitFailure};
  }
  out << s;
}

void emit_corpus(const CorpusPtr& c, const std::string& out_path) {
  char* text = nullptr;
  check(sjf_corpus_write(c.get(), &text));
  emit_text(text, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  sjf_options opt;
  sjf_options_default(&opt);

  CLI::App app{"Siegel-Jacobi forms: expansions, projections, pairings and L-values", "sjf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string truncation, format = "text";
  app.add_option("--precision", opt.precision, "working precision in bits")
      ->check(CLI::Range(32L, 1L << 20));
  app.add_option("--truncation", truncation, "truncation cap tr(t) <= cap");
  app.add_option("--cutoff", opt.cutoff, "Dirichlet series / Euler product cutoff")
      ->check(CLI::Range(2L, 100000000L));
  app.add_option("--tolerance", opt.tolerance, "relative tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "records"}));

  std::string input, output;
  auto add_io = [&](CLI::App* sub, bool has_output) {
    sub->add_option("input", input, "corpus file")->required()->check(CLI::ExistingFile);
    if (has_output) sub->add_option("-o,--output", output, "output file (default stdout)");
  };

  auto* theta = app.add_subcommand("theta", "emit a theta series");
  std::string q, lattice, h = "0";
  theta->add_option("--q", q, "even Gram matrix Q")->required();
  theta->add_option("--lattice", lattice, "lattice basis (default identity)");
  theta->add_option("--char", h, "characteristic h, l x n");
  theta->add_option("-o,--output", output, "output file (default stdout)");

  auto* decompose = app.add_subcommand("decompose", "theta decomposition of a jacobi file");
  add_io(decompose, true);
  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild a jacobi file from components");
  add_io(reconstruct, true);
  auto* prop_a = app.add_subcommand("check-property-a", "cuspidality of theta components");
  add_io(prop_a, false);
  auto* project = app.add_subcommand("project", "holomorphic projection");
  add_io(project, true);

  auto* pair = app.add_subcommand("pair", "pairing with a Poincare series");
  add_io(pair, false);
  std::string pt, pr;
  pair->add_option("--t", pt, "index t")->required();
  pair->add_option("--r", pr, "index r")->required();

  auto* kernel = app.add_subcommand("kernel-check", "reproducing-kernel check");
  add_io(kernel, false);
  int points = 5;
  kernel->add_option("--points", points, "number of test points")->check(CLI::Range(1, 64));

  auto* lvalue = app.add_subcommand("lvalue", "bold-Lambda, normalized value, recognition");
  add_io(lvalue, false);
  long sigma = 0;
  std::string norm, max_height;
  bool allow_outside = false;
  lvalue->add_option("--sigma", sigma, "integer sigma")->required();
  lvalue->add_option("--norm", norm, "Petersson norm <f, f>");
  lvalue->add_option("--max-height", max_height, "largest accepted numerator/denominator");
  lvalue->add_flag("--allow-outside", allow_outside, "evaluate outside the sigma window");

  auto* constants = app.add_subcommand("constants", "Gamma_n, c_{S,k}, e_sigma, normalizers");
  auto* which = constants->add_option_group("constant");
  bool c_gamma = false, c_csk = false, c_esigma = false, c_norm = false, c_kernel = false;
  which->add_flag("--gamma", c_gamma, "Gamma_n(x) or a ratio: n= x= | n= a= b=");
  which->add_flag("--c-sk", c_csk, "c_{S,k}: S= k= n= sigma=");
  which->add_flag("--e-sigma", c_esigma, "e_sigma: n= k= l= sigma=");
  which->add_flag("--normalizer", c_norm, "Lambda normalizer: l= N= s= [level= chi= psi=]");
  which->add_flag("--kernel", c_kernel, "kernel constant: k= n= S= [lambda=]");
  which->require_option(1);
  std::vector<std::string> params;
  constants->add_option("params", params, "key=value parameters");

  auto* verify = app.add_subcommand("verify", "run the identity validation grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  opt.format = format == "records" ? SJF_FORMAT_RECORDS : SJF_FORMAT_TEXT;
  opt.truncation = truncation.empty() ? nullptr : truncation.c_str();

  try {
    char* report = nullptr;
    if (*theta) {
      sjf_corpus* out = nullptr;
      check(sjf_theta(q.c_str(), lattice.empty() ? nullptr : lattice.c_str(), h.c_str(),
                      truncation.empty() ? "10" : truncation.c_str(), &out));
      emit_corpus(CorpusPtr(out), output);
    } else if (*decompose) {
      sjf_corpus* out = nullptr;
      check(sjf_decompose(load(input).get(), &out));
      emit_corpus(CorpusPtr(out), output);
    } else if (*reconstruct) {
      sjf_corpus* out = nullptr;
      check(sjf_reconstruct(load(input).get(), opt.truncation, &out));
      emit_corpus(CorpusPtr(out), output);
    } else if (*prop_a) {
      int pass = 0;
      check(sjf_check_property_a(load(input).get(), &opt, &report, &pass));
      emit_text(report, "");
      return pass ? 0 : kExitFailure;
    } else if (*project) {
      sjf_corpus* out = nullptr;
      check(sjf_project(load(input).get(), &out));
      emit_corpus(CorpusPtr(out), output);
    } else if (*pair) {
      check(sjf_pair(load(input).get(), pt.c_str(), pr.c_str(), &opt, &report));
      emit_text(report, "");
    } else if (*kernel) {
      int pass = 0;
      check(sjf_kernel_check(load(input).get(), points, &opt, &report, &pass));
      emit_text(report, "");
      return pass ? 0 : kExitFailure;
    } else if (*lvalue) {
      check(sjf_lvalue(load(input).get(), sigma, norm.empty() ? nullptr : norm.c_str(),
                       max_height.empty() ? nullptr : max_height.c_str(), allow_outside ? 1 : 0,
                       &opt, &report));
      emit_text(report, "");
    } else if (*constants) {
      const char* what = c_gamma    ? "gamma"
                         : c_csk    ? "c-sk"
                         : c_esigma ? "e-sigma"
                         : c_norm   ? "normalizer"
                                    : "kernel";
      std::string joined;
      for (const auto& p : params) joined += (joined.empty() ? "" : " ") + p;
      check(sjf_constants(what, joined.c_str(), &opt, &report));
      emit_text(report, "");
    } else if (*verify) {
      int pass = 0;
      check(sjf_verify(&opt, &report, &pass));
      emit_text(report, "");
      return pass ? 0 : kExitFailure;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return 0;
}
