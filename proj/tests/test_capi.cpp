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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "sjf/sjf.h"

namespace {

std::string corpus(const char* name) { return std::string(SJF_CORPUS_DIR) + "/" + name; }

std::string take(char* s) {
  std::string out = s ? s : "";
  sjf_string_free(s);
  return out;
}

struct Handle {
  sjf_corpus* c = nullptr;
  ~Handle() { sjf_corpus_free(c); }
};

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(sjf_status_name(SJF_OK)) == "ok");
  CHECK(std::string(sjf_status_name(SJF_E_PARSE)) == "parse-error");
  CHECK(std::strlen(sjf_version()) > 0);
  sjf_options o;
  sjf_options_default(&o);
  CHECK(o.precision >= 64);
  CHECK(o.cutoff == 10000);
}

TEST_CASE("load, inspect and write") {
  Handle h;
  REQUIRE(sjf_corpus_load(corpus("phi10_1.jacobi").c_str(), &h.c) == SJF_OK);
  CHECK(std::string(sjf_corpus_kind(h.c)) == "jacobi");
  char* text = nullptr;
  REQUIRE(sjf_corpus_write(h.c, &text) == SJF_OK);
  std::string s = take(text);
  CHECK(s.rfind("sjf-corpus 1.0\n", 0) == 0);
  Handle again;
  REQUIRE(sjf_corpus_parse(s.c_str(), &again.c) == SJF_OK);
}

TEST_CASE("errors carry a status and a message") {
  Handle h;
  CHECK(sjf_corpus_load("/nonexistent/x.jacobi", &h.c) != SJF_OK);
  CHECK(h.c == nullptr);
  CHECK(std::strlen(sjf_last_error()) > 0);

  const char* bad =
      "sjf-corpus 1.0\nkind=jacobi\nn=1\nl=1\nk=10\nS=1\nlambda=1\nlevel=1\ncap=3\ncuspidal=0\n"
      "---\nt=1 r=3 c=1\n";
  CHECK(sjf_corpus_parse(bad, &h.c) == SJF_E_INVARIANT);
  CHECK(std::string(sjf_last_error()).find("line 12") != std::string::npos);
  CHECK(sjf_corpus_parse("sjf-corpus 9.0\n", &h.c) == SJF_E_PARSE);
  CHECK(sjf_corpus_parse(nullptr, &h.c) == SJF_E_USAGE);

  Handle theta;
  REQUIRE(sjf_corpus_load(corpus("theta_q2_h0.jacobi").c_str(), &theta.c) == SJF_OK);
  char* report = nullptr;
  CHECK(sjf_pair(theta.c, "1", "0", nullptr, &report) == SJF_E_DOMAIN);
  CHECK(report == nullptr);
}

TEST_CASE("theta, decompose and reconstruct") {
  Handle th;
  REQUIRE(sjf_theta("[[2,1],[1,2]]", nullptr, "[[1/3],[1/3]]", "10", &th.c) == SJF_OK);
  Handle shipped;
  REQUIRE(sjf_corpus_load(corpus("theta_a2_h1_3.jacobi").c_str(), &shipped.c) == SJF_OK);
  char *a = nullptr, *b = nullptr;
  sjf_corpus_write(th.c, &a);
  sjf_corpus_write(shipped.c, &b);
  CHECK(take(a) == take(b));

  Handle comps, back;
  REQUIRE(sjf_decompose(th.c, &comps.c) == SJF_OK);
  CHECK(std::string(sjf_corpus_kind(comps.c)) == "theta-components");
  REQUIRE(sjf_reconstruct(comps.c, nullptr, &back.c) == SJF_OK);
  sjf_corpus_write(back.c, &a);
  sjf_corpus_write(th.c, &b);
  CHECK(take(a) == take(b));
}

TEST_CASE("projection and pairing") {
  Handle f, p;
  REQUIRE(sjf_corpus_load(corpus("e2star_phi10_1.nearly-hol").c_str(), &f.c) == SJF_OK);
  REQUIRE(sjf_project(f.c, &p.c) == SJF_OK);
  char* text = nullptr;
  sjf_corpus_write(p.c, &text);
  std::string s = take(text);
  CHECK(s.find("t=1 r=0 c=10/19\n") != std::string::npos);
  CHECK(s.find("t=1 r=1 c=1/19\n") != std::string::npos);

  Handle phi;
  REQUIRE(sjf_corpus_load(corpus("phi10_1.jacobi").c_str(), &phi.c) == SJF_OK);
  char* report = nullptr;
  REQUIRE(sjf_pair(phi.c, "1", "1", nullptr, &report) == SJF_OK);
  CHECK(take(report).find("25025/124416") != std::string::npos);
}

TEST_CASE("constants") {
  char* report = nullptr;
  REQUIRE(sjf_constants("e-sigma", "n=2 k=30 l=1 sigma=16", nullptr, &report) == SJF_OK);
  CHECK(take(report).find("e_sigma: 86") != std::string::npos);
  REQUIRE(sjf_constants("normalizer", "l=1 N=2 s=-1/4", nullptr, &report) == SJF_OK);
  CHECK(take(report).find("1/120") != std::string::npos);
  CHECK(sjf_constants("bogus", "", nullptr, &report) == SJF_E_USAGE);
  CHECK(sjf_constants("gamma", "n=2", nullptr, &report) != SJF_OK);
}

TEST_CASE("records format") {
  sjf_options o;
  sjf_options_default(&o);
  o.format = SJF_FORMAT_RECORDS;
  char* report = nullptr;
  REQUIRE(sjf_constants("gamma", "n=1 a=7 b=5", &o, &report) == SJF_OK);
  std::string s = take(report);
  CHECK(s.find("=30") != std::string::npos);
  CHECK(s.find(": ") == std::string::npos);
}
