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

#include "sjf/sjf.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sjf/corpus.hpp"
#include "sjf/error.hpp"
#include "sjf/identities.hpp"
#include "sjf/lfunction.hpp"
#include "sjf/numth.hpp"
#include "sjf/petersson.hpp"
#include "sjf/projection.hpp"

struct sjf_corpus {
  sjf::CorpusFile file;
};

namespace {

thread_local std::string g_last_error;

sjf_status status_of(sjf::ErrorCode c) {
  switch (c) {
    case sjf::ErrorCode::kParse: return SJF_E_PARSE;
    case sjf::ErrorCode::kDomain: return SJF_E_DOMAIN;
    case sjf::ErrorCode::kPole: return SJF_E_POLE;
    case sjf::ErrorCode::kInvariant: return SJF_E_INVARIANT;
    case sjf::ErrorCode::kConvergence: return SJF_E_CONVERGENCE;
    case sjf::ErrorCode::kInconsistent: return SJF_E_INCONSISTENT;
    case sjf::ErrorCode::kUsage: return SJF_E_USAGE;
  }
  return SJF_E_INTERNAL;
}

template <typename F>
sjf_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return SJF_OK;
  } catch (const sjf::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SJF_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) sjf::fail(sjf::ErrorCode::kUsage, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sjf_options resolve(const sjf_options* opt) {
  sjf_options o;
  sjf_options_default(&o);
  if (opt) o = *opt;
  if (o.precision < 32) sjf::fail(sjf::ErrorCode::kUsage, "precision must be at least 32 bits");
  if (o.cutoff < 2) sjf::fail(sjf::ErrorCode::kUsage, "cutoff must be at least 2");
  if (!(o.tolerance > 0)) sjf::fail(sjf::ErrorCode::kUsage, "tolerance must be positive");
  return o;
}

int digits_for(long prec) { return int(std::floor(double(prec) * 0.30103)); }

// One result record: ordered key/value pairs. Text format prints
// "key: value" lines with a blank line between records; records format
// prints one line of key=value tokens per record.
class Report {
 public:
  explicit Report(sjf_format f) : format_(f) {}
  Report& record() {
    rows_.emplace_back();
    return *this;
  }
  Report& add(const std::string& key, const std::string& value) {
    if (rows_.empty()) rows_.emplace_back();
    rows_.back().emplace_back(key, value);
    return *this;
  }
  std::string str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (format_ == SJF_FORMAT_TEXT) {
        if (i) os << "\n";
        for (const auto& [k, v] : rows_[i]) os << k << ": " << v << "\n";
      } else {
        bool first = true;
        for (const auto& [k, v] : rows_[i]) {
          std::string compact;
          for (char c : v) {
            if (c != ' ') compact.push_back(c);
          }
          os << (first ? "" : " ") << k << "=" << compact;
          first = false;
        }
        os << "\n";
      }
    }
    return os.str();
  }

 private:
  sjf_format format_;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows_;
};

std::string cstr(const sjf::Complex& z, long prec) {
  if (z.im().is_zero()) return z.re().str(digits_for(prec));
  return z.re().str(digits_for(prec)) + (z.im().sign() < 0 ? " - " : " + ") +
         abs(z.im()).str(digits_for(prec)) + "i";
}

// "a=1 b=2" parameter lists.
std::map<std::string, std::string> parse_params(const char* params) {
  std::map<std::string, std::string> out;
  if (!params) return out;
  std::istringstream is(params);
  std::string tok;
  while (is >> tok) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      sjf::fail(sjf::ErrorCode::kUsage, "expected key=value, got '" + tok + "'");
    }
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

const std::string& param(const std::map<std::string, std::string>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) sjf::fail(sjf::ErrorCode::kUsage, "missing parameter '" + key + "'");
  return it->second;
}

long param_long(const std::map<std::string, std::string>& p, const std::string& key) {
  const std::string& v = param(p, key);
  sjf::Rational q = sjf::parse_rational(v);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
    sjf::fail(sjf::ErrorCode::kUsage, key + " must be an integer");
  }
  return q.get_num().get_si();
}

// chi=<disc> for a Kronecker symbol, chi=1 for the trivial character.
sjf::DirichletCharacter param_character(const std::map<std::string, std::string>& p,
                                        const std::string& key) {
  auto it = p.find(key);
  if (it == p.end() || it->second == "1") return sjf::DirichletCharacter::principal(1);
  return sjf::DirichletCharacter::kronecker(param_long(p, key));
}

sjf::Complex parse_number(const std::string& s, long prec) {
  if (s.find_first_of(".eE") == std::string::npos) {
    return sjf::Complex(sjf::Real(sjf::parse_rational(s), prec), sjf::Real(0L, prec));
  }
  return sjf::Complex(sjf::Real::from_string(s, prec), sjf::Real(0L, prec));
}

sjf_corpus* wrap(sjf::CorpusFile f) { return new sjf_corpus{std::move(f)}; }

std::vector<sjf::JacobiPoint> kernel_points(int count, int n, int l, long prec) {
  // Deterministic points inside the standard fundamental region.
  const double xs[] = {0.1, -0.3, 0.25, -0.05, 0.4, -0.45, 0.0, 0.33};
  const double ys[] = {1.1, 1.3, 1.0, 1.6, 1.05, 1.25, 2.0, 1.4};
  std::vector<sjf::JacobiPoint> out;
  for (int i = 0; i < count; ++i) {
    sjf::JacobiPoint z;
    z.tau = sjf::CMatrix(n, n, prec);
    z.w = sjf::CMatrix(l, n, prec);
    z.tau(0, 0) = sjf::Complex(sjf::Real(xs[i % 8], prec), sjf::Real(ys[i % 8], prec));
    for (int a = 0; a < l; ++a) {
      z.w(a, 0) = sjf::Complex(sjf::Real(0.1 * (a + 1) + 0.05 * i, prec),
                               sjf::Real(0.2 - 0.07 * i + 0.03 * a, prec));
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

extern "C" {

void sjf_options_default(sjf_options* opt) {
  if (!opt) return;
  opt->precision = sjf::default_precision_from_env();
  opt->truncation = nullptr;
  opt->cutoff = 10000;
  opt->tolerance = 1e-10;
  opt->format = SJF_FORMAT_TEXT;
}

const char* sjf_last_error(void) { return g_last_error.c_str(); }

const char* sjf_status_name(sjf_status s) {
  switch (s) {
    case SJF_OK: return "ok";
    case SJF_E_PARSE: return "parse-error";
    case SJF_E_DOMAIN: return "domain-error";
    case SJF_E_POLE: return "pole";
    case SJF_E_INVARIANT: return "invariant-violation";
    case SJF_E_CONVERGENCE: return "convergence-failure";
    case SJF_E_INCONSISTENT: return "inconsistent-input";
    case SJF_E_USAGE: return "usage-error";
    case SJF_E_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void sjf_string_free(char* s) { std::free(s); }

const char* sjf_version(void) { return "0.1.0"; }

sjf_status sjf_corpus_load(const char* path, sjf_corpus** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = wrap(sjf::load_corpus(path));
  });
}

sjf_status sjf_corpus_parse(const char* text, sjf_corpus** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(sjf::parse_corpus(text));
  });
}

sjf_status sjf_corpus_write(const sjf_corpus* c, char** out_text) {
  return guarded([&] {
    need(c, "corpus");
    need(out_text, "out_text");
    *out_text = dup_string(sjf::write_corpus(c->file));
  });
}

sjf_status sjf_corpus_save(const sjf_corpus* c, const char* path) {
  return guarded([&] {
    need(c, "corpus");
    need(path, "path");
    sjf::save_corpus(path, c->file);
  });
}

const char* sjf_corpus_kind(const sjf_corpus* c) {
  if (!c) return "";
  switch (c->file.kind) {
    case sjf::CorpusKind::kJacobi: return "jacobi";
    case sjf::CorpusKind::kNearlyHol: return "nearly-hol";
    case sjf::CorpusKind::kThetaComponents: return "theta-components";
    case sjf::CorpusKind::kEigenvalues: return "eigenvalues";
    case sjf::CorpusKind::kSatake: return "satake";
  }
  return "";
}

void sjf_corpus_free(sjf_corpus* c) { delete c; }

sjf_status sjf_theta(const char* q, const char* lattice, const char* h, const char* cap,
                     sjf_corpus** out) {
  return guarded([&] {
    need(q, "q");
    need(h, "h");
    need(cap, "cap");
    need(out, "out");
    sjf::QMatrix Q = sjf::QMatrix::parse(q);
    sjf::QMatrix L = lattice ? sjf::QMatrix::parse(lattice) : sjf::QMatrix::identity(Q.rows());
    *out = wrap(sjf::corpus_of(
        sjf::theta_series(Q, L, sjf::QMatrix::parse(h), sjf::parse_rational(cap))));
  });
}

sjf_status sjf_decompose(const sjf_corpus* f, sjf_corpus** out) {
  return guarded([&] {
    need(f, "input");
    need(out, "out");
    *out = wrap(sjf::corpus_of(sjf::theta_decompose(f->file.jacobi()), f->file.level));
  });
}

sjf_status sjf_reconstruct(const sjf_corpus* components, const char* cap, sjf_corpus** out) {
  return guarded([&] {
    need(components, "input");
    need(out, "out");
    const auto& tc = components->file.theta();
    sjf::Rational c = cap ? sjf::parse_rational(cap) : tc.cap;
    *out = wrap(sjf::corpus_of(sjf::theta_reconstruct(tc, c), components->file.level));
  });
}

sjf_status sjf_check_property_a(const sjf_corpus* f, const sjf_options* opt, char** report,
                                int* pass) {
  return guarded([&] {
    need(f, "input");
    need(report, "report");
    sjf_options o = resolve(opt);
    sjf::PropertyAReport r = sjf::property_A_check(f->file.jacobi());
    Report rep(o.format);
    for (const auto& e : r.entries) {
      rep.record()
          .add("mu", e.mu.str())
          .add("min_exponent", e.min_exponent ? sjf::rational_str(*e.min_exponent) : "none")
          .add("pass", e.pass ? "true" : "false");
    }
    rep.record()
        .add("property_a", r.pass ? "true" : "false")
        .add("necessary_only", r.necessary_only ? "true" : "false");
    *report = dup_string(rep.str());
    if (pass) *pass = r.pass ? 1 : 0;
  });
}

sjf_status sjf_project(const sjf_corpus* f, sjf_corpus** out) {
  return guarded([&] {
    need(f, "input");
    need(out, "out");
    sjf::NearlyHolExpansion g = f->file.kind == sjf::CorpusKind::kJacobi
                                    ? sjf::NearlyHolExpansion::embed(f->file.jacobi())
                                    : f->file.nearly_hol();
    *out = wrap(sjf::corpus_of(sjf::hol_project(g), f->file.level));
  });
}

sjf_status sjf_pair(const sjf_corpus* f, const char* t, const char* r, const sjf_options* opt,
                    char** report) {
  return guarded([&] {
    need(f, "input");
    need(t, "t");
    need(r, "r");
    need(report, "report");
    sjf_options o = resolve(opt);
    const auto& g = f->file.jacobi();
    sjf::QMatrix tm = sjf::QMatrix::parse(t), rm = sjf::QMatrix::parse(r);
    sjf::PairingResult res = sjf::pair_with_poincare(g, tm, rm);
    Report rep(o.format);
    rep.add("t", tm.str()).add("r", rm.str()).add("exact", res.exact->str());
    if (g.n() == 1) {
      // Covolume pi/3 of SL_2(Z) for dx dy / y^2.
      sjf::Real vol = sjf::Real::pi(o.precision) / 3;
      rep.add("value", res.exact->eval(o.precision, vol).str(digits_for(o.precision)));
    }
    *report = dup_string(rep.str());
  });
}

sjf_status sjf_kernel_check(const sjf_corpus* f, int points, const sjf_options* opt,
                            char** report, int* pass) {
  return guarded([&] {
    need(f, "input");
    need(report, "report");
    if (points < 1) sjf::fail(sjf::ErrorCode::kUsage, "points must be positive");
    sjf_options o = resolve(opt);
    const auto& g = f->file.jacobi();
    sjf::QuadratureOptions q;
    q.prec = o.precision;
    q.tolerance = o.tolerance;
    q.x_nodes = 24;
    q.y_nodes = 12;
    q.p_nodes = 10;
    auto r = sjf::kernel_check(g, kernel_points(points, g.n(), g.l(), o.precision), q);
    Report rep(o.format);
    rep.record().add("norm", cstr(r.norm, o.precision));
    for (const auto& pt : r.points) {
      rep.record()
          .add("tau", cstr(pt.z.tau(0, 0), 8))
          .add("reproduced", cstr(pt.reproduced, o.precision))
          .add("direct", cstr(pt.direct, o.precision))
          .add("rel_err", pt.rel_error.str(4));
    }
    bool ok = r.max_rel_error <= sjf::Real(o.tolerance, o.precision);
    rep.record().add("max_rel_err", r.max_rel_error.str(4)).add("pass", ok ? "true" : "false");
    *report = dup_string(rep.str());
    if (pass) *pass = ok ? 1 : 0;
  });
}

sjf_status sjf_lvalue(const sjf_corpus* table, long sigma, const char* norm,
                      const char* max_height, int allow_outside, const sjf_options* opt,
                      char** report) {
  return guarded([&] {
    need(table, "input");
    need(report, "report");
    sjf_options o = resolve(opt);
    sjf::LSeriesSpec spec = table->file.table().to_spec(o.precision);
    sjf::BoldLambda bl = sjf::bold_lambda(spec, sigma, o.cutoff, allow_outside != 0);
    Report rep(o.format);
    rep.add("sigma", std::to_string(sigma))
        .add("bold_lambda", cstr(bl.value, o.precision))
        .add("l_part", cstr(bl.l_part, o.precision));
    if (bl.hecke_part) rep.add("hecke_part", cstr(*bl.hecke_part, o.precision));
    rep.add("outside_window", bl.outside_window ? "true" : "false");
    if (norm) {
      sjf::Integer h = max_height ? sjf::Integer(max_height) : sjf::Integer(1000000);
      sjf::NormalizedValue nv = sjf::normalized_special_value(
          spec, sigma, parse_number(norm, o.precision), o.cutoff, h, allow_outside != 0);
      rep.add("e_sigma", std::to_string(nv.e_sigma))
          .add("normalized", cstr(nv.value, o.precision))
          .add("recognized", nv.recognized ? sjf::rational_str(*nv.recognized) : "none");
      if (nv.recognized) rep.add("height", nv.height.get_str());
    }
    *report = dup_string(rep.str());
  });
}

sjf_status sjf_constants(const char* what, const char* params, const sjf_options* opt,
                         char** report) {
  return guarded([&] {
    need(what, "what");
    need(report, "report");
    sjf_options o = resolve(opt);
    auto p = parse_params(params);
    const std::string w = what;
    Report rep(o.format);
    const int dg = digits_for(o.precision);
    if (w == "e-sigma") {
      int n = int(param_long(p, "n"));
      long k = param_long(p, "k");
      int l = int(param_long(p, "l"));
      long sigma = param_long(p, "sigma");
      rep.add("e_sigma", std::to_string(sjf::exponent_e_sigma(n, k, l, sigma)))
          .add("in_window", sjf::in_sigma_window(n, k, l, sigma) ? "true" : "false");
    } else if (w == "gamma") {
      int n = int(param_long(p, "n"));
      if (p.count("a")) {
        sjf::Rational a = sjf::parse_rational(param(p, "a"));
        sjf::Rational b = sjf::parse_rational(param(p, "b"));
        rep.add("gamma_ratio", sjf::rational_str(sjf::gamma_n_ratio(n, a, b)));
      } else {
        sjf::Rational x = sjf::parse_rational(param(p, "x"));
        if (sjf::Rational(x * 2).get_den() == 1) {
          sjf::PiPower v = sjf::gamma_n_exact(n, x);
          rep.add("exact", sjf::rational_str(v.q) + " * pi^(" + std::to_string(v.pi_half_power) +
                               "/2)")
              .add("value", v.eval(o.precision).str(dg));
        } else {
          rep.add("value", sjf::gamma_n(n, x, o.precision).str(dg));
        }
      }
    } else if (w == "c-sk") {
      sjf::CSkValue v = sjf::c_Sk(sjf::QMatrix::parse(param(p, "S")),
                                  sjf::parse_rational(param(p, "k")), int(param_long(p, "n")),
                                  sjf::parse_rational(param(p, "sigma")));
      rep.add("c_sk", v.value.str())
          .add("gamma_ratio", sjf::rational_str(v.gamma_ratio))
          .add("sign", v.sign_unknown ? "undetermined" : "+");
    } else if (w == "kernel") {
      sjf::Structured c = sjf::kernel_constant(
          sjf::parse_rational(param(p, "k")), int(param_long(p, "n")),
          sjf::QMatrix::parse(param(p, "S")), p.count("lambda") ? param_long(p, "lambda") : 1);
      rep.add("kernel_constant", c.str());
    } else if (w == "normalizer") {
      int l = int(param_long(p, "l"));
      int n_eis = int(param_long(p, "N"));
      long level = p.count("level") ? param_long(p, "level") : 1;
      sjf::DirichletCharacter chi = param_character(p, "chi");
      sjf::DirichletCharacter psi = param_character(p, "psi");
      sjf::LValue v = sjf::lambda_normalizer(l, n_eis, level, chi, psi,
                                             sjf::parse_rational(param(p, "s")), o.precision);
      if (v.exact) rep.add("exact", sjf::rational_str(*v.exact));
      rep.add("value", cstr(v.value, o.precision));
    } else {
      sjf::fail(sjf::ErrorCode::kUsage, "unknown constant '" + w +
                                            "' (gamma, c-sk, kernel, e-sigma, normalizer)");
    }
    *report = dup_string(rep.str());
  });
}

sjf_status sjf_verify(const sjf_options* opt, char** report, int* all_pass) {
  return guarded([&] {
    need(report, "report");
    sjf_options o = resolve(opt);
    std::vector<sjf::ValidationReport> all;
    for (auto grid : {sjf::run_int_det_grid, sjf::run_cool_id_grid, sjf::run_group_grid}) {
      auto part = grid(o.precision);
      all.insert(all.end(), part.begin(), part.end());
    }
    bool ok = true;
    std::string text;
    for (const auto& r : all) {
      ok = ok && r.pass;
      if (o.format == SJF_FORMAT_RECORDS) {
        text += sjf::report_record(r) + "\n";
      } else {
        text += (r.pass ? "PASS " : "FAIL ") + r.name + " " + r.params +
                " rel_err=" + r.rel_error.str(4) + "\n";
      }
    }
    *report = dup_string(text);
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
