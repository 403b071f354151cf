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

#include "sjf/corpus.hpp"

#include <fstream>
#include <sstream>

#include "sjf/error.hpp"

namespace sjf {

namespace {

const char* const kMagic = "sjf-corpus";

[[noreturn]] void parse_fail(size_t line, const std::string& msg) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + msg);
}

// Re-raises an error from inside a record with the line number attached.
template <typename F>
void at_line(size_t line, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    fail(e.code(), "line " + std::to_string(line) + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// "a=1 b=2" -> ordered (key, value) list; every token must be key=value.
std::vector<std::pair<std::string, std::string>> fields(const std::string& line, size_t ln) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) parse_fail(ln, "expected key=value, got '" + tok + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

long parse_long(const std::string& s, size_t ln, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    parse_fail(ln, "invalid integer for " + what + ": '" + s + "'");
  }
}

Rational parse_q(const std::string& s, size_t ln, const std::string& what) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    parse_fail(ln, "invalid rational for " + what + ": '" + s + "'");
  }
}

QMatrix parse_m(const std::string& s, size_t ln, const std::string& what, int rows, int cols) {
  QMatrix m;
  try {
    m = QMatrix::parse(s);
  } catch (const Error&) {
    parse_fail(ln, "invalid matrix for " + what + ": '" + s + "'");
  }
  if (rows > 0 && (m.rows() != rows || m.cols() != cols)) {
    parse_fail(ln, what + " must be " + std::to_string(rows) + " x " + std::to_string(cols));
  }
  return m;
}

std::string gauss_str(const GaussianRational& g) {
  if (g.im == 0) return rational_str(g.re);
  return rational_str(g.re) + "," + rational_str(g.im);
}

GaussianRational parse_gauss(const std::string& s, size_t ln, const std::string& what) {
  auto parts = split(s, ',');
  if (parts.size() > 2) parse_fail(ln, "invalid complex value for " + what);
  GaussianRational g{parse_q(parts[0], ln, what), Rational(0)};
  if (parts.size() == 2) g.im = parse_q(parts[1], ln, what);
  return g;
}

CorpusKind parse_kind(const std::string& s, size_t ln) {
  for (auto k : {CorpusKind::kJacobi, CorpusKind::kNearlyHol, CorpusKind::kThetaComponents,
                 CorpusKind::kEigenvalues, CorpusKind::kSatake}) {
    if (kind_name(k) == s) return k;
  }
  parse_fail(ln, "unknown kind '" + s + "'");
}

std::string chi_values_str(const DirichletCharacter& chi) {
  std::string s = "[";
  for (long a = 0; a < chi.modulus(); ++a) {
    if (a) s += ",";
    long e = chi.exponent(a);
    s += e < 0 ? std::string("*") : std::to_string(e);
  }
  return s + "]";
}

struct Header {
  std::map<std::string, std::pair<std::string, size_t>> values;
  const std::string& need(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) fail(ErrorCode::kParse, "header is missing '" + key + "'");
    return it->second.first;
  }
  size_t line(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? 0 : it->second.second;
  }
  bool has(const std::string& key) const { return values.count(key) > 0; }
};

}  // namespace

std::string kind_name(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::kJacobi: return "jacobi";
    case CorpusKind::kNearlyHol: return "nearly-hol";
    case CorpusKind::kThetaComponents: return "theta-components";
    case CorpusKind::kEigenvalues: return "eigenvalues";
    case CorpusKind::kSatake: return "satake";
  }
  return "";
}

LSeriesSpec EulerTable::to_spec(long prec) const {
  LSeriesSpec spec;
  spec.n = n;
  spec.l = l;
  spec.k = k;
  spec.level = level;
  spec.chi = chi;
  spec.psi = psi_S(S);
  spec.prec = prec;
  for (const auto& [a, v] : eigenvalues) spec.eigenvalues[a] = v.eval(prec);
  for (const auto& [p, mus] : satake) {
    std::vector<Complex> mu;
    for (const auto& g : mus) mu.push_back(g.eval(prec));
    spec.euler[p] = euler_factor_from_satake(mu);
  }
  for (const auto& [p, cs] : polys) {
    std::vector<Complex> c;
    for (const auto& q : cs) c.push_back(Complex(Real(q, prec), Real(0L, prec)));
    spec.euler[p] = euler_factor_from_poly(c);
  }
  return spec;
}

bool EulerTable::operator==(const EulerTable& o) const {
  return n == o.n && l == o.l && k == o.k && S == o.S && lambda == o.lambda &&
         level == o.level && chi == o.chi && eigenvalues == o.eigenvalues &&
         satake == o.satake && polys == o.polys;
}

const JacobiExpansion& CorpusFile::jacobi() const {
  if (kind != CorpusKind::kJacobi) fail(ErrorCode::kDomain, "expected a jacobi corpus file");
  return std::get<JacobiExpansion>(body);
}
const NearlyHolExpansion& CorpusFile::nearly_hol() const {
  if (kind != CorpusKind::kNearlyHol) {
    fail(ErrorCode::kDomain, "expected a nearly-hol corpus file");
  }
  return std::get<NearlyHolExpansion>(body);
}
const ThetaComponents& CorpusFile::theta() const {
  if (kind != CorpusKind::kThetaComponents) {
    fail(ErrorCode::kDomain, "expected a theta-components corpus file");
  }
  return std::get<ThetaComponents>(body);
}
const EulerTable& CorpusFile::table() const {
  if (kind != CorpusKind::kEigenvalues && kind != CorpusKind::kSatake) {
    fail(ErrorCode::kDomain, "expected an eigenvalues or satake corpus file");
  }
  return std::get<EulerTable>(body);
}

CorpusFile corpus_of(const JacobiExpansion& f, long level) {
  return {CorpusKind::kJacobi, level, f};
}
CorpusFile corpus_of(const NearlyHolExpansion& f, long level) {
  return {CorpusKind::kNearlyHol, level, f};
}
CorpusFile corpus_of(const ThetaComponents& tc, long level) {
  return {CorpusKind::kThetaComponents, level, tc};
}
CorpusFile corpus_of(const EulerTable& t, CorpusKind kind) {
  if (kind != CorpusKind::kEigenvalues && kind != CorpusKind::kSatake) {
    fail(ErrorCode::kDomain, "tables are stored as eigenvalues or satake files");
  }
  return {kind, t.level, t};
}

std::string poly_record(const Poly& p) {
  std::string s;
  for (const auto& [mono, c] : p.terms()) {
    if (!s.empty()) s += ";";
    s += rational_str(c) + "@";
    for (size_t i = 0; i < mono.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(mono[i]);
    }
  }
  return s.empty() ? "0" : s;
}

Poly parse_poly_record(const std::string& s, int nvars) {
  Poly p(nvars);
  if (s == "0") return p;
  for (const auto& term : split(s, ';')) {
    size_t at = term.find('@');
    if (at == std::string::npos) fail(ErrorCode::kParse, "polynomial term without '@'");
    Rational c = parse_rational(term.substr(0, at));
    auto exps = split(term.substr(at + 1), ',');
    if (int(exps.size()) != nvars) {
      fail(ErrorCode::kParse, "polynomial term needs " + std::to_string(nvars) + " exponents");
    }
    Poly::Monomial m;
    for (const auto& e : exps) {
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != e.size() || v < 0) {
        fail(ErrorCode::kParse, "invalid exponent '" + e + "'");
      }
      m.push_back(v);
    }
    p.add_term(m, c);
  }
  return p;
}

CorpusFile parse_corpus(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  size_t ln = 0;
  auto next = [&](std::string& out) {
    while (std::getline(is, out)) {
      ++ln;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.empty() || out[0] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next(line)) fail(ErrorCode::kParse, "empty corpus file");
  {
    std::istringstream hs(line);
    std::string magic, version;
    hs >> magic >> version;
    if (magic != kMagic) parse_fail(ln, "not a corpus file (expected '" + std::string(kMagic) + "')");
    auto parts = split(version, '.');
    if (parts.size() != 2) parse_fail(ln, "malformed version '" + version + "'");
    long major = parse_long(parts[0], ln, "version");
    parse_long(parts[1], ln, "version");
    if (major != kCorpusMajor) {
      parse_fail(ln, "unsupported format major version " + std::to_string(major));
    }
  }

  Header h;
  bool body = false;
  while (next(line)) {
    if (line == "---") {
      body = true;
      break;
    }
    auto f = fields(line, ln);
    if (f.size() != 1) parse_fail(ln, "header lines hold one key=value");
    if (!h.values.emplace(f[0].first, std::make_pair(f[0].second, ln)).second) {
      parse_fail(ln, "duplicate header key '" + f[0].first + "'");
    }
  }
  if (!body) parse_fail(ln, "missing '---' after the header");
  const size_t header_end = ln;
  auto require = [&](const std::string& key) {
    if (!h.has(key)) parse_fail(header_end, "header is missing '" + key + "'");
  };

  auto key_long = [&](const std::string& key) {
    require(key);
    return parse_long(h.need(key), h.line(key), key);
  };
  auto key_q = [&](const std::string& key) {
    require(key);
    return parse_q(h.need(key), h.line(key), key);
  };
  auto key_bool = [&](const std::string& key) {
    long v = key_long(key);
    if (v != 0 && v != 1) parse_fail(h.line(key), key + " must be 0 or 1");
    return v == 1;
  };

  for (const char* key : {"kind", "n", "l", "k", "S", "lambda", "level"}) require(key);
  CorpusFile out;
  out.kind = parse_kind(h.need("kind"), h.line("kind"));
  const int n = int(key_long("n"));
  const int l = int(key_long("l"));
  if (n < 1 || l < 1) parse_fail(h.line("n"), "n and l must be positive");
  const Rational k = key_q("k");
  const QMatrix S = parse_m(h.need("S"), h.line("S"), "S", l, l);
  at_line(h.line("S"), [&] { validate_index_matrix(S); });
  const long lambda = key_long("lambda");
  out.level = key_long("level");
  if (lambda < 1 || out.level < 1) parse_fail(h.line("lambda"), "lambda and level must be positive");

  std::vector<std::pair<size_t, std::vector<std::pair<std::string, std::string>>>> records;
  while (next(line)) records.emplace_back(ln, fields(line, ln));

  auto expect = [](size_t ln, const std::vector<std::pair<std::string, std::string>>& f,
                   std::initializer_list<const char*> keys) {
    if (f.size() != keys.size()) parse_fail(ln, "wrong number of fields");
    size_t i = 0;
    for (const char* key : keys) {
      if (f[i].first != key) {
        parse_fail(ln, "expected field '" + std::string(key) + "', got '" + f[i].first + "'");
      }
      ++i;
    }
  };

  switch (out.kind) {
    case CorpusKind::kJacobi: {
      JacobiExpansion f;
      at_line(h.line("S"), [&] {
        f = JacobiExpansion(n, k, S, lambda, key_q("cap"), key_bool("cuspidal"));
      });
      for (const auto& [rl, fs] : records) {
        expect(rl, fs, {"t", "r", "c"});
        QMatrix t = parse_m(fs[0].second, rl, "t", n, n);
        QMatrix r = parse_m(fs[1].second, rl, "r", l, n);
        Rational c = parse_q(fs[2].second, rl, "c");
        if (c == 0) parse_fail(rl, "zero coefficients are not stored");
        if (f.get(t, r) != 0) parse_fail(rl, "duplicate index " + key_str(t, r));
        at_line(rl, [&] { f.set(t, r, c); });
      }
      out.body = std::move(f);
      break;
    }
    case CorpusKind::kNearlyHol: {
      require("form");
      const std::string& form = h.need("form");
      bool det = form == "det";
      if (!det && form != "general") parse_fail(h.line("form"), "form must be general or det");
      NearlyHolExpansion f;
      at_line(h.line("form"), [&] {
        f = det ? NearlyHolExpansion::det_form(n, k, S, lambda, key_q("cap"), int(key_long("m")))
                : NearlyHolExpansion(n, k, S, lambda, key_q("cap"), int(key_long("D")));
      });
      const char* pkey = det ? "q" : "p";
      const int nv = sym_count(n);
      for (const auto& [rl, fs] : records) {
        expect(rl, fs, {"t", "r", pkey});
        QMatrix t = parse_m(fs[0].second, rl, "t", n, n);
        QMatrix r = parse_m(fs[1].second, rl, "r", l, n);
        Poly p;
        at_line(rl, [&] { p = parse_poly_record(fs[2].second, nv); });
        if (p.is_zero()) parse_fail(rl, "zero coefficients are not stored");
        if (!f.get(t, r).is_zero()) parse_fail(rl, "duplicate index " + key_str(t, r));
        at_line(rl, [&] { f.set(t, r, p); });
      }
      out.body = std::move(f);
      break;
    }
    case CorpusKind::kThetaComponents: {
      if (n != 1) parse_fail(h.line("n"), "theta components are defined for n = 1");
      ThetaComponents tc;
      at_line(h.line("S"), [&] {
        tc = empty_theta_components(S, lambda, k - ratio(l, 2), key_q("cap"),
                                    key_bool("cuspidal"));
      });
      for (const auto& [rl, fs] : records) {
        if (fs.empty() || fs[0].first != "mu") parse_fail(rl, "expected field 'mu'");
        QMatrix mu = parse_m(fs[0].second, rl, "mu", l, 1);
        auto it = tc.components.find(mu);
        if (it == tc.components.end()) {
          parse_fail(rl, "mu=" + mu.str() + " is not a canonical class representative");
        }
        if (fs.size() == 1) continue;
        expect(rl, fs, {"mu", "e", "c"});
        Rational e = parse_q(fs[1].second, rl, "e");
        Rational c = parse_q(fs[2].second, rl, "c");
        if (c == 0) parse_fail(rl, "zero coefficients are not stored");
        if (!it->second.emplace(e, c).second) parse_fail(rl, "duplicate exponent in class");
      }
      out.body = std::move(tc);
      break;
    }
    case CorpusKind::kEigenvalues:
    case CorpusKind::kSatake: {
      EulerTable t;
      t.n = n;
      t.l = l;
      t.k = k;
      t.S = S;
      t.lambda = lambda;
      t.level = out.level;
      long modulus = key_long("chi_modulus");
      long order = key_long("chi_order");
      require("chi_values");
      const std::string& vals = h.need("chi_values");
      size_t vl = h.line("chi_values");
      if (vals.size() < 2 || vals.front() != '[' || vals.back() != ']') {
        parse_fail(vl, "chi_values must be a bracketed list");
      }
      std::vector<long> exps;
      for (const auto& v : split(vals.substr(1, vals.size() - 2), ',')) {
        exps.push_back(v == "*" ? -1 : parse_long(v, vl, "chi_values"));
      }
      at_line(vl, [&] { t.chi = DirichletCharacter::from_table(modulus, order, exps); });
      for (const auto& [rl, fs] : records) {
        if (out.kind == CorpusKind::kEigenvalues) {
          expect(rl, fs, {"a", "lambda"});
          long a = parse_long(fs[0].second, rl, "a");
          if (a < 1) parse_fail(rl, "a must be positive");
          if (!t.eigenvalues.emplace(a, parse_gauss(fs[1].second, rl, "lambda")).second) {
            parse_fail(rl, "duplicate a=" + std::to_string(a));
          }
          continue;
        }
        if (fs.size() != 2 || fs[0].first != "p") parse_fail(rl, "expected p=<prime> mu=... or poly=...");
        long p = parse_long(fs[0].second, rl, "p");
        auto fac = factorize(p);
        if (p < 2 || fac.size() != 1 || fac[0].second != 1) parse_fail(rl, "p must be prime");
        if (t.satake.count(p) || t.polys.count(p)) parse_fail(rl, "duplicate p=" + std::to_string(p));
        if (fs[1].first == "mu") {
          std::vector<GaussianRational> mu;
          for (const auto& g : split(fs[1].second, ';')) mu.push_back(parse_gauss(g, rl, "mu"));
          if (int(mu.size()) != n) parse_fail(rl, "need n Satake parameters");
          for (const auto& g : mu) {
            if (g.re == 0 && g.im == 0) parse_fail(rl, "Satake parameters must be nonzero");
          }
          t.satake[p] = std::move(mu);
        } else if (fs[1].first == "poly") {
          std::vector<Rational> c;
          for (const auto& q : split(fs[1].second, ',')) c.push_back(parse_q(q, rl, "poly"));
          if (int(c.size()) != 2 * n + 1 || c[0] != 1) {
            parse_fail(rl, "poly needs 2n+1 coefficients starting with 1");
          }
          for (int j = 0; j <= 2 * n; ++j) {
            if (c[j] != c[2 * n - j]) parse_fail(rl, "Euler polynomial must be palindromic");
          }
          t.polys[p] = std::move(c);
        } else {
          parse_fail(rl, "expected mu= or poly=");
        }
      }
      out.body = std::move(t);
      break;
    }
  }
  return out;
}

CorpusFile load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_corpus(ss.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

std::string write_corpus(const CorpusFile& file) {
  std::ostringstream os;
  os << kMagic << " " << kCorpusMajor << "." << kCorpusMinor << "\n";
  os << "kind=" << kind_name(file.kind) << "\n";
  auto common = [&](int n, int l, const Rational& k, const QMatrix& S, long lambda) {
    os << "n=" << n << "\nl=" << l << "\nk=" << rational_str(k) << "\nS=" << S.str()
       << "\nlambda=" << lambda << "\nlevel=" << file.level << "\n";
  };
  switch (file.kind) {
    case CorpusKind::kJacobi: {
      const auto& f = file.jacobi();
      common(f.n(), f.l(), f.k(), f.S(), f.lambda());
      os << "cap=" << rational_str(f.cap()) << "\ncuspidal=" << (f.cuspidal_flag() ? 1 : 0)
         << "\n---\n";
      for (const auto& [key, c] : f.coefficients()) {
        os << "t=" << key.t.str() << " r=" << key.r.str() << " c=" << rational_str(c) << "\n";
      }
      break;
    }
    case CorpusKind::kNearlyHol: {
      const auto& f = file.nearly_hol();
      common(f.n(), f.l(), f.k(), f.S(), f.lambda());
      os << "cap=" << rational_str(f.cap()) << "\n";
      if (f.is_det_form()) {
        os << "form=det\nm=" << f.m() << "\n---\n";
      } else {
        os << "form=general\nD=" << f.D() << "\n---\n";
      }
      const char* pkey = f.is_det_form() ? " q=" : " p=";
      for (const auto& [key, p] : f.coefficients()) {
        os << "t=" << key.t.str() << " r=" << key.r.str() << pkey << poly_record(p) << "\n";
      }
      break;
    }
    case CorpusKind::kThetaComponents: {
      const auto& tc = file.theta();
      const int l = tc.S.rows();
      common(1, l, tc.weight + ratio(l, 2), tc.S, tc.lambda);
      os << "cap=" << rational_str(tc.cap) << "\ncuspidal=" << (tc.cuspidal ? 1 : 0)
         << "\n---\n";
      for (const auto& [mu, comp] : tc.components) {
        if (comp.empty()) os << "mu=" << mu.str() << "\n";
        for (const auto& [e, c] : comp) {
          os << "mu=" << mu.str() << " e=" << rational_str(e) << " c=" << rational_str(c)
             << "\n";
        }
      }
      break;
    }
    case CorpusKind::kEigenvalues:
    case CorpusKind::kSatake: {
      const auto& t = file.table();
      common(t.n, t.l, t.k, t.S, t.lambda);
      os << "chi_modulus=" << t.chi.modulus() << "\nchi_order=" << t.chi.order()
         << "\nchi_values=" << chi_values_str(t.chi) << "\n---\n";
      if (file.kind == CorpusKind::kEigenvalues) {
        for (const auto& [a, v] : t.eigenvalues) os << "a=" << a << " lambda=" << gauss_str(v) << "\n";
        break;
      }
      // Primes in order; each carries either Satake parameters or a polynomial.
      std::map<long, std::string> lines;
      for (const auto& [p, mu] : t.satake) {
        std::string s = "p=" + std::to_string(p) + " mu=";
        for (size_t i = 0; i < mu.size(); ++i) s += (i ? ";" : "") + gauss_str(mu[i]);
        lines[p] = s;
      }
      for (const auto& [p, c] : t.polys) {
        std::string s = "p=" + std::to_string(p) + " poly=";
        for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + rational_str(c[i]);
        lines[p] = s;
      }
      for (const auto& [p, s] : lines) os << s << "\n";
      break;
    }
  }
  return os.str();
}

void save_corpus(const std::string& path, const CorpusFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kParse, "cannot write '" + path + "'");
  out << write_corpus(file);
}

}  // namespace sjf
