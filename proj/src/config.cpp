#include "qg/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "qg/errors.hpp"
#include "qg/snapshot_io.hpp"

namespace qg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  }
  return k.front() != '.' && k.back() != '.';
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Typed access that remembers which keys were consumed.
class Reader {
 public:
  explicit Reader(const KeyValueDocument& doc) : doc_(doc) {}

  void number(const std::string& key, double& out) {
    const auto* e = find(key);
    if (!e) return;
    if (e->quoted) return bad(*e, key, "expected a number");
    char* end = nullptr;
    const double v = std::strtod(e->value.c_str(), &end);
    if (end == e->value.c_str() || *end != '\0' || std::isnan(v)) return bad(*e, key, "expected a number");
    out = v;
  }

  void integer(const std::string& key, int& out) {
    double v = out;
    number(key, v);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      violations.push_back("line " + std::to_string(doc_.entries.at(key).line) + ": " + key +
                           " must be an integer");
      return;
    }
    out = static_cast<int>(v);
  }

  void unsigned_integer(const std::string& key, std::uint64_t& out) {
    const auto* e = find(key);
    if (!e) return;
    char* end = nullptr;
    const auto v = std::strtoull(e->value.c_str(), &end, 10);
    if (e->quoted || e->value.empty() || e->value[0] == '-' || *end != '\0') {
      return bad(*e, key, "expected a non-negative integer");
    }
    out = v;
  }

  void string(const std::string& key, std::string& out) {
    const auto* e = find(key);
    if (!e) return;
    out = e->value;
  }

  void finish() {
    for (const auto& [key, e] : doc_.entries) {
      if (!used_.count(key)) violations.push_back("line " + std::to_string(e.line) + ": unknown key '" + key + "'");
    }
  }

  std::vector<std::string> violations;

 private:
  const KeyValueDocument::Entry* find(const std::string& key) {
    auto it = doc_.entries.find(key);
    if (it == doc_.entries.end()) return nullptr;
    used_.insert(key);
    return &it->second;
  }
  void bad(const KeyValueDocument::Entry& e, const std::string& key, const char* what) {
    violations.push_back("line " + std::to_string(e.line) + ": " + key + ": " + what + " (got '" +
                         e.value + "')");
  }

  const KeyValueDocument& doc_;
  std::set<std::string> used_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

KeyValueDocument KeyValueDocument::parse(const std::string& text) {
  KeyValueDocument doc;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    // Strip a comment that is not inside quotes.
    bool in_quotes = false;
    std::string body;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char c = raw[i];
      if (c == '"' && (i == 0 || raw[i - 1] != '\\')) in_quotes = !in_quotes;
      if (c == '#' && !in_quotes) break;
      body += c;
    }
    body = trim(body);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError(line, "unterminated section header");
      section = trim(body.substr(1, body.size() - 2));
      if (!valid_key(section)) throw ParseError(line, "bad section name '" + section + "'");
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (!valid_key(key)) throw ParseError(line, "bad key '" + key + "'");
    if (!section.empty()) key = section + "." + key;
    if (value.empty()) throw ParseError(line, "missing value for '" + key + "'");
    Entry e;
    e.line = line;
    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') throw ParseError(line, "unterminated string");
      std::string s;
      for (std::size_t i = 1; i + 1 < value.size(); ++i) {
        if (value[i] == '\\' && i + 2 < value.size()) ++i;
        s += value[i];
      }
      e.value = s;
      e.quoted = true;
    } else {
      if (value.find_first_of(" \t\"") != std::string::npos) {
        throw ParseError(line, "unquoted value with spaces or quotes");
      }
      e.value = value;
    }
    if (!doc.entries.emplace(key, e).second) throw ParseError(line, "duplicate key '" + key + "'");
  }
  return doc;
}

KeyValueDocument KeyValueDocument::load(const std::string& path) { return parse(read_file(path)); }

std::vector<std::string> InitSpec::violations() const {
  std::vector<std::string> out;
  if (kind == "random") {
    if (!(random.k_min >= 0.0 && random.k_max >= random.k_min)) {
      out.push_back("init: need 0 <= k_min <= k_max");
    }
    if (!(random.amplitude >= 0.0)) out.push_back("init: amplitude must be >= 0");
  } else if (kind == "mode") {
    if (k1 == 0 && k2 == 0) out.push_back("init: mode (0, 0) is not mean-zero");
  } else if (kind == "snapshot") {
    if (path.empty()) out.push_back("init: snapshot kind needs init.path");
  } else {
    out.push_back("init: kind must be random, mode or snapshot (got '" + kind + "')");
  }
  return out;
}

std::vector<std::string> RunConfig::violations() const {
  auto out = solver.violations();
  for (auto& v : gevrey().violations()) out.push_back(v);
  for (const auto& nn : norms) {
    auto spec = nn.spec;
    spec.gamma = solver.params.gamma;
    for (auto& v : spec.violations()) out.push_back("norm." + nn.name + ": " + v);
  }
  for (auto& v : init.violations()) out.push_back(v);
  if (output_dir.empty()) out.push_back("output_dir must not be empty");
  return out;
}

RunConfig parse_config(const std::string& text) {
  const auto doc = KeyValueDocument::parse(text);
  Reader rd(doc);
  RunConfig cfg;
  auto& s = cfg.solver;
  rd.number("gamma", s.params.gamma);
  rd.number("kappa", s.params.kappa);
  rd.number("alpha", s.params.alpha);
  rd.integer("n", s.n);
  rd.number("box_length", s.box_length);
  rd.number("dt", s.dt);
  rd.number("T", s.T);
  rd.integer("snapshot_every", s.snapshot_every);
  rd.string("scheme", s.scheme);
  rd.integer("picard.n_time_nodes", s.picard.n_time_nodes);
  rd.integer("picard.max_iters", s.picard.max_iters);
  rd.number("picard.tol", s.picard.tol);
  rd.string("picard.quadrature", s.picard.quadrature);
  rd.number("cfl", s.cfl);
  rd.number("blowup_factor", s.blowup_factor);
  rd.number("exp_cap", cfg.exp_cap);
  rd.string("output_dir", cfg.output_dir);
  rd.unsigned_integer("seed", cfg.seed);
  rd.string("init.kind", cfg.init.kind);
  rd.number("init.k_min", cfg.init.random.k_min);
  rd.number("init.k_max", cfg.init.random.k_max);
  rd.number("init.decay", cfg.init.random.decay);
  rd.number("init.amplitude", cfg.init.random.amplitude);
  rd.integer("init.k1", cfg.init.k1);
  rd.integer("init.k2", cfg.init.k2);
  rd.string("init.path", cfg.init.path);

  std::set<std::string> names;
  for (const auto& [key, e] : doc.entries) {
    if (key.rfind("norm.", 0) != 0) continue;
    const auto rest = key.substr(5);
    const auto dot = rest.find('.');
    if (dot != std::string::npos) names.insert(rest.substr(0, dot));
  }
  for (const auto& name : names) {
    NamedNormSpec nn{name, {}};
    const std::string base = "norm." + name + ".";
    rd.number(base + "p", nn.spec.p);
    rd.number(base + "q", nn.spec.q);
    rd.number(base + "r", nn.spec.r);
    rd.number(base + "alpha", nn.spec.alpha_k);
    nn.spec.gamma = s.params.gamma;
    cfg.norms.push_back(nn);
  }
  rd.finish();
  auto all = rd.violations;
  for (auto& v : cfg.violations()) all.push_back(v);
  if (!all.empty()) throw ConfigError(std::move(all));
  return cfg;
}

RunConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

std::string dump_config(const RunConfig& cfg) {
  std::map<std::string, std::string> kv;
  const auto& s = cfg.solver;
  kv["gamma"] = format_double(s.params.gamma);
  kv["kappa"] = format_double(s.params.kappa);
  kv["alpha"] = format_double(s.params.alpha);
  kv["n"] = std::to_string(s.n);
  kv["box_length"] = format_double(s.box_length);
  kv["dt"] = format_double(s.dt);
  kv["T"] = format_double(s.T);
  kv["snapshot_every"] = std::to_string(s.snapshot_every);
  kv["scheme"] = quote(s.scheme);
  kv["picard.n_time_nodes"] = std::to_string(s.picard.n_time_nodes);
  kv["picard.max_iters"] = std::to_string(s.picard.max_iters);
  kv["picard.tol"] = format_double(s.picard.tol);
  kv["picard.quadrature"] = quote(s.picard.quadrature);
  kv["cfl"] = format_double(s.cfl);
  kv["blowup_factor"] = format_double(s.blowup_factor);
  kv["exp_cap"] = format_double(cfg.exp_cap);
  kv["output_dir"] = quote(cfg.output_dir);
  kv["seed"] = std::to_string(cfg.seed);
  kv["init.kind"] = quote(cfg.init.kind);
  kv["init.k_min"] = format_double(cfg.init.random.k_min);
  kv["init.k_max"] = format_double(cfg.init.random.k_max);
  kv["init.decay"] = format_double(cfg.init.random.decay);
  kv["init.amplitude"] = format_double(cfg.init.random.amplitude);
  kv["init.k1"] = std::to_string(cfg.init.k1);
  kv["init.k2"] = std::to_string(cfg.init.k2);
  kv["init.path"] = quote(cfg.init.path);
  for (const auto& nn : cfg.norms) {
    const std::string base = "norm." + nn.name + ".";
    kv[base + "p"] = format_double(nn.spec.p);
    kv[base + "q"] = format_double(nn.spec.q);
    kv[base + "r"] = format_double(nn.spec.r);
    kv[base + "alpha"] = format_double(nn.spec.alpha_k);
  }
  std::string out;
  for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
  return out;
}

AnalyzeSpec parse_analyze_spec(const std::string& text) {
  const auto doc = KeyValueDocument::parse(text);
  Reader rd(doc);
  AnalyzeSpec a;
  rd.number("alpha", a.alpha);
  rd.number("exp_cap", a.exp_cap);
  rd.number("p", a.p);
  rd.number("q", a.q);
  rd.number("r", a.r);
  rd.number("alpha_k", a.alpha_k);
  rd.integer("decay.max_order", a.decay_max_order);
  rd.number("decay.t_lo", a.decay_t_lo);
  rd.number("decay.t_hi", a.decay_t_hi);
  rd.finish();
  auto all = rd.violations;
  if (a.decay_max_order < 1) all.push_back("decay.max_order must be >= 1");
  if (!all.empty()) throw ConfigError(std::move(all));
  return a;
}

AnalyzeSpec load_analyze_spec(const std::string& path) { return parse_analyze_spec(read_file(path)); }

SpectralField make_initial(const RunConfig& cfg) {
  const Grid2D grid = cfg.solver.grid();
  if (cfg.init.kind == "random") return random_field(grid, cfg.seed, cfg.init.random);
  if (cfg.init.kind == "mode") {
    std::vector<Complex> c(grid.size());
    const int k1 = cfg.init.k1;
    const int k2 = cfg.init.k2;
    if (!grid.retained(k1, k2)) throw ConfigError({"init: mode outside the retained band"});
    const double a = 0.5 * cfg.init.random.amplitude;
    c[grid.flat(grid.index_of(k1), grid.index_of(k2))] += a;
    c[grid.flat(grid.index_of(-k1), grid.index_of(-k2))] += a;
    return SpectralField::from_coefficients(grid, std::move(c));
  }
  auto snap = load_snapshot(cfg.init.path);
  require_same_grid(grid, snap.field.grid(), "init snapshot");
  return snap.field;
}

}  // namespace qg
