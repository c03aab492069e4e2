#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <thread>

#include "cwb/bounds.hpp"
#include "cwb/code.hpp"
#include "cwb/error.hpp"
#include "cwb/orbit.hpp"
#include "cwb/search.hpp"

namespace cwb {

namespace {

using ojson = nlohmann::ordered_json;

struct Common {
  uint64_t q = 0;
  uint64_t n = 0;
  std::string cosets;
  std::string format = "table";
  std::string out_path;
  unsigned threads = 0;
  uint64_t cap = 0;  // 0: default, CWB_CAP applies
};

std::vector<uint64_t> parse_list(const std::string& s, const char* what) {
  std::vector<uint64_t> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    unsigned long long x = 0;
    try {
      x = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok[0] == '-') {
      throw CLI::ValidationError(what, "not a non-negative integer: " + tok);
    }
    v.push_back(x);
  }
  if (v.empty()) throw CLI::ValidationError(what, "empty list");
  return v;
}

unsigned resolve_threads(unsigned t) {
  if (t) return t;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

uint64_t resolve_cap(uint64_t flag, uint64_t fallback) { return flag ? flag : cap_from_env(fallback); }

CodeSpec make_spec(const Common& c) {
  CodeSpec spec{PrimePower::from_order(c.q), c.n, parse_list(c.cosets, "--cosets")};
  validate_spec(spec);
  return spec;
}

std::string reps_str(const std::vector<uint64_t>& reps) {
  std::string s;
  for (size_t i = 0; i < reps.size(); ++i) s += (i ? "," : "") + std::to_string(reps[i]);
  return s;
}

std::string poly_str(const Poly& f) {
  std::string s;
  for (size_t i = f.size(); i-- > 0;) {
    if (!f[i]) continue;
    if (!s.empty()) s += '+';
    if (f[i] != 1 || i == 0) s += std::to_string(f[i]);
    if (i >= 1) s += 'x';
    if (i >= 2) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string word_hex(const Word& w) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (uint8_t c : w) {
    s += hex[c >> 4];
    s += hex[c & 15];
  }
  return s;
}

GroupChoice parse_group(const std::string& g, const CyclicCode& code, int l0) {
  const auto& pp = code.spec().pp;
  if (g == "auto") return auto_group(code);
  if (g == "mu_q") return {GroupKind::MuQ, 0, group_generators(GroupKind::MuQ, pp, code.n())};
  if (g == "mu_negq") return {GroupKind::MuNegQ, 0, group_generators(GroupKind::MuNegQ, pp, code.n())};
  if (g == "rho_sigma") return {GroupKind::RhoSigma, 0, group_generators(GroupKind::RhoSigma, pp, code.n())};
  if (g == "mu_pe2") {
    if (pp.e % 2 != 0) throw PreconditionError("mu_pe2 needs q = p^e with e even");
    return {GroupKind::MuPe2, l0, group_generators(GroupKind::MuPe2, pp, code.n(), l0)};
  }
  // Explicit generator list: rho, sigma, mu:<a> (a may be negative).
  GroupChoice c{GroupKind::RhoSigma, 0, {}};
  std::stringstream ss(g);
  std::string tok;
  bool rho = false, sigma = false;
  while (std::getline(ss, tok, ',')) {
    if (tok == "rho") {
      rho = true;
    } else if (tok == "sigma") {
      sigma = true;
    } else if (tok.rfind("mu:", 0) == 0) {
      size_t pos = 0;
      long long a = 0;
      try {
        a = std::stoll(tok.substr(3), &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != tok.size() - 3) throw CLI::ValidationError("--group", "bad multiplier " + tok);
      c.gens.push_back(ActionGenerator::multiplier(a));
    } else {
      throw CLI::ValidationError("--group", "unknown group or generator: " + tok);
    }
  }
  if (rho) c.gens.push_back(ActionGenerator::shift());
  if (sigma) c.gens.push_back(ActionGenerator::scalar());
  return c;
}

std::string gens_str(const std::vector<ActionGenerator>& gens) {
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + gens[i].name();
  return s;
}

// ---- subcommands ----

void cmd_cosets(const Common& c, std::ostream& out) {
  const auto cosets = cyclotomic_cosets(c.n, PrimePower::from_order(c.q).q);
  if (c.format == "json") {
    ojson j;
    j["q"] = c.q;
    j["n"] = c.n;
    ojson arr = ojson::array();
    for (const auto& cs : cosets) arr.push_back({{"rep", cs.rep}, {"size", cs.size()}, {"elements", cs.elements}});
    j["cosets"] = arr;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "rep,size,elements\n";
    for (const auto& cs : cosets) {
      out << cs.rep << ',' << cs.size() << ',';
      for (size_t i = 0; i < cs.elements.size(); ++i) out << (i ? " " : "") << cs.elements[i];
      out << '\n';
    }
  } else {
    out << cosets.size() << " cyclotomic cosets of " << c.q << " mod " << c.n << '\n';
    for (const auto& cs : cosets) {
      out << "C_" << cs.rep << " (size " << cs.size() << ") = {";
      for (size_t i = 0; i < cs.elements.size(); ++i) out << (i ? ", " : "") << cs.elements[i];
      out << "}\n";
    }
  }
}

void cmd_code_info(const Common& c, std::ostream& out) {
  const CyclicCode code(make_spec(c));
  const auto& ext = code.ctx().ext();
  const uint64_t ext_deg = ext.degree() / code.spec().pp.e;
  if (c.format == "json") {
    ojson j;
    j["q"] = code.q();
    j["n"] = code.n();
    j["cosets"] = code.spec().reps;
    j["dim"] = code.k();
    j["splitting_degree"] = ext_deg;
    j["generator"] = code.generator();
    j["check"] = code.check();
    ojson rows = ojson::array();
    for (const auto& r : code.generator_matrix()) rows.push_back(r);
    j["generator_matrix"] = rows;
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "q,n,cosets,dim,splitting_degree\n"
        << code.q() << ',' << code.n() << ',' << reps_str(code.spec().reps) << ',' << code.k() << ','
        << ext_deg << '\n';
  } else {
    out << "q = " << code.q() << ", n = " << code.n() << ", cosets = {" << reps_str(code.spec().reps)
        << "}\n";
    out << "dimension k = " << code.k() << "\n";
    out << "roots live in GF(q^" << ext_deg << ")\n";
    out << "g(x) = " << poly_str(code.generator()) << '\n';
    out << "h(x) = " << poly_str(code.check()) << '\n';
    out << "generator matrix (" << code.k() << " x " << code.n() << "):\n";
    for (const auto& r : code.generator_matrix()) {
      for (size_t i = 0; i < r.size(); ++i) out << (i ? " " : "  ") << int(r[i]);
      out << '\n';
    }
  }
}

void cmd_weights(const Common& c, std::ostream& out) {
  const CyclicCode code(make_spec(c));
  const auto dist =
      weight_distribution(code, resolve_threads(c.threads), resolve_cap(c.cap, kWeightEnumCap));
  if (c.format == "json") {
    out << dist.to_json() << '\n';
  } else if (c.format == "csv") {
    out << dist.to_csv();
  } else {
    out << "weight  count\n";
    for (size_t w = 0; w < dist.counts.size(); ++w) {
      if (dist.counts[w]) out << std::setw(6) << w << "  " << dist.counts[w] << '\n';
    }
    out << "enumerator: " << dist.to_polynomial() << '\n';
    out << "nonzero weights: " << num_nonzero_weights(dist) << '\n';
  }
}

void cmd_bound(const Common& c, std::ostream& out) {
  const CodeSpec spec = make_spec(c);
  const BoundReport rep = bound_report(spec.pp, spec.n, spec.reps);
  const auto best = rep.best();
  if (c.format == "json") {
    out << rep.to_json() << '\n';
  } else if (c.format == "csv") {
    out << "method,applicable,value,reason\n";
    for (const auto& name : method_names()) {
      const auto& v = rep.entries.at(name);
      out << name << ',' << (applicable(v) ? "true," + value_of(v).str() + ',' : "false,,")
          << (applicable(v) ? "" : std::get<NotApplicable>(v).reason) << '\n';
    }
  } else {
    for (const auto& name : method_names()) {
      const auto& v = rep.entries.at(name);
      out << std::left << std::setw(22) << name << std::right;
      if (applicable(v)) {
        out << value_of(v);
        if (name == "thm36_l0" && rep.thm36_l0) out << " (l0=" << *rep.thm36_l0 << ')';
        if (name == "cz_published") out << " (superseded, not used for best)";
      } else {
        out << "n/a: " << std::get<NotApplicable>(v).reason;
      }
      out << '\n';
    }
    if (best) out << "best: " << best->second << " (" << best->first << ")\n";
  }
  if (!best) throw PreconditionError("no applicable method");
}

void cmd_orbits(const Common& c, const std::string& group, int l0, const std::string& method,
                std::ostream& out) {
  const CyclicCode code(make_spec(c));
  const GroupChoice g = parse_group(group, code, l0);
  const unsigned threads = resolve_threads(c.threads);
  const uint64_t order = group_order(code, g.gens);
  if (method == "burnside") {
    const uint64_t count = burnside_count(code, g.gens, FixMode::Auto, threads);
    if (c.format == "json") {
      ojson j;
      j["generators"] = gens_str(g.gens);
      j["group_order"] = order;
      j["count"] = count;
      out << j.dump() << '\n';
    } else if (c.format == "csv") {
      out << "generators,group_order,count\n\"" << gens_str(g.gens) << "\"," << order << ',' << count
          << '\n';
    } else {
      out << "group <" << gens_str(g.gens) << ">, order " << order << '\n';
      out << "orbits on nonzero codewords: " << count << '\n';
    }
    return;
  }
  const OrbitPartition part = orbit_count(code, g.gens, resolve_cap(c.cap, kOrbitCap));
  if (c.format == "json") {
    out << part.to_json() << '\n';
  } else if (c.format == "csv") {
    out << "rep,size,weight\n";
    for (const auto& o : part.orbits) out << word_hex(o.rep) << ',' << o.size << ',' << o.weight << '\n';
  } else {
    out << "group <" << gens_str(g.gens) << ">, order " << order << '\n';
    out << "orbits on nonzero codewords: " << part.count() << '\n';
    for (const auto& o : part.orbits) {
      out << "  size " << std::setw(8) << o.size << "  weight " << std::setw(4) << o.weight << "  rep ";
      for (size_t i = 0; i < o.rep.size(); ++i) out << int(o.rep[i]);
      out << '\n';
    }
  }
}

void cmd_compare(const Common& c, std::ostream& out) {
  const CodeSpec spec = make_spec(c);
  SearchRecord rec = evaluate_record(spec.pp, spec.n, spec.reps);
  const uint64_t cap = resolve_cap(c.cap, kWeightEnumCap);
  verify_record(rec, cap, true, resolve_threads(c.threads));
  if (!rec.verified) throw CapExceeded("q^k exceeds enumeration cap " + std::to_string(cap));
  const auto& v = *rec.verified;
  if (c.format == "json") {
    out << rec.to_json() << '\n';
  } else if (c.format == "csv") {
    out << kSearchCsvHeader << '\n' << rec.to_csv_row() << '\n';
  } else {
    out << "code: q=" << rec.q << " n=" << rec.n << " cosets={" << reps_str(rec.reps)
        << "} k=" << rec.dim << '\n';
    out << "weight enumerator: " << v.dist.to_polynomial() << '\n';
    out << "l = " << v.l << '\n';
    for (const auto& name : method_names()) {
      const auto& b = rec.report.entries.at(name);
      if (!applicable(b)) continue;
      out << name << " = " << value_of(b) << (name == "cz_published" ? " (superseded)" : "") << '\n';
    }
    if (rec.best) {
      out << "best = " << rec.best->second << " (" << rec.best->first << ")\n";
      out << "orbits under " << v.group << " = " << v.orbit_count.value_or(0) << '\n';
      out << "l = " << v.l << " <= " << rec.best->second << '\n';
    }
    out << (v.tight ? "TIGHT" : "NOT TIGHT") << '\n';
  }
}

struct SearchOpts {
  std::string qs = "2";
  uint64_t n_min = 1, n_max = 63;
  int max_cosets = 1;
  std::optional<uint64_t> tau;
  bool verify = false, orbit_check = false, log_skips = false;
};

void cmd_search(const Common& c, const SearchOpts& s, std::ostream& out, std::ostream& err) {
  SearchConfig cfg;
  cfg.qs = parse_list(s.qs, "--q");
  for (uint64_t q : cfg.qs) PrimePower::from_order(q);
  cfg.n_min = s.n_min;
  cfg.n_max = s.n_max;
  cfg.max_cosets = s.max_cosets;
  cfg.tau = s.tau;
  cfg.verify = s.verify;
  cfg.orbit_check = s.orbit_check;
  cfg.cap = resolve_cap(c.cap, uint64_t{1} << 20);
  cfg.threads = resolve_threads(c.threads);
  const bool csv = c.format == "csv";
  const bool table = c.format == "table";
  if (csv) out << kSearchCsvHeader << '\n';
  run_search(
      cfg,
      [&](const SearchRecord& r) {
        if (csv) {
          out << r.to_csv_row() << '\n';
        } else if (table) {
          out << "q=" << r.q << " n=" << r.n << " cosets={" << reps_str(r.reps) << "} k=" << r.dim
              << " best=" << r.best->second << " (" << r.best->first << ")";
          if (r.verified) out << " l=" << r.verified->l << (r.verified->tight ? " tight" : "");
          out << '\n';
        } else {
          out << r.to_json() << '\n';
        }
        out.flush();
      },
      [&](const SkipEntry& e) {
        if (s.log_skips) err << e.to_json() << '\n';
      });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight-count bounds and oracles for simple-root cyclic codes", "cwb"};
  app.require_subcommand(1);
  Common c;
  SearchOpts s;
  std::string group = "auto", orbit_method = "closure";
  int l0 = 0;

  auto add_code_opts = [&](CLI::App* sub, bool with_cosets) {
    sub->add_option("--q", c.q, "field order (prime power)")->required();
    sub->add_option("--n", c.n, "code length")->required()->check(CLI::PositiveNumber);
    if (with_cosets) sub->add_option("--cosets", c.cosets, "comma-separated coset representatives")->required();
  };
  auto add_io_opts = [&](CLI::App* sub, std::string& format, const std::vector<std::string>& formats) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out_path, "write output to this file");
    sub->add_option("--threads", c.threads, "worker threads (default: all cores)");
    sub->add_option("--cap", c.cap, "enumeration cap (default: CWB_CAP or built-in)")->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> std_formats{"table", "json", "csv"};

  auto* cosets = app.add_subcommand("cosets", "list q-cyclotomic cosets mod n");
  add_code_opts(cosets, false);
  add_io_opts(cosets, c.format, std_formats);
  auto* info = app.add_subcommand("code-info", "dimension, generator and check polynomials");
  add_code_opts(info, true);
  add_io_opts(info, c.format, std_formats);
  auto* weights = app.add_subcommand("weights", "exhaustive weight distribution");
  add_code_opts(weights, true);
  add_io_opts(weights, c.format, std_formats);
  auto* bound = app.add_subcommand("bound", "every bound formula and the best one");
  add_code_opts(bound, true);
  add_io_opts(bound, c.format, std_formats);
  auto* orbits = app.add_subcommand("orbits", "orbits of a group on nonzero codewords");
  add_code_opts(orbits, true);
  add_io_opts(orbits, c.format, std_formats);
  orbits->add_option("--group", group,
                     "auto|mu_q|mu_negq|mu_pe2|rho_sigma, or generators like rho,sigma,mu:2");
  orbits->add_option("--l0", l0, "sign choice for mu_pe2")->check(CLI::Range(0, 1));
  orbits->add_option("--method", orbit_method, "closure (full partition) or burnside (count only)")
      ->check(CLI::IsMember({"closure", "burnside"}));
  auto* compare = app.add_subcommand("compare", "bounds against the brute-force weight count");
  add_code_opts(compare, true);
  add_io_opts(compare, c.format, std_formats);
  auto* search = app.add_subcommand("search", "sweep (q, n, cosets) for few-weight codes");
  search->add_option("--q", s.qs, "comma-separated field orders");
  search->add_option("--n-min", s.n_min, "smallest length")->check(CLI::PositiveNumber);
  search->add_option("--n-max", s.n_max, "largest length")->check(CLI::PositiveNumber);
  search->add_option("--max-cosets", s.max_cosets, "1 or 2")->check(CLI::Range(1, 2));
  search->add_option("--tau", s.tau, "keep codes whose best bound is at most tau");
  search->add_flag("--verify", s.verify, "enumerate weights when q^k <= cap");
  search->add_flag("--orbit-check", s.orbit_check, "also count orbits under the best method's group");
  search->add_flag("--log-skips", s.log_skips, "write skipped instances to stderr as JSON lines");
  std::string search_format = "json";
  add_io_opts(search, search_format, {"json", "jsonl", "csv", "table"});

  std::vector<const char*> argv{"cwb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (app.got_subcommand(search)) c.format = search_format == "jsonl" ? "json" : search_format;

  std::unique_ptr<std::ofstream> file;
  std::ostream* dst = &out;
  try {
    if (app.got_subcommand(search) && s.n_min > s.n_max) {
      throw CLI::ValidationError("--n-min", "must not exceed --n-max");
    }
    if (!c.out_path.empty()) {
      file = std::make_unique<std::ofstream>(c.out_path);
      if (!*file) {
        err << "error: cannot open " << c.out_path << '\n';
        return kExitPrecondition;
      }
      dst = file.get();
    }
    if (app.got_subcommand(cosets)) cmd_cosets(c, *dst);
    else if (app.got_subcommand(info)) cmd_code_info(c, *dst);
    else if (app.got_subcommand(weights)) cmd_weights(c, *dst);
    else if (app.got_subcommand(bound)) cmd_bound(c, *dst);
    else if (app.got_subcommand(orbits)) cmd_orbits(c, group, l0, orbit_method, *dst);
    else if (app.got_subcommand(compare)) cmd_compare(c, *dst);
    else if (app.got_subcommand(search)) cmd_search(c, s, *dst, err);
    dst->flush();
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BugTrap& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitBug;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "; `bound` gives the bound-only answer\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitBug;
  }
  return kExitOk;
}

}  // namespace cwb
