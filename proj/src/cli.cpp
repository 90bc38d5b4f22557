#include "charp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "charp/errors.hpp"
#include "charp/factor.hpp"
#include "charp/frobenius.hpp"
#include "charp/ideal.hpp"
#include "charp/parser.hpp"
#include "charp/sweep.hpp"

namespace charp::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return v;
}

std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (const auto& item : split_commas(text)) {
    const std::uint64_t p = parse_u64(item, "prime");
    if (p > 0x7fffffffULL || !is_prime(p)) throw UsageError("not a prime below 2^31: " + item);
    out.push_back(static_cast<std::uint32_t>(p));
  }
  if (out.empty()) throw UsageError("--p needs at least one prime");
  return out;
}

std::uint32_t parse_prime(const std::string& text) {
  const auto primes = parse_primes(text);
  if (primes.size() != 1) throw UsageError("this command takes a single prime");
  return primes.front();
}

std::vector<unsigned> parse_exponents(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& item : split_commas(text)) {
    const std::uint64_t e = parse_u64(item, "exponent");
    if (e == 0 || e > 31) throw UsageError("exponent e must lie in 1..31, got " + item);
    out.push_back(static_cast<unsigned>(e));
  }
  if (out.empty()) throw UsageError("--e needs at least one exponent");
  return out;
}

unsigned single_exponent(const std::optional<std::string>& text) {
  if (!text) return 1;
  const auto es = parse_exponents(*text);
  if (es.size() != 1) throw UsageError("this command takes a single exponent");
  return es.front();
}

// Every positional may hold several comma-separated generators.
std::vector<std::string> flatten(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    for (auto& item : split_commas(a)) out.push_back(std::move(item));
  }
  return out;
}

struct Common {
  std::string p = "2";
  std::optional<std::string> e;
  std::string vars = "t,x,y";
  std::string order = "grevlex";
  bool json = false;
  std::optional<std::string> seed;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "characteristic (prime)");
  cmd->add_option("--e", c.e, "Frobenius exponent, q = p^e (a comma list for verify-paper and sweep)");
  cmd->add_option("--vars", c.vars, "comma-separated variable names");
  cmd->add_option("--order", c.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex", "block"}));
  cmd->add_flag("--json", c.json, "emit JSON");
  cmd->add_option("--seed", c.seed, "factorization seed (u64); falls back to CHARP_SEED");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return parse_u64(*c.seed, "seed");
  if (const char* env = std::getenv("CHARP_SEED"); env && *env) return parse_u64(env, "CHARP_SEED");
  return kDefaultFactorSeed;
}

RingPtr make_ring(const Common& c) {
  const std::uint32_t p = parse_prime(c.p);
  std::vector<std::string> vars = split_commas(c.vars);
  if (vars.empty()) throw UsageError("--vars needs at least one variable");
  MonomialOrder grevlex = PolyRing::default_order(vars);
  if (c.order == "grevlex") return PolyRing::make(p, vars, grevlex);
  if (c.order == "lex") return PolyRing::make(p, vars, MonomialOrder::lex(grevlex.precedence()));
  std::vector<std::size_t> front;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    (vars[i] == PolyRing::kParameter ? rest : front).push_back(i);
  }
  if (rest.empty() || front.empty()) throw UsageError("--order block needs t and at least one other variable");
  return PolyRing::make(p, vars, MonomialOrder::block(front, rest));
}

Ideal ideal_from(const std::vector<std::string>& texts, const RingPtr& ring) {
  return Ideal(ring, parse_all(flatten(texts), ring));
}

std::vector<std::string> basis_strings(const Ideal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.groebner_basis()) out.push_back(g.to_string());
  return out;
}

void emit_basis(std::ostream& out, const Common& c, const Ideal& ideal) {
  const auto basis = basis_strings(ideal);
  if (c.json) {
    json j = {{"p", ideal.ring()->field().characteristic()},
              {"vars", ideal.ring()->variables()},
              {"order", c.order},
              {"basis", basis}};
    out << j.dump() << '\n';
  } else {
    for (const auto& b : basis) out << b << '\n';
  }
}

std::string factor_product(const FactorList& fl, const PrimeField& field) {
  std::string s;
  if (!fl.unit.is_zero() && fl.unit.value != 1) s += field.to_string(fl.unit);
  for (const auto& [f, m] : fl.factors) {
    s += "(" + f.to_string() + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

// Left-justifies to a width in code points, so the check marks line up.
std::string pad(const std::string& s, std::size_t width) {
  const auto glyphs = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
  return s + std::string(width > glyphs ? width - glyphs : 1, ' ');
}

struct GridRow {
  std::uint32_t p;
  unsigned e;
  std::uint64_t q;
  bool lemma11;
  std::optional<Theorem12Report> theorem12;
  bool ge_check;
  bool ass_g_tame;
  bool tau_divides;
  std::vector<std::string> positive;
  std::int64_t duration_ms;

  bool passed() const {
    return lemma11 && (!theorem12 || theorem12->all()) && ge_check && ass_g_tame && tau_divides;
  }
};

GridRow verify_cell(std::uint32_t p, unsigned e, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Hypersurface hs = Hypersurface::four_lines(p);
  GridRow row{p, e, prime_power(p, e), lemma11_check(p, e), std::nullopt, ge_check(hs, e), true, false, {}, 0};
  if (row.q >= 3) row.theorem12 = theorem12_check(p, e);
  const ElementaryDivisors divisors = torsion_elementary_divisors(hs, e);
  row.tau_divides = divides(tau(p, e), divisors.largest(hs.ring()->field()));
  const Ideal tight = tight_quotient_ideal(hs, e);
  for (const auto& probe : maximal_ass_primes(hs, e, seed)) {
    if (!probe.associated) continue;
    row.positive.push_back(probe.prime.to_string());
    if (is_associated_maximal(tight, probe.prime).associated) row.ass_g_tame = false;
  }
  row.duration_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

json row_json(const GridRow& r) {
  json t12 = nullptr;
  if (r.theorem12) {
    t12 = {{"member_tau_g", r.theorem12->member_tau_g},
           {"not_member_g", r.theorem12->not_member_g},
           {"contraction_is_tau", r.theorem12->contraction_equals_tau}};
  }
  return {{"p", r.p},
          {"e", r.e},
          {"q", r.q},
          {"lemma11", r.lemma11},
          {"theorem12", t12},
          {"degenerate", !r.theorem12.has_value()},
          {"ge_check", r.ge_check},
          {"ass_g_tame", r.ass_g_tame},
          {"tau_divides_torsion", r.tau_divides},
          {"positive_probes", r.positive},
          {"duration_ms", r.duration_ms}};
}

// CLI11 wants the arguments reversed when given a vector.
void parse_into(CLI::App& app, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  app.parse(args);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> head = args;
  std::vector<std::string> tail;
  bool has_tail = false;
  if (auto it = std::find(head.begin(), head.end(), "--"); it != head.end()) {
    tail.assign(it + 1, head.end());
    head.erase(it, head.end());
    has_tail = true;
  }

  CLI::App app{"Exact ideal calculus over F_p[t][x, y] and Frobenius-power experiments", "charp"};
  app.require_subcommand(1);
  Common c;
  std::vector<std::string> gens;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the given generators");
  auto* mem = app.add_subcommand("member", "ideal membership: member F -- GENS");
  auto* col = app.add_subcommand("colon", "ideal quotient (I : J): colon I -- J");
  auto* inter = app.add_subcommand("intersect", "intersection: intersect I -- J");
  auto* sat = app.add_subcommand("saturate", "saturation (I : J^inf): saturate I -- J");
  auto* elim = app.add_subcommand("eliminate", "elimination ideal");
  auto* bp = app.add_subcommand("bracket-power", "Frobenius power I^[q]");
  auto* tau_cmd = app.add_subcommand("tau", "the polynomial 1 + t + ... + t^(q-2)");
  auto* fa = app.add_subcommand("frobenius-ass", "torsion and maximal associated primes of R/(x^q, y^q, F)");
  auto* vp = app.add_subcommand("verify-paper", "run the four-line checks over a (p, e) grid");
  auto* sw = app.add_subcommand("sweep", "append (p, e, F) records to a JSONL file, skipping finished cells");

  for (auto* cmd : {gb, mem, col, inter, sat, elim, bp, tau_cmd, fa, vp, sw}) add_common(cmd, c);
  for (auto* cmd : {gb, mem, col, inter, sat, elim, bp}) cmd->add_option("gens", gens, "polynomials");

  std::string drop;
  elim->add_option("--drop", drop, "comma-separated variables to eliminate")->required();
  std::optional<std::uint64_t> q_opt;
  bp->add_option("--q", q_opt, "power of p (overrides --e)");
  bool factor = false;
  tau_cmd->add_flag("--factor", factor, "also print the factorization over F_p");
  std::string f_expr(kFourLinesExpr);
  fa->add_option("--F", f_expr, "binary form in x, y over F_p[t]");
  std::optional<unsigned> emax;
  for (auto* cmd : {vp, sw}) cmd->add_option("--emax", emax, "run e = 1..emax")->check(CLI::Range(1u, 31u));
  std::string sweep_out;
  unsigned jobs = 1;
  std::vector<std::string> sweep_fs;
  sw->add_option("--out", sweep_out, "JSONL output file")->required();
  sw->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  sw->add_option("--F", sweep_fs, "polynomial (repeatable)");

  try {
    parse_into(app, head);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::uint64_t seed = resolve_seed(c);
    const bool wants_tail = mem->parsed() || col->parsed() || inter->parsed() || sat->parsed();
    if (has_tail != wants_tail) {
      throw UsageError(wants_tail ? "expected two generator lists separated by --" : "unexpected -- separator");
    }

    auto exponent_list = [&] {
      if (c.e && emax) throw UsageError("give either --e or --emax, not both");
      if (c.e) return parse_exponents(*c.e);
      if (!emax) throw UsageError("give --e or --emax");
      std::vector<unsigned> es;
      for (unsigned e = 1; e <= *emax; ++e) es.push_back(e);
      return es;
    };

    if (gb->parsed()) {
      emit_basis(out, c, ideal_from(gens, make_ring(c)));
    } else if (mem->parsed()) {
      const RingPtr ring = make_ring(c);
      const auto fs = flatten(gens);
      if (fs.size() != 1) throw UsageError("member takes exactly one polynomial before --");
      const MultiPoly f = parse(fs.front(), ring);
      const bool in = member(f, ideal_from(tail, ring));
      if (c.json) {
        out << json{{"f", f.to_string()}, {"member", in}}.dump() << '\n';
      } else {
        out << (in ? "true" : "false") << '\n';
      }
    } else if (col->parsed() || inter->parsed() || sat->parsed()) {
      const RingPtr ring = make_ring(c);
      const Ideal a = ideal_from(gens, ring);
      const Ideal b = ideal_from(tail, ring);
      if (col->parsed()) emit_basis(out, c, colon_ideal(a, b));
      if (inter->parsed()) emit_basis(out, c, intersect(a, b));
      if (sat->parsed()) emit_basis(out, c, saturate(a, b));
    } else if (elim->parsed()) {
      const RingPtr ring = make_ring(c);
      emit_basis(out, c, eliminate(ideal_from(gens, ring), split_commas(drop)));
    } else if (bp->parsed()) {
      const RingPtr ring = make_ring(c);
      const std::uint64_t q = q_opt ? *q_opt : prime_power(ring->field().characteristic(), single_exponent(c.e));
      emit_basis(out, c, bracket_power(ideal_from(gens, ring), q));
    } else if (tau_cmd->parsed()) {
      const std::uint32_t p = parse_prime(c.p);
      const unsigned e = single_exponent(c.e);
      const UniPoly tq = tau(p, e);
      const PrimeField field(p);
      std::optional<FactorList> fl;
      if (factor) fl = uni_factor(tq, seed);
      if (c.json) {
        json j = {{"p", p}, {"e", e}, {"q", prime_power(p, e)}, {"tau", tq.to_string()}};
        if (fl) {
          json fs = json::array();
          for (const auto& [f, m] : fl->factors) fs.push_back({{"factor", f.to_string()}, {"multiplicity", m}});
          j["factors"] = fs;
        }
        out << j.dump() << '\n';
      } else {
        out << tq.to_string();
        if (fl) out << " = " << factor_product(*fl, field);
        out << '\n';
      }
    } else if (fa->parsed()) {
      const std::uint32_t p = parse_prime(c.p);
      const unsigned e = single_exponent(c.e);
      const RingPtr ring = standard_ring(p);
      const MultiPoly f = parse(f_expr, ring);
      const auto split = split_binary_form(f);
      const Hypersurface hs = split ? Hypersurface(f, *split) : Hypersurface(f);
      const bool flagship = f == Hypersurface::four_lines(p).polynomial();
      const ElementaryDivisors divisors = torsion_elementary_divisors(hs, e);
      const bool tau_ok = divides(tau(p, e), divisors.largest(ring->field()));
      const auto probes = maximal_ass_primes(hs, e, seed);
      std::vector<std::string> nonunits;
      for (const auto& d : divisors.non_units()) nonunits.push_back(d.to_string());
      if (c.json) {
        json ps = json::array();
        for (const auto& pr : probes) {
          ps.push_back({{"prime", pr.prime.to_string()},
                        {"associated", pr.associated},
                        {"witness", pr.witness ? json(pr.witness->to_string()) : json(nullptr)}});
        }
        out << json{{"p", p},
                    {"e", e},
                    {"q", prime_power(p, e)},
                    {"f_expr", f_expr},
                    {"divisors", nonunits},
                    {"free_rank", divisors.free_rank},
                    {"tau_divides_torsion", tau_ok},
                    {"probes", ps}}
                   .dump()
            << '\n';
      } else {
        out << "F = " << f.to_string() << "  (p = " << p << ", q = " << prime_power(p, e) << ")\n";
        out << "free rank: " << divisors.free_rank << '\n';
        out << "torsion divisors:";
        if (nonunits.empty()) out << " none";
        for (const auto& d : nonunits) out << "\n  " << d;
        out << "\ntau(q) divides largest divisor: " << mark(tau_ok) << '\n';
        for (const auto& pr : probes) {
          out << "(" << pr.prime.to_string() << ", x, y): " << (pr.associated ? "associated" : "not associated");
          if (pr.witness) out << ", witness " << pr.witness->to_string();
          out << '\n';
        }
      }
      if (flagship && !tau_ok) return kExitCheckFailed;
    } else if (vp->parsed()) {
      const auto primes = parse_primes(c.p);
      const auto exps = exponent_list();
      std::vector<GridRow> rows;
      for (auto p : primes) {
        for (auto e : exps) rows.push_back(verify_cell(p, e, seed));
      }
      const bool all = std::all_of(rows.begin(), rows.end(), [](const GridRow& r) { return r.passed(); });
      if (c.json) {
        json rs = json::array();
        for (const auto& r : rows) rs.push_back(row_json(r));
        out << json{{"rows", rs}, {"all_passed", all}}.dump() << '\n';
      } else {
        out << pad("p", 4) << pad("e", 3) << pad("q", 6) << pad("lemma11", 9) << pad("thm12", 7)
            << pad("remark13", 10) << pad("tau|d", 7) << "positive probes\n";
        for (const auto& r : rows) {
          std::string t12 = "n/a";
          if (r.theorem12) {
            t12 = std::string(mark(r.theorem12->member_tau_g)) + mark(r.theorem12->not_member_g) +
                  mark(r.theorem12->contraction_equals_tau);
          }
          std::string probes = r.positive.empty() ? "none" : "";
          for (std::size_t i = 0; i < r.positive.size(); ++i) probes += (i ? "; " : "") + r.positive[i];
          out << pad(std::to_string(r.p), 4) << pad(std::to_string(r.e), 3) << pad(std::to_string(r.q), 6)
              << pad(mark(r.lemma11), 9) << pad(t12, 7) << pad(mark(r.ge_check && r.ass_g_tame), 10)
              << pad(mark(r.tau_divides), 7) << probes << '\n';
        }
        out << (all ? "all checks passed" : "CHECK FAILED") << '\n';
      }
      return all ? kExitOk : kExitCheckFailed;
    } else if (sw->parsed()) {
      SweepConfig config;
      config.primes = parse_primes(c.p);
      config.exponents = exponent_list();
      config.f_exprs = sweep_fs.empty() ? std::vector<std::string>{std::string(kFourLinesExpr)} : sweep_fs;
      config.out = sweep_out;
      config.jobs = jobs;
      config.seed = seed;
      // Reject bad expressions before any work starts.
      for (auto p : config.primes) {
        for (const auto& f : config.f_exprs) {
          if (parse(f, standard_ring(p)).is_zero()) throw UsageError("F must be nonzero: " + f);
        }
      }
      const SweepSummary s = run_sweep(config);
      if (c.json) {
        out << json{{"computed", s.computed}, {"skipped", s.skipped}, {"regressions", s.regressions}}.dump() << '\n';
      } else {
        out << "computed " << s.computed << ", skipped " << s.skipped << ", regressions " << s.regressions << '\n';
      }
      return s.regressions == 0 ? kExitOk : kExitCheckFailed;
    }
    return kExitOk;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << '\n';
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace charp::cli
