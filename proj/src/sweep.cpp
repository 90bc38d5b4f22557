#include "charp/sweep.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "charp/frobenius.hpp"
#include "charp/parser.hpp"

namespace charp {
namespace {

using json = nlohmann::ordered_json;

json optional_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::optional<bool> read_optional_bool(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<bool>();
}

bool is_four_lines(std::uint32_t p, const std::string& f_expr) {
  try {
    return parse(f_expr, standard_ring(p)) == Hypersurface::four_lines(p).polynomial();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

bool SweepRecord::regression() const {
  if (!lemma11) return true;
  for (const auto& v : {thm12_member_tau_g, thm12_not_member_g, thm12_contraction_is_tau}) {
    if (v && !*v) return true;
  }
  return ge_check && !*ge_check && is_four_lines(p, f_expr);
}

std::string to_jsonl(const SweepRecord& r) {
  json probes = json::array();
  for (const auto& pr : r.probes) {
    probes.push_back({{"prime", pr.prime},
                      {"associated", pr.associated},
                      {"witness", pr.witness ? json(*pr.witness) : json(nullptr)}});
  }
  json j = {{"p", r.p},
            {"e", r.e},
            {"q", r.q},
            {"f_expr", r.f_expr},
            {"lemma11", r.lemma11},
            {"thm12_member_tau_g", optional_bool(r.thm12_member_tau_g)},
            {"thm12_not_member_g", optional_bool(r.thm12_not_member_g)},
            {"thm12_contraction_is_tau", optional_bool(r.thm12_contraction_is_tau)},
            {"ge_check", optional_bool(r.ge_check)},
            {"divisors", r.divisors},
            {"probes", probes},
            {"duration_ms", r.duration_ms}};
  return j.dump();
}

SweepRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
    SweepRecord r;
    r.p = j.at("p").get<std::uint32_t>();
    r.e = j.at("e").get<unsigned>();
    r.q = j.at("q").get<std::uint64_t>();
    r.f_expr = j.at("f_expr").get<std::string>();
    r.lemma11 = j.at("lemma11").get<bool>();
    r.thm12_member_tau_g = read_optional_bool(j, "thm12_member_tau_g");
    r.thm12_not_member_g = read_optional_bool(j, "thm12_not_member_g");
    r.thm12_contraction_is_tau = read_optional_bool(j, "thm12_contraction_is_tau");
    r.ge_check = read_optional_bool(j, "ge_check");
    r.divisors = j.at("divisors").get<std::vector<std::string>>();
    for (const auto& pr : j.at("probes")) {
      ProbeRecord probe{pr.at("prime").get<std::string>(), pr.at("associated").get<bool>(), std::nullopt};
      if (!pr.at("witness").is_null()) probe.witness = pr.at("witness").get<std::string>();
      r.probes.push_back(std::move(probe));
    }
    r.duration_ms = j.at("duration_ms").get<std::int64_t>();
    return r;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed sweep record: ") + ex.what());
  }
}

SweepRecord evaluate_cell(std::uint32_t p, unsigned e, const std::string& f_expr, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const RingPtr ring = standard_ring(p);
  const MultiPoly f = parse(f_expr, ring);
  const auto split = split_binary_form(f);
  const Hypersurface hs = split ? Hypersurface(f, *split) : Hypersurface(f);

  SweepRecord r;
  r.p = p;
  r.e = e;
  r.q = prime_power(p, e);
  r.f_expr = f_expr;
  r.lemma11 = lemma11_check(p, e);
  if (r.q >= 3) {
    const Theorem12Report t12 = theorem12_check(p, e);
    r.thm12_member_tau_g = t12.member_tau_g;
    r.thm12_not_member_g = t12.not_member_g;
    r.thm12_contraction_is_tau = t12.contraction_equals_tau;
  }
  if (hs.split()) r.ge_check = ge_check(hs, e);
  for (const auto& d : torsion_elementary_divisors(hs, e).non_units()) r.divisors.push_back(d.to_string());
  for (const auto& probe : maximal_ass_primes(hs, e, seed)) {
    r.probes.push_back({probe.prime.to_string(), probe.associated,
                        probe.witness ? std::optional<std::string>(probe.witness->to_string()) : std::nullopt});
  }
  r.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::set<std::tuple<std::uint32_t, unsigned, std::string>> completed_keys(const std::filesystem::path& path) {
  std::set<std::tuple<std::uint32_t, unsigned, std::string>> keys;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      keys.insert(parse_record(line).key());
    } catch (const std::invalid_argument&) {
      // torn or foreign line
    }
  }
  return keys;
}

SweepSummary run_sweep(const SweepConfig& config) {
  const auto done = completed_keys(config.out);
  std::vector<std::tuple<std::uint32_t, unsigned, std::string>> todo;
  SweepSummary summary;
  for (auto p : config.primes) {
    for (auto e : config.exponents) {
      for (const auto& f : config.f_exprs) {
        std::tuple<std::uint32_t, unsigned, std::string> key{p, e, f};
        if (done.contains(key)) {
          ++summary.skipped;
        } else {
          todo.push_back(std::move(key));
        }
      }
    }
  }

  // A torn last line must not swallow the first appended record.
  bool needs_newline = false;
  {
    std::ifstream in(config.out, std::ios::binary | std::ios::ate);
    if (in && in.tellg() > 0) {
      in.seekg(-1, std::ios::end);
      needs_newline = in.get() != '\n';
    }
  }
  std::ofstream out(config.out, std::ios::app | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + config.out.string() + " for appending");
  if (needs_newline) out << '\n';

  std::mutex writer;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      try {
        const auto& [p, e, f] = todo[i];
        SweepRecord record = evaluate_cell(p, e, f, config.seed);
        std::lock_guard lock(writer);
        out << to_jsonl(record) << '\n';
        out.flush();
        ++summary.computed;
        if (record.regression()) ++summary.regressions;
      } catch (...) {
        std::lock_guard lock(writer);
        if (!failure) failure = std::current_exception();
        next = todo.size();
      }
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace charp
