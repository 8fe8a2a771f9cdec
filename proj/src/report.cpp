#include "arcdom/report.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "arcdom/constructions.hpp"
#include "arcdom/domination.hpp"
#include "arcdom/threearc.hpp"

namespace arcdom {

bool AnalysisReport::violation() const {
  if (!verified) return true;
  if (gamma_x) {
    Rational gx(*gamma_x);
    if (bound_general && Rational(*bound_general) < gx) return true;
    if (bound_degree && *bound_degree < gx) return true;
    if (bound_product && Rational(*bound_product) < gx) return true;
    if (bound_clawfree && Rational(*bound_clawfree) < gx) return true;
  }
  if (size_general && bound_general && *size_general > *bound_general) return true;
  if (size_clawfree && bound_clawfree && *size_clawfree > *bound_clawfree) return true;
  return false;
}

AnalysisReport analyze(const Graph& g, const std::string& id, const AnalyzeOptions& options) {
  AnalysisReport row;
  row.id = id;
  row.n = g.n();
  row.m = g.m();
  row.delta = g.min_degree();
  row.max_degree = g.max_degree();
  row.connected = is_connected(g);
  row.claw_free = is_claw_free(g);

  try {
    row.gamma = gamma_exact(g).size();
  } catch (const Error& e) {
    row.notes.push_back(std::string("gamma: ") + e.what());
  }
  try {
    auto x = three_arc_graph(g);
    row.gamma_x = gamma_exact(x.graph).size();
  } catch (const Error& e) {
    row.notes.push_back(std::string("gammaX: ") + e.what());
  }

  if (row.gamma) {
    int gamma = *row.gamma;
    if (row.delta == 2)
      row.bound_degree =
          (Rational(row.max_degree, 2) + Rational(3)) * Rational(gamma) - Rational(1);
    if (row.delta == 3)
      row.bound_degree =
          (Rational(2 * row.max_degree, 5) + Rational(3)) * Rational(gamma) - Rational(1);
    if (row.delta == 4)
      row.bound_degree =
          (Rational(3 * (row.max_degree + 2), 8) + Rational(3)) * Rational(gamma) -
          Rational(1);
    if (row.connected && row.n >= 4 && row.delta >= 2)
      row.bound_product = (1 + row.max_degree) * gamma;
    if (row.claw_free && row.delta >= 2) row.bound_clawfree = 4 * gamma;
  }

  if (row.delta >= 2) {
    try {
      auto gb = general_bound(g, options.gamma_set_cap);
      row.bound_general = gb.value;
      if (gb.truncated) row.notes.push_back("general bound: seed set enumeration truncated");
    } catch (const Error& e) {
      row.notes.push_back(std::string("general bound: ") + e.what());
    }
    if (options.run_constructions) {
      try {
        auto plan = general_construct(g, options.gamma_set_cap);
        row.size_general = plan.size();
        row.verified = row.verified && plan.verified;
      } catch (const Error& e) {
        row.verified = false;
        row.notes.push_back(std::string("general construction: ") + e.what());
      }
      if (row.claw_free) {
        try {
          auto plan = clawfree_construct(g);
          row.size_clawfree = plan.size();
          row.verified = row.verified && plan.verified;
        } catch (const Error& e) {
          row.verified = false;
          row.notes.push_back(std::string("claw-free construction: ") + e.what());
        }
      }
    }
  }
  return row;
}

std::string csv_header() {
  return "id,n,m,delta,Delta,connected,clawfree,gamma,gammaX,bound_thm3,bound_thm4,"
         "bound_eqdel,bound_clawfree,size_thm3,size_clawfree,verified";
}

namespace {

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string csv_row(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.id << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.max_degree << ','
      << (r.connected ? "true" : "false") << ',' << (r.claw_free ? "true" : "false") << ','
      << opt_str(r.gamma) << ',' << opt_str(r.gamma_x) << ',' << opt_str(r.bound_general)
      << ',' << (r.bound_degree ? r.bound_degree->str() : std::string()) << ','
      << opt_str(r.bound_product) << ',' << opt_str(r.bound_clawfree) << ','
      << opt_str(r.size_general) << ',' << opt_str(r.size_clawfree) << ','
      << (r.verified ? "true" : "false");
  return out.str();
}

BenchResult run_bench(const std::vector<std::pair<std::string, Graph>>& corpus, int jobs,
                      const AnalyzeOptions& options) {
  BenchResult result;
  result.rows.resize(corpus.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(corpus.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= corpus.size()) return;
      try {
        result.rows[i] = analyze(corpus[i].second, corpus[i].first, options);
      } catch (const std::exception& e) {
        AnalysisReport row;
        row.id = corpus[i].first;
        row.verified = false;
        row.notes.push_back(std::string("analysis failed: ") + e.what());
        result.rows[i] = std::move(row);
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& row : result.rows) {
    ++result.summary.rows;
    if (row.violation()) ++result.summary.violations;
    if (!row.notes.empty()) ++result.summary.errors;
    if (row.gamma_x && row.bound_general && *row.gamma_x == *row.bound_general)
      ++result.summary.tight_general;
    if (row.gamma_x && row.bound_clawfree && *row.gamma_x == *row.bound_clawfree)
      ++result.summary.tight_clawfree;
  }
  return result;
}

std::string summary_json(const BenchResult& result, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["rows"] = result.summary.rows;
  j["violations"] = result.summary.violations;
  j["errors"] = result.summary.errors;
  j["tightness"]["general"] = result.summary.tight_general;
  j["tightness"]["clawfree"] = result.summary.tight_clawfree;
  j["seed"] = seed;
  return j.dump(2);
}

}  // namespace arcdom
