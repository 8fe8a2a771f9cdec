#include "arcdom/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace arcdom {

Graph make_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::Validation, "cycle needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph make_path(int n) {
  if (n < 1) throw Error(ErrorKind::Validation, "path needs n >= 1");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph make_complete(int n) {
  if (n < 1) throw Error(ErrorKind::Validation, "complete graph needs n >= 1");
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw Error(ErrorKind::Validation, "complete bipartite needs both parts nonempty");
  EdgeList e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph make_friendship(int k) {
  if (k < 1) throw Error(ErrorKind::Validation, "friendship graph needs k >= 1");
  EdgeList e;
  for (int i = 0; i < k; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    e.emplace_back(0, a);
    e.emplace_back(0, b);
    e.emplace_back(a, b);
  }
  return Graph(2 * k + 1, std::move(e));
}

Graph make_corona(const Graph& base) {
  EdgeList e = base.edges();
  for (int v = 0; v < base.n(); ++v) e.emplace_back(v, base.n() + v);
  return Graph(2 * base.n(), std::move(e));
}

Graph cone(const Graph& base) {
  EdgeList e = base.edges();
  for (int v = 0; v < base.n(); ++v) e.emplace_back(v, base.n());
  return Graph(base.n() + 1, std::move(e));
}

Graph make_two_cliques(int s, int t) {
  if (s < 2 || t < 2) throw Error(ErrorKind::Validation, "two-cliques needs s,t >= 2");
  EdgeList e;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) e.emplace_back(i, j);
  // second clique on s-1 .. s+t-2, sharing vertex s-1
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) e.emplace_back(s - 1 + i, s - 1 + j);
  return Graph(s + t - 1, std::move(e));
}

Graph make_petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, std::move(e));
}

Graph line_graph(const Graph& g) {
  EdgeList ge = g.edges();
  int k = static_cast<int>(ge.size());
  EdgeList e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      auto [a, b] = ge[i];
      auto [c, d] = ge[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
    }
  return Graph(k, std::move(e));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph random_min_degree(int n, int degree_floor, std::uint64_t seed) {
  if (n < 1 || degree_floor < 0)
    throw Error(ErrorKind::Validation, "bad random-min-degree parameters");
  if (degree_floor > n - 1)
    throw Error(ErrorKind::GenerationFailed,
                "degree floor " + std::to_string(degree_floor) +
                    " impossible on " + std::to_string(n) + " vertices");
  double p = n > 1 ? std::min(0.95, (degree_floor + 2.0) / (n - 1)) : 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int kMaxRetries = 10000;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < p) e.emplace_back(i, j);
    Graph g(n, std::move(e));
    if (g.min_degree() >= degree_floor && is_connected(g)) return g;
  }
  throw Error(ErrorKind::GenerationFailed,
              "no connected graph with min degree >= " + std::to_string(degree_floor) +
                  " found in 10000 attempts");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

long long parse_int(const std::string& s) {
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad integer '" + s + "' in family spec");
  }
  if (pos != s.size()) throw Error(ErrorKind::Parse, "bad integer '" + s + "' in family spec");
  return v;
}

}  // namespace

Graph generate(const std::string& family_spec) {
  auto colon = family_spec.find(':');
  std::string name = family_spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : family_spec.substr(colon + 1);
  auto args = rest.empty() ? std::vector<std::string>{} : split(rest, ',');
  auto arg = [&](std::size_t i) { return parse_int(args.at(i)); };

  try {
    if (name == "cycle") return make_cycle(static_cast<int>(arg(0)));
    if (name == "path") return make_path(static_cast<int>(arg(0)));
    if (name == "complete") return make_complete(static_cast<int>(arg(0)));
    if (name == "complete-bipartite")
      return make_complete_bipartite(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
    if (name == "friendship") return make_friendship(static_cast<int>(arg(0)));
    if (name == "two-cliques")
      return make_two_cliques(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
    if (name == "petersen") return make_petersen();
    if (name == "corona") return make_corona(generate(rest));
    if (name == "cone") return cone(generate(rest));
    if (name == "random-min-degree")
      return random_min_degree(static_cast<int>(arg(0)), static_cast<int>(arg(1)),
                               args.size() > 2 ? static_cast<std::uint64_t>(arg(2)) : 1);
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::Parse, "missing parameter in family spec '" + family_spec + "'");
  }
  throw Error(ErrorKind::Parse, "unknown family '" + name + "'");
}

}  // namespace arcdom
