#include "slfq/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace slfq {

std::string dynkin_name(Dynkin d) {
  switch (d) {
    case Dynkin::AInf: return "A_inf";
    case Dynkin::DInf: return "D_inf";
    case Dynkin::AInfInf: return "A_inf_inf";
    case Dynkin::NotInfiniteDynkin: return "none";
  }
  return "none";
}

namespace {

bool core_connected(const FiniteQuiver& q) {
  if (q.vertices.empty()) return false;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& v : q.vertices) adj[v];
  for (const auto& a : q.arrows) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::vector<std::string> stack{q.vertices.front()};
  std::map<std::string, bool> seen{{q.vertices.front(), true}};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const auto& u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  for (const auto& v : q.vertices)
    if (!seen[v]) return false;
  return true;
}

// Undirected degrees of core vertices in the full infinite quiver: core
// incidences plus one per attached tail. Tail vertices beyond the core
// always have degree 2 and never influence the shape tests.
std::map<std::string, int> full_degrees(const QuiverPresentation& qp) {
  std::map<std::string, int> deg;
  for (const auto& v : qp.core.vertices) deg[v] = 0;
  for (const auto& a : qp.core.arrows) {
    ++deg[a.from];
    ++deg[a.to];
  }
  for (const auto& t : qp.tails) ++deg[t.attach];
  return deg;
}

Dynkin detect_dynkin(const QuiverPresentation& qp) {
  int v = static_cast<int>(qp.core.vertices.size());
  int e = static_cast<int>(qp.core.arrows.size());
  bool tree = (e == v - 1);  // connectivity already established
  if (!tree) return Dynkin::NotInfiniteDynkin;

  std::map<std::string, int> deg = full_degrees(qp);
  int n_tails = static_cast<int>(qp.tails.size());
  int maxdeg = 0;
  for (const auto& [_, d] : deg) maxdeg = std::max(maxdeg, d);

  if (maxdeg <= 2) {
    if (n_tails == 1) return Dynkin::AInf;
    if (n_tails == 2) return Dynkin::AInfInf;
    return Dynkin::NotInfiniteDynkin;
  }

  if (maxdeg == 3 && n_tails == 1) {
    std::string center;
    for (const auto& [u, d] : deg) {
      if (d == 3) {
        if (!center.empty()) return Dynkin::NotInfiniteDynkin;
        center = u;
      } else if (d > 2) {
        return Dynkin::NotInfiniteDynkin;
      }
    }
    int leaf_neighbors = 0;
    for (const auto& a : qp.core.arrows) {
      if (a.from == center && deg[a.to] == 1) ++leaf_neighbors;
      if (a.to == center && deg[a.from] == 1) ++leaf_neighbors;
    }
    if (leaf_neighbors == 2) return Dynkin::DInf;
  }
  return Dynkin::NotInfiniteDynkin;
}

StarWitness build_star_witness(const QuiverPresentation& qp) {
  StarWitness w;
  std::vector<int> depths;
  for (const auto& t : qp.tails)
    depths.push_back(std::max<int>(1, static_cast<int>(t.word.preperiod().size())));
  w.window = materialize_window(qp, depths);
  w.gamma = qp.core.vertices;
  for (int i = 0; i < static_cast<int>(qp.tails.size()); ++i) {
    const TailSpec& t = qp.tails[static_cast<std::size_t>(i)];
    int pre = static_cast<int>(t.word.preperiod().size());
    for (int d = 1; d <= pre; ++d) w.gamma.push_back(tail_vertex_name(i, d));
    std::string marker = pre == 0 ? t.attach : tail_vertex_name(i, pre);
    if (t.word.eventually_out())
      w.sourced.push_back(marker);
    else
      w.sinked.push_back(marker);
  }
  return w;
}

}  // namespace

ClassificationReport classify_quiver(const QuiverPresentation& qp) {
  ValidationReport vr = validate_presentation(qp);
  if (!vr.valid()) throw std::invalid_argument("presentation is not valid");
  if (qp.tails.empty())
    throw std::invalid_argument("classification targets infinite quivers; no tails given");
  if (!core_connected(qp.core)) throw std::invalid_argument("quiver is disconnected");

  ClassificationReport r;
  r.is_star = true;
  for (const auto& t : qp.tails) {
    if (!t.word.eventually_constant()) r.is_star = false;
    if (t.word.eventually_out()) r.has_infinite_sourced_paths = true;
    if (t.word.eventually_in()) r.has_infinite_sinked_paths = true;
  }
  if (r.is_star) r.star_witness = build_star_witness(qp);
  r.dynkin = detect_dynkin(qp);
  return r;
}

}  // namespace slfq
