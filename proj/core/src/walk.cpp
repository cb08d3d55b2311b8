#include "slfq/walk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace slfq {

namespace {

// (tail, depth) position of a vertex name; the attachment counts as depth
// 0 of every tail hung on it.
std::optional<std::pair<int, int>> tail_position(const QuiverPresentation& qp,
                                                 const std::string& name, int tail) {
  if (qp.tails[static_cast<std::size_t>(tail)].attach == name) return std::make_pair(tail, 0);
  auto p = parse_tail_vertex_name(name, static_cast<int>(qp.tails.size()));
  if (p && p->first == tail) return p;
  return std::nullopt;
}

}  // namespace

Walk make_walk(const QuiverPresentation& qp, const WalkSpec& spec) {
  if (spec.vertices.empty()) throw std::invalid_argument("walk needs at least one vertex");
  int n_tails = static_cast<int>(qp.tails.size());

  std::vector<int> depths(static_cast<std::size_t>(n_tails), 1);
  for (const auto& v : spec.vertices)
    if (auto p = parse_tail_vertex_name(v, n_tails))
      depths[static_cast<std::size_t>(p->first)] =
          std::max(depths[static_cast<std::size_t>(p->first)], p->second + 1);
  Window w = materialize_window(qp, depths);

  Walk walk;
  walk.spec = spec;
  for (const auto& v : spec.vertices)
    if (w.index_of(v) < 0) throw std::invalid_argument("unknown walk vertex '" + v + "'");

  for (std::size_t i = 0; i + 1 < spec.vertices.size(); ++i) {
    const std::string& u = spec.vertices[i];
    const std::string& v = spec.vertices[i + 1];
    int ui = w.index_of(u), vi = w.index_of(v);
    std::vector<WalkStep> candidates;
    for (int ai = 0; ai < w.arrow_count(); ++ai) {
      const WArrow& a = w.arrow(ai);
      if (a.from == ui && a.to == vi) candidates.push_back({a.id, false, u, v});
      if (a.from == vi && a.to == ui) candidates.push_back({a.id, true, u, v});
    }
    if (candidates.empty())
      throw std::invalid_argument("no arrow connects '" + u + "' and '" + v + "'");
    if (candidates.size() > 1)
      throw std::invalid_argument("several arrows connect '" + u + "' and '" + v +
                                  "'; walk is ambiguous");
    walk.steps.push_back(candidates.front());
  }

  auto resolve_anchor = [&](int tail, const std::string& vertex) -> std::pair<int, int> {
    if (tail < 0 || tail >= n_tails) throw std::invalid_argument("extension tail out of range");
    auto p = tail_position(qp, vertex, tail);
    if (!p)
      throw std::invalid_argument("extension anchor '" + vertex + "' is not on tail " +
                                  std::to_string(tail));
    return *p;
  };
  if (spec.extend_front)
    walk.front_anchor = resolve_anchor(*spec.extend_front, spec.vertices.front());
  if (spec.extend_back)
    walk.back_anchor = resolve_anchor(*spec.extend_back, spec.vertices.back());

  // Simplicity: distinct finite vertices and no finite vertex inside an
  // infinite continuation; two continuations along one tail overlap.
  std::set<std::string> distinct(spec.vertices.begin(), spec.vertices.end());
  walk.simple = distinct.size() == spec.vertices.size();
  auto collides = [&](const std::pair<int, int>& anchor) {
    for (const auto& v : spec.vertices)
      if (auto p = tail_position(qp, v, anchor.first); p && p->second > anchor.second)
        return true;
    return false;
  };
  if (walk.front_anchor && collides(*walk.front_anchor)) walk.simple = false;
  if (walk.back_anchor && collides(*walk.back_anchor)) walk.simple = false;
  if (walk.front_anchor && walk.back_anchor &&
      walk.front_anchor->first == walk.back_anchor->first)
    walk.simple = false;

  walk.reduced = true;
  for (std::size_t i = 0; i + 1 < walk.steps.size(); ++i)
    if (walk.steps[i].arrow_id == walk.steps[i + 1].arrow_id &&
        walk.steps[i].inverted != walk.steps[i + 1].inverted)
      walk.reduced = false;
  // A continuation arrives or leaves through the next-deeper tail edge; an
  // adjacent step reusing that edge is an immediate reversal.
  if (walk.front_anchor && !walk.steps.empty() &&
      walk.steps.front().arrow_id ==
          tail_arrow_id(walk.front_anchor->first, walk.front_anchor->second + 1))
    walk.reduced = false;
  if (walk.back_anchor && !walk.steps.empty() &&
      walk.steps.back().arrow_id ==
          tail_arrow_id(walk.back_anchor->first, walk.back_anchor->second + 1))
    walk.reduced = false;
  if (walk.front_anchor && walk.back_anchor && walk.steps.empty() &&
      walk.front_anchor->first == walk.back_anchor->first)
    walk.reduced = false;
  if (!walk.reduced) walk.simple = false;

  if (walk.front_anchor)
    walk.front_eventually_path =
        qp.tails[static_cast<std::size_t>(walk.front_anchor->first)].word.eventually_constant();
  if (walk.back_anchor)
    walk.back_eventually_path =
        qp.tails[static_cast<std::size_t>(walk.back_anchor->first)].word.eventually_constant();
  return walk;
}

Walk make_walk_from_arrows(const QuiverPresentation& qp, const std::string& start,
                           const std::vector<std::pair<std::string, bool>>& signed_arrows) {
  std::vector<int> depths(qp.tails.size(), 1);
  int n_tails = static_cast<int>(qp.tails.size());
  for (const auto& [id, inv] : signed_arrows) {
    auto eat = [&](const std::string& s, char sep) {
      if (s.size() >= 4 && s[0] == 't') {
        std::size_t k = s.find(sep, 1);
        if (k != std::string::npos) {
          // Depth of a tail arrow id equals the deeper endpoint's depth.
          std::string ts = s.substr(1, k - 1), ds = s.substr(k + 1);
          if (!ts.empty() && !ds.empty() &&
              ts.find_first_not_of("0123456789") == std::string::npos &&
              ds.find_first_not_of("0123456789") == std::string::npos) {
            int t = std::stoi(ts), d = std::stoi(ds);
            if (t >= 0 && t < n_tails && d >= 1)
              depths[static_cast<std::size_t>(t)] =
                  std::max(depths[static_cast<std::size_t>(t)], d);
          }
        }
      }
    };
    eat(id, 'a');
    (void)inv;
  }
  Window w = materialize_window(qp, depths);

  std::vector<std::string> vertices{start};
  if (w.index_of(start) < 0) throw std::invalid_argument("unknown walk start '" + start + "'");
  std::string cur = start;
  for (const auto& [id, inv] : signed_arrows) {
    const WArrow* found = nullptr;
    for (int ai = 0; ai < w.arrow_count(); ++ai)
      if (w.arrow(ai).id == id) {
        found = &w.arrow(ai);
        break;
      }
    if (!found) throw std::invalid_argument("unknown arrow '" + id + "'");
    std::string t = w.vertex(inv ? found->to : found->from).name;
    std::string h = w.vertex(inv ? found->from : found->to).name;
    if (t != cur)
      throw std::invalid_argument("arrow '" + id + "' does not depart from '" + cur + "'");
    vertices.push_back(h);
    cur = h;
  }
  return make_walk(qp, WalkSpec{std::nullopt, vertices, std::nullopt});
}

}  // namespace slfq
