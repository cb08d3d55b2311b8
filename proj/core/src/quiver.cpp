#include "slfq/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <set>

namespace slfq {

namespace {

bool word_chars_ok(const std::string& s) {
  for (char c : s)
    if (c != 'I' && c != 'O') return false;
  return true;
}

std::string minimal_period(const std::string& q) {
  int n = static_cast<int>(q.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = (q[i] == q[i - d]);
    if (ok) return q.substr(0, d);
  }
  return q;
}

std::string flip_chars(std::string s) {
  for (char& c : s) c = (c == 'O') ? 'I' : 'O';
  return s;
}

}  // namespace

TailWord::TailWord(std::string preperiod, std::string period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  assert(!per_.empty());
  assert(word_chars_ok(pre_) && word_chars_ok(per_));
}

std::optional<TailWord> TailWord::parse(const std::string& preperiod,
                                        const std::string& period) {
  if (period.empty()) return std::nullopt;
  if (!word_chars_ok(preperiod) || !word_chars_ok(period)) return std::nullopt;
  return TailWord(preperiod, period);
}

Dir TailWord::at(int depth) const {
  assert(depth >= 1);
  int idx = depth - 1;
  char c;
  if (idx < static_cast<int>(pre_.size()))
    c = pre_[static_cast<std::size_t>(idx)];
  else
    c = per_[static_cast<std::size_t>((idx - pre_.size()) % per_.size())];
  return c == 'O' ? Dir::Out : Dir::In;
}

bool TailWord::normalized() const { return *this == normal_form(); }

TailWord TailWord::normal_form() const {
  std::string p = pre_;
  std::string q = minimal_period(per_);
  while (!p.empty() && p.back() == q.back()) {
    p.pop_back();
    q = q.back() + q.substr(0, q.size() - 1);
  }
  return TailWord(std::move(p), std::move(q));
}

TailWord TailWord::flipped() const {
  return TailWord(flip_chars(pre_), flip_chars(per_)).normal_form();
}

TailWord TailWord::shifted(int d) const {
  assert(d >= 0);
  if (d <= static_cast<int>(pre_.size()))
    return TailWord(pre_.substr(static_cast<std::size_t>(d)), per_).normal_form();
  int k = (d - static_cast<int>(pre_.size())) % static_cast<int>(per_.size());
  return TailWord("", per_.substr(static_cast<std::size_t>(k)) +
                          per_.substr(0, static_cast<std::size_t>(k)))
      .normal_form();
}

bool TailWord::eventually_constant() const {
  return per_.find_first_not_of(per_[0]) == std::string::npos;
}

bool TailWord::eventually_out() const {
  return per_.find_first_not_of('O') == std::string::npos;
}

bool TailWord::eventually_in() const {
  return per_.find_first_not_of('I') == std::string::npos;
}

bool FiniteQuiver::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::string tail_vertex_name(int tail, int depth) {
  return "t" + std::to_string(tail) + "d" + std::to_string(depth);
}

std::string tail_arrow_id(int tail, int depth) {
  return "t" + std::to_string(tail) + "a" + std::to_string(depth);
}

namespace {

// Does `name` match the generated pattern "t<i><sep><k>" for any of the
// first n tails at k >= 1?
std::optional<std::pair<int, int>> parse_generated(const std::string& name, char sep,
                                                   int n_tails) {
  if (name.size() < 4 || name[0] != 't') return std::nullopt;
  std::size_t s = name.find(sep, 1);
  if (s == std::string::npos || s == 1 || s + 1 >= name.size()) return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (i == s) continue;
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  }
  int tail = std::stoi(name.substr(1, s - 1));
  int depth = std::stoi(name.substr(s + 1));
  if (tail < 0 || tail >= n_tails || depth < 1) return std::nullopt;
  return std::make_pair(tail, depth);
}

bool collides_with_generated(const std::string& name, char sep, int n_tails) {
  return parse_generated(name, sep, n_tails).has_value();
}

bool core_has_cycle(const FiniteQuiver& q) {
  std::map<std::string, int> indeg;
  for (const auto& v : q.vertices) indeg[v] = 0;
  std::vector<const Arrow*> usable;
  for (const auto& a : q.arrows)
    if (indeg.count(a.from) && indeg.count(a.to)) {
      usable.push_back(&a);
      ++indeg[a.to];
    }
  std::vector<std::string> queue;
  for (const auto& [v, d] : indeg)
    if (d == 0) queue.push_back(v);
  std::size_t removed = 0;
  while (!queue.empty()) {
    std::string v = queue.back();
    queue.pop_back();
    ++removed;
    for (const Arrow* a : usable)
      if (a->from == v && --indeg[a->to] == 0) queue.push_back(a->to);
  }
  return removed != indeg.size();
}

}  // namespace

std::optional<std::pair<int, int>> parse_tail_vertex_name(const std::string& name,
                                                          int n_tails) {
  return parse_generated(name, 'd', n_tails);
}

ValidationReport validate_presentation(const QuiverPresentation& qp) {
  ValidationReport r;
  int n_tails = static_cast<int>(qp.tails.size());

  std::set<std::string> seen;
  for (const auto& v : qp.core.vertices) {
    if (!seen.insert(v).second)
      r.violations.push_back("duplicate vertex identifier '" + v + "'");
    if (collides_with_generated(v, 'd', n_tails))
      r.violations.push_back("core vertex '" + v + "' collides with a generated tail vertex name");
  }

  std::set<std::string> arrow_ids;
  for (const auto& a : qp.core.arrows) {
    if (!arrow_ids.insert(a.id).second)
      r.violations.push_back("duplicate arrow identifier '" + a.id + "'");
    if (collides_with_generated(a.id, 'a', n_tails))
      r.violations.push_back("core arrow '" + a.id + "' collides with a generated tail arrow id");
    if (!qp.core.has_vertex(a.from))
      r.structural.push_back("arrow '" + a.id + "' has dangling tail endpoint '" + a.from + "'");
    if (!qp.core.has_vertex(a.to))
      r.structural.push_back("arrow '" + a.id + "' has dangling head endpoint '" + a.to + "'");
  }

  if (core_has_cycle(qp.core)) r.violations.push_back("directed cycle in core");

  for (int i = 0; i < n_tails; ++i) {
    const TailSpec& t = qp.tails[static_cast<std::size_t>(i)];
    if (!qp.core.has_vertex(t.attach))
      r.violations.push_back("tail " + std::to_string(i) + " attachment '" + t.attach +
                             "' is not a core vertex");
    if (!t.word.normalized())
      r.violations.push_back("tail " + std::to_string(i) + " word is not normalized");
  }
  return r;
}

bool same_presentation(const QuiverPresentation& a, const QuiverPresentation& b) {
  if (a.core.vertices != b.core.vertices) return false;
  if (a.core.arrows != b.core.arrows) return false;
  if (a.tails.size() != b.tails.size()) return false;
  for (std::size_t i = 0; i < a.tails.size(); ++i)
    if (a.tails[i].attach != b.tails[i].attach || !(a.tails[i].word == b.tails[i].word))
      return false;
  return true;
}

QuiverPresentation opposite(const QuiverPresentation& qp) {
  QuiverPresentation o;
  o.core.vertices = qp.core.vertices;
  for (const auto& a : qp.core.arrows) o.core.arrows.push_back({a.id, a.to, a.from});
  for (const auto& t : qp.tails) o.tails.push_back({t.attach, t.word.flipped()});
  return o;
}

QuiverPresentation reroot(const QuiverPresentation& qp, int tail, int d) {
  assert(tail >= 0 && tail < static_cast<int>(qp.tails.size()));
  assert(d >= 0);
  QuiverPresentation r = qp;
  if (d == 0) return r;
  const TailSpec& t = qp.tails[static_cast<std::size_t>(tail)];
  std::string prev = t.attach;
  for (int k = 1; k <= d; ++k) {
    std::string name = tail_vertex_name(tail, k) + "c";
    while (r.core.has_vertex(name)) name += "c";
    r.core.vertices.push_back(name);
    std::string id = tail_arrow_id(tail, k) + "c";
    if (t.word.at(k) == Dir::Out)
      r.core.arrows.push_back({id, prev, name});
    else
      r.core.arrows.push_back({id, name, prev});
    prev = name;
  }
  r.tails[static_cast<std::size_t>(tail)] = {prev, t.word.shifted(d)};
  return r;
}

}  // namespace slfq
