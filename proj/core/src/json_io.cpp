#include "slfq/json_io.hpp"

#include <json.hpp>

namespace slfq {

using json = nlohmann::ordered_json;

JsonError::JsonError(std::string ptr, const std::string& msg)
    : std::runtime_error(ptr.empty() ? msg : ptr + ": " + msg), pointer(std::move(ptr)) {}

namespace {

std::string type_name(const json& j) { return j.type_name(); }

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonError("", e.what());
  }
}

const json& field(const json& obj, const std::string& ptr, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw JsonError(ptr, std::string("missing field \"") + key + "\"");
  return *it;
}

void expect_object(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw JsonError(ptr, "expected an object, got " + type_name(j));
}

void expect_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw JsonError(ptr, "expected an array, got " + type_name(j));
}

std::string expect_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw JsonError(ptr, "expected a string, got " + type_name(j));
  return j.get<std::string>();
}

int expect_int(const json& j, const std::string& ptr, int lo) {
  if (!j.is_number_integer())
    throw JsonError(ptr, "expected an integer, got " + type_name(j));
  long long v = j.get<long long>();
  if (v < lo || v > 1000000)
    throw JsonError(ptr, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

void reject_unknown(const json& obj, const std::string& ptr,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw JsonError(ptr + "/" + it.key(), "unknown field");
  }
}

// Tail keys are decimal indices into qp.tails.
int tail_key(const std::string& key, int n_tails, const std::string& ptr) {
  if (key.empty() || key.size() > 6 ||
      key.find_first_not_of("0123456789") != std::string::npos ||
      (key.size() > 1 && key[0] == '0'))
    throw JsonError(ptr, "not a tail index");
  int t = std::stoi(key);
  if (t >= n_tails) throw JsonError(ptr, "no such tail");
  return t;
}

}  // namespace

QuiverPresentation quiver_from_json_text(const std::string& text) {
  json j = parse_document(text);
  expect_object(j, "");
  reject_unknown(j, "", {"core", "tails"});

  QuiverPresentation qp;
  const json& core = field(j, "", "core");
  expect_object(core, "/core");
  reject_unknown(core, "/core", {"vertices", "arrows"});

  const json& verts = field(core, "/core", "vertices");
  expect_array(verts, "/core/vertices");
  for (std::size_t i = 0; i < verts.size(); ++i)
    qp.core.vertices.push_back(expect_string(verts[i], "/core/vertices/" + std::to_string(i)));

  const json& arrows = field(core, "/core", "arrows");
  expect_array(arrows, "/core/arrows");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string ptr = "/core/arrows/" + std::to_string(i);
    const json& a = arrows[i];
    expect_object(a, ptr);
    reject_unknown(a, ptr, {"id", "from", "to"});
    qp.core.arrows.push_back({expect_string(field(a, ptr, "id"), ptr + "/id"),
                              expect_string(field(a, ptr, "from"), ptr + "/from"),
                              expect_string(field(a, ptr, "to"), ptr + "/to")});
  }

  const json& tails = field(j, "", "tails");
  expect_array(tails, "/tails");
  for (std::size_t i = 0; i < tails.size(); ++i) {
    std::string ptr = "/tails/" + std::to_string(i);
    const json& t = tails[i];
    expect_object(t, ptr);
    reject_unknown(t, ptr, {"attach", "preperiod", "period"});
    std::string attach = expect_string(field(t, ptr, "attach"), ptr + "/attach");
    std::string pre = expect_string(field(t, ptr, "preperiod"), ptr + "/preperiod");
    std::string per = expect_string(field(t, ptr, "period"), ptr + "/period");
    auto word = TailWord::parse(pre, per);
    if (!word)
      throw JsonError(ptr, "tail word must use letters I and O and a nonempty period");
    qp.tails.push_back({attach, *word});
  }
  return qp;
}

std::string quiver_to_json_text(const QuiverPresentation& qp) {
  json j;
  j["core"]["vertices"] = qp.core.vertices;
  j["core"]["arrows"] = json::array();
  for (const Arrow& a : qp.core.arrows)
    j["core"]["arrows"].push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
  j["tails"] = json::array();
  for (const TailSpec& t : qp.tails)
    j["tails"].push_back({{"attach", t.attach},
                          {"preperiod", t.word.preperiod()},
                          {"period", t.word.period()}});
  return j.dump(2) + "\n";
}

StableRep rep_from_json_text(const QuiverPresentation& qp, const std::string& text) {
  json j = parse_document(text);
  expect_object(j, "");
  reject_unknown(j, "", {"window_depths", "dims", "maps", "tags"});
  int n_tails = static_cast<int>(qp.tails.size());

  const json& jd = field(j, "", "window_depths");
  expect_object(jd, "/window_depths");
  std::vector<int> depths(qp.tails.size(), 0);
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    std::string ptr = "/window_depths/" + it.key();
    depths[tail_key(it.key(), n_tails, ptr)] = expect_int(*it, ptr, 1);
  }
  for (int t = 0; t < n_tails; ++t)
    if (depths[static_cast<std::size_t>(t)] == 0)
      throw JsonError("/window_depths", "missing depth for tail " + std::to_string(t));

  Window w;
  try {
    w = materialize_window(qp, depths);
  } catch (const std::invalid_argument& e) {
    throw JsonError("/window_depths", e.what());
  }

  StableRep m;
  m.window = w;
  m.dims.assign(static_cast<std::size_t>(w.vertex_count()), 0);
  const json& dims = field(j, "", "dims");
  expect_object(dims, "/dims");
  for (auto it = dims.begin(); it != dims.end(); ++it) {
    std::string ptr = "/dims/" + it.key();
    int v = w.index_of(it.key());
    if (v < 0) throw JsonError(ptr, "no such window vertex");
    m.dims[static_cast<std::size_t>(v)] = expect_int(*it, ptr, 0);
  }

  for (int a = 0; a < w.arrow_count(); ++a)
    m.maps.push_back(Mat::zero(m.dim(w.arrow(a).to), m.dim(w.arrow(a).from)));
  const json& maps = field(j, "", "maps");
  expect_object(maps, "/maps");
  for (auto it = maps.begin(); it != maps.end(); ++it) {
    std::string ptr = "/maps/" + it.key();
    int a = -1;
    for (int k = 0; k < w.arrow_count(); ++k)
      if (w.arrow(k).id == it.key()) a = k;
    if (a < 0) throw JsonError(ptr, "no such window arrow");
    int rows = m.dim(w.arrow(a).to);
    int cols = m.dim(w.arrow(a).from);
    const json& rj = *it;
    expect_array(rj, ptr);
    if (static_cast<int>(rj.size()) != rows)
      throw JsonError(ptr, "expected " + std::to_string(rows) + " rows, got " +
                               std::to_string(rj.size()));
    Mat mat(rows, cols);
    for (int i = 0; i < rows; ++i) {
      std::string rptr = ptr + "/" + std::to_string(i);
      expect_array(rj[static_cast<std::size_t>(i)], rptr);
      const json& row = rj[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != cols)
        throw JsonError(rptr, "expected " + std::to_string(cols) + " entries, got " +
                                  std::to_string(row.size()));
      for (int c = 0; c < cols; ++c) {
        std::string eptr = rptr + "/" + std::to_string(c);
        auto r = parse_rat(expect_string(row[static_cast<std::size_t>(c)], eptr));
        if (!r) throw JsonError(eptr, "not a rational (\"p\" or \"p/q\")");
        mat.at(i, c) = *r;
      }
    }
    m.maps[static_cast<std::size_t>(a)] = mat;
  }

  // Start each tag at the loosest legal stabilization depth; the checks
  // below then see exactly the boundary constraints, and minimize_stab
  // tightens afterwards.
  for (int t = 0; t < n_tails; ++t)
    m.tags.push_back({TagKind::Zero, 0, depths[static_cast<std::size_t>(t)] - 1});
  const json& tags = field(j, "", "tags");
  expect_object(tags, "/tags");
  for (auto it = tags.begin(); it != tags.end(); ++it) {
    std::string ptr = "/tags/" + it.key();
    int t = tail_key(it.key(), n_tails, ptr);
    const json& tj = *it;
    if (tj.is_string() && tj.get<std::string>() == "zero") continue;
    if (tj.is_object()) {
      reject_unknown(tj, ptr, {"stable"});
      int rank = expect_int(field(tj, ptr, "stable"), ptr + "/stable", 0);
      TailTag& tag = m.tags[static_cast<std::size_t>(t)];
      tag.kind = rank > 0 ? TagKind::Stable : TagKind::Zero;
      tag.rank = rank;
      continue;
    }
    throw JsonError(ptr, "expected \"zero\" or {\"stable\": m}");
  }

  std::vector<std::string> bad = check_stable_rep(m);
  if (!bad.empty()) throw JsonError("", "not a stable representation: " + bad.front());
  return minimize_stab(std::move(m));
}

std::string rep_to_json_text(const StableRep& m) {
  const Window& w = m.window;
  json j;
  j["window_depths"] = json::object();
  for (std::size_t t = 0; t < w.depths().size(); ++t)
    j["window_depths"][std::to_string(t)] = w.depths()[t];
  j["dims"] = json::object();
  for (int v = 0; v < w.vertex_count(); ++v) j["dims"][w.vertex(v).name] = m.dim(v);
  j["maps"] = json::object();
  for (int a = 0; a < w.arrow_count(); ++a) {
    json rows = json::array();
    const Mat& mat = m.map(a);
    for (int i = 0; i < mat.rows(); ++i) {
      json row = json::array();
      for (int c = 0; c < mat.cols(); ++c) row.push_back(format_rat(mat.at(i, c)));
      rows.push_back(row);
    }
    j["maps"][w.arrow(a).id] = rows;
  }
  j["tags"] = json::object();
  for (std::size_t t = 0; t < m.tags.size(); ++t) {
    const TailTag& tag = m.tags[t];
    if (tag.kind == TagKind::Zero)
      j["tags"][std::to_string(t)] = "zero";
    else
      j["tags"][std::to_string(t)] = json{{"stable", tag.rank}};
  }
  return j.dump(2) + "\n";
}

}  // namespace slfq
