#include "monadic/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace monadic {

namespace {

std::map<std::string, std::size_t> point_index(const std::vector<std::string>& points) {
  if (points.size() > kMaxPoints) throw std::invalid_argument("more than 64 points");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], i).second) {
      throw std::invalid_argument("point '" + points[i] + "' listed twice");
    }
  }
  return index;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& p) {
  const auto it = index.find(p);
  if (it == index.end()) throw std::invalid_argument("unknown point '" + p + "'");
  return it->second;
}

Relation relation_from_edges(const std::map<std::string, std::size_t>& index, std::size_t n,
                             const std::vector<Edge>& edges, bool close) {
  Relation r(n);
  for (const auto& [from, to] : edges) r.set(lookup(index, from), lookup(index, to));
  return close ? r.reflexive_transitive_closure() : r;
}

std::vector<Edge> edges_of(const std::vector<std::string>& points, const Relation& r) {
  std::vector<Edge> out;
  for (std::size_t x = 0; x < r.size(); ++x) {
    for_each_member(r.successors(x), [&](std::size_t y) { out.emplace_back(points[x], points[y]); });
  }
  return out;
}

bool closure_flag(const Json& j, const char* key) {
  if (!j.contains(key)) return true;
  const auto value = j.at(key).get<std::string>();
  if (value == "reflexive-transitive") return true;
  if (value == "none") return false;
  throw std::invalid_argument(std::string(key) + " must be \"reflexive-transitive\" or \"none\"");
}

std::vector<Edge> edges_from_json(const Json& j, const char* key) {
  std::vector<Edge> out;
  if (!j.contains(key)) return out;
  for (const auto& e : j.at(key)) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument(std::string(key) + ": edges are pairs");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

Table table_from_json(const Json& j, const char* key, std::size_t n) {
  const auto& rows = j.at(key);
  if (!rows.is_array() || rows.size() != n) throw std::invalid_argument(std::string(key) + " must have n rows");
  Table t(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw std::invalid_argument(std::string(key) + " must have n columns");
    for (std::size_t b = 0; b < n; ++b) {
      t.set(static_cast<Elem>(a), static_cast<Elem>(b), rows[a][b].get<Elem>());
    }
  }
  return t;
}

std::vector<Elem> vector_from_json(const Json& j, const char* key, std::size_t n) {
  auto v = j.at(key).get<std::vector<Elem>>();
  if (v.size() != n) throw std::invalid_argument(std::string(key) + " must have n entries");
  return v;
}

Json table_to_json(const Table& t) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < t.size(); ++b) row.push_back(t(static_cast<Elem>(a), static_cast<Elem>(b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Covering pairs of the strict part of R, plus one double arrow per adjacent
// pair inside an R-cluster.
std::string dot_body(const std::vector<std::string>& points, const Relation& r,
                     const Relation& clusters) {
  std::ostringstream out;
  const std::size_t n = points.size();
  for (std::size_t x = 0; x < n; ++x) out << "  " << quoted(points[x]) << ";\n";

  std::vector<std::size_t> cluster_of(n, n);
  std::size_t id = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (cluster_of[x] != n) continue;
    const PointSet cls = clusters.successors(x);
    for_each_member(cls, [&](std::size_t y) { cluster_of[y] = id; });
    if (cardinality(cls) > 1) {
      out << "  subgraph cluster_" << id << " {\n    style=rounded; color=red;\n";
      for_each_member(cls, [&](std::size_t y) { out << "    " << quoted(points[y]) << ";\n"; });
      out << "  }\n";
    }
    ++id;
  }

  auto strictly = [&](std::size_t a, std::size_t b) { return r.holds(a, b) && !r.holds(b, a); };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (strictly(x, y)) {
        bool cover = true;
        for (std::size_t z = 0; z < n && cover; ++z) cover = !(strictly(x, z) && strictly(z, y));
        // One representative edge per pair of R-clusters.
        for (std::size_t x2 = 0; x2 < x && cover; ++x2) cover = !(r.holds(x, x2) && r.holds(x2, x));
        for (std::size_t y2 = 0; y2 < y && cover; ++y2) cover = !(r.holds(y, y2) && r.holds(y2, y));
        if (cover) out << "  " << quoted(points[x]) << " -> " << quoted(points[y]) << ";\n";
      } else if (x < y && r.holds(x, y) && r.holds(y, x)) {
        out << "  " << quoted(points[x]) << " -> " << quoted(points[y]) << " [dir=both];\n";
      }
    }
  }
  return out.str();
}

}  // namespace

Ms4Frame build_ms4_frame(const std::vector<std::string>& points, const std::vector<Edge>& r_edges,
                         bool close, const std::vector<std::vector<std::string>>& e_classes) {
  const auto index = point_index(points);
  const std::size_t n = points.size();
  Ms4Frame f{points, relation_from_edges(index, n, r_edges, close), Relation::identity(n)};
  PointSet seen = 0;
  for (const auto& cls : e_classes) {
    PointSet members_of_class = 0;
    for (const auto& p : cls) {
      const std::size_t i = lookup(index, p);
      if (contains(seen, i)) throw std::invalid_argument("point '" + p + "' in two E-classes");
      seen |= singleton(i);
      members_of_class |= singleton(i);
    }
    for_each_member(members_of_class, [&](std::size_t x) {
      for_each_member(members_of_class, [&](std::size_t y) { f.e.set(x, y); });
    });
  }
  return f;
}

MipcFrame build_mipc_frame(const std::vector<std::string>& points, const std::vector<Edge>& r_edges,
                           bool close_r, const std::vector<Edge>& q_edges, bool close_q) {
  const auto index = point_index(points);
  const std::size_t n = points.size();
  return {points, relation_from_edges(index, n, r_edges, close_r),
          relation_from_edges(index, n, q_edges, close_q)};
}

AnyFrame frame_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto points = j.at("points").get<std::vector<std::string>>();
  const auto r_edges = edges_from_json(j, "r_edges");
  const bool close_r = closure_flag(j, "r_closure");
  if (kind == "ms4") {
    std::vector<std::vector<std::string>> classes;
    if (j.contains("e_classes")) classes = j.at("e_classes").get<std::vector<std::vector<std::string>>>();
    return build_ms4_frame(points, r_edges, close_r, classes);
  }
  if (kind == "mipc") {
    return build_mipc_frame(points, r_edges, close_r, edges_from_json(j, "q_edges"),
                            closure_flag(j, "q_closure"));
  }
  throw std::invalid_argument("frame kind must be \"ms4\" or \"mipc\"");
}

Json frame_to_json(const Ms4Frame& f) {
  Json classes = Json::array();
  PointSet done = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (contains(done, x)) continue;
    Json cls = Json::array();
    for_each_member(f.e.successors(x), [&](std::size_t y) { cls.push_back(f.points[y]); });
    done |= f.e.successors(x);
    classes.push_back(std::move(cls));
  }
  return {{"kind", "ms4"},
          {"points", f.points},
          {"r_edges", edges_of(f.points, f.r)},
          {"r_closure", "none"},
          {"e_classes", std::move(classes)}};
}

Json frame_to_json(const MipcFrame& f) {
  return {{"kind", "mipc"},
          {"points", f.points},
          {"r_edges", edges_of(f.points, f.r)},
          {"r_closure", "none"},
          {"q_edges", edges_of(f.points, f.q)},
          {"q_closure", "none"}};
}

AnyAlgebra algebra_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto n = j.at("n").get<std::size_t>();
  if (n == 0) throw std::invalid_argument("algebra needs at least one element");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (kind == "mha") {
    FiniteMha a;
    a.n = n;
    a.meet = table_from_json(j, "meet", n);
    a.join = table_from_json(j, "join", n);
    a.imp = table_from_json(j, "imp", n);
    a.forall = vector_from_json(j, "forall", n);
    a.exists = vector_from_json(j, "exists", n);
    a.labels = std::move(labels);
    return normalized(a);
  }
  if (kind == "ms4") {
    FiniteMs4Algebra b;
    b.n = n;
    b.meet = table_from_json(j, "meet", n);
    b.join = table_from_json(j, "join", n);
    b.neg = vector_from_json(j, "neg", n);
    b.box = vector_from_json(j, "box", n);
    b.forall = vector_from_json(j, "forall", n);
    b.labels = std::move(labels);
    return normalized(b);
  }
  throw std::invalid_argument("algebra kind must be \"mha\" or \"ms4\"");
}

Json algebra_to_json(const FiniteMha& a) {
  Json j{{"kind", "mha"},
         {"n", a.n},
         {"meet", table_to_json(a.meet)},
         {"join", table_to_json(a.join)},
         {"imp", table_to_json(a.imp)},
         {"forall", a.forall},
         {"exists", a.exists}};
  if (!a.labels.empty()) j["labels"] = a.labels;
  return j;
}

Json algebra_to_json(const FiniteMs4Algebra& b) {
  Json j{{"kind", "ms4"},
         {"n", b.n},
         {"meet", table_to_json(b.meet)},
         {"join", table_to_json(b.join)},
         {"neg", b.neg},
         {"box", b.box},
         {"forall", b.forall}};
  if (!b.labels.empty()) j["labels"] = b.labels;
  return j;
}

Json report_to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"condition", v.condition}, {"witness", v.witness}});
  }
  return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

std::string render_dot(const Ms4Frame& f, const std::string& name) {
  return "digraph " + quoted(name) + " {\n" + dot_body(f.points, f.r, f.e) + "}\n";
}

std::string render_dot(const MipcFrame& f, const std::string& name) {
  const Relation eq = f.q.intersect(f.q.inverse());
  return "digraph " + quoted(name) + " {\n" + dot_body(f.points, f.r, eq) + "}\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace monadic
