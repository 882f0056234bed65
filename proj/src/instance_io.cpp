#include "firebreak/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace firebreak {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

template <class T>
T parse_number(const json& j, const std::string& path);

template <>
Rational parse_number<Rational>(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_fraction(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned())
    return Rational(j.get<long long>());
  if (j.is_number_float())
    fail(path, "fractional numeric literal in rational mode; use a \"p/q\" string");
  fail(path, "expected a number or \"p/q\" string");
}

template <>
double parse_number<double>(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return to_double(parse_fraction(j.get<std::string>()));
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number()) return j.get<double>();
  fail(path, "expected a number or \"p/q\" string");
}

const json& field(const json& j, const char* name, const std::string& path) {
  auto it = j.find(name);
  if (it == j.end()) fail(path, std::string("missing field '") + name + "'");
  return *it;
}

template <class T>
Instance<T> parse_typed(const json& doc) {
  const json& jverts = field(doc, "vertices", "$");
  if (!jverts.is_array()) fail("vertices", "expected an array");
  std::vector<VertexSpec<T>> vs(jverts.size());
  std::vector<char> seen(jverts.size(), 0);
  for (std::size_t i = 0; i < jverts.size(); ++i) {
    std::string path = "vertices[" + std::to_string(i) + "]";
    const json& jv = jverts[i];
    if (!jv.is_object()) fail(path, "expected an object");
    const json& jid = field(jv, "id", path);
    if (!jid.is_number_integer() && !jid.is_number_unsigned()) fail(path + ".id", "expected an integer");
    long long id = jid.get<long long>();
    if (id < 0 || id >= static_cast<long long>(jverts.size()))
      fail(path + ".id", "vertex ids must be dense 0..n-1");
    if (seen[id]) fail(path + ".id", "duplicate vertex id");
    seen[id] = 1;
    vs[id].value = parse_number<T>(field(jv, "value", path), path + ".value");
    vs[id].ignition = parse_number<T>(field(jv, "ignition", path), path + ".ignition");
  }

  const json& jedges = field(doc, "edges", "$");
  if (!jedges.is_array()) fail("edges", "expected an array");
  std::vector<EdgeSpec<T>> es(jedges.size());
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    std::string path = "edges[" + std::to_string(i) + "]";
    const json& je = jedges[i];
    if (!je.is_object()) fail(path, "expected an object");
    const json& jt = field(je, "tail", path);
    const json& jh = field(je, "head", path);
    const json& jd = field(je, "directed", path);
    if (!jt.is_number_integer() && !jt.is_number_unsigned()) fail(path + ".tail", "expected an integer");
    if (!jh.is_number_integer() && !jh.is_number_unsigned()) fail(path + ".head", "expected an integer");
    if (!jd.is_boolean()) fail(path + ".directed", "expected a boolean");
    es[i].tail = jt.get<int>();
    es[i].head = jh.get<int>();
    es[i].directed = jd.get<bool>();
    es[i].spread = parse_number<T>(field(je, "spread", path), path + ".spread");
    es[i].cost = parse_number<T>(field(je, "cost", path), path + ".cost");
  }

  Instance<T> inst;
  try {
    inst.graph = build_graph<T>(std::move(vs), std::move(es));
  } catch (const std::exception& e) {
    fail("graph", e.what());
  }
  inst.budget = parse_number<T>(field(doc, "budget", "$"), "budget");
  if (auto it = doc.find("risk_threshold"); it != doc.end() && !it->is_null())
    inst.risk_threshold = parse_number<T>(*it, "risk_threshold");
  try {
    inst.validate();
  } catch (const std::exception& e) {
    fail("instance", e.what());
  }
  return inst;
}

ordered_json number_to_json(const Rational& v) {
  constexpr long long safe = 1ll << 53;
  if (is_integer(v)) {
    BigInt num = numerator(v);
    if (num > -safe && num < safe) return ordered_json(static_cast<long long>(num));
  }
  return ordered_json(fraction_string(v));
}

ordered_json number_to_json(double v) { return ordered_json(v); }

template <class T>
std::string serialize_typed(const Instance<T>& inst) {
  ordered_json doc;
  doc["mode"] = num_traits<T>::mode_name();
  ordered_json verts = ordered_json::array();
  for (int v = 0; v < inst.graph.vertex_count(); ++v) {
    ordered_json jv;
    jv["id"] = v;
    jv["value"] = number_to_json(inst.graph.vertex(v).value);
    jv["ignition"] = number_to_json(inst.graph.vertex(v).ignition);
    verts.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(verts);
  ordered_json edges = ordered_json::array();
  for (int e = 0; e < inst.graph.edge_count(); ++e) {
    const auto& ed = inst.graph.edge(e);
    ordered_json je;
    je["tail"] = ed.tail;
    je["head"] = ed.head;
    je["directed"] = ed.directed;
    je["spread"] = number_to_json(ed.spread);
    je["cost"] = number_to_json(ed.cost);
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  doc["budget"] = number_to_json(inst.budget);
  if (inst.risk_threshold) doc["risk_threshold"] = number_to_json(*inst.risk_threshold);
  return doc.dump(2) + "\n";
}

}  // namespace

LoadedInstance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("instance document must be an object");
  const json& jmode = field(doc, "mode", "$");
  if (!jmode.is_string()) fail("mode", "expected \"rational\" or \"float\"");
  std::string mode = jmode.get<std::string>();
  if (mode == "rational") return parse_typed<Rational>(doc);
  if (mode == "float") return parse_typed<double>(doc);
  fail("mode", "expected \"rational\" or \"float\"");
}

LoadedInstance load_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

std::string serialize_instance(const Instance<Rational>& inst) { return serialize_typed(inst); }
std::string serialize_instance(const Instance<double>& inst) { return serialize_typed(inst); }

std::string serialize_instance(const LoadedInstance& inst) {
  return std::visit([](const auto& i) { return serialize_typed(i); }, inst);
}

void save_instance_file(const std::string& path, const LoadedInstance& inst) {
  write_text_file(path, serialize_instance(inst));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace firebreak
