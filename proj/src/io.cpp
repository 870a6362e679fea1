#include "interp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace interp {

namespace {

using nlohmann::json;

json tuple_to_json(const Tuple& t) {
  json n = json::array();
  for (i64 v : t.n.c) n.push_back(v);
  return json{{"d", t.d}, {"g", t.g}, {"r", t.r}, {"n", n}};
}

Tuple tuple_from_json(const json& j) {
  Tuple t;
  t.d = j.at("d").get<i64>();
  t.g = j.at("g").get<i64>();
  t.r = j.at("r").get<i64>();
  const auto& n = j.at("n");
  if (!n.is_array() || n.size() != 9)
    throw std::runtime_error("tuple n must be an array of 9 integers");
  for (size_t s = 0; s < 9; ++s) t.n.c[s] = n[s].get<i64>();
  return t;
}

json certificate_to_json_impl(const Certificate& c) {
  json sc = json::array();
  for (const SideCondition& s : c.node.side_conditions) {
    sc.push_back(
        json{{"desc", s.desc}, {"lhs", s.lhs}, {"rel", s.rel}, {"rhs", s.rhs}});
  }
  json children = json::array();
  for (const Certificate& child : c.children)
    children.push_back(certificate_to_json_impl(child));
  json node{{"tuple", tuple_to_json(c.root)},
            {"rule", rule_name(c.node.rule)},
            {"side_conditions", sc},
            {"children", children}};
  if (c.node.consumed_l != 0) node["consumed_l"] = c.node.consumed_l;
  if (c.node.consumed_m != 0) node["consumed_m"] = c.node.consumed_m;
  return node;
}

Certificate certificate_from_json_impl(const json& j) {
  Certificate c;
  c.root = tuple_from_json(j.at("tuple"));
  const std::string name = j.at("rule").get<std::string>();
  const auto id = rule_from_name(name);
  if (!id) throw std::runtime_error("unknown rule name: " + name);
  c.node.rule = *id;
  c.node.parent = c.root;
  for (const auto& s : j.at("side_conditions")) {
    SideCondition sc;
    sc.desc = s.at("desc").get<std::string>();
    sc.lhs = s.at("lhs").get<i64>();
    sc.rel = s.at("rel").get<std::string>();
    sc.rhs = s.at("rhs").get<i64>();
    sc.satisfied = true;
    c.node.side_conditions.push_back(std::move(sc));
  }
  c.node.consumed_l = j.value("consumed_l", i64{0});
  c.node.consumed_m = j.value("consumed_m", i64{0});
  for (const auto& child : j.at("children")) {
    c.children.push_back(certificate_from_json_impl(child));
    c.node.children.push_back(c.children.back().root);
  }
  return c;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
  return certificate_to_json_impl(c).dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("certificate is not valid JSON: ") +
                             e.what());
  }
  try {
    return certificate_from_json_impl(j);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("certificate document malformed: ") +
                             e.what());
  }
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return certificate_from_json(buf.str());
}

void save_certificate(const Certificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write certificate file: " + path);
  out << certificate_to_json(c) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string report_to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "d,g,r,n0,n1,n2,n3,n4,n5,n6,n7,n8,verdict,rule_path_depth\n";
  for (const SweepRow& row : report.rows) {
    os << row.t.d << "," << row.t.g << "," << row.t.r;
    for (i64 v : row.t.n.c) os << "," << v;
    const char* verdict = row.outcome == Outcome::Good ? "good"
                          : is_not_good(row.outcome)   ? "notgood"
                                                       : "unknown";
    os << "," << verdict << "," << row.depth << "\n";
  }
  return os.str();
}

Config parse_config_text(const std::string& text, const Config& defaults) {
  Config cfg = defaults;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto on_off = [&](const std::string& v) {
      if (v == "on" || v == "true" || v == "1") return true;
      if (v == "off" || v == "false" || v == "0") return false;
      throw std::runtime_error("config: bad boolean for " + key + ": " + v);
    };
    if (key == "node_budget") {
      cfg.node_budget = std::stoll(value);
    } else if (key == "base_rational") {
      cfg.base_rational = on_off(value);
    } else if (key == "rule_mode") {
      if (value == "priority") cfg.exhaustive_rules = false;
      else if (value == "exhaustive") cfg.exhaustive_rules = true;
      else throw std::runtime_error("config: rule_mode must be priority|exhaustive");
    } else if (key == "classifier_threshold") {
      if (value == "theorem") cfg.lengthened_threshold = false;
      else if (value == "lengthened") cfg.lengthened_threshold = true;
      else
        throw std::runtime_error(
            "config: classifier_threshold must be theorem|lengthened");
    } else if (key == "jobs") {
      cfg.jobs = static_cast<int>(std::stoll(value));
    } else {
      throw std::runtime_error("config: unknown key: " + key);
    }
  }
  return cfg;
}

Config load_config_file(const std::string& path, const Config& defaults) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), defaults);
}

}  // namespace interp
