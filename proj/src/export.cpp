#include "ccc/export.hpp"

#include "ccc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ccc {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> members(const Subset& s, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(labels[i]); });
  return out;
}

Subset subset_of(const nlohmann::json& arr, const FinitePoset& order, std::size_t n) {
  Subset s(n);
  for (const auto& l : arr) {
    auto i = order.index_of(l.get<std::string>());
    if (!i) throw UnknownLabel("unknown label " + l.get<std::string>());
    s.insert(*i);
  }
  return s;
}

}  // namespace

ExportFormat parse_export_format(const std::string& s) {
  if (s == "dot") return ExportFormat::dot;
  if (s == "json") return ExportFormat::json;
  throw Unsupported("unknown export format " + s);
}

std::string export_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n";
  for (const auto& l : p.labels()) os << "  " << quote(l) << ";\n";
  const auto n = p.size();
  auto strictly = [&](std::size_t a, std::size_t b) { return p.leq(a, b) && !p.leq(b, a); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (p.leq(a, b) && p.leq(b, a)) {
        if (a < b) os << "  " << quote(p.label(a)) << " -> " << quote(p.label(b)) << " [dir=both];\n";
        continue;
      }
      if (!strictly(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = !(strictly(a, c) && strictly(c, b));
      if (cover) os << "  " << quote(p.label(a)) << " -> " << quote(p.label(b)) << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string export_dot(const FiniteTopology& t, const std::string& name) { return export_dot(t.specialization(), name); }

nlohmann::ordered_json export_json(const FinitePoset& p) {
  nlohmann::ordered_json j;
  j["kind"] = "poset";
  j["mode"] = p.mode() == OrderMode::partial ? "partial" : "pre";
  j["elements"] = p.labels();
  auto rel = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (a != b && p.leq(a, b)) rel.push_back({p.label(a), p.label(b)});
  j["order"] = rel;
  return j;
}

nlohmann::ordered_json export_json(const FiniteTopology& t, const Limits& limits) {
  nlohmann::ordered_json j;
  j["kind"] = "space";
  j["ground"] = t.labels();
  if (t.size() <= limits.max_points) {
    auto opens = nlohmann::ordered_json::array();
    for (const auto& u : t.opens(limits)) opens.push_back(members(u, t.labels()));
    j["opens"] = opens;
  } else {
    auto nb = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i) nb.push_back(members(t.nbhd(i), t.labels()));
    j["neighbourhoods"] = nb;
  }
  return j;
}

FinitePoset poset_from_json(const nlohmann::json& j) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& r : j.at("order")) pairs.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
  const auto mode = j.at("mode").get<std::string>() == "partial" ? OrderMode::partial : OrderMode::pre;
  return FinitePoset::build(j.at("elements").get<std::vector<std::string>>(), pairs, mode);
}

FiniteTopology topology_from_json(const nlohmann::json& j) {
  auto ground = j.at("ground").get<std::vector<std::string>>();
  const auto n = ground.size();
  const auto labels = FinitePoset::build(ground, {}, OrderMode::partial);
  if (j.contains("opens")) {
    std::vector<Subset> opens;
    for (const auto& u : j.at("opens")) opens.push_back(subset_of(u, labels, n));
    Limits limits;
    limits.max_points = std::max(limits.max_points, n);
    return FiniteTopology::make(std::move(ground), opens, false, limits);
  }
  std::vector<Subset> up;
  for (const auto& u : j.at("neighbourhoods")) up.push_back(subset_of(u, labels, n));
  if (up.size() != n) throw NotATopology("one neighbourhood per point expected");
  for (std::size_t i = 0; i < n; ++i)
    if (!up[i].contains(i)) throw NotATopology("neighbourhood of " + ground[i] + " misses its point");
  auto order = FinitePoset::from_up_sets(ground, up, OrderMode::pre);
  for (std::size_t i = 0; i < n; ++i)
    if (!(order.up(i) == up[i])) throw NotATopology("neighbourhoods are not transitively closed");
  return FiniteTopology::from_specialization(order);
}

std::string export_doc(const SpaceDoc& doc, ExportFormat f) {
  if (f == ExportFormat::dot) return print(doc);
  nlohmann::ordered_json j;
  auto lines = nlohmann::ordered_json::array();
  for (const auto& d : doc.decls) lines.push_back(print(d));
  j["declarations"] = lines;
  return j.dump(2) + "\n";
}

SpaceDoc import_doc(const std::string& text, ExportFormat f) {
  if (f == ExportFormat::dot) return parse(text);
  const auto j = nlohmann::json::parse(text);
  std::string joined;
  for (const auto& l : j.at("declarations")) joined += l.get<std::string>() + "\n";
  return parse(joined);
}

}  // namespace ccc
