#include "ccc/runner.hpp"

#include "ccc/category.hpp"
#include "ccc/cspace.hpp"
#include "ccc/enumerate.hpp"
#include "ccc/errors.hpp"
#include "ccc/omega_topology.hpp"
#include "ccc/report.hpp"
#include "ccc/suite.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <variant>

namespace ccc {

namespace {

using Value = std::variant<FinitePoset, FiniteTopology, OmegaTopology, Decl>;

struct Outcome {
  std::string value;
  std::string detail;
  std::optional<std::string> default_expect;
};

class Env {
 public:
  explicit Env(const RunOptions& o) : opts_(o) {}

  void declare(const Decl& d) { values_.insert_or_assign(d.name, evaluate(d)); }
  Outcome query(const Decl& d);

  template <class T>
  const T& get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw PreconditionViolated("'" + name + "' failed to evaluate");
    if (const auto* v = std::get_if<T>(&it->second)) return *v;
    throw PreconditionViolated("'" + name + "' has the wrong kind here");
  }
  bool is_finite(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw PreconditionViolated("'" + name + "' failed to evaluate");
    return std::holds_alternative<FiniteTopology>(it->second);
  }
  const Value* find(const std::string& name) const {
    auto it = values_.find(name);
    return it == values_.end() ? nullptr : &it->second;
  }

 private:
  Value evaluate(const Decl& d);
  Value evaluate_space(const Decl& d);
  Value evaluate_omega(const Decl& d);

  const RunOptions& opts_;
  std::map<std::string, Value> values_;
};

Op op_of(const std::string& w) { return *parse_op(w); }

std::size_t point_of(const FiniteTopology& x, const std::string& l) {
  auto i = x.index_of(l);
  if (!i) throw UnknownLabel("unknown point " + l);
  return *i;
}

OmegaPoint point_of(const OmegaTopology& x, const std::string& l) {
  auto p = x.order().parse_point(l);
  if (!p) throw UnknownLabel("unknown point " + l);
  return *p;
}

Subset finite_set(const std::vector<std::string>& labels, const SetLit& s) {
  if (s.schematic) throw PreconditionViolated("finite set expected, found a set with a chain part");
  Subset out(labels.size());
  for (const auto& l : s.labels) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw UnknownLabel("unknown point " + l);
    out.insert(static_cast<std::size_t>(it - labels.begin()));
  }
  return out;
}

SchematicSet omega_set(const OmegaOrder& order, const SetLit& s) {
  Subset fin(order.fin_size());
  for (const auto& l : s.labels) {
    auto i = order.fin().index_of(l);
    if (!i) throw UnknownLabel("unknown finite-part point " + l);
    fin.insert(*i);
  }
  return {fin, s.chain, s.tail};
}

SchematicNet omega_net(const OmegaTopology& x, const Decl& d) {
  if (d.form != "cycle") throw Unsupported("net '" + d.name + "' is not a schematic net");
  std::vector<NetComponent> comps;
  for (const auto& c : d.net) {
    if (c.label) comps.push_back(point_of(x, *c.label));
    else comps.push_back(Ramp{c.a, c.b});
  }
  return SchematicNet(std::move(comps));
}

OmegaNet omega_any_net(const OmegaTopology& x, const Decl& d) {
  if (d.form == "set") return omega_set(x.order(), d.sets[0]);
  return omega_net(x, d);
}

FiniteNet finite_net(const FiniteTopology& x, const Decl& d) {
  if (d.form == "tail") return FiniteNet::tail(finite_set(x.labels(), d.sets[0]));
  if (d.form == "directed") return FiniteNet::directed(x.specialization(), finite_set(x.labels(), d.sets[0]));
  throw Unsupported("net '" + d.name + "' is not a net on a finite space");
}

std::string finite_verdict(const FiniteTopology& a, const FiniteTopology& b, const Limits& limits,
                           std::string* witness) {
  if (a == b) return to_string(Comparison::equal);
  auto first_missing = [&](const FiniteTopology& s, const FiniteTopology& t) -> std::optional<Subset> {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!t.is_open(s.nbhd(i))) return s.nbhd(i);
    return std::nullopt;
  };
  (void)limits;
  const auto ab = first_missing(a, b);
  const auto ba = first_missing(b, a);
  if (ab) *witness = format_subset(*ab, a.labels());
  else if (ba) *witness = format_subset(*ba, b.labels());
  if (ab && ba) return to_string(Comparison::incomparable);
  return to_string(ab ? Comparison::finer : Comparison::coarser);
}

std::string describe_omega(const OmegaTopology& t) {
  std::string out = t.description();
  if (t.model().extraction_failure) return out + "; base extraction incomplete: " + *t.model().extraction_failure;
  out += t.generators_form_base() ? "; base:" : "; subbase:";
  for (const auto& g : t.generators()) out += "\n  " + to_string(g, t.order());
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Expectations are token sequences, so whitespace is not significant.
bool matches(const std::string& expected, const std::string& value) {
  auto squash = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
  };
  return squash(expected) == squash(value);
}

Value Env::evaluate(const Decl& d) {
  switch (d.section) {
    case Section::poset: {
      if (d.form == "chain") return FinitePoset::chain(std::stoul(d.words[0]));
      if (d.form == "antichain") return FinitePoset::antichain(std::stoul(d.words[0]));
      std::vector<std::string> labels;
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& item : d.items)
        for (std::size_t i = 0; i < item.size(); ++i) {
          if (std::find(labels.begin(), labels.end(), item[i]) == labels.end()) labels.push_back(item[i]);
          if (i) pairs.emplace_back(item[i - 1], item[i]);
        }
      return FinitePoset::build(labels, pairs, d.words.empty() ? OrderMode::partial : OrderMode::pre);
    }
    case Section::space: return evaluate_space(d);
    case Section::omega: return evaluate_omega(d);
    case Section::net: return d;
    case Section::query: break;
  }
  throw Unsupported("queries are not values");
}

Value Env::evaluate_space(const Decl& d) {
  const auto& f = d.form;
  const auto& L = opts_.limits;
  if (f == "opens" || f == "subbase") {
    const auto& ground = d.sets[0].labels;
    std::vector<Subset> family;
    for (std::size_t i = 1; i < d.sets.size(); ++i) family.push_back(finite_set(ground, d.sets[i]));
    return FiniteTopology::make(ground, family, f == "subbase", L);
  }
  if (f == "alexandroff") return order_topology(get<FinitePoset>(d.refs[0]), OrderTopology::alexandroff, L);
  if (f == "upper") return order_topology(get<FinitePoset>(d.refs[0]), OrderTopology::upper, L);
  if (f == "scott") return order_topology(get<FinitePoset>(d.refs[0]), OrderTopology::scott, L);
  if (f == "discrete") return FiniteTopology::discrete(d.sets[0].labels);
  if (f == "indiscrete") return FiniteTopology::indiscrete(d.sets[0].labels);
  if (f == "sierpinski") return FiniteTopology::sierpinski();
  if (f == "point") return FiniteTopology::point();
  if (f == "truncate") return truncate(get<OmegaTopology>(d.refs[0]), std::stoull(d.words[0]));
  const auto& x = get<FiniteTopology>(d.refs[0]);
  if (f == "coreflect") return coreflect(x, op_of(d.words[0]), L);
  if (f == "stopology") return s_topology(x);
  if (f == "probe") return probe_generated(x, op_of(d.words[0]), std::stoul(d.words[1]), L);
  const auto& y = get<FiniteTopology>(d.refs[1]);
  if (f == "product") return product(x, y);
  if (f == "pointwise") return pointwise_space(x, y, L);
  if (f == "tensor") return tensor(x, y, op_of(d.words[0]), L);
  if (f == "exp") return exponential(x, y, op_of(d.words[0]), L);
  throw Unsupported("unknown space form " + f);
}

Value Env::evaluate_omega(const Decl& d) {
  const auto& f = d.form;
  if (f == "builtin") {
    const auto& b = d.words[0];
    if (b == "beta") return OmegaTopology::of(OmegaSpace::beta());
    if (b == "gamma") return OmegaTopology::of(OmegaSpace::gamma());
    if (b == "delta") return OmegaTopology::of(OmegaSpace::delta());
    if (b == "E") return OmegaTopology::of(OmegaSpace::example_E());
    return OmegaTopology::of(OmegaSpace::scott_omega_plus_one());
  }
  if (f == "coreflect") return coreflect_omega(get<OmegaTopology>(d.refs[0]), op_of(d.words[0]));
  if (f == "stopology") return s_topology(get<OmegaTopology>(d.refs[0]));
  if (f == "custom") {
    const auto& fin = get<FinitePoset>(d.refs[0]);
    std::vector<CrossThreshold> cross(fin.size());
    for (const auto& c : d.cross) {
      auto i = fin.index_of(c.label);
      if (!i) throw UnknownLabel("unknown finite-part point " + c.label);
      // "f above k": n <= f for n <= k; "f below k": f <= n for n >= k.
      if (c.above) cross[*i].below = c.value.value_or(kAllChain);
      else cross[*i].above = c.value.value_or(0);
    }
    auto order = OmegaOrder::build(fin, cross);
    std::vector<SchemaTemplate> base;
    for (const auto& t : d.templates) {
      SchemaTemplate s = SchemaTemplate::constant(omega_set(order, t.set));
      if (t.param) {
        const auto& p = *t.param;
        s.param = p == "up" ? ParamKind::up : p == "point" ? ParamKind::point : p == "tail" ? ParamKind::tail
                                                                                              : ParamKind::codown;
        s.param_from = t.from;
      }
      base.push_back(std::move(s));
    }
    return OmegaTopology::of(OmegaSpace::build(order, base, !d.words.empty()));
  }
  const auto order = d.words[0] == "omega" ? OmegaOrder::omega() : OmegaOrder::omega_plus_one();
  if (f == "alexandroff") return order_topology_omega(order, OmegaOrderTopology::alexandroff);
  if (f == "upper") return order_topology_omega(order, OmegaOrderTopology::upper);
  if (f == "scott") return order_topology_omega(order, OmegaOrderTopology::scott);
  return order_topology_omega(order, OmegaOrderTopology::weak_scott);
}

Outcome Env::query(const Decl& d) {
  const auto& f = d.form;
  const auto& L = opts_.limits;
  if (f == "coreflect" || f == "determined") {
    const auto op = op_of(d.words[0]);
    if (is_finite(d.refs[0])) {
      const auto& x = get<FiniteTopology>(d.refs[0]);
      const auto p = coreflect(x, op, L);
      std::string witness;
      const auto v = finite_verdict(p, x, L, &witness);
      if (f == "determined") return {bool_text(p == x), "", std::nullopt};
      return {v, describe(p) + (witness.empty() ? "" : "\nwitness " + witness), std::nullopt};
    }
    const auto& x = get<OmegaTopology>(d.refs[0]);
    const auto p = coreflect_omega(x, op);
    const auto c = compare(p, x);
    if (f == "determined") return {bool_text(c.verdict == Comparison::equal), "", std::nullopt};
    std::string detail = describe_omega(p);
    if (c.witness) detail += "\nwitness " + to_string(*c.witness, x.order());
    return {to_string(c.verdict), detail, std::nullopt};
  }
  if (f == "compare") {
    const bool fa = is_finite(d.refs[0]), fb = is_finite(d.refs[1]);
    if (fa != fb) throw PreconditionViolated("cannot compare a finite space with an omega space");
    if (fa) {
      const auto& a = get<FiniteTopology>(d.refs[0]);
      const auto& b = get<FiniteTopology>(d.refs[1]);
      if (a.labels() != b.labels()) throw PreconditionViolated("spaces have different grounds");
      std::string witness;
      const auto v = finite_verdict(a, b, L, &witness);
      return {v, witness.empty() ? "" : "witness " + witness, std::nullopt};
    }
    const auto& a = get<OmegaTopology>(d.refs[0]);
    const auto& b = get<OmegaTopology>(d.refs[1]);
    const auto c = compare(a, b);
    return {to_string(c.verdict), c.witness ? "witness " + to_string(*c.witness, a.order()) : "", std::nullopt};
  }
  if (f == "open") {
    if (is_finite(d.refs[0])) {
      const auto& x = get<FiniteTopology>(d.refs[0]);
      return {bool_text(x.is_open(finite_set(x.labels(), d.sets[0]))), "", std::nullopt};
    }
    const auto& x = get<OmegaTopology>(d.refs[0]);
    return {bool_text(x.is_open(omega_set(x.order(), d.sets[0]))), "", std::nullopt};
  }
  if (f == "converges" || f == "sclass" || f == "el") {
    const auto& net = get<Decl>(d.refs[1]);
    if (is_finite(d.refs[0])) {
      const auto& x = get<FiniteTopology>(d.refs[0]);
      const auto n = finite_net(x, net);
      if (f == "el") return {format_subset(eventual_lower_bounds(x, n), x.labels()), "", std::nullopt};
      const auto p = point_of(x, d.words[0]);
      return {bool_text(f == "converges" ? converges(x, n, p) : in_s_class(x, n, p)), "", std::nullopt};
    }
    const auto& x = get<OmegaTopology>(d.refs[0]);
    if (f == "el") return {to_string(eventual_lower_bounds(x, omega_net(x, net)), x.order()), "", std::nullopt};
    const auto p = point_of(x, d.words[0]);
    if (f == "converges") return {bool_text(converges(x, omega_any_net(x, net), p)), "", std::nullopt};
    return {bool_text(in_s_class(x, omega_net(x, net), p)), "", std::nullopt};
  }
  if (f == "product" || f == "tensor" || f == "exp") {
    const auto& x = get<FiniteTopology>(d.refs[0]);
    const auto& y = get<FiniteTopology>(d.refs[1]);
    const auto t = f == "product" ? product(x, y)
                   : f == "tensor" ? tensor(x, y, op_of(d.words[0]), L)
                                   : exponential(x, y, op_of(d.words[0]), L);
    return {std::to_string(t.size()) + " points", describe(t), std::nullopt};
  }
  if (f == "laws") {
    const auto& x = get<FiniteTopology>(d.refs[0]);
    const auto& y = get<FiniteTopology>(d.refs[1]);
    const auto& z = get<FiniteTopology>(d.refs[2]);
    const auto op = op_of(d.words[0]);
    std::vector<LawReport> reports{check_exponential_law(x, y, z, op, L), check_product_universal(x, y, op, 2, L),
                                   check_coreflection_universal(x, op, enumerate_spaces_up_to(2, false), L),
                                   check_order_agreement(x, y, op, L)};
    if (x.is_t0() && y.is_t0() && z.is_t0()) {
      reports.push_back(check_separate_continuity(x, y, z, L));
      reports.push_back(check_T0_preservation(x, y, op, L));
    }
    std::string detail;
    for (const auto& r : reports) detail += (detail.empty() ? "" : "\n") + to_text(r);
    return {suite_passed(reports) ? "pass" : "fail", detail, "pass"};
  }
  if (f == "cspace") {
    const auto v = is_finite(d.refs[0]) ? is_c_space(get<FiniteTopology>(d.refs[0]))
                                        : is_c_space(get<OmegaTopology>(d.refs[0]));
    std::string detail;
    if (!v.c_space) detail = "failing point " + *v.point + ", neighbourhood " + *v.neighbourhood;
    return {bool_text(v.c_space), detail, std::nullopt};
  }
  if (f == "upper_bound") {
    const auto& x = get<OmegaTopology>(d.refs[0]);
    return {bool_text(has_upper_bound(x.order(), omega_set(x.order(), d.sets[0]))), "", std::nullopt};
  }
  if (f == "suite") {
    SuiteOptions so;
    so.seed = opts_.seed;
    so.limits = L;
    const auto reports = run_suite(so);
    std::string detail;
    for (const auto& r : reports) detail += (detail.empty() ? "" : "\n") + to_text(r);
    return {suite_passed(reports) ? "pass" : "fail", detail, "pass"};
  }
  if (f == "export") {
    const auto fmt = parse_export_format(d.words[0]);
    const auto* v = find(d.refs[0]);
    if (!v) throw PreconditionViolated("'" + d.refs[0] + "' failed to evaluate");
    if (const auto* p = std::get_if<FinitePoset>(v))
      return {"", fmt == ExportFormat::dot ? export_dot(*p, d.refs[0]) : export_json(*p).dump(), std::nullopt};
    if (const auto* t = std::get_if<FiniteTopology>(v))
      return {"", fmt == ExportFormat::dot ? export_dot(*t, d.refs[0]) : export_json(*t, L).dump(), std::nullopt};
    throw Unsupported("export supports finite posets and spaces");
  }
  throw Unsupported("unknown query " + f);
}

void indent_into(std::ostringstream& os, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) os << "    " << line << "\n";
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

bool RunReport::passed() const {
  for (const auto& e : entries)
    if (e.status != Status::pass) return false;
  return true;
}

std::string RunReport::text() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& e : entries) {
    ok += e.status == Status::pass;
    os << "line " << e.line << ": " << e.command;
    if (!e.value.empty()) os << " -> " << e.value;
    os << " [" << to_string(e.status) << "]\n";
    if (!e.detail.empty()) indent_into(os, e.detail);
  }
  for (const auto& x : exports) {
    os << "export " << x.name << ":\n";
    indent_into(os, x.text);
  }
  os << ok << "/" << entries.size() << " passed\n";
  return os.str();
}

nlohmann::ordered_json RunReport::json() const {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json x;
    x["line"] = e.line;
    x["command"] = e.command;
    x["status"] = to_string(e.status);
    x["value"] = e.value;
    x["detail"] = e.detail;
    arr.push_back(x);
  }
  j["entries"] = arr;
  if (!exports.empty()) {
    auto ex = nlohmann::ordered_json::array();
    for (const auto& x : exports) ex.push_back({{"name", x.name}, {"text", x.text}});
    j["exports"] = ex;
  }
  j["passed"] = passed();
  return j;
}

RunReport run(const SpaceDoc& doc, const RunOptions& options) {
  RunReport report;
  Env env(options);
  std::size_t declared = 0, failed = 0;
  for (const auto& d : doc.decls) {
    QueryResult r;
    r.line = d.span.line;
    r.command = print(d);
    if (d.section != Section::query) {
      try {
        env.declare(d);
        ++declared;
        if (options.export_format) {
          const auto* v = env.find(d.name);
          const bool dot = *options.export_format == ExportFormat::dot;
          if (const auto* p = std::get_if<FinitePoset>(v))
            report.exports.push_back({d.name, dot ? export_dot(*p, d.name) : export_json(*p).dump()});
          else if (const auto* t = std::get_if<FiniteTopology>(v))
            report.exports.push_back(
                {d.name, dot ? export_dot(*t, d.name) : export_json(*t, options.limits).dump()});
        }
      } catch (const std::exception& e) {
        ++failed;
        r.status = Status::error;
        r.detail = e.what();
        report.entries.push_back(std::move(r));
      }
      continue;
    }
    if (d.form == "validate") {
      r.value = failed ? "invalid" : "valid";
      r.detail = std::to_string(declared) + " declarations evaluated, " + std::to_string(failed) + " failed";
      r.status = failed ? Status::fail : Status::pass;
      if (d.expect) r.status = matches(*d.expect, r.value) ? Status::pass : Status::fail;
      report.entries.push_back(std::move(r));
      continue;
    }
    try {
      auto out = env.query(d);
      r.value = out.value;
      r.detail = out.detail;
      const auto expected = d.expect ? d.expect : out.default_expect;
      r.status = !expected || matches(*expected, out.value) ? Status::pass : Status::fail;
      if (r.status == Status::fail && d.expect) r.detail += (r.detail.empty() ? "" : "\n") + ("expected " + *d.expect);
    } catch (const std::exception& e) {
      r.status = Status::error;
      r.detail = e.what();
    }
    report.entries.push_back(std::move(r));
  }
  return report;
}

}  // namespace ccc
