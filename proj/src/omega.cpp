#include "ccc/omega.hpp"

#include "ccc/errors.hpp"

#include <algorithm>
#include <cctype>

namespace ccc {

// ---------------------------------------------------------------- OmegaOrder

OmegaOrder OmegaOrder::build(FinitePoset fin, std::vector<CrossThreshold> cross) {
  const auto n = fin.size();
  if (cross.size() != n) throw OrderInconsistent("one threshold record per finite element required");
  if (!fin.is_antisymmetric()) throw OrderInconsistent("finite part is not antisymmetric");
  for (const auto& l : fin.labels())
    if (!l.empty() && std::all_of(l.begin(), l.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw DuplicateLabel("finite-part label '" + l + "' collides with a chain number");
  auto meets = [](std::optional<std::uint64_t> above, std::optional<std::uint64_t> below) {
    return above && below && (*below == kAllChain || *above <= *below);
  };
  for (;;) {
    std::vector<CrossThreshold> eff(n);
    for (std::size_t f = 0; f < n; ++f) {
      fin.up(f).for_each([&](std::size_t g) {
        if (cross[g].above && (!eff[f].above || *cross[g].above < *eff[f].above)) eff[f].above = cross[g].above;
      });
      fin.down(f).for_each([&](std::size_t g) {
        if (cross[g].below && (!eff[f].below || *cross[g].below > *eff[f].below)) eff[f].below = cross[g].below;
      });
      if (meets(eff[f].above, eff[f].below))
        throw OrderInconsistent("'" + fin.label(f) + "' would lie both above and below a chain point");
    }
    std::vector<std::pair<std::string, std::string>> forced;
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g)
        if (!fin.leq(f, g) && meets(eff[f].above, eff[g].below)) forced.emplace_back(fin.label(f), fin.label(g));
    if (forced.empty()) {
      OmegaOrder o;
      o.fin_ = std::move(fin);
      o.cross_ = std::move(eff);
      return o;
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t f = 0; f < n; ++f)
      fin.up(f).for_each([&](std::size_t g) { pairs.emplace_back(fin.label(f), fin.label(g)); });
    pairs.insert(pairs.end(), forced.begin(), forced.end());
    try {
      fin = FinitePoset::build(fin.labels(), pairs, OrderMode::partial);
    } catch (const AntisymmetryViolation& e) {
      throw OrderInconsistent(std::string("chain forces a cycle: ") + e.what());
    }
  }
}

OmegaOrder OmegaOrder::omega() { return build(FinitePoset::chain(0), {}); }

OmegaOrder OmegaOrder::omega_plus_one() {
  return build(FinitePoset::build({"inf"}, {}, OrderMode::partial), {{std::nullopt, kAllChain}});
}

bool OmegaOrder::leq(OmegaPoint p, OmegaPoint q) const {
  if (p.chain && q.chain) return p.index <= q.index;
  if (!p.chain && !q.chain) return fin_.leq(p.index, q.index);
  if (!p.chain) {
    const auto& a = cross_[p.index].above;
    return a && q.index >= *a;
  }
  const auto& b = cross_[q.index].below;
  return b && (*b == kAllChain || p.index <= *b);
}

std::uint64_t OmegaOrder::horizon() const {
  std::uint64_t h = 0;
  for (const auto& c : cross_) {
    if (c.above) h = std::max(h, *c.above);
    if (c.below && *c.below != kAllChain) h = std::max(h, *c.below);
  }
  return h;
}

std::optional<std::size_t> OmegaOrder::chain_sup() const {
  for (std::size_t f = 0; f < fin_size(); ++f) {
    if (!above_chain(f)) continue;
    bool least = true;
    for (std::size_t g = 0; g < fin_size(); ++g)
      if (above_chain(g) && !fin_.leq(f, g)) least = false;
    if (least) return f;
  }
  return std::nullopt;
}

std::string OmegaOrder::label(OmegaPoint p) const {
  return p.chain ? std::to_string(p.index) : fin_.label(p.index);
}

std::optional<OmegaPoint> OmegaOrder::parse_point(const std::string& text) const {
  if (auto i = fin_.index_of(text)) return OmegaPoint::fin(*i);
  if (text.empty() || text.size() > 18 ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    return std::nullopt;
  return OmegaPoint::nat(std::stoull(text));
}

// ------------------------------------------------------------- SchematicSet

SchematicSet::SchematicSet(Subset fin, std::vector<std::uint64_t> chain, std::optional<std::uint64_t> tail)
    : fin_(std::move(fin)), chain_(std::move(chain)), tail_(tail) {
  normalize();
}

void SchematicSet::normalize() {
  std::sort(chain_.begin(), chain_.end());
  chain_.erase(std::unique(chain_.begin(), chain_.end()), chain_.end());
  if (!tail_) return;
  while (!chain_.empty() && chain_.back() >= *tail_) chain_.pop_back();
  while (*tail_ > 0 && !chain_.empty() && chain_.back() == *tail_ - 1) {
    chain_.pop_back();
    --*tail_;
  }
}

SchematicSet SchematicSet::point(std::size_t fin_width, OmegaPoint p) {
  if (p.chain) return {Subset(fin_width), {p.index}, std::nullopt};
  return {Subset::singleton(fin_width, p.index), {}, std::nullopt};
}

bool SchematicSet::contains(OmegaPoint p) const {
  if (!p.chain) return fin_.contains(p.index);
  if (tail_ && p.index >= *tail_) return true;
  return std::binary_search(chain_.begin(), chain_.end(), p.index);
}

bool SchematicSet::is_subset_of(const SchematicSet& o) const {
  if (!fin_.is_subset_of(o.fin_)) return false;
  for (auto a : chain_)
    if (!o.contains(OmegaPoint::nat(a))) return false;
  return !tail_ || (o.tail_ && *o.tail_ <= *tail_);
}

SchematicSet SchematicSet::operator|(const SchematicSet& o) const {
  std::vector<std::uint64_t> c = chain_;
  c.insert(c.end(), o.chain_.begin(), o.chain_.end());
  std::optional<std::uint64_t> t = tail_;
  if (o.tail_ && (!t || *o.tail_ < *t)) t = o.tail_;
  return {fin_ | o.fin_, std::move(c), t};
}

SchematicSet SchematicSet::operator&(const SchematicSet& o) const {
  std::vector<std::uint64_t> c;
  for (auto a : chain_)
    if (o.contains(OmegaPoint::nat(a))) c.push_back(a);
  for (auto a : o.chain_)
    if (contains(OmegaPoint::nat(a))) c.push_back(a);
  std::optional<std::uint64_t> t;
  if (tail_ && o.tail_) t = std::max(*tail_, *o.tail_);
  return {fin_ & o.fin_, std::move(c), t};
}

SchematicSet SchematicSet::complement() const {
  std::vector<std::uint64_t> c;
  const std::uint64_t end = tail_ ? *tail_ : (chain_.empty() ? 0 : chain_.back() + 1);
  for (std::uint64_t n = 0; n < end; ++n)
    if (!std::binary_search(chain_.begin(), chain_.end(), n)) c.push_back(n);
  std::optional<std::uint64_t> t;
  if (!tail_) t = end;
  return {fin_.complement(), std::move(c), t};
}

std::uint64_t SchematicSet::bound() const {
  std::uint64_t b = chain_.empty() ? 0 : chain_.back() + 1;
  if (tail_) b = std::max(b, *tail_ + 1);
  return b;
}

std::vector<OmegaPoint> SchematicSet::members(std::uint64_t k) const {
  std::vector<OmegaPoint> out;
  fin_.for_each([&](std::size_t i) { out.push_back(OmegaPoint::fin(i)); });
  for (std::uint64_t n = 0; n <= k; ++n)
    if (contains(OmegaPoint::nat(n))) out.push_back(OmegaPoint::nat(n));
  return out;
}

bool operator<(const SchematicSet& a, const SchematicSet& b) {
  if (!(a.fin_ == b.fin_)) return a.fin_ < b.fin_;
  if (a.chain_ != b.chain_) return a.chain_ < b.chain_;
  return a.tail_ < b.tail_;
}

std::string to_string(const SchematicSet& s, const OmegaOrder& order) {
  std::string fin;
  s.fin().for_each([&](std::size_t i) {
    if (!fin.empty()) fin += ", ";
    fin += order.fin().label(i);
  });
  std::string chain;
  for (auto a : s.chain()) {
    if (!chain.empty()) chain += ", ";
    chain += std::to_string(a);
  }
  if (s.tail()) {
    if (!chain.empty()) chain += ", ";
    chain += std::to_string(*s.tail()) + "..";
  }
  return "{" + fin + (fin.empty() ? "|" : " |") + (chain.empty() ? "" : " " + chain) + "}";
}

SchematicSet tabulate(const OmegaOrder& order, std::uint64_t k, const std::function<bool(OmegaPoint)>& pred) {
  Subset fin(order.fin_size());
  for (std::size_t f = 0; f < order.fin_size(); ++f)
    if (pred(OmegaPoint::fin(f))) fin.insert(f);
  std::vector<std::uint64_t> chain;
  for (std::uint64_t n = 0; n <= k; ++n)
    if (pred(OmegaPoint::nat(n))) chain.push_back(n);
  std::optional<std::uint64_t> tail;
  if (pred(OmegaPoint::nat(k + 1))) tail = k + 1;
  return {std::move(fin), std::move(chain), tail};
}

std::vector<OmegaPoint> representatives(const OmegaOrder& order, std::uint64_t k) {
  std::vector<OmegaPoint> out;
  for (std::size_t f = 0; f < order.fin_size(); ++f) out.push_back(OmegaPoint::fin(f));
  for (std::uint64_t n = 0; n <= k; ++n) out.push_back(OmegaPoint::nat(n));
  return out;
}

// ----------------------------------------------------------- SchemaTemplate

SchemaTemplate SchemaTemplate::constant(const SchematicSet& s) {
  SchemaTemplate t;
  t.fixed_fin = s.fin();
  t.fixed_chain = s.chain();
  t.tail_from = s.tail();
  return t;
}

SchematicSet SchemaTemplate::instance(const OmegaOrder& order, std::uint64_t n) const {
  SchematicSet base(fixed_fin, fixed_chain, tail_from);
  if (param == ParamKind::none) return base;
  if (n < param_from) throw std::logic_error("template instance below its parameter range");
  const auto w = order.fin_size();
  switch (param) {
    case ParamKind::up: {
      Subset fin(w);
      for (std::size_t f = 0; f < w; ++f)
        if (order.leq(OmegaPoint::nat(n), OmegaPoint::fin(f))) fin.insert(f);
      return base | SchematicSet(fin, {}, n);
    }
    case ParamKind::point: return base | SchematicSet(Subset(w), {n}, std::nullopt);
    case ParamKind::tail: return base | SchematicSet(Subset(w), {}, n);
    case ParamKind::codown: {
      Subset fin(w);
      for (std::size_t f = 0; f < w; ++f)
        if (!order.leq(OmegaPoint::fin(f), OmegaPoint::nat(n))) fin.insert(f);
      return base | SchematicSet(fin, {}, n + 1);
    }
    case ParamKind::none: break;
  }
  return base;
}

std::uint64_t SchemaTemplate::bound() const {
  std::uint64_t b = fixed_chain.empty() ? 0 : *std::max_element(fixed_chain.begin(), fixed_chain.end()) + 1;
  if (tail_from) b = std::max(b, *tail_from + 1);
  if (param != ParamKind::none) b = std::max(b, param_from + 1);
  return b;
}

std::string to_string(const SchemaTemplate& t, const OmegaOrder& order) {
  std::string s = to_string(SchematicSet(t.fixed_fin, t.fixed_chain, t.tail_from), order);
  const char* kind = nullptr;
  switch (t.param) {
    case ParamKind::none: return s;
    case ParamKind::up: kind = "up"; break;
    case ParamKind::point: kind = "point"; break;
    case ParamKind::tail: kind = "tail"; break;
    case ParamKind::codown: kind = "codown"; break;
  }
  return s + " + " + kind + "(n) for n >= " + std::to_string(t.param_from);
}

// ------------------------------------------------------------- SchematicNet

SchematicNet::SchematicNet(std::vector<NetComponent> residues) : residues_(std::move(residues)) {
  if (residues_.empty()) throw PreconditionViolated("net needs at least one residue class");
  for (const auto& r : residues_)
    if (auto* ramp = std::get_if<Ramp>(&r); ramp && ramp->a == 0)
      throw PreconditionViolated("ramp slope must be at least 1");
}

OmegaPoint SchematicNet::at(std::uint64_t i) const {
  const auto& r = residues_[i % residues_.size()];
  const auto q = i / residues_.size();
  if (auto* ramp = std::get_if<Ramp>(&r)) return OmegaPoint::nat(ramp->a * q + ramp->b);
  return std::get<OmegaPoint>(r);
}

bool SchematicNet::has_ramp() const {
  return std::any_of(residues_.begin(), residues_.end(),
                     [](const NetComponent& r) { return std::holds_alternative<Ramp>(r); });
}

bool SchematicNet::eventually_in(const SchematicSet& u) const {
  for (const auto& r : residues_) {
    if (std::holds_alternative<Ramp>(r)) {
      if (!u.tail()) return false;
    } else if (!u.contains(std::get<OmegaPoint>(r))) {
      return false;
    }
  }
  return true;
}

std::uint64_t SchematicNet::bound() const {
  std::uint64_t b = 0;
  for (const auto& r : residues_) {
    if (auto* ramp = std::get_if<Ramp>(&r)) b = std::max(b, ramp->b + 1);
    else if (std::get<OmegaPoint>(r).chain) b = std::max(b, std::get<OmegaPoint>(r).index + 1);
  }
  return b;
}

std::string to_string(const SchematicNet& n, const OmegaOrder& order) {
  std::string s = "cycle(";
  for (std::size_t i = 0; i < n.residues().size(); ++i) {
    if (i) s += ", ";
    const auto& r = n.residues()[i];
    if (auto* ramp = std::get_if<Ramp>(&r)) {
      if (ramp->a != 1) s += std::to_string(ramp->a);
      s += "n";
      if (ramp->b) s += "+" + std::to_string(ramp->b);
    } else {
      s += order.label(std::get<OmegaPoint>(r));
    }
  }
  return s + ")";
}

}  // namespace ccc
