#include "ccc/spacefile.hpp"

#include "ccc/convergence.hpp"
#include "ccc/errors.hpp"

#include <cctype>
#include <map>
#include <set>

namespace ccc {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t column = 0;
  bool glued = false;  // no whitespace before it
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  bool space_before = true;
  while (i < line.size()) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      space_before = true;
      continue;
    }
    Token t;
    t.column = i + 1;
    t.glued = !space_before;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(static_cast<unsigned char>(line[j]))) ++j;
      t.kind = Tok::ident;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      t.kind = Tok::number;
      t.text = std::string(line.substr(i, j - i));
      i = j;
    } else if (line.substr(i, 2) == ".." || line.substr(i, 2) == ">=") {
      t.kind = Tok::punct;
      t.text = std::string(line.substr(i, 2));
      i += 2;
    } else if (std::string_view("={}[](),<|;+").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = Tok::punct;
      t.text = std::string(1, static_cast<char>(c));
      ++i;
    } else {
      throw ParseError(lineno, i + 1, "a name, number or punctuation");
    }
    space_before = false;
    out.push_back(std::move(t));
  }
  Token end;
  end.column = line.size() + 1;
  out.push_back(end);
  return out;
}

std::uint64_t to_number(const std::string& s, std::size_t line, std::size_t col) {
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError(line, col, "a number that fits in 64 bits");
  }
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t line, std::map<std::string, Section>& names)
      : toks_(std::move(toks)), line_(line), names_(names) {}

  Decl parse() {
    Decl d;
    const auto& head = peek();
    d.span = {line_, head.column};
    const std::string kw = head.kind == Tok::ident ? head.text : "";
    if (kw == "poset") d.section = Section::poset;
    else if (kw == "space") d.section = Section::space;
    else if (kw == "omega") d.section = Section::omega;
    else if (kw == "net") d.section = Section::net;
    else if (kw == "query") d.section = Section::query;
    else fail("poset, space, omega, net or query");
    next();
    if (d.section == Section::query) {
      query(d);
    } else {
      const auto& n = peek();
      d.name = ident("a declaration name");
      if (names_.count(d.name)) throw ParseError(line_, n.column, "a name not declared before");
      punct("=");
      switch (d.section) {
        case Section::poset: poset(d); break;
        case Section::space: space(d); break;
        case Section::omega: omega(d); break;
        case Section::net: net(d); break;
        case Section::query: break;
      }
      names_[d.name] = d.section;
    }
    if (peek().kind != Tok::end) fail("end of line");
    return d;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const auto& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(line_, peek().column, expected); }
  bool is_punct(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }
  bool is_word(const char* w) const { return peek().kind == Tok::ident && peek().text == w; }
  void punct(const char* p) {
    if (!is_punct(p)) fail(std::string("'") + p + "'");
    next();
  }
  void keyword(const char* w) {
    if (!is_word(w)) fail(std::string("'") + w + "'");
    next();
  }
  std::string ident(const std::string& what) {
    if (peek().kind != Tok::ident) fail(what);
    return next().text;
  }
  std::string label(const std::string& what = "a point label") {
    if (peek().kind != Tok::ident && peek().kind != Tok::number) fail(what);
    return next().text;
  }
  std::uint64_t number(const std::string& what = "a number") {
    if (peek().kind != Tok::number) fail(what);
    const auto& t = next();
    return to_number(t.text, line_, t.column);
  }
  std::string op() {
    const auto& t = peek();
    if ((t.kind != Tok::ident && t.kind != Tok::number) || !parse_op(t.text))
      fail("an operation (D, D', I, I', N, N', 1, S)");
    return next().text;
  }
  std::string ref(std::initializer_list<Section> allowed, const std::string& what) {
    const auto& t = peek();
    if (t.kind != Tok::ident) fail(what);
    auto it = names_.find(t.text);
    if (it == names_.end()) throw ResolveError(line_, t.text);
    bool ok = false;
    for (auto s : allowed) ok = ok || it->second == s;
    if (!ok) fail(what);
    return next().text;
  }
  std::string any_space() { return ref({Section::space, Section::omega}, "a space name"); }

  SetLit set_lit() {
    SetLit s;
    punct("{");
    bool chain_part = false;
    bool first = true;
    for (;;) {
      if (is_punct("}")) break;
      if (is_punct("|") && !chain_part) {
        next();
        chain_part = true;
        s.schematic = true;
        first = true;
        continue;
      }
      if (!first) punct(",");
      first = false;
      if (chain_part) {
        if (s.tail) fail("'}' after a tail");
        const auto n = number("a chain number");
        if (is_punct("..")) {
          next();
          s.tail = n;
        } else {
          s.chain.push_back(n);
        }
      } else {
        s.labels.push_back(label());
      }
    }
    punct("}");
    return s;
  }

  std::vector<SetLit> family() {
    std::vector<SetLit> out;
    punct("{");
    while (!is_punct("}")) {
      if (!out.empty()) punct(",");
      out.push_back(set_lit());
    }
    punct("}");
    return out;
  }

  void poset(Decl& d) {
    if (is_word("chain") || is_word("antichain")) {
      d.form = next().text;
      d.words.push_back(std::to_string(number()));
      return;
    }
    d.form = "explicit";
    if (is_word("preorder")) {
      next();
      d.words.push_back("preorder");
    }
    punct("{");
    while (!is_punct("}")) {
      if (!d.items.empty()) punct(",");
      std::vector<std::string> item{label()};
      while (is_punct("<")) {
        next();
        item.push_back(label());
      }
      d.items.push_back(std::move(item));
    }
    punct("}");
  }

  void space(Decl& d) {
    if (is_punct("{")) {
      d.sets.push_back(set_lit());
      if (is_word("opens") || is_word("subbase")) d.form = next().text;
      else fail("'opens' or 'subbase'");
      for (auto& s : family()) d.sets.push_back(std::move(s));
      return;
    }
    d.form = ident("a space form");
    const auto& f = d.form;
    if (f == "alexandroff" || f == "upper" || f == "scott") {
      keyword("of");
      d.refs.push_back(ref({Section::poset}, "a poset name"));
    } else if (f == "discrete" || f == "indiscrete") {
      d.sets.push_back(set_lit());
    } else if (f == "sierpinski" || f == "point") {
    } else if (f == "coreflect") {
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.words.push_back(op());
    } else if (f == "product" || f == "pointwise") {
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.refs.push_back(ref({Section::space}, "a finite space name"));
    } else if (f == "tensor" || f == "exp") {
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.words.push_back(op());
    } else if (f == "stopology") {
      d.refs.push_back(ref({Section::space}, "a finite space name"));
    } else if (f == "probe") {
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.words.push_back(op());
      d.words.push_back(std::to_string(number("a generator size")));
    } else if (f == "truncate") {
      d.refs.push_back(ref({Section::omega}, "an omega space name"));
      d.words.push_back(std::to_string(number("a truncation level")));
    } else {
      fail("a space form");
    }
  }

  TemplateLit template_lit() {
    TemplateLit t;
    t.set = set_lit();
    if (is_punct("+")) {
      next();
      const auto kind = ident("up, point, tail or codown");
      if (kind != "up" && kind != "point" && kind != "tail" && kind != "codown") fail("up, point, tail or codown");
      t.param = kind;
      punct("(");
      keyword("n");
      punct(")");
      if (is_word("for")) {
        next();
        keyword("n");
        punct(">=");
        t.from = number();
      }
    }
    return t;
  }

  void omega(Decl& d) {
    d.form = ident("an omega space form");
    const auto& f = d.form;
    if (f == "beta" || f == "gamma" || f == "delta" || f == "E" || f == "scott_omega_plus_one") {
      d.words.push_back(f);
      d.form = "builtin";
    } else if (f == "alexandroff" || f == "upper" || f == "scott" || f == "weak_scott") {
      keyword("of");
      const auto o = ident("omega or omega_plus_one");
      if (o != "omega" && o != "omega_plus_one") fail("omega or omega_plus_one");
      d.words.push_back(o);
    } else if (f == "coreflect") {
      d.refs.push_back(ref({Section::omega}, "an omega space name"));
      d.words.push_back(op());
    } else if (f == "stopology") {
      d.refs.push_back(ref({Section::omega}, "an omega space name"));
    } else if (f == "custom") {
      d.refs.push_back(ref({Section::poset}, "a poset name"));
      keyword("cross");
      punct("{");
      while (!is_punct("}")) {
        if (!d.cross.empty()) punct(",");
        CrossLit c;
        c.label = label();
        if (is_word("above")) c.above = true;
        else if (is_word("below")) c.above = false;
        else fail("'above' or 'below'");
        next();
        if (is_word("all")) next();
        else c.value = number("a number or 'all'");
        d.cross.push_back(std::move(c));
      }
      punct("}");
      keyword("base");
      punct("[");
      while (!is_punct("]")) {
        if (!d.templates.empty()) punct(";");
        d.templates.push_back(template_lit());
      }
      punct("]");
      if (is_word("compatible")) {
        next();
        d.words.push_back("compatible");
      }
    } else {
      fail("an omega space form");
    }
  }

  NetComp net_comp() {
    NetComp c;
    if (is_word("n")) {
      next();
      c.a = 1;
    } else if (peek().kind == Tok::number && peek(1).kind == Tok::ident && peek(1).text == "n" && peek(1).glued) {
      c.a = number();
      if (c.a == 0) fail("a slope of at least 1");
      next();
    } else {
      c.label = label("a point or a ramp such as 2n+1");
      return c;
    }
    if (is_punct("+")) {
      next();
      c.b = number();
    }
    return c;
  }

  void net(Decl& d) {
    d.form = ident("cycle, set, tail or directed");
    if (d.form == "cycle") {
      punct("(");
      d.net.push_back(net_comp());
      while (is_punct(",")) {
        next();
        d.net.push_back(net_comp());
      }
      punct(")");
    } else if (d.form == "set" || d.form == "tail" || d.form == "directed") {
      d.sets.push_back(set_lit());
    } else {
      fail("cycle, set, tail or directed");
    }
  }

  void query(Decl& d) {
    d.form = ident("a query command");
    const auto& f = d.form;
    if (f == "validate" || f == "suite") {
    } else if (f == "coreflect" || f == "determined") {
      d.refs.push_back(any_space());
      d.words.push_back(op());
    } else if (f == "compare") {
      d.refs.push_back(any_space());
      d.refs.push_back(any_space());
    } else if (f == "open") {
      d.refs.push_back(any_space());
      d.sets.push_back(set_lit());
    } else if (f == "converges" || f == "sclass") {
      d.refs.push_back(any_space());
      d.refs.push_back(ref({Section::net}, "a net name"));
      d.words.push_back(label());
    } else if (f == "el") {
      d.refs.push_back(any_space());
      d.refs.push_back(ref({Section::net}, "a net name"));
    } else if (f == "product") {
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.refs.push_back(ref({Section::space}, "a finite space name"));
    } else if (f == "tensor" || f == "exp") {
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.words.push_back(op());
    } else if (f == "laws") {
      for (int i = 0; i < 3; ++i) d.refs.push_back(ref({Section::space}, "a finite space name"));
      d.words.push_back(op());
    } else if (f == "cspace") {
      d.refs.push_back(any_space());
    } else if (f == "upper_bound") {
      d.refs.push_back(ref({Section::omega}, "an omega space name"));
      d.sets.push_back(set_lit());
    } else if (f == "export") {
      d.refs.push_back(ref({Section::poset, Section::space, Section::omega}, "a poset or space name"));
      const auto fmt = ident("dot or json");
      if (fmt != "dot" && fmt != "json") fail("dot or json");
      d.words.push_back(fmt);
    } else {
      fail("a query command");
    }
    if (is_word("expect")) {
      next();
      std::string e;
      while (peek().kind != Tok::end) {
        if (!e.empty()) e += " ";
        e += next().text;
      }
      if (e.empty()) fail("an expected value");
      d.expect = e;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::map<std::string, Section>& names_;
};

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string print_set(const SetLit& s) {
  std::string out = "{" + join(s.labels, ", ");
  if (s.schematic) {
    out += s.labels.empty() ? "|" : " |";
    std::vector<std::string> parts;
    for (auto n : s.chain) parts.push_back(std::to_string(n));
    if (s.tail) parts.push_back(std::to_string(*s.tail) + "..");
    if (!parts.empty()) out += " " + join(parts, ", ");
  }
  return out + "}";
}

std::string print_template(const TemplateLit& t) {
  std::string out = print_set(t.set);
  if (t.param) out += " + " + *t.param + "(n) for n >= " + std::to_string(t.from);
  return out;
}

std::string print_comp(const NetComp& c) {
  if (c.label) return *c.label;
  std::string out = c.a == 1 ? "n" : std::to_string(c.a) + "n";
  if (c.b) out += "+" + std::to_string(c.b);
  return out;
}

}  // namespace

std::string to_string(Section s) {
  switch (s) {
    case Section::poset: return "poset";
    case Section::space: return "space";
    case Section::omega: return "omega";
    case Section::net: return "net";
    case Section::query: return "query";
  }
  return "query";
}

bool Decl::same(const Decl& o) const {
  return section == o.section && name == o.name && form == o.form && refs == o.refs && words == o.words &&
         items == o.items && sets == o.sets && templates == o.templates && cross == o.cross && net == o.net &&
         expect == o.expect;
}

bool operator==(const SpaceDoc& a, const SpaceDoc& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::size_t i = 0; i < a.decls.size(); ++i)
    if (!a.decls[i].same(b.decls[i])) return false;
  return true;
}

SpaceDoc parse(std::string_view text) {
  SpaceDoc doc;
  std::map<std::string, Section> names;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++lineno;
    auto toks = tokenize(line, lineno);
    if (toks.size() > 1) doc.decls.push_back(LineParser(std::move(toks), lineno, names).parse());
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return doc;
}

std::string print(const Decl& d) {
  std::string out = to_string(d.section) + " ";
  if (d.section != Section::query) out += d.name + " = ";
  const auto& f = d.form;
  std::vector<std::string> parts;
  if (d.section == Section::poset) {
    if (f == "explicit") {
      std::vector<std::string> items;
      for (const auto& it : d.items) items.push_back(join(it, " < "));
      out += (d.words.empty() ? "" : "preorder ") + std::string("{") + join(items, ", ") + "}";
    } else {
      out += f + " " + d.words[0];
    }
    return out;
  }
  if (d.section == Section::space && (f == "opens" || f == "subbase")) {
    std::vector<std::string> fam;
    for (std::size_t i = 1; i < d.sets.size(); ++i) fam.push_back(print_set(d.sets[i]));
    return out + print_set(d.sets[0]) + " " + f + " {" + join(fam, ", ") + "}";
  }
  if (d.section == Section::omega && f == "builtin") return out + d.words[0];
  if (d.section == Section::omega && f == "custom") {
    std::vector<std::string> cross, base;
    for (const auto& c : d.cross)
      cross.push_back(c.label + (c.above ? " above " : " below ") + (c.value ? std::to_string(*c.value) : "all"));
    for (const auto& t : d.templates) base.push_back(print_template(t));
    out += "custom " + d.refs[0] + " cross {" + join(cross, ", ") + "} base [" + join(base, "; ") + "]";
    if (!d.words.empty()) out += " compatible";
    return out;
  }
  if (d.section == Section::net && f == "cycle") {
    std::vector<std::string> comps;
    for (const auto& c : d.net) comps.push_back(print_comp(c));
    return out + "cycle(" + join(comps, ", ") + ")";
  }
  const bool of_form = (d.section == Section::space || d.section == Section::omega) &&
                       (f == "alexandroff" || f == "upper" || f == "scott" || f == "weak_scott");
  parts.push_back(f);
  if (of_form) parts.push_back("of");
  for (const auto& r : d.refs) parts.push_back(r);
  for (const auto& w : d.words) parts.push_back(w);
  for (const auto& s : d.sets) parts.push_back(print_set(s));
  if (d.expect) parts.push_back("expect " + *d.expect);
  return out + join(parts, " ");
}

std::string print(const SpaceDoc& doc) {
  std::string out;
  for (const auto& d : doc.decls) out += print(d) + "\n";
  return out;
}

}  // namespace ccc
