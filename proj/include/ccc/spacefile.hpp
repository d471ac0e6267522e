#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccc {

enum class Section { poset, space, omega, net, query };

struct Span {
  std::size_t line = 0;
  std::size_t column = 0;
};

// {a, b} for finite sets; {a | 0, 3, 5..} for sets on F + N.
struct SetLit {
  std::vector<std::string> labels;
  bool schematic = false;
  std::vector<std::uint64_t> chain;
  std::optional<std::uint64_t> tail;
  friend bool operator==(const SetLit&, const SetLit&) = default;
};

// SET [+ kind(n) for n >= from]
struct TemplateLit {
  SetLit set;
  std::optional<std::string> param;
  std::uint64_t from = 0;
  friend bool operator==(const TemplateLit&, const TemplateLit&) = default;
};

// label above N: n <= label for n <= N; label below N: label <= n for n >= N.
// An empty value means every chain point.
struct CrossLit {
  std::string label;
  bool above = true;
  std::optional<std::uint64_t> value;
  friend bool operator==(const CrossLit&, const CrossLit&) = default;
};

// A fixed point (label) or a ramp a*n+b.
struct NetComp {
  std::optional<std::string> label;
  std::uint64_t a = 1;
  std::uint64_t b = 0;
  friend bool operator==(const NetComp&, const NetComp&) = default;
};

struct Decl {
  Section section = Section::query;
  std::string name;
  std::string form;
  std::vector<std::string> refs;
  std::vector<std::string> words;
  std::vector<std::vector<std::string>> items;
  std::vector<SetLit> sets;
  std::vector<TemplateLit> templates;
  std::vector<CrossLit> cross;
  std::vector<NetComp> net;
  std::optional<std::string> expect;
  Span span;

  // Equality up to source positions.
  bool same(const Decl& o) const;
};

struct SpaceDoc {
  std::vector<Decl> decls;
  friend bool operator==(const SpaceDoc& a, const SpaceDoc& b);
};

// Throws ParseError or ResolveError.
SpaceDoc parse(std::string_view text);

std::string print(const Decl& d);
// One canonical line per declaration, comments dropped.
std::string print(const SpaceDoc& doc);

std::string to_string(Section s);

}  // namespace ccc
