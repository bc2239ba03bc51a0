// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/dsl.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/circle.hpp"
#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

// Parsed document node. Every node remembers the line and column of its
// first character so diagnostics can point at the offending token.
struct Json {
  enum class Kind { object, array, string, integer, real, boolean, null_value };
  struct Member;
  Kind kind = Kind::null_value;
  int line = 1;
  int col = 1;
  std::string str;
  std::int64_t int_value = 0;
  double real_value = 0.0;
  bool bool_value = false;
  std::vector<Member> members;
  std::vector<Json> items;
};

struct Json::Member {
  std::string key;
  int line = 1;
  int col = 1;
  Json value;
};

[[noreturn]] void fail_at(int line, int col, ErrorKind kind, const std::string& msg) {
  fail(kind, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

// Recursive-descent JSON reader. The grammar is standard JSON; strictness
// beyond the grammar (unknown keys, enum values) lives in the validators.
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Json parse_document() {
    skip_ws();
    if (eof()) fail_here("empty document");
    Json v = parse_value();
    skip_ws();
    if (!eof()) fail_here("trailing content after the document");
    return v;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
        take();
      else
        break;
    }
  }

  [[noreturn]] void fail_here(const std::string& msg) const {
    fail_at(line_, col_, ErrorKind::syntax_error, msg);
  }

  void expect(char c) {
    if (eof() || peek() != c)
      fail_here(std::string("expected '") + c + "'");
    take();
  }

  void expect_literal(const char* word) {
    for (const char* p = word; *p; ++p) {
      if (eof() || peek() != *p) fail_here(std::string("malformed literal, expected '") + word + "'");
      take();
    }
  }

  Json parse_value() {
    skip_ws();
    if (eof()) fail_here("unexpected end of document");
    char c = peek();
    switch (c) {
      case '{': return parse_object();
      case '[': return parse_array();
      case '"': return parse_string_value();
      case 't': {
        Json v;
        v.kind = Json::Kind::boolean;
        v.line = line_;
        v.col = col_;
        expect_literal("true");
        v.bool_value = true;
        return v;
      }
      case 'f': {
        Json v;
        v.kind = Json::Kind::boolean;
        v.line = line_;
        v.col = col_;
        expect_literal("false");
        v.bool_value = false;
        return v;
      }
      case 'n': {
        Json v;
        v.line = line_;
        v.col = col_;
        expect_literal("null");
        return v;
      }
      default:
        if (c == '-' || (c >= '0' && c <= '9')) return parse_number();
        fail_here("unexpected character");
    }
  }

  Json parse_object() {
    Json v;
    v.kind = Json::Kind::object;
    v.line = line_;
    v.col = col_;
    expect('{');
    skip_ws();
    if (!eof() && peek() == '}') {
      take();
      return v;
    }
    while (true) {
      skip_ws();
      int kl = line_, kc = col_;
      if (eof() || peek() != '"') fail_here("expected a quoted key");
      std::string key = parse_string_raw();
      for (const auto& m : v.members)
        if (m.key == key) fail_at(kl, kc, ErrorKind::syntax_error, "duplicate key '" + key + "'");
      skip_ws();
      expect(':');
      Json val = parse_value();
      v.members.push_back({std::move(key), kl, kc, std::move(val)});
      skip_ws();
      if (eof()) fail_here("unterminated object");
      if (peek() == ',') {
        take();
        continue;
      }
      expect('}');
      break;
    }
    return v;
  }

  Json parse_array() {
    Json v;
    v.kind = Json::Kind::array;
    v.line = line_;
    v.col = col_;
    expect('[');
    skip_ws();
    if (!eof() && peek() == ']') {
      take();
      return v;
    }
    while (true) {
      v.items.push_back(parse_value());
      skip_ws();
      if (eof()) fail_here("unterminated array");
      if (peek() == ',') {
        take();
        continue;
      }
      expect(']');
      break;
    }
    return v;
  }

  Json parse_string_value() {
    Json v;
    v.kind = Json::Kind::string;
    v.line = line_;
    v.col = col_;
    v.str = parse_string_raw();
    return v;
  }

  unsigned hex4() {
    unsigned value = 0;
    for (int i = 0; i < 4; ++i) {
      if (eof()) fail_here("unterminated \\u escape");
      char c = take();
      value <<= 4;
      if (c >= '0' && c <= '9')
        value |= static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f')
        value |= static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        value |= static_cast<unsigned>(c - 'A' + 10);
      else
        fail_here("invalid hex digit in \\u escape");
    }
    return value;
  }

  void append_utf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  std::string parse_string_raw() {
    expect('"');
    std::string out;
    while (true) {
      if (eof()) fail_here("unterminated string");
      char c = take();
      if (c == '"') break;
      if (static_cast<unsigned char>(c) < 0x20) fail_here("unescaped control character in string");
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (eof()) fail_here("unterminated escape");
      char e = take();
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case '/': out.push_back('/'); break;
        case 'b': out.push_back('\b'); break;
        case 'f': out.push_back('\f'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 't': out.push_back('\t'); break;
        case 'u': {
          unsigned cp = hex4();
          if (cp >= 0xD800 && cp <= 0xDBFF) {
            if (eof() || peek() != '\\') fail_here("unpaired surrogate in \\u escape");
            take();
            if (eof() || peek() != 'u') fail_here("unpaired surrogate in \\u escape");
            take();
            unsigned lo = hex4();
            if (lo < 0xDC00 || lo > 0xDFFF) fail_here("invalid low surrogate in \\u escape");
            cp = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
          } else if (cp >= 0xDC00 && cp <= 0xDFFF) {
            fail_here("unpaired surrogate in \\u escape");
          }
          append_utf8(out, cp);
          break;
        }
        default: fail_here("unknown escape sequence");
      }
    }
    return out;
  }

  Json parse_number() {
    Json v;
    v.line = line_;
    v.col = col_;
    std::string text;
    bool is_real = false;
    if (!eof() && peek() == '-') text.push_back(take());
    if (eof() || peek() < '0' || peek() > '9') fail_here("malformed number");
    while (!eof() && peek() >= '0' && peek() <= '9') text.push_back(take());
    if (!eof() && peek() == '.') {
      is_real = true;
      text.push_back(take());
      if (eof() || peek() < '0' || peek() > '9') fail_here("malformed number");
      while (!eof() && peek() >= '0' && peek() <= '9') text.push_back(take());
    }
    if (!eof() && (peek() == 'e' || peek() == 'E')) {
      is_real = true;
      text.push_back(take());
      if (!eof() && (peek() == '+' || peek() == '-')) text.push_back(take());
      if (eof() || peek() < '0' || peek() > '9') fail_here("malformed number");
      while (!eof() && peek() >= '0' && peek() <= '9') text.push_back(take());
    }
    if (is_real) {
      v.kind = Json::Kind::real;
      v.real_value = std::strtod(text.c_str(), nullptr);
    } else {
      v.kind = Json::Kind::integer;
      errno = 0;
      char* end = nullptr;
      long long parsed = std::strtoll(text.c_str(), &end, 10);
      if (errno != 0 || end == text.c_str() || *end != '\0')
        fail_at(v.line, v.col, ErrorKind::syntax_error, "integer out of range");
      v.int_value = parsed;
    }
    return v;
  }
};

// ---- validation helpers ----------------------------------------------------

const Json* find_member(const Json& obj, const std::string& key) {
  for (const auto& m : obj.members)
    if (m.key == key) return &m.value;
  return nullptr;
}

const Json& as_object(const Json& j, const std::string& what) {
  if (j.kind != Json::Kind::object)
    fail_at(j.line, j.col, ErrorKind::syntax_error, what + " must be an object");
  return j;
}

const Json& need(const Json& obj, const std::string& key, const std::string& what) {
  const Json* v = find_member(obj, key);
  if (!v) fail_at(obj.line, obj.col, ErrorKind::syntax_error, "missing key '" + key + "' in " + what);
  return *v;
}

int edit_distance(const std::string& a, const std::string& b) {
  std::vector<int> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      int next = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

std::string suggest(const std::string& name, const std::vector<std::string>& candidates) {
  std::string best;
  int best_d = 1 + std::max<int>(2, static_cast<int>(name.size()) / 3);
  for (const auto& c : candidates) {
    int d = edit_distance(name, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& what) {
  for (const auto& m : obj.members) {
    bool ok = false;
    for (const char* a : allowed)
      if (m.key == a) ok = true;
    if (ok) continue;
    std::vector<std::string> names(allowed.begin(), allowed.end());
    std::string near = suggest(m.key, names);
    std::string msg = "unknown key '" + m.key + "' in " + what;
    if (!near.empty()) msg += "; did you mean '" + near + "'?";
    fail_at(m.line, m.col, ErrorKind::syntax_error, msg);
  }
}

std::string need_string(const Json& obj, const std::string& key, const std::string& what) {
  const Json& v = need(obj, key, what);
  if (v.kind != Json::Kind::string)
    fail_at(v.line, v.col, ErrorKind::syntax_error, "'" + key + "' in " + what + " must be a string");
  return v.str;
}

std::int64_t need_int(const Json& obj, const std::string& key, const std::string& what) {
  const Json& v = need(obj, key, what);
  if (v.kind != Json::Kind::integer)
    fail_at(v.line, v.col, ErrorKind::syntax_error, "'" + key + "' in " + what + " must be an integer");
  return v.int_value;
}

CircleValue parse_entry(const Json& node) {
  if (node.kind != Json::Kind::string)
    fail_at(node.line, node.col, ErrorKind::syntax_error,
            "circle values are written as strings, e.g. \"1/2\" or \"theta\"");
  try {
    return CircleValue::parse(node.str);
  } catch (const Error& e) {
    fail_at(node.line, node.col, e.kind(), e.what());
  }
}

std::vector<std::vector<CircleValue>> parse_matrix(const Json& node, const std::string& what) {
  if (node.kind != Json::Kind::array)
    fail_at(node.line, node.col, ErrorKind::syntax_error, what + " must be an array of rows");
  std::vector<std::vector<CircleValue>> rows;
  for (const Json& r : node.items) {
    if (r.kind != Json::Kind::array)
      fail_at(r.line, r.col, ErrorKind::syntax_error, "each row of " + what + " must be an array");
    std::vector<CircleValue> row;
    for (const Json& e : r.items) row.push_back(parse_entry(e));
    if (!rows.empty() && row.size() != rows.front().size())
      fail_at(r.line, r.col, ErrorKind::syntax_error, what + " rows must all have the same length");
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::string> kFamilies = {
    "cyclic",        "dihedral",          "quaternion8", "elementary_abelian",
    "free_abelian",  "infinite_dihedral", "heisenberg3", "baumslag_solitar",
    "free_product_z_zn", "lamplighter",   "direct_product"};

const std::vector<std::string> kCocycleTypes = {"trivial", "table", "bicharacter", "pullback",
                                                "product"};

Group build_group(const Json& spec) {
  as_object(spec, "a group spec");
  const Json& fam_node = need(spec, "family", "a group spec");
  if (fam_node.kind != Json::Kind::string)
    fail_at(fam_node.line, fam_node.col, ErrorKind::syntax_error, "'family' must be a string");
  const std::string& family = fam_node.str;
  if (std::find(kFamilies.begin(), kFamilies.end(), family) == kFamilies.end()) {
    std::string near = suggest(family, kFamilies);
    std::string msg = "unknown family '" + family + "'";
    if (!near.empty()) msg += "; did you mean '" + near + "'?";
    fail_at(fam_node.line, fam_node.col, ErrorKind::unknown_family, msg);
  }

  try {
    if (family == "cyclic") {
      check_keys(spec, {"family", "n"}, "a cyclic group spec");
      return make_cyclic(static_cast<std::uint64_t>(need_int(spec, "n", "a cyclic group spec")));
    }
    if (family == "dihedral") {
      check_keys(spec, {"family", "n"}, "a dihedral group spec");
      return make_dihedral(static_cast<std::uint64_t>(need_int(spec, "n", "a dihedral group spec")));
    }
    if (family == "quaternion8") {
      check_keys(spec, {"family"}, "a quaternion group spec");
      return make_quaternion8();
    }
    if (family == "elementary_abelian") {
      check_keys(spec, {"family", "p", "k"}, "an elementary abelian group spec");
      return make_elementary_abelian(
          static_cast<std::uint64_t>(need_int(spec, "p", "an elementary abelian group spec")),
          static_cast<int>(need_int(spec, "k", "an elementary abelian group spec")));
    }
    if (family == "free_abelian") {
      check_keys(spec, {"family", "rank"}, "a free abelian group spec");
      return make_free_abelian(static_cast<int>(need_int(spec, "rank", "a free abelian group spec")));
    }
    if (family == "infinite_dihedral") {
      check_keys(spec, {"family"}, "an infinite dihedral group spec");
      return make_infinite_dihedral();
    }
    if (family == "heisenberg3") {
      check_keys(spec, {"family"}, "a Heisenberg group spec");
      return make_heisenberg3();
    }
    if (family == "baumslag_solitar") {
      check_keys(spec, {"family", "n"}, "a Baumslag-Solitar group spec");
      return make_baumslag_solitar(static_cast<int>(need_int(spec, "n", "a Baumslag-Solitar group spec")));
    }
    if (family == "free_product_z_zn") {
      check_keys(spec, {"family", "n"}, "a free product group spec");
      return make_free_product_z_zn(static_cast<int>(need_int(spec, "n", "a free product group spec")));
    }
    if (family == "lamplighter") {
      check_keys(spec, {"family"}, "a lamplighter group spec");
      return make_lamplighter();
    }
    // direct_product
    check_keys(spec, {"family", "factors"}, "a direct product group spec");
    const Json& factors = need(spec, "factors", "a direct product group spec");
    if (factors.kind != Json::Kind::array || factors.items.empty())
      fail_at(factors.line, factors.col, ErrorKind::syntax_error,
              "'factors' must be a non-empty array of group specs");
    std::vector<Group> parts;
    for (const Json& f : factors.items) parts.push_back(build_group(f));
    return make_direct_product(std::move(parts));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::syntax_error || e.kind() == ErrorKind::unknown_family) throw;
    fail_at(spec.line, spec.col, e.kind(), e.what());
  }
}

Cocycle build_cocycle(const Json& spec, const Group& g, const Json* group_spec) {
  as_object(spec, "a cocycle spec");
  const Json& type_node = need(spec, "type", "a cocycle spec");
  if (type_node.kind != Json::Kind::string)
    fail_at(type_node.line, type_node.col, ErrorKind::syntax_error, "'type' must be a string");
  const std::string& type = type_node.str;
  if (std::find(kCocycleTypes.begin(), kCocycleTypes.end(), type) == kCocycleTypes.end()) {
    std::string near = suggest(type, kCocycleTypes);
    std::string msg = "unknown cocycle type '" + type + "'";
    if (!near.empty()) msg += "; did you mean '" + near + "'?";
    fail_at(type_node.line, type_node.col, ErrorKind::unknown_cocycle_type, msg);
  }

  try {
    if (type == "trivial") {
      check_keys(spec, {"type"}, "a trivial cocycle spec");
      return trivial_cocycle(g);
    }
    if (type == "table") {
      check_keys(spec, {"type", "values"}, "a table cocycle spec");
      return table_cocycle(g, parse_matrix(need(spec, "values", "a table cocycle spec"), "'values'"));
    }
    if (type == "bicharacter") {
      check_keys(spec, {"type", "theta_matrix"}, "a bicharacter cocycle spec");
      return bicharacter_cocycle(
          g, parse_matrix(need(spec, "theta_matrix", "a bicharacter cocycle spec"), "'theta_matrix'"));
    }
    if (type == "pullback") {
      check_keys(spec, {"type", "inner", "hom"}, "a pullback cocycle spec");
      const Json& inner = as_object(need(spec, "inner", "a pullback cocycle spec"), "'inner'");
      std::string inner_type = need_string(inner, "type", "the inner cocycle");
      if (inner_type != "bicharacter")
        fail_at(inner.line, inner.col, ErrorKind::unknown_cocycle_type,
                "pullback supports only a bicharacter inner cocycle");
      check_keys(inner, {"type", "theta_matrix"}, "the inner cocycle");
      auto theta = parse_matrix(need(inner, "theta_matrix", "the inner cocycle"), "'theta_matrix'");
      // The abelianization hom is canonical; an explicit hom block is
      // accepted for documentation value and checked against it.
      if (const Json* hom = find_member(spec, "hom")) {
        as_object(*hom, "'hom'");
        int rank = free_abelianization_rank(g);
        for (const auto& m : hom->members) {
          GroupElement el = g.identity();
          bool found = false;
          for (const auto& [nm, cand] : named_generators(g))
            if (nm == m.key) {
              el = cand;
              found = true;
            }
          if (!found)
            fail_at(m.line, m.col, ErrorKind::invalid_argument,
                    "no generator named '" + m.key + "' in " + g.name());
          if (m.value.kind != Json::Kind::array)
            fail_at(m.value.line, m.value.col, ErrorKind::syntax_error,
                    "hom images must be integer arrays");
          std::vector<std::int64_t> given;
          for (const Json& e : m.value.items) {
            if (e.kind != Json::Kind::integer)
              fail_at(e.line, e.col, ErrorKind::syntax_error, "hom images must be integer arrays");
            given.push_back(e.int_value);
          }
          std::vector<std::int64_t> canonical = free_abelianization_coords(g, el);
          if (static_cast<int>(given.size()) != rank || given != canonical)
            fail_at(m.value.line, m.value.col, ErrorKind::invalid_argument,
                    "hom entry '" + m.key + "' does not match the canonical abelianization image");
        }
      }
      return pullback_cocycle(g, std::move(theta));
    }
    // product. Small finite products are materialized into plain table
    // groups, so the factor groups are recovered from the document rather
    // than from the built group.
    check_keys(spec, {"type", "factors"}, "a product cocycle spec");
    const Json& factors = need(spec, "factors", "a product cocycle spec");
    std::vector<Group> parts;
    std::vector<const Json*> part_specs;
    if (g.family() == FamilyTag::direct_product) {
      for (const Group& f : direct_factors(g)) parts.push_back(f);
      part_specs.assign(parts.size(), nullptr);
    } else {
      const Json* gfactors = group_spec ? find_member(*group_spec, "factors") : nullptr;
      if (!gfactors || gfactors->kind != Json::Kind::array)
        fail_at(spec.line, spec.col, ErrorKind::invalid_argument,
                "a product cocycle requires a direct_product group");
      for (const Json& f : gfactors->items) {
        parts.push_back(build_group(f));
        part_specs.push_back(&f);
      }
    }
    if (factors.kind != Json::Kind::array || factors.items.size() != parts.size())
      fail_at(factors.line, factors.col, ErrorKind::syntax_error,
              "'factors' must list one cocycle per group factor (" +
                  std::to_string(parts.size()) + " expected)");
    std::vector<Cocycle> built;
    for (std::size_t i = 0; i < parts.size(); ++i)
      built.push_back(build_cocycle(factors.items[i], parts[i], part_specs[i]));
    return product_cocycle(g, std::move(built));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::syntax_error || e.kind() == ErrorKind::unknown_cocycle_type ||
        e.kind() == ErrorKind::invalid_fraction || e.kind() == ErrorKind::unknown_family ||
        e.kind() == ErrorKind::invalid_argument)
      throw;
    fail_at(spec.line, spec.col, e.kind(), e.what());
  }
}

AnalysisOptions build_options(const Json* node) {
  AnalysisOptions opts;
  if (!node) return opts;
  const Json& obj = as_object(*node, "'options'");
  check_keys(obj, {"effort", "seed", "oracle", "theta_numeric", "report"}, "'options'");
  if (const Json* v = find_member(obj, "effort")) {
    if (v->kind != Json::Kind::integer || v->int_value < 1)
      fail_at(v->line, v->col, ErrorKind::syntax_error, "'effort' must be a positive integer");
    opts.effort = static_cast<int>(std::min<std::int64_t>(v->int_value, 1000000));
  }
  if (const Json* v = find_member(obj, "seed")) {
    if (v->kind != Json::Kind::integer)
      fail_at(v->line, v->col, ErrorKind::syntax_error, "'seed' must be an integer");
    opts.seed = v->int_value;
  }
  if (const Json* v = find_member(obj, "oracle")) {
    if (v->kind != Json::Kind::boolean)
      fail_at(v->line, v->col, ErrorKind::syntax_error, "'oracle' must be a boolean");
    opts.oracle = v->bool_value;
  }
  if (const Json* v = find_member(obj, "theta_numeric")) {
    if (v->kind == Json::Kind::real)
      opts.theta_numeric = v->real_value;
    else if (v->kind == Json::Kind::integer)
      opts.theta_numeric = static_cast<double>(v->int_value);
    else
      fail_at(v->line, v->col, ErrorKind::syntax_error, "'theta_numeric' must be a number");
  }
  if (const Json* v = find_member(obj, "report")) {
    if (v->kind != Json::Kind::string || (v->str != "text" && v->str != "json"))
      fail_at(v->line, v->col, ErrorKind::syntax_error, "'report' must be \"text\" or \"json\"");
    opts.report = v->str;
  }
  return opts;
}

}  // namespace

AnalysisSpec parse_spec(const std::string& document) {
  Parser parser(document);
  Json root = parser.parse_document();
  as_object(root, "the analysis document");
  check_keys(root, {"group", "cocycle", "options"}, "the analysis document");
  const Json& group_spec = need(root, "group", "the analysis document");
  Group g = build_group(group_spec);
  Cocycle c = build_cocycle(need(root, "cocycle", "the analysis document"), g, &group_spec);
  AnalysisOptions opts = build_options(find_member(root, "options"));
  return AnalysisSpec{std::move(g), std::move(c), std::move(opts)};
}

}  // namespace twistlab
