#include "hilfor/textio.hpp"

#include <sstream>
#include <unordered_map>

#include "hilfor/error.hpp"

namespace hilfor {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> fields;
};

// Comment-stripped, tokenized nonblank lines. Braces become their own
// tokens so base groups do not depend on spacing.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string clean;
    for (char ch : raw) {
      if (ch == '#') break;
      if (ch == '{' || ch == '}') {
        clean += ' ';
        clean += ch;
        clean += ' ';
      } else {
        clean += ch;
      }
    }
    Line line;
    line.number = number;
    std::istringstream fields(clean);
    std::string tok;
    while (fields >> tok) line.fields.push_back(tok);
    if (!line.fields.empty()) lines.push_back(line);
  }
  return lines;
}

int resolve(const std::unordered_map<std::string, int>& names,
            const std::string& tok, int line) {
  auto it = names.find(tok);
  if (it == names.end())
    throw ParseError(line, "unknown element name '" + tok + "'");
  return it->second;
}

}  // namespace

ParsedAlgebra parse_algebra_file(const std::string& text, bool validate) {
  std::vector<Line> lines = tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const Line& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       std::string("unexpected end of file, expected ") +
                           what);
    return lines[at];
  };

  const Line& head = need("'algebra NAME'");
  if (head.fields.size() != 2 || head.fields[0] != "algebra")
    throw ParseError(head.number, "expected 'algebra NAME'");
  ParsedAlgebra out;
  out.name = head.fields[1];
  ++at;

  const Line& elems = need("'elements ...'");
  if (elems.fields.empty() || elems.fields[0] != "elements" ||
      elems.fields.size() < 2)
    throw ParseError(elems.number, "expected 'elements' with at least one "
                                   "name");
  std::unordered_map<std::string, int> names;
  for (std::size_t i = 1; i < elems.fields.size(); ++i) {
    if (!names.emplace(elems.fields[i], (int)(i - 1)).second)
      throw ParseError(elems.number,
                       "duplicate element name '" + elems.fields[i] + "'");
    out.alg.labels.push_back(elems.fields[i]);
  }
  out.alg.n = (int)out.alg.labels.size();
  ++at;

  const Line& one = need("'one NAME'");
  if (one.fields.size() != 2 || one.fields[0] != "one")
    throw ParseError(one.number, "expected 'one NAME'");
  out.alg.one = resolve(names, one.fields[1], one.number);
  ++at;

  if (at < lines.size() && lines[at].fields[0] == "zero") {
    const Line& zero = lines[at];
    if (zero.fields.size() != 2)
      throw ParseError(zero.number, "expected 'zero NAME'");
    out.alg.zero = resolve(names, zero.fields[1], zero.number);
    ++at;
  }

  const Line& imp = need("'imp'");
  if (imp.fields.size() != 1 || imp.fields[0] != "imp")
    throw ParseError(imp.number, "expected 'imp'");
  ++at;

  for (int a = 0; a < out.alg.n; ++a) {
    const Line& row = need("an implication table row");
    if ((int)row.fields.size() != out.alg.n)
      throw ParseError(row.number,
                       "implication row has " +
                           std::to_string(row.fields.size()) +
                           " entries, expected " + std::to_string(out.alg.n));
    std::vector<int> r;
    for (const std::string& tok : row.fields)
      r.push_back(resolve(names, tok, row.number));
    out.alg.imp.push_back(std::move(r));
    ++at;
  }
  if (at < lines.size())
    throw ParseError(lines[at].number, "unexpected content after the "
                                       "implication table");

  if (validate) {
    ValidationReport report = validate_algebra(out.alg);
    if (!report.valid)
      throw InputError("algebra '" + out.name +
                       "' fails validation: " + report.failure);
  }
  return out;
}

ParsedForest parse_forest_file(const std::string& text, bool validate) {
  std::vector<Line> lines = tokenize(text);
  std::size_t at = 0;
  auto need = [&](const char* what) -> const Line& {
    if (at >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       std::string("unexpected end of file, expected ") +
                           what);
    return lines[at];
  };

  const Line& head = need("'forest NAME'");
  if (head.fields.size() != 2 || head.fields[0] != "forest")
    throw ParseError(head.number, "expected 'forest NAME'");
  ParsedForest out;
  out.name = head.fields[1];
  ++at;

  const Line& nodes = need("'nodes ...'");
  if (nodes.fields.empty() || nodes.fields[0] != "nodes")
    throw ParseError(nodes.number, "expected 'nodes'");
  std::unordered_map<std::string, int> names;
  for (std::size_t i = 1; i < nodes.fields.size(); ++i) {
    if (!names.emplace(nodes.fields[i], (int)(i - 1)).second)
      throw ParseError(nodes.number,
                       "duplicate node name '" + nodes.fields[i] + "'");
    out.space.labels.push_back(nodes.fields[i]);
  }
  int n = (int)out.space.labels.size();
  ++at;

  Poset order(n);
  while (at < lines.size() && lines[at].fields[0] == "cover") {
    const Line& cover = lines[at];
    if (cover.fields.size() != 3)
      throw ParseError(cover.number, "expected 'cover nA nB'");
    int a = resolve(names, cover.fields[1], cover.number);
    int b = resolve(names, cover.fields[2], cover.number);
    order.add_leq(a, b);
    ++at;
  }
  try {
    order.finish();
  } catch (const InputError& e) {
    throw ParseError(lines[at > 0 ? at - 1 : 0].number,
                     std::string("cover edges do not define an order: ") +
                         e.what());
  }
  out.space.order = order;

  const Line& base = need("'base { ... } ...'");
  if (base.fields[0] != "base")
    throw ParseError(base.number, "expected 'base'");
  std::vector<std::string> toks(base.fields.begin() + 1, base.fields.end());
  int base_line = base.number;
  ++at;
  // The base may continue over further lines; everything left is groups.
  while (at < lines.size()) {
    toks.insert(toks.end(), lines[at].fields.begin(), lines[at].fields.end());
    ++at;
  }
  std::size_t t = 0;
  while (t < toks.size()) {
    if (toks[t] != "{")
      throw ParseError(base_line, "expected '{' to open a base set");
    ++t;
    Bitset set(n);
    while (t < toks.size() && toks[t] != "}") {
      set.set(resolve(names, toks[t], base_line));
      ++t;
    }
    if (t >= toks.size())
      throw ParseError(base_line, "unclosed base set");
    ++t;
    out.space.base.push_back(set);
  }
  canonicalize_family(out.space.base);

  if (validate) {
    ValidationReport report = validate_forest_space(out.space);
    if (!report.valid)
      throw InputError("forest '" + out.name +
                       "' fails validation: " + report.failure);
  }
  return out;
}

namespace {

void append_table(std::string& s, const Algebra& a,
                  const std::vector<std::vector<int>>& table) {
  for (int r = 0; r < a.n; ++r) {
    for (int c = 0; c < a.n; ++c) {
      if (c) s += ' ';
      s += a.label(table[r][c]);
    }
    s += '\n';
  }
}

}  // namespace

std::string serialize_algebra(const Algebra& a, const std::string& name) {
  std::string s = "algebra " + name + "\nelements";
  for (int i = 0; i < a.n; ++i) s += ' ' + a.label(i);
  s += "\none " + a.label(a.one) + '\n';
  if (a.bounded()) s += "zero " + a.label(a.zero) + '\n';
  s += "imp\n";
  append_table(s, a, a.imp);
  return s;
}

std::string serialize_godel(const GodelAlgebra& g, const std::string& name) {
  std::string s = serialize_algebra(g.alg, name);
  s += "meet\n";
  append_table(s, g.alg, g.meet);
  s += "join\n";
  append_table(s, g.alg, g.join);
  return s;
}

std::string serialize_forest(const HForest& fs, const std::string& name) {
  std::string s = "forest " + name + "\nnodes";
  for (int i = 0; i < fs.nodes(); ++i) s += ' ' + fs.label(i);
  s += '\n';
  for (auto [a, b] : fs.order.cover_pairs())
    s += "cover " + fs.label(a) + ' ' + fs.label(b) + '\n';
  s += "base";
  for (const Bitset& set : fs.base) {
    s += " {";
    for (int i : set.members()) s += ' ' + fs.label(i);
    s += " }";
  }
  s += '\n';
  return s;
}

namespace {

std::string dot_of_order(const Poset& p,
                         const std::vector<std::string>& labels,
                         const std::string& name, const Bitset* fill) {
  std::string s = "digraph \"" + name + "\" {\n  rankdir=BT;\n"
                  "  node [shape=ellipse];\n";
  auto label = [&](int i) {
    if (i < (int)labels.size() && !labels[i].empty()) return labels[i];
    return "n" + std::to_string(i);
  };
  for (int i = 0; i < p.n; ++i) {
    s += "  v" + std::to_string(i) + " [label=\"" + label(i) + "\"";
    if (fill && fill->test(i)) s += ", style=filled, fillcolor=lightblue";
    s += "];\n";
  }
  for (auto [a, b] : p.cover_pairs())
    s += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace

std::string export_dot(const Poset& p, const std::vector<std::string>& labels,
                       const std::string& name) {
  return dot_of_order(p, labels, name, nullptr);
}

std::string export_dot(const Algebra& a, const std::string& name) {
  std::vector<std::string> labels;
  for (int i = 0; i < a.n; ++i) labels.push_back(a.label(i));
  return dot_of_order(natural_order(a), labels, name, nullptr);
}

std::string export_dot(const HForest& fs, const std::string& name,
                       int highlight_base) {
  std::vector<std::string> labels;
  for (int i = 0; i < fs.nodes(); ++i) labels.push_back(fs.label(i));
  const Bitset* fill = nullptr;
  if (highlight_base >= 0) {
    if (highlight_base >= (int)fs.base.size())
      throw InputError("base index " + std::to_string(highlight_base) +
                       " out of range");
    fill = &fs.base[highlight_base];
  }
  return dot_of_order(fs.order, labels, name, fill);
}

}  // namespace hilfor
