#include "evoaut/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace evoaut {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;
  std::vector<Token> tokens;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& message) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    out.push_back(Token{s.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<Token> tokens = tokenize(raw);
    if (!tokens.empty()) out.push_back(Line{number, raw, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

FieldSpec parse_field_line(const Line& line) {
  if (line.tokens.size() != 2) fail(line.number, 1, "expected 'field F<p>' or 'field Q'");
  try {
    return parse_field(line.tokens[1].text);
  } catch (const Error& e) {
    fail(line.number, line.tokens[1].column, std::string("bad field tag '") + line.tokens[1].text + "'");
  }
}

std::vector<std::string> parse_labels(const Line& line, const char* keyword) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k < line.tokens.size(); ++k) {
    const Token& t = line.tokens[k];
    if (std::find(labels.begin(), labels.end(), t.text) != labels.end()) {
      fail(line.number, t.column, "duplicate label '" + t.text + "'");
    }
    labels.push_back(t.text);
  }
  if (labels.empty()) fail(line.number, 1, std::string("'") + keyword + "' needs at least one label");
  return labels;
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& label, std::size_t line,
                        std::size_t column) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) fail(line, column, "undeclared label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Right-hand side of "sq x = ...": signed terms "c*label" or "label", or "0".
Vector parse_square(const Line& line, std::size_t start, const FieldSpec& field, const std::vector<std::string>& labels) {
  const std::string& s = line.text;
  Vector coords(labels.size(), field.zero());
  std::size_t i = start;
  auto skip = [&] {
    while (i < s.size() && is_space(s[i])) ++i;
  };
  skip();
  {
    std::size_t j = i;
    if (j < s.size() && s[j] == '0') {
      ++j;
      while (j < s.size() && is_space(s[j])) ++j;
      if (j == s.size()) return coords;
    }
  }
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) {
      if (first) fail(line.number, i + 1, "empty square; write 0 or omit the line");
      break;
    }
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (s.compare(i, 3, "\xE2\x88\x92") == 0) {
      negative = true;
      i += 3;
    } else if (!first) {
      fail(line.number, i + 1, "expected '+' or '-' between terms");
    }
    skip();
    const std::size_t term_col = i + 1;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j]) && s[j] != '+' && s[j] != '-' && s.compare(j, 3, "\xE2\x88\x92") != 0) ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) fail(line.number, term_col, "missing term");
    i = j;
    Scalar coeff = field.one();
    std::string label = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      label = term.substr(star + 1);
      try {
        coeff = field.parse(term.substr(0, star));
      } catch (const Error& e) {
        fail(line.number, term_col, "bad coefficient '" + term.substr(0, star) + "'");
      }
    }
    const std::size_t k = label_index(labels, label, line.number, term_col + (term.size() - label.size()));
    coords[k] += negative ? -coeff : coeff;
    first = false;
  }
  return coords;
}

}  // namespace

EvolutionAlgebra parse_algebra_file(std::string_view text, std::size_t max_dim) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines[0].tokens[0].text != "field") fail(lines.empty() ? 1 : lines[0].number, 1, "expected 'field' line first");
  const FieldSpec field = parse_field_line(lines[0]);
  if (lines.size() < 2 || lines[1].tokens[0].text != "basis") {
    fail(lines.size() < 2 ? lines[0].number + 1 : lines[1].number, 1, "expected 'basis' line");
  }
  const std::vector<std::string> labels = parse_labels(lines[1], "basis");
  if (labels.size() > max_dim) {
    throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(labels.size()) + " exceeds cap " + std::to_string(max_dim));
  }
  std::vector<Vector> squares(labels.size(), Vector(labels.size(), field.zero()));
  std::vector<bool> seen(labels.size(), false);
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0].text != "sq") fail(line.number, line.tokens[0].column, "expected 'sq'");
    if (line.tokens.size() < 3 || line.tokens[2].text != "=") fail(line.number, 1, "expected 'sq <label> = ...'");
    const std::size_t i = label_index(labels, line.tokens[1].text, line.number, line.tokens[1].column);
    if (seen[i]) fail(line.number, line.tokens[1].column, "square of '" + labels[i] + "' given twice");
    seen[i] = true;
    squares[i] = parse_square(line, line.tokens[2].column, field, labels);
  }
  return EvolutionAlgebra::from_squares(field, squares, labels);
}

ParsedGraph parse_graph_file(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  std::size_t k = 0;
  std::optional<FieldSpec> field;
  if (k < lines.size() && lines[k].tokens[0].text == "field") field = parse_field_line(lines[k++]);
  if (k >= lines.size() || lines[k].tokens[0].text != "vertices") {
    fail(k < lines.size() ? lines[k].number : 1, 1, "expected 'vertices' line");
  }
  const std::vector<std::string> labels = parse_labels(lines[k++], "vertices");
  const FieldSpec weight_field = field.value_or(FieldSpec::rationals());
  std::vector<Edge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_line;
  for (; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto& t = line.tokens;
    if (t[0].text != "edge") fail(line.number, t[0].column, "expected 'edge'");
    if (t.size() != 5 || t[2].text != "->" || !t[4].text.starts_with("w=")) {
      fail(line.number, 1, "expected 'edge <src> -> <dst> w=<scalar>'");
    }
    const std::size_t src = label_index(labels, t[1].text, line.number, t[1].column);
    const std::size_t dst = label_index(labels, t[3].text, line.number, t[3].column);
    const auto [it, fresh] = first_line.emplace(std::make_pair(src, dst), line.number);
    if (!fresh) {
      fail(line.number, t[0].column,
           "second edge " + t[1].text + " -> " + t[3].text + " (first on line " + std::to_string(it->second) +
               "); Condition (Sing) allows one");
    }
    Scalar w = weight_field.zero();
    try {
      w = weight_field.parse(std::string_view(t[4].text).substr(2));
    } catch (const Error& e) {
      fail(line.number, t[4].column + 2, "bad weight '" + t[4].text.substr(2) + "'");
    }
    if (w.is_zero()) fail(line.number, t[4].column + 2, "edge weights must be nonzero");
    edges.push_back(Edge{src, dst, w});
  }
  return ParsedGraph{field, WeightedGraph(labels, std::move(edges))};
}

bool looks_like_graph_file(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    if (line.tokens[0].text == "field") continue;
    return line.tokens[0].text == "vertices";
  }
  return false;
}

EvolutionAlgebra load_algebra(std::string_view text, const std::optional<FieldSpec>& field_override,
                              std::size_t max_dim) {
  if (!looks_like_graph_file(text)) {
    EvolutionAlgebra a = parse_algebra_file(text, max_dim);
    if (field_override && !(*field_override == a.field())) {
      throw Error(ErrorKind::FieldMismatch,
                  "file declares " + a.field().to_string() + " but --field is " + field_override->to_string());
    }
    return a;
  }
  // weights are read as rationals first, then mapped into the target field
  ParsedGraph parsed = parse_graph_file(text);
  if (parsed.field && field_override && !(*parsed.field == *field_override)) {
    throw Error(ErrorKind::FieldMismatch,
                "file declares " + parsed.field->to_string() + " but --field is " + field_override->to_string());
  }
  const FieldSpec field = parsed.field ? *parsed.field : field_override.value_or(FieldSpec::rationals());
  std::vector<Edge> edges;
  for (const Edge& e : parsed.graph.edges()) {
    Scalar w = e.weight.modulus() == field.characteristic() ? e.weight : field.from_rational(e.weight.rational_value());
    if (w.is_zero()) throw Error(ErrorKind::Parse, "weight of " + parsed.graph.labels()[e.src] + " -> " +
                                                      parsed.graph.labels()[e.dst] + " vanishes in " + field.to_string());
    edges.push_back(Edge{e.src, e.dst, std::move(w)});
  }
  if (parsed.graph.vertex_count() > max_dim) {
    throw Error(ErrorKind::TooLarge, "dimension " + std::to_string(parsed.graph.vertex_count()) + " exceeds cap " +
                                         std::to_string(max_dim));
  }
  return wgraph_to_algebra(WeightedGraph(parsed.graph.labels(), std::move(edges)), field);
}

namespace {

std::string term(const Scalar& c, const std::string& label, bool first) {
  std::string v = c.to_string();
  const bool negative = !v.empty() && v[0] == '-';
  if (first) return v + "*" + label;
  return std::string(negative ? " - " : " + ") + (negative ? v.substr(1) : v) + "*" + label;
}

}  // namespace

std::string write_algebra_file(const EvolutionAlgebra& a) {
  std::ostringstream os;
  os << "field " << a.field().to_string() << "\nbasis";
  for (const std::string& l : a.labels()) os << ' ' << l;
  os << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::string rhs;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!a.omega(j, i).is_zero()) rhs += term(a.omega(j, i), a.labels()[j], rhs.empty());
    }
    if (!rhs.empty()) os << "sq " << a.labels()[i] << " = " << rhs << '\n';
  }
  return os.str();
}

std::string write_graph_file(const WeightedGraph& g, const FieldSpec& field) {
  std::ostringstream os;
  os << "field " << field.to_string() << "\nvertices";
  for (const std::string& l : g.labels()) os << ' ' << l;
  os << '\n';
  for (const Edge& e : g.edges()) {
    os << "edge " << g.labels()[e.src] << " -> " << g.labels()[e.dst] << " w=" << e.weight.to_string() << '\n';
  }
  return os.str();
}

Vector parse_vector(const FieldSpec& field, std::string_view text) {
  Vector v;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    v.push_back(field.parse(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return v;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + ")";
}

}  // namespace evoaut
