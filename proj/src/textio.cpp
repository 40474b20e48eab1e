#include "lpbc/textio.hpp"

#include <cctype>
#include <sstream>

namespace lpbc {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

struct LineTokens {
  std::vector<Token> tokens;
  int line = 0;
};

std::vector<LineTokens> tokenize(const std::string& text) {
  std::vector<LineTokens> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    LineTokens lt;
    lt.line = lineno;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      lt.tokens.push_back(Token{raw.substr(i, j - i), lineno, static_cast<int>(i) + 1});
      i = j;
    }
    if (!lt.tokens.empty()) out.push_back(std::move(lt));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, int column, const std::string& msg) {
  fail(Errc::parse_error,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

int parse_int(const Token& t, int lo, int hi) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(t.text, &pos);
  } catch (const std::exception&) {
    parse_fail(t.line, t.column, "expected an integer, got '" + t.text + "'");
  }
  if (pos != t.text.size()) parse_fail(t.line, t.column, "expected an integer, got '" + t.text + "'");
  if (value < lo || value > hi)
    parse_fail(t.line, t.column, "value " + t.text + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(value);
}

Matroid parse_matroid(const std::vector<LineTokens>& lines) {
  const auto& head = lines[0].tokens;
  if (head.size() != 3) parse_fail(lines[0].line, 1, "expected: matroid <n> <r>");
  const int n = parse_int(head[1], 0, kMaxGroundSetSize);
  const int r = parse_int(head[2], 0, n);
  std::vector<std::vector<int>> bases;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li].tokens;
    if (toks[0].text != "basis") parse_fail(toks[0].line, toks[0].column, "expected a 'basis' line");
    if (static_cast<int>(toks.size()) - 1 != r)
      parse_fail(toks[0].line, toks[0].column, "basis must list exactly " + std::to_string(r) + " elements");
    std::vector<int> basis;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const int e = parse_int(toks[i], 1, n);
      if (!basis.empty() && e <= basis.back())
        parse_fail(toks[i].line, toks[i].column, "basis elements must be strictly increasing");
      basis.push_back(e);
    }
    bases.push_back(std::move(basis));
  }
  if (bases.empty()) fail(Errc::validation_error, "matroid text lists no bases");
  return Matroid::from_bases(n, bases);
}

MultiGraph parse_graph(const std::vector<LineTokens>& lines) {
  const auto& head = lines[0].tokens;
  if (head.size() != 2) parse_fail(lines[0].line, 1, "expected: graph <v>");
  MultiGraph g;
  g.vertex_count = parse_int(head[1], 0, kMaxGroundSetSize);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li].tokens;
    const std::string& kind = toks[0].text;
    if (kind == "link") {
      if (toks.size() != 3) parse_fail(toks[0].line, toks[0].column, "expected: link <a> <b>");
      const int a = parse_int(toks[1], 1, g.vertex_count);
      const int b = parse_int(toks[2], 1, g.vertex_count);
      if (a == b) parse_fail(toks[1].line, toks[1].column, "link endpoints must differ");
      g.edges.push_back(GraphEdge::make_link(a, b));
    } else if (kind == "loop") {
      if (toks.size() != 2) parse_fail(toks[0].line, toks[0].column, "expected: loop <a>");
      g.edges.push_back(GraphEdge::make_loop(parse_int(toks[1], 1, g.vertex_count)));
    } else if (kind == "free") {
      if (toks.size() != 1) parse_fail(toks[0].line, toks[0].column, "expected: free");
      g.edges.push_back(GraphEdge::make_free());
    } else {
      parse_fail(toks[0].line, toks[0].column, "expected link, loop or free");
    }
  }
  validate(g);
  return g;
}

LatticePathPresentation parse_lpm(const std::vector<LineTokens>& lines) {
  const auto& head = lines[0].tokens;
  if (head.size() != 3) parse_fail(lines[0].line, 1, "expected: lpm <m> <r>");
  LatticePathPresentation l;
  l.east = parse_int(head[1], 0, kMaxGroundSetSize);
  l.north = parse_int(head[2], 0, kMaxGroundSetSize);
  bool saw_lower = false, saw_upper = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li].tokens;
    if (toks.size() != 2 || (toks[0].text != "P" && toks[0].text != "Q"))
      parse_fail(toks[0].line, toks[0].column, "expected: P <steps> or Q <steps>");
    if (toks[0].text == "P") {
      l.lower = toks[1].text;
      saw_lower = true;
    } else {
      l.upper = toks[1].text;
      saw_upper = true;
    }
  }
  if (!saw_lower || !saw_upper) fail(Errc::parse_error, "lpm needs both P and Q lines");
  validate(l);
  return l;
}

StandardPresentation parse_intervals(const std::vector<LineTokens>& lines) {
  const auto& head = lines[0].tokens;
  if (head.size() != 3) parse_fail(lines[0].line, 1, "expected: intervals <n> <r>");
  StandardPresentation s;
  s.n = parse_int(head[1], 0, kMaxGroundSetSize);
  const int r = parse_int(head[2], 0, s.n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li].tokens;
    if (toks.size() != 3 || toks[0].text != "interval")
      parse_fail(toks[0].line, toks[0].column, "expected: interval <l> <u>");
    const int lo = parse_int(toks[1], 1, s.n);
    const int hi = parse_int(toks[2], 1, s.n);
    s.intervals.emplace_back(lo, hi);
  }
  if (static_cast<int>(s.intervals.size()) != r)
    fail(Errc::parse_error, "expected " + std::to_string(r) + " interval lines");
  validate(s);
  return s;
}

SetFamily parse_family(const std::vector<LineTokens>& lines) {
  const auto& head = lines[0].tokens;
  if (head.size() != 3) parse_fail(lines[0].line, 1, "expected: family <n> <r>");
  SetFamily f;
  f.n = parse_int(head[1], 0, kMaxGroundSetSize);
  const int r = parse_int(head[2], 0, 10);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li].tokens;
    if (toks[0].text != "set") parse_fail(toks[0].line, toks[0].column, "expected a 'set' line");
    Mask s = 0;
    for (std::size_t i = 1; i < toks.size(); ++i) s |= element_bit(parse_int(toks[i], 1, f.n));
    f.sets.push_back(s);
  }
  if (static_cast<int>(f.sets.size()) != r)
    fail(Errc::parse_error, "expected " + std::to_string(r) + " set lines");
  validate(f);
  return f;
}

}  // namespace

ParsedObject parse_object(const std::string& text) {
  const std::vector<LineTokens> lines = tokenize(text);
  if (lines.empty()) fail(Errc::parse_error, "line 1, column 1: empty input");
  const std::string& kind = lines[0].tokens[0].text;
  if (kind == "matroid") return parse_matroid(lines);
  if (kind == "graph") return parse_graph(lines);
  if (kind == "lpm") return parse_lpm(lines);
  if (kind == "intervals") return parse_intervals(lines);
  if (kind == "family") return parse_family(lines);
  parse_fail(lines[0].line, lines[0].tokens[0].column,
             "unknown object kind '" + kind + "' (expected matroid, graph, lpm, intervals or family)");
}

std::string to_text(const Matroid& m) {
  std::ostringstream ss;
  ss << "matroid " << m.size() << ' ' << m.rank() << '\n';
  for (Mask b : m.bases()) {
    ss << "basis";
    for (int e : elements_of(b)) ss << ' ' << e;
    ss << '\n';
  }
  return ss.str();
}

std::string to_text(const MultiGraph& g) {
  std::ostringstream ss;
  ss << "graph " << g.vertex_count << '\n';
  for (const GraphEdge& e : g.edges) {
    switch (e.kind) {
      case GraphEdge::link: ss << "link " << e.a << ' ' << e.b << '\n'; break;
      case GraphEdge::loop: ss << "loop " << e.a << '\n'; break;
      case GraphEdge::free_edge: ss << "free\n"; break;
    }
  }
  return ss.str();
}

std::string to_text(const LatticePathPresentation& l) {
  std::ostringstream ss;
  ss << "lpm " << l.east << ' ' << l.north << '\n';
  ss << "P " << l.lower << '\n';
  ss << "Q " << l.upper << '\n';
  return ss.str();
}

std::string to_text(const StandardPresentation& s) {
  std::ostringstream ss;
  ss << "intervals " << s.n << ' ' << s.rank() << '\n';
  for (auto [lo, hi] : s.intervals) ss << "interval " << lo << ' ' << hi << '\n';
  return ss.str();
}

std::string to_text(const SetFamily& f) {
  std::ostringstream ss;
  ss << "family " << f.n << ' ' << f.set_count() << '\n';
  for (Mask s : f.sets) {
    ss << "set";
    for (int e : elements_of(s)) ss << ' ' << e;
    ss << '\n';
  }
  return ss.str();
}

std::string to_text(const ParsedObject& obj) {
  return std::visit([](const auto& value) { return to_text(value); }, obj);
}

std::string witness_to_text(const MinorWitness& w) {
  std::ostringstream ss;
  ss << "witness " << w.target_name << '\n';
  ss << "contract";
  for (int e : elements_of(w.contract)) ss << ' ' << e;
  ss << '\n';
  ss << "delete";
  for (int e : elements_of(w.remove)) ss << ' ' << e;
  ss << '\n';
  ss << "map";
  for (std::size_t i = 0; i < w.iso.size(); ++i) ss << ' ' << (i + 1) << ':' << w.iso[i];
  ss << '\n';
  return ss.str();
}

Matroid realize_matroid(const ParsedObject& obj) {
  if (const auto* m = std::get_if<Matroid>(&obj)) return *m;
  if (const auto* g = std::get_if<MultiGraph>(&obj)) return bicircular_matroid(*g);
  if (const auto* l = std::get_if<LatticePathPresentation>(&obj)) return matroid_of_lpm(*l);
  if (const auto* s = std::get_if<StandardPresentation>(&obj)) return matroid_of_standard(*s);
  return matroid_of_family(std::get<SetFamily>(obj));
}

}  // namespace lpbc
