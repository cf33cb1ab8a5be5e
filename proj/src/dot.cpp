#include "mealy/dot.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "mealy/errors.hpp"

namespace mealy {

namespace {

struct Token {
  enum class Kind { Ident, Punct, End };
  Kind kind;
  std::string text;
  int line;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line_};
    char c = text_[pos_];
    if (c == '"') {
      ++pos_;
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        if (text_[pos_] == '\n') ++line_;
        s += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw ParseError(line_, "unterminated string");
      ++pos_;
      return {Token::Kind::Ident, s, line_};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        s += text_[pos_++];
      return {Token::Kind::Ident, s, line_};
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Token::Kind::Punct, "->", line_};
    }
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ';' || c == '=') {
      ++pos_;
      return {Token::Kind::Punct, std::string(1, c), line_};
    }
    throw ParseError(line_, std::string("unexpected character '") + c + "'");
  }

  int line() const { return line_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

struct Edge {
  std::string from, to, input, output;
  int line;
};

}  // namespace

MealyMachine parse_dot(const std::string& text) {
  Lexer lex(text);
  auto expect = [&](const std::string& what) {
    Token t = lex.next();
    if (t.text != what) throw ParseError(t.line, "expected '" + what + "'");
    return t;
  };
  auto ident = [&](const char* what) {
    Token t = lex.next();
    if (t.kind != Token::Kind::Ident) throw ParseError(t.line, std::string("expected ") + what);
    return t;
  };

  expect("digraph");
  ident("graph name");
  expect("{");

  Token first = ident("'__start0'");
  if (first.text != "__start0") throw ParseError(first.line, "expected the __start0 edge first");
  expect("->");
  std::string initial_name = ident("initial state").text;
  expect(";");

  std::vector<Edge> edges;
  for (;;) {
    Token t = lex.next();
    if (t.kind == Token::Kind::Punct && t.text == "}") break;
    if (t.kind != Token::Kind::Ident) throw ParseError(t.line, "expected a state or '}'");
    if (t.text == "__start0") throw ParseError(t.line, "duplicate __start0 edge");
    Edge e;
    e.from = t.text;
    e.line = t.line;
    expect("->");
    e.to = ident("target state").text;
    expect("[");
    Token key = ident("'label'");
    if (key.text != "label") throw ParseError(key.line, "expected 'label'");
    expect("=");
    std::string label = ident("label value").text;
    auto slash = label.find('/');
    if (slash == std::string::npos) throw ParseError(key.line, "label needs the form input/output");
    e.input = label.substr(0, slash);
    e.output = label.substr(slash + 1);
    if (e.input.empty() || e.output.empty())
      throw ParseError(key.line, "empty input or output in label");
    expect("]");
    expect(";");
    edges.push_back(std::move(e));
  }

  std::map<std::string, int> state_id;
  std::vector<std::string> state_names;
  auto intern_state = [&](const std::string& name) {
    auto [it, inserted] = state_id.emplace(name, static_cast<int>(state_names.size()));
    if (inserted) state_names.push_back(name);
    return it->second;
  };
  intern_state(initial_name);
  Alphabet inputs, outputs;
  for (const Edge& e : edges) {
    intern_state(e.from);
    intern_state(e.to);
    inputs.intern(e.input);
    outputs.intern(e.output);
  }
  if (inputs.size() == 0) throw ParseError(lex.line(), "machine has no transitions");

  int n = static_cast<int>(state_names.size());
  MealyMachine m(inputs, outputs, n, 0);
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(inputs.size()), false));
  for (const Edge& e : edges) {
    int q = state_id.at(e.from);
    int i = inputs.id(e.input);
    if (seen[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)])
      throw ParseError(e.line, "duplicate transition from '" + e.from + "' on '" + e.input + "'");
    seen[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)] = true;
    m.set_transition(q, i, state_id.at(e.to), outputs.id(e.output));
  }
  for (int q = 0; q < n; ++q)
    for (int i = 0; i < inputs.size(); ++i)
      if (!seen[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)])
        throw IncompleteMachine(state_names[static_cast<std::size_t>(q)], inputs.name(i));
  return m;
}

MealyMachine parse_dot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dot(buf.str());
}

namespace {

bool bare_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string quote(const std::string& s) {
  if (bare_ok(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string write_dot(const MealyMachine& m) {
  std::ostringstream out;
  out << "digraph g {\n";
  out << "  __start0 -> s" << m.initial() << ";\n";
  for (int q = 0; q < m.num_states(); ++q)
    for (int i = 0; i < m.inputs().size(); ++i) {
      const std::string& in = m.inputs().name(i);
      const std::string& on = m.outputs().name(m.output(q, i));
      if (in.find('/') != std::string::npos)
        throw std::invalid_argument("input names may not contain '/'");
      out << "  s" << q << " -> s" << m.next_state(q, i) << " [label=" << quote(in + "/" + on)
          << "];\n";
    }
  out << "}\n";
  return out.str();
}

void write_dot_file(const MealyMachine& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_dot(m);
}

}  // namespace mealy
