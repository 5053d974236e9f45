#include "rmc/io.hpp"

#include <fstream>
#include <sstream>

#include "rmc/errors.hpp"

namespace rmc {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// "a/b/c" -> track labels
std::vector<std::string> split_symbol(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == '/') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

uint32_t parse_number(const std::string& s, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a number, got '" + s + "'", line);
  return static_cast<uint32_t>(std::stoul(s));
}

struct Head {
  std::string kind;
  int arity = 1;
  int dimension = 0;
  std::vector<std::string> base;
  uint32_t states = 0;
  std::vector<StateId> initial;
  std::vector<StateId> accepting;
  bool saw_states = false;
  bool saw_alphabet = false;
};

SymbolId parse_symbol(const Alphabet& alpha, const std::string& text,
                      int line) {
  std::vector<std::string> parts = split_symbol(text);
  if (static_cast<int>(parts.size()) != alpha.arity())
    throw ParseError("symbol '" + text + "' has wrong arity", line);
  std::vector<uint32_t> digits(parts.size());
  for (size_t t = 0; t < parts.size(); ++t) {
    int d = alpha.find_label(static_cast<int>(t), parts[t]);
    if (d < 0)
      throw ParseError("unknown symbol component '" + parts[t] + "'", line);
    digits[t] = static_cast<uint32_t>(d);
  }
  return alpha.make(digits);
}

}  // namespace

Model parse_model(std::istream& in) {
  Head head;
  std::vector<Trans> plain;
  std::vector<CounterTrans> counted;
  std::optional<Alphabet> alpha;
  std::string line;
  int lineno = 0;
  auto ensure_header = [&](int at) {
    if (!head.saw_alphabet || !head.saw_states || head.kind.empty())
      throw ParseError("trans before kind/alphabet/states", at);
    if (!alpha) alpha = Alphabet::power(head.base, head.arity);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> tok = split(line);
    if (tok.empty()) continue;
    const std::string& d = tok[0];
    if (d == "kind") {
      if (tok.size() != 2) throw ParseError("kind needs one argument", lineno);
      head.kind = tok[1];
      if (head.kind != "dfa" && head.kind != "nfa" &&
          head.kind != "weak-buchi" && head.kind != "counter" &&
          head.kind != "counter-weak")
        throw ParseError("unknown kind '" + head.kind + "'", lineno);
    } else if (d == "arity") {
      if (tok.size() != 2) throw ParseError("arity needs one argument", lineno);
      head.arity = static_cast<int>(parse_number(tok[1], lineno));
      if (head.arity < 1) throw ParseError("arity must be positive", lineno);
    } else if (d == "alphabet") {
      if (tok.size() < 2) throw ParseError("alphabet needs labels", lineno);
      head.base.assign(tok.begin() + 1, tok.end());
      head.saw_alphabet = true;
    } else if (d == "dimension") {
      if (tok.size() != 2)
        throw ParseError("dimension needs one argument", lineno);
      head.dimension = static_cast<int>(parse_number(tok[1], lineno));
    } else if (d == "states") {
      if (tok.size() != 2) throw ParseError("states needs a count", lineno);
      head.states = parse_number(tok[1], lineno);
      head.saw_states = true;
    } else if (d == "initial") {
      for (size_t i = 1; i < tok.size(); ++i)
        head.initial.push_back(parse_number(tok[i], lineno));
    } else if (d == "accepting") {
      for (size_t i = 1; i < tok.size(); ++i)
        head.accepting.push_back(parse_number(tok[i], lineno));
    } else if (d == "trans") {
      ensure_header(lineno);
      bool counter_kind =
          head.kind == "counter" || head.kind == "counter-weak";
      size_t want = counter_kind ? 5u : 4u;
      if (tok.size() != want)
        throw ParseError("trans needs " + std::to_string(want - 1) +
                             " arguments",
                         lineno);
      StateId from = parse_number(tok[1], lineno);
      SymbolId sym = parse_symbol(*alpha, tok[2], lineno);
      StateId to = parse_number(tok[3], lineno);
      if (counter_kind) {
        if (tok[4].empty() || tok[4][0] != '+')
          throw ParseError("counter transition needs +c1,...,cn", lineno);
        CounterVec inc;
        std::string num;
        for (size_t i = 1; i <= tok[4].size(); ++i) {
          if (i == tok[4].size() || tok[4][i] == ',') {
            inc.push_back(parse_number(num, lineno));
            num.clear();
          } else {
            num += tok[4][i];
          }
        }
        if (static_cast<int>(inc.size()) != head.dimension)
          throw ParseError("increment vector has wrong dimension", lineno);
        counted.push_back({from, sym, to, std::move(inc)});
      } else {
        plain.push_back({from, sym, to});
      }
    } else {
      throw ParseError("unknown directive '" + d + "'", lineno);
    }
  }
  if (head.kind.empty()) throw ParseError("missing kind", lineno ? lineno : 1);
  if (!head.saw_alphabet) throw ParseError("missing alphabet", lineno ? lineno : 1);
  if (!head.saw_states) throw ParseError("missing states", lineno ? lineno : 1);
  if (!alpha) alpha = Alphabet::power(head.base, head.arity);
  std::vector<bool> acc(head.states, false);
  for (StateId q : head.accepting) {
    if (q >= head.states) throw ParseError("accepting state out of range", lineno);
    acc[q] = true;
  }
  for (StateId q : head.initial)
    if (q >= head.states) throw ParseError("initial state out of range", lineno);
  try {
    if (head.kind == "counter" || head.kind == "counter-weak") {
      if (head.dimension < 1)
        throw ParseError("counter kind needs dimension >= 1", lineno);
      Kind kind =
          head.kind == "counter" ? Kind::FiniteWord : Kind::WeakBuchi;
      return CounterAutomaton(head.dimension, *alpha, kind, head.states,
                              head.initial, acc, counted);
    }
    Kind kind = head.kind == "weak-buchi" ? Kind::WeakBuchi : Kind::FiniteWord;
    Automaton a(*alpha, kind, head.states, head.initial, acc, plain);
    if (head.kind == "dfa" && !a.deterministic())
      throw ParseError("kind dfa but the automaton is nondeterministic",
                       lineno);
    return a;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno);
  }
}

Model parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_model(in);
}

namespace {

void emit_header(const Alphabet& alpha, const std::string& kind,
                 uint32_t states, const std::vector<StateId>& initial,
                 const std::vector<bool>& accepting, std::ostream& out) {
  out << "kind " << kind << '\n';
  out << "arity " << alpha.arity() << '\n';
  out << "alphabet";
  for (const std::string& s : alpha.track_labels(0)) out << ' ' << s;
  out << '\n';
  out << "states " << states << '\n';
  out << "initial";
  for (StateId q : initial) out << ' ' << q;
  out << '\n';
  out << "accepting";
  for (StateId q = 0; q < states; ++q)
    if (accepting[q]) out << ' ' << q;
  out << '\n';
}

}  // namespace

void emit(const Automaton& a, std::ostream& out) {
  std::string kind = a.kind() == Kind::WeakBuchi
                         ? "weak-buchi"
                         : (a.deterministic() ? "dfa" : "nfa");
  emit_header(a.alphabet(), kind, a.num_states(), a.initial(), a.accepting(),
              out);
  for (const Trans& t : a.transitions())
    out << "trans " << t.from << ' ' << a.alphabet().display(t.sym) << ' '
        << t.to << '\n';
}

void emit(const CounterAutomaton& ac, std::ostream& out) {
  emit_header(ac.base(),
              ac.kind() == Kind::WeakBuchi ? "counter-weak" : "counter",
              ac.num_states(), ac.initial(), ac.accepting(), out);
  out << "dimension " << ac.dimension() << '\n';
  for (const CounterTrans& t : ac.transitions()) {
    out << "trans " << t.from << ' ' << ac.base().display(t.sym) << ' '
        << t.to << " +";
    for (size_t c = 0; c < t.inc.size(); ++c) {
      if (c) out << ',';
      out << t.inc[c];
    }
    out << '\n';
  }
}

void emit_file(const Model& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  if (std::holds_alternative<Automaton>(m))
    emit(std::get<Automaton>(m), out);
  else
    emit(std::get<CounterAutomaton>(m), out);
}

std::string to_text(const Automaton& a) {
  std::ostringstream out;
  emit(a, out);
  return out.str();
}

std::string to_text(const CounterAutomaton& ac) {
  std::ostringstream out;
  emit(ac, out);
  return out.str();
}

namespace {

const char* part_color(int32_t part) {
  static const char* colors[] = {"lightblue", "palegreen",   "khaki",
                                 "salmon",    "plum",        "lightcyan",
                                 "wheat",     "lightpink"};
  if (part == -1) return "gray80";
  if (part == -2) return "white";
  return colors[part % 8];
}

}  // namespace

std::string to_dot(const Automaton& a, const GrowDecomposition* grow) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    out << "  q" << q << " [label=\"" << q << "\"";
    if (a.accepting(q)) out << ", shape=doublecircle";
    if (grow)
      out << ", style=filled, fillcolor=\"" << part_color(grow->part(q))
          << "\"";
    out << "];\n";
  }
  if (a.kind() == Kind::WeakBuchi) out << "  // accepting states mark accepting SCCs\n";
  for (StateId q : a.initial())
    out << "  init" << q << " [shape=point]; init" << q << " -> q" << q
        << ";\n";
  for (const Trans& t : a.transitions())
    out << "  q" << t.from << " -> q" << t.to << " [label=\""
        << a.alphabet().display(t.sym) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const CounterAutomaton& ac) {
  std::ostringstream out;
  out << "digraph counter_automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (StateId q = 0; q < ac.num_states(); ++q) {
    out << "  q" << q << " [label=\"" << q << "\"";
    if (ac.accepting(q)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (StateId q : ac.initial())
    out << "  init" << q << " [shape=point]; init" << q << " -> q" << q
        << ";\n";
  for (const CounterTrans& t : ac.transitions()) {
    out << "  q" << t.from << " -> q" << t.to << " [label=\""
        << ac.base().display(t.sym) << " +";
    for (size_t c = 0; c < t.inc.size(); ++c) {
      if (c) out << ',';
      out << t.inc[c];
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rmc
