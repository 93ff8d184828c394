#include "rolecheck/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace rolecheck {

namespace {

constexpr int max_agents = 1'000'000;
constexpr int max_roles = 10'000;
constexpr int max_action_count = 1'000'000;

struct Tok {
  enum Kind { Ident, Int, LParen, RParen, Semi, Comma, Arrow } kind;
  std::string text;
  long long value = 0;
  int line = 1;
  int column = 1;
};

// Whole-file tokenizer; '#' starts a comment. Lines survive as explicit
// separators because the grammar is line-oriented.
struct Line {
  int number = 1;
  std::vector<Tok> toks;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  Line cur;
  cur.number = 1;
  int line = 1, col = 1;
  size_t i = 0;
  auto flush = [&]() {
    if (!cur.toks.empty()) lines.push_back(std::move(cur));
    cur = Line{};
    cur.number = line;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      flush();
      cur.number = line;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    Tok t;
    t.line = line;
    t.column = col;
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalpha(uc) || c == '_') {
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
        ++col;
      }
      t.kind = Tok::Ident;
      t.text = std::string(text.substr(start, i - start));
    } else if (std::isdigit(uc)) {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++col;
      }
      std::string_view digits = text.substr(start, i - start);
      auto res = std::from_chars(digits.data(), digits.data() + digits.size(), t.value);
      if (res.ec != std::errc{})
        throw parse_error("integer too large", t.line, t.column);
      t.kind = Tok::Int;
    } else if (c == '(') {
      ++i; ++col; t.kind = Tok::LParen;
    } else if (c == ')') {
      ++i; ++col; t.kind = Tok::RParen;
    } else if (c == ';') {
      ++i; ++col; t.kind = Tok::Semi;
    } else if (c == ',') {
      ++i; ++col; t.kind = Tok::Comma;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      i += 2; col += 2; t.kind = Tok::Arrow;
    } else {
      throw parse_error("unexpected character", line, col);
    }
    cur.toks.push_back(std::move(t));
  }
  flush();
  return lines;
}

// Cursor over one line's tokens.
class LineReader {
public:
  LineReader(const Line& line) : line_(line) {}

  bool done() const { return pos_ >= line_.toks.size(); }
  const Tok& peek() const {
    if (done()) throw parse_error("unexpected end of line", line_.number, end_column());
    return line_.toks[pos_];
  }
  Tok take() {
    Tok t = peek();
    ++pos_;
    return t;
  }
  std::string ident(const std::string& what) {
    const Tok& t = peek();
    if (t.kind != Tok::Ident)
      throw parse_error("expected " + what, t.line, t.column);
    return take().text;
  }
  long long integer(const std::string& what) {
    const Tok& t = peek();
    if (t.kind != Tok::Int) throw parse_error("expected " + what, t.line, t.column);
    return take().value;
  }
  void punct(Tok::Kind kind, const std::string& what) {
    const Tok& t = peek();
    if (t.kind != kind) throw parse_error("expected " + what, t.line, t.column);
    ++pos_;
  }
  void finish() {
    if (!done()) {
      const Tok& t = peek();
      throw parse_error("unexpected trailing tokens", t.line, t.column);
    }
  }
  int line_number() const { return line_.number; }
  int end_column() const {
    if (line_.toks.empty()) return 1;
    const Tok& t = line_.toks.back();
    return t.column + static_cast<int>(t.text.size()) + 1;
  }

private:
  const Line& line_;
  size_t pos_ = 0;
};

int narrow(long long v, long long lo, long long hi, const std::string& what,
           int line, int col) {
  if (v < lo || v > hi)
    throw parse_error(what + " out of range " + std::to_string(lo) + ".." +
                          std::to_string(hi),
                      line, col);
  return static_cast<int>(v);
}

// `(i,j,...)` with non-negative entries.
std::vector<int> parse_tuple(LineReader& r) {
  r.punct(Tok::LParen, "'('");
  std::vector<int> out;
  for (;;) {
    const Tok& t = r.peek();
    long long v = r.integer("vote entry");
    out.push_back(narrow(v, 0, max_agents, "tuple entry", t.line, t.column));
    if (r.peek().kind == Tok::Comma) {
      r.punct(Tok::Comma, "','");
      continue;
    }
    break;
  }
  r.punct(Tok::RParen, "')'");
  return out;
}

struct PendingTrans {
  Profile profile;      // rcgs
  std::vector<int> tuple;  // cgs, file values (1-based)
  std::string target;
  int line;
  int column;
};

struct PendingState {
  std::string name;
  int line;
  std::vector<std::string> label;
  bool saw_label = false;
  // rcgs
  std::vector<int> actions;          // per role, 0 = undeclared
  std::vector<std::vector<Agent>> members;
  std::vector<bool> saw_role;
  // cgs
  std::vector<int> degrees;
  bool saw_actions = false;
  std::vector<PendingTrans> trans;
  std::string default_target;
  bool saw_default = false;
  int default_line = 0;
  int default_column = 0;
};

struct Header {
  bool is_rcgs = true;
  int agents = 0;
  int roles = 0;
  std::vector<std::string> role_names;
  std::vector<std::string> props;
};

ParsedModel parse_raw(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  size_t li = 0;
  auto next_line = [&]() -> LineReader {
    if (li >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back().number;
      throw parse_error("unexpected end of file", last, 1);
    }
    return LineReader(lines[li++]);
  };

  Header h;
  {
    LineReader r = next_line();
    const Tok& t = r.peek();
    if (r.ident("'model'") != "model")
      throw parse_error("file must start with 'model v1'", t.line, t.column);
    std::string version = r.ident("format version");
    if (version != "v1")
      throw parse_error("unsupported format version '" + version + "'",
                        r.line_number(), 1);
    r.finish();
  }
  {
    LineReader r = next_line();
    const Tok& t = r.peek();
    if (r.ident("'kind'") != "kind")
      throw parse_error("expected 'kind rcgs' or 'kind cgs'", t.line, t.column);
    std::string kind = r.ident("model kind");
    if (kind == "rcgs")
      h.is_rcgs = true;
    else if (kind == "cgs")
      h.is_rcgs = false;
    else
      throw parse_error("unknown model kind '" + kind + "'", r.line_number(), 1);
    r.finish();
  }
  {
    LineReader r = next_line();
    const Tok& t = r.peek();
    if (r.ident("'agents'") != "agents")
      throw parse_error("expected 'agents N'", t.line, t.column);
    const Tok& vt = r.peek();
    h.agents = narrow(r.integer("agent count"), 0, max_agents, "agent count",
                      vt.line, vt.column);
    r.finish();
  }
  if (h.is_rcgs) {
    LineReader r = next_line();
    const Tok& t = r.peek();
    if (r.ident("'roles'") != "roles")
      throw parse_error("expected 'roles K'", t.line, t.column);
    const Tok& vt = r.peek();
    h.roles = narrow(r.integer("role count"), 0, max_roles, "role count",
                     vt.line, vt.column);
    r.finish();
    h.role_names.assign(static_cast<size_t>(h.roles), "");
    if (li < lines.size() && !lines[li].toks.empty() &&
        lines[li].toks[0].kind == Tok::Ident &&
        lines[li].toks[0].text == "rolenames") {
      LineReader rn = next_line();
      rn.ident("'rolenames'");
      for (int i = 0; i < h.roles; ++i)
        h.role_names[static_cast<size_t>(i)] = rn.ident("role name");
      rn.finish();
    }
  }
  {
    LineReader r = next_line();
    const Tok& t = r.peek();
    if (r.ident("'props'") != "props")
      throw parse_error("expected 'props ...'", t.line, t.column);
    std::set<std::string> seen;
    while (!r.done()) {
      const Tok& pt = r.peek();
      std::string p = r.ident("proposition name");
      if (!seen.insert(p).second)
        throw parse_error("duplicate proposition '" + p + "'", pt.line, pt.column);
      h.props.push_back(std::move(p));
    }
  }

  // State blocks. Names resolve in a second pass so forward references work.
  std::vector<PendingState> states;
  std::map<std::string, StateId> state_ids;
  while (li < lines.size()) {
    LineReader r = next_line();
    const Tok& head = r.peek();
    std::string keyword = r.ident("a block keyword");

    if (keyword == "state") {
      PendingState st;
      st.line = head.line;
      const Tok& nt = r.peek();
      st.name = r.ident("state name");
      r.finish();
      if (state_ids.count(st.name))
        throw parse_error("duplicate state '" + st.name + "'", nt.line, nt.column);
      state_ids[st.name] = static_cast<StateId>(states.size());
      if (h.is_rcgs) {
        st.actions.assign(static_cast<size_t>(h.roles), 0);
        st.members.assign(static_cast<size_t>(h.roles), {});
        st.saw_role.assign(static_cast<size_t>(h.roles), false);
      }
      states.push_back(std::move(st));
      continue;
    }
    if (states.empty())
      throw parse_error("'" + keyword + "' before the first state block",
                        head.line, head.column);
    PendingState& st = states.back();

    if (keyword == "label") {
      if (st.saw_label)
        throw parse_error("duplicate label line", head.line, head.column);
      st.saw_label = true;
      std::set<std::string> seen;
      while (!r.done()) {
        const Tok& pt = r.peek();
        std::string p = r.ident("proposition name");
        if (std::find(h.props.begin(), h.props.end(), p) == h.props.end())
          throw parse_error("unknown proposition '" + p + "'", pt.line, pt.column);
        if (!seen.insert(p).second)
          throw parse_error("proposition '" + p + "' labeled twice", pt.line,
                            pt.column);
        st.label.push_back(std::move(p));
      }
      continue;
    }
    if (keyword == "role") {
      if (!h.is_rcgs)
        throw parse_error("'role' line in a cgs file", head.line, head.column);
      const Tok& rt = r.peek();
      int role = narrow(r.integer("role index"), 1, h.roles, "role index",
                        rt.line, rt.column) - 1;
      if (st.saw_role[static_cast<size_t>(role)])
        throw parse_error("duplicate role line for role " + std::to_string(role + 1),
                          head.line, head.column);
      st.saw_role[static_cast<size_t>(role)] = true;
      const Tok& kt = r.peek();
      if (r.ident("'actions'") != "actions")
        throw parse_error("expected 'actions'", kt.line, kt.column);
      const Tok& at = r.peek();
      st.actions[static_cast<size_t>(role)] =
          narrow(r.integer("action count"), 0, max_action_count, "action count",
                 at.line, at.column);
      const Tok& mt = r.peek();
      if (r.ident("'members'") != "members")
        throw parse_error("expected 'members'", mt.line, mt.column);
      std::set<Agent> seen;
      while (!r.done()) {
        const Tok& et = r.peek();
        Agent a = narrow(r.integer("agent id"), 1, std::max(h.agents, 1),
                         "agent id", et.line, et.column);
        if (!seen.insert(a).second)
          throw parse_error("agent " + std::to_string(a) + " listed twice",
                            et.line, et.column);
        st.members[static_cast<size_t>(role)].push_back(a);
      }
      std::sort(st.members[static_cast<size_t>(role)].begin(),
                st.members[static_cast<size_t>(role)].end());
      continue;
    }
    if (keyword == "actions") {
      if (h.is_rcgs)
        throw parse_error("bare 'actions' line in an rcgs file (use 'role ... actions ...')",
                          head.line, head.column);
      if (st.saw_actions)
        throw parse_error("duplicate actions line", head.line, head.column);
      st.saw_actions = true;
      for (int a = 0; a < h.agents; ++a) {
        const Tok& at = r.peek();
        st.degrees.push_back(narrow(r.integer("degree"), 0, max_action_count,
                                    "degree", at.line, at.column));
      }
      r.finish();
      continue;
    }
    if (keyword == "trans") {
      PendingTrans tr;
      tr.line = head.line;
      tr.column = head.column;
      if (h.is_rcgs) {
        for (int role = 0; role < h.roles; ++role) {
          if (role) r.punct(Tok::Semi, "';' between role votes");
          tr.profile.push_back(parse_tuple(r));
        }
      } else {
        tr.tuple = parse_tuple(r);
      }
      r.punct(Tok::Arrow, "'->'");
      tr.target = r.ident("target state name");
      r.finish();
      st.trans.push_back(std::move(tr));
      continue;
    }
    if (keyword == "default") {
      if (st.saw_default)
        throw parse_error("duplicate default line", head.line, head.column);
      st.saw_default = true;
      st.default_line = head.line;
      st.default_column = head.column;
      r.punct(Tok::Arrow, "'->'");
      st.default_target = r.ident("target state name");
      r.finish();
      continue;
    }
    throw parse_error("unknown line keyword '" + keyword + "'", head.line,
                      head.column);
  }

  if (states.empty()) {
    int last = lines.empty() ? 1 : lines.back().number;
    throw parse_error("file declares no states", last, 1);
  }

  auto resolve = [&](const std::string& name, int line, int col) -> StateId {
    auto it = state_ids.find(name);
    if (it == state_ids.end())
      throw parse_error("unknown state '" + name + "'", line, col);
    return it->second;
  };

  if (h.is_rcgs) {
    Rcgs m;
    m.agent_count = h.agents;
    m.role_names = h.role_names;
    m.props = h.props;
    for (PendingState& st : states) {
      for (int role = 0; role < h.roles; ++role)
        if (!st.saw_role[static_cast<size_t>(role)])
          throw parse_error("state '" + st.name + "' is missing the line for role " +
                                std::to_string(role + 1),
                            st.line, 1);
      m.state_names.push_back(st.name);
      std::vector<bool> label(h.props.size(), false);
      for (const std::string& p : st.label)
        label[static_cast<size_t>(
            std::find(h.props.begin(), h.props.end(), p) - h.props.begin())] = true;
      m.labels.push_back(std::move(label));
      m.role_members.push_back(std::move(st.members));
      m.action_counts.push_back(std::move(st.actions));

      StateTransitions t;
      std::set<Profile> keys;
      for (PendingTrans& tr : st.trans) {
        // Arity and sum checks need the role declarations, hence block end.
        size_t qi = m.role_members.size() - 1;
        for (int role = 0; role < h.roles; ++role) {
          size_t ri = static_cast<size_t>(role);
          if (static_cast<int>(tr.profile[ri].size()) != m.action_counts[qi][ri])
            throw parse_error(
                "vote arity mismatch in role " + std::to_string(role + 1) +
                    " (expected " + std::to_string(m.action_counts[qi][ri]) +
                    " entries)",
                tr.line, tr.column);
          int sum = 0;
          for (int x : tr.profile[ri]) sum += x;
          if (sum != static_cast<int>(m.role_members[qi][ri].size()))
            throw parse_error(
                "vote sum mismatch in role " + std::to_string(role + 1) +
                    " (expected " +
                    std::to_string(m.role_members[qi][ri].size()) + ")",
                tr.line, tr.column);
        }
        if (!keys.insert(tr.profile).second)
          throw parse_error("profile keyed twice at state '" + st.name + "'",
                            tr.line, tr.column);
        t.entries.push_back(
            TransitionEntry{std::move(tr.profile), resolve(tr.target, tr.line, tr.column)});
      }
      if (st.saw_default)
        t.default_target = resolve(st.default_target, st.default_line, st.default_column);
      m.transitions.push_back(std::move(t));
    }
    return ParsedModel{std::move(m)};
  }

  Cgs m;
  m.agent_count = h.agents;
  m.props = h.props;
  for (PendingState& st : states) {
    if (!st.saw_actions)
      throw parse_error("state '" + st.name + "' is missing its actions line",
                        st.line, 1);
    m.state_names.push_back(st.name);
    std::vector<bool> label(h.props.size(), false);
    for (const std::string& p : st.label)
      label[static_cast<size_t>(
          std::find(h.props.begin(), h.props.end(), p) - h.props.begin())] = true;
    m.labels.push_back(std::move(label));
    m.action_counts.push_back(std::move(st.degrees));

    CgsStateTransitions t;
    std::set<ActionTuple> keys;
    size_t qi = m.action_counts.size() - 1;
    for (PendingTrans& tr : st.trans) {
      if (static_cast<int>(tr.tuple.size()) != h.agents)
        throw parse_error("tuple arity mismatch (expected " +
                              std::to_string(h.agents) + " entries)",
                          tr.line, tr.column);
      ActionTuple key(tr.tuple.size());
      for (size_t a = 0; a < tr.tuple.size(); ++a) {
        if (tr.tuple[a] < 1 || tr.tuple[a] > m.action_counts[qi][a])
          throw parse_error("action " + std::to_string(tr.tuple[a]) +
                                " out of range for agent " + std::to_string(a + 1),
                            tr.line, tr.column);
        key[a] = tr.tuple[a] - 1;  // files are 1-based, memory is 0-based
      }
      if (!keys.insert(key).second)
        throw parse_error("tuple keyed twice at state '" + st.name + "'",
                          tr.line, tr.column);
      t.entries.push_back(
          CgsTransitionEntry{std::move(key), resolve(tr.target, tr.line, tr.column)});
    }
    if (st.saw_default)
      t.default_target = resolve(st.default_target, st.default_line, st.default_column);
    m.transitions.push_back(std::move(t));
  }
  return ParsedModel{std::move(m)};
}

template <typename Model>
void validate_or_throw(const Model& m) {
  std::vector<Violation> violations = validate(m);
  if (violations.empty()) return;
  std::string msg = "model fails validation:";
  for (const Violation& v : violations) msg += "\n  " + to_string(v, m);
  throw error(msg);
}

}  // namespace

ParsedModel parse_model_any_raw(std::string_view text) { return parse_raw(text); }

ParsedModel parse_model_any(std::string_view text, std::int64_t compile_cap) {
  ParsedModel pm = parse_raw(text);
  if (pm.is_rcgs()) {
    validate_or_throw(pm.rcgs());
    pm.rcgs().compile(compile_cap);
  } else {
    validate_or_throw(pm.cgs());
    pm.cgs().compile(compile_cap);
  }
  return pm;
}

Rcgs parse_model(std::string_view text, std::int64_t compile_cap) {
  ParsedModel pm = parse_model_any(text, compile_cap);
  if (!pm.is_rcgs()) throw error("expected a role-based model (kind rcgs)");
  return std::move(pm.rcgs());
}

Cgs parse_cgs(std::string_view text, std::int64_t compile_cap) {
  ParsedModel pm = parse_model_any(text, compile_cap);
  if (pm.is_rcgs()) throw error("expected an action-tuple model (kind cgs)");
  return std::move(pm.cgs());
}

namespace {

void write_vote(std::ostringstream& os, const Vote& v) {
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
}

void write_header(std::ostringstream& os, std::string_view kind, int agents) {
  os << "model v1\n" << "kind " << kind << "\n" << "agents " << agents << "\n";
}

void write_props(std::ostringstream& os, const std::vector<std::string>& props) {
  os << "props";
  for (const std::string& p : props) os << ' ' << p;
  os << '\n';
}

void write_label(std::ostringstream& os, const std::vector<bool>& label,
                 const std::vector<std::string>& props) {
  os << "label";
  for (size_t p = 0; p < props.size(); ++p)
    if (label[p]) os << ' ' << props[p];
  os << '\n';
}

}  // namespace

std::string serialize_model(const Rcgs& m) {
  if (!m.compiled())
    throw std::logic_error("serialize_model requires a compiled model");
  std::ostringstream os;
  write_header(os, "rcgs", m.agent_count);
  os << "roles " << m.role_count() << "\n";
  bool any_name = std::any_of(m.role_names.begin(), m.role_names.end(),
                              [](const std::string& s) { return !s.empty(); });
  if (any_name) {
    os << "rolenames";
    for (int r = 0; r < m.role_count(); ++r) {
      const std::string& name = m.role_names[static_cast<size_t>(r)];
      os << ' ' << (name.empty() ? "r" + std::to_string(r + 1) : name);
    }
    os << '\n';
  }
  write_props(os, m.props);

  for (StateId q = 0; q < m.state_count(); ++q) {
    size_t qi = static_cast<size_t>(q);
    os << "state " << m.state_names[qi] << '\n';
    write_label(os, m.labels[qi], m.props);
    for (int r = 0; r < m.role_count(); ++r) {
      size_t ri = static_cast<size_t>(r);
      os << "role " << (r + 1) << " actions " << m.action_counts[qi][ri]
         << " members";
      for (Agent a : m.role_members[qi][ri]) os << ' ' << a;
      os << '\n';
    }
    std::vector<Profile> profiles =
        enumerate_profiles(m, q, Coalition::all(m.agent_count));
    for (const Profile& p : profiles) {
      os << "trans ";
      for (size_t r = 0; r < p.size(); ++r) {
        if (r) os << ';';
        write_vote(os, p[r]);
      }
      os << " -> " << m.state_names[static_cast<size_t>(m.target(q, p))] << '\n';
    }
  }
  return os.str();
}

std::string serialize_model(const Cgs& m) {
  if (!m.compiled())
    throw std::logic_error("serialize_model requires a compiled structure");
  std::ostringstream os;
  write_header(os, "cgs", m.agent_count);
  write_props(os, m.props);

  for (StateId q = 0; q < m.state_count(); ++q) {
    size_t qi = static_cast<size_t>(q);
    os << "state " << m.state_names[qi] << '\n';
    write_label(os, m.labels[qi], m.props);
    os << "actions";
    for (int d : m.action_counts[qi]) os << ' ' << d;
    os << '\n';
    const CgsStateIndex& idx = m.index(q);
    ActionTuple t(static_cast<size_t>(m.agent_count), 0);
    for (std::int64_t rank = 0; rank < idx.tuple_total; ++rank) {
      os << "trans (";
      for (int a = 0; a < m.agent_count; ++a) {
        if (a) os << ',';
        os << (t[static_cast<size_t>(a)] + 1);
      }
      os << ") -> "
         << m.state_names[static_cast<size_t>(idx.delta[static_cast<size_t>(rank)])]
         << '\n';
      // Odometer increment, last agent fastest; matches rank order.
      for (int a = m.agent_count - 1; a >= 0; --a) {
        size_t ai = static_cast<size_t>(a);
        if (++t[ai] < m.action_counts[qi][ai]) break;
        t[ai] = 0;
      }
    }
  }
  return os.str();
}

}  // namespace rolecheck
