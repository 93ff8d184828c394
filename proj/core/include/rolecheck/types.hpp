#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rolecheck {

// Exact integer type for counting. Profile and tuple counts outgrow 64 bits
// quickly (they are products of binomials), so every counting interface that
// is not backed by a materialized table uses BigInt.
using BigInt = boost::multiprecision::cpp_int;

using StateId = int;  // dense index into Rcgs::state_names / Cgs::state_names
using Agent = int;    // 1-based agent id

// A vote records, per action of one role, how many coalition members picked
// that action. Length equals the role's action count at the state; the entry
// sum equals the number of coalition members in the role at the state.
using Vote = std::vector<int>;

// One vote per role, in role order. A profile is "complete" when every vote
// sums to the full role size at the state, "partial" otherwise.
using Profile = std::vector<Vote>;

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Lexical or semantic error in a model file or formula, with 1-based input
// coordinates.
class parse_error : public error {
public:
  parse_error(const std::string& message, int line, int column)
      : error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  int line;
  int column;
};

// A formula mentions a proposition or agent the model does not have.
class bind_error : public error {
public:
  using error::error;
};

// A requested materialization (translation, strategy enumeration, dense
// transition table) exceeds its configured size cap.
class cap_error : public error {
public:
  using error::error;
};

// Sorted duplicate-free set of 1-based agent ids.
struct Coalition {
  std::vector<Agent> members;

  Coalition() = default;
  explicit Coalition(std::vector<Agent> agents) : members(std::move(agents)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  static Coalition all(int agent_count) {
    Coalition c;
    c.members.reserve(static_cast<size_t>(agent_count));
    for (Agent a = 1; a <= agent_count; ++a) c.members.push_back(a);
    return c;
  }
  static Coalition none() { return Coalition{}; }

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(Agent a) const {
    return std::binary_search(members.begin(), members.end(), a);
  }
  Coalition complement(int agent_count) const {
    Coalition c;
    for (Agent a = 1; a <= agent_count; ++a)
      if (!contains(a)) c.members.push_back(a);
    return c;
  }

  bool operator==(const Coalition&) const = default;
  auto operator<=>(const Coalition&) const = default;
};

std::string to_string(const Coalition& c);

}  // namespace rolecheck
