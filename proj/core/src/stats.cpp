#include "rolecheck/stats.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "rolecheck/combinatorics.hpp"

namespace rolecheck {

namespace {

BigInt int_pow(BigInt base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

SizeReport size_report(const Rcgs& m, const Cgs* paired) {
  if (paired && paired->state_count() != m.state_count())
    throw std::invalid_argument("size_report: paired model has a different state count");

  SizeReport report;
  report.total_profiles = 0;
  report.total_tuples = 0;

  for (StateId q = 0; q < m.state_count(); ++q) {
    size_t qi = static_cast<size_t>(q);
    SizeRow row;
    row.state = q;
    row.profiles = profile_count(m, q);
    row.members_pow = 1;
    row.actions_pow = 1;
    row.tuples = 1;
    for (int r = 0; r < m.role_count(); ++r) {
      size_t ri = static_cast<size_t>(r);
      int members = static_cast<int>(m.role_members[qi][ri].size());
      int actions = m.action_counts[qi][ri];
      // members^actions undercounts votes only when the base drops below 2;
      // those roles contribute their exact vote count instead.
      row.members_pow *= members >= 2 ? int_pow(members, actions)
                                      : composition_count(members, actions);
      row.actions_pow *= int_pow(actions, members);
      row.tuples *= int_pow(actions, members);
    }
    if (paired) row.tuples = tuple_count(*paired, q);
    row.ratio = row.profiles == 0
                    ? 0.0
                    : row.tuples.convert_to<double>() / row.profiles.convert_to<double>();
    if (row.profiles > row.members_pow || row.profiles > row.actions_pow ||
        row.profiles > row.tuples)
      report.bounds_ok = false;
    report.total_profiles += row.profiles;
    report.total_tuples += row.tuples;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_table(const SizeReport& report, const Rcgs& m) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"state", "profiles", "members^actions", "actions^members",
                   "tuples", "tuples/profiles"});
  for (const SizeRow& row : report.rows) {
    std::ostringstream ratio;
    ratio << std::setprecision(4) << row.ratio;
    cells.push_back({m.state_names[static_cast<size_t>(row.state)],
                     row.profiles.str(), row.members_pow.str(),
                     row.actions_pow.str(), row.tuples.str(), ratio.str()});
  }
  cells.push_back({"total", report.total_profiles.str(), "", "",
                   report.total_tuples.str(), ""});

  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : cells) {
    std::ostringstream line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) line << "  ";
      line << (c ? std::right : std::left) << std::setw(static_cast<int>(width[c]))
           << row[c];
    }
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << '\n';
  }
  return out.str();
}

std::string render_records(const SizeReport& report, const Rcgs& m) {
  std::ostringstream out;
  for (const SizeRow& row : report.rows) {
    out << "state=" << m.state_names[static_cast<size_t>(row.state)]
        << " profiles=" << row.profiles.str()
        << " members_pow=" << row.members_pow.str()
        << " actions_pow=" << row.actions_pow.str()
        << " tuples=" << row.tuples.str() << " ratio=" << std::setprecision(6)
        << row.ratio << '\n';
  }
  out << "total profiles=" << report.total_profiles.str()
      << " tuples=" << report.total_tuples.str()
      << " bounds_ok=" << (report.bounds_ok ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace rolecheck
