#include "report.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"
#include "nsphere/closed_forms.hpp"

namespace nsphere::cli {

std::string Cell::str() const {
  switch (kind) {
    case Kind::integer:
      return std::to_string(i);
    case Kind::real:
      return format_real(d);
    case Kind::boolean:
      return i ? "true" : "false";
    default:
      return s;
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json to_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::integer:
      return c.i;
    case Cell::Kind::real:
      // round-trips through the 12-digit text so all formats agree
      return std::stod(format_real(c.d));
    case Cell::Kind::boolean:
      return c.i != 0;
    default:
      return c.s;
  }
}

void write_text(std::ostream& out, const Section& s) {
  std::vector<std::size_t> width(s.columns.size());
  for (std::size_t c = 0; c < s.columns.size(); ++c) width[c] = s.columns[c].size();
  for (const auto& row : s.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].str().size());

  auto line = [&](auto get) {
    std::string text;
    for (std::size_t c = 0; c < s.columns.size(); ++c) {
      const std::string cell = get(c);
      text += cell;
      if (c + 1 < s.columns.size()) text += std::string(width[c] - cell.size() + 2, ' ');
    }
    out << text << '\n';
  };
  out << "# " << s.name << '\n';
  line([&](std::size_t c) { return s.columns[c]; });
  for (const auto& row : s.rows) line([&](std::size_t c) { return row[c].str(); });
}

}  // namespace

void Report::write(std::ostream& out, Emit emit) const {
  if (emit == Emit::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& s : sections) {
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : s.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < s.columns.size(); ++c) obj[s.columns[c]] = to_json(row[c]);
        rows.push_back(std::move(obj));
      }
      doc[s.name] = std::move(rows);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  bool first = true;
  for (const auto& s : sections) {
    if (!first) out << '\n';
    first = false;
    if (emit == Emit::text) {
      write_text(out, s);
      continue;
    }
    out << "# " << s.name << '\n';
    for (std::size_t c = 0; c < s.columns.size(); ++c)
      out << (c ? "," : "") << csv_field(s.columns[c]);
    out << '\n';
    for (const auto& row : s.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c].str());
      out << '\n';
    }
  }
}

}  // namespace nsphere::cli
