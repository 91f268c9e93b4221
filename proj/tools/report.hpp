#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsphere/rational.hpp"

namespace nsphere::cli {

enum class Emit { text, json, csv };

/// One output value. Exact rationals are always carried as text ("p/q") so
/// no format loses precision; reals are rounded to 12 significant digits.
struct Cell {
  enum class Kind { text, integer, real, exact, boolean };
  Kind kind = Kind::text;
  std::string s;
  long long i = 0;
  double d = 0.0;

  Cell(std::string v) : kind(Kind::text), s(std::move(v)) {}
  Cell(const char* v) : kind(Kind::text), s(v) {}
  Cell(int v) : kind(Kind::integer), i(v) {}
  Cell(long v) : kind(Kind::integer), i(v) {}
  Cell(long long v) : kind(Kind::integer), i(v) {}
  Cell(unsigned long v) : kind(Kind::integer), i(static_cast<long long>(v)) {}
  Cell(unsigned v) : kind(Kind::integer), i(v) {}
  Cell(double v) : kind(Kind::real), d(v) {}
  Cell(bool v) : kind(Kind::boolean), i(v) {}
  Cell(const BigRational& v) : kind(Kind::exact), s(to_string(v)) {}

  std::string str() const;
};

struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// A report is an ordered list of sections.
///  text: "# name" then a column-aligned table, sections separated by a blank line
///  csv:  "# name", header, rows; sections separated by a blank line
///  json: one object, section name -> array of row objects
struct Report {
  std::vector<Section> sections;

  Section& section(std::string name, std::vector<std::string> columns) {
    sections.push_back({std::move(name), std::move(columns), {}});
    return sections.back();
  }

  void write(std::ostream& out, Emit emit) const;
};

}  // namespace nsphere::cli
