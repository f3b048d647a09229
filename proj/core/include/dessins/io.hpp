#pragma once

// Serialization: dessin JSON, invariants JSON, and the class-table emitters
// (aligned text and CSV) shared by the CLI and the test suites.

#include <iosfwd>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins::io {

// {"group": "<spec>" | {"order": n, "table": [[...]]}, "x": i, "y": i}
std::string dessin_to_json(const Dessin& d);
Dessin dessin_from_json(const std::string& text);
Dessin dessin_from_file(const std::string& path);

std::string invariants_to_json(const DessinInvariants& inv);

// explicit-table group JSON: {"order": n, "table": [[...]]}
std::string group_to_json(const FiniteGroup& g);

struct ClassRow {
  std::string id, pair, type, genus, graph, symmetric;
};

ClassRow make_row(const std::string& id, const Dessin& d, const DessinInvariants& inv);

// columns: id | pair | type | genus | graph | symmetric
void emit_table(std::ostream& out, const std::vector<ClassRow>& rows);
// same columns, comma separated, fields with commas quoted
void emit_csv(std::ostream& out, const std::vector<ClassRow>& rows);

}  // namespace dessins::io
