#include "dessins/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dessins::io {

namespace {

using nlohmann::json;

json group_json(const FiniteGroup& g) {
  json rows = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return json{{"order", g.order()}, {"table", std::move(rows)}};
}

GroupPtr group_from_json(const json& j) {
  if (j.is_string()) return build_group(j.get<std::string>());
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw std::invalid_argument("dessin json: group must be a spec string or {order, table}");
  int order = j.at("order").get<int>();
  std::vector<int> table;
  table.reserve(static_cast<size_t>(order) * order);
  for (const auto& row : j.at("table")) {
    if (static_cast<int>(row.size()) != order)
      throw std::invalid_argument("dessin json: table row length mismatch");
    for (const auto& v : row) table.push_back(v.get<int>());
  }
  return std::make_shared<FiniteGroup>(FiniteGroup::from_table(order, std::move(table)));
}

}  // namespace

std::string dessin_to_json(const Dessin& d) {
  json j;
  if (!d.group->spec_text().empty())
    j["group"] = d.group->spec_text();
  else
    j["group"] = group_json(*d.group);
  j["x"] = d.x;
  j["y"] = d.y;
  return j.dump();
}

Dessin dessin_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object() || !j.contains("group") || !j.contains("x") || !j.contains("y"))
    throw std::invalid_argument("dessin json: expected {group, x, y}");
  return new_dessin(group_from_json(j.at("group")), j.at("x").get<int>(), j.at("y").get<int>());
}

Dessin dessin_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open dessin file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return dessin_from_json(buf.str());
}

std::string group_to_json(const FiniteGroup& g) { return group_json(g).dump(); }

std::string invariants_to_json(const DessinInvariants& inv) {
  json j;
  j["type"] = inv.type;
  j["euler_characteristic"] = inv.euler_characteristic;
  j["genus"] = inv.genus;
  j["core_order"] = inv.core_order;
  j["core_exponent"] = inv.core_exponent ? json(*inv.core_exponent) : json(nullptr);
  j["black_vertices"] = inv.black_vertices;
  j["white_vertices"] = inv.white_vertices;
  j["faces"] = inv.faces;
  j["symmetric"] = inv.symmetric;
  j["reflexible"] = inv.reflexible;
  j["totally_symmetric"] = inv.totally_symmetric;
  j["nilpotency_class"] = inv.nilpotency_class ? json(*inv.nilpotency_class) : json(nullptr);
  j["graph"] = json{{"black_count", inv.graph.black_count},
                    {"white_count", inv.graph.white_count},
                    {"edge_count", inv.graph.edges.size()},
                    {"descriptor", inv.graph.descriptor()}};
  return j.dump();
}

ClassRow make_row(const std::string& id, const Dessin& d, const DessinInvariants& inv) {
  ClassRow row;
  row.id = id;
  row.pair = "(" + d.group->label(d.x) + "," + d.group->label(d.y) + ")";
  row.type = "(" + std::to_string(inv.type[0]) + "," + std::to_string(inv.type[1]) + "," +
             std::to_string(inv.type[2]) + ")";
  row.genus = std::to_string(inv.genus);
  row.graph = inv.graph.descriptor();
  row.symmetric = inv.totally_symmetric ? "Total" : (inv.symmetric ? "Yes" : "No");
  return row;
}

void emit_table(std::ostream& out, const std::vector<ClassRow>& rows) {
  out << "id | pair | type | genus | graph | symmetric\n";
  for (const ClassRow& r : rows)
    out << r.id << " | " << r.pair << " | " << r.type << " | " << r.genus << " | " << r.graph
        << " | " << r.symmetric << "\n";
}

void emit_csv(std::ostream& out, const std::vector<ClassRow>& rows) {
  auto field = [](const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
  };
  out << "id,pair,type,genus,graph,symmetric\n";
  for (const ClassRow& r : rows)
    out << field(r.id) << ',' << field(r.pair) << ',' << field(r.type) << ',' << field(r.genus)
        << ',' << field(r.graph) << ',' << field(r.symmetric) << "\n";
}

}  // namespace dessins::io
