#include "mq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mq {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error(ErrorCode::MalformedInput, "invalid JSON");
  return j;
}

std::vector<std::vector<int>> int_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::MalformedInput, what + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorCode::MalformedInput, what + " rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorCode::MalformedInput, what + " entries must be integers");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

int positive_int(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw Error(ErrorCode::MalformedInput, what + " must be a positive integer");
  return j.get<int>();
}

const json& field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::MalformedInput, "missing key \"" + key + "\"");
  return j.at(key);
}

}  // namespace

std::string group_to_json(const FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["table"] = g.cayley();
  return j.dump() + "\n";
}

FiniteGroup group_from_json(const std::string& text) {
  const json j = parse(text);
  const int order = positive_int(field(j, "order"), "\"order\"");
  auto table = int_matrix(field(j, "table"), "\"table\"");
  if (static_cast<int>(table.size()) != order)
    throw Error(ErrorCode::MalformedInput, "\"order\" does not match the table size");
  return FiniteGroup::from_cayley(std::move(table));
}

std::string subgroup_to_json(const Subgroup& h) {
  json j;
  j["members"] = h.members;
  return j.dump() + "\n";
}

Subgroup subgroup_from_json(const std::string& text) {
  const json j = parse(text);
  const json& members = field(j, "members");
  if (!members.is_array()) throw Error(ErrorCode::MalformedInput, "\"members\" must be an array");
  std::vector<int> out;
  for (const auto& x : members) {
    if (!x.is_number_integer()) throw Error(ErrorCode::MalformedInput, "members must be integers");
    out.push_back(x.get<int>());
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorCode::MalformedInput, "duplicate subgroup member");
  return Subgroup{std::move(out)};
}

std::string table_family_to_json(const TableFamily& family) {
  json j;
  j["order"] = family.order;
  j["labels"] = family.labels;
  json tables = json::object();
  for (std::size_t i = 0; i < family.labels.size(); ++i) tables[family.labels[i]] = family.tables[i];
  j["tables"] = std::move(tables);
  return j.dump() + "\n";
}

std::string multirack_to_json(const MultiRack& m) { return table_family_to_json(m.family()); }

TableFamily table_family_from_json(const std::string& text) {
  const json j = parse(text);
  TableFamily family;
  family.order = positive_int(field(j, "order"), "\"order\"");

  const json& labels = field(j, "labels");
  if (!labels.is_array()) throw Error(ErrorCode::MalformedInput, "\"labels\" must be an array");
  for (const auto& l : labels) {
    if (!l.is_string()) throw Error(ErrorCode::MalformedInput, "labels must be strings");
    family.labels.push_back(l.get<std::string>());
  }

  const json& tables = field(j, "tables");
  if (!tables.is_object()) throw Error(ErrorCode::MalformedInput, "\"tables\" must be an object");
  if (tables.size() != family.labels.size())
    throw Error(ErrorCode::MalformedInput, "\"tables\" must have one entry per label");
  for (const auto& label : family.labels) {
    if (!tables.contains(label))
      throw Error(ErrorCode::MalformedInput, "missing table for label \"" + label + "\"");
    family.tables.push_back(int_matrix(tables.at(label), "table \"" + label + "\""));
  }
  check_shape(family);
  return family;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write file '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::MalformedInput, "write failed for '" + path + "'");
}

FiniteGroup read_group_file(const std::string& path) { return group_from_json(read_text_file(path)); }

TableFamily read_table_family_file(const std::string& path) {
  return table_family_from_json(read_text_file(path));
}

void write_multirack_file(const std::string& path, const MultiRack& m) {
  write_text_file(path, multirack_to_json(m));
}

void write_group_file(const std::string& path, const FiniteGroup& g) {
  write_text_file(path, group_to_json(g));
}

}  // namespace mq
