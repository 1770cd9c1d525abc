#pragma once

#include <string>

#include "mq/group.hpp"
#include "mq/multirack.hpp"

namespace mq {

// File formats (text, UTF-8, JSON):
//   group     {"order": n, "table": [[...], ...]}       row index = left factor
//   subgroup  {"members": [...]}
//   multirack {"order": m, "labels": [...], "tables": {"<label>": [[...], ...]}}
// Writers emit a stable byte layout so identical values serialize identically.

std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text);  // validates via from_cayley

std::string subgroup_to_json(const Subgroup& h);
Subgroup subgroup_from_json(const std::string& text);  // shape only; pair with is_subgroup

std::string multirack_to_json(const MultiRack& m);
std::string table_family_to_json(const TableFamily& family);
TableFamily table_family_from_json(const std::string& text);  // shape-checked, not verified

// Thin file wrappers; read errors surface as MalformedInput.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

FiniteGroup read_group_file(const std::string& path);
TableFamily read_table_family_file(const std::string& path);
void write_multirack_file(const std::string& path, const MultiRack& m);
void write_group_file(const std::string& path, const FiniteGroup& g);

}  // namespace mq
