#pragma once

#include <string>

#include "treebound/tree.hpp"

namespace treebound {

/// Edge-list JSON codec: {"n": int, "edges": [[u,v], ...]}.
std::string tree_to_json(const Tree& t);
Tree tree_from_json(const std::string& text);

}  // namespace treebound
