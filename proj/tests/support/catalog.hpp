#pragma once

#include <string>
#include <vector>

#include "critforge/graph.hpp"
#include "critforge/tree_document.hpp"

namespace testkit {

/// One representative of every isomorphism class of trees on n vertices,
/// vertices named "v01", "v02", ...
std::vector<critforge::Tree> trees_with(std::size_t n);

/// All trees with 2..max_n vertices.
std::vector<critforge::Tree> trees_up_to(std::size_t max_n);

critforge::Tree path(std::size_t n);
/// Center "c", leaves "l1".."lk".
critforge::Tree star(std::size_t leaves);
critforge::Tree tree_of(
    const std::vector<std::pair<std::string, std::string>>& edges);
critforge::Tree tree_of(const std::vector<std::pair<int, int>>& edges);

/// 14 vertices, 7 leaves, one irregular splitting.
critforge::Tree seven_leaf_tree();

std::string fixture_path(const std::string& name);
critforge::TreeDocument fixture(const std::string& name);

}  // namespace testkit
