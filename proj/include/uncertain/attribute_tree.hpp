#ifndef UNCERTAIN_ATTRIBUTE_TREE_HPP
#define UNCERTAIN_ATTRIBUTE_TREE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace uncertain {

// Rooted labeled tree of attributes. The root is level 0 and is not itself
// an attribute; tree nodes from level 1 down are the keys used by the
// tree-keyed structures. Node ids are unique across the whole tree.
class AttributeTree {
 public:
  struct Node {
    std::string id;
    std::vector<std::string> children;
    std::size_t level = 0;  // 1 for first-level attributes
    std::string parent;     // empty for level-1 nodes
  };

  // Adds a level-1 attribute. Returns false when the id already exists.
  bool add_root_child(const std::string& id) { return add_child("", id); }

  // Adds a child of `parent` ("" for the root). Returns false when the id
  // already exists or the parent is unknown.
  bool add_child(const std::string& parent, const std::string& id) {
    if (nodes_.count(id)) return false;
    std::size_t level = 1;
    if (!parent.empty()) {
      auto it = nodes_.find(parent);
      if (it == nodes_.end()) return false;
      level = it->second.level + 1;
      it->second.children.push_back(id);
    } else {
      roots_.push_back(id);
    }
    nodes_[id] = Node{id, {}, level, parent};
    return true;
  }

  bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }

  const Node* node(const std::string& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
  }

  std::optional<std::size_t> level_of(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) return std::nullopt;
    return it->second.level;
  }

  const std::vector<std::string>& level1() const { return roots_; }

  std::vector<std::string> nodes_at_level(std::size_t level) const {
    std::vector<std::string> out;
    for (const auto& [id, n] : nodes_)
      if (n.level == level) out.push_back(id);
    return out;
  }

  // Every node id, level 1 to depth, in id order.
  std::vector<std::string> all_nodes() const {
    std::vector<std::string> out;
    for (const auto& [id, _] : nodes_) out.push_back(id);
    return out;
  }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& [_, n] : nodes_) d = std::max(d, n.level);
    return d;
  }

  std::size_t node_count() const { return nodes_.size(); }

 private:
  std::map<std::string, Node> nodes_;
  std::vector<std::string> roots_;
};

using NodeKey = std::set<std::string>;  // a subset of tree nodes

}  // namespace uncertain

#endif
