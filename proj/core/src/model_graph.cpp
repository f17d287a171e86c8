#include "kabar/model_graph.hpp"

#include <stdexcept>

namespace kabar {

ModelEdgeId ModelGraph::add_edge(ModelNode from, ModelNode to, EdgeWeight weight,
                                 std::int32_t payload) {
  if (from >= out_.size() || to >= out_.size()) {
    throw std::invalid_argument("model edge endpoint out of range");
  }
  const auto id = static_cast<ModelEdgeId>(edges_.size());
  edges_.push_back({from, to, weight, payload});
  active_.push_back(1);
  out_[from].push_back(id);
  ++active_count_;
  return id;
}

void ModelGraph::remove_edge(ModelEdgeId e) {
  if (active_[e]) {
    active_[e] = 0;
    --active_count_;
  }
}

}  // namespace kabar
