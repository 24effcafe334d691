// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/problems/shortest_path.hpp"

#include "eumax/errors.hpp"

namespace eumax {

namespace {

class ShortestPathAdapter final : public ProblemAdapter {
 public:
  explicit ShortestPathAdapter(ShortestPathInstance inst) : inst_(std::move(inst)) {
    if (inst_.num_nodes < 2) throw InvalidInput("shortest path needs at least two nodes");
    if (inst_.source == inst_.sink) throw InvalidInput("source and sink must differ");
    if (inst_.source < 0 || inst_.source >= inst_.num_nodes || inst_.sink < 0 ||
        inst_.sink >= inst_.num_nodes)
      throw InvalidInput("source/sink out of range");
    if (inst_.edges.empty()) throw InvalidInput("shortest path needs edges");
    for (const auto& e : inst_.edges)
      if (e.from < 0 || e.from >= inst_.num_nodes || e.to < 0 || e.to >= inst_.num_nodes)
        throw InvalidInput("edge endpoint out of range");
    if (inst_.hop_cap == 0) inst_.hop_cap = static_cast<int>(inst_.edges.size());
    if (inst_.hop_cap < 1) throw InvalidInput("hop_cap must be >= 1");
    out_.resize(static_cast<std::size_t>(inst_.num_nodes));
    for (std::size_t i = 0; i < inst_.edges.size(); ++i)
      out_[static_cast<std::size_t>(inst_.edges[i].from)].push_back(static_cast<int>(i));
  }

  std::string name() const override { return "shortest_path"; }
  int num_stages() const override { return inst_.hop_cap; }
  std::vector<std::int64_t> initial_states() const override { return {inst_.source}; }

  void transitions(int, std::int64_t state, std::vector<Transition>& out) const override {
    if (state == inst_.sink) out.push_back(Transition{state, -1, -1});  // wait at the sink
    for (const int e : out_[static_cast<std::size_t>(state)])
      out.push_back(Transition{inst_.edges[static_cast<std::size_t>(e)].to, e, e});
  }

  bool accepting(std::int64_t state) const override { return state == inst_.sink; }

  bool check_solution(std::span<const std::int32_t> tags) const override {
    int at = inst_.source;
    for (const std::int32_t e : tags) {
      if (e < 0 || e >= static_cast<std::int32_t>(inst_.edges.size())) return false;
      if (inst_.edges[static_cast<std::size_t>(e)].from != at) return false;
      at = inst_.edges[static_cast<std::size_t>(e)].to;
    }
    return at == inst_.sink;
  }

  int num_elements() const override { return static_cast<int>(inst_.edges.size()); }
  const Distribution& element_weight(int element) const override {
    return inst_.edges[static_cast<std::size_t>(element)].weight;
  }
  std::string element_label(int element) const override {
    const auto& label = inst_.edges[static_cast<std::size_t>(element)].label;
    return label.empty() ? std::to_string(element) : label;
  }

 private:
  ShortestPathInstance inst_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

std::unique_ptr<ProblemAdapter> shortest_path_adapter(const ShortestPathInstance& instance) {
  return std::make_unique<ShortestPathAdapter>(instance);
}

}  // namespace eumax
