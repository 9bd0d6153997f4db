#include "brauerbox/permgrp/slp.hpp"

#include <algorithm>

#include "brauerbox/error.hpp"

namespace brauerbox::permgrp {

Slp::Slp(std::size_t num_generators) : num_generators_(num_generators) {
  nodes_.push_back({Op::Identity, 0, 0, 0});
  for (std::size_t i = 0; i < num_generators; ++i) {
    const auto g = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({Op::Gen, static_cast<std::uint32_t>(i), 0, g + 1});
    nodes_.push_back({Op::GenInverse, static_cast<std::uint32_t>(i), 0, g});
  }
}

std::uint32_t Slp::mul(std::uint32_t a, std::uint32_t b) {
  if (a == identity())
    return b;
  if (b == identity())
    return a;
  if (nodes_[a].inverse == b)
    return identity();
  const auto n = static_cast<std::uint32_t>(nodes_.size());
  const auto ia = nodes_[a].inverse;
  const auto ib = nodes_[b].inverse;
  nodes_.push_back({Op::Mul, a, b, n + 1});
  nodes_.push_back({Op::Mul, ib, ia, n});
  return n;
}

std::vector<int> Slp::expand(std::uint32_t n, std::size_t max_length) const {
  std::vector<int> out;
  std::vector<std::uint32_t> stack{n};
  while (!stack.empty()) {
    const auto k = stack.back();
    stack.pop_back();
    const auto& node = nodes_[k];
    switch (node.op) {
    case Op::Identity:
      break;
    case Op::Gen:
      out.push_back(static_cast<int>(node.a));
      break;
    case Op::GenInverse:
      out.push_back(-static_cast<int>(node.a) - 1);
      break;
    case Op::Mul:
      stack.push_back(node.b);
      stack.push_back(node.a);
      break;
    }
    if (out.size() > max_length)
      throw BoundExceeded("word expansion exceeds " + std::to_string(max_length) + " letters");
  }
  return out;
}

} // namespace brauerbox::permgrp
