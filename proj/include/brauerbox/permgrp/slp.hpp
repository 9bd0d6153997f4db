#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace brauerbox::permgrp {

/// Straight-line program over a fixed generator list. Each node is the
/// identity, a generator, a generator inverse, or a product of two earlier
/// nodes. Every node has its inverse allocated next to it, so evaluation
/// never needs anything beyond generator images and their inverses.
class Slp {
public:
  enum class Op : std::uint8_t { Identity, Gen, GenInverse, Mul };
  struct Node {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t inverse = 0;
  };

  explicit Slp(std::size_t num_generators = 0);

  std::size_t num_generators() const { return num_generators_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::uint32_t i) const { return nodes_[i]; }

  static constexpr std::uint32_t identity() { return 0; }
  std::uint32_t gen(std::size_t i) const { return static_cast<std::uint32_t>(1 + 2 * i); }
  std::uint32_t gen_inverse(std::size_t i) const { return static_cast<std::uint32_t>(2 + 2 * i); }
  std::uint32_t inverse(std::uint32_t n) const { return nodes_[n].inverse; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b);

  /// Word in generator indices (negative entries -(i+1) denote inverses).
  /// Only meant for short programs; length can be exponential in size().
  std::vector<int> expand(std::uint32_t n, std::size_t max_length) const;

private:
  std::size_t num_generators_;
  std::vector<Node> nodes_;
};

/// Memoizing evaluator of an Slp in some monoid T.
template <class T>
class SlpEvaluator {
public:
  using MulFn = std::function<T(const T&, const T&)>;

  SlpEvaluator(const Slp& slp, std::vector<T> gens, std::vector<T> gen_inverses, T identity, MulFn mul)
      : slp_(&slp), mul_(std::move(mul)), memo_(slp.size()) {
    if (gens.size() != slp.num_generators() || gen_inverses.size() != slp.num_generators())
      throw std::invalid_argument("generator image count does not match the program");
    memo_[0] = std::move(identity);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      memo_[slp.gen(i)] = std::move(gens[i]);
      memo_[slp.gen_inverse(i)] = std::move(gen_inverses[i]);
    }
  }

  const T& value(std::uint32_t n) {
    if (memo_.size() < slp_->size())
      memo_.resize(slp_->size());
    if (memo_[n])
      return *memo_[n];
    // children always precede parents, so a sorted sweep over the needed
    // nodes evaluates them without recursion
    std::vector<std::uint32_t> needed;
    std::vector<std::uint32_t> stack{n};
    std::vector<bool> mark(n + 1, false);
    mark[n] = true;
    while (!stack.empty()) {
      auto k = stack.back();
      stack.pop_back();
      needed.push_back(k);
      const auto& node = slp_->node(k);
      for (auto c : {node.a, node.b}) {
        if (node.op == Slp::Op::Mul && !memo_[c] && !mark[c]) {
          mark[c] = true;
          stack.push_back(c);
        }
      }
    }
    std::sort(needed.begin(), needed.end());
    for (auto k : needed) {
      const auto& node = slp_->node(k);
      memo_[k] = mul_(*memo_[node.a], *memo_[node.b]);
    }
    return *memo_[n];
  }

private:
  const Slp* slp_;
  MulFn mul_;
  std::vector<std::optional<T>> memo_;
};

} // namespace brauerbox::permgrp
