#include "brauerbox/modrep/rep.hpp"

#include <stdexcept>

#include "brauerbox/error.hpp"

namespace brauerbox::modrep {

MatRep::MatRep(GroupPtr group, std::uint32_t p, std::size_t dim, std::vector<FpMatrix> matrices)
    : group_(std::move(group)), p_(p), dim_(dim), mats_(std::move(matrices)) {
  ffla::field(p);
  if (mats_.size() != group_->generators().size())
    throw std::invalid_argument("representation needs one matrix per group generator (got " +
                                std::to_string(mats_.size()) + ", expected " +
                                std::to_string(group_->generators().size()) + ")");
  for (const auto& m : mats_) {
    if (m.p() != p_ || m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("representation matrix has the wrong shape or field");
    auto inv = ffla::inverse(m);
    if (!inv)
      throw std::invalid_argument("representation matrix is singular");
    invs_.push_back(std::move(*inv));
  }
}

RepEvaluator::RepEvaluator(const MatRep& rep)
    : hom_(rep.group(), rep.matrices(), rep.inverses(), FpMatrix::identity(rep.p(), rep.dim()),
           [](const FpMatrix& a, const FpMatrix& b) { return a * b; }) {}

FpMatrix evaluate(const MatRep& rep, const Perm& g) { return RepEvaluator(rep).at(g); }

void spot_check(const MatRep& rep, std::uint64_t seed, int trials) {
  const auto& gens = rep.group()->generators();
  if (gens.empty())
    return;
  Rng rng(seed);
  RepEvaluator ev(rep);
  for (int t = 0; t < trials; ++t) {
    Perm g = rep.group()->identity();
    FpMatrix m = FpMatrix::identity(rep.p(), rep.dim());
    const auto len = 1 + rng.below(20);
    for (std::uint64_t k = 0; k < len; ++k) {
      const auto i = rng.below(gens.size());
      g = g * gens[i];
      m = m * rep.matrix(i);
    }
    if (ev.at(g) != m)
      throw InputError("representation does not respect a group relation");
  }
}

MatRep trivial_rep(GroupPtr group, std::uint32_t p) {
  std::vector<FpMatrix> mats(group->generators().size(), FpMatrix::identity(p, 1));
  return MatRep(std::move(group), p, 1, std::move(mats));
}

MatRep perm_rep(const permgrp::PermAction& action, std::uint32_t p) {
  const std::size_t n = action.size();
  std::vector<FpMatrix> mats;
  for (const auto& x : action.generator_images()) {
    FpMatrix m(p, n, n);
    for (permgrp::Point i = 0; i < n; ++i)
      m.set(i, x[i], 1);
    mats.push_back(std::move(m));
  }
  return MatRep(action.group(), p, n, std::move(mats));
}

MatRep restrict(const MatRep& rep, const GroupPtr& h) {
  if (h->degree() != rep.group()->degree() || !rep.group()->contains_group(*h))
    throw std::invalid_argument("restriction target is not a subgroup");
  RepEvaluator ev(rep);
  std::vector<FpMatrix> mats;
  for (const auto& x : h->generators())
    mats.push_back(ev.at(x));
  return MatRep(h, rep.p(), rep.dim(), std::move(mats));
}

MatRep induce(const MatRep& rep, const GroupPtr& g) {
  const auto& h = rep.group();
  permgrp::CosetTable cosets(g, h);
  const auto& reps = cosets.representatives();
  const std::size_t n = reps.size();
  const std::size_t d = rep.dim();
  RepEvaluator ev(rep);
  std::vector<FpMatrix> mats;
  for (const auto& s : g->generators()) {
    FpMatrix m(rep.p(), n * d, n * d);
    for (std::size_t i = 0; i < n; ++i) {
      const Perm x = reps[i] * s;
      const auto j = cosets.index_of(x);
      const auto block = ev.at(x * reps[j].inverse());
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          m.set(i * d + r, j * d + c, block.at(r, c));
    }
    mats.push_back(std::move(m));
  }
  return MatRep(g, rep.p(), n * d, std::move(mats));
}

MatRep dual(const MatRep& rep) {
  std::vector<FpMatrix> mats;
  for (std::size_t i = 0; i < rep.matrices().size(); ++i)
    mats.push_back(rep.inverse(i).transpose());
  return MatRep(rep.group(), rep.p(), rep.dim(), std::move(mats));
}

MatRep direct_sum(const MatRep& a, const MatRep& b) {
  if (a.group() != b.group() && !(a.group()->generators() == b.group()->generators()))
    throw std::invalid_argument("direct sum of representations of different groups");
  if (a.p() != b.p())
    throw std::invalid_argument("direct sum over different fields");
  std::vector<FpMatrix> mats;
  for (std::size_t i = 0; i < a.matrices().size(); ++i)
    mats.push_back(ffla::block_diag(a.matrix(i), b.matrix(i)));
  return MatRep(a.group(), a.p(), a.dim() + b.dim(), std::move(mats));
}

MatRep tensor(const MatRep& a, const MatRep& b) {
  if (a.group() != b.group() && !(a.group()->generators() == b.group()->generators()))
    throw std::invalid_argument("tensor product of representations of different groups");
  if (a.p() != b.p())
    throw std::invalid_argument("tensor product over different fields");
  const auto& f = ffla::field(a.p());
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<FpMatrix> mats;
  for (std::size_t i = 0; i < a.matrices().size(); ++i) {
    FpMatrix k(a.p(), da * db, da * db);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < da; ++c) {
        const auto x = a.matrix(i).at(r, c);
        if (x == 0)
          continue;
        for (std::size_t s = 0; s < db; ++s)
          for (std::size_t t = 0; t < db; ++t)
            k.set(r * db + s, c * db + t, f.mul(x, b.matrix(i).at(s, t)));
      }
    mats.push_back(std::move(k));
  }
  return MatRep(a.group(), a.p(), da * db, std::move(mats));
}

MatRep change_basis(const MatRep& rep, const FpMatrix& b) {
  const auto inv = ffla::inverse_or_throw(b);
  std::vector<FpMatrix> mats;
  for (const auto& m : rep.matrices())
    mats.push_back(b * m * inv);
  return MatRep(rep.group(), rep.p(), rep.dim(), std::move(mats));
}

std::uint32_t character_value(const LinearCharacter& lambda, const Perm& g) {
  const auto& f = ffla::field(lambda.p);
  std::vector<std::uint32_t> invs;
  for (auto v : lambda.values)
    invs.push_back(f.inv(v));
  permgrp::HomEvaluator<std::uint32_t> hom(lambda.group, lambda.values, std::move(invs), 1,
                                           [&f](std::uint32_t a, std::uint32_t b) { return f.mul(a, b); });
  return hom.at(g);
}

MatRep tensor_linear(const MatRep& rep, const LinearCharacter& lambda) {
  if (lambda.group->generators() != rep.group()->generators() || lambda.p != rep.p())
    throw std::invalid_argument("linear character lives on a different group or field");
  std::vector<FpMatrix> mats;
  for (std::size_t i = 0; i < rep.matrices().size(); ++i)
    mats.push_back(ffla::scale(rep.matrix(i), lambda.values[i]));
  return MatRep(rep.group(), rep.p(), rep.dim(), std::move(mats));
}

MatRep linear_rep(const LinearCharacter& lambda) {
  std::vector<FpMatrix> mats;
  for (auto v : lambda.values)
    mats.push_back(FpMatrix::from_rows(lambda.p, {{static_cast<std::int64_t>(v)}}));
  return MatRep(lambda.group, lambda.p, 1, std::move(mats));
}

bool is_permutation_rep(const MatRep& rep) {
  for (const auto& m : rep.matrices())
    for (std::size_t r = 0; r < m.rows(); ++r) {
      int ones = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.at(r, c) == 1)
          ++ones;
        else if (m.at(r, c) != 0)
          return false;
      }
      if (ones != 1)
        return false;
    }
  return true;
}

} // namespace brauerbox::modrep
