#include "trimat/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace trimat {

Substitution::Substitution(int n) : n_(n), zero_(n) {}

void Substitution::set(VarId v, BoolMatrix image) {
  if (image.dim() != n_) {
    throw std::invalid_argument("Substitution::set: image dimension " +
                                std::to_string(image.dim()) + " does not match " +
                                std::to_string(n_));
  }
  images_.insert_or_assign(v, std::move(image));
}

const BoolMatrix& Substitution::image(VarId v) const {
  const auto it = images_.find(v);
  return it == images_.end() ? zero_ : it->second;
}

BoolMatrix eval_word(const Word& w, const Substitution& phi) {
  if (w.empty()) {
    throw std::invalid_argument("eval_word: the empty word has no value in a semigroup");
  }
  BoolMatrix acc = phi.image(w.at(0));
  BoolMatrix scratch(phi.dim());
  for (std::size_t i = 1; i < w.length(); ++i) {
    mul_into(acc, phi.image(w.at(i)), scratch);
    std::swap(acc, scratch);
  }
  return acc;
}

BoolMatrix eval_polynomial(const Polynomial& p, const Substitution& phi) {
  BoolMatrix sum(phi.dim());
  for (const Word& w : p.summands()) {
    const BoolMatrix value = eval_word(w, phi);
    add_into(sum, value, sum);
  }
  return sum;
}

Substitution build_phi_uv(const Word& u, const Word& host, const Occurrence& occ, int n) {
  const std::size_t k = u.length();
  if (k >= static_cast<std::size_t>(n)) {
    throw std::invalid_argument("build_phi_uv: need |u| < n");
  }
  if (spelled(host, occ) != u) {
    throw std::invalid_argument("build_phi_uv: the occurrence does not spell u in the host");
  }
  const GapProfile gaps = gaps_of(host, occ);
  Substitution phi(n);
  const VarSet host_alpha = host.alphabet();
  for (VarId v = 0; v < 64; ++v) {
    if (!host_alpha.contains(v)) continue;
    BoolMatrix m(n);
    for (std::size_t l = 0; l <= k; ++l) {
      if (gaps.gap(l).contains(v)) m.set(static_cast<int>(l) + 1, static_cast<int>(l) + 1, true);
    }
    for (std::size_t l = 0; l < k; ++l) {
      if (u.at(l) == v) m.set(static_cast<int>(l) + 1, static_cast<int>(l) + 2, true);
    }
    phi.set(v, std::move(m));
  }
  return phi;
}

bool subword_criterion(const Word& u, const Word& host, const Occurrence& occ, int n,
                       const Word& probe) {
  const Substitution phi = build_phi_uv(u, host, occ, n);
  const BoolMatrix value = probe.empty() ? BoolMatrix::identity(n) : eval_word(probe, phi);
  return value.get(1, static_cast<int>(u.length()) + 1);
}

namespace {

// Claim evaluation on dense variable indices with preallocated buffers; the
// brute-force loops run entirely through this.
class ClaimEvaluator {
 public:
  ClaimEvaluator(const Claim& claim, int n)
      : identity_(is_identity(claim.kind())),
        lhs_(encode(claim.lhs(), claim)),
        rhs_(encode(claim.rhs(), claim)),
        images_(vars(claim).size(), BoolMatrix(n)),
        acc_(n),
        scratch_(n),
        lhs_value_(n),
        rhs_value_(n) {}

  static std::vector<VarId> vars(const Claim& claim) {
    std::vector<VarId> out;
    const VarSet alpha = claim.alphabet();
    for (VarId v = 0; v < 64; ++v) {
      if (alpha.contains(v)) out.push_back(v);
    }
    return out;
  }

  BoolMatrix& image_slot(std::size_t dense_index) { return images_[dense_index]; }

  // True iff the claim holds under the currently loaded images.
  bool satisfied() {
    eval_side(lhs_, lhs_value_);
    eval_side(rhs_, rhs_value_);
    return identity_ ? lhs_value_ == rhs_value_ : le(lhs_value_, rhs_value_);
  }

 private:
  using DenseWord = std::vector<std::uint8_t>;

  std::vector<DenseWord> encode(const Polynomial& p, const Claim& claim) {
    const std::vector<VarId> sorted = vars(claim);
    std::vector<DenseWord> out;
    for (const Word& w : p.summands()) {
      DenseWord dw;
      dw.reserve(w.length());
      for (VarId v : w.letters()) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        dw.push_back(static_cast<std::uint8_t>(it - sorted.begin()));
      }
      out.push_back(std::move(dw));
    }
    return out;
  }

  void eval_side(const std::vector<DenseWord>& side, BoolMatrix& out) {
    bool first = true;
    for (const DenseWord& w : side) {
      acc_ = images_[w[0]];
      for (std::size_t i = 1; i < w.size(); ++i) {
        mul_into(acc_, images_[w[i]], scratch_);
        std::swap(acc_, scratch_);
      }
      if (first) {
        out = acc_;
        first = false;
      } else {
        add_into(out, acc_, out);
      }
    }
  }

  bool identity_;
  std::vector<DenseWord> lhs_;
  std::vector<DenseWord> rhs_;
  std::vector<BoolMatrix> images_;
  BoolMatrix acc_;
  BoolMatrix scratch_;
  BoolMatrix lhs_value_;
  BoolMatrix rhs_value_;
};

Substitution materialize(const std::vector<VarId>& vars, const std::vector<std::uint64_t>& digits,
                         const std::function<BoolMatrix(std::uint64_t)>& element, int n) {
  Substitution phi(n);
  for (std::size_t j = 0; j < vars.size(); ++j) {
    phi.set(vars[j], element(digits[j]));
  }
  return phi;
}

OracleVerdict exhaustive_check(const Claim& claim, int n, std::uint64_t carrier_size,
                               const std::function<BoolMatrix(std::uint64_t)>& element,
                               std::uint64_t cap) {
  const std::vector<VarId> vars = ClaimEvaluator::vars(claim);
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (total > cap / carrier_size) {
      throw std::length_error("brute_force_check: " + std::to_string(carrier_size) + "^" +
                              std::to_string(vars.size()) + " substitutions exceed the cap of " +
                              std::to_string(cap));
    }
    total *= carrier_size;
  }

  ClaimEvaluator eval(claim, n);
  std::vector<std::uint64_t> digits(vars.size(), 0);
  for (std::size_t j = 0; j < vars.size(); ++j) eval.image_slot(j) = element(0);
  while (true) {
    if (!eval.satisfied()) {
      return {false, materialize(vars, digits, element, n)};
    }
    // odometer: last variable cycles fastest
    std::size_t j = vars.size();
    while (j > 0) {
      --j;
      if (++digits[j] < carrier_size) {
        eval.image_slot(j) = element(digits[j]);
        break;
      }
      digits[j] = 0;
      eval.image_slot(j) = element(0);
      if (j == 0) return {true, std::nullopt};
    }
    if (vars.empty()) return {true, std::nullopt};
  }
}

}  // namespace

OracleVerdict brute_force_check(const Claim& claim, int n, SpaceKind space, std::uint64_t cap) {
  if (space == SpaceKind::full) {
    throw std::invalid_argument("brute_force_check: space must be triangular or unitriangular");
  }
  const MatrixSpace ms(space, n, cap);
  return exhaustive_check(
      claim, n, ms.size(), [&](std::uint64_t i) { return ms[i]; }, cap);
}

OracleVerdict brute_force_check(const Claim& claim, std::span<const BoolMatrix> carrier,
                                std::uint64_t cap) {
  if (carrier.empty()) {
    throw std::invalid_argument("brute_force_check: empty carrier");
  }
  const int n = carrier.front().dim();
  for (const BoolMatrix& m : carrier) {
    if (m.dim() != n) throw std::invalid_argument("brute_force_check: mixed carrier dimensions");
  }
  return exhaustive_check(
      claim, n, carrier.size(), [&](std::uint64_t i) { return carrier[static_cast<std::size_t>(i)]; },
      cap);
}

std::optional<Substitution> random_falsify(const Claim& claim, int n, SpaceKind space,
                                           std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("random_falsify: trials must be >= 1");
  if (space == SpaceKind::full) {
    throw std::invalid_argument("random_falsify: space must be triangular or unitriangular");
  }
  const MatrixSpace ms(space, n);
  const std::vector<VarId> vars = ClaimEvaluator::vars(claim);
  ClaimEvaluator eval(claim, n);
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = ms.size() - 1;  // space sizes are powers of two
  std::vector<std::uint64_t> digits(vars.size(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (std::size_t j = 0; j < vars.size(); ++j) {
      digits[j] = rng() & mask;
      eval.image_slot(j) = ms[digits[j]];
    }
    if (!eval.satisfied()) {
      return materialize(vars, digits, [&](std::uint64_t i) { return ms[i]; }, n);
    }
  }
  return std::nullopt;
}

}  // namespace trimat
