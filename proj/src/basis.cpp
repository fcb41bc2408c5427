#include "sdist/basis.hpp"

#include <algorithm>

namespace sdist {

BasisOrder::BasisOrder(std::size_t n, unsigned d, BasisMode mode, std::vector<Monomial> monomials)
    : n_(n), d_(d), mode_(mode), monomials_(std::move(monomials)) {
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

std::optional<std::size_t> BasisOrder::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Fill exponents[j..] with every split of at most `budget` (or exactly, when exact).
void enumerate_tail(std::vector<std::uint32_t>& exps, std::size_t j, unsigned budget, bool exact,
                    std::vector<Monomial>& out) {
  if (j == exps.size()) {
    if (!exact || budget == 0) out.emplace_back(exps);
    return;
  }
  for (unsigned e = 0; e <= budget; ++e) {
    exps[j] = e;
    enumerate_tail(exps, j + 1, budget - e, exact, out);
  }
  exps[j] = 0;
}

}  // namespace

BasisOrder enumerate_basis(long n, long d, BasisMode mode) {
  if (n < 2) throw DomainError("dimension n must be >= 2, got " + std::to_string(n));
  if (d < 0) throw DomainError("degree d must be >= 0, got " + std::to_string(d));
  const bool exact = mode == BasisMode::exact_degree;
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
  for (unsigned first = 0; first <= 1 && first <= static_cast<unsigned>(d); ++first) {
    exps[0] = first;
    enumerate_tail(exps, 1, static_cast<unsigned>(d) - first, exact, out);
  }
  std::sort(out.begin(), out.end());
  return BasisOrder(static_cast<std::size_t>(n), static_cast<unsigned>(d), mode, std::move(out));
}

}  // namespace sdist
