#include "core/abelian_group.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"

namespace meshk0 {

namespace {

// Repeatedly replace pairs (x, y) by (gcd, lcm) until the list is a chain.
std::vector<Integer> normalize_chain(std::vector<Integer> orders) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      Integer g = gcd(orders[i], orders[j]);
      Integer l = orders[i] / g * orders[j];
      orders[i] = g;
      orders[j] = l;
    }
  }
  std::vector<Integer> chain;
  for (auto& o : orders)
    if (o > 1) chain.push_back(std::move(o));
  return chain;
}

}  // namespace

AbelianGroup::AbelianGroup(long free_rank, std::vector<Integer> cyclic_orders) : free_rank_(free_rank) {
  if (free_rank < 0) throw ParameterError("negative free rank");
  std::vector<Integer> finite;
  for (auto& o : cyclic_orders) {
    Integer v = abs(o);
    if (v == 0)
      ++free_rank_;
    else if (v > 1)
      finite.push_back(std::move(v));
  }
  torsion_ = normalize_chain(std::move(finite));
}

std::string AbelianGroup::to_text() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1)
    parts.emplace_back("Z");
  else if (free_rank_ > 1)
    parts.push_back("Z^" + std::to_string(free_rank_));
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::string cyc = "Z/" + torsion_[i].get_str();
    if (j - i == 1)
      parts.push_back(cyc);
    else
      parts.push_back("(" + cyc + ")^" + std::to_string(j - i));
    i = j;
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " + " : "") << parts[i];
  return out.str();
}

AbelianGroup direct_sum(const std::vector<AbelianGroup>& groups) {
  long rank = 0;
  std::vector<Integer> orders;
  for (const auto& g : groups) {
    rank += g.free_rank();
    orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
  }
  return {rank, std::move(orders)};
}

AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) { return direct_sum({a, b}); }

AbelianGroup power(const AbelianGroup& g, long copies) {
  if (copies < 0) throw ParameterError("negative multiplicity");
  return direct_sum(std::vector<AbelianGroup>(static_cast<std::size_t>(copies), g));
}

}  // namespace meshk0
