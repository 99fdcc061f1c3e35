#pragma once

#include <string>
#include <vector>

#include "core/int_matrix.hpp"

namespace meshk0 {

// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_s in
// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Accepts any list of cyclic orders; 0 contributes a free summand, 1 is
  // dropped, and the remaining orders are merged into a divisibility chain.
  AbelianGroup(long free_rank, std::vector<Integer> cyclic_orders);

  static AbelianGroup free(long rank) { return {rank, {}}; }
  static AbelianGroup trivial() { return {}; }

  long free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  bool operator==(const AbelianGroup&) const = default;

  // "Z^2 + (Z/2)^3 + Z/4"; "0" for the trivial group.
  std::string to_text() const;

 private:
  long free_rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const std::vector<AbelianGroup>& groups);
AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b);
// g^{⊕copies}
AbelianGroup power(const AbelianGroup& g, long copies);

}  // namespace meshk0
