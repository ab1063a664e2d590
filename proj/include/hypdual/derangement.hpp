#ifndef HYPDUAL_DERANGEMENT_HPP
#define HYPDUAL_DERANGEMENT_HPP

#include "hypdual/gaussian_rational.hpp"

#include <vector>

namespace hypdual {

/// Finite set of pairwise-distinct points in Q(i); distinctness is checked
/// exactly on construction.
class PointSet {
public:
    explicit PointSet(std::vector<GaussianRational> elements);

    const std::vector<GaussianRational>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool contains(const GaussianRational& x) const;

private:
    std::vector<GaussianRational> elements_;
};

/// Multiset of points; repetitions allowed, possibly empty.
struct PointMultiset {
    std::vector<GaussianRational> elements;

    int size() const { return static_cast<int>(elements.size()); }
};

/// gamma(a; A, B) = prod_{x in B} (a-x) / prod_{y in A \ {a}} (a-y),
/// empty products equal to one. Requires a in A.
GaussianRational gamma_coeff(const GaussianRational& a, const PointSet& A, const PointMultiset& B);

/// sum_{a in A} gamma(a; A, B), by direct summation. Requires |A| >= |B|.
GaussianRational derangement_sum(const PointSet& A, const PointMultiset& B);

/// The closed form the sum must equal:
///   0            if |A| > |B| + 1,
///   1            if |A| = |B| + 1,
///   sum A - sum B  if |A| = |B|.
GaussianRational predicted_sum(const PointSet& A, const PointMultiset& B);

} // namespace hypdual

#endif // HYPDUAL_DERANGEMENT_HPP
