#include "hypdual/derangement.hpp"

#include "hypdual/errors.hpp"

#include <utility>

namespace hypdual {

PointSet::PointSet(std::vector<GaussianRational> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (std::size_t j = i + 1; j < elements_.size(); ++j) {
            if (elements_[i] == elements_[j])
                throw distinctness_violation("PointSet: element " + elements_[i].str() +
                                             " repeats");
        }
    }
}

bool PointSet::contains(const GaussianRational& x) const {
    for (const auto& e : elements_) {
        if (e == x) return true;
    }
    return false;
}

GaussianRational gamma_coeff(const GaussianRational& a, const PointSet& A, const PointMultiset& B) {
    if (!A.contains(a)) throw element_not_in_set("gamma_coeff: " + a.str() + " not in A");
    GaussianRational num(1);
    for (const auto& x : B.elements) num *= a - x;
    GaussianRational den(1);
    for (const auto& y : A.elements()) {
        if (y == a) continue;
        den *= a - y;
    }
    return num / den;
}

GaussianRational derangement_sum(const PointSet& A, const PointMultiset& B) {
    if (A.size() < B.size())
        throw domain_violation("derangement_sum: |A| >= |B| required");
    GaussianRational sum;
    for (const auto& a : A.elements()) sum += gamma_coeff(a, A, B);
    return sum;
}

GaussianRational predicted_sum(const PointSet& A, const PointMultiset& B) {
    if (A.size() < B.size())
        throw domain_violation("predicted_sum: |A| >= |B| required");
    if (A.size() > B.size() + 1) return GaussianRational(0);
    if (A.size() == B.size() + 1) return GaussianRational(1);
    GaussianRational sum;
    for (const auto& a : A.elements()) sum += a;
    for (const auto& b : B.elements) sum -= b;
    return sum;
}

} // namespace hypdual
