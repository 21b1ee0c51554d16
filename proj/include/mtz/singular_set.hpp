#ifndef MTZ_SINGULAR_SET_HPP
#define MTZ_SINGULAR_SET_HPP

#include "mtz/complexval.hpp"

#include <string>
#include <vector>

namespace mtz {

// Classification of a point of C^3 against the singular set
//   s_a + s_b = 1 - l  (1 <= a < b <= 3, l >= 0)   and   s1 + s2 + s3 = 2.
enum class SingularKind {
    regular,
    pair_hyperplane,
    total_plane,
    integer_indeterminacy,
};

struct HyperplaneHit {
    bool total = false; // true: s1+s2+s3 = 2; false: pair hyperplane
    int a = 0, b = 0;   // 1-based pair indices when !total
    int l = 0;          // offset index: s_a + s_b = 1 - l
    double distance = 0.0;
};

struct SingularityReport {
    SingularKind kind = SingularKind::regular;
    double distance = 0.0;            // |s_a+s_b-(1-l)| resp. |s1+s2+s3-2| of the nearest feature
    std::vector<HyperplaneHit> hits;  // every feature within the query threshold
    std::string describe() const;
};

// Hyperplane family descriptors for general depth r (enumeration only).
struct HyperplaneFamily {
    std::vector<int> subset;  // 1-based variable indices; full set for the total plane
    int base = 0;             // sum = base - l (subset families) or sum = base (total)
    bool l_family = false;    // true if an infinite family indexed by l >= 0
    std::string describe() const;
};

std::vector<HyperplaneFamily> possible_singular_hyperplanes(int r);

// Nearest feature among all pair hyperplanes + the total plane; hits within
// `threshold` are collected. Lattice points of the singular set with integer
// coordinates are classified as points of indeterminacy.
SingularityReport classify_point(Cplx s1, Cplx s2, Cplx s3, double threshold = 1e-9);

} // namespace mtz

#endif
