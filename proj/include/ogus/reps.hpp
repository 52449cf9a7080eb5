#pragma once

#include "ogus/rootsys.hpp"
#include "ogus/weyl.hpp"

#include <map>

namespace ogus {

// weights may carry trailing central coordinates beyond the root-system dimension
using WeightMultiset = std::map<Weight, long long>;
// mu-weight -> multiplicity
using MuProfile = std::map<long long, long long>;

long long dimension(const WeightMultiset& V);

WeightMultiset std_weights(const RootSystem& rs);
// type B: spin; type D: half-spin with the given parity of minus signs (0 even, 1 odd)
WeightMultiset spin_weights(CartanType t, int m, int parity = 0);
WeightMultiset wedge(const WeightMultiset& V, int k);
WeightMultiset dual(const WeightMultiset& V);
WeightMultiset dsum(const WeightMultiset& V, const WeightMultiset& W);
// append one central coordinate with the given value to every weight
WeightMultiset with_central(const WeightMultiset& V, Q c);

MuProfile mu_profile(const WeightMultiset& V, const Weight& mu);
bool is_cy(const WeightMultiset& V, const Weight& mu);

// sum of weights in the lowest mu-weight space
Weight hasse_character(const WeightMultiset& V, const Weight& mu);
// same, but only for two-weight representations
Weight hodge_character(const WeightMultiset& V, const Weight& mu);

Weight truncate(const Weight& w, int dim);
// W acts on the first rank-many coordinates, central coordinates are fixed
bool is_weyl_stable(const WeylGroup& W, const WeightMultiset& V);

}  // namespace ogus
