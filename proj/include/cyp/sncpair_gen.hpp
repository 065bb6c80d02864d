#ifndef CYP_SNCPAIR_GEN_HPP
#define CYP_SNCPAIR_GEN_HPP

#include <random>

#include <cyp/sncpair.hpp>

namespace cyp::snc
{

// Random consistent stratum table with a blow-up center: 1..max_components
// components, d in [1, 5], codimension r in [1, 5] with s <= r components
// containing the center (all of positive multiplicity), a random down-closed
// family of nonempty strata and chi values in [-9, 9]. The result always
// passes validate().
SncPair random_blowup_pair(std::mt19937_64 &rng, int max_components = 8);

// Random valid pair without a center (any nonzero d in [-5, 5]).
SncPair random_pair(std::mt19937_64 &rng, int max_components = 8);

} // namespace cyp::snc

#endif
