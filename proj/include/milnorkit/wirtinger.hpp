#pragma once

#include "milnorkit/diagram.hpp"
#include "milnorkit/words.hpp"

#include <string>
#include <vector>

namespace milnorkit {

// Wirtinger presentation of a link group with peripheral structure. One
// generator per arc (generator index = arc id + 1), one relator per crossing,
// plus per component a meridian (the base arc's generator) and the preferred
// longitude, written in arc generators with the writhe correction appended so
// it is nullhomologous in the exterior.
struct GroupPresentation {
    int generator_count = 0;
    std::vector<FreeWord> relators;
    std::vector<int> meridians;          // generator index (1-based) per component
    std::vector<FreeWord> longitudes;    // per component, over arc generators
    std::vector<int> generator_component; // component of each generator, 0-based

    // Unfolded Wirtinger relation chain back to the base arc: for each arc
    // generator g there is a word W in arc generators with g = W m_i W^-1,
    // where m_i is the meridian of g's component. Over-passages extend the
    // chain trivially, under-passages prepend the conjugating over generator.
    std::vector<FreeWord> conjugators;

    // Debug/test dump: "gens: k", "rel: ...", "mer[i]: g<j>", "lon[i]: ...".
    std::string dump() const;
};

GroupPresentation presentation(const LinkDiagram& d);

// The preferred longitude of one component (also available via presentation).
FreeWord longitude(const LinkDiagram& d, int component);

// Sum of self-crossing signs of one component.
long long writhe(const LinkDiagram& d, int component);

} // namespace milnorkit
