#ifndef POSETCOHO_MORSE_HPP
#define POSETCOHO_MORSE_HPP

#include "posetcoho/global.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace posetcoho {

using Rational = boost::multiprecision::cpp_rational;

/// A simplicial complex with an exact rational value per face.
struct MorseFunction {
    GradedPoset poset;
    std::vector<Rational> f;  // indexed by object

    /// {"facets": [...], "f": {"<face id>": "3/2" | int, ...}}; every face
    /// needs a value; non-integer floating point input is rejected.
    static MorseFunction from_json(const nlohmann::json& j);
};

/// At most one non-increasing coface and at most one non-decreasing proper
/// face per simplex.
ValidationReport validate_morse(const MorseFunction& mf);

/// Partition of the simplices per dimension: critical, paired-with-a-face,
/// paired-with-a-coface; plus the dimension-crossing pairing.
struct MorseClassification {
    std::vector<std::vector<int>> C, D, E;
    std::vector<std::pair<int, int>> pairing;  // (member of E_{n-1}, its coface in D_n)
};

MorseClassification classify(const MorseFunction& mf);

/// Critical cells plus their paired cofaces per dimension.
GlobalCoveringFamily family_from_morse(const MorseClassification& cls);

}  // namespace posetcoho

#endif
