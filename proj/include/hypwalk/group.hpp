#pragma once

#include <string>
#include <vector>

#include "hypwalk/disk.hpp"
#include "hypwalk/polygon.hpp"

namespace hypwalk {

enum class Family { Reflection, Fuchsian };

struct Generator {
    std::string label;
    Isometry iso;
    std::string inverse_label;
};

/// A word in the generators, by label.
struct Word {
    std::vector<std::string> letters;
};

struct GroupModel {
    Family family = Family::Reflection;
    PolygonSpec spec;
    std::vector<Generator> generators;
    DiskPoint base_point;
    // False when a short reduced word other than the identity fixes the base
    // point (an elliptic element centered there); happens for some Fuchsian
    // pairs, e.g. (6,4) and (8,3). Such models cannot be ball-censused.
    bool trivial_stabilizer = true;

    int generator_index(const std::string& label) const;
};

/// Builds the reflection group Gamma_{n,m} (generators r1..rn, m even) or the
/// Fuchsian side-pairing group F_{n,m} (generators t1..tn, n even).
/// Checks at construction whether a word of length <= stabilizer_check_depth
/// fixes the base point without being the identity: an error for reflection
/// groups (their base-point stabilizer is always trivial), recorded as
/// trivial_stabilizer = false for Fuchsian groups (where central elliptic
/// elements genuinely occur for some pairs).
GroupModel build_group(Family family, int n, int m, int stabilizer_check_depth = 4);

/// Left-to-right product of the word's generator isometries.
Isometry evaluate(const GroupModel& model, const Word& w);

/// d(base_point, evaluate(w).base_point).
double geo_distance(const GroupModel& model, const Word& w);

/// Parses "r1,r3" style comma-separated labels.
Word parse_word(const std::string& s);

std::string family_name(Family family);

} // namespace hypwalk
