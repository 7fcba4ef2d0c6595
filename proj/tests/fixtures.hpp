#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tlrep/quiver.hpp"

namespace fixtures {

// tokens: Ia irreducible, Bal / Tal zigzags, Pa projective (a >= 1)
tlrep::Local token(const std::string& t);
std::vector<tlrep::Local> tokens(const std::string& line);
// "U>V U>V ..." arrow lists
std::set<tlrep::Arrow> arrow_list(const std::string& line);
// "X0 X1 X2 ..." consecutive arrows of a walk
std::set<tlrep::Arrow> walk(const std::string& line);

struct QuiverFixture {
    int s;
    std::string vertices;
    std::string arrows;
};

// generic orbit quivers, s = 2..5
const std::vector<QuiverFixture>& generic_quivers();
// degenerate TL ell = 2, n = 2, 4, 6, 8
const std::vector<QuiverFixture>& degenerate_quivers();

struct OrbitFixture {
    std::string id;
    std::string members;
};

struct WeaveFixture {
    std::string x, y;
    std::string walk;
};

const std::vector<OrbitFixture>& reference_orbits(int s);
const std::vector<WeaveFixture>& reference_weaves(int s);

// members equal up to a cyclic rotation
bool same_cycle(const std::vector<tlrep::Local>& a, const std::vector<tlrep::Local>& b);

}  // namespace fixtures
