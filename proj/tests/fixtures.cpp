#include "fixtures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fixtures {

using namespace tlrep;

Local token(const std::string& t) {
    if (t.size() < 2) throw std::invalid_argument("bad token " + t);
    const int a = t[1] - '0';
    switch (t[0]) {
        case 'I': return local_I(a);
        case 'P': return local_P(a);
        case 'B': return local_B(a, t.at(2) - '0');
        case 'T': return local_T(a, t.at(2) - '0');
    }
    throw std::invalid_argument("bad token " + t);
}

std::vector<Local> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<Local> out;
    for (std::string t; is >> t;) out.push_back(token(t));
    return out;
}

std::set<Arrow> arrow_list(const std::string& line) {
    std::istringstream is(line);
    std::set<Arrow> out;
    for (std::string t; is >> t;) {
        const auto gt = t.find('>');
        out.insert({token(t.substr(0, gt)), token(t.substr(gt + 1))});
    }
    return out;
}

std::set<Arrow> walk(const std::string& line) {
    const auto v = tokens(line);
    std::set<Arrow> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.insert({v[i], v[i + 1]});
    return out;
}

const std::vector<QuiverFixture>& generic_quivers() {
    static const std::vector<QuiverFixture> q = {
        {2, "B11 I1 I2 P2 T11", "T11>P2 P2>B11 B11>I2 I2>T11 T11>I1 I1>B11"},
        {3, "B11 B12 B21 I1 I2 I3 P2 P3 T11 T12 T21",
         "T12>I3 I3>B12 B12>B11 B11>I2 I2>T11 T11>T12 T12>I1 I1>B12 B12>T21 T21>I2 I2>B21 B21>T12 T12>P2 P2>B12 "
         "T21>P3 P3>B21"},
        {4, "B11 B12 B13 B21 B22 B31 I1 I2 I3 I4 P2 P3 P4 T11 T12 T13 T21 T22 T31",
         "T13>T31 T31>I3 I3>B31 B31>B13 B13>B11 B11>I2 I2>T11 T11>T13 T13>T12 T12>I3 I3>B12 B12>B13 B13>T22 T22>I2 "
         "I2>B22 B22>T13 B21>T12 T12>I1 I1>B12 B12>T21 T21>T22 T22>I4 I4>B22 B22>B21 T12>P2 P2>B12 T22>P3 P3>B22 "
         "T31>P4 P4>B31"},
        {5,
         "B11 B12 B13 B14 B21 B22 B23 B31 B32 B41 I1 I2 I3 I4 I5 P2 P3 P4 P5 T11 T12 T13 T14 T21 T22 T23 T31 T32 T41",
         "T13>T31 T31>T32 T32>I5 I5>B32 B32>B31 B31>B13 B13>B11 B11>I2 I2>T11 T11>T13 T13>T14 T14>T32 T32>I3 I3>B32 "
         "B32>B14 B14>B13 B13>T22 T22>I2 I2>B22 B22>T13 B23>T14 T14>T12 T12>I3 I3>B12 B12>B14 B14>T23 T23>T22 "
         "T22>I4 I4>B22 B22>B23 B23>B21 B21>T12 T12>I1 I1>B12 B12>T21 T21>T23 T23>T41 T41>I4 I4>B41 B41>B23 "
         "P2>B12 P3>B22 P4>B32 P5>B41 T12>P2 T22>P3 T32>P4 T41>P5"},
    };
    return q;
}

const std::vector<QuiverFixture>& degenerate_quivers() {
    static const std::vector<QuiverFixture> q = {
        {1, "I1 P1", "P1>I1 I1>P1"},
        {2, "B11 I1 I2 P1 P2 T11", "T11>P2 P2>B11 B11>I2 I2>T11 T11>I1 I1>B11 B11>P1 P1>T11"},
        {3, "B11 B12 B21 I1 I2 I3 P1 P2 P3 T11 T12 T21",
         "T12>I3 I3>B12 B12>B11 B11>I2 I2>T11 T11>T12 T12>I1 I1>B12 B12>T21 T21>I2 I2>B21 B21>T12 T12>P2 P2>B12 "
         "T21>P3 P3>B21 B11>P1 P1>T11"},
        {4, "B11 B12 B13 B21 B22 B31 I1 I2 I3 I4 P1 P2 P3 P4 T11 T12 T13 T21 T22 T31",
         "T13>T31 T31>I3 I3>B31 B31>B13 B13>B11 B11>I2 I2>T11 T11>T13 T13>T12 T12>I3 I3>B12 B12>B13 B13>T22 T22>I2 "
         "I2>B22 B22>T13 B21>T12 T12>I1 I1>B12 B12>T21 T21>T22 T22>I4 I4>B22 B22>B21 T12>P2 P2>B12 T22>P3 P3>B22 "
         "T31>P4 P4>B31 B11>P1 P1>T11"},
    };
    return q;
}

const std::vector<OrbitFixture>& reference_orbits(int s) {
    static const std::vector<OrbitFixture> six = {
        {"t0", "T11 T31 T51 B51 B31 B11"}, {"t2", "B22 T15 T32 B32 B15 T22"}, {"t4", "B12 T23 T42 B42 B23 T12"},
        {"i2", "T13 T33 I5 B33 B13 I2"},   {"i4", "B14 T24 I4 B24 T14 I3"},   {"i6", "T21 T41 I6 B41 B21 I1"},
    };
    static const std::vector<OrbitFixture> seven = {
        {"t0", "T11 T31 T51 I7 B51 B31 B11"}, {"t2", "B22 T15 T34 I5 B34 B15 T22"},
        {"t4", "B42 B25 T14 I3 B14 T25 T42"}, {"t6", "B61 B41 B21 I1 T21 T41 T61"},
        {"i2", "T13 T33 T52 B52 B33 B13 I2"}, {"i4", "B24 T16 T32 B32 B16 T24 I4"},
        {"i6", "B43 B23 T12 B12 T23 T43 I6"},
    };
    if (s == 6) return six;
    if (s == 7) return seven;
    throw std::invalid_argument("no reference orbits for this s");
}

const std::vector<WeaveFixture>& reference_weaves(int s) {
    static const std::vector<WeaveFixture> six = {
        {"t0", "i2", "T11 T13 T31 T33 T51 I5 B51 B33 B31 B13 B11 I2 T11"},
        {"i2", "t2", "B22 T13 T15 T33 T32 I5 B32 B33 B15 B13 T22 I2 B22"},
        {"t2", "i4", "B22 B24 T15 T14 T32 I3 B32 B14 B15 T24 T22 I4 B22"},
        {"i4", "t4", "B42 B24 B23 T14 T12 I3 B12 B14 T23 T24 T42 I4 B42"},
        {"t4", "i6", "B42 B41 B23 B21 T12 I1 B12 T21 T23 T41 T42 I6 B42"},
    };
    static const std::vector<WeaveFixture> seven = {
        {"t0", "i2", "T11 T13 T31 T33 T51 T52 I7 B52 B51 B33 B31 B13 B11 I2 T11"},
        {"i2", "t2", "B22 T13 T15 T33 T34 T52 I5 B52 B34 B33 B15 B13 T22 I2 B22"},
        {"t2", "i4", "B22 B24 T15 T16 T34 T32 I5 B32 B34 B16 B15 T24 T22 I4 B22"},
        {"i4", "t4", "B42 B24 B25 T16 T14 T32 I3 B32 B14 B16 T25 T24 T42 I4 B42"},
        {"t4", "i6", "B42 B43 B25 B23 T14 T12 I3 B12 B14 T23 T25 T43 T42 I6 B42"},
        {"i6", "t6", "B61 B43 B41 B23 B21 T12 I1 B12 T21 T23 T41 T43 T61 I6 B61"},
    };
    if (s == 6) return six;
    if (s == 7) return seven;
    throw std::invalid_argument("no reference weaves for this s");
}

bool same_cycle(const std::vector<Local>& a, const std::vector<Local>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        bool eq = true;
        for (std::size_t i = 0; i < a.size() && eq; ++i) eq = a[(i + r) % a.size()] == b[i];
        if (eq) return true;
    }
    return a.empty();
}

}  // namespace fixtures
