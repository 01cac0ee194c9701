#include "fcorr/fixtures.hpp"

#include <algorithm>
#include <cctype>

namespace fcorr {

namespace {

using VC = ValuationClass;

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> fx;

    fx.push_back({"CM0",
                  {{0.1, 0, 0.1}, {0.2, 0, 0.2}, {0, 0.2, 0.2}},
                  {{VC::II, 0.5345},
                   {VC::ID, 0.0000},
                   {VC::CO, 0.5345},
                   {VC::Anti, 0.6123},
                   {VC::Sup, 0.7071},
                   {VC::Mon, 0.5345},
                   {VC::CoAnti, 0.6123}},
                  "matrix with strictly separated MON < COANTI < SUP"});

    fx.push_back({"CM1",
                  {{0.2, 0, 0.1}, {0.1, 0.1, 0}, {0.2, 0.1, 0.2}},
                  {{VC::II, 0.2309},
                   {VC::ID, 0.0476},
                   {VC::CO, 0.4330},
                   {VC::Anti, 0.0476},
                   {VC::Sup, 0.4537}},
                  ""});

    fx.push_back({"CM2",
                  {{0.1, 0, 0}, {0, 0.4, 0}, {0.2, 0.2, 0.1}},
                  {{VC::II, 0.5091},
                   {VC::ID, 0.2182},
                   {VC::CO, 0.7165},
                   {VC::Anti, 0.2182},
                   {VC::Sup, 0.7165}},
                  ""});

    fx.push_back({"CM3",
                  {{0.1428, 0, 0.1428}, {0, 0, 0}, {0.3285, 0.2857, 0}},
                  {{VC::II, -0.0912},
                   {VC::ID, 0.6454},
                   {VC::CO, 0.3999},
                   {VC::Anti, 0.6892},
                   {VC::Sup, 0.6892}},
                  "published grand total ~0.8998; CM3' patches the suspect 0.3285 entry"});

    fx.push_back({"CM3'",
                  {{0.1428, 0, 0.1428}, {0, 0, 0}, {0.4285, 0.2857, 0}},
                  {{VC::II, -0.0912},
                   {VC::ID, 0.6454},
                   {VC::CO, 0.3999},
                   {VC::Anti, 0.6892},
                   {VC::Sup, 0.6892}},
                  "CM3 with 0.3285 read as 0.4285 (total ~1)"});

    fx.push_back({"CM4",
                  {{0.1428, 0, 0.1428}, {0, 0.2857, 0.1428}, {0.1428, 0.1428, 0}},
                  {{VC::II, 0.2999},
                   {VC::ID, 0.3281},
                   {VC::CO, 0.5902},
                   {VC::Anti, 0.3281},
                   {VC::Sup, 0.5902}},
                  "published ID/ANTI disagree with direct maximization (~0.4281)"});

    fx.push_back({"CM5",
                  {{0.1428, 0.1428, 0, 0},
                   {0, 0.1428, 0, 0.1428},
                   {0, 0, 0, 0.3285},
                   {0, 0, 0, 0}},
                  {{VC::II, 0.8660},
                   {VC::ID, -0.3535},
                   {VC::CO, 0.8660},
                   {VC::Anti, 0.8416},
                   {VC::Sup, 0.8660}},
                  "published grand total ~0.8998; CM5' patches the suspect 0.3285 entry"});

    fx.push_back({"CM5'",
                  {{0.1428, 0.1428, 0, 0},
                   {0, 0.1428, 0, 0.1428},
                   {0, 0, 0, 0.4285},
                   {0, 0, 0, 0}},
                  {{VC::II, 0.8660},
                   {VC::ID, -0.3535},
                   {VC::CO, 0.8660},
                   {VC::Anti, 0.8416},
                   {VC::Sup, 0.8660}},
                  "CM5 with 0.3285 read as 0.4285 (total ~1)"});

    fx.push_back({"CM6",
                  {{0, 0, 0.1428, 0},
                   {0.1428, 0.1428, 0.1428, 0},
                   {0.1428, 0.1428, 0.1428, 0},
                   {0, 0, 0, 0}},
                  {{VC::II, -0.0912},
                   {VC::ID, 0.4714},
                   {VC::CO, 0.2581},
                   {VC::Anti, 0.4714},
                   {VC::Sup, 0.4714}},
                  ""});

    fx.push_back({"CM10",
                  {{0, 0, 0, 0, 0},
                   {0, 0.2083, 0.0291, 0, 0},
                   {0, 0.0083, 0.3916, 0.0083, 0},
                   {0, 0, 0.0458, 0.1625, 0},
                   {0, 0, 0, 0.0208, 0.1250}},
                  {{VC::II, 0.9459},
                   {VC::ID, -0.2109},
                   {VC::CO, 0.9459},
                   {VC::Anti, -0.0512},
                   {VC::Sup, 0.9459}},
                  "class 1 carries no mass at all"});

    fx.push_back({"CM11",
                  {{0, 0, 0, 0, 0},
                   {0, 0, 0.1875, 0.0500, 0},
                   {0, 0, 0.0083, 0.3625, 0.0375},
                   {0, 0, 0, 0.0250, 0.1833},
                   {0, 0, 0, 0, 0.1458}},
                  {{VC::II, 0.8966},
                   {VC::ID, -0.2039},
                   {VC::CO, 0.8966},
                   {VC::Anti, 0.8434},
                   {VC::Sup, 0.8966}},
                  ""});

    fx.push_back({"CM12",
                  {{0, 0, 0, 0, 0},
                   {0, 0.2083, 0.0291, 0, 0},
                   {0, 0.0083, 0.3916, 0.0083, 0},
                   {0, 0, 0.0875, 0.1208, 0},
                   {0, 0, 0, 0.1208, 0.0250}},
                  {{VC::II, 0.9096},
                   {VC::ID, -0.2173},
                   {VC::CO, 0.9096},
                   {VC::Anti, 0.5520},
                   {VC::Sup, 0.9096}},
                  "published ID disagrees with direct maximization (~-0.0894)"});

    fx.push_back({"CM(A)",
                  {{0.3076, 0, 0, 0}, {0, 0.4615, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0.2307}},
                  {{VC::II, 1.0},
                   {VC::ID, -0.3651},
                   {VC::CO, 1.0},
                   {VC::Anti, -0.3651},
                   {VC::Sup, 1.0}},
                  ""});

    fx.push_back({"CM(B)",
                  {{0, 0.3076, 0, 0}, {0, 0, 0.4615, 0}, {0, 0, 0, 0}, {0, 0, 0, 0.2307}},
                  {{VC::II, 1.0}, {VC::ID, -0.3651}, {VC::CO, 1.0}, {VC::Anti, 1.0}, {VC::Sup, 1.0}},
                  ""});

    fx.push_back({"CM(C)",
                  {{0, 0, 0.3076, 0}, {0, 0, 0.4615, 0}, {0, 0, 0, 0}, {0, 0, 0, 0.2307}},
                  {{VC::II, 1.0}, {VC::ID, -0.3651}, {VC::CO, 1.0}, {VC::Anti, 1.0}, {VC::Sup, 1.0}},
                  ""});

    fx.push_back({"CM(D)",
                  {{0, 0.3076, 0, 0}, {0.4615, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0.2307}},
                  {{VC::II, 1.0}, {VC::ID, 0.6172}, {VC::CO, 1.0}, {VC::Anti, 1.0}, {VC::Sup, 1.0}},
                  ""});

    return fx;
}

std::string canon(std::string_view name) {
    std::string out;
    for (char c : name) out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    return out;
}

}  // namespace

const std::vector<Fixture>& fixture_set() {
    static const std::vector<Fixture> fixtures = build_fixtures();
    return fixtures;
}

const Fixture* find_fixture(std::string_view name) {
    const std::string key = canon(name);
    for (const Fixture& f : fixture_set()) {
        if (canon(f.name) == key) return &f;
    }
    // aliases: CMA -> CM(A), CM3P -> CM3'
    for (const Fixture& f : fixture_set()) {
        std::string alias;
        for (char c : f.name) {
            if (c == '(' || c == ')') continue;
            alias.push_back(c == '\'' ? 'P' : c);
        }
        if (canon(alias) == key) return &f;
    }
    return nullptr;
}

}  // namespace fcorr
