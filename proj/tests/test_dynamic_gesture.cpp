#include <doctest.h>

#include <map>
#include <random>

#include "gdeck/dynamic_gesture.hpp"
#include "gdeck/error.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gdeck;
using gdeck::testing::levenshtein_oracle;
using gdeck::testing::quantize_oracle;
using gdeck::testing::TempDir;

namespace {

Trajectory line_trajectory(Vec3 from, Vec3 to, int samples) {
    Trajectory traj;
    for (int k = 0; k < samples; ++k) {
        const double u = samples > 1 ? double(k) / double(samples - 1) : 0.0;
        traj.samples.push_back({uint64_t(k) * 33, lerp(from, to, u)});
    }
    return traj;
}

Trajectory from_positions(const std::vector<Vec3>& positions) {
    Trajectory traj;
    for (std::size_t k = 0; k < positions.size(); ++k) traj.samples.push_back({k * 33, positions[k]});
    return traj;
}

DirectionString str_of(std::initializer_list<Dir> symbols) { return DirectionString(symbols); }

}  // namespace

TEST_CASE("straight +x motion quantizes to a single E") {
    const Trajectory traj = line_trajectory({0, 0, 1200}, {200, 0, 1200}, 10);
    const DirectionString s = quantize_trajectory(traj, 15.0);
    CHECK(s == str_of({Dir::E}));
    CHECK(s.symbols() == quantize_oracle(traj, 15.0));
}

TEST_CASE("empty trajectory quantizes to the empty string") {
    CHECK(quantize_trajectory(Trajectory{}, 40.0).empty());
}

TEST_CASE("dominant -z motion quantizes to PUSH") {
    const Trajectory traj = line_trajectory({0, 0, 1320}, {0, 0, 1200}, 11);
    const DirectionString s = quantize_trajectory(traj, 50.0);
    CHECK(s == str_of({Dir::Push}));
    CHECK(s.symbols() == quantize_oracle(traj, 50.0));
}

TEST_CASE("+z motion quantizes to PULL") {
    const Trajectory traj = line_trajectory({0, 0, 1200}, {0, 0, 1350}, 11);
    CHECK(quantize_trajectory(traj, 50.0) == str_of({Dir::Pull}));
}

TEST_CASE("sub-threshold jitter quantizes to nothing") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> jitter(-12.0, 12.0);
    Trajectory traj;
    for (int k = 0; k < 50; ++k) {
        traj.samples.push_back({uint64_t(k) * 33, {jitter(rng), jitter(rng), 1200.0 + jitter(rng)}});
    }
    CHECK(quantize_trajectory(traj, 40.0).empty());
}

TEST_CASE("each compass sector maps to its symbol") {
    const std::pair<Vec3, Dir> cases[] = {
        {{100, 0, 0}, Dir::E},    {{100, -100, 0}, Dir::NE}, {{0, -100, 0}, Dir::N},
        {{-100, -100, 0}, Dir::NW}, {{-100, 0, 0}, Dir::W},  {{-100, 100, 0}, Dir::SW},
        {{0, 100, 0}, Dir::S},    {{100, 100, 0}, Dir::SE},
    };
    for (const auto& [delta, expected] : cases) {
        const Trajectory traj = from_positions({{0, 0, 1200}, {delta.x, delta.y, 1200.0}});
        CHECK(quantize_trajectory(traj, 40.0) == DirectionString{expected});
    }
}

TEST_CASE("quantization agrees with the scalar oracle on random walks") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> step(-80.0, 80.0);
    for (int trial = 0; trial < 300; ++trial) {
        Trajectory traj;
        Vec3 pos{0, 0, 1200};
        for (int k = 0; k < 30; ++k) {
            traj.samples.push_back({uint64_t(k) * 33, pos});
            pos = pos + Vec3{step(rng), step(rng), step(rng) * 0.5};
        }
        CHECK(quantize_trajectory(traj, 40.0).symbols() == quantize_oracle(traj, 40.0));
    }
}

TEST_CASE("translation leaves the direction string unchanged") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> step(-90.0, 90.0);
    std::uniform_real_distribution<double> offset(-500.0, 500.0);
    for (int trial = 0; trial < 100; ++trial) {
        Trajectory traj;
        Vec3 pos{0, 0, 1200};
        for (int k = 0; k < 20; ++k) {
            traj.samples.push_back({uint64_t(k) * 33, pos});
            pos = pos + Vec3{step(rng), step(rng), step(rng)};
        }
        const Vec3 shift{offset(rng), offset(rng), offset(rng)};
        Trajectory moved = traj;
        for (auto& s : moved.samples) s.pos = s.pos + shift;
        CHECK(quantize_trajectory(traj, 40.0) == quantize_trajectory(moved, 40.0));
    }
}

TEST_CASE("scaling up preserves the string when every step already triggers") {
    std::mt19937 rng(999);
    std::uniform_real_distribution<double> scale(1.0, 4.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> length(45.0, 120.0);  // > min_step
    for (int trial = 0; trial < 100; ++trial) {
        Trajectory traj;
        Vec3 pos{0, 0, 1500};
        traj.samples.push_back({0, pos});
        for (int k = 1; k < 12; ++k) {
            const double a = angle(rng);
            const double l = length(rng);
            pos = pos + Vec3{l * std::cos(a), l * std::sin(a), 0.0};
            traj.samples.push_back({uint64_t(k) * 33, pos});
        }
        const double k = scale(rng);
        Trajectory scaled;
        const Vec3 origin = traj.samples[0].pos;
        for (const auto& s : traj.samples) {
            scaled.samples.push_back({s.t_ms, origin + (s.pos - origin) * k});
        }
        CHECK(quantize_trajectory(traj, 40.0) == quantize_trajectory(scaled, 40.0));
    }
}

TEST_CASE("mirroring x swaps east and west families") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> step(-100.0, 100.0);
    const auto mirror = [](Dir d) {
        switch (d) {
            case Dir::E: return Dir::W;
            case Dir::W: return Dir::E;
            case Dir::NE: return Dir::NW;
            case Dir::NW: return Dir::NE;
            case Dir::SE: return Dir::SW;
            case Dir::SW: return Dir::SE;
            default: return d;
        }
    };
    for (int trial = 0; trial < 100; ++trial) {
        Trajectory traj;
        Vec3 pos{0, 0, 1200};
        for (int k = 0; k < 20; ++k) {
            traj.samples.push_back({uint64_t(k) * 33, pos});
            pos = pos + Vec3{step(rng), step(rng), step(rng) * 0.3};
        }
        Trajectory mirrored = traj;
        for (auto& s : mirrored.samples) s.pos.x = -s.pos.x;

        const DirectionString original = quantize_trajectory(traj, 40.0);
        DirectionString expected;
        for (Dir d : original.symbols()) expected.append(mirror(d));
        CHECK(quantize_trajectory(mirrored, 40.0) == expected);
    }
}

TEST_CASE("levenshtein matches the recursive oracle") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> sym(0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Dir> a, b;
        for (int i = len(rng); i > 0; --i) a.push_back(Dir(sym(rng)));
        for (int i = len(rng); i > 0; --i) b.push_back(Dir(sym(rng)));
        CHECK(levenshtein(a, b) == levenshtein_oracle(a, b));
    }
}

TEST_CASE("normalized distance is a [0,1] value with d(s,s)=0") {
    const DirectionString a = str_of({Dir::E, Dir::N, Dir::W});
    const DirectionString b = str_of({Dir::S});
    CHECK(normalized_distance(a, a) == 0.0);
    CHECK(normalized_distance(a, b) >= 0.0);
    CHECK(normalized_distance(a, b) <= 1.0);
    CHECK(normalized_distance(DirectionString{}, DirectionString{}) == 0.0);
}

TEST_CASE("training a single sample returns its quantization") {
    const Trajectory swipe = line_trajectory({0, 0, 1200}, {250, 0, 1200}, 8);
    const GestureTemplate t = train_template("right", {swipe}, 40.0);
    CHECK(t.name == "right");
    CHECK(t.pattern == str_of({Dir::E}));
}

TEST_CASE("three identical swipes train to one symbol") {
    const Trajectory swipe = line_trajectory({0, 0, 1200}, {250, 0, 1200}, 8);
    const GestureTemplate t = train_template("right", {swipe, swipe, swipe}, 40.0);
    CHECK(t.pattern == str_of({Dir::E}));
}

TEST_CASE("the medoid minimizes total edit distance with earliest-index ties") {
    // strings E, E, EN: both E have total distance 1, EN has 2
    const Trajectory e1 = line_trajectory({0, 0, 1200}, {150, 0, 1200}, 4);
    const Trajectory e2 = line_trajectory({0, 0, 1200}, {160, 0, 1200}, 4);
    Trajectory en = line_trajectory({0, 0, 1200}, {150, 0, 1200}, 4);
    en.samples.push_back({200, {150 + 60 * std::cos(M_PI / 4), -60 * std::sin(M_PI / 4), 1200}});

    REQUIRE(quantize_trajectory(e1, 40.0) == str_of({Dir::E}));
    REQUIRE(quantize_trajectory(en, 40.0) == str_of({Dir::E, Dir::NE}));

    const GestureTemplate t = train_template("swipe", {e1, e2, en}, 40.0);
    CHECK(t.pattern == str_of({Dir::E}));
}

TEST_CASE("training errors: empty set and all-empty quantizations") {
    CHECK_THROWS_AS(train_template("x", {}, 40.0), Error);
    try {
        train_template("x", {}, 40.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySampleSet);
    }

    const Trajectory still = from_positions({{0, 0, 1200}, {1, 1, 1200}});
    try {
        train_template("x", {still, still}, 40.0);
        FAIL("expected AllSamplesQuantizeEmpty");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AllSamplesQuantizeEmpty);
    }
}

TEST_CASE("recognize: exact pattern matches at distance 0") {
    const GestureLibrary lib = default_library();
    const GestureMatch m = recognize(str_of({Dir::W}), lib);
    CHECK(m.matched());
    CHECK(m.name == "swipe_left");
    CHECK(m.distance == 0.0);
}

TEST_CASE("recognize: EN vs E is 0.5 and misses the 0.4 threshold") {
    GestureLibrary lib;
    lib.templates = {{"e", str_of({Dir::E})}};
    const GestureMatch m = recognize(str_of({Dir::E, Dir::N}), lib);
    CHECK_FALSE(m.matched());
    CHECK(m.distance == 0.5);
}

TEST_CASE("recognize: empty input never matches") {
    CHECK_FALSE(recognize(DirectionString{}, default_library()).matched());
}

TEST_CASE("recognize: empty library is an error") {
    try {
        recognize(str_of({Dir::E}), GestureLibrary{});
        FAIL("expected EmptyLibrary");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyLibrary);
    }
}

TEST_CASE("recognize: equal distances break ties by name") {
    GestureLibrary lib;
    lib.templates = {{"zeta", str_of({Dir::E})}, {"alpha", str_of({Dir::E})}};
    CHECK(recognize(str_of({Dir::E}), lib).name == "alpha");
}

TEST_CASE("default library holds the six command gestures") {
    const GestureLibrary lib = default_library();
    CHECK(lib.templates.size() == 6);
    CHECK(lib.match_threshold == 0.4);
    REQUIRE(lib.find("circle_cw") != nullptr);
    CHECK(lib.find("circle_cw")->pattern ==
          str_of({Dir::E, Dir::SE, Dir::S, Dir::SW, Dir::W, Dir::NW, Dir::N, Dir::NE}));
}

TEST_CASE("library files round-trip") {
    TempDir dir;
    GestureLibrary lib = default_library();
    lib.match_threshold = 0.35;
    const std::string path = dir.file("lib.json");
    save_library_file(lib, path);
    const GestureLibrary back = load_library_file(path);
    CHECK(back.match_threshold == 0.35);
    REQUIRE(back.templates.size() == lib.templates.size());
    for (const GestureTemplate& t : lib.templates) {
        REQUIRE(back.find(t.name) != nullptr);
        CHECK(back.find(t.name)->pattern == t.pattern);
    }
}

TEST_CASE("noisy swipes recognize correctly at least 95% of the time") {
    // 200 trials per direction: 250 mm travel sampled at 125 mm spacing,
    // per-sample Gaussian position noise sigma = 10 mm, min_step 40 mm,
    // fixed seed. Opposite-direction confusions must not occur at all.
    const GestureLibrary lib = default_library();
    std::mt19937 rng(0);
    std::normal_distribution<double> noise(0.0, 10.0);

    const std::map<std::string, Vec3> swipes = {
        {"swipe_right", {1, 0, 0}},
        {"swipe_left", {-1, 0, 0}},
        {"swipe_up", {0, -1, 0}},
        {"swipe_down", {0, 1, 0}},
    };
    const std::map<std::string, std::string> opposite = {
        {"swipe_right", "swipe_left"},
        {"swipe_left", "swipe_right"},
        {"swipe_up", "swipe_down"},
        {"swipe_down", "swipe_up"},
    };

    for (const auto& [name, dir] : swipes) {
        int correct = 0;
        int confused_with_opposite = 0;
        for (int trial = 0; trial < 200; ++trial) {
            Trajectory traj;
            for (int k = 0; k <= 2; ++k) {
                const Vec3 ideal = Vec3{0, 0, 1200} + dir * (125.0 * k);
                traj.samples.push_back(
                    {uint64_t(k) * 150, ideal + Vec3{noise(rng), noise(rng), noise(rng)}});
            }
            const GestureMatch m = recognize(quantize_trajectory(traj, 40.0), lib);
            if (m.name == name) ++correct;
            if (m.name == opposite.at(name)) ++confused_with_opposite;
        }
        CHECK(correct >= 190);
        CHECK(confused_with_opposite == 0);
    }
}
