#include "gdeck/dynamic_gesture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gdeck/error.hpp"

namespace gdeck {

namespace {

constexpr Dir kCompass[8] = {Dir::E, Dir::NE, Dir::N, Dir::NW, Dir::W, Dir::SW, Dir::S, Dir::SE};

Dir classify_step(const Vec3& d) {
    if (std::abs(d.z) > std::max(std::abs(d.x), std::abs(d.y))) {
        return d.z < 0.0 ? Dir::Push : Dir::Pull;
    }
    // 45-degree sectors centered on the 8 compass directions, N = -y
    const double angle = std::atan2(-d.y, d.x);
    const long sector = std::lround(angle / (M_PI / 4.0));
    return kCompass[(sector % 8 + 8) % 8];
}

}  // namespace

const char* to_string(Dir d) {
    switch (d) {
        case Dir::E: return "E";
        case Dir::NE: return "NE";
        case Dir::N: return "N";
        case Dir::NW: return "NW";
        case Dir::W: return "W";
        case Dir::SW: return "SW";
        case Dir::S: return "S";
        case Dir::SE: return "SE";
        case Dir::Push: return "PUSH";
        case Dir::Pull: return "PULL";
    }
    return "?";
}

std::optional<Dir> dir_from_string(std::string_view s) {
    for (int i = 0; i <= int(Dir::Pull); ++i) {
        const Dir d = static_cast<Dir>(i);
        if (s == to_string(d)) return d;
    }
    return std::nullopt;
}

DirectionString::DirectionString(std::initializer_list<Dir> symbols) {
    for (Dir d : symbols) append(d);
}

void DirectionString::append(Dir d) {
    if (!symbols_.empty() && symbols_.back() == d) return;
    symbols_.push_back(d);
}

std::string DirectionString::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0) out << ' ';
        out << to_string(symbols_[i]);
    }
    return out.str();
}

const GestureTemplate* GestureLibrary::find(std::string_view name) const {
    for (const GestureTemplate& t : templates) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

void GestureLibrary::upsert(GestureTemplate t) {
    for (GestureTemplate& existing : templates) {
        if (existing.name == t.name) {
            existing = std::move(t);
            return;
        }
    }
    templates.push_back(std::move(t));
}

DirectionString quantize_trajectory(const Trajectory& traj, double min_step_mm) {
    DirectionString out;
    if (traj.samples.empty()) return out;
    Vec3 anchor = traj.samples.front().pos;
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const Vec3 d = traj.samples[i].pos - anchor;
        if (d.norm() < min_step_mm) continue;
        out.append(classify_step(d));
        anchor = traj.samples[i].pos;
    }
    return out;
}

std::size_t levenshtein(std::span<const Dir> a, std::span<const Dir> b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            diag = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
        }
    }
    return row[b.size()];
}

double normalized_distance(const DirectionString& a, const DirectionString& b) {
    const std::size_t longer = std::max(a.size(), b.size());
    if (longer == 0) return 0.0;
    return double(levenshtein(a.symbols(), b.symbols())) / double(longer);
}

GestureTemplate train_template(const std::string& name, const std::vector<Trajectory>& samples,
                               double min_step_mm) {
    if (name.empty()) throw Error(ErrorCode::InvariantViolation, "template name must be non-empty");
    if (samples.empty()) throw Error(ErrorCode::EmptySampleSet, "training '" + name + "' needs samples");

    std::vector<DirectionString> strings;
    for (const Trajectory& t : samples) {
        DirectionString s = quantize_trajectory(t, min_step_mm);
        if (!s.empty()) strings.push_back(std::move(s));
    }
    if (strings.empty()) {
        throw Error(ErrorCode::AllSamplesQuantizeEmpty,
                    "every sample for '" + name + "' quantizes to the empty string");
    }

    std::size_t best = 0;
    std::size_t best_total = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < strings.size(); ++i) {
        std::size_t total = 0;
        for (std::size_t j = 0; j < strings.size(); ++j) {
            if (i != j) total += levenshtein(strings[i].symbols(), strings[j].symbols());
        }
        if (total < best_total) {
            best_total = total;
            best = i;
        }
    }
    return {name, strings[best]};
}

GestureMatch recognize(const DirectionString& s, const GestureLibrary& lib) {
    if (lib.templates.empty()) throw Error(ErrorCode::EmptyLibrary, "gesture library is empty");
    if (s.empty()) return {};

    const GestureTemplate* best = nullptr;
    double best_distance = std::numeric_limits<double>::infinity();
    for (const GestureTemplate& t : lib.templates) {
        const double d = normalized_distance(s, t.pattern);
        if (d < best_distance || (d == best_distance && best && t.name < best->name)) {
            best_distance = d;
            best = &t;
        }
    }
    if (best_distance > lib.match_threshold) return {"", best_distance};
    return {best->name, best_distance};
}

GestureLibrary default_library() {
    GestureLibrary lib;
    lib.templates = {
        {"swipe_left", DirectionString{Dir::W}},
        {"swipe_right", DirectionString{Dir::E}},
        {"swipe_up", DirectionString{Dir::N}},
        {"swipe_down", DirectionString{Dir::S}},
        {"push", DirectionString{Dir::Push}},
        {"circle_cw",
         DirectionString{Dir::E, Dir::SE, Dir::S, Dir::SW, Dir::W, Dir::NW, Dir::N, Dir::NE}},
    };
    return lib;
}

GestureLibrary load_library_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open gesture library " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
        GestureLibrary lib;
        lib.match_threshold = doc.value("threshold", 0.4);
        for (const auto& t : doc.at("templates")) {
            GestureTemplate tmpl;
            tmpl.name = t.at("name").get<std::string>();
            for (const auto& sym : t.at("pattern")) {
                auto d = dir_from_string(sym.get<std::string>());
                if (!d) {
                    throw Error(ErrorCode::ConfigError,
                                path + ": unknown symbol '" + sym.get<std::string>() + "'");
                }
                tmpl.pattern.append(*d);
            }
            if (tmpl.name.empty() || tmpl.pattern.empty()) {
                throw Error(ErrorCode::ConfigError, path + ": template name and pattern must be non-empty");
            }
            if (lib.find(tmpl.name)) {
                throw Error(ErrorCode::ConfigError, path + ": duplicate template '" + tmpl.name + "'");
            }
            lib.templates.push_back(std::move(tmpl));
        }
        return lib;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ConfigError, path + ": " + e.what());
    }
}

void save_library_file(const GestureLibrary& lib, const std::string& path) {
    nlohmann::json doc;
    doc["threshold"] = lib.match_threshold;
    doc["templates"] = nlohmann::json::array();
    for (const GestureTemplate& t : lib.templates) {
        nlohmann::json pattern = nlohmann::json::array();
        for (Dir d : t.pattern.symbols()) pattern.push_back(to_string(d));
        doc["templates"].push_back({{"name", t.name}, {"pattern", pattern}});
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::IoFailure, "write to " + path + " failed");
}

}  // namespace gdeck
