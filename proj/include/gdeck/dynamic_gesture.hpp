#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdeck/vec.hpp"

namespace gdeck {

/// Trajectory symbols. Compass directions live in the x-y plane with the
/// image convention E = +x, N = -y; Push/Pull are dominant-z moves toward and
/// away from the camera.
enum class Dir : uint8_t { E, NE, N, NW, W, SW, S, SE, Push, Pull };

const char* to_string(Dir d);
std::optional<Dir> dir_from_string(std::string_view s);

struct TrajectorySample {
    uint64_t t_ms = 0;
    Vec3 pos;  // mm, camera space
};

/// Hand positions over time; timestamps strictly increase.
struct Trajectory {
    std::vector<TrajectorySample> samples;
};

/// Symbol sequence with consecutive duplicates collapsed; append() maintains
/// the no-adjacent-duplicates invariant.
class DirectionString {
public:
    DirectionString() = default;
    explicit DirectionString(std::initializer_list<Dir> symbols);

    void append(Dir d);

    const std::vector<Dir>& symbols() const { return symbols_; }
    bool empty() const { return symbols_.empty(); }
    std::size_t size() const { return symbols_.size(); }

    /// Space-separated symbol names, e.g. "E SE S".
    std::string str() const;

    bool operator==(const DirectionString&) const = default;

private:
    std::vector<Dir> symbols_;
};

struct GestureTemplate {
    std::string name;
    DirectionString pattern;
};

struct GestureLibrary {
    std::vector<GestureTemplate> templates;
    double match_threshold = 0.4;

    const GestureTemplate* find(std::string_view name) const;
    /// Inserts or replaces the template with the same name.
    void upsert(GestureTemplate t);
};

/// A recognition result; name is empty when nothing matched.
struct GestureMatch {
    std::string name;
    double distance = 1.0;

    bool matched() const { return !name.empty(); }
};

/// Walks the samples accumulating displacement from the last anchor; once its
/// magnitude reaches min_step a symbol is emitted (Push/Pull when |dz| exceeds
/// both |dx| and |dy|, otherwise the nearest of the 8 compass directions) and
/// the anchor resets to the current sample.
DirectionString quantize_trajectory(const Trajectory& traj, double min_step_mm);

std::size_t levenshtein(std::span<const Dir> a, std::span<const Dir> b);

/// Levenshtein distance divided by the longer length; 0 for two empty strings.
double normalized_distance(const DirectionString& a, const DirectionString& b);

/// Quantizes every sample and picks the medoid: the string with minimal total
/// edit distance to all the others, ties to the earliest sample. Samples that
/// quantize to the empty string are ignored. Throws EmptySampleSet and
/// AllSamplesQuantizeEmpty.
GestureTemplate train_template(const std::string& name, const std::vector<Trajectory>& samples,
                               double min_step_mm);

/// Closest template by normalized edit distance, ties broken by name; no
/// match when the best distance exceeds the library threshold or the input is
/// empty. Throws EmptyLibrary.
GestureMatch recognize(const DirectionString& s, const GestureLibrary& lib);

/// Built-in command set: four swipes, push, and a clockwise circle.
GestureLibrary default_library();

GestureLibrary load_library_file(const std::string& path);
void save_library_file(const GestureLibrary& lib, const std::string& path);

}  // namespace gdeck
