#pragma once

#include <string>
#include <vector>

namespace cobcalc {

struct BoundaryCircle {
    int stops = 0;
};

struct ConnectedSurface {
    int genus = 0;
    std::vector<BoundaryCircle> boundary;

    int num_circles() const { return static_cast<int>(boundary.size()); }
    int total_stops() const;
    int euler_characteristic() const { return 2 - 2 * genus - num_circles(); }
};

// A compact oriented surface of finite type with marked boundary points
// (stops), possibly disconnected. Every component must have boundary.
struct StoppedSurface {
    std::vector<ConnectedSurface> components;

    // Optional display names, from the "labels" block of a surface file.
    std::vector<std::string> circle_labels;

    bool is_connected() const { return components.size() == 1; }
    int total_stops() const;
    int total_circles() const;

    // Throws std::invalid_argument when a component is closed or a count is
    // negative.
    void validate() const;

    // Canonical form: components sorted by (genus, #circles, stop profile),
    // circles sorted by stop count. Used for serialization and equality.
    StoppedSurface canonical() const;
    bool same_surface(const StoppedSurface& o) const;

    // Global circle index <-> (component, circle) addressing.
    std::pair<int, int> locate_circle(int global_index) const;

    std::string to_json() const;
    static StoppedSurface from_json(const std::string& text);

    static StoppedSurface disk(int stops);
    static StoppedSurface cylinder(int stops_on_first, int stops_on_second = 0);
    static StoppedSurface connected(int genus, std::vector<int> stops_per_circle);
};

int euler_characteristic(const StoppedSurface& s);

}  // namespace cobcalc
