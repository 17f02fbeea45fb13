#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cobcalc/surface.hpp"

namespace cobcalc {

// One connected surface as a single polygon with identified sides.
//
// The word is read counterclockwise. A label occurring twice (once inverse)
// is an identified pair; a label occurring once is a free side lying on a
// boundary circle. Corner i sits between word[i-1] and word[i] (cyclically);
// stop_corners flags exactly one corner per stop, namely the corner at the
// start of the segment counterclockwise-after the stop.
struct PolygonPresentation {
    struct Entry {
        std::string label;
        bool inverse = false;
    };

    std::vector<Entry> word;
    // free side label -> (circle index, segment index)
    std::map<std::string, std::pair<int, int>> segment_of;
    std::set<int> stop_corners;
    ConnectedSurface surface;

    int size() const { return static_cast<int>(word.size()); }
    bool is_free(const std::string& label) const { return segment_of.count(label) > 0; }

    // Corner-tracing data for the closed-up surface.
    struct Trace {
        int vertices = 0;
        int edges = 0;
        int chi = 0;                        // vertices - edges + 1
        std::vector<int> corner_class;      // corner index -> vertex class id
        std::vector<bool> class_is_stop;    // vertex class -> carries a stop
        std::vector<int> stops_per_circle;  // distinct stop classes met per circle
    };
    Trace trace_corners() const;

    // Checks pairing consistency, chi against (g, b), and per-circle stop
    // vertex counts. Throws std::invalid_argument on violation.
    void validate() const;

    std::string word_str() const;
};

// Canonical word  c_{1,1}..c_{1,m1} [a_1,b_1]..[a_g,b_g] t_2 c_{2,*} t_2^-1 ...
// with m_j = max(s_j, 1). Requires a connected surface with boundary.
PolygonPresentation canonical_presentation(const StoppedSurface& s);

}  // namespace cobcalc
