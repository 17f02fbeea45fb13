#include "cobcalc/surface.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace cobcalc {

int ConnectedSurface::total_stops() const {
    int s = 0;
    for (const auto& c : boundary) s += c.stops;
    return s;
}

int StoppedSurface::total_stops() const {
    int s = 0;
    for (const auto& c : components) s += c.total_stops();
    return s;
}

int StoppedSurface::total_circles() const {
    int b = 0;
    for (const auto& c : components) b += c.num_circles();
    return b;
}

void StoppedSurface::validate() const {
    if (components.empty()) throw std::invalid_argument("surface: no components");
    for (const auto& c : components) {
        if (c.genus < 0) throw std::invalid_argument("surface: negative genus");
        if (c.boundary.empty()) throw std::invalid_argument("surface: closed component (no boundary circle)");
        for (const auto& circ : c.boundary)
            if (circ.stops < 0) throw std::invalid_argument("surface: negative stop count");
    }
    if (!circle_labels.empty()) {
        if (static_cast<int>(circle_labels.size()) != total_circles())
            throw std::invalid_argument("surface: label count != circle count");
        std::set<std::string> seen(circle_labels.begin(), circle_labels.end());
        if (static_cast<int>(seen.size()) != total_circles())
            throw std::invalid_argument("surface: duplicate circle labels");
    }
}

StoppedSurface StoppedSurface::canonical() const {
    StoppedSurface out = *this;
    out.circle_labels.clear();
    for (auto& c : out.components)
        std::sort(c.boundary.begin(), c.boundary.end(),
                  [](const BoundaryCircle& a, const BoundaryCircle& b) { return a.stops < b.stops; });
    std::sort(out.components.begin(), out.components.end(),
              [](const ConnectedSurface& a, const ConnectedSurface& b) {
                  if (a.genus != b.genus) return a.genus < b.genus;
                  if (a.boundary.size() != b.boundary.size()) return a.boundary.size() < b.boundary.size();
                  for (size_t i = 0; i < a.boundary.size(); ++i)
                      if (a.boundary[i].stops != b.boundary[i].stops)
                          return a.boundary[i].stops < b.boundary[i].stops;
                  return false;
              });
    return out;
}

bool StoppedSurface::same_surface(const StoppedSurface& o) const {
    StoppedSurface a = canonical(), b = o.canonical();
    if (a.components.size() != b.components.size()) return false;
    for (size_t i = 0; i < a.components.size(); ++i) {
        if (a.components[i].genus != b.components[i].genus) return false;
        if (a.components[i].boundary.size() != b.components[i].boundary.size()) return false;
        for (size_t j = 0; j < a.components[i].boundary.size(); ++j)
            if (a.components[i].boundary[j].stops != b.components[i].boundary[j].stops) return false;
    }
    return true;
}

std::pair<int, int> StoppedSurface::locate_circle(int global_index) const {
    int k = global_index;
    for (int ci = 0; ci < static_cast<int>(components.size()); ++ci) {
        int n = components[ci].num_circles();
        if (k < n) return {ci, k};
        k -= n;
    }
    throw std::invalid_argument("surface: circle index out of range");
}

std::string StoppedSurface::to_json() const {
    StoppedSurface c = canonical();
    nlohmann::ordered_json j;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& comp : c.components) {
        nlohmann::ordered_json jc;
        jc["genus"] = comp.genus;
        jc["boundary"] = nlohmann::ordered_json::array();
        for (const auto& circ : comp.boundary) jc["boundary"].push_back({{"stops", circ.stops}});
        j["components"].push_back(jc);
    }
    return j.dump(2);
}

StoppedSurface StoppedSurface::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("surface: bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array() || j["components"].empty())
        throw std::invalid_argument("surface: expected {\"components\": [...]}");
    StoppedSurface s;
    for (const auto& jc : j["components"]) {
        if (!jc.is_object() || !jc.contains("genus") || !jc.contains("boundary") || !jc["boundary"].is_array())
            throw std::invalid_argument("surface: component needs \"genus\" and \"boundary\"");
        ConnectedSurface c;
        if (!jc["genus"].is_number_integer()) throw std::invalid_argument("surface: genus must be an integer");
        c.genus = jc["genus"].get<int>();
        for (const auto& jb : jc["boundary"]) {
            if (!jb.is_object() || !jb.contains("stops") || !jb["stops"].is_number_integer())
                throw std::invalid_argument("surface: boundary circle needs integer \"stops\"");
            c.boundary.push_back({jb["stops"].get<int>()});
        }
        s.components.push_back(std::move(c));
    }
    if (j.contains("labels")) {
        const auto& jl = j["labels"];
        if (!jl.is_object()) throw std::invalid_argument("surface: labels must be an object");
        if (jl.contains("circles")) {
            for (const auto& name : jl["circles"]) {
                if (!name.is_string()) throw std::invalid_argument("surface: circle labels must be strings");
                s.circle_labels.push_back(name.get<std::string>());
            }
        }
    }
    s.validate();
    return s;
}

StoppedSurface StoppedSurface::disk(int stops) { return connected(0, {stops}); }

StoppedSurface StoppedSurface::cylinder(int stops_on_first, int stops_on_second) {
    return connected(0, {stops_on_first, stops_on_second});
}

StoppedSurface StoppedSurface::connected(int genus, std::vector<int> stops_per_circle) {
    StoppedSurface s;
    ConnectedSurface c;
    c.genus = genus;
    for (int k : stops_per_circle) c.boundary.push_back({k});
    s.components.push_back(std::move(c));
    s.validate();
    return s;
}

int euler_characteristic(const StoppedSurface& s) {
    s.validate();
    int chi = 0;
    for (const auto& c : s.components) chi += c.euler_characteristic();
    return chi;
}

}  // namespace cobcalc
