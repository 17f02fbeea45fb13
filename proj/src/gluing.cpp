#include "cobcalc/gluing.hpp"

#include <stdexcept>

#include <json.hpp>

#include "cobcalc/cell_complex.hpp"

namespace cobcalc {

namespace {

bool claim_holds(const AbelianGroup& before, const AbelianGroup& after, GroupClaim claim) {
    switch (claim) {
        case GroupClaim::Isomorphism: return before == after;
        case GroupClaim::AfterGainsZ: {
            AbelianGroup want = before;
            want.rank += 1;
            return after == want;
        }
        case GroupClaim::BeforeGainsZ: {
            AbelianGroup want = after;
            want.rank += 1;
            return before == want;
        }
    }
    return false;
}

GluingReport finish(std::string op, const StoppedSurface& before, StoppedSurface after, GroupClaim claim) {
    after.validate();
    GluingReport r;
    r.operation = std::move(op);
    r.before = before;
    r.after = std::move(after);
    r.group_before = surface_h1(before);
    r.group_after = surface_h1(r.after);
    r.claim = claim;
    r.verdict = claim_holds(r.group_before, r.group_after, claim);
    return r;
}

}  // namespace

std::string group_claim_name(GroupClaim c) {
    switch (c) {
        case GroupClaim::Isomorphism: return "isomorphism";
        case GroupClaim::AfterGainsZ: return "after = before + Z";
        case GroupClaim::BeforeGainsZ: return "before = after + Z";
    }
    return "?";
}

std::string GluingReport::text() const {
    std::string s;
    s += "operation: " + operation + "\n";
    s += "before: chi " + std::to_string(euler_characteristic(before)) + ", group " + group_before.str() + "\n";
    s += "after:  chi " + std::to_string(euler_characteristic(after)) + ", group " + group_after.str() + "\n";
    s += "claim: " + group_claim_name(claim) + "\n";
    s += std::string("verdict: ") + (verdict ? "true" : "FALSE") + "\n";
    return s;
}

std::string GluingReport::to_json() const {
    nlohmann::ordered_json j;
    j["operation"] = operation;
    j["before"] = nlohmann::ordered_json::parse(before.to_json());
    j["after"] = nlohmann::ordered_json::parse(after.to_json());
    j["group_before"] = group_before.str();
    j["group_after"] = group_after.str();
    j["claim"] = group_claim_name(claim);
    j["verdict"] = verdict;
    return j.dump(2);
}

GluingReport add_stop(const StoppedSurface& s, int circle) {
    s.validate();
    auto [ci, bi] = s.locate_circle(circle);
    StoppedSurface after = s;
    after.components[ci].boundary[bi].stops += 1;
    GroupClaim claim =
        s.components[ci].total_stops() > 0 ? GroupClaim::AfterGainsZ : GroupClaim::Isomorphism;
    return finish("add_stop", s, std::move(after), claim);
}

GluingReport attach_handle(const StoppedSurface& s, StopRef q_minus, StopRef q_plus) {
    s.validate();
    auto [cm, bm] = s.locate_circle(q_minus.circle);
    auto [cp, bp] = s.locate_circle(q_plus.circle);
    auto check_stop = [&](std::pair<int, int> loc, const StopRef& q) {
        int count = s.components[loc.first].boundary[loc.second].stops;
        if (q.position < 0 || q.position >= count)
            throw std::invalid_argument("attach_handle: stop position out of range");
    };
    check_stop({cm, bm}, q_minus);
    check_stop({cp, bp}, q_plus);
    if (q_minus.circle == q_plus.circle && q_minus.position == q_plus.position)
        throw std::invalid_argument("attach_handle: the two feet must be distinct stops");

    // The group dichotomy concerns the component(s) the handle touches;
    // untouched components contribute equal direct summands on both sides.
    int involved_stops_after = (cm == cp ? s.components[cm].total_stops()
                                         : s.components[cm].total_stops() + s.components[cp].total_stops()) -
                               2;

    StoppedSurface after = s;
    if (q_minus.circle == q_plus.circle) {
        // Same circle: the circle splits; the handle is untwisted, so the
        // stops between the feet (counterclockwise from q- to q+) form one
        // new circle and the rest the other.
        auto& comp = after.components[cm];
        int total = comp.boundary[bm].stops;
        int inside = ((q_plus.position - q_minus.position - 1) % total + total) % total;
        int outside = total - 2 - inside;
        comp.boundary.erase(comp.boundary.begin() + bm);
        comp.boundary.push_back({inside});
        comp.boundary.push_back({outside});
    } else if (cm == cp) {
        // Two circles of one component merge; genus climbs.
        auto& comp = after.components[cm];
        int merged = comp.boundary[bm].stops + comp.boundary[bp].stops - 2;
        int hi = std::max(bm, bp), lo = std::min(bm, bp);
        comp.boundary.erase(comp.boundary.begin() + hi);
        comp.boundary.erase(comp.boundary.begin() + lo);
        comp.boundary.push_back({merged});
        comp.genus += 1;
    } else {
        // Two components merge along the handle.
        auto& a = after.components[cm];
        auto& b = after.components[cp];
        int merged = a.boundary[bm].stops + b.boundary[bp].stops - 2;
        a.boundary.erase(a.boundary.begin() + bm);
        b.boundary.erase(b.boundary.begin() + bp);
        a.genus += b.genus;
        a.boundary.insert(a.boundary.end(), b.boundary.begin(), b.boundary.end());
        a.boundary.push_back({merged});
        after.components.erase(after.components.begin() + std::max(cm, cp));
    }

    if (euler_characteristic(after) != euler_characteristic(s) - 1)
        throw std::logic_error("attach_handle: Euler characteristic bookkeeping");
    GroupClaim claim = involved_stops_after > 0 ? GroupClaim::BeforeGainsZ : GroupClaim::Isomorphism;
    return finish("attach_handle", s, std::move(after), claim);
}

GluingReport glue_disk(const StoppedSurface& s, int circle) {
    s.validate();
    auto [ci, bi] = s.locate_circle(circle);
    if (s.components[ci].boundary[bi].stops != 0)
        throw std::invalid_argument("glue_disk: circle carries stops");
    if (s.components[ci].num_circles() == 1)
        throw std::invalid_argument("glue_disk: component would become closed");
    StoppedSurface after = s;
    after.components[ci].boundary.erase(after.components[ci].boundary.begin() + bi);
    if (euler_characteristic(after) != euler_characteristic(s) + 1)
        throw std::logic_error("glue_disk: Euler characteristic bookkeeping");
    return finish("glue_disk", s, std::move(after), GroupClaim::BeforeGainsZ);
}

GluingReport circular_glue(const StoppedSurface& s, int c_minus, int c_plus) {
    s.validate();
    if (c_minus == c_plus) throw std::invalid_argument("circular_glue: need two distinct circles");
    auto [cm, bm] = s.locate_circle(c_minus);
    auto [cp, bp] = s.locate_circle(c_plus);
    if (s.components[cm].boundary[bm].stops != 0 || s.components[cp].boundary[bp].stops != 0)
        throw std::invalid_argument("circular_glue: circles must be stopless");

    // The claim depends on where the circles sat before gluing.
    GroupClaim claim;
    if (cm == cp) {
        claim = GroupClaim::Isomorphism;
    } else {
        bool minus_has = s.components[cm].total_stops() > 0;
        bool plus_has = s.components[cp].total_stops() > 0;
        claim = (minus_has && plus_has) ? GroupClaim::Isomorphism : GroupClaim::BeforeGainsZ;
    }

    // Three steps: stop each circle, connect the stops by a handle, cap the
    // resulting stopless circle with a disk.
    GluingReport step1 = add_stop(s, c_minus);
    GluingReport step2 = add_stop(step1.after, c_plus);
    StopRef qm{c_minus, 0}, qp{c_plus, 0};
    GluingReport step3 = attach_handle(step2.after, qm, qp);

    // attach_handle appends the merged circle at the end of the surviving
    // component, which sits at index min(cm, cp).
    int surviving = std::min(cm, cp);
    int merged_global = 0;
    for (int comp = 0; comp < surviving; ++comp) merged_global += step3.after.components[comp].num_circles();
    merged_global += step3.after.components[surviving].num_circles() - 1;
    if (step3.after.components[surviving].boundary.back().stops != 0)
        throw std::logic_error("circular_glue: merged circle still carries stops");
    GluingReport step4 = glue_disk(step3.after, merged_global);

    StoppedSurface after = step4.after;
    if (euler_characteristic(after) != euler_characteristic(s))
        throw std::logic_error("circular_glue: Euler characteristic bookkeeping");
    return finish("circular_glue", s, std::move(after), claim);
}

}  // namespace cobcalc
