#include "srncl/gates.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace srncl {

int GateSpec::weight_sum() const {
    return std::accumulate(weights.begin(), weights.end(), 0);
}

namespace {

GateSpec th(const std::string& kind, int n, int m, std::vector<int> w = {}) {
    GateSpec s;
    s.kind = kind;
    s.fn = GateFn::Threshold;
    s.num_inputs = n;
    s.threshold = m;
    s.weights = w.empty() ? std::vector<int>(n, 1) : std::move(w);
    if (s.threshold < 1 || s.threshold > s.weight_sum())
        throw std::invalid_argument("gate " + kind + ": threshold outside [1, sum of weights]");
    return s;
}

std::map<std::string, GateSpec> builtin_library() {
    std::map<std::string, GateSpec> lib;
    auto put = [&lib](GateSpec s) { lib.emplace(s.kind, std::move(s)); };
    put(th("th12", 2, 1));
    put(th("th22", 2, 2));  // Muller C-element
    put(th("th13", 3, 1));
    put(th("th23", 3, 2));
    put(th("th33", 3, 3));
    put(th("th44", 4, 4));
    put(th("th23w2", 3, 2, {2, 1, 1}));
    put(th("th34w2", 4, 3, {2, 1, 1, 1}));

    GateSpec inv;
    inv.kind = "inv";
    inv.fn = GateFn::Inverter;
    inv.num_inputs = 1;
    put(inv);

    // ISC rail cells. iscr1 inputs: in_d1, in_d0, req_a, req_b, sibling d0
    // output. iscr0 inputs: in_d0, req_a, req_b, sibling d1 output.
    GateSpec i1;
    i1.kind = "iscr1";
    i1.fn = GateFn::IscRail1;
    i1.num_inputs = 5;
    put(i1);
    GateSpec i0;
    i0.kind = "iscr0";
    i0.fn = GateFn::IscRail0;
    i0.num_inputs = 4;
    put(i0);
    return lib;
}

std::map<std::string, GateSpec>& library_map() {
    static std::map<std::string, GateSpec> lib = builtin_library();
    return lib;
}

std::mutex& library_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const GateSpec& gate_library(const std::string& kind) {
    std::lock_guard lock(library_mutex());
    auto& lib = library_map();
    auto it = lib.find(kind);
    if (it == lib.end()) throw std::invalid_argument("unknown gate kind: " + kind);
    return it->second;
}

bool gate_registered(const std::string& kind) {
    std::lock_guard lock(library_mutex());
    return library_map().count(kind) > 0;
}

void register_gate(const GateSpec& spec) {
    if (spec.kind.empty()) throw std::invalid_argument("gate kind must be named");
    if (spec.num_inputs < 1) throw std::invalid_argument("gate needs at least one input");
    if (spec.fn == GateFn::Threshold) {
        if (static_cast<int>(spec.weights.size()) != spec.num_inputs)
            throw std::invalid_argument("weight count must match input count");
        for (int w : spec.weights)
            if (w < 1) throw std::invalid_argument("weights must be positive");
        int wsum = std::accumulate(spec.weights.begin(), spec.weights.end(), 0);
        if (spec.threshold < 1 || spec.threshold > wsum)
            throw std::invalid_argument("threshold outside [1, sum of weights]");
    }
    std::lock_guard lock(library_mutex());
    library_map()[spec.kind] = spec;
}

std::vector<std::string> registered_gate_kinds() {
    std::lock_guard lock(library_mutex());
    std::vector<std::string> out;
    for (auto& [k, _] : library_map()) out.push_back(k);
    return out;
}

bool gate_next_output(const GateSpec& spec, bool prev, std::span<const uint8_t> in) {
    if (static_cast<int>(in.size()) != spec.num_inputs)
        throw std::invalid_argument("gate " + spec.kind + ": expected " +
                                    std::to_string(spec.num_inputs) + " inputs, got " +
                                    std::to_string(in.size()));
    switch (spec.fn) {
        case GateFn::Threshold: {
            int s = 0;
            for (int i = 0; i < spec.num_inputs; ++i)
                if (in[i]) s += spec.weights[i];
            if (s >= spec.threshold) return true;
            if (s == 0) return false;
            return prev;
        }
        case GateFn::Inverter:
            return !in[0];
        case GateFn::IscRail1: {
            // Buffer the d1 rail of a legal DATA1 while both downstream
            // requests demand data; an asserted d0 rail (illegal input) or an
            // already-committed sibling vetoes the set. Clears only once the
            // input rail has dropped and both requests demand null, so the
            // output cannot null out ahead of its driver under any delays.
            bool in_d1 = in[0], in_d0 = in[1], req_a = in[2], req_b = in[3], sib = in[4];
            if (!in_d1 && !req_a && !req_b) return false;
            if (prev) return true;
            return in_d1 && !in_d0 && req_a && req_b && !sib;
        }
        case GateFn::IscRail0: {
            // d0 rail: set on an asserted input d0 (covers both DATA0 and the
            // forced resolution of an illegal input) under a full request.
            bool in_d0 = in[0], req_a = in[1], req_b = in[2], sib = in[3];
            if (!in_d0 && !req_a && !req_b) return false;
            if (prev) return true;
            return in_d0 && req_a && req_b && !sib;
        }
    }
    throw std::logic_error("unhandled gate function");
}

}  // namespace srncl
