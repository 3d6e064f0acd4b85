#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace srncl {

// Behavioral family of a gate. Threshold gates carry the usual THmn
// hysteresis: the output sets once the weighted input sum reaches the
// threshold, clears only when every input is deasserted, and holds
// in between. The ISC rail primitives implement the illegal-state
// correction cell; see gate_next_output for their exact semantics.
enum class GateFn : uint8_t {
    Threshold,
    Inverter,
    IscRail1,  // drives the d1 rail of an ISC output pair
    IscRail0,  // drives the d0 rail of an ISC output pair
};

struct GateSpec {
    std::string kind;          // library name, e.g. "th23w2"
    GateFn fn = GateFn::Threshold;
    int num_inputs = 0;
    int threshold = 0;         // threshold gates only
    std::vector<int> weights;  // per-input, threshold gates only

    int weight_sum() const;
};

// Built-in library: th12, th22, th23, th33, th44, th23w2, th34w2, inv,
// iscr1, iscr0. Additional kinds may be registered at runtime.
const GateSpec& gate_library(const std::string& kind);
bool gate_registered(const std::string& kind);
void register_gate(const GateSpec& spec);
std::vector<std::string> registered_gate_kinds();

// One evaluation step: previous output state + current input values ->
// next output state. Throws std::invalid_argument on input-count mismatch.
bool gate_next_output(const GateSpec& spec, bool prev, std::span<const uint8_t> inputs);

// State carried by a gate between evaluations.
struct GateState {
    bool current_output = false;
};

}  // namespace srncl
