#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srncl/gates.hpp"

namespace srncl {

enum class Role : uint8_t { ClMsu, ClLsu, Isc, Reg, Cd, Merge };
enum class CopyTag : uint8_t { A, B, Shared };
enum class Arch : uint8_t { Comb, Ncl, Dmr, Sr };
enum class NetSource : uint8_t { Gate, Input, Env };

std::string to_string(Role r);
std::string to_string(CopyTag c);
std::string to_string(Arch a);
Role role_from_string(const std::string& s);
CopyTag copy_from_string(const std::string& s);
Arch arch_from_string(const std::string& s);

// MSU/LSU split of an adder: the low lsu_width bits stay unduplicated.
struct PartitionSpec {
    int total_width = 0;
    int lsu_width = 0;

    int msu_width() const { return total_width - lsu_width; }
    bool valid() const { return lsu_width > 0 && lsu_width < total_width; }
    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

struct Gate {
    int id = -1;
    const GateSpec* spec = nullptr;
    std::vector<int> inputs;  // net ids
    int output = -1;          // net id
    int stage = 0;
    Role role = Role::ClMsu;
    CopyTag copy = CopyTag::Shared;
};

struct Net {
    int id = -1;
    int driver = -1;  // gate id; -1 for input/env nets
    NetSource source = NetSource::Gate;
    std::string name;
};

struct DualRailNet {
    int d1 = -1;
    int d0 = -1;
};

struct Netlist {
    Arch arch = Arch::Comb;
    int width = 0;
    int cl_stages = 1;  // register stages = cl_stages + 1 (pipelined archs)
    std::optional<PartitionSpec> partition;

    std::vector<Gate> gates;
    std::vector<Net> nets;

    // Primary data ports (env-driven rails).
    std::vector<DualRailNet> input_a, input_b;
    DualRailNet input_cin;

    // Result view per circuit copy: width sum signals then carry-out.
    // view_b is empty for single-copy circuits.
    std::vector<DualRailNet> output_a, output_b;

    // Handshake ports: completion outputs the producer obeys, and the
    // env-driven request inputs of the final registers.
    std::vector<int> producer_req;
    std::vector<int> consumer_ack;

    // Per register stage: the signals that define its occupancy.
    struct StageView {
        std::vector<DualRailNet> view_a, view_b;
    };
    std::vector<StageView> stage_views;

    int register_stages() const { return static_cast<int>(stage_views.size()); }
    const Gate& gate(int id) const { return gates.at(id); }
    const Net& net(int id) const { return nets.at(id); }
};

// Structural checks: unique drivers, arity, annotations, and that every
// feedback loop passes through at least one state-holding gate.
// Throws std::runtime_error on violation.
void validate(const Netlist& nl);

// Histogram of gate kinds.
std::map<std::string, int> count_gates(const Netlist& nl);

// Transistor-count proxy: per-kind costs for static CMOS realizations.
using GateCostTable = std::map<std::string, int>;
const GateCostTable& default_gate_costs();
int64_t estimate_transistors(const Netlist& nl, const GateCostTable& costs);

// JSON (de)serialization of the full netlist description.
std::string netlist_to_json(const Netlist& nl);
Netlist netlist_from_json(const std::string& text);
void save_netlist(const Netlist& nl, const std::string& path);
Netlist load_netlist(const std::string& path);

GateCostTable load_gate_costs(const std::string& path);

}  // namespace srncl
