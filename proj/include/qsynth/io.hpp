#pragma once

#include <filesystem>
#include <string>

#include "qsynth/gates.hpp"
#include "qsynth/sim.hpp"

namespace qsynth {

// File formats (all UTF-8 JSON, row-major complex entries as [re, im]):
//   unitary: {"dim": n, "matrix": [[[re,im] x n] x n]}
//   circuit: {"dim": d, "gates": [{"kind":"single","qudit":q,"label":s,
//             "matrix":[[re,im] x d^2]} | {"kind":"cm","control_qudit":q,
//             "control_state":a,"target_state":b}]}
//   state:   {"dim": n, "vector": [[re,im] x n]}
// Writers are canonical, so write -> read -> write is byte-identical.

std::string unitary_to_json(const CMat& m);
CMat unitary_from_json(const std::string& text);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

std::string state_to_json(const CVec& v);
CVec state_from_json(const std::string& text);

/// One-line machine-readable verification report.
std::string report_to_json(Eigen::Index d, const VerifyReport& r);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qsynth
