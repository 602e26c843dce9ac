#include "qsynth/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qsynth {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_to_json(Complex z) {
  return ordered_json::array({z.real(), z.imag()});
}

Complex complex_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a [re, im] pair");
  }
  double re = j[0].get<double>();
  double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ParseError("non-finite matrix entry");
  }
  return {re, im};
}

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("malformed JSON");
  }
  return j;
}

Eigen::Index get_dim(const ordered_json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("missing integer \"dim\"");
  }
  auto d = j["dim"].get<Eigen::Index>();
  if (d <= 0) {
    throw ParseError("\"dim\" must be positive");
  }
  return d;
}

ordered_json matrix_rows(const CMat& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string unitary_to_json(const CMat& m) {
  ordered_json j;
  j["dim"] = m.rows();
  j["matrix"] = matrix_rows(m);
  return j.dump() + "\n";
}

CMat unitary_from_json(const std::string& text) {
  ordered_json j = parse(text);
  Eigen::Index n = get_dim(j);
  if (!j.contains("matrix") || !j["matrix"].is_array() ||
      static_cast<Eigen::Index>(j["matrix"].size()) != n) {
    throw ParseError("unitary file: \"matrix\" must have dim rows");
  }
  CMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const ordered_json& row = j["matrix"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError("unitary file: matrix is not square");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
  }
  return m;
}

std::string circuit_to_json(const Circuit& c) {
  ordered_json j;
  j["dim"] = c.dim;
  ordered_json gates = ordered_json::array();
  for (const Gate& g : c.gates) {
    ordered_json jg;
    if (g.is_single()) {
      const SingleQuditGate& s = g.as_single();
      jg["kind"] = "single";
      jg["qudit"] = s.qudit;
      jg["label"] = s.label;
      ordered_json entries = ordered_json::array();
      for (Eigen::Index r = 0; r < s.matrix.rows(); ++r) {
        for (Eigen::Index col = 0; col < s.matrix.cols(); ++col) {
          entries.push_back(complex_to_json(s.matrix(r, col)));
        }
      }
      jg["matrix"] = std::move(entries);
    } else {
      const ControlledMGate& cm = g.as_cm();
      jg["kind"] = "cm";
      jg["control_qudit"] = cm.control_qudit;
      jg["control_state"] = cm.control_state;
      jg["target_state"] = cm.target_state;
    }
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  return j.dump() + "\n";
}

Circuit circuit_from_json(const std::string& text) {
  ordered_json j = parse(text);
  Eigen::Index d = get_dim(j);
  if (!j.contains("gates") || !j["gates"].is_array()) {
    throw ParseError("circuit file: missing \"gates\" array");
  }
  Circuit c;
  c.dim = d;
  for (const ordered_json& jg : j["gates"]) {
    if (!jg.is_object() || !jg.contains("kind")) {
      throw ParseError("circuit file: gate without \"kind\"");
    }
    std::string kind = jg["kind"].get<std::string>();
    if (kind == "single") {
      int qudit = jg.at("qudit").get<int>();
      if (qudit != 0 && qudit != 1) {
        throw ParseError("circuit file: qudit must be 0 or 1");
      }
      std::string label = jg.value("label", std::string{});
      const ordered_json& entries = jg.at("matrix");
      if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != d * d) {
        throw ParseError("circuit file: single-qudit matrix must have d^2 entries");
      }
      CMat m(d, d);
      for (Eigen::Index idx = 0; idx < d * d; ++idx) {
        m(idx / d, idx % d) = complex_from_json(entries[static_cast<std::size_t>(idx)]);
      }
      c.push_single(qudit, std::move(label), std::move(m));
    } else if (kind == "cm") {
      int cq = jg.at("control_qudit").get<int>();
      int a = jg.at("control_state").get<int>();
      int b = jg.at("target_state").get<int>();
      if ((cq != 0 && cq != 1) || a < 0 || a >= d || b < 0 || b >= d) {
        throw ParseError("circuit file: cm gate indices out of range");
      }
      c.push_cm(cq, a, b);
    } else {
      throw ParseError("circuit file: unknown gate kind \"" + kind + "\"");
    }
  }
  return c;
}

std::string state_to_json(const CVec& v) {
  ordered_json j;
  j["dim"] = v.size();
  ordered_json entries = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    entries.push_back(complex_to_json(v(i)));
  }
  j["vector"] = std::move(entries);
  return j.dump() + "\n";
}

CVec state_from_json(const std::string& text) {
  ordered_json j = parse(text);
  Eigen::Index n = get_dim(j);
  if (!j.contains("vector") || !j["vector"].is_array() ||
      static_cast<Eigen::Index>(j["vector"].size()) != n) {
    throw ParseError("state file: \"vector\" must have dim entries");
  }
  CVec v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = complex_from_json(j["vector"][static_cast<std::size_t>(i)]);
  }
  return v;
}

std::string report_to_json(Eigen::Index d, const VerifyReport& r) {
  ordered_json j;
  j["dim"] = d;
  j["max_err"] = r.max_err;
  j["pass"] = r.pass;
  j["gates_total"] = r.counts.gates_total;
  j["gates_single"] = r.counts.gates_single;
  j["gates_cm"] = r.counts.gates_cm;
  return j.dump() + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot open for writing: " + path.string());
  }
  out << text;
  if (!out) {
    throw ParseError("write failed: " + path.string());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open for reading: " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qsynth
