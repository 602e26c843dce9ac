#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsynth/csynth.hpp"
#include "qsynth/gates.hpp"
#include "qsynth/io.hpp"
#include "qsynth/matcore.hpp"
#include "qsynth/sim.hpp"
#include "qsynth/stateprep.hpp"
#include "qsynth/usynth.hpp"

namespace {

using namespace qsynth;

bool g_quiet = false;

void diag(const std::string& msg) {
  if (!g_quiet) {
    std::cerr << "qsynth: " << msg << "\n";
  }
}

Eigen::Index isqrt_exact(Eigen::Index n) {
  auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  return (d * d == n) ? d : -1;
}

struct SynthArgs {
  std::string in, out;
  Eigen::Index dim = 0;
  double tol = 1e-8;
  bool prune_zero = false;
};

int run_synth(const SynthArgs& a) {
  CMat u;
  try {
    u = unitary_from_json(read_text_file(a.in));
  } catch (const ParseError& e) {
    diag(std::string("parse error: ") + e.what());
    return 1;
  }
  Eigen::Index n = u.rows();
  Eigen::Index d = (a.dim > 0) ? a.dim : isqrt_exact(n);
  if (d < 2 || d * d != n) {
    diag("input dimension " + std::to_string(n) + " is not d^2 with d >= 2");
    return 1;
  }
  if (!is_unitary(u, Tolerances::for_dim(n).unitary)) {
    diag("input is not unitary: max|U^dagger U - I| exceeds tolerance");
    return 1;
  }
  Circuit c;
  try {
    SynthOptions opts;
    opts.prune_zero = a.prune_zero;
    c = synthesize(u, opts);
  } catch (const Error& e) {
    diag(std::string("synthesis failed: ") + e.what());
    return 1;
  }
  write_text_file(a.out, circuit_to_json(c));
  VerifyReport r = verify(c, u, a.tol);
  std::cout << report_to_json(d, r);
  return r.pass ? 0 : 2;
}

struct VerifyArgs {
  std::string circuit, unitary;
  double tol = 1e-8;
};

int run_verify(const VerifyArgs& a) {
  Circuit c;
  CMat u;
  try {
    c = circuit_from_json(read_text_file(a.circuit));
    u = unitary_from_json(read_text_file(a.unitary));
  } catch (const ParseError& e) {
    diag(std::string("parse error: ") + e.what());
    return 1;
  }
  if (u.rows() != c.dim * c.dim) {
    diag("circuit and unitary dimensions disagree");
    return 1;
  }
  VerifyReport r = verify(c, u, a.tol);
  std::cout << report_to_json(c.dim, r);
  return r.pass ? 0 : 2;
}

struct GateArgs {
  std::string name;
  std::vector<double> params;
  Eigen::Index dim = 0;
};

int run_gate(const GateArgs& a) {
  const Eigen::Index d = a.dim;
  const auto& p = a.params;
  auto idx = [&](std::size_t i) { return static_cast<Eigen::Index>(std::llround(p[i])); };
  try {
    CMat m;
    if (a.name == "P" && p.size() == 2) {
      m = p_matrix(d, idx(0), idx(1));
    } else if (a.name == "H" && p.size() == 2) {
      m = h_matrix(d, idx(0), idx(1));
    } else if (a.name == "M" && p.size() == 1) {
      m = m_matrix(d, idx(0));
    } else if (a.name == "THETA_B" && p.size() == 2) {
      m = theta_b_matrix(d, idx(0), p[1]);
    } else if (a.name == "THETA" && p.size() == static_cast<std::size_t>(d - 1)) {
      m = theta_vec_matrix(d, p);
    } else if (a.name == "E" && p.size() == 2) {
      m = e_matrix(d, idx(0), p[1]);
    } else if (a.name == "X" && p.size() == 2) {
      m = x_ab_matrix(d, idx(0), p[1]);
    } else if (a.name == "CM" && p.size() == 2) {
      m = cm_matrix(d, 0, idx(0), idx(1));
    } else {
      diag("unknown gate name or wrong parameter count: " + a.name);
      return 1;
    }
    std::cout << unitary_to_json(m);
  } catch (const Error& e) {
    diag(e.what());
    return 1;
  }
  return 0;
}

struct RandomArgs {
  Eigen::Index dim = 2;
  std::uint64_t seed = 0;
  std::string out;
};

int run_random(const RandomArgs& a) {
  if (a.dim < 2) {
    diag("--dim must be >= 2");
    return 1;
  }
  write_text_file(a.out, unitary_to_json(haar_random_unitary(a.dim, a.seed)));
  return 0;
}

struct PrepArgs {
  std::string state, out;
  Eigen::Index a = 0, b = 0;
  double tol = 1e-8;
  bool prune_zero = false;
};

int run_prep(const PrepArgs& args) {
  CVec x;
  try {
    x = state_from_json(read_text_file(args.state));
  } catch (const ParseError& e) {
    diag(std::string("parse error: ") + e.what());
    return 1;
  }
  Circuit c;
  try {
    c = s_tilde(x, args.a, args.b, args.prune_zero);
  } catch (const Error& e) {
    diag(std::string("state preparation failed: ") + e.what());
    return 1;
  }
  write_text_file(args.out, circuit_to_json(c));
  CVec result = qsynth::apply(c, x);
  CVec target = CVec::Zero(x.size());
  target(args.a * c.dim + args.b) = 1.0;
  double err = (result - target).cwiseAbs().maxCoeff();
  bool pass = err <= args.tol;
  std::cout << "{\"dim\":" << c.dim << ",\"a\":" << args.a << ",\"b\":" << args.b
            << ",\"max_err\":" << err << ",\"pass\":" << (pass ? "true" : "false")
            << "}\n";
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compiles two-qudit unitaries into single-qudit gates plus the "
               "controlled sign-flip, with dense-matrix verification."};
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "suppress diagnostics on stderr");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "synthesize a circuit for a d^2 x d^2 unitary");
  synth->add_option("input", synth_args.in, "unitary JSON file")->required();
  synth->add_option("output", synth_args.out, "circuit JSON file to write")->required();
  synth->add_option("--dim", synth_args.dim, "qudit dimension d (default: sqrt of matrix dim)");
  synth->add_option("--tol", synth_args.tol, "verification tolerance")->capture_default_str();
  synth->add_flag("--prune-zero", synth_args.prune_zero, "skip controlled gates on zero slices");

  VerifyArgs verify_args;
  auto* ver = app.add_subcommand("verify", "check a circuit file against a unitary file");
  ver->add_option("circuit", verify_args.circuit, "circuit JSON file")->required();
  ver->add_option("unitary", verify_args.unitary, "unitary JSON file")->required();
  ver->add_option("--tol", verify_args.tol, "verification tolerance")->capture_default_str();

  GateArgs gate_args;
  auto* gate = app.add_subcommand("gate", "print an elementary gate matrix as unitary JSON");
  gate->add_option("name", gate_args.name, "P|H|M|THETA_B|THETA|E|X|CM")->required();
  gate->add_option("params", gate_args.params, "gate parameters");
  gate->add_option("--dim", gate_args.dim, "qudit dimension d")->required();

  RandomArgs random_args;
  auto* rnd = app.add_subcommand("random", "write a seeded Haar-random unitary file");
  rnd->add_option("output", random_args.out, "unitary JSON file to write")->required();
  rnd->add_option("--dim", random_args.dim, "matrix dimension")->required();
  rnd->add_option("--seed", random_args.seed, "RNG seed")->capture_default_str();

  PrepArgs prep_args;
  auto* prep = app.add_subcommand("prep", "compile a state-to-basis circuit");
  prep->add_option("state", prep_args.state, "state JSON file")->required();
  prep->add_option("a", prep_args.a, "target basis index on qudit 0")->required();
  prep->add_option("b", prep_args.b, "target basis index on qudit 1")->required();
  prep->add_option("output", prep_args.out, "circuit JSON file to write")->required();
  prep->add_option("--tol", prep_args.tol, "basis-vector check tolerance")->capture_default_str();
  prep->add_flag("--prune-zero", prep_args.prune_zero, "skip controlled gates on zero slices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (synth->parsed()) return run_synth(synth_args);
    if (ver->parsed()) return run_verify(verify_args);
    if (gate->parsed()) return run_gate(gate_args);
    if (rnd->parsed()) return run_random(random_args);
    if (prep->parsed()) return run_prep(prep_args);
  } catch (const qsynth::Error& e) {
    diag(e.what());
    return 1;
  }
  return 1;
}
