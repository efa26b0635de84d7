// Command-line front end binding the library modules into reproducible
// benchmark recipes. Every run writes its primary report plus a manifest
// (effective configuration, input hashes, tool version); `rerun` replays a
// manifest and must reproduce the report byte-for-byte.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "orfh/analysis.hpp"
#include "orfh/bethe.hpp"
#include "orfh/dmrg.hpp"
#include "orfh/exact.hpp"
#include "orfh/fcidump.hpp"
#include "orfh/grouping.hpp"
#include "orfh/hubbard.hpp"
#include "orfh/jordan_wigner.hpp"
#include "orfh/mpo.hpp"
#include "orfh/rotation.hpp"
#include "orfh/scf.hpp"
#include "orfh/vqe.hpp"

using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

struct RunContext {
  std::vector<std::pair<std::string, std::string>> outputs;  // path, bytes
  std::map<std::string, std::string> input_hashes;

  std::string read_input(const std::string& path) {
    const std::string bytes = read_file(path);
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(bytes)));
    input_hashes[path] = buf;
    return bytes;
  }
};

using Handler = std::function<void(const json&, RunContext&)>;

// ---- instance plumbing ----

orfh::CoefficientTensors build_instance(const json& cfg, json* descriptor) {
  orfh::HubbardParams params;
  params.n_sites = cfg.at("sites");
  params.t = cfg.value("t", 1.0);
  params.u = cfg.value("u", 1.0);
  params.mu = cfg.value("mu", params.u / 2);
  orfh::CoefficientTensors tensors = orfh::build_hubbard(params);
  const bool rotated = cfg.value("rotate", true);
  const bool real_flag = cfg.value("real", false);
  const std::uint64_t seed = cfg.value("seed", 0ull);
  if (rotated) {
    const orfh::OrbitalRotation u =
        orfh::sample_rotation(2 * params.n_sites, seed, real_flag);
    tensors = orfh::rotate(tensors, u);
  }
  if (descriptor) {
    *descriptor = {{"n_sites", params.n_sites}, {"t", params.t},
                   {"u", params.u},             {"mu", params.mu},
                   {"seed", seed},              {"real_flag", real_flag},
                   {"rotated", rotated},        {"prng_id", orfh::kPrngId}};
  }
  return tensors;
}

orfh::CoefficientTensors load_tensors(const json& cfg, RunContext& ctx) {
  if (cfg.contains("in")) {
    const std::string path = cfg.at("in");
    const std::string bytes = ctx.read_input(path);
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
      return orfh::CoefficientTensors::from_json(bytes);
    return orfh::parse_fcidump(bytes).tensors;
  }
  if (!cfg.contains("sites"))
    throw std::runtime_error("need either --in or instance parameters");
  return build_instance(cfg, nullptr);
}

std::string report(const json& cfg, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  const std::string format = cfg.value("format", "csv");
  std::ostringstream out;
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(obj);
    }
    out << arr.dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << header[i] << (i + 1 < header.size() ? ',' : '\n');
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        out << row[i] << (i + 1 < row.size() ? ',' : '\n');
  } else {
    throw std::runtime_error("unknown format " + format);
  }
  return out.str();
}

std::string out_path(const json& cfg) { return cfg.at("out"); }

// ---- subcommand handlers ----

void cmd_generate(const json& cfg, RunContext& ctx) {
  json descriptor;
  const orfh::CoefficientTensors tensors = build_instance(cfg, &descriptor);
  const std::string base = out_path(cfg);
  ctx.outputs.emplace_back(base + ".instance.json", descriptor.dump(2) + "\n");
  ctx.outputs.emplace_back(base + ".tensors.json", tensors.to_json());
  if (cfg.value("export_fcidump", false))
    ctx.outputs.emplace_back(base + ".fcidump",
                             orfh::write_fcidump_style(tensors));
}

void cmd_ingest(const json& cfg, RunContext& ctx) {
  const orfh::FcidumpData data =
      orfh::parse_fcidump(ctx.read_input(cfg.at("in")));
  ctx.outputs.emplace_back(out_path(cfg), data.tensors.to_json());
}

void cmd_analyze(const json& cfg, RunContext& ctx) {
  const orfh::CoefficientTensors tensors = load_tensors(cfg, ctx);
  const orfh::StructureReport r =
      orfh::analyze(tensors, cfg.value("source", "ORFH"));
  ctx.outputs.emplace_back(
      out_path(cfg),
      report(cfg, {"n_spin_orbitals", "pauli_term_count", "one_norm",
                   "two_norm", "source"},
             {{std::to_string(r.n_spin_orbitals),
               std::to_string(r.pauli_term_count), fmt12(r.one_norm),
               fmt12(r.two_norm), r.source}}));
}

void cmd_hf(const json& cfg, RunContext& ctx) {
  const orfh::CoefficientTensors tensors = load_tensors(cfg, ctx);
  const int n = tensors.n_spin_orbitals();
  const int electrons = cfg.value("electrons", n / 2);
  orfh::ScfOptions opts;
  opts.seed = cfg.value("seed", 0ull);
  const orfh::ScfResult hf =
      orfh::run_ghf(tensors, electrons, cfg.value("attempts", 8), opts);
  double e_exact = 0.0, ratio = 0.0;
  const bool with_exact = cfg.value("with_exact", false);
  if (with_exact) {
    e_exact =
        orfh::exact_ground_state(orfh::jordan_wigner(tensors), 1)[0].energy;
    ratio = -orfh::correlation_energy(e_exact, hf.hf_energy) /
            std::abs(e_exact);
  }
  ctx.outputs.emplace_back(
      out_path(cfg),
      report(cfg, {"n_spin_orbitals", "electrons", "e_hf", "converged",
                   "e_exact", "corr_ratio"},
             {{std::to_string(n), std::to_string(electrons),
               fmt12(hf.hf_energy), hf.converged ? "1" : "0",
               with_exact ? fmt12(e_exact) : "", with_exact ? fmt12(ratio) : ""}}));
}

void cmd_exact(const json& cfg, RunContext& ctx) {
  const orfh::CoefficientTensors tensors = load_tensors(cfg, ctx);
  const int k = cfg.value("k", 1);
  const auto states =
      orfh::exact_ground_state(orfh::jordan_wigner(tensors), k);
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < static_cast<int>(states.size()); ++i)
    rows.push_back({std::to_string(i), fmt12(states[i].energy),
                    fmt12(states[i].residual)});
  ctx.outputs.emplace_back(
      out_path(cfg), report(cfg, {"level", "energy", "residual"}, rows));
}

void cmd_bethe(const json& cfg, RunContext& ctx) {
  const double t = cfg.value("t", 1.0);
  const double u = cfg.at("u");
  if (cfg.value("bulk", false)) {
    ctx.outputs.emplace_back(
        out_path(cfg), report(cfg, {"u", "energy_per_site"},
                              {{fmt12(u), fmt12(orfh::bethe_bulk_energy_density(u))}}));
    return;
  }
  const int sites = cfg.at("sites");
  const double mu = cfg.value("mu", u / 2);
  const orfh::BetheSolution sol = orfh::bethe_half_filled_energy(sites, t, u);
  if (!sol.converged) throw std::runtime_error("Bethe solver did not converge");
  ctx.outputs.emplace_back(
      out_path(cfg),
      report(cfg, {"n_sites", "t", "u", "e_kinetic", "e_grand", "residual"},
             {{std::to_string(sites), fmt12(t), fmt12(u), fmt12(sol.energy),
               fmt12(sol.energy - mu * sites), fmt12(sol.residual)}}));
}

orfh::GroupingMethod method_from(const json& cfg) {
  const std::string m = cfg.value("method", "qwc");
  if (m == "qwc") return orfh::GroupingMethod::kQubitwise;
  if (m == "gc") return orfh::GroupingMethod::kGeneralCommuting;
  if (m == "br") return orfh::GroupingMethod::kBasisRotation;
  throw std::runtime_error("unknown grouping method " + m);
}

orfh::Grouping make_grouping(orfh::GroupingMethod method,
                             const orfh::CoefficientTensors& tensors,
                             const orfh::PauliSum& h) {
  switch (method) {
    case orfh::GroupingMethod::kQubitwise:
      return orfh::group_qubitwise(h);
    case orfh::GroupingMethod::kGeneralCommuting:
      return orfh::group_general_commuting(h);
    default:
      return orfh::group_basis_rotation(tensors);
  }
}

void cmd_group(const json& cfg, RunContext& ctx) {
  const orfh::CoefficientTensors tensors = load_tensors(cfg, ctx);
  const orfh::PauliSum h = orfh::jordan_wigner(tensors);
  const orfh::GroupingMethod method = method_from(cfg);
  const orfh::Grouping g = make_grouping(method, tensors, h);
  ctx.outputs.emplace_back(
      out_path(cfg),
      report(cfg, {"method", "n_terms", "n_groups"},
             {{orfh::to_string(method), std::to_string(h.term_count()),
               std::to_string(g.groups.size())}}));
}

void cmd_shots(const json& cfg, RunContext& ctx) {
  const orfh::CoefficientTensors tensors = load_tensors(cfg, ctx);
  const orfh::PauliSum h = orfh::jordan_wigner(tensors);
  const double eps = cfg.value("eps", 1e-3);
  const orfh::GroupingMethod method = method_from(cfg);
  const orfh::Grouping g = make_grouping(method, tensors, h);
  const auto gs = orfh::exact_ground_state(h, 1);
  const orfh::ShotEstimate est =
      orfh::estimate_shots(g, h, gs[0].statevector, eps);
  ctx.outputs.emplace_back(
      out_path(cfg),
      report(cfg, {"method", "eps", "n_groups", "k_factor", "shots"},
             {{orfh::to_string(method), fmt12(eps),
               std::to_string(g.groups.size()), fmt12(est.k_factor),
               fmt12(est.shots)}}));
}

void cmd_vqe(const json& cfg, RunContext& ctx) {
  const orfh::CoefficientTensors tensors = load_tensors(cfg, ctx);
  const orfh::PauliSum h = orfh::jordan_wigner(tensors);
  orfh::AnsatzCircuit circuit;
  circuit.n_qubits = h.width();
  circuit.depth = cfg.value("depth", 2);
  const orfh::VqeOptimizer optimizer =
      orfh::parse_optimizer(cfg.value("optimizer", "adam"));
  const orfh::VqeTrajectory traj =
      orfh::run_vqe(h, circuit, optimizer, cfg.value("seed", 0ull),
                    cfg.value("iterations", 100));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < traj.energies.size(); ++i)
    rows.push_back({std::to_string(i), fmt12(traj.energies[i])});
  rows.push_back({"best", fmt12(traj.best_energy)});
  rows.push_back({"evaluations", std::to_string(traj.evaluations)});
  ctx.outputs.emplace_back(out_path(cfg),
                           report(cfg, {"iteration", "energy"}, rows));
}

void cmd_dmrg(const json& cfg, RunContext& ctx) {
  const orfh::CoefficientTensors tensors = load_tensors(cfg, ctx);
  const orfh::PauliSum h = orfh::jordan_wigner(tensors);
  const orfh::Mpo mpo = orfh::compile_mpo(h);
  orfh::DmrgOptions opts;
  opts.max_bond = cfg.value("bond", 32);
  opts.sweeps = cfg.value("sweeps", 12);
  opts.seed = cfg.value("seed", 12345ull);
  const orfh::DmrgResult res = orfh::dmrg_run(mpo, opts);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < res.sweep_energies.size(); ++i)
    rows.push_back({std::to_string(i), fmt12(res.sweep_energies[i])});
  rows.push_back({"final", fmt12(res.energy)});
  rows.push_back({"truncation_error", fmt12(res.truncation_error)});
  rows.push_back({"converged", res.converged ? "1" : "0"});
  ctx.outputs.emplace_back(out_path(cfg),
                           report(cfg, {"sweep", "energy"}, rows));
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"generate", cmd_generate}, {"ingest", cmd_ingest},
      {"analyze", cmd_analyze},   {"hf", cmd_hf},
      {"exact", cmd_exact},       {"bethe", cmd_bethe},
      {"group", cmd_group},       {"shots", cmd_shots},
      {"vqe", cmd_vqe},           {"dmrg", cmd_dmrg}};
  return table;
}

int run(const std::string& subcommand, const json& cfg) {
  RunContext ctx;
  handlers().at(subcommand)(cfg, ctx);
  for (const auto& [path, bytes] : ctx.outputs) atomic_write(path, bytes);
  json manifest = {{"tool", "orfh"},
                   {"version", kVersion},
                   {"subcommand", subcommand},
                   {"config", cfg},
                   {"inputs", ctx.input_hashes}};
  atomic_write(out_path(cfg) + ".manifest.json", manifest.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark instance generator and ground-state solver suite"};
  app.require_subcommand(1);

  // Thread count: ORFH_NUM_THREADS, default all available cores.
  if (const char* env = std::getenv("ORFH_NUM_THREADS"))
    Eigen::setNbThreads(std::max(1, std::atoi(env)));

  json cfg;
  std::string subcommand;
  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--out", [&cfg](const std::string& v) { cfg["out"] = v; },
           "output path (reports; prefix for generate)")
        ->required();
    sub->add_option_function<std::string>(
        "--format", [&cfg](const std::string& v) { cfg["format"] = v; },
        "csv or json");
  };
  const auto add_instance = [&cfg](CLI::App* sub, bool in_only) {
    sub->add_option_function<std::string>(
        "--in", [&cfg](const std::string& v) { cfg["in"] = v; },
        "tensors JSON (or FCIDUMP) input path");
    if (in_only) return;
    sub->add_option_function<int>(
        "--sites", [&cfg](int v) { cfg["sites"] = v; }, "lattice sites N");
    sub->add_option_function<double>(
        "--t", [&cfg](double v) { cfg["t"] = v; }, "hopping amplitude");
    sub->add_option_function<double>(
        "--u", [&cfg](double v) { cfg["u"] = v; }, "on-site repulsion");
    sub->add_option_function<double>(
        "--mu", [&cfg](double v) { cfg["mu"] = v; },
        "chemical potential (default U/2)");
    sub->add_option_function<std::uint64_t>(
        "--seed", [&cfg](std::uint64_t v) { cfg["seed"] = v; },
        "rotation seed");
    sub->add_flag_function(
        "--real", [&cfg](std::int64_t) { cfg["real"] = true; },
        "real orthogonal rotation");
    sub->add_flag_function(
        "--no-rotation", [&cfg](std::int64_t) { cfg["rotate"] = false; },
        "skip the orbital rotation (plain Hubbard)");
  };

  for (const auto& [name, handler] : handlers()) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    if (name == "ingest") {
      add_instance(sub, true);
      sub->get_option("--in")->required();
    } else if (name == "bethe") {
      sub->add_option_function<int>(
          "--sites", [&cfg](int v) { cfg["sites"] = v; }, "lattice sites");
      sub->add_option_function<double>(
          "--t", [&cfg](double v) { cfg["t"] = v; }, "hopping amplitude");
      sub->add_option_function<double>(
              "--u", [&cfg](double v) { cfg["u"] = v; }, "on-site repulsion")
          ->required();
      sub->add_option_function<double>(
          "--mu", [&cfg](double v) { cfg["mu"] = v; }, "chemical potential");
      sub->add_flag_function(
          "--bulk", [&cfg](std::int64_t) { cfg["bulk"] = true; },
          "thermodynamic-limit energy density");
    } else {
      add_instance(sub, false);
      if (name == "generate") {
        sub->get_option("--sites")->required();
        sub->add_flag_function(
            "--export-fcidump",
            [&cfg](std::int64_t) { cfg["export_fcidump"] = true; },
            "also write FCIDUMP-style text");
      }
    }
    if (name == "hf") {
      sub->add_option_function<int>(
          "--electrons", [&cfg](int v) { cfg["electrons"] = v; },
          "electron count (default half filling)");
      sub->add_option_function<int>(
          "--attempts", [&cfg](int v) { cfg["attempts"] = v; },
          "randomized SCF starts");
      sub->add_flag_function(
          "--with-exact", [&cfg](std::int64_t) { cfg["with_exact"] = true; },
          "also diagonalize exactly and report the correlation ratio");
    }
    if (name == "exact")
      sub->add_option_function<int>(
          "--k", [&cfg](int v) { cfg["k"] = v; }, "number of eigenpairs");
    if (name == "group" || name == "shots")
      sub->add_option_function<std::string>(
          "--method", [&cfg](const std::string& v) { cfg["method"] = v; },
          "qwc, gc, or br");
    if (name == "shots")
      sub->add_option_function<double>(
          "--eps", [&cfg](double v) { cfg["eps"] = v; }, "target accuracy");
    if (name == "vqe") {
      sub->add_option_function<std::string>(
          "--optimizer",
          [&cfg](const std::string& v) { cfg["optimizer"] = v; },
          "adam, lbfgs, nft, or spsa");
      sub->add_option_function<int>(
          "--iterations", [&cfg](int v) { cfg["iterations"] = v; },
          "optimizer iterations");
      sub->add_option_function<int>(
          "--depth", [&cfg](int v) { cfg["depth"] = v; }, "ansatz depth");
    }
    if (name == "dmrg") {
      sub->add_option_function<int>(
          "--bond", [&cfg](int v) { cfg["bond"] = v; }, "max bond dimension");
      sub->add_option_function<int>(
          "--sweeps", [&cfg](int v) { cfg["sweeps"] = v; }, "max sweeps");
    }
    sub->callback([&subcommand, name = name] { subcommand = name; });
  }

  CLI::App* rerun = app.add_subcommand("rerun", "replay a manifest");
  std::string manifest_path, rerun_out;
  rerun->add_option("manifest", manifest_path, "manifest JSON path")
      ->required();
  rerun->add_option("--out", rerun_out, "override output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rerun->parsed()) {
      const json manifest = json::parse(read_file(manifest_path));
      json stored = manifest.at("config");
      if (!rerun_out.empty()) stored["out"] = rerun_out;
      return run(manifest.at("subcommand"), stored);
    }
    return run(subcommand, cfg);
  } catch (const std::exception& e) {
    const json err = {{"error", e.what()}, {"subcommand", subcommand}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
