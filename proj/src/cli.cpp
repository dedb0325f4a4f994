// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nqsym/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "nqsym/conversion.hpp"
#include "nqsym/error.hpp"
#include "nqsym/json_io.hpp"
#include "nqsym/matroid.hpp"
#include "nqsym/polytope.hpp"
#include "nqsym/product.hpp"
#include "nqsym/rank2.hpp"
#include "nqsym/reductions.hpp"
#include "nqsym/verify.hpp"

namespace nqsym {

namespace {

struct Settings {
  std::string basis;
  bool pretty = false;
  std::string input;
  std::string comp;
  std::string left;
  std::string right;
  std::string uniform;
  std::string partition;
  int loops = 0;
  int s = 1;
  int max_n = 8;
  std::uint64_t seed = 1;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  const Settings& settings;

  Json read_input() const {
    std::string text;
    if (!settings.input.empty()) {
      std::ifstream file(settings.input);
      require(static_cast<bool>(file), "cannot open " + settings.input);
      text.assign(std::istreambuf_iterator<char>(file), {});
    } else {
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
      return Json::parse(text);
    } catch (const Json::exception& e) {
      fail(ErrorKind::InvalidArgument, std::string("malformed JSON input: ") + e.what());
    }
  }

  std::optional<Basis> basis() const {
    if (settings.basis.empty()) return std::nullopt;
    return parse_basis(settings.basis);
  }

  void emit(const Json& j, const std::vector<std::string>& lines) const {
    if (settings.pretty) {
      for (const auto& line : lines) out << line << '\n';
    } else {
      out << j.dump() << '\n';
    }
  }
};

Composition parse_composition(const std::string& text, const char* flag) {
  require(!text.empty(), std::string("missing ") + flag);
  return Composition::parse(text);
}

Json rational_json(const Rational& q) { return rational_to_json(q); }

std::string rational_text(const Rational& q) { return q.get_str(); }

void cmd_expand(const Io& io) {
  const Composition a = parse_composition(io.settings.comp, "--comp");
  const QSymElement l = n_basis_element(a);
  const QSymElement m = convert(l, Basis::Monomial);
  Json j = Json::object();
  j["comp"] = to_json(a);
  j["L"] = to_json(l);
  j["M"] = to_json(m);
  io.emit(j, {"N[" + a.to_string() + "] = " + l.to_string(),
              "N[" + a.to_string() + "] = " + m.to_string()});
}

void cmd_convert(const Io& io) {
  const QSymElement q = element_from_json(io.read_input());
  const QSymElement out = convert(q, io.basis().value_or(Basis::Monomial));
  io.emit(to_json(out), {out.to_string()});
}

void cmd_mul(const Io& io) {
  Json left;
  Json right;
  if (!io.settings.left.empty() || !io.settings.right.empty()) {
    require(!io.settings.left.empty() && !io.settings.right.empty(),
            "--left and --right go together");
    try {
      left = Json::parse(io.settings.left);
      right = Json::parse(io.settings.right);
    } catch (const Json::exception& e) {
      fail(ErrorKind::InvalidArgument, std::string("malformed JSON operand: ") + e.what());
    }
  } else {
    const Json j = io.read_input();
    require(j.is_object() && j.contains("left") && j.contains("right"),
            "expected {\"left\":..,\"right\":..}");
    left = j.at("left");
    right = j.at("right");
  }
  QSymElement product = mul(element_from_json(left), element_from_json(right));
  if (auto b = io.basis()) product = convert(product, *b);
  io.emit(to_json(product), {product.to_string()});
}

Matroid matroid_input(const Io& io) {
  const Settings& s = io.settings;
  Matroid m = uniform(0, 0);
  if (!s.uniform.empty()) {
    const Composition rn = Composition::parse(s.uniform);
    require(rn.length() == 2, "--uniform takes r,n");
    m = uniform(rn[0], rn[1]);
  } else if (!s.partition.empty()) {
    m = rank2_from_partition(Composition::parse(s.partition));
  } else {
    m = matroid_from_json(io.read_input());
  }
  require(s.loops >= 0, "--loops must be nonnegative");
  if (s.loops > 0) m = direct_sum(m, uniform(0, s.loops));
  return m;
}

void cmd_matroid_f(const Io& io) {
  const Matroid m = matroid_input(io);
  const QSymElement f_n = qsym_of_matroid(m);
  const QSymElement f = convert(f_n, io.basis().value_or(Basis::N));
  const int n = m.ground_size();
  const int r = m.rank();
  std::vector<int> top{r};
  if (n > r) top.push_back(n - r);
  const Rational top_coefficient = n == 0 ? Rational(0) : f_n.coefficient(Composition(top));
  const int c = n == 0 ? 0 : loops_coloops_from_qsym(f_n);

  Json j = Json::object();
  j["n"] = n;
  j["rank"] = r;
  j["F"] = to_json(f);
  j["in_V"] = in_Vnr(f_n, n, r);
  j["bases"] = m.bases().size();
  j["top_coefficient"] = rational_json(top_coefficient);
  j["loops_and_coloops"] = c;
  io.emit(j, {"F = " + f.to_string(),
              "n = " + std::to_string(n) + ", r = " + std::to_string(r) +
                  ", in V^n_r: " + (in_Vnr(f_n, n, r) ? "yes" : "no"),
              "bases = " + std::to_string(m.bases().size()) + ", coefficient of N[" +
                  Composition(top).to_string() + "] = " + rational_text(top_coefficient),
              "loops + coloops = " + std::to_string(c)});
}

void cmd_recover(const Io& io) {
  QSymElement q(Basis::N);
  if (!io.settings.partition.empty()) {
    q = qsym_of_matroid(matroid_input(io));
  } else {
    q = element_from_json(io.read_input());
  }
  const Rank2Description d = recover_rank2(q);
  Json j = Json::object();
  j["lambda"] = to_json(d.lambda);
  j["loops"] = d.loops;
  j["coloops"] = d.coloops;
  j["loops_and_coloops"] = d.loops_and_coloops;
  io.emit(j, {d.summary()});
}

void cmd_rank2_split(const Io& io) {
  const Composition lambda = parse_composition(io.settings.partition, "--partition");
  const SplitResult r = split(lambda, io.settings.s);
  const SplitCheck check = check_split(lambda, io.settings.s);
  Json j = Json::object();
  j["alpha"] = to_json(r.alpha);
  j["beta"] = to_json(r.beta);
  j["mu"] = to_json(r.mu);
  j["certificate"] = to_json(r.certificate);
  Json c = Json::object();
  c["f_identity"] = check.f_identity;
  c["modm2_additive"] = check.modm2_additive;
  c["union_of_bases"] = check.union_of_bases;
  c["intersection_of_bases"] = check.intersection_of_bases;
  j["check"] = std::move(c);
  io.emit(j, {"F(M_" + lambda.to_string() + ") = F(M_" + r.alpha.to_string() + ") + F(M_" +
                  r.beta.to_string() + ") - F(M_" + r.mu.to_string() + ")",
              std::string("checks: ") + (check.ok() ? "all hold" : "FAILED")});
}

void cmd_geom_decompose(const Io& io) {
  Composition lambda;
  std::vector<Composition> J;
  if (!io.settings.partition.empty()) {
    lambda = Composition::parse(io.settings.partition);
    J = full_split_to_length3(lambda);
  } else {
    const Json j = io.read_input();
    require(j.is_object() && j.contains("lambda") && j.contains("J"),
            "expected {\"lambda\":[..],\"J\":[[..],..]}");
    lambda = composition_from_json(j.at("lambda"));
    for (const auto& mu : j.at("J")) J.push_back(composition_from_json(mu));
  }
  const GeomDecomposition g = geom_decompose(lambda, J);
  std::vector<Matroid> parts;
  for (const auto& r : g.representatives) parts.push_back(r.matroid());
  const VerificationResult v = verify_polytope_decomposition(g.root.matroid(), parts, g.splits);
  Json j = to_json(g);
  j["verified"] = v.ok;
  if (!v.ok) j["reason"] = v.reason;
  std::vector<std::string> lines;
  for (const auto& r : g.representatives) {
    std::string line = "M_" + r.lambda.to_string() + ":";
    for (const auto& b : r.blocks) {
      line += " {";
      for (std::size_t i = 0; i < b.size(); ++i) line += (i ? "," : "") + std::to_string(b[i]);
      line += "}";
    }
    lines.push_back(line);
  }
  lines.push_back(std::to_string(g.splits.size()) + " splits, verified: " + (v.ok ? "yes" : "no"));
  io.emit(j, lines);
}

int cmd_verify(const Io& io) {
  require(io.settings.max_n >= 1, "--max-n must be positive");
  VerifyOptions options;
  options.max_n = io.settings.max_n;
  options.seed = io.settings.seed;
  Json checks = Json::array();
  std::vector<std::string> lines;
  bool all = true;
  for (int id = 1; id <= kCheckCount; ++id) {
    const CheckResult r = run_check(id, options);
    all = all && r.passed;
    Json c = Json::object();
    c["id"] = r.id;
    c["title"] = r.title;
    c["anchor"] = r.anchor;
    c["passed"] = r.passed;
    c["bound"] = r.bound;
    c["seconds"] = r.seconds;
    c["limit_seconds"] = r.limit_seconds;
    c["detail"] = r.detail;
    checks.push_back(std::move(c));
    lines.push_back(format_line(r));
  }
  Json j = Json::object();
  j["max_n"] = options.max_n;
  j["seed"] = options.seed;
  j["passed"] = all;
  j["checks"] = std::move(checks);
  io.emit(j, lines);
  return all ? kExitOk : kExitVerifyFailed;
}

void write_error(std::ostream& out, std::string_view kind, const std::string& message) {
  Json e = Json::object();
  e["kind"] = std::string(kind);
  e["message"] = message;
  Json j = Json::object();
  j["error"] = std::move(e);
  out << j.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Settings s;
  CLI::App app{"Quasisymmetric invariants of matroids in the N basis", "nqsym"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--basis", s.basis, "Output basis")->check(CLI::IsMember({"M", "L", "N"}));
  app.add_flag("--pretty", s.pretty, "Human-readable term lists");
  app.add_option("--input", s.input, "Read JSON from this file instead of stdin");

  auto* expand = app.add_subcommand("expand", "N_a in the L and M bases");
  expand->add_option("--comp", s.comp, "Composition, e.g. 1,2,2")->required();
  auto* convert_cmd = app.add_subcommand("convert", "Change basis of a JSON element");
  auto* mul_cmd = app.add_subcommand("mul", "Product of two JSON elements");
  mul_cmd->add_option("--left", s.left, "Left factor as JSON");
  mul_cmd->add_option("--right", s.right, "Right factor as JSON");
  auto* matroid_f = app.add_subcommand("matroid-f", "F(M) with derived statistics");
  matroid_f->add_option("--uniform", s.uniform, "U_{r,n} given as r,n");
  matroid_f->add_option("--partition", s.partition, "Rank two matroid M_lambda");
  matroid_f->add_option("--loops", s.loops, "Extra loops");
  auto* recover = app.add_subcommand("recover", "Rank two class from F(M)");
  recover->add_option("--partition", s.partition, "Start from M_lambda");
  recover->add_option("--loops", s.loops, "Extra loops");
  auto* split_cmd = app.add_subcommand("rank2-split", "Hyperplane split of M_lambda");
  split_cmd->add_option("--partition", s.partition, "lambda")->required();
  split_cmd->add_option("--s", s.s, "Split position")->required();
  auto* geom = app.add_subcommand("geom-decompose", "Polytope decomposition of M_lambda");
  geom->add_option("--partition", s.partition, "Split lambda down to three parts");
  auto* verify = app.add_subcommand("verify", "Run every check and report");
  verify->add_option("--max-n", s.max_n, "Degree bound");
  verify->add_option("--seed", s.seed, "Seed for sampled checks");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(out, to_string(ErrorKind::InvalidArgument), e.what());
    err << app.help();
    return kExitError;
  }

  Io io{in, out, s};
  try {
    if (*expand) cmd_expand(io);
    else if (*convert_cmd) cmd_convert(io);
    else if (*mul_cmd) cmd_mul(io);
    else if (*matroid_f) cmd_matroid_f(io);
    else if (*recover) cmd_recover(io);
    else if (*split_cmd) cmd_rank2_split(io);
    else if (*geom) cmd_geom_decompose(io);
    else if (*verify) return cmd_verify(io);
  } catch (const Error& e) {
    write_error(out, to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::ResourceLimit ? kExitResourceLimit : kExitError;
  } catch (const Json::exception& e) {
    write_error(out, to_string(ErrorKind::InvalidArgument), e.what());
    return kExitError;
  }
  return kExitOk;
}

}  // namespace nqsym
