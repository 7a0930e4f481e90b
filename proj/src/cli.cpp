#include "vlp/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "vlp/duality.hpp"
#include "vlp/efficiency.hpp"
#include "vlp/error.hpp"
#include "vlp/harness.hpp"
#include "vlp/json_io.hpp"

namespace vlp {
namespace {

struct Args {
  std::string format = "human";
  std::string file;
  std::string point;
  std::string value;
  std::string dual_file;
  std::string kind;
  std::string set;
  bool witness = false;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

// Signals exit code 1 with a message.
struct VerificationFailed {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VlpProblem load_file(const std::string& path) {
  try {
    return load_problem(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(path + ": " + e.what());
  }
}

QVector parse_vector(const std::string& text, const char* flag,
                     std::size_t dim) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw ParseError(flag, "expected a JSON array of rationals");
  }
  QVector v = vector_from_json(j, flag);
  if (v.dim() != dim) {
    throw DimensionError(std::string(flag) + ": expected " +
                         std::to_string(dim) + " entries, got " +
                         std::to_string(v.dim()));
  }
  return v;
}

class Output {
 public:
  explicit Output(bool json) : json_(json) {}
  bool json() const { return json_; }
  void line(const std::string& s) { text_ += s + "\n"; }
  void emit(const Json& j) { text_ += j.dump() + "\n"; }
  std::string text() const { return text_; }

 private:
  bool json_;
  std::string text_;
};

Json certificate_json(const EfficiencyCertificate& c) {
  Json j;
  j["efficient"] = c.efficient();
  switch (c.kind) {
    case EfficiencyKind::EfficientWithScalarization:
      j["kind"] = "efficient";
      break;
    case EfficiencyKind::Dominated:
      j["kind"] = "dominated";
      break;
    case EfficiencyKind::UnboundedDomination:
      j["kind"] = "unbounded_domination";
      break;
  }
  j["lambda"] = c.lambda ? to_json(*c.lambda) : Json();
  j["eta"] = c.eta ? to_json(*c.eta) : Json();
  j["dominator"] = c.dominator ? to_json(*c.dominator) : Json();
  return j;
}

std::string certificate_line(const EfficiencyCertificate& c) {
  if (c.efficient()) {
    return "efficient lambda=" + c.lambda->str() + " eta=" + c.eta->str();
  }
  return std::string(c.kind == EfficiencyKind::Dominated
                         ? "dominated by "
                         : "dominated (unbounded) by ") +
         c.dominator->str();
}

void cmd_validate(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  if (out.json()) {
    out.emit(Json{{"valid", true}, {"n", p.n()}, {"m", p.m()}, {"k", p.k()},
                  {"cone_witness", to_json(*p.K().witness())}});
  } else {
    out.line("valid: n=" + std::to_string(p.n()) + " m=" +
             std::to_string(p.m()) + " k=" + std::to_string(p.k()) +
             ", cone witness " + p.K().witness()->str());
  }
}

void cmd_vertices(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  const auto vs = enumerate_vertices(p);
  if (out.json()) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    out.emit(Json{{"vertices", arr}});
    return;
  }
  out.line(std::to_string(vs.size()) + " vertices");
  for (const auto& v : vs) out.line(v.str());
}

void cmd_efficient(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  const auto ev = efficient_vertices(p);
  if (out.json()) {
    Json arr = Json::array();
    for (const auto& e : ev) {
      arr.push_back(Json{{"vertex", to_json(e.vertex)},
                         {"image", to_json(p.L() * e.vertex)},
                         {"certificate", certificate_json(e.certificate)}});
    }
    out.emit(Json{{"efficient_vertices", arr}});
    return;
  }
  out.line(std::to_string(ev.size()) + " efficient vertices");
  for (const auto& e : ev) {
    out.line(e.vertex.str() + " image " + (p.L() * e.vertex).str() + " " +
             certificate_line(e.certificate));
  }
}

void cmd_certify(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  const QVector x = parse_vector(a.point, "--point", p.n());
  const EfficiencyCertificate e = is_efficient(p, x);
  const auto direct = proper_efficiency_certificate(p, x);
  if (e.efficient() != direct.has_value()) {
    throw VerificationFailed{"efficiency verdicts disagree at " + x.str()};
  }
  if (out.json()) {
    out.emit(Json{{"point", to_json(x)},
                  {"efficiency", certificate_json(e)},
                  {"certificate", direct ? certificate_json(*direct) : Json()}});
    return;
  }
  out.line(certificate_line(e));
  if (direct) out.line("certificate " + certificate_line(*direct));
}

void cmd_dual_construct(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  const QVector x = parse_vector(a.point, "--point", p.n());
  const auto cert = proper_efficiency_certificate(p, x);
  if (!cert) {
    if (!primal_feasible(p, x)) throw PreconditionError("point is infeasible");
    throw VerificationFailed{"point " + x.str() + " is not efficient"};
  }
  const DualCandidateD c = construct_dual_solution(p, x, *cert);
  if (out.json()) {
    out.emit(Json{{"candidate", to_json(c)},
                  {"objective", to_json(objective_D(c, p))}});
    return;
  }
  out.line("objective " + objective_D(c, p).str());
  out.line(to_json(c).dump());
}

bool check_candidate(const VlpProblem& p, const AnyDualCandidate& c) {
  return std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, DualCandidateD>) {
          return check_feasible_D(p, d);
        } else if constexpr (std::is_same_v<T, DualCandidateJ>) {
          return check_feasible_J(p, d);
        } else if constexpr (std::is_same_v<T, DualCandidateL>) {
          return check_feasible_L(p, d);
        } else {
          return check_feasible_U(p, d);
        }
      },
      c);
}

void cmd_check_dual(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  Json j;
  try {
    j = Json::parse(read_file(a.dual_file));
  } catch (const Json::parse_error& e) {
    throw ParseError(a.dual_file, e.what());
  }
  // Output of `member --witness --format json` is accepted as is.
  if (j.is_object() && j.contains("candidate")) j = j.at("candidate");
  const AnyDualCandidate c = dual_from_json(j, p, a.kind);
  const bool ok = check_candidate(p, c);
  if (out.json()) {
    out.emit(Json{{"kind", a.kind}, {"feasible", ok}});
  } else {
    out.line(ok ? "feasible" : "infeasible");
  }
  if (!ok) throw VerificationFailed{};
}

void cmd_recover(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  const QVector d = parse_vector(a.value, "--value", p.k());
  const auto x = recover_primal(p, d);
  const bool efficient = x && is_efficient(p, *x).efficient();
  if (out.json()) {
    out.emit(Json{{"value", to_json(d)},
                  {"point", x ? to_json(*x) : Json()},
                  {"efficient", efficient}});
    return;
  }
  if (!x) {
    out.line("no feasible preimage");
  } else {
    out.line(x->str() + (efficient ? " (efficient)" : " (not efficient)"));
  }
}

void cmd_member(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  const QVector d = parse_vector(a.value, "--value", p.k());
  MembershipVerdict v;
  if (a.set == "hB") {
    v = membership_hB(p, d);
  } else if (a.set == "hL") {
    v = membership_hL(p, d);
  } else {
    v = membership_hJ(p, d);
  }
  Json candidate;
  if (v.candidate_D) candidate = to_json(*v.candidate_D);
  if (v.candidate_L) candidate = to_json(*v.candidate_L);
  if (v.candidate_J) candidate = to_json(*v.candidate_J);
  if (out.json()) {
    Json j{{"set", a.set}, {"value", to_json(d)}, {"member", v.member}};
    if (a.witness) {
      j["witness"] = v.witness ? Json{{"lambda", to_json(v.witness->lambda)},
                                      {"z", to_json(v.witness->z)}}
                               : Json();
      j["candidate"] = candidate;
    }
    out.emit(j);
    return;
  }
  out.line(v.member ? "member" : "not a member");
  if (a.witness && v.member) out.line(candidate.dump());
}

ReportFormat report_format(const Output& out) {
  return out.json() ? ReportFormat::Json : ReportFormat::Human;
}

void finish_report(const VerificationReport& r, Output& out) {
  std::string text = emit_report(r, report_format(out));
  if (out.json()) {
    out.line(text);
  } else {
    out.line(text + "summary: " + std::to_string(r.count(CheckStatus::Pass)) +
             " pass, " + std::to_string(r.count(CheckStatus::Fail)) +
             " fail, " + std::to_string(r.count(CheckStatus::Skipped)) +
             " skipped");
  }
  if (!r.passed()) throw VerificationFailed{};
}

void cmd_verify(const Args& a, Output& out) {
  const VlpProblem p = load_file(a.file);
  const std::string id = std::filesystem::path(a.file).stem().string();
  finish_report(run_instance_suite(p, id, 0), out);
}

void cmd_campaign(const Args& a, Output& out) {
  finish_report(run_random_campaign(a.seed, a.count), out);
}

void cmd_examples(const Args&, Output& out) {
  VerificationReport r;
  for (const auto& name : fixture_names()) r.append(run_fixture(name));
  r.normalize();
  finish_report(r, out);
}

}  // namespace

CliResult cmd_dispatch(const std::vector<std::string>& argv) {
  Args a;
  CLI::App app{"Exact verification of duality for vector linear programs",
               argv.empty() ? "vlpdual" : argv.front()};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));

  auto file_arg = [&](CLI::App* s) {
    s->add_option("file", a.file, "Problem file")->required();
  };
  std::vector<std::pair<CLI::App*, void (*)(const Args&, Output&)>> commands;
  auto add = [&](const char* name, const char* help,
                 void (*fn)(const Args&, Output&)) {
    CLI::App* s = app.add_subcommand(name, help);
    commands.emplace_back(s, fn);
    return s;
  };

  file_arg(add("validate", "Parse and validate a problem file", cmd_validate));
  file_arg(add("vertices", "Enumerate vertices of the feasible set", cmd_vertices));
  file_arg(add("efficient", "Efficient vertices with certificates", cmd_efficient));
  {
    CLI::App* s = add("certify", "Decide efficiency of a point", cmd_certify);
    file_arg(s);
    s->add_option("--point", a.point, "Point as a JSON array")->required();
  }
  {
    CLI::App* s = add("dual-construct",
                      "Dual point with objective L x for an efficient x",
                      cmd_dual_construct);
    file_arg(s);
    s->add_option("--point", a.point, "Point as a JSON array")->required();
  }
  {
    CLI::App* s = add("check-dual", "Check feasibility of a dual candidate",
                      cmd_check_dual);
    file_arg(s);
    s->add_option("--dual", a.dual_file, "Dual candidate file")->required();
    s->add_option("--kind", a.kind, "Dual kind")
        ->required()
        ->check(CLI::IsMember({"D", "I", "J", "L", "H"}));
  }
  {
    CLI::App* s = add("recover", "Efficient primal point with L x = value",
                      cmd_recover);
    file_arg(s);
    s->add_option("--value", a.value, "Value as a JSON array")->required();
  }
  {
    CLI::App* s = add("member", "Membership in a dual image set", cmd_member);
    file_arg(s);
    s->add_option("--set", a.set, "Image set")
        ->required()
        ->check(CLI::IsMember({"hB", "hL", "hJ"}));
    s->add_option("--value", a.value, "Value as a JSON array")->required();
    s->add_flag("--witness", a.witness, "Print a dual point attaining the value");
  }
  file_arg(add("verify", "Run every property check on one problem", cmd_verify));
  {
    CLI::App* s = add("campaign", "Property checks on random instances",
                      cmd_campaign);
    s->add_option("--seed", a.seed, "Generator seed")->required();
    s->add_option("--count", a.count, "Number of instances")->required();
  }
  add("examples", "Run the built-in fixtures", cmd_examples);

  std::vector<std::string> rev(argv.size() > 1 ? argv.begin() + 1 : argv.end(),
                               argv.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os, es;
    const int code = app.exit(e, os, es);
    return {code == 0 ? 0 : 2, os.str() + es.str()};
  }

  Output out(a.format == "json");
  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) fn(a, out);
    }
  } catch (const VerificationFailed& f) {
    std::string text = out.text();
    if (!f.message.empty()) text += "verification failed: " + f.message + "\n";
    return {1, text};
  } catch (const InternalError& e) {
    return {1, out.text() + "internal error: " + e.what() + "\n"};
  } catch (const DimensionError& e) {
    return {2, std::string("dimension error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  return {0, out.text()};
}

}  // namespace vlp
