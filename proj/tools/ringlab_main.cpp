#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ringlab/audit.hpp"
#include "ringlab/export.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring_spec.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ringlab;

constexpr int kExitPass = 0;
constexpr int kExitInput = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string input;
  std::string out;
  std::string dot;
  std::string format = "json";
  int cap_full = 512;
  int cap_ideals = 4096;
  int jobs = 1;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "write the report here instead of stdout");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--cap-full", o.cap_full, "full-analysis size cap")
      ->check(CLI::PositiveNumber);
  sub->add_option("--cap-ideals", o.cap_ideals, "ideal enumeration cap")
      ->check(CLI::PositiveNumber);
}

AnalysisCaps caps_of(const Options& o) {
  AnalysisCaps caps;
  caps.full_analysis = o.cap_full;
  caps.ideal_enumeration = o.cap_ideals;
  return caps;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

FiniteRing load_ring(const Options& o) {
  RingSpec spec = load_ring_spec(o.input);
  BuildCaps bcaps;
  bcaps.full_analysis = o.cap_full;
  return build(spec, bcaps);
}

std::string render_bool(bool v) { return v ? "true" : "false"; }

int run_classify(const Options& o) {
  FiniteRing R = load_ring(o);
  RingScans S(R);
  RcpPoset P = enumerate_rcp(S, o.cap_full);
  ClassificationReport rep = classify_ring(S, P, caps_of(o));

  if (o.format == "json") {
    emit(o, classification_to_json(rep).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "ring: " << rep.ring << "  size " << rep.size << "  classes "
       << rep.class_count << "  minimal " << rep.minimal_class_count << "\n";
    for (const auto& [name, r] : rep.predicates) {
      os << name << ": " << render_bool(r.value) << "  (";
      bool first = true;
      for (const auto& [rn, rv] : r.routes) {
        if (!first) os << ", ";
        os << rn << "=" << render_bool(rv);
        first = false;
      }
      os << ")";
      if (!r.agree) os << "  ROUTES DISAGREE";
      os << "\n";
    }
    os << "routes_agree: " << render_bool(rep.routes_agree) << "\n";
    os << "implications_ok: " << render_bool(rep.implications_ok) << "\n";
    for (const auto& f : rep.implication_failures)
      os << "implication failure: " << f << "\n";
    emit(o, os.str());
  }
  return rep.routes_agree && rep.implications_ok ? kExitPass : kExitInvariant;
}

int run_rcp(const Options& o) {
  FiniteRing R = load_ring(o);
  RingScans S(R);
  RcpPoset P = enumerate_rcp(S, o.cap_full);

  if (!o.dot.empty()) {
    std::ofstream f(o.dot, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.dot);
    f << poset_to_dot(S, P);
  }
  if (o.format == "json") {
    emit(o, poset_to_json(S, P).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "ring: " << R.label << "  classes " << P.m() << "  minimal "
       << P.minimal.size() << "\n";
    for (int i = 0; i < P.m(); ++i) {
      const PairClass& c = P.classes[i];
      os << (P.is_minimal(i) ? "* " : "  ") << "<" << c.gen_first << ","
         << c.gen_second << ">  |aR|=" << c.first_ideal.elems.count()
         << " |bR|=" << c.second_ideal.elems.count() << "\n";
    }
    emit(o, os.str());
  }
  return kExitPass;
}

int run_chains(const Options& o) {
  FiniteRing R = load_ring(o);
  RingScans S(R);
  RcpPoset P = enumerate_rcp(S, o.cap_full);

  // all strict chains up to length 3 plus the greedy maximal descents,
  // capped for output size; deterministic for a fixed spec
  std::vector<std::vector<int>> sample = strict_descending_chains(P, 3);
  for (auto& g : greedy_maximal_chains(P)) sample.push_back(std::move(g));
  constexpr size_t kMaxReported = 200;
  if (sample.size() > kMaxReported) sample.resize(kMaxReported);

  ordered_json out;
  out["ring"] = R.label;
  out["size"] = R.n;
  ordered_json arr = ordered_json::array();
  for (const auto& chain : sample) {
    WitnessedChain wc = witness_chain(S, P, chain);
    arr.push_back(chain_to_json(S, P, wc));
  }
  out["chain_count"] = int(sample.size());
  out["chains"] = std::move(arr);

  if (o.format == "json") {
    emit(o, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "ring: " << R.label << "  chains sampled " << sample.size() << "\n";
    for (const auto& cj : out["chains"]) {
      os << "  [";
      bool first = true;
      for (const auto& idx : cj["classes"]) {
        if (!first) os << " >= ";
        os << idx.get<int>();
        first = false;
      }
      os << "]  minimal lower bound ";
      if (cj["minimal_lower_bound"].is_null())
        os << "none";
      else
        os << cj["minimal_lower_bound"].get<int>();
      os << "\n";
    }
    emit(o, os.str());
  }
  return kExitPass;
}

int run_verify_props(const Options& o) {
  FiniteRing R = load_ring(o);
  PropertyReport rep = verify_properties(R, caps_of(o));
  if (o.format == "json") {
    emit(o, property_report_to_json(rep).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "ring: " << R.label << "\n";
    for (const auto& c : rep.checks) {
      os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) os << "  " << c.detail;
      os << "\n";
    }
    os << (rep.ok ? "ok" : "FAILED") << "\n";
    emit(o, os.str());
  }
  return rep.ok ? kExitPass : kExitInvariant;
}

int run_audit(const Options& o) {
  auto files = corpus_files(o.input);
  if (files.empty())
    std::cerr << "warning: no spec files in " << o.input << "\n";
  AuditOptions opts;
  opts.caps = caps_of(o);
  opts.jobs = o.jobs;
  ordered_json agg = run_corpus_audit(files, opts);
  if (o.format == "json") {
    emit(o, agg.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& rec : agg["rings"]) {
      os << rec["status"].get<std::string>() << "  "
         << rec["file"].get<std::string>();
      if (rec.contains("ring")) os << "  " << rec["ring"].get<std::string>();
      if (rec.contains("message"))
        os << "  (" << rec["message"].get<std::string>() << ")";
      os << "\n";
    }
    const auto& s = agg["summary"];
    os << "total " << s["total"].get<int>() << "  pass "
       << s["pass"].get<int>() << "  fail " << s["fail"].get<int>()
       << "  input-errors " << s["error_input"].get<int>() << "  cap-errors "
       << s["error_cap"].get<int>() << "\n";
    emit(o, os.str());
  }
  return audit_exit_code(agg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ring coprime-pair workbench"};
  app.require_subcommand(1);

  Options o_classify, o_rcp, o_chains, o_audit, o_props;

  CLI::App* c = app.add_subcommand("classify", "classify one ring");
  c->add_option("spec", o_classify.input, "ring spec JSON")->required();
  add_common(c, o_classify);

  CLI::App* r = app.add_subcommand("rcp", "materialize the coprime-pair poset");
  r->add_option("spec", o_rcp.input, "ring spec JSON")->required();
  r->add_option("--dot", o_rcp.dot, "write a Hasse diagram here");
  add_common(r, o_rcp);

  CLI::App* ch = app.add_subcommand("chains", "witnessed descending chains");
  ch->add_option("spec", o_chains.input, "ring spec JSON")->required();
  add_common(ch, o_chains);

  CLI::App* a = app.add_subcommand("audit", "audit a corpus directory");
  a->add_option("dir", o_audit.input, "directory of ring specs")->required();
  a->add_option("--jobs", o_audit.jobs, "parallel rings")
      ->check(CLI::PositiveNumber);
  add_common(a, o_audit);

  CLI::App* v = app.add_subcommand("verify-props", "run the invariant suite");
  v->add_option("spec", o_props.input, "ring spec JSON")->required();
  add_common(v, o_props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (c->parsed()) return run_classify(o_classify);
    if (r->parsed()) return run_rcp(o_rcp);
    if (ch->parsed()) return run_chains(o_chains);
    if (a->parsed()) return run_audit(o_audit);
    if (v->parsed()) return run_verify_props(o_props);
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const IdealEnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
