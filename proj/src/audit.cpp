#include "ringlab/audit.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ringlab/export.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/ring_spec.hpp"

namespace ringlab {

using nlohmann::ordered_json;

namespace {

ordered_json audit_one(const std::filesystem::path& file,
                       const AnalysisCaps& caps) {
  ordered_json rec;
  rec["file"] = file.filename().string();
  try {
    RingSpec spec = load_ring_spec(file);
    BuildCaps bcaps;
    bcaps.full_analysis = caps.full_analysis;
    bcaps.arithmetic_only = caps.arithmetic_only;
    FiniteRing R = build(spec, bcaps);
    rec["ring"] = R.label;
    rec["size"] = R.n;

    PropertyReport props = verify_properties(R, caps);
    std::vector<std::string> failed;
    for (const auto& c : props.checks)
      if (!c.pass) failed.push_back(c.name + ": " + c.detail);
    rec["checks_run"] = int(props.checks.size());
    rec["failed_checks"] = failed;
    rec["status"] = props.ok ? "pass" : "fail";
  } catch (const SizeCapExceeded& e) {
    rec["status"] = "error";
    rec["error_class"] = "cap";
    rec["message"] = e.what();
  } catch (const IdealEnumerationCapExceeded& e) {
    rec["status"] = "error";
    rec["error_class"] = "cap";
    rec["message"] = e.what();
  } catch (const InvariantViolation& e) {
    rec["status"] = "fail";
    rec["failed_checks"] = std::vector<std::string>{e.what()};
  } catch (const std::exception& e) {
    rec["status"] = "error";
    rec["error_class"] = "input";
    rec["message"] = e.what();
  }
  return rec;
}

}  // namespace

ordered_json run_corpus_audit(const std::vector<std::filesystem::path>& spec_files,
                              const AuditOptions& opts) {
  std::vector<ordered_json> records(spec_files.size());
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || spec_files.size() <= 1) {
    for (size_t i = 0; i < spec_files.size(); ++i)
      records[i] = audit_one(spec_files[i], opts.caps);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= spec_files.size()) return;
        records[i] = audit_one(spec_files[i], opts.caps);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, int(spec_files.size())); ++t)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ordered_json out;
  ordered_json rings = ordered_json::array();
  int pass = 0, fail = 0, err_input = 0, err_cap = 0;
  for (auto& rec : records) {
    const std::string status = rec["status"];
    if (status == "pass") {
      ++pass;
    } else if (status == "fail") {
      ++fail;
    } else if (rec["error_class"] == "cap") {
      ++err_cap;
    } else {
      ++err_input;
    }
    rings.push_back(std::move(rec));
  }
  out["rings"] = std::move(rings);
  out["summary"] = {{"total", int(spec_files.size())},
                    {"pass", pass},
                    {"fail", fail},
                    {"error_input", err_input},
                    {"error_cap", err_cap}};
  out["ok"] = fail == 0 && err_input == 0 && err_cap == 0;
  return out;
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const std::filesystem::path& a, const std::filesystem::path& b) {
              return a.filename().string() < b.filename().string();
            });
  return files;
}

int audit_exit_code(const ordered_json& aggregate) {
  const auto& s = aggregate.at("summary");
  if (s.at("fail").get<int>() > 0) return 2;
  if (s.at("error_input").get<int>() > 0) return 1;
  if (s.at("error_cap").get<int>() > 0) return 3;
  return 0;
}

}  // namespace ringlab
