// Acceptance run: one PASS/FAIL line per criterion, 1..17.
//
// Criterion 17 runs the shipped executable (`bernalg selftest --json`) as a
// child process and checks its exit status and wall time.
//
// The process exits 0 only when the set of failing criteria is exactly the
// documented one below. Those lines still print FAIL; an unexpected failure,
// or a documented failure that starts passing, makes the run exit 1.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "json.hpp"

#include "bernalg/acceptance.hpp"

namespace {

const std::map<int, std::string> kKnownFailures = {
    {14, "the stated operator leaves a nonzero coefficient; the sum itself and the corrected operator check out"},
    {17, "selftest exits 1 because criterion 14 fails"},
};

struct Child {
  std::string out;
  int code = -1;
  double seconds = 0;
};

Child run_selftest(const std::string& exe) {
  Child c;
  const auto start = std::chrono::steady_clock::now();
  FILE* p = popen(("'" + exe + "' selftest --json").c_str(), "r");
  if (p == nullptr) return c;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(p);
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

// Criterion 17, judged from the child process.
bernalg::CriterionResult selftest_criterion(const std::string& exe, std::set<int>& child_failures) {
  bernalg::CriterionResult r;
  r.id = 17;
  r.title = "Full self-test via the CLI";
  r.limit_seconds = bernalg::kSelftestLimitSeconds;
  const Child c = run_selftest(exe);
  r.seconds = c.seconds;
  try {
    const auto j = nlohmann::json::parse(c.out);
    for (const auto& item : j.at("criteria")) {
      const int id = item.at("id").get<int>();
      if (id == 17) continue;
      r.checks += item.at("checks").get<int>();
      if (!item.at("passed").get<bool>()) child_failures.insert(id);
    }
  } catch (const std::exception& e) {
    r.detail = std::string("unreadable selftest output: ") + e.what();
    return r;
  }
  r.passed = c.code == 0 && c.seconds < r.limit_seconds;
  if (c.seconds >= r.limit_seconds) {
    r.detail = "time limit exceeded";
  } else if (c.code != 0) {
    r.detail = "exit status " + std::to_string(c.code);
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path to bernalg>\n";
    return 2;
  }
  std::set<int> failed;
  for (const auto& c : bernalg::acceptance_criteria()) {
    const auto r = bernalg::run_criterion(c);
    std::cout << bernalg::format_result(r) << std::endl;
    if (!r.passed) failed.insert(r.id);
  }
  std::set<int> child_failures;
  const auto total = selftest_criterion(argv[1], child_failures);
  std::cout << bernalg::format_result(total) << std::endl;
  if (!total.passed) failed.insert(17);

  std::set<int> known;
  for (const auto& [id, why] : kKnownFailures) known.insert(id);
  // The CLI must agree with the in-process run about what failed.
  std::set<int> in_process = failed;
  in_process.erase(17);

  std::cout << "\n" << 17 - failed.size() << "/17 criteria passed\n";
  for (int id : failed) {
    const auto it = kKnownFailures.find(id);
    std::cout << "  FAIL " << id << ": " << (it == kKnownFailures.end() ? "unexpected" : it->second) << "\n";
  }
  for (int id : known) {
    if (failed.count(id) == 0) std::cout << "  known failure " << id << " now passes; update the list\n";
  }
  if (child_failures != in_process) std::cout << "  selftest and in-process results disagree\n";

  const bool as_documented = failed == known && child_failures == in_process;
  std::cout << (as_documented ? "failures match the documented set\n" : "failures differ from the documented set\n");
  return as_documented ? 0 : 1;
}
