// End-to-end checks of the bernalg executable: outputs, exit codes, determinism.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_exe;
int g_failures = 0;
int g_checks = 0;

struct Run {
  std::string out;
  int code = -1;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& args) {
  Run r;
  const std::string cmd = quote(g_exe) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void check(bool ok, const std::string& what, const Run& r) {
  ++g_checks;
  if (ok) return;
  ++g_failures;
  std::cerr << "FAILED: " << what << "\n  exit " << r.code << ", output:\n" << r.out << "\n";
}

void expect(const std::string& args, int code, const std::string& output) {
  const Run r = run(args);
  check(r.code == code && r.out == output, args, r);
}

void expect_contains(const std::string& args, int code, const std::string& needle) {
  const Run r = run(args);
  check(r.code == code && r.out.find(needle) != std::string::npos, args, r);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cli_test <path to bernalg>\n";
    return 2;
  }
  g_exe = argv[1];

  expect("bern num 0..4", 0, "1\n-1/2\n1/6\n0\n-1/30\n");
  expect("bern num 12", 0, "-691/2730\n");
  expect("bern poly 2 --at 1/2", 0, "-1/12\n");
  expect("--format json bern num 2,4", 0, "[\"1/6\",\"-1/30\"]\n");
  expect("stirling 4 2", 0, "7\n");
  expect("stirling 4", 0, "0\n1\n7\n6\n1\n");
  expect("pf g 2 3", 0, "g_{2,3} = -1/2\ng_{3,2} = -1/3 + 1/3*X\n");
  expect("pf hf 2 1 5", 0, "h^{(2)}_{1,5} = 3/5 - 2/5*X\nf^{(2)}_{1,5} = 2/5 + 3/5*X + 3/5*X^2 + 2/5*X^3\n");
  expect("--format latex pf g 2 3", 0, "g_{2,3}=-\\frac{1}{2}\ng_{3,2}=-\\frac{1}{3}+\\frac{1}{3}X\n");

  expect("reduce product 'B(2T)*B(3T)'", 0, "B^2 - 3/2*T*B(2T) - 2/3*T*B(3T) + 2/3*T*B(3T)*e^T\n");
  expect("reduce product 'B(2T)*B(3T)' --to-first-order", 0,
         "(1 - T)*B + (-T)*d[B] + (-3/2*T)*B(2T) + (-2/3*T)*B(3T) + (2/3*T)*B(3T)*e^T\n");
  expect_contains("reduce product 'B(2T)*B(3T)' --emit latex", 0, "\\mathbf{B}^{2}-\\frac{3}{2}T\\mathbf{B}(2T)");
  expect("--format json reduce product 'B^2'", 0,
         "{\"text\":\"B^2\",\"terms\":[{\"coefficient\":\"1\",\"m\":0,\"n\":2,\"b\":\"1\",\"a\":\"0\"}]}\n");

  expect_contains("verify euler --m 2", 0, "\"verified\":true");
  expect_contains("verify euler --m 4 --format text", 0, "verified euler m=4  lhs=3/10 rhs=3/10");
  expect_contains("verify kaneko-shifted --k 1..6 --jobs 3", 0, "\"name\":\"kaneko-shifted\"");
  expect_contains("verify kaneko --k 1", 1, "\"lhs\":\"-5/3\"");
  expect_contains("verify b235 --n 2..12 --jobs 4 --format text", 0, "verified b235 n=12");

  // Parallel grids give the same bytes as serial ones.
  const Run serial = run("verify rademacher --n 4..16");
  const Run parallel = run("--jobs 4 verify rademacher --n 4..16");
  check(serial.code == 0 && serial.out == parallel.out, "parallel output matches serial", parallel);
  check(run("verify rademacher --n 4..16").out == serial.out, "repeat output matches", serial);

  expect_contains("verify nope", 2, "unknown identity 'nope'");
  expect_contains("verify euler --m 1", 2, "euler needs m >= 2");
  expect_contains("bern num abc", 2, "malformed rational 'abc'");
  expect_contains("reduce product 'B+'", 2, "  B+\n    ^");
  expect_contains("pf g 3 3", 2, "distinct");
  expect_contains("bogus", 2, "");
  expect_contains("", 2, "");

  const std::string path = "cli_test_out.txt";
  std::remove(path.c_str());
  expect("--out " + path + " stirling 5 2", 0, "");
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  ++g_checks;
  if (file.str() != "15\n") {
    ++g_failures;
    std::cerr << "FAILED: --out file contents: " << file.str() << "\n";
  }
  std::remove(path.c_str());

  std::cout << g_checks - g_failures << "/" << g_checks << " CLI checks passed\n";
  return g_failures == 0 ? 0 : 1;
}
