// Acceptance run: one PASS/FAIL line per criterion, with the underlying checks
// listed beneath it. Exit status 0 iff every criterion passes.
#include "innerpar/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace innerpar;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;  // names of the checks it is made of
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const verify::Config config;  // seed 1, 65 grid points, 200 planar and 50 spatial random pairs
  const verify::Corpus corpus = verify::build_corpus(config);
  const verify::Report report = verify::run(verify::Suite::All, corpus, config);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::vector<Criterion> criteria{
      {1, "perimeter lower bound", {"inequality:"}},
      {2, "equality case", {"equality: inradius", "equality: p(lambda)", "equality: every erosion", "equality: certificate"}},
      {3, "concavity of f0, f1", {"concavity:"}},
      {4, "derivative identity", {"derivative:"}},
      {5, "quotient dichotomy", {"quotient: psi non-increasing", "quotient: psi constancy", "quotient: tail"}},
      {6, "xi non-negative and non-increasing", {"quotient: xi", "equality: xi"}},
      {7, "mixed-volume consistency", {"mixed:"}},
      {8, "level-set identity", {"levelset:"}},
      {9, "inradius", {"inradius:"}},
      {10, "Euclidean specialization", {"euclidean: Per_K([0,1]^2)"}},
  };

  bool all = true;
  char buf[256];
  std::cout << "# " << report.header << '\n';
  for (const Criterion& c : criteria) {
    std::vector<const verify::Check*> parts;
    for (const verify::Check& check : report.checks)
      for (const std::string& p : c.prefixes)
        if (starts_with(check.name, p)) {
          parts.push_back(&check);
          break;
        }
    bool ok = !parts.empty();
    for (const auto* p : parts) ok = ok && p->passed();
    all = all && ok;
    std::snprintf(buf, sizeof buf, "criterion %2d %-36s %s", c.number, c.title.c_str(), ok ? "PASS" : "FAIL");
    std::cout << buf << '\n';
    for (const auto* p : parts) {
      std::snprintf(buf, sizeof buf, "    %s worst=%.3e limit=%.1e", p->name.c_str(), p->worst, p->limit);
      std::cout << buf;
      if (!p->passed()) std::cout << " at " << p->where;
      std::cout << '\n';
    }
  }
  std::snprintf(buf, sizeof buf, "# corpus of %zu pairs verified in %.1f s", corpus.entries.size(), seconds);
  std::cout << buf << '\n' << (all ? "PASS" : "FAIL") << '\n';
  return all ? 0 : 1;
}
