// One PASS/FAIL line per acceptance criterion; details follow any failure.

#include "clusterseed/suites.hpp"

#include <future>
#include <iostream>

using namespace clusterseed;

int main()
{
  struct Criterion {
    const char* title;
    std::vector<std::string> suites;
  };
  const std::vector<Criterion> criteria = {
      {"reduced-word seeds match the SL4, G2 and Spin8 pictures", {"bruhat"}},
      {"triangle completion matches the SL4 and G2 pictures with zero kernels", {"triangle"}},
      {"SL4 edge S-sums", {"ssums"}},
      {"G2 transposition sequences and their stage tables", {"g2-s3"}},
      {"G2 flip stages and flipped target", {"g2-flip"}},
      {"G2 composite (12) against the reversed-word seed", {"g2-12"}},
      {"Langlands pairing", {"langlands"}},
      {"type A exchange, torus and cyclic-shift identities", {"oracle"}},
      {"shear action on SL3 quadrilateral", {"shear"}},
      {"property suite", {"properties"}},
  };
  SuiteOptions opts;
  std::vector<std::vector<std::future<SuiteReport>>> jobs;
  for (const auto& c : criteria) {
    jobs.emplace_back();
    for (const auto& s : c.suites)
      jobs.back().push_back(std::async(std::launch::async, [s, opts] { return run_suite(s, opts); }));
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::vector<SuiteReport> reports;
    bool ok = true;
    for (auto& j : jobs[i]) {
      reports.push_back(j.get());
      ok = ok && reports.back().passed();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].title << "\n";
    if (!ok) {
      ++failed;
      for (const auto& r : reports)
        std::cout << r.to_text();
    }
  }
  return failed ? 1 : 0;
}
