#include "homcheck/homstruct/report.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <exception>
#include <sstream>
#include <thread>

namespace homcheck {

namespace {
std::atomic<unsigned> g_workers{1};
}

void set_worker_count(unsigned n) { g_workers = n == 0 ? 1 : n; }
unsigned worker_count() { return g_workers; }

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& a : axioms) n += a.failures;
  return n;
}

std::size_t Report::skipped() const {
  std::size_t n = 0;
  for (const auto& a : axioms) n += a.skipped;
  return n;
}

const AxiomResult* Report::find(const std::string& id) const {
  for (const auto& a : axioms)
    if (a.id == id) return &a;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << subject << '\n';
  for (const auto& a : axioms) {
    os << "  " << (a.passed() ? "pass" : "FAIL") << "  " << a.id << "  (" << a.instances
       << " instances";
    if (a.failures) os << ", " << a.failures << " failed";
    if (a.skipped) os << ", " << a.skipped << " skipped";
    os << ")\n";
    if (a.witness) os << "      witness: " << *a.witness << "\n      residual: " << a.residual << '\n';
  }
  for (const auto& n : notes) os << "  note: " << n << '\n';
  return os.str();
}

AxiomResult run_instances(std::string id, std::size_t count,
                          const std::function<Outcome(std::size_t)>& eval,
                          const std::function<std::string(std::size_t)>& describe) {
  std::vector<Outcome> outcomes(count);
  unsigned workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) outcomes[i] = eval(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < count;) {
          try {
            outcomes[i] = eval(i);
          } catch (...) {
            std::lock_guard lock(error_mu);
            if (!error) error = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  AxiomResult r;
  r.id = std::move(id);
  r.instances = count;
  r.verdicts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    r.verdicts.push_back(outcomes[i].verdict);
    if (outcomes[i].verdict == Outcome::Skip) {
      ++r.skipped;
    } else if (outcomes[i].verdict == Outcome::Fail) {
      if (!r.failures++) {
        r.witness = describe(i);
        r.residual = outcomes[i].residual;
      }
    }
  }
  return r;
}

}  // namespace homcheck
