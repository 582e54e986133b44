#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>
#include <vector>

#include "mcop/certificate.hpp"
#include "mcop/poset.hpp"
#include "mcop/render.hpp"
#include "mcop/sweep.hpp"

using namespace mcop;

namespace {

Certificate sample_certificate() {
  Certificate cert("unit-test");
  OrderedJson config;
  config["n"] = 4;
  config["mode"] = "full";
  cert.set_config(config);
  OrderedJson details;
  details["count"] = 64;
  cert.add_check("first", true, details, 12);
  cert.add_check("second", true, OrderedJson::object(), 3);
  return cert;
}

}  // namespace

TEST_CASE("certificates are byte-stable and timing-free by default") {
  const Certificate a = sample_certificate();
  const Certificate b = sample_certificate();

  REQUIRE(a.bytes() == b.bytes());
  REQUIRE(a.bytes().back() == '\n');
  REQUIRE(a.bytes().find("elapsed_ms") == std::string::npos);
  REQUIRE(a.bytes(true).find("elapsed_ms") != std::string::npos);

  const OrderedJson root = OrderedJson::parse(a.bytes());
  REQUIRE(root["schema_version"] == 1);
  REQUIRE(root["tool"] == "unit-test");
  REQUIRE(root["config"]["n"] == 4);
  REQUIRE(root["checks"].size() == 2);
  REQUIRE(root["checks"][0]["name"] == "first");
  REQUIRE(root["checks"][0]["pass"] == true);
  REQUIRE(root["summary"]["checks"] == 2);
  REQUIRE(root["summary"]["failures"] == 0);
  REQUIRE(root["summary"]["partial"] == false);
  REQUIRE(root["summary"]["pass"] == true);
}

TEST_CASE("failures and partial runs are recorded") {
  Certificate cert("unit-test");
  cert.add_check("good", true);
  cert.add_check("bad", false);
  REQUIRE(cert.check_count() == 2);
  REQUIRE(cert.failure_count() == 1);
  REQUIRE_FALSE(cert.all_pass());

  cert.mark_partial();
  REQUIRE(cert.partial());
  const OrderedJson root = OrderedJson::parse(cert.bytes());
  REQUIRE(root["summary"]["partial"] == true);
  REQUIRE(root["summary"]["pass"] == false);
}

TEST_CASE("unbudgeted sweeps complete every index") {
  for (int workers : {1, 4}) {
    const BudgetClock clock(0);
    REQUIRE_FALSE(clock.limited());
    std::vector<int> results(100, -1);
    const SweepStatus status = run_sweep(
        100, workers, clock, [&](int idx) { results[static_cast<size_t>(idx)] = idx * idx; });
    REQUIRE(status.total == 100);
    REQUIRE(status.completed == 100);
    REQUIRE_FALSE(status.budget_hit);
    for (int i = 0; i < 100; ++i) REQUIRE(results[static_cast<size_t>(i)] == i * i);
  }
}

TEST_CASE("expired budgets stop the sweep with a clean prefix") {
  const BudgetClock clock(1);
  REQUIRE(clock.limited());
  std::this_thread::sleep_for(std::chrono::milliseconds(10));
  REQUIRE(clock.expired());

  std::atomic<int> calls{0};
  const SweepStatus status =
      run_sweep(50, 2, clock, [&](int) { calls.fetch_add(1); });
  REQUIRE(status.budget_hit);
  REQUIRE(status.completed <= calls.load());
  REQUIRE(status.completed < 50);
}

TEST_CASE("worker resolution order") {
  REQUIRE(resolve_workers(5) == 5);
  setenv("MCOP_WORKERS", "2", 1);
  REQUIRE(resolve_workers() == 2);
  REQUIRE(resolve_workers(7) == 7);  // explicit request wins
  unsetenv("MCOP_WORKERS");
  REQUIRE(resolve_workers() >= 1);
}

TEST_CASE("ascii and dot rendering smoke") {
  const GtPoset p(4);
  Mask m = 0;
  for (auto e : {PosetElement{1, 1}, PosetElement{2, 2}, PosetElement{1, 2},
                 PosetElement{2, 3}, PosetElement{1, 4}}) {
    m |= Mask{1} << p.id(e);
  }

  const std::string marking = render_marking_ascii(p, m);
  REQUIRE(marking.find('%') != std::string::npos);
  REQUIRE(marking.find('o') != std::string::npos);

  const std::string pipes = render_pipes_ascii(p, m);
  REQUIRE(pipes.find("w = (4,3,1,2)") != std::string::npos);

  const std::string dot = render_pipes_dot(p, m);
  REQUIRE(dot.rfind("digraph", 0) == 0);
  REQUIRE(dot.find("exit") != std::string::npos);
}
