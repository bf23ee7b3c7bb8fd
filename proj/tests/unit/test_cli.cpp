#include <mzvkit/suite.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MZVKIT_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(cmd.c_str(), "r"), ::pclose);
  REQUIRE(pipe);
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) r.out += buf.data();
  const int status = ::pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "mzvkit_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval") {
  auto r = run("eval 'za(2)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.8224670334241132182362075833230125946095") != std::string::npos);
  CHECK(r.out.find("method") != std::string::npos);

  r = run("eval 'zs({2}^3)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.97110218259487020819687848896990852281") != std::string::npos);

  r = run("eval 'zz(2)'");
  CHECK(r.code == 2);
  CHECK(r.out.find("unknown prefix") != std::string::npos);

  CHECK(run("eval 'zs(1)'").code == 2);
  CHECK(run("eval 'z(1,2)' --method direct --max-terms 50").code == 3);
  CHECK(run("eval 'z(2)' --precision 10").code == 2);
  CHECK(run("eval 'z(2)' --tol -1").code == 2);
  CHECK(run("eval 'z(2)' --method bogus").code == 2);
  CHECK(run("eval").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("eval named series") {
  auto r = run("eval 'lemma1(1, 1)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.644934066848226436472415166646025189") != std::string::npos);
  r = run("eval 'li_half(1)'");
  CHECK(r.out.find("0.693147180559945309417232121458176568") != std::string::npos);
  CHECK(run("eval 'hurwitz(1/2; 3)'").code == 0);
  CHECK(run("eval 'hurwitz(1/2, 3)'").code == 2);
}

TEST_CASE("precision from the environment and the flag") {
  auto r = run("eval 'z(3)' --precision 60");
  CHECK(r.out.find("1.20205690315959428539973816151144999076498629234049888179227") != std::string::npos);
  const std::string env = std::string("MZVKIT_PRECISION=25 ") + MZVKIT_CLI_PATH + " eval 'z(3)'";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(env.c_str(), "r"), ::pclose);
  std::array<char, 512> buf{};
  std::string out;
  while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  CHECK(out.find("1.202056903159594285399738") != std::string::npos);
  CHECK(out.find("1.2020569031595942853997381615") == std::string::npos);
}

TEST_CASE("value cache") {
  const auto cache = scratch("cache.json");
  std::filesystem::remove(cache);
  auto a = run("eval 'z(2,3)' --cache " + cache.string());
  CHECK(a.code == 0);
  const auto stored = mzvkit::json::parse(slurp(cache));
  CHECK(stored.contains("z(2,3)"));
  CHECK(stored["z(2,3)"]["digits"] == 40);
  auto b = run("eval 'z(2,3)' --cache " + cache.string());
  CHECK(a.out == b.out);
  // more digits invalidate the entry
  auto c = run("eval 'z(2,3)' --precision 50 --cache " + cache.string());
  CHECK(c.code == 0);
  CHECK(mzvkit::json::parse(slurp(cache))["z(2,3)"]["digits"] == 50);
}

TEST_CASE("verify") {
  const auto out = scratch("eq19.json");
  auto r = run("verify eq19 --json " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("6 pass / 0 fail / 0 reported") != std::string::npos);
  const std::string text = slurp(out);
  const auto doc = mzvkit::json::parse(text);
  CHECK(doc.size() == 6);
  CHECK(doc.dump(2) + "\n" == text);

  r = run("verify eq16");
  CHECK(r.code == 0);
  CHECK(r.out.find("5 pass / 0 fail / 10 reported") != std::string::npos);

  CHECK(run("verify nosuchcheck").code == 2);
  CHECK(run("verify").code == 2);
}

TEST_CASE("constants") {
  auto r = run("constants bernoulli --upto 8");
  CHECK(r.code == 0);
  CHECK(r.out.find("B_8 = -1/30") != std::string::npos);
  CHECK(r.out.find("B_1 = -1/2") != std::string::npos);

  r = run("constants gamma-coeffs --upto 4");
  CHECK(r.out == "1, 0, -z2, 2*z3, 1/2*z2^2 - 7/2*z4\n");

  r = run("constants zeta --upto 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("zeta(6) = 1.01734306198444913971451792979092052790") != std::string::npos);

  CHECK(run("constants gamma-coeffs --upto 99").code == 2);
  CHECK(run("constants zeta --upto 1").code == 2);
  CHECK(run("constants primes").code == 2);
}

}  // TEST_SUITE
