#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kunits/commands.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "kunits");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = kunits::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), "--json");
    const Run r = run(std::move(args));
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

std::string data(const std::string& name)
{
    return std::string(KUNITS_DATA_DIR) + "/" + name;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("stats")
{
    auto j = run_json({"stats", "--n", "5", "--k", "2"});
    CHECK(j["command"] == "stats");
    CHECK(j["input"]["n"] == "5");
    CHECK(j["result"]["du"] == "2");
    CHECK(j["result"]["rdu"] == "2");
    CHECK(j["result"]["phi"] == "4");
    CHECK(j["result"]["pdu"]["num"] == "1");
    CHECK(j["result"]["pdu"]["den"] == "2");

    j = run_json({"stats", "--n", "1", "--k", "7"});
    CHECK(j["result"]["du"] == "1");
    CHECK(j["result"]["rdu"] == "1");

    j = run_json({"stats", "--n", "264", "--k", "10"});
    CHECK(j["result"]["rdu"] == "1");

    const Run text = run({"stats", "--n", "5", "--k", "2"});
    CHECK(text.code == 0);
    CHECK(text.out.find("pdu  1/2") != std::string::npos);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({"stats", "--n", "5"}).code == 2);
    CHECK(run({"stats", "--n", "0", "--k", "2"}).code == 2);
    CHECK(run({"stats", "--n", "abc", "--k", "2"}).code == 2);
    CHECK(run({"stats", "--n", "5", "--k", "0"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--json", "--csv", "stats", "--n", "5", "--k", "2"}).code == 2);
    CHECK(run({"--bound", "99999999999999999999999", "stats", "--n", "5", "--k", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("capability errors exit 3 and name the bound")
{
    Run r = run({"--bound", "1000", "stats", "--n", "1009", "--k", "2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("1000") != std::string::npos);

    r = run({"stats", "--n", "340282366920938463463374607431768211507", "--k", "2"});
    CHECK(r.code == 3);

    r = run({"--enum-bound", "50", "units", "--n", "51", "--k", "2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("50") != std::string::npos);
}

TEST_CASE("units")
{
    CHECK(run({"units", "--n", "5", "--k", "2"}).out == "1 4\n");
    CHECK(run({"units", "--n", "7", "--k", "1"}).out == "1\n");
    CHECK(run({"units", "--n", "24", "--k", "2"}).out == "1 5 7 11 13 17 19 23\n");

    const Run checked = run({"units", "--n", "561", "--k", "80", "--oracle"});
    CHECK(checked.code == 0);
    CHECK(checked.err.find("agrees") != std::string::npos);

    auto j = run_json({"units", "--n", "8", "--k", "2", "--oracle"});
    CHECK(j["result"]["units"] == nlohmann::json::array({"1", "3", "5", "7"}));
    CHECK(j["result"]["oracle"]["agree"] == true);
}

TEST_CASE("solve")
{
    auto j = run_json({"solve", "--k", "2"});
    CHECK(j["result"]["n_max"] == "24");
    CHECK(j["result"]["count"] == "8");
    CHECK(j["result"]["A"] == nlohmann::json::array({"3"}));
    CHECK(j["result"]["B"].empty());

    j = run_json({"solve", "--k", "252"});
    CHECK(j["result"]["n_max"] == "153185861359440");
    CHECK(j["result"]["count"] == "7680");
    CHECK(j["result"]["beta"] == "2");
    CHECK(j["result"]["M"] == "63");
    CHECK(j["result"]["B"][0]["prime"] == "3");
    CHECK(j["result"]["B"][0]["exponent"] == "3");
    CHECK(j["result"]["B"][1]["prime"] == "7");
    CHECK(j["result"]["B"][1]["exponent"] == "2");

    j = run_json({"solve", "--k", "3"});
    CHECK(j["result"]["n_max"] == "2");
    CHECK(j["result"]["count"] == "2");
    CHECK(j["result"]["parity"] == "odd");

    j = run_json({"solve", "--k", "2", "--enumerate"});
    CHECK(j["result"]["solutions"] == nlohmann::json::array({"1", "2", "3", "4", "6", "8", "12", "24"}));
    CHECK(j["result"]["truncated"] == false);

    const Run truncated = run({"solve", "--k", "252", "--enumerate", "--limit", "5"});
    CHECK(truncated.code == 0);
    CHECK(truncated.out.find("1 2 3 4 5 ... (truncated: 5 of 7680)") != std::string::npos);
}

TEST_CASE("solve enumeration round trip through stats")
{
    for (const char* k : {"2", "10", "24"}) {
        const auto j = run_json({"solve", "--k", k, "--enumerate"});
        for (const auto& n : j["result"]["solutions"]) {
            const auto s = run_json({"stats", "--n", n.get<std::string>(), "--k", k});
            CHECK(s["result"]["rdu"] == "1");
        }
    }
}

TEST_CASE("classify")
{
    auto j = run_json({"classify", "--n", "561", "--carmichael"});
    CHECK(j["result"]["carmichael"] == true);
    CHECK(j["result"]["factorization"].size() == 3);

    j = run_json({"classify", "--n", "561", "--liars"});
    CHECK(j["result"]["fermat_liars"] == "320");

    j = run_json({"classify", "--n", "1806", "--gen-carmichael", "1"});
    CHECK(j["result"]["gen_carmichael"][0]["verdict"] == true);

    j = run_json({"classify", "--n", "15", "--carmichael"});
    CHECK(j["result"]["carmichael"] == false);
    CHECK(j["result"]["korselt_violation"].get<std::string>().find("does not divide") != std::string::npos);

    j = run_json({"classify", "--n", "4", "--knodel", "2", "--gen-carmichael", "-1", "--gen-carmichael", "1"});
    CHECK(j["result"]["knodel"][0]["verdict"] == true);
    CHECK(j["result"]["gen_carmichael"].size() == 2);

    const Run text = run({"classify", "--n", "561"});
    CHECK(text.code == 0);
    CHECK(text.out.find("3 * 11 * 17") != std::string::npos);

    CHECK(run({"--enum-bound", "1000", "classify", "--n", "1806", "--gen-carmichael", "1"}).code == 3);
}

TEST_CASE("sweep")
{
    Run r = run({"sweep", "--from", "1", "--to", "2000", "--rule", "const:2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"1", "2", "3", "4", "6", "8", "12", "24", "# hits 8, skipped 0"});

    r = run({"sweep", "--from", "3", "--to", "100000", "--rule", "n-1", "--composite-only", "--odd-only"});
    const auto out = lines(r.out);
    REQUIRE(out.size() == 17);
    CHECK(out.front() == "561");
    CHECK(out.back() == "# hits 16, skipped 0");

    r = run({"--csv", "sweep", "--from", "1", "--to", "50", "--rule", "poly:0,1"});
    CHECK(lines(r.out).front() == "n,exponent");
    CHECK(lines(r.out)[1] == "1,1");

    auto j = run_json({"sweep", "--from", "1", "--to", "30", "--rule", "n-2"});
    CHECK(j["result"]["skip_count"] == "2");
    CHECK(j["result"]["skipped"] == nlohmann::json::array({"1", "2"}));

    CHECK(run({"sweep", "--from", "1", "--to", "20", "--rule", "n*2"}).code == 2);
    CHECK(run({"sweep", "--from", "1", "--to", "20", "--rule", "lin:0,1"}).code == 2);
    CHECK(run({"sweep", "--from", "30", "--to", "20", "--rule", "n"}).code == 2);
}

TEST_CASE("oeis-check")
{
    Run r = run({"oeis-check", data("b002997_prefix.txt"), "--predicate", "carmichael", "--limit", "100000"});
    CHECK(r.code == 0);
    auto j = run_json({"oeis-check", data("b002997_prefix.txt"), "--predicate", "carmichael", "--limit", "100000"});
    CHECK(j["result"]["compared"] == "16");
    CHECK(j["result"]["match"] == true);

    j = run_json({"oeis-check", data("b002997_prefix.txt"), "--predicate", "knodel:1"});
    CHECK(j["result"]["compared"] == "20");

    r = run({"--json", "oeis-check", data("b014117.txt"), "--predicate", "gen-carmichael:1", "--limit", "2000"});
    CHECK(r.code == 1);
    j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["missing"] == nlohmann::json::array({"1"}));
    CHECK(j["result"]["extra"].empty());

    r = run({"oeis-check", data("empty.txt"), "--predicate", "carmichael"});
    CHECK(r.code == 0);
    CHECK(r.out.find("compared   0") != std::string::npos);

    r = run({"oeis-check", data("b002997_wrong.txt"), "--predicate", "carmichael"});
    CHECK(r.code == 1);

    r = run({"oeis-check", data("malformed.txt"), "--predicate", "carmichael"});
    CHECK(r.code == 2);
    CHECK(r.err.find(":4:") != std::string::npos);

    CHECK(run({"oeis-check", data("empty.txt"), "--predicate", "lucky"}).code == 2);
    CHECK(run({"oeis-check", data("missing-file.txt"), "--predicate", "carmichael"}).code == 2);

    r = run({"--json", "oeis-check", data("b002997_prefix.txt"), "--predicate", "rdu-one:2", "--limit", "30"});
    CHECK(r.code == 1);
    j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["extra"].size() == 8);
    CHECK(j["result"]["compared"] == "0");
}

TEST_CASE("JSON output is canonical and deterministic")
{
    const Run a = run({"--json", "solve", "--k", "252", "--enumerate", "--limit", "40"});
    const Run b = run({"--json", "solve", "--k", "252", "--enumerate", "--limit", "40"});
    CHECK(a.out == b.out);
    // keys are sorted and every integer is a string
    CHECK(a.out.find("{\"command\":\"solve\",\"input\":") == 0);
    CHECK(a.out.find("\"count\":\"7680\"") != std::string::npos);
}

TEST_CASE("installed binary honours the exit-code contract")
{
    auto shell = [](const std::string& args, std::string* captured = nullptr) {
        const std::string cmd = std::string(KUNITS_CLI_PATH) + " " + args + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 4096> buf{};
        while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
        const int status = pclose(pipe);
        if (captured) *captured = out;
        return WEXITSTATUS(status);
    };
    std::string first;
    std::string second;
    CHECK(shell("sweep --from 1 --to 20000 --rule n-1 --composite-only", &first) == 0);
    CHECK(shell("sweep --from 1 --to 20000 --rule n-1 --composite-only", &second) == 0);
    CHECK(first == second);
    CHECK(shell("units --n 5 --k 2", &first) == 0);
    CHECK(first == "1 4\n");
    CHECK(shell("stats --n 5") == 2);
    CHECK(shell("--bound 100 stats --n 101 --k 2") == 3);
    CHECK(shell("oeis-check " + data("b002997_wrong.txt") + " --predicate carmichael") == 1);
}
