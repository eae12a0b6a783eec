// Drives the built CLI binary end to end: exit codes, JSON shape against the
// shipped schemas, and byte-level determinism of seeded commands.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

#ifndef TRIPICK_CLI_PATH
#error "TRIPICK_CLI_PATH must be defined"
#endif
#ifndef TRIPICK_SCHEMA_DIR
#error "TRIPICK_SCHEMA_DIR must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TRIPICK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

// minimal JSON-schema subset: type, properties, required, items,
// minItems/maxItems, enum
bool validate(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        const bool ok = (t == "object" && value.is_object()) ||
                        (t == "array" && value.is_array()) ||
                        (t == "string" && value.is_string()) ||
                        (t == "boolean" && value.is_boolean()) ||
                        (t == "number" && value.is_number()) ||
                        (t == "integer" && value.is_number_integer());
        if (!ok) {
            why = "expected type " + t + ", got " + value.dump().substr(0, 40);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"]) found = found || (e == value);
        if (!found) {
            why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                why = "missing required key " + key.get<std::string>();
                return false;
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (value.contains(key) && !validate(sub, value[key], why)) {
                why = key + ": " + why;
                return false;
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<size_t>()) {
            why = "too few items";
            return false;
        }
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<size_t>()) {
            why = "too many items";
            return false;
        }
        if (schema.contains("items")) {
            for (const auto& item : value)
                if (!validate(schema["items"], item, why)) {
                    why = "item: " + why;
                    return false;
                }
        }
    }
    return true;
}

void check_schema(const std::string& name, const std::string& output) {
    std::ifstream in(std::string(TRIPICK_SCHEMA_DIR) + "/" + name + ".schema.json");
    REQUIRE(in.good());
    json schema;
    in >> schema;
    const json value = json::parse(output, nullptr, false);
    REQUIRE(!value.is_discarded());
    std::string why;
    const bool ok = validate(schema, value, why);
    INFO(name << ": " << why);
    CHECK(ok);
}

const std::string kOnes = "'[[1,0],[1,0],[1,0]]'";
const std::string kNodes = "'[[0.1,0.2],[0.5,-0.1],[-0.2,0.4]]'";
const std::string kGamma = "'[0.1333,0.1667]'";

} // namespace

TEST_CASE("check-alpha: exit codes and schema") {
    const RunResult t = run_cli("check-alpha " + kOnes);
    CHECK(t.exit_code == 0);
    check_schema("check-alpha", t.stdout_text);
    CHECK(json::parse(t.stdout_text)["triangle"] == true);

    const RunResult f = run_cli("check-alpha '[[1,0],[1,0],[2,0]]'");
    CHECK(f.exit_code == 1);
    CHECK(json::parse(f.stdout_text)["triangle"] == false);

    CHECK(run_cli("check-alpha '[[0,0],[0,0],[0,0]]'").exit_code == 2);
    CHECK(run_cli("check-alpha 'not json'").exit_code == 2);
    CHECK(run_cli("check-alpha '[[1,0],[1,0]]'").exit_code == 2);
}

TEST_CASE("membership and graph") {
    const RunResult m =
        run_cli("membership --alpha " + kOnes + " --point '[[0,0],[0,0],[0,0]]'");
    CHECK(m.exit_code == 0);
    check_schema("membership", m.stdout_text);

    const RunResult off =
        run_cli("membership --alpha " + kOnes + " --point '[[0.5,0],[0.5,0],[0.5,0]]'");
    CHECK(off.exit_code == 1);

    const RunResult g = run_cli("graph --alpha " + kOnes + " --z1 '[0.2,0.1]' --z2 '[0.3,-0.2]'");
    CHECK(g.exit_code == 0);
    check_schema("graph", g.stdout_text);
    // back-substitution: returned z3 satisfies the defining equation
    const json gz = json::parse(g.stdout_text)["z3"];
    const std::string pt = "'[[0.2,0.1],[0.3,-0.2],[" + std::to_string(gz[0].get<double>()) +
                           "," + std::to_string(gz[1].get<double>()) + "]]'";
    CHECK(run_cli("membership --alpha " + kOnes + " --point " + pt + " --tol 1e-5").exit_code == 0);
}

TEST_CASE("interpolants, verify-discriminant, uniqueness-z3") {
    const RunResult i = run_cli("interpolants --nodes " + kNodes + " --gamma " + kGamma);
    CHECK(i.exit_code == 0);
    check_schema("interpolants", i.stdout_text);
    const json ij = json::parse(i.stdout_text);
    const double s = ij["F1"]["s"].get<double>();
    CHECK(s > 0.0);
    CHECK(s < 1.0);

    const RunResult d =
        run_cli("verify-discriminant --nodes " + kNodes + " --gamma " + kGamma + " --seed 7");
    CHECK(d.exit_code == 0);
    check_schema("verify-discriminant", d.stdout_text);
    CHECK(json::parse(d.stdout_text)["rel_max_coeff"].get<double>() < 1e-9);
    // --seed is mandatory for randomized commands
    CHECK(run_cli("verify-discriminant --nodes " + kNodes + " --gamma " + kGamma).exit_code == 2);

    const RunResult u = run_cli("uniqueness-z3 --nodes " + kNodes + " --gamma " + kGamma +
                                " --z1 '[0.2,0.1]' --z2 '[-0.3,0.2]'");
    CHECK(u.exit_code == 0);
    check_schema("uniqueness-z3", u.stdout_text);
    CHECK(json::parse(u.stdout_text)["difference"].get<double>() < 1e-9);
}

TEST_CASE("normalize-disc, nondegenerate, shilov-classify, normalize-alpha") {
    const RunResult n = run_cli("normalize-disc --nodes " + kNodes);
    CHECK(n.exit_code == 0);
    check_schema("normalize-disc", n.stdout_text);
    CHECK(json::parse(n.stdout_text)["b2"].get<double>() > 0.0);

    const std::string problem =
        "'{\"nodes\":[[[0.1,0],[0,0],[0,0]],[[-0.3,0],[0,0],[0,0]],[[0,0],[0.5,0],[0,0]]],"
        "\"targets\":[[0.1,0],[-0.3,0],[0.4,0]]}'";
    const RunResult nd = run_cli("nondegenerate --problem " + problem);
    CHECK(nd.exit_code == 1); // extremal two-point subproblem
    check_schema("nondegenerate", nd.stdout_text);

    const RunResult c =
        run_cli("shilov-classify --alpha " + kOnes + " --point '[[0,0],[-1,0],[0.5,0]]'");
    CHECK(c.exit_code == 0);
    check_schema("shilov-classify", c.stdout_text);
    CHECK(json::parse(c.stdout_text)["class"] == "boundary-non-shilov");

    const RunResult na = run_cli("normalize-alpha --alpha '[[0,1],[1,0],[1,0]]'");
    CHECK(na.exit_code == 0);
    check_schema("normalize-alpha", na.stdout_text);
    const json betas = json::parse(na.stdout_text)["beta"];
    for (const auto& b : betas) CHECK(b[1].get<double>() == 0.0);
}

TEST_CASE("sample: determinism and formats") {
    const std::string cmd = "sample --alpha " + kOnes + " -n 25 --seed 1 --format csv";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text); // byte-identical
    std::istringstream lines(a.stdout_text);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "re1,im1,re2,im2,re3,im3");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 25);

    const RunResult j = run_cli("sample --alpha " + kOnes + " -n 5 --seed 2 --format json");
    CHECK(j.exit_code == 0);
    check_schema("sample", j.stdout_text);
    CHECK(json::parse(j.stdout_text)["points"].size() == 5);

    const RunResult sh = run_cli("sample-shilov --alpha " + kOnes + " -n 5 --seed 3");
    CHECK(sh.exit_code == 0);
    check_schema("sample-shilov", sh.stdout_text);
    for (const auto& p : json::parse(sh.stdout_text)["points"])
        for (const auto& z : p)
            CHECK(std::abs(std::hypot(z[0].get<double>(), z[1].get<double>()) - 1.0) < 1e-10);

    CHECK(run_cli("sample --alpha " + kOnes + " -n 5").exit_code == 2); // seed required
}

TEST_CASE("biholo command") {
    const RunResult b = run_cli("biholo --alpha '[[0.5,0.5],[1,0],[0.8,-0.2]]' --beta " + kOnes +
                                " --seed 3 --samples 50");
    CHECK(b.exit_code == 0);
    check_schema("biholo", b.stdout_text);
    const json bj = json::parse(b.stdout_text);
    CHECK(bj["pass"] == true);
    CHECK(bj["max_residual_forward"].get<double>() < 1e-9);
}

TEST_CASE("verify-all: schema, determinism, invalid scale") {
    const std::string cmd = "verify-all --seed 11 --scale-percent 5";
    const RunResult v = run_cli(cmd);
    CHECK(v.exit_code == 0);
    check_schema("verify-all", v.stdout_text);
    const json vj = json::parse(v.stdout_text);
    CHECK(vj["all_passed"] == true);
    CHECK(vj["check_count"].get<int>() >= 20);

    // identical argv + seed give byte-identical output up to wall times; strip
    // the timing fields and compare
    const RunResult v2 = run_cli(cmd);
    json a = json::parse(v.stdout_text), b = json::parse(v2.stdout_text);
    a.erase("wall_seconds");
    b.erase("wall_seconds");
    for (auto& c : a["checks"]) c.erase("wall_seconds");
    for (auto& c : b["checks"]) c.erase("wall_seconds");
    CHECK(a.dump() == b.dump());

    CHECK(run_cli("verify-all --seed 11 --scale-percent 0").exit_code == 2);
    CHECK(run_cli("totally-unknown-command").exit_code == 2);
}
