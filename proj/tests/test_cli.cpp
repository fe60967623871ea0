#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string out_path = "cli_test_stdout.tmp";
    std::string err_path = "cli_test_stderr.tmp";
    std::string cmd = env + (env.empty() ? "" : " ") + SCROLLUN_CLI_PATH + " " + args + " > " +
                      out_path + " 2> " + err_path;
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

// Validates the subset of JSON Schema the shipped schema file uses:
// type/object, required, per-property type, enum, additionalProperties.
bool validates(const json& schema, const json& value, std::string& why) {
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        bool ok = (t == "object" && value.is_object()) || (t == "string" && value.is_string()) ||
                  (t == "number" && value.is_number()) || (t == "array" && value.is_array()) ||
                  (t == "boolean" && value.is_boolean());
        if (!ok) {
            why = "expected type " + t + ", got " + value.dump().substr(0, 40);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"])
            if (e == value) found = true;
        if (!found) {
            why = "value " + value.dump() + " not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& req : schema["required"])
                if (!value.contains(req.get<std::string>())) {
                    why = "missing required field " + req.get<std::string>();
                    return false;
                }
        const json props = schema.value("properties", json::object());
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validates(props[it.key()], it.value(), why)) return false;
            } else if (schema.value("additionalProperties", json(true)) == json(false)) {
                why = "unexpected field " + it.key();
                return false;
            }
        }
    }
    return true;
}

json load_schema() {
    std::ifstream in(std::string(SCROLLUN_SOURCE_DIR) + "/schema/report.schema.json");
    REQUIRE(in.good());
    json schema;
    in >> schema;
    return schema;
}

}  // namespace

TEST_CASE("scroll 1 1 passes and emits schema-valid JSON") {
    auto r = run_cli("scroll 1 1 --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validates(load_schema(), rep, why), why);
    CHECK(rep["status"] == "pass");
    CHECK(rep["results"]["dimension"] == 3);
    CHECK(rep["results"]["phi_compatible"] == true);
    CHECK(rep["results"]["Q_in_ker_g"] == true);
}

TEST_CASE("scroll 1 0 is a usage error (exit 2)") {
    auto r = run_cli("scroll 1 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("scroll 2 2 --json is well-formed") {
    auto r = run_cli("scroll 2 2 --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validates(load_schema(), rep, why), why);
    CHECK(rep["results"]["hilbert"][0] == 1);
    CHECK(rep["results"]["presentation"]["Q"]["count"] == 6);
}

TEST_CASE("text and JSON reports agree on status") {
    auto text = run_cli("scroll 1 2");
    auto js = run_cli("scroll 1 2 --json");
    CHECK(text.exit_code == js.exit_code);
    json rep = json::parse(js.out);
    std::string status_line = "status: " + rep["status"].get<std::string>();
    CHECK(text.out.find(status_line) != std::string::npos);
}

TEST_CASE("unproject rejects f in I with the non-domain diagnosis (exit 1)") {
    auto r = run_cli("unproject 1 1 --f x00");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("not a domain") != std::string::npos);
}

TEST_CASE("unproject with linear f classifies and passes") {
    auto r = run_cli("unproject 1 2 --f x12 --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["status"] == "pass");
    CHECK(rep["results"]["k"] == 1);
    CHECK(rep["results"]["presentations_equal"] == true);
    CHECK(rep["results"]["codimension"] == 3);
    CHECK(rep["results"]["classification"]["tag"] == "F(1,3)");
    CHECK(rep["results"]["classification"]["abstract"] == "F_2");
    CHECK(rep["results"]["classification"]["verified"] == true);
}

TEST_CASE("unproject accepts a divisor and reports its classification") {
    // The point [0:1] is the zero of x0m, so f = x0m and the family member
    // is the generic one F(m+1,n).
    auto r = run_cli("unproject 1 2 --points 0:1 --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["inputs"]["f"] == "x01");
    CHECK(rep["results"]["classification"]["tag"] == "F(2,2)");
    CHECK(rep["results"]["classification"]["verified"] == true);
}

TEST_CASE("unproject with k = 2 emits the Hilbert table, optional Rees block") {
    auto r = run_cli("unproject 1 2 --f x12^2 --rees --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["results"]["k"] == 2);
    CHECK(rep["results"]["hilbert"] == json({1, 5, 13, 24, 39, 57}));
    CHECK(rep["results"]["rees"]["eliminate_to_base"]["equal"] == true);
    CHECK(rep["results"]["rees"]["eliminate_to_unprojection"]["equal"] == false);
    CHECK(rep["results"]["rees"]["eliminate_to_unprojection"]["result_in_target"] == true);
}

TEST_CASE("unproject requires exactly one of --f / --points") {
    CHECK(run_cli("unproject 1 2").exit_code == 2);
    CHECK(run_cli("unproject 1 2 --f x12 --points 0:1").exit_code == 2);
}

TEST_CASE("lattice chain reports towers and singularities") {
    auto r = run_cli("lattice chain --D 2 --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["results"]["gamma_hat_sq"] == -2);
    CHECK(rep["results"]["singularities"] == json({"1/2(1,1)", "A1"}));
}

TEST_CASE("lattice elementary and horikawa") {
    auto r = run_cli("lattice elementary 2 --on-delta0 --json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["results"]["d_after"] == 3);

    auto h = run_cli("lattice horikawa 2 3 --json");
    CHECK(h.exit_code == 0);
    json rep = json::parse(h.out);
    CHECK(rep["results"]["pg"] == 7);
    CHECK(rep["results"]["Ksq"] == 11);
}

TEST_CASE("lattice usage errors exit 2") {
    CHECK(run_cli("lattice chain").exit_code == 2);
    CHECK(run_cli("lattice elementary").exit_code == 2);
}

TEST_CASE("verify-all on a small grid: criterion 6 is the only red entry") {
    std::string golden = std::string(SCROLLUN_SOURCE_DIR) + "/golden/hilbert_tables.json";
    auto r = run_cli("verify-all --grid 'm<=1' 'n<=2' 'k<=1' --golden " + golden + " --json");
    CHECK(r.exit_code == 1);
    json rep = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validates(load_schema(), rep, why), why);
    CHECK(rep["status"] == "fail");
    for (const auto& crit : rep["results"]["criteria"]) {
        if (crit["id"] == 6)
            CHECK(crit["pass"] == false);
        else
            CHECK(crit["pass"] == true);
    }
}

TEST_CASE("prime-field flag is accepted end to end") {
    auto r = run_cli("unproject 1 1 --f x11 --field fp:32003 --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["status"] == "pass");
    CHECK(rep["results"]["classification"]["tag"] == "F(1,2)");

    CHECK(run_cli("scroll 1 1 --field fp:4").exit_code == 2);
}

TEST_CASE("groebner budget override via environment variable") {
    auto r = run_cli("scroll 2 3", "SCROLLUN_GB_STEPS=2");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("malformed inputs are usage errors") {
    CHECK(run_cli("unproject 1 2 --points '1:'").exit_code == 2);
    CHECK(run_cli("unproject 1 2 --points '0:0'").exit_code == 2);
    CHECK(run_cli("unproject 1 2 --points '1:1,1:1'").exit_code == 2);
    CHECK(run_cli("unproject 1 2 --f 'x12 +'").exit_code == 2);
    CHECK(run_cli("unproject 1 2 --f 'x99'").exit_code == 2);
    CHECK(run_cli("verify-all --grid 'q<=2'").exit_code == 2);
}

TEST_CASE("divisor multiplicities set the T-weight") {
    auto r = run_cli("unproject 2 2 --points '1:1^2,0:1' --json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["results"]["k"] == 3);
    CHECK(rep["status"] == "pass");
}
