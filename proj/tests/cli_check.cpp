// Exercises the command-line tool as a subprocess: exit codes, report
// structure, error serialization. Invoked by ctest with the binary path and
// a scratch directory.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "  ok: " : "  FAILED: ") << what << "\n";
    if (!ok) ++failures;
}

int run_cmd(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_check <ratseries-binary> <scratch-dir>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const fs::path scratch = argv[2];
    fs::create_directories(scratch);

    const std::string geo =
        R"('{"kind":"rational","numerator":["1"],"denominator":["1","-1"]}')";

    {
        fs::path out = scratch / "kron.json";
        int rc = run_cmd(bin + " kronecker --input " + geo + " --n-lo 1 --n-hi 5 --output " +
                         out.string() + " > /dev/null 2>&1");
        check(rc == 0, "kronecker on the geometric series exits 0");
        json rep = json::parse(slurp(out));
        check(rep["result"]["verdict"] == "RationalEvidence", "geometric verdict");
        check(rep["config"]["n_hi"] == 5, "report embeds the resolved config");
    }
    {
        int rc = run_cmd(bin + " no-such-subcommand > /dev/null 2>&1");
        check(rc == 2, "unknown subcommand exits 2");
        rc = run_cmd(bin + " kronecker > /dev/null 2>&1");
        check(rc == 2, "missing required --input exits 2");
        rc = run_cmd(bin + " kronecker --input '{\"kind\":\"nope\"}' > /dev/null 2>&1");
        check(rc == 2, "malformed spec exits 2");
        rc = run_cmd(bin + " --help > /dev/null 2>&1");
        check(rc == 0, "--help exits 0");
    }
    {
        fs::path out = scratch / "rec.json";
        int rc = run_cmd(bin + " reconstruct --input " + geo + " --d 1 --output " +
                         out.string() + " > /dev/null 2>&1");
        check(rc == 0, "reconstruct exits 0");
        json rep = json::parse(slurp(out));
        check(rep["result"]["fit"]["denominator"] == json::array({"1", "-1"}),
              "reconstructed denominator 1 - z");

        // squares-rule series has no rational fit at d = 2
        rc = run_cmd(bin + " reconstruct --input '{\"kind\":\"lacunary\",\"rule\":\"squares\"}'" +
                     " --d 2 --output " + (scratch / "rec_fail.json").string() +
                     " > /dev/null 2>&1");
        check(rc == 1, "NoRationalFit exits 1");
        json fail = json::parse(slurp(scratch / "rec_fail.json"));
        check(fail["error"]["type"] == "NoRationalFit", "error type serialized");
    }
    {
        fs::path out = scratch / "crit.json";
        fs::path csv = scratch / "crit.csv";
        std::string prod = R"('{"kind":"product",)"
                           R"("g":{"kind":"rational","numerator":["1"],"denominator":["1","-1"]},)"
                           R"("h":{"kind":"rational","numerator":["1"],"denominator":["1","-1"]}}')";
        int rc = run_cmd(bin + " criterion --input " + prod + " --m-hi 4 --output " +
                         out.string() + " --csv " + csv.string() + " > /dev/null 2>&1");
        check(rc == 0, "criterion exits 0");
        json rep = json::parse(slurp(out));
        check(rep["result"]["verdict"] == "RationalEvidence", "product verdict");
        check(rep["result"]["onset_m"] == 2, "onset m = 2");
        std::string csv_text = slurp(csv);
        check(csv_text.rfind("m,H_m_zero", 0) == 0, "criterion CSV header");
    }
    {
        fs::path out = scratch / "cap.json";
        int rc = run_cmd(bin + " capacity --input '{\"generator\":\"circle\",\"radius\":1.0,"
                               "\"count\":256}' --n-max 6 --output " +
                         out.string() + " > /dev/null 2>&1");
        check(rc == 0, "capacity exits 0");
        json rep = json::parse(slurp(out));
        check(rep["result"]["estimate"]["d_seq"].size() == 5, "d_n sequence length");
    }
    {
        // marginal contour: no certificate at small n_max
        fs::path out = scratch / "iota_fail.json";
        int rc = run_cmd(bin + " iota-check --input '{\"phi\":1.5707963267948966,"
                               "\"psi\":-1.5707963267948966,\"s\":1.02,\"delta\":0.0}'"
                               " --n-max 6 --density 64 --output " +
                         out.string() + " > /dev/null 2>&1");
        check(rc == 1, "marginal iota-check exits 1");
        json rep = json::parse(slurp(out));
        check(rep["error"]["type"] == "NoCertificate", "NoCertificate serialized");
        check(rep.contains("result"), "partial d_n sequence still reported");

        // an easy contour certifies
        fs::path ok = scratch / "iota_ok.json";
        rc = run_cmd(bin + " iota-check --input '{\"phi\":1.5707963267948966,"
                           "\"psi\":-1.5707963267948966,\"s\":3.0,\"delta\":0.05}'"
                           " --n-max 40 --density 128 --output " +
                     ok.string() + " > /dev/null 2>&1");
        check(rc == 0, "easy iota-check exits 0");
    }
    {
        fs::path out = scratch / "bound.json";
        int rc = run_cmd(bin + " contour-bound --L 7.1969 --eta 0.9 --M 2 --rho 0.8"
                               " --m-max 10 --output " +
                         out.string() + " > /dev/null 2>&1");
        check(rc == 0, "contour-bound exits 0");
        json rep = json::parse(slurp(out));
        check(rep["result"]["m0"] == 2, "m0 = 2");
        int rc2 = run_cmd(bin + " contour-bound --L 7.1969 --eta 0.9 --M 10 --rho 0.999"
                                " --m-max 3 --output " +
                          (scratch / "bound_fail.json").string() + " > /dev/null 2>&1");
        check(rc2 == 1, "NoM0 exits 1");
    }
    {
        fs::path out = scratch / "dfinite.json";
        std::string sys = R"('{"kind":"dfinite",)"
                          R"("equations":[[["-1"],["1","-1"]],[["-1"],["1","-1"]]],)"
                          R"("initials":[["1"]]}')";
        int rc = run_cmd(bin + " dfinite --input " + sys + " --N 24 --m-hi 4 --output " +
                         out.string() + " > /dev/null 2>&1");
        check(rc == 0, "two-variable dfinite pipeline exits 0");
        json rep = json::parse(slurp(out));
        check(rep["result"]["criterion"]["verdict"] == "RationalEvidence",
              "pipeline verdict");
        check(rep["result"]["slice0"]["denominator"] == json::array({"1", "-2", "1"}),
              "reconstructed slice denominator");

        std::string uni = R"('{"equations":[[["-2"],["1","-4"]]],"initials":["1"]}')";
        int rc2 = run_cmd(bin + " dfinite --input " + uni + " --N 8 --output " +
                          (scratch / "dfinite1.json").string() + " > /dev/null 2>&1");
        check(rc2 == 0, "univariate dfinite exits 0");
        json rep1 = json::parse(slurp(scratch / "dfinite1.json"));
        check(rep1["result"]["series"]["values"][4] == "70", "central binomial a_4");
    }
    {
        fs::path out = scratch / "sym.json";
        std::string in = R"('{"g":{"kind":"rational","numerator":["2"],)"
                         R"("denominator":["2","-1"]},)"
                         R"("contour":{"phi":1.5707963267948966,)"
                         R"("psi":-1.5707963267948966,"s":1.2,"delta":0.1}}')";
        int rc = run_cmd(bin + " symcheck --input " + in + " --m 1 --output " + out.string() +
                         " > /dev/null 2>&1");
        check(rc == 0, "symcheck exits 0");
        json rep = json::parse(slurp(out));
        check(rep["result"]["residual"].get<double>() < 1e-6, "symcheck residual small");
    }
    {
        // byte-identical reports for identical config including seed
        fs::path a = scratch / "det_a.json", b = scratch / "det_b.json";
        std::string cmd = " capacity --input '{\"generator\":\"segment\",\"a\":[-1,0],"
                          "\"b\":[1,0],\"count\":200}' --n-max 8 --seed 42 --output ";
        run_cmd(bin + cmd + a.string() + " > /dev/null 2>&1");
        run_cmd(bin + cmd + b.string() + " > /dev/null 2>&1");
        check(!slurp(a).empty() && slurp(a) == slurp(b), "reports byte-identical per seed");
    }

    if (failures == 0) {
        std::cout << "cli_check: all checks passed\n";
        return 0;
    }
    std::cout << "cli_check: " << failures << " check(s) failed\n";
    return 1;
}
