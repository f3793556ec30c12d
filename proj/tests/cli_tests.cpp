// End-to-end checks of the command-line binary (path in QCLIQUE_BIN).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << '\n';
    } else {
        ++failures;
        std::cout << "FAILED: " << what << '\n';
    }
}

}  // namespace

int main() {
    const char* env = std::getenv("QCLIQUE_BIN");
    if (!env) {
        std::cerr << "QCLIQUE_BIN not set\n";
        return 1;
    }
    std::string bin = env;

    RunResult r = run(bin + " construct --family jw --n 5 --k 2 | " + bin + " solve --omega");
    expect(r.status == 0 && r.out == "2\n", "solve --omega prints 2 for the 5-cycle");

    r = run(bin + " construct --family jw --n 13 --k 5 | " + bin + " solve --chi");
    expect(r.status == 0 && r.out == "8\n", "construct jw 13 5 piped into solve --chi gives 8");

    r = run(bin + " construct --family jw --n 13 --k 5 | " + bin + " solve --chi --omega --alpha");
    expect(r.status == 0 && r.out == "8 6 2\n", "combined solve output");

    r = run(bin + " qtable --n-max 5 --format csv");
    expect(r.status == 0 && r.out.find("5,3,2,") != std::string::npos,
           "qtable csv contains the row 5,3,2");
    expect(r.out.rfind("n,c,q,witness_graph6", 0) == 0, "qtable csv begins with its header");

    RunResult j1 = run(bin + " qtable --n-max 5 --format csv --jobs 1");
    RunResult j3 = run(bin + " qtable --n-max 5 --format csv --jobs 3");
    expect(j1.status == 0 && j1.out == j3.out, "qtable output is independent of --jobs");

    r = run(bin + " verify --family kn-minus-cycle --n 12 --k 4 --format json");
    expect(r.status == 0 && r.out.find("\"verified\":true") != std::string::npos,
           "verify kn-minus-cycle 12 4 reports verified");

    r = run(bin + " construct --family jw --n 10 --k 4 --emit json");
    expect(r.status == 0 && r.out.find("\"verified\":true") != std::string::npos &&
               r.out.find("\"omega\":4") != std::string::npos,
           "construct --emit json re-validates the claims");

    r = run(bin + " construct --family jw --n 13 --k 5 | " + bin + " witness --k 5");
    expect(r.status == 0 && r.out.find("\"outcome\":\"clique\"") != std::string::npos &&
               r.out.find("\"size\":6") != std::string::npos &&
               r.out.find("\"verified\":true") != std::string::npos,
           "witness on jw 13 5 finds the size-6 clique");

    r = run(bin + " construct --family kn-minus-cycle --n 12 --k 3 | " + bin + " witness --k 3");
    expect(r.status == 0 && r.out.find("\"outcome\":\"clique\"") != std::string::npos &&
               r.out.find("\"verified\":true") != std::string::npos,
           "witness on the removal family at k=3");

    r = run(bin + " construct --family jw --n 5 --k 2 --emit graph6 > /tmp/qc_c5.g6 && " + bin +
            " construct --family jw --n 10 --k 4 >> /tmp/qc_c5.g6 && " + bin +
            " solve --omega --input /tmp/qc_c5.g6");
    expect(r.status == 0 && r.out == "2\n4\n", "solve handles one graph per input line");

    r = run(bin + " construct --family jw --n 5 --k 2 | " + bin + " solve --omega --format json");
    expect(r.status == 0 && r.out.find("\"verified\":true") != std::string::npos,
           "solve json carries a recomputed verified field");

    r = run("printf '{\"colors\": [1,1,2,2,3,3,4,5,6,7,8,9]}' > /tmp/qc_col.json && " + bin +
            " construct --family kn-minus-cycle --n 12 --k 3 | " + bin +
            " witness --k 3 --coloring /tmp/qc_col.json");
    expect(r.status == 0 && r.out.find("\"input_colors\":9") != std::string::npos &&
               r.out.find("\"verified\":true") != std::string::npos,
           "witness accepts an explicit coloring file");

    r = run(bin + " scaling --q 3 --family cycle --sizes 9,15,21 --seed 4");
    expect(r.status == 0 && r.out.find("\"reference_exponent\":0.5") != std::string::npos,
           "scaling reports the reference exponent");
    RunResult s2 = run(bin + " scaling --q 3 --family bipartite --sizes 16,24,32 --seed 4");
    RunResult s3 = run(bin + " scaling --q 3 --family bipartite --sizes 16,24,32 --seed 4");
    expect(s2.status == 0 && s2.out == s3.out, "scaling output is reproducible under a fixed seed");

    // error paths: usage -> 1, malformed graph6 -> 1, bad parameters -> 1
    expect(run(bin + " nosuch").status == 1, "unknown subcommand exits 1");
    expect(run(bin + " solve --omega --input /nonexistent").status == 1, "missing file exits 1");
    expect(run("printf 'not-a-graph!\\n' | " + bin + " solve --omega").status == 1,
           "malformed graph6 exits 1");
    expect(run(bin + " construct --family jw --n 4 --k 5").status == 1,
           "parameter violation exits 1");
    expect(run(bin + " witness --k 2 --input /dev/null").status == 1, "witness k=2 exits 1");
    expect(run(bin + " qtable --n-max 9").status == 1, "qtable beyond the cap exits 1");

    std::cout << (failures == 0 ? "all cli checks passed\n" : "cli checks FAILED\n");
    return failures == 0 ? 0 : 1;
}
