//! Acceptance criteria 1-10, each driven through the `qdouble` binary with
//! the invocation documented in the README. One PASS/FAIL line per criterion.

use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    json: Value,
}

fn qdouble(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_qdouble")).args(args).args(["--format", "json"]).output().expect("run qdouble");
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    let json = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{:?}: bad json {}: {}", args, e, stdout));
    Run { code: out.status.code().unwrap_or(-1), stdout, json }
}

fn checks(r: &Run) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for s in r.json["suites"].as_array().expect("suites") {
        for c in s["checks"].as_array().expect("checks") {
            out.push((c["name"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()));
        }
    }
    out
}

fn failures(r: &Run) -> Vec<String> {
    checks(r).into_iter().filter(|(_, s)| s == "fail").map(|(n, _)| n).collect()
}

fn has(r: &Run, needle: &str, status: &str) -> bool {
    checks(r).iter().any(|(n, s)| n.contains(needle) && s == status)
}

/// Prints the criterion line and returns whether it held.
fn report(k: usize, what: &str, ok: bool, detail: &str) -> bool {
    println!("criterion {:>2}: {} {}{}", k, if ok { "PASS" } else { "FAIL" }, what, if detail.is_empty() { String::new() } else { format!(" ({})", detail) });
    ok
}

fn criterion_1() -> bool {
    let sl2 = qdouble(&["verify", "--suite", "hopf", "--degree", "3"]);
    let sl3 = qdouble(&["verify", "--suite", "hopf", "--degree", "3", "--group", "sl3"]);
    let names = ["C_q[SL(2)]", "U_q(sl_2)", "C_q[D(SL2)]"];
    let covered = names.iter().all(|n| has(&sl2, n, "pass"))
        && ["C_q[SL(3)]", "U_q(sl_3)"].iter().all(|n| has(&sl3, n, "pass"));
    let fails: Vec<_> = failures(&sl2).into_iter().chain(failures(&sl3)).collect();
    let ok = sl2.code == 0 && sl3.code == 0 && covered && fails.is_empty();
    report(1, "Hopf axioms of C_q[SL2], C_q[SL3], U_q(sl2), U_q(sl3), D(SL2) at degree 3", ok, &fails.join("; "))
}

/// The [β] and Hopf-map pullback checks must pass. The pullback along Δ is
/// recorded as a failure: Δ is not a coalgebra map, so its pullback is not a
/// 2-cocycle, and the line prints FAIL without failing the test.
fn criterion_2() -> (bool, bool) {
    let r = qdouble(&["double", "verify", "--suite", "cocycle", "--degree", "2"]);
    let all = checks(&r);
    let others_ok = all.iter().filter(|(n, _)| !n.contains("Delta")).all(|(_, s)| s == "pass")
        && has(&r, "[beta] on generators: cocycle identity", "pass")
        && has(&r, "pullback along swap, degree <= 2: cocycle identity", "pass")
        && has(&r, "pullback along Ad(lambda)(x)Ad(lambda), degree <= 2: cocycle identity", "pass");
    let delta_ok = all.iter().filter(|(n, _)| n.contains("Delta")).all(|(_, s)| s == "pass");
    let ok = others_ok && delta_ok;
    report(
        2,
        "[beta] cocycle on generator triples, pullbacks at degree 2",
        ok,
        if delta_ok { "" } else { "pullback along Delta is not a cocycle; [beta] and Hopf-map pullbacks pass" },
    );
    (others_ok, delta_ok)
}

fn criterion_3() -> bool {
    let r = qdouble(&["double", "relations", "--group", "sl2", "--diff-paper"]);
    let required = ["01", "06", "09", "10", "11", "14", "16"];
    let lines_ok = required.iter().all(|l| has(&r, &format!("printed relation {}:", l), "pass"));
    let assoc = checks(&r).into_iter().find(|(n, _)| n.starts_with("associativity")).expect("associativity check");
    let triples: usize = assoc.0.trim_start_matches("associativity (").split(' ').next().unwrap().parse().unwrap();
    let warned = checks(&r).iter().filter(|(_, s)| s == "warn").count();
    let ok = r.code == 0 && lines_ok && assoc.1 == "pass" && triples >= 200 && warned > 0 && failures(&r).is_empty();
    report(3, "cross relations of the sl2 double", ok, &format!("{} associativity triples, {} warnings", triples, warned))
}

fn suite_criterion(k: usize, what: &str, args: &[&str], needles: &[&str]) -> bool {
    let r = qdouble(args);
    let missing: Vec<_> = needles.iter().filter(|n| !has(&r, n, "pass")).map(|n| format!("missing {}", n)).collect();
    let problems: Vec<_> = failures(&r).into_iter().chain(missing).collect();
    report(k, what, r.code == 0 && problems.is_empty(), &problems.join("; "))
}

fn criterion_10() -> bool {
    let args = ["verify", "--seed", "7"];
    let (a, b) = (qdouble(&args), qdouble(&args));
    let suites = a.json["suites"].as_array().map_or(0, Vec::len);
    let ok = a.stdout == b.stdout && suites == 13 && a.json["schema"] == 1;
    report(10, "byte-identical JSON from the full verify battery", ok, &format!("{} suites, {} bytes", suites, a.stdout.len()))
}

#[test]
fn acceptance() {
    let mut ok = Vec::new();
    ok.push(criterion_1());
    let (c2_rest, c2_delta) = criterion_2();
    ok.push(criterion_3());
    ok.push(suite_criterion(
        4,
        "gamma: skew pairing, braided commutativity, convolution form, gamma'",
        &["double", "verify", "--suite", "braiding"],
        &["tau(bc,u)", "tau(b,uv)", "unit laws", "braided commutativity", "gamma = [beta]21", "gamma = gamma'"],
    ));
    ok.push(suite_criterion(
        5,
        "xi injective at degrees 1 and 2, xi(a(x)1), localization identities",
        &["double", "verify", "--suite", "iwasawa"],
        &[
            "xi injective at degree 1 (9/9)",
            "xi injective at degree 2",
            "xi(a(x)1) = a*Ki_2",
            "localization: (i)",
            "localization: (ii)",
            "localization: (iii)",
        ],
    ));
    ok.push(suite_criterion(
        6,
        "Gamma-invariance of xi-images at degree 3, eta relations",
        &["double", "verify", "--suite", "gamma-invariance,eta", "--degree", "3"],
        &["is Gamma-invariant", "t_w^2 = 1", "t_w t_w = t_2w"],
    ));
    ok.push(suite_criterion(
        7,
        "simplicity, diagonal reducibility, Peter-Weyl rank, chi theta*(a)",
        &["verify", "--suite", "repr"],
        &[
            "L(1)(x)L(1) is simple over the double",
            "L(2)(x)L(1) is simple over the double",
            "L(1)(x)L(2) is simple over the double",
            "L(2)(x)L(2) is simple over the double",
            "L(1)(x)L(1) is reducible under the diagonal U_q (witness dim 3)",
            "Peter-Weyl rank of L(1)(x)L(1) is 16 of 16",
            "chi theta*(a) = Ki*K_2",
        ],
    ));
    ok.push(suite_criterion(
        8,
        "strong gamma-invariance of the product flags, full rank",
        &["repr", "flags"],
        &["V has a strongly beta-invariant", "gamma(V_i (x) V'_j (x) W)", "lexicographic full flag", "full rank (16 of 16)"],
    ));
    ok.push(suite_criterion(
        9,
        "twist round trip at degree 3, iterated double k = 3",
        &["double", "verify", "--suite", "twist,iterated", "--degree", "3"],
        &["restores A(x)A", "associativity (50 random generator triples)", "multiplicative onto the double", "coalgebra map onto the double"],
    ));
    ok.push(criterion_10());
    assert!(ok.iter().all(|&b| b), "an acceptance criterion failed");
    assert!(c2_rest, "criterion 2: the [beta] or Hopf-map pullback checks failed");
    assert!(!c2_delta, "the pullback along Delta unexpectedly passed; update the decisions ledger");
}
