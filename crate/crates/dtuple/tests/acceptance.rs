//! Acceptance suite: one test per exit criterion, each printing a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).

use dtuple::arith::{nat, Nat};
use dtuple::{bounds, lemmas, pell, tuples};
use std::process::Command;
use std::time::Instant;

fn report(name: &str, pass: bool) {
    println!(
        "acceptance: {name} ... {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion failed: {name}");
}

fn cli(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dtuple"))
        .args(args)
        .output()
        .expect("failed to run dtuple");
    (out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned())
}

/// 1. Fermat-set reproduction: verify {1,3,8,120} and extend (1,3,8) to
///    exactly 120. Exact, zero tolerance, < 1 ms for the math itself.
#[test]
fn criterion_1_fermat_set() {
    let (code, _) = cli(&["verify", "1", "3", "8", "120"]);
    let (ecode, eout) = cli(&["extend", "1", "3", "8"]);
    let start = Instant::now();
    let ok_verify = tuples::verify_tuple(&[nat(1), nat(3), nat(8), nat(120)])
        .unwrap()
        .ok;
    let d = tuples::regular_extension(&nat(1), &nat(3), &nat(8)).unwrap();
    let elapsed = start.elapsed();
    let pass = code == Some(0)
        && ecode == Some(0)
        && eout.lines().next() == Some("120")
        && ok_verify
        && d == nat(120)
        && elapsed.as_micros() < 1000;
    report("1 Fermat-set reproduction", pass);
}

/// 2. Theorem-1 reproduction: the combined inequality fails at C = 10^76
///    and the crossover lies in (1.0e75, 2.0e75) at 1% bracket width,
///    in under a second.
#[test]
fn criterion_2_theorem_1() {
    let start = Instant::now();
    let r = bounds::solve_crossover(0.01).unwrap();
    let elapsed = start.elapsed();
    let (code, out) = cli(&["--json", "bound", "--tolerance", "0.01"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let pass = !r.verdict_at_10_76
        && r.c_star > 1.0e75
        && r.c_star < 2.0e75
        && r.bracket_hi / r.bracket_lo <= 1.01 + 1e-9
        && elapsed.as_secs_f64() < 1.0
        && code == Some(0)
        && v["report"]["verdict_at_10_76"] == false;
    report("2 Theorem-1 reproduction (d < 10^76)", pass);
}

/// 3. Constant-gluing audit: all three margins pass with directed rounding.
#[test]
fn criterion_3_constant_gluing() {
    let start = Instant::now();
    let r = bounds::check_constant_consistency();
    let elapsed = start.elapsed();
    let pass = r.pass()
        && r.entries.len() == 3
        && r.entries.iter().all(|e| e.margin > 0.0)
        && elapsed.as_micros() < 1000;
    report("3 constant-gluing audit", pass);
}

/// 4. Intersection oracle: triple (1,3,8), max_index 10 yields exactly one
///    witness with |z| > 1, in the λ = −1 class, z = 31, D = 120,
///    (m, n) = (1, 1), and D extends to a verified quadruple.
#[test]
fn criterion_4_intersection_oracle() {
    let pt = pell::make_pell_triple(&nat(1), &nat(3), &nat(8)).unwrap();
    let start = Instant::now();
    let scan = pell::find_intersections(&pt, 10).unwrap();
    let elapsed = start.elapsed();
    let one = scan.witnesses.len() == 1 && scan.anomalies.is_empty();
    let w = &scan.witnesses[0];
    let pass = one
        && w.lambda == -1
        && w.z == 31.into()
        && w.d == nat(120)
        && (w.m(), w.n()) == (1, 1)
        && pell::witness_extends_to_quadruple(&pt, w).unwrap()
        && elapsed.as_millis() < 10;
    report("4 intersection oracle on (1,3,8)", pass);
}

/// 5. Lemma property suite: every witness over all triples with c ≤ 200 and
///    indices ≤ 20 satisfies n ≤ m ≤ 2n and the mod-4C congruence.
#[test]
fn criterion_5_lemma_properties() {
    let start = Instant::now();
    let triples = tuples::enumerate_tuples(&nat(200), 3).unwrap();
    let mut witnesses = 0usize;
    let mut violations = 0usize;
    for t in &triples {
        let pt = pell::make_pell_triple(&t[0], &t[1], &t[2]).unwrap();
        let scan = pell::find_intersections(&pt, 20).unwrap();
        violations += scan.anomalies.len();
        witnesses += scan.witnesses.len();
        for w in &scan.witnesses {
            let ctx = lemmas::LemmaContext::from_witness(&pt, w);
            if !lemmas::index_relation_holds(ctx.m, ctx.n) || !lemmas::congruence_holds(&ctx) {
                violations += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = violations == 0 && witnesses > 0 && !triples.is_empty() && elapsed.as_secs() < 60;
    report("5 lemma property suite (c <= 200, indices <= 20)", pass);
}

/// 6. Gap-lemma inequality: the proof's final display holds on a log grid
///    B ∈ {8, …, 10^10}, C ∈ [B, 10^80], and fails for some B < 8.
#[test]
fn criterion_6_gap_inequality() {
    let start = Instant::now();
    let mut all_hold = true;
    let mut grid_points = 0usize;
    let mut bs = vec![nat(8)];
    for e in 1..=10u32 {
        let b = Nat::from(10u32).pow(e);
        if b >= nat(8) {
            bs.push(b);
        }
    }
    for b in &bs {
        let mut c = b.clone();
        let cap = Nat::from(10u32).pow(80);
        while c <= cap {
            all_hold &= lemmas::proof_step_inequality(b, &c).holds;
            grid_points += 1;
            c *= 10u32;
        }
    }
    let below_8_fails = !lemmas::proof_step_inequality(&nat(2), &nat(1000)).holds;
    let elapsed = start.elapsed();
    let pass = all_hold && below_8_fails && grid_points > 500 && elapsed.as_secs_f64() < 1.0;
    report("6 gap-lemma inequality grid", pass);
}

/// 7. Desk-scale conjecture evidence: no quintuple with elements ≤ 1000,
///    while the quadruple search finds {1,3,8,120} and {2,4,12,420}.
#[test]
fn criterion_7_desk_scale_search() {
    let start = Instant::now();
    let quints = tuples::enumerate_tuples(&nat(1000), 5).unwrap();
    let quads = tuples::enumerate_tuples(&nat(1000), 4).unwrap();
    let elapsed = start.elapsed();
    let (code5, out5) = cli(&["--json", "search", "--limit", "1000", "--size", "5"]);
    let v5: serde_json::Value = serde_json::from_str(&out5).unwrap();
    let fermat: Vec<Nat> = vec![nat(1), nat(3), nat(8), nat(120)];
    let second: Vec<Nat> = vec![nat(2), nat(4), nat(12), nat(420)];
    let pass = quints.is_empty()
        && quads.contains(&fermat)
        && quads.contains(&second)
        && code5 == Some(0)
        && v5["count"] == 0
        && elapsed.as_secs() < 60;
    report("7 desk-scale conjecture evidence (limit 1000)", pass);
}

/// 8. Regular-extension gap: for every triple at limit 200, d⁺ > 4abc and
///    the quadruple {a,b,c,d⁺} satisfies 4b² < d⁺.
#[test]
fn criterion_8_regular_extension_gap() {
    let start = Instant::now();
    let triples = tuples::enumerate_tuples(&nat(200), 3).unwrap();
    let mut pass = !triples.is_empty();
    for t in &triples {
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        let d = tuples::regular_extension(a, b, c).unwrap();
        pass &= d > a * b * c * 4u32;
        pass &= bounds::b_bound_from_gap(b, &d);
        let quad = vec![a.clone(), b.clone(), c.clone(), d.clone()];
        pass &= tuples::verify_tuple(&quad).unwrap().ok;
    }
    let elapsed = start.elapsed();
    pass &= elapsed.as_secs() < 10;
    report("8 regular-extension gap at limit 200", pass);
}
