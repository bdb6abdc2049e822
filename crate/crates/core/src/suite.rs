//! Aggregate regression suite: every computational claim the library rests
//! on, bundled into one deterministic report.
//!
//! Each entry is a named [`CheckResult`]; randomized checks draw from a
//! ChaCha generator seeded per-check from the suite seed, so the report is
//! byte-identical for identical options at any thread count.  Failures are
//! report entries, not errors — the only hard errors are unusable options
//! (e.g. a modulus too small to build the standard families).

use std::cmp::Ordering;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{
    certify_gamma_example, certify_prop6, certify_theorem2, cone_refute, theorem2_families,
    ConeOptions, ProvidedWitness, SearchMode, Theorem2Params,
};
use crate::gamma::{gamma_alphabet, standard_families, GammaElement, LatticeBasis};
use crate::group::{CyclicGroup, FreeGroup, GammaGroup, Group};
use crate::hnn::{CyclicSubgroup, HnnExtension, HnnGroup};
use crate::report::{CheckResult, Report, RowStatus, Verdict, REPORTED_ONLY_NOTE};
use crate::runner::RunnerError;
use crate::scenario::parse_scenario;
use crate::stallings::SubgroupGraph;
use crate::unipotent::{antidiagonal_stats, embed_heisenberg, random_integer, UnipotentMatrix};
use crate::word::{Alphabet, SignedSubset, Word};
use crate::{heis, runner};

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Modulus for the Γₙ constructions (n ≥ 12; the order and torsion
    /// checks also run at n+1).
    pub n: usize,
    /// Search depth for the list certificates.
    pub depth: usize,
    pub threads: usize,
    /// Seed for the randomized property checks; recorded in the report.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions { n: 12, depth: 6, threads: 1, seed: 2024 }
    }
}

fn rng_for(opts: &SuiteOptions, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ stream)
}

/// Runs the full suite.  Errors only on unusable options; every claim
/// failure is a `passed: false` entry in the returned report.
pub fn verify_paper(opts: &SuiteOptions) -> Result<Report, RunnerError> {
    // Fail fast on options the constructions cannot support.
    standard_families(opts.n)?;

    let mut checks = Vec::new();
    checks.push(free_family_ranks());
    checks.push(free_pairing_certificates(opts));
    checks.push(gamma_family_canonical_forms(opts.n));
    checks.push(gamma_family_lattices(opts.n));
    checks.push(gamma_family_sign_patterns(opts.n));
    checks.push(gamma_order_axioms(opts));
    checks.push(gamma_torsion_samples(opts));
    checks.push(heisenberg_square_identities());
    checks.push(heisenberg_torsion_scan());
    checks.push(heisenberg_list_certificates(opts));
    checks.push(baumslag_solitar_answers());
    checks.push(relator_replay_across_backends(opts));
    checks.push(klein_bottle_control(opts));
    checks.push(gamma_pairing_certificates(opts));
    checks.push(strict_upper_order_axioms(opts));
    checks.push(matrix_embedding_cross_check(opts));
    checks.push(antidiagonal_rule_statistics(opts));
    checks.push(tampered_pairing_control(opts));

    let mut report = Report::new("verify-paper", Verdict::ChecksOnly);
    report.seed = Some(opts.seed);
    report.notes.push(REPORTED_ONLY_NOTE.to_string());
    report.checks = checks;
    Ok(report)
}

fn check(name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult::new(name, passed, detail)
}

fn free_family_ranks() -> CheckResult {
    let run = || -> Result<(usize, usize), RunnerError> {
        let (u_words, v_words) = theorem2_families(&Theorem2Params::default())?;
        let ab = u_words[0].alphabet().clone();
        let a = SubgroupGraph::build(&ab, &u_words)?;
        let b = SubgroupGraph::build(&ab, &v_words)?;
        Ok((a.rank(), b.rank()))
    };
    match run() {
        Ok((ra, rb)) => check(
            "free family ranks",
            ra == 8 && rb == 8,
            format!("rank(<u_1..u_8>) = {ra}, rank(<v_1..v_8>) = {rb}, want (8, 8)"),
        ),
        Err(e) => check("free family ranks", false, format!("construction failed: {e}")),
    }
}

fn free_pairing_certificates(opts: &SuiteOptions) -> CheckResult {
    match certify_theorem2(&Theorem2Params::default(), opts.depth, opts.threads) {
        Ok(outcome) => {
            let verified =
                outcome.rows.iter().filter(|r| r.status == RowStatus::Verified).count();
            check(
                "free pairing certificates",
                outcome.verdict == Verdict::NotLeftOrderable && verified == 16,
                format!("{verified}/16 assignments carry verified witnesses"),
            )
        }
        Err(e) => check("free pairing certificates", false, format!("failed: {e}")),
    }
}

/// Closed forms for the standard families, uniform in n: the word with s-
/// exponent sum ±n and x-letters at the predicted positions.
fn expected_family_forms(n: usize) -> Vec<(Word, GammaElement)> {
    let fam = standard_families(n).expect("n was validated");
    let nn = n as i64;
    let exps = |entries: &[(usize, i64)]| -> Vec<i64> {
        let mut v = vec![0i64; n];
        for &(i, c) in entries {
            v[i] = c;
        }
        v
    };
    let mut out = Vec::new();
    for (i, w) in fam.f_words.iter().enumerate() {
        let m = 1usize << i;
        let positions: Vec<(usize, i64)> = (n - m..n).map(|k| (k, 1)).collect();
        out.push((
            w.clone(),
            GammaElement::new(n, nn, exps(&positions)).expect("length n"),
        ));
    }
    let g_forms: Vec<(i64, Vec<(usize, i64)>)> = vec![
        (nn, vec![(n - 1, 1)]),
        (nn, vec![(n - 2, -1), (n - 1, -1)]),
        (-nn, (1..=4).map(|k| (k, 1)).collect()),
        (-nn, (1..=8).map(|k| (k, -1)).collect()),
    ];
    for (w, (shift, entries)) in fam.g_words.iter().zip(g_forms) {
        out.push((w.clone(), GammaElement::new(n, shift, exps(&entries)).expect("length n")));
    }
    out
}

fn gamma_family_canonical_forms(n: usize) -> CheckResult {
    let mut bad = Vec::new();
    for (idx, (word, want)) in expected_family_forms(n).iter().enumerate() {
        match GammaElement::eval(n, word) {
            Ok(got) if &got == want => {}
            Ok(got) => bad.push(format!("entry {idx}: {got} != {want}")),
            Err(e) => bad.push(format!("entry {idx}: {e}")),
        }
    }
    check(
        "gamma family canonical forms",
        bad.is_empty(),
        if bad.is_empty() {
            format!("all 8 family words at n = {n} match their closed canonical forms")
        } else {
            bad.join("; ")
        },
    )
}

fn gamma_family_lattices(n: usize) -> CheckResult {
    let fam = standard_families(n).expect("n was validated");
    let build = |elems: Vec<GammaElement>| LatticeBasis::build(n, elems);
    match (build(fam.f.clone()), build(fam.g.clone())) {
        (Ok(a), Ok(b)) => check(
            "gamma family lattices",
            a.rank() == 4 && b.rank() == 4,
            format!(
                "families commute; lattice ranks {} and {}, want (4, 4)",
                a.rank(),
                b.rank()
            ),
        ),
        (a, b) => {
            let msg = [a.err(), b.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            check("gamma family lattices", false, format!("construction failed: {msg}"))
        }
    }
}

fn gamma_family_sign_patterns(n: usize) -> CheckResult {
    let fam = standard_families(n).expect("n was validated");
    let ab = gamma_alphabet();
    let all_patterns: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
    let subset = |p: (i8, i8)| SignedSubset::from_signs(&ab, &[p.0, p.1]);
    let mut problems = Vec::new();

    for (i, f) in fam.f_words.iter().enumerate() {
        if !f.is_positive_word(&subset((1, 1))) {
            problems.push(format!("f_{} is not positive in (+,+)", i + 1));
        }
    }
    let mut seen = Vec::new();
    for (i, g) in fam.g_words.iter().enumerate() {
        let matches: Vec<(i8, i8)> = all_patterns
            .iter()
            .copied()
            .filter(|p| g.is_positive_word(&subset(*p)))
            .collect();
        if matches.len() != 1 {
            problems.push(format!("g_{} matches {} sign patterns", i + 1, matches.len()));
        } else {
            if matches[0] != fam.g_patterns[i] {
                problems.push(format!("g_{} pattern disagrees with the recorded one", i + 1));
            }
            seen.push(matches[0]);
        }
    }
    seen.sort();
    seen.dedup();
    if seen.len() != 4 {
        problems.push("g-family does not cover all four sign patterns".to_string());
    }
    check(
        "gamma family sign patterns",
        problems.is_empty(),
        if problems.is_empty() {
            "f-family positive in (+,+); g-family realises each sign pattern exactly once"
                .to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn random_gamma(n: usize, rng: &mut ChaCha8Rng) -> GammaElement {
    let shift = rng.gen_range(-30i64..=30);
    let exps: Vec<i64> = (0..n).map(|_| rng.gen_range(-20i64..=20)).collect();
    GammaElement::new(n, shift, exps).expect("length n")
}

fn gamma_order_axioms(opts: &SuiteOptions) -> CheckResult {
    let mut rng = rng_for(opts, 0x01);
    let mut failures = Vec::new();
    let mut samples = 0usize;
    for n in [opts.n, opts.n + 1] {
        for _ in 0..5_000 {
            samples += 1;
            let g = random_gamma(n, &mut rng);
            let h = random_gamma(n, &mut rng);
            let k = random_gamma(n, &mut rng);
            let gh = g.compare(&h).expect("same modulus");
            // Antisymmetry / trichotomy: comparing the other way reverses.
            if h.compare(&g).expect("same modulus") != gh.reverse() {
                failures.push(format!("antisymmetry fails at n={n}: {g}, {h}"));
                break;
            }
            if (gh == Ordering::Equal) != (g == h) {
                failures.push(format!("equality mismatch at n={n}: {g}, {h}"));
                break;
            }
            // Positive cone closed under products.
            if g.is_positive() && h.is_positive() && !g.mul(&h).expect("same modulus").is_positive()
            {
                failures.push(format!("cone not closed at n={n}: {g}, {h}"));
                break;
            }
            // Left-invariance: k·g vs k·h orders like g vs h.
            let kg = k.mul(&g).expect("same modulus");
            let kh = k.mul(&h).expect("same modulus");
            if kg.compare(&kh).expect("same modulus") != gh {
                failures.push(format!("left-invariance fails at n={n}: {k}, {g}, {h}"));
                break;
            }
            // Transitivity through a sorted triple.
            let hk = h.compare(&k).expect("same modulus");
            if gh == Ordering::Less && hk == Ordering::Less {
                if g.compare(&k).expect("same modulus") != Ordering::Less {
                    failures.push(format!("transitivity fails at n={n}"));
                    break;
                }
            }
        }
    }
    check(
        "gamma order axioms",
        failures.is_empty(),
        if failures.is_empty() {
            format!("trichotomy, closure, left-invariance, transitivity on {samples} samples")
        } else {
            failures.join("; ")
        },
    )
}

fn gamma_torsion_samples(opts: &SuiteOptions) -> CheckResult {
    let mut rng = rng_for(opts, 0x02);
    let mut tested = 0usize;
    for n in [opts.n, opts.n + 1] {
        for _ in 0..500 {
            let mut g = random_gamma(n, &mut rng);
            if g.is_identity() {
                g = GammaElement::gen_s(n);
            }
            tested += 1;
            for k in 1..=20i64 {
                if g.pow(k).is_identity() {
                    return check(
                        "gamma torsion samples",
                        false,
                        format!("{g} has order dividing {k} at n={n}"),
                    );
                }
            }
        }
    }
    check(
        "gamma torsion samples",
        true,
        format!("g^k != 1 for {tested} nonidentity elements, 1 <= k <= 20"),
    )
}

fn heisenberg_square_identities() -> CheckResult {
    use heis::HeisElement;
    let t = HeisElement::gen_t();
    let z = HeisElement::gen_z();
    let mut problems = Vec::new();

    if t.mul(&t) != z {
        problems.push("t^2 != z".to_string());
    }
    // (t x^n)^2 = z for even |n| <= 8.
    for nn in (-8i64..=8).filter(|v| v % 2 == 0) {
        let g = t.mul(&HeisElement::gen_x().pow(nn));
        if g.mul(&g) != z {
            problems.push(format!("(t x^{nn})^2 != z"));
        }
    }
    // (t x^n y^m)^2 = z^(mn+1), |n|, |m| <= 6.
    for nn in -6i64..=6 {
        for m in -6i64..=6 {
            let g = t.mul(&HeisElement::gen_x().pow(nn)).mul(&HeisElement::gen_y().pow(m));
            if g.mul(&g) != z.pow(m * nn + 1) {
                problems.push(format!("(t x^{nn} y^{m})^2 != z^{}", m * nn + 1));
            }
            if heis::t_square_exponent(nn, m) != m * nn + 1 {
                problems.push(format!("square exponent helper disagrees at ({nn}, {m})"));
            }
        }
    }
    // (t x^(2p) y^q z^r)^2 = z^(2pq + 2r + 1) != 1, |p|, |q|, |r| <= 5.
    for p in -5i64..=5 {
        for q in -5i64..=5 {
            for r in -5i64..=5 {
                let g = HeisElement::new(true, 2 * p, q, r);
                let sq = g.mul(&g);
                let e = 2 * p * q + 2 * r + 1;
                if sq != z.pow(e) {
                    problems.push(format!("(t x^{} y^{q} z^{r})^2 != z^{e}", 2 * p));
                }
                if sq.is_identity() {
                    problems.push(format!("square of t x^{} y^{q} z^{r} is trivial", 2 * p));
                }
            }
        }
    }
    check(
        "heisenberg square identities",
        problems.is_empty(),
        if problems.is_empty() {
            "t^2 = z; (t x^n)^2 = z; (t x^n y^m)^2 = z^(mn+1); \
             (t x^2p y^q z^r)^2 = z^(2pq+2r+1) != 1 on the full grids"
                .to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn heisenberg_torsion_scan() -> CheckResult {
    match heis::torsion_witness(3, 6) {
        None => check(
            "heisenberg torsion scan",
            true,
            "no even-x element of norm <= 3 has order dividing k <= 6".to_string(),
        ),
        Some((g, k)) => {
            check("heisenberg torsion scan", false, format!("{g} has order dividing {k}"))
        }
    }
}

fn heisenberg_list_certificates(opts: &SuiteOptions) -> CheckResult {
    match certify_gamma_example(opts.depth, opts.threads) {
        Ok(outcome) => {
            let verified =
                outcome.rows.iter().filter(|r| r.status == RowStatus::Verified).count();
            check(
                "heisenberg list certificates",
                outcome.verdict == Verdict::NotLeftOrderable && verified == 16,
                format!(
                    "{verified}/16 assignments verified at depth {} over {{t, y, t x^2, t x^-2}}",
                    opts.depth
                ),
            )
        }
        Err(e) => check("heisenberg list certificates", false, format!("failed: {e}")),
    }
}

/// The two solvable Baumslag–Solitar pinch answers, over the free-group
/// backend: t a t^-1 a^-2 = 1 and t^-1 a t irreducible.
fn baumslag_solitar_answers() -> CheckResult {
    let run = || -> Result<(bool, bool), RunnerError> {
        let ab = Alphabet::new(&["a"])?;
        let a = Word::parse(&ab, "a")?;
        let a2 = Word::parse(&ab, "a^2")?;
        let a_side = SubgroupGraph::build(&ab, std::slice::from_ref(&a))?;
        let b_side = SubgroupGraph::build(&ab, std::slice::from_ref(&a2))?;
        let ext = Arc::new(HnnExtension::new(FreeGroup::new(ab), a_side, b_side)?);
        let relator = ext.parse("t a t^-1 a^-2")?;
        let inner = ext.parse("t^-1 a t")?;
        Ok((ext.is_identity(&relator), ext.is_identity(&inner)))
    };
    match run() {
        Ok((relator_trivial, inner_trivial)) => check(
            "baumslag-solitar britton answers",
            relator_trivial && !inner_trivial,
            format!(
                "t a t^-1 a^-2 = 1: {relator_trivial}; t^-1 a t = 1: {inner_trivial} (want true, false)"
            ),
        ),
        Err(e) => check("baumslag-solitar britton answers", false, format!("failed: {e}")),
    }
}

/// Random relator instances t·a·t^-1·φ(a)^-1 over all three oracle backends:
/// Stallings graphs, cyclic steps, and Γₙ lattices.
fn relator_replay_across_backends(opts: &SuiteOptions) -> CheckResult {
    let mut rng = rng_for(opts, 0x03);
    let mut failures = Vec::new();
    let mut count = 0usize;

    let free = || -> Result<HnnExtension<FreeGroup, SubgroupGraph>, RunnerError> {
        let ab = Alphabet::new(&["a"])?;
        let gen = Word::parse(&ab, "a")?;
        let sq = Word::parse(&ab, "a^2")?;
        let a_side = SubgroupGraph::build(&ab, std::slice::from_ref(&gen))?;
        let b_side = SubgroupGraph::build(&ab, std::slice::from_ref(&sq))?;
        Ok(HnnExtension::new(FreeGroup::new(ab), a_side, b_side)?)
    };
    match free() {
        Ok(ext) => {
            let ab = match ext.base().parse_elem("a") {
                Ok(w) => w.alphabet().clone(),
                Err(_) => unreachable!("single-letter alphabet parses"),
            };
            for _ in 0..334 {
                count += 1;
                let k = rng.gen_range(-40i64..=40);
                let a = Word::reduce(&ab, &[(0, k)]).expect("valid letter");
                let phi = ext.phi(&a).expect("a-side member");
                let prod = ext.mul(
                    &ext.mul(&ext.mul(&ext.t_power(1), &ext.from_base(a)), &ext.t_power(-1)),
                    &ext.from_base(phi.invert()),
                );
                if !ext.is_identity(&prod) {
                    failures.push(format!("free backend fails at a^{k}"));
                    break;
                }
            }
        }
        Err(e) => failures.push(format!("free backend construction: {e}")),
    }

    let cyclic = || -> Result<HnnExtension<CyclicGroup, CyclicSubgroup>, RunnerError> {
        Ok(HnnExtension::new(CyclicGroup::new("a")?, CyclicSubgroup::new(1)?, CyclicSubgroup::new(2)?)?)
    };
    match cyclic() {
        Ok(ext) => {
            for _ in 0..334 {
                count += 1;
                let k = rng.gen_range(-1000i64..=1000);
                let phi = ext.phi(&k).expect("everything is a multiple of 1");
                let prod = ext.mul(
                    &ext.mul(&ext.mul(&ext.t_power(1), &ext.from_base(k)), &ext.t_power(-1)),
                    &ext.from_base(-phi),
                );
                if !ext.is_identity(&prod) {
                    failures.push(format!("cyclic backend fails at {k}"));
                    break;
                }
            }
        }
        Err(e) => failures.push(format!("cyclic backend construction: {e}")),
    }

    let lattice = || -> Result<HnnExtension<GammaGroup, LatticeBasis>, RunnerError> {
        let fam = standard_families(opts.n)?;
        let a_side = LatticeBasis::build(opts.n, fam.f)?;
        let b_side = LatticeBasis::build(opts.n, fam.g)?;
        Ok(HnnExtension::new(GammaGroup::new(opts.n), a_side, b_side)?)
    };
    match lattice() {
        Ok(ext) => {
            for _ in 0..334 {
                count += 1;
                let coeffs: Vec<i64> = (0..4).map(|_| rng.gen_range(-3i64..=3)).collect();
                let mut a = GammaElement::identity(opts.n);
                for (f, c) in ext.a_side().generators().iter().zip(&coeffs) {
                    a = a.mul(&f.pow(*c)).expect("same modulus");
                }
                let phi = match ext.phi(&a) {
                    Some(p) => p,
                    None => {
                        failures.push(format!("lattice member not recognised: {a}"));
                        break;
                    }
                };
                let prod = ext.mul(
                    &ext.mul(&ext.mul(&ext.t_power(1), &ext.from_base(a)), &ext.t_power(-1)),
                    &ext.from_base(phi.inv()),
                );
                if !ext.is_identity(&prod) {
                    failures.push(format!("lattice backend fails at coefficients {coeffs:?}"));
                    break;
                }
            }
        }
        Err(e) => failures.push(format!("lattice backend construction: {e}")),
    }

    check(
        "relator replay across oracle backends",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{count} random relator instances reduce to the identity")
        } else {
            failures.join("; ")
        },
    )
}

const KLEIN_SCENARIO: &str = "\
name klein_bottle
base cyclic b
agen b
bgen b^-1
elem u = t
elem v = b
depth 10
mode bfs
expect INCONCLUSIVE
";

fn klein_bottle_control(opts: &SuiteOptions) -> CheckResult {
    let run = || -> Result<Report, RunnerError> {
        let scenario = parse_scenario(KLEIN_SCENARIO)?;
        runner::run_scenario(
            &scenario,
            &runner::RunOptions { threads: Some(opts.threads), ..Default::default() },
        )
    };
    match run() {
        Ok(report) => {
            let exhausted = report
                .assignments
                .iter()
                .filter(|r| matches!(r.status, RowStatus::Exhausted { .. }))
                .count();
            check(
                "klein bottle control",
                report.verdict == Verdict::Inconclusive
                    && !report.any_verification_failure()
                    && exhausted > 0,
                format!(
                    "left-orderable control: verdict {}, {exhausted}/4 assignments exhausted at depth 10",
                    report.verdict
                ),
            )
        }
        Err(e) => check("klein bottle control", false, format!("failed: {e}")),
    }
}

fn gamma_pairing_certificates(opts: &SuiteOptions) -> CheckResult {
    match certify_prop6(opts.n, opts.depth, opts.threads) {
        Ok(outcome) => {
            let verified = outcome
                .rows
                .iter()
                .filter(|r| r.status == RowStatus::Verified && !r.reported_only)
                .count();
            let reported = outcome.rows.iter().filter(|r| r.reported_only).count();
            let failed = outcome.any_failure();
            check(
                "gamma pairing certificates",
                verified == 8 && reported == 8 && !failed,
                format!(
                    "{verified}/8 unmixed assignments verified; {reported} mixed assignments \
                     searched to depth {} and reported only",
                    opts.depth
                ),
            )
        }
        Err(e) => check("gamma pairing certificates", false, format!("failed: {e}")),
    }
}

fn strict_upper_order_axioms(opts: &SuiteOptions) -> CheckResult {
    let mut rng = rng_for(opts, 0x04);
    let mut samples = 0usize;
    for m in 2..=6usize {
        for _ in 0..2_500 {
            samples += 1;
            let a = random_integer(m, 5, &mut rng);
            let b = random_integer(m, 5, &mut rng);
            let c = random_integer(m, 5, &mut rng);
            let ab = a.compare(&b).expect("same size");
            if b.compare(&a).expect("same size") != ab.reverse() {
                return check(
                    "strict-upper order axioms",
                    false,
                    format!("antisymmetry fails at m={m}"),
                );
            }
            if (ab == Ordering::Equal) != (a == b) {
                return check(
                    "strict-upper order axioms",
                    false,
                    format!("equality mismatch at m={m}"),
                );
            }
            if a.is_positive()
                && b.is_positive()
                && !a.mul(&b).expect("same size").is_positive()
            {
                return check(
                    "strict-upper order axioms",
                    false,
                    format!("cone not closed at m={m}"),
                );
            }
            // Bi-invariance: conjugation and two-sided translation preserve order.
            let ca = c.mul(&a).expect("same size").mul(&c.inv()).expect("same size");
            let cb = c.mul(&b).expect("same size").mul(&c.inv()).expect("same size");
            if ca.compare(&cb).expect("same size") != ab {
                return check(
                    "strict-upper order axioms",
                    false,
                    format!("conjugation breaks the order at m={m}"),
                );
            }
            let bc = b.compare(&c).expect("same size");
            if ab == Ordering::Less
                && bc == Ordering::Less
                && a.compare(&c).expect("same size") != Ordering::Less
            {
                return check(
                    "strict-upper order axioms",
                    false,
                    format!("transitivity fails at m={m}"),
                );
            }
        }
    }
    check(
        "strict-upper order axioms",
        true,
        format!("trichotomy, closure, bi-invariance, transitivity on {samples} integer samples"),
    )
}

fn matrix_embedding_cross_check(opts: &SuiteOptions) -> CheckResult {
    use heis::HeisElement;
    let mut rng = rng_for(opts, 0x05);
    let ab = match Alphabet::new(&["x", "y", "z"]) {
        Ok(ab) => ab,
        Err(e) => {
            return check("matrix embedding cross-check", false, format!("alphabet: {e}"))
        }
    };
    let gens = [HeisElement::gen_x(), HeisElement::gen_y(), HeisElement::gen_z()];
    let images: Vec<UnipotentMatrix> = match gens
        .iter()
        .map(embed_heisenberg)
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(v) => v,
        Err(e) => {
            return check("matrix embedding cross-check", false, format!("images: {e}"))
        }
    };
    for i in 0..1_000 {
        let len = rng.gen_range(1..=12);
        let raw: Vec<(usize, i64)> =
            (0..len).map(|_| (rng.gen_range(0..3), rng.gen_range(-3i64..=3))).collect();
        let word = match Word::reduce(&ab, &raw) {
            Ok(w) => w,
            Err(_) => continue,
        };
        let mut elem = HeisElement::identity();
        for (gen, sign) in word.letters() {
            let letter = if sign == 1 { gens[gen] } else { gens[gen].inv() };
            elem = elem.mul(&letter);
        }
        let via_elem = match embed_heisenberg(&elem) {
            Ok(m) => m,
            Err(e) => {
                return check(
                    "matrix embedding cross-check",
                    false,
                    format!("sample {i}: {e}"),
                )
            }
        };
        let via_word = match crate::unipotent::evaluate_word(&images, &word) {
            Ok(m) => m,
            Err(e) => {
                return check(
                    "matrix embedding cross-check",
                    false,
                    format!("sample {i}: {e}"),
                )
            }
        };
        if via_elem != via_word {
            return check(
                "matrix embedding cross-check",
                false,
                format!("sample {i}: matrix product disagrees with the embedded normal form"),
            );
        }
    }
    check(
        "matrix embedding cross-check",
        true,
        "1000 random words evaluate identically through the group and through 3x3 matrices"
            .to_string(),
    )
}

fn antidiagonal_rule_statistics(opts: &SuiteOptions) -> CheckResult {
    let mut rng = rng_for(opts, 0x06);
    let stats = antidiagonal_stats(4, 400, 2, &mut rng);
    check(
        "antidiagonal rule statistics",
        stats.closure_violations == 0 && stats.conjugation_violations > 0,
        format!(
            "product closure {}/{} clean; conjugation invariance violated {}/{} times \
             (the rule orders a semigroup, not the group)",
            stats.closure_checked - stats.closure_violations,
            stats.closure_checked,
            stats.conjugation_violations,
            stats.conjugation_checked
        ),
    )
}

/// Negative control: witnesses built for the true pairing must fail when the
/// first two B-side generators are swapped.
fn tampered_pairing_control(opts: &SuiteOptions) -> CheckResult {
    let run = || -> Result<(usize, usize), RunnerError> {
        let honest = certify_theorem2(&Theorem2Params::default(), opts.depth, opts.threads)?;
        let witnesses: Vec<ProvidedWitness> = honest
            .rows
            .iter()
            .map(|r| ProvidedWitness {
                signs: crate::cone::parse_signs(&r.signs).expect("engine-produced signs"),
                indices: r.witness.clone().expect("all rows verified"),
            })
            .collect();

        let (u_words, mut v_words) = theorem2_families(&Theorem2Params::default())?;
        v_words.swap(0, 1);
        let ab = u_words[0].alphabet().clone();
        let a_side = SubgroupGraph::build(&ab, &u_words)?;
        let b_side = SubgroupGraph::build(&ab, &v_words)?;
        let ext = Arc::new(HnnExtension::new(FreeGroup::new(ab.clone()), a_side, b_side)?);
        let group = HnnGroup::new(ext.clone());

        let mut elements = Vec::new();
        for i in 0..2 {
            let base = ext.base().parse_elem(ab.name(i))?;
            elements.push((ab.name(i).to_string(), ext.from_base(base)));
        }
        for i in 0..2 {
            let base = ext.base().parse_elem(ab.name(i))?;
            let conj =
                ext.mul(&ext.mul(&ext.t_power(1), &ext.from_base(base)), &ext.t_power(-1));
            elements.push((format!("t {} t^-1", ab.name(i)), conj));
        }
        let outcome = cone_refute(
            &group,
            &elements,
            &witnesses,
            ConeOptions { depth: opts.depth, mode: SearchMode::Verify, threads: opts.threads },
        )?;
        let failed = outcome
            .rows
            .iter()
            .filter(|r| matches!(r.status, RowStatus::Failed { .. }))
            .count();
        Ok((failed, outcome.rows.len()))
    };
    match run() {
        Ok((failed, total)) => check(
            "tampered pairing control",
            failed > 0,
            format!(
                "{failed}/{total} replayed witnesses fail verification under the permuted pairing"
            ),
        ),
        Err(e) => check("tampered pairing control", false, format!("failed: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes_at_default_options() {
        let report = verify_paper(&SuiteOptions::default()).unwrap();
        let failing: Vec<&CheckResult> =
            report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failing.is_empty(), "failing checks: {failing:#?}");
        assert_eq!(report.verdict, Verdict::ChecksOnly);
        assert_eq!(report.checks.len(), 18);
        assert_eq!(report.seed, Some(2024));
    }

    #[test]
    fn suite_is_deterministic_and_uniform_in_thread_count() {
        let one = verify_paper(&SuiteOptions { threads: 1, ..Default::default() }).unwrap();
        let four = verify_paper(&SuiteOptions { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(one.to_json(), four.to_json());
    }

    #[test]
    fn suite_runs_at_thirteen() {
        let report =
            verify_paper(&SuiteOptions { n: 13, depth: 4, ..Default::default() }).unwrap();
        // The list certificates need depth 6; everything structural must
        // still hold at n = 13, and shallow searches must not fail checks
        // that merely report.
        for c in &report.checks {
            if c.name == "heisenberg list certificates" {
                continue;
            }
            assert!(c.passed, "check `{}` failed at n = 13: {}", c.name, c.detail);
        }
    }

    #[test]
    fn modulus_below_twelve_is_an_input_error() {
        assert!(verify_paper(&SuiteOptions { n: 11, ..Default::default() }).is_err());
    }
}
