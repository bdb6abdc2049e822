//! Scenario execution: build the group a [`Scenario`] describes, run its
//! group checks, run the cone phase, and map the outcome to an exit code.
//!
//! Exit codes: `0` when the verdict matches the expectation (or none was
//! stated), `1` when any witness or group check fails verification — or when
//! a refutation appears where `INCONCLUSIVE` was expected — `2` when the run
//! is `INCONCLUSIVE` but a refutation was expected, and `3` (assigned by the
//! caller) for input errors.

use std::sync::Arc;

use thiserror::Error;

use crate::cone::{
    certify_conjugation_list, cone_refute, ConeError, ConeOptions, ProvidedWitness, SearchMode,
};
use crate::gamma::{gamma_alphabet, GammaElement, GammaError, LatticeBasis};
use crate::group::{
    CyclicGroup, FreeGroup, GammaGroup, Group, GroupError, HeisGroup, UnipotentGroup,
};
use crate::hnn::{CyclicSubgroup, HnnError, HnnExtension, HnnGroup, SubgroupOracle};
use crate::report::{CheckResult, Report, Verdict};
use crate::scenario::{BaseSpec, Scenario, ScenarioError, ScenarioMode, DEFAULT_DEPTH};
use crate::stallings::{FoldError, SubgroupGraph};
use crate::word::{Alphabet, Word, WordError};

#[derive(Debug, Error)]
pub enum RunnerError {
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hnn(#[from] HnnError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Fold(#[from] FoldError),
    #[error("element `{name}`: {source}")]
    Element { name: String, source: GroupError },
}

/// Command-line overrides; scenario values fill whatever is left unset.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub depth: Option<usize>,
    pub threads: Option<usize>,
    pub seed: Option<u64>,
}

impl RunOptions {
    fn depth_for(&self, scenario: &Scenario) -> usize {
        self.depth.or(scenario.depth).unwrap_or(DEFAULT_DEPTH)
    }

    fn threads_or_one(&self) -> usize {
        self.threads.unwrap_or(1).max(1)
    }
}

pub fn run_scenario(scenario: &Scenario, opts: &RunOptions) -> Result<Report, RunnerError> {
    let mut report = match (&scenario.base, scenario.is_hnn()) {
        (BaseSpec::Free { letters }, true) => run_free_hnn(letters, scenario, opts)?,
        (BaseSpec::Gamma { n }, true) => run_gamma_hnn(*n, scenario, opts)?,
        (BaseSpec::Cyclic { letter }, true) => run_cyclic_hnn(letter, scenario, opts)?,
        (BaseSpec::Free { letters }, false) => {
            let ab = Alphabet::new(letters)?;
            cone_phase(&FreeGroup::new(ab), scenario, opts, Vec::new())?
        }
        (BaseSpec::Gamma { n }, false) => {
            cone_phase(&GammaGroup::new(*n), scenario, opts, Vec::new())?
        }
        (BaseSpec::Cyclic { letter }, false) => {
            cone_phase(&CyclicGroup::new(letter)?, scenario, opts, Vec::new())?
        }
        (BaseSpec::Heis, _) => cone_phase(&HeisGroup, scenario, opts, Vec::new())?,
        (BaseSpec::Unipotent { m }, _) => {
            cone_phase(&UnipotentGroup::new(*m)?, scenario, opts, Vec::new())?
        }
    };
    report.seed = opts.seed.or(scenario.seed);
    Ok(report)
}

/// See the module doc for the mapping.  Input errors never reach this
/// function — they surface as [`RunnerError`] and the caller reports `3`.
pub fn exit_code(report: &Report, expect: Option<Verdict>) -> u8 {
    if report.any_verification_failure() || report.any_check_failed() {
        return 1;
    }
    match expect {
        None => 0,
        Some(e) if e == report.verdict => 0,
        Some(Verdict::NotLeftOrderable) if report.verdict == Verdict::Inconclusive => 2,
        Some(_) => 1,
    }
}

fn parse_elements<G: Group>(
    group: &G,
    scenario: &Scenario,
) -> Result<Vec<(String, G::Elem)>, RunnerError> {
    scenario
        .elements
        .iter()
        .map(|(name, text)| match group.parse_elem(text) {
            Ok(elem) => Ok((name.clone(), elem)),
            Err(source) => Err(RunnerError::Element { name: name.clone(), source }),
        })
        .collect()
}

fn provided_witnesses(scenario: &Scenario) -> Vec<ProvidedWitness> {
    scenario
        .witnesses
        .iter()
        .map(|w| ProvidedWitness { signs: w.signs.clone(), indices: w.indices.clone() })
        .collect()
}

/// Runs the element-list phase over an already-built group: a checks-only
/// report when the list is empty, otherwise search or verification.
fn cone_phase<G: Group>(
    group: &G,
    scenario: &Scenario,
    opts: &RunOptions,
    checks: Vec<CheckResult>,
) -> Result<Report, RunnerError> {
    let elements = parse_elements(group, scenario)?;
    if elements.is_empty() {
        let mut report = Report::new(&scenario.name, Verdict::ChecksOnly);
        report.checks = checks;
        return Ok(report);
    }
    let mode = match scenario.mode {
        ScenarioMode::Bfs => SearchMode::Bfs,
        ScenarioMode::Verify => SearchMode::Verify,
        // The parser only admits construct for HNN scenarios, which never
        // reach this path.
        ScenarioMode::Construct => unreachable!("construct mode is handled by the HNN paths"),
    };
    let options =
        ConeOptions { depth: opts.depth_for(scenario), mode, threads: opts.threads_or_one() };
    let outcome = cone_refute(group, &elements, &provided_witnesses(scenario), options)?;
    Ok(outcome.into_report(&scenario.name, checks))
}

/// Checks that the stable letter really conjugates each A-generator to its
/// paired B-generator through the Britton engine: `t u_i t^-1 v_i^-1 = 1`.
fn conjugation_check<G: Group, O: SubgroupOracle<G>>(
    group: &HnnGroup<G, O>,
    a_elems: &[G::Elem],
    b_elems: &[G::Elem],
) -> CheckResult {
    let ext = group.extension();
    let mut bad = Vec::new();
    for (i, (u, v)) in a_elems.iter().zip(b_elems).enumerate() {
        let conj = ext.mul(
            &ext.mul(&ext.t_power(1), &ext.from_base(u.clone())),
            &ext.t_power(-1),
        );
        let relator = ext.mul(&conj, &ext.from_base(ext.base().inv(v)));
        if !ext.is_identity(&relator) {
            bad.push(i);
        }
    }
    let passed = bad.is_empty();
    let detail = if passed {
        format!("t u_i t^-1 = v_i for all {} pairs", a_elems.len())
    } else {
        format!("pairs {bad:?} do not conjugate as declared")
    };
    CheckResult::new("stable-letter conjugation", passed, detail)
}

fn run_free_hnn(
    letters: &[String],
    scenario: &Scenario,
    opts: &RunOptions,
) -> Result<Report, RunnerError> {
    let ab = Alphabet::new(letters)?;
    let u_words: Vec<Word> =
        scenario.a_gens.iter().map(|t| Word::parse(&ab, t)).collect::<Result<_, _>>()?;
    let v_words: Vec<Word> =
        scenario.b_gens.iter().map(|t| Word::parse(&ab, t)).collect::<Result<_, _>>()?;
    let a_side = SubgroupGraph::build(&ab, &u_words)?;
    let b_side = SubgroupGraph::build(&ab, &v_words)?;
    let mut checks = vec![
        CheckResult::new(
            "A-side subgroup rank",
            true,
            format!("rank {} from {} generators", a_side.rank(), u_words.len()),
        ),
        CheckResult::new(
            "B-side subgroup rank",
            true,
            format!("rank {} from {} generators", b_side.rank(), v_words.len()),
        ),
    ];
    let ext = Arc::new(HnnExtension::new(FreeGroup::new(ab.clone()), a_side, b_side)?);
    let group = HnnGroup::new(ext);
    checks.push(conjugation_check(&group, &u_words, &v_words));
    if scenario.mode == ScenarioMode::Construct {
        let outcome = certify_conjugation_list(
            &group,
            &ab,
            &u_words,
            &v_words,
            opts.depth_for(scenario),
            opts.threads_or_one(),
        )?;
        Ok(outcome.into_report(&scenario.name, checks))
    } else {
        cone_phase(&group, scenario, opts, checks)
    }
}

fn run_gamma_hnn(n: usize, scenario: &Scenario, opts: &RunOptions) -> Result<Report, RunnerError> {
    let ab = gamma_alphabet();
    let u_words: Vec<Word> =
        scenario.a_gens.iter().map(|t| Word::parse(&ab, t)).collect::<Result<_, _>>()?;
    let v_words: Vec<Word> =
        scenario.b_gens.iter().map(|t| Word::parse(&ab, t)).collect::<Result<_, _>>()?;
    let a_elems: Vec<GammaElement> =
        u_words.iter().map(|w| GammaElement::eval(n, w)).collect::<Result<_, _>>()?;
    let b_elems: Vec<GammaElement> =
        v_words.iter().map(|w| GammaElement::eval(n, w)).collect::<Result<_, _>>()?;
    let a_side = LatticeBasis::build(n, a_elems.clone())?;
    let b_side = LatticeBasis::build(n, b_elems.clone())?;
    let mut checks = vec![
        CheckResult::new(
            "A-side lattice rank",
            true,
            format!("rank {} from {} generators", a_side.rank(), a_elems.len()),
        ),
        CheckResult::new(
            "B-side lattice rank",
            true,
            format!("rank {} from {} generators", b_side.rank(), b_elems.len()),
        ),
    ];
    let ext = Arc::new(HnnExtension::new(GammaGroup::new(n), a_side, b_side)?);
    let group = HnnGroup::new(ext);
    checks.push(conjugation_check(&group, &a_elems, &b_elems));
    if scenario.mode == ScenarioMode::Construct {
        let outcome = certify_conjugation_list(
            &group,
            &ab,
            &u_words,
            &v_words,
            opts.depth_for(scenario),
            opts.threads_or_one(),
        )?;
        Ok(outcome.into_report(&scenario.name, checks))
    } else {
        cone_phase(&group, scenario, opts, checks)
    }
}

fn run_cyclic_hnn(
    letter: &str,
    scenario: &Scenario,
    opts: &RunOptions,
) -> Result<Report, RunnerError> {
    let base = CyclicGroup::new(letter)?;
    let a_step = base.parse_elem(&scenario.a_gens[0])?;
    let b_step = base.parse_elem(&scenario.b_gens[0])?;
    let a_side = CyclicSubgroup::new(a_step)?;
    let b_side = CyclicSubgroup::new(b_step)?;
    let mut checks = vec![CheckResult::new(
        "associated cyclic subgroups",
        true,
        format!("A = <{letter}^{a_step}>, B = <{letter}^{b_step}>"),
    )];
    let ext = Arc::new(HnnExtension::new(base, a_side, b_side)?);
    let group = HnnGroup::new(ext);
    checks.push(conjugation_check(&group, &[a_step], &[b_step]));
    cone_phase(&group, scenario, opts, checks)
}
