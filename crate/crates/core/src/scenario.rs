//! Scenario files: a small line-oriented description of one refutation run.
//!
//! ```text
//! # Klein bottle group ⟨b, t | t b t^-1 = b^-1⟩
//! name klein_bottle
//! base cyclic b
//! agen b
//! bgen b^-1
//! elem u = t
//! elem v = b
//! depth 10
//! mode bfs
//! expect INCONCLUSIVE
//! ```
//!
//! Blank lines are skipped and `#` starts a comment.  Each remaining line is
//! `keyword arguments…`:
//!
//! * `name NAME` — report label (defaults to `scenario`).
//! * `base free A B …` | `base gamma N` | `base heis` | `base cyclic G` |
//!   `base unipotent M` — the base group.  Exactly one `base` line.
//! * `agen WORD` / `bgen WORD` — generators of the two associated subgroups,
//!   one word per line, in matching order: the stable letter conjugates the
//!   i-th `agen` to the i-th `bgen`.  Presence of these lines makes the
//!   scenario an HNN extension; the element list is then written in the
//!   extension (words may use `t`).  Only free, gamma, and cyclic bases
//!   carry subgroup oracles; a cyclic base takes exactly one generator per
//!   side.
//! * `elem NAME = TEXT` — a named nonidentity element of the (extension or
//!   base) group.  The list order fixes both the sign-assignment bit order
//!   and witness indices.  No `elem` lines means a checks-only run.
//! * `depth N` — maximum product length for searches (default 4).
//! * `mode bfs|verify|construct` — search, replay supplied witnesses, or
//!   build certificates from the `agen`/`bgen` sign patterns (construct
//!   derives its own element list from the base letters).
//! * `expect VERDICT` — optional expected verdict, used for the exit code.
//! * `witness SIGNS : I J K …` — verify-mode product for one assignment,
//!   e.g. `witness ++-+ : 2 3 1 0`; indices refer to the element list.
//! * `seed N` — recorded in the report (scenario runs themselves are
//!   deterministic).

use thiserror::Error;

use crate::report::Verdict;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScenarioError {
    #[error("line {line}, col {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("scenario structure: {message}")]
    Structure { message: String },
}

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> ScenarioError {
    ScenarioError::Parse { line, col, message: message.into() }
}

fn structure(message: impl Into<String>) -> ScenarioError {
    ScenarioError::Structure { message: message.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    Free { letters: Vec<String> },
    Gamma { n: usize },
    Heis,
    Cyclic { letter: String },
    Unipotent { m: usize },
}

impl BaseSpec {
    /// Whether this kind of base carries a subgroup oracle (and so can sit
    /// under an HNN extension).
    pub fn supports_hnn(&self) -> bool {
        matches!(self, BaseSpec::Free { .. } | BaseSpec::Gamma { .. } | BaseSpec::Cyclic { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioMode {
    Bfs,
    Verify,
    Construct,
}

/// One supplied witness: the sign vector it certifies and the element-list
/// indices of its product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessLine {
    pub signs: Vec<i8>,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub base: BaseSpec,
    pub a_gens: Vec<String>,
    pub b_gens: Vec<String>,
    /// Named element texts, in list order.
    pub elements: Vec<(String, String)>,
    pub depth: Option<usize>,
    pub mode: ScenarioMode,
    pub expect: Option<Verdict>,
    pub witnesses: Vec<WitnessLine>,
    pub seed: Option<u64>,
}

impl Scenario {
    pub fn is_hnn(&self) -> bool {
        !self.a_gens.is_empty()
    }
}

pub const DEFAULT_DEPTH: usize = 4;

struct LineCtx {
    no: usize,
    /// Column (1-based) where the argument part begins.
    arg_col: usize,
}

impl LineCtx {
    fn err(&self, message: impl Into<String>) -> ScenarioError {
        parse_err(self.no, self.arg_col, message)
    }
}

fn parse_verdict(text: &str) -> Option<Verdict> {
    match text {
        "NOT-LEFT-ORDERABLE" => Some(Verdict::NotLeftOrderable),
        "INCONCLUSIVE" => Some(Verdict::Inconclusive),
        "CHECKS-ONLY" => Some(Verdict::ChecksOnly),
        _ => None,
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let mut name: Option<String> = None;
    let mut base: Option<BaseSpec> = None;
    let mut a_gens: Vec<String> = Vec::new();
    let mut b_gens: Vec<String> = Vec::new();
    let mut elements: Vec<(String, String)> = Vec::new();
    let mut depth: Option<usize> = None;
    let mut mode: Option<ScenarioMode> = None;
    let mut expect: Option<Verdict> = None;
    let mut witnesses: Vec<WitnessLine> = Vec::new();
    let mut seed: Option<u64> = None;

    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let (key, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        let ctx = LineCtx { no, arg_col: indent + key.len() + 2 };
        let key_err =
            |msg: String| -> ScenarioError { parse_err(no, indent + 1, msg) };

        let set_once = |slot_filled: bool, what: &str| -> Result<(), ScenarioError> {
            if slot_filled {
                Err(key_err(format!("duplicate `{what}` line")))
            } else {
                Ok(())
            }
        };

        match key {
            "name" => {
                set_once(name.is_some(), "name")?;
                if rest.is_empty() || rest.split_whitespace().count() != 1 {
                    return Err(ctx.err("`name` takes exactly one token"));
                }
                name = Some(rest.to_string());
            }
            "base" => {
                set_once(base.is_some(), "base")?;
                let mut args = rest.split_whitespace();
                let kind = args.next().ok_or_else(|| ctx.err("`base` needs a group kind"))?;
                let spec = match kind {
                    "free" => {
                        let letters: Vec<String> = args.map(str::to_string).collect();
                        if letters.is_empty() {
                            return Err(ctx.err("`base free` needs at least one letter"));
                        }
                        BaseSpec::Free { letters }
                    }
                    "gamma" => {
                        let n: usize = args
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| ctx.err("`base gamma` needs a modulus"))?;
                        if n < 2 {
                            return Err(ctx.err("gamma modulus must be at least 2"));
                        }
                        if args.next().is_some() {
                            return Err(ctx.err("`base gamma` takes one argument"));
                        }
                        BaseSpec::Gamma { n }
                    }
                    "heis" => {
                        if args.next().is_some() {
                            return Err(ctx.err("`base heis` takes no arguments"));
                        }
                        BaseSpec::Heis
                    }
                    "cyclic" => {
                        let letter = args
                            .next()
                            .ok_or_else(|| ctx.err("`base cyclic` needs a generator name"))?
                            .to_string();
                        if args.next().is_some() {
                            return Err(ctx.err("`base cyclic` takes one argument"));
                        }
                        BaseSpec::Cyclic { letter }
                    }
                    "unipotent" => {
                        let m: usize = args
                            .next()
                            .and_then(|t| t.parse().ok())
                            .ok_or_else(|| ctx.err("`base unipotent` needs a size"))?;
                        if !(2..=12).contains(&m) {
                            return Err(ctx.err("unipotent size must be between 2 and 12"));
                        }
                        if args.next().is_some() {
                            return Err(ctx.err("`base unipotent` takes one argument"));
                        }
                        BaseSpec::Unipotent { m }
                    }
                    other => {
                        return Err(ctx.err(format!(
                            "unknown base kind `{other}` (free, gamma, heis, cyclic, unipotent)"
                        )))
                    }
                };
                base = Some(spec);
            }
            "agen" | "bgen" => {
                if rest.is_empty() {
                    return Err(ctx.err(format!("`{key}` needs a word")));
                }
                if key == "agen" {
                    a_gens.push(rest.to_string());
                } else {
                    b_gens.push(rest.to_string());
                }
            }
            "elem" => {
                let (elem_name, elem_text) = rest
                    .split_once('=')
                    .map(|(n, t)| (n.trim(), t.trim()))
                    .ok_or_else(|| ctx.err("`elem` syntax is `elem NAME = TEXT`"))?;
                if elem_name.is_empty() || elem_name.split_whitespace().count() != 1 {
                    return Err(ctx.err("element name must be a single token"));
                }
                if elem_text.is_empty() {
                    return Err(ctx.err("element text is empty"));
                }
                if elements.iter().any(|(n, _)| n == elem_name) {
                    return Err(ctx.err(format!("duplicate element name `{elem_name}`")));
                }
                elements.push((elem_name.to_string(), elem_text.to_string()));
            }
            "depth" => {
                set_once(depth.is_some(), "depth")?;
                let d: usize = rest
                    .parse()
                    .map_err(|_| ctx.err(format!("`depth` needs a nonnegative integer, got `{rest}`")))?;
                depth = Some(d);
            }
            "mode" => {
                set_once(mode.is_some(), "mode")?;
                mode = Some(match rest {
                    "bfs" => ScenarioMode::Bfs,
                    "verify" => ScenarioMode::Verify,
                    "construct" => ScenarioMode::Construct,
                    other => {
                        return Err(ctx.err(format!(
                            "unknown mode `{other}` (bfs, verify, construct)"
                        )))
                    }
                });
            }
            "expect" => {
                set_once(expect.is_some(), "expect")?;
                expect = Some(parse_verdict(rest).ok_or_else(|| {
                    ctx.err(format!(
                        "unknown verdict `{rest}` (NOT-LEFT-ORDERABLE, INCONCLUSIVE, CHECKS-ONLY)"
                    ))
                })?);
            }
            "witness" => {
                let (signs_text, idx_text) = rest
                    .split_once(':')
                    .map(|(s, i)| (s.trim(), i.trim()))
                    .ok_or_else(|| ctx.err("`witness` syntax is `witness SIGNS : I J K`"))?;
                let mut signs = Vec::with_capacity(signs_text.len());
                for c in signs_text.chars() {
                    match c {
                        '+' => signs.push(1),
                        '-' => signs.push(-1),
                        other => {
                            return Err(ctx.err(format!("bad sign character `{other}`")))
                        }
                    }
                }
                if signs.is_empty() {
                    return Err(ctx.err("witness sign vector is empty"));
                }
                let mut indices = Vec::new();
                for tok in idx_text.split_whitespace() {
                    let i: usize = tok
                        .parse()
                        .map_err(|_| ctx.err(format!("bad witness index `{tok}`")))?;
                    indices.push(i);
                }
                if indices.is_empty() {
                    return Err(ctx.err("witness product is empty"));
                }
                witnesses.push(WitnessLine { signs, indices });
            }
            "seed" => {
                set_once(seed.is_some(), "seed")?;
                let s: u64 = rest
                    .parse()
                    .map_err(|_| ctx.err(format!("`seed` needs an unsigned integer, got `{rest}`")))?;
                seed = Some(s);
            }
            other => {
                return Err(key_err(format!("unknown keyword `{other}`")));
            }
        }
    }

    let base = base.ok_or_else(|| structure("missing `base` line"))?;
    let mode = mode.unwrap_or(ScenarioMode::Bfs);

    if a_gens.len() != b_gens.len() {
        return Err(structure(format!(
            "{} agen line(s) but {} bgen line(s); the conjugation pairs them one-to-one",
            a_gens.len(),
            b_gens.len()
        )));
    }
    let hnn = !a_gens.is_empty();
    if hnn {
        if !base.supports_hnn() {
            return Err(structure(
                "this base kind carries no subgroup oracle; agen/bgen are unsupported",
            ));
        }
        match &base {
            BaseSpec::Free { letters } if letters.iter().any(|l| l == "t") => {
                return Err(structure(
                    "base letter `t` collides with the stable letter of the extension",
                ));
            }
            BaseSpec::Cyclic { letter } if letter == "t" => {
                return Err(structure(
                    "cyclic generator `t` collides with the stable letter of the extension",
                ));
            }
            BaseSpec::Cyclic { .. } if a_gens.len() != 1 => {
                return Err(structure(
                    "a cyclic base takes exactly one agen and one bgen",
                ));
            }
            _ => {}
        }
    }
    match mode {
        ScenarioMode::Construct => {
            if !hnn {
                return Err(structure("construct mode needs agen/bgen lines"));
            }
            if !matches!(base, BaseSpec::Free { .. } | BaseSpec::Gamma { .. }) {
                return Err(structure(
                    "construct mode works over free or gamma bases (letter words drive the patterns)",
                ));
            }
            if !elements.is_empty() {
                return Err(structure(
                    "construct mode derives its element list from the base letters; drop the elem lines",
                ));
            }
        }
        ScenarioMode::Verify => {
            if elements.is_empty() {
                return Err(structure("verify mode needs an element list"));
            }
        }
        ScenarioMode::Bfs => {}
    }
    if !witnesses.is_empty() && mode != ScenarioMode::Verify {
        return Err(structure("witness lines require `mode verify`"));
    }

    Ok(Scenario {
        name: name.unwrap_or_else(|| "scenario".to_string()),
        base,
        a_gens,
        b_gens,
        elements,
        depth,
        mode,
        expect,
        witnesses,
        seed,
    })
}
