//! Command implementations behind the binary: bound computation, witness
//! export, attainment verification, grid sweeps and polynomial printing.
//!
//! Everything here is ordinary library code so the commands can be driven
//! from tests; the binary only parses arguments and maps errors to exit
//! codes (0 success, 1 usage, 2 internal inconsistency, 3 conjecture miss
//! under `--strict`).

use crate::bounds::{
    self, chain_poly, count_poly, count_poly_expanded, prefix_polys, y_coeff_poly_by_recurrence,
    SizeProfile,
};
use crate::construct::{analyze_chain, decode_state};
use crate::format::write_dfa;
use crate::report::{CountReport, GridSummary};
use crate::witness::{FamilyKind, WitnessFamily};
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Default cap on the fused state count for `verify` and `grid`; the subset
/// space is `2^total`, so the default keeps a run in the tens of millions of
/// set operations at worst.
pub const DEFAULT_BUDGET: usize = 22;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Recurrence,
    Formula,
}

/// Parses `--methods`: `all` or a comma list of `brute`, `recurrence`,
/// `formula`.
pub fn parse_methods(text: &str) -> Result<Vec<Method>, CliError> {
    if text == "all" {
        return Ok(vec![Method::Brute, Method::Recurrence, Method::Formula]);
    }
    text.split(',')
        .map(|tok| match tok.trim() {
            "brute" => Ok(Method::Brute),
            "recurrence" => Ok(Method::Recurrence),
            "formula" => Ok(Method::Formula),
            other => Err(usage(format!(
                "unknown method `{other}` (expected brute, recurrence, formula or all)"
            ))),
        })
        .collect()
}

/// Computes the bound by the requested methods and cross-checks them.
pub fn cmd_bound(profile: &SizeProfile, methods: &[Method]) -> Result<CountReport, CliError> {
    let start = Instant::now();
    let mut report = CountReport::new(profile.sizes().to_vec());
    for method in methods {
        match method {
            Method::Brute => {
                let count = bounds::brute_force_count(profile)
                    .map_err(|e| usage(e.to_string()))?;
                report.bound_bruteforce = Some(count);
            }
            Method::Recurrence => {
                report.bound_recurrence = Some(bounds::recurrence_count(profile));
            }
            Method::Formula => {
                let count = bounds::formula_count(profile)
                    .map_err(|e| CliError::Inconsistency(e.to_string()))?;
                report.bound_formula = Some(count);
            }
        }
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    if !report.is_consistent() {
        return Err(CliError::Inconsistency(format!(
            "bound methods disagree for sizes {profile}"
        )));
    }
    Ok(report)
}

/// Writes one automaton file per component (`a1.txt`, `a2.txt`, ...) plus a
/// `manifest.txt` naming the family; returns the written paths.
pub fn cmd_witness(
    kind: FamilyKind,
    profile: &SizeProfile,
    out_dir: &Path,
) -> Result<Vec<PathBuf>, CliError> {
    let family = WitnessFamily::new(kind, profile.clone()).map_err(|e| usage(e.to_string()))?;
    std::fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();

    let mut manifest = format!(
        "# family={} alpha={} sizes={}\n",
        kind.name(),
        profile.alpha(),
        profile
    );
    for (i, dfa) in family.components().iter().enumerate() {
        let name = format!("a{}.txt", i + 1);
        let path = out_dir.join(&name);
        std::fs::write(&path, write_dfa(dfa))?;
        manifest.push_str(&name);
        manifest.push('\n');
        written.push(path);
    }
    let manifest_path = out_dir.join("manifest.txt");
    std::fs::write(&manifest_path, manifest)?;
    written.push(manifest_path);
    Ok(written)
}

/// Everything `verify` measures for one profile.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub report: CountReport,
    /// Reachable determinized states whose decoded sequence passes all three
    /// validity constraints.
    pub valid_states: usize,
    /// All reachable determinized states.
    pub reachable_states: usize,
}

/// Runs the full pipeline on a witness family: build, catenate, determinize,
/// minimize, compare against the recurrence bound, and decode every
/// reachable state.
pub fn verify_family(
    kind: FamilyKind,
    profile: &SizeProfile,
    budget: usize,
) -> Result<VerifyOutcome, CliError> {
    let family = WitnessFamily::new(kind, profile.clone()).map_err(|e| usage(e.to_string()))?;
    if profile.total_states() > budget {
        return Err(usage(format!(
            "profile {profile} needs {} fused states, over the budget of {budget} \
             (raise --budget to accept the memory cost)",
            profile.total_states()
        )));
    }

    let start = Instant::now();
    let components = family.components();
    let analysis = analyze_chain(&components).map_err(|e| CliError::Inconsistency(e.to_string()))?;

    let reachable_states = analysis.determinized.subsets.len();
    let valid_states = analysis
        .determinized
        .subsets
        .iter()
        .filter(|subset| decode_state(subset, &analysis.layout).is_valid(&components))
        .count();

    let mut report = CountReport::new(profile.sizes().to_vec());
    report.family = Some(kind.name().to_string());
    report.bound_recurrence = Some(bounds::recurrence_count(profile));
    report.bound_formula =
        Some(bounds::formula_count(profile).map_err(|e| CliError::Inconsistency(e.to_string()))?);
    report.measured_sc = Some(analysis.minimal.state_count().into());
    report.resolve_attained();
    report.wall_time_ms = start.elapsed().as_millis() as u64;

    if !report.is_consistent() {
        return Err(CliError::Inconsistency(format!(
            "bound methods disagree for sizes {profile}"
        )));
    }
    Ok(VerifyOutcome {
        report,
        valid_states,
        reachable_states,
    })
}

/// `verify` as the CLI sees it: the decoded-state check must be total.
pub fn cmd_verify(
    kind: FamilyKind,
    profile: &SizeProfile,
    budget: usize,
) -> Result<CountReport, CliError> {
    let outcome = verify_family(kind, profile, budget)?;
    if outcome.valid_states != outcome.reachable_states {
        return Err(CliError::Inconsistency(format!(
            "{} of {} reachable states decode to an invalid sequence",
            outcome.reachable_states - outcome.valid_states,
            outcome.reachable_states
        )));
    }
    Ok(outcome.report)
}

/// Grid sweep parameters: every component size in `size_min..=size_max`, for
/// every chain length in `alpha_min..=alpha_max`.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub family: FamilyKind,
    pub alpha_min: usize,
    pub alpha_max: usize,
    pub size_min: usize,
    pub size_max: usize,
    pub budget: usize,
}

impl GridSpec {
    /// All profiles in deterministic lexicographic order.
    pub fn profiles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for alpha in self.alpha_min..=self.alpha_max {
            let mut sizes = vec![self.size_min; alpha];
            'tuples: loop {
                out.push(sizes.clone());
                // next tuple, rightmost position fastest
                let mut pos = alpha;
                loop {
                    if pos == 0 {
                        break 'tuples;
                    }
                    pos -= 1;
                    if sizes[pos] < self.size_max {
                        sizes[pos] += 1;
                        break;
                    }
                    sizes[pos] = self.size_min;
                }
            }
        }
        out
    }
}

/// Sweeps the grid; infeasible profiles (over budget, or a chain length the
/// family cannot produce) are skipped and counted rather than failing the
/// run.
pub fn cmd_grid(spec: &GridSpec) -> Result<(Vec<CountReport>, GridSummary), CliError> {
    if spec.alpha_min > spec.alpha_max || spec.size_min > spec.size_max {
        return Err(usage("empty range".to_string()));
    }
    if spec.size_min < 2 {
        return Err(usage(format!(
            "component sizes must be at least 2 (got {})",
            spec.size_min
        )));
    }
    let mut reports = Vec::new();
    let mut summary = GridSummary::default();
    for sizes in spec.profiles() {
        let profile = SizeProfile::new(sizes.clone()).map_err(|e| usage(e.to_string()))?;
        if WitnessFamily::new(spec.family, profile.clone()).is_err()
            || profile.total_states() > spec.budget
        {
            summary.skipped += 1;
            continue;
        }
        let outcome = verify_family(spec.family, &profile, spec.budget)?;
        if outcome.valid_states != outcome.reachable_states {
            return Err(CliError::Inconsistency(format!(
                "invalid decoded state in grid profile {profile}"
            )));
        }
        match outcome.report.attained {
            Some(true) => summary.attained += 1,
            _ => {
                summary.missed += 1;
                summary.misses.push(sizes);
            }
        }
        reports.push(outcome.report);
    }
    Ok((reports, summary))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyChoice {
    SMinus,
    SPlus,
    R,
    RExpanded,
    M,
}

pub fn parse_poly_choices(text: &str) -> Result<Vec<PolyChoice>, CliError> {
    text.split(',')
        .map(|tok| match tok.trim() {
            "s_minus" => Ok(PolyChoice::SMinus),
            "s_plus" => Ok(PolyChoice::SPlus),
            "r" => Ok(PolyChoice::R),
            "r_expanded" => Ok(PolyChoice::RExpanded),
            "m" => Ok(PolyChoice::M),
            other => Err(usage(format!(
                "unknown polynomial `{other}` (expected s_minus, s_plus, r, r_expanded or m)"
            ))),
        })
        .collect()
}

/// One printable polynomial; `label` is empty for the single-valued choices
/// `r` and `r_expanded`, which print bare.
#[derive(Debug, Clone)]
pub struct PolyLine {
    pub label: Option<String>,
    pub text: String,
}

pub fn cmd_poly(alpha: usize, choices: &[PolyChoice]) -> Result<Vec<PolyLine>, CliError> {
    if alpha < 1 {
        return Err(usage("alpha must be at least 1"));
    }
    let mut lines = Vec::new();
    for choice in choices {
        match choice {
            PolyChoice::SMinus | PolyChoice::SPlus => {
                let polys = prefix_polys(alpha);
                let (name, levels) = match choice {
                    PolyChoice::SMinus => ("s_minus", &polys.absent_final),
                    _ => ("s_plus", &polys.present_final),
                };
                for (j, poly) in levels.iter().enumerate() {
                    lines.push(PolyLine {
                        label: Some(format!("{name}[{j}]")),
                        text: poly.to_string(),
                    });
                }
                // keep the total alongside the levels it sums
                if *choice == PolyChoice::SPlus {
                    lines.push(PolyLine {
                        label: Some(format!("s[{}]", alpha - 1)),
                        text: chain_poly(alpha).to_string(),
                    });
                }
            }
            PolyChoice::R => lines.push(PolyLine {
                label: None,
                text: count_poly(alpha).to_string(),
            }),
            PolyChoice::RExpanded => {
                if alpha < 2 {
                    return Err(usage(
                        "r_expanded needs alpha >= 2: the composition expansion \
                         has no one-component instance",
                    ));
                }
                lines.push(PolyLine {
                    label: None,
                    text: count_poly_expanded(alpha).to_string(),
                });
            }
            PolyChoice::M => {
                for i in 0..alpha {
                    lines.push(PolyLine {
                        label: Some(format!("m[{i}]")),
                        text: y_coeff_poly_by_recurrence(i).to_string(),
                    });
                }
            }
        }
    }
    Ok(lines)
}
