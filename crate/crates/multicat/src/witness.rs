//! Witness families: chains of Brzozowski automata whose catenation attains
//! the exact state bound.
//!
//! Every component is a Brzozowski automaton: states `0..n`, initial `0`,
//! single final `n - 1`, and each letter acting as a cycle, the transposition
//! of the two first states, the contraction of state 1 onto 0, or the
//! identity.
//!
//! Four families are provided:
//!
//! * [`FamilyKind::Table1`] - `alpha + 1` letters;
//! * [`FamilyKind::Table2`] - `alpha` letters, one fewer than `Table1` by
//!   dropping the transposition of the last component;
//! * [`FamilyKind::TwoLetter`] / [`FamilyKind::ThreeLetter`] - the concrete
//!   two- and three-chain instances of the `alpha`-letter family.
//!
//! When every component has at least 3 states the chains attain the exact
//! bound (proven for `Table1` and for the `alpha`-letter family up to three
//! components, replicated computationally beyond). Size-2 components can
//! fall short: a 2-state component reads its cycle and its transposition as
//! the same toggle, which makes some valid subset states unreachable. The
//! smallest miss is the two-letter pair at sizes (2,3), which reaches 11 of
//! the 12 valid states. The verification harness reports such misses as
//! counterexample data.
//!
//! Alphabet sizes below `alpha` cannot work at all: over a one-letter
//! alphabet the catenation of an m-state and an n-state DFA needs at most
//! `m * n` states, strictly below the general bound, so two letters is
//! already the minimum for a two-chain witness.
//!
//! Letter conventions: for `Table1`, slot `s` (1-based) maps to letter index
//! `s - 1`. For `Table2`, slot `s` maps to letter index `alpha - s`, which
//! makes the two- and three-chain instances coincide byte-for-byte with
//! [`build_two_letter`] and [`build_three_letter`] under their natural
//! `a = 0, b = 1, c = 2` order.

use crate::automata::{Dfa, Transformation};
use crate::bounds::SizeProfile;
use crate::set::StateSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("family {family} requires {expected} components, got {got}")]
    ArityMismatch {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("component sizes must be at least 2 (got {0})")]
    SizeTooSmall(usize),
    #[error("unknown family `{0}` (expected table1, table2, two_letter or three_letter)")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Table1,
    Table2,
    TwoLetter,
    ThreeLetter,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Table1,
        FamilyKind::Table2,
        FamilyKind::TwoLetter,
        FamilyKind::ThreeLetter,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Table1 => "table1",
            FamilyKind::Table2 => "table2",
            FamilyKind::TwoLetter => "two_letter",
            FamilyKind::ThreeLetter => "three_letter",
        }
    }

    pub fn alphabet_size(&self, alpha: usize) -> usize {
        match self {
            FamilyKind::Table1 => alpha + 1,
            FamilyKind::Table2 => alpha,
            FamilyKind::TwoLetter => 2,
            FamilyKind::ThreeLetter => 3,
        }
    }

    fn check_alpha(&self, alpha: usize) -> Result<(), WitnessError> {
        let ok = match self {
            FamilyKind::Table1 => alpha >= 1,
            FamilyKind::Table2 => alpha >= 2,
            FamilyKind::TwoLetter => alpha == 2,
            FamilyKind::ThreeLetter => alpha == 3,
        };
        if ok {
            Ok(())
        } else {
            let expected = match self {
                FamilyKind::Table1 => "at least 1",
                FamilyKind::Table2 => "at least 2",
                FamilyKind::TwoLetter => "exactly 2",
                FamilyKind::ThreeLetter => "exactly 3",
            };
            Err(WitnessError::ArityMismatch {
                family: self.name(),
                expected,
                got: alpha,
            })
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table1" => Ok(FamilyKind::Table1),
            "table2" => Ok(FamilyKind::Table2),
            "two_letter" => Ok(FamilyKind::TwoLetter),
            "three_letter" => Ok(FamilyKind::ThreeLetter),
            other => Err(WitnessError::UnknownFamily(other.to_string())),
        }
    }
}

/// A witness family instantiated at a size profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFamily {
    kind: FamilyKind,
    profile: SizeProfile,
}

impl WitnessFamily {
    pub fn new(kind: FamilyKind, profile: SizeProfile) -> Result<WitnessFamily, WitnessError> {
        kind.check_alpha(profile.alpha())?;
        Ok(WitnessFamily { kind, profile })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn profile(&self) -> &SizeProfile {
        &self.profile
    }

    pub fn alphabet_size(&self) -> usize {
        self.kind.alphabet_size(self.profile.alpha())
    }

    /// Builds the component DFAs.
    pub fn components(&self) -> Vec<Dfa> {
        match self.kind {
            FamilyKind::Table1 => build_table1(&self.profile),
            FamilyKind::Table2 => build_table2(&self.profile).expect("arity checked"),
            FamilyKind::TwoLetter => {
                let sizes = self.profile.sizes();
                let (a, b) = build_two_letter(sizes[0], sizes[1]).expect("sizes checked");
                vec![a, b]
            }
            FamilyKind::ThreeLetter => {
                let sizes = self.profile.sizes();
                let (a, b, c) =
                    build_three_letter(sizes[0], sizes[1], sizes[2]).expect("sizes checked");
                vec![a, b, c]
            }
        }
    }
}

/// Which role a letter plays on one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Action {
    Cycle,
    Transposition,
    Contraction,
    Identity,
}

fn brzozowski(n: usize, actions: &[Action]) -> Dfa {
    let transformations: Vec<Transformation> = actions
        .iter()
        .map(|action| match action {
            Action::Cycle => Transformation::cycle(n).unwrap(),
            Action::Transposition => Transformation::transposition(n, 0, 1).unwrap(),
            Action::Contraction => Transformation::contraction(n, 1, 0).unwrap(),
            Action::Identity => Transformation::identity(n).unwrap(),
        })
        .collect();
    Dfa::from_transformations(n, &transformations, 0, StateSet::singleton(n, n - 1))
        .expect("witness component is well-formed")
}

/// The `(alpha + 1)`-letter family. Component `k` (1-based) reads letter
/// slot `k - 1` as the contraction (absent for the first component), slot `k`
/// as the transposition, slot `k + 1` as the cycle, and everything else as
/// the identity; slot `s` is letter index `s - 1`.
pub fn build_table1(profile: &SizeProfile) -> Vec<Dfa> {
    let alpha = profile.alpha();
    let alphabet = alpha + 1;
    profile
        .sizes()
        .iter()
        .enumerate()
        .map(|(idx, &n)| {
            let k = idx + 1;
            let actions: Vec<Action> = (0..alphabet)
                .map(|letter| {
                    let slot = letter + 1;
                    if k >= 2 && slot == k - 1 {
                        Action::Contraction
                    } else if slot == k {
                        Action::Transposition
                    } else if slot == k + 1 {
                        Action::Cycle
                    } else {
                        Action::Identity
                    }
                })
                .collect();
            brzozowski(n, &actions)
        })
        .collect()
}

/// The `alpha`-letter family. Intermediate components follow the same
/// contraction/transposition/cycle diagonal as the `(alpha + 1)`-letter
/// family; the last component drops the transposition and keeps only the
/// contraction (slot `alpha - 1`) and the cycle (slot `alpha`). Slot `s` is
/// letter index `alpha - s`, which lines the two- and three-chain instances
/// up with [`build_two_letter`] and [`build_three_letter`].
pub fn build_table2(profile: &SizeProfile) -> Result<Vec<Dfa>, WitnessError> {
    let alpha = profile.alpha();
    FamilyKind::Table2.check_alpha(alpha)?;
    Ok(profile
        .sizes()
        .iter()
        .enumerate()
        .map(|(idx, &n)| {
            let k = idx + 1;
            let actions: Vec<Action> = (0..alpha)
                .map(|letter| {
                    let slot = alpha - letter;
                    if k < alpha {
                        if k >= 2 && slot == k - 1 {
                            Action::Contraction
                        } else if slot == k {
                            Action::Transposition
                        } else if slot == k + 1 {
                            Action::Cycle
                        } else {
                            Action::Identity
                        }
                    } else if slot == alpha - 1 {
                        Action::Contraction
                    } else if slot == alpha {
                        Action::Cycle
                    } else {
                        Action::Identity
                    }
                })
                .collect();
            brzozowski(n, &actions)
        })
        .collect())
}

/// Two-letter witness pair: the first automaton cycles on `a` and transposes
/// on `b`, the second cycles on `a` and contracts on `b`.
pub fn build_two_letter(m: usize, n: usize) -> Result<(Dfa, Dfa), WitnessError> {
    check_size(m)?;
    check_size(n)?;
    Ok((
        brzozowski(m, &[Action::Cycle, Action::Transposition]),
        brzozowski(n, &[Action::Cycle, Action::Contraction]),
    ))
}

/// Three-letter witness triple over letters `a = 0, b = 1, c = 2`: the first
/// automaton is identity/cycle/transposition, the second
/// cycle/transposition/contraction, the third cycle/contraction/identity.
pub fn build_three_letter(m: usize, n: usize, p: usize) -> Result<(Dfa, Dfa, Dfa), WitnessError> {
    check_size(m)?;
    check_size(n)?;
    check_size(p)?;
    Ok((
        brzozowski(m, &[Action::Identity, Action::Cycle, Action::Transposition]),
        brzozowski(n, &[Action::Cycle, Action::Transposition, Action::Contraction]),
        brzozowski(p, &[Action::Cycle, Action::Contraction, Action::Identity]),
    ))
}

fn check_size(n: usize) -> Result<(), WitnessError> {
    if n < 2 {
        Err(WitnessError::SizeTooSmall(n))
    } else {
        Ok(())
    }
}
