//! Exact upper bound on the number of states of a determinized catenation
//! chain, computed by three independent routes.
//!
//! A subset-construction state of an `alpha`-chain decodes to a tuple of
//! per-component subsets. Under the single-final convention (initial state 0,
//! final state `n_j - 1` in every component), the reachable tuples satisfy
//! three constraints: the first subset is a singleton, an empty subset is
//! never followed by a non-empty one, and a subset containing its final state
//! forces the next component's initial state. The routes that count these
//! tuples are:
//!
//! 1. [`brute_force_count`] - direct enumeration of all subset tuples;
//! 2. [`recurrence_count`] - a pair of mutually recursive tables split on
//!    whether the last subset contains its final state;
//! 3. [`formula_count`] - evaluation of an exact-rational polynomial, built
//!    either by mirroring the recurrence ([`count_poly`]) or by direct
//!    summation over integer compositions ([`count_poly_expanded`]).
//!
//! All three agree exactly; the test suite pins them against each other.

use crate::poly::{rational_pow, MPoly, Var};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Exact non-negative count.
pub type BigCount = BigUint;

/// Enumeration guard for [`brute_force_count`]: total states across the
/// profile may not exceed this (the subset space is `2^total`).
pub const ENUMERATION_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("size profile must be non-empty")]
    EmptyProfile,
    #[error("component sizes must be at least 2 (got {0})")]
    SizeTooSmall(usize),
    #[error("profile too large to enumerate: total size {total} exceeds cap {cap}")]
    EnumerationTooLarge { total: usize, cap: usize },
    #[error("composition target must be at least 1")]
    EmptyComposition,
    #[error("composition parts must be positive")]
    NonPositivePart,
    #[error("count formula produced a non-integral value {0}")]
    NonIntegralCount(String),
}

/// Sizes `(n_1, ..., n_alpha)` of the chain components, each at least 2.
///
/// Size-1 components are excluded: the recurrence divides the subset counts
/// by powers of two that require at least two states per component, and a
/// one-state complete DFA accepts either nothing or everything.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SizeProfile {
    sizes: Vec<usize>,
}

impl SizeProfile {
    pub fn new(sizes: Vec<usize>) -> Result<SizeProfile, BoundsError> {
        if sizes.is_empty() {
            return Err(BoundsError::EmptyProfile);
        }
        if let Some(&bad) = sizes.iter().find(|&&n| n < 2) {
            return Err(BoundsError::SizeTooSmall(bad));
        }
        Ok(SizeProfile { sizes })
    }

    /// Number of chain components.
    pub fn alpha(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Total number of states across all components.
    pub fn total_states(&self) -> usize {
        self.sizes.iter().sum()
    }
}

impl fmt::Display for SizeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for SizeProfile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sizes = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("invalid size `{tok}`"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SizeProfile::new(sizes).map_err(|e| e.to_string())
    }
}

/// Counts valid subset tuples by enumerating the whole product space.
///
/// This is the oracle the other two routes are checked against, so it stays
/// deliberately literal: every tuple is generated and tested against the
/// three constraints. Refuses profiles whose subset space exceeds
/// `2^ENUMERATION_CAP`.
pub fn brute_force_count(profile: &SizeProfile) -> Result<BigCount, BoundsError> {
    let total = profile.total_states();
    if total > ENUMERATION_CAP {
        return Err(BoundsError::EnumerationTooLarge {
            total,
            cap: ENUMERATION_CAP,
        });
    }
    let sizes = profile.sizes();
    let alpha = profile.alpha();
    let mut masks = vec![0u64; alpha];
    let mut count: u64 = 0;
    loop {
        if tuple_is_valid(&masks, sizes) {
            count += 1;
        }
        let mut j = 0;
        loop {
            if j == alpha {
                return Ok(BigCount::from(count));
            }
            masks[j] += 1;
            if masks[j] == 1u64 << sizes[j] {
                masks[j] = 0;
                j += 1;
            } else {
                break;
            }
        }
    }
}

fn tuple_is_valid(masks: &[u64], sizes: &[usize]) -> bool {
    if masks[0].count_ones() != 1 {
        return false;
    }
    for k in 0..masks.len() - 1 {
        if masks[k] == 0 && masks[k + 1] != 0 {
            return false;
        }
        let final_bit = 1u64 << (sizes[k] - 1);
        if masks[k] & final_bit != 0 && masks[k + 1] & 1 == 0 {
            return false;
        }
    }
    true
}

/// Per-level counts of valid all-non-empty prefixes, split on whether the
/// last component's subset misses or contains its final state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTables {
    /// Level `j` (0-based): prefixes of `j + 1` components whose last subset
    /// avoids the final state.
    pub absent_final: Vec<BigCount>,
    /// Same, with the final state present.
    pub present_final: Vec<BigCount>,
}

pub fn recurrence_tables(profile: &SizeProfile) -> RecurrenceTables {
    let sizes = profile.sizes();
    let mut absent = vec![BigCount::from(sizes[0] - 1)];
    let mut present = vec![BigCount::one()];
    for j in 1..sizes.len() {
        let n = sizes[j];
        // non-empty subsets avoiding the final state: 2^(n-1) - 1 choices;
        // when the previous level hits its final state, the initial state is
        // forced, leaving 2^(n-2) choices
        let avoid: BigCount =
            (pow2(n - 1) - BigCount::one()) * &absent[j - 1] + pow2(n - 2) * &present[j - 1];
        let hit: BigCount = &avoid + &absent[j - 1];
        absent.push(avoid);
        present.push(hit);
    }
    RecurrenceTables {
        absent_final: absent,
        present_final: present,
    }
}

/// Exact bound via the crossing recurrence: full-length prefixes containing
/// the final state, plus every prefix that avoids it padded with empty
/// components.
pub fn recurrence_count(profile: &SizeProfile) -> BigCount {
    let tables = recurrence_tables(profile);
    let mut total = tables.present_final.last().unwrap().clone();
    for value in &tables.absent_final {
        total += value;
    }
    total
}

fn pow2(exp: usize) -> BigCount {
    BigCount::one() << exp
}

/// An ordered list of positive integers; `target` is their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition, BoundsError> {
        if parts.is_empty() {
            return Err(BoundsError::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(BoundsError::NonPositivePart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        // compositions are non-empty by construction
        false
    }

    pub fn target(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn last_part(&self) -> usize {
        *self.parts.last().unwrap()
    }

    /// Number of parts equal to 1, the last part excluded.
    pub fn unit_parts_except_last(&self) -> u32 {
        self.parts[..self.parts.len() - 1]
            .iter()
            .filter(|&&p| p == 1)
            .count() as u32
    }

    /// Number of parts equal to 1 strictly between the first and last part.
    pub fn unit_parts_interior(&self) -> u32 {
        if self.parts.len() < 3 {
            return 0;
        }
        self.parts[1..self.parts.len() - 1]
            .iter()
            .filter(|&&p| p == 1)
            .count() as u32
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All `2^(n-1)` compositions of `n`, in lexicographic order by parts.
pub fn compositions(n: usize) -> Result<Compositions, BoundsError> {
    if n == 0 {
        return Err(BoundsError::EmptyComposition);
    }
    Ok(Compositions {
        next: Some(vec![1; n]),
    })
}

/// Iterator over compositions, generated in place without recursion.
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // successor in lexicographic order: drop the last part, bump the new
        // last part, refill with ones
        if current.len() > 1 {
            let mut succ = current.clone();
            let dropped = succ.pop().unwrap();
            *succ.last_mut().unwrap() += 1;
            succ.extend(std::iter::repeat_n(1, dropped - 1));
            self.next = Some(succ);
        }
        Some(Composition { parts: current })
    }
}

/// Product of the variables `x` at 1 + each proper prefix sum of the parts
/// (so `l` factors for `l` parts, starting at `x1`).
pub fn bracket_monomial(c: &Composition) -> MPoly {
    let mut poly = MPoly::one();
    let mut prefix = 0;
    for part in c.parts() {
        poly = &poly * &MPoly::var(Var::X(1 + prefix));
        prefix += part;
    }
    poly
}

/// Product of the variables `x` at each proper prefix sum of the parts
/// (`l - 1` factors; the empty product is 1).
pub fn brace_monomial(c: &Composition) -> MPoly {
    let mut poly = MPoly::one();
    let mut prefix = 0;
    for part in &c.parts()[..c.len() - 1] {
        prefix += part;
        poly = &poly * &MPoly::var(Var::X(prefix));
    }
    poly
}

/// The per-level generating polynomials behind the recurrence, in the formal
/// variables `x1..x_{alpha-1}`, `y`, `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixPolys {
    /// Level `j`: final state absent from the last component.
    pub absent_final: Vec<MPoly>,
    /// Level `j`: final state present.
    pub present_final: Vec<MPoly>,
}

/// Builds levels `0..alpha` of the generating polynomials: level 0 is
/// `(z, 2y)`, and each next level multiplies by the level variable, with the
/// same split as the counting recurrence.
pub fn prefix_polys(alpha: usize) -> PrefixPolys {
    assert!(alpha >= 1, "need at least one level");
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut absent = vec![MPoly::var(Var::Z)];
    let mut present = vec![MPoly::var(Var::Y).scale(&BigRational::from_integer(BigInt::from(2)))];
    for j in 1..alpha {
        let xj = MPoly::var(Var::X(j));
        let xj_minus_one = &xj - &MPoly::one();
        let half_xj = xj.scale(&half);
        let avoid = &(&xj_minus_one * &absent[j - 1]) + &(&half_xj * &present[j - 1]);
        let hit = &(&xj * &absent[j - 1]) + &(&half_xj * &present[j - 1]);
        absent.push(avoid);
        present.push(hit);
    }
    PrefixPolys {
        absent_final: absent,
        present_final: present,
    }
}

/// Total generating polynomial for an `alpha`-chain: top `present` level plus
/// every `absent` level.
pub fn chain_poly(alpha: usize) -> MPoly {
    let polys = prefix_polys(alpha);
    let mut total = polys.present_final.last().unwrap().clone();
    for poly in &polys.absent_final {
        total = &total + poly;
    }
    total
}

/// Evaluation form of [`chain_poly`]: the last variable is halved, so the
/// substitution can use a full power of two for the last component.
pub fn count_poly(alpha: usize) -> MPoly {
    let total = chain_poly(alpha);
    if alpha == 1 {
        // no x variables at all
        return total;
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let half_x = MPoly::var(Var::X(alpha - 1)).scale(&half);
    total.substitute(Var::X(alpha - 1), &half_x)
}

fn composition_sign(len: usize, parity_with: usize) -> BigRational {
    if (len + parity_with).is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Closed form of [`count_poly`] as a direct sum over compositions whose last
/// part is odd. Defined for `alpha >= 2`; the one-component polynomial has no
/// composition expansion and falls back to the recurrence-built form.
pub fn count_poly_expanded(alpha: usize) -> MPoly {
    assert!(alpha >= 1, "need at least one component");
    if alpha == 1 {
        return count_poly(1);
    }
    let three_half = BigRational::new(BigInt::from(3), BigInt::from(2));
    let mut total = MPoly::zero();
    for c in compositions(alpha - 1).unwrap() {
        if c.last_part() % 2 == 1 {
            let coeff = composition_sign(c.len(), alpha - 1)
                * rational_pow(&three_half, c.unit_parts_except_last());
            let term = &bracket_monomial(&c) * &MPoly::var(Var::Y);
            total = &total + &term.scale(&coeff);
        }
    }
    for c in compositions(alpha).unwrap() {
        if c.last_part() % 2 == 1 {
            let coeff = composition_sign(c.len(), alpha)
                * rational_pow(&three_half, c.unit_parts_interior());
            let term = &brace_monomial(&c) * &MPoly::var(Var::Z);
            total = &total + &term.scale(&coeff);
        }
    }
    total
}

/// Signed composition sum that equals the `y`-coefficient of the level-`i`
/// `absent` polynomial.
pub fn y_coeff_poly_by_compositions(i: usize) -> MPoly {
    if i == 0 {
        // only the empty composition, whose monomial is zero by convention
        return MPoly::zero();
    }
    let three_half = BigRational::new(BigInt::from(3), BigInt::from(2));
    let mut total = MPoly::zero();
    for c in compositions(i).unwrap() {
        let coeff =
            composition_sign(c.len(), i) * rational_pow(&three_half, c.unit_parts_except_last());
        total = &total + &bracket_monomial(&c).scale(&coeff);
    }
    total
}

/// Same `y`-coefficient polynomial, built by its three-term recurrence.
pub fn y_coeff_poly_by_recurrence(i: usize) -> MPoly {
    let three_half = BigRational::new(BigInt::from(3), BigInt::from(2));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut prev2 = MPoly::zero(); // level 0
    if i == 0 {
        return prev2;
    }
    let mut prev = MPoly::var(Var::X(1)); // level 1
    for level in 2..=i {
        let x = MPoly::var(Var::X(level));
        let lead = &x.scale(&three_half) - &MPoly::one();
        let next = &(&lead * &prev) + &(&x.scale(&half) * &prev2);
        prev2 = prev;
        prev = next;
    }
    prev
}

/// Signed composition sum (over compositions of `i + 1`, interior unit parts
/// weighted) that equals the `z`-coefficient of the level-`i` `absent`
/// polynomial.
pub fn z_coeff_poly_by_compositions(i: usize) -> MPoly {
    let three_half = BigRational::new(BigInt::from(3), BigInt::from(2));
    let mut total = MPoly::zero();
    for c in compositions(i + 1).unwrap() {
        let coeff =
            composition_sign(c.len(), i + 1) * rational_pow(&three_half, c.unit_parts_interior());
        total = &total + &brace_monomial(&c).scale(&coeff);
    }
    total
}

/// Exact bound by evaluating [`count_poly`]: `x_j` is set to
/// `2^(n_{j+1} - 1)` for the middle components, the last variable to
/// `2^(n_alpha)`, `y` to one half and `z` to `n_1 - 1`. A one-component
/// profile is its size.
pub fn formula_count(profile: &SizeProfile) -> Result<BigCount, BoundsError> {
    let alpha = profile.alpha();
    let sizes = profile.sizes();
    if alpha == 1 {
        return Ok(BigCount::from(sizes[0]));
    }
    let poly = count_poly(alpha);
    let mut assignment: BTreeMap<Var, BigRational> = BTreeMap::new();
    for (j, &middle) in sizes.iter().enumerate().take(alpha - 1).skip(1) {
        assignment.insert(
            Var::X(j),
            BigRational::from_integer(BigInt::one() << (middle - 1)),
        );
    }
    assignment.insert(
        Var::X(alpha - 1),
        BigRational::from_integer(BigInt::one() << sizes[alpha - 1]),
    );
    assignment.insert(
        Var::Y,
        BigRational::new(BigInt::one(), BigInt::from(2)),
    );
    assignment.insert(
        Var::Z,
        BigRational::from_integer(BigInt::from(sizes[0] as i64 - 1)),
    );
    let value = poly.evaluate(&assignment);
    if !value.is_integer() || value.is_negative() {
        return Err(BoundsError::NonIntegralCount(value.to_string()));
    }
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("non-negative integer"))
}
