//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are `x1, x2, ...` plus two distinguished variables `y` and `z`.
//! Terms are kept in graded-lexicographic order (`x1 < x2 < ... < y < z`) so
//! printing is canonical; equality is coefficient-map equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    Y,
    Z,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y => write!(f, "y"),
            Var::Z => write!(f, "z"),
        }
    }
}

/// A power product of variables; exponents are strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<Var, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        let mut exponents = BTreeMap::new();
        exponents.insert(v, 1);
        Monomial { exponents }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&v, &e) in &other.exponents {
            *exponents.entry(v).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        let exponents = self
            .exponents
            .iter()
            .map(|(&v, &exp)| (v, exp * e))
            .collect();
        Monomial { exponents }
    }

    /// The monomial with every occurrence of `v` removed.
    fn without(&self, v: Var) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.remove(&v);
        Monomial { exponents }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exponents.keys().copied()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // lexicographic on exponent vectors: the first variable (in Var
            // order) where the exponents differ decides, larger exponent wins
            let mut a = self.exponents.iter().peekable();
            let mut b = other.exponents.iter().peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    // remaining variables on one side only: that side has a
                    // positive exponent where the other has zero
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(&va, &ea)), Some(&(&vb, &eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            a.next();
                            b.next();
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&v, &e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: monomial -> non-zero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> MPoly {
        let mut poly = MPoly::zero();
        poly.add_term(Monomial::one(), c);
        poly
    }

    pub fn constant_int(c: i64) -> MPoly {
        MPoly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> MPoly {
        let mut poly = MPoly::zero();
        poly.add_term(Monomial::var(v), BigRational::one());
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, coeff)| (m.clone(), coeff * c))
            .collect();
        MPoly { terms }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Replaces every occurrence of `v` by `replacement`.
    pub fn substitute(&self, v: Var, replacement: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
            } else {
                let rest = m.without(v);
                let mut rest_poly = MPoly::zero();
                rest_poly.add_term(rest, c.clone());
                out = &out + &(&rest_poly * &replacement.pow(e));
            }
        }
        out
    }

    /// Coefficient of `v` in a polynomial that is linear in `v`.
    pub fn linear_coefficient(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            match m.exponent(v) {
                0 => {}
                1 => out.add_term(m.without(v), c.clone()),
                e => panic!("polynomial is not linear in {v}: found exponent {e}"),
            }
        }
        out
    }

    /// All variables appearing with a non-zero exponent.
    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Evaluates at the given assignment; every variable of the polynomial
    /// must be assigned.
    pub fn evaluate(&self, assignment: &BTreeMap<Var, BigRational>) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (&v, &e) in &m.exponents {
                let value = assignment
                    .get(&v)
                    .unwrap_or_else(|| panic!("no value assigned to {v}"));
                term *= rational_pow(value, e);
            }
            total += term;
        }
        total
    }
}

pub fn rational_pow(base: &BigRational, exponent: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..exponent {
        out *= base;
    }
    out
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        MPoly { terms }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
