//! Sparse multivariate polynomials with exact coefficients.
//!
//! The canonical form is global: terms are kept in graded-lexicographic
//! order with `x0 > x1 > ... > xn`, zero coefficients are never stored, and
//! "monic" always means graded-lex leading coefficient 1. Equality of
//! canonical forms is therefore structural equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, FieldSpec};

/// Exponent vector of a single monomial. Ordered graded-lexicographically:
/// higher total degree first, ties broken by the exponent of the smallest
/// variable index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    spec: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, FieldScalar>,
}

impl Polynomial {
    pub fn zero(spec: FieldSpec, nvars: usize) -> Self {
        Polynomial {
            spec,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: FieldSpec, nvars: usize) -> Self {
        Self::constant(spec.one(), nvars)
    }

    pub fn constant(value: FieldScalar, nvars: usize) -> Self {
        let spec = value.spec();
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::constant(nvars), value);
        }
        Polynomial { spec, nvars, terms }
    }

    pub fn variable(spec: FieldSpec, nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::VariableOutOfRange {
                index,
                nvars,
            });
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::variable(nvars, index), spec.one());
        Ok(Polynomial { spec, nvars, terms })
    }

    /// Builds a polynomial from raw terms, summing duplicates and dropping
    /// zero coefficients.
    pub fn from_terms<I>(spec: FieldSpec, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FieldScalar, Vec<u32>)>,
    {
        let mut poly = Self::zero(spec, nvars);
        for (coeff, exps) in terms {
            if coeff.spec() != spec {
                return Err(Error::FieldMismatch);
            }
            if exps.len() != nvars {
                return Err(Error::NvarsMismatch(exps.len(), nvars));
            }
            poly.add_term(Monomial::new(exps), coeff)?;
        }
        Ok(poly)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_constant() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_constant())
    }

    /// The value of a constant polynomial (zero included), `None` otherwise.
    pub fn constant_value(&self) -> Option<FieldScalar> {
        if self.is_zero() {
            return Some(self.spec.zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldScalar)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &FieldScalar)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldScalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&FieldScalar> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial. Because the term order
    /// is graded, this is the degree of the leading monomial.
    pub fn total_degree(&self) -> Option<usize> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.total_degree()
        }
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms
            .keys()
            .map(|m| m.exponents()[var] as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[var] > 0)
    }

    /// One flag per variable: does it occur with positive exponent.
    pub fn vars_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used
    }

    fn require_compatible(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: FieldScalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(existing) => {
                let sum = existing.add(&c)?;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.require_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.neg()))
            .collect();
        Polynomial {
            spec: self.spec,
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.require_compatible(other)?;
        let mut out = Self::zero(self.spec, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, scalar: &FieldScalar) -> Result<Self> {
        if scalar.spec() != self.spec {
            return Err(Error::FieldMismatch);
        }
        if scalar.is_zero() {
            return Ok(Self::zero(self.spec, self.nvars));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.mul(scalar)?);
        }
        Ok(Polynomial {
            spec: self.spec,
            nvars: self.nvars,
            terms,
        })
    }

    /// Single-term product `coeff * monomial * self`.
    pub(crate) fn mul_term(&self, m: &Monomial, c: &FieldScalar) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero(self.spec, self.nvars));
        }
        let mut terms = BTreeMap::new();
        for (mm, cc) in &self.terms {
            terms.insert(mm.mul(m), cc.mul(c)?);
        }
        Ok(Polynomial {
            spec: self.spec,
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = Self::one(self.spec, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact division: the quotient `Q` with `Q * divisor = self`. Reports
    /// [`Error::NonExactDivision`] when no such quotient exists; a remainder
    /// is never returned.
    pub fn divexact(&self, divisor: &Self) -> Result<Self> {
        self.require_compatible(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = divisor.leading_term().expect("nonzero divisor");
        let dm = dm.clone();
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.spec, self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm).ok_or(Error::NonExactDivision)?;
            let qc = rc.mul(&dc_inv)?;
            rem = rem.sub(&divisor.mul_term(&qm, &qc)?)?;
            quot.add_term(qm, qc)?;
        }
        Ok(quot)
    }

    /// Scales so the graded-lex leading coefficient is 1. Zero stays zero.
    pub fn make_monic(&self) -> Result<Self> {
        match self.leading_coefficient() {
            None => Ok(self.clone()),
            Some(lc) => {
                if lc.is_one() {
                    Ok(self.clone())
                } else {
                    self.mul_scalar(&lc.inv()?)
                }
            }
        }
    }

    /// Multiplies every term by the power of `x0` that lifts it to total
    /// degree `d`. The input must not involve `x0`.
    pub fn homogenize(&self, d: usize) -> Result<Self> {
        if self.uses_var(0) {
            return Err(Error::NonAffinePolynomial);
        }
        if let Some(deg) = self.total_degree() {
            if d < deg {
                return Err(Error::DegreeTooSmall {
                    target: d,
                    degree: deg,
                });
            }
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            exps[0] = (d - m.degree()) as u32;
            terms.insert(Monomial::new(exps), c.clone());
        }
        Ok(Polynomial {
            spec: self.spec,
            nvars: self.nvars,
            terms,
        })
    }

    /// Substitutes `x0 = 1`.
    pub fn dehomogenize(&self) -> Self {
        let mut out = Self::zero(self.spec, self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            exps[0] = 0;
            out.add_term(Monomial::new(exps), c.clone())
                .expect("same spec");
        }
        out
    }

    pub fn eval(&self, point: &[FieldScalar]) -> Result<FieldScalar> {
        if point.len() != self.nvars {
            return Err(Error::PointLengthMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        for c in point {
            if c.spec() != self.spec {
                return Err(Error::FieldMismatch);
            }
        }
        let mut acc = self.spec.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e as i64)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Substitutes a polynomial for every variable. `args[i]` replaces `x_i`;
    /// all arguments must share a spec and variable count, which become the
    /// spec and variable count of the result.
    pub fn subst(&self, args: &[Polynomial]) -> Result<Polynomial> {
        if args.len() != self.nvars {
            return Err(Error::PointLengthMismatch {
                expected: self.nvars,
                got: args.len(),
            });
        }
        let out_nvars = args.first().map(|a| a.nvars()).unwrap_or(0);
        for a in args {
            if a.spec() != self.spec {
                return Err(Error::FieldMismatch);
            }
            if a.nvars() != out_nvars {
                return Err(Error::NvarsMismatch(a.nvars(), out_nvars));
            }
        }
        // cache powers of each argument up to the largest exponent used
        let mut max_exp = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                max_exp[i] = max_exp[i].max(e);
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(self.nvars);
        for (i, arg) in args.iter().enumerate() {
            let mut ps = vec![Polynomial::one(self.spec, out_nvars)];
            for e in 1..=max_exp[i] as usize {
                let next = ps[e - 1].mul(arg)?;
                ps.push(next);
            }
            powers.push(ps);
        }
        let mut acc = Polynomial::zero(self.spec, out_nvars);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone(), out_nvars);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&powers[i][e as usize])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Parses the polynomial text grammar (see the crate README).
    pub fn parse(spec: FieldSpec, nvars: usize, text: &str) -> Result<Self> {
        crate::parse::parse_polynomial(spec, nvars, text)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let (sign_neg, mag) = if c.is_negative() {
                (true, c.abs())
            } else {
                (false, c.clone())
            };
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else {
                let mut wrote = false;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    wrote = true;
                }
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if wrote {
                        write!(f, "*")?;
                    }
                    if e == 1 {
                        write!(f, "x{i}")?;
                    } else {
                        write!(f, "x{i}^{e}")?;
                    }
                    wrote = true;
                }
            }
        }
        Ok(())
    }
}
