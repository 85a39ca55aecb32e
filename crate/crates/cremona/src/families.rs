//! Two explicit one- and two-parameter families of birational maps with
//! fully understood degree growth.
//!
//! The unipotent family `rho(t)` acts in the chart `x0 = 1` by
//! `(x1, ..., xn) -> (x1 + 1, x2 (x1 + t)/x1, x3, ..., xn)`; its `m`-th
//! iterate multiplies the second coordinate by
//! `prod_{i<m} (x1 + t + i) / prod_{i<m} (x1 + i)`, which telescopes
//! exactly when `t` lies in the additive subgroup generated by 1. The
//! semi-simple family `rho(a, xi)` acts by
//! `(x1, ..., xn) -> (xi x1, x2 (x1 + a)/(x1 + 1), x3, ..., xn)` and its
//! iterate telescopes exactly when `a = xi^k` for some integer `k`. In the
//! telescoping cases the degree sequence is bounded by `|k| + 1` and the
//! map is conjugate to the translation normal form `rho(0)` or the scaling
//! normal form `rho(1, xi)`; otherwise the degree grows linearly.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::field::{FieldScalar, FieldSpec};
use crate::poly::Polynomial;
use crate::ratmap::{AffineMap, RationalMap, WdPoint};

/// Default bound for conjugacy-witness searches.
pub const DEFAULT_KMAX: i64 = 64;

/// Parameter of the unipotent family: ambient dimension `n >= 2` and the
/// translation parameter `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnipotentParam {
    n: usize,
    t: FieldScalar,
}

impl UnipotentParam {
    pub fn new(n: usize, t: FieldScalar) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(
                "the family needs ambient dimension n >= 2".into(),
            ));
        }
        Ok(UnipotentParam { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> &FieldScalar {
        &self.t
    }

    pub fn spec(&self) -> FieldSpec {
        self.t.spec()
    }
}

/// Parameter of the semi-simple family: ambient dimension `n >= 2`, the
/// parameter `a`, and the nonzero multiplier `xi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemisimpleParam {
    n: usize,
    a: FieldScalar,
    xi: FieldScalar,
}

impl SemisimpleParam {
    pub fn new(n: usize, a: FieldScalar, xi: FieldScalar) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(
                "the family needs ambient dimension n >= 2".into(),
            ));
        }
        if a.spec() != xi.spec() {
            return Err(Error::FieldMismatch);
        }
        if xi.is_zero() {
            return Err(Error::InvalidArgument("xi must be nonzero".into()));
        }
        Ok(SemisimpleParam { n, a, xi })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &FieldScalar {
        &self.a
    }

    pub fn xi(&self) -> &FieldScalar {
        &self.xi
    }

    pub fn spec(&self) -> FieldSpec {
        self.a.spec()
    }
}

/// Exact classification of a family parameter, with a conjugacy witness to
/// the normal form in the algebraic case.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParamClassification {
    Algebraic {
        k: i64,
        conjugator: RationalMap,
        conjugator_inv: RationalMap,
    },
    NotAlgebraic,
    /// The witness index would exceed the search bound.
    SearchExhausted { k_max: i64 },
}

impl ParamClassification {
    pub fn is_algebraic(&self) -> bool {
        matches!(self, ParamClassification::Algebraic { .. })
    }
}

// ---------------------------------------------------------------------------
// small polynomial builders
// ---------------------------------------------------------------------------

fn var(spec: FieldSpec, nvars: usize, i: usize) -> Polynomial {
    Polynomial::variable(spec, nvars, i).expect("index within ambient dimension")
}

/// `x1 + c` in the chart variables.
fn x1_plus(spec: FieldSpec, nvars: usize, c: &FieldScalar) -> Polynomial {
    Polynomial::from_terms(
        spec,
        nvars,
        [
            (spec.one(), monomial_exps(nvars, 1, 1)),
            (c.clone(), vec![0; nvars]),
        ],
    )
    .expect("valid term data")
}

/// `prod (x1 + c)` over the given constants.
fn product_of_linear(spec: FieldSpec, nvars: usize, consts: &[FieldScalar]) -> Polynomial {
    let mut acc = Polynomial::one(spec, nvars);
    for c in consts {
        acc = acc.mul(&x1_plus(spec, nvars, c)).expect("same spec");
    }
    acc
}

fn monomial_exps(nvars: usize, index: usize, exp: u32) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[index] = exp;
    e
}

/// Removes the common part of two multisets of field constants; what
/// remains on each side is coprime factor data.
fn cancel_common(num: Vec<FieldScalar>, mut den: Vec<FieldScalar>) -> (Vec<FieldScalar>, Vec<FieldScalar>) {
    let mut num_left = Vec::with_capacity(num.len());
    for c in num {
        if let Some(pos) = den.iter().position(|d| *d == c) {
            den.remove(pos);
        } else {
            num_left.push(c);
        }
    }
    (num_left, den)
}

// ---------------------------------------------------------------------------
// unipotent family
// ---------------------------------------------------------------------------

/// The homogeneous tuple
/// `[x0 x1 : x1(x1 + x0) : x2(x1 + t x0) : x3 x1 : ... : xn x1]`,
/// cancelled. At `t = 0` the common factor `x1` drops out and the map is
/// the linear translation.
pub fn unipotent_map(p: &UnipotentParam) -> RationalMap {
    let spec = p.spec();
    let nvars = p.n + 1;
    let one = spec.one();
    let mut comps = Vec::with_capacity(nvars);
    // x0*x1
    comps.push(
        Polynomial::from_terms(spec, nvars, [(one.clone(), two_vars(nvars, 0, 1))]).unwrap(),
    );
    // x1^2 + x0*x1
    comps.push(
        Polynomial::from_terms(
            spec,
            nvars,
            [
                (one.clone(), monomial_exps(nvars, 1, 2)),
                (one.clone(), two_vars(nvars, 0, 1)),
            ],
        )
        .unwrap(),
    );
    // x2*(x1 + t*x0)
    comps.push(
        Polynomial::from_terms(
            spec,
            nvars,
            [
                (one.clone(), two_vars(nvars, 1, 2)),
                (p.t.clone(), two_vars(nvars, 0, 2)),
            ],
        )
        .unwrap(),
    );
    for i in 3..nvars {
        comps.push(
            Polynomial::from_terms(spec, nvars, [(one.clone(), two_vars(nvars, 1, i))]).unwrap(),
        );
    }
    RationalMap::new(comps).expect("family tuple is valid")
}

fn two_vars(nvars: usize, i: usize, j: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[i] += 1;
    e[j] += 1;
    e
}

/// Closed-form `m`-th iterate: in the chart,
/// `(x1 + m, x2 * prod_{i<m}(x1 + t + i) / prod_{i<m}(x1 + i), x3, ...)`,
/// with the overlapping linear factors of numerator and denominator
/// cancelled as multisets of constants before homogenizing.
pub fn unipotent_iterate(p: &UnipotentParam, m: usize) -> Result<RationalMap> {
    if m == 0 {
        return Err(Error::InvalidArgument("iterate requires m >= 1".into()));
    }
    let spec = p.spec();
    let nvars = p.n + 1;
    let one = spec.one();
    let mut num_consts = Vec::with_capacity(m);
    let mut den_consts = Vec::with_capacity(m);
    let mut offset = spec.zero();
    for _ in 0..m {
        num_consts.push(p.t.add(&offset)?);
        den_consts.push(offset.clone());
        offset = offset.add(&one)?;
    }
    let (num_consts, den_consts) = cancel_common(num_consts, den_consts);
    let mut pairs = Vec::with_capacity(p.n);
    // offset now equals m in the field
    pairs.push((
        x1_plus(spec, nvars, &offset),
        Polynomial::one(spec, nvars),
    ));
    pairs.push((
        var(spec, nvars, 2).mul(&product_of_linear(spec, nvars, &num_consts))?,
        product_of_linear(spec, nvars, &den_consts),
    ));
    for i in 3..nvars {
        pairs.push((var(spec, nvars, i), Polynomial::one(spec, nvars)));
    }
    AffineMap::new(pairs)?.to_projective()
}

/// The inverse, solved from the chart formula:
/// `(x1 - 1, x2 (x1 - 1)/(x1 + t - 1), x3, ..., xn)`.
pub fn unipotent_inverse(p: &UnipotentParam) -> RationalMap {
    let spec = p.spec();
    let nvars = p.n + 1;
    let minus_one = spec.one().neg();
    let t_minus_one = p.t.add(&minus_one).expect("same spec");
    let mut pairs = Vec::with_capacity(p.n);
    pairs.push((
        x1_plus(spec, nvars, &minus_one),
        Polynomial::one(spec, nvars),
    ));
    pairs.push((
        var(spec, nvars, 2)
            .mul(&x1_plus(spec, nvars, &minus_one))
            .expect("same spec"),
        x1_plus(spec, nvars, &t_minus_one),
    ));
    for i in 3..nvars {
        pairs.push((var(spec, nvars, i), Polynomial::one(spec, nvars)));
    }
    AffineMap::new(pairs)
        .and_then(|a| a.to_projective())
        .expect("inverse tuple is valid")
}

/// Conjugator pair `(psi, psi_inv)` with `psi . rho(k) . psi_inv = rho(0)`.
///
/// For `k > 0`, `psi` divides the second coordinate by
/// `x1 (x1 + 1) ... (x1 + k - 1)`; for `k < 0` it multiplies by
/// `(x1 - 1)(x1 - 2) ... (x1 + k)`. Over a prime field `|k|` must stay
/// below `p`, otherwise the factor list wraps around.
pub fn unipotent_conjugator(
    spec: FieldSpec,
    n: usize,
    k: i64,
) -> Result<(RationalMap, RationalMap)> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "k = 0 needs no conjugation".into(),
        ));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the family needs ambient dimension n >= 2".into(),
        ));
    }
    let p = spec.characteristic();
    if p != 0 && k.unsigned_abs() >= p {
        return Err(Error::FactorCollision {
            k: k.unsigned_abs(),
            p,
        });
    }
    let nvars = n + 1;
    let consts: Vec<FieldScalar> = if k > 0 {
        (0..k).map(|j| FieldScalar::from_integer(spec, j)).collect()
    } else {
        (1..=-k)
            .map(|j| FieldScalar::from_integer(spec, -j))
            .collect()
    };
    let factor = product_of_linear(spec, nvars, &consts);
    let x2 = var(spec, nvars, 2);
    let one = Polynomial::one(spec, nvars);
    let second_div = (x2.clone(), factor.clone());
    let second_mul = (x2.mul(&factor)?, one.clone());
    let (fwd_second, bwd_second) = if k > 0 {
        (second_div, second_mul)
    } else {
        (second_mul, second_div)
    };
    let psi = chart_map_with_second(spec, n, fwd_second)?;
    let psi_inv = chart_map_with_second(spec, n, bwd_second)?;
    Ok((psi, psi_inv))
}

/// Builds the chart map `(x1, <second>, x3, ..., xn)` fixing every
/// coordinate except the second.
fn chart_map_with_second(
    spec: FieldSpec,
    n: usize,
    second: (Polynomial, Polynomial),
) -> Result<RationalMap> {
    let nvars = n + 1;
    let one = Polynomial::one(spec, nvars);
    let mut pairs = Vec::with_capacity(n);
    pairs.push((var(spec, nvars, 1), one.clone()));
    pairs.push(second);
    for i in 3..nvars {
        pairs.push((var(spec, nvars, i), one.clone()));
    }
    AffineMap::new(pairs)?.to_projective()
}

/// The translation normal form `rho(0)`.
pub fn unipotent_normal_form(spec: FieldSpec, n: usize) -> Result<RationalMap> {
    Ok(unipotent_map(&UnipotentParam::new(n, spec.zero())?))
}

/// Exact parameter classification.
///
/// Over the rationals, `rho(t)` is algebraic precisely when `t` is an
/// integer (the additive subgroup generated by 1); over `F_p` that subgroup
/// is the whole field, so every parameter is algebraic with `k` the least
/// non-negative representative. `SearchExhausted` is returned only when the
/// witness index would exceed `k_max`.
pub fn unipotent_classify(p: &UnipotentParam, k_max: i64) -> ParamClassification {
    let spec = p.spec();
    let k = if let Some(r) = p.t.as_rational() {
        if !r.is_integer() {
            return ParamClassification::NotAlgebraic;
        }
        let int = r.to_integer();
        if int.abs().to_i64().map(|v| v > k_max).unwrap_or(true) {
            return ParamClassification::SearchExhausted { k_max };
        }
        int.to_i64().expect("bounded by k_max")
    } else {
        let r = p.t.as_residue().expect("prime-field scalar");
        if (r as i64) > k_max {
            return ParamClassification::SearchExhausted { k_max };
        }
        r as i64
    };
    let (conjugator, conjugator_inv) = if k == 0 {
        let id = RationalMap::identity(spec, p.n).expect("n >= 2");
        (id.clone(), id)
    } else {
        unipotent_conjugator(spec, p.n, k).expect("k within range")
    };
    debug_assert!({
        let normal = unipotent_normal_form(spec, p.n).unwrap();
        unipotent_map(p)
            .conjugate_by(&conjugator, &conjugator_inv)
            .map(|m| m == normal)
            .unwrap_or(false)
    });
    ParamClassification::Algebraic {
        k,
        conjugator,
        conjugator_inv,
    }
}

/// The degree-2 tuple family over the projective parameter line `[mu : lambda]`:
/// `[mu x0 x1 : mu x1(x1+x0) : x2(mu x1 + lambda x0) : mu x3 x1 : ...]`.
/// At `mu != 0` it projects to the unipotent map with `t = lambda/mu`; at
/// `mu = 0` components vanish identically and the projection is degenerate.
pub fn unipotent_wd_embedding(
    n: usize,
    mu: &FieldScalar,
    lambda: &FieldScalar,
) -> Result<WdPoint> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the family needs ambient dimension n >= 2".into(),
        ));
    }
    if mu.spec() != lambda.spec() {
        return Err(Error::FieldMismatch);
    }
    if mu.is_zero() && lambda.is_zero() {
        return Err(Error::ZeroTuple);
    }
    let spec = mu.spec();
    let nvars = n + 1;
    let mut comps = Vec::with_capacity(nvars);
    comps.push(
        Polynomial::from_terms(spec, nvars, [(mu.clone(), two_vars(nvars, 0, 1))]).unwrap(),
    );
    comps.push(
        Polynomial::from_terms(
            spec,
            nvars,
            [
                (mu.clone(), monomial_exps(nvars, 1, 2)),
                (mu.clone(), two_vars(nvars, 0, 1)),
            ],
        )
        .unwrap(),
    );
    comps.push(
        Polynomial::from_terms(
            spec,
            nvars,
            [
                (mu.clone(), two_vars(nvars, 1, 2)),
                (lambda.clone(), two_vars(nvars, 0, 2)),
            ],
        )
        .unwrap(),
    );
    for i in 3..nvars {
        comps.push(
            Polynomial::from_terms(spec, nvars, [(mu.clone(), two_vars(nvars, 1, i))]).unwrap(),
        );
    }
    WdPoint::new(comps)
}

// ---------------------------------------------------------------------------
// semi-simple family
// ---------------------------------------------------------------------------

/// The homogeneous tuple
/// `[x0(x1+x0) : xi x1(x1+x0) : x2(x1 + a x0) : x3(x1+x0) : ... : xn(x1+x0)]`,
/// cancelled. At `a = 1` the common factor `x1 + x0` drops out and the map
/// is the linear scaling.
pub fn semisimple_map(p: &SemisimpleParam) -> RationalMap {
    let spec = p.spec();
    let nvars = p.n + 1;
    let one = spec.one();
    let x1_plus_x0 = Polynomial::from_terms(
        spec,
        nvars,
        [
            (one.clone(), monomial_exps(nvars, 1, 1)),
            (one.clone(), monomial_exps(nvars, 0, 1)),
        ],
    )
    .unwrap();
    let mut comps = Vec::with_capacity(nvars);
    comps.push(var(spec, nvars, 0).mul(&x1_plus_x0).unwrap());
    comps.push(
        var(spec, nvars, 1)
            .mul(&x1_plus_x0)
            .unwrap()
            .mul_scalar(&p.xi)
            .unwrap(),
    );
    comps.push(
        Polynomial::from_terms(
            spec,
            nvars,
            [
                (one.clone(), two_vars(nvars, 1, 2)),
                (p.a.clone(), two_vars(nvars, 0, 2)),
            ],
        )
        .unwrap(),
    );
    for i in 3..nvars {
        comps.push(var(spec, nvars, i).mul(&x1_plus_x0).unwrap());
    }
    RationalMap::new(comps).expect("family tuple is valid")
}

/// Closed-form `m`-th iterate: in the chart,
/// `(xi^m x1, x2 * prod_{i<m}(xi^i x1 + a) / prod_{i<m}(xi^i x1 + 1), x3, ...)`.
/// Normalizing each linear factor to monic form turns both products into
/// `prod (x1 + c)` with constants `a xi^{-i}` and `xi^{-i}`, whose scalar
/// prefactors coincide and cancel; the constants are then cancelled as
/// multisets.
pub fn semisimple_iterate(p: &SemisimpleParam, m: usize) -> Result<RationalMap> {
    if m == 0 {
        return Err(Error::InvalidArgument("iterate requires m >= 1".into()));
    }
    let spec = p.spec();
    let nvars = p.n + 1;
    let xi_inv = p.xi.inv()?;
    let mut num_consts = Vec::with_capacity(m);
    let mut den_consts = Vec::with_capacity(m);
    let mut inv_pow = spec.one();
    for _ in 0..m {
        num_consts.push(p.a.mul(&inv_pow)?);
        den_consts.push(inv_pow.clone());
        inv_pow = inv_pow.mul(&xi_inv)?;
    }
    let (num_consts, den_consts) = cancel_common(num_consts, den_consts);
    let xi_pow_m = p.xi.pow(m as i64)?;
    let mut pairs = Vec::with_capacity(p.n);
    pairs.push((
        var(spec, nvars, 1).mul_scalar(&xi_pow_m)?,
        Polynomial::one(spec, nvars),
    ));
    pairs.push((
        var(spec, nvars, 2).mul(&product_of_linear(spec, nvars, &num_consts))?,
        product_of_linear(spec, nvars, &den_consts),
    ));
    for i in 3..nvars {
        pairs.push((var(spec, nvars, i), Polynomial::one(spec, nvars)));
    }
    AffineMap::new(pairs)?.to_projective()
}

/// The inverse, solved from the chart formula:
/// `(x1/xi, x2 (x1/xi + 1)/(x1/xi + a), x3, ..., xn)`.
pub fn semisimple_inverse(p: &SemisimpleParam) -> RationalMap {
    let spec = p.spec();
    let nvars = p.n + 1;
    let xi_inv = p.xi.inv().expect("xi nonzero");
    let scaled = var(spec, nvars, 1).mul_scalar(&xi_inv).expect("same spec");
    let one_poly = Polynomial::one(spec, nvars);
    let num = var(spec, nvars, 2)
        .mul(&scaled.add(&one_poly).expect("same spec"))
        .expect("same spec");
    let den = scaled
        .add(&Polynomial::constant(p.a.clone(), nvars))
        .expect("same spec");
    let mut pairs = Vec::with_capacity(p.n);
    pairs.push((scaled, one_poly.clone()));
    pairs.push((num, den));
    for i in 3..nvars {
        pairs.push((var(spec, nvars, i), one_poly.clone()));
    }
    AffineMap::new(pairs)
        .and_then(|a| a.to_projective())
        .expect("inverse tuple is valid")
}

/// Conjugator pair `(psi, psi_inv)` with
/// `psi . rho(xi^k, xi) . psi_inv = rho(1, xi)`.
///
/// For `k > 0`, `psi` multiplies the second coordinate by
/// `prod_{i=1..k} (xi^{-i} + 1/x1)`; for `k < 0` it divides by
/// `prod_{i=0..|k|-1} (xi^i + 1/x1)`. Each factor clears to
/// `(xi^{+-i} x1 + 1)/x1`, so the chart map is a ratio of products of
/// linear forms with nonzero constant terms.
pub fn semisimple_conjugator(
    spec: FieldSpec,
    n: usize,
    xi: &FieldScalar,
    k: i64,
) -> Result<(RationalMap, RationalMap)> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "k = 0 needs no conjugation".into(),
        ));
    }
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the family needs ambient dimension n >= 2".into(),
        ));
    }
    if xi.spec() != spec {
        return Err(Error::FieldMismatch);
    }
    if xi.is_zero() {
        return Err(Error::InvalidArgument("xi must be nonzero".into()));
    }
    let nvars = n + 1;
    let count = k.unsigned_abs() as usize;
    // factors (xi^e x1 + 1) with e = -1..-k for k > 0, e = 0..|k|-1 for k < 0
    let mut factor = Polynomial::one(spec, nvars);
    let step = if k > 0 { xi.inv()? } else { xi.clone() };
    let mut coeff = if k > 0 { step.clone() } else { spec.one() };
    for _ in 0..count {
        let lin = Polynomial::from_terms(
            spec,
            nvars,
            [
                (coeff.clone(), monomial_exps(nvars, 1, 1)),
                (spec.one(), vec![0; nvars]),
            ],
        )
        .unwrap();
        factor = factor.mul(&lin)?;
        coeff = coeff.mul(&step)?;
    }
    let x1_pow = var(spec, nvars, 1).pow(count)?;
    let x2 = var(spec, nvars, 2);
    let ratio = (x2.mul(&factor)?, x1_pow.clone());
    let ratio_inv = (x2.mul(&x1_pow)?, factor);
    let (fwd_second, bwd_second) = if k > 0 {
        (ratio, ratio_inv)
    } else {
        (ratio_inv, ratio)
    };
    let psi = chart_map_with_second(spec, n, fwd_second)?;
    let psi_inv = chart_map_with_second(spec, n, bwd_second)?;
    Ok((psi, psi_inv))
}

/// The scaling normal form `rho(1, xi)`.
pub fn semisimple_normal_form(spec: FieldSpec, n: usize, xi: &FieldScalar) -> Result<RationalMap> {
    Ok(semisimple_map(&SemisimpleParam::new(
        n,
        spec.one(),
        xi.clone(),
    )?))
}

/// Exact parameter classification: searches for `k` with `a = xi^k`.
///
/// Over the rationals the search is conclusive whenever `|xi| != 1`
/// (magnitudes are strictly monotone in `k`), and degenerates to
/// `k in {0, 1}` for `xi = +-1`; over `F_p` it is a brute-force discrete
/// logarithm in the cyclic group generated by `xi`. `SearchExhausted` is
/// returned only when the witness index would exceed `k_max`.
pub fn semisimple_classify(p: &SemisimpleParam, k_max: i64) -> ParamClassification {
    let spec = p.spec();
    let outcome = if spec.is_rationals() {
        classify_power_q(&p.a, &p.xi, k_max)
    } else {
        classify_power_fp(&p.a, &p.xi, k_max)
    };
    let k = match outcome {
        PowerSearch::Found(k) => k,
        PowerSearch::NotFound => return ParamClassification::NotAlgebraic,
        PowerSearch::Exhausted => return ParamClassification::SearchExhausted { k_max },
    };
    let (conjugator, conjugator_inv) = if k == 0 {
        let id = RationalMap::identity(spec, p.n).expect("n >= 2");
        (id.clone(), id)
    } else {
        semisimple_conjugator(spec, p.n, &p.xi, k).expect("validated parameters")
    };
    debug_assert!({
        let normal = semisimple_normal_form(spec, p.n, &p.xi).unwrap();
        semisimple_map(p)
            .conjugate_by(&conjugator, &conjugator_inv)
            .map(|m| m == normal)
            .unwrap_or(false)
    });
    ParamClassification::Algebraic {
        k,
        conjugator,
        conjugator_inv,
    }
}

enum PowerSearch {
    Found(i64),
    NotFound,
    Exhausted,
}

fn classify_power_q(a: &FieldScalar, xi: &FieldScalar, k_max: i64) -> PowerSearch {
    if a.is_zero() {
        return PowerSearch::NotFound;
    }
    if a.is_one() {
        return PowerSearch::Found(0);
    }
    let minus_one = a.spec().one().neg();
    if xi.abs().is_one() {
        // xi = +-1: the subgroup is {1} or {1, -1}
        if *xi == minus_one && *a == minus_one {
            return PowerSearch::Found(1);
        }
        return PowerSearch::NotFound;
    }
    if a.abs().is_one() {
        // |xi^k| = 1 only at k = 0, and a = 1 was handled above
        return PowerSearch::NotFound;
    }
    // reduce to |base| > 1 and |target| > 1: xi^k = a becomes base^e = target
    // with k = base_sign * target_sign * e and e >= 1
    let one = num_rational::BigRational::from_integer(1.into());
    let base_sign: i64 = if abs_gt(xi, &one) { 1 } else { -1 };
    let base = if base_sign == 1 {
        xi.clone()
    } else {
        xi.inv().expect("xi nonzero")
    };
    let (target, target_sign): (FieldScalar, i64) = if abs_gt(a, &one) {
        (a.clone(), 1)
    } else {
        (a.inv().expect("a nonzero"), -1)
    };
    let mut pow = base.clone();
    let mut e: i64 = 1;
    loop {
        let cmp = pow
            .abs()
            .as_rational()
            .unwrap()
            .cmp(target.abs().as_rational().unwrap());
        match cmp {
            std::cmp::Ordering::Less => {
                if e >= k_max {
                    return PowerSearch::Exhausted;
                }
                pow = pow.mul(&base).expect("same spec");
                e += 1;
            }
            std::cmp::Ordering::Equal => {
                return if pow == target {
                    PowerSearch::Found(base_sign * target_sign * e)
                } else {
                    PowerSearch::NotFound
                };
            }
            std::cmp::Ordering::Greater => return PowerSearch::NotFound,
        }
    }
}

fn abs_gt(x: &FieldScalar, bound: &num_rational::BigRational) -> bool {
    x.abs().as_rational().expect("rational scalar") > bound
}

fn classify_power_fp(a: &FieldScalar, xi: &FieldScalar, k_max: i64) -> PowerSearch {
    if a.is_zero() {
        return PowerSearch::NotFound;
    }
    let p = a.spec().characteristic();
    let mut pow = a.spec().one();
    for k in 0..p {
        if pow == *a {
            return if (k as i64) <= k_max {
                PowerSearch::Found(k as i64)
            } else {
                PowerSearch::Exhausted
            };
        }
        pow = pow.mul(xi).expect("same spec");
        if pow.is_one() {
            // the cyclic subgroup has been fully traversed
            break;
        }
    }
    PowerSearch::NotFound
}

/// The degree-2 tuple family over the projective parameter plane
/// `[mu : eta : lambda]`:
/// `[mu x0(x1+x0) : lambda x1(x1+x0) : x2(mu x1 + eta x0) : mu x3(x1+x0) : ...]`.
/// At `mu lambda != 0` it projects to the semi-simple map with
/// `a = eta/mu, xi = lambda/mu`; when `mu lambda = 0` a component vanishes
/// identically and the projection is degenerate.
pub fn semisimple_wd_embedding(
    n: usize,
    mu: &FieldScalar,
    eta: &FieldScalar,
    lambda: &FieldScalar,
) -> Result<WdPoint> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the family needs ambient dimension n >= 2".into(),
        ));
    }
    if mu.spec() != eta.spec() || mu.spec() != lambda.spec() {
        return Err(Error::FieldMismatch);
    }
    if mu.is_zero() && eta.is_zero() && lambda.is_zero() {
        return Err(Error::ZeroTuple);
    }
    let spec = mu.spec();
    let nvars = n + 1;
    let one = spec.one();
    let x1_plus_x0 = Polynomial::from_terms(
        spec,
        nvars,
        [
            (one.clone(), monomial_exps(nvars, 1, 1)),
            (one.clone(), monomial_exps(nvars, 0, 1)),
        ],
    )
    .unwrap();
    let mut comps = Vec::with_capacity(nvars);
    comps.push(var(spec, nvars, 0).mul(&x1_plus_x0).unwrap().mul_scalar(mu).unwrap());
    comps.push(
        var(spec, nvars, 1)
            .mul(&x1_plus_x0)
            .unwrap()
            .mul_scalar(lambda)
            .unwrap(),
    );
    comps.push(
        Polynomial::from_terms(
            spec,
            nvars,
            [
                (mu.clone(), two_vars(nvars, 1, 2)),
                (eta.clone(), two_vars(nvars, 0, 2)),
            ],
        )
        .unwrap(),
    );
    for i in 3..nvars {
        comps.push(
            var(spec, nvars, i)
                .mul(&x1_plus_x0)
                .unwrap()
                .mul_scalar(mu)
                .unwrap(),
        );
    }
    WdPoint::new(comps)
}
