//! Multivariate polynomial GCD.
//!
//! Recursive content/primitive-part reduction in a main variable (the lowest
//! index occurring in both inputs), with a subresultant polynomial remainder
//! sequence on the primitive parts. All divisions along the way are exact;
//! the result is normalized monic (graded-lex leading coefficient 1).

use crate::error::Result;
use crate::poly::Polynomial;

impl Polynomial {
    /// A greatest common divisor of `self` and `other`, monic. `gcd(0, 0)`
    /// is 0 by convention.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.spec() != other.spec() {
            return Err(crate::error::Error::FieldMismatch);
        }
        if self.nvars() != other.nvars() {
            return Err(crate::error::Error::NvarsMismatch(
                self.nvars(),
                other.nvars(),
            ));
        }
        gcd_inner(self, other)
    }
}

/// Folds [`Polynomial::gcd`] over a sequence, short-circuiting once the
/// running gcd is a unit.
pub(crate) fn gcd_all<'a, I>(polys: I) -> Result<Polynomial>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut iter = polys.into_iter();
    let first = match iter.next() {
        None => panic!("gcd_all needs at least one polynomial"),
        Some(p) => p,
    };
    let mut acc = first.make_monic()?;
    for p in iter {
        if acc.is_one() {
            break;
        }
        acc = acc.gcd(p)?;
    }
    Ok(acc)
}

fn gcd_inner(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() {
        return b.make_monic();
    }
    if b.is_zero() {
        return a.make_monic();
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(a.spec(), a.nvars()));
    }
    // any common divisor only involves variables occurring in both inputs
    let used_a = a.vars_used();
    let used_b = b.vars_used();
    let main = match used_a
        .iter()
        .zip(&used_b)
        .position(|(ua, ub)| *ua && *ub)
    {
        Some(v) => v,
        None => return Ok(Polynomial::one(a.spec(), a.nvars())),
    };

    let coeffs_a = univariate_coeffs(a, main);
    let coeffs_b = univariate_coeffs(b, main);
    let cont_a = gcd_all(coeffs_a.iter().filter(|c| !c.is_zero()))?;
    let cont_b = gcd_all(coeffs_b.iter().filter(|c| !c.is_zero()))?;
    let cont_gcd = gcd_inner(&cont_a, &cont_b)?;

    let prim_a = a.divexact(&cont_a)?;
    let prim_b = b.divexact(&cont_b)?;

    let prim_gcd = subresultant_prs(&prim_a, &prim_b, main)?;
    cont_gcd.mul(&prim_gcd)?.make_monic()
}

/// GCD of two polynomials primitive with respect to `var`, both of positive
/// degree in `var`. Returns the primitive part of the last nonzero remainder.
fn subresultant_prs(a: &Polynomial, b: &Polynomial, var: usize) -> Result<Polynomial> {
    let spec = a.spec();
    let nvars = a.nvars();
    let one = Polynomial::one(spec, nvars);

    let (mut f, mut g) = if a.degree_in(var) >= b.degree_in(var) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut lead = one.clone();
    let mut h = one.clone();

    loop {
        let delta = f.degree_in(var) - g.degree_in(var);
        let rem = pseudo_rem(&f, &g, var)?;
        if rem.is_zero() {
            break;
        }
        if rem.degree_in(var) == 0 {
            // a nonzero constant (in var) tail means the primitive gcd is 1
            return Ok(one);
        }
        let divisor = lead.mul(&h.pow(delta)?)?;
        f = g;
        g = rem.divexact(&divisor)?;
        lead = leading_coeff_in(&f, var);
        h = if delta == 0 {
            h
        } else {
            lead.pow(delta)?.divexact(&h.pow(delta - 1)?)?
        };
    }

    // strip the content in var accumulated by the pseudo-divisions
    let coeffs = univariate_coeffs(&g, var);
    let cont = gcd_all(coeffs.iter().filter(|c| !c.is_zero()))?;
    g.divexact(&cont)
}

/// Coefficient vector of `p` viewed as univariate in `var`; entry `e` is the
/// coefficient of `var^e` (a polynomial with `var` absent).
fn univariate_coeffs(p: &Polynomial, var: usize) -> Vec<Polynomial> {
    let deg = p.degree_in(var);
    let mut coeffs = vec![Polynomial::zero(p.spec(), p.nvars()); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exponents()[var] as usize;
        let mut exps = m.exponents().to_vec();
        exps[var] = 0;
        let term = Polynomial::from_terms(p.spec(), p.nvars(), [(c.clone(), exps)])
            .expect("term of an existing polynomial");
        coeffs[e] = coeffs[e].add(&term).expect("same spec");
    }
    coeffs
}

fn leading_coeff_in(p: &Polynomial, var: usize) -> Polynomial {
    let coeffs = univariate_coeffs(p, var);
    coeffs.into_iter().last().expect("nonzero polynomial")
}

fn degree_of(coeffs: &[Polynomial]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Pseudo-remainder of `a` by `b` in `var`: the `R` with
/// `lc(b)^(deg a - deg b + 1) * a = Q*b + R` and `deg_var R < deg_var b`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, var: usize) -> Result<Polynomial> {
    let spec = a.spec();
    let nvars = a.nvars();
    let b_coeffs = univariate_coeffs(b, var);
    let db = degree_of(&b_coeffs).expect("nonzero divisor");
    let lc_b = &b_coeffs[db];

    let mut r = univariate_coeffs(a, var);
    let da = degree_of(&r).expect("nonzero dividend");
    let mut scale_left = (da + 1).saturating_sub(db);

    while let Some(dr) = degree_of(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lc_b)?;
        }
        for (j, bc) in b_coeffs.iter().enumerate() {
            let sub = lr.mul(bc)?;
            r[dr - db + j] = r[dr - db + j].sub(&sub)?;
        }
        debug_assert!(r[dr].is_zero());
        scale_left -= 1;
    }

    let mut rem = from_univariate(spec, nvars, var, &r)?;
    for _ in 0..scale_left {
        rem = rem.mul(lc_b)?;
    }
    Ok(rem)
}

fn from_univariate(
    spec: crate::field::FieldSpec,
    nvars: usize,
    var: usize,
    coeffs: &[Polynomial],
) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(spec, nvars);
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let shift = Polynomial::variable(spec, nvars, var)?.pow(e)?;
        acc = acc.add(&c.mul(&shift)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn p(text: &str) -> Polynomial {
        Polynomial::parse(q(), 3, text).unwrap()
    }

    #[test]
    fn gcd_of_shared_variable() {
        let a = p("x1").mul(&p("x1 + x0")).unwrap();
        let b = p("x0*x1");
        assert_eq!(a.gcd(&b).unwrap(), p("x1"));
    }

    #[test]
    fn coprime_linear_forms() {
        assert!(p("x1 + x0").gcd(&p("x1 + 2*x0")).unwrap().is_one());
    }

    #[test]
    fn gcd_of_products_verified_by_exact_division() {
        let a = p("x1 + x0")
            .pow(2)
            .unwrap()
            .mul(&p("x1 + 2*x0"))
            .unwrap();
        let b = p("x1 + x0").mul(&p("x1 + 3*x0")).unwrap();
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, p("x1 + x0"));
        // the oracle: a gcd must divide both inputs exactly
        assert!(a.divexact(&g).is_ok());
        assert!(b.divexact(&g).is_ok());
    }

    #[test]
    fn gcd_result_is_monic() {
        let a = p("2*x1 + 2*x0");
        let b = p("4*x1 + 4*x0");
        assert_eq!(a.gcd(&b).unwrap(), p("x1 + x0"));
    }

    #[test]
    fn gcd_with_zero_and_constants() {
        let z = Polynomial::zero(q(), 3);
        assert_eq!(z.gcd(&p("3*x1")).unwrap(), p("x1"));
        assert_eq!(z.gcd(&z).unwrap(), z);
        assert!(p("5").gcd(&p("x1")).unwrap().is_one());
    }

    #[test]
    fn gcd_with_disjoint_variables_is_one() {
        assert!(p("x0^2").gcd(&p("x1*x2")).unwrap().is_one());
    }

    #[test]
    fn gcd_over_prime_field() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let parse = |t: &str| Polynomial::parse(f5, 3, t).unwrap();
        let a = parse("x1 + 2*x0").mul(&parse("x1 + 3*x0")).unwrap();
        let b = parse("x1 + 2*x0").mul(&parse("x2")).unwrap();
        // monic normalization scales x1 + 2x0 by inv(2) = 3
        assert_eq!(a.gcd(&b).unwrap(), parse("x0 + 3*x1"));
    }

    #[test]
    fn gcd_of_higher_degree_dense_polynomials() {
        // (x0 + x1 + x2)^3 * (x0 - x2) against (x0 + x1 + x2)^2 * (x1 + x2)
        let s = p("x0 + x1 + x2");
        let a = s.pow(3).unwrap().mul(&p("x0 - x2")).unwrap();
        let b = s.pow(2).unwrap().mul(&p("x1 + x2")).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), s.pow(2).unwrap());
    }
}
