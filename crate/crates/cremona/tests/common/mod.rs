#![allow(dead_code)]

use cremona::families::{SemisimpleParam, UnipotentParam};
use cremona::{FieldScalar, FieldSpec};

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn f5() -> FieldSpec {
    FieldSpec::prime_field(5).unwrap()
}

pub fn qs(text: &str) -> FieldScalar {
    FieldScalar::parse(q(), text).unwrap()
}

pub fn f5s(v: i64) -> FieldScalar {
    FieldScalar::from_integer(f5(), v)
}

pub fn uni(n: usize, t: &str) -> UnipotentParam {
    UnipotentParam::new(n, qs(t)).unwrap()
}

pub fn uni_f5(n: usize, t: i64) -> UnipotentParam {
    UnipotentParam::new(n, f5s(t)).unwrap()
}

pub fn semi(n: usize, a: &str, xi: &str) -> SemisimpleParam {
    SemisimpleParam::new(n, qs(a), qs(xi)).unwrap()
}

pub fn semi_f5(n: usize, a: i64, xi: i64) -> SemisimpleParam {
    SemisimpleParam::new(n, f5s(a), f5s(xi)).unwrap()
}

/// Rational unipotent parameters: integers (algebraic) and non-integers
/// (not algebraic).
pub fn unipotent_grid_q(n: usize) -> Vec<UnipotentParam> {
    ["0", "1", "3", "-2", "1/2", "2/3"]
        .iter()
        .map(|t| uni(n, t))
        .collect()
}

pub fn unipotent_grid_f5(n: usize) -> Vec<UnipotentParam> {
    [0, 2, 4].iter().map(|&t| uni_f5(n, t)).collect()
}

/// Rational semi-simple parameters: powers of xi (algebraic, with positive,
/// negative, and zero exponents), non-powers, and a root-of-unity xi.
pub fn semisimple_grid_q(n: usize) -> Vec<SemisimpleParam> {
    [
        ("1", "2"),
        ("8", "2"),
        ("3", "2"),
        ("1/2", "2"),
        ("1/4", "1/2"),
        ("-1", "-1"),
    ]
    .iter()
    .map(|(a, xi)| semi(n, a, xi))
    .collect()
}

pub fn semisimple_grid_f5(n: usize) -> Vec<SemisimpleParam> {
    [(4, 3), (2, 4), (1, 2), (3, 2)]
        .iter()
        .map(|&(a, xi)| semi_f5(n, a, xi))
        .collect()
}
