//! Rational self-maps of projective space as homogeneous tuples.
//!
//! A [`WdPoint`] is a scalar class of `(n+1)` homogeneous degree-`d`
//! polynomials, kept exactly as given (no gcd cancellation); distinct points
//! can represent one map. A [`RationalMap`] is the cancelled, normalized
//! representative: components coprime, the first nonzero one monic. All
//! equality on maps is equality of these canonical representatives.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldScalar, FieldSpec};
use crate::gcd::gcd_all;
use crate::parse::parse_affine_component;
use crate::poly::Polynomial;

/// A point of the projective space of `(n+1)`-tuples of homogeneous
/// degree-`d` forms: components exactly as supplied, scalar-normalized so
/// the first nonzero component is monic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WdPoint {
    n: usize,
    d: usize,
    components: Vec<Polynomial>,
}

impl WdPoint {
    /// Builds a tuple point. Components must share spec and variable count
    /// `n + 1`, be homogeneous of one common degree `d >= 1` (zero
    /// components are allowed), and not all vanish.
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let (n, d) = validate_tuple(&components, true)?;
        let components = normalize_tuple(components)?;
        Ok(WdPoint { n, d, components })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The common degree `d` of the defining forms.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn spec(&self) -> FieldSpec {
        self.components[0].spec()
    }

    /// The map this tuple defines: components divided by their common gcd
    /// and renormalized. This is where distinct tuples collapse to one map.
    pub fn project(&self) -> RationalMap {
        RationalMap::new(self.components.clone())
            .expect("a valid tuple projects to a valid map")
    }
}

impl fmt::Display for WdPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.components)
    }
}

/// A rational self-map of `P^n` in canonical form: homogeneous components
/// of one common degree with trivial gcd, first nonzero component monic.
///
/// Cancellation can drop the degree to 0 (a constant tuple); such maps are
/// never birational and are caught by [`RationalMap::definitely_not_birational`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMap {
    n: usize,
    degree: usize,
    components: Vec<Polynomial>,
}

impl RationalMap {
    /// Canonicalizing constructor: validates the tuple, cancels the common
    /// gcd, and normalizes the scalar.
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let (n, _) = validate_tuple(&components, false)?;
        let g = gcd_all(components.iter().filter(|c| !c.is_zero()))?;
        let components = if g.is_one() {
            components
        } else {
            components
                .into_iter()
                .map(|c| if c.is_zero() { Ok(c) } else { c.divexact(&g) })
                .collect::<Result<Vec<_>>>()?
        };
        let components = normalize_tuple(components)?;
        let degree = components
            .iter()
            .find(|c| !c.is_zero())
            .and_then(|c| c.total_degree())
            .expect("at least one nonzero component");
        Ok(RationalMap {
            n,
            degree,
            components,
        })
    }

    /// The identity `(x0 : x1 : ... : xn)`.
    pub fn identity(spec: FieldSpec, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument(
                "ambient dimension must be at least 1".into(),
            ));
        }
        let components = (0..=n)
            .map(|i| Polynomial::variable(spec, n + 1, i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of the canonical representative.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn spec(&self) -> FieldSpec {
        self.components[0].spec()
    }

    pub fn is_identity(&self) -> bool {
        self.degree == 1
            && self
                .components
                .iter()
                .enumerate()
                .all(|(i, c)| {
                    Polynomial::variable(self.spec(), self.n + 1, i)
                        .map(|v| *c == v)
                        .unwrap_or(false)
                })
    }

    /// Necessary-condition check: a tuple with an identically zero component
    /// or of degree 0 cannot define a birational map. A `false` answer
    /// certifies nothing.
    pub fn definitely_not_birational(&self) -> bool {
        self.degree == 0 || self.components.iter().any(|c| c.is_zero())
    }

    /// Scalar-class equality. Canonical representatives make this structural.
    pub fn eq_up_to_scalar(&self, other: &Self) -> bool {
        self == other
    }

    /// The composite `self . other` (apply `other` first), cancelled and
    /// normalized, so `degree <= self.degree() * other.degree()`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let images = self
            .components
            .iter()
            .map(|c| c.subst(&other.components))
            .collect::<Result<Vec<_>>>()?;
        if images.iter().all(|c| c.is_zero()) {
            return Err(Error::AllZeroSubstitution);
        }
        Self::new(images)
    }

    /// The `m`-fold composite, cancelling after every step; `m >= 1`.
    pub fn power(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("power requires m >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// True when `self . other` and `other . self` are both the identity.
    /// Composition failures count as a negative answer.
    pub fn verify_inverse(&self, other: &Self) -> bool {
        let fwd = match self.compose(other) {
            Ok(m) => m,
            Err(_) => return false,
        };
        let bwd = match other.compose(self) {
            Ok(m) => m,
            Err(_) => return false,
        };
        fwd.is_identity() && bwd.is_identity()
    }

    /// True when `self . other = other . self` up to scalar.
    pub fn commutes(&self, other: &Self) -> bool {
        match (self.compose(other), other.compose(self)) {
            (Ok(a), Ok(b)) => a.eq_up_to_scalar(&b),
            _ => false,
        }
    }

    /// The conjugate `psi . self . psi_inv`. The pair must verify as
    /// inverses, otherwise [`Error::InvalidInversePair`] is raised.
    pub fn conjugate_by(&self, psi: &Self, psi_inv: &Self) -> Result<Self> {
        if !psi.verify_inverse(psi_inv) {
            return Err(Error::InvalidInversePair);
        }
        psi.compose(&self.compose(psi_inv)?)
    }

    /// Componentwise evaluation. All components vanishing means the point is
    /// in the indeterminacy locus, reported as a value rather than an error.
    pub fn evaluate(&self, point: &ProjectivePoint) -> Result<PointImage> {
        if point.coords.len() != self.n + 1 {
            return Err(Error::DimensionMismatch(
                self.n,
                point.coords.len().saturating_sub(1),
            ));
        }
        let values = self
            .components
            .iter()
            .map(|c| c.eval(&point.coords))
            .collect::<Result<Vec<_>>>()?;
        if values.iter().all(|v| v.is_zero()) {
            return Ok(PointImage::Indeterminate);
        }
        Ok(PointImage::Point(ProjectivePoint::new(values)?))
    }

    /// Restriction to the affine chart `x0 = 1`: coordinate `i` becomes the
    /// reduced fraction `comp_i(1, x) / comp_0(1, x)`. Fails when the map
    /// contracts the chart (component 0 identically zero).
    pub fn to_affine(&self) -> Result<AffineMap> {
        if self.components[0].is_zero() {
            return Err(Error::ChartContracted);
        }
        let den = self.components[0].dehomogenize();
        let pairs = self.components[1..]
            .iter()
            .map(|c| (c.dehomogenize(), den.clone()))
            .collect();
        AffineMap::new(pairs)
    }

    /// Parses a semicolon-separated homogeneous tuple, e.g.
    /// `"x0*x1; x1^2 + x0*x1; x1*x2"`. The number of components fixes `n`.
    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() < 2 {
            return Err(Error::parse(
                0,
                "a map needs at least two ';'-separated components",
            ));
        }
        let nvars = parts.len();
        let components = parts
            .iter()
            .map(|part| Polynomial::parse(spec, nvars, part))
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.components)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, components: &[Polynomial]) -> fmt::Result {
    for (i, c) in components.iter().enumerate() {
        if i > 0 {
            write!(f, "; ")?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

/// Shared tuple validation: same spec, `nvars = len`, homogeneous components
/// of one common degree, not all zero. Returns `(n, common_degree)`.
fn validate_tuple(components: &[Polynomial], require_positive_degree: bool) -> Result<(usize, usize)> {
    if components.len() < 2 {
        return Err(Error::InvalidArgument(
            "a tuple needs at least two components".into(),
        ));
    }
    let n = components.len() - 1;
    let spec = components[0].spec();
    let mut degree: Option<usize> = None;
    for c in components {
        if c.spec() != spec {
            return Err(Error::FieldMismatch);
        }
        if c.nvars() != n + 1 {
            return Err(Error::NvarsMismatch(c.nvars(), n + 1));
        }
        if c.is_zero() {
            continue;
        }
        let d = c.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => return Err(Error::MixedDegrees(prev, d)),
            _ => {}
        }
    }
    let degree = degree.ok_or(Error::ZeroTuple)?;
    if require_positive_degree && degree == 0 {
        return Err(Error::InvalidArgument(
            "tuple degree must be at least 1".into(),
        ));
    }
    Ok((n, degree))
}

/// Scales a tuple so its first nonzero component is monic.
fn normalize_tuple(components: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let lc = components
        .iter()
        .find(|c| !c.is_zero())
        .and_then(|c| c.leading_coefficient().cloned())
        .ok_or(Error::ZeroTuple)?;
    if lc.is_one() {
        return Ok(components);
    }
    let inv = lc.inv()?;
    components.into_iter().map(|c| c.mul_scalar(&inv)).collect()
}

/// A self-map of the affine chart `x0 = 1`: one reduced fraction per
/// coordinate `x1, ..., xn`, denominators monic. Polynomials live in the
/// ambient `n + 1` variables with `x0` unused.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    n: usize,
    components: Vec<(Polynomial, Polynomial)>,
}

impl AffineMap {
    /// Canonicalizing constructor: reduces each `num/den` pair to lowest
    /// terms and makes denominators monic. Denominators must be nonzero and
    /// no polynomial may involve `x0`.
    pub fn new(components: Vec<(Polynomial, Polynomial)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "an affine map needs at least one coordinate".into(),
            ));
        }
        let n = components.len();
        let spec = components[0].0.spec();
        let mut reduced = Vec::with_capacity(n);
        for (num, den) in components {
            if num.spec() != spec || den.spec() != spec {
                return Err(Error::FieldMismatch);
            }
            if num.nvars() != n + 1 || den.nvars() != n + 1 {
                return Err(Error::NvarsMismatch(num.nvars(), n + 1));
            }
            if num.uses_var(0) || den.uses_var(0) {
                return Err(Error::NonAffinePolynomial);
            }
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            let g = num.gcd(&den)?;
            let (num, den) = if g.is_one() {
                (num, den)
            } else {
                (num.divexact(&g)?, den.divexact(&g)?)
            };
            let lc_inv = den
                .leading_coefficient()
                .expect("nonzero denominator")
                .inv()?;
            reduced.push((num.mul_scalar(&lc_inv)?, den.mul_scalar(&lc_inv)?));
        }
        Ok(AffineMap {
            n,
            components: reduced,
        })
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Result<Self> {
        let one = Polynomial::one(spec, n + 1);
        let comps = (1..=n)
            .map(|i| Ok((Polynomial::variable(spec, n + 1, i)?, one.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The reduced `(numerator, denominator)` pairs for `x1, ..., xn`.
    pub fn components(&self) -> &[(Polynomial, Polynomial)] {
        &self.components
    }

    pub fn spec(&self) -> FieldSpec {
        self.components[0].0.spec()
    }

    /// Clears denominators with their least common multiple and homogenizes:
    /// the projective tuple is `(L : num_1 L/den_1 : ... : num_n L/den_n)`
    /// lifted to the least degree that makes it homogeneous, then cancelled.
    pub fn to_projective(&self) -> Result<RationalMap> {
        let spec = self.spec();
        let nvars = self.n + 1;
        let mut lcm = Polynomial::one(spec, nvars);
        for (_, den) in &self.components {
            let g = lcm.gcd(den)?;
            lcm = lcm.mul(den)?.divexact(&g)?;
        }
        let mut tuple = Vec::with_capacity(nvars);
        tuple.push(lcm.clone());
        for (num, den) in &self.components {
            tuple.push(num.mul(&lcm.divexact(den)?)?);
        }
        let target = tuple
            .iter()
            .filter_map(|c| c.total_degree())
            .max()
            .ok_or(Error::ZeroTuple)?;
        let tuple = tuple
            .into_iter()
            .map(|c| c.homogenize(target))
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(tuple)
    }

    /// Parses comma-separated `num/den` components, e.g.
    /// `"x1 + 1, x2*x1 + 1/2*x2/x1"`. The component count fixes `n`.
    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        let nvars = parts.len() + 1;
        let comps = parts
            .iter()
            .map(|part| parse_affine_component(spec, nvars, part))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (num, den)) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if den.is_one() {
                write!(f, "{num}")?;
            } else {
                write!(f, "{num}/{den}")?;
            }
        }
        Ok(())
    }
}

/// A point of `P^n` with coordinates normalized so the first nonzero one
/// is 1; equality is therefore projective equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectivePoint {
    coords: Vec<FieldScalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<FieldScalar>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidArgument(
                "a projective point needs at least two coordinates".into(),
            ));
        }
        let spec = coords[0].spec();
        if coords.iter().any(|c| c.spec() != spec) {
            return Err(Error::FieldMismatch);
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroTuple)?
            .clone();
        let inv = lead.inv()?;
        let coords = coords
            .into_iter()
            .map(|c| c.mul(&inv))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProjectivePoint { coords })
    }

    pub fn from_integers(spec: FieldSpec, coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&v| FieldScalar::from_integer(spec, v))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[FieldScalar] {
        &self.coords
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Result of evaluating a map at a point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PointImage {
    Point(ProjectivePoint),
    /// Every component vanished: the point lies in the indeterminacy locus
    /// of the canonical representative.
    Indeterminate,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn p3(text: &str) -> Polynomial {
        Polynomial::parse(q(), 3, text).unwrap()
    }

    fn map(text: &str) -> RationalMap {
        RationalMap::parse(q(), text).unwrap()
    }

    #[test]
    fn wd_point_accepts_the_degree_two_embedding_image() {
        // the tuple (x0x1 : x1(x1+x0) : x2x1), a valid degree-2 point
        let w = WdPoint::new(vec![
            p3("x0*x1"),
            p3("x1^2 + x0*x1"),
            p3("x1*x2"),
        ])
        .unwrap();
        assert_eq!(w.n(), 2);
        assert_eq!(w.d(), 2);
    }

    #[test]
    fn wd_point_normalizes_the_scalar_class() {
        let doubled = WdPoint::new(vec![p3("2*x0"), p3("2*x1"), p3("2*x2")]).unwrap();
        let plain = WdPoint::new(vec![p3("x0"), p3("x1"), p3("x2")]).unwrap();
        assert_eq!(doubled, plain);
    }

    #[test]
    fn wd_point_rejects_bad_tuples() {
        let mixed = WdPoint::new(vec![p3("x0^2"), p3("x1"), p3("x2")]);
        assert_eq!(mixed, Err(Error::MixedDegrees(2, 1)));
        let inhomog = WdPoint::new(vec![p3("x0^2 + x1"), p3("x1^2"), p3("x2^2")]);
        assert_eq!(inhomog, Err(Error::Inhomogeneous));
        let zero = WdPoint::new(vec![p3("0"), p3("0"), p3("0")]);
        assert_eq!(zero, Err(Error::ZeroTuple));
    }

    #[test]
    fn projection_cancels_the_common_factor() {
        // (x0x1 : x1(x1+x0) : x2x1) -> (x0 : x1+x0 : x2)
        let w = WdPoint::new(vec![p3("x0*x1"), p3("x1^2 + x0*x1"), p3("x1*x2")]).unwrap();
        let m = w.project();
        assert_eq!(m.degree(), 1);
        assert_eq!(m, map("x0; x1 + x0; x2"));
    }

    #[test]
    fn projection_of_a_gcd_free_tuple_is_itself() {
        let m = map("x0^2; x0*x1; x2^2");
        let w = WdPoint::new(m.components().to_vec()).unwrap();
        assert_eq!(w.project(), m);
    }

    #[test]
    fn projection_recovers_a_multiplied_tuple() {
        let base = map("x0^2; x0*x1; x2^2");
        let factor = p3("x1 + x0");
        let scaled = WdPoint::new(
            base.components()
                .iter()
                .map(|c| c.mul(&factor).unwrap())
                .collect(),
        )
        .unwrap();
        assert_eq!(scaled.project(), base);
    }

    #[test]
    fn projection_is_idempotent() {
        let m = map("x0*x1; x1^2 + x0*x1; x2*x1 + 3*x2*x0");
        let again = RationalMap::new(m.components().to_vec()).unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn compose_with_identity() {
        let f = map("x0*x1; x1^2 + x0*x1; x1*x2 + x0*x2");
        let id = RationalMap::identity(q(), 2).unwrap();
        assert_eq!(id.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&id).unwrap(), f);
    }

    #[test]
    fn degree_zero_map_is_allowed_and_flagged() {
        let m = RationalMap::new(vec![p3("0"), p3("0"), p3("x0*x2")]).unwrap();
        assert_eq!(m.degree(), 0);
        assert!(m.definitely_not_birational());
    }

    #[test]
    fn eq_up_to_scalar_ignores_scaling() {
        let f = map("x0*x1; x1^2 + x0*x1; x1*x2");
        let scaled = RationalMap::new(
            f.components()
                .iter()
                .map(|c| c.mul_scalar(&FieldScalar::from_integer(q(), 5)).unwrap())
                .collect(),
        )
        .unwrap();
        assert!(f.eq_up_to_scalar(&scaled));
    }

    #[test]
    fn evaluate_identity_fixes_points() {
        let id = RationalMap::identity(q(), 2).unwrap();
        let pt = ProjectivePoint::from_integers(q(), &[1, 2, 3]).unwrap();
        assert_eq!(id.evaluate(&pt).unwrap(), PointImage::Point(pt.clone()));
    }

    #[test]
    fn evaluate_reports_indeterminacy() {
        // (x0x1 : x1(x1+x0) : x2(x1+x0)) vanishes entirely at [0:0:1]
        let f = map("x0*x1; x1^2 + x0*x1; x1*x2 + x0*x2");
        let pt = ProjectivePoint::from_integers(q(), &[0, 0, 1]).unwrap();
        assert_eq!(f.evaluate(&pt).unwrap(), PointImage::Indeterminate);
    }

    #[test]
    fn affine_round_trip_for_identity() {
        let id = RationalMap::identity(q(), 2).unwrap();
        let affine = id.to_affine().unwrap();
        assert_eq!(affine, AffineMap::identity(q(), 2).unwrap());
        assert_eq!(affine.to_projective().unwrap(), id);
    }

    #[test]
    fn chart_contraction_is_an_error() {
        let f = RationalMap::new(vec![p3("0"), p3("x1"), p3("x2")]).unwrap();
        assert_eq!(f.to_affine(), Err(Error::ChartContracted));
    }

    #[test]
    fn affine_map_canonicalizes_pairs() {
        let raw = AffineMap::new(vec![
            (p3("2*x1^2 + 2*x1"), p3("2*x1")),
            (p3("x2"), p3("1")),
        ])
        .unwrap();
        let expected = AffineMap::new(vec![(p3("x1 + 1"), p3("1")), (p3("x2"), p3("1"))]).unwrap();
        assert_eq!(raw, expected);
    }

    #[test]
    fn affine_text_round_trip() {
        let m = AffineMap::parse(q(), "x1 + 1, x2*x1 + 1/2*x2/x1").unwrap();
        let text = m.to_string();
        assert_eq!(AffineMap::parse(q(), &text).unwrap(), m);
        assert_eq!(text, "x1 + 1, x1*x2 + 1/2*x2/x1");
    }

    #[test]
    fn projective_points_normalize() {
        let a = ProjectivePoint::from_integers(q(), &[2, 4, 6]).unwrap();
        let b = ProjectivePoint::from_integers(q(), &[1, 2, 3]).unwrap();
        assert_eq!(a, b);
        assert!(ProjectivePoint::from_integers(q(), &[0, 0, 0]).is_err());
    }

    #[test]
    fn map_text_round_trip() {
        let f = map("x0*x1; x1^2 + x0*x1; x1*x2 + 1/2*x0*x2");
        let text = f.to_string();
        assert_eq!(RationalMap::parse(q(), &text).unwrap(), f);
    }
}
