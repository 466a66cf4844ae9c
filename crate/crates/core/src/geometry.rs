//! Exact affine incidence geometry over `K` and the von Staudt
//! constructions of addition and multiplication.
//!
//! Numbers live on the vertical axis `u = 0`: the number `t` is the point
//! `(0, t)`. The constructions in [`staudt_add`] and [`staudt_mul`] are
//! generic over [`IncidencePlane`] and only ever join points, draw
//! parallels, and intersect lines; they never look at coordinates.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::EPoint;
use crate::qfield::QuadRat;

/// A point `(u, v)` of `K²`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AffPoint {
    pub u: QuadRat,
    pub v: QuadRat,
}

impl AffPoint {
    pub fn new(u: QuadRat, v: QuadRat) -> Self {
        AffPoint { u, v }
    }

    /// The point `(0, t)` standing for the number `t`.
    pub fn on_axis(t: QuadRat) -> Self {
        AffPoint::new(QuadRat::zero(), t)
    }
}

impl fmt::Display for AffPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl fmt::Debug for AffPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<&EPoint> for AffPoint {
    fn from(e: &EPoint) -> Self {
        AffPoint::new(e.a.clone(), e.b.clone())
    }
}

impl From<&AffPoint> for EPoint {
    fn from(p: &AffPoint) -> Self {
        EPoint::new(p.u.clone(), p.v.clone())
    }
}

/// The line `A·u + B·v + C = 0`, normalised so the first nonzero of `(A, B)`
/// is one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffLine {
    a: QuadRat,
    b: QuadRat,
    c: QuadRat,
}

impl AffLine {
    pub fn new(a: QuadRat, b: QuadRat, c: QuadRat) -> Result<Self> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::DegenerateLine);
        };
        let k = lead.inv()?;
        Ok(AffLine {
            a: &a * &k,
            b: &b * &k,
            c: &c * &k,
        })
    }

    pub fn coefficients(&self) -> (&QuadRat, &QuadRat, &QuadRat) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains(&self, p: &AffPoint) -> bool {
        (&(&(&self.a * &p.u) + &(&self.b * &p.v)) + &self.c).is_zero()
    }
}

impl fmt::Display for AffLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}u + {}v + {} = 0}}", self.a, self.b, self.c)
    }
}

impl fmt::Debug for AffLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How two lines relate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Meet<P> {
    Point(P),
    Parallel,
    Coincident,
}

pub fn line_through(p: &AffPoint, q: &AffPoint) -> Result<AffLine> {
    if p == q {
        return Err(Error::DegeneratePair);
    }
    let a = &q.v - &p.v;
    let b = &p.u - &q.u;
    let c = -(&(&a * &p.u) + &(&b * &p.v));
    AffLine::new(a, b, c)
}

pub fn is_parallel(l: &AffLine, m: &AffLine) -> bool {
    (&(&l.a * &m.b) - &(&m.a * &l.b)).is_zero()
}

pub fn meet(l: &AffLine, m: &AffLine) -> Meet<AffPoint> {
    let d = &(&l.a * &m.b) - &(&m.a * &l.b);
    if d.is_zero() {
        return if l == m { Meet::Coincident } else { Meet::Parallel };
    }
    let d = d.inv().expect("nonzero");
    let u = &(&(&l.b * &m.c) - &(&m.b * &l.c)) * &d;
    let v = &(&(&m.a * &l.c) - &(&l.a * &m.c)) * &d;
    Meet::Point(AffPoint::new(u, v))
}

pub fn parallel_through(l: &AffLine, p: &AffPoint) -> AffLine {
    let c = -(&(&l.a * &p.u) + &(&l.b * &p.v));
    AffLine {
        a: l.a.clone(),
        b: l.b.clone(),
        c,
    }
}

/// Determinant test for collinearity of three points.
pub fn coll_det(p: &AffPoint, q: &AffPoint, r: &AffPoint) -> bool {
    let lhs = &(&q.u - &p.u) * &(&r.v - &p.v);
    let rhs = &(&q.v - &p.v) * &(&r.u - &p.u);
    lhs == rhs
}

/// The primitives available to a ruler-and-parallels construction.
pub trait IncidencePlane {
    type Point: Clone;
    type Line: Clone;

    /// The line through two distinct points.
    fn line_through(&self, p: &Self::Point, q: &Self::Point) -> Result<Self::Line>;
    /// The line through `p` parallel to `l`.
    fn parallel_through(&self, l: &Self::Line, p: &Self::Point) -> Self::Line;
    /// Intersection of two lines.
    fn meet(&self, l: &Self::Line, m: &Self::Line) -> Result<Meet<Self::Point>>;
}

/// Coordinates over `K`, with lines in normalised homogeneous form.
#[derive(Clone, Copy, Debug, Default)]
pub struct AffinePlane;

impl IncidencePlane for AffinePlane {
    type Point = AffPoint;
    type Line = AffLine;

    fn line_through(&self, p: &AffPoint, q: &AffPoint) -> Result<AffLine> {
        line_through(p, q)
    }

    fn parallel_through(&self, l: &AffLine, p: &AffPoint) -> AffLine {
        parallel_through(l, p)
    }

    fn meet(&self, l: &AffLine, m: &AffLine) -> Result<Meet<AffPoint>> {
        Ok(meet(l, m))
    }
}

/// The axis of numbers, fixed by the points standing for `0` and `1`.
#[derive(Clone, Debug)]
pub struct Axis<P> {
    pub zero: P,
    pub one: P,
}

fn point_of<P>(m: Meet<P>, step: &'static str) -> Result<P> {
    match m {
        Meet::Point(p) => Ok(p),
        Meet::Parallel | Meet::Coincident => Err(Error::Construction(step)),
    }
}

fn check_aux<Pl: IncidencePlane>(plane: &Pl, axis_line: &Pl::Line, aux: &Pl::Point) -> Result<()> {
    let through_aux = plane.parallel_through(axis_line, aux);
    match plane.meet(axis_line, &through_aux)? {
        Meet::Coincident => Err(Error::AuxOnAxis),
        _ => Ok(()),
    }
}

/// Von Staudt addition: from axis points `x` and `y` and an auxiliary
/// point off the axis, the axis point of `x + y`.
///
/// `Q` is the translate of `aux` by `y` (parallel to `0·aux` through `y`,
/// met with the parallel to the axis through `aux`); the parallel to
/// `aux·x` through `Q` meets the axis at `x + y`.
pub fn staudt_add<Pl: IncidencePlane>(
    plane: &Pl,
    axis: &Axis<Pl::Point>,
    x: &Pl::Point,
    y: &Pl::Point,
    aux: &Pl::Point,
) -> Result<Pl::Point> {
    let axis_line = plane.line_through(&axis.zero, &axis.one)?;
    check_aux(plane, &axis_line, aux)?;
    let rail = plane.parallel_through(&axis_line, aux);
    let ray = plane.line_through(&axis.zero, aux)?;
    let q = point_of(
        plane.meet(&plane.parallel_through(&ray, y), &rail)?,
        "translate of aux",
    )?;
    let slant = plane.line_through(aux, x)?;
    point_of(
        plane.meet(&plane.parallel_through(&slant, &q), &axis_line)?,
        "sum on axis",
    )
}

/// Von Staudt multiplication: `Q = x·aux` is cut from the ray `0·aux` by the
/// parallel to `1·aux` through `x`; the parallel to `aux·y` through `Q`
/// meets the axis at `x·y`.
pub fn staudt_mul<Pl: IncidencePlane>(
    plane: &Pl,
    axis: &Axis<Pl::Point>,
    x: &Pl::Point,
    y: &Pl::Point,
    aux: &Pl::Point,
) -> Result<Pl::Point> {
    let axis_line = plane.line_through(&axis.zero, &axis.one)?;
    check_aux(plane, &axis_line, aux)?;
    let ray = plane.line_through(&axis.zero, aux)?;
    let unit_slant = plane.line_through(&axis.one, aux)?;
    let q = point_of(
        plane.meet(&plane.parallel_through(&unit_slant, x), &ray)?,
        "scaled aux",
    )?;
    let slant = plane.line_through(aux, y)?;
    point_of(
        plane.meet(&plane.parallel_through(&slant, &q), &axis_line)?,
        "product on axis",
    )
}

fn standard_axis() -> Axis<AffPoint> {
    Axis {
        zero: AffPoint::on_axis(QuadRat::zero()),
        one: AffPoint::on_axis(QuadRat::one()),
    }
}

fn decode(p: AffPoint) -> Result<QuadRat> {
    if p.u.is_zero() {
        Ok(p.v)
    } else {
        Err(Error::Construction("result off axis"))
    }
}

/// `x + y` by the addition construction in coordinates.
pub fn vs_add(x: &QuadRat, y: &QuadRat, aux: &AffPoint) -> Result<QuadRat> {
    let p = staudt_add(
        &AffinePlane,
        &standard_axis(),
        &AffPoint::on_axis(x.clone()),
        &AffPoint::on_axis(y.clone()),
        aux,
    )?;
    decode(p)
}

/// `x · y` by the multiplication construction in coordinates.
pub fn vs_mul(x: &QuadRat, y: &QuadRat, aux: &AffPoint) -> Result<QuadRat> {
    let p = staudt_mul(
        &AffinePlane,
        &standard_axis(),
        &AffPoint::on_axis(x.clone()),
        &AffPoint::on_axis(y.clone()),
        aux,
    )?;
    decode(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QuadRat {
        QuadRat::from_int(n)
    }

    fn pt(u: i64, v: i64) -> AffPoint {
        AffPoint::new(q(u), q(v))
    }

    fn r2() -> QuadRat {
        QuadRat::sqrt2()
    }

    #[test]
    fn lines_through_pairs() {
        let l = line_through(&pt(0, 0), &pt(0, 1)).unwrap();
        assert_eq!(l, AffLine::new(q(1), q(0), q(0)).unwrap());
        let l = line_through(&pt(0, 0), &pt(1, 1)).unwrap();
        assert_eq!(l, AffLine::new(q(1), q(-1), q(0)).unwrap());

        let (p, s) = (pt(1, 0), AffPoint::new(q(0), r2()));
        let l = line_through(&p, &s).unwrap();
        // √2·u + v − √2 = 0, scaled by 1/√2
        assert_eq!(l.coefficients(), (&q(1), &QuadRat::from_parts(0, 1, 1, 2), &q(-1)));
        assert!(l.contains(&p) && l.contains(&s));
        assert_eq!(line_through(&p, &p), Err(Error::DegeneratePair));
    }

    #[test]
    fn meets_and_parallels() {
        let u0 = AffLine::new(q(1), q(0), q(0)).unwrap();
        let u1 = AffLine::new(q(1), q(0), q(-1)).unwrap();
        let v0 = AffLine::new(q(0), q(1), q(0)).unwrap();
        assert!(is_parallel(&u0, &u1));
        assert_eq!(meet(&u0, &u1), Meet::Parallel);
        assert_eq!(meet(&u0, &u0), Meet::Coincident);
        assert_eq!(meet(&u0, &v0), Meet::Point(pt(0, 0)));
        let d = AffLine::new(q(1), q(-1), q(0)).unwrap();
        let e = AffLine::new(q(1), q(1), q(-2)).unwrap();
        assert_eq!(meet(&d, &e), Meet::Point(pt(1, 1)));
    }

    #[test]
    fn parallel_through_examples() {
        let u0 = AffLine::new(q(1), q(0), q(0)).unwrap();
        assert_eq!(parallel_through(&u0, &pt(1, 0)), AffLine::new(q(1), q(0), q(-1)).unwrap());
        let d = AffLine::new(q(1), q(-1), q(0)).unwrap();
        assert_eq!(parallel_through(&d, &pt(0, 1)), AffLine::new(q(1), q(-1), q(1)).unwrap());
        assert_eq!(parallel_through(&d, &pt(3, 3)), d);
    }

    #[test]
    fn staudt_examples() {
        assert_eq!(vs_add(&q(3), &q(5), &pt(1, 1)).unwrap(), q(8));
        let x = QuadRat::from_parts(2, 3, -1, 5);
        assert_eq!(vs_add(&x, &q(0), &pt(-4, 7)).unwrap(), x);
        assert_eq!(vs_add(&r2(), &-r2(), &pt(2, 3)).unwrap(), q(0));

        assert_eq!(vs_mul(&q(2), &q(3), &pt(1, 1)).unwrap(), q(6));
        assert_eq!(vs_mul(&x, &q(1), &pt(5, -2)).unwrap(), x);
        assert_eq!(vs_mul(&r2(), &r2(), &pt(1, 2)).unwrap(), q(2));
        assert_eq!(vs_mul(&q(0), &q(9), &pt(1, 2)).unwrap(), q(0));
        assert_eq!(vs_mul(&q(9), &q(0), &pt(1, 2)).unwrap(), q(0));
    }

    #[test]
    fn aux_on_axis_rejected() {
        assert_eq!(vs_add(&q(1), &q(2), &pt(0, 4)), Err(Error::AuxOnAxis));
        assert_eq!(vs_mul(&q(1), &q(2), &pt(0, 0)), Err(Error::AuxOnAxis));
    }

    #[test]
    fn determinant_collinearity() {
        assert!(coll_det(&pt(0, 0), &pt(1, 1), &pt(2, 2)));
        assert!(!coll_det(&pt(0, 0), &pt(1, 0), &pt(0, 1)));
        assert!(coll_det(&pt(1, 1), &pt(2, 3), &pt(3, 5)));
    }
}
