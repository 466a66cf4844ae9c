//! The interpretation of `(K, +, ·, Z)` inside the group.
//!
//! Numbers are classes of `R = A/Z(G)`, each carried by its representative
//! `[0,b,0,1]` in `G'`. Addition and multiplication run the von Staudt
//! constructions on the plane `E = G/Z(G)`: points come from `ι`, lines are
//! pairs of points, parallels are translates computed with the group law,
//! and every incidence question goes through [`group::coll`]. Integers are
//! the classes of `B`.
//!
//! Everything is computed over `Q(√2)` rather than the reals; all formulas
//! involved are algebraic and `Q(√2)` is closed under them.

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::geometry::{self, Axis, IncidencePlane, Meet};
use crate::gprime::{self, GPrimeElem};
use crate::group::{self, EPoint, GElem, LineSubgroup};
use crate::qfield::QuadRat;

/// A number of the interpretation: a class of `A/Z(G)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RNum {
    rep: GPrimeElem,
}

impl RNum {
    /// The class of an element of `A`.
    pub fn from_a_element(h: &GElem) -> Result<Self> {
        if !group::in_a_definitional(h) {
            return Err(Error::Construction("element outside A"));
        }
        Ok(RNum {
            rep: gprime::rep_of_r(h.b()),
        })
    }

    /// Representative in `O ∪ O⁻¹ ∪ {1}`.
    pub fn representative(&self) -> &GPrimeElem {
        &self.rep
    }

    /// The representative viewed in `G` (it lies in the embedded copy).
    fn in_g(&self) -> GElem {
        self.rep.restrict().expect("representatives have x = 1")
    }

    fn point(&self) -> EPoint {
        group::iota(&self.in_g())
    }

    fn from_point(p: &EPoint) -> Result<Self> {
        Self::from_a_element(&p.lift())
    }
}

impl fmt::Display for RNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match gprime::class_of_rep(&self.rep) {
            Ok(b) => write!(f, "{b}"),
            Err(_) => write!(f, "{}", self.rep),
        }
    }
}

impl fmt::Debug for RNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RNum({})", self.rep)
    }
}

pub fn encode(t: &QuadRat) -> RNum {
    RNum {
        rep: gprime::rep_of_r(t),
    }
}

pub fn decode(r: &RNum) -> QuadRat {
    gprime::class_of_rep(&r.rep).expect("RNum holds a representative")
}

/// The plane `E` seen through the group: lines are pairs of distinct
/// points, parallels are built by translation in `G`, and incidence is
/// decided by the group-definable `coll`.
///
/// Intersection points are located with the coordinate kernel and then
/// certified with `coll` against both defining pairs.
#[derive(Clone, Copy, Debug, Default)]
pub struct GroupPlane;

/// A line of `E`, named by two distinct points on it.
#[derive(Clone, Debug)]
pub struct PointPair(EPoint, EPoint);

/// `r·p⁻¹·q` in `G`, projected to `E`.
fn translate(p: &EPoint, q: &EPoint, r: &EPoint) -> EPoint {
    let g = r.lift().mul(&p.lift().inv()).mul(&q.lift());
    group::iota(&g)
}

impl IncidencePlane for GroupPlane {
    type Point = EPoint;
    type Line = PointPair;

    fn line_through(&self, p: &EPoint, q: &EPoint) -> Result<PointPair> {
        if group::is_central(&p.lift().inv().mul(&q.lift())) {
            return Err(Error::DegeneratePair);
        }
        Ok(PointPair(p.clone(), q.clone()))
    }

    fn parallel_through(&self, l: &PointPair, r: &EPoint) -> PointPair {
        PointPair(r.clone(), translate(&l.0, &l.1, r))
    }

    fn meet(&self, l: &PointPair, m: &PointPair) -> Result<Meet<EPoint>> {
        let PointPair(p, q) = l;
        let PointPair(r, s) = m;
        // m's direction carried to p
        if group::coll(p, q, &translate(r, s, p)) {
            return Ok(if group::coll(p, q, r) {
                Meet::Coincident
            } else {
                Meet::Parallel
            });
        }
        let al = geometry::line_through(&p.into(), &q.into())?;
        let am = geometry::line_through(&r.into(), &s.into())?;
        let x = match geometry::meet(&al, &am) {
            Meet::Point(x) => EPoint::from(&x),
            _ => return Err(Error::Construction("coordinate meet disagrees with coll")),
        };
        if group::coll(p, q, &x) && group::coll(r, s, &x) {
            Ok(Meet::Point(x))
        } else {
            Err(Error::Construction("meet not certified by coll"))
        }
    }
}

fn axis() -> Axis<EPoint> {
    Axis {
        zero: encode(&QuadRat::zero()).point(),
        one: encode(&QuadRat::one()).point(),
    }
}

/// The default auxiliary point, `ι([1,0,0,1])`.
pub fn default_aux() -> EPoint {
    let g = gprime::unit_a().restrict().expect("x = 1");
    group::iota(&g)
}

pub fn interp_add_with(x: &RNum, y: &RNum, aux: &EPoint) -> Result<RNum> {
    let p = geometry::staudt_add(&GroupPlane, &axis(), &x.point(), &y.point(), aux)?;
    RNum::from_point(&p)
}

pub fn interp_mul_with(x: &RNum, y: &RNum, aux: &EPoint) -> Result<RNum> {
    let p = geometry::staudt_mul(&GroupPlane, &axis(), &x.point(), &y.point(), aux)?;
    RNum::from_point(&p)
}

pub fn interp_add(x: &RNum, y: &RNum) -> Result<RNum> {
    interp_add_with(x, y, &default_aux())
}

pub fn interp_mul(x: &RNum, y: &RNum) -> Result<RNum> {
    interp_mul_with(x, y, &default_aux())
}

/// Membership of the class in `Z = B/Z(G)`.
pub fn interp_is_int(x: &RNum) -> bool {
    group::in_b_definitional(&x.in_g())
}

/// A value produced or consumed by the formula catalog.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Scalar(QuadRat),
    G(GElem),
    GPrime(GPrimeElem),
    Point(EPoint),
    Bool(bool),
    Line(LineSubgroup),
    NotALine,
    Pair(Box<Value>, Box<Value>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::G(_) => "G element",
            Value::GPrime(_) => "G' element",
            Value::Point(_) => "point",
            Value::Bool(_) => "boolean",
            Value::Line(_) | Value::NotALine => "line verdict",
            Value::Pair(..) => "pair",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::G(g) => write!(f, "{g}"),
            Value::GPrime(g) => write!(f, "{g}"),
            Value::Point(p) => write!(f, "{p}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Line(l) => write!(f, "{l}"),
            Value::NotALine => f.write_str("not a line"),
            Value::Pair(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DemoError {
    #[error("unknown formula `{0}`")]
    Unknown(String),
    #[error("`{name}` expects {expected}")]
    Usage { name: String, expected: &'static str },
    #[error(transparent)]
    Domain(#[from] Error),
}

/// Names accepted by [`definable_reals_demo`].
pub const CATALOG: &[&str] = &[
    "coll",
    "centralizer",
    "in_L",
    "in_A",
    "in_B",
    "is_line_pair",
    "orbit",
    "product-recovery",
    "embed",
];

/// Evaluates one of the catalogued formulas on already-parsed arguments.
pub fn definable_reals_demo(formula_id: &str, args: &[Value]) -> std::result::Result<Value, DemoError> {
    use Value::*;
    let usage = |expected| DemoError::Usage {
        name: formula_id.to_string(),
        expected,
    };
    let id = formula_id.replace('_', "-").to_ascii_lowercase();
    match (id.as_str(), args) {
        ("coll", [Point(p), Point(q), Point(r)]) => Ok(Bool(group::coll(p, q, r))),
        ("coll", _) => Err(usage("three points (a,b)")),
        ("centralizer", [G(h), G(g)]) => Ok(Bool(group::in_centralizer(h, g))),
        ("centralizer", [GPrime(h), GPrime(g)]) => Ok(Bool(gprime::gp_in_centralizer(h, g))),
        ("centralizer", _) => Err(usage("two elements of the same group")),
        ("in-l", [Point(ab), G(h)]) => {
            let l = LineSubgroup::through(ab)?;
            Ok(Bool(group::in_l(&l, h)))
        }
        ("in-l", _) => Err(usage("line parameters (a,b) and a G element")),
        ("in-a", [G(h)]) => Ok(Bool(group::in_a(h))),
        ("in-a", _) => Err(usage("one G element")),
        ("in-b", [G(h)]) => Ok(Bool(group::in_b(h))),
        ("in-b", _) => Err(usage("one G element")),
        ("is-line-pair", [G(g1), G(g2)]) => Ok(match group::is_line_pair(g1, g2)? {
            Some(l) => Line(l),
            None => NotALine,
        }),
        ("is-line-pair", _) => Err(usage("two G elements")),
        ("orbit", [GPrime(g)]) => Ok(GPrime(gprime::conj_orbit_element(g)?)),
        ("orbit", _) => Err(usage("one G' element [0,0,c,x]")),
        ("product-recovery", [GPrime(h)]) => Ok(match gprime::product_factorization(h) {
            Some((f1, f2)) => Pair(Box::new(GPrime(f1)), Box::new(GPrime(f2))),
            None => Bool(false),
        }),
        ("product-recovery", _) => Err(usage("one G' element")),
        ("embed", [G(g)]) => Ok(GPrime(GPrimeElem::embed(g))),
        ("embed", _) => Err(usage("one G element")),
        _ => Err(DemoError::Unknown(formula_id.to_string())),
    }
}
