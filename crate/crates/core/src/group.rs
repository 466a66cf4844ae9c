//! The Heisenberg group `H3(K)`, its quotient `G = H3/Γ` by the integer
//! centre, and the definable pieces of `G`: centralizers, the line
//! subgroups `L_{a,b}`, the subgroups `A` and `B`, the projection `ι` onto
//! the plane `E = G/Z(G)`, and collinearity on `E`.

use std::fmt;

use crate::error::{Error, Result};
use crate::qfield::QuadRat;

/// `a·d − b·c`, the determinant of the rows `(a, b)` and `(c, d)`.
pub(crate) fn det(a: &QuadRat, b: &QuadRat, c: &QuadRat, d: &QuadRat) -> QuadRat {
    a * d - b * c
}

/// The unitriangular matrix `[[1,a,c],[0,1,b],[0,0,1]]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct HElem {
    pub a: QuadRat,
    pub b: QuadRat,
    pub c: QuadRat,
}

impl HElem {
    pub fn new(a: QuadRat, b: QuadRat, c: QuadRat) -> Self {
        HElem { a, b, c }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn mul(&self, rhs: &HElem) -> HElem {
        HElem {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &(&self.c + &rhs.c) + &(&self.a * &rhs.b),
        }
    }

    pub fn inv(&self) -> HElem {
        HElem {
            a: -&self.a,
            b: -&self.b,
            c: &(&self.a * &self.b) - &self.c,
        }
    }

    /// Class of `self` in `G`.
    pub fn project(&self) -> GElem {
        GElem::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

/// A class `[a,b,c]` of `G = H3(K)/Γ`, stored with `c ∈ [0,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GElem {
    a: QuadRat,
    b: QuadRat,
    c: QuadRat,
}

impl GElem {
    /// Builds the class of `[a,b,c]`, reducing `c` modulo `Z`.
    pub fn new(a: QuadRat, b: QuadRat, c: QuadRat) -> Self {
        GElem { a, b, c: c.fract() }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn a(&self) -> &QuadRat {
        &self.a
    }

    pub fn b(&self) -> &QuadRat {
        &self.b
    }

    pub fn c(&self) -> &QuadRat {
        &self.c
    }

    /// The canonical representative in `H3`.
    pub fn lift(&self) -> HElem {
        HElem::new(self.a.clone(), self.b.clone(), self.c.clone())
    }

    pub fn mul(&self, rhs: &GElem) -> GElem {
        self.lift().mul(&rhs.lift()).project()
    }

    pub fn inv(&self) -> GElem {
        self.lift().inv().project()
    }

    pub fn pow(&self, n: i64) -> GElem {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = GElem::identity();
        let mut sq = base;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        acc
    }

    /// `g h g⁻¹ h⁻¹`.
    pub fn commutator(&self, h: &GElem) -> GElem {
        self.mul(h).mul(&self.inv()).mul(&h.inv())
    }

    /// Direct test `g h = h g`.
    pub fn commutes_with(&self, h: &GElem) -> bool {
        self.mul(h) == h.mul(self)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }
}

impl fmt::Display for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

impl fmt::Debug for GElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `h ∈ C(g)`, decided by the formula `a·b′ − b·a′ ∈ Z` where `g = [a,b,c]`
/// and `h = [a′,b′,c′]`.
pub fn in_centralizer(h: &GElem, g: &GElem) -> bool {
    det(&g.a, &g.b, &h.a, &h.b).is_integer()
}

/// `g ∈ Z(G)`.
pub fn is_central(g: &GElem) -> bool {
    g.a.is_zero() && g.b.is_zero()
}

/// A point of the plane `E = G/Z(G) ≅ K²`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EPoint {
    pub a: QuadRat,
    pub b: QuadRat,
}

impl EPoint {
    pub fn new(a: QuadRat, b: QuadRat) -> Self {
        EPoint { a, b }
    }

    pub fn origin() -> Self {
        Self::default()
    }

    pub fn is_origin(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The representative `[a,b,0]` of this class of `G/Z(G)`.
    pub fn lift(&self) -> GElem {
        GElem::new(self.a.clone(), self.b.clone(), QuadRat::zero())
    }

    pub fn add(&self, rhs: &EPoint) -> EPoint {
        EPoint::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn sub(&self, rhs: &EPoint) -> EPoint {
        EPoint::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl fmt::Display for EPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for EPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ι: [a,b,c] ↦ (a,b)`, a homomorphism `G → K²` with kernel `Z(G)`.
pub fn iota(g: &GElem) -> EPoint {
    EPoint::new(g.a.clone(), g.b.clone())
}

/// The subgroup `L_{a,b} = {[a′,b′,c′] : a·b′ − b·a′ = 0}`.
///
/// Parameters are normalised so that the first nonzero of `(a, b)` is one;
/// two values are equal exactly when they denote the same subgroup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LineSubgroup {
    a: QuadRat,
    b: QuadRat,
}

impl LineSubgroup {
    pub fn new(a: QuadRat, b: QuadRat) -> Result<Self> {
        if !a.is_zero() {
            let b = b.div(&a)?;
            Ok(LineSubgroup { a: QuadRat::one(), b })
        } else if !b.is_zero() {
            Ok(LineSubgroup { a, b: QuadRat::one() })
        } else {
            Err(Error::DegenerateLine)
        }
    }

    /// The line subgroup spanned by the direction of `v`.
    pub fn through(v: &EPoint) -> Result<Self> {
        Self::new(v.a.clone(), v.b.clone())
    }

    pub fn a(&self) -> &QuadRat {
        &self.a
    }

    pub fn b(&self) -> &QuadRat {
        &self.b
    }

    pub fn contains(&self, h: &GElem) -> bool {
        in_l(self, h)
    }
}

impl fmt::Display for LineSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.a, self.b)
    }
}

impl fmt::Debug for LineSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn in_l(l: &LineSubgroup, h: &GElem) -> bool {
    det(&l.a, &l.b, &h.a, &h.b).is_zero()
}

/// Both definitions of a line subgroup for fixed parameters `(a, b)`:
/// as the intersection `C([a,b,0]) ∩ C([√2a,√2b,0])` and as the kernel
/// form `{a·b′ − b·a′ = 0}`.
#[derive(Clone, Debug)]
pub struct LineDefinitions {
    line: LineSubgroup,
    g1: GElem,
    g2: GElem,
}

impl LineDefinitions {
    pub fn new(a: QuadRat, b: QuadRat) -> Result<Self> {
        let line = LineSubgroup::new(a.clone(), b.clone())?;
        let r2 = QuadRat::sqrt2();
        let g2 = GElem::new(&r2 * &a, &r2 * &b, QuadRat::zero());
        let g1 = GElem::new(a, b, QuadRat::zero());
        Ok(LineDefinitions { line, g1, g2 })
    }

    /// Membership in the centralizer intersection.
    pub fn by_centralizers(&self, h: &GElem) -> bool {
        in_centralizer(h, &self.g1) && in_centralizer(h, &self.g2)
    }

    /// Membership in the kernel form.
    pub fn by_kernel(&self, h: &GElem) -> bool {
        in_l(&self.line, h)
    }

    pub fn line(&self) -> &LineSubgroup {
        &self.line
    }

    pub fn generators(&self) -> (&GElem, &GElem) {
        (&self.g1, &self.g2)
    }
}

fn l01() -> LineSubgroup {
    LineSubgroup {
        a: QuadRat::zero(),
        b: QuadRat::one(),
    }
}

/// `h ∈ A = L_{0,1}`: closed form `a = 0`.
pub fn in_a(h: &GElem) -> bool {
    h.a.is_zero()
}

/// `h ∈ B = L_{0,1} ∩ C([1,0,0])`: closed form `a = 0 ∧ b ∈ Z`.
pub fn in_b(h: &GElem) -> bool {
    h.a.is_zero() && h.b.is_integer()
}

/// `A` through its definition as a line subgroup.
pub fn in_a_definitional(h: &GElem) -> bool {
    in_l(&l01(), h)
}

/// `B` through its definition, as `L_{0,1}` intersected with a centralizer.
pub fn in_b_definitional(h: &GElem) -> bool {
    let e1 = GElem::new(QuadRat::one(), QuadRat::zero(), QuadRat::zero());
    in_l(&l01(), h) && in_centralizer(h, &e1)
}

/// Decides whether `C(g1) ∩ C(g2)` is a line subgroup, returning it if so.
///
/// With `v_i = ι(g_i)`, the intersection is `L_{v1}` exactly when
/// `v2 = λ·v1` for some irrational `λ`. Linearly independent directions
/// give a lattice, rational `λ` a discrete family of parallel strips;
/// neither is 2-divisible.
pub fn is_line_pair(g1: &GElem, g2: &GElem) -> Result<Option<LineSubgroup>> {
    if is_central(g1) || is_central(g2) {
        return Err(Error::CentralInput);
    }
    let (v1, v2) = (iota(g1), iota(g2));
    if !det(&v1.a, &v1.b, &v2.a, &v2.b).is_zero() {
        return Ok(None);
    }
    let ratio = if !v1.a.is_zero() {
        v2.a.div(&v1.a)?
    } else {
        v2.b.div(&v1.b)?
    };
    if ratio.is_rational() {
        Ok(None)
    } else {
        LineSubgroup::through(&v1).map(Some)
    }
}

/// For a pair that is not a line pair, an element of `C(g1) ∩ C(g2)` with
/// no square root inside the intersection. `None` for line pairs.
pub fn non_halvable_witness(g1: &GElem, g2: &GElem) -> Result<Option<GElem>> {
    if is_line_pair(g1, g2)?.is_some() {
        return Ok(None);
    }
    let (v1, v2) = (iota(g1), iota(g2));
    let d = det(&v1.a, &v1.b, &v2.a, &v2.b);
    let w = if !d.is_zero() {
        // det(v1, w) = 1 and det(v2, w) = 0.
        EPoint::new(v2.a.div(&d)?, v2.b.div(&d)?)
    } else {
        // v2 = (m/n)·v1 with n > 0 minimal: det(v1, w) = n generates the
        // admissible values.
        let ratio = if !v1.a.is_zero() {
            v2.a.div(&v1.a)?
        } else {
            v2.b.div(&v1.b)?
        };
        let n = QuadRat::from_bigint(ratio.p().denom().clone());
        // u with det(v1, u) = 1.
        let u = if !v1.a.is_zero() {
            EPoint::new(QuadRat::zero(), v1.a.inv()?)
        } else {
            EPoint::new(-v1.b.inv()?, QuadRat::zero())
        };
        EPoint::new(&n * &u.a, &n * &u.b)
    };
    Ok(Some(w.lift()))
}

/// Result of probing 2-divisibility of `C(g1) ∩ C(g2)` on a finite sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Divisibility {
    /// Every sampled member had a square root inside; `checked` members were
    /// found in the sample.
    Divisible { checked: usize },
    /// A sampled member without a square root inside the intersection.
    NotDivisible { witness: Box<GElem> },
}

/// The square root of `x` whose `c` coordinate is the smaller one. Every
/// square root of `x` has the same image under `ι`.
pub fn square_root(x: &GElem) -> GElem {
    let half = QuadRat::frac(1, 2);
    let a = &x.a * &half;
    let b = &x.b * &half;
    // y·y = [2a_y, 2b_y, 2c_y + a_y b_y]
    let c = &(&x.c - &(&a * &b)) * &half;
    GElem::new(a, b, c)
}

/// Sampling check of 2-divisibility: filters `sample` to members of
/// `C(g1) ∩ C(g2)` and tests each for a square root inside.
pub fn check_2divisible(g1: &GElem, g2: &GElem, sample: &[GElem]) -> Divisibility {
    let member = |h: &GElem| in_centralizer(h, g1) && in_centralizer(h, g2);
    let mut checked = 0;
    for x in sample.iter().filter(|h| member(h)) {
        checked += 1;
        let y = square_root(x);
        debug_assert_eq!(y.mul(&y), *x);
        if !member(&y) {
            return Divisibility::NotDivisible { witness: Box::new(x.clone()) };
        }
    }
    Divisibility::Divisible { checked }
}

/// `coll(p,q,r) ≡ ∃L ∈ 𝓛. p⁻¹q ∈ L ∧ p⁻¹r ∈ L`, with the line through
/// `p⁻¹q` as witness. A degenerate pair is collinear with anything.
pub fn coll(p: &EPoint, q: &EPoint, r: &EPoint) -> bool {
    let p_inv = p.lift().inv();
    let u = p_inv.mul(&q.lift());
    let v = p_inv.mul(&r.lift());
    if is_central(&u) || is_central(&v) {
        return true;
    }
    match LineSubgroup::through(&iota(&u)) {
        Ok(line) => in_l(&line, &v),
        Err(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QuadRat {
        QuadRat::from_int(n)
    }

    fn fr(n: i64, d: i64) -> QuadRat {
        QuadRat::frac(n, d)
    }

    fn r2() -> QuadRat {
        QuadRat::sqrt2()
    }

    fn g(a: QuadRat, b: QuadRat, c: QuadRat) -> GElem {
        GElem::new(a, b, c)
    }

    /// 3×3 matrix product, the oracle for the Heisenberg law.
    fn matmul(x: &HElem, y: &HElem) -> [[QuadRat; 3]; 3] {
        let m = |h: &HElem| {
            [
                [q(1), h.a.clone(), h.c.clone()],
                [q(0), q(1), h.b.clone()],
                [q(0), q(0), q(1)],
            ]
        };
        let (mx, my) = (m(x), m(y));
        let mut out: [[QuadRat; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = q(0);
                for k in 0..3 {
                    acc += &(&mx[i][k] * &my[k][j]);
                }
                out[i][j] = acc;
            }
        }
        out
    }

    #[test]
    fn heisenberg_law_matches_matrices() {
        let x = HElem::new(q(1), q(2), q(0));
        let y = HElem::new(q(3), q(4), q(0));
        let m = matmul(&x, &y);
        assert_eq!((m[0][1].clone(), m[1][2].clone(), m[0][2].clone()), (q(4), q(6), q(4)));
        assert_eq!(x.mul(&y), HElem::new(q(4), q(6), q(4)));
        assert_eq!(x.mul(&HElem::identity()), x);

        let z = HElem::new(q(1), q(2), q(5));
        let zi = z.inv();
        assert_eq!(zi, HElem::new(q(-1), q(-2), q(-3)));
        let m = matmul(&z, &zi);
        assert_eq!((m[0][1].clone(), m[1][2].clone(), m[0][2].clone()), (q(0), q(0), q(0)));
    }

    #[test]
    fn quotient_law() {
        let x = g(q(1), q(2), fr(1, 2));
        let y = g(q(3), q(4), fr(3, 4));
        assert_eq!(x.mul(&y), g(q(4), q(6), fr(1, 4)));
        let h = g(q(0), q(0), fr(1, 2));
        assert_eq!(h.mul(&h), GElem::identity());
        assert_eq!(g(q(0), q(0), fr(1, 4)).inv(), g(q(0), q(0), fr(3, 4)));
    }

    #[test]
    fn canonical_c() {
        assert_eq!(g(q(1), q(1), fr(7, 2)), g(q(1), q(1), fr(1, 2)));
        assert_eq!(g(q(0), q(0), -fr(1, 3)).c(), &fr(2, 3));
        let c = g(q(0), q(0), r2()).c().clone();
        assert_eq!(c, &r2() - &q(1));
    }

    #[test]
    fn pow_and_commutator() {
        let x = g(q(1), q(0), q(0));
        let y = g(q(0), fr(1, 3), q(0));
        assert_eq!(x.pow(3), g(q(3), q(0), q(0)));
        assert_eq!(x.pow(-2), x.inv().mul(&x.inv()));
        assert_eq!(x.pow(0), GElem::identity());
        // c of [x, y] is a·b′ − a′·b = 1/3
        assert_eq!(x.commutator(&y), g(q(0), q(0), fr(1, 3)));
    }

    #[test]
    fn centralizer_examples() {
        assert!(in_centralizer(&g(q(0), q(1), q(0)), &g(q(1), q(0), q(0))));
        let h = g(q(0), fr(1, 2), q(0));
        let x = g(q(1), q(0), q(0));
        assert!(!in_centralizer(&h, &x));
        assert!(!x.commutes_with(&h));
        let central = g(q(0), q(0), fr(1, 3));
        assert!(in_centralizer(&central, &g(r2(), fr(5, 7), fr(1, 9))));
    }

    #[test]
    fn centrality() {
        assert!(is_central(&g(q(0), q(0), fr(1, 2))));
        assert!(!is_central(&g(q(1), q(0), q(0))));
        assert!(is_central(&GElem::identity()));
    }

    #[test]
    fn line_membership() {
        let a = LineSubgroup::new(q(0), q(1)).unwrap();
        assert!(in_l(&a, &g(q(0), q(5), fr(1, 2))));
        assert!(!in_l(&a, &g(q(1), q(0), q(0))));
        let diag = LineSubgroup::new(q(1), q(1)).unwrap();
        assert!(in_l(&diag, &g(q(2), q(2), q(0))));
        assert_eq!(LineSubgroup::new(q(0), q(0)), Err(Error::DegenerateLine));
        assert_eq!(LineSubgroup::new(q(3), q(6)).unwrap(), LineSubgroup::new(q(1), q(2)).unwrap());
        assert_eq!(LineSubgroup::new(q(0), -r2()).unwrap(), a);
    }

    #[test]
    fn line_definitions_agree_on_examples() {
        let d = LineDefinitions::new(q(0), q(1)).unwrap();
        let h = g(fr(1, 2), q(0), q(0));
        assert!(!d.by_centralizers(&h) && !d.by_kernel(&h));
        let h = g(q(1), q(7), q(0));
        assert!(in_centralizer(&h, d.generators().0));
        assert!(!d.by_centralizers(&h) && !d.by_kernel(&h));
        let d = LineDefinitions::new(q(1), q(0)).unwrap();
        let h = g(q(3), q(0), fr(1, 2));
        assert!(d.by_centralizers(&h) && d.by_kernel(&h));
        assert!(LineDefinitions::new(q(0), q(0)).is_err());
    }

    #[test]
    fn subgroups_a_and_b() {
        let h = g(q(0), r2(), fr(1, 2));
        assert!(in_a(&h) && !in_b(&h));
        let h = g(q(0), q(3), q(0));
        assert!(in_a(&h) && in_b(&h));
        assert!(!in_a(&g(q(1), q(0), q(0))));
        for h in [
            g(q(0), r2(), fr(1, 2)),
            g(q(0), q(3), q(0)),
            g(q(1), q(0), q(0)),
            g(q(0), fr(5, 2), q(0)),
        ] {
            assert_eq!(in_a(&h), in_a_definitional(&h));
            assert_eq!(in_b(&h), in_b_definitional(&h));
        }
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&g(q(1), q(2), fr(1, 2))), EPoint::new(q(1), q(2)));
        let x = g(q(1), q(0), q(0));
        let y = g(q(0), q(1), fr(1, 2));
        assert_eq!(iota(&x.mul(&y)), EPoint::new(q(1), q(1)));
        assert_eq!(iota(&g(q(0), q(0), fr(1, 3))), EPoint::origin());
    }

    #[test]
    fn line_pair_examples() {
        let l = is_line_pair(&g(q(0), q(1), q(0)), &g(q(0), r2(), q(0))).unwrap();
        assert_eq!(l, Some(LineSubgroup::new(q(0), q(1)).unwrap()));

        let (g1, g2) = (g(q(0), q(1), q(0)), g(q(0), q(2), q(0)));
        assert_eq!(is_line_pair(&g1, &g2).unwrap(), None);
        let w = g(q(1), q(0), q(0));
        assert!(in_centralizer(&w, &g1) && in_centralizer(&w, &g2));
        let half = g(fr(1, 2), q(0), q(0));
        assert!(!in_centralizer(&half, &g1));
        assert_eq!(
            check_2divisible(&g1, &g2, &[half, w.clone()]),
            Divisibility::NotDivisible { witness: Box::new(w) }
        );
        let sym = non_halvable_witness(&g1, &g2).unwrap().unwrap();
        let root = square_root(&sym);
        assert!(in_centralizer(&sym, &g1) && in_centralizer(&sym, &g2));
        assert!(!(in_centralizer(&root, &g1) && in_centralizer(&root, &g2)));

        let l = is_line_pair(&g(q(1), q(1), q(0)), &g(r2(), r2(), fr(1, 2))).unwrap();
        assert_eq!(l, Some(LineSubgroup::new(q(1), q(1)).unwrap()));

        assert_eq!(
            is_line_pair(&g(q(0), q(0), fr(1, 2)), &g(q(1), q(0), q(0))),
            Err(Error::CentralInput)
        );
    }

    #[test]
    fn independent_pair_witness() {
        let (g1, g2) = (g(q(1), q(0), q(0)), g(q(0), q(3), q(0)));
        assert_eq!(is_line_pair(&g1, &g2).unwrap(), None);
        let w = non_halvable_witness(&g1, &g2).unwrap().unwrap();
        assert!(in_centralizer(&w, &g1) && in_centralizer(&w, &g2));
        let y = square_root(&w);
        assert_eq!(y.mul(&y), w);
        assert!(!(in_centralizer(&y, &g1) && in_centralizer(&y, &g2)));
    }

    #[test]
    fn coll_examples() {
        let o = EPoint::origin();
        let pt = |a: QuadRat, b: QuadRat| EPoint::new(a, b);
        assert!(coll(&o, &pt(q(0), q(1)), &pt(q(0), q(5))));
        assert!(!coll(&o, &pt(q(1), q(1)), &pt(q(2), &q(2) + &r2())));
        let p = pt(fr(3, 2), r2());
        assert!(coll(&p, &p, &pt(q(7), q(-1))));
        assert!(coll(&pt(q(1), q(1)), &pt(q(2), q(3)), &pt(q(3), q(5))));
    }
}
