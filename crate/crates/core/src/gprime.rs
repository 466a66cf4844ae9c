//! The group `G' = H'/Γ`, where `H'` is the group of matrices
//! `[[1,a,c],[0,x,b],[0,0,1]]` with `x > 0`.
//!
//! `G` sits inside `G'` as the product of two centralizers, and the orbit
//! of `[0,1,0,1]` under conjugation by `C([0,0,0,2])` gives a definable
//! system of representatives for `A/Z(G)`.
//!
//! Direct computation gives `C([0,1,0,1]) = {[a,b,c,1] : a ∈ Z}` and
//! `C([1,0,0,1]) = {[a,b,c,1] : b ∈ Z}`. Both are strictly larger than the
//! sets `{[0,b,c,1]}` and `{[a,0,c,1]}`; `[1,0,0,1]` commutes with
//! `[0,1,0,1]`. Intersecting with the centralizer of `[0,√2,0,1]` cuts the
//! first one down to `{[0,b,c,1]}`. Centralizers here are always computed by
//! direct commutation.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::GElem;
use crate::qfield::QuadRat;

/// A class `[a,b,c,x]` of `G'`, stored with `c ∈ [0,1)` and `x > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GPrimeElem {
    a: QuadRat,
    b: QuadRat,
    c: QuadRat,
    x: QuadRat,
}

impl GPrimeElem {
    pub fn new(a: QuadRat, b: QuadRat, c: QuadRat, x: QuadRat) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::NonPositiveDilation);
        }
        Ok(GPrimeElem {
            a,
            b,
            c: c.fract(),
            x,
        })
    }

    pub fn identity() -> Self {
        GPrimeElem {
            a: QuadRat::zero(),
            b: QuadRat::zero(),
            c: QuadRat::zero(),
            x: QuadRat::one(),
        }
    }

    /// `[0,0,0,x]`.
    pub fn dilation(x: QuadRat) -> Result<Self> {
        Self::new(QuadRat::zero(), QuadRat::zero(), QuadRat::zero(), x)
    }

    /// `[a,b,c] ↦ [a,b,c,1]`.
    pub fn embed(g: &GElem) -> Self {
        GPrimeElem {
            a: g.a().clone(),
            b: g.b().clone(),
            c: g.c().clone(),
            x: QuadRat::one(),
        }
    }

    /// Inverse of [`GPrimeElem::embed`] on elements with `x = 1`.
    pub fn restrict(&self) -> Option<GElem> {
        (self.x == QuadRat::one())
            .then(|| GElem::new(self.a.clone(), self.b.clone(), self.c.clone()))
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

    pub fn x(&self) -> &QuadRat {
        &self.x
    }

    pub fn mul(&self, rhs: &GPrimeElem) -> GPrimeElem {
        GPrimeElem {
            a: &rhs.a + &(&self.a * &rhs.x),
            b: &self.b + &(&self.x * &rhs.b),
            c: (&(&self.c + &rhs.c) + &(&self.a * &rhs.b)).fract(),
            x: &self.x * &rhs.x,
        }
    }

    pub fn inv(&self) -> GPrimeElem {
        let xi = self.x.inv().expect("x is positive");
        let a = -(&self.a * &xi);
        let b = -(&self.b * &xi);
        let c = (&(&(&self.a * &self.b) * &xi) - &self.c).fract();
        GPrimeElem { a, b, c, x: xi }
    }

    pub fn pow(&self, n: i64) -> GPrimeElem {
        let base = if n < 0 { self.inv() } else { self.clone() };
        let mut acc = GPrimeElem::identity();
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

    /// `g h g⁻¹`.
    pub fn conjugate(&self, h: &GPrimeElem) -> GPrimeElem {
        self.mul(h).mul(&self.inv())
    }

    pub fn is_identity(&self) -> bool {
        *self == GPrimeElem::identity()
    }
}

impl fmt::Display for GPrimeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.a, self.b, self.c, self.x)
    }
}

impl fmt::Debug for GPrimeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn elem(a: i64, b: i64, c: i64, x: i64) -> GPrimeElem {
    GPrimeElem::new(a.into(), b.into(), c.into(), x.into()).expect("positive x")
}

/// `[0,1,0,1]`.
pub fn unit_b() -> GPrimeElem {
    elem(0, 1, 0, 1)
}

/// `[1,0,0,1]`.
pub fn unit_a() -> GPrimeElem {
    elem(1, 0, 0, 1)
}

/// `[0,0,0,2]`.
pub fn doubling() -> GPrimeElem {
    elem(0, 0, 0, 2)
}

/// `h ∈ C(g)`, by direct commutation.
pub fn gp_in_centralizer(h: &GPrimeElem, g: &GPrimeElem) -> bool {
    g.mul(h) == h.mul(g)
}

/// Splits `h` as `f1·f2` with `f1 ∈ C([0,1,0,1])` and `f2 ∈ C([1,0,0,1])`.
///
/// Both centralizers lie in `{x = 1}`, so no factorization exists when
/// `x ≠ 1`; otherwise `[0,b,c,1]·[a,0,0,1]` is one.
pub fn product_factorization(h: &GPrimeElem) -> Option<(GPrimeElem, GPrimeElem)> {
    if h.x != QuadRat::one() {
        return None;
    }
    let f1 = GPrimeElem {
        a: QuadRat::zero(),
        ..h.clone()
    };
    let f2 = GPrimeElem {
        a: h.a.clone(),
        b: QuadRat::zero(),
        c: QuadRat::zero(),
        x: QuadRat::one(),
    };
    debug_assert!(gp_in_centralizer(&f1, &unit_b()));
    debug_assert!(gp_in_centralizer(&f2, &unit_a()));
    debug_assert_eq!(f1.mul(&f2), *h);
    Some((f1, f2))
}

/// `h ∈ C([0,1,0,1])·C([1,0,0,1])`, the copy of `G` inside `G'`.
pub fn in_g_embedded(h: &GPrimeElem) -> bool {
    product_factorization(h).is_some()
}

/// `g·[0,1,0,1]·g⁻¹` for `g ∈ C([0,0,0,2])`; equals `[0,x,0,1]`.
pub fn conj_orbit_element(g: &GPrimeElem) -> Result<GPrimeElem> {
    if !gp_in_centralizer(g, &doubling()) {
        return Err(Error::NotInDilationCentralizer(g.to_string()));
    }
    Ok(g.conjugate(&unit_b()))
}

/// The representative of the class `b` of `A/Z(G)` in `O ∪ O⁻¹ ∪ {1}`.
pub fn rep_of_r(b: &QuadRat) -> GPrimeElem {
    let from_orbit = |x: QuadRat| {
        let g = GPrimeElem::dilation(x).expect("positive");
        conj_orbit_element(&g).expect("dilations centralize [0,0,0,2]")
    };
    match b.sign() {
        1 => from_orbit(b.clone()),
        -1 => from_orbit(-b).inv(),
        _ => GPrimeElem::identity(),
    }
}

/// Inverse of [`rep_of_r`]: `[0,b,0,1] ↦ b`.
pub fn class_of_rep(h: &GPrimeElem) -> Result<QuadRat> {
    if h.a.is_zero() && h.c.is_zero() && h.x == QuadRat::one() {
        Ok(h.b.clone())
    } else {
        Err(Error::NotARepresentative(h.to_string()))
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

    fn gp(a: QuadRat, b: QuadRat, c: QuadRat, x: QuadRat) -> GPrimeElem {
        GPrimeElem::new(a, b, c, x).unwrap()
    }

    type Mat = [[QuadRat; 3]; 3];

    fn matrix(h: &GPrimeElem) -> Mat {
        [
            [q(1), h.a.clone(), h.c.clone()],
            [q(0), h.x.clone(), h.b.clone()],
            [q(0), q(0), q(1)],
        ]
    }

    fn matmul(x: &Mat, y: &Mat) -> Mat {
        let mut out: Mat = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = q(0);
                for k in 0..3 {
                    acc += &(&x[i][k] * &y[k][j]);
                }
                out[i][j] = acc;
            }
        }
        out
    }

    fn from_matrix(m: &Mat) -> GPrimeElem {
        assert_eq!((m[0][0].clone(), m[2][2].clone()), (q(1), q(1)));
        gp(m[0][1].clone(), m[1][2].clone(), m[0][2].clone(), m[1][1].clone())
    }

    #[test]
    fn law_matches_matrix_product() {
        let x = gp(fr(1, 3), q(2), fr(1, 2), fr(5, 2));
        let y = gp(QuadRat::sqrt2(), fr(-7, 4), fr(2, 3), fr(1, 3));
        assert_eq!(x.mul(&y), from_matrix(&matmul(&matrix(&x), &matrix(&y))));
        assert_eq!(y.mul(&x), from_matrix(&matmul(&matrix(&y), &matrix(&x))));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(unit_b().mul(&unit_a()), gp(q(1), q(1), q(0), q(1)));
        assert_eq!(doubling().mul(&gp(q(0), q(0), q(0), fr(1, 2))), GPrimeElem::identity());
        assert_eq!(
            gp(q(1), q(1), q(0), q(2)).inv(),
            gp(fr(-1, 2), fr(-1, 2), fr(1, 2), fr(1, 2))
        );
        let h = gp(q(1), q(1), q(0), q(2));
        assert_eq!(h.mul(&h.inv()), GPrimeElem::identity());
    }

    #[test]
    fn rejects_non_positive_x() {
        assert_eq!(GPrimeElem::new(q(0), q(0), q(0), q(0)), Err(Error::NonPositiveDilation));
        let neg = &QuadRat::one() - &QuadRat::sqrt2();
        assert_eq!(GPrimeElem::new(q(0), q(0), q(0), neg), Err(Error::NonPositiveDilation));
    }

    #[test]
    fn centralizer_examples() {
        assert!(gp_in_centralizer(&gp(q(0), q(5), fr(1, 2), q(1)), &unit_b()));
        // outside {[0,b,c,1]} yet commuting
        assert!(gp_in_centralizer(&unit_a(), &unit_b()));
        assert!(!gp_in_centralizer(&gp(fr(1, 2), q(0), q(0), q(1)), &unit_b()));
    }

    #[test]
    fn embedded_g() {
        assert!(in_g_embedded(&gp(q(3), QuadRat::sqrt2(), fr(1, 2), q(1))));
        assert!(!in_g_embedded(&doubling()));
        assert!(in_g_embedded(&GPrimeElem::identity()));
        let (f1, f2) = product_factorization(&gp(q(3), q(4), fr(1, 5), q(1))).unwrap();
        assert_eq!(f1, gp(q(0), q(4), fr(1, 5), q(1)));
        assert_eq!(f2, gp(q(3), q(0), q(0), q(1)));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(conj_orbit_element(&doubling()).unwrap(), gp(q(0), q(2), q(0), q(1)));
        assert_eq!(conj_orbit_element(&gp(q(0), q(0), fr(1, 2), q(1))).unwrap(), unit_b());
        assert_eq!(
            conj_orbit_element(&gp(q(0), q(0), fr(1, 3), q(3))).unwrap(),
            gp(q(0), q(3), q(0), q(1))
        );
        assert!(matches!(
            conj_orbit_element(&unit_a()),
            Err(Error::NotInDilationCentralizer(_))
        ));
    }

    #[test]
    fn representatives() {
        let r2 = QuadRat::sqrt2();
        assert_eq!(rep_of_r(&r2), gp(q(0), r2.clone(), q(0), q(1)));
        assert_eq!(rep_of_r(&q(-1)), unit_b().inv());
        assert_eq!(rep_of_r(&q(-1)), gp(q(0), q(-1), q(0), q(1)));
        assert_eq!(rep_of_r(&q(0)), GPrimeElem::identity());
        assert_eq!(class_of_rep(&rep_of_r(&fr(-3, 2))).unwrap(), fr(-3, 2));
        assert!(class_of_rep(&unit_a()).is_err());
        assert_eq!(rep_of_r(&q(2)).mul(&rep_of_r(&fr(-1, 2))), rep_of_r(&fr(3, 2)));
    }

    #[test]
    fn pow_negative() {
        let h = gp(q(1), q(2), fr(1, 3), q(2));
        assert_eq!(h.pow(-1), h.inv());
        assert_eq!(h.pow(3), h.mul(&h).mul(&h));
    }
}
