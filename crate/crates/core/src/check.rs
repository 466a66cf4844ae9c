//! Seeded invariant suites.
//!
//! Every case draws its inputs from its own ChaCha stream keyed by
//! `(seed, suite, case index)`, so a report depends only on the seed and
//! the count, and cases can run in parallel. Scalars are sampled with
//! numerators bounded by [`sample::MAX_NUM`] and denominators by
//! [`sample::MAX_DEN`].

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::geometry::{self, AffPoint, Meet};
use crate::gprime::{self, GPrimeElem};
use crate::group::{self, Divisibility, EPoint, GElem, HElem, LineDefinitions};
use crate::interp;
use crate::qfield::{QuadRat, Rational};

/// Random generators shared by the suites, the acceptance tests and the
/// benches.
pub mod sample {
    use super::*;

    pub const MAX_NUM: i64 = 100;
    pub const MAX_DEN: i64 = 100;

    pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        rng
    }

    pub fn rational<R: Rng>(rng: &mut R) -> Rational {
        let n = rng.gen_range(-MAX_NUM..=MAX_NUM);
        let d = rng.gen_range(1..=MAX_DEN);
        Rational::new(n.into(), d.into())
    }

    pub fn small_int<R: Rng>(rng: &mut R) -> QuadRat {
        QuadRat::from_int(rng.gen_range(-10..=10))
    }

    /// A scalar of bounded height. Integers, rationals, pure multiples of
    /// `√2` and general elements are all drawn with positive probability.
    pub fn quad<R: Rng>(rng: &mut R) -> QuadRat {
        match rng.gen_range(0..8) {
            0 => small_int(rng),
            1 => QuadRat::from_int(rng.gen_range(-MAX_NUM..=MAX_NUM)),
            2 | 3 => QuadRat::from_rational(rational(rng)),
            4 => QuadRat::new(Rational::from_integer(0.into()), rational(rng)),
            _ => QuadRat::new(rational(rng), rational(rng)),
        }
    }

    pub fn nonzero_quad<R: Rng>(rng: &mut R) -> QuadRat {
        loop {
            let q = quad(rng);
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn positive_quad<R: Rng>(rng: &mut R) -> QuadRat {
        nonzero_quad(rng).abs()
    }

    pub fn h_elem<R: Rng>(rng: &mut R) -> HElem {
        HElem::new(quad(rng), quad(rng), quad(rng))
    }

    pub fn g_elem<R: Rng>(rng: &mut R) -> GElem {
        GElem::new(quad(rng), quad(rng), quad(rng))
    }

    pub fn noncentral_g<R: Rng>(rng: &mut R) -> GElem {
        loop {
            let g = g_elem(rng);
            if !group::is_central(&g) {
                return g;
            }
        }
    }

    pub fn gp_elem<R: Rng>(rng: &mut R) -> GPrimeElem {
        GPrimeElem::new(quad(rng), quad(rng), quad(rng), positive_quad(rng)).expect("x > 0")
    }

    pub fn gp_with_x_one<R: Rng>(rng: &mut R) -> GPrimeElem {
        GPrimeElem::new(quad(rng), quad(rng), quad(rng), QuadRat::one()).expect("x = 1")
    }

    pub fn point<R: Rng>(rng: &mut R) -> AffPoint {
        AffPoint::new(quad(rng), quad(rng))
    }

    pub fn epoint<R: Rng>(rng: &mut R) -> EPoint {
        EPoint::new(quad(rng), quad(rng))
    }

    pub fn off_axis_point<R: Rng>(rng: &mut R) -> AffPoint {
        AffPoint::new(nonzero_quad(rng), quad(rng))
    }

    /// `u` with `det(v, u) = 1`, for nonzero `v`.
    pub fn unit_normal(v: &EPoint) -> EPoint {
        if !v.a.is_zero() {
            EPoint::new(QuadRat::zero(), v.a.inv().expect("nonzero"))
        } else {
            EPoint::new(-v.b.inv().expect("nonzero"), QuadRat::zero())
        }
    }

    fn scale(s: &QuadRat, v: &EPoint) -> EPoint {
        EPoint::new(s * &v.a, s * &v.b)
    }

    /// An element `h` relative to a non-central `g`: unrelated, inside
    /// `C(g)` off the line of `g`, or on the line of `g`.
    pub fn g_related<R: Rng>(rng: &mut R, g: &GElem) -> GElem {
        let v = group::iota(g);
        let c = quad(rng);
        match rng.gen_range(0..3) {
            0 => g_elem(rng),
            1 => {
                let k = small_int(rng);
                let w = scale(&quad(rng), &v).add(&scale(&k, &unit_normal(&v)));
                GElem::new(w.a, w.b, c)
            }
            _ => {
                let w = scale(&quad(rng), &v);
                GElem::new(w.a, w.b, c)
            }
        }
    }

    /// Kinds of centralizer pairs used for the divisibility check.
    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    pub enum PairKind {
        IrrationalMultiple,
        RationalMultiple,
        Independent,
    }

    /// A pair `(g1, g2)` of non-central elements of the requested kind.
    pub fn centralizer_pair<R: Rng>(rng: &mut R, kind: PairKind) -> (GElem, GElem) {
        let g1 = noncentral_g(rng);
        let v = group::iota(&g1);
        let w = match kind {
            PairKind::IrrationalMultiple => {
                let lambda = QuadRat::new(rational(rng), rational_nonzero(rng));
                scale(&lambda, &v)
            }
            PairKind::RationalMultiple => {
                let n = rng.gen_range(-6..=6i64);
                let n = if n == 0 { 1 } else { n };
                let d = rng.gen_range(1..=6i64);
                scale(&QuadRat::frac(n, d), &v)
            }
            PairKind::Independent => loop {
                let w = epoint(rng);
                if !crate::group::det(&v.a, &v.b, &w.a, &w.b).is_zero() {
                    break w;
                }
            },
        };
        (g1, GElem::new(w.a, w.b, quad(rng)))
    }

    fn rational_nonzero<R: Rng>(rng: &mut R) -> Rational {
        loop {
            let r = rational(rng);
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }

    /// Elements to probe the 2-divisibility of `C(g1) ∩ C(g2)` with:
    /// fractional multiples of both directions, integer multiples of their
    /// unit normals, of the dual basis when the directions are independent,
    /// and a few random elements.
    pub fn divisibility_probes<R: Rng>(rng: &mut R, g1: &GElem, g2: &GElem) -> Vec<GElem> {
        let (v1, v2) = (group::iota(g1), group::iota(g2));
        let mut dirs = vec![unit_normal(&v1), unit_normal(&v2)];
        let d = crate::group::det(&v1.a, &v1.b, &v2.a, &v2.b);
        if let Ok(di) = d.inv() {
            dirs.push(scale(&di, &v1));
            dirs.push(scale(&di, &v2));
        }
        let mut out = Vec::new();
        for k in 1..=12 {
            for u in &dirs {
                let w = scale(&QuadRat::from_int(k), u);
                out.push(GElem::new(w.a, w.b, quad(rng)));
            }
        }
        for num in -3..=3 {
            for den in 1..=4 {
                for v in [&v1, &v2] {
                    let w = scale(&QuadRat::frac(num, den), v);
                    out.push(GElem::new(w.a, w.b, quad(rng)));
                }
            }
        }
        out.extend((0..16).map(|_| g_elem(rng)));
        out
    }
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &["qfield", "group-core", "gprime", "geometry", "interp"];

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub passed: usize,
    pub total: usize,
    /// First failing case by index, with its counterexample.
    pub failure: Option<(usize, String)>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "ok {}/{}", self.passed, self.total),
            Some((i, msg)) => write!(
                f,
                "FAIL {}/{}: case {}: {}",
                self.passed, self.total, i, msg
            ),
        }
    }
}

type CaseResult = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn suite_salt(name: &str) -> u64 {
    // stable across runs and platforms
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Runs `count` cases of a suite. Returns `None` for an unknown suite name.
pub fn run_suite(name: &str, seed: u64, count: usize) -> Option<Report> {
    let case: fn(&mut ChaCha8Rng) -> CaseResult = match name {
        "qfield" => qfield_case,
        "group-core" => group_case,
        "gprime" => gprime_case,
        "geometry" => geometry_case,
        "interp" => interp_case,
        _ => return None,
    };
    let salt = suite_salt(name);
    let results: Vec<CaseResult> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = sample::rng(seed ^ salt, i as u64);
            case(&mut rng)
        })
        .collect();
    let failure = results
        .iter()
        .enumerate()
        .find_map(|(i, r)| r.as_ref().err().map(|m| (i, m.clone())));
    Some(Report {
        suite: name.to_string(),
        passed: results.iter().filter(|r| r.is_ok()).count(),
        total: count,
        failure,
    })
}

/// Rational interval `[lo, hi]` containing `u`, from `99/70 < √2 < 140/99`.
pub fn sqrt2_interval(u: &QuadRat) -> (Rational, Rational) {
    let lo_r2 = Rational::new(99.into(), 70.into());
    let hi_r2 = Rational::new(140.into(), 99.into());
    let (a, b) = (u.q() * &lo_r2, u.q() * &hi_r2);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    (u.p() + lo, u.p() + hi)
}

fn qfield_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let (u, v, w) = (sample::quad(rng), sample::quad(rng), sample::quad(rng));
    ensure!((&u + &v) + &w == &u + &(&v + &w), "add not associative at {u}, {v}, {w}");
    ensure!((&u * &v) * &w == &u * &(&v * &w), "mul not associative at {u}, {v}, {w}");
    ensure!(&u + &v == &v + &u && &u * &v == &v * &u, "not commutative at {u}, {v}");
    ensure!(&u * &(&v + &w) == &(&u * &v) + &(&u * &w), "not distributive at {u}, {v}, {w}");
    if let Ok(ui) = u.inv() {
        ensure!(&u * &ui == QuadRat::one(), "bad inverse of {u}");
    }
    ensure!((&u * &v).sign() == u.sign() * v.sign(), "sign not multiplicative at {u}, {v}");
    let s = &u + &v;
    let (lo, hi) = sqrt2_interval(&s);
    let zero = Rational::from_integer(0.into());
    if lo > zero {
        ensure!(s.sign() == 1, "sign({s}) disagrees with interval");
    } else if hi < zero {
        ensure!(s.sign() == -1, "sign({s}) disagrees with interval");
    }
    let f = QuadRat::from_bigint(u.floor());
    ensure!(
        (&u - &f).sign() >= 0 && (&f + &QuadRat::one() - &u).sign() > 0,
        "floor({u}) = {f} out of bracket"
    );
    let t = if rng.gen_bool(0.5) { sample::small_int(rng) } else { u.clone() };
    if t.is_integer() && (&QuadRat::sqrt2() * &t).is_integer() {
        ensure!(t.is_zero(), "irrationality lemma fails at {t}");
    }
    Ok(())
}

fn group_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let (g, h, k) = (sample::g_elem(rng), sample::g_elem(rng), sample::g_elem(rng));
    let e = GElem::identity();
    ensure!(g.mul(&h).mul(&k) == g.mul(&h.mul(&k)), "not associative at {g}, {h}, {k}");
    ensure!(g.mul(&e) == g && e.mul(&g) == g, "identity fails at {g}");
    ensure!(g.mul(&g.inv()) == e && g.inv().mul(&g) == e, "inverse fails at {g}");

    let lifted = sample::h_elem(rng);
    let z = QuadRat::from_int(rng.gen_range(-50..=50));
    let shifted = HElem::new(lifted.a.clone(), lifted.b.clone(), &lifted.c + &z);
    ensure!(lifted.project() == shifted.project(), "projection depends on Γ-shift at {lifted:?}");

    let g = sample::noncentral_g(rng);
    let h = sample::g_related(rng, &g);
    ensure!(
        group::in_centralizer(&h, &g) == g.commutes_with(&h),
        "centralizer formula disagrees with commutation at {g}, {h}"
    );
    let comm = g.commutator(&h);
    let expected_c = (&(g.a() * h.b()) - &(h.a() * g.b())).fract();
    ensure!(
        group::is_central(&comm) && *comm.c() == expected_c,
        "commutator of {g}, {h} is {comm}"
    );

    let defs = LineDefinitions::new(g.a().clone(), g.b().clone()).map_err(|e| e.to_string())?;
    let probe = sample::g_related(rng, &g);
    ensure!(
        defs.by_centralizers(&probe) == defs.by_kernel(&probe),
        "L definitions disagree for {g} at {probe}"
    );

    let kind = match rng.gen_range(0..3) {
        0 => sample::PairKind::IrrationalMultiple,
        1 => sample::PairKind::RationalMultiple,
        _ => sample::PairKind::Independent,
    };
    let (g1, g2) = sample::centralizer_pair(rng, kind);
    line_pair_agreement(rng, &g1, &g2)?;

    let (x, y) = (sample::g_elem(rng), sample::g_elem(rng));
    ensure!(
        group::iota(&x.mul(&y)) == group::iota(&x).add(&group::iota(&y)),
        "ι not a homomorphism at {x}, {y}"
    );
    ensure!(
        group::iota(&x).is_origin() == group::is_central(&x),
        "kernel of ι wrong at {x}"
    );

    let (p, q, r) = (sample::epoint(rng), sample::epoint(rng), sample::epoint(rng));
    let r = if rng.gen_bool(0.5) { r } else { collinear_third(rng, &p, &q) };
    ensure!(
        group::coll(&p, &q, &r) == geometry::coll_det(&(&p).into(), &(&q).into(), &(&r).into()),
        "coll disagrees with determinant at {p}, {q}, {r}"
    );
    Ok(())
}

/// A point on the line through `p` and `q`.
pub fn collinear_third<R: Rng>(rng: &mut R, p: &EPoint, q: &EPoint) -> EPoint {
    let t = sample::quad(rng);
    let d = q.sub(p);
    p.add(&EPoint::new(&t * &d.a, &t * &d.b))
}

/// Checks the symbolic line-pair verdict against the sampling oracle; a
/// negative verdict must come with a sampled non-halvable witness.
pub fn line_pair_agreement<R: Rng>(rng: &mut R, g1: &GElem, g2: &GElem) -> CaseResult {
    let symbolic = group::is_line_pair(g1, g2).map_err(|e| e.to_string())?;
    let probes = sample::divisibility_probes(rng, g1, g2);
    let member = |x: &GElem| group::in_centralizer(x, g1) && group::in_centralizer(x, g2);
    match (symbolic, group::check_2divisible(g1, g2, &probes)) {
        (Some(line), Divisibility::Divisible { checked }) => {
            ensure!(checked > 0, "no probe of {g1}, {g2} landed in the intersection");
            for x in probes.iter().filter(|x| member(x)) {
                ensure!(line.contains(x), "{x} in C({g1}) ∩ C({g2}) but not on {line}");
            }
            Ok(())
        }
        (None, Divisibility::NotDivisible { witness }) => {
            let root = group::square_root(&witness);
            ensure!(
                member(&witness) && root.mul(&root) == *witness && !member(&root),
                "bad witness {witness} for {g1}, {g2}"
            );
            let sym = group::non_halvable_witness(g1, g2)
                .map_err(|e| e.to_string())?
                .ok_or("no symbolic witness")?;
            ensure!(
                member(&sym) && !member(&group::square_root(&sym)),
                "symbolic witness {sym} for {g1}, {g2} is halvable"
            );
            Ok(())
        }
        (s, o) => Err(format!("{g1}, {g2}: symbolic {s:?} vs sampled {o:?}")),
    }
}

fn gprime_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let (g, h, k) = (sample::gp_elem(rng), sample::gp_elem(rng), sample::gp_elem(rng));
    let e = GPrimeElem::identity();
    ensure!(g.mul(&h).mul(&k) == g.mul(&h.mul(&k)), "not associative at {g}, {h}, {k}");
    ensure!(g.mul(&e) == g && e.mul(&g) == g, "identity fails at {g}");
    ensure!(g.mul(&g.inv()) == e && g.inv().mul(&g) == e, "inverse fails at {g}");
    for r in [g.mul(&h), g.inv()] {
        ensure!(r.x().is_positive(), "x not positive in {r}");
        ensure!(r.c().sign() >= 0 && *r.c() < QuadRat::one(), "c not canonical in {r}");
    }

    let (a, b) = (sample::g_elem(rng), sample::g_elem(rng));
    ensure!(
        GPrimeElem::embed(&a.mul(&b)) == GPrimeElem::embed(&a).mul(&GPrimeElem::embed(&b)),
        "embedding not a homomorphism at {a}, {b}"
    );
    ensure!(
        (GPrimeElem::embed(&a) == GPrimeElem::embed(&b)) == (a == b),
        "embedding not injective at {a}, {b}"
    );

    let one = sample::gp_with_x_one(rng);
    let (f1, f2) = gprime::product_factorization(&one).ok_or(format!("{one} not factored"))?;
    ensure!(
        gprime::gp_in_centralizer(&f1, &gprime::unit_b())
            && gprime::gp_in_centralizer(&f2, &gprime::unit_a())
            && f1.mul(&f2) == one,
        "bad factorization {f1} * {f2} of {one}"
    );
    let probe = if rng.gen_bool(0.5) { one } else { g.clone() };
    ensure!(
        gprime::in_g_embedded(&probe) == (*probe.x() == QuadRat::one()),
        "product membership wrong at {probe}"
    );

    let dil = GPrimeElem::new(
        QuadRat::zero(),
        QuadRat::zero(),
        sample::quad(rng),
        sample::positive_quad(rng),
    )
    .expect("x > 0");
    let orbit = gprime::conj_orbit_element(&dil).map_err(|err| err.to_string())?;
    let expected =
        GPrimeElem::new(QuadRat::zero(), dil.x().clone(), QuadRat::zero(), QuadRat::one())
            .expect("x = 1");
    ensure!(orbit == expected, "orbit of {dil} is {orbit}");

    section_property(rng)?;
    centralizer_reconciliation(rng)?;
    Ok(())
}

/// For a random element of `A` embedded in `G'`, exactly one representative
/// lies in its class modulo `Z(G)`.
pub fn section_property<R: Rng>(rng: &mut R) -> CaseResult {
    let (b, c) = (sample::quad(rng), sample::quad(rng));
    let h = GPrimeElem::new(QuadRat::zero(), b.clone(), c, QuadRat::one()).expect("x = 1");
    let same_class = |r: &GPrimeElem| {
        h.mul(&r.inv())
            .restrict()
            .is_some_and(|g| group::is_central(&g))
    };
    let hit = gprime::rep_of_r(&b);
    ensure!(same_class(&hit), "representative {hit} misses class of {h}");
    let other = loop {
        let t = sample::quad(rng);
        if t != b {
            break gprime::rep_of_r(&t);
        }
    };
    ensure!(!same_class(&other), "second representative {other} also hits {h}");
    Ok(())
}

/// Members of `C([0,1,0,1]) ∩ C([0,√2,0,1])` are exactly of the form
/// `[0,b,c,1]`.
pub fn centralizer_reconciliation<R: Rng>(rng: &mut R) -> CaseResult {
    let refine = GPrimeElem::new(
        QuadRat::zero(),
        QuadRat::sqrt2(),
        QuadRat::zero(),
        QuadRat::one(),
    )
    .expect("x = 1");
    let h = match rng.gen_range(0..4) {
        0 => sample::gp_elem(rng),
        1 => sample::gp_with_x_one(rng),
        2 => GPrimeElem::new(sample::small_int(rng), sample::quad(rng), sample::quad(rng), QuadRat::one())
            .expect("x = 1"),
        _ => GPrimeElem::new(QuadRat::zero(), sample::quad(rng), sample::quad(rng), QuadRat::one())
            .expect("x = 1"),
    };
    let in_both = gprime::gp_in_centralizer(&h, &gprime::unit_b())
        && gprime::gp_in_centralizer(&h, &refine);
    let displayed = h.a().is_zero() && *h.x() == QuadRat::one();
    ensure!(in_both == displayed, "refined centralizer wrong at {h}");
    Ok(())
}

fn geometry_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let (p, q) = (sample::point(rng), sample::point(rng));
    if p != q {
        let l = geometry::line_through(&p, &q).map_err(|e| e.to_string())?;
        ensure!(l.contains(&p) && l.contains(&q), "{l} misses {p} or {q}");
        let r = sample::point(rng);
        let par = geometry::parallel_through(&l, &r);
        ensure!(
            par.contains(&r) && geometry::is_parallel(&l, &par),
            "parallel through {r} to {l} is {par}"
        );
        ensure!(geometry::parallel_through(&par, &r) == par, "parallel_through not idempotent");
        let s = sample::point(rng);
        if r != s {
            let m = geometry::line_through(&r, &s).map_err(|e| e.to_string())?;
            if let Meet::Point(x) = geometry::meet(&l, &m) {
                ensure!(l.contains(&x) && m.contains(&x), "meet {x} of {l}, {m} off a line");
            }
        }
    }

    let (x, y) = (sample::quad(rng), sample::quad(rng));
    let (aux1, aux2) = (sample::off_axis_point(rng), sample::off_axis_point(rng));
    for aux in [&aux1, &aux2] {
        let s = geometry::vs_add(&x, &y, aux).map_err(|e| e.to_string())?;
        ensure!(s == &x + &y, "vs_add({x}, {y}, {aux}) = {s}");
        let m = geometry::vs_mul(&x, &y, aux).map_err(|e| e.to_string())?;
        ensure!(m == &x * &y, "vs_mul({x}, {y}, {aux}) = {m}");
    }

    let (a, b) = (sample::epoint(rng), sample::epoint(rng));
    let c = if rng.gen_bool(0.5) { sample::epoint(rng) } else { collinear_third(rng, &a, &b) };
    ensure!(
        geometry::coll_det(&(&a).into(), &(&b).into(), &(&c).into()) == group::coll(&a, &b, &c),
        "coll_det disagrees with coll at {a}, {b}, {c}"
    );
    Ok(())
}

fn interp_case(rng: &mut ChaCha8Rng) -> CaseResult {
    let (s, t, u) = (sample::quad(rng), sample::quad(rng), sample::quad(rng));
    let (es, et, eu) = (interp::encode(&s), interp::encode(&t), interp::encode(&u));
    let add = |x: &interp::RNum, y: &interp::RNum| interp::interp_add(x, y).map_err(|e| e.to_string());
    let mul = |x: &interp::RNum, y: &interp::RNum| interp::interp_mul(x, y).map_err(|e| e.to_string());

    let sum = add(&es, &et)?;
    ensure!(interp::decode(&sum) == &s + &t, "interp_add({s}, {t}) = {sum}");
    let prod = mul(&es, &et)?;
    ensure!(interp::decode(&prod) == &s * &t, "interp_mul({s}, {t}) = {prod}");
    ensure!(
        interp::interp_is_int(&es) == s.is_integer(),
        "interp_is_int({s}) wrong"
    );

    ensure!(sum == add(&et, &es)?, "interp_add not commutative at {s}, {t}");
    ensure!(prod == mul(&et, &es)?, "interp_mul not commutative at {s}, {t}");
    ensure!(
        add(&sum, &eu)? == add(&es, &add(&et, &eu)?)?,
        "interp_add not associative at {s}, {t}, {u}"
    );
    ensure!(
        mul(&prod, &eu)? == mul(&es, &mul(&et, &eu)?)?,
        "interp_mul not associative at {s}, {t}, {u}"
    );
    ensure!(
        mul(&es, &add(&et, &eu)?)? == add(&prod, &mul(&es, &eu)?)?,
        "not distributive at {s}, {t}, {u}"
    );
    Ok(())
}
