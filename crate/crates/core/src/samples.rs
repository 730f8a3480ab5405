//! Shared exact fixtures: diagonal (Fermat-type) hypersurfaces, a quartic
//! surface containing a line with exactly two star points, the Segre
//! quadric, and seeded generators for sample points, lines, and random
//! hypersurfaces smooth at a marked point.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{CycloField, CycloNum, Mono, MultiPoly, Scalar};
use crate::geometry::{Hypersurface, ProjLine, ProjPoint};
use crate::rng::DetRng;
use crate::{Error, Result};

/// The diagonal hypersurface `sum_{i=0}^{n} X_i^d` in `P^n`; smooth in
/// characteristic zero for every degree.
pub fn fermat(field: &CycloField, d: u32, n: usize) -> Hypersurface {
    let mut f = MultiPoly::zero(field, n + 1);
    for i in 0..=n {
        let mut exps = vec![0u32; n + 1];
        exps[i] = d;
        f.add_term(Mono::new(exps), field.one());
    }
    Hypersurface::new(f).expect("diagonal form is a valid equation")
}

/// The smallest cyclotomic field containing all `xi` with `xi^d = -1`.
pub fn fermat_field(d: u32) -> CycloField {
    CycloField::new(2 * d).expect("positive conductor")
}

/// A primitive `2d`-th root of unity in a field whose conductor `2d`
/// divides; its odd powers are exactly the `xi` with `xi^d = -1`.
pub fn primitive_2d_root(field: &CycloField, d: u32) -> Result<CycloNum> {
    let cond = field.conductor();
    if cond % (2 * d) != 0 {
        return Err(Error::FieldMismatch {
            left: cond,
            right: 2 * d,
        });
    }
    Ok(field.zeta_pow((cond / (2 * d)) as i64))
}

/// Quartic surface `X_1 X_2 (X_2 - X_1)(X_2 + X_1)
/// + X_3 (X_1 - X_0)(X_3 + X_1 - X_0)(X_3 - X_1 + X_0)` in `P^3`.  It
/// contains the line `X_2 = X_3 = 0`, and on that line exactly two star
/// points, `(1:0:0:0)` with tangent `X_3 = 0` and `(1:1:0:0)` with tangent
/// `X_2 = 0`.
pub fn quartic_fixture(field: &CycloField) -> Hypersurface {
    let v = |i: usize| MultiPoly::variable(field, 4, i);
    let t1 = v(1)
        .mul(&v(2))
        .mul(&v(2).sub(&v(1)))
        .mul(&v(2).add(&v(1)));
    let d10 = v(1).sub(&v(0));
    let t2 = v(3)
        .mul(&d10)
        .mul(&v(3).add(&d10))
        .mul(&v(3).sub(&d10));
    Hypersurface::new(t1.add(&t2)).expect("quartic fixture is a valid equation")
}

/// The two star points of the quartic fixture on its line.
pub fn quartic_fixture_stars(field: &CycloField) -> Vec<ProjPoint> {
    vec![
        ProjPoint::from_ints(field, &[1, 0, 0, 0]).expect("valid point"),
        ProjPoint::from_ints(field, &[1, 1, 0, 0]).expect("valid point"),
    ]
}

/// The line `X_2 = X_3 = 0`, contained in the quartic fixture.
pub fn quartic_fixture_line(field: &CycloField) -> ProjLine {
    ProjLine::new(
        ProjPoint::from_ints(field, &[1, 0, 0, 0]).expect("valid point"),
        ProjPoint::from_ints(field, &[0, 1, 0, 0]).expect("valid point"),
    )
    .expect("distinct span points")
}

/// A point of the quartic fixture's line that is not a star point.
pub fn quartic_fixture_nonstar(field: &CycloField) -> ProjPoint {
    ProjPoint::from_ints(field, &[0, 1, 0, 0]).expect("valid point")
}

/// The Segre quadric `X_0 X_3 - X_1 X_2` in `P^3`, smooth everywhere.
pub fn segre_quadric(field: &CycloField) -> Hypersurface {
    let v = |i: usize| MultiPoly::variable(field, 4, i);
    Hypersurface::new(v(0).mul(&v(3)).sub(&v(1).mul(&v(2)))).expect("valid equation")
}

/// Seeded points of the Segre quadric via its `(s:t) x (u:v)`
/// parametrization `(su : sv : tu : tv)`.
pub fn segre_points(field: &CycloField, seed: u64, count: usize) -> Vec<ProjPoint> {
    let mut rng = DetRng::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let s = field.from_int(rng.int_in(-9, 9));
        let t = field.from_int(rng.int_in(-9, 9));
        let u = field.from_int(rng.int_in(-9, 9));
        let v = field.from_int(rng.int_in(-9, 9));
        if (s.is_zero() && t.is_zero()) || (u.is_zero() && v.is_zero()) {
            continue;
        }
        let coords = vec![
            s.mul_ref(&u),
            s.mul_ref(&v),
            t.mul_ref(&u),
            t.mul_ref(&v),
        ];
        let p = ProjPoint::new(coords).expect("parametrized point is nonzero");
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Seeded points on the diagonal hypersurface of degree `d` in `P^n`
/// (`n >= 3`) with at least three nonzero coordinates, built by pairing two
/// `d`-th roots of `-1` so the coordinate powers cancel:
/// `(1 : xi_1 : a : xi_2 a : 0 : ... : 0)` with `a` a nonzero rational.
/// None of these is a star point of the diagonal hypersurface, whose star
/// points all have exactly two nonzero coordinates.
pub fn fermat_offstar_points(
    field: &CycloField,
    d: u32,
    n: usize,
    seed: u64,
    count: usize,
) -> Result<Vec<ProjPoint>> {
    if n < 3 {
        return Err(Error::ShapeViolation(String::from(
            "pair-cancellation points need ambient dimension at least three",
        )));
    }
    let zeta = primitive_2d_root(field, d)?;
    let mut rng = DetRng::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let r1 = 2 * rng.int_in(0, d as i64 - 1) + 1;
        let r2 = 2 * rng.int_in(0, d as i64 - 1) + 1;
        let a = field.from_rational(rng.rational(6));
        if a.is_zero() {
            continue;
        }
        let xi1 = zeta.pow(r1).expect("root of unity power");
        let xi2 = zeta.pow(r2).expect("root of unity power");
        let mut coords = vec![field.zero(); n + 1];
        coords[0] = field.one();
        coords[1] = xi1;
        coords[2] = a.clone();
        coords[3] = xi2.mul_ref(&a);
        let p = ProjPoint::new(coords).expect("first coordinate is one");
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Seeded points with three nonzero coordinates on the cubic plane curve
/// `X_0^3 + X_1^3 + X_2^3` over a field containing `zeta_24`.  The base
/// point is `(18 + 17 r : 18 - 17 r : -42)` with `r = sqrt(2) =
/// zeta_8 + zeta_8^(-1)`, since `(18 + 17 r)^3 + (18 - 17 r)^3 = 74088 =
/// 42^3`; twisting coordinates by cube roots of unity and permuting them
/// yields 54 distinct on-curve points, none a star point.
pub fn cubic_plane_offstar_points(
    field: &CycloField,
    seed: u64,
    count: usize,
) -> Result<Vec<ProjPoint>> {
    if field.conductor() % 24 != 0 {
        return Err(Error::FieldMismatch {
            left: field.conductor(),
            right: 24,
        });
    }
    let step = (field.conductor() / 24) as i64;
    let sqrt2 = field
        .zeta_pow(3 * step)
        .add_ref(&field.zeta_pow(21 * step));
    let omega = field.zeta_pow(8 * step);
    let x0 = field.from_int(18).add_ref(&field.from_int(17).mul_ref(&sqrt2));
    let x1 = field.from_int(18).sub_ref(&field.from_int(17).mul_ref(&sqrt2));
    let x2 = field.from_int(-42);
    let mut all = Vec::new();
    for j in 0..3i64 {
        for k in 0..3i64 {
            let base = [
                x0.clone(),
                x1.mul_ref(&omega.pow(j).expect("root power")),
                x2.mul_ref(&omega.pow(k).expect("root power")),
            ];
            let perms: [[usize; 3]; 6] = [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ];
            for perm in perms {
                let coords: Vec<CycloNum> =
                    perm.iter().map(|&i| base[i].clone()).collect();
                let p = ProjPoint::new(coords).expect("coordinates are nonzero");
                if !all.contains(&p) {
                    all.push(p);
                }
            }
        }
    }
    if count > all.len() {
        return Err(Error::ShapeViolation(String::from(
            "more sample points requested than the construction yields",
        )));
    }
    // Seeded selection: shuffle deterministically, then take a prefix.
    let mut rng = DetRng::new(seed);
    let len = all.len();
    for i in (1..len).rev() {
        let j = rng.int_in(0, i as i64) as usize;
        all.swap(i, j);
    }
    all.truncate(count);
    Ok(all)
}

/// Seeded distinct lines in `P^(nvars-1)` through pairs of small-integer
/// points.
pub fn random_lines(field: &CycloField, nvars: usize, seed: u64, count: usize) -> Vec<ProjLine> {
    let mut rng = DetRng::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let a: Vec<CycloNum> = (0..nvars).map(|_| field.from_int(rng.int_in(-5, 5))).collect();
        let b: Vec<CycloNum> = (0..nvars).map(|_| field.from_int(rng.int_in(-5, 5))).collect();
        if a.iter().all(CycloNum::is_zero) || b.iter().all(CycloNum::is_zero) {
            continue;
        }
        let pa = ProjPoint::new(a).expect("nonzero coordinates");
        let pb = ProjPoint::new(b).expect("nonzero coordinates");
        if pa == pb {
            continue;
        }
        out.push(ProjLine::new(pa, pb).expect("distinct points"));
    }
    out
}

/// Seeded random degree-`d` hypersurfaces in `P^n` passing through
/// `(1:0:...:0)` and smooth there (some coefficient of `X_0^(d-1) X_i`
/// survives), paired with that point.
pub fn random_smooth_at_point(
    field: &CycloField,
    d: u32,
    n: usize,
    seed: u64,
    count: usize,
) -> Vec<(Hypersurface, ProjPoint)> {
    let mut rng = DetRng::new(seed);
    let p = ProjPoint::from_ints(field, &[&[1i64][..], &vec![0i64; n][..]].concat())
        .expect("valid point");
    let monos = crate::algebra::multipoly::monomials_of_degree(n + 1, d);
    let mut out = Vec::new();
    while out.len() < count {
        let mut f = MultiPoly::zero(field, n + 1);
        for mono in &monos {
            if mono.exp(0) == d {
                continue; // force the marked point onto the hypersurface
            }
            f.add_term(mono.clone(), field.from_int(rng.int_in(-5, 5)));
        }
        // Smoothness at the marked point: the gradient there is read off
        // the coefficients of X_0^(d-1) X_i.
        let smooth_at_p = (1..=n).any(|i| {
            let mut exps = vec![0u32; n + 1];
            exps[0] = d - 1;
            exps[i] = 1;
            !f.coefficient(&Mono::new(exps)).is_zero()
        });
        if !smooth_at_p || f.is_zero() {
            continue;
        }
        let x = Hypersurface::new(f).expect("nonzero homogeneous form");
        out.push((x, p.clone()));
    }
    out
}
