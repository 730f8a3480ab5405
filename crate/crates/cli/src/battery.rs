//! The self-test battery: every check the `selftest` subcommand runs.
//!
//! Each check is an independent function returning a [`CheckItem`] with a
//! deterministic detail string, so identical seeds produce byte-identical
//! reports.

use stargeo::algebra::{binomial, euler_phi, CycloField, Mono, MultiPoly, Scalar};
use stargeo::classify::{
    build_case1, build_collinear, build_extremal, build_fermat, case1_frame,
    classify_three, component_table, configuration_at, extremal_dimensions,
    normal_form_two, seeded_case1_params, tridiag_determinant_poly, tridiag_solve,
    ComponentKind, ExtremalCase, TwoPointShape,
};
use stargeo::configspace::{
    dim_report, expected_codim, parameter_space_dim, restriction_dim,
};
use stargeo::geometry::{multiplicity_at, Hyperplane, Hypersurface, ProjLine, ProjPoint};
use stargeo::rng::DetRng;
use stargeo::samples;
use stargeo::starpoint::{forced_dth_star, is_star_point, star_points_on_line, star_via_polar};

/// Outcome of one battery check.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Runs the full battery in a fixed order.
pub fn run_battery(seed: u64) -> Vec<CheckItem> {
    vec![
        fermat_census(seed),
        polar_agreement(seed),
        dimension_formulas(seed),
        tridiagonal_kernel(),
        collinear_family(),
        component_table_check(),
        case1_gate(seed),
        extremal_dimensions_check(seed),
        codimension_bound(),
        poly_roundtrip(seed),
        two_point_normal_form(),
    ]
}

fn run(name: &'static str, body: impl FnOnce() -> Result<String, String>) -> CheckItem {
    match body() {
        Ok(detail) => CheckItem {
            name,
            pass: true,
            detail,
        },
        Err(detail) => CheckItem {
            name,
            pass: false,
            detail,
        },
    }
}

fn ce(e: stargeo::Error) -> String {
    e.to_string()
}

fn pt(field: &CycloField, ints: &[i64]) -> ProjPoint {
    ProjPoint::from_ints(field, ints).expect("integer point")
}

fn plane(field: &CycloField, ints: &[i64]) -> Hyperplane {
    let coeffs: Vec<_> = ints.iter().map(|&v| field.from_int(v)).collect();
    Hyperplane::from_coeffs(&coeffs).expect("nonzero coefficients")
}

// ---------------------------------------------------------------------------
// Census of diagonal star points
// ---------------------------------------------------------------------------

pub fn fermat_census(seed: u64) -> CheckItem {
    run("fermat-census", || {
        let mut counted = Vec::new();
        let mut probes = 0usize;
        for (d, n) in [(3u32, 2usize), (3, 3), (4, 3), (3, 4), (5, 3)] {
            let (x, points) = build_fermat(d, n).map_err(ce)?;
            let want = d as u64 * binomial(n as i64 + 1, 2);
            if points.len() as u64 != want {
                return Err(format!(
                    "degree {d} in P^{n}: found {} star points, expected {want}",
                    points.len()
                ));
            }
            for p in &points {
                let v = is_star_point(&x, p).map_err(ce)?;
                if !v.is_star {
                    return Err(format!(
                        "degree {d} in P^{n}: an enumerated point fails the star test"
                    ));
                }
            }
            let offstar: Vec<ProjPoint> = if n >= 3 {
                samples::fermat_offstar_points(x.field(), d, n, seed, 30).map_err(ce)?
            } else {
                let wide = CycloField::new(24).map_err(ce)?;
                let x24 = samples::fermat(&wide, d, n);
                let pts = samples::cubic_plane_offstar_points(&wide, seed, 30).map_err(ce)?;
                for p in &pts {
                    check_offstar(&x24, p)?;
                }
                probes += pts.len();
                counted.push(points.len());
                continue;
            };
            for p in &offstar {
                check_offstar(&x, p)?;
            }
            probes += offstar.len();
            counted.push(points.len());
        }
        Ok(format!(
            "star counts {:?}; {} seeded on-surface probes with >= 3 nonzero coordinates all fail",
            counted, probes
        ))
    })
}

fn check_offstar(x: &Hypersurface, p: &ProjPoint) -> Result<(), String> {
    if !x.contains(p).map_err(ce)? {
        return Err(String::from("an off-star probe is not on the hypersurface"));
    }
    let nonzero = p.coords().iter().filter(|c| !c.is_zero()).count();
    if nonzero < 3 {
        return Err(String::from("an off-star probe has too many zero coordinates"));
    }
    let v = is_star_point(x, p).map_err(ce)?;
    if v.is_star {
        return Err(String::from("an off-star probe passes the star test"));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Agreement of the direct and the polar star test
// ---------------------------------------------------------------------------

pub fn polar_agreement(seed: u64) -> CheckItem {
    run("polar-agreement", || {
        let mut pairs = 0usize;
        let mut check = |x: &Hypersurface, p: &ProjPoint| -> Result<bool, String> {
            let Ok(direct) = is_star_point(x, p) else {
                return Ok(false);
            };
            let via = star_via_polar(x, p).map_err(ce)?;
            if direct.is_star != via {
                return Err(format!(
                    "the star tests disagree at {} on {}",
                    crate::text::point_to_text(p),
                    x.equation().to_text()
                ));
            }
            pairs += 1;
            Ok(true)
        };

        for (d, n) in [(3u32, 3usize), (4, 3), (3, 4)] {
            let (x, points) = build_fermat(d, n).map_err(ce)?;
            for p in &points {
                check(&x, p)?;
            }
            if n >= 3 {
                for p in samples::fermat_offstar_points(x.field(), d, n, seed, 30).map_err(ce)? {
                    check(&x, &p)?;
                }
            }
        }

        let field = CycloField::new(1).map_err(ce)?;
        let quadric = samples::segre_quadric(&field);
        for p in samples::segre_points(&field, seed, 40) {
            check(&quadric, &p)?;
        }

        let quartic = samples::quartic_fixture(&field);
        for p in samples::quartic_fixture_stars(&field) {
            check(&quartic, &p)?;
        }
        check(&quartic, &samples::quartic_fixture_nonstar(&field))?;
        for lambda in [-3i64, -2, -1, 2, 3] {
            check(&quartic, &pt(&field, &[1, lambda, 0, 0]))?;
        }

        let mut rng = DetRng::new(seed.wrapping_add(0x504f_4c41_52)); // stream tag
        let mut made = 0usize;
        let mut tries = 0usize;
        while made < 40 {
            tries += 1;
            if tries > 2000 {
                return Err(String::from("random smooth samples kept degenerating"));
            }
            let coords: Vec<i64> = (0..4).map(|_| rng.int_in(-3, 3)).collect();
            if coords.iter().all(|&c| c == 0) {
                continue;
            }
            let p = pt(&field, &coords);
            let mut f = MultiPoly::zero(&field, 4);
            for m in stargeo::algebra::multipoly::monomials_of_degree(4, 3) {
                let c = rng.int_in(-3, 3);
                if c != 0 {
                    f.add_term(m, field.from_int(c));
                }
            }
            if f.is_zero() {
                continue;
            }
            let value = f.eval(p.coords()).map_err(ce)?;
            let k = p
                .coords()
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero point");
            let pk = p.coords()[k].clone();
            let cube = pk.mul_ref(&pk).mul_ref(&pk);
            let shift = value.checked_div(&cube).map_err(ce)?;
            let mut exps = vec![0u32; 4];
            exps[k] = 3;
            let mut adjusted = f.clone();
            adjusted.add_term(Mono::new(exps), shift.neg_ref());
            if adjusted.is_zero() {
                continue;
            }
            let Ok(x) = Hypersurface::new(adjusted) else {
                continue;
            };
            if check(&x, &p)? {
                made += 1;
            }
        }

        if pairs < 200 {
            return Err(format!("only {pairs} smooth pairs were compared"));
        }
        Ok(format!("{pairs} smooth pairs agree on both star tests"))
    })
}

// ---------------------------------------------------------------------------
// Linear-system dimension formulas
// ---------------------------------------------------------------------------

fn fermat_config_points(d: u32, n: usize) -> Result<(Hypersurface, Vec<ProjPoint>), String> {
    let (x, _) = build_fermat(d, n).map_err(ce)?;
    let field = samples::fermat_field(d);
    let xi = samples::primitive_2d_root(&field, d).map_err(ce)?;
    let coord = |spots: &[(usize, bool)]| -> Result<ProjPoint, String> {
        let mut c = vec![field.zero(); n + 1];
        for &(i, root) in spots {
            c[i] = if root { xi.clone() } else { field.one() };
        }
        ProjPoint::new(c).map_err(ce)
    };
    let points = vec![
        coord(&[(0, false), (1, true)])?,
        coord(&[(0, false), (2, true)])?,
        coord(&[(1, false), (2, true)])?,
    ];
    Ok((x, points))
}

fn case1_config_points(
    d: u32,
    n: usize,
    seed: u64,
) -> Result<(Hypersurface, Vec<ProjPoint>), String> {
    let field = CycloField::new(d).map_err(ce)?;
    let t = field.zeta();
    let mut last = String::from("no attempt made");
    for attempt in 0..8u64 {
        let (a, g012) = seeded_case1_params(&field, d, n, d, seed.wrapping_add(attempt));
        let x = match build_case1(d, n, &t, &a, &g012) {
            Ok(x) => x,
            Err(e) => {
                last = ce(e);
                continue;
            }
        };
        let (points, _planes) = match case1_frame(&t, n) {
            Ok(fr) => fr,
            Err(e) => {
                last = ce(e);
                continue;
            }
        };
        match configuration_at(&x, &points) {
            Ok(_) => return Ok((x, points)),
            Err(e) => {
                last = ce(e);
                continue;
            }
        }
    }
    Err(format!(
        "no generic one-parameter member found for degree {d} in P^{n}: {last}"
    ))
}

fn check_system_dims(
    tag: &str,
    d: u32,
    n: usize,
    x: &Hypersurface,
    points: &[ProjPoint],
    seed: u64,
    verified: &mut usize,
) -> Result<(), String> {
    for e in 1..=3usize {
        let config = configuration_at(x, &points[..e]).map_err(ce)?;
        let report = dim_report(&config);
        if !report.matches {
            return Err(format!(
                "{tag} (d={d}, N={n}, e={e}): system dimension {} differs from {}",
                report.projective_dim, report.expected
            ));
        }
        let mut rng = DetRng::new(seed ^ ((d as u64) << 24) ^ ((n as u64) << 16) ^ e as u64);
        let mut used = 0usize;
        let mut tries = 0usize;
        while used < 5 {
            tries += 1;
            if tries > 200 {
                return Err(format!(
                    "{tag} (d={d}, N={n}, e={e}): no generic hyperplane found"
                ));
            }
            let coeffs: Vec<i64> = (0..=n).map(|_| rng.int_in(-6, 6)).collect();
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            let h = plane(config.field(), &coeffs);
            let off_vertices = config
                .triples()
                .iter()
                .map(|t| h.contains(t.vertex()).map(|on| !on))
                .collect::<Result<Vec<bool>, _>>()
                .map_err(ce)?;
            if off_vertices.iter().any(|ok| !ok) {
                continue;
            }
            let restr = restriction_dim(&config, &h).map_err(ce)?;
            if !restr.matches {
                return Err(format!(
                    "{tag} (d={d}, N={n}, e={e}): restriction dimension {} differs from {}",
                    restr.dim, restr.expected
                ));
            }
            if !restr.contains_product_system {
                return Err(format!(
                    "{tag} (d={d}, N={n}, e={e}): restriction misses the product system"
                ));
            }
            used += 1;
            *verified += 1;
        }
        *verified += 1;
    }
    Ok(())
}

pub fn dimension_formulas(seed: u64) -> CheckItem {
    run("dimension-formulas", || {
        let mut verified = 0usize;
        for (d, n) in [(3u32, 3usize), (4, 3), (3, 4)] {
            let (x, points) = fermat_config_points(d, n)?;
            check_system_dims("diagonal family", d, n, &x, &points, seed, &mut verified)?;
            let (x2, points2) = case1_config_points(d, n, seed)?;
            check_system_dims(
                "one-parameter family",
                d,
                n,
                &x2,
                &points2,
                seed,
                &mut verified,
            )?;
        }
        Ok(format!(
            "{verified} dimension and restriction checks match the closed formulas"
        ))
    })
}

// ---------------------------------------------------------------------------
// Tridiagonal kernel
// ---------------------------------------------------------------------------

pub fn tridiagonal_kernel() -> CheckItem {
    run("tridiagonal-kernel", || {
        for j in 2..=8usize {
            let (det, expected) = tridiag_determinant_poly(j).map_err(ce)?;
            if det != expected {
                return Err(format!("symbolic determinant differs at size {}", j - 1));
            }
        }
        let mut solved = 0usize;
        for order in 2..=6u32 {
            let field = CycloField::new(order).map_err(ce)?;
            let t = field.zeta();
            for j in 2..=8usize {
                let report = tridiag_solve(j, &t).map_err(ce)?;
                let unity = t.pow(j as i64).map_err(ce)? == field.one();
                if report.solution.is_some() != unity {
                    return Err(format!(
                        "kernel behavior at parameter order {order}, size {}",
                        j - 1
                    ));
                }
                if report.determinant.is_zero() != unity {
                    return Err(format!(
                        "determinant vanishing at parameter order {order}, size {}",
                        j - 1
                    ));
                }
                if report.solution.is_some() {
                    solved += 1;
                }
            }
        }
        Ok(format!(
            "7 symbolic determinants match; kernel appears in exactly {solved} of 35 parameter cases"
        ))
    })
}

// ---------------------------------------------------------------------------
// Collinear star points
// ---------------------------------------------------------------------------

pub(crate) fn collinear_frame(
    field: &CycloField,
    d: u32,
) -> (ProjLine, Vec<ProjPoint>, Vec<Hyperplane>, MultiPoly) {
    let line = ProjLine::new(pt(field, &[1, 0, 0, 0]), pt(field, &[0, 1, 0, 0]))
        .expect("distinct span points");
    let mut points = vec![pt(field, &[1, 0, 0, 0]), pt(field, &[0, 1, 0, 0])];
    let mut planes = vec![plane(field, &[0, 1, 0, 0]), plane(field, &[1, 0, 0, 0])];
    let lambdas = [1i64, -1, 2, -2, 3, -3];
    for &l in lambdas.iter().take(d as usize - 2) {
        points.push(pt(field, &[1, l, 0, 0]));
        planes.push(plane(field, &[l, -1, 1, 0]));
    }
    let v = |i: usize| MultiPoly::variable(field, 4, i);
    let c1 = v(2).pow(d).add(&v(3).pow(d));
    (line, points, planes, c1)
}

pub fn collinear_family() -> CheckItem {
    run("collinear-family", || {
        let field = CycloField::new(1).map_err(ce)?;
        let mut built = Vec::new();
        for d in [3u32, 4] {
            let (line, points, planes, c1) = collinear_frame(&field, d);
            let x = build_collinear(d, 3, &line, &points, &planes, &c1).map_err(ce)?;
            for (p, h) in points.iter().zip(planes.iter()) {
                let v = is_star_point(&x, p).map_err(ce)?;
                if !v.is_star || v.tangent != *h {
                    return Err(format!(
                        "degree {d}: a marked point is not a star with its prescribed tangent"
                    ));
                }
            }
            let (last, verdict) =
                forced_dth_star(&x, &line, &points[..d as usize - 1]).map_err(ce)?;
            if last != points[d as usize - 1] || !verdict.is_star {
                return Err(format!(
                    "degree {d}: the forced remaining point differs from the marked one"
                ));
            }
            let census = star_points_on_line(&x, &line);
            if census.line_in_x {
                return Err(format!("degree {d}: the line fell into the member"));
            }
            let stars = census
                .intersections
                .iter()
                .filter(|i| i.verdict.as_ref().map(|v| v.is_star).unwrap_or(false))
                .count();
            if stars != d as usize {
                return Err(format!(
                    "degree {d}: {stars} stars on the line instead of {d}"
                ));
            }
            built.push(d);
        }

        let quartic = samples::quartic_fixture(&field);
        let stars = samples::quartic_fixture_stars(&field);
        for p in &stars {
            if !is_star_point(&quartic, p).map_err(ce)?.is_star {
                return Err(String::from("a fixture star point fails the star test"));
            }
        }
        let mut extra = 0usize;
        for lambda in -6i64..=6 {
            if lambda == 0 || lambda == 1 {
                continue;
            }
            if let Ok(v) = is_star_point(&quartic, &pt(&field, &[1, lambda, 0, 0])) {
                if v.is_star {
                    extra += 1;
                }
            }
        }
        if let Ok(v) = is_star_point(&quartic, &samples::quartic_fixture_nonstar(&field)) {
            if v.is_star {
                extra += 1;
            }
        }
        if extra != 0 {
            return Err(format!(
                "the fixture line carries {extra} unexpected extra star points"
            ));
        }
        Ok(format!(
            "degrees {:?} certified with forced remaining points; the quartic fixture line keeps exactly 2 stars",
            built
        ))
    })
}

// ---------------------------------------------------------------------------
// Component table and transition laws
// ---------------------------------------------------------------------------

pub fn component_table_check() -> CheckItem {
    run("component-table", || {
        let table = component_table(3, 3).map_err(ce)?;
        let mut dims: Vec<i64> = table.iter().map(|l| l.dimension).collect();
        dims.sort_unstable();
        if dims != vec![15, 15, 15, 16] {
            return Err(format!("cubic surface table has dimensions {dims:?}"));
        }
        for n in [3usize, 4] {
            for d in 3u32..=8 {
                let table = component_table(d, n).map_err(ce)?;
                if table.len() as u64 != 2 * d as u64 - 2 {
                    return Err(format!(
                        "degree {d} in P^{n}: {} components instead of {}",
                        table.len(),
                        2 * d - 2
                    ));
                }
                let expected_count = table.iter().filter(|l| l.is_expected).count() as u64;
                let want = if n == 3 {
                    euler_phi(d as u64) + euler_phi(d as u64 - 1)
                } else {
                    euler_phi(d as u64)
                };
                if expected_count != want {
                    return Err(format!(
                        "degree {d} in P^{n}: {expected_count} expected-dimension components instead of {want}"
                    ));
                }
            }
        }

        // Transition laws on the diagonal cubic surface.
        let (x, _) = build_fermat(3, 3).map_err(ce)?;
        let field = samples::fermat_field(3);
        let zeta = samples::primitive_2d_root(&field, 3).map_err(ce)?;
        let xi = |r: u32| zeta.pow((2 * r + 1) as i64).expect("odd power");
        let mut law_checks = 0usize;
        for r1 in 0..3u32 {
            for r2 in 0..3u32 {
                if r1 == r2 {
                    continue;
                }
                for r3 in 0..3u32 {
                    let p1 = ProjPoint::new(vec![
                        field.one(),
                        xi(r1),
                        field.zero(),
                        field.zero(),
                    ])
                    .map_err(ce)?;
                    let p2 = ProjPoint::new(vec![
                        field.one(),
                        xi(r2),
                        field.zero(),
                        field.zero(),
                    ])
                    .map_err(ce)?;
                    let p3 = ProjPoint::new(vec![
                        field.one(),
                        field.zero(),
                        xi(r3),
                        field.zero(),
                    ])
                    .map_err(ce)?;
                    let config = configuration_at(&x, &[p1, p2, p3]).map_err(ce)?;
                    let label = classify_three(&config).map_err(ce)?;
                    let want = xi(r1).checked_div(&xi(r2)).map_err(ce)?;
                    match &label.kind {
                        ComponentKind::Vt { t, .. } if *t == want => law_checks += 1,
                        _ => {
                            return Err(String::from(
                                "a shared-plane triple lands off its transition value",
                            ))
                        }
                    }
                }
            }
        }
        for r1 in 0..3u32 {
            for r2 in 0..3u32 {
                for r3 in 0..3u32 {
                    let p1 = ProjPoint::new(vec![
                        field.one(),
                        xi(r1),
                        field.zero(),
                        field.zero(),
                    ])
                    .map_err(ce)?;
                    let p2 = ProjPoint::new(vec![
                        field.one(),
                        field.zero(),
                        xi(r2),
                        field.zero(),
                    ])
                    .map_err(ce)?;
                    let p3 = ProjPoint::new(vec![
                        field.zero(),
                        field.one(),
                        xi(r3),
                        field.zero(),
                    ])
                    .map_err(ce)?;
                    let config = configuration_at(&x, &[p1, p2, p3]).map_err(ce)?;
                    let label = classify_three(&config).map_err(ce)?;
                    let ratio = xi(r2)
                        .checked_div(&xi(r1).checked_mul(&xi(r3)).map_err(ce)?)
                        .map_err(ce)?;
                    let want = ratio.mul_ref(&ratio);
                    let ok = if want == field.one() {
                        label.kind == ComponentKind::V1
                    } else {
                        matches!(&label.kind, ComponentKind::Vt { t, .. } if *t == want)
                    };
                    if !ok {
                        return Err(String::from(
                            "a general-position triple lands off its transition value",
                        ));
                    }
                    law_checks += 1;
                }
            }
        }
        Ok(format!(
            "tables for degrees 3..8 in P^3 and P^4 verified; {law_checks} transition-law classifications match"
        ))
    })
}

// ---------------------------------------------------------------------------
// One-parameter family gate
// ---------------------------------------------------------------------------

pub fn case1_gate(seed: u64) -> CheckItem {
    run("case1-gate", || {
        let d = 4u32;
        let field = CycloField::new(12).map_err(ce)?;
        let mut accepted = 0usize;
        let mut rejected = 0usize;
        for k in 1..12i64 {
            let t = field.zeta_pow(k);
            let order = t
                .multiplicative_order(12)
                .ok_or_else(|| String::from("a twelfth root of unity has no order"))?;
            let admissible = d % order == 0 || (d - 1) % order == 0;
            let theta = if admissible { order } else { 2 };
            let (a, g012) = seeded_case1_params(&field, d, 3, theta, seed);
            match build_case1(d, 3, &t, &a, &g012) {
                Ok(_) if admissible => accepted += 1,
                Err(stargeo::Error::NotRootOfUnity) if !admissible => rejected += 1,
                Ok(_) => return Err(format!("parameter of order {order} was accepted")),
                Err(e) => return Err(format!("parameter of order {order}: {e}")),
            }
        }
        // The identity and an order-5 parameter are turned away.
        let f5 = CycloField::new(5).map_err(ce)?;
        for t in [field.one(), f5.zeta()] {
            let fld = t.field().clone();
            let (a, g012) = seeded_case1_params(&fld, d, 3, 2, seed);
            match build_case1(d, 3, &t, &a, &g012) {
                Err(stargeo::Error::NotRootOfUnity) => rejected += 1,
                Ok(_) => return Err(String::from("an inadmissible parameter was accepted")),
                Err(e) => return Err(format!("an inadmissible parameter failed oddly: {e}")),
            }
        }

        // Degenerate member: zero strips for the cubic at t = -1.
        let q = CycloField::new(1).map_err(ce)?;
        let t = q.from_int(-1);
        let a = vec![MultiPoly::zero(&q, 4); 2];
        let g012 = MultiPoly::constant(&q, 4, q.one());
        let x = build_case1(3, 3, &t, &a, &g012).map_err(ce)?;
        for (m, _) in x.equation().terms() {
            if !((m.exp(0) >= 1 && m.exp(1) >= 1) || m.exp(3) >= 2) {
                return Err(String::from(
                    "a degenerate-member monomial escapes the ideal (X0*X1, X3^2)",
                ));
            }
        }
        let vertex = pt(&q, &[0, 0, 1, 0]);
        let mult = multiplicity_at(x.equation(), &vertex).map_err(ce)?;
        if mult < 2 {
            return Err(format!(
                "the degenerate member has multiplicity {mult} at its forced vertex"
            ));
        }
        Ok(format!(
            "{accepted} admissible parameters accepted, {rejected} others rejected; the strip-free member stays in (X0*X1, X3^2) with multiplicity {mult}"
        ))
    })
}

// ---------------------------------------------------------------------------
// Extremal dimensions
// ---------------------------------------------------------------------------

pub fn extremal_dimensions_check(seed: u64) -> CheckItem {
    run("extremal-dimensions", || {
        let (d1, d2) = extremal_dimensions(5, 5);
        if d1 != 116 || d2 != 116 {
            return Err(format!("quintic fourfold dimensions ({d1}, {d2}) instead of (116, 116)"));
        }
        for d in 3u32..=8 {
            for n in 5usize..=7 {
                let (di, dii) = extremal_dimensions(d, n);
                let want =
                    4 - n as i64 + binomial(n as i64 + d as i64 - 6, n as i64 - 1) as i64;
                if dii - di != want {
                    return Err(format!(
                        "degree {d} in P^{n}: offset {} instead of {want}",
                        dii - di
                    ));
                }
            }
        }
        for case in [ExtremalCase::Indep, ExtremalCase::Dep] {
            let report = build_extremal(3, 5, case, seed).map_err(ce)?;
            for (p, h) in report.points.iter().zip(report.planes.iter()) {
                let v = is_star_point(&report.hypersurface, p).map_err(ce)?;
                if !v.is_star || v.tangent != *h {
                    return Err(String::from(
                        "an extremal member point is not a star with its prescribed tangent",
                    ));
                }
            }
            let config =
                configuration_at(&report.hypersurface, &report.points).map_err(ce)?;
            let label = classify_three(&config).map_err(ce)?;
            let want = match case {
                ExtremalCase::Indep => ComponentKind::ExtremalIndep,
                ExtremalCase::Dep => ComponentKind::ExtremalDep,
            };
            if label.kind != want {
                return Err(format!(
                    "an extremal member classifies as {} instead of {}",
                    label.kind.name(),
                    want.name()
                ));
            }
            if !report.relation_holds {
                return Err(String::from("the dimension offset fails on a built member"));
            }
        }
        Ok(String::from(
            "quintic fourfold loci both have dimension 116; the offset formula holds for degrees 3..8 in P^5..P^7; cubic members certified",
        ))
    })
}

// ---------------------------------------------------------------------------
// Codimension bound
// ---------------------------------------------------------------------------

pub fn codimension_bound() -> CheckItem {
    run("codimension-bound", || {
        let mut checked = 0usize;
        for n in [3usize, 4] {
            for d in 3u32..=8 {
                let param = parameter_space_dim(n, d, 3) as i64;
                let f = expected_codim(n, d, 3) as i64;
                for label in component_table(d, n).map_err(ce)? {
                    let codim = param - label.dimension;
                    if codim > f {
                        return Err(format!(
                            "degree {d} in P^{n}: component {} has codimension {codim} above the bound {f}",
                            label.kind.name()
                        ));
                    }
                    if (codim == f) != label.is_expected {
                        return Err(format!(
                            "degree {d} in P^{n}: expected-dimension flag of {} disagrees with the bound",
                            label.kind.name()
                        ));
                    }
                    if label.expected_dimension != param - f {
                        return Err(format!(
                            "degree {d} in P^{n}: expected dimension bookkeeping is off for {}",
                            label.kind.name()
                        ));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!(
            "{checked} tabulated components stay within the section-construction codimension bound, with equality exactly on the expected-dimension ones"
        ))
    })
}

// ---------------------------------------------------------------------------
// Print/parse round trip
// ---------------------------------------------------------------------------

pub fn poly_roundtrip(seed: u64) -> CheckItem {
    run("poly-roundtrip", || {
        let mut total = 0usize;
        for conductor in [1u32, 4, 6, 8, 12] {
            let field = CycloField::new(conductor).map_err(ce)?;
            let mut rng = DetRng::new(seed ^ (conductor as u64) << 32);
            for _ in 0..100 {
                let nvars = rng.int_in(2, 5) as usize;
                let terms = rng.int_in(1, 6);
                let mut p = MultiPoly::zero(&field, nvars);
                for _ in 0..terms {
                    let mut exps = vec![0u32; nvars];
                    let degree = rng.int_in(0, 4);
                    for _ in 0..degree {
                        let i = rng.int_in(0, nvars as i64 - 1) as usize;
                        exps[i] += 1;
                    }
                    p.add_term(Mono::new(exps), rng.cyclo(&field, 5));
                }
                let text = p.to_text();
                let back = crate::text::parse_poly(&field, nvars, &text)
                    .map_err(|e| format!("conductor {conductor}: {e} in '{text}'"))?;
                if back != p {
                    return Err(format!(
                        "conductor {conductor}: '{text}' reparses differently"
                    ));
                }
                total += 1;
            }
        }
        Ok(format!("{total} random polynomials round-trip byte-exactly"))
    })
}

// ---------------------------------------------------------------------------
// Two-point normal forms
// ---------------------------------------------------------------------------

pub fn two_point_normal_form() -> CheckItem {
    run("two-point-normal-form", || {
        let mut cases = 0usize;
        let mut general = 0usize;
        let mut joined = 0usize;
        // Returns whether the pair is mutually incident.
        let feed = |x: &Hypersurface, a: &ProjPoint, b: &ProjPoint| -> Result<bool, String> {
            let config = configuration_at(x, &[a.clone(), b.clone()]).map_err(ce)?;
            let mutual = config.incidence(0, 1) && config.incidence(1, 0);
            let nf = normal_form_two(&config).map_err(|e| {
                format!(
                    "normal form failed on a suited pair ({} / {}): {e}",
                    crate::text::point_to_text(a),
                    crate::text::point_to_text(b)
                )
            })?;
            match (&nf.shape, mutual) {
                (TwoPointShape::General { .. }, false) | (TwoPointShape::LineInX { .. }, true) => {}
                _ => {
                    return Err(String::from(
                        "a normal-form shape disagrees with the incidence pattern",
                    ))
                }
            }
            if nf.projective_dim < 0 {
                return Err(String::from("a normal form carries an empty system"));
            }
            Ok(mutual)
        };
        let mut tally = |mutual: bool| {
            if mutual {
                joined += 1;
            } else {
                general += 1;
            }
        };

        let (x3, pts3) = build_fermat(3, 3).map_err(ce)?;
        for i in 0..pts3.len() {
            for j in (i + 1)..pts3.len() {
                tally(feed(&x3, &pts3[i], &pts3[j])?);
                cases += 1;
            }
        }
        let (x4, pts4) = build_fermat(4, 3).map_err(ce)?;
        'outer: for i in 0..pts4.len() {
            for j in (i + 1)..pts4.len() {
                if cases >= 200 {
                    break 'outer;
                }
                tally(feed(&x4, &pts4[i], &pts4[j])?);
                cases += 1;
            }
        }
        if cases != 200 {
            return Err(format!("{cases} pairs processed instead of 200"));
        }
        Ok(format!(
            "200 suited pairs normalized ({general} disjoint, {joined} mutually incident), none rejected"
        ))
    })
}
