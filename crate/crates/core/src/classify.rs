//! Families of hypersurfaces carrying prescribed star points.
//!
//! Fixing the number of star points (two or three), the mutual position of
//! the points and their tangent planes splits the locus of such
//! hypersurfaces into irreducible families with known dimensions.  This
//! module builds canonical members of each family (Fermat, collinear,
//! one-parameter, intermediate, extremal), classifies a given configuration
//! into its family, and tabulates the catalogue of families with their
//! dimensions next to the expected dimension from a naive parameter count.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use crate::algebra::euler_phi;
use crate::algebra::multipoly::monomials_of_degree;
use crate::algebra::{binomial, CycloField, CycloNum, ExactMatrix, Mono, MultiPoly, Rational, Scalar, UniPoly};
use crate::configspace::{is_suited_on, triple_at_star, validate_triple, vd_basis, Configuration};
use crate::error::Error;
use crate::Result;
use crate::geometry::{Hyperplane, Hypersurface, ProjLine, ProjPoint};
use crate::rng::DetRng;
use crate::samples;
use crate::starpoint::is_star_point;

/// Seed for the fallback witness search in [`build_collinear`].
pub const COLLINEAR_SEED: u64 = 0x5354_4152_4c49_4e45;

// ---------------------------------------------------------------------------
// Component labels and dimension formulas
// ---------------------------------------------------------------------------

/// Identity of an irreducible family of hypersurfaces with marked star
/// points.
#[derive(Clone, Debug, PartialEq)]
pub enum ComponentKind {
    /// Three points in general position, indexed by a root of unity `t`
    /// (`t != 1`, `t^d = 1` or `t^(d-1) = 1`) of multiplicative order
    /// `order`.
    Vt { t: CycloNum, order: u32 },
    /// Three collinear points in otherwise general position.
    V1,
    /// Two points with no point on the other point's tangent plane.
    TwoGeneral,
    /// Two points each lying on the other's tangent plane; the joining
    /// line then lies inside every member of the family.
    TwoLineInX,
    /// Three points with exactly one mutually incident pair.
    Intermediate,
    /// Three pairwise mutually incident points whose tangent planes are
    /// linearly independent.
    ExtremalIndep,
    /// Three pairwise mutually incident points whose tangent planes are
    /// linearly dependent.
    ExtremalDep,
    /// A position pattern carried by no suitable hypersurface: the family
    /// is empty.
    NotSuited,
}

impl ComponentKind {
    /// Short stable name for reports.
    pub fn name(&self) -> &'static str {
        match self {
            ComponentKind::Vt { .. } => "Vt",
            ComponentKind::V1 => "V1",
            ComponentKind::TwoGeneral => "TwoGeneral",
            ComponentKind::TwoLineInX => "TwoLineInX",
            ComponentKind::Intermediate => "Intermediate",
            ComponentKind::ExtremalIndep => "ExtremalIndep",
            ComponentKind::ExtremalDep => "ExtremalDep",
            ComponentKind::NotSuited => "NotSuited",
        }
    }
}

/// A family together with its dimension and the expected dimension for
/// configurations of the same size; `is_expected` records equality.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentLabel {
    pub kind: ComponentKind,
    /// Dimension of the family in configuration space; `-1` when the
    /// family is empty.
    pub dimension: i64,
    /// Parameter-count prediction: ambient configuration dimension minus
    /// one full set of vanishing conditions per point.
    pub expected_dimension: i64,
    pub is_expected: bool,
}

fn label(kind: ComponentKind, dimension: i64, expected: i64) -> ComponentLabel {
    ComponentLabel {
        kind,
        dimension,
        expected_dimension: expected,
        is_expected: dimension == expected,
    }
}

fn not_suited_label(d: u32, n: usize, points: usize) -> ComponentLabel {
    let expected = if points == 2 {
        expected_two_point_dim(d, n)
    } else {
        expected_three_point_dim(d, n)
    };
    ComponentLabel {
        kind: ComponentKind::NotSuited,
        dimension: -1,
        expected_dimension: expected,
        is_expected: false,
    }
}

fn bin(a: i64, k: i64) -> i64 {
    binomial(a, k) as i64
}

/// Expected dimension of the three-point configuration locus: every point
/// imposes an independent set of conditions on the pair (hypersurface,
/// point-plane-cone data).
pub fn expected_three_point_dim(d: u32, n: usize) -> i64 {
    let dd = d as i64;
    let nn = n as i64;
    if n == 3 {
        15
    } else {
        6 * nn + bin(nn + dd - 3, nn - 3) - 4
    }
}

/// Expected dimension of the two-point configuration locus.
pub fn expected_two_point_dim(d: u32, n: usize) -> i64 {
    let dd = d as i64;
    let nn = n as i64;
    2 * nn + 2 * (nn - 1) + bin(nn + dd - 2, nn - 2) - 1
}

/// Dimension of the `V_t` family for `t` of multiplicative order `theta`
/// dividing `d` or `d - 1`.
pub fn vt_dimension(d: u32, n: usize, theta: u32) -> i64 {
    let dd = d as i64;
    let nn = n as i64;
    let th = theta as i64;
    if n == 3 {
        if d % theta == 0 {
            14 + dd / th
        } else {
            14 + (dd - 1) / th
        }
    } else {
        let mut sum = 0;
        let mut j = 0;
        while j <= dd {
            sum += bin(nn + dd - 3 - j, nn - 3);
            j += th;
        }
        6 * nn + sum - 5
    }
}

/// Dimension of the collinear family `V_1`.
pub fn v1_dimension(d: u32, n: usize) -> i64 {
    let dd = d as i64;
    let nn = n as i64;
    3 * nn + 2 * (nn - 1) + bin(nn + dd - 2, nn - 2) - 1
}

fn two_line_in_x_dimension(d: u32, n: usize) -> i64 {
    let dd = d as i64;
    let nn = n as i64;
    if n == 3 {
        2 * (dd + 3)
    } else {
        2 * nn + 2 * (nn - 2) + bin(nn + dd - 4, nn - 4) + 2 * bin(nn + dd - 3, nn - 2) - 1
    }
}

/// Dimension of the intermediate family (exactly one mutually incident
/// pair of points).
pub fn intermediate_dimension(d: u32, n: usize) -> i64 {
    let dd = d as i64;
    let nn = n as i64;
    let mut tail = 0;
    for k in 1..dd {
        tail += bin(nn + dd - k - 4, nn - 3);
    }
    3 * nn + (nn - 1) + 2 * (nn - 2) + bin(nn + dd - 3, nn - 3) + tail - 1
}

/// Dimensions `(independent, dependent)` of the two extremal families as
/// loci of hypersurfaces (the configuration dimension plus the projective
/// dimension of the attached linear system).
pub fn extremal_dimensions(d: u32, n: usize) -> (i64, i64) {
    let dd = d as i64;
    let nn = n as i64;
    let dim_indep = 3 * nn
        + 3 * (nn - 3)
        + bin(nn + dd - 3, nn)
        + 3 * bin(nn + dd - 4, nn - 2)
        + 3 * bin(nn + dd - 5, nn - 4)
        + bin(nn + dd - 6, nn - 6)
        - 1;
    let dim_dep = 3 * nn
        + 2 * (nn - 3)
        + bin(nn + dd - 2, nn)
        + 2 * bin(nn + dd - 4, nn - 3)
        + bin(nn + dd - 5, nn - 3)
        + bin(nn + dd - 5, nn - 5);
    (dim_indep, dim_dep)
}

/// Same two families, measured in configuration space (the hypersurface
/// fiber `C(n+d-3, n)` removed from both).
pub fn extremal_config_dimensions(d: u32, n: usize) -> (i64, i64) {
    let (di, dd) = extremal_dimensions(d, n);
    let fiber = bin(n as i64 + d as i64 - 3, n as i64);
    (di - fiber, dd - fiber)
}

/// The two extremal dimensions always satisfy
/// `dep = indep + 4 - n + C(n+d-6, n-1)`.
pub fn extremal_relation_holds(d: u32, n: usize) -> bool {
    let (di, dd) = extremal_dimensions(d, n);
    let nn = n as i64;
    dd == di + 4 - nn + bin(nn + d as i64 - 6, nn - 1)
}

/// Multiplicative order of `t` when it indexes a family at degree `d`:
/// an order above `1` dividing `d` or `d - 1`.
fn vt_order(d: u32, t: &CycloNum) -> Option<u32> {
    let theta = t.multiplicative_order(d)?;
    if theta <= 1 {
        return None;
    }
    if d % theta == 0 || (d - 1) % theta == 0 {
        Some(theta)
    } else {
        None
    }
}

/// Label for the family `V_t`.  Errors with `NotRootOfUnity` unless
/// `t != 1` and `t^d = 1` or `t^(d-1) = 1`.
pub fn vt_label(d: u32, n: usize, t: &CycloNum) -> Result<ComponentLabel> {
    let theta = vt_order(d, t).ok_or(Error::NotRootOfUnity)?;
    Ok(label(
        ComponentKind::Vt {
            t: t.clone(),
            order: theta,
        },
        vt_dimension(d, n, theta),
        expected_three_point_dim(d, n),
    ))
}

/// Label for the collinear family `V_1`.
pub fn v1_label(d: u32, n: usize) -> ComponentLabel {
    label(
        ComponentKind::V1,
        v1_dimension(d, n),
        expected_three_point_dim(d, n),
    )
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The full catalogue of irreducible families for three star points in
/// general position on degree-`d` hypersurfaces in `P^n`: one `V_t` for
/// every root of unity `t != 1` with `t^d = 1` (listed first) or
/// `t^(d-1) = 1`, ordered by ascending order `theta` and ascending
/// exponent, then the collinear family `V_1`.  The list has `2d - 2`
/// entries; `t` values live in the cyclotomic field of conductor
/// `d(d-1)`, which contains all of them.
pub fn component_table(d: u32, n: usize) -> Result<Vec<ComponentLabel>> {
    if d < 3 || n < 3 {
        return Err(Error::ShapeViolation(String::from(
            "component table needs degree >= 3 and ambient dimension >= 3",
        )));
    }
    let conductor = d * (d - 1);
    let field = CycloField::new(conductor)?;
    let mut out = Vec::new();
    for base in [d, d - 1] {
        for theta in 2..=base {
            if base % theta != 0 {
                continue;
            }
            for a in 1..theta {
                if gcd_u32(a, theta) != 1 {
                    continue;
                }
                let t = field.zeta_pow(((conductor / theta) * a) as i64);
                out.push(label(
                    ComponentKind::Vt { t, order: theta },
                    vt_dimension(d, n, theta),
                    expected_three_point_dim(d, n),
                ));
            }
        }
    }
    out.push(v1_label(d, n));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Fermat hypersurfaces
// ---------------------------------------------------------------------------

/// The diagonal (Fermat) hypersurface of degree `d` in `P^n` together
/// with its complete list of star points.  Every star point has exactly
/// two nonzero coordinates `x_i = 1`, `x_j = xi` (`i < j`) with
/// `xi^d = -1`; the list has `d * C(n+1, 2)` entries, ordered by `(i, j)`
/// lexicographically and then by `xi = zeta^(2r+1)` for the primitive
/// `2d`-th root `zeta`, `r = 0, ..., d-1`.
pub fn build_fermat(d: u32, n: usize) -> Result<(Hypersurface, Vec<ProjPoint>)> {
    if d < 3 || n < 2 {
        return Err(Error::ShapeViolation(String::from(
            "diagonal hypersurfaces need degree >= 3 and ambient dimension >= 2",
        )));
    }
    let field = samples::fermat_field(d);
    let x = samples::fermat(&field, d, n);
    let zeta = samples::primitive_2d_root(&field, d)?;
    let mut points = Vec::with_capacity(d as usize * (n + 1) * n / 2);
    for i in 0..=n {
        for j in (i + 1)..=n {
            for r in 0..d {
                let xi = zeta.pow((2 * r + 1) as i64)?;
                let mut coords = vec![field.zero(); n + 1];
                coords[i] = field.one();
                coords[j] = xi;
                points.push(ProjPoint::new(coords)?);
            }
        }
    }
    Ok((x, points))
}

/// Star-point triples of `x` at the given points, in input order.
pub fn configuration_at(x: &Hypersurface, points: &[ProjPoint]) -> Result<Configuration> {
    let mut triples = Vec::with_capacity(points.len());
    for p in points {
        triples.push(triple_at_star(x, p)?);
    }
    Configuration::new(triples)
}

// ---------------------------------------------------------------------------
// The tridiagonal coefficient-strip system
// ---------------------------------------------------------------------------

/// Outcome of the tridiagonal system tying together the coefficient
/// strips of exponent `j` in a one-parameter family member.
#[derive(Clone, Debug)]
pub struct TridiagReport {
    /// Side length of the matrix, `j - 1`.
    pub size: usize,
    /// Its determinant, `1 + t + ... + t^(j-1)`.
    pub determinant: CycloNum,
    /// The kernel vector `(1, 1 + t, ..., 1 + t + ... + t^(j-2))` when the
    /// determinant vanishes (exactly for `t^j = 1`, `t != 1`), else `None`.
    pub solution: Option<Vec<CycloNum>>,
}

/// The `(j-1) x (j-1)` tridiagonal matrix with diagonal `t + 1`,
/// superdiagonal `-1`, and subdiagonal `-t`.
pub fn tridiag_matrix(j: usize, t: &CycloNum) -> Result<ExactMatrix<CycloNum>> {
    if j < 2 {
        return Err(Error::ShapeViolation(String::from(
            "the strip system needs an exponent of at least 2",
        )));
    }
    let one = t.one_like();
    let diag = t.add_ref(&one);
    let sup = one.neg_ref();
    let sub = t.neg_ref();
    let zero = t.zero_like();
    Ok(ExactMatrix::from_fn(j - 1, j - 1, &zero, |r, c| {
        if r == c {
            diag.clone()
        } else if c == r + 1 {
            sup.clone()
        } else if r == c + 1 {
            sub.clone()
        } else {
            zero.clone()
        }
    }))
}

/// Solves the tridiagonal strip system for exponent `j` at the value `t`:
/// reports the determinant and, when it vanishes, the explicit kernel
/// vector of partial geometric sums.
pub fn tridiag_solve(j: usize, t: &CycloNum) -> Result<TridiagReport> {
    let m = tridiag_matrix(j, t)?;
    let determinant = m.determinant()?;
    let solution = if determinant.is_zero() {
        let mut sums = Vec::with_capacity(j - 1);
        let mut acc = t.one_like();
        let mut power = t.one_like();
        sums.push(acc.clone());
        for _ in 1..(j - 1) {
            power = power.mul_ref(t);
            acc = acc.add_ref(&power);
            sums.push(acc.clone());
        }
        Some(sums)
    } else {
        None
    };
    Ok(TridiagReport {
        size: j - 1,
        determinant,
        solution,
    })
}

/// The same determinant as a polynomial identity over `Q[t]`: returns the
/// symbolically computed determinant next to the geometric sum
/// `1 + t + ... + t^(j-1)` it must equal.
pub fn tridiag_determinant_poly(j: usize) -> Result<(UniPoly<Rational>, UniPoly<Rational>)> {
    if j < 2 {
        return Err(Error::ShapeViolation(String::from(
            "the strip system needs an exponent of at least 2",
        )));
    }
    let zero = UniPoly::zero(&Rational::zero());
    let one = UniPoly::constant(Rational::one());
    let tpoly: UniPoly<Rational> = UniPoly::monomial(Rational::one(), 1);
    let diag = tpoly.add(&one);
    let sup = one.neg();
    let sub = tpoly.neg();
    let m = ExactMatrix::from_fn(j - 1, j - 1, &zero, |r, c| {
        if r == c {
            diag.clone()
        } else if c == r + 1 {
            sup.clone()
        } else if r == c + 1 {
            sub.clone()
        } else {
            zero.clone()
        }
    });
    let det = m.determinant()?;
    let geometric = UniPoly::new(&Rational::zero(), vec![Rational::one(); j]);
    Ok((det, geometric))
}

// ---------------------------------------------------------------------------
// One-parameter family members
// ---------------------------------------------------------------------------

/// Exponents `j` in `0 <= j <= d` with `t^j = 1` for `t` of order
/// `theta`: the multiples of `theta`, starting at `0`.  These index the
/// free coefficient strips of a one-parameter family member.
pub fn case1_exponents(d: u32, theta: u32) -> Vec<u32> {
    let mut out = vec![0];
    let mut j = theta;
    while j <= d {
        out.push(j);
        j += theta;
    }
    out
}

/// Builds a member of the one-parameter family for the value `t`.  The
/// three star points are `(1:0:...)`, `(0:1:0:...)`, and
/// `(-1 : t : t-1 : 0 : ...)`, with tangent planes `X_1 = 0`, `X_0 = 0`,
/// and `X_0 + X_1 - X_2 = 0`.
///
/// `a[k]` is the coefficient strip attached to
/// `case1_exponents(d, theta)[k]`: zero or homogeneous of degree `d - j`
/// in the variables past `X_2`.  `g012` is zero or homogeneous of degree
/// `d - 3` in all variables.  The member is
///
/// ```text
/// f = X0*X1 * [ sum_{j>0} A_j*((t*X0+X1)^j - X2^j) / ((t*X0+X1-X2)*(t*X0+X1-t*X2))
///               + (X0+X1-X2)*g012 ]
///     - 1/(t-1)^2 * sum_{j>=0} A_j * X2^j.
/// ```
///
/// Every summand of the numerator is divisible by both linear factors, so
/// the division is exact; `InexactDivision` would signal an internal bug,
/// not an input defect.  Errors: `NotRootOfUnity` unless `t != 1` and
/// `t^d = 1` or `t^(d-1) = 1`; `DegreeMismatch` for a strip of the wrong
/// degree; `ShapeViolation` for a strip count mismatch or a strip using
/// `X_0`, `X_1`, or `X_2`.
pub fn build_case1(
    d: u32,
    n: usize,
    t: &CycloNum,
    a: &[MultiPoly],
    g012: &MultiPoly,
) -> Result<Hypersurface> {
    if d < 3 || n < 3 {
        return Err(Error::ShapeViolation(String::from(
            "one-parameter members need degree >= 3 and ambient dimension >= 3",
        )));
    }
    let theta = vt_order(d, t).ok_or(Error::NotRootOfUnity)?;
    let exponents = case1_exponents(d, theta);
    if a.len() != exponents.len() {
        return Err(Error::ShapeViolation(format!(
            "expected {} coefficient strips, got {}",
            exponents.len(),
            a.len()
        )));
    }
    let field = t.field();
    let nv = n + 1;
    for (strip, &j) in a.iter().zip(exponents.iter()) {
        check_part(strip, field, nv, d as i64 - j as i64, &[0, 1, 2])?;
    }
    if !g012.is_zero() {
        if g012.field().conductor() != field.conductor() {
            return Err(Error::FieldMismatch {
                left: g012.field().conductor(),
                right: field.conductor(),
            });
        }
        if g012.nvars() != nv || g012.homogeneous_degree() != Some(d - 3) {
            return Err(Error::DegreeMismatch);
        }
    }

    let x0 = MultiPoly::variable(field, nv, 0);
    let x1 = MultiPoly::variable(field, nv, 1);
    let x2 = MultiPoly::variable(field, nv, 2);
    let y = x0.scale(t).add(&x1);
    let one = field.one();
    let denom = y.sub(&x2).mul(&y.sub(&x2.scale(t)));

    let mut numerator = MultiPoly::zero(field, nv);
    let mut tail = MultiPoly::zero(field, nv);
    for (strip, &j) in a.iter().zip(exponents.iter()) {
        if strip.is_zero() {
            continue;
        }
        tail = tail.add(&strip.mul(&x2.pow(j)));
        if j > 0 {
            numerator = numerator.add(&strip.mul(&y.pow(j).sub(&x2.pow(j))));
        }
    }
    let quotient = if numerator.is_zero() {
        MultiPoly::zero(field, nv)
    } else {
        numerator.exact_div(&denom).ok_or(Error::InexactDivision)?
    };
    let ell3 = x0.add(&x1).sub(&x2);
    let bracket = quotient.add(&ell3.mul(g012));
    let tm1 = t.checked_sub(&one)?;
    let scale = one
        .checked_div(&tm1.checked_mul(&tm1)?)?
        .neg_ref();
    let f = x0.mul(&x1).mul(&bracket).add(&tail.scale(&scale));
    Hypersurface::new(f)
}

/// The marked points and tangent planes of a [`build_case1`] member.
pub fn case1_frame(
    t: &CycloNum,
    n: usize,
) -> Result<(Vec<ProjPoint>, Vec<Hyperplane>)> {
    let field = t.field();
    let nv = n + 1;
    let mut p3 = vec![field.zero(); nv];
    p3[0] = field.from_int(-1);
    p3[1] = t.clone();
    p3[2] = t.checked_sub(&field.one())?;
    let points = vec![
        unit_point(field, nv, 0)?,
        unit_point(field, nv, 1)?,
        ProjPoint::new(p3)?,
    ];
    let mut l3 = vec![field.zero(); nv];
    l3[0] = field.one();
    l3[1] = field.one();
    l3[2] = field.from_int(-1);
    let planes = vec![
        coordinate_plane(field, nv, 1)?,
        coordinate_plane(field, nv, 0)?,
        Hyperplane::from_coeffs(&l3)?,
    ];
    Ok((points, planes))
}

/// Deterministic generic inputs for [`build_case1`].
pub fn seeded_case1_params(
    field: &CycloField,
    d: u32,
    n: usize,
    theta: u32,
    seed: u64,
) -> (Vec<MultiPoly>, MultiPoly) {
    let mut rng = DetRng::new(seed);
    let tail: Vec<usize> = (3..=n).collect();
    let all: Vec<usize> = (0..=n).collect();
    let a = case1_exponents(d, theta)
        .iter()
        .map(|&j| seeded_poly(field, n + 1, d as i64 - j as i64, &tail, &mut rng))
        .collect();
    let g012 = seeded_poly(field, n + 1, d as i64 - 3, &all, &mut rng);
    (a, g012)
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Classifies a three-point configuration into its family.
///
/// The six point-plane incidences decide the branch.  With no incidence
/// (general position) the configuration lands in a `V_t` family — with
/// `t` read off invariantly from the six tangent-form values below — or
/// in `V_1` when the points are collinear, or in no family at all when
/// only the tangent planes share a codimension-two linear space.  Exactly
/// one mutually incident pair places it in the intermediate family.  A
/// fully incident triple (ambient dimension at least five, points not
/// collinear) is extremal, split by the rank of the three tangent forms.
/// Every other pattern admits no suitable member.
///
/// For points `P_1, P_2, P_3` with tangent forms `l_1, l_2, l_3`,
///
/// ```text
/// t = - (l_2(P_1) * l_3(P_2) * l_1(P_3)) / (l_3(P_1) * l_1(P_2) * l_2(P_3)),
/// ```
///
/// which is invariant under rescaling of every form and point and under
/// linear changes of coordinates.
///
/// Errors: `DegenerateTriple` when two marked points or two tangent
/// planes coincide; `ShapeViolation` unless exactly three triples are
/// given.
pub fn classify_three(config: &Configuration) -> Result<ComponentLabel> {
    if config.len() != 3 {
        return Err(Error::ShapeViolation(format!(
            "three-point classification got {} triples",
            config.len()
        )));
    }
    let d = config.degree() as u32;
    let n = config.ambient_dim();
    let triples = config.triples();
    for i in 0..3 {
        for j in (i + 1)..3 {
            if triples[i].vertex() == triples[j].vertex()
                || triples[i].plane() == triples[j].plane()
            {
                return Err(Error::DegenerateTriple);
            }
        }
    }
    let mut total = 0usize;
    for i in 0..3 {
        for j in 0..3 {
            if i != j && config.incidence(i, j) {
                total += 1;
            }
        }
    }
    let mutual = [(0usize, 1usize), (0, 2), (1, 2)]
        .iter()
        .filter(|&&(i, j)| config.incidence(i, j) && config.incidence(j, i))
        .count();

    if total == 0 {
        let collinear = points_collinear(config)?;
        if collinear {
            return Ok(v1_label(d, n));
        }
        if tangent_forms_rank(config)? <= 2 {
            // The three planes share a codimension-two linear space while
            // the points are in general position: no suitable member.
            return Ok(not_suited_label(d, n, 3));
        }
        let t = extract_t(config)?;
        return Ok(match vt_order(d, &t) {
            Some(theta) => label(
                ComponentKind::Vt { t, order: theta },
                vt_dimension(d, n, theta),
                expected_three_point_dim(d, n),
            ),
            None => not_suited_label(d, n, 3),
        });
    }
    if mutual == 1 && total == 2 {
        return Ok(label(
            ComponentKind::Intermediate,
            intermediate_dimension(d, n),
            expected_three_point_dim(d, n),
        ));
    }
    if total == 6 {
        if n < 5 || points_collinear(config)? {
            return Ok(not_suited_label(d, n, 3));
        }
        let (kind, dims) = if tangent_forms_rank(config)? == 3 {
            (ComponentKind::ExtremalIndep, extremal_config_dimensions(d, n).0)
        } else {
            (ComponentKind::ExtremalDep, extremal_config_dimensions(d, n).1)
        };
        return Ok(label(kind, dims, expected_three_point_dim(d, n)));
    }
    Ok(not_suited_label(d, n, 3))
}

/// Classifies a two-point configuration into its family by the two
/// incidences: none gives the general family, both give the family whose
/// members all contain the joining line, and a one-way incidence admits
/// no suitable member.
pub fn classify_two(config: &Configuration) -> Result<ComponentLabel> {
    if config.len() != 2 {
        return Err(Error::ShapeViolation(format!(
            "two-point classification got {} triples",
            config.len()
        )));
    }
    let triples = config.triples();
    if triples[0].vertex() == triples[1].vertex() || triples[0].plane() == triples[1].plane() {
        return Err(Error::DegenerateTriple);
    }
    let d = config.degree() as u32;
    let n = config.ambient_dim();
    let expected = expected_two_point_dim(d, n);
    Ok(match (config.incidence(0, 1), config.incidence(1, 0)) {
        (false, false) => label(ComponentKind::TwoGeneral, expected, expected),
        (true, true) => label(
            ComponentKind::TwoLineInX,
            two_line_in_x_dimension(d, n),
            expected,
        ),
        _ => not_suited_label(d, n, 2),
    })
}

fn points_collinear(config: &Configuration) -> Result<bool> {
    let field = config.field();
    let rows: Vec<Vec<CycloNum>> = config
        .triples()
        .iter()
        .map(|t| t.vertex().coords().to_vec())
        .collect();
    Ok(ExactMatrix::from_rows(&field.zero(), rows)?.rank() <= 2)
}

fn tangent_forms_rank(config: &Configuration) -> Result<usize> {
    let field = config.field();
    let rows: Vec<Vec<CycloNum>> = config
        .triples()
        .iter()
        .map(|t| t.plane().coefficients())
        .collect();
    Ok(ExactMatrix::from_rows(&field.zero(), rows)?.rank())
}

fn extract_t(config: &Configuration) -> Result<CycloNum> {
    let triples = config.triples();
    let ev = |plane: usize, point: usize| -> Result<CycloNum> {
        triples[plane]
            .plane()
            .linear_form()
            .eval(triples[point].vertex().coords())
    };
    let num = ev(1, 0)?
        .checked_mul(&ev(2, 1)?)?
        .checked_mul(&ev(0, 2)?)?;
    let den = ev(2, 0)?
        .checked_mul(&ev(0, 1)?)?
        .checked_mul(&ev(1, 2)?)?;
    Ok(num.checked_div(&den)?.neg_ref())
}

// ---------------------------------------------------------------------------
// Two-point normal forms
// ---------------------------------------------------------------------------

/// A two-point member after the canonical change of coordinates.
#[derive(Clone, Debug)]
pub enum TwoPointShape {
    /// No incidences.  The points sit at `(1:0:...)` and `(0:1:0:...)`
    /// with tangent planes `X_1 = 0` and `X_0 = 0`, and
    /// `f = X_0*X_1*h + g` with `g` free of `X_0, X_1`; both tangent
    /// sections are cut out by `g`.
    General { h: MultiPoly, g: MultiPoly },
    /// Mutual incidences.  The points sit at `(1:0:...)` and
    /// `(0:1:0:...)` with tangent planes `X_2 = 0` and `X_3 = 0`, and
    /// `f = X_2*X_3*h + X_2*g2 + X_3*g3 + g` with `g2` free of
    /// `X_1, X_3`, `g3` free of `X_0, X_2`, and `g` free of all four
    /// leading variables; the joining line lies inside the member.
    LineInX {
        h: MultiPoly,
        g2: MultiPoly,
        g3: MultiPoly,
        g: MultiPoly,
    },
}

impl TwoPointShape {
    /// Puts the parts back together.
    pub fn reassemble(&self) -> MultiPoly {
        match self {
            TwoPointShape::General { h, g } => {
                let field = h.field();
                let nv = h.nvars();
                let x0 = MultiPoly::variable(field, nv, 0);
                let x1 = MultiPoly::variable(field, nv, 1);
                x0.mul(&x1).mul(h).add(g)
            }
            TwoPointShape::LineInX { h, g2, g3, g } => {
                let field = h.field();
                let nv = h.nvars();
                let x2 = MultiPoly::variable(field, nv, 2);
                let x3 = MultiPoly::variable(field, nv, 3);
                x2.mul(&x3)
                    .mul(h)
                    .add(&x2.mul(g2))
                    .add(&x3.mul(g3))
                    .add(g)
            }
        }
    }
}

/// A two-point configuration in normalized coordinates.
#[derive(Clone, Debug)]
pub struct NormalForm2 {
    pub shape: TwoPointShape,
    /// The canonical suited member, written in the new coordinates.
    pub witness: MultiPoly,
    /// Change of coordinates: old coordinates = `transform * new`.
    pub transform: ExactMatrix<CycloNum>,
    /// Projective dimension of the attached linear system.
    pub projective_dim: i64,
}

fn mono_strip(m: &Mono, lower: &[usize]) -> Mono {
    let mut e = m.exps().to_vec();
    for &v in lower {
        e[v] -= 1;
    }
    Mono::new(e)
}

/// Splits `f = X_0*X_1*h + g` with `g` free of `X_0` and `X_1` into
/// `(h, g)`.  Errors with `ShapeViolation` on any monomial using exactly
/// one of the two leading variables.
pub fn decompose_two_general(f: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    let field = f.field();
    let nv = f.nvars();
    let mut h = Vec::new();
    let mut g = Vec::new();
    for (m, c) in f.terms() {
        let (e0, e1) = (m.exp(0), m.exp(1));
        if e0 >= 1 && e1 >= 1 {
            h.push((mono_strip(m, &[0, 1]), c.clone()));
        } else if e0 == 0 && e1 == 0 {
            g.push((m.clone(), c.clone()));
        } else {
            return Err(Error::ShapeViolation(format!(
                "monomial {:?} uses exactly one of the two leading variables",
                m.exps()
            )));
        }
    }
    Ok((
        MultiPoly::from_terms(field, nv, h),
        MultiPoly::from_terms(field, nv, g),
    ))
}

/// Splits `f = X_2*X_3*h + X_2*g2 + X_3*g3 + g` into `(h, g2, g3, g)`,
/// enforcing that `g2` avoids `X_1` and `X_3`, `g3` avoids `X_0` and
/// `X_2`, and `g` avoids all of `X_0, ..., X_3`.
pub fn decompose_two_line_in_x(
    f: &MultiPoly,
) -> Result<(MultiPoly, MultiPoly, MultiPoly, MultiPoly)> {
    let field = f.field();
    let nv = f.nvars();
    let mut h = Vec::new();
    let mut g2 = Vec::new();
    let mut g3 = Vec::new();
    let mut g = Vec::new();
    for (m, c) in f.terms() {
        let (e2, e3) = (m.exp(2), m.exp(3));
        if e2 >= 1 && e3 >= 1 {
            h.push((mono_strip(m, &[2, 3]), c.clone()));
        } else if e2 >= 1 {
            if m.exp(1) != 0 {
                return Err(Error::ShapeViolation(format!(
                    "monomial {:?} mixes the first point's plane variable with X_1",
                    m.exps()
                )));
            }
            g2.push((mono_strip(m, &[2]), c.clone()));
        } else if e3 >= 1 {
            if m.exp(0) != 0 {
                return Err(Error::ShapeViolation(format!(
                    "monomial {:?} mixes the second point's plane variable with X_0",
                    m.exps()
                )));
            }
            g3.push((mono_strip(m, &[3]), c.clone()));
        } else {
            if m.exp(0) != 0 || m.exp(1) != 0 {
                return Err(Error::ShapeViolation(format!(
                    "residual monomial {:?} uses a marked-point variable",
                    m.exps()
                )));
            }
            g.push((m.clone(), c.clone()));
        }
    }
    Ok((
        MultiPoly::from_terms(field, nv, h),
        MultiPoly::from_terms(field, nv, g2),
        MultiPoly::from_terms(field, nv, g3),
        MultiPoly::from_terms(field, nv, g),
    ))
}

fn dot(coeffs: &[CycloNum], v: &[CycloNum]) -> CycloNum {
    let mut acc = coeffs[0].zero_like();
    for (c, x) in coeffs.iter().zip(v.iter()) {
        acc = acc.add_ref(&c.mul_ref(x));
    }
    acc
}

fn matrix_from_columns(
    field: &CycloField,
    columns: &[Vec<CycloNum>],
) -> Result<ExactMatrix<CycloNum>> {
    let nv = columns[0].len();
    let rows: Vec<Vec<CycloNum>> = (0..nv)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    ExactMatrix::from_rows(&field.zero(), rows)
}

fn general_frame(config: &Configuration) -> Result<ExactMatrix<CycloNum>> {
    let field = config.field();
    let triples = config.triples();
    let forms = ExactMatrix::from_rows(
        &field.zero(),
        vec![
            triples[0].plane().coefficients(),
            triples[1].plane().coefficients(),
        ],
    )?;
    let mut columns = vec![
        triples[0].vertex().coords().to_vec(),
        triples[1].vertex().coords().to_vec(),
    ];
    columns.extend(forms.nullspace()?);
    matrix_from_columns(field, &columns)
}

fn incidence_frame(config: &Configuration) -> Result<ExactMatrix<CycloNum>> {
    let field = config.field();
    let triples = config.triples();
    let l1 = triples[0].plane().coefficients();
    let l2 = triples[1].plane().coefficients();
    let ker = |coeffs: &[CycloNum]| -> Result<Vec<Vec<CycloNum>>> {
        ExactMatrix::from_rows(&field.zero(), vec![coeffs.to_vec()])?.nullspace()
    };
    let c2 = ker(&l2)?
        .into_iter()
        .find(|v| !dot(&l1, v).is_zero())
        .ok_or(Error::DegenerateTriple)?;
    let c3 = ker(&l1)?
        .into_iter()
        .find(|v| !dot(&l2, v).is_zero())
        .ok_or(Error::DegenerateTriple)?;
    let both = ExactMatrix::from_rows(&field.zero(), vec![l1.clone(), l2.clone()])?.nullspace()?;
    let mut spanning = vec![
        triples[0].vertex().coords().to_vec(),
        triples[1].vertex().coords().to_vec(),
    ];
    let target = config.ambient_dim() - 1;
    for cand in both {
        if spanning.len() == target {
            break;
        }
        let mut probe = spanning.clone();
        probe.push(cand.clone());
        if ExactMatrix::from_rows(&field.zero(), probe)?.rank() == spanning.len() + 1 {
            spanning.push(cand);
        }
    }
    if spanning.len() != target {
        return Err(Error::Assertion(String::from(
            "could not extend the marked points to a frame of the plane intersection",
        )));
    }
    let mut columns = vec![spanning[0].clone(), spanning[1].clone(), c2, c3];
    columns.extend(spanning.into_iter().skip(2));
    matrix_from_columns(field, &columns)
}

/// Normalizes a two-point configuration: moves the points and tangent
/// planes to the canonical frame, certifies that every member of the
/// attached linear system takes the predicted shape, and returns the
/// decomposed canonical witness.
///
/// Errors: `NotSuited` when the configuration admits no smooth suited
/// member (in particular for a one-way incidence); `DegenerateTriple` for
/// repeated data; `ShapeViolation` if a member fails the shape
/// prediction, which would be an internal bug.
pub fn normal_form_two(config: &Configuration) -> Result<NormalForm2> {
    if config.len() != 2 {
        return Err(Error::ShapeViolation(format!(
            "two-point normalization got {} triples",
            config.len()
        )));
    }
    let triples = config.triples();
    if triples[0].vertex() == triples[1].vertex() || triples[0].plane() == triples[1].plane() {
        return Err(Error::DegenerateTriple);
    }
    let i01 = config.incidence(0, 1);
    let i10 = config.incidence(1, 0);
    if i01 != i10 {
        return Err(Error::NotSuited);
    }
    let mutual = i01;
    let system = vd_basis(config);
    let report = match is_suited_on(config, &system) {
        Ok(r) => r,
        Err(Error::EmptySystem) => return Err(Error::NotSuited),
        Err(e) => return Err(e),
    };
    if !report.suited {
        return Err(Error::NotSuited);
    }
    let witness_old = report.witness.ok_or_else(|| {
        Error::Assertion(String::from("suited configuration lacks a witness"))
    })?;
    let transform = if mutual {
        incidence_frame(config)?
    } else {
        general_frame(config)?
    };
    for b in &system.basis {
        let moved = b.substitute_linear(&transform)?;
        if mutual {
            decompose_two_line_in_x(&moved)?;
        } else {
            decompose_two_general(&moved)?;
        }
    }
    let witness = witness_old.substitute_linear(&transform)?;
    let shape = if mutual {
        let (h, g2, g3, g) = decompose_two_line_in_x(&witness)?;
        TwoPointShape::LineInX { h, g2, g3, g }
    } else {
        let (h, g) = decompose_two_general(&witness)?;
        TwoPointShape::General { h, g }
    };
    if !shape.reassemble().sub(&witness).is_zero() {
        return Err(Error::Assertion(String::from(
            "normal form parts do not reassemble to the witness",
        )));
    }
    Ok(NormalForm2 {
        shape,
        witness,
        transform,
        projective_dim: system.projective_dim,
    })
}

// ---------------------------------------------------------------------------
// Collinear families
// ---------------------------------------------------------------------------

/// Builds a hypersurface with star points at `d` marked collinear points.
///
/// `points[i]` must lie on `line` (pairwise distinct), `planes[i]` must
/// pass through `points[i]` without containing the line, and `c1` must be
/// a good cone for the first point in its plane.  The remaining cones are
/// forced: the cone over `c1` from an auxiliary vertex on the line cuts
/// every plane in a cone with the right vertex.  The auxiliary vertex is
/// the first point of the line's standard grid distinct from all marked
/// points.  The returned member is certified to have a star point with
/// the prescribed tangent plane at every marked point.
///
/// Errors: `ShapeViolation` for count or position defects,
/// `RootsNotDistinct` for repeated points, `VertexNotOnPlane` when a
/// plane misses its point, cone defects as reported by triple
/// validation, and `NotSuited` when the forced linear system has no
/// smooth suited member.
pub fn build_collinear(
    d: u32,
    n: usize,
    line: &ProjLine,
    points: &[ProjPoint],
    planes: &[Hyperplane],
    c1: &MultiPoly,
) -> Result<Hypersurface> {
    if points.len() != d as usize || planes.len() != points.len() {
        return Err(Error::ShapeViolation(format!(
            "expected {} marked points with planes, got {} points and {} planes",
            d,
            points.len(),
            planes.len()
        )));
    }
    if n + 1 != points[0].num_coords() {
        return Err(Error::ShapeViolation(String::from(
            "marked points do not live in the stated ambient space",
        )));
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i] == points[j] {
                return Err(Error::RootsNotDistinct);
            }
        }
    }
    for (p, h) in points.iter().zip(planes.iter()) {
        if !line.contains(p) {
            return Err(Error::ShapeViolation(String::from(
                "a marked point is off the line",
            )));
        }
        if !h.contains(p)? {
            return Err(Error::VertexNotOnPlane);
        }
        if h.contains(line.span_a())? && h.contains(line.span_b())? {
            return Err(Error::ShapeViolation(String::from(
                "a tangent plane contains the whole line",
            )));
        }
    }
    validate_triple(&planes[0], &points[0], c1, d as usize)?;

    let field = line.field();
    let mut vertex = None;
    for k in 0..=(points.len() as i64 + 1) {
        let v = line.point_at(&field.one(), &field.from_int(k))?;
        if points.iter().all(|p| p != &v) {
            vertex = Some(v);
            break;
        }
    }
    let vertex = vertex.ok_or_else(|| {
        Error::Assertion(String::from("no free grid point available on the line"))
    })?;

    // Cone over `c1` from the auxiliary vertex: substitute the projection
    // x -> l1(v)*x - l1(x)*v, which fixes the first plane pointwise.
    let l1 = planes[0].linear_form();
    let lv = l1.eval(vertex.coords())?;
    if lv.is_zero() {
        return Err(Error::Assertion(String::from(
            "auxiliary vertex fell into the first tangent plane",
        )));
    }
    let nv = n + 1;
    let images: Vec<MultiPoly> = (0..nv)
        .map(|i| {
            MultiPoly::variable(field, nv, i)
                .scale(&lv)
                .sub(&l1.scale(&vertex.coords()[i]))
        })
        .collect();
    let cone = c1.compose(&images)?;

    let mut triples = Vec::with_capacity(points.len());
    for (p, h) in points.iter().zip(planes.iter()) {
        triples.push(validate_triple(h, p, &cone, d as usize)?);
    }
    let config = Configuration::new(triples)?;
    let system = vd_basis(&config);
    let report = match is_suited_on(&config, &system) {
        Ok(r) => r,
        Err(Error::EmptySystem) => return Err(Error::NotSuited),
        Err(e) => return Err(e),
    };
    if !report.suited {
        return Err(Error::NotSuited);
    }

    let certify = |f: &MultiPoly| -> Option<Hypersurface> {
        let x = Hypersurface::new(f.clone()).ok()?;
        for (p, h) in points.iter().zip(planes.iter()) {
            let verdict = is_star_point(&x, p).ok()?;
            if !verdict.is_star || &verdict.tangent != h {
                return None;
            }
        }
        Some(x)
    };
    if let Some(w) = report.witness.as_ref() {
        if let Some(x) = certify(w) {
            return Ok(x);
        }
    }
    let mut rng = DetRng::new(COLLINEAR_SEED);
    for _ in 0..64 {
        let mut f = MultiPoly::zero(field, nv);
        for b in &system.basis {
            f = f.add(&b.scale(&field.from_int(rng.nonzero_int(4))));
        }
        if f.is_zero() {
            continue;
        }
        if let Some(x) = certify(&f) {
            return Ok(x);
        }
    }
    Err(Error::NotSuited)
}

// ---------------------------------------------------------------------------
// Intermediate families
// ---------------------------------------------------------------------------

/// A member of the intermediate family with its marked data and the
/// dimensions observed on the instance.
#[derive(Clone, Debug)]
pub struct IntermediateReport {
    pub hypersurface: Hypersurface,
    pub points: Vec<ProjPoint>,
    pub planes: Vec<Hyperplane>,
    /// Dimension of the family in configuration space.
    pub dimension: i64,
    /// Projective dimension of the linear system attached to the
    /// configuration extracted from this member.
    pub fiber_dim: i64,
}

/// Builds a member of the intermediate family: star points `(1:0:...)`,
/// `(0:1:0:...)`, `(0:1:1:0:...)` with tangent planes `X_1 = 0`,
/// `X_0 = 0`, `X_0 - X_3 = 0` (so the second and third point are the one
/// mutually incident pair).  The member is
///
/// ```text
/// f = X0*X1*(X3 - X0)*g013
///     - X0 * sum_{k=1}^{d-1} B_k*(X2^k - (X2 - X1)^k)
///     + X3 * sum_{k=1}^{d-1} B_k*X2^k + B_0,
/// ```
///
/// with `b[k] = B_k` zero or homogeneous of degree `d` (`k = 0`) or
/// `d - k - 1` (`k >= 1`) in the variables past `X_2`, and `g013` zero or
/// homogeneous of degree `d - 3` in all variables.
///
/// Errors: `DegreeMismatch` for a part of the wrong degree,
/// `ShapeViolation` for a wrong part count or a part using a leading
/// variable; star extraction on the instance reports any degeneracy of
/// the chosen parts (e.g. `SingularPoint`).
pub fn build_intermediate(
    d: u32,
    n: usize,
    b: &[MultiPoly],
    g013: &MultiPoly,
) -> Result<IntermediateReport> {
    if d < 3 || n < 3 {
        return Err(Error::ShapeViolation(String::from(
            "intermediate members need degree >= 3 and ambient dimension >= 3",
        )));
    }
    if b.len() != d as usize {
        return Err(Error::ShapeViolation(format!(
            "expected {} coefficient parts, got {}",
            d,
            b.len()
        )));
    }
    let field = g013.field();
    let nv = n + 1;
    check_part(&b[0], field, nv, d as i64, &[0, 1, 2])?;
    for (k, part) in b.iter().enumerate().skip(1) {
        check_part(part, field, nv, d as i64 - k as i64 - 1, &[0, 1, 2])?;
    }
    if !g013.is_zero() && (g013.nvars() != nv || g013.homogeneous_degree() != Some(d - 3)) {
        return Err(Error::DegreeMismatch);
    }

    let x0 = MultiPoly::variable(field, nv, 0);
    let x1 = MultiPoly::variable(field, nv, 1);
    let x2 = MultiPoly::variable(field, nv, 2);
    let x3 = MultiPoly::variable(field, nv, 3);
    let shifted = x2.sub(&x1);
    let mut moving = MultiPoly::zero(field, nv);
    let mut fixed = MultiPoly::zero(field, nv);
    for (k, part) in b.iter().enumerate().skip(1) {
        if part.is_zero() {
            continue;
        }
        let k32 = k as u32;
        moving = moving.add(&part.mul(&x2.pow(k32).sub(&shifted.pow(k32))));
        fixed = fixed.add(&part.mul(&x2.pow(k32)));
    }
    let f = x0
        .mul(&x1)
        .mul(&x3.sub(&x0))
        .mul(g013)
        .sub(&x0.mul(&moving))
        .add(&x3.mul(&fixed))
        .add(&b[0]);
    let x = Hypersurface::new(f)?;

    let points = vec![
        unit_point(field, nv, 0)?,
        unit_point(field, nv, 1)?,
        {
            let mut c = vec![field.zero(); nv];
            c[1] = field.one();
            c[2] = field.one();
            ProjPoint::new(c)?
        },
    ];
    let mut l3 = vec![field.zero(); nv];
    l3[0] = field.one();
    l3[3] = field.from_int(-1);
    let planes = vec![
        coordinate_plane(field, nv, 1)?,
        coordinate_plane(field, nv, 0)?,
        Hyperplane::from_coeffs(&l3)?,
    ];

    let config = configuration_at(&x, &points)?;
    for (triple, plane) in config.triples().iter().zip(planes.iter()) {
        if triple.plane() != plane {
            return Err(Error::Assertion(String::from(
                "intermediate member has an unexpected tangent plane",
            )));
        }
    }
    let system = vd_basis(&config);
    Ok(IntermediateReport {
        hypersurface: x,
        points,
        planes,
        dimension: intermediate_dimension(d, n),
        fiber_dim: system.projective_dim,
    })
}

/// Deterministic generic inputs for [`build_intermediate`].
pub fn seeded_intermediate_params(
    field: &CycloField,
    d: u32,
    n: usize,
    seed: u64,
) -> (Vec<MultiPoly>, MultiPoly) {
    let mut rng = DetRng::new(seed);
    let tail: Vec<usize> = (3..=n).collect();
    let all: Vec<usize> = (0..=n).collect();
    let mut b = Vec::with_capacity(d as usize);
    for k in 0..(d as usize) {
        let deg = if k == 0 {
            d as i64
        } else {
            d as i64 - k as i64 - 1
        };
        b.push(seeded_poly(field, n + 1, deg, &tail, &mut rng));
    }
    let g013 = seeded_poly(field, n + 1, d as i64 - 3, &all, &mut rng);
    (b, g013)
}

// ---------------------------------------------------------------------------
// Extremal families
// ---------------------------------------------------------------------------

/// Which extremal family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalCase {
    /// Tangent planes `X_3, X_4, X_5`: linearly independent.
    Indep,
    /// Tangent planes `X_3, X_4, X_4 - X_3`: linearly dependent.
    Dep,
}

/// A member of an extremal family with the dimension bookkeeping.
#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub hypersurface: Hypersurface,
    pub points: Vec<ProjPoint>,
    pub planes: Vec<Hyperplane>,
    pub case: ExtremalCase,
    /// Dimension of the independent-planes locus of hypersurfaces.
    pub dim_indep: i64,
    /// Dimension of the dependent-planes locus of hypersurfaces.
    pub dim_dep: i64,
    /// Whether `dim_dep = dim_indep + 4 - n + C(n+d-6, n-1)` holds.
    pub relation_holds: bool,
}

/// Builds a member of an extremal family: the three points sit at the
/// first three coordinate points, pairwise mutually incident with the
/// tangent planes of the chosen case.  Free parts are seeded
/// deterministically; the dependent case additionally ties several parts
/// together so that the third tangent section stays a cone.  Candidates
/// whose tangent sections degenerate (a cone singular away from its
/// vertex) are discarded and the seed is advanced, so the returned member
/// always carries three valid star-point triples.
///
/// Errors: `AmbientTooSmall` for ambient dimension below five (the fully
/// incident pattern admits no smooth member there) and `WrongDegree` for
/// degree below three.
pub fn build_extremal(d: u32, n: usize, case: ExtremalCase, seed: u64) -> Result<ExtremalReport> {
    if n < 5 {
        return Err(Error::AmbientTooSmall);
    }
    if d < 3 {
        return Err(Error::WrongDegree {
            expected: 3,
            found: d as usize,
        });
    }
    let mut last = Err(Error::NotSuited);
    for attempt in 0..32u64 {
        let stream = seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        last = build_extremal_once(d, n, case, stream);
        if last.is_ok() {
            return last;
        }
    }
    last
}

fn build_extremal_once(
    d: u32,
    n: usize,
    case: ExtremalCase,
    seed: u64,
) -> Result<ExtremalReport> {
    let field = CycloField::new(1)?;
    let nv = n + 1;
    let di = d as i64;
    let mut rng = DetRng::new(seed);
    let var = |i: usize| MultiPoly::variable(&field, nv, i);
    let with_tail = |head: &[usize], from: usize| -> Vec<usize> {
        let mut v = head.to_vec();
        v.extend(from..=n);
        v
    };
    let all: Vec<usize> = (0..=n).collect();

    let f = match case {
        ExtremalCase::Indep => {
            let g345 = seeded_poly(&field, nv, di - 3, &all, &mut rng);
            let g34 = seeded_poly(&field, nv, di - 2, &with_tail(&[0, 1, 3, 4], 6), &mut rng);
            let g35 = seeded_poly(&field, nv, di - 2, &with_tail(&[0, 2, 3, 5], 6), &mut rng);
            let g45 = seeded_poly(&field, nv, di - 2, &with_tail(&[1, 2, 4, 5], 6), &mut rng);
            let g3 = seeded_poly(&field, nv, di - 1, &with_tail(&[0, 3], 6), &mut rng);
            let g4 = seeded_poly(&field, nv, di - 1, &with_tail(&[1, 4], 6), &mut rng);
            let g5 = seeded_poly(&field, nv, di - 1, &with_tail(&[2, 5], 6), &mut rng);
            let g = seeded_poly(&field, nv, di, &with_tail(&[], 6), &mut rng);
            var(3)
                .mul(&var(4))
                .mul(&var(5))
                .mul(&g345)
                .add(&var(3).mul(&var(4)).mul(&g34))
                .add(&var(3).mul(&var(5)).mul(&g35))
                .add(&var(4).mul(&var(5)).mul(&g45))
                .add(&var(3).mul(&g3))
                .add(&var(4).mul(&g4))
                .add(&var(5).mul(&g5))
                .add(&g)
        }
        ExtremalCase::Dep => {
            let no = |exclude: &[usize]| -> Vec<usize> {
                (0..=n).filter(|i| !exclude.contains(i)).collect()
            };
            let a012 = seeded_poly(&field, nv, di - 6, &all, &mut rng);
            let a02 = seeded_poly(&field, nv, di - 4, &no(&[1]), &mut rng);
            let a12 = seeded_poly(&field, nv, di - 4, &no(&[0]), &mut rng);
            let a2p = seeded_poly(&field, nv, di - 3, &no(&[0, 1]), &mut rng);
            let a = seeded_poly(&field, nv, di - 2, &no(&[2]), &mut rng);
            let b3 = seeded_poly(&field, nv, di - 2, &with_tail(&[0, 3], 5), &mut rng);
            let c4 = seeded_poly(&field, nv, di - 2, &with_tail(&[1, 4], 5), &mut rng);
            let c2 = seeded_poly(&field, nv, di - 2, &with_tail(&[2], 5), &mut rng);
            let b = seeded_poly(&field, nv, di - 1, &with_tail(&[0], 5), &mut rng);
            let c = seeded_poly(&field, nv, di - 1, &with_tail(&[1], 5), &mut rng);
            let cp24 = seeded_poly(&field, nv, di - 3, &with_tail(&[2, 4], 5), &mut rng);
            let g = seeded_poly(&field, nv, di, &with_tail(&[], 5), &mut rng);

            // Three parts are forced by requiring the third tangent
            // section (substitute X_4 -> X_3) to be a cone with the third
            // point as vertex: its X_2-strips must cancel pairwise.
            let x3 = var(3);
            let x4 = var(4);
            let sub43 = |p: &MultiPoly| p.substitute_variable(4, &x3);
            let sub34 = |p: &MultiPoly| p.substitute_variable(3, &x4);
            let b023 = sub43(&a02)?.neg();
            let c124 = sub34(&a12)?.neg();
            let bp23 = sub43(&a2p)?.neg().sub(&sub43(&cp24)?);
            let b23 = var(0).mul(&b023).add(&bp23);
            let b2 = c2.neg();

            let a2 = var(0)
                .mul(&var(1))
                .mul(&x4.sub(&x3))
                .mul(&a012)
                .add(&var(0).mul(&a02))
                .add(&var(1).mul(&a12))
                .add(&a2p);
            let g34 = var(2).mul(&a2).add(&a);
            let h3 = var(2).mul(&b23).add(&b3);
            let hp3 = var(2).mul(&b2).add(&b);
            let g3 = x3.mul(&h3).add(&hp3);
            let c24 = var(1).mul(&c124).add(&cp24);
            let h4 = var(2).mul(&c24).add(&c4);
            let hp4 = var(2).mul(&c2).add(&c);
            let g4 = x4.mul(&h4).add(&hp4);
            x3.mul(&x4)
                .mul(&g34)
                .add(&x3.mul(&g3))
                .add(&x4.mul(&g4))
                .add(&g)
        }
    };
    let x = Hypersurface::new(f)?;

    let points = vec![
        unit_point(&field, nv, 0)?,
        unit_point(&field, nv, 1)?,
        unit_point(&field, nv, 2)?,
    ];
    let planes = match case {
        ExtremalCase::Indep => vec![
            coordinate_plane(&field, nv, 3)?,
            coordinate_plane(&field, nv, 4)?,
            coordinate_plane(&field, nv, 5)?,
        ],
        ExtremalCase::Dep => {
            let mut l3 = vec![field.zero(); nv];
            l3[3] = field.from_int(-1);
            l3[4] = field.one();
            vec![
                coordinate_plane(&field, nv, 3)?,
                coordinate_plane(&field, nv, 4)?,
                Hyperplane::from_coeffs(&l3)?,
            ]
        }
    };
    for (p, h) in points.iter().zip(planes.iter()) {
        let triple = triple_at_star(&x, p)?;
        if triple.plane() != h {
            return Err(Error::Assertion(String::from(
                "extremal member has an unexpected tangent plane",
            )));
        }
    }
    let (dim_indep, dim_dep) = extremal_dimensions(d, n);
    Ok(ExtremalReport {
        hypersurface: x,
        points,
        planes,
        case,
        dim_indep,
        dim_dep,
        relation_holds: extremal_relation_holds(d, n),
    })
}

// ---------------------------------------------------------------------------
// Shared input helpers
// ---------------------------------------------------------------------------

fn unit_point(field: &CycloField, nv: usize, i: usize) -> Result<ProjPoint> {
    let mut c = vec![field.zero(); nv];
    c[i] = field.one();
    ProjPoint::new(c)
}

fn coordinate_plane(field: &CycloField, nv: usize, i: usize) -> Result<Hyperplane> {
    let mut c = vec![field.zero(); nv];
    c[i] = field.one();
    Hyperplane::from_coeffs(&c)
}

fn check_part(
    part: &MultiPoly,
    field: &CycloField,
    nv: usize,
    degree: i64,
    forbidden: &[usize],
) -> Result<()> {
    if part.is_zero() {
        return Ok(());
    }
    if part.field().conductor() != field.conductor() {
        return Err(Error::FieldMismatch {
            left: part.field().conductor(),
            right: field.conductor(),
        });
    }
    if part.nvars() != nv {
        return Err(Error::ShapeViolation(String::from(
            "coefficient part lives in the wrong ambient space",
        )));
    }
    if degree < 0 || part.homogeneous_degree() != Some(degree as u32) {
        return Err(Error::DegreeMismatch);
    }
    for &v in forbidden {
        if part.uses_variable(v) {
            return Err(Error::ShapeViolation(format!(
                "coefficient part uses the reserved variable X_{}",
                v
            )));
        }
    }
    Ok(())
}

/// Dense polynomial of the given degree supported on the allowed
/// variables, every kept coefficient a nonzero small integer drawn from
/// the deterministic stream.  Negative degree yields zero.
fn seeded_poly(
    field: &CycloField,
    nvars: usize,
    degree: i64,
    allowed: &[usize],
    rng: &mut DetRng,
) -> MultiPoly {
    if degree < 0 {
        return MultiPoly::zero(field, nvars);
    }
    let mut terms = Vec::new();
    for m in monomials_of_degree(nvars, degree as u32) {
        if (0..nvars).all(|i| m.exp(i) == 0 || allowed.contains(&i)) {
            terms.push((m, field.from_int(rng.nonzero_int(3))));
        }
    }
    MultiPoly::from_terms(field, nvars, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configspace::{expected_codim, is_suited, parameter_space_dim};
    use crate::geometry::multiplicity_at;
    use crate::starpoint::{forced_dth_star, star_points_on_line};

    fn q() -> CycloField {
        CycloField::new(1).expect("rational field")
    }

    fn pt(field: &CycloField, ints: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(field, ints).expect("valid point")
    }

    fn plane(field: &CycloField, ints: &[i64]) -> Hyperplane {
        let coeffs: Vec<CycloNum> = ints.iter().map(|&k| field.from_int(k)).collect();
        Hyperplane::from_coeffs(&coeffs).expect("valid plane")
    }

    fn assert_stars(x: &Hypersurface, points: &[ProjPoint], planes: &[Hyperplane]) {
        for (p, h) in points.iter().zip(planes.iter()) {
            let verdict = is_star_point(x, p).expect("marked point is smooth on the member");
            assert!(verdict.is_star, "marked point is not a star point");
            assert_eq!(&verdict.tangent, h, "tangent plane mismatch");
        }
    }

    #[test]
    fn fermat_star_census_counts() {
        for (d, n, want) in [(3, 2, 9), (3, 3, 18), (4, 3, 24), (3, 4, 30)] {
            let (x, points) = build_fermat(d, n).expect("diagonal member");
            assert_eq!(points.len(), want);
            for i in 0..points.len() {
                assert!(x.contains(&points[i]).unwrap());
                for j in (i + 1)..points.len() {
                    assert_ne!(points[i], points[j]);
                }
            }
        }
    }

    #[test]
    fn fermat_cubic_surface_points_are_stars() {
        let (x, points) = build_fermat(3, 3).expect("diagonal member");
        for p in &points {
            let verdict = is_star_point(&x, p).expect("smooth point");
            assert!(verdict.is_star);
        }
    }

    #[test]
    fn expected_dims_match_parameter_counts() {
        for n in 3..=5 {
            for d in 3..=6u32 {
                let three = parameter_space_dim(n, d, 3) as i64 - expected_codim(n, d, 3) as i64;
                assert_eq!(expected_three_point_dim(d, n), three, "d={} n={}", d, n);
                let two = parameter_space_dim(n, d, 2) as i64 - expected_codim(n, d, 2) as i64;
                assert_eq!(expected_two_point_dim(d, n), two, "d={} n={}", d, n);
            }
        }
    }

    #[test]
    fn vt_dimension_branches_agree_with_strip_sum() {
        // At n = 3 the branch formulas coincide with the general strip sum
        // 6n + sum_j C(n+d-3-j, n-3) - 5 over exponents j = 0, theta, ...
        for d in 3..=8u32 {
            for base in [d, d - 1] {
                for theta in 2..=base {
                    if base % theta != 0 {
                        continue;
                    }
                    let strip_count = (d / theta + 1) as i64;
                    assert_eq!(
                        vt_dimension(d, 3, theta),
                        13 + strip_count,
                        "d={} theta={}",
                        d,
                        theta
                    );
                }
            }
        }
    }

    #[test]
    fn component_table_cubic_surfaces() {
        let table = component_table(3, 3).expect("catalogue");
        assert_eq!(table.len(), 4);
        let dims: Vec<i64> = table.iter().map(|l| l.dimension).collect();
        assert_eq!(dims, vec![15, 15, 15, 16]);
        let field = CycloField::new(6).expect("conductor 6");
        match &table[0].kind {
            ComponentKind::Vt { t, order } => {
                assert_eq!(*order, 3);
                assert_eq!(*t, field.zeta_pow(2));
            }
            other => panic!("unexpected kind {:?}", other),
        }
        match &table[2].kind {
            ComponentKind::Vt { t, order } => {
                assert_eq!(*order, 2);
                assert_eq!(*t, field.from_int(-1));
            }
            other => panic!("unexpected kind {:?}", other),
        }
        assert_eq!(table[3].kind, ComponentKind::V1);
        let flags: Vec<bool> = table.iter().map(|l| l.is_expected).collect();
        assert_eq!(flags, vec![true, true, true, false]);
    }

    #[test]
    fn component_table_quartic_surfaces() {
        let table = component_table(4, 3).expect("catalogue");
        assert_eq!(table.len(), 6);
        let dims: Vec<i64> = table.iter().map(|l| l.dimension).collect();
        // Order: theta = 2 (t = -1), theta = 4 (t = +-i), theta = 3.
        assert_eq!(dims, vec![16, 15, 15, 15, 15, 17]);
        let expected_count = table.iter().filter(|l| l.is_expected).count() as u64;
        assert_eq!(expected_count, euler_phi(4) + euler_phi(3));
        assert_eq!(table[5].kind, ComponentKind::V1);
    }

    #[test]
    fn component_table_census() {
        for d in 3..=10u32 {
            for n in [3usize, 4] {
                let table = component_table(d, n).expect("catalogue");
                assert_eq!(table.len(), (2 * d - 2) as usize, "d={} n={}", d, n);
                let expected_count = table.iter().filter(|l| l.is_expected).count() as u64;
                let want = if n == 3 {
                    euler_phi(d as u64) + euler_phi(d as u64 - 1)
                } else {
                    euler_phi(d as u64)
                };
                assert_eq!(expected_count, want, "d={} n={}", d, n);
                for l in &table {
                    assert!(
                        l.dimension >= l.expected_dimension,
                        "family below the expected dimension at d={} n={}",
                        d,
                        n
                    );
                    assert_eq!(l.is_expected, l.dimension == l.expected_dimension);
                }
            }
        }
    }

    #[test]
    fn tridiag_small_examples() {
        let field = CycloField::new(3).expect("conductor 3");
        let omega = field.zeta_pow(1);
        let report = tridiag_solve(3, &omega).expect("strip system");
        assert!(report.determinant.is_zero());
        let sol = report.solution.expect("kernel vector");
        assert_eq!(sol.len(), 2);
        assert_eq!(sol[0], field.one());
        assert_eq!(sol[1], field.one().add_ref(&omega));

        let qf = q();
        let minus_one = qf.from_int(-1);
        let report = tridiag_solve(2, &minus_one).expect("strip system");
        assert!(report.determinant.is_zero());
        assert_eq!(report.solution.expect("kernel vector"), vec![qf.one()]);

        let two = qf.from_int(2);
        let report = tridiag_solve(4, &two).expect("strip system");
        assert_eq!(report.determinant, qf.from_int(15));
        assert!(report.solution.is_none());

        let one = qf.one();
        let report = tridiag_solve(4, &one).expect("strip system");
        assert_eq!(report.determinant, qf.from_int(4));
        assert!(report.solution.is_none());
    }

    #[test]
    fn tridiag_determinant_symbolic() {
        for j in 2..=8usize {
            let (det, geometric) = tridiag_determinant_poly(j).expect("symbolic determinant");
            assert_eq!(det, geometric, "strip determinant at exponent {}", j);
        }
    }

    #[test]
    fn tridiag_numeric_census() {
        let field = CycloField::new(12).expect("conductor 12");
        for j in 2..=8usize {
            for k in 0..12i64 {
                let t = field.zeta_pow(k);
                let report = tridiag_solve(j, &t).expect("strip system");
                // Determinant equals the geometric sum.
                let mut sum = field.zero();
                let mut power = field.one();
                for _ in 0..j {
                    sum = sum.add_ref(&power);
                    power = power.mul_ref(&t);
                }
                assert_eq!(report.determinant, sum);
                let order = t.multiplicative_order(12).expect("root of unity");
                let kernel_expected = order > 1 && j % (order as usize) == 0;
                assert_eq!(report.solution.is_some(), kernel_expected, "j={} k={}", j, k);
                if let Some(sol) = report.solution {
                    // Cross-check against the generic nullspace routine.
                    let m = tridiag_matrix(j, &t).expect("matrix");
                    let kernel = m.nullspace().expect("nullspace");
                    assert_eq!(kernel.len(), 1);
                    assert_eq!(kernel[0], sol);
                    let image = m.mul_vec(&sol).expect("product");
                    assert!(image.iter().all(|x| x.is_zero()));
                }
            }
        }
        let field5 = CycloField::new(5).expect("conductor 5");
        let t5 = field5.zeta_pow(1);
        for j in 2..=8usize {
            let report = tridiag_solve(j, &t5).expect("strip system");
            assert_eq!(report.solution.is_some(), j == 5, "j={}", j);
        }
    }

    #[test]
    fn case1_exponent_strips() {
        assert_eq!(case1_exponents(3, 3), vec![0, 3]);
        assert_eq!(case1_exponents(3, 2), vec![0, 2]);
        assert_eq!(case1_exponents(4, 2), vec![0, 2, 4]);
        assert_eq!(case1_exponents(5, 4), vec![0, 4]);
    }

    #[test]
    fn case1_member_order_two() {
        let field = q();
        let t = field.from_int(-1);
        let (a, g012) = seeded_case1_params(&field, 3, 3, 2, 7);
        let x = build_case1(3, 3, &t, &a, &g012).expect("member");
        let (points, planes) = case1_frame(&t, 3).expect("frame");
        assert_stars(&x, &points, &planes);
        let config = configuration_at(&x, &points).expect("configuration");
        let label = classify_three(&config).expect("classification");
        assert_eq!(
            label.kind,
            ComponentKind::Vt {
                t: t.clone(),
                order: 2
            }
        );
        assert_eq!(label.dimension, 15);
        assert!(label.is_expected);
    }

    #[test]
    fn case1_member_order_three() {
        let field = CycloField::new(3).expect("conductor 3");
        let t = field.zeta_pow(1);
        let (a, g012) = seeded_case1_params(&field, 3, 3, 3, 11);
        let x = build_case1(3, 3, &t, &a, &g012).expect("member");
        let (points, planes) = case1_frame(&t, 3).expect("frame");
        assert_stars(&x, &points, &planes);
        let config = configuration_at(&x, &points).expect("configuration");
        let label = classify_three(&config).expect("classification");
        match &label.kind {
            ComponentKind::Vt { t: got, order } => {
                assert_eq!(got, &t);
                assert_eq!(*order, 3);
            }
            other => panic!("unexpected kind {:?}", other),
        }
        assert_eq!(label.dimension, 15);
        assert!(label.is_expected);
        // The attached linear system on the instance.
        let system = vd_basis(&config);
        assert_eq!(system.projective_dim, bin(3 + 3 - 3, 3));
        let report = is_suited(&config).expect("suitedness");
        assert!(report.suited);
    }

    #[test]
    fn case1_member_in_p4() {
        let field = CycloField::new(3).expect("conductor 3");
        let t = field.zeta_pow(1);
        let (a, g012) = seeded_case1_params(&field, 3, 4, 3, 13);
        let x = build_case1(3, 4, &t, &a, &g012).expect("member");
        let (points, planes) = case1_frame(&t, 4).expect("frame");
        assert_stars(&x, &points, &planes);
        let config = configuration_at(&x, &points).expect("configuration");
        let label = classify_three(&config).expect("classification");
        assert_eq!(label.dimension, 24);
        assert_eq!(label.expected_dimension, 24);
        assert!(label.is_expected);
    }

    #[test]
    fn case1_rejects_non_roots() {
        let field = q();
        let nv = 4;
        let a: Vec<MultiPoly> = vec![MultiPoly::zero(&field, nv); 2];
        let g = MultiPoly::constant(&field, nv, field.one());
        for t in [field.one(), field.from_int(2)] {
            match build_case1(3, 3, &t, &a, &g) {
                Err(Error::NotRootOfUnity) => {}
                other => panic!("expected NotRootOfUnity, got {:?}", other),
            }
        }
        let field5 = CycloField::new(5).expect("conductor 5");
        let t5 = field5.zeta_pow(1);
        let a5: Vec<MultiPoly> = vec![MultiPoly::zero(&field5, nv); 2];
        let g5 = MultiPoly::constant(&field5, nv, field5.one());
        match build_case1(3, 3, &t5, &a5, &g5) {
            Err(Error::NotRootOfUnity) => {}
            other => panic!("expected NotRootOfUnity, got {:?}", other),
        }
    }

    #[test]
    fn case1_zero_strips_degenerate_to_a_cone() {
        let field = q();
        let nv = 4;
        let t = field.from_int(-1);
        let a: Vec<MultiPoly> = vec![MultiPoly::zero(&field, nv); 2];
        let g012 = MultiPoly::constant(&field, nv, field.one());
        let x = build_case1(3, 3, &t, &a, &g012).expect("degenerate member");
        // Every monomial lies in the ideal (X0*X1, X3^2).
        for (m, _) in x.equation().terms() {
            assert!(
                (m.exp(0) >= 1 && m.exp(1) >= 1) || m.exp(3) >= 2,
                "monomial {:?} escapes the degeneration ideal",
                m.exps()
            );
        }
        // And the member is singular where the ideal vanishes.
        let p = pt(&field, &[0, 0, 1, 0]);
        assert!(multiplicity_at(x.equation(), &p).expect("multiplicity") >= 2);
    }

    #[test]
    fn fermat_triples_follow_first_transition_law() {
        let (x, _) = build_fermat(3, 3).expect("diagonal member");
        let field = samples::fermat_field(3);
        let zeta = samples::primitive_2d_root(&field, 3).expect("sixth root");
        let xi = |r: u32| zeta.pow((2 * r + 1) as i64).expect("odd power");
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
                    .unwrap();
                    let p2 = ProjPoint::new(vec![
                        field.one(),
                        xi(r2),
                        field.zero(),
                        field.zero(),
                    ])
                    .unwrap();
                    let p3 = ProjPoint::new(vec![
                        field.one(),
                        field.zero(),
                        xi(r3),
                        field.zero(),
                    ])
                    .unwrap();
                    let config = configuration_at(&x, &[p1, p2, p3]).expect("configuration");
                    let label = classify_three(&config).expect("classification");
                    let want = xi(r1).checked_div(&xi(r2)).unwrap();
                    match &label.kind {
                        ComponentKind::Vt { t, .. } => assert_eq!(t, &want),
                        other => panic!("unexpected kind {:?}", other),
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_triples_follow_second_transition_law() {
        let (x, _) = build_fermat(3, 3).expect("diagonal member");
        let field = samples::fermat_field(3);
        let zeta = samples::primitive_2d_root(&field, 3).expect("sixth root");
        let xi = |r: u32| zeta.pow((2 * r + 1) as i64).expect("odd power");
        for r1 in 0..3u32 {
            for r2 in 0..3u32 {
                for r3 in 0..3u32 {
                    let p1 = ProjPoint::new(vec![
                        field.one(),
                        xi(r1),
                        field.zero(),
                        field.zero(),
                    ])
                    .unwrap();
                    let p2 = ProjPoint::new(vec![
                        field.one(),
                        field.zero(),
                        xi(r2),
                        field.zero(),
                    ])
                    .unwrap();
                    let p3 = ProjPoint::new(vec![
                        field.zero(),
                        field.one(),
                        xi(r3),
                        field.zero(),
                    ])
                    .unwrap();
                    let config = configuration_at(&x, &[p1, p2, p3]).expect("configuration");
                    let label = classify_three(&config).expect("classification");
                    let ratio = xi(r2)
                        .checked_div(&xi(r1).checked_mul(&xi(r3)).unwrap())
                        .unwrap();
                    let want = ratio.checked_mul(&ratio).unwrap();
                    if want == field.one() {
                        assert_eq!(label.kind, ComponentKind::V1, "r=({},{},{})", r1, r2, r3);
                    } else {
                        match &label.kind {
                            ComponentKind::Vt { t, .. } => assert_eq!(t, &want),
                            other => panic!("unexpected kind {:?}", other),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classify_rejects_repeated_data() {
        let (x, points) = build_fermat(3, 3).expect("diagonal member");
        let config =
            configuration_at(&x, &[points[0].clone(), points[0].clone(), points[1].clone()])
                .expect("configuration");
        match classify_three(&config) {
            Err(Error::DegenerateTriple) => {}
            other => panic!("expected DegenerateTriple, got {:?}", other),
        }
    }

    /// A good cone through `vertex` inside `plane`: a product of `d`
    /// pairwise distinct linear forms vanishing at the vertex, chosen so
    /// their restrictions to the plane stay pairwise distinct.
    fn synthetic_cone(
        field: &CycloField,
        plane: &Hyperplane,
        vertex: &ProjPoint,
        d: u32,
    ) -> MultiPoly {
        let nv = vertex.num_coords();
        let vanishing =
            ExactMatrix::from_rows(&field.zero(), vec![vertex.coords().to_vec()])
                .unwrap()
                .nullspace()
                .unwrap();
        // Keep two independent forms whose chart restrictions stay
        // independent: skip any form proportional to the plane's own.
        let lp = plane.coefficients();
        let mut kept: Vec<Vec<CycloNum>> = Vec::new();
        for cand in vanishing {
            if kept.len() == 2 {
                break;
            }
            let mut rows = vec![lp.clone()];
            rows.extend(kept.iter().cloned());
            rows.push(cand.clone());
            let rank = ExactMatrix::from_rows(&field.zero(), rows.clone())
                .unwrap()
                .rank();
            if rank == kept.len() + 2 {
                kept.push(cand);
            }
        }
        assert_eq!(kept.len(), 2, "vertex admits two independent chart forms");
        let form = |coeffs: &[CycloNum]| -> MultiPoly {
            let mut f = MultiPoly::zero(field, nv);
            for (i, c) in coeffs.iter().enumerate() {
                f = f.add(&MultiPoly::variable(field, nv, i).scale(c));
            }
            f
        };
        let mu = form(&kept[0]);
        let nu = form(&kept[1]);
        let mut cone = MultiPoly::constant(field, nv, field.one());
        for k in 0..d {
            cone = cone.mul(&mu.add(&nu.scale(&field.from_int(k as i64))));
        }
        cone
    }

    fn synthetic_config(
        field: &CycloField,
        data: &[(ProjPoint, Hyperplane)],
        d: u32,
    ) -> Configuration {
        let triples: Vec<_> = data
            .iter()
            .map(|(p, h)| {
                let cone = synthetic_cone(field, h, p, d);
                validate_triple(h, p, &cone, d as usize).expect("synthetic triple")
            })
            .collect();
        Configuration::new(triples).expect("configuration")
    }

    #[test]
    fn classify_one_way_incidence_is_not_suited() {
        let field = q();
        // P2 lies on the first plane, but P1 is off the second: a one-way
        // incidence pattern.
        let data = vec![
            (pt(&field, &[1, 0, 0, 0]), plane(&field, &[0, 1, 0, 0])),
            (pt(&field, &[0, 0, 1, 0]), plane(&field, &[1, 0, 0, 1])),
            (pt(&field, &[1, 1, 1, 1]), plane(&field, &[1, -1, 2, -2])),
        ];
        let config = synthetic_config(&field, &data, 3);
        let label = classify_three(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::NotSuited);
        assert_eq!(label.dimension, -1);
        assert!(!label.is_expected);
    }

    #[test]
    fn classify_full_incidence_on_a_surface_is_not_suited() {
        let field = q();
        // Three collinear points with all planes through their line: every
        // incidence holds, but no smooth surface carries the pattern.
        let data = vec![
            (pt(&field, &[1, 0, 0, 0]), plane(&field, &[0, 0, 1, 0])),
            (pt(&field, &[0, 1, 0, 0]), plane(&field, &[0, 0, 0, 1])),
            (pt(&field, &[1, 1, 0, 0]), plane(&field, &[0, 0, 1, -1])),
        ];
        let config = synthetic_config(&field, &data, 3);
        let label = classify_three(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::NotSuited);
    }

    #[test]
    fn order_five_value_is_not_suited() {
        let field = CycloField::new(5).expect("conductor 5");
        let t = field.zeta_pow(1);
        // The canonical frame for the one-parameter family at a value
        // whose order divides neither d nor d-1.
        let tm1 = t.checked_sub(&field.one()).unwrap();
        let p3 = ProjPoint::new(vec![
            field.from_int(-1),
            t.clone(),
            tm1,
            field.zero(),
        ])
        .unwrap();
        let l3 = {
            let coeffs = vec![field.one(), field.one(), field.from_int(-1), field.zero()];
            Hyperplane::from_coeffs(&coeffs).unwrap()
        };
        let data = vec![
            (pt(&field, &[1, 0, 0, 0]), plane(&field, &[0, 1, 0, 0])),
            (pt(&field, &[0, 1, 0, 0]), plane(&field, &[1, 0, 0, 0])),
            (p3, l3),
        ];
        let config = synthetic_config(&field, &data, 3);
        let label = classify_three(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::NotSuited);
        let report = is_suited(&config).expect("suitedness");
        assert!(!report.suited, "order-five value admits no suited member");
    }

    #[test]
    fn intermediate_member_certified() {
        for d in [3u32, 4] {
            let field = q();
            let (b, g013) = seeded_intermediate_params(&field, d, 3, 17);
            let report = build_intermediate(d, 3, &b, &g013).expect("member");
            assert_stars(&report.hypersurface, &report.points, &report.planes);
            assert_eq!(report.dimension, 12 + d as i64);
            assert_eq!(report.fiber_dim, bin(3 + d as i64 - 3, 3));
            let config =
                configuration_at(&report.hypersurface, &report.points).expect("configuration");
            let label = classify_three(&config).expect("classification");
            assert_eq!(label.kind, ComponentKind::Intermediate);
            assert_eq!(label.dimension, 12 + d as i64);
        }
    }

    #[test]
    fn intermediate_dimension_census() {
        for d in 3..=8u32 {
            assert_eq!(intermediate_dimension(d, 3), 12 + d as i64);
        }
        assert_eq!(intermediate_dimension(3, 4), 25);
        assert!(intermediate_dimension(3, 4) >= expected_three_point_dim(3, 4));
    }

    #[test]
    fn extremal_dimension_examples() {
        assert_eq!(extremal_dimensions(5, 5), (116, 116));
        let (i6, d6) = extremal_dimensions(6, 5);
        assert_eq!((i6, d6), (199, 203));
        assert!(d6 > i6);
        for d in 3..=8u32 {
            for n in 5..=7usize {
                assert!(extremal_relation_holds(d, n), "d={} n={}", d, n);
                let (li, ld) = extremal_dimensions(d, n);
                let (ci, cd) = extremal_config_dimensions(d, n);
                let fiber = bin(n as i64 + d as i64 - 3, n as i64);
                assert_eq!(li - ci, fiber);
                assert_eq!(ld - cd, fiber);
            }
        }
        match build_extremal(5, 4, ExtremalCase::Indep, 1) {
            Err(Error::AmbientTooSmall) => {}
            other => panic!("expected AmbientTooSmall, got {:?}", other),
        }
    }

    #[test]
    fn extremal_members_certified() {
        for (d, n) in [(3u32, 5usize), (5, 5)] {
            for case in [ExtremalCase::Indep, ExtremalCase::Dep] {
                let report = build_extremal(d, n, case, 23).expect("member");
                assert_stars(&report.hypersurface, &report.points, &report.planes);
                let config = configuration_at(&report.hypersurface, &report.points)
                    .expect("configuration");
                let label = classify_three(&config).expect("classification");
                let want = match case {
                    ExtremalCase::Indep => ComponentKind::ExtremalIndep,
                    ExtremalCase::Dep => ComponentKind::ExtremalDep,
                };
                assert_eq!(label.kind, want, "d={} n={} case={:?}", d, n, case);
                let (ci, cd) = extremal_config_dimensions(d, n);
                let want_dim = match case {
                    ExtremalCase::Indep => ci,
                    ExtremalCase::Dep => cd,
                };
                assert_eq!(label.dimension, want_dim);
                if (d, n) == (5, 5) {
                    assert_eq!(report.dim_indep, 116);
                    assert_eq!(report.dim_dep, 116);
                    assert!(report.relation_holds);
                }
            }
        }
    }

    #[test]
    fn two_point_general_normal_form() {
        let (x, _) = build_fermat(3, 3).expect("diagonal member");
        let field = samples::fermat_field(3);
        let zeta = samples::primitive_2d_root(&field, 3).expect("sixth root");
        let p1 = ProjPoint::new(vec![field.one(), zeta.clone(), field.zero(), field.zero()])
            .unwrap();
        let p2 = ProjPoint::new(vec![
            field.one(),
            zeta.pow(3).unwrap(),
            field.zero(),
            field.zero(),
        ])
        .unwrap();
        let config = configuration_at(&x, &[p1, p2]).expect("configuration");
        let label = classify_two(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::TwoGeneral);
        assert!(label.is_expected);
        let nf = normal_form_two(&config).expect("normal form");
        assert_eq!(nf.projective_dim, bin(3 + 3 - 2, 3));
        match &nf.shape {
            TwoPointShape::General { h, g } => {
                assert!(!g.is_zero());
                assert!(!g.uses_variable(0) && !g.uses_variable(1));
                assert!(!h.is_zero());
            }
            other => panic!("unexpected shape {:?}", other),
        }
        assert!(nf.shape.reassemble().sub(&nf.witness).is_zero());
    }

    #[test]
    fn two_point_line_normal_form() {
        let field = q();
        let x = samples::quartic_fixture(&field);
        let points = samples::quartic_fixture_stars(&field);
        let config = configuration_at(&x, &points).expect("configuration");
        let label = classify_two(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::TwoLineInX);
        assert_eq!(label.dimension, 2 * (4 + 3));
        let nf = normal_form_two(&config).expect("normal form");
        assert_eq!(nf.projective_dim, bin(4 + 1, 3) + 1);
        match &nf.shape {
            TwoPointShape::LineInX { g2, g3, g, .. } => {
                assert!(!g2.uses_variable(1) && !g2.uses_variable(3));
                assert!(!g3.uses_variable(0) && !g3.uses_variable(2));
                for v in 0..4 {
                    assert!(!g.uses_variable(v));
                }
            }
            other => panic!("unexpected shape {:?}", other),
        }
        assert!(nf.shape.reassemble().sub(&nf.witness).is_zero());
    }

    #[test]
    fn direct_decompositions_return_parts_verbatim() {
        let field = q();
        let nv = 4;
        let v = |i: usize| MultiPoly::variable(&field, nv, i);
        // f = X0*X1*h + g with h = X0 + 5*X1 + X2, g = X2^3 + X3^3.
        let h = v(0).add(&v(1).scale(&field.from_int(5))).add(&v(2));
        let g = v(2).pow(3).add(&v(3).pow(3));
        let f = v(0).mul(&v(1)).mul(&h).add(&g);
        let (h2, g2) = decompose_two_general(&f).expect("split");
        assert!(h2.sub(&h).is_zero());
        assert!(g2.sub(&g).is_zero());
        // The line shape, parts chosen inside their allowed variables.
        let h = v(0).add(&v(1));
        let p2 = v(0).mul(&v(0)).add(&v(2).mul(&v(0)));
        let p3 = v(1).mul(&v(3));
        let f = v(2)
            .mul(&v(3))
            .mul(&h)
            .add(&v(2).mul(&p2))
            .add(&v(3).mul(&p3));
        let (h2, q2, q3, q) = decompose_two_line_in_x(&f).expect("split");
        assert!(h2.sub(&h).is_zero());
        assert!(q2.sub(&p2).is_zero());
        assert!(q3.sub(&p3).is_zero());
        assert!(q.is_zero());
        // A mixed monomial violates the shape.
        let bad = v(2).mul(&v(1)).mul(&v(1)).add(&v(3).pow(3));
        assert!(matches!(
            decompose_two_line_in_x(&bad),
            Err(Error::ShapeViolation(_))
        ));
    }

    #[test]
    fn two_point_one_way_incidence_rejected() {
        let field = q();
        let data = vec![
            (pt(&field, &[1, 0, 0, 0]), plane(&field, &[0, 1, 0, 0])),
            (pt(&field, &[0, 0, 1, 0]), plane(&field, &[1, 0, 0, 1])),
        ];
        let config = synthetic_config(&field, &data, 3);
        let label = classify_two(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::NotSuited);
        match normal_form_two(&config) {
            Err(Error::NotSuited) => {}
            other => panic!("expected NotSuited, got {:?}", other),
        }
    }

    #[test]
    fn collinear_cubic_surface_family() {
        let field = q();
        let line = ProjLine::new(pt(&field, &[1, 0, 0, 0]), pt(&field, &[0, 1, 0, 0]))
            .expect("line");
        let points = vec![
            pt(&field, &[1, 0, 0, 0]),
            pt(&field, &[0, 1, 0, 0]),
            pt(&field, &[1, 1, 0, 0]),
        ];
        let planes = vec![
            plane(&field, &[0, 1, 0, 0]),
            plane(&field, &[1, 0, 0, 0]),
            plane(&field, &[1, -1, 1, 0]),
        ];
        let v = |i: usize| MultiPoly::variable(&field, 4, i);
        let c1 = v(2).pow(3).add(&v(3).pow(3));
        let x = build_collinear(3, 3, &line, &points, &planes, &c1).expect("member");
        assert_stars(&x, &points, &planes);
        // The forced remaining star on the line.
        let (third, verdict) =
            forced_dth_star(&x, &line, &points[..2]).expect("forced point");
        assert_eq!(third, points[2]);
        assert!(verdict.is_star);
        let census = star_points_on_line(&x, &line);
        assert!(!census.line_in_x);
        let stars = census
            .intersections
            .iter()
            .filter(|i| i.verdict.as_ref().map(|v| v.is_star).unwrap_or(false))
            .count();
        assert_eq!(stars, 3);
        // Three collinear stars in general position land in V_1.
        let config = configuration_at(&x, &points).expect("configuration");
        let label = classify_three(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::V1);
        assert_eq!(label.dimension, 16);
    }

    #[test]
    fn collinear_quartic_surface_family() {
        let field = q();
        let line = ProjLine::new(pt(&field, &[1, 0, 0, 0]), pt(&field, &[0, 1, 0, 0]))
            .expect("line");
        let points = vec![
            pt(&field, &[1, 0, 0, 0]),
            pt(&field, &[0, 1, 0, 0]),
            pt(&field, &[1, 1, 0, 0]),
            pt(&field, &[1, -1, 0, 0]),
        ];
        let planes = vec![
            plane(&field, &[0, 1, 0, 0]),
            plane(&field, &[1, 0, 0, 0]),
            plane(&field, &[1, -1, 1, 0]),
            plane(&field, &[1, 1, 0, 1]),
        ];
        let v = |i: usize| MultiPoly::variable(&field, 4, i);
        let c1 = v(2).pow(4).add(&v(3).pow(4));
        let x = build_collinear(4, 3, &line, &points, &planes, &c1).expect("member");
        assert_stars(&x, &points, &planes);
        let config = configuration_at(&x, &points[..3]).expect("configuration");
        let label = classify_three(&config).expect("classification");
        assert_eq!(label.kind, ComponentKind::V1);
        assert_eq!(label.dimension, v1_dimension(4, 3));
    }

    #[test]
    fn collinear_matches_diagonal_line_data() {
        // The diagonal cubic's line x2 = x3 = 0 carries three stars; the
        // collinear builder reproduces a member from that data.
        let (x, _) = build_fermat(3, 3).expect("diagonal member");
        let field = samples::fermat_field(3);
        let zeta = samples::primitive_2d_root(&field, 3).expect("sixth root");
        let line = ProjLine::new(
            ProjPoint::from_ints(&field, &[1, 0, 0, 0]).unwrap(),
            ProjPoint::from_ints(&field, &[0, 1, 0, 0]).unwrap(),
        )
        .expect("line");
        let mut points = Vec::new();
        let mut planes = Vec::new();
        for r in 0..3u32 {
            let xi = zeta.pow((2 * r + 1) as i64).unwrap();
            let p = ProjPoint::new(vec![field.one(), xi, field.zero(), field.zero()]).unwrap();
            let verdict = is_star_point(&x, &p).expect("diagonal star");
            points.push(p);
            planes.push(verdict.tangent);
        }
        let v = |i: usize| MultiPoly::variable(&field, 4, i);
        let c1 = v(2).pow(3).add(&v(3).pow(3));
        let member =
            build_collinear(3, 3, &line, &points, &planes, &c1).expect("member from line data");
        assert_stars(&member, &points, &planes);
    }

    #[test]
    fn collinear_rejects_bad_input() {
        let field = q();
        let line = ProjLine::new(pt(&field, &[1, 0, 0, 0]), pt(&field, &[0, 1, 0, 0]))
            .expect("line");
        let v = |i: usize| MultiPoly::variable(&field, 4, i);
        let c1 = v(2).pow(3).add(&v(3).pow(3));
        let good_points = vec![
            pt(&field, &[1, 0, 0, 0]),
            pt(&field, &[0, 1, 0, 0]),
            pt(&field, &[1, 1, 0, 0]),
        ];
        let good_planes = vec![
            plane(&field, &[0, 1, 0, 0]),
            plane(&field, &[1, 0, 0, 0]),
            plane(&field, &[1, -1, 1, 0]),
        ];
        // A point off the line.
        let mut bad = good_points.clone();
        bad[2] = pt(&field, &[1, 1, 1, 0]);
        assert!(matches!(
            build_collinear(3, 3, &line, &bad, &good_planes, &c1),
            Err(Error::ShapeViolation(_))
        ));
        // Repeated points.
        let mut bad = good_points.clone();
        bad[2] = bad[0].clone();
        assert!(matches!(
            build_collinear(3, 3, &line, &bad, &good_planes, &c1),
            Err(Error::RootsNotDistinct)
        ));
        // A plane missing its point.
        let mut bad = good_planes.clone();
        bad[2] = plane(&field, &[1, 1, 1, 0]);
        assert!(matches!(
            build_collinear(3, 3, &line, &good_points, &bad, &c1),
            Err(Error::VertexNotOnPlane)
        ));
    }

    #[test]
    fn euler_phi_is_reexported() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(12), 4);
    }
}
