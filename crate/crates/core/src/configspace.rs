//! Configurations of star-point triples (plane, vertex, cone), the linear
//! system `V_d(L)` of degree-`d` forms carving each cone out of its plane,
//! suitedness with a deterministic witness search, dimension reports for
//! the system and its restriction to a hyperplane, extension candidates at
//! a new plane/vertex pair, and the expected codimension of configuration
//! loci in the parameter space of triples.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::multipoly::monomials_of_degree;
use crate::algebra::{binomial, CycloField, CycloNum, ExactMatrix, MultiPoly, Scalar};
use crate::geometry::{
    completion_matrix, is_good_cone, multiplicity_at, Chart, ConeVerdict, Hyperplane,
    Hypersurface, ProjPoint,
};
use crate::starpoint::is_star_point;
use crate::{Error, Result};

/// Seed of the deterministic suitedness witness search, recorded in every
/// report so runs are reproducible.
pub const SUITED_SEED: u64 = 0x5717_AB1E_D00D_0001;

/// A star-point triple: a hyperplane, a vertex on it, and a degree-`d`
/// cone with that vertex inside the hyperplane.  The cone is stored in the
/// canonical chart of the plane, normalized to leading coefficient one.
#[derive(Clone, Debug, PartialEq)]
pub struct StarTriple {
    plane: Hyperplane,
    vertex: ProjPoint,
    cone: MultiPoly,
    degree: usize,
    verdict: ConeVerdict,
}

impl StarTriple {
    pub fn plane(&self) -> &Hyperplane {
        &self.plane
    }

    pub fn vertex(&self) -> &ProjPoint {
        &self.vertex
    }

    /// The cone equation in the canonical chart of the plane (one variable
    /// fewer than the ambient space), with leading coefficient one.
    pub fn cone(&self) -> &MultiPoly {
        &self.cone
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cone_verdict(&self) -> ConeVerdict {
        self.verdict
    }

    pub fn chart(&self) -> Chart {
        self.plane.chart()
    }

    /// The cone equation pushed back to ambient coordinates.
    pub fn ambient_cone(&self) -> MultiPoly {
        self.plane.chart().embed_poly(&self.cone)
    }

    pub fn field(&self) -> &CycloField {
        self.vertex.field()
    }

    /// Ambient projective dimension `N`.
    pub fn ambient_dim(&self) -> usize {
        self.vertex.ambient_dim()
    }
}

/// Checks all triple invariants and builds the normalized [`StarTriple`].
/// The cone may be given in ambient variables (it is restricted through
/// the plane's chart) or directly in the chart's variables.
///
/// Errors: `VertexNotOnPlane`; `NotACone` when the restricted form does
/// not have full multiplicity at the vertex; `BadCone` when the cone is
/// singular outside the vertex; `WrongDegree` on a degree mismatch.
pub fn validate_triple(
    plane: &Hyperplane,
    vertex: &ProjPoint,
    cone: &MultiPoly,
    degree: usize,
) -> Result<StarTriple> {
    if plane.num_vars() != vertex.num_coords() {
        return Err(Error::ShapeViolation(String::from(
            "plane and vertex live in different spaces",
        )));
    }
    if plane.field().conductor() != vertex.field().conductor()
        || plane.field().conductor() != cone.field().conductor()
    {
        return Err(Error::FieldMismatch {
            left: plane.field().conductor(),
            right: vertex.field().conductor(),
        });
    }
    if !plane.contains(vertex)? {
        return Err(Error::VertexNotOnPlane);
    }
    let chart = plane.chart();
    let chart_form = if cone.nvars() == plane.num_vars() {
        chart.restrict(cone)
    } else if cone.nvars() + 1 == plane.num_vars() {
        cone.clone()
    } else {
        return Err(Error::ShapeViolation(String::from(
            "cone form has the wrong number of variables",
        )));
    };
    if chart_form.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let Some(found) = chart_form.homogeneous_degree() else {
        return Err(Error::ShapeViolation(String::from(
            "cone form is not homogeneous",
        )));
    };
    if found as usize != degree {
        return Err(Error::WrongDegree {
            expected: degree,
            found: found as usize,
        });
    }
    let chart_vertex = chart.restrict_point(vertex)?;
    if multiplicity_at(&chart_form, &chart_vertex)? != degree {
        return Err(Error::NotACone);
    }
    let verdict = match is_good_cone(&chart_form, &chart_vertex)? {
        ConeVerdict::SingularOutsideVertex => return Err(Error::BadCone),
        ConeVerdict::NotCone => return Err(Error::NotACone),
        ok => ok,
    };
    let lead = chart_form
        .leading_term()
        .expect("nonzero form has a leading term")
        .1
        .clone();
    let inv = plane.field().one().checked_div(&lead)?;
    Ok(StarTriple {
        plane: plane.clone(),
        vertex: vertex.clone(),
        cone: chart_form.scale(&inv),
        degree,
        verdict,
    })
}

/// Builds a triple from a certified star point of a hypersurface: the
/// tangent hyperplane, the point, and the tangent section as cone.
/// `KnownPointNotStar` when the point fails the star test.
pub fn triple_at_star(x: &Hypersurface, p: &ProjPoint) -> Result<StarTriple> {
    let v = is_star_point(x, p)?;
    if !v.is_star {
        return Err(Error::KnownPointNotStar);
    }
    validate_triple(&v.tangent, p, &v.cone_equation, x.degree())
}

/// An ordered configuration of star-point triples of one degree, with its
/// vertex/plane incidence table.  `general_position` holds when no vertex
/// lies on another triple's plane.
#[derive(Clone, Debug)]
pub struct Configuration {
    field: CycloField,
    degree: usize,
    ambient: usize,
    triples: Vec<StarTriple>,
    incidence: Vec<Vec<bool>>,
    general_position: bool,
}

impl Configuration {
    /// The empty configuration (`e = 0`) still needs to know the field,
    /// the degree, and the ambient dimension `N` to define its system.
    pub fn empty(field: &CycloField, degree: usize, ambient: usize) -> Self {
        Configuration {
            field: field.clone(),
            degree,
            ambient,
            triples: Vec::new(),
            incidence: Vec::new(),
            general_position: true,
        }
    }

    pub fn new(triples: Vec<StarTriple>) -> Result<Self> {
        let Some(first) = triples.first() else {
            return Err(Error::ShapeViolation(String::from(
                "an empty configuration needs explicit shape data",
            )));
        };
        let degree = first.degree();
        let ambient = first.ambient_dim();
        let field = first.field().clone();
        for t in &triples {
            if t.degree() != degree {
                return Err(Error::DegreeMismatch);
            }
            if t.ambient_dim() != ambient {
                return Err(Error::ShapeViolation(String::from(
                    "triples live in different ambient spaces",
                )));
            }
            if t.field().conductor() != field.conductor() {
                return Err(Error::FieldMismatch {
                    left: field.conductor(),
                    right: t.field().conductor(),
                });
            }
        }
        let e = triples.len();
        let mut incidence = vec![vec![false; e]; e];
        let mut general_position = true;
        for i in 0..e {
            for j in 0..e {
                let hit = triples[j].plane().contains(triples[i].vertex())?;
                incidence[i][j] = hit;
                if i != j && hit {
                    general_position = false;
                }
            }
        }
        Ok(Configuration {
            field,
            degree,
            ambient,
            triples,
            incidence,
            general_position,
        })
    }

    pub fn triples(&self) -> &[StarTriple] {
        &self.triples
    }

    /// Number of triples `e`.
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Ambient projective dimension `N`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    /// Whether `P_i` lies on `Π_j`.
    pub fn incidence(&self, i: usize, j: usize) -> bool {
        self.incidence[i][j]
    }

    pub fn general_position(&self) -> bool {
        self.general_position
    }
}

/// The linear system `V_d(L)`: all degree-`d` forms whose restriction to
/// each plane is proportional to that triple's cone.  `basis` spans it
/// (ambient forms, exactly independent); `projective_dim` is the vector
/// dimension minus one, `-1` for the zero system.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub degree: usize,
    pub ambient: usize,
    pub basis: Vec<MultiPoly>,
    pub projective_dim: i64,
}

impl LinearSystem {
    pub fn vector_dim(&self) -> usize {
        self.basis.len()
    }
}

fn matrix_from_rows(field: &CycloField, rows: Vec<Vec<CycloNum>>) -> ExactMatrix<CycloNum> {
    ExactMatrix::from_rows(&field.zero(), rows).expect("rows share one length")
}

/// Coefficients of `form` over the canonical list of degree-`d` monomials
/// in `form.nvars()` variables.
fn coefficient_vector(form: &MultiPoly, d: u32) -> Vec<CycloNum> {
    monomials_of_degree(form.nvars(), d)
        .iter()
        .map(|m| form.coefficient(m))
        .collect()
}

/// Restriction data of one triple against the generic degree-`d` form:
/// for ambient monomial `u`, column `u` of `r_cols` holds the chart
/// coefficients of its restriction; `c` is the cone's chart coefficient
/// vector and `l0` the first index where it is nonzero.
struct TripleRestriction {
    r_cols: Vec<Vec<CycloNum>>,
    c: Vec<CycloNum>,
    l0: usize,
}

fn triple_restriction(t: &StarTriple, ambient_monos: &[crate::algebra::Mono]) -> TripleRestriction {
    let field = t.field();
    let n = t.ambient_dim();
    let d = t.degree() as u32;
    let chart = t.chart();
    let cmonos = monomials_of_degree(n, d);
    let mut r_cols = Vec::with_capacity(ambient_monos.len());
    for m in ambient_monos {
        let mut p = MultiPoly::zero(field, n + 1);
        p.add_term(m.clone(), field.one());
        let r = chart.restrict(&p);
        r_cols.push(cmonos.iter().map(|cm| r.coefficient(cm)).collect());
    }
    let c: Vec<CycloNum> = cmonos.iter().map(|cm| t.cone().coefficient(cm)).collect();
    let l0 = c
        .iter()
        .position(|x| !x.is_zero())
        .expect("cone form is nonzero");
    TripleRestriction { r_cols, c, l0 }
}

/// Computes an exact basis of `V_d(L)` by solving the proportionality
/// constraints `c[l0] * r(u)[k] - c[k] * r(u)[l0] = 0` for every triple
/// and every chart monomial index `k`.
pub fn vd_basis(config: &Configuration) -> LinearSystem {
    let field = config.field();
    let d = config.degree() as u32;
    let n = config.ambient_dim();
    let monos = monomials_of_degree(n + 1, d);
    let dim = monos.len();
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    for t in config.triples() {
        let tr = triple_restriction(t, &monos);
        for k in 0..tr.c.len() {
            if k == tr.l0 {
                continue;
            }
            let row: Vec<CycloNum> = (0..dim)
                .map(|u| {
                    tr.c[tr.l0]
                        .mul_ref(&tr.r_cols[u][k])
                        .sub_ref(&tr.c[k].mul_ref(&tr.r_cols[u][tr.l0]))
                })
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let vectors: Vec<Vec<CycloNum>> = if rows.is_empty() {
        (0..dim)
            .map(|j| {
                let mut v = vec![field.zero(); dim];
                v[j] = field.one();
                v
            })
            .collect()
    } else {
        matrix_from_rows(field, rows)
            .nullspace()
            .expect("constraint matrix rows all have the same length")
    };
    let basis: Vec<MultiPoly> = vectors
        .iter()
        .map(|v| {
            let mut f = MultiPoly::zero(field, n + 1);
            for (j, coeff) in v.iter().enumerate() {
                if !coeff.is_zero() {
                    f.add_term(monos[j].clone(), coeff.clone());
                }
            }
            f
        })
        .collect();
    let projective_dim = basis.len() as i64 - 1;
    LinearSystem {
        degree: d as usize,
        ambient: n,
        basis,
        projective_dim,
    }
}

/// Outcome of the suitedness test: whether some member of `V_d(L)` cuts
/// every plane exactly in its cone, a witness when one exists, the
/// coefficients combining the basis into the witness, the search seed, and
/// the indices of triples whose restriction functional vanishes on all of
/// `V_d(L)` (the obstructions when not suited).
#[derive(Clone, Debug)]
pub struct SuitednessReport {
    pub suited: bool,
    pub witness: Option<MultiPoly>,
    pub witness_coeffs: Option<Vec<CycloNum>>,
    pub seed: u64,
    pub vanishing: Vec<usize>,
}

/// Suitedness of a configuration; computes `V_d(L)` internally.
/// `EmptySystem` when `V_d(L) = 0`.
pub fn is_suited(config: &Configuration) -> Result<SuitednessReport> {
    let system = vd_basis(config);
    is_suited_on(config, &system)
}

/// Suitedness against a precomputed system (the system must be
/// `vd_basis(config)`).
pub fn is_suited_on(config: &Configuration, system: &LinearSystem) -> Result<SuitednessReport> {
    let field = config.field();
    let b = system.basis.len();
    if b == 0 {
        return Err(Error::EmptySystem);
    }
    let e = config.len();
    if e == 0 {
        let mut coeffs = vec![field.zero(); b];
        coeffs[0] = field.one();
        return Ok(SuitednessReport {
            suited: true,
            witness: Some(system.basis[0].clone()),
            witness_coeffs: Some(coeffs),
            seed: SUITED_SEED,
            vanishing: Vec::new(),
        });
    }
    // lambda[i][j]: the chart coefficient of basis element j at triple i's
    // pivot monomial — zero exactly when the restriction to plane i kills
    // the cone component.
    let mut lambda: Vec<Vec<CycloNum>> = Vec::with_capacity(e);
    for t in config.triples() {
        let chart = t.chart();
        let cmonos = monomials_of_degree(t.ambient_dim(), t.degree() as u32);
        let c: Vec<CycloNum> = cmonos.iter().map(|cm| t.cone().coefficient(cm)).collect();
        let l0 = c
            .iter()
            .position(|x| !x.is_zero())
            .expect("cone form is nonzero");
        lambda.push(
            system
                .basis
                .iter()
                .map(|f| chart.restrict(f).coefficient(&cmonos[l0]))
                .collect(),
        );
    }
    let vanishing: Vec<usize> = (0..e)
        .filter(|&i| lambda[i].iter().all(CycloNum::is_zero))
        .collect();
    if !vanishing.is_empty() {
        return Ok(SuitednessReport {
            suited: false,
            witness: None,
            witness_coeffs: None,
            seed: SUITED_SEED,
            vanishing,
        });
    }
    let all_nonzero = |coeffs: &[CycloNum]| -> bool {
        lambda.iter().all(|row| {
            let mut acc = field.zero();
            for (a, l) in coeffs.iter().zip(row) {
                acc = acc.add_ref(&a.mul_ref(l));
            }
            !acc.is_zero()
        })
    };
    let combine = |coeffs: &[CycloNum]| -> MultiPoly {
        let mut f = MultiPoly::zero(field, config.ambient_dim() + 1);
        for (a, basis_elem) in coeffs.iter().zip(&system.basis) {
            if !a.is_zero() {
                f = f.add(&basis_elem.scale(a));
            }
        }
        f
    };
    // Seeded random search first, with a bounded number of trials ...
    let mut rng = crate::rng::DetRng::new(SUITED_SEED);
    for _ in 0..e * b {
        let coeffs: Vec<CycloNum> = (0..b).map(|_| field.from_int(rng.int_in(-3, 3))).collect();
        if all_nonzero(&coeffs) {
            return Ok(SuitednessReport {
                suited: true,
                witness: Some(combine(&coeffs)),
                witness_coeffs: Some(coeffs),
                seed: SUITED_SEED,
                vanishing,
            });
        }
    }
    // ... then the guaranteed geometric fallback: coefficients
    // (1, k, k^2, ...).  Each functional is a nonzero polynomial of degree
    // < b in k, so some k in 1..=e*(b-1)+1 avoids all of their roots.
    for k in 1..=(e * b + 1) as i64 {
        let base = field.from_int(k);
        let coeffs: Vec<CycloNum> = (0..b)
            .map(|j| base.pow(j as i64).expect("nonnegative power"))
            .collect();
        if all_nonzero(&coeffs) {
            return Ok(SuitednessReport {
                suited: true,
                witness: Some(combine(&coeffs)),
                witness_coeffs: Some(coeffs),
                seed: SUITED_SEED,
                vanishing,
            });
        }
    }
    Err(Error::Assertion(String::from(
        "witness search exhausted its guaranteed bound",
    )))
}

/// Dimension report for `P_d(L)`: the computed projective dimension of the
/// system against the suited-configuration value `C(d-e+N, N)` (zero when
/// `e > d`).
#[derive(Clone, Debug, PartialEq)]
pub struct DimReport {
    pub projective_dim: i64,
    pub expected: i64,
    pub matches: bool,
}

pub fn dim_report(config: &Configuration) -> DimReport {
    let system = vd_basis(config);
    let d = config.degree() as i64;
    let e = config.len() as i64;
    let n = config.ambient_dim() as i64;
    let expected = binomial(d - e + n, n) as i64;
    DimReport {
        projective_dim: system.projective_dim,
        expected,
        matches: system.projective_dim == expected,
    }
}

/// Report for the restriction of `V_d(L)` to a hyperplane off all
/// vertices: exact image dimension, the suited-configuration value
/// `C(d-e+N-1, N-1)`, and whether the image contains the product system
/// (restricted planes times all lower-degree monomials).
#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub dim: i64,
    pub expected: i64,
    pub matches: bool,
    pub contains_product_system: bool,
}

pub fn restriction_dim(config: &Configuration, plane: &Hyperplane) -> Result<RestrictionReport> {
    let n = config.ambient_dim();
    if plane.num_vars() != n + 1 {
        return Err(Error::ShapeViolation(String::from(
            "hyperplane lives in the wrong ambient space",
        )));
    }
    for t in config.triples() {
        if plane.contains(t.vertex())? {
            return Err(Error::PointOnPlane);
        }
    }
    let system = vd_basis(config);
    let field = config.field();
    let d = config.degree() as u32;
    let chart = plane.chart();
    let rows: Vec<Vec<CycloNum>> = system
        .basis
        .iter()
        .map(|f| coefficient_vector(&chart.restrict(f), d))
        .collect();
    let width = monomials_of_degree(n, d).len();
    let base_rank = if rows.is_empty() {
        0
    } else {
        matrix_from_rows(field, rows.clone()).rank()
    };
    let dim = base_rank as i64 - 1;
    let e = config.len();
    let expected = binomial(
        config.degree() as i64 - e as i64 + n as i64 - 1,
        n as i64 - 1,
    ) as i64;
    let mut contains = true;
    if e <= config.degree() && !system.basis.is_empty() {
        let mut product = MultiPoly::zero(field, n);
        let one_mono = crate::algebra::Mono::unit(n);
        product.add_term(one_mono, field.one());
        for t in config.triples() {
            let lin = chart.restrict(t.plane().linear_form());
            debug_assert!(!lin.is_zero(), "distinct planes restrict to nonzero forms");
            product = product.mul(&lin);
        }
        for m in monomials_of_degree(n, d - e as u32) {
            let mut mp = MultiPoly::zero(field, n);
            mp.add_term(m, field.one());
            let candidate = coefficient_vector(&product.mul(&mp), d);
            debug_assert_eq!(candidate.len(), width);
            let mut all_rows = rows.clone();
            all_rows.push(candidate);
            let grown = matrix_from_rows(field, all_rows).rank();
            if grown != base_rank {
                contains = false;
                break;
            }
        }
    }
    Ok(RestrictionReport {
        dim,
        expected,
        matches: dim == expected,
        contains_product_system: contains,
    })
}

/// A candidate cone produced by [`extend_candidates`], written in the
/// chart of the extension plane, with its cone-quality verdict.
#[derive(Clone, Debug)]
pub struct ConeCandidate {
    pub form: MultiPoly,
    pub verdict: ConeVerdict,
}

/// Basis of the cones with vertex `p` inside `plane` that extend the
/// configuration: the restricted system intersected with the linear
/// conditions for multiplicity `>= d` at `p`.  Empty result means no
/// extension exists; it is not an error.
///
/// Errors: `PointOnPlane` when some vertex lies on `plane` or `p` lies on
/// some triple's plane; `VertexNotOnPlane` when `p` is not on `plane`.
pub fn extend_candidates(
    config: &Configuration,
    plane: &Hyperplane,
    p: &ProjPoint,
) -> Result<Vec<ConeCandidate>> {
    let n = config.ambient_dim();
    if plane.num_vars() != n + 1 || p.num_coords() != n + 1 {
        return Err(Error::ShapeViolation(String::from(
            "extension data lives in the wrong ambient space",
        )));
    }
    for t in config.triples() {
        if plane.contains(t.vertex())? {
            return Err(Error::PointOnPlane);
        }
        if t.plane().contains(p)? {
            return Err(Error::PointOnPlane);
        }
    }
    if !plane.contains(p)? {
        return Err(Error::VertexNotOnPlane);
    }
    let system = vd_basis(config);
    let field = config.field();
    let d = config.degree() as u32;
    let chart = plane.chart();
    // Independent spanning set of the restricted system.
    let mut image_forms: Vec<MultiPoly> = Vec::new();
    let mut image_vectors: Vec<Vec<CycloNum>> = Vec::new();
    let mut rank = 0usize;
    for f in &system.basis {
        let g = chart.restrict(f);
        if g.is_zero() {
            continue;
        }
        let v = coefficient_vector(&g, d);
        let mut trial = image_vectors.clone();
        trial.push(v.clone());
        let r = matrix_from_rows(field, trial).rank();
        if r > rank {
            rank = r;
            image_vectors.push(v);
            image_forms.push(g);
        }
    }
    if image_forms.is_empty() {
        return Ok(Vec::new());
    }
    // Multiplicity >= d at p: after an invertible change moving p to the
    // first coordinate, no monomial may involve the first variable.
    let chart_p = chart.restrict_point(p)?;
    let frame = completion_matrix(&chart_p);
    let moved: Vec<MultiPoly> = image_forms
        .iter()
        .map(|g| {
            g.substitute_linear(&frame)
                .expect("completion frames are invertible")
        })
        .collect();
    let mut rows: Vec<Vec<CycloNum>> = Vec::new();
    for m in monomials_of_degree(n, d) {
        if m.exp(0) == 0 {
            continue;
        }
        let row: Vec<CycloNum> = moved.iter().map(|h| h.coefficient(&m)).collect();
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    }
    let combos: Vec<Vec<CycloNum>> = if rows.is_empty() {
        (0..image_forms.len())
            .map(|j| {
                let mut v = vec![field.zero(); image_forms.len()];
                v[j] = field.one();
                v
            })
            .collect()
    } else {
        matrix_from_rows(field, rows)
            .nullspace()
            .expect("condition rows all have the same length")
    };
    let mut out = Vec::with_capacity(combos.len());
    for a in combos {
        let mut form = MultiPoly::zero(field, n);
        for (coeff, g) in a.iter().zip(&image_forms) {
            if !coeff.is_zero() {
                form = form.add(&g.scale(coeff));
            }
        }
        debug_assert!(!form.is_zero());
        let verdict = is_good_cone(&form, &chart_p)?;
        out.push(ConeCandidate { form, verdict });
    }
    Ok(out)
}

/// Expected codimension `f` of the locus of hypersurfaces carrying an
/// `e`-point star configuration inside the parameter space of `e` triples:
/// the count of linear conditions cut by the second through `e`-th points.
pub fn expected_codim(n: usize, d: u32, e: usize) -> u64 {
    let nn = n as i64;
    let dd = d as i64;
    let ee = e as i64;
    let full = binomial(nn + dd - 1, nn - 1) as i64;
    let mut f = 0i64;
    let top = ee.min(dd + 1);
    let mut i = 2;
    while i <= top {
        f += full - binomial(nn + dd - i, nn - 1) as i64 - 1;
        i += 1;
    }
    if ee > dd + 1 {
        f += (ee - dd - 1) * (full - 1);
    }
    f as u64
}

/// Dimension of the space of `e` general-position triples: each triple
/// contributes `2N` (its plane and a vertex on it) plus the projective
/// space of vertex cones inside the plane.
pub fn parameter_space_dim(n: usize, d: u32, e: usize) -> u64 {
    let per = 2 * n as u64 + binomial(n as i64 + d as i64 - 2, n as i64 - 2) - 2;
    e as u64 * per
}
