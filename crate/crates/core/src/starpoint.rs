//! Star-point tests.  A smooth point `P` of a degree-`d` hypersurface `X`
//! is a *star point* when the tangent hyperplane section `T_P(X) ∩ X` has
//! multiplicity `d` at `P`, i.e. the section is a cone with vertex `P`.
//! This module provides the direct multiplicity test, the equivalent polar
//! test (`T_P(X)` contained in the polar hypersurface of `P`), the census
//! of star points along a line, and the construction of the forced `d`-th
//! star point on a line carrying `d - 1` collinear ones.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::roots::binary_form_roots;
use crate::algebra::{CycloNum, Mono, MultiPoly, Scalar};
use crate::geometry::{
    binary_coefficients, is_good_cone, restrict_to_hyperplane, restrict_to_line,
    tangent_hyperplane, ConeVerdict, Hyperplane, Hypersurface, ProjLine, ProjPoint,
};
use crate::geometry::multiplicity_at;
use crate::{Error, Result};

/// Everything the star-point test established at one smooth point: the
/// tangent hyperplane, the tangent section written in the chart of the
/// tangent hyperplane, the multiplicity of that section at the point, and
/// the cone-quality verdict for the section.  `is_star` holds exactly when
/// `multiplicity` equals the degree of the hypersurface.
#[derive(Clone, Debug, PartialEq)]
pub struct StarVerdict {
    pub is_star: bool,
    pub tangent: Hyperplane,
    pub cone_equation: MultiPoly,
    pub multiplicity: usize,
    pub good_cone: ConeVerdict,
}

/// Tests whether `p` is a star point of `x` by restricting the equation to
/// the tangent hyperplane at `p` and reading off the multiplicity there.
///
/// Errors: `NotOnHypersurface` if `p` is not on `x`; `SingularPoint` if
/// `x` is singular at `p`; `ZeroPolynomial` in the degenerate case where
/// the whole tangent hyperplane lies inside `x`.
pub fn is_star_point(x: &Hypersurface, p: &ProjPoint) -> Result<StarVerdict> {
    let tangent = tangent_hyperplane(x, p)?;
    let (section, chart) = restrict_to_hyperplane(x.equation(), &tangent);
    if section.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vertex = chart.restrict_point(p)?;
    let multiplicity = multiplicity_at(&section, &vertex)?;
    let good_cone = is_good_cone(&section, &vertex)?;
    Ok(StarVerdict {
        is_star: multiplicity == x.degree(),
        tangent,
        cone_equation: section,
        multiplicity,
        good_cone,
    })
}

/// The polar hypersurface of `p` with respect to `x`: the zero locus of
/// `sum_i p_i * dF/dX_i`, of degree `d - 1`.  Requires `d >= 2`; the
/// all-zero polar (impossible for a form with a nonsingular point, kept as
/// a defensive check) reports `ZeroPolar`.
pub fn polar_hypersurface(x: &Hypersurface, p: &ProjPoint) -> Result<Hypersurface> {
    let d = x.degree();
    if d < 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: d,
        });
    }
    if x.field().conductor() != p.field().conductor() {
        return Err(Error::FieldMismatch {
            left: x.field().conductor(),
            right: p.field().conductor(),
        });
    }
    if x.num_vars() != p.num_coords() {
        return Err(Error::ShapeViolation(String::from(
            "point and hypersurface live in different spaces",
        )));
    }
    let mut g = MultiPoly::zero(x.field(), x.num_vars());
    for (i, coord) in p.coords().iter().enumerate() {
        if coord.is_zero() {
            continue;
        }
        g = g.add(&x.equation().partial_derivative(i).scale(coord));
    }
    if g.is_zero() {
        return Err(Error::ZeroPolar);
    }
    Hypersurface::new(g)
}

/// Whether the hyperplane lies inside the hypersurface, i.e. the equation
/// restricts to zero on it.  Mismatched ambient spaces yield `false`.
pub fn hyperplane_contained(g: &Hypersurface, plane: &Hyperplane) -> bool {
    if g.num_vars() != plane.num_vars() {
        return false;
    }
    let (restriction, _) = restrict_to_hyperplane(g.equation(), plane);
    restriction.is_zero()
}

/// The polar form of the star-point test: `p` is a star point exactly when
/// its tangent hyperplane is contained in its polar hypersurface.  Agrees
/// with [`is_star_point`] on every smooth hypersurface of degree `>= 2`.
pub fn star_via_polar(x: &Hypersurface, p: &ProjPoint) -> Result<bool> {
    let tangent = tangent_hyperplane(x, p)?;
    let polar = polar_hypersurface(x, p)?;
    Ok(hyperplane_contained(&polar, &tangent))
}

/// One point of `X ∩ L` with its intersection multiplicity along the line.
/// `verdict` is `None` when no star verdict exists at the point (the
/// hypersurface is singular there, or its tangent hyperplane degenerately
/// lies inside it).
#[derive(Clone, Debug)]
pub struct LineIntersection {
    pub point: ProjPoint,
    pub multiplicity: usize,
    pub verdict: Option<StarVerdict>,
}

/// Census of star points along a line.  When the line lies inside the
/// hypersurface the intersection is the whole line (`line_in_x`), and
/// candidate points must be tested individually with [`is_star_point`].
/// Otherwise every root of the restricted binary form that exists in the
/// coefficient field is listed with its verdict; a residual factor with no
/// roots in the field is summarized by its degree.
#[derive(Clone, Debug)]
pub struct LineReport {
    pub line_in_x: bool,
    pub intersections: Vec<LineIntersection>,
    pub unresolved_degree: Option<usize>,
}

pub fn star_points_on_line(x: &Hypersurface, l: &ProjLine) -> LineReport {
    let form = restrict_to_line(x.equation(), l);
    if form.is_zero() {
        return LineReport {
            line_in_x: true,
            intersections: Vec::new(),
            unresolved_degree: None,
        };
    }
    let field = x.field();
    let coeffs = binary_coefficients(&form);
    let report = binary_form_roots(field, &coeffs, x.degree())
        .expect("nonzero binary form of the right degree");
    let one = field.one();
    let zero = field.zero();
    let mut intersections = Vec::new();
    for (root, multiplicity) in &report.finite {
        let point = l
            .point_at(root, &one)
            .expect("a root parameter determines a point of the line");
        let verdict = is_star_point(x, &point).ok();
        intersections.push(LineIntersection {
            point,
            multiplicity: *multiplicity,
            verdict,
        });
    }
    if report.infinity > 0 {
        let point = l
            .point_at(&one, &zero)
            .expect("the first span point is a point of the line");
        let verdict = is_star_point(x, &point).ok();
        intersections.push(LineIntersection {
            point,
            multiplicity: report.infinity,
            verdict,
        });
    }
    let unresolved_degree = report.unresolved.as_ref().and_then(|q| q.degree());
    LineReport {
        line_in_x: false,
        intersections,
        unresolved_degree,
    }
}

/// Given `d - 1` distinct certified star points of `x` on the line `l`
/// (not contained in `x`), the remaining intersection point is forced to
/// be a star point as well; this computes it by dividing the known linear
/// factors out of the restricted binary form, and returns it with its
/// verdict.
///
/// Errors: `LineInX` when the line lies inside the hypersurface;
/// `RootsNotDistinct` when two known points coincide; `KnownPointNotStar`
/// when a known point fails the star test.
pub fn forced_dth_star(
    x: &Hypersurface,
    l: &ProjLine,
    known: &[ProjPoint],
) -> Result<(ProjPoint, StarVerdict)> {
    let form = restrict_to_line(x.equation(), l);
    if form.is_zero() {
        return Err(Error::LineInX);
    }
    let d = x.degree();
    if known.len() + 1 != d {
        return Err(Error::ShapeViolation(String::from(
            "the number of known star points must be one less than the degree",
        )));
    }
    for i in 0..known.len() {
        for j in (i + 1)..known.len() {
            if known[i] == known[j] {
                return Err(Error::RootsNotDistinct);
            }
        }
    }
    let field = x.field();
    let mut remaining = form;
    for p in known {
        let (s, u) = line_parameter(l, p)?;
        let verdict = is_star_point(x, p)?;
        if !verdict.is_star {
            return Err(Error::KnownPointNotStar);
        }
        // (s : u) is a root of the binary form, so u*S - s*U divides it.
        let mut divisor = MultiPoly::zero(field, 2);
        divisor.add_term(Mono::new(vec![1, 0]), u.clone());
        divisor.add_term(Mono::new(vec![0, 1]), s.neg_ref());
        remaining = remaining.exact_div(&divisor).ok_or(Error::InexactDivision)?;
    }
    let a = remaining.coefficient(&Mono::new(vec![1, 0]));
    let b = remaining.coefficient(&Mono::new(vec![0, 1]));
    let point = l.point_at(&b.neg_ref(), &a)?;
    let verdict = is_star_point(x, &point)?;
    if !verdict.is_star {
        return Err(Error::Assertion(String::from(
            "forced collinear point failed the star test",
        )));
    }
    Ok((point, verdict))
}

/// The parameter `(s : u)` with `s*A + u*B = p` on the line spanned by `A`
/// and `B`.  `ShapeViolation` when `p` does not lie on the line.
fn line_parameter(l: &ProjLine, p: &ProjPoint) -> Result<(CycloNum, CycloNum)> {
    let a = l.span_a().coords();
    let b = l.span_b().coords();
    let pc = p.coords();
    if pc.len() != a.len() {
        return Err(Error::ShapeViolation(String::from(
            "point and line live in different spaces",
        )));
    }
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            let det = a[i].mul_ref(&b[j]).sub_ref(&a[j].mul_ref(&b[i]));
            if det.is_zero() {
                continue;
            }
            let s = pc[i]
                .mul_ref(&b[j])
                .sub_ref(&pc[j].mul_ref(&b[i]))
                .checked_div(&det)?;
            let u = a[i]
                .mul_ref(&pc[j])
                .sub_ref(&a[j].mul_ref(&pc[i]))
                .checked_div(&det)?;
            if !(s.is_zero() && u.is_zero()) && l.point_at(&s, &u)? == *p {
                return Ok((s, u));
            }
            return Err(Error::ShapeViolation(String::from(
                "point does not lie on the line",
            )));
        }
    }
    Err(Error::ShapeViolation(String::from("degenerate line span")))
}
