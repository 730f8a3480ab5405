//! Text formats: polynomial and scalar literals, points, lines, and
//! configuration files, together with their canonical printing.
//!
//! The grammar is documented bit-exactly in `docs/format.md`.  Printing
//! always produces text the parser maps back to the same value, so
//! print-then-parse is the identity.

use std::fmt;

use stargeo::algebra::{CycloField, CycloNum, Mono, MultiPoly, Rational, Scalar};
use stargeo::configspace::{validate_triple, Configuration, StarTriple};
use stargeo::geometry::{Hyperplane, ProjLine, ProjPoint};

/// Errors produced while reading text input.  `pos` fields are 0-based
/// byte offsets into the parsed string.
#[derive(Debug)]
pub enum TextError {
    /// The input does not match the grammar.
    Syntax { pos: usize, msg: String },
    /// A variable or root literal outside the declared scope.
    UndeclaredVariable { pos: usize, name: String },
    /// A homogeneous form was required.
    Inhomogeneous { detail: String },
    /// Two different conductors were requested for one session.
    MixedConductor { declared: u32, requested: u32 },
    /// A configuration triple failed validation.
    Triple { index: usize, source: stargeo::Error },
    /// A library precondition failed while assembling the parsed value.
    Core(stargeo::Error),
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::Syntax { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            TextError::UndeclaredVariable { pos, name } => {
                write!(f, "undeclared variable '{name}' at byte {pos}")
            }
            TextError::Inhomogeneous { detail } => {
                write!(f, "inhomogeneous input: {detail}")
            }
            TextError::MixedConductor {
                declared,
                requested,
            } => write!(
                f,
                "conductor {requested} requested but the session declares {declared}"
            ),
            TextError::Triple { index, source } => write!(f, "triple {index}: {source}"),
            TextError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<stargeo::Error> for TextError {
    fn from(e: stargeo::Error) -> Self {
        TextError::Core(e)
    }
}

pub type TextResult<T> = Result<T, TextError>;

// ---------------------------------------------------------------------------
// Cursor
// ---------------------------------------------------------------------------

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> TextResult<T> {
        Err(TextError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: u8, what: &str) -> TextResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    /// Reads a decimal unsigned integer (at least one digit).
    fn uint(&mut self) -> TextResult<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .filter(|&v| v <= 1_000_000_000_000)
                .ok_or(TextError::Syntax {
                    pos: start,
                    msg: String::from("number too large"),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            self.err("expected a number")
        } else {
            Ok(value)
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// `uint [/ uint]`, the sign handled by the caller.
fn parse_unsigned_rational(cur: &mut Cursor<'_>) -> TextResult<Rational> {
    let numer = cur.uint()?;
    let mut denom = 1u64;
    let save = cur.pos;
    cur.skip_ws();
    if cur.eat(b'/') {
        cur.skip_ws();
        let pos = cur.pos;
        denom = cur.uint()?;
        if denom == 0 {
            return Err(TextError::Syntax {
                pos,
                msg: String::from("zero denominator"),
            });
        }
    } else {
        cur.pos = save;
    }
    Rational::new(numer as i64, denom as i64).map_err(TextError::from)
}

/// `z ['^' uint]`; requires a conductor of at least 2.
fn parse_zeta_power(cur: &mut Cursor<'_>, field: &CycloField) -> TextResult<CycloNum> {
    let pos = cur.pos;
    cur.expect(b'z', "the root literal 'z'")?;
    let mut k = 1u64;
    if cur.eat(b'^') {
        k = cur.uint()?;
    }
    if field.conductor() < 2 {
        return Err(TextError::UndeclaredVariable {
            pos,
            name: String::from("z"),
        });
    }
    Ok(field.zeta_pow((k % field.conductor() as u64) as i64))
}

/// `rational ['*' zpow] | zpow`, sign handled by the caller.
fn parse_scalar_term(cur: &mut Cursor<'_>, field: &CycloField) -> TextResult<CycloNum> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'z') => parse_zeta_power(cur, field),
        Some(b) if b.is_ascii_digit() => {
            let q = parse_unsigned_rational(cur)?;
            let save = cur.pos;
            cur.skip_ws();
            if cur.eat(b'*') {
                cur.skip_ws();
                if cur.peek() == Some(b'z') {
                    let z = parse_zeta_power(cur, field)?;
                    return Ok(field.from_rational(q).mul_ref(&z));
                }
            }
            cur.pos = save;
            Ok(field.from_rational(q))
        }
        _ => cur.err("expected a scalar term"),
    }
}

/// Signed sum of scalar terms.
fn parse_scalar_sum(cur: &mut Cursor<'_>, field: &CycloField) -> TextResult<CycloNum> {
    cur.skip_ws();
    let mut negative = false;
    if cur.eat(b'-') {
        negative = true;
    } else {
        let _ = cur.eat(b'+');
    }
    let mut total = field.zero();
    loop {
        let term = parse_scalar_term(cur, field)?;
        total = if negative {
            total.sub_ref(&term)
        } else {
            total.add_ref(&term)
        };
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                negative = false;
            }
            Some(b'-') => {
                cur.bump();
                negative = true;
            }
            _ => break,
        }
    }
    Ok(total)
}

/// Parses one field element: a signed sum of rational multiples of `z`
/// powers, optionally wrapped in one pair of parentheses.
pub fn parse_scalar(field: &CycloField, text: &str) -> TextResult<CycloNum> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let value = if cur.eat(b'(') {
        let v = parse_scalar_sum(&mut cur, field)?;
        cur.skip_ws();
        cur.expect(b')', "')'")?;
        v
    } else {
        parse_scalar_sum(&mut cur, field)?
    };
    cur.skip_ws();
    if !cur.at_end() {
        return cur.err("unexpected trailing input");
    }
    Ok(value)
}

/// Canonical text for one field element: rationals and bare `z` powers
/// print as-is, everything else is parenthesized.
pub fn scalar_to_text(c: &CycloNum) -> String {
    if c.is_rational() || c.unit_zeta_power().is_some() {
        c.to_text()
    } else {
        format!("({})", c.to_text())
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// `X uint ['^' uint]`.
fn parse_var_factor(
    cur: &mut Cursor<'_>,
    nvars: usize,
    exps: &mut [u32],
) -> TextResult<()> {
    let pos = cur.pos;
    cur.expect(b'X', "a variable 'X<i>'")?;
    let idx = cur.uint()?;
    if idx >= nvars as u64 {
        return Err(TextError::UndeclaredVariable {
            pos,
            name: format!("X{idx}"),
        });
    }
    let mut exp = 1u64;
    if cur.eat(b'^') {
        exp = cur.uint()?;
    }
    if exp > 4096 {
        return Err(TextError::Syntax {
            pos,
            msg: String::from("exponent too large"),
        });
    }
    exps[idx as usize] += exp as u32;
    Ok(())
}

/// `factor (['*'] factor)*` — the joining `*` between variable factors is
/// optional.
fn parse_monomial(cur: &mut Cursor<'_>, nvars: usize) -> TextResult<Mono> {
    let mut exps = vec![0u32; nvars];
    parse_var_factor(cur, nvars, &mut exps)?;
    loop {
        let save = cur.pos;
        cur.skip_ws();
        if cur.eat(b'*') {
            cur.skip_ws();
            if cur.peek() == Some(b'X') {
                parse_var_factor(cur, nvars, &mut exps)?;
                continue;
            }
            cur.pos = save;
            break;
        }
        if cur.peek() == Some(b'X') {
            parse_var_factor(cur, nvars, &mut exps)?;
            continue;
        }
        cur.pos = save;
        break;
    }
    Ok(Mono::new(exps))
}

/// One term: `coeff ['*'] monomial | coeff | monomial`, the sign handled
/// by the caller.
fn parse_poly_term(
    cur: &mut Cursor<'_>,
    field: &CycloField,
    nvars: usize,
) -> TextResult<(Mono, CycloNum)> {
    cur.skip_ws();
    let coeff = match cur.peek() {
        Some(b'(') => {
            cur.bump();
            let v = parse_scalar_sum(cur, field)?;
            cur.skip_ws();
            cur.expect(b')', "')'")?;
            Some(v)
        }
        Some(b'z') => Some(parse_zeta_power(cur, field)?),
        Some(b) if b.is_ascii_digit() => Some(field.from_rational(parse_unsigned_rational(cur)?)),
        _ => None,
    };
    match coeff {
        Some(c) => {
            let save = cur.pos;
            cur.skip_ws();
            let starred = cur.eat(b'*');
            cur.skip_ws();
            if cur.peek() == Some(b'X') {
                let mono = parse_monomial(cur, nvars)?;
                Ok((mono, c))
            } else if starred {
                cur.err("expected a monomial after '*'")
            } else {
                cur.pos = save;
                Ok((Mono::unit(nvars), c))
            }
        }
        None => {
            if cur.peek() == Some(b'X') {
                let mono = parse_monomial(cur, nvars)?;
                Ok((mono, field.one()))
            } else {
                cur.err("expected a term")
            }
        }
    }
}

/// Parses a polynomial in the variables `X0 .. X<nvars-1>` over `field`.
pub fn parse_poly(field: &CycloField, nvars: usize, text: &str) -> TextResult<MultiPoly> {
    let mut cur = Cursor::new(text);
    let mut acc = MultiPoly::zero(field, nvars);
    cur.skip_ws();
    let mut negative = false;
    if cur.eat(b'-') {
        negative = true;
    } else {
        let _ = cur.eat(b'+');
    }
    loop {
        let (mono, coeff) = parse_poly_term(&mut cur, field, nvars)?;
        acc.add_term(mono, if negative { coeff.neg_ref() } else { coeff });
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                negative = false;
            }
            Some(b'-') => {
                cur.bump();
                negative = true;
            }
            Some(b) => {
                return cur.err(format!(
                    "expected '+' or '-' between terms, found '{}'",
                    b as char
                ))
            }
        }
    }
    Ok(acc)
}

/// Parses a nonzero homogeneous form, reporting `Inhomogeneous` otherwise.
pub fn parse_form(field: &CycloField, nvars: usize, text: &str) -> TextResult<MultiPoly> {
    let p = parse_poly(field, nvars, text)?;
    if p.is_zero() {
        return Err(TextError::Inhomogeneous {
            detail: String::from("the zero polynomial does not define a form"),
        });
    }
    if p.homogeneous_degree().is_none() {
        return Err(TextError::Inhomogeneous {
            detail: format!(
                "terms of different total degrees in '{}'",
                truncate(text, 60)
            ),
        });
    }
    Ok(p)
}

/// Parses a linear form and normalizes it into a hyperplane.
pub fn parse_hyperplane(field: &CycloField, nvars: usize, text: &str) -> TextResult<Hyperplane> {
    let p = parse_form(field, nvars, text)?;
    if p.homogeneous_degree() != Some(1) {
        return Err(TextError::Core(stargeo::Error::WrongDegree {
            expected: 1,
            found: p.homogeneous_degree().unwrap_or(0) as usize,
        }));
    }
    Hyperplane::new(p).map_err(TextError::from)
}

fn truncate(text: &str, limit: usize) -> &str {
    let t = text.trim();
    if t.len() <= limit {
        t
    } else {
        let mut end = limit;
        while !t.is_char_boundary(end) {
            end -= 1;
        }
        &t[..end]
    }
}

// ---------------------------------------------------------------------------
// Points and lines
// ---------------------------------------------------------------------------

/// Parses `c0:c1:...:cN` into a projective point.
pub fn parse_point(field: &CycloField, text: &str) -> TextResult<ProjPoint> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() < 2 {
        return Err(TextError::Syntax {
            pos: 0,
            msg: String::from("a point needs at least two ':'-separated coordinates"),
        });
    }
    let mut coords = Vec::with_capacity(parts.len());
    let mut offset = 0usize;
    for part in &parts {
        let c = parse_scalar(field, part).map_err(|e| shift(e, offset))?;
        coords.push(c);
        offset += part.len() + 1;
    }
    ProjPoint::new(coords).map_err(TextError::from)
}

/// Parses two points joined by `;` into a line.
pub fn parse_line(field: &CycloField, text: &str) -> TextResult<ProjLine> {
    let Some((a, b)) = text.split_once(';') else {
        return Err(TextError::Syntax {
            pos: 0,
            msg: String::from("a line is two points joined by ';'"),
        });
    };
    let pa = parse_point(field, a)?;
    let pb = parse_point(field, b).map_err(|e| shift(e, a.len() + 1))?;
    ProjLine::new(pa, pb).map_err(TextError::from)
}

fn shift(e: TextError, offset: usize) -> TextError {
    match e {
        TextError::Syntax { pos, msg } => TextError::Syntax {
            pos: pos + offset,
            msg,
        },
        TextError::UndeclaredVariable { pos, name } => TextError::UndeclaredVariable {
            pos: pos + offset,
            name,
        },
        other => other,
    }
}

/// Canonical text for a point: coordinates joined by `:`.
pub fn point_to_text(p: &ProjPoint) -> String {
    let parts: Vec<String> = p.coords().iter().map(scalar_to_text).collect();
    parts.join(":")
}

/// Canonical text for a line: its two span points joined by `;`.
pub fn line_to_text(l: &ProjLine) -> String {
    format!("{};{}", point_to_text(l.span_a()), point_to_text(l.span_b()))
}

// ---------------------------------------------------------------------------
// Conductor resolution
// ---------------------------------------------------------------------------

/// True when the text uses the root literal `z` (any occurrence of the
/// letter outside of... the grammar has no other use of `z`).
pub fn uses_root_literal(text: &str) -> bool {
    text.bytes().any(|b| b == b'z')
}

/// Resolves the session conductor: an explicit `--field` wins, then a
/// declared header, then the default — conductor 1 (the rationals) when
/// no `z` literal occurs in the given texts.  A `z` literal with no
/// declared conductor is an error.
pub fn resolve_conductor(
    flag: Option<u32>,
    header: Option<u32>,
    texts: &[&str],
) -> TextResult<u32> {
    if let Some(n) = flag {
        if let Some(h) = header {
            if h != n {
                return Err(TextError::MixedConductor {
                    declared: h,
                    requested: n,
                });
            }
        }
        return Ok(n);
    }
    if let Some(h) = header {
        return Ok(h);
    }
    for t in texts {
        if let Some(pos) = t.bytes().position(|b| b == b'z') {
            return Err(TextError::UndeclaredVariable {
                pos,
                name: String::from("z (declare a conductor with --field <n>)"),
            });
        }
    }
    Ok(1)
}

// ---------------------------------------------------------------------------
// Polynomial files
// ---------------------------------------------------------------------------

/// A parsed polynomial file: optional `field <n>` and `vars <k>` header
/// lines, comments starting with `#`, and the polynomial text itself
/// (which may span several lines).
pub struct PolyFile {
    pub conductor: Option<u32>,
    pub vars: Option<usize>,
    pub body: String,
}

/// Splits a polynomial file into headers and body without parsing the
/// polynomial itself (the conductor may still be unresolved).
pub fn split_poly_file(text: &str) -> TextResult<PolyFile> {
    let mut conductor = None;
    let mut vars = None;
    let mut body = String::new();
    let mut in_body = false;
    for line in text.lines() {
        let stripped = strip_comment(line).trim();
        if stripped.is_empty() {
            continue;
        }
        let mut tokens = stripped.split_whitespace();
        let head = tokens.next().unwrap_or("");
        if !in_body && (head == "field" || head == "vars") {
            let value: u64 = tokens
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| TextError::Syntax {
                    pos: 0,
                    msg: format!("'{head}' header needs a positive integer"),
                })?;
            if tokens.next().is_some() {
                return Err(TextError::Syntax {
                    pos: 0,
                    msg: format!("'{head}' header has trailing tokens"),
                });
            }
            if head == "field" {
                conductor = Some(value as u32);
            } else {
                vars = Some(value as usize);
            }
            continue;
        }
        in_body = true;
        if !body.is_empty() {
            body.push(' ');
        }
        body.push_str(stripped);
    }
    if body.is_empty() {
        return Err(TextError::Syntax {
            pos: 0,
            msg: String::from("the file contains no polynomial"),
        });
    }
    Ok(PolyFile {
        conductor,
        vars,
        body,
    })
}

/// Infers the variable count of a polynomial body: one past the largest
/// `X` index mentioned.
pub fn infer_vars(body: &str) -> Option<usize> {
    let bytes = body.as_bytes();
    let mut best: Option<usize> = None;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'X' {
            let mut j = i + 1;
            let mut value = 0usize;
            let mut any = false;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                value = value.saturating_mul(10) + (bytes[j] - b'0') as usize;
                any = true;
                j += 1;
            }
            if any {
                best = Some(best.map_or(value, |b| b.max(value)));
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best.map(|b| b + 1)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

// ---------------------------------------------------------------------------
// Configuration files
// ---------------------------------------------------------------------------

/// The `session` line of a configuration file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SessionHeader {
    pub ambient: usize,
    pub degree: u32,
    pub conductor: u32,
}

/// Parses a configuration file:
///
/// ```text
/// session <N> <d> <n>
/// triple: plane <linear form>; vertex <c0:...:cN>; cone <form>
/// ```
///
/// Cones are written in ambient coordinates; each triple is validated
/// (vertex on plane, cone of full multiplicity at the vertex, not
/// singular away from it).  Validation failures name the 1-based triple
/// index.
pub fn parse_config(
    text: &str,
    field_override: Option<u32>,
) -> TextResult<(SessionHeader, Configuration)> {
    let mut header: Option<SessionHeader> = None;
    let mut triples: Vec<StarTriple> = Vec::new();
    let mut field: Option<CycloField> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some(h) = header else {
            let mut tokens = line.split_whitespace();
            if tokens.next() != Some("session") {
                return Err(TextError::Syntax {
                    pos: 0,
                    msg: format!(
                        "line {}: expected 'session <N> <d> <n>' first",
                        lineno + 1
                    ),
                });
            }
            let mut next_number = |what: &str| -> TextResult<u64> {
                tokens
                    .next()
                    .and_then(|t| t.parse::<u64>().ok())
                    .ok_or_else(|| TextError::Syntax {
                        pos: 0,
                        msg: format!("line {}: session needs {what}", lineno + 1),
                    })
            };
            let ambient = next_number("an ambient dimension")? as usize;
            let degree = next_number("a degree")? as u32;
            let conductor = next_number("a conductor")? as u32;
            if tokens.next().is_some() {
                return Err(TextError::Syntax {
                    pos: 0,
                    msg: format!("line {}: session line has trailing tokens", lineno + 1),
                });
            }
            if ambient < 2 || degree < 3 || conductor < 1 {
                return Err(TextError::Syntax {
                    pos: 0,
                    msg: format!(
                        "line {}: session needs N >= 2, d >= 3, n >= 1",
                        lineno + 1
                    ),
                });
            }
            if let Some(n) = field_override {
                if n != conductor {
                    return Err(TextError::MixedConductor {
                        declared: conductor,
                        requested: n,
                    });
                }
            }
            header = Some(SessionHeader {
                ambient,
                degree,
                conductor,
            });
            field = Some(CycloField::new(conductor)?);
            continue;
        };
        let f = field.as_ref().expect("field exists once the header does");
        let index = triples.len() + 1;
        let Some(rest) = line.strip_prefix("triple:") else {
            return Err(TextError::Syntax {
                pos: 0,
                msg: format!("line {}: expected 'triple:'", lineno + 1),
            });
        };
        let parts: Vec<&str> = rest.split(';').collect();
        if parts.len() != 3 {
            return Err(TextError::Syntax {
                pos: 0,
                msg: format!(
                    "line {}: a triple needs 'plane ...; vertex ...; cone ...'",
                    lineno + 1
                ),
            });
        }
        let plane_text = keyword_payload(parts[0], "plane", lineno)?;
        let vertex_text = keyword_payload(parts[1], "vertex", lineno)?;
        let cone_text = keyword_payload(parts[2], "cone", lineno)?;
        let nvars = h.ambient + 1;
        let wrap = |e: TextError| match e {
            TextError::Core(err) => TextError::Triple { index, source: err },
            other => other,
        };
        let plane = parse_hyperplane(f, nvars, plane_text).map_err(wrap)?;
        let vertex = parse_point(f, vertex_text).map_err(wrap)?;
        let cone = parse_form(f, nvars, cone_text).map_err(wrap)?;
        let triple = validate_triple(&plane, &vertex, &cone, h.degree as usize)
            .map_err(|source| TextError::Triple { index, source })?;
        triples.push(triple);
    }
    let Some(h) = header else {
        return Err(TextError::Syntax {
            pos: 0,
            msg: String::from("the file contains no session line"),
        });
    };
    let config = Configuration::new(triples).map_err(TextError::Core)?;
    if config.ambient_dim() != h.ambient {
        return Err(TextError::Syntax {
            pos: 0,
            msg: String::from("triples do not match the session ambient dimension"),
        });
    }
    Ok((h, config))
}

fn keyword_payload<'a>(part: &'a str, keyword: &str, lineno: usize) -> TextResult<&'a str> {
    let trimmed = part.trim();
    let Some(rest) = trimmed.strip_prefix(keyword) else {
        return Err(TextError::Syntax {
            pos: 0,
            msg: format!("line {}: expected '{keyword} ...'", lineno + 1),
        });
    };
    if !rest.starts_with(|c: char| c.is_whitespace()) {
        return Err(TextError::Syntax {
            pos: 0,
            msg: format!("line {}: expected whitespace after '{keyword}'", lineno + 1),
        });
    }
    Ok(rest.trim())
}

/// Serializes a configuration back into the file format read by
/// [`parse_config`]; cones are written in ambient coordinates.
pub fn config_to_text(config: &Configuration) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "session {} {} {}",
        config.ambient_dim(),
        config.degree(),
        config.field().conductor()
    );
    for t in config.triples() {
        let _ = writeln!(
            out,
            "triple: plane {}; vertex {}; cone {}",
            t.plane().linear_form().to_text(),
            point_to_text(t.vertex()),
            t.ambient_cone().to_text()
        );
    }
    out
}
