//! Lattice geometry: cones, sails, LLS sequences, brute-force Markov minima
//! and extremality certificates.
//!
//! Sails are computed from exactly enumerated lattice columns. A cone with
//! slopes `low < 0 < 1 < high` meets column `x` in the points
//! `floor(low·x) + 1 ..= floor(high·x)`; the sail is the upper concave chain
//! over column tops, the vertical edge at `x = 1`, and the lower convex chain
//! over column bottoms. Only hull edges that provably stay edges once every
//! column beyond the enumeration bound is added are reported.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::matform::{map_a, map_c, QuadForm};
use crate::seq::Seq;
use crate::surd::{neg_periodic_tail, periodic_cf_value, Surd};

/// Columns at or beyond this bound are never enumerated.
const MAX_X_BOUND: i128 = 1 << 34;
const BLOCK: i64 = 1 << 16;

pub type Point = (BigInt, BigInt);
type IPoint = (i128, i128);

/// The open cone `{(x, y) : x > 0, low·x < y < high·x}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    high: Surd,
    low: Surd,
}

impl Cone {
    /// Requires `high > 1` and `-1 < low < 0`.
    pub fn new(high: Surd, low: Surd) -> Result<Self> {
        let one = Surd::from_integer(1.into());
        let zero = Surd::from_integer(0.into());
        if high <= one || low >= zero || low <= -&one {
            return Err(Error::Precondition(format!(
                "cone slopes must satisfy high > 1 and -1 < low < 0, got {high} and {low}"
            )));
        }
        Ok(Cone { high, low })
    }

    pub fn slope_high(&self) -> &Surd {
        &self.high
    }

    pub fn slope_low(&self) -> &Surd {
        &self.low
    }

    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        if !x.is_positive() {
            return false;
        }
        let xs = Surd::from_integer(x.clone());
        let ys = Surd::from_integer(y.clone());
        ys < &self.high * &xs && ys > &self.low * &xs
    }
}

/// The cone bounded by the eigenlines of `M_s`, containing `(1, 0)`.
pub fn cone_of_sequence(s: &Seq) -> Result<Cone> {
    s.require_even_nonempty()?;
    Cone::new(periodic_cf_value(s)?, neg_periodic_tail(s)?)
}

/// Exact `floor(slope · x)` with an `i128` fast path.
struct SlopeFloor {
    slope: Surd,
    fast: Option<(i128, i128, u128, i128)>,
}

impl SlopeFloor {
    fn new(slope: &Surd) -> Self {
        let fast = (|| {
            Some((
                slope.p().to_i128()?,
                slope.q().to_i128()?,
                slope.radicand().to_u128()?,
                slope.r().to_i128()?,
            ))
        })();
        SlopeFloor { slope: slope.clone(), fast }
    }

    fn floor_fast(&self, x: i128) -> Option<i128> {
        let (p, q, d, r) = self.fast?;
        let px = p.checked_mul(x)?;
        let qx = q.checked_mul(x)?;
        let root_part = if qx == 0 || d == 0 {
            0
        } else {
            let m = qx.unsigned_abs();
            let v = m.checked_mul(m)?.checked_mul(d)?;
            let s = isqrt_u128(v);
            let s = i128::try_from(s).ok()?;
            if qx > 0 {
                s
            } else if (s as u128) * (s as u128) == v {
                -s
            } else {
                -s - 1
            }
        };
        Some(px.checked_add(root_part)?.div_euclid(r))
    }

    fn floor(&self, x: i128) -> i128 {
        if let Some(v) = self.floor_fast(x) {
            return v;
        }
        let prod = &self.slope * &Surd::from_integer(BigInt::from(x));
        prod.floor().to_i128().expect("column coordinate fits in i128")
    }

    /// Whether `slope · x` is an integer.
    fn exact_at(&self, x: i128) -> bool {
        if !self.slope.is_rational() {
            return false;
        }
        (self.slope.p() * BigInt::from(x)).is_multiple_of(self.slope.r())
    }
}

fn isqrt_u128(v: u128) -> u128 {
    if v == 0 {
        return 0;
    }
    let mut s = (v as f64).sqrt() as u128;
    while s.checked_mul(s).is_none_or(|sq| sq > v) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|sq| sq <= v) {
        s += 1;
    }
    s
}

fn cross(o: IPoint, a: IPoint, b: IPoint) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Column tops and bottoms for `x` in `lo..hi`.
fn columns(cone: &Cone, lo: i64, hi: i64, exec: Exec) -> Vec<(i128, i128)> {
    let top = SlopeFloor::new(&cone.high);
    let bot = SlopeFloor::new(&cone.low);
    exec.map_range(lo..hi, |x| {
        let x = x as i128;
        let mut t = top.floor(x);
        if top.exact_at(x) {
            t -= 1;
        }
        (t, bot.floor(x) + 1)
    })
}

/// Hull chains over columns `1..=x_bound`, before certification.
fn raw_chains(cone: &Cone, x_bound: i64, exec: Exec) -> (Vec<IPoint>, Vec<IPoint>) {
    let mut upper: Vec<IPoint> = Vec::new();
    let mut lower: Vec<IPoint> = Vec::new();
    let mut lo = 1;
    while lo <= x_bound {
        let hi = (lo + BLOCK).min(x_bound + 1);
        for (i, (t, b)) in columns(cone, lo, hi, exec).into_iter().enumerate() {
            let x = (lo as i128) + i as i128;
            let pt = (x, t);
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], pt) >= 0 {
                upper.pop();
            }
            upper.push(pt);
            let pb = (x, b);
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], pb) <= 0 {
                lower.pop();
            }
            lower.push(pb);
        }
        lo = hi;
    }
    (upper, lower)
}

/// Keeps the prefix of `chain` whose edges cannot be cut by any lattice point
/// of the cone with `x > x_bound`.
///
/// For an edge with direction `(dx, dy)` ending at `u`, every cone point `w`
/// with `x_w > X` satisfies `dx·y_w - dy·x_w < (X + 1)(dx·slope - dy)`, so the
/// edge is certified once `dx·y_u - dy·x_u` lies on the correct side of that
/// bound.
fn certified_prefix(chain: &[IPoint], slope: &Surd, x_bound: i64, upper: bool) -> Vec<IPoint> {
    let mut out = Vec::new();
    if chain.is_empty() {
        return out;
    }
    out.push(chain[0]);
    let x1 = BigInt::from(x_bound) + 1;
    for w in chain.windows(2) {
        let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        let (xu, yu) = w[1];
        let k = BigInt::from(dx * yu - dy * xu) + BigInt::from(dy) * &x1;
        let lhs = Surd::from_integer(k);
        let rhs = slope * &Surd::from_integer(BigInt::from(dx) * &x1);
        let ok = if upper { lhs >= rhs } else { lhs <= rhs };
        if !ok {
            break;
        }
        out.push(w[1]);
    }
    if out.len() == 1 {
        out.clear();
    }
    out
}

/// Certified sail vertices ordered by increasing `x` on each side of `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SailChains {
    /// `(1, 0)` followed by lower-chain vertices moving away from it.
    pub lower: Vec<Point>,
    /// `(1, ⌊high⌋)` followed by upper-chain vertices moving away from it.
    pub upper: Vec<Point>,
}

/// A broken line of lattice points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SailPolyline {
    pub vertices: Vec<Point>,
}

fn big(p: IPoint) -> Point {
    (BigInt::from(p.0), BigInt::from(p.1))
}

fn chains_at(cone: &Cone, x_bound: i64, exec: Exec) -> (Vec<IPoint>, Vec<IPoint>) {
    let (upper, lower) = raw_chains(cone, x_bound, exec);
    (
        certified_prefix(&upper, &cone.high, x_bound, true),
        certified_prefix(&lower, &cone.low, x_bound, false),
    )
}

/// The sail of `cone` restricted to vertices certified from the columns
/// `1..=x_bound`, ordered from the lower end through `(1, 0)` to the upper end.
pub fn sail_of_cone(cone: &Cone, x_bound: u64) -> Result<SailPolyline> {
    sail_of_cone_with(cone, x_bound, Exec::default())
}

pub fn sail_of_cone_with(cone: &Cone, x_bound: u64, exec: Exec) -> Result<SailPolyline> {
    if x_bound < 2 {
        return Err(Error::Precondition("x_bound must be at least 2".into()));
    }
    let xb = i64::try_from(x_bound)
        .ok()
        .filter(|&x| (x as i128) < MAX_X_BOUND)
        .ok_or_else(|| Error::ResourceLimit(format!("x_bound {x_bound} too large")))?;
    let (upper, lower) = chains_at(cone, xb, exec);
    Ok(assemble(cone, &upper, &lower))
}

fn assemble(cone: &Cone, upper: &[IPoint], lower: &[IPoint]) -> SailPolyline {
    let mut vertices: Vec<Point> = Vec::new();
    if lower.is_empty() {
        vertices.push((BigInt::from(1), BigInt::zero()));
    } else {
        vertices.extend(lower.iter().rev().map(|&p| big(p)));
    }
    if upper.is_empty() {
        let top = SlopeFloor::new(&cone.high).floor(1);
        vertices.push((BigInt::from(1), BigInt::from(top)));
    } else {
        vertices.extend(upper.iter().map(|&p| big(p)));
    }
    SailPolyline { vertices }
}

/// Certified chains with at least `need_upper` upper and `need_lower` lower
/// vertices, doubling the enumeration bound from `start` as needed.
pub fn sail_chains(
    cone: &Cone,
    need_upper: usize,
    need_lower: usize,
    start: u64,
    exec: Exec,
) -> Result<SailChains> {
    let mut xb = start.max(4) as i128;
    loop {
        if xb >= MAX_X_BOUND {
            return Err(Error::ResourceLimit(format!(
                "sail needs more than {MAX_X_BOUND} columns"
            )));
        }
        let (upper, lower) = chains_at(cone, xb as i64, exec);
        if upper.len() >= need_upper && lower.len() >= need_lower {
            return Ok(SailChains {
                lower: lower.into_iter().map(big).collect(),
                upper: upper.into_iter().map(big).collect(),
            });
        }
        xb *= 2;
    }
}

/// A polyline covering at least `periods` full periods of the sail of
/// `cone_of_sequence(s)` above `(1, 0)`, and the same count below.
pub fn sail_of_sequence(s: &Seq, periods: usize, exec: Exec) -> Result<SailPolyline> {
    let cone = cone_of_sequence(s)?;
    let half = s.len() / 2;
    let need = half * periods + 2;
    let start = max_entry(s)?;
    let ch = sail_chains(&cone, need, need, start, exec)?;
    let mut vertices: Vec<Point> = ch.lower.iter().rev().cloned().collect();
    vertices.extend(ch.upper);
    Ok(SailPolyline { vertices })
}

/// Largest entry of `M_s`, used as the starting enumeration bound.
fn max_entry(s: &Seq) -> Result<u64> {
    let m = map_a(s)?;
    let mx = [&m.a, &m.b, &m.c, &m.d].into_iter().max().cloned().unwrap_or_default();
    Ok(mx.to_u64().unwrap_or(u64::MAX / 4).clamp(4, 1 << 20))
}

/// Integer length of the segment `AB`.
pub fn integer_length(a: &Point, b: &Point) -> BigInt {
    (&b.0 - &a.0).abs().gcd(&(&b.1 - &a.1).abs())
}

/// Integer sine of the angle `ABC`.
pub fn integer_sine(a: &Point, b: &Point, c: &Point) -> BigInt {
    let (ux, uy) = (&b.0 - &a.0, &b.1 - &a.1);
    let (vx, vy) = (&c.0 - &b.0, &c.1 - &b.1);
    let det = (&ux * &vy - &uy * &vx).abs();
    det / (integer_length(a, b) * integer_length(b, c))
}

/// LLS sequence read along a sail, with the element `il(A_0 A_1)` marked,
/// where `A_0 = (1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LlsData {
    pub sequence: Seq,
    pub marked_index: usize,
}

impl LlsData {
    /// The `len` elements starting at the mark.
    pub fn from_mark(&self, len: usize) -> Option<Seq> {
        let e = self.sequence.elements();
        let end = self.marked_index.checked_add(len)?;
        (end <= e.len()).then(|| Seq::new(e[self.marked_index..end].to_vec()).expect("positive"))
    }
}

/// Alternating integer lengths and sines `[il, lsin, il, ..., il]`.
pub fn lls_from_sail(p: &SailPolyline) -> Result<LlsData> {
    let v = &p.vertices;
    if v.len() < 2 {
        return Err(Error::Precondition("a sail needs at least two vertices".into()));
    }
    let mut elems = Vec::with_capacity(2 * v.len());
    for k in 0..v.len() - 1 {
        if k > 0 {
            elems.push(integer_sine(&v[k - 1], &v[k], &v[k + 1]));
        }
        elems.push(integer_length(&v[k], &v[k + 1]));
    }
    let elems: Vec<_> = elems
        .into_iter()
        .map(|e| e.to_biguint().filter(|u| !u.is_zero()))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Precondition("degenerate sail (repeated or collinear vertices)".into()))?;
    let origin: Point = (BigInt::from(1), BigInt::zero());
    let seg = (0..v.len() - 1)
        .find(|&k| v[k] == origin)
        .or_else(|| (0..v.len() - 1).find(|&k| on_segment(&v[k], &v[k + 1], &origin)))
        .ok_or_else(|| Error::Precondition("(1,0) does not lie on the sail".into()))?;
    Ok(LlsData { sequence: Seq::new(elems)?, marked_index: 2 * seg })
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    let cr = (&b.0 - &a.0) * (&p.1 - &a.1) - (&b.1 - &a.1) * (&p.0 - &a.0);
    cr.is_zero()
        && p.0 >= a.0.clone().min(b.0.clone())
        && p.0 <= a.0.clone().max(b.0.clone())
        && p.1 >= a.1.clone().min(b.1.clone())
        && p.1 <= a.1.clone().max(b.1.clone())
}

/// Minimum of `|f|` over `0 < max(|x|, |y|) <= bound` with a witness.
///
/// Ties prefer smaller `|y|`, then smaller `|x|`, then nonnegative
/// coordinates, so the witness for a form minimal at `(1, 0)` is `(1, 0)`.
pub fn markov_minimum_bruteforce(f: &QuadForm, bound: u64) -> Result<(BigInt, Point)> {
    markov_minimum_bruteforce_with(f, bound, Exec::default())
}

type Key = (u128, u64, u64, bool, bool);

fn key_of(v: i128, x: i64, y: i64) -> Key {
    (v.unsigned_abs(), y.unsigned_abs(), x.unsigned_abs(), x < 0, y < 0)
}

pub fn markov_minimum_bruteforce_with(
    f: &QuadForm,
    bound: u64,
    exec: Exec,
) -> Result<(BigInt, Point)> {
    if bound == 0 {
        return Err(Error::Precondition("box must be positive".into()));
    }
    if !f.discriminant().is_positive() {
        return Err(Error::Precondition(format!("form {f} is not indefinite")));
    }
    let n = i64::try_from(bound)
        .ok()
        .filter(|&n| n <= 1 << 20)
        .ok_or_else(|| Error::ResourceLimit(format!("box {bound} too large")))?;
    // i128 is safe when 3 * max|coef| * n^2 stays below 2^120
    let coef_max = [&f.a, &f.b, &f.c].into_iter().map(|c| c.abs()).max().unwrap_or_default();
    let fast = coef_max.bits() + 2 * (64 - (n as u64).leading_zeros() as u64) + 2 < 120;
    let rows: Vec<Option<(Key, i64, i64, BigInt)>> = if fast {
        let (a, b, c) = (
            f.a.to_i128().expect("checked"),
            f.b.to_i128().expect("checked"),
            f.c.to_i128().expect("checked"),
        );
        exec.map_range(-n..n + 1, |y| {
            let mut best: Option<(Key, i64)> = None;
            let yi = y as i128;
            for x in -n..=n {
                if x == 0 && y == 0 {
                    continue;
                }
                let xi = x as i128;
                let v = a * xi * xi + b * xi * yi + c * yi * yi;
                let k = key_of(v, x, y);
                if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                    best = Some((k, x));
                }
            }
            best.map(|(k, x)| {
                let v = a * (x as i128) * (x as i128) + b * (x as i128) * yi + c * yi * yi;
                (k, x, y, BigInt::from(v.abs()))
            })
        })
    } else {
        exec.map_range(-n..n + 1, |y| {
            let mut best: Option<((BigInt, u64, u64, bool, bool), i64)> = None;
            let yb = BigInt::from(y);
            for x in -n..=n {
                if x == 0 && y == 0 {
                    continue;
                }
                let v = f.eval(&BigInt::from(x), &yb).abs();
                let k = (v, y.unsigned_abs(), x.unsigned_abs(), x < 0, y < 0);
                if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                    best = Some((k, x));
                }
            }
            best.map(|(k, x)| {
                let key = (0u128, k.1, k.2, k.3, k.4);
                (key, x, y, k.0)
            })
        })
    };
    let best = rows
        .into_iter()
        .flatten()
        .min_by(|l, r| (&l.3, l.0).cmp(&(&r.3, r.0)))
        .expect("box contains nonzero points");
    Ok((best.3, (BigInt::from(best.1), BigInt::from(best.2))))
}

/// Outcome of an extremality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub extremal: bool,
    /// `f(1, 0) = K̆(s)`.
    pub value_at_origin: BigInt,
    /// Least `|f|` over the inspected sail vertices.
    pub minimum: BigInt,
    /// Vertices attaining `minimum`, in the coordinates of `f = map_C(s)`.
    pub witnesses: Vec<Point>,
    /// The second cone was skipped because `s` is evenly palindromic.
    pub used_palindromic_shortcut: bool,
}

/// Sail vertices of one period above `(1, 0)` (inclusive at both ends).
fn period_vertices(s: &Seq, exec: Exec) -> Result<Vec<Point>> {
    let cone = cone_of_sequence(s)?;
    let half = s.len() / 2;
    let ch = sail_chains(&cone, half + 1, 0, max_entry(s)?, exec)?;
    let mut pts = vec![ch.lower.first().cloned().unwrap_or((BigInt::from(1), BigInt::zero()))];
    pts.extend(ch.upper.into_iter().take(half + 1));
    Ok(pts)
}

fn normalize_sign(p: Point) -> Point {
    if p.0.is_negative() || (p.0.is_zero() && p.1.is_negative()) {
        (-p.0, -p.1)
    } else {
        p
    }
}

/// Whether `map_C(s)` attains its Markov minimum at `(1, 0)`.
///
/// The minimum of `|f|` over nonzero lattice points is attained at sail
/// vertices of the arrangement's cones, and the sails are periodic under
/// `M_s`. The cone through `(1, 0)` is scanned over one period. The adjacent
/// cone, rotated by `(x, y) -> (y, -x)`, is the cone of `reverse(s)` with
/// form `map_C(reverse(s))`, so it is scanned the same way unless `s` is
/// evenly palindromic, in which case the two sails are congruent.
pub fn is_extremal(s: &Seq) -> Result<ExtremalReport> {
    is_extremal_with(s, true, Exec::default())
}

pub fn is_extremal_with(s: &Seq, allow_shortcut: bool, exec: Exec) -> Result<ExtremalReport> {
    s.require_even_nonempty()?;
    let f = map_c(s)?;
    let b = f.a.clone();
    let mut cands: Vec<(BigInt, Point)> = period_vertices(s, exec)?
        .into_iter()
        .map(|p| (f.eval(&p.0, &p.1).abs(), p))
        .collect();
    let shortcut = allow_shortcut && s.is_evenly_palindromic()?;
    if !shortcut {
        let r = s.reverse();
        let g = map_c(&r)?;
        for (x, y) in period_vertices(&r, exec)? {
            let v = g.eval(&x, &y).abs();
            cands.push((v, (-y, x)));
        }
    }
    let minimum = cands.iter().map(|c| c.0.clone()).min().expect("nonempty");
    let mut witnesses: Vec<Point> = cands
        .into_iter()
        .filter(|c| c.0 == minimum)
        .map(|c| normalize_sign(c.1))
        .collect();
    witnesses.sort_by(|l, r| (l.1.abs(), l.0.abs(), &l.0, &l.1).cmp(&(r.1.abs(), r.0.abs(), &r.0, &r.1)));
    witnesses.dedup();
    Ok(ExtremalReport {
        extremal: minimum == b,
        value_at_origin: b,
        minimum,
        witnesses,
        used_palindromic_shortcut: shortcut,
    })
}

/// SVG drawing of sails with their cone rays, one polyline per sail.
pub fn sails_to_svg(items: &[(Cone, SailPolyline)]) -> String {
    let mut xmax = 2.0f64;
    let mut ymin = -1.0f64;
    let mut ymax = 2.0f64;
    for (_, p) in items {
        for (x, y) in &p.vertices {
            let (x, y) = (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0));
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    let (w, h) = (xmax + 1.0, ymax - ymin + 2.0);
    let scale = 600.0 / w.max(h);
    let tx = |x: f64| (x + 0.5) * scale;
    let ty = |y: f64| (ymax + 1.0 - y) * scale;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}">"#,
        w * scale,
        h * scale
    );
    let colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];
    for (i, (cone, p)) in items.iter().enumerate() {
        let color = colors[i % colors.len()];
        for slope in [&cone.high, &cone.low] {
            let s = slope.to_f64();
            let xe = xmax.min(if s.abs() > 1e-12 { (ymax.max(-ymin)) / s.abs() } else { xmax });
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-dasharray="4"/>"#,
                tx(0.0),
                ty(0.0),
                tx(xe),
                ty(s * xe)
            );
        }
        let pts: Vec<String> = p
            .vertices
            .iter()
            .map(|(x, y)| {
                format!(
                    "{:.2},{:.2}",
                    tx(x.to_f64().unwrap_or(0.0)),
                    ty(y.to_f64().unwrap_or(0.0))
                )
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            pts.join(" ")
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[u64]) -> Seq {
        Seq::from_u64s(xs)
    }

    fn pt(x: i64, y: i64) -> Point {
        (BigInt::from(x), BigInt::from(y))
    }

    #[test]
    fn golden_cone() {
        let c = cone_of_sequence(&s(&[1, 1])).unwrap();
        let phi = Surd::new(1.into(), 1.into(), 5u32.into(), 2.into()).unwrap();
        assert_eq!(c.slope_high(), &phi);
        assert_eq!(c.slope_low(), &phi.conjugate());
        let p = sail_of_cone(&c, 20).unwrap();
        assert!(p.vertices.contains(&pt(1, 0)));
        assert!(p.vertices.contains(&pt(1, 1)));
    }

    #[test]
    fn silver_cone_has_origin_vertex() {
        let c = cone_of_sequence(&s(&[2, 2])).unwrap();
        let p = sail_of_cone(&c, 30).unwrap();
        assert!(p.vertices.contains(&pt(1, 0)));
        let small = sail_of_cone(&c, 2).unwrap();
        assert!(!small.vertices.is_empty());
    }

    #[test]
    fn eigenline_slopes() {
        // M (1, slope) is parallel to (1, slope)
        let m = map_a(&s(&[2, 2, 3, 3])).unwrap();
        let c = cone_of_sequence(&s(&[2, 2, 3, 3])).unwrap();
        for slope in [c.slope_high(), c.slope_low()] {
            let a = Surd::from_integer(m.a.clone());
            let cc = Surd::from_integer(m.c.clone());
            let b = Surd::from_integer(m.b.clone());
            let d = Surd::from_integer(m.d.clone());
            let img_x = &a + &(&cc * slope);
            let img_y = &b + &(&d * slope);
            assert_eq!(img_y, &img_x * slope);
        }
    }

    #[test]
    fn lls_period_recovered() {
        let a = s(&[2, 2, 3, 3]);
        let p = sail_of_sequence(&a, 2, Exec::Sequential).unwrap();
        let lls = lls_from_sail(&p).unwrap();
        assert_eq!(lls.from_mark(8).unwrap(), a.concat(&a));
    }

    #[test]
    fn dual_cone_periods() {
        let a = s(&[1, 1, 2, 3]);
        let p = sail_of_sequence(&a, 1, Exec::Sequential).unwrap();
        assert_eq!(lls_from_sail(&p).unwrap().from_mark(4).unwrap(), a);
        let r = a.reverse();
        let p = sail_of_sequence(&r, 1, Exec::Sequential).unwrap();
        assert_eq!(lls_from_sail(&p).unwrap().from_mark(4).unwrap(), s(&[3, 2, 1, 1]));
    }

    #[test]
    fn trivial_polyline() {
        let p = SailPolyline { vertices: vec![pt(1, 0), pt(1, 1)] };
        let l = lls_from_sail(&p).unwrap();
        assert_eq!(l.sequence, s(&[1]));
        assert_eq!(l.marked_index, 0);
        assert!(lls_from_sail(&SailPolyline { vertices: vec![pt(1, 0)] }).is_err());
    }

    #[test]
    fn bruteforce_minima() {
        let (v, w) = markov_minimum_bruteforce(&QuadForm::from_i64(1, 1, -1), 50).unwrap();
        assert_eq!((v, w), (BigInt::from(1), pt(1, 0)));
        let (v, w) = markov_minimum_bruteforce(&QuadForm::from_i64(17, 49, -23), 60).unwrap();
        assert_eq!((v, w), (BigInt::from(17), pt(1, 0)));
        let xi = s(&[1, 1, 2, 2, 2, 2, 1, 1, 2, 2]);
        let f = map_c(&xi).unwrap();
        assert_eq!(f, QuadForm::from_i64(437, 787, -611));
        let (v, w) = markov_minimum_bruteforce(&f, 50).unwrap();
        assert_eq!(v, BigInt::from(433));
        // (1,2) ties with (17,29) and wins on the smaller coordinates
        assert_eq!(w, pt(1, 2));
        assert_eq!(f.eval(&BigInt::from(17), &BigInt::from(29)), BigInt::from(433));
    }

    #[test]
    fn bruteforce_strategies_agree() {
        let f = QuadForm::from_i64(185, 535, -251);
        assert_eq!(
            markov_minimum_bruteforce_with(&f, 40, Exec::Sequential).unwrap(),
            markov_minimum_bruteforce_with(&f, 40, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn extremality() {
        assert!(is_extremal(&s(&[1, 1])).unwrap().extremal);
        assert!(is_extremal(&s(&[4, 4, 11, 11])).unwrap().extremal);
        let r = is_extremal(&s(&[1, 1, 2, 2, 2, 2, 1, 1, 2, 2])).unwrap();
        assert!(!r.extremal);
        assert_eq!(r.minimum, BigInt::from(433));
        assert_eq!(r.witnesses, vec![pt(17, 29)]);
        assert!(matches!(is_extremal(&s(&[1, 2, 3])), Err(Error::OddLength(3))));
    }

    #[test]
    fn palindromic_shortcut_agrees() {
        for a in [s(&[1, 1]), s(&[1, 1, 2, 2]), s(&[2, 2, 3, 3]), s(&[4, 4, 11, 11])] {
            let fast = is_extremal_with(&a, true, Exec::Sequential).unwrap();
            let full = is_extremal_with(&a, false, Exec::Sequential).unwrap();
            assert!(fast.used_palindromic_shortcut);
            assert_eq!(fast.extremal, full.extremal);
            assert_eq!(fast.minimum, full.minimum);
        }
    }

    #[test]
    fn svg_output() {
        let c = cone_of_sequence(&s(&[1, 1])).unwrap();
        let p = sail_of_cone(&c, 10).unwrap();
        let svg = sails_to_svg(&[(c, p)]);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("<polyline"));
    }
}
