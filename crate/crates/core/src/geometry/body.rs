use super::point::{wrap_angle, Point, UnitDir, TWO_PI};
use super::GeometryError;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;

/// Absolute tolerance for chain closure and predicate signs.
pub const TAU_GEOM: f64 = 1e-9;

/// Tolerance on the total normal turn of a chain.
const TURN_TOL: f64 = 1e-6;

/// Boundary pieces shorter than this are merged away when rebuilding a chain.
const MIN_FEATURE: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BoundaryElement {
    Segment {
        a: Point,
        b: Point,
    },
    Arc {
        center: Point,
        radius: f64,
        normal_start: UnitDir,
        normal_end: UnitDir,
    },
}

impl BoundaryElement {
    pub fn arc(center: Point, radius: f64, start: f64, end: f64) -> Self {
        BoundaryElement::Arc {
            center,
            radius,
            normal_start: UnitDir::new(start),
            normal_end: UnitDir::new(end),
        }
    }

    /// Sweep of an arc in `(0, 2π]`; zero for segments.
    pub fn sweep(&self) -> f64 {
        match *self {
            BoundaryElement::Segment { .. } => 0.0,
            BoundaryElement::Arc { normal_start, normal_end, .. } => {
                arc_sweep(normal_start.theta(), normal_end.theta())
            }
        }
    }

    pub fn start_point(&self) -> Point {
        match *self {
            BoundaryElement::Segment { a, .. } => a,
            BoundaryElement::Arc { center, radius, normal_start, .. } => {
                center + normal_start.vec() * radius
            }
        }
    }

    pub fn end_point(&self) -> Point {
        match *self {
            BoundaryElement::Segment { b, .. } => b,
            BoundaryElement::Arc { center, radius, normal_end, .. } => {
                center + normal_end.vec() * radius
            }
        }
    }

    /// Outward normal angle at the start of the element.
    pub fn start_normal(&self) -> f64 {
        match *self {
            BoundaryElement::Segment { a, b } => segment_normal(a, b),
            BoundaryElement::Arc { normal_start, .. } => normal_start.theta(),
        }
    }

    /// Outward normal angle at the end of the element.
    pub fn end_normal(&self) -> f64 {
        match *self {
            BoundaryElement::Segment { a, b } => segment_normal(a, b),
            BoundaryElement::Arc { normal_end, .. } => normal_end.theta(),
        }
    }

    fn map_points(&self, f: impl Fn(Point) -> Point, scale: f64, turn: f64) -> Self {
        match *self {
            BoundaryElement::Segment { a, b } => BoundaryElement::Segment { a: f(a), b: f(b) },
            BoundaryElement::Arc { center, radius, normal_start, normal_end } => {
                let full = (normal_end.theta() - normal_start.theta()).abs() < 1e-15;
                let start = normal_start.theta() + turn;
                BoundaryElement::Arc {
                    center: f(center),
                    radius: radius * scale,
                    normal_start: UnitDir::new(start),
                    normal_end: UnitDir::new(if full { start } else { normal_end.theta() + turn }),
                }
            }
        }
    }
}

fn segment_normal(a: Point, b: Point) -> f64 {
    let d = b - a;
    wrap_angle(Point::new(d.y, -d.x).angle())
}

/// CCW sweep from `start` to `end`; a vanishing difference means a full turn.
pub fn arc_sweep(start: f64, end: f64) -> f64 {
    let s = (end - start).rem_euclid(TWO_PI);
    if s < 1e-12 || s > TWO_PI - 1e-12 {
        TWO_PI
    } else {
        s
    }
}

/// Support-function piece: on its normal interval the body boundary is
/// `center + radius·u(θ)`; vertices have radius zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Piece {
    pub center: Point,
    pub radius: f64,
    pub start: f64,
    pub sweep: f64,
}

impl Piece {
    pub fn point(&self, theta: f64) -> Point {
        self.center + Point::polar(theta) * self.radius
    }

    pub fn support(&self, u: Point) -> f64 {
        self.center.dot(u) + self.radius
    }

    pub fn end(&self) -> f64 {
        self.start + self.sweep
    }

    pub fn start_point(&self) -> Point {
        self.point(self.start)
    }

    pub fn end_point(&self) -> Point {
        self.point(self.end())
    }

    /// Whether `theta` lies in the closed normal interval of the piece.
    pub fn contains(&self, theta: f64, tol: f64) -> bool {
        self.sweep >= TWO_PI - 1e-12 || wrap_angle(theta - self.start) <= self.sweep + tol
            || wrap_angle(theta - self.start) >= TWO_PI - tol
    }
}

/// Cyclic list of pieces with cumulative offsets for lookup by angle.
#[derive(Clone, Debug, PartialEq)]
pub struct PieceSet {
    pieces: Vec<Piece>,
    offsets: Vec<f64>,
}

impl PieceSet {
    pub fn new(pieces: Vec<Piece>) -> Self {
        let mut offsets = Vec::with_capacity(pieces.len());
        let mut acc = 0.0;
        for p in &pieces {
            offsets.push(acc);
            acc += p.sweep;
        }
        PieceSet { pieces, offsets }
    }

    /// A single point or disk covering every direction.
    pub fn full(center: Point, radius: f64) -> Self {
        PieceSet::new(vec![Piece { center, radius, start: 0.0, sweep: TWO_PI }])
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn index_at(&self, theta: f64) -> usize {
        let t = wrap_angle(theta - self.pieces[0].start);
        let k = self.offsets.partition_point(|&o| o <= t);
        k.saturating_sub(1)
    }

    pub fn piece_at(&self, theta: f64) -> &Piece {
        &self.pieces[self.index_at(theta)]
    }

    pub fn support(&self, theta: f64) -> f64 {
        self.piece_at(theta).support(Point::polar(theta))
    }

    /// Normalized start angles of all pieces.
    pub fn breakpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.pieces.iter().map(|p| wrap_angle(p.start))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    Empty,
    NonFinite { index: usize },
    DegenerateSegment { index: usize, length: f64 },
    NonPositiveRadius { index: usize, radius: f64 },
    Closure { index: usize, gap: f64 },
    NormalMonotonicity { total_turn: f64 },
    EmptyInterior { area: f64 },
    DegenerateFlag { area: f64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no boundary elements"),
            Violation::NonFinite { index } => write!(f, "element {index}: non-finite data"),
            Violation::DegenerateSegment { index, length } => {
                write!(f, "element {index}: segment of length {length:e}")
            }
            Violation::NonPositiveRadius { index, radius } => {
                write!(f, "element {index}: arc radius {radius}")
            }
            Violation::Closure { index, gap } => {
                write!(f, "closure: gap {gap:e} after element {index}")
            }
            Violation::NormalMonotonicity { total_turn } => {
                write!(f, "normal monotonicity: total turn {total_turn} instead of 2π")
            }
            Violation::EmptyInterior { area } => {
                write!(f, "empty interior (area {area:e}) without the degenerate flag")
            }
            Violation::DegenerateFlag { area } => {
                write!(f, "degenerate flag set on a body of area {area:e}")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn mentions(&self, needle: &str) -> bool {
        self.violations.iter().any(|v| v.to_string().contains(needle))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "clean");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Convex body bounded by a CCW chain of segments and outward arcs.
#[derive(Clone, Debug)]
pub struct ArcPolygon {
    elements: Vec<BoundaryElement>,
    degenerate: bool,
    pieces: Option<PieceSet>,
}

impl PartialEq for ArcPolygon {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.degenerate == other.degenerate
    }
}

#[derive(Serialize, Deserialize)]
struct BodyJson {
    degenerate: bool,
    elements: Vec<BoundaryElement>,
}

impl Serialize for ArcPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BodyJson { degenerate: self.degenerate, elements: self.elements.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ArcPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BodyJson::deserialize(d)?;
        Ok(ArcPolygon::from_elements(raw.elements, raw.degenerate))
    }
}

impl ArcPolygon {
    /// Builds a body without rejecting invalid chains; see [`ArcPolygon::validate`].
    pub fn from_elements(elements: Vec<BoundaryElement>, degenerate: bool) -> Self {
        let mut body = ArcPolygon { elements, degenerate, pieces: None };
        let (report, pieces) = body.analyze();
        if report.is_clean() {
            body.pieces = pieces;
        }
        body
    }

    pub fn try_from_elements(
        elements: Vec<BoundaryElement>,
        degenerate: bool,
    ) -> Result<Self, GeometryError> {
        let body = ArcPolygon::from_elements(elements, degenerate);
        if body.pieces.is_none() {
            return Err(GeometryError::InvalidBody(body.validate()));
        }
        Ok(body)
    }

    /// Rebuilds a chain from support pieces, dropping vanishing features.
    pub fn from_pieces(pieces: &[Piece]) -> Result<Self, GeometryError> {
        let pieces = merge_pieces(pieces);
        if pieces.is_empty() {
            return Err(GeometryError::Coincident);
        }
        let n = pieces.len();
        let mut elements = Vec::new();
        for k in 0..n {
            let p = &pieces[k];
            if p.radius > MIN_FEATURE && p.radius * p.sweep > MIN_FEATURE {
                let full = p.sweep >= TWO_PI - 1e-12;
                let end = if full { p.start } else { p.end() };
                elements.push(BoundaryElement::arc(p.center, p.radius, p.start, end));
            }
            let q = &pieces[(k + 1) % n];
            let a = p.end_point();
            let b = q.start_point();
            if a.dist(b) > MIN_FEATURE {
                elements.push(BoundaryElement::Segment { a, b });
            }
        }
        if elements.is_empty() {
            return Err(GeometryError::Coincident);
        }
        let area = chain_area(&elements);
        let degenerate = area.abs() < 1e-12;
        ArcPolygon::try_from_elements(elements, degenerate)
    }

    pub fn disk(center: Point, radius: f64) -> Self {
        ArcPolygon::from_elements(vec![BoundaryElement::arc(center, radius, 0.0, 0.0)], false)
    }

    /// The degenerate body consisting of the segment `[a, b]`.
    pub fn segment(a: Point, b: Point) -> Self {
        ArcPolygon::from_elements(
            vec![BoundaryElement::Segment { a, b }, BoundaryElement::Segment { a: b, b: a }],
            true,
        )
    }

    /// Convex polygon from CCW vertices.
    pub fn polygon(vertices: &[Point]) -> Result<Self, GeometryError> {
        let n = vertices.len();
        let elements = (0..n)
            .map(|i| BoundaryElement::Segment { a: vertices[i], b: vertices[(i + 1) % n] })
            .collect::<Vec<_>>();
        let area = chain_area(&elements);
        ArcPolygon::try_from_elements(elements, area.abs() < 1e-12)
    }

    pub fn elements(&self) -> &[BoundaryElement] {
        &self.elements
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn is_valid(&self) -> bool {
        self.pieces.is_some()
    }

    pub fn pieces(&self) -> Result<&PieceSet, GeometryError> {
        self.pieces.as_ref().ok_or_else(|| GeometryError::InvalidBody(self.validate()))
    }

    pub fn validate(&self) -> ValidationReport {
        self.analyze().0
    }

    pub fn area(&self) -> f64 {
        chain_area(&self.elements)
    }

    fn analyze(&self) -> (ValidationReport, Option<PieceSet>) {
        let mut v = Vec::new();
        let els = &self.elements;
        if els.is_empty() {
            v.push(Violation::Empty);
            return (ValidationReport { violations: v }, None);
        }
        for (i, e) in els.iter().enumerate() {
            match *e {
                BoundaryElement::Segment { a, b } => {
                    if !a.is_finite() || !b.is_finite() {
                        v.push(Violation::NonFinite { index: i });
                    } else if a.dist(b) <= 1e-14 {
                        v.push(Violation::DegenerateSegment { index: i, length: a.dist(b) });
                    }
                }
                BoundaryElement::Arc { center, radius, normal_start, normal_end } => {
                    if !center.is_finite()
                        || !radius.is_finite()
                        || !normal_start.theta().is_finite()
                        || !normal_end.theta().is_finite()
                    {
                        v.push(Violation::NonFinite { index: i });
                    } else if radius <= 0.0 {
                        v.push(Violation::NonPositiveRadius { index: i, radius });
                    }
                }
            }
        }
        if !v.is_empty() {
            return (ValidationReport { violations: v }, None);
        }
        let n = els.len();
        for i in 0..n {
            let gap = els[i].end_point().dist(els[(i + 1) % n].start_point());
            if gap > TAU_GEOM {
                v.push(Violation::Closure { index: i, gap });
            }
        }
        let mut pieces = Vec::new();
        let mut total = 0.0;
        for i in 0..n {
            let e = &els[i];
            if let BoundaryElement::Arc { center, radius, normal_start, .. } = *e {
                let sweep = e.sweep();
                total += sweep;
                pieces.push(Piece { center, radius, start: normal_start.theta(), sweep });
            }
            let next = &els[(i + 1) % n];
            let from = e.end_normal();
            let mut cone = (next.start_normal() - from).rem_euclid(TWO_PI);
            if cone > TWO_PI - 1e-9 {
                cone = 0.0;
            }
            total += cone;
            if cone > 0.0 {
                pieces.push(Piece {
                    center: e.end_point(),
                    radius: 0.0,
                    start: wrap_angle(from),
                    sweep: cone,
                });
            }
        }
        if (total - TWO_PI).abs() > TURN_TOL {
            v.push(Violation::NormalMonotonicity { total_turn: total });
        }
        let area = chain_area(els);
        if !self.degenerate && area <= 1e-12 {
            v.push(Violation::EmptyInterior { area });
        }
        if self.degenerate && area.abs() > 1e-9 {
            v.push(Violation::DegenerateFlag { area });
        }
        let report = ValidationReport { violations: v };
        if report.is_clean() && !pieces.is_empty() {
            // Normalize tiny rounding so sweeps add to exactly 2π.
            let scale = TWO_PI / total;
            for p in &mut pieces {
                p.sweep *= scale;
                p.start = wrap_angle(p.start);
            }
            (report, Some(PieceSet::new(pieces)))
        } else {
            (report, None)
        }
    }

    /// Support function value and a support point in direction `u`.
    pub fn support(&self, u: UnitDir) -> Result<SupportValue, GeometryError> {
        let ps = self.pieces()?;
        let p = ps.piece_at(u.theta());
        let v = u.vec();
        Ok(SupportValue { h: p.support(v), point: p.center + v * p.radius })
    }

    pub fn support_value(&self, theta: f64) -> Result<f64, GeometryError> {
        Ok(self.pieces()?.support(theta))
    }

    pub fn breadth(&self, theta: f64) -> Result<f64, GeometryError> {
        let ps = self.pieces()?;
        Ok(ps.support(theta) + ps.support(theta + PI))
    }

    /// Image under `p ↦ center + λ(p − center)`.
    pub fn scale(&self, lambda: f64, center: Point) -> Result<Self, GeometryError> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(GeometryError::NonPositiveScale(lambda));
        }
        self.pieces()?;
        let els = self
            .elements
            .iter()
            .map(|e| e.map_points(|p| center + (p - center) * lambda, lambda, 0.0))
            .collect();
        ArcPolygon::try_from_elements(els, self.degenerate)
    }

    pub fn translate(&self, v: Point) -> Result<Self, GeometryError> {
        self.pieces()?;
        let els = self.elements.iter().map(|e| e.map_points(|p| p + v, 1.0, 0.0)).collect();
        ArcPolygon::try_from_elements(els, self.degenerate)
    }

    /// Rotation about the origin.
    pub fn rotate(&self, angle: f64) -> Result<Self, GeometryError> {
        self.pieces()?;
        let els = self
            .elements
            .iter()
            .map(|e| e.map_points(|p| p.rotate(angle), 1.0, angle))
            .collect();
        ArcPolygon::try_from_elements(els, self.degenerate)
    }

    /// Canonical form: pieces merged, vanishing features dropped.
    pub fn canonical(&self) -> Result<Self, GeometryError> {
        if self.degenerate {
            self.pieces()?;
            return Ok(self.clone());
        }
        ArcPolygon::from_pieces(self.pieces()?.pieces())
    }

    /// Corner points of the chain (segment endpoints and arc endpoints).
    pub fn vertices(&self) -> Vec<Point> {
        self.elements.iter().map(|e| e.start_point()).collect()
    }

    /// Boundary polyline with arcs subdivided to at most `max_step` radians.
    pub fn polyline(&self, max_step: f64) -> Vec<Point> {
        let mut out = Vec::new();
        for e in &self.elements {
            match *e {
                BoundaryElement::Segment { a, .. } => out.push(a),
                BoundaryElement::Arc { center, radius, normal_start, .. } => {
                    let sweep = e.sweep();
                    let k = (sweep / max_step).ceil().max(1.0) as usize;
                    for j in 0..k {
                        let t = normal_start.theta() + sweep * j as f64 / k as f64;
                        out.push(center + Point::polar(t) * radius);
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("body serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, GeometryError> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupportValue {
    pub h: f64,
    pub point: Point,
}

/// Signed area enclosed by a chain, arcs included.
pub fn chain_area(elements: &[BoundaryElement]) -> f64 {
    let mut area = 0.0;
    for e in elements {
        let a = e.start_point();
        let b = e.end_point();
        area += 0.5 * a.cross(b);
        if let BoundaryElement::Arc { radius, .. } = *e {
            let s = e.sweep();
            area += 0.5 * radius * radius * (s - s.sin());
        }
    }
    area
}

/// Merges consecutive pieces describing the same circle or vertex.
pub fn merge_pieces(pieces: &[Piece]) -> Vec<Piece> {
    let same = |a: &Piece, b: &Piece| {
        a.center.dist(b.center) <= 1e-12 && (a.radius - b.radius).abs() <= 1e-12
    };
    let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
    for p in pieces.iter().filter(|p| p.sweep > 0.0) {
        match out.last_mut() {
            Some(last) if same(last, p) => last.sweep += p.sweep,
            _ => out.push(*p),
        }
    }
    while out.len() > 1 && same(&out[0], out.last().unwrap()) {
        let last = out.pop().unwrap();
        out[0].start = last.start;
        out[0].sweep += last.sweep;
    }
    out
}
