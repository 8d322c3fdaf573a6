use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub const TWO_PI: f64 = 2.0 * PI;

/// Wraps an angle into `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TWO_PI);
    if t >= TWO_PI {
        0.0
    } else {
        t
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point { x: a[0], y: a[1] }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn polar(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point { x: c, y: s }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Counter-clockwise quarter turn.
    pub fn perp(self) -> Point {
        Point { x: -self.y, y: self.x }
    }

    pub fn normalized(self) -> Point {
        let n = self.norm();
        Point { x: self.x / n, y: self.y / n }
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }

    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        Point { x: c * self.x - s * self.y, y: s * self.x + c * self.y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point { x: self.x + o.x, y: self.y + o.y }
    }
}

impl AddAssign for Point {
    fn add_assign(&mut self, o: Point) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point { x: self.x - o.x, y: self.y - o.y }
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point { x: self.x * k, y: self.y * k }
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point { x: -self.x, y: -self.y }
    }
}

/// A direction on the unit circle stored by its angle in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "f64", into = "f64")]
pub struct UnitDir {
    theta: f64,
}

impl From<f64> for UnitDir {
    fn from(theta: f64) -> Self {
        UnitDir::new(theta)
    }
}

impl From<UnitDir> for f64 {
    fn from(u: UnitDir) -> f64 {
        u.theta
    }
}

impl UnitDir {
    pub fn new(theta: f64) -> Self {
        UnitDir { theta: wrap_angle(theta) }
    }

    pub fn from_vec(v: Point) -> Self {
        UnitDir::new(v.angle())
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    pub fn vec(self) -> Point {
        Point::polar(self.theta)
    }

    pub fn opposite(self) -> UnitDir {
        UnitDir::new(self.theta + PI)
    }
}

/// Closed halfplane `{x : normal·x ≤ offset}` with a unit normal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlane {
    pub normal: Point,
    pub offset: f64,
}

impl HalfPlane {
    pub fn new(theta: f64, offset: f64) -> Self {
        HalfPlane { normal: Point::polar(theta), offset }
    }

    /// Halfplane with outward normal angle `theta` whose boundary passes through `p`.
    pub fn through(theta: f64, p: Point) -> Self {
        let n = Point::polar(theta);
        HalfPlane { normal: n, offset: n.dot(p) }
    }

    pub fn residual(&self, p: Point) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

/// Closed disk.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub const fn new(center: Point, radius: f64) -> Self {
        Disk { center, radius }
    }

    pub fn residual(&self, p: Point) -> f64 {
        p.dist(self.center) - self.radius
    }
}
