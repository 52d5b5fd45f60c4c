//! Exact integer geometry: the shape types shared by every representation
//! and the intersection predicates they are compared with.
//!
//! Every predicate is decided with exact integer arithmetic (i128
//! intermediates for machine-word coordinates, `BigInt` where magnitudes
//! demand it) and treats shapes as closed point sets: touching counts as
//! intersecting.

use num_bigint::BigInt;

/// Shape identifier, shared across representations and solvers.
pub type Id = u32;

/// Optional per-shape weight. Solvers treat a missing weight as 1.
pub type Weight = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// Closed line segment between two distinct points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }
}

/// Closed interval `[lo, hi]` on the line, `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
    pub id: Id,
}

impl Interval {
    pub fn new(id: Id, lo: i64, hi: i64) -> Self {
        Interval { lo, hi, id }
    }
}

/// Chord of a circle given by two of the `2n` boundary positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chord {
    pub p: i64,
    pub q: i64,
    pub id: Id,
}

impl Chord {
    pub fn new(id: Id, p: i64, q: i64) -> Self {
        Chord { p, q, id }
    }
}

/// Orientation of an L-shape: which quadrant the two arms open into,
/// named by the position of the corner relative to the arms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LKind {
    /// Corner top-left: vertical arm down, horizontal arm right.
    UL,
    /// Corner top-right: vertical arm down, horizontal arm left.
    UR,
    /// Corner bottom-left: vertical arm up, horizontal arm right.
    LL,
    /// Corner bottom-right: vertical arm up, horizontal arm left.
    LR,
}

impl LKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            LKind::UL => "UL",
            LKind::UR => "UR",
            LKind::LL => "LL",
            LKind::LR => "LR",
        }
    }

    pub fn parse(s: &str) -> Option<LKind> {
        match s {
            "UL" => Some(LKind::UL),
            "UR" => Some(LKind::UR),
            "LL" => Some(LKind::LL),
            "LR" => Some(LKind::LR),
            _ => None,
        }
    }
}

/// Union of one vertical and one horizontal segment sharing the corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LShape {
    pub kind: LKind,
    pub corner: Point,
    pub vlen: i64,
    pub hlen: i64,
    pub id: Id,
}

impl LShape {
    pub fn new(id: Id, kind: LKind, corner: Point, vlen: i64, hlen: i64) -> Self {
        LShape { kind, corner, vlen, hlen, id }
    }

    /// The vertical arm as a segment.
    pub fn vertical(&self) -> Segment {
        let c = self.corner;
        let other_y = match self.kind {
            LKind::UL | LKind::UR => c.y - self.vlen,
            LKind::LL | LKind::LR => c.y + self.vlen,
        };
        Segment::new(c, Point::new(c.x, other_y))
    }

    /// The horizontal arm as a segment.
    pub fn horizontal(&self) -> Segment {
        let c = self.corner;
        let other_x = match self.kind {
            LKind::UL | LKind::LL => c.x + self.hlen,
            LKind::UR | LKind::LR => c.x - self.hlen,
        };
        Segment::new(c, Point::new(other_x, c.y))
    }

    /// Inclusive x-range covered by the shape.
    pub fn x_span(&self) -> (i64, i64) {
        match self.kind {
            LKind::UL | LKind::LL => (self.corner.x, self.corner.x + self.hlen),
            LKind::UR | LKind::LR => (self.corner.x - self.hlen, self.corner.x),
        }
    }

    /// The shape as a 3-vertex polyline: vertical endpoint, corner, horizontal endpoint.
    pub fn to_polyline(&self) -> Vec<Point> {
        vec![self.vertical().b, self.corner, self.horizontal().b]
    }
}

/// Grounded L-shape whose vertical and horizontal arms have the same length:
/// vertical `(ground_x, 0)..(ground_x, arm)`, then horizontal to `(ground_x + arm, arm)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareL {
    pub ground_x: i64,
    pub arm: i64,
    pub id: Id,
}

impl SquareL {
    pub fn new(id: Id, ground_x: i64, arm: i64) -> Self {
        SquareL { ground_x, arm, id }
    }

    pub fn to_polyline(&self) -> Vec<Point> {
        vec![
            Point::new(self.ground_x, 0),
            Point::new(self.ground_x, self.arm),
            Point::new(self.ground_x + self.arm, self.arm),
        ]
    }
}

/// Solid axis-parallel rectangle, `x1 < x2`, `y1 < y2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rectangle {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
    pub id: Id,
}

impl Rectangle {
    pub fn new(id: Id, x1: i64, y1: i64, x2: i64, y2: i64) -> Self {
        Rectangle { x1, y1, x2, y2, id }
    }
}

/// Simple polyline grounded on the line `y = 0` (first vertex), kept in `y >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundedString {
    pub vertices: Vec<Point>,
    pub id: Id,
    pub weight: Option<Weight>,
}

impl GroundedString {
    pub fn new(id: Id, vertices: Vec<Point>) -> Self {
        GroundedString { vertices, id, weight: None }
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    pub fn ground_x(&self) -> i64 {
        self.vertices[0].x
    }

    /// Sum of L1 lengths of all segments.
    pub fn total_length(&self) -> i64 {
        self.vertices
            .windows(2)
            .map(|w| (w[1].x - w[0].x).abs() + (w[1].y - w[0].y).abs())
            .sum()
    }

    pub fn max_y(&self) -> i64 {
        self.vertices.iter().map(|p| p.y).max().unwrap_or(0)
    }
}

/// Sign of the cross product `(b-a) × (c-a)`: counterclockwise > 0.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let abx = (b.x as i128) - (a.x as i128);
    let aby = (b.y as i128) - (a.y as i128);
    let acx = (c.x as i128) - (a.x as i128);
    let acy = (c.y as i128) - (a.y as i128);
    abx * acy - aby * acx
}

fn within(lo: i64, hi: i64, v: i64) -> bool {
    v >= lo.min(hi) && v <= lo.max(hi)
}

/// True iff `p` lies on the closed segment `ab`.
pub fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0 && within(a.x, b.x, p.x) && within(a.y, b.y, p.y)
}

/// Closed-segment intersection test; shared endpoints and collinear overlap count.
pub fn segments_intersect(s1: &Segment, s2: &Segment) -> bool {
    let (a, b, c, d) = (s1.a, s1.b, s2.a, s2.b);
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && on_segment(c, d, a))
        || (d2 == 0 && on_segment(c, d, b))
        || (d3 == 0 && on_segment(a, b, c))
        || (d4 == 0 && on_segment(a, b, d))
}

/// Big-integer point, used where coordinates exceed machine words
/// (grounded-segment heights grow like 2^j).
pub type BigPoint = (BigInt, BigInt);

fn big_orient(a: &BigPoint, b: &BigPoint, c: &BigPoint) -> BigInt {
    let abx = &b.0 - &a.0;
    let aby = &b.1 - &a.1;
    let acx = &c.0 - &a.0;
    let acy = &c.1 - &a.1;
    abx * acy - aby * acx
}

fn big_within(lo: &BigInt, hi: &BigInt, v: &BigInt) -> bool {
    v >= lo.min(hi) && v <= lo.max(hi)
}

fn big_on_segment(a: &BigPoint, b: &BigPoint, p: &BigPoint) -> bool {
    big_orient(a, b, p) == BigInt::from(0)
        && big_within(&a.0, &b.0, &p.0)
        && big_within(&a.1, &b.1, &p.1)
}

/// Exact closed-segment intersection over arbitrary-precision coordinates.
pub fn big_segments_intersect(a: &BigPoint, b: &BigPoint, c: &BigPoint, d: &BigPoint) -> bool {
    let zero = BigInt::from(0);
    let d1 = big_orient(c, d, a);
    let d2 = big_orient(c, d, b);
    let d3 = big_orient(a, b, c);
    let d4 = big_orient(a, b, d);
    if ((d1 > zero && d2 < zero) || (d1 < zero && d2 > zero))
        && ((d3 > zero && d4 < zero) || (d3 < zero && d4 > zero))
    {
        return true;
    }
    (d1 == zero && big_on_segment(c, d, a))
        || (d2 == zero && big_on_segment(c, d, b))
        || (d3 == zero && big_on_segment(a, b, c))
        || (d4 == zero && big_on_segment(a, b, d))
}

/// True iff any segment of `p1` meets any segment of `p2`.
pub fn polyline_intersect(p1: &GroundedString, p2: &GroundedString) -> bool {
    for s1 in p1.segments() {
        for s2 in p2.segments() {
            if segments_intersect(&s1, &s2) {
                return true;
            }
        }
    }
    // Degenerate single-vertex strings are rejected at validation, but a
    // shared first vertex between otherwise valid strings is still a point.
    false
}

/// Proper overlap: the intervals meet and neither contains the other
/// (`lo1 < lo2 < hi1 < hi2` in one of the two orders).
pub fn proper_overlap(i1: &Interval, i2: &Interval) -> bool {
    (i1.lo < i2.lo && i2.lo < i1.hi && i1.hi < i2.hi)
        || (i2.lo < i1.lo && i1.lo < i2.hi && i2.hi < i1.hi)
}

/// True iff `outer` contains `inner` (strictly, endpoints distinct).
pub fn interval_contains(outer: &Interval, inner: &Interval) -> bool {
    outer.lo < inner.lo && inner.hi < outer.hi
}

/// Chords cross iff exactly one endpoint of `c2` lies strictly between
/// `c1.p` and `c1.q` in cyclic order. With all four positions distinct this
/// reduces to the interleaving test on the cut-open line.
pub fn chords_cross(c1: &Chord, c2: &Chord) -> bool {
    let (p1, q1) = (c1.p.min(c1.q), c1.p.max(c1.q));
    let in1 = c2.p > p1 && c2.p < q1;
    let in2 = c2.q > p1 && c2.q < q1;
    in1 != in2
}

/// Does the L-shape meet the vertical line `x = at`?
pub fn lshape_crosses_vertical_line(shape: &LShape, at: i64) -> bool {
    let (lo, hi) = shape.x_span();
    at >= lo && at <= hi
}

/// Does the rectangle meet the vertical line `x = at`?
pub fn rect_crosses_vertical_line(r: &Rectangle, at: i64) -> bool {
    at >= r.x1 && at <= r.x2
}

/// Closed rectangles intersect iff both coordinate ranges overlap.
pub fn rects_intersect(a: &Rectangle, b: &Rectangle) -> bool {
    a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2
}

/// Pair predicate for grounded square-Ls. For ground positions g1 < g2 the
/// shapes meet iff the right shape's vertical reaches the left shape's
/// horizontal: `g2 <= g1 + arm1` and `arm1 <= arm2`.
pub fn squarels_intersect(a: &SquareL, b: &SquareL) -> bool {
    let (l, r) = if a.ground_x <= b.ground_x { (a, b) } else { (b, a) };
    if l.ground_x == r.ground_x {
        return true;
    }
    r.ground_x <= l.ground_x + l.arm && l.arm <= r.arm
}

/// L-shapes intersect; computed on the exact segment arms.
pub fn lshapes_intersect(a: &LShape, b: &LShape) -> bool {
    let (av, ah) = (a.vertical(), a.horizontal());
    let (bv, bh) = (b.vertical(), b.horizontal());
    segments_intersect(&av, &bv)
        || segments_intersect(&av, &bh)
        || segments_intersect(&ah, &bv)
        || segments_intersect(&ah, &bh)
}
