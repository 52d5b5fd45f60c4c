//! Line-oriented text formats for every representation, the DIMACS CNF
//! reader, and the bit-packed encoding that realizes the implicit
//! grounded-segment size bound.
//!
//! All formats share the shape: a header `<kind> <n>`, then one record per
//! line of decimal integers, `#` comments and blank lines ignored.
//! `parse(serialize(r)) == r` for every representation.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{Chord, GroundedString, Id, Interval, LKind, LShape, Point, Rectangle, SquareL, Weight};
use crate::reps::{
    CircleRep, GroundedSegmentRep, GroundedSquareLRep, LShapeSet, OuterstringRep, OverlapRep,
    RectangleSet, Representation,
};
use crate::sat::CnfFormula;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("empty input: no header line found")]
    Empty,
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

struct Records<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Records<'a> {
    fn new(text: &'a str) -> Self {
        Records { lines: text.lines().enumerate() }
    }

    /// Next non-comment, non-blank line as (1-based line number, tokens).
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.lines.by_ref() {
            let stripped = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }
}

fn parse_int<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, ParseError> {
    tok.parse().map_err(|_| syntax(line, format!("bad {what}: `{tok}`")))
}

fn parse_record_weight(
    tokens: &[&str],
    fixed: usize,
    line: usize,
) -> Result<Option<Weight>, ParseError> {
    match tokens.len() {
        n if n == fixed => Ok(None),
        n if n == fixed + 1 => Ok(Some(parse_int(tokens[fixed], line, "weight")?)),
        _ => Err(syntax(line, format!("expected {fixed} or {} fields", fixed + 1))),
    }
}

/// Parse any representation file, dispatching on the header keyword.
pub fn parse_representation(text: &str) -> Result<Representation, ParseError> {
    let mut rec = Records::new(text);
    let (hline, header) = rec.next_tokens().ok_or(ParseError::Empty)?;
    if header.len() != 2 {
        return Err(syntax(hline, "header must be `<kind> <n>`"));
    }
    let kind = header[0];
    let n: usize = parse_int(header[1], hline, "count")?;
    match kind {
        "circle" => {
            let mut chords = Vec::with_capacity(n);
            let mut weights = Vec::with_capacity(n);
            for _ in 0..n {
                let (l, t) = rec.next_tokens().ok_or_else(|| syntax(hline, "truncated file"))?;
                if t.len() < 3 {
                    return Err(syntax(l, "expected `id p q [w]`"));
                }
                chords.push(Chord::new(
                    parse_int(t[0], l, "id")?,
                    parse_int(t[1], l, "position")?,
                    parse_int(t[2], l, "position")?,
                ));
                weights.push(parse_record_weight(&t, 3, l)?);
            }
            Ok(Representation::Circle(CircleRep { n, chords, weights }))
        }
        "overlap" | "gseg" => {
            let mut intervals = Vec::with_capacity(n);
            let mut weights = Vec::with_capacity(n);
            for _ in 0..n {
                let (l, t) = rec.next_tokens().ok_or_else(|| syntax(hline, "truncated file"))?;
                if t.len() < 3 {
                    return Err(syntax(l, "expected `id lo hi [w]`"));
                }
                intervals.push(Interval::new(
                    parse_int(t[0], l, "id")?,
                    parse_int(t[1], l, "endpoint")?,
                    parse_int(t[2], l, "endpoint")?,
                ));
                weights.push(parse_record_weight(&t, 3, l)?);
            }
            if kind == "overlap" {
                Ok(Representation::Overlap(OverlapRep { n, intervals, weights }))
            } else {
                Ok(Representation::Gseg(GroundedSegmentRep { n, intervals, weights }))
            }
        }
        "squarel" => {
            let mut shapes = Vec::with_capacity(n);
            let mut weights = Vec::with_capacity(n);
            for _ in 0..n {
                let (l, t) = rec.next_tokens().ok_or_else(|| syntax(hline, "truncated file"))?;
                if t.len() < 3 {
                    return Err(syntax(l, "expected `id groundX arm [w]`"));
                }
                shapes.push(SquareL::new(
                    parse_int(t[0], l, "id")?,
                    parse_int(t[1], l, "groundX")?,
                    parse_int(t[2], l, "arm")?,
                ));
                weights.push(parse_record_weight(&t, 3, l)?);
            }
            Ok(Representation::SquareL(GroundedSquareLRep { n, shapes, weights }))
        }
        "lshape" => {
            let mut shapes = Vec::with_capacity(n);
            let mut weights = Vec::with_capacity(n);
            for _ in 0..n {
                let (l, t) = rec.next_tokens().ok_or_else(|| syntax(hline, "truncated file"))?;
                if t.len() < 6 {
                    return Err(syntax(l, "expected `id kind cx cy vlen hlen [w]`"));
                }
                let kind = LKind::parse(t[1]).ok_or_else(|| syntax(l, format!("bad kind `{}`", t[1])))?;
                shapes.push(LShape::new(
                    parse_int(t[0], l, "id")?,
                    kind,
                    Point::new(parse_int(t[2], l, "cx")?, parse_int(t[3], l, "cy")?),
                    parse_int(t[4], l, "vlen")?,
                    parse_int(t[5], l, "hlen")?,
                ));
                weights.push(parse_record_weight(&t, 6, l)?);
            }
            Ok(Representation::LShapes(LShapeSet { shapes, weights }))
        }
        "rect" => {
            let mut shapes = Vec::with_capacity(n);
            let mut weights = Vec::with_capacity(n);
            for _ in 0..n {
                let (l, t) = rec.next_tokens().ok_or_else(|| syntax(hline, "truncated file"))?;
                if t.len() < 5 {
                    return Err(syntax(l, "expected `id x1 y1 x2 y2 [w]`"));
                }
                shapes.push(Rectangle::new(
                    parse_int(t[0], l, "id")?,
                    parse_int(t[1], l, "x1")?,
                    parse_int(t[2], l, "y1")?,
                    parse_int(t[3], l, "x2")?,
                    parse_int(t[4], l, "y2")?,
                ));
                weights.push(parse_record_weight(&t, 5, l)?);
            }
            Ok(Representation::Rects(RectangleSet { shapes, weights }))
        }
        "outerstring" => {
            let mut strings = Vec::with_capacity(n);
            for _ in 0..n {
                let (l, t) = rec.next_tokens().ok_or_else(|| syntax(hline, "truncated file"))?;
                if t.len() < 2 {
                    return Err(syntax(l, "expected `id k x1 y1 ... xk yk [w]`"));
                }
                let id: Id = parse_int(t[0], l, "id")?;
                let k: usize = parse_int(t[1], l, "vertex count")?;
                if k < 2 {
                    return Err(syntax(l, "string needs at least 2 vertices"));
                }
                let fixed = 2 + 2 * k;
                if t.len() < fixed {
                    return Err(syntax(l, format!("expected {} coordinates", 2 * k)));
                }
                let mut vertices = Vec::with_capacity(k);
                for v in 0..k {
                    vertices.push(Point::new(
                        parse_int(t[2 + 2 * v], l, "x")?,
                        parse_int(t[3 + 2 * v], l, "y")?,
                    ));
                }
                let mut s = GroundedString::new(id, vertices);
                s.weight = parse_record_weight(&t, fixed, l)?;
                strings.push(s);
            }
            Ok(Representation::Outerstring(OuterstringRep { strings }))
        }
        other => Err(ParseError::UnknownFormat(other.to_string())),
    }
}

fn push_weight(line: &mut String, w: &Option<Weight>) {
    if let Some(w) = w {
        let _ = write!(line, " {w}");
    }
}

/// Canonical text serialization; the inverse of `parse_representation`.
pub fn serialize_representation(rep: &Representation) -> String {
    let mut out = String::new();
    match rep {
        Representation::Circle(r) => {
            let _ = writeln!(out, "circle {}", r.n);
            for (c, w) in r.chords.iter().zip(&r.weights) {
                let mut line = format!("{} {} {}", c.id, c.p, c.q);
                push_weight(&mut line, w);
                let _ = writeln!(out, "{line}");
            }
        }
        Representation::Overlap(r) => {
            let _ = writeln!(out, "overlap {}", r.n);
            for (i, w) in r.intervals.iter().zip(&r.weights) {
                let mut line = format!("{} {} {}", i.id, i.lo, i.hi);
                push_weight(&mut line, w);
                let _ = writeln!(out, "{line}");
            }
        }
        Representation::Gseg(r) => {
            let _ = writeln!(out, "gseg {}", r.n);
            for (i, w) in r.intervals.iter().zip(&r.weights) {
                let mut line = format!("{} {} {}", i.id, i.lo, i.hi);
                push_weight(&mut line, w);
                let _ = writeln!(out, "{line}");
            }
        }
        Representation::SquareL(r) => {
            let _ = writeln!(out, "squarel {}", r.n);
            for (s, w) in r.shapes.iter().zip(&r.weights) {
                let mut line = format!("{} {} {}", s.id, s.ground_x, s.arm);
                push_weight(&mut line, w);
                let _ = writeln!(out, "{line}");
            }
        }
        Representation::LShapes(r) => {
            let _ = writeln!(out, "lshape {}", r.shapes.len());
            for (s, w) in r.shapes.iter().zip(&r.weights) {
                let mut line = format!(
                    "{} {} {} {} {} {}",
                    s.id,
                    s.kind.as_str(),
                    s.corner.x,
                    s.corner.y,
                    s.vlen,
                    s.hlen
                );
                push_weight(&mut line, w);
                let _ = writeln!(out, "{line}");
            }
        }
        Representation::Rects(r) => {
            let _ = writeln!(out, "rect {}", r.shapes.len());
            for (s, w) in r.shapes.iter().zip(&r.weights) {
                let mut line = format!("{} {} {} {} {}", s.id, s.x1, s.y1, s.x2, s.y2);
                push_weight(&mut line, w);
                let _ = writeln!(out, "{line}");
            }
        }
        Representation::Outerstring(r) => {
            let _ = writeln!(out, "outerstring {}", r.strings.len());
            for s in &r.strings {
                let mut line = format!("{} {}", s.id, s.vertices.len());
                for v in &s.vertices {
                    let _ = write!(line, " {} {}", v.x, v.y);
                }
                push_weight(&mut line, &s.weight);
                let _ = writeln!(out, "{line}");
            }
        }
    }
    out
}

/// Parse a DIMACS `p cnf` file.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut var_count: Option<usize> = None;
    let mut clause_target = 0usize;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let t: Vec<&str> = line.split_whitespace().collect();
            if t.len() != 4 || t[1] != "cnf" {
                return Err(syntax(i + 1, "expected `p cnf <vars> <clauses>`"));
            }
            var_count = Some(parse_int(t[2], i + 1, "variable count")?);
            clause_target = parse_int(t[3], i + 1, "clause count")?;
            continue;
        }
        if var_count.is_none() {
            return Err(syntax(i + 1, "clause before `p cnf` header"));
        }
        for tok in line.split_whitespace() {
            let lit: i32 = parse_int(tok, i + 1, "literal")?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let var_count = var_count.ok_or(ParseError::Empty)?;
    if clauses.len() != clause_target {
        return Err(syntax(0, format!("header promised {clause_target} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(var_count, clauses).map_err(|e| syntax(0, e))
}

/// Serialize a formula back to DIMACS.
pub fn serialize_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.var_count, f.clauses.len());
    for c in &f.clauses {
        for lit in c {
            let _ = write!(out, "{lit} ");
        }
        let _ = writeln!(out, "0");
    }
    out
}

#[derive(Debug, Error)]
pub enum PackError {
    #[error("packed encoding requires ids 0..n-1 in order")]
    NonCanonicalIds,
    #[error("packed encoding does not carry weights")]
    Weighted,
    #[error("endpoint {0} out of range for n={1}")]
    OutOfRange(i64, usize),
    #[error("truncated packed data")]
    Truncated,
}

/// Width in bits of one endpoint for an n-interval representation.
pub fn endpoint_bits(n: usize) -> u32 {
    // ceil(log2(2n)), with the 1-interval case needing 1 bit.
    let domain = (2 * n).max(2) as u64;
    64 - (domain - 1).leading_zeros() as u32
}

/// Bit-packed implicit encoding: `n` as a u64 header, then 2n endpoints of
/// `endpoint_bits(n)` bits each, intervals in id order (ids are implicit).
pub fn pack_gseg(rep: &GroundedSegmentRep) -> Result<Vec<u8>, PackError> {
    if rep.weights.iter().any(|w| w.is_some()) {
        return Err(PackError::Weighted);
    }
    for (i, iv) in rep.intervals.iter().enumerate() {
        if iv.id as usize != i {
            return Err(PackError::NonCanonicalIds);
        }
    }
    let bits = endpoint_bits(rep.n);
    let mut out = Vec::new();
    out.extend_from_slice(&(rep.n as u64).to_le_bytes());
    let mut acc: u64 = 0;
    let mut used: u32 = 0;
    let mut push = |val: u64, out: &mut Vec<u8>| {
        acc |= val << used;
        used += bits;
        while used >= 8 {
            out.push((acc & 0xff) as u8);
            acc >>= 8;
            used -= 8;
        }
    };
    for iv in &rep.intervals {
        for e in [iv.lo, iv.hi] {
            if e < 0 || e >= 2 * rep.n as i64 {
                return Err(PackError::OutOfRange(e, rep.n));
            }
            push(e as u64, &mut out);
        }
    }
    if used > 0 {
        out.push((acc & 0xff) as u8);
    }
    Ok(out)
}

/// Inverse of `pack_gseg`.
pub fn unpack_gseg(data: &[u8]) -> Result<GroundedSegmentRep, PackError> {
    if data.len() < 8 {
        return Err(PackError::Truncated);
    }
    let n = u64::from_le_bytes(data[..8].try_into().unwrap()) as usize;
    let bits = endpoint_bits(n);
    let body = &data[8..];
    let mut bitpos: usize = 0;
    let mut read = || -> Result<u64, PackError> {
        let mut val: u64 = 0;
        for b in 0..bits as usize {
            let idx = bitpos + b;
            let byte = body.get(idx / 8).ok_or(PackError::Truncated)?;
            if byte & (1 << (idx % 8)) != 0 {
                val |= 1 << b;
            }
        }
        bitpos += bits as usize;
        Ok(val)
    };
    let mut intervals = Vec::with_capacity(n);
    for id in 0..n {
        let lo = read()? as i64;
        let hi = read()? as i64;
        intervals.push(Interval::new(id as Id, lo, hi));
    }
    Ok(GroundedSegmentRep { n, intervals, weights: vec![None; n] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_overlap_with_comments() {
        let text = "# a comment\noverlap 2\n0 0 2\n1 1 3 5 # trailing\n";
        let rep = parse_representation(text).unwrap();
        match &rep {
            Representation::Overlap(r) => {
                assert_eq!(r.intervals[1], Interval::new(1, 1, 3));
                assert_eq!(r.weights, vec![None, Some(5)]);
            }
            _ => panic!("wrong kind"),
        }
        assert_eq!(parse_representation(&serialize_representation(&rep)).unwrap(), rep);
    }

    #[test]
    fn parse_outerstring_line() {
        let text = "outerstring 1\n3 3 0 0 0 2 2 2 7\n";
        let rep = parse_representation(text).unwrap();
        match &rep {
            Representation::Outerstring(r) => {
                assert_eq!(r.strings[0].vertices.len(), 3);
                assert_eq!(r.strings[0].weight, Some(7));
            }
            _ => panic!("wrong kind"),
        }
        assert_eq!(parse_representation(&serialize_representation(&rep)).unwrap(), rep);
    }

    #[test]
    fn dimacs_roundtrip() {
        let text = "c header\np cnf 3 2\n1 -2 0\n2 3 -1 0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.var_count, 3);
        assert_eq!(f.clauses, vec![vec![1, -2], vec![2, 3, -1]]);
        assert_eq!(parse_dimacs(&serialize_dimacs(&f)).unwrap(), f);
    }

    #[test]
    fn packed_size_within_bound() {
        for n in [1usize, 5, 256, 1024] {
            let intervals: Vec<Interval> =
                (0..n).map(|i| Interval::new(i as Id, (2 * i) as i64, (2 * i + 1) as i64)).collect();
            let rep = GroundedSegmentRep { n, intervals, weights: vec![None; n] };
            let packed = pack_gseg(&rep).unwrap();
            let bits = 8 * packed.len();
            let budget = 4 * n as usize * endpoint_bits(n) as usize;
            assert!(bits <= budget.max(128), "n={n}: {bits} bits > {budget}");
            assert_eq!(unpack_gseg(&packed).unwrap(), rep);
        }
    }

    proptest! {
        #[test]
        fn representation_roundtrip_overlap(pairs in proptest::collection::vec((0i64..500, 0i64..500), 1..12)) {
            let mut used = std::collections::BTreeSet::new();
            let mut intervals = Vec::new();
            let mut weights = Vec::new();
            for (i, (a, b)) in pairs.iter().enumerate() {
                let (lo, hi) = (*a.min(b), *a.max(b) + 501);
                if used.insert(lo) && used.insert(hi) {
                    intervals.push(Interval::new(i as Id, lo, hi));
                    weights.push(if i % 2 == 0 { Some(i as Weight + 1) } else { None });
                }
            }
            let n = intervals.len();
            let rep = Representation::Overlap(OverlapRep { n, intervals, weights: weights[..n].to_vec() });
            prop_assert_eq!(parse_representation(&serialize_representation(&rep)).unwrap(), rep);
        }

        #[test]
        fn pack_roundtrip(n in 1usize..40, seed in 0u64..1000) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut pos: Vec<i64> = (0..2 * n as i64).collect();
            pos.shuffle(&mut rng);
            let intervals: Vec<Interval> = (0..n)
                .map(|i| {
                    let (a, b) = (pos[2 * i], pos[2 * i + 1]);
                    Interval::new(i as Id, a.min(b), a.max(b))
                })
                .collect();
            let rep = GroundedSegmentRep { n, intervals, weights: vec![None; n] };
            let packed = pack_gseg(&rep).unwrap();
            prop_assert_eq!(unpack_gseg(&packed).unwrap(), rep);
        }
    }
}
