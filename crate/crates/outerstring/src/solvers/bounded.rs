//! Separator DP for grounded, rectilinear, y-monotone strings of total
//! length at most kappa with integral coordinates.
//!
//! A subproblem is a pair of ground anchors with a bounding monotone path on
//! each side; the region between them (left side open, right side closed) is
//! split at the median grounding point over every admissible separator
//! path. Two paths with the same per-height rightmost-extent profile are
//! interchangeable for both membership and admissibility, so the solver
//! works on deduplicated profiles; the full path family is still exposed via
//! [`enumerate_separators`].

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use crate::geometry::{polyline_intersect, GroundedString, Id, Point, Weight};
use crate::reps::{
    validate_bounded, BoundedStringRep, IntersectionGraph, MisResult, SolveError, SolveStats,
};

/// Direction of one separator-path segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Up,
    Left,
    Right,
}

/// A y-monotone rectilinear path from a ground point to the line y = kappa,
/// with at most 2*kappa bends and per-segment length at most kappa.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorPath {
    pub origin: Point,
    pub segments: Vec<(Dir, i64)>,
}

impl SeparatorPath {
    /// Check all structural invariants for the given kappa.
    pub fn validate(&self, kappa: i64) -> Result<(), String> {
        if self.origin.y != 0 {
            return Err("origin must be on the grounding line".into());
        }
        if self.segments.len() as i64 > 2 * kappa + 1 {
            return Err("too many bends".into());
        }
        let mut up_total = 0;
        let mut last_axis_vertical = None;
        for &(dir, len) in &self.segments {
            if len < 1 || len > kappa {
                return Err("segment length out of bounds".into());
            }
            let vertical = dir == Dir::Up;
            if last_axis_vertical == Some(vertical) {
                return Err("consecutive segments on the same axis".into());
            }
            last_axis_vertical = Some(vertical);
            if vertical {
                up_total += len;
            }
        }
        if up_total != kappa {
            return Err("must end on the line y = kappa".into());
        }
        Ok(())
    }

    /// Rightmost x of the path at each integer height 0..=kappa.
    pub fn hi_profile(&self, kappa: i64) -> Vec<i64> {
        let mut hi = vec![self.origin.x; kappa as usize + 1];
        let mut x = self.origin.x;
        let mut y = 0usize;
        for &(dir, len) in &self.segments {
            match dir {
                Dir::Up => {
                    for h in (y + 1)..=(y + len as usize) {
                        hi[h] = x;
                    }
                    y += len as usize;
                }
                Dir::Right => {
                    x += len;
                    hi[y] = hi[y].max(x);
                }
                Dir::Left => {
                    x -= len;
                }
            }
        }
        hi
    }
}

/// Number of distinct separator paths from one ground point: (2k+1)^(k+1).
pub fn separator_count(kappa: i64) -> u64 {
    (2 * kappa as u64 + 1).pow(kappa as u32 + 1)
}

fn compositions(total: i64) -> Vec<Vec<i64>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for rest in compositions(total - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// All separator paths from (q, 0), in a fixed canonical order.
pub fn enumerate_separators(q: i64, kappa: i64) -> Vec<SeparatorPath> {
    assert!(kappa >= 1, "kappa must be >= 1");
    let mut horizontals = vec![0i64];
    for l in 1..=kappa {
        horizontals.push(l);
        horizontals.push(-l);
    }
    let mids: Vec<i64> = horizontals[1..].to_vec();
    let mut out = Vec::new();
    for comp in compositions(kappa) {
        let k = comp.len();
        let mut mid_choice = vec![0usize; k.saturating_sub(1)];
        loop {
            for &lead in &horizontals {
                for &trail in &horizontals {
                    let mut segments = Vec::new();
                    let push_h = |segments: &mut Vec<(Dir, i64)>, d: i64| {
                        if d > 0 {
                            segments.push((Dir::Right, d));
                        } else if d < 0 {
                            segments.push((Dir::Left, -d));
                        }
                    };
                    push_h(&mut segments, lead);
                    for (vi, &v) in comp.iter().enumerate() {
                        segments.push((Dir::Up, v));
                        if vi + 1 < k {
                            push_h(&mut segments, mids[mid_choice[vi]]);
                        }
                    }
                    push_h(&mut segments, trail);
                    out.push(SeparatorPath { origin: Point::new(q, 0), segments });
                }
            }
            // advance the mixed-radix mid selector
            let mut pos = 0;
            loop {
                if pos == mid_choice.len() {
                    break;
                }
                mid_choice[pos] += 1;
                if mid_choice[pos] < mids.len() {
                    break;
                }
                mid_choice[pos] = 0;
                pos += 1;
            }
            if pos == mid_choice.len() {
                break;
            }
        }
    }
    out
}

/// Per-height extent of a rectilinear y-monotone grounded string.
#[derive(Debug, Clone)]
struct StringProfile {
    id: Id,
    ground: i64,
    max_y: usize,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

fn string_profile(s: &GroundedString) -> StringProfile {
    let max_y = s.max_y() as usize;
    let mut lo = vec![i64::MAX; max_y + 1];
    let mut hi = vec![i64::MIN; max_y + 1];
    let mut x = s.vertices[0].x;
    let mut y = 0usize;
    lo[0] = x;
    hi[0] = x;
    for w in s.vertices.windows(2) {
        if w[0].x == w[1].x {
            let to = w[1].y as usize;
            for h in (y + 1)..=to {
                lo[h] = lo[h].min(x);
                hi[h] = hi[h].max(x);
            }
            y = to;
        } else {
            x = w[1].x;
            lo[y] = lo[y].min(x);
            hi[y] = hi[y].max(x);
        }
    }
    StringProfile { id: s.id, ground: s.vertices[0].x, max_y, lo, hi }
}

fn right_of(s: &StringProfile, anchor: i64, profile: &[i64]) -> bool {
    (0..=s.max_y).all(|h| s.lo[h] > anchor + profile[h])
}

fn left_of(s: &StringProfile, anchor: i64, profile: &[i64]) -> bool {
    (0..=s.max_y).all(|h| s.hi[h] <= anchor + profile[h])
}

/// True iff the string lies strictly right of `ma` and weakly left of (or
/// on) `mb`, comparing x-extents at each integer height.
pub fn string_between(s: &GroundedString, ma: &SeparatorPath, mb: &SeparatorPath) -> bool {
    let kappa = s.max_y().max(
        ma.segments.iter().filter(|(d, _)| *d == Dir::Up).map(|(_, l)| *l).sum::<i64>(),
    );
    let sp = string_profile(s);
    let pa = ma.hi_profile(kappa);
    let pb = mb.hi_profile(kappa);
    if sp.max_y as i64 > kappa {
        return false;
    }
    (0..=sp.max_y).all(|h| sp.lo[h] > pa[h] && sp.hi[h] <= pb[h])
}

type ProfileId = u16;

struct Node {
    a: i64,
    b: i64,
    /// Distinct grounds in (a, b] as indices into `grounds`.
    sub_lo: usize,
    sub_hi: usize,
    /// Dense per-(pa, pb) tables of size beta².
    value: Vec<u32>,
    /// packed: split-rank (16 bits) | profile id (16 bits); u32::MAX = scan
    decision: Vec<u32>,
    /// rank -> (left child node, right child node), resolved lazily.
    children: Vec<Option<(usize, usize)>>,
}

struct Dp {
    kappa: i64,
    profiles: Vec<Vec<i64>>,
    zero_profile: ProfileId,
    strings: Vec<StringProfile>,
    originals: Vec<GroundedString>,
    order_by_ground: Vec<usize>,
    grounds: Vec<i64>,
    nodes_arena: Vec<Node>,
    node_index: HashMap<(i64, i64), usize>,
    /// gap -> per profile p: bitmask of profiles m with p@t <= m@(t+gap)
    /// pointwise at every height.
    adm_left: HashMap<i64, Vec<Vec<u64>>>,
    /// gap -> per profile p: bitmask of profiles m with m@t <= p@(t+gap).
    adm_right: HashMap<i64, Vec<Vec<u64>>>,
    subproblems: u64,
    nodes: u64,
}

impl Dp {
    fn beta(&self) -> usize {
        self.profiles.len()
    }

    fn adm_row(&mut self, gap: i64, p: ProfileId, left_role: bool) -> Vec<u64> {
        {
            let cache = if left_role { &self.adm_left } else { &self.adm_right };
            if let Some(rows) = cache.get(&gap) {
                if !rows[p as usize].is_empty() {
                    return rows[p as usize].clone();
                }
            }
        }
        let beta = self.beta();
        let words = beta.div_ceil(64);
        let kappa = self.kappa as usize;
        let mut row = vec![0u64; words];
        {
            let pp = &self.profiles[p as usize];
            for (m, mp) in self.profiles.iter().enumerate() {
                let ok = if left_role {
                    (0..=kappa).all(|h| pp[h] <= gap + mp[h])
                } else {
                    (0..=kappa).all(|h| mp[h] <= gap + pp[h])
                };
                if ok {
                    row[m / 64] |= 1 << (m % 64);
                }
            }
        }
        let cache = if left_role { &mut self.adm_left } else { &mut self.adm_right };
        let rows = cache.entry(gap).or_insert_with(|| vec![Vec::new(); beta]);
        rows[p as usize] = row.clone();
        row
    }

    /// Admissible m at q between pa@a and pb@b: pa@a <= m@q <= pb@b pointwise.
    fn admissible(&mut self, a: i64, pa: ProfileId, q: i64, b: i64, pb: ProfileId) -> Vec<u64> {
        let mut left = self.adm_row(q - a, pa, true);
        let right = self.adm_row(b - q, pb, false);
        for (l, r) in left.iter_mut().zip(&right) {
            *l &= r;
        }
        left
    }

    fn node_id(&mut self, a: i64, b: i64) -> usize {
        if let Some(&id) = self.node_index.get(&(a, b)) {
            return id;
        }
        let sub_lo = self.grounds.partition_point(|&g| g <= a);
        let sub_hi = self.grounds.partition_point(|&g| g <= b);
        let beta = self.beta();
        let node = Node {
            a,
            b,
            sub_lo,
            sub_hi,
            value: vec![u32::MAX; beta * beta],
            decision: vec![u32::MAX; beta * beta],
            children: vec![None; sub_hi - sub_lo],
        };
        self.nodes_arena.push(node);
        let id = self.nodes_arena.len() - 1;
        self.node_index.insert((a, b), id);
        id
    }

    fn child_ids(&mut self, nid: usize, rank: usize, q: i64) -> (usize, usize) {
        if let Some(pair) = self.nodes_arena[nid].children[rank] {
            return pair;
        }
        let (a, b) = (self.nodes_arena[nid].a, self.nodes_arena[nid].b);
        let left = self.node_id(a, q);
        let right = self.node_id(q, b);
        self.nodes_arena[nid].children[rank] = Some((left, right));
        (left, right)
    }

    /// Strings in the region: grounded in (a, b + kappa], strictly right of
    /// pa@a and weakly left of pb@b.
    fn members(&self, a: i64, pa: ProfileId, b: i64, pb: ProfileId) -> Vec<usize> {
        let vp = &self.profiles[pa as usize];
        let vq = &self.profiles[pb as usize];
        let from = self
            .order_by_ground
            .partition_point(|&i| self.strings[i].ground <= a);
        let mut out = Vec::new();
        for &i in &self.order_by_ground[from..] {
            let s = &self.strings[i];
            if s.ground > b + self.kappa {
                break;
            }
            if right_of(s, a, vp) && left_of(s, b, vq) {
                out.push(i);
            }
        }
        out
    }

    /// Exact MIS of a small member set via branch-and-bound on its graph.
    fn scan_mis(&mut self, members: &[usize]) -> (u32, Vec<usize>) {
        if members.is_empty() {
            return (0, vec![]);
        }
        let mut g = IntersectionGraph::new(members.iter().map(|&i| i as Id));
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                if polyline_intersect(&self.originals[i], &self.originals[j]) {
                    g.add_edge(i as Id, j as Id);
                }
            }
        }
        let r = crate::solvers::outerstring_mwis_exact(&g, &BTreeMap::new());
        self.nodes += r.stats.nodes;
        (r.value as u32, r.chosen.iter().map(|&id| id as usize).collect())
    }

    fn value(&mut self, nid: usize, pa: ProfileId, pb: ProfileId) -> u32 {
        let beta = self.beta();
        let idx = pa as usize * beta + pb as usize;
        {
            let node = &self.nodes_arena[nid];
            let hit = node.value[idx];
            if hit != u32::MAX {
                return hit;
            }
        }
        self.subproblems += 1;
        let (a, b, sub_lo, sub_hi) = {
            let node = &self.nodes_arena[nid];
            (node.a, node.b, node.sub_lo, node.sub_hi)
        };
        let sub_len = sub_hi - sub_lo;
        let base = sub_len == 0 || (sub_len == 1 && self.grounds[sub_hi - 1] == b);

        let (v, d) = if base {
            let members = self.members(a, pa, b, pb);
            (self.scan_mis(&members).0, u32::MAX)
        } else {
            // Try the lower median first, then walk outward until some
            // separator fits between the boundaries.
            let mut result: Option<(u32, u32)> = None;
            let mid = (sub_len - 1) / 2;
            let order = split_order(sub_len, mid);
            for rank in order {
                let q = self.grounds[sub_lo + rank];
                if q == b {
                    continue;
                }
                let bits = self.admissible(a, pa, q, b, pb);
                if bits.iter().all(|w| *w == 0) {
                    continue;
                }
                let (left_id, right_id) = self.child_ids(nid, rank, q);
                let mut best: Option<(u32, u32)> = None;
                for w in 0..bits.len() {
                    let mut word = bits[w];
                    while word != 0 {
                        let m = (w * 64 + word.trailing_zeros() as usize) as ProfileId;
                        word &= word - 1;
                        let v = self.value(left_id, pa, m) + self.value(right_id, m, pb);
                        if best.map_or(true, |(bv, _)| v > bv) {
                            best = Some((v, ((rank as u32) << 16) | m as u32));
                        }
                    }
                }
                if let Some(found) = best {
                    result = Some(found);
                    break;
                }
            }
            match result {
                Some(r) => r,
                None => {
                    // Region too narrow for any separator: solve it directly.
                    let members = self.members(a, pa, b, pb);
                    (self.scan_mis(&members).0, u32::MAX)
                }
            }
        };
        let node = &mut self.nodes_arena[nid];
        node.value[idx] = v;
        node.decision[idx] = d;
        v
    }

    fn collect(&mut self, nid: usize, pa: ProfileId, pb: ProfileId, out: &mut Vec<usize>) {
        let beta = self.beta();
        let idx = pa as usize * beta + pb as usize;
        let d = self.nodes_arena[nid].decision[idx];
        let (a, b, sub_lo) = {
            let node = &self.nodes_arena[nid];
            (node.a, node.b, node.sub_lo)
        };
        if d == u32::MAX {
            let members = self.members(a, pa, b, pb);
            let (_, chosen) = self.scan_mis(&members);
            out.extend(chosen);
        } else {
            let rank = (d >> 16) as usize;
            let m = (d & 0xffff) as ProfileId;
            let q = self.grounds[sub_lo + rank];
            let (left_id, right_id) = self.child_ids(nid, rank, q);
            self.collect(left_id, pa, m, out);
            self.collect(right_id, m, pb, out);
        }
    }
}

/// Visit ranks starting at `mid`, then alternating outward.
fn split_order(len: usize, mid: usize) -> Vec<usize> {
    let mut order = vec![mid];
    let mut d = 1usize;
    loop {
        let mut pushed = false;
        if mid + d < len {
            order.push(mid + d);
            pushed = true;
        }
        if mid >= d {
            order.push(mid - d);
            pushed = true;
        }
        if !pushed {
            break;
        }
        d += 1;
    }
    order
}

/// Exact MIS (cardinality) for a bounded rectilinear monotone string
/// representation via the median separator DP.
pub fn bounded_monotone_mis(rep: &BoundedStringRep) -> Result<MisResult, SolveError> {
    let start = Instant::now();
    let violations = validate_bounded(rep);
    if !violations.is_empty() {
        return Err(SolveError::Invalid(violations[0].to_string()));
    }
    if rep.strings.is_empty() {
        return Ok(MisResult { chosen: vec![], value: 0, stats: SolveStats::default() });
    }

    let kappa = rep.kappa;
    // The solver's boundary family is the full box of per-height rightmost
    // thresholds: v[0] in [0, kappa], v[h] in [-(kappa-h)-1, kappa-h]. A
    // string of length <= kappa grounded at or left of the anchor reaches at
    // most kappa - h beyond it at height h, and anything grounded further
    // right stays clear of the floor value, so these vectors express every
    // useful separator position. Because disjoint grounded monotone strings
    // keep one x-order at every height they share, the pointwise envelope
    // of the left side of any independent set is itself such a vector,
    // which makes the median split exact. (Separator paths realize only a
    // subset of these vectors: a path that covers a ground run cannot
    // retreat before the next height, and that coupling loses solutions.)
    let mut profiles: Vec<Vec<i64>> = vec![vec![]];
    for h in 0..=kappa {
        let (lo, hi) = if h == 0 { (0, kappa) } else { (-(kappa - h) - 1, kappa - h) };
        let mut next = Vec::new();
        for p in &profiles {
            for v in lo..=hi {
                let mut q = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        profiles = next;
    }
    profiles.sort();
    let zero_profile =
        profiles.iter().position(|p| p.iter().all(|&v| v == 0)).expect("zero vector") as ProfileId;

    let strings: Vec<StringProfile> = rep.strings.iter().map(string_profile).collect();
    let mut order_by_ground: Vec<usize> = (0..strings.len()).collect();
    order_by_ground.sort_by_key(|&i| (strings[i].ground, strings[i].id));
    let mut grounds: Vec<i64> = strings.iter().map(|s| s.ground).collect();
    grounds.sort_unstable();
    grounds.dedup();

    let min_x = strings.iter().map(|s| s.lo.iter().copied().min().unwrap()).min().unwrap();
    let max_x = strings.iter().map(|s| s.hi.iter().copied().max().unwrap()).max().unwrap();
    let a0 = min_x - 1;
    let b0 = max_x + 1;

    let mut dp = Dp {
        kappa,
        profiles,
        zero_profile,
        strings,
        originals: rep.strings.clone(),
        order_by_ground,
        grounds,
        nodes_arena: Vec::new(),
        node_index: HashMap::new(),
        adm_left: HashMap::new(),
        adm_right: HashMap::new(),
        subproblems: 0,
        nodes: 0,
    };

    let z = dp.zero_profile;
    let root = dp.node_id(a0, b0);
    let value = dp.value(root, z, z);
    let mut chosen_idx = Vec::new();
    dp.collect(root, z, z, &mut chosen_idx);

    // Hard verification: the assembled set must be pairwise disjoint and
    // match the DP value exactly.
    chosen_idx.sort_unstable();
    chosen_idx.dedup();
    assert_eq!(chosen_idx.len() as u32, value, "assembled set does not match the DP value");
    for x in 0..chosen_idx.len() {
        for y in (x + 1)..chosen_idx.len() {
            assert!(
                !polyline_intersect(&rep.strings[chosen_idx[x]], &rep.strings[chosen_idx[y]]),
                "separator DP assembled a dependent set"
            );
        }
    }

    let mut chosen: Vec<Id> = chosen_idx.iter().map(|&i| rep.strings[i].id).collect();
    chosen.sort_unstable();
    let stats = SolveStats {
        subproblems: dp.subproblems,
        nodes: dp.nodes,
        wall: start.elapsed(),
        ..Default::default()
    };
    Ok(MisResult { chosen, value: value as Weight, stats })
}
