//! Coset paths: labelled paths whose steps are whole cosets rather than
//! single edges, with the same overlap-disjointness discipline as coset
//! cycles. Provides validation/classification, constrained shortest-path
//! search, the induced distance measures, and the "first direction" sets
//! of short paths.

use crate::acyclicity;
use crate::budget::Budget;
use crate::cosets::Cayley;
use crate::error::{Error, Result};
use crate::mask::Mask;
use std::collections::HashSet;

/// Default cap when probing the acyclicity level to decide what "short"
/// means (a graph with no cycle up to the cap is treated as cap-acyclic).
pub const DEFAULT_LEVEL_CAP: usize = 8;

/// An alternating sequence v_1, a_1, v_2, ..., a_l, v_{l+1} of distinct
/// vertices and generator subsets. Conventionally a_0 = a_{l+1} = empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPath {
    pub vertices: Vec<u32>,
    pub labels: Vec<Mask>,
}

impl CosetPath {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn start(&self) -> u32 {
        self.vertices[0]
    }

    pub fn end(&self) -> u32 {
        *self.vertices.last().unwrap()
    }

    /// 1-indexed label access; indices 0 and l+1 give the empty set.
    pub fn label(&self, i: usize) -> Mask {
        if i == 0 || i > self.len() {
            Mask::EMPTY
        } else {
            self.labels[i - 1]
        }
    }
}

/// Classification flags for a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathClass {
    pub valid: bool,
    /// No link's coset contains the minimal coset connecting the endpoints.
    pub non_trivial: bool,
    /// Every link's coset is a proper subset of the minimal connecting coset.
    pub inner: bool,
    /// When a reference subset gamma was supplied: no link's coset contains
    /// the gamma-coset of the start vertex.
    pub non_t: Option<bool>,
}

/// Search constraint for `find_min_path`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Any,
    NonTrivial,
    Inner,
    NonT(Mask),
}

/// First-direction set: the intersection of the first labels over all
/// qualifying short paths between a fixed pair of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectionSet {
    pub mask: Mask,
    /// Set when the acyclicity level only supports length-1 "short" paths,
    /// so the set degenerates to the minimal connecting subset.
    pub guard_weak: bool,
}

fn well_formed(p: &CosetPath) -> bool {
    !p.labels.is_empty() && p.vertices.len() == p.labels.len() + 1
}

/// Structural validity: distinct vertices, every step stays inside its
/// link's coset, and consecutive links overlap disjointly.
pub fn is_valid_path(g: &Cayley, p: &CosetPath) -> bool {
    if !well_formed(p) {
        return false;
    }
    let mut seen = HashSet::new();
    if !p.vertices.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    let l = p.len();
    for i in 1..=l {
        let (v, u) = (p.vertices[i - 1], p.vertices[i]);
        if !g.same(v, u, p.label(i)) {
            return false;
        }
        if !g.disjoint(v, p.label(i - 1).inter(p.label(i)), u, p.label(i).inter(p.label(i + 1))) {
            return false;
        }
    }
    true
}

/// All coset paths starting at v with length between 1 and max_len,
/// enumerated deterministically (labels ascending, then members ascending).
pub fn enumerate_paths(
    g: &Cayley,
    v: u32,
    max_len: usize,
    budget: &Budget,
) -> Result<Vec<CosetPath>> {
    let mut out = Vec::new();
    let mut verts = vec![v];
    let mut labs: Vec<Mask> = Vec::new();
    enum_dfs(g, max_len, &mut verts, &mut labs, &mut out, budget)?;
    Ok(out)
}

fn enum_dfs(
    g: &Cayley,
    max_len: usize,
    verts: &mut Vec<u32>,
    labs: &mut Vec<Mask>,
    out: &mut Vec<CosetPath>,
    budget: &Budget,
) -> Result<()> {
    budget.tick()?;
    let j = labs.len();
    if j == max_len {
        return Ok(());
    }
    let last = *verts.last().unwrap();
    let a_prev = if j >= 1 { labs[j - 1] } else { Mask::EMPTY };
    let a_prev2 = if j >= 2 { labs[j - 2] } else { Mask::EMPTY };
    for a in Mask::all(g.arity()) {
        if a.is_empty() {
            continue;
        }
        // interior disjointness at the previous position, now that the
        // next label is fixed
        if j >= 1 && !g.disjoint(verts[j - 1], a_prev2.inter(a_prev), last, a_prev.inter(a)) {
            continue;
        }
        for &w in g.members(last, a) {
            if verts.contains(&w) {
                continue;
            }
            verts.push(w);
            labs.push(a);
            // the prefix is itself a path when its final condition holds
            if !g.same(w, last, a_prev.inter(a)) {
                let p = CosetPath { vertices: verts.clone(), labels: labs.clone() };
                debug_assert!(is_valid_path(g, &p));
                out.push(p);
            }
            enum_dfs(g, max_len, verts, labs, out, budget)?;
            labs.pop();
            verts.pop();
        }
    }
    Ok(())
}

/// For valid paths, the overlap cosets at an interior vertex cut out the
/// triple intersection of the surrounding link cosets. Used as an internal
/// consistency check during validation.
pub fn triple_identity_holds(g: &Cayley, p: &CosetPath) -> bool {
    let l = p.len();
    for i in 2..=l {
        let set = |v: u32, m: Mask| -> HashSet<u32> { g.members(v, m).iter().copied().collect() };
        let lhs: HashSet<u32> = set(p.vertices[i - 1], p.label(i - 1).inter(p.label(i)))
            .intersection(&set(p.vertices[i], p.label(i).inter(p.label(i + 1))))
            .copied()
            .collect();
        let a = set(p.vertices[i - 2], p.label(i - 1));
        let b = set(p.vertices[i - 1], p.label(i));
        let c = set(p.vertices[i], p.label(i + 1));
        let rhs: HashSet<u32> =
            a.iter().filter(|x| b.contains(x) && c.contains(x)).copied().collect();
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Validate a path and classify it. Classification of paths of length >= 2
/// needs the minimal connecting subset of the endpoints and therefore a
/// 2-acyclic graph.
pub fn validate_path(g: &Cayley, p: &CosetPath, gamma: Option<Mask>) -> Result<PathClass> {
    let valid = is_valid_path(g, p);
    if !valid {
        return Ok(PathClass { valid, non_trivial: false, inner: false, non_t: gamma.map(|_| false) });
    }
    debug_assert!(triple_identity_holds(g, p));
    let l = p.len();
    let v1 = p.start();
    let (non_trivial, inner) = if l >= 2 {
        g.require_two_acyclic()?;
        let alpha = g.gen_set(&[v1, p.end()])?;
        let nt = (1..=l).all(|i| !g.coset_contained(v1, alpha, p.vertices[i - 1], p.label(i)));
        let inn =
            (1..=l).all(|i| g.coset_properly_contained(p.vertices[i - 1], p.label(i), v1, alpha));
        (nt, inn)
    } else {
        (false, false)
    };
    debug_assert!(!inner || non_trivial);
    let non_t = gamma
        .map(|gm| (1..=l).all(|i| !g.coset_contained(v1, gm, p.vertices[i - 1], p.label(i))));
    Ok(PathClass { valid, non_trivial, inner, non_t })
}

/// Per-edge admissibility filter resolved against a fixed start vertex.
struct EdgeFilter {
    v1: u32,
    kind: FilterKind,
}

enum FilterKind {
    Any,
    /// the given coset of v1 must not be contained in the link's coset
    NotContaining(Mask),
    /// the link's coset must sit properly inside the given coset of v1
    ProperlyInside(Mask),
}

impl EdgeFilter {
    fn admits(&self, g: &Cayley, w: u32, a: Mask) -> bool {
        match self.kind {
            FilterKind::Any => true,
            FilterKind::NotContaining(m) => !g.coset_contained(self.v1, m, w, a),
            FilterKind::ProperlyInside(m) => g.coset_properly_contained(w, a, self.v1, m),
        }
    }
}

fn resolve_filter(g: &Cayley, v: u32, u: u32, c: &Constraint) -> Result<EdgeFilter> {
    let kind = match c {
        Constraint::Any => FilterKind::Any,
        Constraint::NonTrivial => FilterKind::NotContaining(g.gen_set(&[v, u])?),
        Constraint::Inner => FilterKind::ProperlyInside(g.gen_set(&[v, u])?),
        Constraint::NonT(gm) => FilterKind::NotContaining(*gm),
    };
    Ok(EdgeFilter { v1: v, kind })
}

/// Depth-first search for a path of one exact length. Labels are tried in
/// ascending mask order and vertices in ascending order, so the first hit
/// is reproducible. With `target == start` it searches cyclic paths
/// (endpoints coincide, all other vertices distinct).
struct Search<'a> {
    g: &'a Cayley,
    target: u32,
    len: usize,
    masks: Vec<Mask>,
    filter: &'a EdgeFilter,
    budget: &'a Budget,
    verts: Vec<u32>,
    labs: Vec<Mask>,
    visited: Vec<bool>,
    /// None: stop at the first complete path. Some: visit every complete
    /// path, intersecting first labels into the accumulator.
    acc: Option<Option<Mask>>,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Cayley,
        start: u32,
        target: u32,
        len: usize,
        filter: &'a EdgeFilter,
        budget: &'a Budget,
        intersect: bool,
    ) -> Search<'a> {
        let masks = Mask::all(g.arity()).filter(|a| !a.is_empty()).collect();
        let mut visited = vec![false; g.size()];
        visited[start as usize] = true;
        Search {
            g,
            target,
            len,
            masks,
            filter,
            budget,
            verts: vec![start],
            labs: Vec::new(),
            visited,
            acc: if intersect { Some(None) } else { None },
        }
    }

    fn step(&mut self) -> Result<bool> {
        let k = self.labs.len();
        let w = *self.verts.last().unwrap();
        let last = k + 1 == self.len;
        for mi in 0..self.masks.len() {
            let a = self.masks[mi];
            self.budget.tick()?;
            if let Some(Some(got)) = self.acc {
                // intersecting a superset of the accumulator changes nothing
                if k == 0 && got.subset_of(a) {
                    continue;
                }
            }
            if !self.filter.admits(self.g, w, a) {
                continue;
            }
            if k >= 1 {
                // overlap disjointness at the previous vertex, decidable
                // once the next label is fixed
                let ap = if k >= 2 { self.labs[k - 2] } else { Mask::EMPTY };
                let ak = self.labs[k - 1];
                if !self.g.disjoint(self.verts[k - 1], ap.inter(ak), w, ak.inter(a)) {
                    continue;
                }
            }
            if last {
                if !self.g.same(w, self.target, a) {
                    continue;
                }
                // closing condition: the target lies outside the overlap
                // coset at the last interior vertex
                let ap = if k >= 1 { self.labs[k - 1] } else { Mask::EMPTY };
                if self.g.same(w, self.target, ap.inter(a)) {
                    continue;
                }
                let first = if k == 0 { a } else { self.labs[0] };
                match &mut self.acc {
                    None => {
                        self.labs.push(a);
                        self.verts.push(self.target);
                        return Ok(true);
                    }
                    Some(got) => {
                        *got = Some(match *got {
                            None => first,
                            Some(m) => m.inter(first),
                        });
                    }
                }
            } else {
                let members = self.g.members(w, a).to_vec();
                for x in members {
                    if self.visited[x as usize] || x == self.target {
                        continue;
                    }
                    self.labs.push(a);
                    self.verts.push(x);
                    self.visited[x as usize] = true;
                    let hit = self.step()?;
                    if hit {
                        return Ok(true);
                    }
                    self.visited[x as usize] = false;
                    self.verts.pop();
                    self.labs.pop();
                }
            }
        }
        Ok(false)
    }
}

fn search_exact(
    g: &Cayley,
    start: u32,
    target: u32,
    len: usize,
    filter: &EdgeFilter,
    budget: &Budget,
) -> Result<Option<CosetPath>> {
    let mut s = Search::new(g, start, target, len, filter, budget, false);
    if s.step()? {
        let p = CosetPath { vertices: s.verts, labels: s.labs };
        debug_assert!(target == start || is_valid_path(g, &p));
        Ok(Some(p))
    } else {
        Ok(None)
    }
}

/// Shortest constrained path from v to u, by iterative deepening.
/// Non-trivial and inner paths start at length 2 by definition.
pub fn find_min_path(
    g: &Cayley,
    v: u32,
    u: u32,
    constraint: Constraint,
    max_len: usize,
    budget: &Budget,
) -> Result<Option<CosetPath>> {
    if v == u {
        return Err(Error::Invalid("path endpoints must differ".into()));
    }
    let filter = resolve_filter(g, v, u, &constraint)?;
    let min_len = match constraint {
        Constraint::Any | Constraint::NonT(_) => 1,
        Constraint::NonTrivial | Constraint::Inner => 2,
    };
    for l in min_len..=max_len {
        if let Some(p) = search_exact(g, v, u, l, &filter, budget)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Distance induced by non-trivial paths; never 1, and None when no
/// non-trivial path exists at all.
pub fn distance(g: &Cayley, v: u32, u: u32, budget: &Budget) -> Result<Option<usize>> {
    let max_len = g.size().saturating_sub(1).max(2);
    Ok(find_min_path(g, v, u, Constraint::NonTrivial, max_len, budget)?.map(|p| p.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TDistance {
    pub length: Option<usize>,
    /// gamma is not contained in the minimal connecting subset of the
    /// endpoints; the distance is then trivially 1.
    pub noncanonical_gamma: bool,
}

/// Distance induced by paths avoiding every link whose coset contains the
/// gamma-coset of v. With gamma empty nothing qualifies.
pub fn t_distance(g: &Cayley, v: u32, u: u32, gamma: Mask, budget: &Budget) -> Result<TDistance> {
    if v == u {
        return Err(Error::Invalid("path endpoints must differ".into()));
    }
    let gen = g.gen_set(&[v, u])?;
    let noncanonical_gamma = !gamma.subset_of(gen);
    if gamma.is_empty() {
        return Ok(TDistance { length: None, noncanonical_gamma });
    }
    let max_len = g.size().saturating_sub(1).max(1);
    let len = find_min_path(g, v, u, Constraint::NonT(gamma), max_len, budget)?.map(|p| p.len());
    debug_assert!(len != Some(1) || noncanonical_gamma);
    Ok(TDistance { length: len, noncanonical_gamma })
}

/// Largest n such that paths of length <= n count as short, derived from
/// the acyclicity level (level >= 2n).
pub fn short_threshold(g: &Cayley, cap: usize, budget: &Budget) -> Result<usize> {
    Ok(acyclicity::acyclicity_level(g, cap, budget)? / 2)
}

fn intersect_first_labels(
    g: &Cayley,
    v: u32,
    u: u32,
    max_len: usize,
    filter: &EdgeFilter,
    budget: &Budget,
) -> Result<Option<Mask>> {
    let mut acc: Option<Mask> = None;
    for l in 1..=max_len {
        let mut s = Search::new(g, v, u, l, filter, budget, true);
        if let Some(Some(got)) = {
            s.acc = Some(acc);
            s.step()?;
            s.acc
        } {
            acc = Some(got);
        }
    }
    Ok(acc)
}

/// Intersection of the first labels over all short paths from v to u.
/// Always defined: the one-step path along the minimal connecting coset is
/// short, so the result is contained in that subset.
pub fn short_set(g: &Cayley, v: u32, u: u32, cap: usize, budget: &Budget) -> Result<DirectionSet> {
    if v == u {
        return Err(Error::Invalid("path endpoints must differ".into()));
    }
    let gen = g.gen_set(&[v, u])?;
    let n = short_threshold(g, cap, budget)?;
    let guard_weak = n < 2;
    let filter = EdgeFilter { v1: v, kind: FilterKind::Any };
    let mask = intersect_first_labels(g, v, u, n.max(1), &filter, budget)?
        .expect("a one-step path always exists");
    debug_assert!(mask.subset_of(gen));
    Ok(DirectionSet { mask, guard_weak })
}

/// As `short_set`, but restricted to paths avoiding the links containing
/// the gamma-coset of v. None when no such short path exists.
pub fn short_set_t(
    g: &Cayley,
    v: u32,
    u: u32,
    gamma: Mask,
    cap: usize,
    budget: &Budget,
) -> Result<Option<DirectionSet>> {
    if v == u {
        return Err(Error::Invalid("path endpoints must differ".into()));
    }
    let gen = g.gen_set(&[v, u])?;
    if !gamma.subset_of(gen) {
        return Err(Error::Invalid(
            "reference subset must be contained in the minimal connecting subset".into(),
        ));
    }
    let n = short_threshold(g, cap, budget)?;
    let guard_weak = n < 2;
    let filter = EdgeFilter { v1: v, kind: FilterKind::NotContaining(gamma) };
    let mask = intersect_first_labels(g, v, u, n.max(1), &filter, budget)?;
    Ok(mask.map(|m| {
        debug_assert!(m.subset_of(gen));
        DirectionSet { mask: m, guard_weak }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZipperStatus {
    /// Both ends overlap, as guaranteed for short enough paths.
    Verified,
    /// Paths too long for the acyclicity level; the overlap claim is not
    /// guaranteed, whatever the outcome.
    Unverifiable,
    /// Guard satisfied yet an end fails to overlap: a counterexample.
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZipperReport {
    pub status: ZipperStatus,
    pub start_overlap: bool,
    pub end_overlap: bool,
    pub guard_ok: bool,
}

/// Two paths between the same endpoints must overlap at both ends when both
/// are short for the graph's acyclicity level: at each end, the first (or
/// last) link of one path meets the coset spanned by both first (or last)
/// labels at that endpoint.
pub fn check_zipper(
    g: &Cayley,
    p: &CosetPath,
    q: &CosetPath,
    cap: usize,
    budget: &Budget,
) -> Result<ZipperReport> {
    if !is_valid_path(g, p) || !is_valid_path(g, q) {
        return Err(Error::Invalid("both arguments must be valid paths".into()));
    }
    if p.start() != q.start() || p.end() != q.end() {
        return Err(Error::Invalid("paths must share both endpoints".into()));
    }
    let n = short_threshold(g, cap.max(2 * p.len().max(q.len())), budget)?;
    let guard_ok = p.len() <= n && q.len() <= n;
    let (v, u) = (p.start(), p.end());
    let (a1, a2, t2) = (p.label(1), p.label(2), p.vertices[1]);
    let (b1, b2, r2) = (q.label(1), q.label(2), q.vertices[1]);
    let start_overlap = !g.disjoint(v, b1.inter(a1), t2, a1.inter(a2))
        || !g.disjoint(v, a1.inter(b1), r2, b1.inter(b2));
    let (l, k) = (p.len(), q.len());
    let (al, alm, tl) = (p.label(l), p.label(l - 1), p.vertices[l - 1]);
    let (bk, bkm, rk) = (q.label(k), q.label(k - 1), q.vertices[k - 1]);
    let end_overlap = !g.disjoint(u, bk.inter(al), tl, al.inter(alm))
        || !g.disjoint(u, al.inter(bk), rk, bk.inter(bkm));
    let status = if start_overlap && end_overlap {
        ZipperStatus::Verified
    } else if guard_ok {
        ZipperStatus::Violated
    } else {
        ZipperStatus::Unverifiable
    };
    Ok(ZipperReport { status, start_overlap, end_overlap, guard_ok })
}

/// Given two paths between the same endpoints whose ends overlap, build a
/// path that starts with the intersection of both first labels, by moving
/// the second vertex of one path into the overlap. None when neither side
/// yields a valid replacement (possible only beyond the short regime).
pub fn combine_first_edges(g: &Cayley, p: &CosetPath, q: &CosetPath) -> Result<Option<CosetPath>> {
    if !is_valid_path(g, p) || !is_valid_path(g, q) {
        return Err(Error::Invalid("both arguments must be valid paths".into()));
    }
    if p.start() != q.start() || p.end() != q.end() {
        return Err(Error::Invalid("paths must share both endpoints".into()));
    }
    let v = p.start();
    let first = p.label(1).inter(q.label(1));
    for (base, other) in [(p, q), (q, p)] {
        let (a1, a2, t2) = (base.label(1), base.label(2), base.vertices[1]);
        let b1 = other.label(1);
        for &x in g.members(v, b1.inter(a1)) {
            if !g.same(x, t2, a1.inter(a2)) {
                continue;
            }
            let mut cand = base.clone();
            cand.vertices[1] = x;
            cand.labels[0] = first;
            if is_valid_path(g, &cand) {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

/// Rewrite a path of length >= 2 into an inner path between the same
/// endpoints: shrink every label by the minimal connecting subset of the
/// endpoints and shift interior vertices within their overlap cosets.
pub fn innerize(g: &Cayley, p: &CosetPath, budget: &Budget) -> Result<CosetPath> {
    let class = validate_path(g, p, None)?;
    if !class.valid || p.len() < 2 {
        return Err(Error::Invalid("innerize needs a valid path of length >= 2".into()));
    }
    if class.inner {
        return Ok(p.clone());
    }
    let alpha = g.gen_set(&[p.start(), p.end()])?;
    let l = p.len();
    if (1..=l).any(|i| alpha.subset_of(p.label(i))) {
        return Err(Error::Invalid(
            "a link already covers the connecting subset; the path cannot be made inner".into(),
        ));
    }
    let new_labels: Vec<Mask> = p.labels.iter().map(|a| a.inter(alpha)).collect();

    // backtracking over replacement interior vertices, each drawn from the
    // overlap coset of the original vertex
    fn go(
        g: &Cayley,
        p: &CosetPath,
        new_labels: &[Mask],
        verts: &mut Vec<u32>,
        i: usize,
        budget: &Budget,
    ) -> Result<Option<CosetPath>> {
        let l = p.len();
        if i > l {
            let cand = CosetPath { vertices: verts.clone(), labels: new_labels.to_vec() };
            let class = validate_path(g, &cand, None)?;
            return Ok(if class.inner { Some(cand) } else { None });
        }
        let pool = g.members(p.vertices[i - 1], p.label(i - 1).inter(p.label(i))).to_vec();
        for c in pool {
            budget.tick()?;
            verts[i - 1] = c;
            if let Some(found) = go(g, p, new_labels, verts, i + 1, budget)? {
                return Ok(Some(found));
            }
        }
        verts[i - 1] = p.vertices[i - 1];
        Ok(None)
    }

    let mut verts = p.vertices.clone();
    match go(g, p, &new_labels, &mut verts, 2, budget)? {
        Some(found) => Ok(found),
        None => {
            let level = acyclicity::acyclicity_level(g, 2 * l, budget)?;
            if level >= 2 * l {
                Err(Error::Invalid("inner rewrite failed despite the acyclicity guard".into()))
            } else {
                Err(Error::GuardTooWeak(format!(
                    "path of length {l} needs {}-acyclicity, level is only {level}",
                    2 * l
                )))
            }
        }
    }
}

/// Exhaustively confirm that no cyclic path (endpoints equal, all other
/// vertices distinct, end conditions as for paths) of length <= n starts
/// at v. Requires the graph to actually be n-acyclic.
pub fn no_short_cyclic_path(g: &Cayley, v: u32, n: usize, budget: &Budget) -> Result<bool> {
    g.require_two_acyclic()?;
    if !acyclicity::is_n_acyclic(g, n, budget)? {
        return Err(Error::Invalid(format!("graph has a coset cycle of length <= {n}")));
    }
    let filter = EdgeFilter { v1: v, kind: FilterKind::Any };
    for l in 1..=n {
        if search_exact(g, v, v, l, &filter, budget)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
