//! Dual hypergraph of a Cayley graph: one vertex per coset (over every
//! generator subset), one hyperedge per group element collecting all cosets
//! containing it. Coset paths translate to chordless dual paths and back,
//! distances transfer with an offset of one, and convex closures on the
//! coset side embed into closures on the dual side.

use crate::acyclicity;
use crate::budget::Budget;
use crate::cosets::{Cayley, CosetId};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::mask::Mask;
use crate::paths::{self, CosetPath};
use std::collections::{BTreeSet, HashMap};

/// Which endpoint of a path anchors the avoided coset family rho(., gamma).
/// The two choices agree whenever both endpoints share their gamma-coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Start,
    End,
}

/// The dual hypergraph plus the coset <-> dual-vertex correspondence.
/// Hyperedge i is the set of cosets containing group element i.
pub struct Dual {
    hg: Hypergraph,
    verts: Vec<CosetId>,
    ids: HashMap<CosetId, usize>,
}

fn mask_name(g: &Cayley, m: Mask) -> String {
    let parts: Vec<&str> = m.iter().map(|e| g.group.labels()[e].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

fn coset_name(g: &Cayley, c: CosetId) -> String {
    let w = g.group.vertex_name(c.rep);
    let w = if w.is_empty() { "1".to_string() } else { w };
    format!("{}:{}", mask_name(g, c.mask), w)
}

impl Dual {
    /// Build the dual of `g`. Dual vertices are ordered by (mask, min
    /// member) ascending, so ids are deterministic.
    pub fn build(g: &Cayley, budget: &Budget) -> Result<Dual> {
        let mut verts: Vec<CosetId> = Vec::new();
        for m in Mask::all(g.arity()) {
            budget.tick()?;
            for r in g.partition(m).reps() {
                verts.push(CosetId { mask: m, rep: r });
            }
        }
        let ids: HashMap<CosetId, usize> =
            verts.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let names: Vec<String> = verts.iter().map(|&c| coset_name(g, c)).collect();
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(g.size());
        for v in 0..g.size() as u32 {
            budget.tick()?;
            edges.push(g.dual_hyperedge(v).into_iter().map(|c| ids[&c]).collect());
        }
        let hg = Hypergraph::new(names, edges)?;
        // all hyperedges are distinct (empty-mask cosets are singletons),
        // so edge i of the hypergraph belongs to group element i
        debug_assert_eq!(hg.edge_count(), g.size());
        Ok(Dual { hg, verts, ids })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hg
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn coset_of(&self, id: usize) -> CosetId {
        self.verts[id]
    }

    pub fn id_of(&self, c: CosetId) -> usize {
        self.ids[&c]
    }

    /// Generator subset of the coset behind a dual vertex.
    pub fn color(&self, id: usize) -> Mask {
        self.verts[id].mask
    }

    /// Hyperedge of a group element: all cosets containing it.
    pub fn element_edge(&self, v: u32) -> &[usize] {
        &self.hg.edges()[v as usize]
    }

    /// rho(anchor, gamma): dual vertices whose coset contains `anchor` and
    /// whose subset includes `gamma`.
    pub fn rho(&self, g: &Cayley, anchor: u32, gamma: Mask) -> Vec<usize> {
        (0..self.verts.len())
            .filter(|&i| {
                let c = self.verts[i];
                gamma.subset_of(c.mask) && g.contains(c, anchor)
            })
            .collect()
    }

    fn in_t(&self, g: &Cayley, id: usize, anchor: u32, gamma: Mask) -> bool {
        let c = self.verts[id];
        gamma.subset_of(c.mask) && g.contains(c, anchor)
    }

    /// Gaifman distance between the hyperedges of v and u in the dual with
    /// rho(anchor, gamma) removed. None when no avoiding connection exists.
    pub fn hyperedge_distance(
        &self,
        g: &Cayley,
        v: u32,
        u: u32,
        gamma: Option<Mask>,
        anchor: Anchor,
    ) -> Result<Option<usize>> {
        let gamma = match gamma {
            Some(m) => m,
            None => g.gen_set(&[v, u])?,
        };
        let av = match anchor {
            Anchor::Start => v,
            Anchor::End => u,
        };
        let t = self.rho(g, av, gamma);
        let x = self.element_edge(v).to_vec();
        let y = self.element_edge(u).to_vec();
        Ok(self.hg.cut_distance(&x, &y, &t))
    }

    fn check_chordless(&self, ids: &[usize]) -> bool {
        let adj = self.hg.gaifman();
        for (i, &a) in ids.iter().enumerate() {
            for (j, &b) in ids.iter().enumerate().skip(i + 1) {
                if a == b {
                    return false;
                }
                let adjacent = adj[a][b];
                if (j == i + 1) != adjacent {
                    return false;
                }
            }
        }
        true
    }

    /// Translate a chordless dual path avoiding rho(anchor, gamma) into a
    /// coset path. The input runs from a singleton coset to a singleton
    /// coset: [v_1]_{}, [v_2]_{a_1}, ..., [v_{l+1}]_{a_l}, [v_{l+1}]_{}.
    pub fn chordless_to_coset(
        &self,
        g: &Cayley,
        ids: &[usize],
        gamma: Mask,
        anchor: Anchor,
    ) -> Result<CosetPath> {
        let bad = |m: &str| Error::MalformedDualPath(m.to_string());
        if ids.len() < 3 {
            return Err(bad("need at least three dual vertices"));
        }
        let l = ids.len() - 2;
        let first = self.verts[ids[0]];
        let last = self.verts[ids[l + 1]];
        if !first.mask.is_empty() || !last.mask.is_empty() {
            return Err(bad("endpoints must be empty-subset cosets"));
        }
        let (v1, vend) = (first.rep, last.rep);
        if v1 == vend {
            return Err(bad("endpoints must differ"));
        }
        let links: Vec<CosetId> = ids[1..=l].iter().map(|&i| self.verts[i]).collect();
        if links.iter().any(|c| c.mask.is_empty()) {
            return Err(bad("interior cosets need a non-empty subset"));
        }
        if !g.contains(links[0], v1) || !g.contains(links[l - 1], vend) {
            return Err(bad("endpoint singletons must sit inside the adjacent cosets"));
        }
        if !self.check_chordless(ids) {
            return Err(bad("dual path is not chordless"));
        }
        let av = match anchor {
            Anchor::Start => v1,
            Anchor::End => vend,
        };
        if ids.iter().any(|&i| self.in_t(g, i, av, gamma)) {
            return Err(bad("dual path meets the avoided coset family"));
        }
        // recover interior vertices: v_{i+1} lies in both consecutive cosets
        let mut vertices = vec![v1];
        for i in 0..l - 1 {
            let shared = g
                .coset_members(links[i])
                .iter()
                .copied()
                .find(|&w| g.contains(links[i + 1], w))
                .ok_or_else(|| bad("consecutive cosets do not intersect"))?;
            vertices.push(shared);
        }
        vertices.push(vend);
        let p = CosetPath { vertices, labels: links.iter().map(|c| c.mask).collect() };
        if !paths::is_valid_path(g, &p) {
            return Err(Error::Invalid(
                "translated coset path failed validation".into(),
            ));
        }
        debug_assert!(non_t_path(g, &p, av, gamma));
        Ok(p)
    }

    /// Translate a coset path avoiding rho(anchor, gamma) into its dual
    /// chordless paths: the full form of length l+1 between the endpoint
    /// singletons, and the trimmed form of length l-1 over the link cosets.
    pub fn coset_to_chordless(
        &self,
        g: &Cayley,
        p: &CosetPath,
        gamma: Mask,
        anchor: Anchor,
        budget: &Budget,
    ) -> Result<DualPaths> {
        g.require_two_acyclic()?;
        if !paths::is_valid_path(g, p) {
            return Err(Error::BadParams("not a coset path".into()));
        }
        let l = p.len();
        let gen = g.gen_set(&[p.start(), p.end()])?;
        if !gamma.subset_of(gen) {
            return Err(Error::BadParams(
                "gamma must be contained in the minimal connecting subset".into(),
            ));
        }
        let av = match anchor {
            Anchor::Start => p.start(),
            Anchor::End => p.end(),
        };
        if !non_t_path(g, p, av, gamma) {
            return Err(Error::BadParams(
                "a link's coset contains the anchored gamma-coset".into(),
            ));
        }
        let mut full = Vec::with_capacity(l + 2);
        full.push(self.id_of(g.coset(p.start(), Mask::EMPTY)));
        for i in 1..=l {
            full.push(self.id_of(g.coset(p.vertices[i], p.label(i))));
        }
        full.push(self.id_of(g.coset(p.end(), Mask::EMPTY)));
        let trimmed: Vec<usize> = full[1..=l].to_vec();
        if !self.check_chordless(&full) {
            // chords can only appear below the acyclicity threshold
            let level = acyclicity::acyclicity_level(g, 2 * l, budget)?;
            if level >= 2 * l {
                return Err(Error::Invalid(
                    "dual image has a chord despite the acyclicity guard".into(),
                ));
            }
            return Err(Error::GuardTooWeak(format!(
                "dual image is not chordless; acyclicity level {} is below {}",
                level,
                2 * l
            )));
        }
        Ok(DualPaths { full, trimmed })
    }

    /// Compare the path distance avoiding rho(v, gamma) with the dual
    /// Gaifman distance between the hyperedges of v and u; the two agree
    /// with an offset of one (infinite on both sides together, and a
    /// trivial distance 1 pairs with dual distance 0). A disagreement
    /// within the acyclicity guard is an error; outside it the report is
    /// returned unverified.
    pub fn check_two_distances(
        &self,
        g: &Cayley,
        v: u32,
        u: u32,
        gamma: Mask,
        budget: &Budget,
    ) -> Result<TwoDistances> {
        let td = paths::t_distance(g, v, u, gamma, budget)?;
        let dual = self.hyperedge_distance(g, v, u, Some(gamma), Anchor::Start)?;
        let consistent = match (td.length, dual) {
            (None, None) => true,
            (Some(a), Some(b)) => a == b + 1,
            _ => false,
        };
        let guard_ok = match td.length {
            Some(a) => acyclicity::acyclicity_level(g, 2 * a, budget)? >= 2 * a,
            None => true,
        };
        if !consistent && guard_ok {
            return Err(Error::Invalid(format!(
                "distance mismatch within the acyclicity guard: path {:?}, dual {:?}",
                td.length, dual
            )));
        }
        Ok(TwoDistances { path_distance: td.length, dual_distance: dual, consistent, guard_ok })
    }

    /// Least m-closed set of cosets containing `p`: closed under adding the
    /// interior link cosets of every coset path of length <= m whose first
    /// and last link cosets are already in the set. The result is checked
    /// against the (m-1)-closure of the matching dual vertices, which must
    /// contain it.
    pub fn convex_closure_cayley(
        &self,
        g: &Cayley,
        p: &[CosetId],
        m: usize,
        budget: &Budget,
    ) -> Result<ClosureReport> {
        if m < 2 {
            return Err(Error::BadParams("closure bound must be at least 2".into()));
        }
        let mut inside: BTreeSet<CosetId> = p.iter().copied().collect();
        if inside.iter().any(|c| c.mask.is_empty()) {
            return Err(Error::BadParams("closure is over non-trivial cosets".into()));
        }
        loop {
            let mut add: BTreeSet<CosetId> = BTreeSet::new();
            for &c in &inside {
                for &v1 in g.coset_members(c) {
                    let mut verts = vec![v1];
                    let mut labs = vec![c.mask];
                    closure_dfs(g, &inside, m, &mut verts, &mut labs, &mut add, budget)?;
                }
            }
            let before = inside.len();
            inside.extend(add);
            if inside.len() == before {
                break;
            }
        }
        let dual_p: Vec<usize> = p.iter().map(|&c| self.id_of(c)).collect();
        let dual_cl = self.hg.convex_closure(&dual_p, m - 1, budget)?;
        let dual_set: BTreeSet<usize> = dual_cl.iter().copied().collect();
        let contained = inside.iter().all(|&c| dual_set.contains(&self.id_of(c)));
        debug_assert!(contained, "coset closure escaped the dual closure");
        Ok(ClosureReport {
            cosets: inside.into_iter().collect(),
            dual_size: dual_cl.len(),
            contained_in_dual: contained,
        })
    }
}

/// Every link's coset avoids containing the gamma-coset of the anchor.
pub fn non_t_path(g: &Cayley, p: &CosetPath, anchor: u32, gamma: Mask) -> bool {
    (1..=p.len()).all(|i| !g.coset_contained(anchor, gamma, p.vertices[i - 1], p.label(i)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPaths {
    pub full: Vec<usize>,
    pub trimmed: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoDistances {
    pub path_distance: Option<usize>,
    pub dual_distance: Option<usize>,
    pub consistent: bool,
    pub guard_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub cosets: Vec<CosetId>,
    pub dual_size: usize,
    pub contained_in_dual: bool,
}

// Enumerate extensions of the partial coset path (verts, labs) whose first
// link coset is already inside; whenever a complete path of length >= 3 ends
// on an inside coset, record the interior link cosets.
fn closure_dfs(
    g: &Cayley,
    inside: &BTreeSet<CosetId>,
    m: usize,
    verts: &mut Vec<u32>,
    labs: &mut Vec<Mask>,
    add: &mut BTreeSet<CosetId>,
    budget: &Budget,
) -> Result<()> {
    budget.tick()?;
    let j = labs.len();
    let vj = verts[j - 1];
    let prev = if j >= 2 { labs[j - 2] } else { Mask::EMPTY };
    let aj = labs[j - 1];
    let nonempty: Vec<Mask> = Mask::all(g.arity()).filter(|a| !a.is_empty()).collect();
    for w in g.members(vj, aj).to_vec() {
        if verts.contains(&w) {
            continue;
        }
        // completed path ending at w: the final disjointness condition
        // degenerates to w not sharing the overlap coset of the last links
        if j >= 3 && !g.same(w, vj, prev.inter(aj)) {
            let last = g.coset(w, aj);
            if inside.contains(&last) {
                for i in 1..j - 1 {
                    add.insert(g.coset(verts[i], labs[i]));
                }
            }
        }
        if j == m {
            continue;
        }
        for &a in &nonempty {
            if !g.disjoint(vj, prev.inter(aj), w, aj.inter(a)) {
                continue;
            }
            verts.push(w);
            labs.push(a);
            closure_dfs(g, inside, m, verts, labs, add, budget)?;
            labs.pop();
            verts.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::Group;

    fn build(family: &str, p: usize) -> Cayley {
        Cayley::new(Group::build(&catalog::make(family, &[p]).unwrap()).unwrap())
    }

    const A: Mask = Mask(0b01);
    const B: Mask = Mask(0b10);

    fn el(g: &Cayley, w: &str) -> u32 {
        g.group.eval(&g.group.parse_word(w).unwrap())
    }

    #[test]
    fn dual_shapes() {
        let b = Budget::default();
        let z2 = build("elementary_abelian", 1);
        let d = Dual::build(&z2, &b).unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.hypergraph().edge_count(), 2);
        assert!(d.hypergraph().edges().iter().all(|e| e.len() == 2));

        let v4 = build("elementary_abelian", 2);
        let d = Dual::build(&v4, &b).unwrap();
        assert_eq!(d.vertex_count(), 9); // 4 + 2 + 2 + 1
        assert_eq!(d.hypergraph().edge_count(), 4);
        assert!(d.hypergraph().edges().iter().all(|e| e.len() == 4));
        // colors count the subset sizes
        let singles =
            (0..9).filter(|&i| d.color(i).len() == 1).count();
        assert_eq!(singles, 4);
    }

    #[test]
    fn shared_cosets_versus_rho() {
        // the hyperedges of v and u meet inside rho(v, gamma) exactly when
        // gamma is contained in the minimal subset connecting v and u
        let g = build("elementary_abelian", 2);
        let b = Budget::default();
        let d = Dual::build(&g, &b).unwrap();
        for v in 0..4u32 {
            for u in 0..4u32 {
                if v == u {
                    continue;
                }
                let gen = g.gen_set(&[v, u]).unwrap();
                for gamma in Mask::all(2) {
                    let t: BTreeSet<usize> = d.rho(&g, v, gamma).into_iter().collect();
                    let shared_inside = d
                        .element_edge(v)
                        .iter()
                        .filter(|i| d.element_edge(u).contains(i))
                        .all(|i| t.contains(i));
                    assert_eq!(shared_inside, gamma.subset_of(gen), "{} {} {:?}", v, u, gamma);
                }
            }
        }
    }

    #[test]
    fn acyclicity_levels_transfer() {
        let b = Budget::default();
        for (family, p, max_n) in
            [("elementary_abelian", 2, 5), ("elementary_abelian", 3, 5), ("symmetric_adjacent", 3, 6)]
        {
            let g = build(family, p);
            assert!(g.is_two_acyclic());
            let d = Dual::build(&g, &b).unwrap();
            for n in 3..=max_n {
                let cayley = acyclicity::is_n_acyclic(&g, n, &b).unwrap();
                let dual = d.hypergraph().is_n_acyclic(n, &b).unwrap();
                assert_eq!(cayley, dual, "{} n={}", family, n);
            }
        }
    }

    #[test]
    fn klein_translation_round_trip() {
        let g = build("elementary_abelian", 2);
        let b = Budget::default();
        let d = Dual::build(&g, &b).unwrap();
        let (bb, ab) = (el(&g, "b"), el(&g, "ab"));
        let p = CosetPath { vertices: vec![0, bb, ab], labels: vec![B, A] };
        assert!(paths::is_valid_path(&g, &p));

        let t = d.coset_to_chordless(&g, &p, A, Anchor::Start, &b).unwrap();
        assert_eq!(t.full.len(), 4);
        assert_eq!(t.trimmed, &t.full[1..=2]);
        // the dual path walks singleton, [b]_{b}, [ab]_{a}, singleton
        assert_eq!(d.coset_of(t.full[0]), g.coset(0, Mask::EMPTY));
        assert_eq!(d.coset_of(t.full[1]), g.coset(bb, B));
        assert_eq!(d.coset_of(t.full[2]), g.coset(ab, A));
        assert_eq!(d.coset_of(t.full[3]), g.coset(ab, Mask::EMPTY));

        let back = d.chordless_to_coset(&g, &t.full, A, Anchor::Start).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn malformed_dual_paths_rejected() {
        let g = build("elementary_abelian", 2);
        let b = Budget::default();
        let d = Dual::build(&g, &b).unwrap();
        let (bb, ab) = (el(&g, "b"), el(&g, "ab"));
        // too short
        assert!(matches!(
            d.chordless_to_coset(&g, &[0, 1], A, Anchor::Start),
            Err(Error::MalformedDualPath(_))
        ));
        // runs through the avoided family: the {a}-labelled last link
        // contains the gamma-coset of the end anchor
        let full = vec![
            d.id_of(g.coset(0, Mask::EMPTY)),
            d.id_of(g.coset(bb, B)),
            d.id_of(g.coset(ab, A)),
            d.id_of(g.coset(ab, Mask::EMPTY)),
        ];
        assert!(matches!(
            d.chordless_to_coset(&g, &full, A, Anchor::End),
            Err(Error::MalformedDualPath(_))
        ));
        // anchored at the start, gamma = {b} clashes with the first link
        assert!(matches!(
            d.chordless_to_coset(&g, &full, B, Anchor::Start),
            Err(Error::MalformedDualPath(_))
        ));
        // but anchored at the end it avoids the family and translates
        let p = d.chordless_to_coset(&g, &full, B, Anchor::End).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn two_distances_agree_everywhere() {
        let g = build("elementary_abelian", 2);
        let b = Budget::default();
        let d = Dual::build(&g, &b).unwrap();
        for v in 0..4u32 {
            for u in 0..4u32 {
                if v == u {
                    continue;
                }
                for gamma in Mask::all(2) {
                    let r = d.check_two_distances(&g, v, u, gamma, &b).unwrap();
                    assert!(r.consistent, "{} {} {:?}: {:?}", v, u, gamma, r);
                }
            }
        }
        // pinned values: the path distance avoiding rho(1, {a}) from 1 to ab
        // is 2, so the dual hyperedge distance is 1
        let ab = el(&g, "ab");
        let r = d.check_two_distances(&g, 0, ab, A, &b).unwrap();
        assert_eq!(r.path_distance, Some(2));
        assert_eq!(r.dual_distance, Some(1));
        // a gamma outside the connecting subset makes the distance trivial
        let a = el(&g, "a");
        let r = d.check_two_distances(&g, 0, a, B, &b).unwrap();
        assert_eq!(r.path_distance, Some(1));
        assert_eq!(r.dual_distance, Some(0));
    }

    #[test]
    fn klein_closure_of_opposite_cosets() {
        let g = build("elementary_abelian", 2);
        let b = Budget::default();
        let d = Dual::build(&g, &b).unwrap();
        let ab = el(&g, "ab");
        let p = vec![g.coset(0, A), g.coset(ab, A)];
        let r = d.convex_closure_cayley(&g, &p, 3, &b).unwrap();
        // interiors of the length-3 paths add both {b}-cosets
        assert_eq!(r.cosets.len(), 4);
        assert!(r.cosets.contains(&g.coset(0, B)));
        assert!(r.cosets.contains(&g.coset(el(&g, "a"), B)));
        assert!(r.contained_in_dual);
        // extensive and idempotent
        assert!(p.iter().all(|c| r.cosets.contains(c)));
        let again = d.convex_closure_cayley(&g, &r.cosets, 3, &b).unwrap();
        assert_eq!(again.cosets, r.cosets);
    }
}
