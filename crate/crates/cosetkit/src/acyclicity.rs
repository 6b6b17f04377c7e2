use crate::budget::Budget;
use crate::cosets::Cayley;
use crate::error::Result;
use crate::mask::Mask;

/// A coset cycle: cyclic sequence of (vertex, generator subset) links.
/// Consecutive vertices (indices mod m) share a coset of the link's subset,
/// and the overlap cosets of consecutive links are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCycle {
    pub links: Vec<(u32, Mask)>,
}

impl CosetCycle {
    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// Re-check the defining conditions from scratch.
    pub fn validate(&self, g: &Cayley) -> bool {
        let m = self.links.len();
        if m < 2 {
            return false;
        }
        for i in 0..m {
            let (v, a) = self.links[i];
            let (vn, an) = self.links[(i + 1) % m];
            let (_, ap) = self.links[(i + m - 1) % m];
            if !g.same(v, vn, a) {
                return false;
            }
            if !g.disjoint(v, ap.inter(a), vn, a.inter(an)) {
                return false;
            }
        }
        true
    }

    /// Left-translate every vertex by a fixed group element; translates of
    /// coset cycles are coset cycles (homogeneity).
    pub fn translate(&self, g: &Cayley, t: u32) -> CosetCycle {
        CosetCycle {
            links: self.links.iter().map(|&(v, a)| (g.group.mult(t, v), a)).collect(),
        }
    }
}

/// Find a shortest coset cycle of length <= max_len, or None.
/// Search is iterative-deepening DFS anchored at the identity (every cycle
/// can be translated to pass through it), with masks enumerated ascending
/// and vertices ascending, so the first hit at the minimal length is
/// lexicographically canonical.
pub fn find_coset_cycle(g: &Cayley, max_len: usize, budget: &Budget) -> Result<Option<CosetCycle>> {
    for m in 2..=max_len {
        if let Some(c) = find_cycle_of_len(g, m, budget)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn find_cycle_of_len(g: &Cayley, m: usize, budget: &Budget) -> Result<Option<CosetCycle>> {
    let mut links: Vec<(u32, Mask)> = Vec::with_capacity(m);
    let masks: Vec<Mask> = Mask::all(g.arity()).filter(|a| !a.is_empty()).collect();
    // links[i] = (v_i, a_i); v_0 = identity

    fn dfs(
        g: &Cayley,
        m: usize,
        masks: &[Mask],
        links: &mut Vec<(u32, Mask)>,
        budget: &Budget,
    ) -> Result<bool> {
        budget.tick()?;
        let k = links.len();
        if k == m {
            // closure checks: link back to v_0 plus the wrap-around
            // disjointness conditions at positions m-1 and 0
            let (v0, a0) = links[0];
            let (v1, a1) = links[1 % m];
            let (vl, al) = links[m - 1];
            let (_, alp) = links[m - 2];
            let ok = g.same(vl, v0, al)
                && g.disjoint(vl, alp.inter(al), v0, al.inter(a0))
                && g.disjoint(v0, al.inter(a0), v1, a0.inter(a1));
            return Ok(ok);
        }
        if k == 0 {
            for &a in masks {
                links.push((0, a));
                if dfs(g, m, masks, links, budget)? {
                    return Ok(true);
                }
                links.pop();
            }
            return Ok(false);
        }
        let (vp, ap) = links[k - 1];
        // candidates for v_k: the a_{k-1}-coset of v_{k-1}
        let members: Vec<u32> = g.members(vp, ap).to_vec();
        for v in members {
            if v == vp {
                continue;
            }
            for &a in masks {
                // interior disjointness at position k-1 (needs a_k = a)
                if k >= 2 {
                    let (_, app) = links[k - 2];
                    if !g.disjoint(vp, app.inter(ap), v, ap.inter(a)) {
                        continue;
                    }
                }
                links.push((v, a));
                if dfs(g, m, masks, links, budget)? {
                    return Ok(true);
                }
                links.pop();
            }
        }
        Ok(false)
    }

    if dfs(g, m, &masks, &mut links, budget)? {
        let c = CosetCycle { links };
        debug_assert!(c.validate(g));
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

pub fn is_n_acyclic(g: &Cayley, n: usize, budget: &Budget) -> Result<bool> {
    Ok(find_coset_cycle(g, n, budget)?.is_none())
}

/// Largest n <= cap with no coset cycle of length <= n; 1 if not even
/// 2-acyclic.
pub fn acyclicity_level(g: &Cayley, cap: usize, budget: &Budget) -> Result<usize> {
    match find_coset_cycle(g, cap, budget)? {
        Some(c) => Ok(c.len() - 1),
        None => Ok(cap),
    }
}

/// Length of a shortest generator cycle. By homogeneity a shortest cycle can
/// be assumed to pass through the identity, so one BFS suffices. Finite
/// connected graphs with at least one generator always contain a cycle
/// unless the graph is a single edge; in that case returns None.
pub fn girth(g: &Cayley) -> Option<usize> {
    let n = g.size();
    let arity = g.arity();
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge: Vec<(u32, usize)> = vec![(u32::MAX, usize::MAX); n];
    let mut queue = std::collections::VecDeque::new();
    dist[0] = 0;
    queue.push_back(0u32);
    let mut best = usize::MAX;
    while let Some(v) = queue.pop_front() {
        for e in 0..arity {
            let u = g.group.apply(v, e);
            if dist[u as usize] == usize::MAX {
                dist[u as usize] = dist[v as usize] + 1;
                parent_edge[u as usize] = (v, e);
                queue.push_back(u);
            } else if parent_edge[u as usize] != (v, e) && parent_edge[v as usize] != (u, e) {
                // non-tree edge closes a cycle through the root
                best = best.min(dist[u as usize] + dist[v as usize] + 1);
            }
        }
    }
    if best == usize::MAX {
        None
    } else {
        Some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::Group;

    fn build(family: &str, p: usize) -> Cayley {
        Cayley::new(Group::build(&catalog::make(family, &[p]).unwrap()).unwrap())
    }

    #[test]
    fn s3_has_a_coset_two_cycle() {
        let g = build("symmetric_transpositions", 3);
        let b = Budget::default();
        let c = find_coset_cycle(&g, 2, &b).unwrap().expect("2-cycle exists");
        assert_eq!(c.len(), 2);
        assert!(c.validate(&g));
        assert!(!is_n_acyclic(&g, 2, &b).unwrap());
        assert_eq!(acyclicity_level(&g, 10, &b).unwrap(), 1);
    }

    #[test]
    fn z2_has_no_cycles() {
        let g = build("elementary_abelian", 1);
        let b = Budget::default();
        assert!(find_coset_cycle(&g, 8, &b).unwrap().is_none());
        assert_eq!(acyclicity_level(&g, 10, &b).unwrap(), 10);
        assert_eq!(girth(&g), None);
    }

    #[test]
    fn klein_levels() {
        let g = build("elementary_abelian", 2);
        let b = Budget::default();
        assert!(is_n_acyclic(&g, 3, &b).unwrap());
        assert!(!is_n_acyclic(&g, 4, &b).unwrap());
        assert_eq!(acyclicity_level(&g, 10, &b).unwrap(), 3);
        let c = find_coset_cycle(&g, 4, &b).unwrap().unwrap();
        assert_eq!(c.len(), 4);
        // the 4-cycle alternates the two singleton labels
        let labels: Vec<Mask> = c.links.iter().map(|&(_, a)| a).collect();
        assert!(labels.iter().all(|a| a.len() == 1));
        assert_ne!(labels[0], labels[1]);
        assert_eq!(labels[0], labels[2]);
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&build("symmetric_transpositions", 3)), Some(4));
        assert_eq!(girth(&build("elementary_abelian", 2)), Some(4));
        assert_eq!(girth(&build("symmetric_adjacent", 3)), Some(6));
        assert_eq!(girth(&build("dihedral_reflections", 4)), Some(8));
    }

    #[test]
    fn witnesses_agree_with_search() {
        let b = Budget::default();
        for e in catalog::standard_entries() {
            let g = Cayley::new(Group::build(&catalog::make(e.family, &e.params).unwrap()).unwrap());
            let by_char = g.is_two_acyclic();
            let by_search = is_n_acyclic(&g, 2, &b).unwrap();
            assert_eq!(by_char, by_search, "{} {:?}", e.family, e.params);
        }
    }

    #[test]
    fn translated_cycles_stay_valid() {
        let g = build("symmetric_transpositions", 3);
        let b = Budget::default();
        let c = find_coset_cycle(&g, 2, &b).unwrap().unwrap();
        for t in [1u32, 2, 3, 4, 5] {
            assert!(c.translate(&g, t).validate(&g));
        }
    }
}
