//! Coverings between Cayley graphs over matching generator alphabets:
//! compatibility (every relation of the source holds in the target), the
//! induced quotient homomorphism, and the local-isomorphism check.

use crate::error::{Error, Result};
use crate::group::Group;

/// Match the generator alphabets of two groups: by name when the label
/// sets coincide, positionally otherwise (so e.g. reflections r,s can map
/// onto a,b). Returns source index -> target index.
pub fn match_labels(g: &Group, h: &Group) -> Result<Vec<u8>> {
    if g.arity() != h.arity() {
        return Err(Error::LabelMismatch(format!(
            "{} generators vs {}",
            g.arity(),
            h.arity()
        )));
    }
    let mut gs: Vec<&String> = g.labels().iter().collect();
    let mut hs: Vec<&String> = h.labels().iter().collect();
    gs.sort();
    hs.sort();
    if gs == hs {
        g.labels().iter().map(|l| h.label_index(l).map(|i| i as u8)).collect()
    } else {
        Ok((0..g.arity() as u8).collect())
    }
}

fn phi(g: &Group, h: &Group, lm: &[u8], v: u32) -> u32 {
    let word: Vec<u8> = g.canonical_word(v).iter().map(|&e| lm[e as usize]).collect();
    h.eval(&word)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatReport {
    pub compatible: bool,
    /// A word that multiplies to the identity in the source but not in the
    /// target, rendered in source labels.
    pub witness: Option<String>,
}

/// Does every word that collapses to the identity in `g` also collapse in
/// `h`? Decided by one consistency sweep over the canonical-word assignment,
/// no word enumeration. A failure at (v, e) yields the witness word
/// w_u e reverse(w_v) with u = v∘e.
pub fn check_compatible(g: &Group, h: &Group) -> Result<CompatReport> {
    let lm = match_labels(g, h)?;
    let map: Vec<u32> = (0..g.size as u32).map(|v| phi(g, h, &lm, v)).collect();
    for v in 0..g.size as u32 {
        for e in 0..g.arity() {
            let u = g.apply(v, e);
            if map[u as usize] != h.apply(map[v as usize], lm[e] as usize) {
                let mut w: Vec<u8> = g.canonical_word(u).to_vec();
                w.push(e as u8);
                w.extend(g.canonical_word(v).iter().rev());
                debug_assert_eq!(g.eval(&w), 0);
                return Ok(CompatReport {
                    compatible: false,
                    witness: Some(g.word_string(&w)),
                });
            }
        }
    }
    Ok(CompatReport { compatible: true, witness: None })
}

/// The quotient homomorphism of a compatible pair, as a total per-element
/// assignment. Construction re-verifies the homomorphism equations and
/// surjectivity.
pub struct CoveringMap<'a> {
    pub source: &'a Group,
    pub target: &'a Group,
    /// map[v] = image of source element v.
    pub map: Vec<u32>,
    /// source generator index -> target generator index.
    pub label_map: Vec<u8>,
}

impl<'a> CoveringMap<'a> {
    /// Wrap an explicit assignment, checking it is a surjective
    /// homomorphism respecting the matched labels.
    pub fn new(source: &'a Group, target: &'a Group, map: Vec<u32>) -> Result<CoveringMap<'a>> {
        let lm = match_labels(source, target)?;
        if map.len() != source.size || map.first() != Some(&0) {
            return Err(Error::Invalid("assignment must be total with 1 -> 1".into()));
        }
        for v in 0..source.size as u32 {
            for e in 0..source.arity() {
                let u = source.apply(v, e);
                if map[u as usize] != target.apply(map[v as usize], lm[e] as usize) {
                    return Err(Error::Invalid(format!(
                        "assignment breaks the edge relation at vertex {} label {}",
                        v,
                        source.labels()[e]
                    )));
                }
            }
        }
        let mut hit = vec![false; target.size];
        for &x in &map {
            hit[x as usize] = true;
        }
        if !hit.iter().all(|&b| b) {
            return Err(Error::Invalid("assignment is not surjective".into()));
        }
        Ok(CoveringMap { source, target, map, label_map: lm })
    }

    /// Number of preimages of each target element; a homomorphism always
    /// has uniform fibers of size |source| / |target|.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.target.size];
        for &x in &self.map {
            f[x as usize] += 1;
        }
        f
    }
}

/// Build the quotient map of a compatible pair.
pub fn covering_map<'a>(g: &'a Group, h: &'a Group) -> Result<CoveringMap<'a>> {
    let rep = check_compatible(g, h)?;
    if !rep.compatible {
        return Err(Error::NotCompatible(rep.witness.unwrap_or_default()));
    }
    let lm = match_labels(g, h)?;
    let map: Vec<u32> = (0..g.size as u32).map(|v| phi(g, h, &lm, v)).collect();
    CoveringMap::new(g, h, map)
}

/// Is the map a covering: around every source vertex, the restriction to
/// the 1-neighbourhood is a label-preserving bijection onto the
/// 1-neighbourhood of the image. Returns the lowest offending vertex on
/// failure.
pub fn verify_covering(m: &CoveringMap) -> (bool, Option<u32>) {
    let (g, h) = (m.source, m.target);
    for v in 0..g.size as u32 {
        let pv = m.map[v as usize];
        let mut src: Vec<u32> = vec![v];
        let mut img: Vec<u32> = vec![pv];
        let mut tgt: Vec<u32> = vec![pv];
        for e in 0..g.arity() {
            src.push(g.apply(v, e));
            img.push(m.map[g.apply(v, e) as usize]);
            tgt.push(h.apply(pv, m.label_map[e] as usize));
        }
        for x in [&mut src, &mut img, &mut tgt] {
            x.sort_unstable();
            x.dedup();
        }
        // bijective means the image of the neighbourhood is the target
        // neighbourhood with no collapse; per-label edges already match by
        // the homomorphism property
        if src.len() != img.len() || img != tgt {
            return (false, Some(v));
        }
    }
    (true, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn build(family: &str, p: usize) -> Group {
        Group::build(&catalog::make(family, &[p]).unwrap()).unwrap()
    }

    #[test]
    fn identity_is_a_covering() {
        let g = build("elementary_abelian", 2);
        let h = build("elementary_abelian", 2);
        assert!(check_compatible(&g, &h).unwrap().compatible);
        let m = covering_map(&g, &h).unwrap();
        assert_eq!(m.map, vec![0, 1, 2, 3]);
        assert_eq!(verify_covering(&m), (true, None));
    }

    #[test]
    fn dihedral_covers_klein() {
        let d4 = build("dihedral_reflections", 4);
        let v4 = build("elementary_abelian", 2);
        assert!(check_compatible(&d4, &v4).unwrap().compatible);
        let m = covering_map(&d4, &v4).unwrap();
        assert!(m.fiber_sizes().iter().all(|&s| s == 2));
        assert_eq!(verify_covering(&m), (true, None));
    }

    #[test]
    fn klein_does_not_cover_dihedral() {
        let v4 = build("elementary_abelian", 2);
        let d4 = build("dihedral_reflections", 4);
        let rep = check_compatible(&v4, &d4).unwrap();
        assert!(!rep.compatible);
        assert_eq!(rep.witness.as_deref(), Some("abab"));
        assert!(matches!(covering_map(&v4, &d4), Err(Error::NotCompatible(_))));
    }

    #[test]
    fn mismatched_alphabets_rejected() {
        let s3 = build("symmetric_transpositions", 3);
        let v4 = build("elementary_abelian", 2);
        assert!(matches!(check_compatible(&s3, &v4), Err(Error::LabelMismatch(_))));
    }

    #[test]
    fn broken_assignments_rejected() {
        // generators always denote pairwise distinct elements, so any
        // accepted assignment is locally injective; a hand-broken one must
        // fail the edge-relation check instead
        let g = build("elementary_abelian", 2);
        let h = build("elementary_abelian", 2);
        assert!(matches!(
            CoveringMap::new(&g, &h, vec![0, 2, 1, 3]),
            Err(Error::Invalid(_))
        ));
        assert!(matches!(
            CoveringMap::new(&g, &h, vec![0, 1, 2]),
            Err(Error::Invalid(_))
        ));
    }
}
