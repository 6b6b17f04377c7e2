//! Verification suites: exhaustive sweeps of the toolkit's structural laws
//! over the built-in instance catalog. Every law is a theorem, so any
//! refutation indicates an implementation bug; sweeps that outrun the
//! acyclicity guard report unverified rather than refuted.

use crate::acyclicity;
use crate::budget::Budget;
use crate::catalog;
use crate::cosets::Cayley;
use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::mask::Mask;
use crate::paths::{self, ZipperStatus};
use serde::Serialize;
use std::collections::{HashMap, HashSet};

pub const SUITES: [&str; 12] = [
    "cutchar",
    "genset",
    "addagent",
    "subsetchar",
    "cosetcut",
    "zipper",
    "cyclic",
    "innerize",
    "tprop",
    "twodistances",
    "dualacyc",
    "closure",
];

/// Instance size bound for suites whose sweeps search global path spaces.
const SMALL_INSTANCE: usize = 16;
const LEVEL_CAP: usize = paths::DEFAULT_LEVEL_CAP;

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Refuted,
    UnverifiedGuard,
    BudgetExceeded,
}

#[derive(Serialize, Debug, Clone)]
pub struct SuiteResult {
    pub suite: String,
    pub status: Status,
    /// Checks performed across all instances.
    pub cases: usize,
    /// Cases skipped or inconclusive because the acyclicity guard was not met.
    pub unverified: usize,
    /// First refutation found, if any.
    pub witness: Option<String>,
    /// Instances left out of the sweep (not 2-acyclic, or too large).
    pub skipped: usize,
    pub instances: Vec<String>,
}

struct Acc {
    cases: usize,
    unverified: usize,
    skipped: usize,
    witness: Option<String>,
}

impl Acc {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn skip(&mut self) {
        self.unverified += 1;
    }
}

fn instance_name(e: &catalog::CatalogEntry) -> String {
    format!("{} {:?}", e.family, e.params)
}

/// Run one named suite over the catalog. Budget exhaustion is reported as
/// a status, not an error.
pub fn run_suite(suite: &str, budget: &Budget) -> Result<SuiteResult> {
    if !SUITES.contains(&suite) {
        return Err(Error::BadParams(format!("unknown suite '{suite}'")));
    }
    let mut acc = Acc { cases: 0, unverified: 0, skipped: 0, witness: None };
    let mut instances = Vec::new();
    let mut exhausted = false;
    for e in catalog::standard_entries() {
        let g = Cayley::new(Group::build(&catalog::make(e.family, &e.params)?)?);
        if g.size() > 48 || g.arity() > 4 {
            continue;
        }
        let needs_two_acyclic = suite != "cutchar";
        if needs_two_acyclic && !g.is_two_acyclic() {
            acc.skipped += 1;
            continue;
        }
        instances.push(instance_name(&e));
        let r = match suite {
            "cutchar" => sweep_cutchar(&g, &mut acc, budget),
            "genset" => sweep_genset(&g, &mut acc),
            "addagent" => sweep_addagent(&g, &mut acc),
            "subsetchar" => sweep_subsetchar(&g, &mut acc),
            "cosetcut" => sweep_cosetcut(&g, &mut acc, budget),
            "zipper" => sweep_zipper(&g, &mut acc, budget),
            "cyclic" => sweep_cyclic(&g, &mut acc, budget),
            "innerize" => sweep_innerize(&g, &mut acc, budget),
            "tprop" => sweep_tprop(&g, &mut acc, budget),
            "twodistances" => sweep_twodistances(&g, &mut acc, budget),
            "dualacyc" => sweep_dualacyc(&g, &mut acc, budget),
            "closure" => sweep_closure(&g, &mut acc, budget),
            _ => unreachable!(),
        };
        match r {
            Ok(()) => {}
            Err(Error::BudgetExceeded(_)) => {
                exhausted = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let status = if exhausted {
        Status::BudgetExceeded
    } else if acc.witness.is_some() {
        Status::Refuted
    } else if acc.cases == 0 || acc.unverified > 0 {
        Status::UnverifiedGuard
    } else {
        Status::Verified
    };
    Ok(SuiteResult {
        suite: suite.to_string(),
        status,
        cases: acc.cases,
        unverified: acc.unverified,
        witness: acc.witness,
        skipped: acc.skipped,
        instances,
    })
}

/// Run every suite in declaration order.
pub fn run_all(budget: &Budget) -> Result<Vec<SuiteResult>> {
    SUITES.iter().map(|s| run_suite(s, budget)).collect()
}

fn member_set(g: &Cayley, v: u32, m: Mask) -> HashSet<u32> {
    g.members(v, m).iter().copied().collect()
}

// The intersection characterization: [v]_a ∩ [v]_b = [v]_{a∩b} for all
// (v, a, b) exactly when no coset 2-cycle uses labels a, b at v. Both
// sides computed from first principles.
fn sweep_cutchar(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    let arity = g.arity();
    for v in 0..g.size() as u32 {
        for a in Mask::all(arity) {
            for b in Mask::all(arity) {
                budget.tick()?;
                let sa = member_set(g, v, a);
                let sb = member_set(g, v, b);
                let inter: HashSet<u32> = sa.intersection(&sb).copied().collect();
                let equal = inter == member_set(g, v, a.inter(b));
                let cycle = inter.iter().any(|&u| {
                    u != v
                        && acyclicity::CosetCycle { links: vec![(v, a), (u, b)] }.validate(g)
                });
                acc.check(equal != cycle, || {
                    format!("v={} a={:?} b={:?}: equality {} but 2-cycle {}", v, a, b, equal, cycle)
                });
            }
        }
    }
    Ok(())
}

// Nonempty intersections of cosets are themselves cosets of the
// intersected subset, and the subsets connecting a fixed pair are exactly
// the supersets of one minimal subset.
fn sweep_genset(g: &Cayley, acc: &mut Acc) -> Result<()> {
    let arity = g.arity();
    let n = g.size() as u32;
    for v1 in 0..n {
        for a1 in Mask::all(arity) {
            for v2 in 0..n {
                for a2 in Mask::all(arity) {
                    let s1 = member_set(g, v1, a1);
                    let s2 = member_set(g, v2, a2);
                    let inter: HashSet<u32> = s1.intersection(&s2).copied().collect();
                    if let Some(&w) = inter.iter().min() {
                        acc.check(inter == member_set(g, w, a1.inter(a2)), || {
                            format!(
                                "[{}]_{:?} ∩ [{}]_{:?} is not the {:?}-coset of {}",
                                v1,
                                a1,
                                v2,
                                a2,
                                a1.inter(a2),
                                w
                            )
                        });
                    }
                }
            }
        }
    }
    for v in 0..n {
        for u in 0..n {
            if v == u {
                continue;
            }
            let gen = g.gen_set(&[v, u])?;
            for a in Mask::all(arity) {
                acc.check(g.same(v, u, a) == gen.subset_of(a), || {
                    format!("connectivity of {} and {} under {:?} vs gen {:?}", v, u, a, gen)
                });
            }
        }
    }
    Ok(())
}

// Extending a pair by a fresh generator grows its minimal connecting
// subset by exactly that generator.
fn sweep_addagent(g: &Cayley, acc: &mut Acc) -> Result<()> {
    for v in 0..g.size() as u32 {
        for u in 0..g.size() as u32 {
            let gen = g.gen_set(&[v, u])?;
            for e in 0..g.arity() {
                if gen.contains(e) {
                    continue;
                }
                let u2 = g.group.apply(u, e);
                let gen2 = g.gen_set(&[v, u2])?;
                acc.check(gen2 == gen.with(e), || {
                    format!("gen({},{}∘{}) = {:?}, expected {:?}", v, u, e, gen2, gen.with(e))
                });
            }
        }
    }
    Ok(())
}

// Coset containment at a common vertex mirrors subset order on the labels.
fn sweep_subsetchar(g: &Cayley, acc: &mut Acc) -> Result<()> {
    for v in 0..g.size() as u32 {
        for a in Mask::all(g.arity()) {
            for b in Mask::all(g.arity()) {
                acc.check(b.subset_of(a) == g.coset_contained(v, b, v, a), || {
                    format!("containment [{}]_{:?} ⊆ [{}]_{:?} vs label order", v, b, v, a)
                });
            }
        }
    }
    Ok(())
}

// The overlap cosets at an interior position cut out the triple
// intersection of the surrounding link cosets, on paths and on cycles.
fn sweep_cosetcut(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    let max_len = if g.size() <= SMALL_INSTANCE { 3 } else { 2 };
    for p in paths::enumerate_paths(g, 0, max_len, budget)? {
        acc.check(paths::triple_identity_holds(g, &p), || format!("path {:?}", p));
    }
    if let Some(c) = acyclicity::find_coset_cycle(g, LEVEL_CAP, budget)? {
        let m = c.links.len();
        for i in 0..m {
            budget.tick()?;
            let (vm, am) = c.links[(i + m - 1) % m];
            let (vi, ai) = c.links[i];
            let (vp, ap) = c.links[(i + 1) % m];
            let lhs: HashSet<u32> = member_set(g, vi, am.inter(ai))
                .intersection(&member_set(g, vp, ai.inter(ap)))
                .copied()
                .collect();
            let sa = member_set(g, vm, am);
            let sb = member_set(g, vi, ai);
            let sc = member_set(g, vp, ap);
            let rhs: HashSet<u32> =
                sa.iter().filter(|x| sb.contains(x) && sc.contains(x)).copied().collect();
            acc.check(lhs == rhs, || format!("cycle {:?} at position {}", c.links, i));
        }
    }
    Ok(())
}

// Short paths from the identity, grouped by endpoint and classified.
fn short_nontrivial_paths(
    g: &Cayley,
    budget: &Budget,
) -> Result<(usize, HashMap<u32, Vec<paths::CosetPath>>)> {
    let n = paths::short_threshold(g, LEVEL_CAP, budget)?;
    let mut by_end: HashMap<u32, Vec<paths::CosetPath>> = HashMap::new();
    for p in paths::enumerate_paths(g, 0, n, budget)? {
        if p.len() < 2 {
            continue;
        }
        if paths::validate_path(g, &p, None)?.non_trivial {
            by_end.entry(p.end()).or_default().push(p);
        }
    }
    Ok((n, by_end))
}

// Any two short paths between the same endpoints overlap at both ends,
// and overlapping first edges combine into a path starting with the
// intersection of the first labels.
fn sweep_zipper(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    let (_, by_end) = short_nontrivial_paths(g, budget)?;
    for group in by_end.values() {
        for (i, p) in group.iter().enumerate() {
            for q in &group[i..] {
                let rep = paths::check_zipper(g, p, q, LEVEL_CAP, budget)?;
                match rep.status {
                    ZipperStatus::Violated => {
                        acc.check(false, || format!("paths {:?} and {:?}", p, q))
                    }
                    ZipperStatus::Unverifiable => acc.skip(),
                    ZipperStatus::Verified => {
                        let combined = paths::combine_first_edges(g, p, q)?;
                        acc.check(combined.is_some(), || {
                            format!("no combined path for {:?} and {:?}", p, q)
                        });
                        if let Some(c) = combined {
                            acc.check(c.label(1) == p.label(1).inter(q.label(1)), || {
                                format!("combined path {:?} has the wrong first label", c)
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

// Below the acyclicity level there is no cyclic coset path.
fn sweep_cyclic(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    let level = acyclicity::acyclicity_level(g, LEVEL_CAP.min(6), budget)?;
    let ok = paths::no_short_cyclic_path(g, 0, level, budget)?;
    acc.check(ok, || format!("cyclic path of length <= {level} exists"));
    Ok(())
}

// Every short non-trivial path rewrites into an inner path of the same
// length, and no short path strays outside the minimal connecting coset
// of its endpoints.
fn sweep_innerize(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    let (n, by_end) = short_nontrivial_paths(g, budget)?;
    for group in by_end.values() {
        for p in group {
            match paths::innerize(g, p, budget) {
                Ok(q) => {
                    let class = paths::validate_path(g, &q, None)?;
                    acc.check(
                        class.valid
                            && class.inner
                            && q.len() == p.len()
                            && q.start() == p.start()
                            && q.end() == p.end(),
                        || format!("innerize of {:?} gave {:?}", p, q),
                    );
                }
                Err(Error::GuardTooWeak(_)) => acc.skip(),
                Err(e) => return Err(e),
            }
            // a short path cannot have an overlap coset disjoint from the
            // minimal connecting coset of its endpoints
            if p.len() <= n {
                let gen = g.gen_set(&[p.start(), p.end()])?;
                let outside = (2..=p.len()).any(|i| {
                    g.disjoint(
                        p.start(),
                        gen,
                        p.vertices[i - 1],
                        p.label(i - 1).inter(p.label(i)),
                    )
                });
                acc.check(!outside, || format!("short path {:?} leaves its endpoint coset", p));
            }
        }
    }
    Ok(())
}

// Shared cosets of two hyperedges all contain gamma exactly when gamma is
// inside the minimal connecting subset.
fn sweep_tprop(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    let d = Dual::build(g, budget)?;
    for v in 0..g.size() as u32 {
        for u in 0..g.size() as u32 {
            if v == u {
                continue;
            }
            let gen = g.gen_set(&[v, u])?;
            for gamma in Mask::all(g.arity()) {
                budget.tick()?;
                let t: HashSet<usize> = d.rho(g, v, gamma).into_iter().collect();
                let inside = d
                    .element_edge(v)
                    .iter()
                    .filter(|i| d.element_edge(u).contains(i))
                    .all(|i| t.contains(i));
                acc.check(inside == gamma.subset_of(gen), || {
                    format!("v={} u={} gamma={:?}", v, u, gamma)
                });
            }
        }
    }
    Ok(())
}

// Path distance avoiding rho and the dual hyperedge distance agree with
// offset one.
fn sweep_twodistances(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    if g.size() > SMALL_INSTANCE {
        acc.skipped += 1;
        return Ok(());
    }
    let d = Dual::build(g, budget)?;
    for v in 0..g.size() as u32 {
        for u in 0..g.size() as u32 {
            if v == u {
                continue;
            }
            let gen = g.gen_set(&[v, u])?;
            for gamma in gen.subsets() {
                let r = d.check_two_distances(g, v, u, gamma, budget)?;
                if r.consistent {
                    acc.check(true, String::new);
                } else if r.guard_ok {
                    acc.check(false, || format!("v={} u={} gamma={:?}: {:?}", v, u, gamma, r));
                } else {
                    acc.skip();
                }
            }
        }
    }
    Ok(())
}

// Acyclicity levels of the graph and of its dual hypergraph agree
// level by level.
fn sweep_dualacyc(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    let d = Dual::build(g, budget)?;
    for n in 3..=6 {
        let cayley = acyclicity::is_n_acyclic(g, n, budget)?;
        let dual = d.hypergraph().is_n_acyclic(n, budget)?;
        acc.check(cayley == dual, || {
            format!("level {} verdicts differ: graph {}, dual {}", n, cayley, dual)
        });
    }
    Ok(())
}

// Coset-side convex closures embed into dual closures one bound lower,
// and the closure operator is extensive and idempotent.
fn sweep_closure(g: &Cayley, acc: &mut Acc, budget: &Budget) -> Result<()> {
    if g.size() > SMALL_INSTANCE {
        acc.skipped += 1;
        return Ok(());
    }
    let d = Dual::build(g, budget)?;
    for a in Mask::all(g.arity()) {
        if a.is_empty() {
            continue;
        }
        let reps = g.partition(a).reps();
        for (i, &r1) in reps.iter().enumerate() {
            for &r2 in &reps[i + 1..] {
                let p = vec![g.coset(r1, a), g.coset(r2, a)];
                let rep = d.convex_closure_cayley(g, &p, 3, budget)?;
                acc.check(
                    rep.contained_in_dual && p.iter().all(|c| rep.cosets.contains(c)),
                    || format!("closure of {:?}", p),
                );
                let again = d.convex_closure_cayley(g, &rep.cosets, 3, budget)?;
                acc.check(again.cosets == rep.cosets, || {
                    format!("closure of {:?} is not idempotent", p)
                });
            }
        }
    }
    Ok(())
}
