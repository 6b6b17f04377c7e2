use crate::error::{Error, Result};
use crate::mask::MAX_GENERATORS;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub const SIZE_CAP: usize = 100_000;
/// Full multiplication table kept up to this size; larger groups multiply
/// by composing permutations.
const TABLE_CAP: usize = 4096;
/// Associativity is verified on all triples up to this size, spot-checked above.
const FULL_ASSOC_CAP: usize = 256;
const ASSOC_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
}

/// Input form of a group: either permutation generators over a finite point
/// set, or an explicit multiplication table (identity must be index 0).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    pub generators: Vec<GeneratorSpec>,
}

impl GroupSpec {
    pub fn from_json(s: &str) -> Result<GroupSpec> {
        serde_json::from_str(s).map_err(|e| Error::MalformedSpec(e.to_string()))
    }
}

/// A finite group generated by named involutions, with elements indexed
/// densely in BFS discovery order from the identity (element 0).
pub struct Group {
    pub name: String,
    pub size: usize,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    gen_elem: Vec<u32>,
    /// step[e][v] = v ∘ e; one perfect matching per generator.
    step: Vec<Vec<u32>>,
    table: Option<Vec<u32>>,
    perm_rep: Option<PermRep>,
    /// Canonical word (generator indices) reaching each element from identity,
    /// following the BFS tree with generators scanned in declaration order.
    words: Vec<Vec<u8>>,
}

struct PermRep {
    perms: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, u32>,
}

impl Group {
    pub fn build(spec: &GroupSpec) -> Result<Group> {
        let labels: Vec<String> = spec.generators.iter().map(|g| g.label.clone()).collect();
        if labels.is_empty() {
            return Err(Error::MalformedSpec("no generators declared".into()));
        }
        if labels.len() > MAX_GENERATORS {
            return Err(Error::MalformedSpec(format!(
                "at most {MAX_GENERATORS} generators supported, got {}",
                labels.len()
            )));
        }
        let mut label_index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::MalformedSpec("empty generator label".into()));
            }
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::MalformedSpec(format!("duplicate generator label '{l}'")));
            }
        }

        let mut g = match (&spec.table, spec.generators.iter().any(|x| x.perm.is_some())) {
            (Some(table), false) => Self::build_from_table(spec, table, labels, label_index)?,
            (None, true) => Self::build_from_perms(spec, labels, label_index)?,
            _ => {
                return Err(Error::MalformedSpec(
                    "spec must supply either permutation generators or a table, not both".into(),
                ))
            }
        };
        g.name = spec.name.clone();
        g.check_involutions()?;
        g.check_identity();
        g.check_associativity()?;
        Ok(g)
    }

    fn build_from_perms(
        spec: &GroupSpec,
        labels: Vec<String>,
        label_index: HashMap<String, usize>,
    ) -> Result<Group> {
        let mut gens: Vec<Vec<u16>> = Vec::new();
        let mut degree = spec.degree.unwrap_or(0);
        for gs in &spec.generators {
            let p = gs.perm.as_ref().ok_or_else(|| {
                Error::MalformedSpec(format!("generator '{}' missing perm", gs.label))
            })?;
            degree = degree.max(p.len());
            let mut seen = vec![false; p.len()];
            for &x in p {
                if x >= p.len() || seen[x] {
                    return Err(Error::MalformedSpec(format!(
                        "generator '{}' is not a permutation",
                        gs.label
                    )));
                }
                seen[x] = true;
            }
            gens.push(p.iter().map(|&x| x as u16).collect());
        }
        if degree > u16::MAX as usize {
            return Err(Error::MalformedSpec("permutation degree too large".into()));
        }
        // pad all perms to common degree with fixed points
        for p in &mut gens {
            let from = p.len();
            p.extend((from..degree).map(|x| x as u16));
        }

        let identity: Vec<u16> = (0..degree as u16).collect();
        let mut perms = vec![identity.clone()];
        let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut step: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];

        let mut head = 0usize;
        while head < perms.len() {
            for (e, gp) in gens.iter().enumerate() {
                // (v ∘ e)(x) = v(e(x))
                let v = &perms[head];
                let prod: Vec<u16> = gp.iter().map(|&x| v[x as usize]).collect();
                let id = match index.get(&prod) {
                    Some(&id) => id,
                    None => {
                        let id = perms.len() as u32;
                        if perms.len() >= SIZE_CAP {
                            return Err(Error::SizeCapExceeded(SIZE_CAP));
                        }
                        let mut w = words[head].clone();
                        w.push(e as u8);
                        words.push(w);
                        perms.push(prod.clone());
                        index.insert(prod, id);
                        id
                    }
                };
                step[e].push(id);
            }
            head += 1;
        }
        let size = perms.len();
        let gen_elem: Vec<u32> = (0..gens.len()).map(|e| step[e][0]).collect();
        let table = if size <= TABLE_CAP {
            Some(Self::table_from_perms(&perms, &index))
        } else {
            None
        };
        Ok(Group {
            name: String::new(),
            size,
            labels,
            label_index,
            gen_elem,
            step,
            table,
            perm_rep: Some(PermRep { perms, index }),
            words,
        })
    }

    fn table_from_perms(perms: &[Vec<u16>], index: &HashMap<Vec<u16>, u32>) -> Vec<u32> {
        let n = perms.len();
        let mut t = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<u16> = perms[b].iter().map(|&x| perms[a][x as usize]).collect();
                t[a * n + b] = index[&prod];
            }
        }
        t
    }

    fn build_from_table(
        spec: &GroupSpec,
        table: &[Vec<usize>],
        labels: Vec<String>,
        label_index: HashMap<String, usize>,
    ) -> Result<Group> {
        let n = table.len();
        if n == 0 || n > SIZE_CAP {
            return Err(Error::MalformedSpec("table empty or above size cap".into()));
        }
        for row in table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::MalformedSpec("table is not square over element range".into()));
            }
        }
        if (0..n).any(|x| table[0][x] != x || table[x][0] != x) {
            return Err(Error::MalformedSpec("identity must be index 0 in table form".into()));
        }
        let mut gen_raw = Vec::new();
        for gs in &spec.generators {
            let e = gs.element.ok_or_else(|| {
                Error::MalformedSpec(format!("generator '{}' missing element index", gs.label))
            })?;
            if e >= n {
                return Err(Error::MalformedSpec(format!(
                    "generator '{}' element index out of range",
                    gs.label
                )));
            }
            gen_raw.push(e);
        }

        // restrict to the subgroup generated by the declared generators and
        // re-index densely in BFS discovery order
        let mut new_id = vec![u32::MAX; n];
        let mut order: Vec<usize> = vec![0];
        new_id[0] = 0;
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut head = 0usize;
        while head < order.len() {
            let v = order[head];
            for (gi, &ge) in gen_raw.iter().enumerate() {
                let u = table[v][ge];
                if new_id[u] == u32::MAX {
                    new_id[u] = order.len() as u32;
                    let mut w = words[head].clone();
                    w.push(gi as u8);
                    words.push(w);
                    order.push(u);
                }
            }
            head += 1;
        }
        let size = order.len();
        let mut t = vec![0u32; size * size];
        for (a, &oa) in order.iter().enumerate() {
            for (b, &ob) in order.iter().enumerate() {
                let p = table[oa][ob];
                let id = new_id[p];
                if id == u32::MAX {
                    return Err(Error::MalformedSpec(
                        "generated subgroup is not closed under the table".into(),
                    ));
                }
                t[a * size + b] = id;
            }
        }
        let gen_elem: Vec<u32> = gen_raw.iter().map(|&e| new_id[e]).collect();
        let step: Vec<Vec<u32>> = gen_elem
            .iter()
            .map(|&ge| (0..size).map(|v| t[v * size + ge as usize]).collect())
            .collect();
        Ok(Group {
            name: String::new(),
            size,
            labels,
            label_index,
            gen_elem,
            step,
            table: Some(t),
            perm_rep: None,
            words,
        })
    }

    fn check_involutions(&self) -> Result<()> {
        for e in 0..self.arity() {
            let g = self.gen_elem[e];
            if g == 0 || self.step[e][g as usize] != 0 {
                return Err(Error::NonInvolution(self.labels[e].clone()));
            }
            for other in 0..e {
                if self.gen_elem[other] == g {
                    return Err(Error::MalformedSpec(format!(
                        "generators '{}' and '{}' denote the same element",
                        self.labels[other], self.labels[e]
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_identity(&self) {
        // identity neutrality is structural in perm mode and was validated on
        // the input table in table mode; keep a cheap sanity assertion
        debug_assert!((0..self.size.min(64)).all(|x| {
            self.mult(0, x as u32) == x as u32 && self.mult(x as u32, 0) == x as u32
        }));
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.size as u32;
        let check = |a: u32, b: u32, c: u32| {
            self.mult(self.mult(a, b), c) == self.mult(a, self.mult(b, c))
        };
        if self.size <= FULL_ASSOC_CAP {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Err(Error::MalformedSpec(format!(
                                "multiplication not associative at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0xC05E7);
            for _ in 0..ASSOC_SAMPLES {
                let (a, b, c) =
                    (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if !check(a, b, c) {
                    return Err(Error::MalformedSpec(format!(
                        "multiplication not associative at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.label_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn generator_element(&self, e: usize) -> u32 {
        self.gen_elem[e]
    }

    /// v ∘ (generator e); the Cayley edge relation R_e as a pairing.
    pub fn apply(&self, v: u32, e: usize) -> u32 {
        self.step[e][v as usize]
    }

    pub fn mult(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.table {
            return t[a as usize * self.size + b as usize];
        }
        let rep = self.perm_rep.as_ref().expect("group without table needs perm rep");
        let pa = &rep.perms[a as usize];
        let pb = &rep.perms[b as usize];
        let prod: Vec<u16> = pb.iter().map(|&x| pa[x as usize]).collect();
        rep.index[&prod]
    }

    /// Evaluate a word of generator indices from the identity.
    pub fn eval(&self, word: &[u8]) -> u32 {
        word.iter().fold(0u32, |v, &e| self.apply(v, e as usize))
    }

    /// Evaluate a word of labels; empty word is the identity.
    pub fn eval_word(&self, word: &[String]) -> Result<u32> {
        let mut v = 0u32;
        for l in word {
            v = self.apply(v, self.label_index(l)?);
        }
        Ok(v)
    }

    /// Parse a vertex word from CLI text: comma/whitespace separated labels,
    /// or one label per character when all labels are single characters.
    pub fn parse_word(&self, text: &str) -> Result<Vec<u8>> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        let tokens: Vec<&str> = if text.contains([',', ' ']) {
            text.split([',', ' ']).filter(|t| !t.is_empty()).collect()
        } else if self.labels.iter().all(|l| l.chars().count() == 1) {
            return text
                .chars()
                .map(|c| self.label_index(&c.to_string()).map(|i| i as u8))
                .collect();
        } else {
            vec![text]
        };
        tokens.iter().map(|t| self.label_index(t).map(|i| i as u8)).collect()
    }

    /// Canonical word reaching v from the identity (BFS tree, generators in
    /// declaration order), as generator indices.
    pub fn canonical_word(&self, v: u32) -> &[u8] {
        &self.words[v as usize]
    }

    pub fn word_string(&self, word: &[u8]) -> String {
        let parts: Vec<&str> = word.iter().map(|&e| self.labels[e as usize].as_str()).collect();
        if self.labels.iter().all(|l| l.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    pub fn vertex_name(&self, v: u32) -> String {
        self.word_string(self.canonical_word(v))
    }

    /// BFS ball of radius l around v in the union of all edge relations.
    pub fn neighbourhood(&self, v: u32, l: usize) -> Vec<u32> {
        let mut dist = vec![usize::MAX; self.size];
        let mut out = vec![v];
        dist[v as usize] = 0;
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            if dist[x as usize] == l {
                continue;
            }
            for e in 0..self.arity() {
                let y = self.apply(x, e);
                if dist[y as usize] == usize::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }
}
