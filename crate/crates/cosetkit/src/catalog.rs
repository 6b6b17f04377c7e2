use crate::error::{Error, Result};
use crate::group::{GeneratorSpec, GroupSpec};

pub const FAMILIES: [&str; 5] = [
    "symmetric_transpositions",
    "symmetric_adjacent",
    "dihedral_reflections",
    "elementary_abelian",
    "direct_product",
];

fn transposition(n: usize, i: usize, j: usize) -> Vec<usize> {
    (0..n).map(|x| if x == i { j } else if x == j { i } else { x }).collect()
}

/// Build the group spec for a parametric family. `direct_product` takes two
/// component specs and is handled by `product` instead.
pub fn make(name: &str, params: &[usize]) -> Result<GroupSpec> {
    let one = |what: &str| -> Result<usize> {
        if params.len() != 1 {
            Err(Error::BadParams(format!("{name} takes one parameter ({what})")))
        } else {
            Ok(params[0])
        }
    };
    match name {
        "symmetric_transpositions" => {
            let n = one("number of points")?;
            if !(2..=8).contains(&n) {
                return Err(Error::BadParams("points must be in 2..=8".into()));
            }
            let generators = (0..n)
                .flat_map(|i| {
                    (i + 1..n).map(move |j| GeneratorSpec {
                        label: format!("t{}{}", i + 1, j + 1),
                        perm: Some(transposition(n, i, j)),
                        element: None,
                    })
                })
                .collect();
            Ok(GroupSpec {
                name: format!("S{n} (all transpositions)"),
                degree: Some(n),
                table: None,
                generators,
            })
        }
        "symmetric_adjacent" => {
            let n = one("number of points")?;
            if !(2..=8).contains(&n) {
                return Err(Error::BadParams("points must be in 2..=8".into()));
            }
            let generators = (0..n - 1)
                .map(|i| GeneratorSpec {
                    label: format!("t{}{}", i + 1, i + 2),
                    perm: Some(transposition(n, i, i + 1)),
                    element: None,
                })
                .collect();
            Ok(GroupSpec {
                name: format!("S{n} (adjacent transpositions)"),
                degree: Some(n),
                table: None,
                generators,
            })
        }
        "dihedral_reflections" => {
            let m = one("polygon size")?;
            if !(3..=1000).contains(&m) {
                return Err(Error::BadParams("polygon size must be in 3..=1000".into()));
            }
            // two reflections of an m-gon; their product is a rotation of order m
            let r: Vec<usize> = (0..m).map(|x| (m - x) % m).collect();
            let s: Vec<usize> = (0..m).map(|x| (m + 1 - x) % m).collect();
            Ok(GroupSpec {
                name: format!("D{m} (two reflections)"),
                degree: Some(m),
                table: None,
                generators: vec![
                    GeneratorSpec { label: "r".into(), perm: Some(r), element: None },
                    GeneratorSpec { label: "s".into(), perm: Some(s), element: None },
                ],
            })
        }
        "elementary_abelian" => {
            let k = one("rank")?;
            if !(1..=16).contains(&k) {
                return Err(Error::BadParams("rank must be in 1..=16".into()));
            }
            let generators = (0..k)
                .map(|i| GeneratorSpec {
                    label: ((b'a' + i as u8) as char).to_string(),
                    perm: Some(transposition(2 * k, 2 * i, 2 * i + 1)),
                    element: None,
                })
                .collect();
            Ok(GroupSpec {
                name: format!("(Z2)^{k}"),
                degree: Some(2 * k),
                table: None,
                generators,
            })
        }
        "direct_product" => Err(Error::BadParams(
            "direct_product takes two component specs; use catalog::product".into(),
        )),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// Direct product of two permutation-form specs on disjoint point sets.
/// Labels are suffixed per component.
pub fn product(a: &GroupSpec, b: &GroupSpec) -> Result<GroupSpec> {
    let da = a.degree.or_else(|| a.generators.iter().filter_map(|g| g.perm.as_ref()).map(|p| p.len()).max());
    let (da, db) = match (da, b.degree.or_else(|| b.generators.iter().filter_map(|g| g.perm.as_ref()).map(|p| p.len()).max())) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(Error::BadParams("direct_product needs permutation-form components".into())),
    };
    let mut generators = Vec::new();
    for g in &a.generators {
        let p = g.perm.as_ref().ok_or_else(|| Error::BadParams("component generator missing perm".into()))?;
        let mut q: Vec<usize> = p.clone();
        q.extend(p.len()..da); // pad with fixed points
        generators.push(GeneratorSpec { label: format!("{}.1", g.label), perm: Some(q), element: None });
    }
    for g in &b.generators {
        let p = g.perm.as_ref().ok_or_else(|| Error::BadParams("component generator missing perm".into()))?;
        let mut q: Vec<usize> = (0..da).collect();
        q.extend(p.iter().map(|&x| x + da));
        for x in q.len()..da + db {
            q.push(x);
        }
        generators.push(GeneratorSpec { label: format!("{}.2", g.label), perm: Some(q), element: None });
    }
    Ok(GroupSpec {
        name: format!("{} x {}", a.name, b.name),
        degree: Some(da + db),
        table: None,
        generators,
    })
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub family: &'static str,
    pub params: Vec<usize>,
    pub expected_order: usize,
}

/// The fixed instance list used by the verification suites and tests.
pub fn standard_entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry { family: "elementary_abelian", params: vec![1], expected_order: 2 },
        CatalogEntry { family: "elementary_abelian", params: vec![2], expected_order: 4 },
        CatalogEntry { family: "elementary_abelian", params: vec![3], expected_order: 8 },
        CatalogEntry { family: "symmetric_transpositions", params: vec![3], expected_order: 6 },
        CatalogEntry { family: "symmetric_adjacent", params: vec![3], expected_order: 6 },
        CatalogEntry { family: "symmetric_adjacent", params: vec![4], expected_order: 24 },
        CatalogEntry { family: "dihedral_reflections", params: vec![3], expected_order: 6 },
        CatalogEntry { family: "dihedral_reflections", params: vec![4], expected_order: 8 },
        CatalogEntry { family: "dihedral_reflections", params: vec![6], expected_order: 12 },
        CatalogEntry { family: "dihedral_reflections", params: vec![8], expected_order: 16 },
    ]
}
