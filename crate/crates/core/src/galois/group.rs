//! The catalog of transitive groups of degree at most 4 as permutation groups,
//! their subgroup lattices, and the exponents `delta_G`, `gamma_G`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{HitError, Result};

/// A permutation group up to conjugacy in `S_n`, named by a catalog label or,
/// for reducible polynomials, by a splitting pattern such as `1+3:S3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupId {
    pub degree: usize,
    pub label: String,
    pub order: u64,
}

impl GroupId {
    pub fn new(degree: usize, label: &str, order: u64) -> Self {
        GroupId {
            degree,
            label: label.to_string(),
            order,
        }
    }

    pub fn is_transitive(&self) -> bool {
        !self.label.contains(':')
    }

    /// Looks up a transitive catalog group by label.
    pub fn catalog(label: &str) -> Result<GroupId> {
        CATALOG
            .iter()
            .find(|g| g.label == label)
            .map(|g| GroupId::new(g.degree, g.label, g.order))
            .ok_or_else(|| HitError::UnknownGroup(label.to_string()))
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

pub type Perm = Vec<u8>;

struct CatalogEntry {
    degree: usize,
    label: &'static str,
    order: u64,
    gens: &'static [&'static [u8]],
}

const CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        degree: 1,
        label: "C1",
        order: 1,
        gens: &[&[0]],
    },
    CatalogEntry {
        degree: 2,
        label: "C2",
        order: 2,
        gens: &[&[1, 0]],
    },
    CatalogEntry {
        degree: 3,
        label: "C3",
        order: 3,
        gens: &[&[1, 2, 0]],
    },
    CatalogEntry {
        degree: 3,
        label: "S3",
        order: 6,
        gens: &[&[1, 2, 0], &[1, 0, 2]],
    },
    CatalogEntry {
        degree: 4,
        label: "C4",
        order: 4,
        gens: &[&[1, 2, 3, 0]],
    },
    CatalogEntry {
        degree: 4,
        label: "V4",
        order: 4,
        gens: &[&[1, 0, 3, 2], &[2, 3, 0, 1]],
    },
    CatalogEntry {
        degree: 4,
        label: "D4",
        order: 8,
        gens: &[&[1, 2, 3, 0], &[2, 1, 0, 3]],
    },
    CatalogEntry {
        degree: 4,
        label: "A4",
        order: 12,
        gens: &[&[1, 2, 0, 3], &[0, 2, 3, 1]],
    },
    CatalogEntry {
        degree: 4,
        label: "S4",
        order: 24,
        gens: &[&[1, 2, 3, 0], &[1, 0, 2, 3]],
    },
];

pub fn catalog() -> Vec<GroupId> {
    CATALOG
        .iter()
        .map(|g| GroupId::new(g.degree, g.label, g.order))
        .collect()
}

fn compose(a: &[u8], b: &[u8]) -> Perm {
    // (a o b)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

fn inverse(a: &[u8]) -> Perm {
    let mut out = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

pub fn closure(n: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..n as u8).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Sorted cycle lengths of a permutation.
pub fn cycle_type(p: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = vec![];
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn is_transitive(n: usize, elems: &BTreeSet<Perm>) -> bool {
    let orbit: BTreeSet<u8> = elems.iter().map(|p| p[0]).collect();
    orbit.len() == n
}

fn has_element_of_order(elems: &BTreeSet<Perm>, k: usize) -> bool {
    elems.iter().any(|p| cycle_type(p).contains(&k))
}

/// Isomorphism-class name of a subgroup of `S_n`, `n <= 4`.
fn subgroup_label(n: usize, elems: &BTreeSet<Perm>) -> String {
    match elems.len() {
        1 => "C1".into(),
        2 => "C2".into(),
        3 => "C3".into(),
        4 if has_element_of_order(elems, 4) => "C4".into(),
        4 if n == 4 && is_transitive(n, elems) => "V4".into(),
        4 => "C2×C2".into(),
        6 => "S3".into(),
        8 => "D4".into(),
        12 => "A4".into(),
        24 => "S4".into(),
        k => format!("order{k}"),
    }
}

/// A group realized as a set of permutations.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub id: GroupId,
    pub elements: BTreeSet<Perm>,
}

impl PermGroup {
    pub fn of(id: &GroupId) -> Result<PermGroup> {
        let entry = CATALOG
            .iter()
            .find(|g| g.label == id.label && g.degree == id.degree)
            .ok_or_else(|| HitError::UnknownGroup(id.label.clone()))?;
        let gens: Vec<Perm> = entry.gens.iter().map(|g| g.to_vec()).collect();
        let elements = closure(entry.degree, &gens);
        debug_assert_eq!(elements.len() as u64, entry.order);
        Ok(PermGroup {
            id: id.clone(),
            elements,
        })
    }

    pub fn cycle_types(&self) -> BTreeSet<Vec<usize>> {
        self.elements.iter().map(|p| cycle_type(p)).collect()
    }

    /// All subgroups, one representative per conjugacy class in `G`, by increasing order.
    pub fn subgroups(&self) -> Vec<BTreeSet<Perm>> {
        let n = self.id.degree;
        let elems: Vec<&Perm> = self.elements.iter().collect();
        let mut all: BTreeSet<BTreeSet<Perm>> = BTreeSet::new();
        // every subgroup of a group of degree <= 4 is generated by two elements
        for (i, a) in elems.iter().enumerate() {
            for b in &elems[i..] {
                all.insert(closure(n, &[(*a).clone(), (*b).clone()]));
            }
        }
        let mut reps: Vec<BTreeSet<Perm>> = vec![];
        for h in all {
            let conj = |g: &Perm| -> BTreeSet<Perm> {
                let gi = inverse(g);
                h.iter().map(|x| compose(&compose(g, x), &gi)).collect()
            };
            if !reps
                .iter()
                .any(|r| r.len() == h.len() && self.elements.iter().any(|g| conj(g) == *r))
            {
                reps.push(h);
            }
        }
        reps.sort_by_key(|h| h.len());
        reps
    }

    pub fn lattice(&self) -> Vec<SubgroupLatticeEntry> {
        let n = self.id.degree;
        let order = self.elements.len();
        self.subgroups()
            .into_iter()
            .map(|h| {
                let conjugates: BTreeSet<BTreeSet<Perm>> = self
                    .elements
                    .iter()
                    .map(|g| {
                        let gi = inverse(g);
                        h.iter().map(|x| compose(&compose(g, x), &gi)).collect()
                    })
                    .collect();
                SubgroupLatticeEntry {
                    label: subgroup_label(n, &h),
                    order: h.len() as u64,
                    index: (order / h.len()) as u64,
                    conjugates: conjugates.len() as u64,
                    transitive: is_transitive(n, &h),
                    proper: h.len() < order,
                }
            })
            .collect()
    }
}

/// A conjugacy class of subgroups `H <= G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupLatticeEntry {
    pub label: String,
    pub order: u64,
    pub index: u64,
    /// Number of subgroups in the conjugacy class.
    pub conjugates: u64,
    pub transitive: bool,
    pub proper: bool,
}

/// Exponents as exact fractions `1 / index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaGamma {
    /// `delta_G = 1 / min [G : H]` over proper subgroups.
    pub delta_den: u64,
    /// `gamma_G = 1 / min [G : H]` over intransitive subgroups.
    pub gamma_den: u64,
}

impl DeltaGamma {
    pub fn delta(&self) -> f64 {
        1.0 / self.delta_den as f64
    }
    pub fn gamma(&self) -> f64 {
        1.0 / self.gamma_den as f64
    }
}

pub fn delta_gamma(g: &GroupId) -> Result<DeltaGamma> {
    let pg = PermGroup::of(g)?;
    let lattice = pg.lattice();
    let min_index = |pred: &dyn Fn(&SubgroupLatticeEntry) -> bool| {
        lattice.iter().filter(|e| pred(e)).map(|e| e.index).min()
    };
    // the trivial group has no proper subgroup; both exponents are then 1
    let delta_den = min_index(&|e| e.proper).unwrap_or(1);
    let gamma_den = min_index(&|e| !e.transitive).unwrap_or(1);
    Ok(DeltaGamma {
        delta_den,
        gamma_den,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        for g in catalog() {
            let pg = PermGroup::of(&g).unwrap();
            assert_eq!(pg.elements.len() as u64, g.order, "{}", g.label);
            assert!(is_transitive(g.degree, &pg.elements));
        }
        assert!(GroupId::catalog("Q8").is_err());
    }

    #[test]
    fn exponents() {
        let dg = |l: &str| {
            let d = delta_gamma(&GroupId::catalog(l).unwrap()).unwrap();
            (d.delta_den, d.gamma_den)
        };
        assert_eq!(dg("C2"), (2, 2));
        assert_eq!(dg("S3"), (2, 3));
        assert_eq!(dg("S4"), (2, 4));
        assert_eq!(dg("C3"), (3, 3));
        assert_eq!(dg("A4"), (3, 4));
        assert_eq!(dg("D4"), (2, 2));
        assert_eq!(dg("C4"), (2, 2));
        assert_eq!(dg("V4"), (2, 2));
    }

    #[test]
    fn lattice_sizes() {
        // conjugacy classes of subgroups
        let count = |l: &str| {
            PermGroup::of(&GroupId::catalog(l).unwrap())
                .unwrap()
                .lattice()
                .len()
        };
        assert_eq!(count("S3"), 4);
        assert_eq!(count("S4"), 11);
        assert_eq!(count("D4"), 8);
        assert_eq!(count("A4"), 5);
        for e in PermGroup::of(&GroupId::catalog("S4").unwrap())
            .unwrap()
            .lattice()
        {
            assert_eq!(24 % e.order, 0);
            assert_eq!(e.index * e.order, 24);
        }
        // all subgroups
        let total = |l: &str| -> u64 {
            let lat = PermGroup::of(&GroupId::catalog(l).unwrap())
                .unwrap()
                .lattice();
            lat.iter().map(|e| e.conjugates).sum()
        };
        assert_eq!(total("S3"), 6);
        assert_eq!(total("S4"), 30);
        assert_eq!(total("D4"), 10);
        assert_eq!(total("A4"), 10);
        assert_eq!(total("C4"), 3);
    }

    #[test]
    fn cycle_type_sets() {
        let s3 = PermGroup::of(&GroupId::catalog("S3").unwrap()).unwrap();
        assert_eq!(s3.cycle_types().len(), 3);
        let v4 = PermGroup::of(&GroupId::catalog("V4").unwrap()).unwrap();
        assert!(!v4.cycle_types().contains(&vec![1, 1, 2]));
    }
}
