use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

use super::{root_axiom_check, Root, RootSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DynkinComponent {
    pub family: Family,
    pub rank: usize,
}

impl DynkinComponent {
    fn new(family: Family, rank: usize) -> Self {
        DynkinComponent { family, rank }
    }

    /// Number of roots of the irreducible system.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }
}

impl fmt::Display for DynkinComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Sorted irreducible components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinType(pub Vec<DynkinComponent>);

impl DynkinType {
    pub fn irreducible(family: Family, rank: usize) -> Self {
        DynkinType(vec![DynkinComponent::new(family, rank)])
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|c| c.rank).sum()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub dynkin_type: DynkinType,
    pub rank: usize,
    pub root_count: usize,
    pub simple_roots: Vec<Root>,
    /// `cartan[i][j] = 2 <a_i, a_j> / <a_j, a_j>`.
    pub cartan: Vec<Vec<i64>>,
}

/// Simple roots of the lexicographically positive system: positive roots
/// that are not the sum of two positive roots.
pub fn simple_roots(rs: &RootSet) -> Vec<Root> {
    let positive: Vec<Root> = rs.vectors().iter().copied().filter(Root::is_lex_positive).collect();
    positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|a| {
                let rest = r.sub(a);
                rest.is_lex_positive() && positive.contains(&rest)
            })
        })
        .copied()
        .collect()
}

fn classify_component(nodes: &[usize], cartan: &[Vec<i64>], lengths: &[Rational]) -> Result<DynkinComponent> {
    let n = nodes.len();
    let fail = |why: &str| Error::Classification(format!("component of rank {n}: {why}"));
    if n == 1 {
        return Ok(DynkinComponent::new(Family::A, 1));
    }
    let bond = |a: usize, b: usize| cartan[a][b] * cartan[b][a];
    let mut edges = Vec::new();
    for (x, &a) in nodes.iter().enumerate() {
        for &b in &nodes[x + 1..] {
            match bond(a, b) {
                0 => {}
                m @ 1..=3 => edges.push((a, b, m)),
                m => return Err(fail(&format!("bond multiplicity {m}"))),
            }
        }
    }
    if edges.len() != n - 1 {
        return Err(fail("diagram is not a tree"));
    }
    let degree = |v: usize| edges.iter().filter(|(a, b, _)| *a == v || *b == v).count();
    if let Some(&(a, b, m)) = edges.iter().find(|(_, _, m)| *m > 1) {
        return match (m, n) {
            (3, 2) => Ok(DynkinComponent::new(Family::G, 2)),
            (2, 2) => Ok(DynkinComponent::new(Family::B, 2)),
            (2, 4) if degree(a) == 2 && degree(b) == 2 => Ok(DynkinComponent::new(Family::F, 4)),
            (2, _) => {
                let (leaf, inner) = if degree(a) == 1 { (a, b) } else { (b, a) };
                if degree(leaf) != 1 || nodes.iter().any(|&v| degree(v) > 2) {
                    return Err(fail("double bond away from the end of a chain"));
                }
                if lengths[leaf] < lengths[inner] {
                    Ok(DynkinComponent::new(Family::B, n))
                } else {
                    Ok(DynkinComponent::new(Family::C, n))
                }
            }
            _ => Err(fail("unsupported multiple bond")),
        };
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => Ok(DynkinComponent::new(Family::A, n)),
        [center] if degree(*center) == 3 => {
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b, _)| match (a == *center, b == *center) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*center, start, 1);
                    loop {
                        let next = edges.iter().find_map(|&(a, b, _)| {
                            if a == cur && b != prev {
                                Some(b)
                            } else if b == cur && a != prev {
                                Some(a)
                            } else {
                                None
                            }
                        });
                        match next {
                            Some(nx) => {
                                prev = cur;
                                cur = nx;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(DynkinComponent::new(Family::D, n)),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Ok(DynkinComponent::new(Family::E, n)),
                _ => Err(fail("branched diagram outside the classification")),
            }
        }
        _ => Err(fail("more than one branch node")),
    }
}

/// Classifies a root system via the Cartan matrix of its lexicographic simple roots.
pub fn dynkin_identify(rs: &RootSet) -> Result<Classification> {
    let axioms = root_axiom_check(rs)?;
    if !axioms.passes() {
        return Err(Error::Classification("input fails the root-system axioms".into()));
    }
    let simple = simple_roots(rs);
    let n = simple.len();
    let cartan: Vec<Vec<i64>> = simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| {
                    let c = Root::cartan_integer(a, b);
                    i64::try_from(c.numer()).expect("small Cartan integer")
                })
                .collect()
        })
        .collect();
    let lengths: Vec<Rational> = simple.iter().map(Root::norm).collect();

    let mut component_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut stack = vec![start];
        let mut nodes = Vec::new();
        component_of[start] = id;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for w in 0..n {
                if w != v && cartan[v][w] != 0 && component_of[w] == usize::MAX {
                    component_of[w] = id;
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        components.push(nodes);
    }
    let mut parts =
        components.iter().map(|nodes| classify_component(nodes, &cartan, &lengths)).collect::<Result<Vec<_>>>()?;
    parts.sort();
    let dynkin_type = DynkinType(parts);
    let expected: usize = dynkin_type.0.iter().map(DynkinComponent::root_count).sum();
    if expected != rs.len() {
        return Err(Error::Classification(format!("{dynkin_type} has {expected} roots but the set has {}", rs.len())));
    }
    Ok(Classification { rank: n, root_count: rs.len(), simple_roots: simple, cartan, dynkin_type })
}
